#include "modpll/characters.hpp"

#include <algorithm>

namespace modpll {

namespace {

void check_same_context(const UnitCharacter& a, const UnitCharacter& b) {
  if (!(a.group() == b.group()) || &a.ring() != &b.ring()) {
    throw GroupMismatch("characters live on different groups or rings");
  }
}

}  // namespace

bool UnitCharacter::operator==(const UnitCharacter& other) const {
  check_same_context(*this, other);
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != other.values_[i]) return false;
  }
  return true;
}

UnitCharacter make_unit_character(const AbelianGroupModel& group, const DVRCtx& ring,
                                  const std::vector<DVRElem>& values) {
  if (static_cast<int>(values.size()) != group.generator_count()) {
    throw Error(ErrorKind::InvalidInput, "need one value per generator");
  }
  UnitCharacter chi;
  chi.group_ = &group;
  chi.ring_ = &ring;
  chi.values_ = values;
  bool trivial = true;
  for (int i = 0; i < group.generator_count(); ++i) {
    const DVRElem& v = values[static_cast<size_t>(i)];
    if (v.ctx != &ring) {
      throw Error(ErrorKind::InvalidInput, "character value not in the given ring");
    }
    if (!dvr_is_unit(v)) {
      throw Error(ErrorKind::InvalidInput,
                  "character value on " + group.generators()[static_cast<size_t>(i)].name + " is not a unit");
    }
    std::uint64_t order = group.generators()[static_cast<size_t>(i)].order;
    if (order != 0 && dvr_unit_pow(v, order) != dvr_one(ring)) {
      throw TorsionViolation("value on " + group.generators()[static_cast<size_t>(i)].name +
                             " does not satisfy x^" + std::to_string(order) + " = 1 at this precision");
    }
    if (dvr_val(dvr_sub(v, dvr_one(ring))) < 1) trivial = false;
  }
  chi.trivial_mod_uniformizer_ = trivial;
  return chi;
}

UnitCharacter trivial_character(const AbelianGroupModel& group, const DVRCtx& ring) {
  std::vector<DVRElem> values(static_cast<size_t>(group.generator_count()), dvr_one(ring));
  return make_unit_character(group, ring, values);
}

UnitCharacter char_mul(const UnitCharacter& a, const UnitCharacter& b) {
  check_same_context(a, b);
  std::vector<DVRElem> values;
  values.reserve(static_cast<size_t>(a.group().generator_count()));
  for (int i = 0; i < a.group().generator_count(); ++i) {
    values.push_back(dvr_mul(a.value(i), b.value(i)));
  }
  return make_unit_character(a.group(), a.ring(), values);
}

UnitCharacter char_inv(const UnitCharacter& a) {
  std::vector<DVRElem> values;
  values.reserve(static_cast<size_t>(a.group().generator_count()));
  for (int i = 0; i < a.group().generator_count(); ++i) {
    values.push_back(dvr_unit_inv(a.value(i)));
  }
  return make_unit_character(a.group(), a.ring(), values);
}

DVRElem char_eval_word(const UnitCharacter& chi, const Word& w) {
  DVRElem acc = dvr_one(chi.ring());
  for (const auto& [idx, exp] : w) {
    if (idx < 0 || idx >= chi.group().generator_count()) {
      throw Error(ErrorKind::InvalidInput, "word references unknown generator");
    }
    if (exp >= 0) {
      acc = dvr_mul(acc, dvr_unit_pow(chi.value(idx), static_cast<std::uint64_t>(exp)));
    } else {
      acc = dvr_mul(acc, dvr_unit_pow(dvr_unit_inv(chi.value(idx)), static_cast<std::uint64_t>(-exp)));
    }
  }
  return acc;
}

ResidualHom::ResidualHom(const AbelianGroupModel& group, std::vector<FFElem> values)
    : group_(&group), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group.generator_count()) {
    throw Error(ErrorKind::InvalidInput, "need one value per generator");
  }
  const FiniteFieldCtx* field = values_.front().ctx;
  long p = field->p();
  for (int i = 0; i < group.generator_count(); ++i) {
    if (values_[static_cast<size_t>(i)].ctx != field) {
      throw Error(ErrorKind::InvalidInput, "hom values from mixed fields");
    }
    std::uint64_t order = group.generators()[static_cast<size_t>(i)].order;
    if (order != 0 && order % static_cast<std::uint64_t>(p) != 0 &&
        !ff_is_zero(values_[static_cast<size_t>(i)])) {
      throw TorsionViolation("hom value on torsion generator " +
                             group.generators()[static_cast<size_t>(i)].name +
                             " of order prime to p must vanish");
    }
  }
}

bool ResidualHom::operator==(const ResidualHom& other) const {
  if (!(*group_ == *other.group_)) {
    throw GroupMismatch("comparing homs on different groups");
  }
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != other.values_[i]) return false;
  }
  return true;
}

ResidualHom hom_zero(const AbelianGroupModel& group, const FiniteFieldCtx& field) {
  std::vector<FFElem> values(static_cast<size_t>(group.generator_count()), ff_zero(field));
  return ResidualHom(group, values);
}

bool hom_is_zero(const ResidualHom& h) {
  for (const FFElem& v : h.values()) {
    if (!ff_is_zero(v)) return false;
  }
  return true;
}

ResidualHom hom_add(const ResidualHom& a, const ResidualHom& b) {
  if (!(a.group() == b.group())) {
    throw GroupMismatch("adding homs on different groups");
  }
  std::vector<FFElem> values;
  values.reserve(a.values().size());
  for (size_t i = 0; i < a.values().size(); ++i) {
    values.push_back(ff_add(a.values()[i], b.values()[i]));
  }
  return ResidualHom(a.group(), values);
}

ResidualHom hom_neg(const ResidualHom& a) {
  std::vector<FFElem> values;
  values.reserve(a.values().size());
  for (const FFElem& v : a.values()) values.push_back(ff_neg(v));
  return ResidualHom(a.group(), values);
}

ResidualHom hom_scale(const FFElem& c, const ResidualHom& a) {
  std::vector<FFElem> values;
  values.reserve(a.values().size());
  for (const FFElem& v : a.values()) values.push_back(ff_mul(c, v));
  return ResidualHom(a.group(), values);
}

FFElem hom_eval_word(const ResidualHom& h, const Word& w) {
  FFElem acc = ff_zero(*h.values().front().ctx);
  for (const auto& [idx, exp] : w) {
    if (idx < 0 || idx >= h.group().generator_count()) {
      throw Error(ErrorKind::InvalidInput, "word references unknown generator");
    }
    acc = ff_add(acc, ff_mul(ff_from_int(*acc.ctx, exp), h.value(idx)));
  }
  return acc;
}

ResidualHom normalize_line(const ResidualHom& h) {
  for (const FFElem& v : h.values()) {
    if (!ff_is_zero(v)) {
      return hom_scale(ff_inv(v), h);
    }
  }
  throw ZeroClass("the zero hom spans no line");
}

bool lines_equal(const ResidualHom& a, const ResidualHom& b) {
  return normalize_line(a) == normalize_line(b);
}

std::string hom_to_string(const ResidualHom& h) {
  std::string out = "(";
  for (int i = 0; i < h.group().generator_count(); ++i) {
    if (i) out += ", ";
    out += h.group().generators()[static_cast<size_t>(i)].name + ":" + ff_to_string(h.value(i));
  }
  return out + ")";
}

int congruence_level(const UnitCharacter& chi1, const UnitCharacter& chi2) {
  check_same_context(chi1, chi2);
  if (!chi1.trivial_mod_uniformizer() || !chi2.trivial_mod_uniformizer()) {
    throw NotResiduallyTrivial("congruence level needs characters trivial mod pi");
  }
  const DVRCtx& ring = chi1.ring();
  int a = ring.precision();
  for (int i = 0; i < chi1.group().generator_count(); ++i) {
    a = std::min(a, dvr_val(dvr_sub(chi1.value(i), chi2.value(i))));
  }
  if (a >= ring.precision()) {
    throw Indistinguishable("characters agree at precision " + std::to_string(ring.precision()));
  }
  return a;
}

ResidualHom sigma_class(const UnitCharacter& chi1, const UnitCharacter& chi2) {
  int a = congruence_level(chi1, chi2);
  std::vector<FFElem> values;
  values.reserve(static_cast<size_t>(chi1.group().generator_count()));
  bool nonzero = false;
  for (int i = 0; i < chi1.group().generator_count(); ++i) {
    DVRElem diff = dvr_sub(chi1.value(i), chi2.value(i));
    FFElem v = dvr_reduce(dvr_divide_by_uniformizer_power(diff, a));
    nonzero = nonzero || !ff_is_zero(v);
    values.push_back(v);
  }
  if (!nonzero) {
    throw Error(ErrorKind::Internal, "sigma class vanished despite maximal congruence level");
  }
  return ResidualHom(chi1.group(), values);
}

std::vector<DVRElem> residually_trivial_units(const DVRCtx& ring) {
  const FiniteFieldCtx& k = ring.residue();
  int n = ring.precision();
  std::uint64_t total = 1;
  for (int i = 0; i < n - 1; ++i) {
    if (total > (1ULL << 26) / k.order()) {
      throw SearchSpaceTooLarge("1 + pi*O has more than 2^26 elements at this precision");
    }
    total *= k.order();
  }
  std::vector<FFElem> elems = ff_all_elements(k);
  std::vector<DVRElem> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    DVRElem x = dvr_one(ring);
    std::uint64_t v = idx;
    for (int pos = 1; pos < n; ++pos) {
      const FFElem& digit = elems[v % k.order()];
      v /= k.order();
      for (int j = 0; j < k.degree(); ++j) {
        x.dig[static_cast<size_t>(pos) * k.degree() + static_cast<size_t>(j)] = digit.c[static_cast<size_t>(j)];
      }
    }
    out.push_back(x);
  }
  return out;
}

std::uint64_t count_torsion_valid_units(const DVRCtx& ring, std::uint64_t order) {
  const FiniteFieldCtx& k = ring.residue();
  int n = ring.precision();
  auto kpow = [&](int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= k.order();
    return r;
  };
  if (order == 0) return kpow(n - 1);
  // x in 1 + pi*O has p-power order, so only the p-part of the relation bites
  int e = 0;
  std::uint64_t pe = 1;
  std::uint64_t rem = order;
  while (rem % static_cast<std::uint64_t>(k.p()) == 0) {
    rem /= static_cast<std::uint64_t>(k.p());
    ++e;
    if (pe <= (1ULL << 60) / static_cast<std::uint64_t>(k.p())) pe *= static_cast<std::uint64_t>(k.p());
  }
  if (ring.backend() == DvrBackend::ZModPN) {
    return kpow(std::min(n - 1, e));
  }
  // equal characteristic: (1+a)^{p^e} = 1 + a^{p^e}, so the relation holds
  // iff p^e * val(a) >= N
  std::uint64_t m = (pe >= static_cast<std::uint64_t>(n))
                        ? 1
                        : (static_cast<std::uint64_t>(n) + pe - 1) / pe;
  if (m < 1) m = 1;
  if (m > static_cast<std::uint64_t>(n)) m = static_cast<std::uint64_t>(n);
  return kpow(n - static_cast<int>(m));
}

std::vector<DVRElem> torsion_valid_units(const DVRCtx& ring, std::uint64_t order) {
  std::vector<DVRElem> all = residually_trivial_units(ring);
  if (order == 0) return all;
  DVRElem one = dvr_one(ring);
  std::vector<DVRElem> out;
  for (const DVRElem& x : all) {
    if (dvr_unit_pow(x, order) == one) out.push_back(x);
  }
  if (out.size() != count_torsion_valid_units(ring, order)) {
    throw Error(ErrorKind::Internal, "torsion-valid unit count disagrees with the closed form");
  }
  return out;
}

std::uint64_t count_residually_trivial_characters(const AbelianGroupModel& group, const DVRCtx& ring) {
  std::uint64_t total = 1;
  for (const Generator& g : group.generators()) {
    std::uint64_t c = count_torsion_valid_units(ring, g.order);
    if (c != 0 && total > UINT64_MAX / c) return UINT64_MAX;
    total *= c;
  }
  return total;
}

std::vector<UnitCharacter> enumerate_residually_trivial_characters(const AbelianGroupModel& group,
                                                                   const DVRCtx& ring) {
  std::uint64_t total = count_residually_trivial_characters(group, ring);
  if (total > (1ULL << 26)) {
    throw SearchSpaceTooLarge("character space has " + std::to_string(total) + " elements");
  }
  std::vector<std::vector<DVRElem>> value_lists;
  for (const Generator& g : group.generators()) {
    value_lists.push_back(torsion_valid_units(ring, g.order));
  }
  std::vector<UnitCharacter> out;
  out.reserve(total);
  std::vector<DVRElem> values(static_cast<size_t>(group.generator_count()), dvr_one(ring));
  std::uint64_t count = total;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    // last generator varies fastest
    for (int i = group.generator_count() - 1; i >= 0; --i) {
      const auto& list = value_lists[static_cast<size_t>(i)];
      values[static_cast<size_t>(i)] = list[v % list.size()];
      v /= list.size();
    }
    out.push_back(make_unit_character(group, ring, values));
  }
  return out;
}

UnitCharacter sample_residually_trivial_character(const AbelianGroupModel& group, const DVRCtx& ring,
                                                  Rng& rng) {
  const FiniteFieldCtx& k = ring.residue();
  std::vector<FFElem> elems = ff_all_elements(k);
  auto random_unit = [&]() {
    DVRElem x = dvr_one(ring);
    for (int pos = 1; pos < ring.precision(); ++pos) {
      const FFElem& digit = elems[rng.below(elems.size())];
      for (int j = 0; j < k.degree(); ++j) {
        x.dig[static_cast<size_t>(pos) * k.degree() + static_cast<size_t>(j)] = digit.c[static_cast<size_t>(j)];
      }
    }
    return x;
  };
  std::vector<DVRElem> values;
  DVRElem one = dvr_one(ring);
  for (const Generator& g : group.generators()) {
    if (g.order == 0) {
      values.push_back(random_unit());
      continue;
    }
    if (count_torsion_valid_units(ring, g.order) == 1) {
      values.push_back(one);
      continue;
    }
    bool found = false;
    for (int tries = 0; tries < 200000; ++tries) {
      DVRElem x = random_unit();
      if (dvr_unit_pow(x, g.order) == one) {
        values.push_back(x);
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::Internal, "torsion-valid sampling did not terminate");
    }
  }
  return make_unit_character(group, ring, values);
}

}  // namespace modpll
