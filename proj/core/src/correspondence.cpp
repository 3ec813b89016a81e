#include "modpll/correspondence.hpp"

#include <algorithm>

namespace modpll {

ResidualCharacter::ResidualCharacter(const AbelianGroupModel& group, std::vector<FFElem> values)
    : group_(&group), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group.generator_count()) {
    throw Error(ErrorKind::InvalidInput, "need one value per generator");
  }
  for (int i = 0; i < group.generator_count(); ++i) {
    const FFElem& v = values_[static_cast<size_t>(i)];
    if (ff_is_zero(v)) {
      throw Error(ErrorKind::InvalidInput, "residual character value must be nonzero");
    }
    std::uint64_t order = group.generators()[static_cast<size_t>(i)].order;
    if (order != 0 && !ff_is_one(ff_pow(v, order))) {
      throw TorsionViolation("residual character violates x^" + std::to_string(order) +
                             " = 1 on " + group.generators()[static_cast<size_t>(i)].name);
    }
  }
}

ResidualCharacter ResidualCharacter::trivial(const AbelianGroupModel& group,
                                             const FiniteFieldCtx& field) {
  std::vector<FFElem> values(static_cast<size_t>(group.generator_count()), ff_one(field));
  return ResidualCharacter(group, values);
}

ResidualCharacter ResidualCharacter::cyclotomic(const AbelianGroupModel& group,
                                                const FiniteFieldCtx& field) {
  if (!group.is_standard()) {
    throw Error(ErrorKind::InvalidInput, "cyclotomic label needs the standard model of F^x");
  }
  std::vector<FFElem> values;
  for (const Generator& g : group.generators()) {
    if (g.order == 0) {
      values.push_back(ff_from_int(field, static_cast<long>(group.q() % static_cast<std::uint64_t>(field.p()))));
    } else {
      values.push_back(ff_one(field));
    }
  }
  return ResidualCharacter(group, values);
}

bool ResidualCharacter::is_trivial() const {
  for (const FFElem& v : values_) {
    if (!ff_is_one(v)) return false;
  }
  return true;
}

bool ResidualCharacter::operator==(const ResidualCharacter& other) const {
  if (!(*group_ == *other.group_)) {
    throw GroupMismatch("comparing residual characters on different groups");
  }
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != other.values_[i]) return false;
  }
  return true;
}

ResidualCharacter char_mul(const ResidualCharacter& a, const ResidualCharacter& b) {
  if (!(a.group() == b.group())) {
    throw GroupMismatch("multiplying residual characters on different groups");
  }
  std::vector<FFElem> values;
  values.reserve(a.values().size());
  for (size_t i = 0; i < a.values().size(); ++i) {
    values.push_back(ff_mul(a.values()[i], b.values()[i]));
  }
  return ResidualCharacter(a.group(), values);
}

ResidualGaloisRep::ResidualGaloisRep(const AbelianGroupModel& group, const FiniteFieldCtx& field,
                                     ResidualCharacter twist)
    : group_(&group), field_(&field), twist_(std::move(twist)) {
  if (!group.is_standard()) {
    throw Error(ErrorKind::InvalidInput, "Galois representations need the standard model of F^x");
  }
  if (!(twist_.group() == group)) {
    throw GroupMismatch("twist label lives on a different group");
  }
}

ResidualGaloisRep ResidualGaloisRep::generic(const AbelianGroupModel& group,
                                             const FiniteFieldCtx& field, std::string support1,
                                             std::string support2, ResidualCharacter twist) {
  ResidualGaloisRep rep(group, field, std::move(twist));
  rep.kind_ = GaloisShapeKind::Generic;
  if (support1.empty() || support2.empty()) {
    throw Error(ErrorKind::InvalidInput, "generic shape needs two supercuspidal support labels");
  }
  rep.support1_ = std::move(support1);
  rep.support2_ = std::move(support2);
  return rep;
}

ResidualGaloisRep ResidualGaloisRep::one_plus_omega_qm1(const AbelianGroupModel& group,
                                                        const FiniteFieldCtx& field, QM1Case c,
                                                        ResidualCharacter twist) {
  ResidualGaloisRep rep(group, field, std::move(twist));
  if ((group.q() + 1) % static_cast<std::uint64_t>(field.p()) != 0) {
    throw Error(ErrorKind::InvalidInput,
                "q = " + std::to_string(group.q()) + " is not -1 mod p = " + std::to_string(field.p()));
  }
  rep.kind_ = GaloisShapeKind::QMinus1;
  rep.qm1_case_ = c;
  return rep;
}

ResidualGaloisRep ResidualGaloisRep::trivial_ss_qp1(const AbelianGroupModel& group,
                                                    const FiniteFieldCtx& field, ResidualHom sigma,
                                                    ResidualCharacter twist) {
  ResidualGaloisRep rep(group, field, std::move(twist));
  if ((group.q() - 1) % static_cast<std::uint64_t>(field.p()) != 0) {
    throw Error(ErrorKind::InvalidInput,
                "q = " + std::to_string(group.q()) + " is not 1 mod p = " + std::to_string(field.p()));
  }
  if (!(sigma.group() == group)) {
    throw GroupMismatch("sigma lives on a different group");
  }
  if (!sigma.values().front().ctx->same_field(field)) {
    throw Error(ErrorKind::InvalidInput, "sigma takes values in a different residue field");
  }
  rep.kind_ = GaloisShapeKind::QPlus1;
  rep.sigma_ = std::move(sigma);
  return rep;
}

ResidualGaloisRep ResidualGaloisRep::unsupported_twist(const AbelianGroupModel& group,
                                                       const FiniteFieldCtx& field,
                                                       ResidualCharacter twist) {
  ResidualGaloisRep rep(group, field, std::move(twist));
  std::uint64_t p = static_cast<std::uint64_t>(field.p());
  if ((group.q() - 1) % p == 0 || (group.q() + 1) % p == 0) {
    throw Error(ErrorKind::InvalidInput, "q = +-1 mod p is a supported twist case");
  }
  rep.kind_ = GaloisShapeKind::UnsupportedTwist;
  return rep;
}

std::string variant_name(RepVariant v) {
  switch (v) {
    case RepVariant::Generic: return "generic";
    case RepVariant::Cuspidal: return "cuspidal";
    case RepVariant::Steinberg: return "steinberg";
    case RepVariant::StExtension: return "st_extension";
    case RepVariant::StEnvelope: return "st_envelope";
    case RepVariant::WDual: return "w_dual";
    case RepVariant::WDualTwist: return "w_dual_twist";
    case RepVariant::CuspidalEnvelope: return "cuspidal_envelope";
  }
  return "?";
}

SmoothRepDescription::SmoothRepDescription(RepVariant v, ResidualCharacter twist)
    : variant_(v), twist_(std::move(twist)) {}

SmoothRepDescription SmoothRepDescription::generic(std::string support1, std::string support2,
                                                   ResidualCharacter twist) {
  SmoothRepDescription d(RepVariant::Generic, std::move(twist));
  d.support1_ = std::move(support1);
  d.support2_ = std::move(support2);
  return d;
}

SmoothRepDescription SmoothRepDescription::cuspidal(ResidualCharacter twist) {
  return SmoothRepDescription(RepVariant::Cuspidal, std::move(twist));
}

SmoothRepDescription SmoothRepDescription::steinberg(ResidualCharacter twist) {
  return SmoothRepDescription(RepVariant::Steinberg, std::move(twist));
}

SmoothRepDescription SmoothRepDescription::st_extension(TZLine line, ResidualCharacter twist) {
  SmoothRepDescription d(RepVariant::StExtension, std::move(twist));
  d.class_line_ = std::move(line);
  return d;
}

SmoothRepDescription SmoothRepDescription::st_envelope(ResidualCharacter twist) {
  return SmoothRepDescription(RepVariant::StEnvelope, std::move(twist));
}

SmoothRepDescription SmoothRepDescription::w_dual(ResidualCharacter twist) {
  return SmoothRepDescription(RepVariant::WDual, std::move(twist));
}

SmoothRepDescription SmoothRepDescription::w_dual_twist(ResidualCharacter twist) {
  return SmoothRepDescription(RepVariant::WDualTwist, std::move(twist));
}

SmoothRepDescription SmoothRepDescription::cuspidal_envelope(ResidualCharacter twist) {
  return SmoothRepDescription(RepVariant::CuspidalEnvelope, std::move(twist));
}

std::vector<std::string> SmoothRepDescription::jh() const {
  std::vector<std::string> out;
  switch (variant_) {
    case RepVariant::Generic: out = {"pi_gen"}; break;
    case RepVariant::Cuspidal: out = {"pi_gen"}; break;
    case RepVariant::Steinberg: out = {"St"}; break;
    case RepVariant::StExtension: out = {"St", "1_G"}; break;
    case RepVariant::StEnvelope: out = {"St", "1_G", "1_G"}; break;
    case RepVariant::WDual: out = {"pi_gen", "1_G"}; break;
    case RepVariant::WDualTwist: out = {"pi_gen", "normdet"}; break;
    case RepVariant::CuspidalEnvelope: out = {"pi_gen", "1_G", "normdet"}; break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string SmoothRepDescription::socle() const {
  switch (variant_) {
    case RepVariant::Steinberg:
    case RepVariant::StExtension:
    case RepVariant::StEnvelope:
      return "St";
    default:
      return "pi_gen";
  }
}

bool SmoothRepDescription::operator==(const SmoothRepDescription& other) const {
  if (variant_ != other.variant_) return false;
  if (support1_ != other.support1_ || support2_ != other.support2_) return false;
  if (class_line_.has_value() != other.class_line_.has_value()) return false;
  if (class_line_ && !line_eq(*class_line_, *other.class_line_)) return false;
  return twist_ == other.twist_;
}

std::vector<std::string> jh_constituents(const SmoothRepDescription& desc) { return desc.jh(); }

SmoothRepDescription correspond(const ResidualGaloisRep& rep) {
  switch (rep.kind()) {
    case GaloisShapeKind::Generic:
      // env(pi_gen) is irreducible away from the twist-of-(1 + omega) locus,
      // so the correspondence passes the supercuspidal support through.
      return SmoothRepDescription::generic(rep.support1(), rep.support2(), rep.twist());
    case GaloisShapeKind::QMinus1:
      switch (rep.qm1_case()) {
        case QM1Case::Split: return SmoothRepDescription::cuspidal_envelope(rep.twist());
        case QM1Case::Ext1ByOmega: return SmoothRepDescription::w_dual_twist(rep.twist());
        case QM1Case::ExtOmegaBy1: return SmoothRepDescription::w_dual(rep.twist());
      }
      break;
    case GaloisShapeKind::QPlus1:
      if (hom_is_zero(rep.sigma())) {
        return SmoothRepDescription::st_envelope(rep.twist());
      }
      return SmoothRepDescription::st_extension(phi(rep.sigma()), rep.twist());
    case GaloisShapeKind::UnsupportedTwist:
      break;
  }
  throw UnsupportedCase("twist of 1 + omega-bar with q = " + std::to_string(rep.q()) +
                        " not congruent to +-1 mod p = " + std::to_string(rep.p()));
}

std::vector<LiftDescription> enumerate_lifts(const ResidualGaloisRep& rep, const DVRCtx& ring,
                                             const SearchSpec& search) {
  std::vector<LiftDescription> out;
  if (rep.kind() == GaloisShapeKind::QMinus1) {
    auto add = [&](int type, const char* label) {
      LiftDescription lift;
      lift.regime = LiftDescription::Regime::QMinus1;
      lift.type = type;
      lift.label = label;
      out.push_back(lift);
    };
    // which characteristic-zero shapes reduce to the given case
    add(1, "irreducible");
    switch (rep.qm1_case()) {
      case QM1Case::Split:
        add(2, "ext_chi1_by_chi2");
        add(3, "ext_chi2_by_chi1");
        add(4, "split_sum");
        break;
      case QM1Case::Ext1ByOmega:
        add(2, "ext_chi1_by_chi2");
        break;
      case QM1Case::ExtOmegaBy1:
        add(3, "ext_chi2_by_chi1");
        break;
    }
    return out;
  }
  if (rep.kind() != GaloisShapeKind::QPlus1) {
    throw Error(ErrorKind::InvalidInput,
                "lift enumeration is defined for the twist-of-(1 + omega) shapes");
  }
  if (&ring.residue() != &rep.field()) {
    throw Error(ErrorKind::InvalidInput, "search ring must truncate a DVR over the rep's field");
  }
  bool sigma_zero = hom_is_zero(rep.sigma());
  bool sigma_unramified =
      !sigma_zero && line_eq(phi(rep.sigma()), unramified_line(rep.group(), rep.field()));
  auto add_plain = [&](int type, const char* label) {
    LiftDescription lift;
    lift.regime = LiftDescription::Regime::QPlus1;
    lift.type = type;
    lift.label = label;
    out.push_back(lift);
  };
  if (sigma_zero || sigma_unramified) add_plain(1, "scalar");
  add_plain(3, "cyclotomic_ext");
  if (sigma_zero || sigma_unramified) add_plain(4, "unramified_selfext");

  auto add_pair = [&](const UnitCharacter& c1, const UnitCharacter& c2) {
    ResidualHom line = sigma_class(c1, c2);
    if (!sigma_zero && !lines_equal(line, rep.sigma())) return;
    LiftDescription lift;
    lift.regime = LiftDescription::Regime::QPlus1;
    lift.type = 2;
    lift.characters = {c1, c2};
    lift.label = "split_sum_pair";
    out.push_back(lift);
  };

  if (search.full) {
    std::uint64_t chars = count_residually_trivial_characters(rep.group(), ring);
    unsigned __int128 pairs = static_cast<unsigned __int128>(chars) * (chars - 1);
    if (pairs > search.max_candidates) {
      throw SearchSpaceTooLarge("full search over " + std::to_string(chars) +
                                " characters exceeds max_candidates");
    }
    std::vector<UnitCharacter> all = enumerate_residually_trivial_characters(rep.group(), ring);
    for (size_t i = 0; i < all.size(); ++i) {
      for (size_t j = 0; j < all.size(); ++j) {
        if (i == j) continue;
        add_pair(all[i], all[j]);
      }
    }
  } else {
    Rng rng(search.seed);
    for (std::uint64_t draw = 0; draw < search.max_candidates; ++draw) {
      UnitCharacter c1 = sample_residually_trivial_character(rep.group(), ring, rng);
      UnitCharacter c2 = sample_residually_trivial_character(rep.group(), ring, rng);
      if (c1 == c2) continue;
      add_pair(c1, c2);
    }
  }
  return out;
}

SmoothRepDescription lift_reduction(const LiftDescription& lift, const AbelianGroupModel& group,
                                    const FiniteFieldCtx& field) {
  ResidualCharacter trivial = ResidualCharacter::trivial(group, field);
  if (lift.regime == LiftDescription::Regime::QMinus1) {
    switch (lift.type) {
      case 1: return SmoothRepDescription::cuspidal(trivial);
      case 2: return SmoothRepDescription::w_dual_twist(trivial);
      case 3: return SmoothRepDescription::w_dual(trivial);
      case 4: return SmoothRepDescription::cuspidal_envelope(trivial);
      default: break;
    }
    throw Error(ErrorKind::InvalidInput, "lift type must be 1..4");
  }
  switch (lift.type) {
    case 1:
    case 4:
      // parabolic inductions of twists of the trivial torus character have
      // Iwahori-fixed vectors; the reduction line factors through
      // T -> T/Z = F^x -> Z
      return SmoothRepDescription::st_extension(unramified_line(group, field), trivial);
    case 2: {
      if (!lift.characters) {
        throw Error(ErrorKind::InvalidInput, "type-2 lift carries a character pair");
      }
      TorusHom torus = t_side_class(lift.characters->first, lift.characters->second);
      return SmoothRepDescription::st_extension(restrict_to_TZ(torus), trivial);
    }
    case 3:
      return SmoothRepDescription::steinberg(trivial);
    default:
      break;
  }
  throw Error(ErrorKind::InvalidInput, "lift type must be 1..4");
}

namespace {

// rank of the span of hom value vectors over k
int span_rank(std::vector<std::vector<FFElem>> rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < cols; ++col) {
    int pivot = -1;
    for (size_t i = static_cast<size_t>(rank); i < rows.size(); ++i) {
      if (!ff_is_zero(rows[i][col])) {
        pivot = static_cast<int>(i);
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
    FFElem inv = ff_inv(rows[static_cast<size_t>(rank)][col]);
    for (size_t j = 0; j < cols; ++j) {
      rows[static_cast<size_t>(rank)][j] = ff_mul(inv, rows[static_cast<size_t>(rank)][j]);
    }
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<size_t>(rank) || ff_is_zero(rows[i][col])) continue;
      FFElem c = rows[i][col];
      for (size_t j = 0; j < cols; ++j) {
        rows[i][j] = ff_sub(rows[i][j], ff_mul(c, rows[static_cast<size_t>(rank)][j]));
      }
    }
    ++rank;
    if (static_cast<size_t>(rank) == rows.size()) break;
  }
  return rank;
}

}  // namespace

SmoothRepDescription brute_force_correspond(const ResidualGaloisRep& rep, const DVRCtx& ring,
                                            const SearchSpec& search) {
  if (rep.kind() != GaloisShapeKind::QPlus1) {
    throw Error(ErrorKind::InvalidInput, "the sum-of-lifts construction is run in the q = 1 regime");
  }
  std::vector<LiftDescription> lifts = enumerate_lifts(rep, ring, search);
  std::vector<TZLine> lines;
  for (const LiftDescription& lift : lifts) {
    SmoothRepDescription red = lift_reduction(lift, rep.group(), rep.field());
    if (red.variant() == RepVariant::StExtension) {
      lines.push_back(*red.class_line());
    }
  }
  if (lines.empty()) {
    throw InsufficientEvidence("only Steinberg reductions were found; the search is too thin");
  }
  std::vector<std::vector<FFElem>> rows;
  rows.reserve(lines.size());
  for (const TZLine& line : lines) rows.push_back(line.rep.values());
  int rank = span_rank(std::move(rows));
  if (rank >= 2) {
    return SmoothRepDescription::st_envelope(rep.twist());
  }
  return SmoothRepDescription::st_extension(lines.front(), rep.twist());
}

SmoothRepDescription twist_rep(const SmoothRepDescription& desc, const ResidualCharacter& chibar) {
  ResidualCharacter twist = char_mul(desc.twist(), chibar);
  RepVariant v = desc.variant();
  if (v == RepVariant::WDual || v == RepVariant::WDualTwist) {
    ResidualCharacter normdet =
        ResidualCharacter::cyclotomic(chibar.group(), *chibar.values().front().ctx);
    if (chibar == normdet) {
      v = (v == RepVariant::WDual) ? RepVariant::WDualTwist : RepVariant::WDual;
    }
  }
  switch (v) {
    case RepVariant::Generic: return SmoothRepDescription::generic(desc.support1(), desc.support2(), twist);
    case RepVariant::Cuspidal: return SmoothRepDescription::cuspidal(twist);
    case RepVariant::Steinberg: return SmoothRepDescription::steinberg(twist);
    case RepVariant::StExtension: return SmoothRepDescription::st_extension(*desc.class_line(), twist);
    case RepVariant::StEnvelope: return SmoothRepDescription::st_envelope(twist);
    case RepVariant::WDual: return SmoothRepDescription::w_dual(twist);
    case RepVariant::WDualTwist: return SmoothRepDescription::w_dual_twist(twist);
    case RepVariant::CuspidalEnvelope: return SmoothRepDescription::cuspidal_envelope(twist);
  }
  throw Error(ErrorKind::Internal, "unknown variant");
}

ResidualGaloisRep twist_galois(const ResidualGaloisRep& rep, const ResidualCharacter& chibar) {
  ResidualCharacter twist = char_mul(rep.twist(), chibar);
  switch (rep.kind()) {
    case GaloisShapeKind::Generic:
      return ResidualGaloisRep::generic(rep.group(), rep.field(), rep.support1(), rep.support2(),
                                        twist);
    case GaloisShapeKind::QMinus1: {
      QM1Case c = rep.qm1_case();
      ResidualCharacter omega = ResidualCharacter::cyclotomic(rep.group(), rep.field());
      if (chibar == omega && c != QM1Case::Split) {
        c = (c == QM1Case::Ext1ByOmega) ? QM1Case::ExtOmegaBy1 : QM1Case::Ext1ByOmega;
      }
      return ResidualGaloisRep::one_plus_omega_qm1(rep.group(), rep.field(), c, twist);
    }
    case GaloisShapeKind::QPlus1:
      return ResidualGaloisRep::trivial_ss_qp1(rep.group(), rep.field(), rep.sigma(), twist);
    case GaloisShapeKind::UnsupportedTwist:
      return ResidualGaloisRep::unsupported_twist(rep.group(), rep.field(), twist);
  }
  throw Error(ErrorKind::Internal, "unknown shape");
}

}  // namespace modpll
