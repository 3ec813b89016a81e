#include "modpll/ext_spaces.hpp"

#include <algorithm>

namespace modpll {

bool line_eq(const TZLine& l1, const TZLine& l2) {
  if (!(l1.rep.group() == l2.rep.group())) {
    throw GroupMismatch("comparing lines over different groups");
  }
  return l1.rep == l2.rep;
}

TZLine phi(const ResidualHom& sigma) {
  if (hom_is_zero(sigma)) {
    throw ZeroClass("phi of the zero class");
  }
  return TZLine{normalize_line(sigma)};
}

TorusHom t_side_class(const UnitCharacter& chi1_hat, const UnitCharacter& chi2_hat) {
  if (!(chi1_hat.group() == chi2_hat.group()) || &chi1_hat.ring() != &chi2_hat.ring()) {
    throw GroupMismatch("torus class needs characters on one group and ring");
  }
  if (!chi1_hat.trivial_mod_uniformizer() || !chi2_hat.trivial_mod_uniformizer()) {
    throw NotResiduallyTrivial("torus class needs residually trivial characters");
  }
  const DVRCtx& ring = chi1_hat.ring();
  int gens = chi1_hat.group().generator_count();
  // (chi1 (x) chi2)(diag(g,1)) = chi1(g) and (chi2 (x) chi1)(diag(g,1)) = chi2(g);
  // on diag(1,g) the roles flip.
  std::vector<DVRElem> diff_first, diff_second;
  int a = ring.precision();
  for (int g = 0; g < gens; ++g) {
    diff_first.push_back(dvr_sub(chi1_hat.value(g), chi2_hat.value(g)));
    diff_second.push_back(dvr_sub(chi2_hat.value(g), chi1_hat.value(g)));
    a = std::min({a, dvr_val(diff_first.back()), dvr_val(diff_second.back())});
  }
  if (a >= ring.precision()) {
    throw Indistinguishable("torus characters agree at precision " + std::to_string(ring.precision()));
  }
  std::vector<FFElem> first, second;
  for (int g = 0; g < gens; ++g) {
    first.push_back(dvr_reduce(dvr_divide_by_uniformizer_power(diff_first[static_cast<size_t>(g)], a)));
    second.push_back(dvr_reduce(dvr_divide_by_uniformizer_power(diff_second[static_cast<size_t>(g)], a)));
  }
  return TorusHom{ResidualHom(chi1_hat.group(), first), ResidualHom(chi1_hat.group(), second)};
}

TZLine restrict_to_TZ(const TorusHom& h) {
  if (!hom_is_zero(hom_add(h.first, h.second))) {
    throw NotCenterTrivial("class does not vanish on diag(x, x)");
  }
  if (hom_is_zero(h.first)) {
    throw ZeroClass("restriction of the zero class");
  }
  return TZLine{normalize_line(h.first)};
}

TZLine unramified_line(const AbelianGroupModel& group, const FiniteFieldCtx& field) {
  std::vector<FFElem> values;
  int infinite = 0;
  for (const Generator& g : group.generators()) {
    if (g.order == 0) {
      values.push_back(ff_one(field));
      ++infinite;
    } else {
      values.push_back(ff_zero(field));
    }
  }
  if (infinite != 1) {
    throw Error(ErrorKind::InvalidInput, "unramified line needs exactly one infinite generator");
  }
  return TZLine{ResidualHom(group, values)};
}

int tz_ambient_dim(const AbelianGroupModel& group, long p) {
  return hom_space_dim(group, p);
}

int torus_ambient_dim(const AbelianGroupModel& group, long p) {
  return 2 * hom_space_dim(group, p);
}

}  // namespace modpll
