#ifndef MODPLL_EXT_SPACES_HPP
#define MODPLL_EXT_SPACES_HPP

#include "modpll/characters.hpp"

namespace modpll {

/// Class in Ext^1_T(1,1) = Hom(T, k) for the diagonal torus T of GL2(F):
/// `first` is the value on diag(x, 1), `second` on diag(1, x), both read
/// through the finite-level model of F^x. The ambient space has dimension
/// 2 * hom_space_dim.
struct TorusHom {
  ResidualHom first;
  ResidualHom second;
};

/// Line in Hom(T/Z, k), coordinatized via x -> diag(x, 1); stores the
/// normalized spanning hom. Ambient dimension hom_space_dim.
struct TZLine {
  ResidualHom rep;
};

bool line_eq(const TZLine& l1, const TZLine& l2);

/// Transport of a Galois-side class along W_F^ab = F^x = T/Z; with the fixed
/// generator dictionary (u -> diag(pi_F,1)Z, t -> diag(t,1)Z) the map is the
/// identity on generator values. Returns the spanned line; ZeroClass on 0.
TZLine phi(const ResidualHom& sigma);

/// sigma(chi1 (x) chi2, chi2 (x) chi1) on the torus: both torus characters
/// are evaluated on diag(g,1) and diag(1,g) per generator g, with the
/// congruence level recomputed on the torus.
TorusHom t_side_class(const UnitCharacter& chi1_hat, const UnitCharacter& chi2_hat);

/// Restriction to the center-trivial subspace Hom(T/Z, k): requires
/// first + second = 0 (NotCenterTrivial otherwise) and returns the line of
/// the first component (ZeroClass when it vanishes).
TZLine restrict_to_TZ(const TorusHom& h);

/// The line of homs factoring through T -> T/Z = F^x -> Z: value 1 on the
/// uniformizer generator, 0 on every torsion generator.
TZLine unramified_line(const AbelianGroupModel& group, const FiniteFieldCtx& field);

int tz_ambient_dim(const AbelianGroupModel& group, long p);
int torus_ambient_dim(const AbelianGroupModel& group, long p);

}  // namespace modpll

#endif  // MODPLL_EXT_SPACES_HPP
