#ifndef MODPLL_CHARACTERS_HPP
#define MODPLL_CHARACTERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "modpll/dvr.hpp"
#include "modpll/group_model.hpp"
#include "modpll/rng.hpp"

namespace modpll {

/// Character G -> O^x given by its values on the generators. Torsion
/// relations are validated exactly in O/pi^N at construction.
class UnitCharacter {
 public:
  const AbelianGroupModel& group() const { return *group_; }
  const DVRCtx& ring() const { return *ring_; }
  const DVRElem& value(int gen_index) const { return values_[static_cast<size_t>(gen_index)]; }
  bool trivial_mod_uniformizer() const { return trivial_mod_uniformizer_; }

  bool operator==(const UnitCharacter& other) const;
  bool operator!=(const UnitCharacter& other) const { return !(*this == other); }

 private:
  friend UnitCharacter make_unit_character(const AbelianGroupModel&, const DVRCtx&,
                                           const std::vector<DVRElem>&);
  const AbelianGroupModel* group_ = nullptr;
  const DVRCtx* ring_ = nullptr;
  std::vector<DVRElem> values_;
  bool trivial_mod_uniformizer_ = false;
};

/// Validates unit values and the torsion relations value^order = 1 (exact
/// in O/pi^N); throws TorsionViolation otherwise.
UnitCharacter make_unit_character(const AbelianGroupModel& group, const DVRCtx& ring,
                                  const std::vector<DVRElem>& values);

UnitCharacter trivial_character(const AbelianGroupModel& group, const DVRCtx& ring);

UnitCharacter char_mul(const UnitCharacter& a, const UnitCharacter& b);
UnitCharacter char_inv(const UnitCharacter& a);

/// chi(w) for a formal word w (negative exponents via the unit inverse).
DVRElem char_eval_word(const UnitCharacter& chi, const Word& w);

/// Element of Hom(G, k), the model of H^1(G, k) = Ext^1 of trivial
/// characters. Torsion generators of order prime to p must map to 0;
/// construction validates this.
class ResidualHom {
 public:
  ResidualHom(const AbelianGroupModel& group, std::vector<FFElem> values);

  const AbelianGroupModel& group() const { return *group_; }
  const FFElem& value(int gen_index) const { return values_[static_cast<size_t>(gen_index)]; }
  const std::vector<FFElem>& values() const { return values_; }

  bool operator==(const ResidualHom& other) const;
  bool operator!=(const ResidualHom& other) const { return !(*this == other); }

 private:
  const AbelianGroupModel* group_ = nullptr;
  std::vector<FFElem> values_;
};

ResidualHom hom_zero(const AbelianGroupModel& group, const FiniteFieldCtx& field);
bool hom_is_zero(const ResidualHom& h);
ResidualHom hom_add(const ResidualHom& a, const ResidualHom& b);
ResidualHom hom_neg(const ResidualHom& a);
ResidualHom hom_scale(const FFElem& c, const ResidualHom& a);
FFElem hom_eval_word(const ResidualHom& h, const Word& w);

/// Scales so the first nonzero coordinate (generator order) is 1.
/// Throws ZeroClass on the zero hom.
ResidualHom normalize_line(const ResidualHom& h);
bool lines_equal(const ResidualHom& a, const ResidualHom& b);

/// "(u:1, t:0)"-style rendering in generator order.
std::string hom_to_string(const ResidualHom& h);

/// The largest a with chi1 = chi2 mod pi^a, i.e. min_g val(chi1(g)-chi2(g)).
/// Guarantees 1 <= a <= N-1; throws Indistinguishable when the characters
/// agree at this precision (a would be uncertified), NotResiduallyTrivial
/// or GroupMismatch on precondition failure.
int congruence_level(const UnitCharacter& chi1, const UnitCharacter& chi2);

/// sigma(chi1, chi2): generator g maps to the residue of
/// (chi1(g) - chi2(g)) / pi^a. Nonzero by maximality of a.
ResidualHom sigma_class(const UnitCharacter& chi1, const UnitCharacter& chi2);

/// ---- character-space enumeration (exhaustive searches, sampling) ----

/// All x in 1 + pi*O/pi^N, digit-lexicographic order (p^{d(N-1)} values).
std::vector<DVRElem> residually_trivial_units(const DVRCtx& ring);

/// Number of x in 1 + pi*O with x^order = 1 exactly (order 0: no relation).
std::uint64_t count_torsion_valid_units(const DVRCtx& ring, std::uint64_t order);

/// The valid values themselves, filtered from residually_trivial_units.
std::vector<DVRElem> torsion_valid_units(const DVRCtx& ring, std::uint64_t order);

/// Product of per-generator counts: the size of the full space of
/// residually trivial characters at this precision.
std::uint64_t count_residually_trivial_characters(const AbelianGroupModel& group, const DVRCtx& ring);

/// All residually trivial characters, generator-value lexicographic.
std::vector<UnitCharacter> enumerate_residually_trivial_characters(const AbelianGroupModel& group,
                                                                   const DVRCtx& ring);

/// Uniform draw from the residually trivial character space.
UnitCharacter sample_residually_trivial_character(const AbelianGroupModel& group, const DVRCtx& ring,
                                                  Rng& rng);

}  // namespace modpll

#endif  // MODPLL_CHARACTERS_HPP
