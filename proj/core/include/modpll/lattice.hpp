#ifndef MODPLL_LATTICE_HPP
#define MODPLL_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "modpll/characters.hpp"
#include "modpll/report.hpp"

namespace modpll {

/// The rank-2 module L = O e1 + O e2 with g e1 = chi1(g) e1, g e2 = chi2(g) e2,
/// for two distinct residually trivial characters. Caches the congruence
/// level a, the per-generator differences chi1(g) - chi2(g) and their
/// valuations, and sigma(chi1, chi2).
class DiagonalActionModule {
 public:
  DiagonalActionModule(UnitCharacter chi1, UnitCharacter chi2);

  const UnitCharacter& chi1() const { return chi1_; }
  const UnitCharacter& chi2() const { return chi2_; }
  const AbelianGroupModel& group() const { return chi1_.group(); }
  const DVRCtx& ring() const { return chi1_.ring(); }
  int level() const { return level_; }
  int generator_count() const { return chi1_.group().generator_count(); }
  const DVRElem& diff(int g) const { return diffs_[static_cast<size_t>(g)]; }
  int diff_val(int g) const { return diff_vals_[static_cast<size_t>(g)]; }
  const ResidualHom& sigma() const { return sigma_; }

 private:
  UnitCharacter chi1_;
  UnitCharacter chi2_;
  int level_;
  std::vector<DVRElem> diffs_;
  std::vector<int> diff_vals_;
  ResidualHom sigma_;
};

/// Homothety class of a lattice commensurable with L0 = O e1 + O e2,
/// stored in canonical triangular form
///
///     L' = O pi^r e1 + O (off e1 + pi^s e2),
///
/// with r, s >= 0, off in O reduced mod pi^r, and min(r, s, val(off)) = 0.
/// The class meets the window [pi^c L0, pi^-c L0] iff r <= 2c, s <= 2c and
/// r + s - val(off) <= 2c; negative exponents of window representatives are
/// recovered by dividing the canonical form by a power of pi.
class LatticeBasis {
 public:
  /// Canonicalizes arbitrary triangular data. The second basis vector is
  /// (off / pi^off_denom) e1 + pi^s e2, so off_denom expresses coefficients
  /// with negative valuation; r and s may be negative as well. Throws when
  /// the class does not meet the window or the precision budget
  /// N >= 2*window + 1 fails.
  static LatticeBasis from_triangular(const DVRCtx& ring, int window, int r, int s,
                                      DVRElem off, int off_denom = 0);

  int window() const { return window_; }
  int r() const { return r_; }
  int s() const { return s_; }
  const DVRElem& off() const { return off_; }
  int off_val() const { return off_val_; }  // N for off = 0

  bool operator==(const LatticeBasis& other) const;
  std::string display() const;

 private:
  friend std::vector<LatticeBasis> canonical_window_candidates(const DVRCtx&, int);
  LatticeBasis() = default;
  int window_ = 0;
  int r_ = 0;
  int s_ = 0;
  DVRElem off_;
  int off_val_ = 0;
};

/// Extension class of L'/pi L' as an extension of 1_G by 1_G: split, or the
/// line spanned by the cocycle (normalized representative).
struct ReductionExtension {
  bool split = true;
  std::optional<ResidualHom> class_line;
};

/// Every canonical homothety class meeting the window, stability not yet
/// tested, sorted lexicographically by (r, s, off digits).
std::vector<LatticeBasis> canonical_window_candidates(const DVRCtx& ring, int window);

/// G-stability of the lattice under the diagonal action: both basis vectors
/// stay inside under every generator (triangular substitution).
bool is_stable(const LatticeBasis& lattice, const DiagonalActionModule& mod);

/// All stable classes meeting the window, one canonical representative
/// each, sorted. Throws PrecisionBudgetExceeded when N < 2*window + 1.
std::vector<LatticeBasis> enumerate_stable_lattices(const DiagonalActionModule& mod, int window);

/// Reduction path one: the 2x2 matrix of each generator acting on
/// L'/pi L' in the canonical basis is unipotent upper triangular; the
/// cocycle is read off the corner entry. Never consults sigma(chi1, chi2).
ReductionExtension reduction_extension_direct(const LatticeBasis& lattice,
                                              const DiagonalActionModule& mod);

/// Reduction path two: the constructive recipe from the proof of the
/// lattice proposition. Renormalizes the class so L0 sits inside L' but not
/// inside pi L', swaps e1 and e2 when e2 generates the image of L0, scans
/// for the least b > 0 with pi^b e3 in L0, and reduces pi^-b alpha (chi1 - chi2).
/// Throws SplitReduction on split lattices.
ReductionExtension sigma_from_lattice_proof_formula(const LatticeBasis& lattice,
                                                    const DiagonalActionModule& mod);

/// Runs both paths over every stable class in the window and checks each
/// nonsplit reduction line against span(sigma(chi1, chi2)). Counts:
/// stable, split, nonsplit, matches. Mismatches are recorded as failure
/// witnesses, not thrown. `candidates` may supply precomputed canonical
/// forms, possibly from a larger window; entries outside the requested
/// window are skipped.
VerificationReport verify_prop_class(const DiagonalActionModule& mod, int window,
                                     const std::vector<LatticeBasis>* candidates = nullptr);

}  // namespace modpll

#endif  // MODPLL_LATTICE_HPP
