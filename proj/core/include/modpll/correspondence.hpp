#ifndef MODPLL_CORRESPONDENCE_HPP
#define MODPLL_CORRESPONDENCE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modpll/ext_spaces.hpp"

namespace modpll {

/// Character of the group model with values in k^x; twists of Galois
/// representations and the determinant twists of smooth representations
/// both carry one of these labels. Torsion relations value^order = 1 are
/// validated in k^x.
class ResidualCharacter {
 public:
  ResidualCharacter(const AbelianGroupModel& group, std::vector<FFElem> values);

  static ResidualCharacter trivial(const AbelianGroupModel& group, const FiniteFieldCtx& field);
  /// The mod p cyclotomic character: unramified, uniformizer -> q mod p.
  static ResidualCharacter cyclotomic(const AbelianGroupModel& group, const FiniteFieldCtx& field);

  const AbelianGroupModel& group() const { return *group_; }
  const FFElem& value(int gen_index) const { return values_[static_cast<size_t>(gen_index)]; }
  const std::vector<FFElem>& values() const { return values_; }
  bool is_trivial() const;

  bool operator==(const ResidualCharacter& other) const;
  bool operator!=(const ResidualCharacter& other) const { return !(*this == other); }

 private:
  const AbelianGroupModel* group_;
  std::vector<FFElem> values_;
};

ResidualCharacter char_mul(const ResidualCharacter& a, const ResidualCharacter& b);

enum class QM1Case { Split, Ext1ByOmega, ExtOmegaBy1 };

enum class GaloisShapeKind {
  Generic,           // ss not a twist of 1 + omega-bar
  QMinus1,           // q = -1 mod p, ss a twist of 1 + omega-bar
  QPlus1,            // q = +1 mod p, ss a twist of the trivial 2-dim rep
  UnsupportedTwist,  // ss a twist of 1 + omega-bar but q != +-1 mod p
};

/// Input side of the correspondence: a continuous rep G_F -> GL_2(k) given
/// by the classification data the dispatch actually depends on.
class ResidualGaloisRep {
 public:
  static ResidualGaloisRep generic(const AbelianGroupModel& group, const FiniteFieldCtx& field,
                                   std::string support1, std::string support2,
                                   ResidualCharacter twist);
  static ResidualGaloisRep one_plus_omega_qm1(const AbelianGroupModel& group,
                                              const FiniteFieldCtx& field, QM1Case c,
                                              ResidualCharacter twist);
  /// q = 1 mod p: the one-parameter family with trivial semisimplification;
  /// sigma = 0 is the split member.
  static ResidualGaloisRep trivial_ss_qp1(const AbelianGroupModel& group,
                                          const FiniteFieldCtx& field, ResidualHom sigma,
                                          ResidualCharacter twist);
  static ResidualGaloisRep unsupported_twist(const AbelianGroupModel& group,
                                             const FiniteFieldCtx& field, ResidualCharacter twist);

  GaloisShapeKind kind() const { return kind_; }
  QM1Case qm1_case() const { return qm1_case_; }
  const ResidualHom& sigma() const { return sigma_.value(); }
  const std::string& support1() const { return support1_; }
  const std::string& support2() const { return support2_; }
  const ResidualCharacter& twist() const { return twist_; }
  const AbelianGroupModel& group() const { return *group_; }
  const FiniteFieldCtx& field() const { return *field_; }
  long p() const { return field_->p(); }
  std::uint64_t q() const { return group_->q(); }

 private:
  ResidualGaloisRep(const AbelianGroupModel& group, const FiniteFieldCtx& field,
                    ResidualCharacter twist);
  GaloisShapeKind kind_ = GaloisShapeKind::Generic;
  QM1Case qm1_case_ = QM1Case::Split;
  std::optional<ResidualHom> sigma_;
  std::string support1_, support2_;
  const AbelianGroupModel* group_;
  const FiniteFieldCtx* field_;
  ResidualCharacter twist_;
};

/// Structural tags for the finite-length smooth GL2(F)-representations the
/// correspondence produces. StEnvelope is the universal extension of
/// 1_G + 1_G by St (the essentially AIG envelope of St, q = 1 regime);
/// CuspidalEnvelope is the envelope of the cuspidal generic rep (q = -1);
/// WDual and WDualTwist are its two length-2 subrepresentations.
enum class RepVariant {
  Generic,
  Cuspidal,
  Steinberg,
  StExtension,
  StEnvelope,
  WDual,
  WDualTwist,
  CuspidalEnvelope,
};

std::string variant_name(RepVariant v);

class SmoothRepDescription {
 public:
  static SmoothRepDescription generic(std::string support1, std::string support2,
                                      ResidualCharacter twist);
  static SmoothRepDescription cuspidal(ResidualCharacter twist);
  static SmoothRepDescription steinberg(ResidualCharacter twist);
  static SmoothRepDescription st_extension(TZLine line, ResidualCharacter twist);
  static SmoothRepDescription st_envelope(ResidualCharacter twist);
  static SmoothRepDescription w_dual(ResidualCharacter twist);
  static SmoothRepDescription w_dual_twist(ResidualCharacter twist);
  static SmoothRepDescription cuspidal_envelope(ResidualCharacter twist);

  RepVariant variant() const { return variant_; }
  const std::optional<TZLine>& class_line() const { return class_line_; }
  const std::string& support1() const { return support1_; }
  const std::string& support2() const { return support2_; }
  const ResidualCharacter& twist() const { return twist_; }

  /// Jordan-Hoelder constituents (multiset, sorted) and the socle, both as
  /// stable labels: "1_G", "St", "pi_gen", "normdet".
  std::vector<std::string> jh() const;
  std::string socle() const;

  bool operator==(const SmoothRepDescription& other) const;
  bool operator!=(const SmoothRepDescription& other) const { return !(*this == other); }

 private:
  explicit SmoothRepDescription(RepVariant v, ResidualCharacter twist);
  RepVariant variant_;
  std::optional<TZLine> class_line_;
  std::string support1_, support2_;
  ResidualCharacter twist_;
};

std::vector<std::string> jh_constituents(const SmoothRepDescription& desc);

/// One lift of rho-bar to characteristic zero, at the granularity the
/// reduction map depends on. `type` numbers the four lift shapes: scalar,
/// split sum of characters, cyclotomic extension, unramified self-extension
/// (for q = -1: irreducible, the two Steinberg twists, split sum).
struct LiftDescription {
  enum class Regime { QPlus1, QMinus1 };
  Regime regime = Regime::QPlus1;
  int type = 0;  // 1..4
  std::optional<std::pair<UnitCharacter, UnitCharacter>> characters;  // QPlus1 type 2
  std::string label;
};

struct SearchSpec {
  bool full = true;
  std::uint64_t max_candidates = 200000;
  std::uint64_t seed = 20260809;
};

/// The modified mod p local Langlands correspondence for GL2, dispatched on
/// the classification of rho-bar. Throws UnsupportedCase for the deferred
/// twist-of-(1 + omega-bar) inputs with q != +-1 mod p.
SmoothRepDescription correspond(const ResidualGaloisRep& rep);

/// Possible lift shapes of rho-bar. QMinus1 inputs yield their fixed case
/// list; QPlus1 inputs enumerate type-2 character pairs at the precision of
/// `ring` (exhaustive in full mode when the pair space fits under
/// max_candidates, else seeded uniform sampling).
std::vector<LiftDescription> enumerate_lifts(const ResidualGaloisRep& rep, const DVRCtx& ring,
                                             const SearchSpec& search);

/// Reduction mod p of the essentially AIG lattice in pi(rho) for one lift.
SmoothRepDescription lift_reduction(const LiftDescription& lift, const AbelianGroupModel& group,
                                    const FiniteFieldCtx& field);

/// The construction underlying the correspondence, run literally: reduce
/// every enumerated lift and take the span of the resulting extension
/// lines. Dimension >= 2 forces the full envelope; dimension 1 pins the
/// unique nonsplit extension. Steinberg reductions carry no information;
/// if nothing else was found the search was too thin (InsufficientEvidence).
SmoothRepDescription brute_force_correspond(const ResidualGaloisRep& rep, const DVRCtx& ring,
                                            const SearchSpec& search);

/// Twist of a smooth description by chibar o det. Twisting by the
/// cyclotomic label in the q = -1 regime exchanges WDual and WDualTwist and
/// fixes the envelope.
SmoothRepDescription twist_rep(const SmoothRepDescription& desc, const ResidualCharacter& chibar);

/// Twist on the Galois side; mirrors twist_rep so the correspondence is
/// twist-equivariant by construction of the labels.
ResidualGaloisRep twist_galois(const ResidualGaloisRep& rep, const ResidualCharacter& chibar);

}  // namespace modpll

#endif  // MODPLL_CORRESPONDENCE_HPP
