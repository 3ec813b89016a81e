#ifndef MODPLL_GROUP_MODEL_HPP
#define MODPLL_GROUP_MODEL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modpll/errors.hpp"

namespace modpll {

/// One generator of a finitely generated abelian group; order 0 means
/// infinite order.
struct Generator {
  std::string name;
  std::uint64_t order = 0;
};

/// Finite presentation of the abelian groups this library works with.
///
/// The distinguished instance is the finite-level model of F^x for an
/// l-adic field F with residue order q: one infinite generator u (the class
/// of a uniformizer of F) and one generator t of order q-1 (the tame
/// Teichmueller direction). Characters in scope are trivial on the wild
/// part 1+p_F (it is pro-l, the values live in a pro-p group), so nothing
/// else is kept.
class AbelianGroupModel {
 public:
  explicit AbelianGroupModel(std::vector<Generator> generators);

  /// The standard model of F^x ~ W_F^ab. Validates l prime, l != p, f >= 1.
  static AbelianGroupModel standard_model(long p, long ell, int f);

  const std::vector<Generator>& generators() const { return generators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  int index_of(const std::string& name) const;  // -1 when absent

  bool is_standard() const { return standard_; }
  long ell() const { return ell_; }
  int f() const { return f_; }
  std::uint64_t q() const { return q_; }

  bool operator==(const AbelianGroupModel& other) const;

 private:
  std::vector<Generator> generators_;
  bool standard_ = false;
  long ell_ = 0;
  int f_ = 0;
  std::uint64_t q_ = 0;
};

/// Formal word in the generators: list of (generator index, exponent).
using Word = std::vector<std::pair<int, long>>;

/// dim_k Hom(G, k) for char(k) = p: one dimension per infinite generator
/// plus one per torsion generator whose order is divisible by p.
int hom_space_dim(const AbelianGroupModel& group, long p);

}  // namespace modpll

#endif  // MODPLL_GROUP_MODEL_HPP
