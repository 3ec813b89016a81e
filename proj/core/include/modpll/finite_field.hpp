#ifndef MODPLL_FINITE_FIELD_HPP
#define MODPLL_FINITE_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modpll/errors.hpp"

namespace modpll {

inline constexpr int kMaxFieldDegree = 4;

struct FFElem;
class FiniteFieldCtx;
FFElem ff_mul(const FFElem& a, const FFElem& b);

/// Arithmetic context for k = F_{p^d}, realized as F_p[x]/(modulus).
/// The modulus is monic of degree d, stored low-coefficient-first, and is
/// checked for irreducibility at construction by trial division against
/// every monic polynomial of degree <= d/2.
class FiniteFieldCtx {
 public:
  FiniteFieldCtx(long p, const std::vector<long>& modulus);

  /// F_p itself (modulus x).
  static FiniteFieldCtx prime_field(long p);

  long p() const { return p_; }
  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }  // p^d
  const std::vector<long>& modulus() const { return modulus_; }

  bool same_field(const FiniteFieldCtx& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  long p_;
  int degree_;
  std::uint64_t order_;
  std::vector<long> modulus_;                      // length degree_+1, monic
  std::array<std::uint8_t, kMaxFieldDegree> red_;  // low d coeffs of x^d mod modulus, negated
  friend struct FFElem;
  friend FFElem ff_mul(const FFElem&, const FFElem&);
};

/// Element of k; coefficients of the residue polynomial, low-first,
/// reduced into [0, p).
struct FFElem {
  const FiniteFieldCtx* ctx = nullptr;
  std::array<std::uint8_t, kMaxFieldDegree> c{};

  bool operator==(const FFElem& other) const;
  bool operator!=(const FFElem& other) const { return !(*this == other); }
};

FFElem ff_zero(const FiniteFieldCtx& ctx);
FFElem ff_one(const FiniteFieldCtx& ctx);

/// Embeds an integer residue (any long, reduced mod p).
FFElem ff_from_int(const FiniteFieldCtx& ctx, long value);

/// Builds an element from its coefficient list (length <= d, entries any longs).
FFElem ff_from_coeffs(const FiniteFieldCtx& ctx, const std::vector<long>& coeffs);

FFElem ff_add(const FFElem& a, const FFElem& b);
FFElem ff_sub(const FFElem& a, const FFElem& b);
FFElem ff_neg(const FFElem& a);
FFElem ff_mul(const FFElem& a, const FFElem& b);

/// Multiplicative inverse. Throws ZeroInversion on zero.
FFElem ff_inv(const FFElem& a);

FFElem ff_pow(const FFElem& a, std::uint64_t n);

bool ff_is_zero(const FFElem& a);
bool ff_is_one(const FFElem& a);

std::vector<long> ff_coeffs(const FFElem& a);
std::string ff_to_string(const FFElem& a);

/// Deterministic total order on elements of one field (coefficient lex).
int ff_cmp(const FFElem& a, const FFElem& b);

/// All elements of k in the ff_cmp order (p^d of them).
std::vector<FFElem> ff_all_elements(const FiniteFieldCtx& ctx);

}  // namespace modpll

#endif  // MODPLL_FINITE_FIELD_HPP
