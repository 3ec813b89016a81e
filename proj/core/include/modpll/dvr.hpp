#ifndef MODPLL_DVR_HPP
#define MODPLL_DVR_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modpll/finite_field.hpp"

namespace modpll {

inline constexpr int kMaxPrecision = 12;

/// Two realizations of the truncated discrete valuation ring O/pi^N.
///
/// EqualChar is k[pi]/(pi^N): digit arithmetic with no carries, valid for
/// any residue field k. ZModPN is Z/p^N with k = F_p and pi = p: base-p
/// digits with carries. Every formula in this library depends only on the
/// pi-adic filtration and residue arithmetic, so the two backends must be
/// interchangeable; the test suites run against both.
enum class DvrBackend { EqualChar, ZModPN };

class DVRCtx {
 public:
  /// residue must outlive the context. precision N >= 2: a single digit
  /// cannot distinguish a residually trivial unit character from the
  /// trivial one.
  DVRCtx(const FiniteFieldCtx& residue, int precision,
         DvrBackend backend = DvrBackend::EqualChar);

  const FiniteFieldCtx& residue() const { return *residue_; }
  int precision() const { return precision_; }
  DvrBackend backend() const { return backend_; }
  std::uint64_t pn() const { return pn_; }  // p^N (ZModPN only)

 private:
  const FiniteFieldCtx* residue_;
  int precision_;
  DvrBackend backend_;
  std::uint64_t pn_ = 0;
};

/// Element of O/pi^N: digits dig[i*d + j] give coefficient j of the residue
/// field digit at pi^i. `certified` counts leading digits that are exact;
/// it shrinks when dividing by powers of the uniformizer and reading a
/// digit past it is an error.
struct DVRElem {
  const DVRCtx* ctx = nullptr;
  std::array<std::uint8_t, kMaxPrecision * kMaxFieldDegree> dig{};
  std::int8_t certified = 0;

  bool operator==(const DVRElem& other) const;
  bool operator!=(const DVRElem& other) const { return !(*this == other); }
};

DVRElem dvr_zero(const DVRCtx& ctx);
DVRElem dvr_one(const DVRCtx& ctx);
DVRElem dvr_uniformizer(const DVRCtx& ctx);

/// Builds an element from pi-adic digits (each a residue-field coefficient
/// list; length <= N, padded with zeros above).
DVRElem dvr_from_digits(const DVRCtx& ctx, const std::vector<std::vector<long>>& digits);

/// Convenience for d = 1: digits as plain integers.
DVRElem dvr_from_ints(const DVRCtx& ctx, const std::vector<long>& digits);

DVRElem dvr_add(const DVRElem& a, const DVRElem& b);
DVRElem dvr_sub(const DVRElem& a, const DVRElem& b);
DVRElem dvr_neg(const DVRElem& a);
DVRElem dvr_mul(const DVRElem& a, const DVRElem& b);

/// pi-adic valuation: least digit index with a nonzero entry, or N for the
/// zero element (meaning ">= N; indistinguishable from 0 at this precision").
int dvr_val(const DVRElem& a);

/// Exact division by pi^e (digit shift). Requires 0 <= e <= dvr_val(a);
/// the result is certified to e fewer digits. Throws InexactDivision.
DVRElem dvr_divide_by_uniformizer_power(const DVRElem& a, int e);

/// Reduction mod pi: digit 0. Throws UncertifiedRead when no digit of the
/// argument is certified.
FFElem dvr_reduce(const DVRElem& a);

bool dvr_is_unit(const DVRElem& a);
bool dvr_is_zero(const DVRElem& a);

/// a^n by square-and-multiply, exact in O/pi^N. n = 0 gives 1 for any a;
/// otherwise the base must be a unit (NonUnitBase).
DVRElem dvr_unit_pow(const DVRElem& a, std::uint64_t n);

/// Inverse of a unit (Newton lift of the residue inverse).
DVRElem dvr_unit_inv(const DVRElem& a);

/// Digit access / formatting.
FFElem dvr_digit(const DVRElem& a, int i);
std::vector<std::vector<long>> dvr_digits(const DVRElem& a);
std::string dvr_to_string(const DVRElem& a);
int dvr_cmp(const DVRElem& a, const DVRElem& b);  // digit lex, low first

}  // namespace modpll

#endif  // MODPLL_DVR_HPP
