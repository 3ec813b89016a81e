#include "modpll/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace modpll {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

// polynomial remainder a mod b over F_p, both low-first, b monic
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& b, long p) {
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    long lead = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    if (lead != 0) {
      for (int i = 0; i <= db; ++i) {
        a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p * p) % p;
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// counts monic polynomials over F_p of degree deg dividing m (trial division)
bool has_monic_divisor_of_degree(const std::vector<long>& m, long p, int deg) {
  // iterate all p^deg monic candidates x^deg + c_{deg-1}x^{deg-1} + ... + c_0
  std::vector<long> cand(deg + 1, 0);
  cand[deg] = 1;
  std::uint64_t total = 1;
  for (int i = 0; i < deg; ++i) total *= static_cast<std::uint64_t>(p);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (int i = 0; i < deg; ++i) {
      cand[i] = static_cast<long>(v % static_cast<std::uint64_t>(p));
      v /= static_cast<std::uint64_t>(p);
    }
    if (poly_mod(m, cand, p).empty()) return true;
  }
  return false;
}

}  // namespace

FiniteFieldCtx::FiniteFieldCtx(long p, const std::vector<long>& modulus) : p_(p) {
  if (!is_prime(p) || p == 2) {
    throw Error(ErrorKind::InvalidInput, "residue characteristic must be an odd prime, got " + std::to_string(p));
  }
  if (p > 251) {
    throw Error(ErrorKind::InvalidInput, "residue characteristic too large for this tool (p <= 251)");
  }
  if (modulus.size() < 2 || modulus.size() > kMaxFieldDegree + 1) {
    throw Error(ErrorKind::InvalidInput, "modulus degree must be between 1 and " + std::to_string(kMaxFieldDegree));
  }
  degree_ = static_cast<int>(modulus.size()) - 1;
  modulus_.resize(modulus.size());
  for (size_t i = 0; i < modulus.size(); ++i) {
    modulus_[i] = ((modulus[i] % p) + p) % p;
  }
  if (modulus_.back() != 1) {
    throw Error(ErrorKind::InvalidInput, "modulus must be monic");
  }
  for (int deg = 1; deg <= degree_ / 2; ++deg) {
    if (has_monic_divisor_of_degree(modulus_, p, deg)) {
      throw Error(ErrorKind::InvalidInput, "modulus is reducible over F_p");
    }
  }
  order_ = 1;
  for (int i = 0; i < degree_; ++i) order_ *= static_cast<std::uint64_t>(p);
  // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
  red_.fill(0);
  for (int i = 0; i < degree_; ++i) {
    red_[i] = static_cast<std::uint8_t>((p - modulus_[i]) % p);
  }
}

FiniteFieldCtx FiniteFieldCtx::prime_field(long p) {
  return FiniteFieldCtx(p, {0, 1});
}

bool FFElem::operator==(const FFElem& other) const {
  if (ctx != other.ctx) {
    throw Error(ErrorKind::Internal, "comparing field elements from different contexts");
  }
  return c == other.c;
}

FFElem ff_zero(const FiniteFieldCtx& ctx) {
  FFElem r;
  r.ctx = &ctx;
  return r;
}

FFElem ff_one(const FiniteFieldCtx& ctx) {
  FFElem r = ff_zero(ctx);
  r.c[0] = 1;
  return r;
}

FFElem ff_from_int(const FiniteFieldCtx& ctx, long value) {
  FFElem r = ff_zero(ctx);
  long p = ctx.p();
  r.c[0] = static_cast<std::uint8_t>(((value % p) + p) % p);
  return r;
}

FFElem ff_from_coeffs(const FiniteFieldCtx& ctx, const std::vector<long>& coeffs) {
  if (static_cast<int>(coeffs.size()) > ctx.degree()) {
    throw Error(ErrorKind::InvalidInput, "coefficient list longer than field degree");
  }
  FFElem r = ff_zero(ctx);
  long p = ctx.p();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    r.c[i] = static_cast<std::uint8_t>(((coeffs[i] % p) + p) % p);
  }
  return r;
}

namespace {
void check_ctx(const FFElem& a, const FFElem& b) {
  if (a.ctx != b.ctx) {
    throw Error(ErrorKind::Internal, "mixing field elements from different contexts");
  }
}
}  // namespace

FFElem ff_add(const FFElem& a, const FFElem& b) {
  check_ctx(a, b);
  FFElem r = a;
  long p = a.ctx->p();
  for (int i = 0; i < a.ctx->degree(); ++i) {
    int s = a.c[i] + b.c[i];
    if (s >= p) s -= static_cast<int>(p);
    r.c[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

FFElem ff_sub(const FFElem& a, const FFElem& b) {
  check_ctx(a, b);
  FFElem r = a;
  long p = a.ctx->p();
  for (int i = 0; i < a.ctx->degree(); ++i) {
    int s = a.c[i] - b.c[i];
    if (s < 0) s += static_cast<int>(p);
    r.c[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

FFElem ff_neg(const FFElem& a) {
  FFElem r = a;
  long p = a.ctx->p();
  for (int i = 0; i < a.ctx->degree(); ++i) {
    r.c[i] = static_cast<std::uint8_t>(a.c[i] == 0 ? 0 : p - a.c[i]);
  }
  return r;
}

FFElem ff_mul(const FFElem& a, const FFElem& b) {
  check_ctx(a, b);
  const FiniteFieldCtx& ctx = *a.ctx;
  int d = ctx.degree();
  long p = ctx.p();
  if (d == 1) {
    FFElem r = ff_zero(ctx);
    r.c[0] = static_cast<std::uint8_t>((static_cast<std::uint32_t>(a.c[0]) * b.c[0]) % static_cast<std::uint32_t>(p));
    return r;
  }
  std::array<std::uint32_t, 2 * kMaxFieldDegree> prod{};
  for (int i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      prod[i + j] += static_cast<std::uint32_t>(a.c[i]) * b.c[j];
    }
  }
  // fold degrees >= d down using x^d = red_
  for (int i = 2 * d - 2; i >= d; --i) {
    std::uint32_t v = prod[i] % static_cast<std::uint32_t>(p);
    if (v == 0) continue;
    for (int j = 0; j < d; ++j) {
      prod[i - d + j] += v * ctx.red_[j];
    }
  }
  FFElem r = ff_zero(ctx);
  for (int i = 0; i < d; ++i) {
    r.c[i] = static_cast<std::uint8_t>(prod[i] % static_cast<std::uint32_t>(p));
  }
  return r;
}

bool ff_is_zero(const FFElem& a) {
  for (int i = 0; i < a.ctx->degree(); ++i) {
    if (a.c[i] != 0) return false;
  }
  return true;
}

bool ff_is_one(const FFElem& a) {
  if (a.c[0] != 1) return false;
  for (int i = 1; i < a.ctx->degree(); ++i) {
    if (a.c[i] != 0) return false;
  }
  return true;
}

FFElem ff_pow(const FFElem& a, std::uint64_t n) {
  FFElem result = ff_one(*a.ctx);
  FFElem base = a;
  while (n > 0) {
    if (n & 1) result = ff_mul(result, base);
    base = ff_mul(base, base);
    n >>= 1;
  }
  return result;
}

FFElem ff_inv(const FFElem& a) {
  if (ff_is_zero(a)) {
    throw ZeroInversion("attempted to invert 0 in F_" + std::to_string(a.ctx->order()));
  }
  return ff_pow(a, a.ctx->order() - 2);
}

std::vector<long> ff_coeffs(const FFElem& a) {
  std::vector<long> out(a.ctx->degree());
  for (int i = 0; i < a.ctx->degree(); ++i) out[i] = a.c[i];
  return out;
}

std::string ff_to_string(const FFElem& a) {
  if (a.ctx->degree() == 1) return std::to_string(a.c[0]);
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < a.ctx->degree(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(a.c[i]);
  }
  os << ']';
  return os.str();
}

int ff_cmp(const FFElem& a, const FFElem& b) {
  check_ctx(a, b);
  for (int i = a.ctx->degree() - 1; i >= 0; --i) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
  }
  return 0;
}

std::vector<FFElem> ff_all_elements(const FiniteFieldCtx& ctx) {
  std::vector<FFElem> out;
  out.reserve(ctx.order());
  std::vector<long> coeffs(ctx.degree(), 0);
  for (std::uint64_t idx = 0; idx < ctx.order(); ++idx) {
    std::uint64_t v = idx;
    for (int i = ctx.degree() - 1; i >= 0; --i) {
      coeffs[i] = static_cast<long>(v % static_cast<std::uint64_t>(ctx.p()));
      v /= static_cast<std::uint64_t>(ctx.p());
    }
    out.push_back(ff_from_coeffs(ctx, coeffs));
  }
  std::sort(out.begin(), out.end(), [](const FFElem& x, const FFElem& y) { return ff_cmp(x, y) < 0; });
  return out;
}

}  // namespace modpll
