#include "modpll/dvr.hpp"

#include <algorithm>
#include <sstream>

namespace modpll {

DVRCtx::DVRCtx(const FiniteFieldCtx& residue, int precision, DvrBackend backend)
    : residue_(&residue), precision_(precision), backend_(backend) {
  if (precision < 2 || precision > kMaxPrecision) {
    throw Error(ErrorKind::InvalidInput,
                "precision must be in [2, " + std::to_string(kMaxPrecision) + "], got " + std::to_string(precision));
  }
  if (backend == DvrBackend::ZModPN) {
    if (residue.degree() != 1) {
      throw Error(ErrorKind::InvalidInput, "zmodpn backend requires residue field F_p (degree 1)");
    }
    pn_ = 1;
    for (int i = 0; i < precision; ++i) {
      if (pn_ > (1ULL << 62) / static_cast<std::uint64_t>(residue.p())) {
        throw Error(ErrorKind::InvalidInput, "p^N overflows the zmodpn backend");
      }
      pn_ *= static_cast<std::uint64_t>(residue.p());
    }
  }
}

bool DVRElem::operator==(const DVRElem& other) const {
  if (ctx != other.ctx) {
    throw Error(ErrorKind::Internal, "comparing DVR elements from different contexts");
  }
  int nd = ctx->precision() * ctx->residue().degree();
  return std::equal(dig.begin(), dig.begin() + nd, other.dig.begin());
}

namespace {

void check_ctx(const DVRElem& a, const DVRElem& b) {
  if (a.ctx != b.ctx) {
    throw Error(ErrorKind::Internal, "mixing DVR elements from different contexts");
  }
}

std::uint64_t to_u64(const DVRElem& a) {
  const DVRCtx& ctx = *a.ctx;
  std::uint64_t v = 0;
  std::uint64_t base = 1;
  for (int i = 0; i < ctx.precision(); ++i) {
    v += base * a.dig[static_cast<size_t>(i)];
    base *= static_cast<std::uint64_t>(ctx.residue().p());
  }
  return v;
}

void from_u64(DVRElem& a, std::uint64_t v) {
  const DVRCtx& ctx = *a.ctx;
  std::uint64_t p = static_cast<std::uint64_t>(ctx.residue().p());
  for (int i = 0; i < ctx.precision(); ++i) {
    a.dig[static_cast<size_t>(i)] = static_cast<std::uint8_t>(v % p);
    v /= p;
  }
}

}  // namespace

DVRElem dvr_zero(const DVRCtx& ctx) {
  DVRElem r;
  r.ctx = &ctx;
  r.certified = static_cast<std::int8_t>(ctx.precision());
  return r;
}

DVRElem dvr_one(const DVRCtx& ctx) {
  DVRElem r = dvr_zero(ctx);
  r.dig[0] = 1;
  return r;
}

DVRElem dvr_uniformizer(const DVRCtx& ctx) {
  DVRElem r = dvr_zero(ctx);
  r.dig[static_cast<size_t>(ctx.residue().degree())] = 1;
  return r;
}

DVRElem dvr_from_digits(const DVRCtx& ctx, const std::vector<std::vector<long>>& digits) {
  if (static_cast<int>(digits.size()) > ctx.precision()) {
    throw Error(ErrorKind::InvalidInput, "more digits than the precision allows");
  }
  DVRElem r = dvr_zero(ctx);
  int d = ctx.residue().degree();
  for (size_t i = 0; i < digits.size(); ++i) {
    FFElem digit = ff_from_coeffs(ctx.residue(), digits[i]);
    for (int j = 0; j < d; ++j) {
      r.dig[i * static_cast<size_t>(d) + static_cast<size_t>(j)] = digit.c[static_cast<size_t>(j)];
    }
  }
  return r;
}

DVRElem dvr_from_ints(const DVRCtx& ctx, const std::vector<long>& digits) {
  std::vector<std::vector<long>> nested;
  nested.reserve(digits.size());
  for (long v : digits) nested.push_back({v});
  return dvr_from_digits(ctx, nested);
}

DVRElem dvr_add(const DVRElem& a, const DVRElem& b) {
  check_ctx(a, b);
  const DVRCtx& ctx = *a.ctx;
  DVRElem r = dvr_zero(ctx);
  r.certified = std::min(a.certified, b.certified);
  if (ctx.backend() == DvrBackend::ZModPN) {
    from_u64(r, (to_u64(a) + to_u64(b)) % ctx.pn());
    return r;
  }
  long p = ctx.residue().p();
  int nd = ctx.precision() * ctx.residue().degree();
  for (int i = 0; i < nd; ++i) {
    int s = a.dig[static_cast<size_t>(i)] + b.dig[static_cast<size_t>(i)];
    if (s >= p) s -= static_cast<int>(p);
    r.dig[static_cast<size_t>(i)] = static_cast<std::uint8_t>(s);
  }
  return r;
}

DVRElem dvr_sub(const DVRElem& a, const DVRElem& b) {
  check_ctx(a, b);
  const DVRCtx& ctx = *a.ctx;
  DVRElem r = dvr_zero(ctx);
  r.certified = std::min(a.certified, b.certified);
  if (ctx.backend() == DvrBackend::ZModPN) {
    from_u64(r, (to_u64(a) + ctx.pn() - to_u64(b)) % ctx.pn());
    return r;
  }
  long p = ctx.residue().p();
  int nd = ctx.precision() * ctx.residue().degree();
  for (int i = 0; i < nd; ++i) {
    int s = a.dig[static_cast<size_t>(i)] - b.dig[static_cast<size_t>(i)];
    if (s < 0) s += static_cast<int>(p);
    r.dig[static_cast<size_t>(i)] = static_cast<std::uint8_t>(s);
  }
  return r;
}

DVRElem dvr_neg(const DVRElem& a) {
  return dvr_sub(dvr_zero(*a.ctx), a);
}

DVRElem dvr_mul(const DVRElem& a, const DVRElem& b) {
  check_ctx(a, b);
  const DVRCtx& ctx = *a.ctx;
  DVRElem r = dvr_zero(ctx);
  // error terms: a = a0 + O(pi^ca), b = b0 + O(pi^cb) give
  // ab = a0 b0 + O(pi^{min(val a + cb, val b + ca)})
  {
    int n = ctx.precision();
    int va = std::min(dvr_val(a), static_cast<int>(a.certified));
    int vb = std::min(dvr_val(b), static_cast<int>(b.certified));
    int cert = std::min({va + b.certified, vb + a.certified, n});
    r.certified = static_cast<std::int8_t>(std::max(cert, 0));
  }
  if (ctx.backend() == DvrBackend::ZModPN) {
    unsigned __int128 prod = static_cast<unsigned __int128>(to_u64(a)) * to_u64(b);
    from_u64(r, static_cast<std::uint64_t>(prod % ctx.pn()));
    return r;
  }
  int n = ctx.precision();
  int d = ctx.residue().degree();
  long p = ctx.residue().p();
  if (d == 1) {
    for (int i = 0; i < n; ++i) {
      if (a.dig[static_cast<size_t>(i)] == 0) continue;
      std::uint32_t ai = a.dig[static_cast<size_t>(i)];
      for (int j = 0; j + i < n; ++j) {
        std::uint32_t s = r.dig[static_cast<size_t>(i + j)] + ai * b.dig[static_cast<size_t>(j)];
        r.dig[static_cast<size_t>(i + j)] = static_cast<std::uint8_t>(s % static_cast<std::uint32_t>(p));
      }
    }
    return r;
  }
  FFElem acc, da, db;
  for (int i = 0; i < n; ++i) {
    da.ctx = &ctx.residue();
    std::copy_n(a.dig.begin() + static_cast<size_t>(i) * d, d, da.c.begin());
    if (ff_is_zero(da)) continue;
    for (int j = 0; j + i < n; ++j) {
      db.ctx = &ctx.residue();
      std::copy_n(b.dig.begin() + static_cast<size_t>(j) * d, d, db.c.begin());
      if (ff_is_zero(db)) continue;
      acc.ctx = &ctx.residue();
      std::copy_n(r.dig.begin() + static_cast<size_t>(i + j) * d, d, acc.c.begin());
      acc = ff_add(acc, ff_mul(da, db));
      std::copy_n(acc.c.begin(), d, r.dig.begin() + static_cast<size_t>(i + j) * d);
    }
  }
  return r;
}

int dvr_val(const DVRElem& a) {
  const DVRCtx& ctx = *a.ctx;
  int d = ctx.residue().degree();
  for (int i = 0; i < ctx.precision(); ++i) {
    for (int j = 0; j < d; ++j) {
      if (a.dig[static_cast<size_t>(i) * d + static_cast<size_t>(j)] != 0) return i;
    }
  }
  return ctx.precision();
}

DVRElem dvr_divide_by_uniformizer_power(const DVRElem& a, int e) {
  const DVRCtx& ctx = *a.ctx;
  if (e < 0) {
    throw Error(ErrorKind::InvalidInput, "negative uniformizer exponent");
  }
  if (e > dvr_val(a)) {
    throw InexactDivision("valuation " + std::to_string(dvr_val(a)) + " < exponent " + std::to_string(e));
  }
  DVRElem r = dvr_zero(ctx);
  int d = ctx.residue().degree();
  int n = ctx.precision();
  for (int i = 0; i + e < n; ++i) {
    for (int j = 0; j < d; ++j) {
      r.dig[static_cast<size_t>(i) * d + static_cast<size_t>(j)] =
          a.dig[static_cast<size_t>(i + e) * d + static_cast<size_t>(j)];
    }
  }
  r.certified = static_cast<std::int8_t>(a.certified - e);
  return r;
}

FFElem dvr_reduce(const DVRElem& a) {
  if (a.certified < 1) {
    throw UncertifiedRead("residue digit is not certified after precision loss");
  }
  return dvr_digit(a, 0);
}

bool dvr_is_unit(const DVRElem& a) {
  int d = a.ctx->residue().degree();
  for (int j = 0; j < d; ++j) {
    if (a.dig[static_cast<size_t>(j)] != 0) return true;
  }
  return false;
}

bool dvr_is_zero(const DVRElem& a) {
  return dvr_val(a) == a.ctx->precision();
}

DVRElem dvr_unit_pow(const DVRElem& a, std::uint64_t n) {
  if (n == 0) return dvr_one(*a.ctx);
  if (!dvr_is_unit(a)) {
    throw NonUnitBase("base has positive valuation");
  }
  DVRElem result = dvr_one(*a.ctx);
  result.certified = a.certified;
  DVRElem base = a;
  while (n > 0) {
    if (n & 1) result = dvr_mul(result, base);
    base = dvr_mul(base, base);
    n >>= 1;
  }
  return result;
}

DVRElem dvr_unit_inv(const DVRElem& a) {
  if (!dvr_is_unit(a)) {
    throw NonUnitBase("cannot invert a non-unit");
  }
  const DVRCtx& ctx = *a.ctx;
  // Newton lift of the residue inverse: x <- x(2 - ax) doubles the number
  // of correct digits each round.
  DVRElem x = dvr_zero(ctx);
  FFElem r0 = ff_inv(dvr_digit(a, 0));
  for (int j = 0; j < ctx.residue().degree(); ++j) {
    x.dig[static_cast<size_t>(j)] = r0.c[static_cast<size_t>(j)];
  }
  DVRElem two = dvr_add(dvr_one(ctx), dvr_one(ctx));
  for (int correct = 1; correct < ctx.precision(); correct *= 2) {
    x = dvr_mul(x, dvr_sub(two, dvr_mul(a, x)));
  }
  x.certified = a.certified;
  return x;
}

FFElem dvr_digit(const DVRElem& a, int i) {
  FFElem r = ff_zero(a.ctx->residue());
  int d = a.ctx->residue().degree();
  std::copy_n(a.dig.begin() + static_cast<size_t>(i) * d, d, r.c.begin());
  return r;
}

std::vector<std::vector<long>> dvr_digits(const DVRElem& a) {
  std::vector<std::vector<long>> out;
  out.reserve(a.ctx->precision());
  for (int i = 0; i < a.ctx->precision(); ++i) {
    out.push_back(ff_coeffs(dvr_digit(a, i)));
  }
  return out;
}

std::string dvr_to_string(const DVRElem& a) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < a.ctx->precision(); ++i) {
    if (i) os << ',';
    os << ff_to_string(dvr_digit(a, i));
  }
  os << ']';
  return os.str();
}

int dvr_cmp(const DVRElem& a, const DVRElem& b) {
  check_ctx(a, b);
  int nd = a.ctx->precision() * a.ctx->residue().degree();
  for (int i = 0; i < nd; ++i) {
    if (a.dig[static_cast<size_t>(i)] != b.dig[static_cast<size_t>(i)]) {
      return a.dig[static_cast<size_t>(i)] < b.dig[static_cast<size_t>(i)] ? -1 : 1;
    }
  }
  return 0;
}

}  // namespace modpll
