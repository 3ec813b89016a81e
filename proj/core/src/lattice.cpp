#include "modpll/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace modpll {

namespace {

// pi^k * a (digit up-shift, top digits fall off the precision window)
DVRElem shift_up(const DVRElem& a, int k) {
  const DVRCtx& ctx = *a.ctx;
  DVRElem r = dvr_zero(ctx);
  int d = ctx.residue().degree();
  int n = ctx.precision();
  for (int i = 0; i + k < n; ++i) {
    for (int j = 0; j < d; ++j) {
      r.dig[static_cast<size_t>(i + k) * d + static_cast<size_t>(j)] =
          a.dig[static_cast<size_t>(i) * d + static_cast<size_t>(j)];
    }
  }
  r.certified = static_cast<std::int8_t>(std::min(a.certified + k, n));
  return r;
}

DVRElem shift(const DVRElem& a, int k) {
  if (k >= 0) return shift_up(a, k);
  return dvr_divide_by_uniformizer_power(a, -k);
}

// zeroes every digit at position >= r; the result is exact class data
void truncate_mod_pi_pow(DVRElem& a, int r) {
  const DVRCtx& ctx = *a.ctx;
  int d = ctx.residue().degree();
  int n = ctx.precision();
  if (r < 0) r = 0;
  for (int i = std::max(r, 0); i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      a.dig[static_cast<size_t>(i) * d + static_cast<size_t>(j)] = 0;
    }
  }
  a.certified = static_cast<std::int8_t>(n);
}

void check_budget(const DVRCtx& ring, int window) {
  if (window < 0) {
    throw Error(ErrorKind::InvalidInput, "window must be >= 0");
  }
  if (ring.precision() < 2 * window + 1) {
    throw PrecisionBudgetExceeded("window " + std::to_string(window) + " needs precision >= " +
                                  std::to_string(2 * window + 1) + ", have " +
                                  std::to_string(ring.precision()));
  }
}

struct Hnf2 {
  int r = 0;
  int s = 0;
  DVRElem off;
};

// Triangular form of the lattice spanned by two vectors of O^2 (columns
// (x, y)): O pi^r e1 + O (off e1 + pi^s e2), off reduced mod pi^r.
Hnf2 hnf_from_vectors(const DVRCtx& ring, DVRElem x1, DVRElem y1, DVRElem x2, DVRElem y2) {
  int v1 = dvr_val(y1);
  int v2 = dvr_val(y2);
  // pivot on the y-coordinate of least valuation
  if (v2 < v1) {
    std::swap(x1, x2);
    std::swap(y1, y2);
    std::swap(v1, v2);
  }
  int s = v1;
  if (s >= ring.precision()) {
    throw Error(ErrorKind::Internal, "rank-deficient lattice span");
  }
  // scale the pivot so its y-coordinate is exactly pi^s
  DVRElem unit = dvr_divide_by_uniformizer_power(y1, s);
  DVRElem unit_inv = dvr_unit_inv(unit);
  DVRElem off = dvr_mul(x1, unit_inv);
  // eliminate y from the other vector
  DVRElem factor = dvr_divide_by_uniformizer_power(y2, s);
  DVRElem w = dvr_sub(x2, dvr_mul(factor, off));
  int r = dvr_val(w);
  if (r >= ring.precision()) {
    throw Error(ErrorKind::Internal, "rank-deficient lattice span");
  }
  truncate_mod_pi_pow(off, r);
  return Hnf2{r, s, off};
}

}  // namespace

DiagonalActionModule::DiagonalActionModule(UnitCharacter chi1, UnitCharacter chi2)
    : chi1_(std::move(chi1)),
      chi2_(std::move(chi2)),
      level_(congruence_level(chi1_, chi2_)),
      sigma_(sigma_class(chi1_, chi2_)) {
  for (int g = 0; g < chi1_.group().generator_count(); ++g) {
    diffs_.push_back(dvr_sub(chi1_.value(g), chi2_.value(g)));
    diff_vals_.push_back(dvr_val(diffs_.back()));
  }
}

LatticeBasis LatticeBasis::from_triangular(const DVRCtx& ring, int window, int r, int s,
                                           DVRElem off, int off_denom) {
  check_budget(ring, window);
  if (off.ctx != &ring) {
    throw Error(ErrorKind::InvalidInput, "off coefficient not in the given ring");
  }
  int n = ring.precision();
  // canonicalize: divide out the homothety so min(r, s, val(off)) = 0,
  // then reduce off mod pi^r; reduction can raise val(off), so iterate
  for (int guard = 0;; ++guard) {
    if (guard > 4 * n + 8) {
      throw Error(ErrorKind::Internal, "lattice canonicalization did not settle");
    }
    bool off_zero = dvr_is_zero(off);
    int vo = off_zero ? 0 : dvr_val(off) - off_denom;  // true valuation
    int j = off_zero ? std::min(r, s) : std::min({r, s, vo});
    if (j != 0) {
      r -= j;
      s -= j;
      off_denom += j;
    }
    if (!off_zero) {
      off = shift(off, -off_denom);
      off_denom = 0;
    } else {
      off_denom = 0;
    }
    truncate_mod_pi_pow(off, r);
    bool oz = dvr_is_zero(off);
    int vo2 = oz ? n : dvr_val(off);
    if (r >= 0 && s >= 0 && std::min({r, s, oz ? std::min(r, s) : vo2}) == 0) break;
  }
  LatticeBasis L;
  L.window_ = window;
  L.r_ = r;
  L.s_ = s;
  L.off_ = off;
  L.off_val_ = dvr_val(off);
  bool off_zero = dvr_is_zero(off);
  bool in_window = r <= 2 * window && s <= 2 * window &&
                   (off_zero || r + s - L.off_val_ <= 2 * window);
  if (!in_window) {
    throw Error(ErrorKind::InvalidInput, "homothety class does not meet the window: " + L.display());
  }
  return L;
}

bool LatticeBasis::operator==(const LatticeBasis& other) const {
  return r_ == other.r_ && s_ == other.s_ && dvr_cmp(off_, other.off_) == 0;
}

std::string LatticeBasis::display() const {
  std::ostringstream os;
  os << "L' = O*pi^" << r_ << " e1 + O*(off e1 + pi^" << s_ << " e2), off=" << dvr_to_string(off_);
  return os.str();
}

std::vector<LatticeBasis> canonical_window_candidates(const DVRCtx& ring, int window) {
  check_budget(ring, window);
  int bound = 2 * window;
  std::vector<FFElem> elems = ff_all_elements(ring.residue());
  std::uint64_t k = ring.residue().order();
  int d = ring.residue().degree();
  std::vector<LatticeBasis> out;
  for (int r = 0; r <= bound; ++r) {
    for (int s = 0; s <= bound; ++s) {
      // diagonal class
      if (std::min(r, s) == 0) {
        LatticeBasis L;
        L.window_ = window;
        L.r_ = r;
        L.s_ = s;
        L.off_ = dvr_zero(ring);
        L.off_val_ = ring.precision();
        out.push_back(L);
      }
      // off != 0: r digits, lexicographic (digit 0 most significant)
      std::uint64_t total = 1;
      for (int i = 0; i < r; ++i) total *= k;
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        DVRElem off = dvr_zero(ring);
        std::uint64_t v = idx;
        int vo = ring.precision();
        for (int pos = r - 1; pos >= 0; --pos) {
          const FFElem& digit = elems[v % k];
          v /= k;
          if (!ff_is_zero(digit)) vo = pos;
          for (int j = 0; j < d; ++j) {
            off.dig[static_cast<size_t>(pos) * d + static_cast<size_t>(j)] = digit.c[static_cast<size_t>(j)];
          }
        }
        if (std::min({r, s, vo}) != 0) continue;
        if (r + s - vo > bound) continue;
        LatticeBasis L;
        L.window_ = window;
        L.r_ = r;
        L.s_ = s;
        L.off_ = off;
        L.off_val_ = vo;
        out.push_back(L);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const LatticeBasis& a, const LatticeBasis& b) {
    if (a.r() != b.r()) return a.r() < b.r();
    if (a.s() != b.s()) return a.s() < b.s();
    return dvr_cmp(a.off(), b.off()) < 0;
  });
  return out;
}

bool is_stable(const LatticeBasis& lattice, const DiagonalActionModule& mod) {
  check_budget(mod.ring(), lattice.window());
  if (lattice.off().ctx != &mod.ring()) {
    throw Error(ErrorKind::Internal, "lattice and module live over different rings");
  }
  // g v1 = chi1(g) v1 always stays; g v2 - chi2(g) v2 = off (chi1-chi2)(g) e1
  // must land in O pi^r e1. val(off * diff) = val(off) + val(diff) capped at N,
  // and r <= 2c < N, so integer comparison of the cached valuations is exact.
  int n = mod.ring().precision();
  for (int g = 0; g < mod.generator_count(); ++g) {
    if (std::min(lattice.off_val() + mod.diff_val(g), n) < lattice.r()) return false;
  }
  return true;
}

std::vector<LatticeBasis> enumerate_stable_lattices(const DiagonalActionModule& mod, int window) {
  std::vector<LatticeBasis> out;
  for (const LatticeBasis& L : canonical_window_candidates(mod.ring(), window)) {
    if (is_stable(L, mod)) out.push_back(L);
  }
  return out;
}

ReductionExtension reduction_extension_direct(const LatticeBasis& lattice,
                                              const DiagonalActionModule& mod) {
  if (!is_stable(lattice, mod)) {
    throw NotStable("reduction of an unstable lattice: " + lattice.display());
  }
  // matrix of g on L'/pi L' in the basis (v1, v2): diagonal entries are the
  // residues of chi_i(g) (both 1), lower corner 0, upper corner the residue
  // of off (chi1-chi2)(g) / pi^r. The invariant line is spanned by v1-bar.
  std::vector<FFElem> cocycle;
  bool nonsplit = false;
  for (int g = 0; g < mod.generator_count(); ++g) {
    FFElem m00 = dvr_reduce(mod.chi1().value(g));
    FFElem m11 = dvr_reduce(mod.chi2().value(g));
    if (!ff_is_one(m00) || !ff_is_one(m11)) {
      throw Error(ErrorKind::Internal, "reduction matrix is not unipotent");
    }
    DVRElem corner = dvr_divide_by_uniformizer_power(dvr_mul(lattice.off(), mod.diff(g)),
                                                     lattice.r());
    FFElem sigma_g = dvr_reduce(corner);
    nonsplit = nonsplit || !ff_is_zero(sigma_g);
    cocycle.push_back(sigma_g);
  }
  ReductionExtension ext;
  if (!nonsplit) {
    ext.split = true;
    return ext;
  }
  ext.split = false;
  ext.class_line = normalize_line(ResidualHom(mod.group(), cocycle));
  return ext;
}

ReductionExtension sigma_from_lattice_proof_formula(const LatticeBasis& lattice,
                                                    const DiagonalActionModule& mod) {
  if (!is_stable(lattice, mod)) {
    throw NotStable("proof-formula path on an unstable lattice: " + lattice.display());
  }
  const DVRCtx& ring = mod.ring();
  int n = ring.precision();
  bool off_zero = dvr_is_zero(lattice.off());
  int vo = lattice.off_val();
  // smallest m with pi^m L0 inside L'; replacing L' by pi^-m L' realizes
  // "L inside L' but L not inside pi L'"
  int mstar = off_zero ? std::max(lattice.r(), lattice.s())
                       : std::max({lattice.r(), lattice.s(), lattice.r() + lattice.s() - vo});
  int R, S;
  DVRElem off = lattice.off();
  bool swapped = false;
  if (mstar == lattice.r()) {
    // pi^mstar e1 generates the image of L in L'/pi L'
    R = lattice.r();
    S = lattice.s();
  } else {
    // e1's image dies; swap the roles of e1 and e2 (and of chi1 and chi2),
    // which changes sigma by a sign. Re-triangularize in swapped coordinates,
    // where the spanning vectors read (0, pi^r) and (pi^s, off).
    swapped = true;
    Hnf2 h = hnf_from_vectors(ring, shift_up(dvr_one(ring), lattice.s()), off,
                              dvr_zero(ring), shift_up(dvr_one(ring), lattice.r()));
    R = h.r;
    S = h.s;
    off = h.off;
    if (R != mstar) {
      throw Error(ErrorKind::Internal, "swapped basis does not expose the invariant image");
    }
  }
  // L'' = pi^-R L' has basis e1, e3 = (off/pi^R) e1 + pi^(S-R) e2.
  // Scan for the least b > 0 with pi^b e3 in L0.
  bool ozero = dvr_is_zero(off);
  int voff = ozero ? n : dvr_val(off);
  int b = 0;
  for (int cand = 1; cand <= 2 * lattice.window() + 2; ++cand) {
    bool e1_ok = ozero || voff - R + cand >= 0;
    bool e2_ok = S - R + cand >= 0;
    if (e1_ok && e2_ok) {
      b = cand;
      break;
    }
  }
  if (b == 0) {
    throw Error(ErrorKind::Internal, "no b within the window bound");
  }
  // pi^b e3 = alpha e1 + beta e2 with alpha = pi^(b-R) off
  DVRElem alpha = ozero ? dvr_zero(ring) : shift(off, b - R);
  std::vector<FFElem> cocycle;
  bool nonsplit = false;
  for (int g = 0; g < mod.generator_count(); ++g) {
    DVRElem diff = swapped ? dvr_neg(mod.diff(g)) : mod.diff(g);
    DVRElem value = dvr_divide_by_uniformizer_power(dvr_mul(alpha, diff), b);
    FFElem sigma_g = dvr_reduce(value);
    nonsplit = nonsplit || !ff_is_zero(sigma_g);
    cocycle.push_back(sigma_g);
  }
  if (!nonsplit) {
    throw SplitReduction("proof-formula path is defined for nonsplit reductions only");
  }
  ReductionExtension ext;
  ext.split = false;
  ext.class_line = normalize_line(ResidualHom(mod.group(), cocycle));
  return ext;
}

VerificationReport verify_prop_class(const DiagonalActionModule& mod, int window,
                                     const std::vector<LatticeBasis>* candidates) {
  VerificationReport report;
  report.name = "prop31";
  std::vector<LatticeBasis> local;
  if (candidates == nullptr) {
    local = canonical_window_candidates(mod.ring(), window);
    candidates = &local;
  }
  ResidualHom sigma_line = normalize_line(mod.sigma());
  int bound = 2 * window;
  for (const LatticeBasis& L : *candidates) {
    // supplied candidate lists may come from a larger window
    if (L.r() > bound || L.s() > bound ||
        (!dvr_is_zero(L.off()) && L.r() + L.s() - L.off_val() > bound)) {
      continue;
    }
    if (!is_stable(L, mod)) continue;
    report.bump("stable");
    ReductionExtension direct = reduction_extension_direct(L, mod);
    if (direct.split) {
      report.bump("split");
      continue;
    }
    report.bump("nonsplit");
    ReductionExtension formula = sigma_from_lattice_proof_formula(L, mod);
    bool ok = (*direct.class_line == sigma_line) && (*formula.class_line == sigma_line);
    if (ok) {
      report.bump("matches");
    } else {
      report.fail(L.display() + " direct=" + hom_to_string(*direct.class_line) +
                  " formula=" + hom_to_string(*formula.class_line) +
                  " sigma=" + hom_to_string(sigma_line));
    }
  }
  if (report.count("matches") != report.count("nonsplit")) report.pass = false;
  return report;
}

}  // namespace modpll
