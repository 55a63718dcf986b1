#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffc/algebra.hpp"
#include "ffc/base.hpp"
#include "ffc/spectrum.hpp"

namespace ffc {

/// A function on δX, one exact complex rational per spectrum point.
struct SpectrumFunc {
  std::vector<Complex> values;

  int size() const { return static_cast<int>(values.size()); }
  const Complex& operator[](int i) const { return values[i]; }
  Complex& operator[](int i) { return values[i]; }

  bool is_real() const {
    for (const auto& v : values)
      if (!v.is_real()) return false;
    return true;
  }

  friend bool operator==(const SpectrumFunc& a, const SpectrumFunc& b) {
    return a.values == b.values;
  }
};

inline Rat sup_norm_sq(const SpectrumFunc& g) {
  Rat best = 0;
  for (const auto& v : g.values) best = std::max(best, v.abs_sq());
  return best;
}

/// The unique continuous extension f^ of an algebra member to δX, with
/// f^ ∘ e = f. The defining intersection ∩_{A∈p} cl(f(A)) collapses to the
/// value of f on the block of p, which is checked here.
inline SpectrumFunc extend(const SpectrumSpace& sp, const Func& f) {
  const Algebra& a = sp.algebra;
  require(f.size() == a.size(), "function defined on the wrong ground set");
  require(contains(a, f), "extend: function is not in the algebra");
  SpectrumFunc out;
  out.values.reserve(sp.point_count());
  for (int p = 0; p < sp.point_count(); ++p) {
    const Mask blk = sp.point_block[p];
    const Complex v = f[lowest_bit(blk)];
    for_each_bit(blk, [&](int x) {
      ensure(f[x] == v, "extension value not a singleton on a block");
    });
    out.values.push_back(v);
  }
  for (int x = 0; x < a.size(); ++x)
    ensure(out[sp.eval[x]] == f[x], "extension does not restrict to f");
  return out;
}

/// g ∘ e, the pullback of a spectrum function to the ground set. Always lands
/// in the algebra; the constructive inverse of extend.
inline Func pullback(const SpectrumSpace& sp, const SpectrumFunc& g) {
  require(g.size() == sp.point_count(), "spectrum function of the wrong size");
  Func f(std::vector<Complex>(sp.algebra.size(), Complex(0)));
  for (int x = 0; x < sp.algebra.size(); ++x) f[x] = g[sp.eval[x]];
  return f;
}

/// Verifies that f -> f^ is an isometric *-isomorphism onto the functions on
/// δX: exactly linear, multiplicative, conjugation-preserving, sup-norm
/// preserving, and surjective (the algebra dimension equals |δX|, and every
/// spectrum function is the extension of its pullback).
inline Report gamma_check(const SpectrumSpace& sp) {
  const Algebra& a = sp.algebra;
  Report rep;

  // deterministic sample: constants, generators, indicators and their mixes
  std::vector<Func> sample;
  sample.push_back(func_const(a.size(), Complex(1)));
  sample.push_back(func_const(a.size(), Complex(Rat(0), Rat(1))));
  for (const auto& [name, g] : a.generators) sample.push_back(g);
  for (int b = 0; b < a.dim(); ++b) sample.push_back(block_indicator(a, b));
  if (sample.size() >= 2)
    sample.push_back(sample[0] - scale(Complex(Rat(1, 2)), sample.back()));

  bool lin = true, mul = true, cnj = true, iso = true;
  for (const Func& f : sample) {
    if (!contains(a, f)) continue;
    iso = iso && sup_norm_sq(f) == sup_norm_sq(extend(sp, f));
    cnj = cnj && extend(sp, conj(f)) == SpectrumFunc{[&] {
            auto v = extend(sp, f).values;
            for (auto& z : v) z = z.conj();
            return v;
          }()};
    for (const Func& g : sample) {
      if (!contains(a, g)) continue;
      const auto ef = extend(sp, f), eg = extend(sp, g);
      auto sum = ef, prod = ef;
      for (int p = 0; p < sp.point_count(); ++p) {
        sum[p] = ef[p] + eg[p];
        prod[p] = ef[p] * eg[p];
      }
      lin = lin && extend(sp, f + g) == sum;
      mul = mul && extend(sp, f * g) == prod;
    }
  }
  detail::space_item(rep, "gamma_linear", lin, "additivity failed on a sample pair");
  detail::space_item(rep, "gamma_multiplicative", mul, "multiplicativity failed on a sample pair");
  detail::space_item(rep, "gamma_conjugation", cnj, "conjugation not preserved");
  detail::space_item(rep, "gamma_isometric", iso, "sup norm not preserved");

  bool surj = a.dim() == sp.point_count();
  for (int p = 0; p < sp.point_count() && surj; ++p) {
    SpectrumFunc target;
    target.values.assign(sp.point_count(), Complex(0));
    target[p] = Complex(1);
    surj = extend(sp, pullback(sp, target)) == target;
  }
  detail::space_item(rep, "gamma_surjective", surj, "a spectrum function has no preimage");

  detail::space_item(rep, "gamma_unital",
                     extend(sp, func_const(a.size(), Complex(1))).values ==
                         std::vector<Complex>(sp.point_count(), Complex(1)),
                     "unit not preserved");
  return rep;
}

/// { x : |g(p) - g(e(x))| <= r }, which is always a member of p.
inline Mask rset(const SpectrumSpace& sp, int point, const SpectrumFunc& g, const Rat& r) {
  require(r > 0, "rset radius must be positive");
  require(point >= 0 && point < sp.point_count(), "no such spectrum point");
  require(g.size() == sp.point_count(), "spectrum function of the wrong size");
  Mask out = 0;
  const Rat rsq = r * r;
  for (int x = 0; x < sp.algebra.size(); ++x)
    if ((g[point] - g[sp.eval[x]]).abs_sq() <= rsq) out |= bit(x);
  ensure(subset_of(sp.point_block[point], out), "rset is not a member of the point");
  return out;
}

// ---------------------------------------------------------------------------
// constructive approximation: realizing a spectrum function as an extension
// ---------------------------------------------------------------------------

struct BumpChoice {
  int point = -1;     // the point whose level forced this bump
  Mask support = 0;   // block of the point
  Rat height;         // k/n
};

struct ApproxLevel {
  int k = 0;
  Rat lo, hi;                    // I_k = [lo, hi]
  Mask a_set = 0;                // A_k ⊆ X
  PointSet c_set = 0;            // C_k ⊆ δX
  std::vector<BumpChoice> bumps;
};

/// One run of the level construction: n with 1/n <= r/3, levels I_k, sets
/// A_k and C_k, the chosen bump functions, and the exact achieved error.
struct CoreTrace {
  Rat radius;
  int n = 0;
  std::vector<ApproxLevel> levels;
  Rat achieved;  // sup |f - g∘e|, exact (real targets)
};

struct ApproxTrace {
  enum class Mode { core, constant, affine, complex };
  Mode mode = Mode::core;
  Rat radius;
  std::vector<CoreTrace> cores;  // one per core run; two for complex targets
  Rat achieved_sq;               // sup |f^ - g|^2, exact
};

struct ApproxResult {
  Func f;
  ApproxTrace trace;
};

/// Core path of the approximation: for positive real g with sup norm 1 and
/// r > 0, builds f in the algebra with |f(x) - g(e(x))| <= r everywhere.
/// Levels I_k = [(k-1)/n, k/n] with n minimal for 1/n <= r/3; each point p
/// with g(p) in I_k contributes the bump (k/n)·1_{block(p)}, supported inside
/// A_k; f is the join of all bumps.
inline std::pair<Func, CoreTrace> approximate_core(const SpectrumSpace& sp,
                                                   const SpectrumFunc& g, const Rat& r) {
  const Algebra& alg = sp.algebra;
  require(r > 0, "approximation radius must be positive");
  require(g.size() == sp.point_count(), "spectrum function of the wrong size");
  require(g.is_real(), "core approximation path expects a real target");
  Rat mx = 0;
  for (const auto& v : g.values) {
    require_domain(v.re >= 0, "core approximation path expects a positive target");
    mx = std::max(mx, v.re);
  }
  require_domain(mx == 1, "core approximation path expects sup norm 1");

  const Rat levels_needed = Rat(3) / r;
  require(levels_needed <= 1000000, "radius too small for the level construction");
  const int n = rat_ceil_div(levels_needed);
  ensure(Rat(1, n) <= r / 3, "level count does not satisfy 1/n <= r/3");

  CoreTrace trace;
  trace.radius = r;
  trace.n = n;

  Func f = func_const(alg.size(), Complex(0));
  for (int k = 1; k <= n; ++k) {
    ApproxLevel lev;
    lev.k = k;
    lev.lo = Rat(k - 1, n);
    lev.hi = Rat(k, n);
    for (int x = 0; x < alg.size(); ++x) {
      const Rat v = g[sp.eval[x]].re;
      if (Rat(k - 2, n) < v && v < Rat(k + 1, n)) lev.a_set |= bit(x);
    }
    for (int p = 0; p < sp.point_count(); ++p)
      if (lev.lo <= g[p].re && g[p].re <= lev.hi) lev.c_set |= bit(p);

    Func fk = func_const(alg.size(), Complex(0));
    for_each_bit(lev.c_set, [&](int p) {
      const Mask blk = sp.point_block[p];
      ensure(subset_of(blk, lev.a_set), "bump support escapes A_k");
      BumpChoice bump{p, blk, Rat(k, n)};
      fk = func_join(fk, scale(Complex(bump.height), indicator(blk, alg.size())));
      lev.bumps.push_back(std::move(bump));
    });
    f = func_join(f, fk);
    trace.levels.push_back(std::move(lev));
  }

  // levels three or more apart have disjoint A_k
  for (int k = 0; k < n; ++k)
    for (int j = k + 3; j < n; ++j)
      ensure((trace.levels[k].a_set & trace.levels[j].a_set) == 0,
             "A_k disjointness violated");

  ensure(contains(alg, f), "approximation left the algebra");
  Rat achieved = 0;
  for (int x = 0; x < alg.size(); ++x) {
    Rat d = f[x].re - g[sp.eval[x]].re;
    if (d < 0) d = -d;
    achieved = std::max(achieved, d);
  }
  trace.achieved = achieved;
  ensure(achieved <= r, "approximation bound violated");
  return {std::move(f), std::move(trace)};
}

namespace detail {
// real targets: constants are returned directly; anything else is shifted and
// scaled onto the positive sup-norm-1 core path and mapped back
inline std::pair<Func, ApproxTrace> approximate_real(const SpectrumSpace& sp,
                                                     const SpectrumFunc& g, const Rat& r) {
  const Algebra& alg = sp.algebra;
  ApproxTrace trace;
  trace.radius = r;

  Rat lo = g[0].re, hi = g[0].re;
  for (const auto& v : g.values) {
    lo = std::min(lo, v.re);
    hi = std::max(hi, v.re);
  }
  if (lo == hi) {
    trace.mode = ApproxTrace::Mode::constant;
    trace.achieved_sq = 0;
    return {func_const(alg.size(), Complex(lo)), std::move(trace)};
  }
  if (lo >= 0 && hi == 1) {
    auto [f, core] = approximate_core(sp, g, r);
    trace.mode = ApproxTrace::Mode::core;
    trace.achieved_sq = core.achieved * core.achieved;
    trace.cores.push_back(std::move(core));
    return {std::move(f), std::move(trace)};
  }
  const Rat span = hi - lo;
  SpectrumFunc h = g;
  for (auto& v : h.values) v = Complex((v.re - lo) / span);
  auto [fh, core] = approximate_core(sp, h, r / span);
  Func f = fh;
  for (auto& v : f.values) v = Complex(lo + span * v.re);
  trace.mode = ApproxTrace::Mode::affine;
  const Rat achieved = span * core.achieved;
  trace.achieved_sq = achieved * achieved;
  trace.cores.push_back(std::move(core));
  return {std::move(f), std::move(trace)};
}
}  // namespace detail

/// Approximation of an arbitrary target g on δX within radius r: returns
/// f in the algebra with sup |f^ - g| <= r (compared exactly through squared
/// magnitudes). Real targets reduce to the core path by an affine change;
/// complex targets split into real and imaginary runs at radius r/2.
inline ApproxResult approximate(const SpectrumSpace& sp, const SpectrumFunc& g, const Rat& r) {
  require(r > 0, "approximation radius must be positive");
  require(g.size() == sp.point_count(), "spectrum function of the wrong size");

  ApproxResult res;
  if (g.is_real()) {
    auto [f, trace] = detail::approximate_real(sp, g, r);
    res.f = std::move(f);
    res.trace = std::move(trace);
  } else {
    SpectrumFunc gre = g, gim = g;
    for (int p = 0; p < g.size(); ++p) {
      gre[p] = Complex(g[p].re);
      gim[p] = Complex(g[p].im);
    }
    auto [fr, tr] = detail::approximate_real(sp, gre, r / 2);
    auto [fi, ti] = detail::approximate_real(sp, gim, r / 2);
    res.f = fr + scale(Complex(Rat(0), Rat(1)), fi);
    res.trace.mode = ApproxTrace::Mode::complex;
    res.trace.radius = r;
    for (auto& c : tr.cores) res.trace.cores.push_back(std::move(c));
    for (auto& c : ti.cores) res.trace.cores.push_back(std::move(c));
  }

  const SpectrumFunc ext = extend(sp, res.f);
  Rat achieved_sq = 0;
  for (int p = 0; p < sp.point_count(); ++p)
    achieved_sq = std::max(achieved_sq, (ext[p] - g[p]).abs_sq());
  res.trace.achieved_sq = achieved_sq;
  ensure(achieved_sq <= r * r, "approximation bound violated");
  return res;
}

/// Dense-image factorization: a surjection ε: X -> Y induces the algebra of
/// functions pulled back from Y; its spectrum is Y itself, via a bijection
/// homeo with homeo ∘ e = ε.
struct DenseImageResult {
  Algebra induced;
  std::vector<int> point_to_y;  // homeomorphism δX -> Y (index into y_labels)
  std::vector<std::string> y_labels;
};

inline DenseImageResult dense_image_factorization(const GroundSet& ground,
                                                  const std::vector<std::string>& y_labels,
                                                  const std::vector<int>& eps) {
  const int n = ground.size();
  const int m = static_cast<int>(y_labels.size());
  require(m >= 1, "target space must be non-empty");
  require(static_cast<int>(eps.size()) == n, "one image per ground element expected");
  std::vector<bool> hit(m, false);
  for (int x = 0; x < n; ++x) {
    require(eps[x] >= 0 && eps[x] < m, "image index out of range");
    hit[eps[x]] = true;
  }
  for (bool h : hit) require_domain(h, "image not dense");

  // the induced algebra is generated by one function separating the fibers
  Func gen(std::vector<Complex>(n, Complex(0)));
  for (int x = 0; x < n; ++x) gen[x] = Complex(eps[x]);
  Algebra induced = make_algebra(ground, {{"eps", gen}});
  ensure(induced.dim() == m, "fiber partition size mismatch");

  DenseImageResult out{std::move(induced), std::vector<int>(), y_labels};
  const SpectrumSpace sp = build_spectrum(out.induced);
  out.point_to_y.assign(sp.point_count(), -1);
  for (int p = 0; p < sp.point_count(); ++p)
    out.point_to_y[p] = eps[lowest_bit(sp.point_block[p])];
  // homeo ∘ e = ε, and the map is a bijection (continuity is automatic on
  // finite discrete spaces)
  for (int x = 0; x < n; ++x)
    ensure(out.point_to_y[sp.eval[x]] == eps[x], "factorization does not commute");
  std::vector<bool> used(m, false);
  for (int y : out.point_to_y) {
    ensure(!used[y], "factorization map not injective");
    used[y] = true;
  }
  for (bool u : used) ensure(u, "factorization map not surjective");
  return out;
}

}  // namespace ffc
