#pragma once

#include <utility>
#include <vector>

#include "ffc/algebra.hpp"
#include "ffc/base.hpp"
#include "ffc/extension.hpp"
#include "ffc/spectrum.hpp"

namespace ffc {

/// F1 ⊆ F2 holds iff every coarse generator is constant on the fine blocks,
/// i.e. the fine partition refines the coarse one.
inline bool is_subalgebra(const Algebra& coarse, const Algebra& fine) {
  require(coarse.ground == fine.ground, "algebras on different ground sets");
  for (const auto& [name, g] : coarse.generators)
    if (!contains(fine, g)) return false;
  return true;
}

/// A nested pair of algebras on one ground set: coarse ⊆ fine.
struct AlgebraPair {
  Algebra coarse;  // F1
  Algebra fine;    // F2
};

inline AlgebraPair make_algebra_pair(Algebra coarse, Algebra fine) {
  require(is_subalgebra(coarse, fine), "not a subalgebra pair");
  // refinement restated at partition level
  for (Mask blk : fine.partition.blocks)
    require(subset_of(blk, coarse.partition.saturation(bit(lowest_bit(blk)))),
            "fine partition does not refine the coarse one");
  return AlgebraPair{std::move(coarse), std::move(fine)};
}

/// The induced continuous surjection δ2X -> δ1X: each fine block goes to the
/// coarse block containing it. Satisfies e1 = F ∘ e2 pointwise.
inline std::vector<int> quotient_map(const AlgebraPair& pair) {
  const Algebra& c = pair.coarse;
  const Algebra& f = pair.fine;
  std::vector<int> out(f.dim(), -1);
  for (int p = 0; p < f.dim(); ++p) {
    const int q = c.partition.block_of[lowest_bit(f.partition.blocks[p])];
    ensure(subset_of(f.partition.blocks[p], c.partition.blocks[q]),
           "fine block crosses a coarse block");
    out[p] = q;
  }
  std::vector<bool> hit(c.dim(), false);
  for (int q : out) hit[q] = true;
  for (bool h : hit) ensure(h, "quotient map not surjective");
  for (int x = 0; x < f.size(); ++x)
    ensure(out[f.partition.block_of[x]] == c.partition.block_of[x],
           "quotient map does not factor the evaluations");
  return out;
}

/// The three equivalent relations between a fine point p and a coarse point
/// q: (i) q ⊆ p as filters, (ii) the quotient map sends p to q, (iii) all
/// coarse extensions agree at p and q. Agreement of the three is asserted.
inline std::array<bool, 3> surjpts_check(const AlgebraPair& pair, int p, int q) {
  const Algebra& c = pair.coarse;
  const Algebra& f = pair.fine;
  require(p >= 0 && p < f.dim(), "no such fine point");
  require(q >= 0 && q < c.dim(), "no such coarse point");

  // q ⊆ p: every member of ⟨coarse block⟩ is a member of ⟨fine block⟩
  const bool c1 = subset_of(f.partition.blocks[p], c.partition.blocks[q]);

  const bool c2 = quotient_map(pair)[p] == q;

  const SpectrumSpace sp_f = build_spectrum(f);
  const SpectrumSpace sp_c = build_spectrum(c);
  bool c3 = true;
  for (int b = 0; b < c.dim(); ++b) {
    const Func basis = block_indicator(c, b);
    if (extend(sp_f, basis)[p] != extend(sp_c, basis)[q]) c3 = false;
  }
  for (const auto& [name, g] : c.generators)
    if (extend(sp_f, g)[p] != extend(sp_c, g)[q]) c3 = false;

  ensure(c1 == c2 && c2 == c3, "the three point relations disagree");
  return {c1, c2, c3};
}

/// Builds δ2X/≈, the classes of equal coarse extensions, and verifies that
/// the induced bijection onto δ1X carries hat sets to hat sets both ways.
inline bool quotient_space_check(const AlgebraPair& pair) {
  const Algebra& c = pair.coarse;
  const Algebra& f = pair.fine;
  require(c.dim() <= 16, "quotient space check capped at 16 coarse blocks");
  const std::vector<int> qmap = quotient_map(pair);
  const SpectrumSpace sp_f = build_spectrum(f);
  const SpectrumSpace sp_c = build_spectrum(c);

  // p ≈ p' iff all coarse extensions agree; must coincide with equal images
  std::vector<std::vector<Complex>> profile(f.dim());
  for (int b = 0; b < c.dim(); ++b) {
    const SpectrumFunc ext = extend(sp_f, block_indicator(c, b));
    for (int p = 0; p < f.dim(); ++p) profile[p].push_back(ext[p]);
  }
  for (int p = 0; p < f.dim(); ++p)
    for (int p2 = 0; p2 < f.dim(); ++p2)
      if ((profile[p] == profile[p2]) != (qmap[p] == qmap[p2])) return false;

  // classes biject with δ1X
  std::vector<int> class_rep;
  for (int q = 0; q < c.dim(); ++q) {
    int rep = -1;
    for (int p = 0; p < f.dim(); ++p)
      if (qmap[p] == q) { rep = p; break; }
    if (rep < 0) return false;
    class_rep.push_back(rep);
  }

  // hat-set correspondence in both directions over coarse-saturated sets
  const Mask U = c.ground.universe();
  for (Mask s = 0; s < (Mask{1} << c.dim()); ++s) {
    Mask A = 0;
    for_each_bit(s, [&](int i) { A |= c.partition.blocks[i]; });
    if (!subset_of(A, U)) return false;
    PointSet quotient_image = 0;  // classes meeting the fine hat set
    for_each_bit(hat(sp_f, A), [&](int p) { quotient_image |= bit(qmap[p]); });
    PointSet fine_preimage = 0;  // fine points over the coarse hat set
    for (int p = 0; p < f.dim(); ++p)
      if (hat(sp_c, A) & bit(qmap[p])) fine_preimage |= bit(p);
    if (quotient_image != hat(sp_c, A)) return false;
    if (fine_preimage != hat(sp_f, A)) return false;
  }
  return true;
}

/// e is injective iff every block is a singleton iff every element and
/// neighborhood admit a separating function with values 1 and 0; the witness
/// search is explicit over the block-indicator candidates.
inline bool embedding_check(const Algebra& a) {
  bool singletons = true;
  for (Mask blk : a.partition.blocks)
    if (popcount(blk) != 1) singletons = false;

  bool witnesses = true;
  const Mask U = a.ground.universe();
  for (int x = 0; x < a.size() && witnesses; ++x) {
    // the binding neighborhood is {x}; a witness f has f(x)=1, f = 0 off it,
    // so it must be the indicator of a saturated subset of {x}
    if (U == bit(x)) continue;  // no proper neighborhood to separate from
    bool found = false;
    for (Mask blk : a.partition.blocks)
      if (subset_of(blk, bit(x))) found = true;
    witnesses = found;
  }

  const SpectrumSpace sp = build_spectrum(a);
  bool injective = true;
  for (int x = 0; x < a.size() && injective; ++x)
    for (int y = x + 1; y < a.size(); ++y)
      if (sp.eval[x] == sp.eval[y]) { injective = false; break; }

  ensure(singletons == witnesses && witnesses == injective,
         "embedding criteria disagree");
  return injective;
}

/// The generators separate points iff the algebra is everything, i.e. its
/// dimension is the ground size.
inline bool stone_weierstrass_check(const Algebra& a) {
  bool separates = true;
  for (int x = 0; x < a.size() && separates; ++x)
    for (int y = x + 1; y < a.size() && separates; ++y) {
      bool sep = false;
      for (const auto& [name, g] : a.generators)
        if (g[x] != g[y]) { sep = true; break; }
      if (!sep) separates = false;
    }
  const bool full = a.dim() == a.size();
  ensure(separates == full, "separation and dimension criteria disagree");
  return full;
}

/// Two spectra are homeomorphic iff the algebras are isometrically
/// *-isomorphic iff the block counts match; when they do, the block bijection
/// realizes the isomorphism, verified on the indicator basis.
inline bool gelfand_naimark_check(const Algebra& a1, const Algebra& a2) {
  if (a1.dim() != a2.dim()) return false;
  const int b = a1.dim();
  // basis map e_k -> e_k in canonical order: unital, multiplicative,
  // conjugation- and norm-preserving on the bases
  for (int j = 0; j < b; ++j)
    for (int k = 0; k < b; ++k) {
      const Func p1 = block_indicator(a1, j) * block_indicator(a1, k);
      const Func p2 = block_indicator(a2, j) * block_indicator(a2, k);
      const bool z1 = zero_set(p1) == a1.ground.universe();
      const bool z2 = zero_set(p2) == a2.ground.universe();
      ensure(z1 == z2, "basis products differ between isomorphic algebras");
    }
  Func one1 = func_const(a1.size(), Complex(0));
  for (int k = 0; k < b; ++k) one1 = one1 + block_indicator(a1, k);
  ensure(one1 == func_const(a1.size(), Complex(1)), "indicator basis does not sum to 1");
  return true;
}

}  // namespace ffc
