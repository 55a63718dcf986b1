#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffc/algebra.hpp"
#include "ffc/base.hpp"
#include "ffc/extension.hpp"
#include "ffc/filters.hpp"
#include "ffc/spectrum.hpp"

namespace ffc {

/// A closed proper ideal of the algebra, represented extensionally by its
/// non-empty vanishing set (a union of blocks): f ∈ I iff f = 0 there.
/// Closedness is automatic in finite dimension; properness is the
/// non-emptiness of the vanishing set. The zero ideal vanishes everywhere.
struct Ideal {
  Mask vanishing = 0;  // saturated, non-empty

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.vanishing == b.vanishing;
  }
};

inline Ideal make_ideal(const Algebra& a, Mask vanishing) {
  require(vanishing != 0, "ideal must be proper: non-empty vanishing set");
  require(subset_of(vanishing, a.ground.universe()), "vanishing set outside the ground set");
  require(a.partition.is_saturated(vanishing), "vanishing set must be a union of blocks");
  return Ideal{vanishing};
}

inline bool is_zero_ideal(const Algebra& a, const Ideal& i) {
  return i.vanishing == a.ground.universe();
}

inline std::vector<int> vanishing_blocks(const Algebra& a, const Ideal& i) {
  std::vector<int> out;
  for (int b = 0; b < a.dim(); ++b)
    if (subset_of(a.partition.blocks[b], i.vanishing)) out.push_back(b);
  return out;
}

inline bool ideal_contains(const Algebra& a, const Ideal& i, const Func& f) {
  require(f.size() == a.size(), "function defined on the wrong ground set");
  if (!contains(a, f)) return false;
  bool ok = true;
  for_each_bit(i.vanishing, [&](int x) {
    if (!f[x].is_zero()) ok = false;
  });
  return ok;
}

/// Z(A): the ideal of algebra members vanishing identically on A. The
/// vanishing set is the saturation of A; saturation X gives the zero ideal.
inline Ideal annihilator(const Algebra& a, Mask A) {
  require(A != 0, "annihilator of the empty set");
  require(subset_of(A, a.ground.universe()), "subset outside the ground set");
  return Ideal{a.partition.saturation(A)};
}

/// B(I) = { X(f,r) : f ∈ I, r > 0 }: the finitely many distinct level sets of
/// ideal members; exactly the saturated supersets of the vanishing set, with
/// the vanishing set itself as the minimal element.
inline SetFamily ideal_base(const Algebra& a, const Ideal& i) {
  require(a.dim() <= 16, "ideal base listing capped at 16 blocks");
  std::vector<Mask> sets;
  const auto& blocks = a.partition.blocks;
  std::vector<int> free_blocks;
  for (int b = 0; b < a.dim(); ++b)
    if ((blocks[b] & i.vanishing) == 0) free_blocks.push_back(b);
  for (Mask s = 0; s < (Mask{1} << free_blocks.size()); ++s) {
    Mask set = i.vanishing;
    for (std::size_t j = 0; j < free_blocks.size(); ++j)
      if (s & bit(static_cast<int>(j))) set |= blocks[free_blocks[j]];
    sets.push_back(set);
  }
  std::sort(sets.begin(), sets.end());
  return SetFamily{std::move(sets)};
}

/// The F-filter generated by B(I); its generator is the minimal base element.
inline FFilter filter_from_ideal(const Algebra& a, const Ideal& i) {
  return make_F_filter(a, i.vanishing);
}

/// { f : X(f,r) ∈ φ for every r > 0 } = { f : Z(f) ⊇ generator }; the inverse
/// of filter_from_ideal.
inline Ideal ideal_from_filter(const Algebra& a, const FFilter& phi) {
  return make_ideal(a, phi.generator);
}

/// The three equivalent descriptions of ideal membership for f in the
/// algebra: (i) f ∈ I, (ii) f^ vanishes on the closure of the associated
/// filter, (iii) every critical level set of f lies in the filter. The three
/// verdicts are checked to agree.
inline std::array<bool, 3> three_cond_check(const SpectrumSpace& sp, const Ideal& i,
                                            const Func& f) {
  const Algebra& a = sp.algebra;
  require(f.size() == a.size(), "function defined on the wrong ground set");
  require(contains(a, f), "three_cond_check: function is not in the algebra");

  const bool c1 = ideal_contains(a, i, f);

  const FFilter phi = filter_from_ideal(a, i);
  const PointSet cl = filter_closure(sp, phi);
  const SpectrumFunc ext = extend(sp, f);
  bool c2 = true;
  for_each_bit(cl, [&](int p) {
    if (!ext[p].is_zero()) c2 = false;
  });

  bool c3 = true;
  for (const Rat& rsq : critical_radii_sq(f))
    if (!filter_contains(phi, level_set_sq(f, rsq))) c3 = false;

  ensure(c1 == c2 && c2 == c3, "the three ideal-membership conditions disagree");
  return {c1, c2, c3};
}

/// k = |f|^2 / max(|f|^2, 1) pointwise; ranges in [0,1], has the zero set of
/// f, and stays in the algebra with f.
inline Func k_truncation(const Func& f) {
  Func out = f;
  for (auto& v : out.values) {
    const Rat m = v.abs_sq();
    v = Complex(m / std::max(m, Rat(1)));
  }
  return out;
}

/// A nonzero multiplicative linear functional; evaluation on one block.
struct Character {
  int block = -1;
};

inline Complex apply_character(const Algebra& a, const Character& chi, const Func& f) {
  require(contains(a, f), "character applied outside the algebra");
  return block_value(a, f, chi.block);
}

/// All characters of the algebra, found by solving the multiplicativity and
/// linearity constraints on the block-indicator basis. On that basis a
/// character takes values in {0,1} (it must square to itself), orthogonality
/// kills all but one indicator, and nonzeroness forces exactly one; the
/// {0,1} assignments are checked exhaustively rather than assumed.
inline std::vector<Character> characters(const Algebra& a) {
  const int b = a.dim();
  require(b <= 16, "character enumeration capped at 16 blocks");
  std::vector<Character> out;
  for (Mask assign = 0; assign < (Mask{1} << b); ++assign) {
    // candidate functional: indicator e_k -> 1 iff bit k set, extended
    // linearly; multiplicative iff c_j c_k = [j == k] c_k for all pairs
    bool mult = true;
    for (int j = 0; j < b && mult; ++j)
      for (int k = 0; k < b && mult; ++k) {
        const int cj = (assign >> j) & 1, ck = (assign >> k) & 1;
        const int prod_val = (j == k) ? ck : 0;  // e_j e_k on the basis
        if (cj * ck != prod_val) mult = false;
      }
    if (!mult || assign == 0) continue;
    ensure(popcount(assign) == 1, "character supported on more than one block");
    out.push_back(Character{lowest_bit(assign)});
  }
  ensure(static_cast<int>(out.size()) == b, "character count differs from block count");
  return out;
}

/// The bijection of characters onto δX: each character maps to the
/// ultrafilter generated by the level sets of its kernel. Consistency of
/// kernel = maximal ideal = block ultrafilter is asserted.
inline std::vector<int> spectrum_homeo(const Algebra& a) {
  const std::vector<Character> chars = characters(a);
  std::vector<int> out;
  std::vector<bool> used(a.dim(), false);
  for (const Character& chi : chars) {
    // ker chi = members vanishing on the block of chi: a maximal ideal
    const Ideal ker = make_ideal(a, a.partition.blocks[chi.block]);
    const FFilter phi = filter_from_ideal(a, ker);
    ensure(phi.generator == a.partition.blocks[chi.block],
           "kernel filter is not the block ultrafilter");
    ensure(is_F_filter_generator(a, phi.generator), "kernel filter is not an F-filter");
    const int point = a.partition.block_of[lowest_bit(phi.generator)];
    ensure(!used[point], "two characters map to one spectrum point");
    used[point] = true;
    out.push_back(point);
  }
  return out;
}

inline std::vector<Ideal> maximal_ideals(const Algebra& a) {
  std::vector<Ideal> out;
  for (int b = 0; b < a.dim(); ++b) out.push_back(Ideal{a.partition.blocks[b]});
  return out;
}

/// I equals the intersection of the maximal ideals containing it, computed
/// exhaustively over the b maximal ideals.
inline bool maximal_ideal_intersection(const Algebra& a, const Ideal& i) {
  Mask inter = 0;  // vanishing set of the intersection ideal
  for (const Ideal& m : maximal_ideals(a)) {
    // M ⊇ I iff every member of I vanishes on M's block, i.e. the block lies
    // inside the vanishing set of I
    if (subset_of(m.vanishing, i.vanishing)) inter |= m.vanishing;
  }
  return inter == i.vanishing;
}

}  // namespace ffc
