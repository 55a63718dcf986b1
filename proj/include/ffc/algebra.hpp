#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffc/base.hpp"
#include "ffc/ground.hpp"
#include "ffc/rational.hpp"

namespace ffc {

/// A partition of the ground set into disjoint non-empty blocks covering it,
/// canonically ordered by least element index.
struct Partition {
  int n = 0;
  std::vector<Mask> blocks;
  std::vector<int> block_of;  // element index -> block index

  static Partition from_blocks(int n, std::vector<Mask> blocks) {
    Partition p;
    p.n = n;
    std::sort(blocks.begin(), blocks.end(),
              [](Mask a, Mask b) { return lowest_bit(a) < lowest_bit(b); });
    p.blocks = std::move(blocks);
    p.block_of.assign(n, -1);
    Mask seen = 0;
    for (int bi = 0; bi < static_cast<int>(p.blocks.size()); ++bi) {
      Mask blk = p.blocks[bi];
      require(blk != 0, "empty partition block");
      require((seen & blk) == 0, "overlapping partition blocks");
      seen |= blk;
      for_each_bit(blk, [&](int x) { p.block_of[x] = bi; });
    }
    require(seen == all_mask(n), "partition blocks do not cover the ground set");
    return p;
  }

  int block_count() const { return static_cast<int>(blocks.size()); }

  /// Smallest union of blocks containing A.
  Mask saturation(Mask a) const {
    Mask out = 0;
    for (Mask blk : blocks)
      if ((blk & a) != 0) out |= blk;
    return out;
  }

  /// Union of the blocks contained in A; the interior of A in the topology
  /// whose open sets are the unions of blocks.
  Mask interior(Mask a) const {
    Mask out = 0;
    for (Mask blk : blocks)
      if (subset_of(blk, a)) out |= blk;
    return out;
  }

  bool is_saturated(Mask a) const { return saturation(a) == a; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n == b.n && a.blocks == b.blocks;
  }
};

/// Kernel partition of a generator family: x ~ y iff no generator separates
/// them. With no generators the whole ground set is a single block.
inline Partition kernel_partition(const GroundSet& ground, const std::vector<Func>& gens) {
  const int n = ground.size();
  for (const auto& g : gens)
    require(g.size() == n, "generator defined on the wrong ground set");
  std::vector<int> cls(n, -1);
  std::vector<Mask> blocks;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    Mask blk = bit(x);
    cls[x] = static_cast<int>(blocks.size());
    for (int y = x + 1; y < n; ++y) {
      if (cls[y] >= 0) continue;
      bool same = true;
      for (const auto& g : gens)
        if (g[x] != g[y]) { same = false; break; }
      if (same) {
        blk |= bit(y);
        cls[y] = cls[x];
      }
    }
    blocks.push_back(blk);
  }
  return Partition::from_blocks(n, std::move(blocks));
}

/// The C*-subalgebra of bounded functions on the ground set generated by the
/// named generators together with the constants, in canonical form: its kernel
/// partition. A function belongs to the algebra iff it is constant on every
/// block.
struct Algebra {
  GroundSet ground;
  std::vector<std::pair<std::string, Func>> generators;
  Partition partition;

  int dim() const { return partition.block_count(); }
  int size() const { return ground.size(); }
};

inline Algebra make_algebra(GroundSet ground,
                            std::vector<std::pair<std::string, Func>> generators) {
  std::vector<Func> gs;
  gs.reserve(generators.size());
  for (auto& [name, f] : generators) {
    require(!name.empty(), "generator with empty name");
    gs.push_back(f);
  }
  Partition part = kernel_partition(ground, gs);
  return Algebra{std::move(ground), std::move(generators), std::move(part)};
}

/// Membership test: f lies in the algebra iff it is constant on each block.
inline bool contains(const Algebra& a, const Func& f) {
  require(f.size() == a.size(), "function defined on the wrong ground set");
  for (Mask blk : a.partition.blocks) {
    const int x0 = lowest_bit(blk);
    bool ok = true;
    for_each_bit(blk, [&](int x) {
      if (f[x] != f[x0]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline Func block_indicator(const Algebra& a, int block) {
  return indicator(a.partition.blocks[block], a.size());
}

inline Func func_from_block_values(const Algebra& a, const std::vector<Complex>& vals) {
  require(static_cast<int>(vals.size()) == a.dim(), "one value per block expected");
  Func f(std::vector<Complex>(a.size(), Complex(0)));
  for (int b = 0; b < a.dim(); ++b)
    for_each_bit(a.partition.blocks[b], [&](int x) { f[x] = vals[b]; });
  return f;
}

inline Complex block_value(const Algebra& a, const Func& f, int block) {
  return f[lowest_bit(a.partition.blocks[block])];
}

/// Membership in F_0, the non-invertible part of the algebra: on a finite
/// ground set every level set X(f,r) is non-empty for every r > 0 exactly when
/// f attains the value zero.
inline bool in_F0(const Func& f) { return zero_set(f) != 0; }

/// The definitional check, with "for every r > 0" eliminated through the
/// critical squared thresholds of f.
inline bool in_F0_by_thresholds(const Func& f) {
  for (const Rat& rsq : critical_radii_sq(f))
    if (level_set_sq(f, rsq) == 0) return false;
  return true;
}

/// Pointwise inverse 1/f for invertible members of the algebra.
inline Func invert(const Algebra& a, const Func& f) {
  require(f.size() == a.size(), "function defined on the wrong ground set");
  require_domain(contains(a, f), "invert: function is not in the algebra");
  require_domain(!in_F0(f), "not invertible");
  Func out = f;
  for (auto& v : out.values) v = Complex(1) / v;
  ensure(contains(a, out), "inverse left the algebra");
  return out;
}

}  // namespace ffc
