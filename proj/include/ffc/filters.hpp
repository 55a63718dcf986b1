#pragma once

#include <array>
#include <set>
#include <vector>

#include "ffc/algebra.hpp"
#include "ffc/base.hpp"
#include "ffc/ground.hpp"

namespace ffc {

/// A finite family of distinct subsets of the ground set.
struct SetFamily {
  std::vector<Mask> sets;
};

inline SetFamily make_family(std::vector<Mask> sets) {
  require(!sets.empty(), "set family must be non-empty");
  std::set<Mask> seen;
  for (Mask s : sets) require(seen.insert(s).second, "duplicate set in family");
  return SetFamily{std::move(sets)};
}

/// An F-filter in principal form. On a finite ground set every filter is
/// principal (the intersection of its members is a member), and the F-filters
/// are exactly the principal filters whose generator is a non-empty union of
/// blocks. The full member family is available via filter_members.
struct FFilter {
  Mask generator = 0;

  friend bool operator==(const FFilter& a, const FFilter& b) {
    return a.generator == b.generator;
  }
};

/// An F-ultrafilter: a maximal F-filter, i.e. one generated by a single block.
struct UltraPoint {
  int block = -1;

  friend bool operator==(const UltraPoint& a, const UltraPoint& b) {
    return a.block == b.block;
  }
};

inline bool is_F_filter_generator(const Algebra& a, Mask gen) {
  return gen != 0 && a.partition.is_saturated(gen);
}

inline FFilter make_F_filter(const Algebra& a, Mask gen) {
  require(gen != 0, "F-filter generator must be non-empty");
  require(subset_of(gen, a.ground.universe()), "generator outside the ground set");
  require(a.partition.is_saturated(gen), "F-filter generator must be a union of blocks");
  return FFilter{gen};
}

/// A ∈ ⟨gen⟩ iff gen ⊆ A.
inline bool filter_contains(const FFilter& phi, Mask A) {
  return subset_of(phi.generator, A);
}

/// All members of the principal filter ⟨gen⟩, ascending. 2^(n-|gen|) sets.
inline std::vector<Mask> filter_members(int n, Mask gen) {
  require(n <= 20, "explicit filter member listing capped at 20 elements");
  const Mask rest = all_mask(n) & ~gen;
  std::vector<Mask> out;
  Mask s = rest;
  while (true) {
    out.push_back(gen | s);
    if (s == 0) break;
    s = (s - 1) & rest;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// F-family test. A family is an F-family when every proper member A admits a
/// member B and an algebra function separating B from X\A with values 0 and 1.
/// For the block algebra such a separator exists iff the saturations of B and
/// X\A are disjoint; {0,1}-valued block-constant witnesses are complete, and
/// the exhaustive witness search lives in the oracle as the independent route.
inline bool is_F_family(const Algebra& a, const SetFamily& fam) {
  require(!fam.sets.empty(), "family must be non-empty");
  const Mask U = a.ground.universe();
  for (Mask s : fam.sets) {
    require(s != 0, "families live in P*(X): empty member not allowed");
    require(subset_of(s, U), "family member outside the ground set");
  }
  for (Mask A : fam.sets) {
    if (A == U) continue;
    const Mask sat_xa = a.partition.saturation(U & ~A);
    bool found = false;
    for (Mask B : fam.sets)
      if ((a.partition.saturation(B) & sat_xa) == 0) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

/// Every finite intersection of members is non-empty; on a finite family this
/// is equivalent to the total intersection being non-empty.
inline bool has_finite_intersection_property(const SetFamily& fam, int n) {
  Mask inter = all_mask(n);
  for (Mask s : fam.sets) inter &= s;
  return inter != 0;
}

/// Filter test on an explicitly listed family: closed under pairwise
/// intersections and supersets, with the empty set excluded.
inline bool is_filter_family(const SetFamily& fam, int n) {
  require(n <= 16, "explicit filter axiom check capped at 16 elements");
  if (fam.sets.empty()) return false;
  std::set<Mask> mem(fam.sets.begin(), fam.sets.end());
  if (mem.count(0)) return false;
  const Mask U = all_mask(n);
  for (Mask A : fam.sets) {
    if (!subset_of(A, U)) return false;
    for (Mask B : fam.sets)
      if (!mem.count(A & B)) return false;
    const Mask rest = U & ~A;
    Mask s = rest;
    while (true) {
      if (!mem.count(A | s)) return false;
      if (s == 0) break;
      s = (s - 1) & rest;
    }
  }
  return true;
}

inline bool is_F_filter(const Algebra& a, const SetFamily& fam) {
  return is_filter_family(fam, a.size()) && is_F_family(a, fam);
}

/// All F-filters of the algebra: one per non-empty union of blocks, ordered by
/// ascending block-subset mask. 2^b - 1 filters for b blocks.
inline std::vector<FFilter> enumerate_F_filters(const Algebra& a) {
  const int b = a.dim();
  require(b <= 24, "F-filter enumeration capped at 24 blocks");
  std::vector<FFilter> out;
  out.reserve((std::size_t{1} << b) - 1);
  for (Mask s = 1; s < (Mask{1} << b); ++s) {
    Mask gen = 0;
    for_each_bit(s, [&](int i) { gen |= a.partition.blocks[i]; });
    out.push_back(FFilter{gen});
  }
  return out;
}

inline std::vector<UltraPoint> enumerate_ultrafilters(const Algebra& a) {
  std::vector<UltraPoint> out;
  for (int i = 0; i < a.dim(); ++i) out.push_back(UltraPoint{i});
  return out;
}

/// Extends an F-family with the finite intersection property to an
/// F-ultrafilter containing it. Deterministic tie-break: the least admissible
/// block in canonical order.
inline UltraPoint extend_to_ultrafilter(const Algebra& a, const SetFamily& fam) {
  require(is_F_family(a, fam), "not an F-family");
  require(has_finite_intersection_property(fam, a.size()),
          "family lacks the finite intersection property");
  Mask inter = a.ground.universe();
  for (Mask s : fam.sets) inter &= s;
  for (int i = 0; i < a.dim(); ++i)
    if (subset_of(a.partition.blocks[i], inter)) return UltraPoint{i};
  // an F-family with the FIP always traps a whole block inside its
  // intersection (sum-of-witnesses argument)
  throw CheckFailure("no block inside the intersection of an F-family with the FIP");
}

/// For every algebra function f vanishing on A ({0,1}-valued block-constant
/// witnesses are complete) and every critical radius r: X(f,r) ∈ ⟨gen⟩.
inline bool annihilator_level_sets_in_filter(const Algebra& a, Mask A, Mask gen) {
  require(A != 0, "annihilator of the empty set");
  const auto& part = a.partition;
  const int b = part.block_count();
  std::vector<int> free_blocks;  // blocks where a witness may take value 1
  for (int i = 0; i < b; ++i)
    if ((part.blocks[i] & A) == 0) free_blocks.push_back(i);
  const int nf = static_cast<int>(free_blocks.size());
  const Mask U = all_mask(a.size());
  for (Mask assign = 0; assign < (Mask{1} << nf); ++assign) {
    Mask ones = 0;
    for (int j = 0; j < nf; ++j)
      if (assign & bit(j)) ones |= part.blocks[free_blocks[j]];
    // critical level sets of a {0,1}-valued function: Z(f) below threshold,
    // X at and above it
    if (!subset_of(gen, U & ~ones)) return false;
  }
  return true;
}

using FiveWay = std::array<bool, 5>;

/// The five equivalent descriptions of an F-ultrafilter, each evaluated from
/// its own statement over the candidate principal filter ⟨gen⟩. Quantifiers
/// over radii run over the critical thresholds; quantifiers over algebra
/// functions run over block-constant witnesses with small value alphabets.
/// The five verdicts must coincide; tests check this against the brute-force
/// oracle.
inline FiveWay ultrafilter_characterizations(const Algebra& a, Mask candidate_gen) {
  const int n = a.size();
  require(candidate_gen != 0, "candidate filter must have a non-empty generator");
  require(subset_of(candidate_gen, a.ground.universe()), "generator outside the ground set");
  require(n <= 10, "characterizations: exhaustive statement evaluation capped at 10 elements");
  const auto& part = a.partition;
  const int b = part.block_count();
  const Mask U = all_mask(n);
  const Mask G = candidate_gen;
  const bool ffilter = part.is_saturated(G);

  const std::vector<Mask> members = filter_members(n, G);

  // (i) an F-filter not properly contained in any other F-filter
  bool s1 = ffilter;
  if (s1) {
    for (const FFilter& psi : enumerate_F_filters(a))
      if (psi.generator != G && subset_of(psi.generator, G)) { s1 = false; break; }
  }

  // (ii) whenever X(f,r) ∉ φ, every strictly smaller radius t admits a member
  // of φ disjoint from X(f,t)
  bool s2 = ffilter;
  if (s2) {
    const std::array<Complex, 3> alpha = {Complex(0), Complex(1), Complex(2)};
    std::vector<int> digit(b, 0);
    std::vector<Complex> vals(b, Complex(0));
    bool done = false;
    while (!done && s2) {
      for (int i = 0; i < b; ++i) vals[i] = alpha[digit[i]];
      const Func f = func_from_block_values(a, vals);
      const std::vector<Rat> radii = critical_radii_sq(f);
      for (const Rat& rho : radii) {
        const Mask S = level_set_sq(f, rho);
        if (S == U || subset_of(G, S)) continue;  // X(f,r) ∈ φ, or no radius exceeds it
        for (const Rat& tau : radii) {
          if (tau > rho) break;
          // a member of φ disjoint from X(f,t) exists iff G avoids it
          if ((G & level_set_sq(f, tau)) != 0) { s2 = false; break; }
        }
        if (!s2) break;
      }
      int pos = 0;
      while (pos < b && ++digit[pos] == 3) digit[pos++] = 0;
      done = pos == b;
    }
  }

  // (iii) maximal among F-families with the finite intersection property;
  // single-set extensions are decisive, since any strictly larger F-family
  // with the FIP yields one through the block trapped by its ultrafilter
  std::vector<Mask> sat_member(members.size()), sat_comp(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    sat_member[i] = part.saturation(members[i]);
    sat_comp[i] = part.saturation(U & ~members[i]);
  }
  std::vector<char> has_wit(members.size(), 0);
  bool phi_ffam = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == U) { has_wit[i] = 1; continue; }
    for (std::size_t j = 0; j < members.size(); ++j)
      if ((sat_member[j] & sat_comp[i]) == 0) { has_wit[i] = 1; break; }
    if (!has_wit[i]) phi_ffam = false;
  }
  bool s3 = phi_ffam;  // φ principal and non-empty, so the FIP is automatic
  if (s3) {
    for (Mask C = 1; C <= U && s3; ++C) {
      if (subset_of(G, C)) continue;   // already a member
      if ((G & C) == 0) continue;      // extension would lose the FIP
      const Mask sat_c = part.saturation(C);
      bool ext_ok = true;
      for (std::size_t i = 0; i < members.size() && ext_ok; ++i)
        if (members[i] != U && !has_wit[i] && (sat_c & sat_comp[i]) != 0) ext_ok = false;
      if (ext_ok) {  // C's own obligation (C != X since X ∈ φ)
        const Mask sat_xc = part.saturation(U & ~C);
        bool wit = (sat_c & sat_xc) == 0;
        for (std::size_t j = 0; j < members.size() && !wit; ++j)
          wit = (sat_member[j] & sat_xc) == 0;
        ext_ok = wit;
      }
      if (ext_ok) s3 = false;  // a strictly larger F-family with the FIP exists
    }
  }

  // (iv) whenever a finite union lies in φ, some part A_k has all level sets
  // of its annihilator inside φ; singleton covers of each member are the
  // decisive instances
  bool s4 = ffilter;
  if (s4) {
    std::vector<char> elem_ok(n, 0);
    for (int x = 0; x < n; ++x)
      elem_ok[x] = annihilator_level_sets_in_filter(a, bit(x), G) ? 1 : 0;
    for (Mask C : members) {
      bool any = false;
      for_each_bit(C, [&](int x) { if (elem_ok[x]) any = true; });
      if (!any) { s4 = false; break; }
    }
  }

  // (v) for every proper non-empty A, the annihilator level sets of A or of
  // X\A all lie in φ
  bool s5 = ffilter;
  if (s5) {
    for (Mask A = 1; A < U && s5; ++A)
      if (!annihilator_level_sets_in_filter(a, A, G) &&
          !annihilator_level_sets_in_filter(a, U & ~A, G))
        s5 = false;
  }

  return FiveWay{s1, s2, s3, s4, s5};
}

}  // namespace ffc
