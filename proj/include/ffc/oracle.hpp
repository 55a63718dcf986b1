#pragma once

#include <vector>

#include "ffc/algebra.hpp"
#include "ffc/base.hpp"
#include "ffc/filters.hpp"

namespace ffc::oracle {

/// Brute-force reference implementations. These re-derive the fast-path
/// reductions from first principles on small instances and exist to be
/// compared against; they are compiled into tests and the verification
/// runner, not meant as user-facing API.

/// A filter listed extensionally: every member set, upward- and
/// intersection-closed, empty set excluded.
struct FullFilter {
  std::vector<Mask> member_sets;  // ascending

  bool contains(Mask a) const {
    for (Mask m : member_sets)
      if (m == a) return true;
    return false;
  }

  friend bool operator==(const FullFilter& a, const FullFilter& b) {
    return a.member_sets == b.member_sets;
  }
};

/// Every filter on the ground set, found by exhaustive search over families
/// of non-empty subsets. Each is checked to be principal, and the count must
/// be 2^n - 1.
inline std::vector<FullFilter> enumerate_all_filters(const GroundSet& ground) {
  const int n = ground.size();
  require(n <= 4, "exhaustive filter enumeration capped at 4 elements");
  const Mask U = all_mask(n);
  const int m = static_cast<int>(U);  // number of non-empty subsets
  std::vector<FullFilter> out;
  std::vector<char> member(U + 1, 0);
  for (Mask fam = 1; fam < (Mask{1} << m); ++fam) {
    // bit i of fam selects the non-empty subset with mask i+1
    for (Mask s = 1; s <= U; ++s) member[s] = (fam >> (s - 1)) & 1;
    bool is_filter = true;
    Mask inter = U;
    for (Mask A = 1; A <= U && is_filter; ++A) {
      if (!member[A]) continue;
      inter &= A;
      for (Mask B = A; B <= U && is_filter; ++B) {
        if (!member[B]) continue;
        const Mask c = A & B;
        if (c == 0 || !member[c]) is_filter = false;
      }
      const Mask rest = U & ~A;
      Mask s = rest;
      while (is_filter) {
        if (!member[A | s]) is_filter = false;
        if (s == 0) break;
        s = (s - 1) & rest;
      }
    }
    if (!is_filter) continue;
    ensure(inter != 0 && member[inter], "non-principal filter on a finite set");
    FullFilter ff;
    for (Mask s = 1; s <= U; ++s)
      if (member[s]) ff.member_sets.push_back(s);
    out.push_back(std::move(ff));
  }
  ensure(out.size() == (std::size_t{1} << n) - 1, "filter count is not 2^n - 1");
  return out;
}

/// F-family test by exhaustive witness search: for each proper member A, some
/// {0,1}-valued block-constant function must be 1 on all of X\A and 0 on some
/// member B. No saturation shortcut is taken.
inline bool brute_F_family(const Algebra& a, const SetFamily& fam) {
  const int n = a.size();
  require(n <= 6, "brute F-family check capped at 6 elements");
  require(!fam.sets.empty(), "family must be non-empty");
  const Mask U = a.ground.universe();
  for (Mask s : fam.sets) require(s != 0 && subset_of(s, U), "bad family member");
  const int b = a.dim();
  for (Mask A : fam.sets) {
    if (A == U) continue;
    bool found = false;
    for (Mask w = 0; w < (Mask{1} << b) && !found; ++w) {
      Mask ones = 0;  // f = 1 on these elements, 0 elsewhere
      for_each_bit(w, [&](int i) { ones |= a.partition.blocks[i]; });
      if (!subset_of(U & ~A, ones)) continue;  // f(X\A) = {1} fails
      for (Mask B : fam.sets)
        if ((B & ones) == 0) { found = true; break; }  // f(B) = {0}
    }
    if (!found) return false;
  }
  return true;
}

inline SetFamily to_family(const FullFilter& ff) { return SetFamily{ff.member_sets}; }

/// Membership oracle for the generated *-subalgebra: the linear span of the
/// generators, constants and their conjugates, closed under products to a
/// fixed point. Exact Gaussian elimination over Q(i); finite dimension bounds
/// the iteration, which is why no separate norm closure is needed.
struct SubalgebraSpan {
  int n = 0;
  std::vector<std::vector<Complex>> rows;  // reduced echelon, pivots ascending

  static int pivot_col(const std::vector<Complex>& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) return static_cast<int>(j);
    return -1;
  }

  std::vector<Complex> reduce(std::vector<Complex> v) const {
    for (const auto& row : rows) {
      const int p = pivot_col(row);
      if (!v[p].is_zero()) {
        const Complex c = v[p];
        for (int j = 0; j < n; ++j) v[j] = v[j] - c * row[j];
      }
    }
    return v;
  }

  bool contains_vec(const std::vector<Complex>& v) const {
    for (const Complex& z : reduce(v))
      if (!z.is_zero()) return false;
    return true;
  }

  // returns true when the vector enlarged the span
  bool insert(std::vector<Complex> v) {
    v = reduce(std::move(v));
    const int p = pivot_col(v);
    if (p < 0) return false;
    const Complex lead = v[p];
    for (int j = 0; j < n; ++j) v[j] = v[j] / lead;
    for (auto& row : rows) {
      if (!row[p].is_zero()) {
        const Complex c = row[p];
        for (int j = 0; j < n; ++j) row[j] = row[j] - c * v[j];
      }
    }
    rows.push_back(std::move(v));
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
      return pivot_col(x) < pivot_col(y);
    });
    return true;
  }

  int dim() const { return static_cast<int>(rows.size()); }

  bool contains(const Func& f) const { return contains_vec(f.values); }
};

inline SubalgebraSpan brute_subalgebra_closure(const GroundSet& ground,
                                               const std::vector<Func>& gens) {
  const int n = ground.size();
  require(n <= 4, "subalgebra closure oracle capped at 4 elements");
  SubalgebraSpan span;
  span.n = n;
  std::vector<Func> basis_funcs;
  auto push = [&](const Func& f) {
    require(f.size() == n, "generator defined on the wrong ground set");
    if (span.insert(f.values)) basis_funcs.push_back(f);
  };
  push(func_const(n, Complex(1)));
  for (const Func& g : gens) {
    push(g);
    push(conj(g));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = basis_funcs.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i; j < count; ++j) {
        const Func prod = basis_funcs[i] * basis_funcs[j];
        if (span.insert(prod.values)) {
          basis_funcs.push_back(prod);
          basis_funcs.push_back(conj(prod));
          span.insert(conj(prod).values);
          grew = true;
        }
      }
  }
  ensure(span.dim() <= n, "span dimension exceeds the ground size");
  return span;
}

}  // namespace ffc::oracle
