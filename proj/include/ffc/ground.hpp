#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ffc/base.hpp"
#include "ffc/rational.hpp"

namespace ffc {

/// A finite, non-empty ground set. Element order is fixed at construction and
/// indices 0..n-1 are stable; subsets are masks over these indices.
struct GroundSet {
  std::vector<std::string> labels;

  explicit GroundSet(std::vector<std::string> lbls) : labels(std::move(lbls)) {
    require(!labels.empty(), "ground set must be non-empty");
    require(static_cast<int>(labels.size()) <= kMaxGround,
            "ground sets beyond 64 elements are not supported");
    std::set<std::string> seen;
    for (const auto& l : labels) {
      require(!l.empty(), "empty ground label");
      require(seen.insert(l).second, "duplicate ground label: '" + l + "'");
    }
  }

  int size() const { return static_cast<int>(labels.size()); }

  Mask universe() const { return all_mask(size()); }

  int index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (labels[i] == label) return i;
    throw std::invalid_argument("unknown ground element: '" + label + "'");
  }

  std::string format_subset(Mask s) const {
    std::string out = "{";
    bool first = true;
    for_each_bit(s, [&](int i) {
      if (!first) out += ",";
      out += labels[i];
      first = false;
    });
    return out + "}";
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels == b.labels;
  }
};

/// A function X -> Q(i), one exact complex rational per ground element.
struct Func {
  std::vector<Complex> values;

  Func() = default;
  explicit Func(std::vector<Complex> v) : values(std::move(v)) {}

  int size() const { return static_cast<int>(values.size()); }
  const Complex& operator[](int i) const { return values[i]; }
  Complex& operator[](int i) { return values[i]; }

  bool is_real() const {
    return std::all_of(values.begin(), values.end(),
                       [](const Complex& z) { return z.is_real(); });
  }

  friend bool operator==(const Func& a, const Func& b) { return a.values == b.values; }
};

inline Func func_const(int n, Complex c) {
  return Func(std::vector<Complex>(n, std::move(c)));
}

inline Func indicator(Mask s, int n) {
  Func f(std::vector<Complex>(n, Complex(0)));
  for_each_bit(s, [&](int i) { f[i] = Complex(1); });
  return f;
}

namespace detail {
inline void check_same_size(const Func& a, const Func& b) {
  require(a.size() == b.size(), "functions on different ground sets");
}
}  // namespace detail

inline Func operator+(const Func& a, const Func& b) {
  detail::check_same_size(a, b);
  Func out = a;
  for (int i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Func operator-(const Func& a, const Func& b) {
  detail::check_same_size(a, b);
  Func out = a;
  for (int i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Func operator*(const Func& a, const Func& b) {
  detail::check_same_size(a, b);
  Func out = a;
  for (int i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

inline Func scale(const Complex& c, const Func& f) {
  Func out = f;
  for (auto& v : out.values) v = c * v;
  return out;
}

inline Func conj(const Func& f) {
  Func out = f;
  for (auto& v : out.values) v = v.conj();
  return out;
}

/// |f|^2 pointwise; always real-valued, always exact.
inline Func abs_sq(const Func& f) {
  Func out = f;
  for (auto& v : out.values) v = Complex(v.abs_sq());
  return out;
}

/// Pointwise max of two real-valued functions.
inline Func func_join(const Func& a, const Func& b) {
  detail::check_same_size(a, b);
  require_domain(a.is_real() && b.is_real(), "lattice operation on complex-valued function");
  Func out = a;
  for (int i = 0; i < a.size(); ++i) out[i] = Complex(std::max(a[i].re, b[i].re));
  return out;
}

/// Pointwise min of two real-valued functions.
inline Func func_meet(const Func& a, const Func& b) {
  detail::check_same_size(a, b);
  require_domain(a.is_real() && b.is_real(), "lattice operation on complex-valued function");
  Func out = a;
  for (int i = 0; i < a.size(); ++i) out[i] = Complex(std::min(a[i].re, b[i].re));
  return out;
}

inline Rat sup_norm_sq(const Func& f) {
  Rat best = 0;
  for (const auto& v : f.values) best = std::max(best, v.abs_sq());
  return best;
}

/// X(f,r) for squared radius rsq: the points where |f|^2 <= rsq.
inline Mask level_set_sq(const Func& f, const Rat& rsq) {
  Mask out = 0;
  for (int i = 0; i < f.size(); ++i)
    if (f[i].abs_sq() <= rsq) out |= bit(i);
  return out;
}

/// X(f,r) = { x : |f(x)| <= r } for rational r > 0, via the squared comparison.
inline Mask level_set(const Func& f, const Rat& r) {
  require(r > 0, "level set radius must be positive");
  return level_set_sq(f, r * r);
}

/// Z(f) = { x : f(x) = 0 }.
inline Mask zero_set(const Func& f) {
  Mask out = 0;
  for (int i = 0; i < f.size(); ++i)
    if (f[i].is_zero()) out |= bit(i);
  return out;
}

/// Squared radii that realize every distinct level set of f: each positive
/// threshold |f(x)|^2, plus one value strictly below the least positive
/// threshold (realizing Z(f)). Quantifiers "for every r > 0" range over these.
inline std::vector<Rat> critical_radii_sq(const Func& f) {
  std::vector<Rat> qs;
  for (const auto& v : f.values) {
    Rat q = v.abs_sq();
    if (q > 0) qs.push_back(q);
  }
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  if (qs.empty()) return {Rat(1)};
  std::vector<Rat> out;
  out.push_back(qs.front() / 2);  // sub-threshold: X(f,r) = Z(f) here
  for (auto& q : qs) out.push_back(q);
  return out;
}

}  // namespace ffc
