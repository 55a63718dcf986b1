#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffc/base.hpp"
#include "ffc/extension.hpp"
#include "ffc/instance.hpp"
#include "ffc/rational.hpp"

namespace ffc {

/// splitmix64; the documented generator behind every random instance.
/// bounded(k) = next() mod k, so a (seed, draw sequence) pair fixes the
/// instance bit for bit on every platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t bounded(std::uint64_t k) { return next() % k; }
};

/// Fixed value alphabet for generated instances: 0, ±1, ±2, 1/2, i.
inline const std::vector<Complex>& instance_alphabet() {
  static const std::vector<Complex> alpha = {
      Complex(0),  Complex(1),          Complex(-1), Complex(2), Complex(-2),
      Complex(Rat(1, 2)), Complex(Rat(0), Rat(1))};
  return alpha;
}

/// Random instance with exactly n elements: a planted block structure with
/// b = 1 + bounded(n) classes, class of each element bounded(b), then
/// m = 1 + bounded(3) generators taking alphabet values per class. Labels are
/// x0..x{n-1}; generators g1..gm. The kernel partition may coarsen the
/// planted classes when values collide.
inline InstanceFile random_instance_exact(std::uint64_t seed, int n) {
  require(n >= 1 && n <= kMaxGround, "instance size out of range");
  SplitMix64 rng(seed);
  InstanceFile inst;
  for (int x = 0; x < n; ++x) inst.ground.push_back("x" + std::to_string(x));

  const int b = 1 + static_cast<int>(rng.bounded(n));
  std::vector<int> cls(n);
  for (int x = 0; x < n; ++x) cls[x] = static_cast<int>(rng.bounded(b));

  const auto& alpha = instance_alphabet();
  const int m = 1 + static_cast<int>(rng.bounded(3));
  for (int g = 1; g <= m; ++g) {
    std::vector<Complex> class_val(b);
    for (int c = 0; c < b; ++c) class_val[c] = alpha[rng.bounded(alpha.size())];
    Func f;
    for (int x = 0; x < n; ++x) f.values.push_back(class_val[cls[x]]);
    const std::string name = "g" + std::to_string(g);
    inst.functions.emplace_back(name, std::move(f));
    inst.generators.push_back(name);
  }
  return inst;
}

/// Random instance with n = 1 + bounded(max_size) drawn first.
inline InstanceFile random_instance(std::uint64_t seed, int max_size) {
  require(max_size >= 1 && max_size <= kMaxGround, "max size out of range");
  SplitMix64 rng(seed);
  const int n = 1 + static_cast<int>(rng.bounded(max_size));
  return random_instance_exact(rng.next(), n);
}

enum class TargetKind { positive_norm1, real, complex, constant };

/// Random approximation target on a spectrum with the given point count.
/// positive_norm1: values j/d with d = 1 + bounded(6), one point pinned to 1.
/// real: (bounded(9) - 4) / (1 + bounded(3)). complex: real pairs. constant:
/// one real value everywhere.
inline SpectrumFunc random_target(std::uint64_t seed, int point_count, TargetKind kind) {
  SplitMix64 rng(seed);
  SpectrumFunc g;
  g.values.assign(point_count, Complex(0));
  switch (kind) {
    case TargetKind::positive_norm1: {
      const int d = 1 + static_cast<int>(rng.bounded(6));
      for (int p = 0; p < point_count; ++p)
        g[p] = Complex(Rat(static_cast<int>(rng.bounded(d + 1)), d));
      g[rng.bounded(point_count)] = Complex(1);
      break;
    }
    case TargetKind::real: {
      for (int p = 0; p < point_count; ++p) {
        const int num = static_cast<int>(rng.bounded(9)) - 4;
        const int den = 1 + static_cast<int>(rng.bounded(3));
        g[p] = Complex(Rat(num, den));
      }
      break;
    }
    case TargetKind::complex: {
      for (int p = 0; p < point_count; ++p) {
        const int re = static_cast<int>(rng.bounded(9)) - 4;
        const int dre = 1 + static_cast<int>(rng.bounded(3));
        const int im = static_cast<int>(rng.bounded(9)) - 4;
        const int dim = 1 + static_cast<int>(rng.bounded(3));
        g[p] = Complex(Rat(re, dre), Rat(im, dim));
      }
      break;
    }
    case TargetKind::constant: {
      const int num = static_cast<int>(rng.bounded(9)) - 4;
      const Complex c(Rat(num, 2));
      for (int p = 0; p < point_count; ++p) g[p] = c;
      break;
    }
  }
  return g;
}

}  // namespace ffc
