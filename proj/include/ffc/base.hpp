#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffc {

/// Subsets of a ground set (or of a spectrum) as bit masks; element i is bit i.
/// Ground sets are capped at 64 elements.
using Mask = std::uint64_t;

constexpr int kMaxGround = 64;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask all_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

// index of the least set bit; m must be nonzero
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

template <typename F>
void for_each_bit(Mask m, F&& fn) {
  while (m != 0) {
    fn(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

/// Violation of an internal postcondition (a law the construction guarantees).
struct CheckFailure : std::logic_error {
  explicit CheckFailure(const std::string& msg) : std::logic_error(msg) {}
};

// input validation
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// mathematical domain violations ("not invertible", complex input to a lattice op, ...)
inline void require_domain(bool cond, const std::string& msg) {
  if (!cond) throw std::domain_error(msg);
}

// internal invariants
inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw CheckFailure(msg);
}

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

/// One verified law: name, outcome, and a human-readable detail on failure.
struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct Report {
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const auto& it : items)
      if (it.status == CheckStatus::fail) return false;
    return true;
  }
};

}  // namespace ffc
