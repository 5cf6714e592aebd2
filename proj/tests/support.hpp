// Shared helpers for the test programs.

#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "holocone/weights.hpp"

namespace testing_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611ULL);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// Weakly decreasing integers in [lo, hi].
inline std::vector<long> random_dominant_block(int n, long lo, long hi) {
  std::vector<long> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = uniform(lo, hi);
  std::sort(v.rbegin(), v.rend());
  return v;
}

inline holocone::Weight random_integer_weight(const holocone::GroupShape& s, long lo, long hi, bool dominant) {
  std::vector<long> v;
  if (dominant) {
    auto a = random_dominant_block(s.p, lo, hi), b = random_dominant_block(s.q, lo, hi);
    v = a;
    v.insert(v.end(), b.begin(), b.end());
  } else {
    for (int i = 0; i < s.rank(); ++i) v.push_back(uniform(lo, hi));
  }
  return holocone::Weight::from_integers(v);
}

// Rational point of the holomorphic chamber: decreasing blocks with x_p > x_{p+1}.
inline holocone::Weight random_chamber_weight(const holocone::GroupShape& s, long den_max = 5) {
  holocone::Weight w(static_cast<std::size_t>(s.rank()));
  const long den = uniform(1, den_max);
  long cur = uniform(-10, 10);
  for (int i = 0; i < s.rank(); ++i) {
    if (i > 0) cur -= (i == s.p) ? uniform(1, 6) : uniform(0, 4);
    w[static_cast<std::size_t>(i)] = holocone::Rational(cur, den);
    w[static_cast<std::size_t>(i)].canonicalize();
  }
  return w;
}

// All partitions with at most `parts` parts and size at most `max_size`, padded.
inline std::vector<std::vector<long>> small_partitions(int parts, long max_size) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long left, long cap) {
    if (static_cast<int>(cur.size()) == parts) {
      out.push_back(cur);
      return;
    }
    for (long v = std::min(left, cap); v >= 0; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(max_size, max_size);
  return out;
}

}  // namespace testing_support
