// Copyright 2026 The oberwolfach-construct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed-form bounds for a cycle-length list L, in exact arithmetic.
//
//   b  = sum of L
//   b0 = 2 |L0| (max L0 + 3)              L0 = even members, max(empty) = 0
//   b1 = 7^(|L1| - 1) (2 max L1 + 1)       L1 = odd members; 1/7 when L1 empty
//   B  = 6 b0 + 7 b1 + 29                  graceful-labeling threshold
//   y0 = 3 b + 24 b0 + 28 b1 + 119         large-cycle threshold
//
// and the split of a target cycle length y into (eps, x, delta) with
// y = 2x + 3b - eps - 2 delta.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oberwolfach/error.hpp"

namespace oberwolfach {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct StructureBounds {
  std::vector<std::int64_t> lengths;  // sorted
  std::int64_t b = 0;
  BigInt b0 = 0;
  Rational b1 = 0;
  BigInt graceful_threshold = 0;  // B(L)
  BigInt y0 = 0;
};

inline void validate_lengths(const std::vector<std::int64_t>& lengths) {
  if (lengths.empty()) throw Error(ErrorCode::InvalidLength, "cycle-length list is empty");
  for (auto l : lengths) {
    if (l < 3) throw Error(ErrorCode::InvalidLength, "cycle length " + std::to_string(l) + " < 3");
  }
}

inline BigInt require_integer(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw Error(ErrorCode::ConstructionFailed, std::string(what) + " is not an integer");
  }
  return boost::multiprecision::numerator(q);
}

inline StructureBounds structure_bounds(std::vector<std::int64_t> lengths) {
  validate_lengths(lengths);
  std::sort(lengths.begin(), lengths.end());
  StructureBounds sb;
  sb.lengths = lengths;

  std::int64_t even_count = 0, odd_count = 0, even_max = 0, odd_max = 0;
  for (auto l : lengths) {
    sb.b += l;
    if (l % 2 == 0) {
      ++even_count;
      even_max = std::max(even_max, l);
    } else {
      ++odd_count;
      odd_max = std::max(odd_max, l);
    }
  }
  sb.b0 = BigInt(2) * even_count * (even_max + 3);
  Rational power = 1;
  if (odd_count == 0) {
    power = Rational(1, 7);
  } else {
    power = Rational(boost::multiprecision::pow(BigInt(7), static_cast<unsigned>(odd_count - 1)));
  }
  sb.b1 = power * (2 * odd_max + 1);

  sb.graceful_threshold =
      require_integer(Rational(6 * sb.b0) + 7 * sb.b1 + 29, "B(L)");
  sb.y0 = require_integer(Rational(3 * sb.b) + Rational(24 * sb.b0) + 28 * sb.b1 + 119, "y0");
  return sb;
}

struct TargetSplit {
  std::int64_t y = 0;
  int epsilon = 1;
  std::int64_t x = 0;
  int delta = 0;
};

/// eps(y) in {1,2} with eps = y + b (mod 2);
/// x = (y + eps - 3b)/2, plus 1 unless eps = y + b (mod 4).
/// The added 1 is exactly delta, so y = 2x + 3b - eps - 2 delta always holds.
inline TargetSplit split_target(std::int64_t y, std::int64_t b) {
  TargetSplit s;
  s.y = y;
  const std::int64_t yb = y + b;
  s.epsilon = ((yb % 2) + 2) % 2 == 1 ? 1 : 2;
  const std::int64_t twice = y + s.epsilon - 3 * b;  // always even
  s.delta = (((yb - s.epsilon) % 4) + 4) % 4 == 0 ? 0 : 1;
  s.x = twice / 2 + s.delta;
  return s;
}

inline TargetSplit split_target(std::int64_t y, const std::vector<std::int64_t>& lengths) {
  validate_lengths(lengths);
  std::int64_t b = 0;
  for (auto l : lengths) b += l;
  return split_target(y, b);
}

/// The smallest y covered by the bound for every pair 3 <= l1 < l2 <= 9,
/// ordered the way the published tables list them.
struct TableEntry {
  BigInt y_bar;
  std::int64_t l1;
  std::int64_t l2;
};

inline std::vector<TableEntry> pair_table() {
  std::vector<TableEntry> out;
  for (std::int64_t l1 = 3; l1 <= 9; ++l1) {
    for (std::int64_t l2 = l1 + 1; l2 <= 9; ++l2) {
      out.push_back({structure_bounds({l1, l2}).y0, l1, l2});
    }
  }
  return out;
}

}  // namespace oberwolfach
