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

// End-to-end solver for OP(y, L):
//
//   (y, L) -> (eps, x, delta) -> graceful [k-1 | L] -> pyramidal OP(x, 2L)
//          -> halve (and redistribute when delta = 1) -> extend -> verify.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oberwolfach/bounds.hpp"
#include "oberwolfach/decomposition.hpp"
#include "oberwolfach/extend.hpp"
#include "oberwolfach/graceful.hpp"
#include "oberwolfach/halving.hpp"
#include "oberwolfach/pyramidal.hpp"

namespace oberwolfach {

struct SolveRequest {
  std::int64_t y = 0;
  std::vector<std::int64_t> lengths;
  std::uint64_t seed = 0;
  std::uint64_t graceful_budget = 50'000'000;
  std::uint64_t extend_budget = 64'000'000;
  bool allow_below_bound = false;
};

struct SolveCertificate {
  SolveRequest request;
  StructureBounds bounds;
  TargetSplit split;
  GracefulLabeling labeling;
  PyramidalSolution pyramidal;
  OneTwoDecomposition parts;
  Decomposition solution;
  Report report;
};

struct DoubleOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 50'000'000;
};

/// Pyramidal solution of OP(x, 2L) with its matching witness. The graceful
/// shape is [floor((x-3)/2) | L].
inline PyramidalSolution solve_double(std::int64_t x, const std::vector<std::int64_t>& lengths,
                                      const DoubleOptions& opt = {}) {
  validate_lengths(lengths);
  if (x < 3) throw Error(ErrorCode::InvalidRequest, "long cycle length must be at least 3");
  const int eps = x % 2 == 1 ? 1 : 2;
  ZillionShape shape{(x - 3) / 2, sorted_lengths(lengths)};
  GracefulSearchOptions gopt;
  gopt.seed = opt.seed;
  gopt.budget = opt.budget;
  const auto res = search_graceful(shape, gopt);
  if (!res.labeling) {
    throw Error(ErrorCode::GracefulNotFound, std::string("no graceful labeling of the path-cycle shape (") +
                                                 to_string(res.status) + ")");
  }
  return double_labeling(*res.labeling, eps);
}

namespace detail {

inline bool every_factor_is(const Report& r, std::vector<std::int64_t> cycles) {
  return r.valid() && all_factors_have(r, sorted_lengths(std::move(cycles)));
}

}  // namespace detail

inline SolveCertificate solve(const SolveRequest& req) {
  try {
    validate_lengths(req.lengths);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidRequest, e.what());
  }
  if (req.y < 3) throw Error(ErrorCode::InvalidRequest, "y must be at least 3");

  SolveCertificate cert;
  cert.request = req;
  cert.bounds = structure_bounds(req.lengths);
  if (!req.allow_below_bound && BigInt(req.y) < cert.bounds.y0) {
    throw Error(ErrorCode::InvalidRequest, "y = " + std::to_string(req.y) + " is below the bound " +
                                               cert.bounds.y0.str() + "; allow best-effort to try anyway");
  }
  cert.split = split_target(req.y, cert.bounds.b);
  if (cert.split.x < 3) {
    throw Error(ErrorCode::InvalidRequest,
                "long cycle x = " + std::to_string(cert.split.x) + " is too short for this y");
  }

  DoubleOptions dopt;
  dopt.seed = req.seed;
  dopt.budget = req.graceful_budget;
  cert.pyramidal = solve_double(cert.split.x, req.lengths, dopt);
  if (cert.pyramidal.epsilon != cert.split.epsilon) {
    throw Error(ErrorCode::ConstructionFailed, "parity of the long cycle disagrees with eps");
  }
  cert.labeling = cert.pyramidal.labeling;

  cert.parts = decompose_solution(cert.pyramidal);
  if (cert.split.delta == 1) cert.parts = redistribute(cert.parts, cert.pyramidal.witness);

  ExtendOptions eopt;
  eopt.seed = req.seed;
  eopt.budget = req.extend_budget;
  try {
    cert.solution = extend(cert.parts, eopt);
  } catch (const Error& e) {
    throw Error(ErrorCode::ExtendFailed, std::string("extension failed: ") + e.what());
  }

  const std::int64_t order = req.y + cert.bounds.b;
  if (cert.solution.order != order) {
    throw Error(ErrorCode::ConstructionFailed, "extended order " + std::to_string(cert.solution.order) +
                                                   " differs from y + sum L = " + std::to_string(order));
  }
  cert.report = verify_decomposition(cert.solution);
  std::vector<std::int64_t> want = req.lengths;
  want.push_back(req.y);
  if (!detail::every_factor_is(cert.report, want)) {
    throw Error(ErrorCode::ConstructionFailed, "final decomposition fails verification");
  }
  return cert;
}

/// Order-doubling without the matching property: halve every factor of a
/// solution of OP(x, 2L) on 2w + eps vertices and extend to OP(y, L) with
/// y = 4w + eps - sum L.
inline Decomposition general_mu2(const Decomposition& d, const ExtendOptions& opt = {}) {
  const Report r = verify_decomposition(d);
  if (!r.valid() || d.factors.empty()) {
    throw Error(ErrorCode::InvalidRequest, "input is not a 2-factorization");
  }
  const auto shape = cycle_structure(d.factors.front()).cycles;
  if (!all_factors_have(r, shape)) throw Error(ErrorCode::ShapeMismatch, "factors are not isomorphic");
  const OneTwoDecomposition parts = decompose_factorization(d);
  Decomposition out = extend(parts, opt);

  std::int64_t sum = 0;
  for (auto l : parts.lengths) sum += l;
  const std::int64_t w = (d.order - parts.epsilon) / 2;
  std::vector<std::int64_t> want = parts.lengths;
  want.push_back(4 * w + parts.epsilon - sum);
  if (!detail::every_factor_is(verify_decomposition(out), want)) {
    throw Error(ErrorCode::ConstructionFailed, "extended decomposition fails verification");
  }
  return out;
}

inline Decomposition general_mu2(const PyramidalSolution& p, const ExtendOptions& opt = {}) {
  const OneTwoDecomposition parts = decompose_solution(p);
  Decomposition out = extend(parts, opt);
  std::int64_t sum = 0;
  for (auto l : p.lengths) sum += l;
  std::vector<std::int64_t> want = p.lengths;
  want.push_back(2 * p.orbit.order - p.epsilon - sum);
  if (!detail::every_factor_is(verify_decomposition(out), want)) {
    throw Error(ErrorCode::ConstructionFailed, "extended decomposition fails verification");
  }
  return out;
}

}  // namespace oberwolfach
