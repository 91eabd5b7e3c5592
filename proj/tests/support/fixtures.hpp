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

// Hand-entered fixtures: the worked OP(3, 2·3, 2·4) / OP(4, 2·3, 2·4)
// instance on Z_16 and the K5 -> K9 extension instance.

#pragma once

#include <vector>

#include "oberwolfach/oberwolfach.hpp"

namespace fixtures {

using namespace oberwolfach;

inline const Vertex kInf = Vertex::inf1();
inline const Vertex kInf2 = Vertex::inf2();

/// G = (inf,2,10) u (3,6,4) u (11,14,12) u (0,5,1,7) u (8,13,9,15) on Z_16.
inline StructuredGraph worked_g() {
  return make_graph(16, {{kInf, fin(2), fin(10)},
                         {fin(3), fin(6), fin(4)},
                         {fin(11), fin(14), fin(12)},
                         {fin(0), fin(5), fin(1), fin(7)},
                         {fin(8), fin(13), fin(9), fin(15)}});
}

/// G* = (inf1,2,inf2,10) u the same four short cycles.
inline StructuredGraph worked_g_star() {
  return make_graph(16, {{kInf, fin(2), kInf2, fin(10)},
                         {fin(3), fin(6), fin(4)},
                         {fin(11), fin(14), fin(12)},
                         {fin(0), fin(5), fin(1), fin(7)},
                         {fin(8), fin(13), fin(9), fin(15)}});
}

/// G' = G + 1 as printed.
inline StructuredGraph worked_g_prime() {
  return make_graph(16, {{kInf, fin(3), fin(11)},
                         {fin(4), fin(7), fin(5)},
                         {fin(12), fin(15), fin(13)},
                         {fin(1), fin(6), fin(2), fin(8)},
                         {fin(9), fin(14), fin(10), fin(0)}});
}

inline StructuredGraph worked_matching() {
  return make_edges(16, {Edge(kInf, fin(2)), Edge(fin(1), fin(5)), Edge(fin(4), fin(6))});
}

/// h(G') = <inf,3> u (12,15,13) u (9,14,10,0).
inline StructuredGraph worked_halving() {
  return make_graph(16, {{fin(12), fin(15), fin(13)}, {fin(9), fin(14), fin(10), fin(0)}}, {{kInf, fin(3)}});
}

/// T = {2} u (3,6,4) u (0,5,1,7): graceful labeling of [0 | 3,4].
inline GracefulLabeling worked_seed() { return make_labeling({2}, {{3, 6, 4}, {0, 5, 1, 7}}); }

/// Orbit {G + i : 1 <= i <= 8} with the matching witness (G = G + 8, G' = G + 1).
inline Decomposition worked_orbit(bool even) {
  Decomposition d;
  d.order = even ? 18 : 17;
  d.regime = regime_for_order(d.order);
  const StructuredGraph g = even ? worked_g_star() : worked_g();
  for (int i = 1; i <= 8; ++i) d.factors.push_back(translate(g, i));
  if (even) {
    StructuredGraph one(16);
    one.add_edge(kInf, kInf2);
    for (int i = 0; i < 8; ++i) one.add_edge(fin(2 + i), fin(10 + i));
    d.one_factor = one;
  }
  return d;
}

inline MatchingWitness worked_witness() { return {worked_matching(), 7, 0, worked_halving()}; }

/// K5 as two edge-disjoint Hamiltonian 5-cycles (0,1,2,3,4) and
/// (0,2,4,1,3), each cut into a 3-edge path and a 2-edge path.
inline OneTwoDecomposition k5_linear_forests() {
  OneTwoDecomposition d;
  d.order = 5;
  d.epsilon = 1;
  d.parts.push_back(make_graph(0, {}, {{fin(0), fin(1), fin(2), fin(3)}}));
  d.parts.push_back(make_graph(0, {}, {{fin(3), fin(4), fin(0)}}));
  d.parts.push_back(make_graph(0, {}, {{fin(0), fin(2), fin(4), fin(1)}}));
  d.parts.push_back(make_graph(0, {}, {{fin(1), fin(3), fin(0)}}));
  return d;
}

}  // namespace fixtures
