#pragma once

#include "ffree/digraph.hpp"

namespace ffree {

// One duplicated pair of 2-walks: a->c1->b and a->c2->b with c1 < c2.
// a == b covers the closed-walk case.
struct TwoWalkWitness {
  int a = 0, b = 0, c1 = 0, c2 = 0;
  bool operator==(const TwoWalkWitness&) const = default;
};

struct CheckReport {
  bool ok = false;
  std::optional<TwoWalkWitness> witness;
};

// Admissibility check on successor bit rows: every ordered pair (a,b),
// a == b included, has at most one c with a->c->b. On failure the
// witness is the lexicographically smallest violating (a,b,c1,c2).
CheckReport is_f_free(const Digraph& d);

// Same result; scans start vertices with OpenMP.
CheckReport is_f_free_par(const Digraph& d);

// Independent route: admissible iff the square of the adjacency matrix
// is again a 0-1 matrix.
bool check_matrix_route(const Digraph& d);

// Decomposition about a vertex v: V1 = N+(v), V2 = the rest (v itself
// included unless v->v, which cannot happen), V3 = vertices of V2 whose
// successor set is exactly V1, V4 = V2 \ V3.
struct VertexContext {
  int pivot = -1;
  VertexSet v1, v2, v3, v4;
};

VertexContext context(const Digraph& d, int v);

// Over every max-outdegree pivot v and every vertex u: the largest
// number of arcs from u into V2(v). Zero on arcless digraphs.
int alpha(const Digraph& d);

// For u in ctx.v2 with exactly |V1|-1 arcs into V1: the one vertex of
// V1 that u misses. Empty when u's arc count into V1 is anything else.
// u outside ctx.v2 is a usage error.
std::optional<int> u_prime(const Digraph& d, const VertexContext& ctx, int u);

}  // namespace ffree
