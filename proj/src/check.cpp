#include "ffree/check.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ffree {

namespace {

// Scans the 2-walks starting at a. Accumulates "reached once" and
// "reached twice" masks over a's successors in increasing order; any bit
// in the twice-mask is a duplicated endpoint.
bool start_violates(const Digraph& d, int a, std::vector<std::uint64_t>& once,
                    std::vector<std::uint64_t>& twice) {
  const int words = d.words_per_row();
  std::fill(once.begin(), once.end(), 0);
  std::fill(twice.begin(), twice.end(), 0);
  const std::uint64_t* ra = d.row(a);
  bool hit = false;
  for (int k = 0; k < words; ++k) {
    std::uint64_t x = ra[k];
    while (x) {
      const int c = k * 64 + std::countr_zero(x);
      x &= x - 1;
      const std::uint64_t* rc = d.row(c);
      for (int t = 0; t < words; ++t) {
        twice[t] |= once[t] & rc[t];
        once[t] |= rc[t];
      }
    }
  }
  for (int t = 0; t < words; ++t) hit = hit || twice[t] != 0;
  return hit;
}

TwoWalkWitness extract_witness(const Digraph& d, int a,
                               const std::vector<std::uint64_t>& twice) {
  int b = -1;
  for (std::size_t k = 0; k < twice.size(); ++k)
    if (twice[k]) {
      b = static_cast<int>(k) * 64 + std::countr_zero(twice[k]);
      break;
    }
  int c1 = -1, c2 = -1;
  for (int c : d.successors(a).to_vector()) {
    if (!d.has_arc(c, b)) continue;
    if (c1 < 0) {
      c1 = c;
    } else {
      c2 = c;
      break;
    }
  }
  return {a, b, c1, c2};
}

}  // namespace

CheckReport is_f_free(const Digraph& d) {
  const int n = d.order();
  std::vector<std::uint64_t> once(d.words_per_row()), twice(d.words_per_row());
  for (int a = 0; a < n; ++a) {
    if (start_violates(d, a, once, twice))
      return {false, extract_witness(d, a, twice)};
  }
  return {true, std::nullopt};
}

CheckReport is_f_free_par(const Digraph& d) {
  const int n = d.order();
  int bad = n;
#pragma omp parallel
  {
    std::vector<std::uint64_t> once(d.words_per_row()), twice(d.words_per_row());
#pragma omp for schedule(dynamic, 8) reduction(min : bad)
    for (int a = 0; a < n; ++a) {
      if (start_violates(d, a, once, twice)) bad = std::min(bad, a);
    }
  }
  if (bad == n) return {true, std::nullopt};
  std::vector<std::uint64_t> once(d.words_per_row()), twice(d.words_per_row());
  start_violates(d, bad, once, twice);
  return {false, extract_witness(d, bad, twice)};
}

bool check_matrix_route(const Digraph& d) {
  return square(to_matrix(d)).zero_one();
}

VertexContext context(const Digraph& d, int v) {
  VertexContext ctx;
  ctx.pivot = v;
  ctx.v1 = d.successors(v);
  ctx.v2 = ctx.v1.complement();
  ctx.v3 = VertexSet(d.order());
  ctx.v4 = VertexSet(d.order());
  for (int u : ctx.v2.to_vector()) {
    if (d.successors(u) == ctx.v1)
      ctx.v3.add(u);
    else
      ctx.v4.add(u);
  }
  return ctx;
}

int alpha(const Digraph& d) {
  const int n = d.order();
  const int words = d.words_per_row();
  int dmax = 0;
  for (int v = 0; v < n; ++v) dmax = std::max(dmax, d.out_degree(v));
  int best = 0;
  for (int v = 0; v < n; ++v) {
    if (d.out_degree(v) != dmax) continue;
    const VertexSet v2 = d.successors(v).complement();
    for (int u = 0; u < n; ++u) {
      const std::uint64_t* r = d.row(u);
      int c = 0;
      for (int k = 0; k < words; ++k) c += std::popcount(r[k] & v2.words()[k]);
      best = std::max(best, c);
    }
  }
  return best;
}

std::optional<int> u_prime(const Digraph& d, const VertexContext& ctx, int u) {
  if (!ctx.v2.contains(u)) throw std::invalid_argument("u_prime: u is not in V2");
  const int words = d.words_per_row();
  const std::uint64_t* r = d.row(u);
  int into_v1 = 0;
  for (int k = 0; k < words; ++k) into_v1 += std::popcount(r[k] & ctx.v1.words()[k]);
  if (into_v1 != ctx.v1.count() - 1) return std::nullopt;
  for (int k = 0; k < words; ++k) {
    const std::uint64_t missing = ctx.v1.words()[k] & ~r[k];
    if (missing) return k * 64 + std::countr_zero(missing);
  }
  return std::nullopt;
}

}  // namespace ffree
