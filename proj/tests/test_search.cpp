#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "ffree/check.hpp"
#include "ffree/families.hpp"
#include "ffree/search.hpp"

using namespace ffree;

namespace {

std::string bits_str(const std::vector<std::uint8_t>& bits) {
  std::string s;
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

Digraph from_mask(int n, unsigned mask) {
  Digraph d(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) {
      if (u == w) continue;
      if (mask >> bit & 1u) d.add_arc(u, w);
      ++bit;
    }
  return d;
}

// reference maximum by plain enumeration of every digraph on n vertices
std::pair<int, std::string> enumerated_max(int n) {
  const int pairs = n * (n - 1);
  int best = -1;
  std::string best_bits;
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    const Digraph d = from_mask(n, mask);
    if (!is_f_free(d).ok) continue;
    std::string bits(pairs, '0');
    for (int i = 0; i < pairs; ++i)
      if (mask >> i & 1u) bits[i] = '1';
    const int sz = d.size();
    if (sz > best || (sz == best && bits < best_bits)) {
      best = sz;
      best_bits = bits;
    }
  }
  return {best, best_bits};
}

bool naive_arc_maximal(const Digraph& d) {
  Digraph t = d;
  for (int u = 0; u < d.order(); ++u)
    for (int w = 0; w < d.order(); ++w) {
      if (u == w || d.has_arc(u, w)) continue;
      t.add_arc(u, w);
      const bool still = is_f_free(t).ok;
      t.remove_arc(u, w);
      if (still) return false;
    }
  return true;
}

Digraph random_f_free(int n, std::mt19937& rng) {
  Digraph d(n);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (u != w) pairs.emplace_back(u, w);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::uniform_int_distribution<int> keep(0, 3);
  for (auto [u, w] : pairs) {
    if (keep(rng) == 0) continue;  // leave some slack so maximality varies
    d.add_arc(u, w);
    if (!is_f_free(d).ok) d.remove_arc(u, w);
  }
  return d;
}

}  // namespace

TEST_CASE("known maxima for tiny orders") {
  struct {
    int n;
    int max;
    const char* bits;
    std::uint64_t nodes;
  } expect[] = {
      {1, 0, "", 1},
      {2, 2, "11", 5},
      {3, 4, "001111", 71},
      {4, 7, "001010110111", 2845},
      {5, 10, "00000001111011101101", 102477},
  };
  for (const auto& e : expect) {
    const SearchResult res = brute_force_max(e.n);
    CHECK(res.n == e.n);
    CHECK(res.max_size == e.max);
    CHECK(bits_str(res.witness_bits) == e.bits);
    CHECK(res.nodes_explored == e.nodes);
    CHECK(res.complete);
    CHECK(res.witness.order() == e.n);
    CHECK(res.witness.size() == e.max);
    CHECK(is_f_free(res.witness).ok);
  }
}

TEST_CASE("search agrees with plain enumeration") {
  for (int n = 2; n <= 4; ++n) {
    const auto [best, bits] = enumerated_max(n);
    const SearchResult res = brute_force_max(n);
    CHECK(res.max_size == best);
    CHECK(bits_str(res.witness_bits) == bits);
  }
}

TEST_CASE("witness bits describe the witness digraph") {
  const SearchResult res = brute_force_max(4);
  int bit = 0;
  for (int u = 0; u < 4; ++u)
    for (int w = 0; w < 4; ++w) {
      if (u == w) continue;
      CHECK(res.witness.has_arc(u, w) == (res.witness_bits[bit] != 0));
      ++bit;
    }
  CHECK(bit == static_cast<int>(res.witness_bits.size()));
}

TEST_CASE("node budget truncates the run") {
  SearchBudget budget;
  budget.max_nodes = 500;
  const SearchResult res = brute_force_max(5, budget);
  CHECK(!res.complete);
  CHECK(res.nodes_explored <= 2 * budget.max_nodes);  // cap applies per subtree
  CHECK(res.max_size <= 10);
  CHECK(is_f_free(res.witness).ok);
}

TEST_CASE("time budget returns early") {
  SearchBudget budget;
  budget.max_seconds = 0.2;
  const SearchResult res = brute_force_max(7, budget);
  CHECK(!res.complete);
  CHECK(res.seconds < 30.0);
  CHECK(is_f_free(res.witness).ok);
}

TEST_CASE("results do not depend on the thread count") {
  SearchResult base;
  for (int threads : {1, 2, 4}) {
    SearchOptions opts;
    opts.threads = threads;
    const SearchResult res = brute_force_max(5, {}, opts);
    if (threads == 1) {
      base = res;
      continue;
    }
    CHECK(res.max_size == base.max_size);
    CHECK(res.witness_bits == base.witness_bits);
    CHECK(res.nodes_explored == base.nodes_explored);
    CHECK(res.nodes_pruned == base.nodes_pruned);
  }
}

TEST_CASE("frontier depth changes node counts only") {
  const SearchResult base = brute_force_max(5);
  for (int depth : {4, 8, 20}) {
    SearchOptions opts;
    opts.fanout_depth = depth;
    const SearchResult res = brute_force_max(5, {}, opts);
    CHECK(res.complete);
    CHECK(res.max_size == base.max_size);
    CHECK(res.witness_bits == base.witness_bits);
  }
}

TEST_CASE("audit mode leaves results unchanged") {
  const SearchResult base = brute_force_max(4);
  SearchOptions opts;
  opts.audit = true;
  const SearchResult res = brute_force_max(4, {}, opts);
  CHECK(res.max_size == base.max_size);
  CHECK(res.witness_bits == base.witness_bits);
  CHECK(res.nodes_explored == base.nodes_explored);
}

TEST_CASE("fan-in bound preserves the answer") {
  for (int n : {4, 5}) {
    const SearchResult base = brute_force_max(n);
    SearchOptions opts;
    opts.fanin_bound = true;
    const SearchResult res = brute_force_max(n, {}, opts);
    CHECK(res.complete);
    CHECK(res.max_size == base.max_size);
    CHECK(res.witness_bits == base.witness_bits);
  }
}

TEST_CASE("symmetry cut preserves the maximum size") {
  // the cut can discard the lexicographically smallest witness, so only
  // the value and the admissibility of whatever witness remains are fixed
  SearchOptions opts;
  opts.symmetry_break = true;
  const SearchResult res = brute_force_max(5, {}, opts);
  CHECK(res.complete);
  CHECK(res.max_size == 10);
  CHECK(res.witness.size() == 10);
  CHECK(is_f_free(res.witness).ok);
}

TEST_CASE("progress callback fires") {
  int calls = 0;
  SearchOptions opts;
  opts.progress = [&](const SearchProgress& p) {
    ++calls;
    CHECK(p.incumbent >= 0);
  };
  brute_force_max(4, {}, opts);
  CHECK(calls > 0);
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(brute_force_max(0), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_max(-3), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_max(65), std::invalid_argument);
}

TEST_CASE("arc maximality of constructed members") {
  const Digraph d = construct(default_spec(Family::D1, 8));
  CHECK(is_arc_maximal(d));
  Digraph e = d;
  const auto arcs = d.arcs();
  e.remove_arc(arcs[0].first, arcs[0].second);
  if (is_f_free(e).ok) CHECK(!is_arc_maximal(e));
}

TEST_CASE("arc maximality rejects inadmissible input") {
  Digraph d(4);
  d.add_arc(0, 1);
  d.add_arc(0, 2);
  d.add_arc(1, 3);
  d.add_arc(2, 3);
  CHECK_THROWS_AS(is_arc_maximal(d), std::invalid_argument);
}

TEST_CASE("arc maximality agrees with the direct definition") {
  std::mt19937 rng(20210521);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 5;
    const Digraph d = random_f_free(n, rng);
    CHECK(is_arc_maximal(d) == naive_arc_maximal(d));
  }
}
