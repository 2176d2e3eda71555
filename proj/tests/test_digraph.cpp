#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffree/digraph.hpp"

using namespace ffree;

TEST_CASE("vertex set basics") {
  VertexSet s(70);
  CHECK(s.universe() == 70);
  CHECK(s.count() == 0);
  CHECK(s.empty());
  s.add(0);
  s.add(63);
  s.add(64);
  s.add(69);
  CHECK(s.count() == 4);
  CHECK(s.contains(63));
  CHECK(s.contains(64));
  CHECK(!s.contains(1));
  s.remove(63);
  CHECK(s.count() == 3);
  CHECK(s.to_vector() == std::vector<int>{0, 64, 69});

  const VertexSet c = s.complement();
  CHECK(c.count() == 67);
  CHECK(!c.contains(0));
  CHECK(c.contains(63));

  CHECK(VertexSet::full(5).to_vector() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(s.add(70), std::out_of_range);
  CHECK_THROWS_AS(s.add(-1), std::out_of_range);
}

TEST_CASE("complement respects the tail word") {
  // universe not a multiple of 64, so the last word has spare bits
  const VertexSet empty(70);
  CHECK(empty.complement().count() == 70);
  CHECK(empty.complement().complement() == empty);
}

TEST_CASE("digraph arcs") {
  Digraph d(5);
  CHECK(d.order() == 5);
  CHECK(d.size() == 0);
  CHECK(d.add_arc(0, 1));
  CHECK(!d.add_arc(0, 1));
  CHECK(d.size() == 1);
  CHECK(d.has_arc(0, 1));
  CHECK(!d.has_arc(1, 0));
  CHECK_THROWS_AS(d.add_arc(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(d.has_arc(0, 5), std::out_of_range);
  CHECK(d.remove_arc(0, 1));
  CHECK(!d.remove_arc(0, 1));
  CHECK(d.size() == 0);
  CHECK_THROWS_AS(Digraph(0), std::invalid_argument);
}

TEST_CASE("neighbourhoods and degrees") {
  Digraph d(4);
  d.add_arc(0, 1);
  d.add_arc(0, 2);
  d.add_arc(1, 2);
  d.add_arc(3, 0);
  CHECK(d.successors(0).to_vector() == std::vector<int>{1, 2});
  CHECK(d.predecessors(2).to_vector() == std::vector<int>{0, 1});
  CHECK(d.out_degree(0) == 2);
  CHECK(d.in_degree(0) == 1);
  CHECK(d.out_degree(2) == 0);

  const Degrees deg = degrees(d);
  CHECK(deg.out == std::vector<int>{2, 1, 0, 1});
  CHECK(deg.in == std::vector<int>{1, 1, 2, 0});
  CHECK(deg.max_out == 2);
  CHECK(deg.max_in == 2);

  CHECK(d.arcs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {3, 0}});
}

TEST_CASE("reverse flips every arc") {
  Digraph d(6);
  d.add_arc(0, 5);
  d.add_arc(2, 3);
  d.add_arc(3, 2);
  const Digraph r = reverse(d);
  CHECK(r.size() == d.size());
  CHECK(r.has_arc(5, 0));
  CHECK(r.has_arc(2, 3));
  CHECK(r.has_arc(3, 2));
  CHECK(!r.has_arc(0, 5));
  CHECK(reverse(r) == d);
}

TEST_CASE("disjoint union shifts the second block") {
  Digraph a(2);
  a.add_arc(0, 1);
  Digraph b(3);
  b.add_arc(2, 0);
  const Digraph u = disjoint_union(a, b);
  CHECK(u.order() == 5);
  CHECK(u.size() == 2);
  CHECK(u.has_arc(0, 1));
  CHECK(u.has_arc(4, 2));
}

TEST_CASE("induced subdigraph relabels in id order") {
  Digraph d(5);
  d.add_arc(1, 3);
  d.add_arc(3, 4);
  d.add_arc(4, 1);
  d.add_arc(0, 1);
  const Digraph s = induced(d, {4, 1, 3});
  CHECK(s.order() == 3);
  // 1 -> 0, 3 -> 1, 4 -> 2
  CHECK(s.has_arc(0, 1));
  CHECK(s.has_arc(1, 2));
  CHECK(s.has_arc(2, 0));
  CHECK(s.size() == 3);
  CHECK(induced(d, {1, 3, 1, 4, 3}) == s);
  CHECK_THROWS_AS(induced(d, {}), std::invalid_argument);
}

TEST_CASE("arc counting between sets") {
  Digraph d(4);
  d.add_arc(0, 2);
  d.add_arc(1, 2);
  d.add_arc(1, 3);
  d.add_arc(2, 0);
  VertexSet s(4), t(4);
  s.add(0);
  s.add(1);
  t.add(2);
  t.add(3);
  CHECK(e_between(d, s, t) == 3);
  CHECK(e_between(d, t, s) == 1);
  CHECK(e_between(d, s, s) == 0);
  CHECK(e_between(d, VertexSet::full(4), VertexSet::full(4)) == 4);
}

TEST_CASE("matrix conversions round trip") {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(2, 0);
  const ZeroOneMatrix m = to_matrix(d);
  CHECK(m.n == 3);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.trace() == 0);
  CHECK(from_matrix(m) == d);

  ZeroOneMatrix loop(2);
  loop.at(0, 0) = 1;
  CHECK_THROWS_AS(from_matrix(loop), std::invalid_argument);
}

TEST_CASE("square of a 2-cycle is the identity") {
  Digraph d(2);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  const NatMatrix sq = square(to_matrix(d));
  CHECK(sq.at(0, 0) == 1);
  CHECK(sq.at(1, 1) == 1);
  CHECK(sq.at(0, 1) == 0);
  CHECK(sq.at(1, 0) == 0);
  CHECK(sq.zero_one());
  CHECK(sq.max_entry() == 1);
}

TEST_CASE("square counts 2-walks") {
  // 0 -> {1,2} -> 3 gives two walks into the same cell
  Digraph d(4);
  d.add_arc(0, 1);
  d.add_arc(0, 2);
  d.add_arc(1, 3);
  d.add_arc(2, 3);
  const NatMatrix sq = square(to_matrix(d));
  CHECK(sq.at(0, 3) == 2);
  CHECK(!sq.zero_one());
  CHECK(sq.max_entry() == 2);
}

TEST_CASE("serial and parallel squares agree") {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 17, 64, 65, 130}) {
    ZeroOneMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) m.at(i, j) = rng() & 1;
    CHECK(square(m) == square_par(m));
  }
}
