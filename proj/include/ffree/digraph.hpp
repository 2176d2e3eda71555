#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ffree {

// Set of vertex ids 0..n-1 backed by 64-bit words.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int n);
  static VertexSet full(int n);
  // Builds a set from (n+63)/64 raw words; bits past n are dropped.
  static VertexSet from_words(int n, const std::uint64_t* w);

  int universe() const { return n_; }
  int count() const;
  bool empty() const { return count() == 0; }
  bool contains(int v) const;
  void add(int v);
  void remove(int v);

  VertexSet complement() const;
  std::vector<int> to_vector() const;

  const std::vector<std::uint64_t>& words() const { return w_; }

  bool operator==(const VertexSet&) const = default;

private:
  void check(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Strict digraph on vertices 0..n-1: no loops, no parallel arcs.
// Successor sets are bit rows, so neighbourhood intersections and
// arc counts reduce to word operations.
class Digraph {
public:
  explicit Digraph(int n);

  int order() const { return n_; }
  int size() const { return m_; }
  int words_per_row() const { return words_; }

  bool has_arc(int u, int w) const;
  bool add_arc(int u, int w);     // false if the arc was already present
  bool remove_arc(int u, int w);  // false if the arc was absent

  const std::uint64_t* row(int u) const;
  VertexSet successors(int u) const;
  VertexSet predecessors(int u) const;
  int out_degree(int u) const;
  int in_degree(int u) const;

  // All arcs in lexicographic (tail, head) order.
  std::vector<std::pair<int, int>> arcs() const;

  bool operator==(const Digraph&) const = default;

private:
  void check_vertex(int v) const;
  int n_ = 0;
  int words_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct Degrees {
  std::vector<int> out;
  std::vector<int> in;
  int max_out = 0;
  int max_in = 0;
};

Digraph reverse(const Digraph& d);
Digraph disjoint_union(const Digraph& a, const Digraph& b);

// Subdigraph on the vertices listed in xs (deduplicated), relabelled
// 0..|xs|-1 by increasing original id. xs must be nonempty.
Digraph induced(const Digraph& d, const std::vector<int>& xs);

Degrees degrees(const Digraph& d);

// Number of arcs with tail in s and head in t (s and t may overlap).
int e_between(const Digraph& d, const VertexSet& s, const VertexSet& t);

// 0-1 matrix. Parsing may produce a nonzero diagonal; from_matrix is
// where strictness is enforced.
struct ZeroOneMatrix {
  int n = 0;
  std::vector<std::uint8_t> a;

  explicit ZeroOneMatrix(int n);
  std::uint8_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  int trace() const;

  bool operator==(const ZeroOneMatrix&) const = default;
};

// Exact integer matrix (holds products of 0-1 matrices; entries <= n).
struct NatMatrix {
  int n = 0;
  std::vector<std::int32_t> a;

  explicit NatMatrix(int n);
  std::int32_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int32_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int32_t max_entry() const;
  bool zero_one() const;

  bool operator==(const NatMatrix&) const = default;
};

ZeroOneMatrix to_matrix(const Digraph& d);
Digraph from_matrix(const ZeroOneMatrix& m);  // rejects a nonzero diagonal

NatMatrix square(const ZeroOneMatrix& m);      // serial reference
NatMatrix square_par(const ZeroOneMatrix& m);  // OpenMP row-parallel kernel

}  // namespace ffree
