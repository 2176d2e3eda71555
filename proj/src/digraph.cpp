#include "ffree/digraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ffree {

namespace {

int words_for(int n) { return (n + 63) / 64; }

int popcount_words(const std::uint64_t* w, int words) {
  int c = 0;
  for (int k = 0; k < words; ++k) c += std::popcount(w[k]);
  return c;
}

}  // namespace

VertexSet::VertexSet(int n) : n_(n), w_(words_for(n), 0) {
  if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet VertexSet::full(int n) {
  VertexSet s(n);
  for (int k = 0; k < static_cast<int>(s.w_.size()); ++k) s.w_[k] = ~std::uint64_t{0};
  if (n % 64 != 0 && !s.w_.empty()) s.w_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_words(int n, const std::uint64_t* w) {
  VertexSet s(n);
  std::copy(w, w + s.w_.size(), s.w_.begin());
  if (n % 64 != 0 && !s.w_.empty()) s.w_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

void VertexSet::check(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
}

int VertexSet::count() const { return popcount_words(w_.data(), static_cast<int>(w_.size())); }

bool VertexSet::contains(int v) const {
  check(v);
  return (w_[v >> 6] >> (v & 63)) & 1;
}

void VertexSet::add(int v) {
  check(v);
  w_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::remove(int v) {
  check(v);
  w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

VertexSet VertexSet::complement() const {
  VertexSet s = full(n_);
  for (std::size_t k = 0; k < w_.size(); ++k) s.w_[k] &= ~w_[k];
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    std::uint64_t x = w_[k];
    while (x) {
      out.push_back(static_cast<int>(k) * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

Digraph::Digraph(int n) : n_(n), words_(words_for(n)) {
  if (n <= 0) throw std::invalid_argument("Digraph: order must be positive");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Digraph: vertex out of range");
}

const std::uint64_t* Digraph::row(int u) const {
  check_vertex(u);
  return bits_.data() + static_cast<std::size_t>(u) * words_;
}

bool Digraph::has_arc(int u, int w) const {
  check_vertex(u);
  check_vertex(w);
  return (bits_[static_cast<std::size_t>(u) * words_ + (w >> 6)] >> (w & 63)) & 1;
}

bool Digraph::add_arc(int u, int w) {
  check_vertex(u);
  check_vertex(w);
  if (u == w) throw std::invalid_argument("Digraph: loops are not allowed");
  std::uint64_t& word = bits_[static_cast<std::size_t>(u) * words_ + (w >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (w & 63);
  if (word & bit) return false;
  word |= bit;
  ++m_;
  return true;
}

bool Digraph::remove_arc(int u, int w) {
  check_vertex(u);
  check_vertex(w);
  std::uint64_t& word = bits_[static_cast<std::size_t>(u) * words_ + (w >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (w & 63);
  if (!(word & bit)) return false;
  word &= ~bit;
  --m_;
  return true;
}

VertexSet Digraph::successors(int u) const {
  return VertexSet::from_words(n_, row(u));
}

VertexSet Digraph::predecessors(int u) const {
  check_vertex(u);
  VertexSet s(n_);
  for (int v = 0; v < n_; ++v)
    if (v != u && has_arc(v, u)) s.add(v);
  return s;
}

int Digraph::out_degree(int u) const { return popcount_words(row(u), words_); }

int Digraph::in_degree(int u) const {
  check_vertex(u);
  int c = 0;
  const int wi = u >> 6;
  const std::uint64_t bit = std::uint64_t{1} << (u & 63);
  for (int v = 0; v < n_; ++v)
    if (bits_[static_cast<std::size_t>(v) * words_ + wi] & bit) ++c;
  return c;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    const std::uint64_t* r = row(u);
    for (int k = 0; k < words_; ++k) {
      std::uint64_t x = r[k];
      while (x) {
        out.emplace_back(u, k * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
  return out;
}

Digraph reverse(const Digraph& d) {
  Digraph r(d.order());
  for (auto [u, w] : d.arcs()) r.add_arc(w, u);
  return r;
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  Digraph u(a.order() + b.order());
  for (auto [x, y] : a.arcs()) u.add_arc(x, y);
  const int off = a.order();
  for (auto [x, y] : b.arcs()) u.add_arc(off + x, off + y);
  return u;
}

Digraph induced(const Digraph& d, const std::vector<int>& xs) {
  std::vector<int> v = xs;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.empty()) throw std::invalid_argument("induced: vertex set must be nonempty");
  for (int x : v)
    if (x < 0 || x >= d.order()) throw std::out_of_range("induced: vertex out of range");
  Digraph h(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (i != j && d.has_arc(v[i], v[j])) h.add_arc(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Degrees degrees(const Digraph& d) {
  Degrees g;
  const int n = d.order();
  g.out.resize(n);
  g.in.assign(n, 0);
  for (int u = 0; u < n; ++u) g.out[u] = d.out_degree(u);
  for (auto [u, w] : d.arcs()) {
    (void)u;
    ++g.in[w];
  }
  g.max_out = *std::max_element(g.out.begin(), g.out.end());
  g.max_in = *std::max_element(g.in.begin(), g.in.end());
  return g;
}

int e_between(const Digraph& d, const VertexSet& s, const VertexSet& t) {
  if (s.universe() != d.order() || t.universe() != d.order())
    throw std::invalid_argument("e_between: set universe mismatch");
  int c = 0;
  const int words = d.words_per_row();
  for (int u : s.to_vector()) {
    const std::uint64_t* r = d.row(u);
    for (int k = 0; k < words; ++k) c += std::popcount(r[k] & t.words()[k]);
  }
  return c;
}

ZeroOneMatrix::ZeroOneMatrix(int n) : n(n), a(static_cast<std::size_t>(n) * n, 0) {
  if (n <= 0) throw std::invalid_argument("ZeroOneMatrix: order must be positive");
}

int ZeroOneMatrix::trace() const {
  int t = 0;
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t;
}

NatMatrix::NatMatrix(int n) : n(n), a(static_cast<std::size_t>(n) * n, 0) {
  if (n <= 0) throw std::invalid_argument("NatMatrix: order must be positive");
}

std::int32_t NatMatrix::max_entry() const {
  std::int32_t m = 0;
  for (std::int32_t x : a) m = std::max(m, x);
  return m;
}

bool NatMatrix::zero_one() const {
  for (std::int32_t x : a)
    if (x != 0 && x != 1) return false;
  return true;
}

ZeroOneMatrix to_matrix(const Digraph& d) {
  ZeroOneMatrix m(d.order());
  for (auto [u, w] : d.arcs()) m.at(u, w) = 1;
  return m;
}

Digraph from_matrix(const ZeroOneMatrix& m) {
  for (int i = 0; i < m.n; ++i)
    if (m.at(i, i) != 0) throw std::invalid_argument("from_matrix: nonzero diagonal");
  Digraph d(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j && m.at(i, j)) d.add_arc(i, j);
  return d;
}

NatMatrix square(const ZeroOneMatrix& m) {
  const int n = m.n;
  NatMatrix s(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!m.at(i, k)) continue;
      for (int j = 0; j < n; ++j) s.at(i, j) += m.at(k, j);
    }
  return s;
}

NatMatrix square_par(const ZeroOneMatrix& m) {
  const int n = m.n;
  NatMatrix s(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!m.at(i, k)) continue;
      for (int j = 0; j < n; ++j) s.at(i, j) += m.at(k, j);
    }
  return s;
}

}  // namespace ffree
