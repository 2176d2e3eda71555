#include "ffree/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "ffree/check.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ffree {

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
  int size = -1;
  std::vector<std::uint8_t> bits;

  // bigger size wins; ties go to the lexicographically smaller string
  bool better_than(const Candidate& o) const {
    if (size != o.size) return size > o.size;
    return bits < o.bits;
  }
};

// One depth-first worker. Owns its whole pruning state, so subtrees can
// run on any thread with identical behaviour.
struct Dfs {
  int n = 0;
  int P = 0;
  const std::pair<int, int>* pairs = nullptr;

  std::vector<std::uint64_t> out, in;  // adjacency masks (n <= 64)
  std::vector<std::uint8_t> cnt;       // 2-walk counts per ordered pair
  std::vector<int> od;                 // present outdegrees
  std::vector<std::uint8_t> bits;      // decisions along the current path
  int cur = 0;

  int floor_size = 0;  // prune strictly below this; ties stay alive
  Candidate best;

  std::uint64_t nodes = 0, pruned = 0;
  std::uint64_t node_cap = UINT64_MAX;
  bool capped = false;

  bool fanin = false, symmetry = false, audit_mode = false;
  Clock::time_point deadline{};
  bool has_deadline = false;

  explicit Dfs(int n_, const std::pair<int, int>* ps)
      : n(n_), P(n_ * (n_ - 1)), pairs(ps), out(n_, 0), in(n_, 0),
        cnt(static_cast<std::size_t>(n_) * n_, 0), od(n_, 0),
        bits(static_cast<std::size_t>(P), 0) {}

  int pair_index(int u, int w) const { return u * (n - 1) + w - (w > u ? 1 : 0); }

  bool try_add(int u, int w) {
    bool ok = true;
    std::uint64_t xs = in[u];
    while (xs) {
      const int x = std::countr_zero(xs);
      xs &= xs - 1;
      if (++cnt[static_cast<std::size_t>(x) * n + w] >= 2) ok = false;
    }
    std::uint64_t ys = out[w];
    while (ys) {
      const int y = std::countr_zero(ys);
      ys &= ys - 1;
      if (++cnt[static_cast<std::size_t>(u) * n + y] >= 2) ok = false;
    }
    out[u] |= std::uint64_t{1} << w;
    in[w] |= std::uint64_t{1} << u;
    ++od[u];
    ++cur;
    return ok;
  }

  void undo_add(int u, int w) {
    out[u] &= ~(std::uint64_t{1} << w);
    in[w] &= ~(std::uint64_t{1} << u);
    --od[u];
    --cur;
    std::uint64_t xs = in[u];
    while (xs) {
      const int x = std::countr_zero(xs);
      xs &= xs - 1;
      --cnt[static_cast<std::size_t>(x) * n + w];
    }
    std::uint64_t ys = out[w];
    while (ys) {
      const int y = std::countr_zero(ys);
      ys &= ys - 1;
      --cnt[static_cast<std::size_t>(u) * n + y];
    }
  }

  void audit_check() const {
    std::vector<std::uint8_t> ref(static_cast<std::size_t>(n) * n, 0);
    int arcs = 0;
    for (int a = 0; a < n; ++a) {
      arcs += std::popcount(out[a]);
      std::uint64_t cs = out[a];
      while (cs) {
        const int c = std::countr_zero(cs);
        cs &= cs - 1;
        std::uint64_t bs = out[c];
        while (bs) {
          const int b = std::countr_zero(bs);
          bs &= bs - 1;
          ++ref[static_cast<std::size_t>(a) * n + b];
        }
      }
    }
    if (ref != cnt || arcs != cur)
      throw std::logic_error("search audit: incremental state diverged from recount");
  }

  // Undecided arcs out of current successor sets are capped by the
  // one-walk rule; the best single cap is an admissible tightening.
  int fanin_savings(int k) const {
    int best_sav = 0;
    for (int v = 0; v < n; ++v) {
      if (!out[v]) continue;
      int sav = 0;
      for (int t = 0; t < n; ++t) {
        int undec = 0;
        std::uint64_t cs = out[v];
        while (cs) {
          const int c = std::countr_zero(cs);
          cs &= cs - 1;
          if (c != t && pair_index(c, t) >= k) ++undec;
        }
        if (undec == 0) continue;
        int cap = 1 - cnt[static_cast<std::size_t>(v) * n + t];
        if (cap < 0) cap = 0;
        if (undec > cap) sav += undec - cap;
      }
      best_sav = std::max(best_sav, sav);
    }
    return best_sav;
  }

  bool symmetry_cut(int k) const {
    const int undec0 = std::max(0, (n - 1) - k);
    const int reach0 = od[0] + undec0;
    for (int v = 1; v < n; ++v)
      if (od[v] > reach0) return true;
    return false;
  }

  void record_leaf() {
    Candidate cand{cur, bits};
    if (cand.better_than(best)) best = std::move(cand);
  }

  int live_floor() const { return std::max(floor_size, best.size); }

  void dfs(int k) {
    if (capped) return;
    if (++nodes >= node_cap) capped = true;
    if (has_deadline && (nodes & 4095) == 0 && Clock::now() >= deadline) capped = true;
    if (audit_mode) audit_check();
    if (k == P) {
      record_leaf();
      return;
    }
    int potential = cur + (P - k);
    if (potential < live_floor()) {
      ++pruned;
      return;
    }
    if (symmetry && symmetry_cut(k)) {
      ++pruned;
      return;
    }
    if (fanin && potential - live_floor() <= 2) {
      if (potential - fanin_savings(k) < live_floor()) {
        ++pruned;
        return;
      }
    }
    const auto [u, w] = pairs[k];
    if (try_add(u, w)) {
      bits[k] = 1;
      dfs(k + 1);
    } else {
      ++pruned;
    }
    undo_add(u, w);
    bits[k] = 0;
    dfs(k + 1);
  }

  // replays a frontier prefix; every present decision must be feasible
  void replay(const std::vector<std::uint8_t>& prefix) {
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      bits[k] = prefix[k];
      if (prefix[k]) {
        if (!try_add(pairs[k].first, pairs[k].second))
          throw std::logic_error("search: infeasible frontier prefix");
      }
    }
  }
};

struct SubtreeOutcome {
  Candidate best;
  std::uint64_t nodes = 0, pruned = 0;
  bool capped = false;
};

}  // namespace

SearchResult brute_force_max(int n, const SearchBudget& budget, const SearchOptions& opts) {
  if (n < 1) throw std::invalid_argument("brute_force_max: n must be positive");
  if (n > 64) throw std::invalid_argument("brute_force_max: n beyond 64 is unsupported");

  const auto t0 = Clock::now();
  const int P = n * (n - 1);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(P);
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (u != w) pairs.emplace_back(u, w);

  const bool timed = budget.max_seconds > 0.0;
  const auto deadline =
      t0 + std::chrono::duration_cast<Clock::duration>(
               std::chrono::duration<double>(timed ? budget.max_seconds : 0.0));

  // Greedy descent: take every feasible arc in pair order. Seeds the
  // incumbent so frontier generation can prune early.
  Candidate seed;
  {
    Dfs g(n, pairs.data());
    for (int k = 0; k < P; ++k) {
      if (g.try_add(pairs[k].first, pairs[k].second)) {
        g.bits[k] = 1;
      } else {
        g.undo_add(pairs[k].first, pairs[k].second);
      }
    }
    seed.size = g.cur;
    seed.bits = g.bits;
  }

  // Frontier of subtree prefixes at a fixed decision depth, generated by
  // the same present-first walk the workers use.
  const int fd = std::clamp(opts.fanout_depth, 0, P);
  std::vector<std::vector<std::uint8_t>> frontier;
  std::uint64_t gen_nodes = 0, gen_pruned = 0;
  bool truncated = false;
  {
    Dfs g(n, pairs.data());
    g.floor_size = seed.size;
    g.fanin = opts.fanin_bound;
    g.symmetry = opts.symmetry_break;
    g.audit_mode = opts.audit;
    std::function<void(int)> walk = [&](int k) {
      if (truncated) return;
      if (k == fd) {
        frontier.emplace_back(g.bits.begin(), g.bits.begin() + fd);
        return;
      }
      ++g.nodes;
      if (budget.max_nodes && g.nodes >= budget.max_nodes) truncated = true;
      if (g.audit_mode) g.audit_check();
      const int potential = g.cur + (P - k);
      if (potential < g.floor_size) {
        ++g.pruned;
        return;
      }
      if (g.symmetry && g.symmetry_cut(k)) {
        ++g.pruned;
        return;
      }
      if (g.fanin && potential - g.floor_size <= 2 &&
          potential - g.fanin_savings(k) < g.floor_size) {
        ++g.pruned;
        return;
      }
      const auto [u, w] = pairs[k];
      if (g.try_add(u, w)) {
        g.bits[k] = 1;
        walk(k + 1);
      } else {
        ++g.pruned;
      }
      g.undo_add(u, w);
      g.bits[k] = 0;
      walk(k + 1);
    };
    walk(0);
    gen_nodes = g.nodes;
    gen_pruned = g.pruned;
  }

  Candidate global_best = seed;
  std::uint64_t nodes_total = gen_nodes;
  std::uint64_t pruned_total = gen_pruned;
  bool any_capped = false;
  bool budget_stop = truncated;

  int threads = opts.threads;
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif

  constexpr std::size_t kWave = 32;
  for (std::size_t base = 0; base < frontier.size() && !budget_stop; base += kWave) {
    const std::size_t count = std::min(kWave, frontier.size() - base);
    if (budget.max_nodes && nodes_total >= budget.max_nodes) {
      budget_stop = true;
      break;
    }
    if (timed && Clock::now() >= deadline) {
      budget_stop = true;
      break;
    }
    std::uint64_t cap = UINT64_MAX;
    if (budget.max_nodes) {
      const std::uint64_t remaining = budget.max_nodes - nodes_total;
      cap = std::max<std::uint64_t>(1, remaining / count);
    }
    const int wave_floor = global_best.size;
    std::vector<SubtreeOutcome> outcome(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (std::size_t i = 0; i < count; ++i) {
      Dfs d(n, pairs.data());
      d.floor_size = wave_floor;
      d.node_cap = cap;
      d.fanin = opts.fanin_bound;
      d.symmetry = opts.symmetry_break;
      d.audit_mode = opts.audit;
      if (timed) {
        d.deadline = deadline;
        d.has_deadline = true;
      }
      d.replay(frontier[base + i]);
      d.dfs(fd);
      outcome[i] = {std::move(d.best), d.nodes, d.pruned, d.capped};
    }
    for (const auto& o : outcome) {
      nodes_total += o.nodes;
      pruned_total += o.pruned;
      any_capped = any_capped || o.capped;
      if (o.best.size >= 0 && o.best.better_than(global_best)) global_best = o.best;
    }
    if (opts.progress) {
      opts.progress({nodes_total, pruned_total, global_best.size, fd});
    }
  }

  SearchResult res;
  res.n = n;
  res.max_size = global_best.size;
  res.witness_bits = global_best.bits;
  res.nodes_explored = nodes_total;
  res.nodes_pruned = pruned_total;
  res.complete = !budget_stop && !any_capped;
  res.witness = Digraph(n);
  for (int k = 0; k < P; ++k)
    if (global_best.bits[k]) res.witness.add_arc(pairs[k].first, pairs[k].second);
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

bool is_arc_maximal(const Digraph& d) {
  const auto rep = is_f_free(d);
  if (!rep.ok) throw std::invalid_argument("is_arc_maximal: input fails the walk check");
  const int n = d.order();
  std::vector<int> cnt(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int c : d.successors(a).to_vector())
      for (int b : d.successors(c).to_vector()) ++cnt[static_cast<std::size_t>(a) * n + b];
  std::vector<std::vector<int>> preds(n);
  for (auto [u, w] : d.arcs()) preds[w].push_back(u);
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) {
      if (u == w || d.has_arc(u, w)) continue;
      bool breaks = false;
      for (int x : preds[u])
        if (cnt[static_cast<std::size_t>(x) * n + w] >= 1) {
          breaks = true;
          break;
        }
      if (!breaks)
        for (int y : d.successors(w).to_vector())
          if (cnt[static_cast<std::size_t>(u) * n + y] >= 1) {
            breaks = true;
            break;
          }
      if (!breaks) return false;
    }
  return true;
}

}  // namespace ffree
