#include "ffree/recognize.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ffree {

namespace {

// Scratch for one pivot attempt: the candidate split V1 = N+(pivot),
// V2 = the rest, with successor lists cut along it.
struct Split {
  const Digraph* g = nullptr;
  int n = 0, h = 0, m = 0;
  std::vector<int> v1, v2;      // sorted input labels
  std::vector<char> in_v1;
  std::vector<int> canon;       // input label -> canonical index, -1 unset

  std::vector<int> v1_outs(int u) const {
    std::vector<int> r;
    for (int t : g->successors(u).to_vector())
      if (in_v1[t]) r.push_back(t);
    return r;
  }

  std::vector<int> v2_outs(int u) const {
    std::vector<int> r;
    for (int t : g->successors(u).to_vector())
      if (!in_v1[t]) r.push_back(t);
    return r;
  }
};

std::optional<Split> make_split(const Digraph& g, int pivot, int h) {
  Split sp;
  sp.g = &g;
  sp.n = g.order();
  sp.h = h;
  sp.m = sp.n - h;
  const VertexSet succ = g.successors(pivot);
  if (succ.count() != h) return std::nullopt;
  sp.v1 = succ.to_vector();
  sp.in_v1.assign(sp.n, 0);
  for (int u : sp.v1) sp.in_v1[u] = 1;
  for (int u = 0; u < sp.n; ++u)
    if (!sp.in_v1[u]) sp.v2.push_back(u);
  sp.canon.assign(sp.n, -1);
  return sp;
}

// Unique mutual pair inside V1 plus depth-2 in-trees under it. Fills
// parent (input labels) for the non-root vertices.
bool parse_two_cycle_forest(const Split& sp, int& r0, int& r1, std::vector<int>& parent) {
  r0 = r1 = -1;
  for (std::size_t i = 0; i < sp.v1.size(); ++i)
    for (std::size_t j = i + 1; j < sp.v1.size(); ++j) {
      const int a = sp.v1[i], b = sp.v1[j];
      if (sp.g->has_arc(a, b) && sp.g->has_arc(b, a)) {
        if (r0 != -1) return false;
        r0 = a;
        r1 = b;
      }
    }
  if (r0 == -1) return false;
  parent.assign(sp.n, -1);
  for (int u : sp.v1) {
    int cnt = 0;
    for (int s : sp.v1)
      if (sp.g->has_arc(s, u)) {
        parent[u] = s;
        ++cnt;
      }
    if (u == r0 || u == r1) {
      if (cnt != 1 || parent[u] != (u == r0 ? r1 : r0)) return false;
    } else if (cnt != 1) {
      return false;
    }
  }
  for (int u : sp.v1) {
    if (u == r0 || u == r1) continue;
    const int p = parent[u];
    if (p == r0 || p == r1) continue;
    if (parent[p] != r0 && parent[p] != r1) return false;
  }
  return true;
}

// One in-degree-zero root, everything else one parent, depth <= 2.
bool parse_rooted_forest(const Split& sp, int& root, std::vector<int>& parent) {
  root = -1;
  parent.assign(sp.n, -1);
  for (int u : sp.v1) {
    int cnt = 0;
    for (int s : sp.v1)
      if (sp.g->has_arc(s, u)) {
        parent[u] = s;
        ++cnt;
      }
    if (cnt == 0) {
      if (root != -1) return false;
      root = u;
    } else if (cnt != 1) {
      return false;
    }
  }
  if (root == -1) return false;
  for (int u : sp.v1) {
    if (u == root) continue;
    const int p = parent[u];
    if (p != root && parent[p] != root) return false;
  }
  return true;
}

// x sends to every other V1 vertex; exactly the returners in ret may
// send back to x and nothing else moves inside V1. D2/D6 expect one
// returner (the 2-cycle partner), D4 none.
bool parse_star(const Split& sp, bool with_return, int& x, int& y) {
  x = y = -1;
  for (int u : sp.v1) {
    const auto outs = sp.v1_outs(u);
    if (static_cast<int>(outs.size()) == sp.h - 1) {
      if (x != -1) return false;
      x = u;
    }
  }
  if (x == -1) return false;
  for (int u : sp.v1) {
    if (u == x) continue;
    const auto outs = sp.v1_outs(u);
    if (outs.empty()) continue;
    if (!with_return || outs.size() != 1 || outs[0] != x || y != -1) return false;
    y = u;
  }
  if (with_return && y == -1) return false;
  if (!with_return)
    for (int u : sp.v1)
      if (u != x && sp.g->has_arc(u, x)) return false;
  return true;
}

// Single successor inside V2 per vertex, or none.
bool parse_v2_succ(const Split& sp, std::vector<int>& vsucc) {
  vsucc.assign(sp.n, -1);
  for (int u : sp.v2) {
    const auto s = sp.v2_outs(u);
    if (s.size() > 1) return false;
    if (s.size() == 1) vsucc[u] = s[0];
  }
  return true;
}

// Canonical V2 labels h.. with the listed vertices first, the rest in
// label order.
void number_v2(Split& sp, std::vector<int>& mapping, const std::vector<int>& first) {
  int at = sp.h;
  for (int u : first) {
    mapping[at] = u;
    sp.canon[u] = at;
    ++at;
  }
  for (int u : sp.v2) {
    if (sp.canon[u] != -1) continue;
    mapping[at] = u;
    sp.canon[u] = at;
    ++at;
  }
}

// Matching targets in canonical source order. Sources are the V1
// vertices with canonical index >= lo, minus skip; each needs exactly
// one successor inside V2. Vertices of V1 below lo or equal to skip
// must have none, except index done whose arc into V2 was consumed
// already (the x of the star families).
bool collect_matching(const Split& sp, const std::vector<int>& mapping, int lo, int skip,
                      int done, std::vector<int>& matching) {
  matching.clear();
  for (int i = 0; i < sp.h; ++i) {
    if (i == done) continue;
    const auto t = sp.v2_outs(mapping[i]);
    if (i < lo || i == skip) {
      if (!t.empty()) return false;
      continue;
    }
    if (t.size() != 1) return false;
    matching.push_back(sp.canon[t[0]]);
  }
  return true;
}

std::optional<FamilyMatch> try_pivot(const Digraph& g, Family f, int pivot) {
  const int n = g.order();
  const int h = v1_size(n);
  auto spopt = make_split(g, pivot, h);
  if (!spopt) return std::nullopt;
  Split sp = *spopt;

  FamilySpec spec;
  spec.family = f;
  spec.n = n;
  spec.v1_parent.assign(h, -1);
  spec.v2_succ.assign(sp.m, -1);
  std::vector<int> mapping(n, -1);

  auto place_v1 = [&](const std::vector<int>& first) {
    int at = 0;
    for (int u : first) {
      mapping[at] = u;
      sp.canon[u] = at;
      ++at;
    }
    for (int u : sp.v1) {
      if (sp.canon[u] != -1) continue;
      mapping[at] = u;
      sp.canon[u] = at;
      ++at;
    }
  };

  switch (f) {
    case Family::D1:
    case Family::D5: {
      int r0, r1;
      std::vector<int> parent;
      if (!parse_two_cycle_forest(sp, r0, r1, parent)) return std::nullopt;
      place_v1({r0, r1});
      for (int u : sp.v1)
        if (u != r0 && u != r1) spec.v1_parent[sp.canon[u]] = sp.canon[parent[u]];
      std::vector<int> vsucc;
      if (!parse_v2_succ(sp, vsucc)) return std::nullopt;
      for (int u : sp.v2)
        if (vsucc[u] != -1) return std::nullopt;
      number_v2(sp, mapping, {});
      if (!collect_matching(sp, mapping, 2, -1, -1, spec.matching)) return std::nullopt;
      if (f == Family::D5) {
        std::vector<char> hit(n, 0);
        for (int t : spec.matching) hit[t] = 1;
        int free_v = -1;
        for (int i = h; i < n; ++i)
          if (!hit[i]) {
            if (free_v != -1) return std::nullopt;
            free_v = i;
          }
        if (free_v == -1) return std::nullopt;
        spec.aux_v2 = free_v;
      }
      break;
    }
    case Family::D3: {
      int root;
      std::vector<int> parent;
      if (!parse_rooted_forest(sp, root, parent)) return std::nullopt;
      place_v1({root});
      for (int u : sp.v1)
        if (u != root) spec.v1_parent[sp.canon[u]] = sp.canon[parent[u]];
      std::vector<int> vsucc;
      if (!parse_v2_succ(sp, vsucc)) return std::nullopt;
      for (int u : sp.v2)
        if (vsucc[u] != -1) return std::nullopt;
      number_v2(sp, mapping, {});
      if (!collect_matching(sp, mapping, 1, -1, -1, spec.matching)) return std::nullopt;
      break;
    }
    case Family::D2: {
      int x, y;
      if (!parse_star(sp, true, x, y)) return std::nullopt;
      const auto xt = sp.v2_outs(x);
      if (xt.size() != 1) return std::nullopt;
      const int w = xt[0];
      std::vector<int> vsucc;
      if (!parse_v2_succ(sp, vsucc)) return std::nullopt;
      if (vsucc[w] != -1) return std::nullopt;
      place_v1({x, y});
      number_v2(sp, mapping, {w});
      for (int u : sp.v2)
        if (vsucc[u] != -1) spec.v2_succ[sp.canon[u] - h] = sp.canon[vsucc[u]];
      if (!collect_matching(sp, mapping, 2, -1, 0, spec.matching)) return std::nullopt;
      break;
    }
    case Family::D4: {
      int x, y_unused;
      if (!parse_star(sp, false, x, y_unused)) return std::nullopt;
      const auto xt = sp.v2_outs(x);
      if (xt.size() != 1) return std::nullopt;
      const int w = xt[0];
      std::vector<int> vsucc;
      if (!parse_v2_succ(sp, vsucc)) return std::nullopt;
      if (vsucc[w] != -1) return std::nullopt;
      place_v1({x});
      number_v2(sp, mapping, {w});
      for (int u : sp.v2)
        if (vsucc[u] != -1) spec.v2_succ[sp.canon[u] - h] = sp.canon[vsucc[u]];
      int aux = -1;
      for (int i = 1; i < h; ++i)
        if (sp.v2_outs(mapping[i]).empty()) {
          if (aux != -1) return std::nullopt;
          aux = i;
        }
      if (aux == -1) return std::nullopt;
      spec.aux_v1 = aux;
      if (!collect_matching(sp, mapping, 1, aux, 0, spec.matching)) return std::nullopt;
      break;
    }
    case Family::D6: {
      int x, y;
      if (!parse_star(sp, true, x, y)) return std::nullopt;
      const auto xt = sp.v2_outs(x);
      if (xt.size() != 1) return std::nullopt;
      const int w = xt[0];
      std::vector<int> vsucc;
      if (!parse_v2_succ(sp, vsucc)) return std::nullopt;
      const int z = vsucc[w];
      if (z == -1 || vsucc[z] != w) return std::nullopt;
      place_v1({x, y});
      number_v2(sp, mapping, {w, z});
      for (int u : sp.v2)
        if (vsucc[u] != -1) spec.v2_succ[sp.canon[u] - h] = sp.canon[vsucc[u]];
      int aux = -1;
      for (int i = 2; i < h; ++i)
        if (sp.v2_outs(mapping[i]).empty()) {
          if (aux != -1) return std::nullopt;
          aux = i;
        }
      if (aux == -1) return std::nullopt;
      spec.aux_v1 = aux;
      if (!collect_matching(sp, mapping, 2, aux, 0, spec.matching)) return std::nullopt;
      break;
    }
  }

  if (validate_spec(spec)) return std::nullopt;
  const Digraph rebuilt = construct(spec);
  if (rebuilt.size() != g.size()) return std::nullopt;
  for (auto [a, b] : rebuilt.arcs())
    if (!g.has_arc(mapping[a], mapping[b])) return std::nullopt;

  FamilyMatch fm;
  fm.family = f;
  fm.mapping = std::move(mapping);
  fm.spec = std::move(spec);
  return fm;
}

}  // namespace

std::optional<FamilyMatch> match_family(const Digraph& d, Family f, bool reversed) {
  const int n = d.order();
  if (family_wants_even_n(f) != (n % 2 == 0)) return std::nullopt;
  const Digraph h = reversed ? reverse(d) : d;
  const int want = v1_size(n);
  const Degrees deg = degrees(h);
  if (deg.max_out != want) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (deg.out[v] != want) continue;
    if (auto fm = try_pivot(h, f, v)) {
      fm->reversed = reversed;
      return fm;
    }
  }
  return std::nullopt;
}

AuditReport audit(const Digraph& d) {
  const int n = d.order();
  if (n < 8) throw std::invalid_argument("audit: needs n >= 8");
  AuditReport rep;
  const Degrees dd = degrees(d);
  rep.reversed = dd.max_in > dd.max_out;
  const Digraph h = rep.reversed ? reverse(d) : d;

  rep.delta_plus = rep.reversed ? dd.max_in : dd.max_out;
  if (n % 2 == 0)
    rep.delta_plus_ok = rep.delta_plus == n / 2 || rep.delta_plus == n / 2 + 1;
  else
    rep.delta_plus_ok = rep.delta_plus == (n + 1) / 2;

  rep.alpha_value = alpha(h);
  rep.alpha_ok = rep.alpha_value <= 1;

  rep.fanin_ok = true;
  for (int u = 0; u < n && rep.fanin_ok; ++u) {
    const VertexSet preds = h.predecessors(u);
    for (int v = 0; v < n; ++v) {
      int hits = 0;
      const std::uint64_t* row = h.row(v);
      for (int k = 0; k < h.words_per_row(); ++k)
        hits += std::popcount(row[k] & preds.words()[k]);
      if (hits > 1) {
        rep.fanin_ok = false;
        break;
      }
    }
  }

  const int expected = ex_formula(n);
  if (d.size() != expected)
    rep.status = AuditStatus::WrongSize;
  else if (!is_f_free(d).ok)
    rep.status = AuditStatus::NotFFree;
  else
    rep.status = AuditStatus::Ok;

  std::ostringstream os;
  os << "orientation: " << (rep.reversed ? "reversed" : "as-is") << '\n';
  os << "size: " << d.size() << " expected " << expected
     << (d.size() == expected ? " ok" : " WRONG") << '\n';
  os << "max outdegree: " << rep.delta_plus << (rep.delta_plus_ok ? " ok" : " out of range")
     << '\n';
  os << "alpha: " << rep.alpha_value << (rep.alpha_ok ? " ok" : " too large") << '\n';
  os << "out-neighbourhood fan-in cap: " << (rep.fanin_ok ? "ok" : "violated");
  rep.details = os.str();
  return rep;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Extremal: return "Extremal";
    case Verdict::NotExtremalSize: return "NotExtremalSize";
    case Verdict::NotFFree: return "NotFFree";
    case Verdict::Unrecognized: return "Unrecognized";
  }
  return "?";
}

RecognitionReport recognize(const Digraph& d) {
  const int n = d.order();
  if (n < 8) throw std::invalid_argument("recognize: needs n >= 8");
  RecognitionReport rep;
  rep.n = n;
  rep.size = d.size();
  rep.expected_size = ex_formula(n);
  rep.audit = audit(d);
  if (rep.size != rep.expected_size) {
    rep.verdict = Verdict::NotExtremalSize;
    return rep;
  }
  const CheckReport chk = is_f_free(d);
  if (!chk.ok) {
    rep.verdict = Verdict::NotFFree;
    rep.witness = chk.witness;
    return rep;
  }
  for (Family f : kAllFamilies)
    for (bool reversed : {false, true})
      if (auto fm = match_family(d, f, reversed)) rep.matches.push_back(std::move(*fm));
  rep.verdict = rep.matches.empty() ? Verdict::Unrecognized : Verdict::Extremal;
  return rep;
}

bool is_isomorphic(const Digraph& a, const Digraph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;

  std::vector<std::pair<int, int>> siga(n), sigb(n);
  for (int v = 0; v < n; ++v) {
    siga[v] = {a.out_degree(v), a.in_degree(v)};
    sigb[v] = {b.out_degree(v), b.in_degree(v)};
  }
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // highest degree first so clashes surface early
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int u, int v) {
    const int du = siga[u].first + siga[u].second;
    const int dv = siga[v].first + siga[v].second;
    if (du != dv) return du > dv;
    return u < v;
  });

  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int at) {
    if (at == n) return true;
    const int u = order[at];
    for (int v = 0; v < n; ++v) {
      if (used[v] || siga[u] != sigb[v]) continue;
      bool ok = true;
      for (int j = 0; j < at && ok; ++j) {
        const int pu = order[j], pv = img[pu];
        ok = a.has_arc(u, pu) == b.has_arc(v, pv) && a.has_arc(pu, u) == b.has_arc(pv, v);
      }
      if (!ok) continue;
      img[u] = v;
      used[v] = 1;
      if (place(at + 1)) return true;
      img[u] = -1;
      used[v] = 0;
    }
    return false;
  };
  return place(0);
}

}  // namespace ffree
