#include "ffree/families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ffree {

namespace {

const char* kNames[6] = {"D1", "D2", "D3", "D4", "D5", "D6"};

int family_index(Family f) { return static_cast<int>(f); }

bool is_odd_family(Family f) { return f != Family::D1; }

// Target set of the matching: V2 minus the reserved vertices.
int first_free_target(Family f, int h) {
  switch (f) {
    case Family::D1:
    case Family::D3:
    case Family::D5:
      return h;  // D5 additionally skips aux_v2, handled separately
    case Family::D2:
    case Family::D4:
      return h + 1;  // w is fed by x
    case Family::D6:
      return h + 2;  // w is fed by x, z by nobody
  }
  return h;
}

std::string err(const std::string& m) { return m; }

}  // namespace

const char* family_name(Family f) { return kNames[family_index(f)]; }

std::optional<Family> family_from_name(std::string_view s) {
  for (int i = 0; i < 6; ++i)
    if (s == kNames[i]) return static_cast<Family>(i);
  return std::nullopt;
}

bool family_wants_even_n(Family f) { return f == Family::D1; }

int family_min_n(Family f) {
  switch (f) {
    case Family::D1: return 6;
    case Family::D2: return 5;
    case Family::D3: return 3;
    case Family::D4: return 3;
    case Family::D5: return 7;
    case Family::D6: return 11;
  }
  return 0;
}

int ex_formula(int n) {
  if (n < 8) throw std::invalid_argument("ex_formula: defined for n >= 8 only");
  return (n * n + 4 * n) / 4 - 1;
}

int lower_bound_size(int n) {
  if (n < 3) throw std::invalid_argument("lower_bound_size: defined for n >= 3 only");
  if (n % 2 == 0) return (n * n + 4 * n - 4) / 4;
  return (n * n + 4 * n - 5) / 4;
}

int v1_size(int n) { return n / 2 + 1; }

std::vector<int> matched_sources(const FamilySpec& s) {
  const int h = v1_size(s.n);
  std::vector<int> out;
  int lo = 2;
  if (s.family == Family::D3 || s.family == Family::D4) lo = 1;
  for (int i = lo; i < h; ++i) {
    if ((s.family == Family::D4 || s.family == Family::D6) && i == s.aux_v1) continue;
    out.push_back(i);
  }
  return out;
}

std::optional<std::string> validate_spec(const FamilySpec& s) {
  const Family f = s.family;
  const int n = s.n;
  if (n < 3) return err("n must be at least 3");
  if (family_wants_even_n(f) && n % 2 != 0) return err("family D1 needs even n");
  if (is_odd_family(f) && n % 2 == 0)
    return err(std::string(family_name(f)) + " needs odd n");
  const int h = v1_size(n);
  const int m = n - h;

  if (static_cast<int>(s.v1_parent.size()) != h) return err("v1_parent must have one entry per V1 vertex");
  if (static_cast<int>(s.v2_succ.size()) != m) return err("v2_succ must have one entry per V2 vertex");

  // aux slots
  switch (f) {
    case Family::D4:
      if (s.aux_v1 < 1 || s.aux_v1 >= h) return err("D4 needs aux_v1 (y) in V1 beyond x");
      if (s.aux_v2 != -1) return err("aux_v2 is unused by D4");
      break;
    case Family::D6:
      if (s.aux_v1 < 2 || s.aux_v1 >= h) return err("D6 needs aux_v1 (y') in V1 beyond x,y");
      if (s.aux_v2 != -1) return err("aux_v2 is unused by D6");
      break;
    case Family::D5:
      if (s.aux_v1 != -1) return err("aux_v1 is unused by D5");
      if (s.aux_v2 < h || s.aux_v2 >= n) return err("D5 needs aux_v2 (x) in V2");
      break;
    default:
      if (s.aux_v1 != -1 || s.aux_v2 != -1)
        return err("aux slots are unused by this family");
  }

  // V1 tree shape
  const bool two_roots = (f == Family::D1 || f == Family::D5);
  const bool one_root = (f == Family::D3);
  if (two_roots || one_root) {
    const int nroots = two_roots ? 2 : 1;
    for (int i = 0; i < nroots; ++i)
      if (s.v1_parent[i] != -1) return err("tree root must have parent -1");
    for (int i = nroots; i < h; ++i) {
      const int p = s.v1_parent[i];
      if (p < 0 || p >= h || p == i) return err("v1_parent entry out of range");
      if (p >= nroots && (s.v1_parent[p] < 0 || s.v1_parent[p] >= nroots))
        return err("V1 tree depth exceeds 2");
    }
  } else {
    for (int i = 0; i < h; ++i)
      if (s.v1_parent[i] != -1) return err("v1_parent is unused by this family");
  }

  // V2 internal shape
  auto succ = [&](int v) { return s.v2_succ[v - h]; };
  switch (f) {
    case Family::D1:
    case Family::D3:
    case Family::D5:
      for (int p = 0; p < m; ++p)
        if (s.v2_succ[p] != -1) return err("V2 must be arcless for this family");
      break;
    case Family::D2: {
      if (m < 2) return err("D2 needs at least two V2 vertices");
      if (s.v2_succ[0] != -1) return err("w cannot have a successor inside V2");
      int isolated = 0;
      for (int p = 1; p < m; ++p) {
        const int t = s.v2_succ[p];
        if (t == -1) {
          ++isolated;
          continue;
        }
        if (t < h || t >= n || t == h + p) return err("v2_succ entry out of range");
        if (t != h && succ(t) != h) return err("V2 chains must reach w within two arcs");
      }
      if (isolated < 1) return err("D2 needs at least one isolated V2 vertex");
      break;
    }
    case Family::D4: {
      if (m < 1) return err("D4 needs a nonempty V2");
      if (s.v2_succ[0] != -1) return err("w cannot have a successor inside V2");
      for (int p = 1; p < m; ++p) {
        const int t = s.v2_succ[p];
        if (t == -1) continue;
        if (t < h || t >= n || t == h + p) return err("v2_succ entry out of range");
        if (t == h) continue;              // arc straight into w
        if (succ(t) == h) continue;        // under a vertex feeding w
        if (succ(t) == -1) continue;       // leaf of an in-star
        return err("V2 arcs must form chains into w or single in-stars");
      }
      break;
    }
    case Family::D6: {
      if (m < 3) return err("D6 needs at least three V2 vertices");
      if (s.v2_succ[0] != h + 1 || s.v2_succ[1] != h)
        return err("D6 needs the 2-cycle between w and z");
      int isolated = 0;
      for (int p = 2; p < m; ++p) {
        const int t = s.v2_succ[p];
        if (t == -1) {
          ++isolated;
          continue;
        }
        if (t < h || t >= n || t == h + p) return err("v2_succ entry out of range");
        if (t == h || t == h + 1) continue;  // straight into w or z
        if (t - h >= 2 && (succ(t) == h || succ(t) == h + 1)) continue;
        return err("V2 chains must reach w or z within two arcs");
      }
      if (isolated < 1) return err("D6 needs at least one isolated V2 vertex");
      break;
    }
    default:
      break;
  }

  // matching
  const std::vector<int> sources = matched_sources(s);
  if (s.matching.size() != sources.size())
    return err("matching must pair every matched V1 vertex");
  const int lo = first_free_target(f, h);
  std::vector<char> seen(n, 0);
  for (int t : s.matching) {
    if (t < lo || t >= n) return err("matching target out of range");
    if (f == Family::D5 && t == s.aux_v2) return err("matching may not hit the free V2 vertex");
    if (seen[t]) return err("matching targets must be distinct");
    seen[t] = 1;
  }
  return std::nullopt;
}

int family_size(const FamilySpec& s) {
  const int n = s.n;
  if (s.family == Family::D1) return (n * n + 4 * n - 4) / 4;
  return (n * n + 4 * n - 5) / 4;
}

Digraph construct(const FamilySpec& s) {
  if (auto problem = validate_spec(s))
    throw std::invalid_argument("construct: " + *problem);
  const int n = s.n;
  const int h = v1_size(n);
  Digraph d(n);

  // arcs inside V1
  switch (s.family) {
    case Family::D1:
    case Family::D5:
      d.add_arc(0, 1);
      d.add_arc(1, 0);
      for (int i = 2; i < h; ++i) d.add_arc(s.v1_parent[i], i);
      break;
    case Family::D3:
      for (int i = 1; i < h; ++i) d.add_arc(s.v1_parent[i], i);
      break;
    case Family::D2:
    case Family::D6:
      d.add_arc(0, 1);
      d.add_arc(1, 0);
      for (int i = 2; i < h; ++i) d.add_arc(0, i);
      break;
    case Family::D4:
      for (int i = 1; i < h; ++i) d.add_arc(0, i);
      break;
  }

  // arcs inside V2
  for (int p = 0; p < n - h; ++p)
    if (s.v2_succ[p] != -1) d.add_arc(h + p, s.v2_succ[p]);

  // forward arcs V1 -> V2
  const std::vector<int> sources = matched_sources(s);
  for (std::size_t i = 0; i < sources.size(); ++i) d.add_arc(sources[i], s.matching[i]);
  if (s.family == Family::D2 || s.family == Family::D4 || s.family == Family::D6)
    d.add_arc(0, h);

  // backward arcs V2 -> V1. Vertices with a successor inside V2 skip x;
  // in D2 so does w even when its tree vanished.
  for (int u = h; u < n; ++u) {
    bool skip_x = false;
    switch (s.family) {
      case Family::D2:
        skip_x = (u == h) || s.v2_succ[u - h] != -1;
        break;
      case Family::D4:
      case Family::D6:
        skip_x = s.v2_succ[u - h] != -1;
        break;
      default:
        break;
    }
    for (int i = skip_x ? 1 : 0; i < h; ++i) d.add_arc(u, i);
  }
  return d;
}

FamilySpec default_spec(Family f, int n) {
  if (family_wants_even_n(f) != (n % 2 == 0))
    throw std::invalid_argument(std::string("default_spec: wrong parity for ") + family_name(f));
  if (n < family_min_n(f))
    throw std::invalid_argument(std::string("default_spec: ") + family_name(f) +
                                " needs n >= " + std::to_string(family_min_n(f)));
  const int h = v1_size(n);
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.v1_parent.assign(h, -1);
  s.v2_succ.assign(n - h, -1);

  auto identity_matching = [&](int first_target) {
    const std::vector<int> sources = matched_sources(s);
    s.matching.clear();
    for (std::size_t i = 0; i < sources.size(); ++i)
      s.matching.push_back(first_target + static_cast<int>(i));
  };

  switch (f) {
    case Family::D1:
    case Family::D5: {
      const int k = h - 2;
      const int under_first = (k + 1) / 2;
      for (int i = 2; i < h; ++i) s.v1_parent[i] = (i - 2 < under_first) ? 0 : 1;
      if (f == Family::D5) {
        s.aux_v2 = h;
        identity_matching(h + 1);
      } else {
        identity_matching(h);
      }
      break;
    }
    case Family::D3:
      for (int i = 1; i < h; ++i) s.v1_parent[i] = 0;
      identity_matching(h);
      break;
    case Family::D2:
      identity_matching(h + 1);
      break;
    case Family::D4:
      s.aux_v1 = 1;
      identity_matching(h + 1);
      break;
    case Family::D6:
      s.aux_v1 = 2;
      s.v2_succ[0] = h + 1;  // w -> z
      s.v2_succ[1] = h;      // z -> w
      s.v2_succ[2] = h;      // one leaf under w
      s.v2_succ[3] = h + 1;  // one leaf under z
      identity_matching(h + 2);
      break;
  }
  if (auto problem = validate_spec(s))
    throw std::logic_error("default_spec produced an invalid spec: " + *problem);
  return s;
}

namespace {

// Enumeration helpers. Tree shapes are assignments a[0..count-1] where
// a[i] < roots names a root and a[i] = roots + j hangs slot i under the
// earlier slot j, which must itself hang under a root (depth 2 total).
void for_each_tree(int count, int roots, std::vector<int>& a,
                   const std::function<bool()>& emit, bool& keep_going, int at = 0) {
  if (!keep_going) return;
  if (at == count) {
    keep_going = emit();
    return;
  }
  for (int r = 0; r < roots && keep_going; ++r) {
    a[at] = r;
    for_each_tree(count, roots, a, emit, keep_going, at + 1);
  }
  for (int j = 0; j < at && keep_going; ++j) {
    if (a[j] >= roots) continue;
    a[at] = roots + j;
    for_each_tree(count, roots, a, emit, keep_going, at + 1);
  }
}

// k/2, then outward: k/2 +- 1, +- 2, ... restricted to [0, k].
std::vector<int> centered_splits(int k) {
  std::vector<int> out;
  const int mid = (k + 1) / 2;
  out.push_back(mid);
  for (int step = 1; step <= k; ++step) {
    if (mid - step >= 0) out.push_back(mid - step);
    if (mid + step <= k) out.push_back(mid + step);
  }
  return out;
}

class SpecSink {
 public:
  SpecSink(std::vector<FamilySpec>& out, std::size_t limit) : out_(out), limit_(limit) {}

  bool push(FamilySpec s) {
    if (full()) return false;
    if (auto problem = validate_spec(s))
      throw std::logic_error("enumerate_specs produced an invalid spec: " + *problem);
    out_.push_back(std::move(s));
    return !full();
  }

  bool full() const { return out_.size() >= limit_; }

 private:
  std::vector<FamilySpec>& out_;
  std::size_t limit_;
};

// identity matching, then the reversed one when it differs
bool push_matching_variants(SpecSink& sink, FamilySpec s, std::vector<int> targets) {
  s.matching = targets;
  if (!sink.push(s)) return false;
  if (targets.size() >= 2) {
    std::reverse(targets.begin(), targets.end());
    s.matching = targets;
    if (!sink.push(s)) return false;
  }
  return true;
}

std::vector<int> free_targets(const FamilySpec& s) {
  const int h = v1_size(s.n);
  std::vector<int> t;
  for (int v = first_free_target(s.family, h); v < s.n; ++v) {
    if (s.family == Family::D5 && v == s.aux_v2) continue;
    t.push_back(v);
  }
  return t;
}

void enumerate_two_root(Family f, int n, SpecSink& sink) {
  const int h = v1_size(n);
  const int k = h - 2;
  FamilySpec base;
  base.family = f;
  base.n = n;
  base.v1_parent.assign(h, -1);
  base.v2_succ.assign(n - h, -1);

  std::vector<int> xs;
  if (f == Family::D5) {
    xs = {h, n - 1};
    if (xs[0] == xs[1]) xs.pop_back();
  } else {
    xs = {-1};
  }

  for (int x : xs) {
    FamilySpec s = base;
    s.aux_v2 = x;
    for (int s1 : centered_splits(k)) {
      const int s2 = k - s1;
      if (s1 < 1 || s2 < 1) continue;  // keep a vertex on each side
      std::vector<int> a1(s1), a2(s2);
      bool going = true;
      for_each_tree(s1, 1, a1, [&]() {
        bool inner = true;
        for_each_tree(s2, 1, a2, [&]() {
          // side one occupies slots 2..2+s1-1 under root 0, side two the rest under root 1
          for (int i = 0; i < s1; ++i)
            s.v1_parent[2 + i] = (a1[i] == 0) ? 0 : 2 + (a1[i] - 1);
          for (int i = 0; i < s2; ++i)
            s.v1_parent[2 + s1 + i] = (a2[i] == 0) ? 1 : 2 + s1 + (a2[i] - 1);
          inner = push_matching_variants(sink, s, free_targets(s));
          return inner;
        }, inner);
        return inner;
      }, going);
      if (sink.full()) return;
    }
  }
}

void enumerate_single_root(int n, SpecSink& sink) {
  const int h = v1_size(n);
  const int k = h - 1;
  FamilySpec s;
  s.family = Family::D3;
  s.n = n;
  s.v1_parent.assign(h, -1);
  s.v2_succ.assign(n - h, -1);

  std::vector<int> a(k);
  bool going = true;
  for_each_tree(k, 1, a, [&]() {
    for (int i = 0; i < k; ++i) s.v1_parent[1 + i] = (a[i] == 0) ? 0 : 1 + (a[i] - 1);
    return push_matching_variants(sink, s, free_targets(s));
  }, going);
}

void enumerate_d2(int n, SpecSink& sink) {
  const int h = v1_size(n);
  const int m = n - h;
  FamilySpec s;
  s.family = Family::D2;
  s.n = n;
  s.v1_parent.assign(h, -1);

  for (int t = 0; t <= m - 1; ++t) {
    if (t == 1) continue;  // a one-vertex tree is just the vanished case
    s.v2_succ.assign(m, -1);
    if (t == 0) {
      if (!push_matching_variants(sink, s, free_targets(s))) return;
      continue;
    }
    // tree occupies w plus slots h+1..h+t-1
    std::vector<int> a(t - 1);
    bool going = true;
    for_each_tree(t - 1, 1, a, [&]() {
      for (int i = 0; i < t - 1; ++i)
        s.v2_succ[1 + i] = (a[i] == 0) ? h : h + 1 + (a[i] - 1);
      return push_matching_variants(sink, s, free_targets(s));
    }, going);
    if (sink.full()) return;
  }
}

void enumerate_d4(int n, SpecSink& sink) {
  const int h = v1_size(n);
  const int m = n - h;
  FamilySpec base;
  base.family = Family::D4;
  base.n = n;
  base.v1_parent.assign(h, -1);

  std::vector<int> ys = {1, h - 1};
  if (ys[0] == ys[1]) ys.pop_back();

  // star patterns: sizes of the in-stars, nonincreasing, parts >= 2
  auto star_patterns = [](int pool) {
    std::vector<std::vector<int>> pats = {{}};
    for (int total = 2; total <= pool; ++total)
      for (int first = total; first >= 2; --first) {
        const int rest = total - first;
        if (rest == 0) {
          pats.push_back({first});
        } else if (rest >= 2 && rest <= first) {
          pats.push_back({first, rest});
        }
      }
    return pats;
  };

  for (int y : ys) {
    FamilySpec s = base;
    s.aux_v1 = y;
    for (int t = 0; t <= m; ++t) {
      if (t == 1) continue;
      const int pool = m - std::max(t, 1);
      const int tree_slots = (t >= 2) ? t - 1 : 0;
      std::vector<int> a(tree_slots);
      bool going = true;
      for_each_tree(tree_slots, 1, a, [&]() {
        for (const auto& pat : star_patterns(pool)) {
          s.v2_succ.assign(m, -1);
          for (int i = 0; i < tree_slots; ++i)
            s.v2_succ[1 + i] = (a[i] == 0) ? h : h + 1 + (a[i] - 1);
          // star blocks sit after the tree: root first, then its leaves
          int at = 1 + tree_slots;
          for (int sz : pat) {
            const int root = h + at;
            for (int leaf = 1; leaf < sz; ++leaf) s.v2_succ[at + leaf] = root;
            at += sz;
          }
          if (!push_matching_variants(sink, s, free_targets(s))) return false;
        }
        return true;
      }, going);
      if (sink.full()) return;
    }
  }
}

void enumerate_d6(int n, SpecSink& sink) {
  const int h = v1_size(n);
  const int m = n - h;
  FamilySpec base;
  base.family = Family::D6;
  base.n = n;
  base.v1_parent.assign(h, -1);

  for (int yp = 2; yp < h; ++yp) {
    FamilySpec s = base;
    s.aux_v1 = yp;
    for (int t = 4; t <= m - 1; ++t) {
      const int slots = t - 2;
      std::vector<int> a(slots);
      bool going = true;
      for_each_tree(slots, 2, a, [&]() {
        // keep a child on each side of the 2-cycle
        int side_w = 0, side_z = 0;
        for (int i = 0; i < slots; ++i) {
          int r = a[i] < 2 ? a[i] : a[a[i] - 2];
          (r == 0 ? side_w : side_z) += 1;
        }
        if (side_w == 0 || side_z == 0) return true;
        s.v2_succ.assign(m, -1);
        s.v2_succ[0] = h + 1;
        s.v2_succ[1] = h;
        for (int i = 0; i < slots; ++i)
          s.v2_succ[2 + i] = (a[i] < 2) ? h + a[i] : h + 2 + (a[i] - 2);
        return push_matching_variants(sink, s, free_targets(s));
      }, going);
      if (sink.full()) return;
    }
  }
}

}  // namespace

std::vector<FamilySpec> enumerate_specs(Family f, int n, std::size_t limit) {
  if (family_wants_even_n(f) != (n % 2 == 0))
    throw std::invalid_argument(std::string("enumerate_specs: wrong parity for ") + family_name(f));
  std::vector<FamilySpec> out;
  if (n < family_min_n(f) || limit == 0) return out;
  SpecSink sink(out, limit);
  switch (f) {
    case Family::D1:
    case Family::D5:
      enumerate_two_root(f, n, sink);
      break;
    case Family::D3:
      enumerate_single_root(n, sink);
      break;
    case Family::D2:
      enumerate_d2(n, sink);
      break;
    case Family::D4:
      enumerate_d4(n, sink);
      break;
    case Family::D6:
      enumerate_d6(n, sink);
      break;
  }
  return out;
}

namespace {

void print_int_list(std::ostream& os, const char* key, const std::vector<int>& xs) {
  os << key;
  for (int x : xs) {
    os << ' ';
    if (x == -1)
      os << '-';
    else
      os << x;
  }
  os << '\n';
}

}  // namespace

std::string spec_to_text(const FamilySpec& s) {
  std::ostringstream os;
  os << "family " << family_name(s.family) << '\n';
  os << "n " << s.n << '\n';
  os << "aux_v1 " << s.aux_v1 << '\n';
  os << "aux_v2 " << s.aux_v2 << '\n';
  print_int_list(os, "v1_parent", s.v1_parent);
  print_int_list(os, "v2_succ", s.v2_succ);
  print_int_list(os, "matching", s.matching);
  return os.str();
}

FamilySpec spec_from_text(const std::string& text) {
  FamilySpec s;
  bool saw_family = false, saw_n = false;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto read_list = [&]() {
      std::vector<int> xs;
      std::string tok;
      while (ls >> tok) {
        if (tok == "-") {
          xs.push_back(-1);
        } else {
          try {
            xs.push_back(std::stoi(tok));
          } catch (const std::exception&) {
            throw std::runtime_error("spec parse: bad entry '" + tok + "' under " + key);
          }
        }
      }
      return xs;
    };
    if (key == "family") {
      std::string name;
      ls >> name;
      auto f = family_from_name(name);
      if (!f) throw std::runtime_error("spec parse: unknown family '" + name + "'");
      s.family = *f;
      saw_family = true;
    } else if (key == "n") {
      if (!(ls >> s.n)) throw std::runtime_error("spec parse: bad n");
      saw_n = true;
    } else if (key == "aux_v1") {
      if (!(ls >> s.aux_v1)) throw std::runtime_error("spec parse: bad aux_v1");
    } else if (key == "aux_v2") {
      if (!(ls >> s.aux_v2)) throw std::runtime_error("spec parse: bad aux_v2");
    } else if (key == "v1_parent") {
      s.v1_parent = read_list();
    } else if (key == "v2_succ") {
      s.v2_succ = read_list();
    } else if (key == "matching") {
      s.matching = read_list();
    } else {
      throw std::runtime_error("spec parse: unknown key '" + key + "'");
    }
  }
  if (!saw_family || !saw_n) throw std::runtime_error("spec parse: family and n are required");
  return s;
}

std::string spec_to_json(const FamilySpec& s) {
  nlohmann::json j;
  j["family"] = family_name(s.family);
  j["n"] = s.n;
  j["aux_v1"] = s.aux_v1;
  j["aux_v2"] = s.aux_v2;
  j["v1_parent"] = s.v1_parent;
  j["v2_succ"] = s.v2_succ;
  j["matching"] = s.matching;
  return j.dump(2);
}

FamilySpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("spec parse: ") + e.what());
  }
  FamilySpec s;
  const std::string name = j.at("family").get<std::string>();
  auto f = family_from_name(name);
  if (!f) throw std::runtime_error("spec parse: unknown family '" + name + "'");
  s.family = *f;
  s.n = j.at("n").get<int>();
  s.aux_v1 = j.value("aux_v1", -1);
  s.aux_v2 = j.value("aux_v2", -1);
  s.v1_parent = j.value("v1_parent", std::vector<int>{});
  s.v2_succ = j.value("v2_succ", std::vector<int>{});
  s.matching = j.value("matching", std::vector<int>{});
  return s;
}

}  // namespace ffree
