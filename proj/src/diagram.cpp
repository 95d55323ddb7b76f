#include "khof/diagram.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "luv_layout.hpp"
#include "morse.hpp"

namespace khof {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

struct SlotEnd {
  int arc;
  bool in;
  bool over;
};

// Arc ends in counterclockwise order around a crossing, starting at under_in.
std::array<SlotEnd, 4> ccw_slots(const Crossing& x, int sign) {
  if (sign > 0) return {{{x.ui, true, false}, {x.oo, false, true}, {x.uo, false, false}, {x.oi, true, true}}};
  return {{{x.ui, true, false}, {x.oi, true, true}, {x.uo, false, false}, {x.oo, false, true}}};
}

// Half-edge h = 4k + p. An arc leaves through an out-slot and arrives at an
// in-slot; alpha swaps those two half-edges. Faces are orbits of
// h -> next_ccw(alpha(h)).
struct RotationSystem {
  std::vector<int> alpha;
  std::vector<SlotEnd> end;

  RotationSystem(const std::vector<Crossing>& xs, const std::vector<int>& signs) {
    const int c = static_cast<int>(xs.size());
    alpha.assign(4 * c, -1);
    end.resize(4 * c);
    std::map<int, int> out_he, in_he;
    for (int k = 0; k < c; ++k) {
      auto s = ccw_slots(xs[k], signs[k]);
      for (int p = 0; p < 4; ++p) {
        end[4 * k + p] = s[p];
        (s[p].in ? in_he : out_he)[s[p].arc] = 4 * k + p;
      }
    }
    for (const auto& [arc, h] : out_he) {
      int t = in_he.at(arc);
      alpha[h] = t;
      alpha[t] = h;
    }
  }

  static int next_ccw(int h) { return 4 * (h / 4) + (h % 4 + 1) % 4; }

  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(alpha.size(), false);
    for (int h = 0; h < static_cast<int>(alpha.size()); ++h) {
      if (seen[h]) continue;
      std::vector<int> f;
      for (int x = h; !seen[x]; x = next_ccw(alpha[x])) {
        seen[x] = true;
        f.push_back(x);
      }
      out.push_back(std::move(f));
    }
    return out;
  }
};

// True when every connected piece of the rotation system is spherical.
bool planar_with_signs(const std::vector<Crossing>& xs, const std::vector<int>& signs) {
  const int c = static_cast<int>(xs.size());
  if (c == 0) return true;
  RotationSystem rs(xs, signs);
  DSU pieces(c);
  for (int h = 0; h < 4 * c; ++h) pieces.unite(h / 4, rs.alpha[h] / 4);
  std::vector<int> faces(c, 0), crossings(c, 0);
  for (const auto& f : rs.faces()) ++faces[pieces.find(f[0] / 4)];
  for (int k = 0; k < c; ++k) ++crossings[pieces.find(k)];
  for (int r = 0; r < c; ++r)
    if (crossings[r] > 0 && faces[r] != crossings[r] + 2) return false;
  return true;
}

OrientedPDDiagram with_component_basepoints(OrientedPDDiagram d, const std::set<int>& comps) {
  std::map<int, int> bp;
  for (int c : comps)
    if (c < static_cast<int>(d.component_count())) bp[c] = d.components()[c].front();
  return d.with_basepoints(std::move(bp));
}

std::set<int> basepoint_components(const OrientedPDDiagram& d) {
  std::set<int> s;
  for (const auto& [c, a] : d.basepoints()) s.insert(c);
  return s;
}

}  // namespace

OrientedPDDiagram::OrientedPDDiagram(std::vector<Crossing> crossings,
                                     std::vector<std::vector<int>> components,
                                     std::map<int, int> basepoints)
    : crossings_(std::move(crossings)),
      components_(std::move(components)),
      basepoints_(std::move(basepoints)) {}

std::size_t OrientedPDDiagram::free_loop_count() const {
  std::set<int> used;
  for (const auto& x : crossings_) used.insert({x.oi, x.oo, x.ui, x.uo});
  std::size_t n = 0;
  for (const auto& comp : components_)
    if (comp.size() == 1 && !used.count(comp[0])) ++n;
  return n;
}

int OrientedPDDiagram::writhe() const { return positive_count() - negative_count(); }

int OrientedPDDiagram::positive_count() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(),
                                        [](const Crossing& x) { return x.sign > 0; }));
}

int OrientedPDDiagram::negative_count() const {
  return static_cast<int>(crossings_.size()) - positive_count();
}

std::map<int, int> OrientedPDDiagram::arc_components() const {
  std::map<int, int> m;
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (int a : components_[c]) m[a] = static_cast<int>(c);
  return m;
}

OrientedPDDiagram OrientedPDDiagram::with_basepoints(std::map<int, int> bp) const {
  OrientedPDDiagram d = *this;
  d.basepoints_ = std::move(bp);
  return d;
}

std::optional<Violation> validate(const OrientedPDDiagram& d) {
  const auto& xs = d.crossings();
  const auto& comps = d.components();

  std::map<int, int> comp_of;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].empty())
      return Violation{ErrorKind::InconsistentCycle, -1,
                       "component " + std::to_string(c) + " has no arcs"};
    for (int a : comps[c]) {
      if (a <= 0) return Violation{ErrorKind::DanglingArc, a, "arc ids must be positive"};
      if (!comp_of.emplace(a, static_cast<int>(c)).second)
        return Violation{ErrorKind::InconsistentCycle, a,
                         "arc " + std::to_string(a) + " listed in two component cycles"};
    }
  }

  std::map<int, int> ins, outs, next;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const auto& x = xs[k];
    for (int a : {x.oi, x.ui}) ++ins[a];
    for (int a : {x.oo, x.uo}) ++outs[a];
    next[x.oi] = x.oo;
    next[x.ui] = x.uo;
  }
  std::set<int> mentioned;
  for (const auto& [a, n] : ins) mentioned.insert(a);
  for (const auto& [a, n] : outs) mentioned.insert(a);
  // An arc used twice is the culprit; the arc it displaced is a symptom.
  for (bool over_used : {true, false})
    for (int a : mentioned) {
      const bool bad = over_used ? (ins[a] > 1 || outs[a] > 1) : (ins[a] != 1 || outs[a] != 1);
      if (bad)
        return Violation{ErrorKind::DanglingArc, a,
                         "arc " + std::to_string(a) + " has " + std::to_string(ins[a]) +
                             " in-slots and " + std::to_string(outs[a]) + " out-slots"};
    }
  for (int a : mentioned) {
    if (!comp_of.count(a))
      return Violation{ErrorKind::DanglingArc, a,
                       "arc " + std::to_string(a) + " is not in any component"};
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& cyc = comps[c];
    if (cyc.size() == 1 && !mentioned.count(cyc[0])) continue;  // free loop
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      int a = cyc[j];
      if (!mentioned.count(a))
        return Violation{ErrorKind::DanglingArc, a,
                         "arc " + std::to_string(a) + " is not attached to any crossing"};
      int want = cyc[(j + 1) % cyc.size()];
      if (next[a] != want)
        return Violation{ErrorKind::InconsistentCycle, a,
                         "arc " + std::to_string(a) + " continues as " +
                             std::to_string(next[a]) + ", component lists " +
                             std::to_string(want)};
    }
  }

  std::vector<int> signs;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k].sign != 1 && xs[k].sign != -1)
      return Violation{ErrorKind::BadSign, static_cast<int>(k), "sign must be +1 or -1"};
    signs.push_back(xs[k].sign);
  }
  if (!planar_with_signs(xs, signs)) {
    for (std::size_t k = 0; k < xs.size(); ++k) {
      signs[k] = -signs[k];
      bool ok = planar_with_signs(xs, signs);
      signs[k] = -signs[k];
      if (ok)
        return Violation{ErrorKind::BadSign, static_cast<int>(k),
                         "sign of crossing " + std::to_string(k) +
                             " contradicts the orientation of its strands"};
    }
    return Violation{ErrorKind::BadSign, -1, "crossing signs admit no planar embedding"};
  }

  for (const auto& [c, a] : d.basepoints()) {
    if (c < 0 || c >= static_cast<int>(comps.size()))
      return Violation{ErrorKind::BadBasepoint, a,
                       "basepoint component " + std::to_string(c) + " out of range"};
    auto it = comp_of.find(a);
    if (it == comp_of.end() || it->second != c)
      return Violation{ErrorKind::BadBasepoint, a,
                       "arc " + std::to_string(a) + " is not on component " + std::to_string(c)};
  }
  return std::nullopt;
}

void ensure_valid(const OrientedPDDiagram& d) {
  if (auto v = validate(d)) throw Error(v->kind, v->message);
}

LinkingMatrix LinkingMatrix::negated() const {
  LinkingMatrix m(n_);
  for (std::size_t i = 0; i < v_.size(); ++i) m.v_[i] = -v_[i];
  return m;
}

LinkingMatrix linking_matrix(const OrientedPDDiagram& d) {
  const auto comp = d.arc_components();
  const std::size_t n = d.component_count();
  LinkingMatrix twice(n);
  for (const auto& x : d.crossings()) {
    int i = comp.at(x.oi), j = comp.at(x.ui);
    if (i == j) continue;
    twice.at(i, j) += x.sign;
    twice.at(j, i) += x.sign;
  }
  LinkingMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = twice(i, j) / 2;
  return m;
}

GaussCode to_gauss(const OrientedPDDiagram& d) {
  // For each arc, the crossing it leaves and whether it leaves as the over strand.
  std::map<int, std::pair<int, bool>> start;
  GaussCode g;
  for (std::size_t k = 0; k < d.crossings().size(); ++k) {
    const auto& x = d.crossings()[k];
    start[x.oo] = {static_cast<int>(k), true};
    start[x.uo] = {static_cast<int>(k), false};
    g.signs.push_back(x.sign);
  }
  for (const auto& comp : d.components()) {
    std::vector<Visit> visits;
    for (int a : comp) {
      auto it = start.find(a);
      if (it == start.end()) continue;  // free loop
      visits.push_back({it->second.first, it->second.second});
    }
    g.components.push_back(std::move(visits));
  }
  return g;
}

OrientedPDDiagram from_gauss(const GaussCode& g) {
  const int c = static_cast<int>(g.signs.size());
  std::vector<Crossing> xs(c);
  std::vector<int> over_seen(c, 0), under_seen(c, 0);
  std::vector<std::vector<int>> comps;
  int base = 0;
  for (const auto& visits : g.components) {
    const int n = static_cast<int>(visits.size());
    std::vector<int> cyc;
    if (n == 0) {
      cyc.push_back(++base);
      comps.push_back(cyc);
      continue;
    }
    for (int j = 0; j < n; ++j) {
      const Visit& v = visits[j];
      if (v.crossing < 0 || v.crossing >= c)
        throw Error(ErrorKind::InconsistentCycle, "Gauss code crossing index out of range");
      int leaving = base + 1 + j;
      int entering = base + 1 + (j + n - 1) % n;
      Crossing& x = xs[v.crossing];
      if (v.over) {
        x.oi = entering;
        x.oo = leaving;
        ++over_seen[v.crossing];
      } else {
        x.ui = entering;
        x.uo = leaving;
        ++under_seen[v.crossing];
      }
      cyc.push_back(leaving);
    }
    base += n;
    comps.push_back(std::move(cyc));
  }
  for (int k = 0; k < c; ++k) {
    if (over_seen[k] != 1 || under_seen[k] != 1)
      throw Error(ErrorKind::InconsistentCycle,
                  "crossing " + std::to_string(k) + " needs one over and one under visit");
    xs[k].sign = g.signs[k];
  }
  return OrientedPDDiagram(std::move(xs), std::move(comps));
}

// ---------------------------------------------------------------------------

void BraidWord::check() const {
  if (strands < 1) throw Error(ErrorKind::BadParameters, "braid needs at least one strand");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      throw Error(ErrorKind::BadParameters,
                  "braid letter " + std::to_string(l) + " out of range for " +
                      std::to_string(strands) + " strands");
}

BraidWord BraidWord::inverse() const {
  BraidWord b{strands, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) b.letters.push_back(-*it);
  return b;
}

void ForestGraph::check_simple() const {
  if (vertex_count < 0) throw Error(ErrorKind::BadParameters, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= vertex_count || e.b >= vertex_count)
      throw Error(ErrorKind::BadParameters, "edge endpoint out of range");
    if (e.a == e.b) throw Error(ErrorKind::BadParameters, "graph has a loop");
    if (e.sign != 1 && e.sign != -1) throw Error(ErrorKind::BadParameters, "edge sign must be +-1");
    if (!seen.insert(std::minmax(e.a, e.b)).second)
      throw Error(ErrorKind::BadParameters, "graph has a multiple edge");
  }
}

bool ForestGraph::is_forest() const {
  DSU dsu(vertex_count);
  for (const auto& e : edges)
    if (!dsu.unite(e.a, e.b)) return false;
  return true;
}

std::optional<std::vector<int>> ForestGraph::cycle_witness() const {
  if (is_forest()) return std::nullopt;
  const int n = vertex_count;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // Girth by BFS from every vertex.
  int girth = n + 1;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), par(n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          par[y] = x;
          queue.push_back(y);
        } else if (par[x] != y) {
          girth = std::min(girth, dist[x] + dist[y] + 1);
        }
      }
    }
  }

  // Lexicographically least cycle of that length: it starts at its least
  // vertex and the second vertex is smaller than the last.
  std::vector<int> path;
  std::vector<bool> on(n, false);
  std::function<bool(int)> dfs = [&](int x) -> bool {
    if (static_cast<int>(path.size()) == girth) {
      return std::binary_search(adj[x].begin(), adj[x].end(), path[0]) && path[1] < path.back();
    }
    for (int y : adj[x]) {
      if (y <= path[0] || on[y]) continue;
      on[y] = true;
      path.push_back(y);
      if (dfs(y)) return true;
      path.pop_back();
      on[y] = false;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(on.begin(), on.end(), false);
    on[s] = true;
    if (dfs(s)) return path;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> ForestGraph::trees() const {
  DSU dsu(vertex_count);
  for (const auto& e : edges) dsu.unite(e.a, e.b);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < vertex_count; ++v) groups[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : groups) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

OrientedPDDiagram unknot() { return unlink(1); }

OrientedPDDiagram unlink(int n) {
  if (n < 0) throw Error(ErrorKind::BadParameters, "negative component count");
  GaussCode g;
  g.components.assign(n, {});
  return from_gauss(g);
}

OrientedPDDiagram from_braid_closure(const BraidWord& b) {
  b.check();
  const int l = b.strands;
  detail::MorseBuilder m;
  for (int i = 0; i < l; ++i) m.cup(i, i);
  for (int letter : b.letters) m.cross(std::abs(letter) - 1, letter > 0 ? 1 : -1);
  for (int i = l - 1; i >= 0; --i) m.cap(i);
  return from_gauss(m.finish());
}

OrientedPDDiagram hopf_link(int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::BadParameters, "Hopf sign must be +-1");
  return from_braid_closure({2, {sign, sign}});
}

OrientedPDDiagram trefoil(int handedness) {
  if (handedness != 1 && handedness != -1)
    throw Error(ErrorKind::BadParameters, "trefoil handedness must be +-1");
  return from_braid_closure({2, {handedness, handedness, handedness}});
}

OrientedPDDiagram disjoint_union(const OrientedPDDiagram& d1, const OrientedPDDiagram& d2) {
  int shift = 0;
  for (const auto& comp : d1.components())
    for (int a : comp) shift = std::max(shift, a);
  std::vector<Crossing> xs = d1.crossings();
  for (auto x : d2.crossings()) {
    x.oi += shift;
    x.oo += shift;
    x.ui += shift;
    x.uo += shift;
    xs.push_back(x);
  }
  auto comps = d1.components();
  for (auto comp : d2.components()) {
    for (int& a : comp) a += shift;
    comps.push_back(std::move(comp));
  }
  auto bp = d1.basepoints();
  const int off = static_cast<int>(d1.component_count());
  for (const auto& [c, a] : d2.basepoints()) bp[c + off] = a + shift;
  return OrientedPDDiagram(std::move(xs), std::move(comps), std::move(bp));
}

OrientedPDDiagram connected_sum(const OrientedPDDiagram& d1, int c1, const OrientedPDDiagram& d2,
                                int c2) {
  if (c1 < 0 || c1 >= static_cast<int>(d1.component_count()) || c2 < 0 ||
      c2 >= static_cast<int>(d2.component_count()))
    throw Error(ErrorKind::ComponentOutOfRange, "connected sum component out of range");
  GaussCode g1 = to_gauss(d1), g2 = to_gauss(d2);
  const int off = static_cast<int>(g1.signs.size());
  for (auto& comp : g2.components)
    for (auto& v : comp) v.crossing += off;
  // The band joins the arc closing c1's cycle to the arc closing c2's.
  GaussCode g;
  g.signs = g1.signs;
  g.signs.insert(g.signs.end(), g2.signs.begin(), g2.signs.end());
  for (int i = 0; i < static_cast<int>(g1.components.size()); ++i) {
    auto comp = g1.components[i];
    if (i == c1) comp.insert(comp.end(), g2.components[c2].begin(), g2.components[c2].end());
    g.components.push_back(std::move(comp));
  }
  for (int i = 0; i < static_cast<int>(g2.components.size()); ++i)
    if (i != c2) g.components.push_back(g2.components[i]);
  return from_gauss(g);
}

OrientedPDDiagram mirror(const OrientedPDDiagram& d) {
  std::vector<Crossing> xs;
  for (const auto& x : d.crossings()) xs.push_back({x.ui, x.uo, x.oi, x.oo, -x.sign});
  return OrientedPDDiagram(std::move(xs), d.components(), d.basepoints());
}

OrientedPDDiagram reverse_component(const OrientedPDDiagram& d, int c) {
  if (c < 0 || c >= static_cast<int>(d.component_count()))
    throw Error(ErrorKind::ComponentOutOfRange, "component " + std::to_string(c));
  auto comps = d.components();
  std::set<int> arcs(comps[c].begin(), comps[c].end());
  std::reverse(comps[c].begin(), comps[c].end());
  std::vector<Crossing> xs;
  for (auto x : d.crossings()) {
    bool over = arcs.count(x.oi) > 0, under = arcs.count(x.ui) > 0;
    if (over) std::swap(x.oi, x.oo);
    if (under) std::swap(x.ui, x.uo);
    if (over != under) x.sign = -x.sign;
    xs.push_back(x);
  }
  return OrientedPDDiagram(std::move(xs), std::move(comps), d.basepoints());
}

OrientedPDDiagram permute_components(const OrientedPDDiagram& d, const std::vector<int>& order) {
  const int n = static_cast<int>(d.component_count());
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  if (sorted != ident) throw Error(ErrorKind::ComponentOutOfRange, "not a permutation of components");
  std::vector<std::vector<int>> comps;
  std::map<int, int> bp;
  for (int i = 0; i < n; ++i) {
    comps.push_back(d.components()[order[i]]);
    auto it = d.basepoints().find(order[i]);
    if (it != d.basepoints().end()) bp[i] = it->second;
  }
  return OrientedPDDiagram(d.crossings(), std::move(comps), std::move(bp));
}

OrientedPDDiagram relabel_arcs(const OrientedPDDiagram& d, const std::map<int, int>& arc_map) {
  auto f = [&](int a) {
    auto it = arc_map.find(a);
    return it == arc_map.end() ? a : it->second;
  };
  std::vector<Crossing> xs;
  for (const auto& x : d.crossings()) xs.push_back({f(x.oi), f(x.oo), f(x.ui), f(x.uo), x.sign});
  auto comps = d.components();
  for (auto& comp : comps)
    for (int& a : comp) a = f(a);
  std::map<int, int> bp;
  for (const auto& [c, a] : d.basepoints()) bp[c] = f(a);
  return OrientedPDDiagram(std::move(xs), std::move(comps), std::move(bp));
}

OrientedPDDiagram forest_link(const ForestGraph& g) {
  g.check_simple();
  if (auto cyc = g.cycle_witness())
    throw Error(ErrorKind::NotAForest, "graph has a cycle through vertices " + join(*cyc));
  const int n = g.vertex_count;
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.a].push_back({e.b, e.sign});
    adj[e.b].push_back({e.a, e.sign});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  OrientedPDDiagram all;
  std::vector<int> vertex_order;  // component index -> vertex
  for (const auto& tree : g.trees()) {
    const int root = tree.front();
    OrientedPDDiagram d = unknot();
    std::vector<int> order{root};
    std::map<int, int> index{{root, 0}};
    std::function<void(int, int)> dfs = [&](int x, int parent) {
      for (auto [y, sign] : adj[x]) {
        if (y == parent) continue;
        d = connected_sum(d, index[x], hopf_link(sign), 0);
        index[y] = static_cast<int>(order.size());
        order.push_back(y);
        dfs(y, x);
      }
    };
    dfs(root, -1);
    all = disjoint_union(all, d);
    vertex_order.insert(vertex_order.end(), order.begin(), order.end());
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[vertex_order[i]] = i;
  return permute_components(all, perm);
}

namespace detail {

OrientedPDDiagram build_luv(int u, int v, const LuvLayout& layout) {
  if (u < 3) throw Error(ErrorKind::BadParameters, "L(u,v) needs u >= 3");
  auto up = [&](int label) {
    return label - 1 < static_cast<int>(layout.left_up.size()) ? layout.left_up[label - 1] : true;
  };
  MorseBuilder m;
  m.cup(0, u, up(u));
  m.cup(1, 1, up(1));
  m.cross(0, layout.bottom);
  m.cross(1, -layout.bottom);
  for (int i = 0; i < std::abs(v); ++i) m.cross(2, v > 0 ? layout.twist : -layout.twist);
  for (int j = 1; j <= u - 2; ++j) {
    m.cup(1, j + 1, up(j + 1));
    m.cross(0, layout.chain);
    m.cross(2, layout.chain);
    m.cap(1);
  }
  m.cross(1, layout.top);
  m.cross(0, -layout.top);
  m.cap(1);
  m.cap(0);
  return from_gauss(m.finish());
}

}  // namespace detail

OrientedPDDiagram luv_diagram(int u, int v) {
  return detail::build_luv(u, v, detail::calibrated_luv_layout());
}

// ---------------------------------------------------------------------------

namespace {

// Drops the listed crossings and every visit to them, renumbering the rest.
GaussCode remove_crossings(const GaussCode& g, const std::set<int>& dead) {
  std::vector<int> renum(g.signs.size(), -1);
  GaussCode out;
  for (int k = 0; k < static_cast<int>(g.signs.size()); ++k) {
    if (dead.count(k)) continue;
    renum[k] = static_cast<int>(out.signs.size());
    out.signs.push_back(g.signs[k]);
  }
  for (const auto& comp : g.components) {
    std::vector<Visit> vs;
    for (const auto& v : comp)
      if (!dead.count(v.crossing)) vs.push_back({renum[v.crossing], v.over});
    out.components.push_back(std::move(vs));
  }
  return out;
}

std::optional<std::set<int>> find_r1(const GaussCode& g) {
  for (const auto& comp : g.components) {
    const std::size_t n = comp.size();
    for (std::size_t j = 0; j < n && n >= 2; ++j)
      if (comp[j].crossing == comp[(j + 1) % n].crossing) return std::set<int>{comp[j].crossing};
  }
  return std::nullopt;
}

// A bigon face between two distinct crossings along which one strand stays
// over (so the other stays under).
std::optional<std::set<int>> find_r2(const OrientedPDDiagram& d) {
  std::vector<int> signs;
  for (const auto& x : d.crossings()) signs.push_back(x.sign);
  RotationSystem rs(d.crossings(), signs);
  for (const auto& f : rs.faces()) {
    if (f.size() != 2) continue;
    int h = f[0], t = rs.alpha[h];
    if (h / 4 == t / 4) continue;
    if (rs.end[h].over == rs.end[t].over) return std::set<int>{h / 4, t / 4};
  }
  return std::nullopt;
}

}  // namespace

OrientedPDDiagram switch_crossing(const OrientedPDDiagram& d, int k) {
  if (k < 0 || k >= static_cast<int>(d.crossing_count()))
    throw Error(ErrorKind::BadParameters, "crossing index out of range");
  auto xs = d.crossings();
  const Crossing x = xs[k];
  xs[k] = {x.ui, x.uo, x.oi, x.oo, -x.sign};
  return OrientedPDDiagram(std::move(xs), d.components(), d.basepoints());
}

OrientedPDDiagram smooth_crossing(const OrientedPDDiagram& d, int k) {
  if (k < 0 || k >= static_cast<int>(d.crossing_count()))
    throw Error(ErrorKind::BadParameters, "crossing index out of range");
  GaussCode g = to_gauss(d);
  // Rotate each component so that a visit to k comes first.
  std::vector<std::vector<Visit>> touched;
  for (auto comp : g.components) {
    auto it = std::find_if(comp.begin(), comp.end(), [&](const Visit& v) { return v.crossing == k; });
    if (it == comp.end()) continue;
    std::rotate(comp.begin(), it, comp.end());
    touched.push_back(std::move(comp));
  }
  GaussCode out;
  out.signs = g.signs;
  std::vector<std::vector<Visit>> pieces;
  if (touched.size() == 1) {
    // k X k Y  ->  X and Y
    auto& c = touched[0];
    auto second = std::find_if(c.begin() + 1, c.end(), [&](const Visit& v) { return v.crossing == k; });
    pieces.emplace_back(c.begin() + 1, second);
    pieces.emplace_back(second + 1, c.end());
  } else {
    // k X, k Y  ->  X Y
    std::vector<Visit> merged(touched[0].begin() + 1, touched[0].end());
    merged.insert(merged.end(), touched[1].begin() + 1, touched[1].end());
    pieces.push_back(std::move(merged));
  }
  // Keep the smoothed components where the first touched one was.
  for (const auto& comp : g.components) {
    bool has_k = std::any_of(comp.begin(), comp.end(), [&](const Visit& v) { return v.crossing == k; });
    if (!has_k) {
      out.components.push_back(comp);
    } else if (!pieces.empty()) {
      for (auto& p : pieces) out.components.push_back(std::move(p));
      pieces.clear();
    }
  }
  return from_gauss(remove_crossings(out, {k}));
}

OrientedPDDiagram simplify(const OrientedPDDiagram& d) {
  ensure_valid(d);
  const auto bp = basepoint_components(d);
  OrientedPDDiagram cur = d;
  bool changed = false;
  for (;;) {
    GaussCode g = to_gauss(cur);
    std::optional<std::set<int>> dead = find_r1(g);
    if (!dead) dead = find_r2(cur);
    if (!dead) break;
    cur = from_gauss(remove_crossings(g, *dead));
    changed = true;
  }
  if (!changed) return d;
  return with_component_basepoints(cur, bp);
}

bool is_alternating(const OrientedPDDiagram& d) {
  for (const auto& comp : to_gauss(d).components)
    for (std::size_t j = 0; j < comp.size(); ++j)
      if (comp[j].over == comp[(j + 1) % comp.size()].over) return false;
  return true;
}

}  // namespace khof
