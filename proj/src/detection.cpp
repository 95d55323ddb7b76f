#include "khof/detection.hpp"

#include <algorithm>
#include <set>

namespace khof {

const char* to_string(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::ForestOfUnknots: return "ForestOfUnknots";
    case Classification::Kind::NotMinimalRank: return "NotMinimalRank";
    case Classification::Kind::CycleWitness: return "CycleWitness";
    case Classification::Kind::NonUnitLinking: return "NonUnitLinking";
  }
  return "?";
}

Classification classify(const OrientedPDDiagram& d, const KhOptions& opt) {
  const int n = static_cast<int>(d.component_count());
  if (n > 62) throw Error(ErrorKind::BadParameters, "too many components");
  Classification out;
  out.rank = kh(d, Coeff::F2, opt).total_rank();
  out.bound = 1LL << n;
  if (out.rank != out.bound) {
    out.kind = Classification::Kind::NotMinimalRank;
    return out;
  }
  const LinkingMatrix lk = linking_matrix(d);
  ForestGraph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int v = lk(i, j);
      if (v == 0) continue;
      if (std::abs(v) != 1) {
        out.kind = Classification::Kind::NonUnitLinking;
        out.i = i;
        out.j = j;
        out.value = v;
        return out;
      }
      g.edges.push_back({i, j, v});
    }
  if (auto cyc = g.cycle_witness()) {
    out.kind = Classification::Kind::CycleWitness;
    out.cycle = *cyc;
    return out;
  }
  out.kind = Classification::Kind::ForestOfUnknots;
  out.forest = std::move(g);
  return out;
}

OrientedPDDiagram sublink(const OrientedPDDiagram& d, const std::vector<int>& comps) {
  if (comps.empty()) throw Error(ErrorKind::EmptySelection, "no components selected");
  const int n = static_cast<int>(d.component_count());
  std::set<int> keep;
  for (int c : comps) {
    if (c < 0 || c >= n) throw Error(ErrorKind::ComponentOutOfRange, "component " + std::to_string(c));
    keep.insert(c);
  }
  GaussCode g = to_gauss(d);
  // Crossings survive only when both strands do.
  std::vector<int> strands(g.signs.size(), 0);
  for (int c : keep)
    for (const auto& v : g.components[c]) ++strands[v.crossing];
  std::vector<int> renum(g.signs.size(), -1);
  GaussCode out;
  for (std::size_t k = 0; k < g.signs.size(); ++k)
    if (strands[k] == 2) {
      renum[k] = static_cast<int>(out.signs.size());
      out.signs.push_back(g.signs[k]);
    }
  std::map<int, int> bp_comps;
  int idx = 0;
  for (int c : keep) {
    std::vector<Visit> vs;
    for (const auto& v : g.components[c])
      if (renum[v.crossing] >= 0) vs.push_back({renum[v.crossing], v.over});
    out.components.push_back(std::move(vs));
    if (d.basepoints().count(c)) bp_comps[idx] = 0;
    ++idx;
  }
  OrientedPDDiagram r = from_gauss(out);
  std::map<int, int> bp;
  for (const auto& [c, unused] : bp_comps) bp[c] = r.components()[c].front();
  return r.with_basepoints(std::move(bp));
}

}  // namespace khof
