#include "khof/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace khof {

namespace {

json bigint_json(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

BigInt bigint_from(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<long>());
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, std::string("field \"") + key + "\" is not an integer");
  return v.get<int>();
}

}  // namespace

json diagram_to_json(const OrientedPDDiagram& d) {
  json j;
  j["crossings"] = json::array();
  for (const auto& x : d.crossings())
    j["crossings"].push_back({{"oi", x.oi}, {"oo", x.oo}, {"ui", x.ui}, {"uo", x.uo}, {"sign", x.sign}});
  j["components"] = d.components();
  j["free_loops"] = d.free_loop_count();
  json bp = json::object();
  for (const auto& [c, a] : d.basepoints()) bp[std::to_string(c)] = a;
  j["basepoints"] = bp;
  return j;
}

OrientedPDDiagram diagram_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "diagram must be a JSON object");
    std::vector<Crossing> xs;
    for (const auto& c : j.value("crossings", json::array())) {
      Crossing x{get_int(c, "oi"), get_int(c, "oo"), get_int(c, "ui"), get_int(c, "uo"), get_int(c, "sign")};
      xs.push_back(x);
    }
    std::vector<std::vector<int>> comps;
    for (const auto& c : j.value("components", json::array())) comps.push_back(c.get<std::vector<int>>());

    std::set<int> used;
    int max_arc = 0;
    for (const auto& x : xs) used.insert({x.oi, x.oo, x.ui, x.uo});
    for (const auto& c : comps)
      for (int a : c) {
        if (a <= 0) throw Error(ErrorKind::ParseError, "arc ids must be positive");
        max_arc = std::max(max_arc, a);
      }
    if (!used.empty()) max_arc = std::max(max_arc, *used.rbegin());

    if (j.contains("free_loops")) {
      const int declared = get_int(j, "free_loops");
      int listed = 0;
      for (const auto& c : comps)
        if (c.size() == 1 && !used.count(c[0])) ++listed;
      if (declared < listed)
        throw Error(ErrorKind::ParseError, "free_loops = " + std::to_string(declared) + " but " +
                                               std::to_string(listed) + " crossingless loops are listed");
      for (int k = listed; k < declared; ++k) comps.push_back({++max_arc});
    }

    std::map<int, int> bp;
    if (j.contains("basepoints")) {
      for (const auto& [key, arc] : j.at("basepoints").items()) {
        std::size_t pos = 0;
        int c = -1;
        try {
          c = std::stoi(key, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != key.size() || c < 0) throw Error(ErrorKind::ParseError, "bad basepoint key '" + key + "'");
        bp[c] = arc.get<int>();
      }
    }
    return OrientedPDDiagram(std::move(xs), std::move(comps), std::move(bp));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

OrientedPDDiagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return diagram_from_json(j);
}

json ranks_to_json(const BigradedRanks& b) {
  json j;
  j["coeff"] = to_string(b.coeff);
  j["free"] = json::array();
  for (const auto& [g, r] : b.free) j["free"].push_back({g.first, g.second, r});
  j["torsion"] = json::array();
  for (const auto& [g, orders] : b.torsion)
    for (const auto& n : orders) j["torsion"].push_back({g.first, g.second, bigint_json(n)});
  return j;
}

BigradedRanks ranks_from_json(const json& j) {
  try {
    BigradedRanks b;
    const std::string c = j.at("coeff").get<std::string>();
    if (c == "F2") b.coeff = Coeff::F2;
    else if (c == "Z") b.coeff = Coeff::Z;
    else throw Error(ErrorKind::ParseError, "unknown coefficient ring '" + c + "'");
    for (const auto& e : j.at("free")) b.free[{e.at(0).get<int>(), e.at(1).get<int>()}] += e.at(2).get<long long>();
    for (const auto& e : j.value("torsion", json::array()))
      b.torsion[{e.at(0).get<int>(), e.at(1).get<int>()}].push_back(bigint_from(e.at(2)));
    return b;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string ranks_to_csv(const BigradedRanks& b) {
  std::ostringstream out;
  out << "kind,h,q,value\n";
  for (const auto& [g, r] : b.free) out << "free," << g.first << ',' << g.second << ',' << r << '\n';
  for (const auto& [g, orders] : b.torsion)
    for (const auto& n : orders) out << "torsion," << g.first << ',' << g.second << ',' << n.get_str() << '\n';
  return out.str();
}

json internal_to_json(const InternalGradingRanks& r) {
  json j = json::array();
  for (const auto& [l, n] : r) j.push_back({l, n});
  return j;
}

json classification_to_json(const Classification& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["rank"] = c.rank;
  j["bound"] = c.bound;
  switch (c.kind) {
    case Classification::Kind::ForestOfUnknots: {
      json edges = json::array();
      for (const auto& e : c.forest.edges) edges.push_back({e.a, e.b, e.sign});
      j["forest"] = {{"vertices", c.forest.vertex_count}, {"edges", edges}};
      break;
    }
    case Classification::Kind::CycleWitness:
      j["cycle"] = c.cycle;
      break;
    case Classification::Kind::NonUnitLinking:
      j["pair"] = {c.i, c.j};
      j["linking_number"] = c.value;
      break;
    case Classification::Kind::NotMinimalRank:
      break;
  }
  return j;
}

}  // namespace khof
