#include <doctest.h>

#include <set>

#include "forests.hpp"
#include "khof/detection.hpp"

using namespace khof;

namespace {

std::set<std::pair<int, int>> unsigned_edges(const ForestGraph& g) {
  std::set<std::pair<int, int>> s;
  for (const auto& e : g.edges) s.insert(std::minmax(e.a, e.b));
  return s;
}

}  // namespace

TEST_SUITE("detection") {

TEST_CASE("forests are recognised") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : testing::all_forests(n)) {
      const Classification c = classify(forest_link(g));
      REQUIRE(c.kind == Classification::Kind::ForestOfUnknots);
      CHECK(c.rank == (1LL << n));
      CHECK(c.forest.vertex_count == n);
      CHECK(unsigned_edges(c.forest) == unsigned_edges(g));
    }
  // Signed clasps come back with their linking numbers.
  const ForestGraph g{3, {{0, 1, -1}, {1, 2, 1}}};
  const Classification c = classify(forest_link(g));
  REQUIRE(c.kind == Classification::Kind::ForestOfUnknots);
  CHECK(c.forest.edges.size() == 2);
  CHECK(c.forest.edges[0].sign == -1);
  CHECK(c.forest.edges[1].sign == 1);
}

TEST_CASE("verdicts on other links") {
  const Classification a = classify(luv_diagram(3, -2));
  CHECK(a.kind == Classification::Kind::NotMinimalRank);
  CHECK(a.rank == 12);
  CHECK(a.bound == 8);
  const Classification u = classify(unlink(2));
  CHECK(u.kind == Classification::Kind::ForestOfUnknots);
  CHECK(u.forest.edges.empty());
  CHECK(classify(from_braid_closure({2, {1, 1, 1, 1}})).kind == Classification::Kind::NotMinimalRank);
  CHECK(classify(trefoil(1)).kind == Classification::Kind::NotMinimalRank);
  CHECK(std::string(to_string(Classification::Kind::CycleWitness)) == "CycleWitness");
}

TEST_CASE("classification is stable under mirror, relabeling and simplify") {
  const ForestGraph g{4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}}};
  const OrientedPDDiagram d = forest_link(g);
  for (const OrientedPDDiagram& e : {mirror(d), simplify(d), permute_components(d, {2, 0, 3, 1})}) {
    const Classification c = classify(e);
    REQUIRE(c.kind == Classification::Kind::ForestOfUnknots);
    CHECK(c.forest.edges.size() == 3);
  }
  CHECK(classify(mirror(luv_diagram(3, -2))).rank == 12);
}

TEST_CASE("sublinks") {
  const OrientedPDDiagram h = sublink(hopf_link(1), {0});
  CHECK(h.component_count() == 1);
  CHECK(h.crossing_count() == 0);
  const OrientedPDDiagram p = sublink(forest_link({3, {{0, 1, 1}, {1, 2, 1}}}), {0, 2});
  CHECK_FALSE(validate(p));
  CHECK(kh(p, Coeff::F2).total_rank() == 4);
  CHECK(linking_matrix(p)(0, 1) == 0);
  const OrientedPDDiagram l = sublink(luv_diagram(4, 0), {0, 1});
  CHECK_FALSE(validate(l));
  CHECK(std::abs(linking_matrix(l)(0, 1)) == 1);
  CHECK(kh(l, Coeff::F2).total_rank() == 4);
  CHECK_THROWS_AS(sublink(h, {}), Error);
  CHECK_THROWS_AS(sublink(hopf_link(1), {2}), Error);
}

TEST_CASE("sublinks of forest links have minimal rank") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : testing::all_forests(n)) {
      const OrientedPDDiagram d = forest_link(g);
      for (std::uint32_t s = 1; s < (1U << n); ++s) {
        std::vector<int> comps;
        for (int i = 0; i < n; ++i)
          if ((s >> i) & 1) comps.push_back(i);
        CHECK(kh(sublink(d, comps), Coeff::F2).total_rank() == (1LL << comps.size()));
      }
    }
}

}
