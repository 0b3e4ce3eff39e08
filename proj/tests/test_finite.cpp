#include <doctest.h>

#include "fixtures.hpp"
#include "gog/errors.hpp"
#include "gog/finite.hpp"
#include "gog/oracles.hpp"

using namespace gog;
using namespace gog::fixtures;

namespace {
std::map<std::string, int> greedy_colouring(const Hypergraph& h, int n) {
  std::map<std::string, int> col;
  for (const auto& v : h.vertices()) {
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& e : h.edges()) {
      if (e.vertices[0] == v && col.count(e.vertices[1]))
        used[static_cast<std::size_t>(col[e.vertices[1]])] = true;
      if (e.vertices[1] == v && col.count(e.vertices[0]))
        used[static_cast<std::size_t>(col[e.vertices[0]])] = true;
    }
    for (int c = 1; c <= n; ++c)
      if (!used[static_cast<std::size_t>(c)]) {
        col[v] = c;
        break;
      }
  }
  return col;
}
} // namespace

TEST_CASE("symmetric group construction") {
  PermGroup s3 = PermGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.element(0) == Perm{0, 1, 2}); // identity first
  CHECK(s3.point_stabiliser(0).size() == 2);
  PermGroup s4 = PermGroup::symmetric(4);
  CHECK(s4.order() == 24);
}

TEST_CASE("group closure from generators") {
  PermGroup a = PermGroup::generated(3, {{1, 0, 2}});
  CHECK(a.order() == 2);
  PermGroup cyclic = PermGroup::generated(4, {{1, 2, 3, 0}});
  CHECK(cyclic.order() == 4);
  CHECK_THROWS_AS(PermGroup::generated(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 10), input_error);
}

TEST_CASE("colour stabiliser realisation of the triangle") {
  FiniteRealisation r =
      from_colouring(k3_graph(), {{"v1", 1}, {"v2", 2}, {"v3", 3}}, 3);
  for (const auto& s : r.vertex_groups) CHECK(s.size() == 2);   // (n-1)!
  for (const auto& s : r.edge_groups) CHECK(s.size() == 1);     // (n-2)!
  for (const auto& s : r.incidence_groups) CHECK(s.size() == 1);
}

TEST_CASE("single vertex colour stabiliser") {
  FiniteRealisation r = from_colouring(Hypergraph({"a"}, {}), {{"a", 1}}, 3);
  CHECK(r.vertex_groups.front().size() == 2);
}

TEST_CASE("colouring validation") {
  CHECK_THROWS_AS(from_colouring(k3_graph(), {{"v1", 1}, {"v2", 1}, {"v3", 2}}, 3), input_error);
  CHECK_THROWS_AS(from_colouring(k3_graph(), {{"v1", 1}, {"v2", 2}, {"v3", 1}}, 2), input_error);
  CHECK_THROWS_AS(from_colouring(k3_graph(), {{"v1", 1}, {"v2", 2}}, 3), input_error);
}

TEST_CASE("coset graph shapes") {
  SUBCASE("single vertex over S3") {
    FiniteRealisation r = from_colouring(Hypergraph({"a"}, {}), {{"a", 1}}, 3);
    CosetGraph x = coset_graph(r);
    CHECK(x.fibres[0].size() == 3); // index of the stabiliser
    CHECK(x.node_count() == 3);
    CHECK(x.edge_count() == 0);
  }
  SUBCASE("triangle over S3") {
    FiniteRealisation r = from_colouring(k3_graph(), {{"v1", 1}, {"v2", 2}, {"v3", 3}}, 3);
    CosetGraph x = coset_graph(r);
    for (std::size_t i = 0; i < 3; ++i) CHECK(x.fibres[i].size() == 3);      // vertex fibres
    for (std::size_t i = 3; i < 6; ++i) CHECK(x.fibres[i].size() == 6);      // edge fibres
    for (const auto& f : x.incidence_fibres) CHECK(f.size() == 6);
  }
  SUBCASE("one edge over S3") {
    FiniteRealisation r =
        from_colouring(Hypergraph({"a", "b"}, {{"e", {"a", "b"}}}), {{"a", 1}, {"b", 2}}, 3);
    CosetGraph x = coset_graph(r);
    CHECK(x.node_count() == 3 + 3 + 6);
    CHECK(x.edge_count() == 6 + 6);
  }
  SUBCASE("enumeration cap") {
    FiniteRealisation r = from_colouring(Hypergraph({"a"}, {}), {{"a", 1}}, 3);
    CHECK_THROWS_AS(coset_graph(r, 5), input_error);
  }
}

TEST_CASE("section counts equal proper colouring counts") {
  struct Case {
    Hypergraph graph;
    int n;
  };
  std::vector<Case> cases{{k3_graph(), 3},         {k3_graph(), 4},         {c5_graph(), 3},
                          {k4_minus_edge_graph(), 3}, {k4_graph(), 4},
                          {Hypergraph({"a"}, {}), 3}};
  for (const auto& c : cases) {
    auto colouring = greedy_colouring(c.graph, c.n);
    FiniteRealisation r = from_colouring(c.graph, colouring, c.n);
    auto sections = enumerate_sections(coset_graph(r));
    CHECK(static_cast<long>(sections.size()) == proper_colourings(c.graph, c.n).count);
  }
}

TEST_CASE("worked section counts") {
  FiniteRealisation k3 = from_colouring(k3_graph(), {{"v1", 1}, {"v2", 2}, {"v3", 3}}, 3);
  CHECK(enumerate_sections(coset_graph(k3)).size() == 6);
  FiniteRealisation lone = from_colouring(Hypergraph({"a"}, {}), {{"a", 1}}, 3);
  CHECK(enumerate_sections(coset_graph(lone)).size() == 3);
  auto c5_col = greedy_colouring(c5_graph(), 3);
  FiniteRealisation c5 = from_colouring(c5_graph(), c5_col, 3);
  CHECK(enumerate_sections(coset_graph(c5)).size() == 30);
}

TEST_CASE("sections reconstruct motions") {
  FiniteRealisation r = from_colouring(k3_graph(), {{"v1", 1}, {"v2", 2}, {"v3", 3}}, 3);
  CosetGraph x = coset_graph(r);
  auto incs = incidence_set(r.hypergraph);
  for (const Section& s : enumerate_sections(x)) {
    // group elements: any member of the chosen coset per element, any
    // member of the intersection per incidence
    std::vector<std::uint32_t> g_elem;
    for (std::size_t t = 0; t < x.fibres.size(); ++t)
      g_elem.push_back(x.fibres[t][s.choice[t]].front());
    for (std::size_t q = 0; q < incs.size(); ++q) {
      std::size_t vi = r.hypergraph.vertex_index(incs[q].vertex);
      std::size_t ei = 3 + r.hypergraph.edge_index(incs[q].edge);
      ElementSet common = intersect_sets(x.fibres[vi][s.choice[vi]], x.fibres[ei][s.choice[ei]]);
      REQUIRE(!common.empty());
      std::uint32_t gi = common.front();
      // sigma_i^{-1} sigma_x must lie in rho(x) for both endpoints
      auto check_in = [&](std::uint32_t gx, const ElementSet& sub) {
        std::size_t prod = r.group.compose(r.group.inverse(gi), gx);
        CHECK(std::binary_search(sub.begin(), sub.end(), static_cast<std::uint32_t>(prod)));
      };
      check_in(g_elem[vi], r.vertex_groups[vi]);
      check_in(g_elem[ei], r.edge_groups[ei - 3]);
    }
  }
}

TEST_CASE("global rigidity equals unique colourability") {
  struct Case {
    Hypergraph graph;
    int n;
    bool expect;
  };
  std::vector<Case> cases{{k3_graph(), 3, true},
                          {c5_graph(), 3, false},
                          {k4_minus_edge_graph(), 3, true},
                          {k4_graph(), 4, true}};
  for (const auto& c : cases) {
    auto colouring = greedy_colouring(c.graph, c.n);
    FiniteRealisation r = from_colouring(c.graph, colouring, c.n);
    bool rigid = is_globally_rigid_finite(r);
    CHECK(rigid == c.expect);
    CHECK(rigid == unique_colourability_bruteforce(c.graph, c.n));
    if (rigid) {
      // certified graphs satisfy the edge bound |E| >= (n-1)|V| - C(n,2)
      long k = c.n;
      long bound = (k - 1) * static_cast<long>(c.graph.vertices().size()) - k * (k - 1) / 2;
      CHECK(static_cast<long>(c.graph.edges().size()) >= bound);
    }
  }
}

TEST_CASE("fixed points of stabilisers detect self-normalising subgroups") {
  PermGroup s3 = PermGroup::symmetric(3);
  CHECK(fix_of_subgroup(s3, s3.point_stabiliser(0)) == std::vector<int>{0});
  CHECK(fix_of_subgroup(s3, s3.point_stabiliser(1)) == std::vector<int>{1});
  // degree 2: the stabiliser is trivial and fixes everything
  PermGroup s2 = PermGroup::symmetric(2);
  CHECK(fix_of_subgroup(s2, s2.point_stabiliser(0)) == std::vector<int>{0, 1});
  // a transitive subgroup fixes nothing
  ElementSet whole(s3.order());
  for (std::uint32_t i = 0; i < s3.order(); ++i) whole[i] = i;
  CHECK(fix_of_subgroup(s3, whole).empty());
  // not a subgroup
  CHECK_THROWS_AS(fix_of_subgroup(s3, ElementSet{1}), input_error);
}

TEST_CASE("tensor product sections count homomorphisms") {
  Hypergraph k2({"a", "b"}, {{"e", {"a", "b"}}});
  CHECK(tensor_sections(k2, k3_graph()) == 6);
  CHECK(tensor_sections(k3_graph(), k2) == 0);
  CHECK(tensor_sections(c5_graph(), c5_graph()) ==
        homomorphism_count_bruteforce(c5_graph(), c5_graph()));
  CHECK(tensor_sections(k4_graph(), k3_graph()) ==
        homomorphism_count_bruteforce(k4_graph(), k3_graph()));
}
