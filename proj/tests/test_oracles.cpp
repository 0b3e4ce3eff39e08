#include <doctest.h>

#include "fixtures.hpp"
#include "gog/errors.hpp"
#include "gog/oracles.hpp"

using namespace gog;
using namespace gog::fixtures;

namespace {
std::map<std::string, std::vector<Rat>> coords_of(const Instance& inst) {
  return std::get<BarJointInstance>(inst.payload).coordinates;
}
} // namespace

TEST_CASE("triangle rigidity matrix has nullity 3") {
  Instance t = triangle_instance();
  RigidityOracle o = rigidity_nullity(t.hypergraph, coords_of(t), 2);
  CHECK(o.nullity == 3);
  CHECK(o.affine_span_dim == 2);
  CHECK(o.trivial_dim == 3);
  CHECK(o.rigid);
}

TEST_CASE("double banana rigidity matrix has nullity 7") {
  Instance b = banana_instance();
  RigidityOracle o = rigidity_nullity(b.hypergraph, coords_of(b), 3);
  CHECK(o.nullity == 7);
  CHECK(o.trivial_dim == 6);
  CHECK(!o.rigid);
}

TEST_CASE("a single bar is rigid through the span correction") {
  Instance s = single_bar_instance();
  RigidityOracle o = rigidity_nullity(s.hypergraph, coords_of(s), 2);
  CHECK(o.nullity == 3);
  CHECK(o.affine_span_dim == 1);
  CHECK(o.trivial_dim == 3); // C(3,2) - C(1,2)
  CHECK(o.rigid);
}

TEST_CASE("unit square has one mechanism") {
  Instance s = square_instance();
  RigidityOracle o = rigidity_nullity(s.hypergraph, coords_of(s), 2);
  CHECK(o.nullity == 4);
  CHECK(!o.rigid);
}

TEST_CASE("coincident endpoints are rejected") {
  Hypergraph h({"a", "b"}, {{"e", {"a", "b"}}});
  std::map<std::string, std::vector<Rat>> coords{{"a", rv({1, 1})}, {"b", rv({1, 1})}};
  CHECK_THROWS_AS(rigidity_nullity(h, coords, 2), input_error);
}

TEST_CASE("colouring enumeration counts") {
  CHECK(proper_colourings(k3_graph(), 3).count == 6);
  CHECK(proper_colourings(c5_graph(), 3).count == 30);
  CHECK(proper_colourings(k3_graph(), 2).count == 0);
  CHECK(proper_colourings(k4_minus_edge_graph(), 3).count == 6);
}

TEST_CASE("unique colourability by brute force") {
  CHECK(unique_colourability_bruteforce(k3_graph(), 3));
  CHECK(!unique_colourability_bruteforce(c5_graph(), 3));
  CHECK(unique_colourability_bruteforce(k4_minus_edge_graph(), 3));
  Hypergraph edgeless({"a", "b"}, {});
  CHECK(!unique_colourability_bruteforce(edgeless, 3));
}

TEST_CASE("classical count report on the triangle") {
  MaxwellCountReport r = classical_maxwell_count(triangle_graph(), 2);
  CHECK(r.edge_count == 3);
  CHECK(r.expected_edges == 3);
  CHECK(r.count_tight);
  CHECK(r.subsets_ok);
  CHECK(r.subsets_exhaustive);
}

TEST_CASE("classical count accepts the double banana and that is the point") {
  Instance b = banana_instance();
  MaxwellCountReport r = classical_maxwell_count(b.hypergraph, 3);
  CHECK(r.count_tight);   // 18 = 3*8 - 6
  CHECK(r.subsets_ok);    // every subset satisfies the count
}

TEST_CASE("brute-force homomorphism counting") {
  CHECK(homomorphism_count_bruteforce(single_bar_instance().hypergraph, k3_graph()) == 6);
  CHECK(homomorphism_count_bruteforce(k3_graph(), single_bar_instance().hypergraph) == 0);
  CHECK(homomorphism_count_bruteforce(c5_graph(), c5_graph()) == 10); // the automorphisms
}
