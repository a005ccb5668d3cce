#include <catch_amalgamated.hpp>

#include <map>

#include "covtype/complex.hpp"
#include "covtype/contractibility.hpp"
#include "covtype/homology.hpp"

using namespace covtype;

namespace {

// Dunce hat: a triangle with all three sides glued along one edge word
// a a a^-1, twice subdivided so the identification stays simplicial.
SimplicialComplex dunce_hat() {
  return make_complex({{0, 1, 2},   {0, 1, 7},   {0, 1, 12},  {0, 2, 3},   {0, 3, 7},
                       {0, 9, 10},  {0, 9, 14},  {0, 9, 16},  {0, 10, 11}, {0, 11, 12},
                       {0, 14, 15}, {0, 15, 16}, {1, 2, 4},   {1, 4, 7},   {1, 4, 12},
                       {2, 3, 6},   {2, 4, 5},   {2, 5, 6},   {3, 6, 7},   {4, 5, 10},
                       {4, 7, 8},   {4, 8, 14},  {4, 9, 10},  {4, 9, 14},  {4, 9, 16},
                       {4, 12, 13}, {4, 13, 16}, {5, 6, 10},  {6, 7, 8},   {6, 8, 14},
                       {6, 10, 11}, {6, 11, 12}, {6, 12, 13}, {6, 13, 16}, {6, 14, 15},
                       {6, 15, 16}});
}

const ConeCertificate* cone_of(const ContractibilityVerdict& v) {
  const auto* c = std::get_if<Contractible>(&v);
  return c ? std::get_if<ConeCertificate>(&c->certificate) : nullptr;
}

}  // namespace

TEST_CASE("cone detection", "[contractibility]") {
  const auto v = contractibility(make_complex({{3, 5, 9}}));
  REQUIRE(cone_of(v) != nullptr);
  CHECK(cone_of(v)->apex == Vertex(3));
  CHECK(check_certificate(make_complex({{3, 5, 9}}), std::get<Contractible>(v)));

  const auto k = make_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  for (const auto& vertex : k.vertices()) {
    const auto star = closed_star(k, vertex);
    const auto verdict = contractibility(star);
    REQUIRE(cone_of(verdict) != nullptr);
    CHECK(check_certificate(star, std::get<Contractible>(verdict)));
  }
}

TEST_CASE("homology refutation", "[contractibility]") {
  const auto circle = make_complex({{0, 1}, {1, 2}, {0, 2}});
  const auto v = contractibility(circle);
  REQUIRE(is_not_contractible(v));
  CHECK(std::get<NotContractible>(v).degree == 1);
  CHECK(std::get<NotContractible>(v).field == FieldTag::rationals());
  CHECK(std::get<NotContractible>(v).reduced_betti == 1);

  const auto two_points = make_complex({{0}, {1}});
  REQUIRE(is_not_contractible(contractibility(two_points)));
  CHECK(std::get<NotContractible>(contractibility(two_points)).degree == 0);

  // Six-vertex projective plane: rationally acyclic, caught over Z/2.
  const auto rp2 = make_complex({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                 {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
  const auto r = contractibility(rp2);
  REQUIRE(is_not_contractible(r));
  CHECK(std::get<NotContractible>(r).field == FieldTag::prime(2));
}

TEST_CASE("collapse search", "[contractibility]") {
  SECTION("triangle strip without a cone point") {
    const auto strip = make_complex({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    REQUIRE_FALSE(find_cone_apex(strip).has_value());
    const auto v = contractibility(strip);
    REQUIRE(is_contractible(v));
    const auto& c = std::get<Contractible>(v);
    REQUIRE(std::holds_alternative<CollapseCertificate>(c.certificate));
    const auto& steps = std::get<CollapseCertificate>(c.certificate).steps;
    // Every face but one is removed, two per step.
    CHECK(steps.size() * 2 + 1 == strip.num_faces());
    CHECK(check_certificate(strip, c));
  }
  SECTION("tree") {
    const auto tree = make_complex({{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    const auto v = contractibility(tree);
    REQUIRE(is_contractible(v));
    CHECK(check_certificate(tree, std::get<Contractible>(v)));
  }
  SECTION("subdivided solid tetrahedron") {
    const auto sd = barycentric_subdivision(make_complex({{0, 1, 2, 3}}));
    const auto v = contractibility(sd.complex);
    REQUIRE(is_contractible(v));
    CHECK(check_certificate(sd.complex, std::get<Contractible>(v)));
  }
  SECTION("zero budget surfaces Unknown") {
    ContractibilityOptions opts;
    opts.collapse_budget = 0;
    const auto path = make_complex({{0, 1}, {1, 2}, {2, 3}});
    CHECK(is_unknown(contractibility(path, opts)));
  }
}

TEST_CASE("dunce hat is acyclic but not collapsible", "[contractibility]") {
  const auto hat = dunce_hat();
  CHECK(euler_characteristic(hat) == 1);
  CHECK(reduced_betti_numbers(hat, FieldTag::rationals()) == std::vector<std::size_t>{0, 0, 0});
  CHECK(reduced_betti_numbers(hat, FieldTag::prime(2)) == std::vector<std::size_t>{0, 0, 0});
  // No free edges: each lies in at least two triangles.
  std::map<Simplex, int> degree;
  for (const auto& t : hat.faces(2)) {
    for (std::size_t i = 0; i < 3; ++i) ++degree[t.facet_without(i)];
  }
  for (const auto& e : hat.faces(1)) CHECK(degree[e] >= 2);
  CHECK(is_unknown(contractibility(hat)));
}

TEST_CASE("forged certificates are rejected", "[contractibility]") {
  const auto circle = make_complex({{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(check_certificate(circle, Contractible{ConeCertificate{0}}));
  CollapseCertificate bogus;
  bogus.steps.push_back({Simplex{0}, Simplex{0, 1}});
  bogus.remaining = 2;
  CHECK_FALSE(check_certificate(circle, Contractible{bogus}));
  CHECK_THROWS_AS(contractibility(SimplicialComplex{}), PreconditionError);
}
