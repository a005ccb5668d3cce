#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "covtype/complex.hpp"
#include "covtype/homology.hpp"

using namespace covtype;

namespace {

SimplicialComplex tetra_boundary() {
  return make_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex hollow_triangle() { return make_complex({{0, 1}, {1, 2}, {0, 2}}); }

// Independent face enumeration: every nonempty vertex subset of every listed
// simplex, as plain integer sets.
std::set<std::set<int>> brute_faces(const std::vector<std::vector<int>>& simplices) {
  std::set<std::set<int>> out;
  for (const auto& s : simplices) {
    for (unsigned mask = 1; mask < (1U << s.size()); ++mask) {
      std::set<int> f;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask >> i & 1U) f.insert(s[i]);
      }
      out.insert(f);
    }
  }
  return out;
}

SimplicialComplex random_complex(std::mt19937& rng, int vertices, int simplices, int max_dim) {
  std::uniform_int_distribution<int> pick(0, vertices - 1);
  std::uniform_int_distribution<int> size(1, max_dim + 1);
  std::vector<std::vector<Vertex>> lists;
  for (int i = 0; i < simplices; ++i) {
    std::set<int> s;
    const int want = size(rng);
    while (static_cast<int>(s.size()) < want) s.insert(pick(rng));
    lists.emplace_back(s.begin(), s.end());
  }
  return make_complex(lists);
}

}  // namespace

TEST_CASE("make_complex normalizes input", "[complex]") {
  const auto hollow = hollow_triangle();
  CHECK(hollow.vertices().size() == 3);
  CHECK(hollow.maximal_simplices().size() == 3);
  CHECK(hollow.dim() == 1);

  const auto reduced = make_complex({{0, 1, 2}, {0, 1}});
  REQUIRE(reduced.maximal_simplices().size() == 1);
  CHECK(reduced.maximal_simplices()[0] == Simplex{0, 1, 2});

  const auto points = make_complex({{0}, {1}, {2}});
  CHECK(points.vertices().size() == 3);
  CHECK(connected_components(points).size() == 3);

  SECTION("unsorted input vertices") {
    CHECK(make_complex({{2, 0, 1}}) == make_complex({{0, 1, 2}}));
  }
  SECTION("repeated vertex is malformed") {
    CHECK_THROWS_AS(make_complex({{0, 1, 1}}), MalformedSimplex);
    CHECK_THROWS_AS(make_complex({{}}), MalformedSimplex);
  }
  SECTION("string and integer tokens coexist, integers first") {
    const auto mixed = make_complex({{"b", 3}, {"a", 1}});
    REQUIRE(mixed.vertices().size() == 4);
    CHECK(mixed.vertices()[0] == Vertex(1));
    CHECK(mixed.vertices()[1] == Vertex(3));
    CHECK(mixed.vertices()[2] == Vertex("a"));
  }
}

TEST_CASE("all_faces enumerates each face once in lexicographic order", "[complex]") {
  const auto k = tetra_boundary();
  CHECK(all_faces(k, 2).size() == 4);
  CHECK(all_faces(k, 1).size() == 6);
  CHECK(all_faces(hollow_triangle(), 2).empty());
  const auto edges = all_faces(k, 1);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  CHECK(edges.front() == Simplex{0, 1});
  CHECK(edges.back() == Simplex{2, 3});
}

TEST_CASE("intersection of subcomplexes", "[complex]") {
  const auto f0 = make_complex({{0, 1, 2}});
  const auto f1 = make_complex({{0, 1, 3}});
  const auto common = intersection(f0, f1);
  CHECK(common == make_complex({{0, 1}}));
  CHECK(common.vertices().size() == 2);

  CHECK(intersection(make_complex({{0}}), make_complex({{1}})).empty());

  // Oracle: brute-force face sets of the four facets, intersected.
  const std::vector<std::vector<int>> facets{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  auto common_brute = brute_faces({facets[0]});
  for (std::size_t i = 1; i < facets.size(); ++i) {
    std::set<std::set<int>> next;
    const auto fi = brute_faces({facets[i]});
    std::set_intersection(common_brute.begin(), common_brute.end(), fi.begin(), fi.end(),
                          std::inserter(next, next.begin()));
    common_brute = next;
  }
  CHECK(common_brute.empty());

  auto all = make_complex({{0, 1, 2}});
  for (std::size_t i = 1; i < facets.size(); ++i) {
    all = intersection(all, make_complex({{facets[i][0], facets[i][1], facets[i][2]}}));
  }
  CHECK(all.empty());
}

TEST_CASE("euler characteristic and components", "[complex]") {
  CHECK(euler_characteristic(tetra_boundary()) == 2);
  CHECK(euler_characteristic(hollow_triangle()) == 0);
  CHECK(euler_characteristic(SimplicialComplex{}) == 0);
  const auto two = make_complex({{0, 1}, {1, 2}, {5, 6, 7}});
  const auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == make_complex({{0, 1}, {1, 2}}));
  CHECK(comps[1] == make_complex({{5, 6, 7}}));
}

TEST_CASE("closed star and link", "[complex]") {
  const auto k = tetra_boundary();
  for (const auto& v : k.vertices()) {
    const auto star = closed_star(k, v);
    CHECK(star.maximal_simplices().size() == 3);
    for (const auto& m : star.maximal_simplices()) CHECK(m.contains(v));
    const auto lk = link(k, v);
    CHECK(lk.f_vector() == std::vector<std::size_t>{3, 3});
    CHECK(euler_characteristic(lk) == 0);
  }
  const auto isolated = make_complex({{0, 1}, {4}});
  CHECK(closed_star(isolated, 4) == make_complex({{4}}));
  CHECK(link(isolated, 4).empty());
  CHECK_THROWS_AS(closed_star(isolated, 9), UnknownVertex);
}

TEST_CASE("barycentric subdivision", "[complex]") {
  const auto edge = barycentric_subdivision(make_complex({{0, 1}}));
  CHECK(edge.complex.f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(edge.carrier.size() == 3);
  CHECK(edge.carrier[2] == Simplex{0, 1});

  const auto tri = barycentric_subdivision(make_complex({{0, 1, 2}}));
  CHECK(tri.complex.vertices().size() == 7);
  CHECK(tri.complex.faces(2).size() == 6);

  // Every simplex of Sd K is a chain of faces under strict inclusion.
  const auto sd = barycentric_subdivision(tetra_boundary());
  for (const auto& m : sd.complex.maximal_simplices()) {
    std::vector<Simplex> carriers;
    for (const auto& v : m) carriers.push_back(sd.carrier[static_cast<std::size_t>(v.as_integer())]);
    std::sort(carriers.begin(), carriers.end(),
              [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    for (std::size_t i = 1; i < carriers.size(); ++i) {
      CHECK(carriers[i - 1].is_face_of(carriers[i]));
      CHECK(carriers[i - 1].size() < carriers[i].size());
    }
  }
  CHECK(euler_characteristic(sd.complex) == euler_characteristic(tetra_boundary()));
}

TEST_CASE("cone and suspension", "[complex]") {
  const auto circle = hollow_triangle();
  const auto s2 = suspension(circle);
  CHECK(euler_characteristic(s2) == 2);
  CHECK(s2.vertices().size() == 5);
  CHECK(s2.faces(2).size() == 6);

  const auto s1 = suspension(make_complex({{0}, {1}}));
  CHECK(s1.f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(betti_numbers(s1, FieldTag::rationals()) == std::vector<std::size_t>{1, 1});

  const auto c = cone(circle, Vertex("apex"));
  CHECK(c.faces(2).size() == 3);
  CHECK_THROWS_AS(cone(circle, 0), VertexCollision);
}

TEST_CASE("quotient by a vertex partition", "[complex]") {
  // Suspension of a point is a path a - p - b; identifying a and b gives a
  // circle with two vertices... which is not simplicial, so use a longer path.
  const auto path = make_complex({{0, 1}, {1, 2}, {2, 3}});
  const auto circle = quotient(path, {{0, 3}});
  CHECK(circle == hollow_triangle());

  const auto susp_point = suspension(make_complex({{"p"}}), Vertex(10), Vertex(11));
  const auto loop_sd = barycentric_subdivision(susp_point);
  const auto& bc = loop_sd.barycenter;
  const auto circ = quotient(loop_sd.complex, {{bc.at(Simplex{10}), bc.at(Simplex{11})}});
  CHECK(betti_numbers(circ, FieldTag::rationals()) == std::vector<std::size_t>{1, 1});

  CHECK_THROWS_AS(quotient(make_complex({{0, 1}}), {{0, 1}}), NotSimplicial);
}

TEST_CASE("complex invariants on random inputs", "[complex][property]") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ambient = random_complex(rng, 7, 6, 3);
    std::vector<Simplex> ms = ambient.maximal_simplices();
    std::shuffle(ms.begin(), ms.end(), rng);
    const auto half = static_cast<std::ptrdiff_t>(ms.size() / 2);
    const auto a = SimplicialComplex::from_maximal({ms.begin(), ms.begin() + half});
    const auto b = SimplicialComplex::from_maximal({ms.begin() + half / 2, ms.end()});

    // Normalization idempotence.
    CHECK(SimplicialComplex::from_maximal(ambient.maximal_simplices()) == ambient);
    // Lattice laws.
    CHECK(intersection(a, b) == intersection(b, a));
    CHECK(union_of(a, b) == union_of(b, a));
    CHECK(intersection(a, a) == a);
    CHECK(union_of(a, a) == a);
    CHECK(intersection(intersection(a, b), ambient) == intersection(a, intersection(b, ambient)));
    CHECK(union_of(union_of(a, b), ambient) == union_of(a, union_of(b, ambient)));
    // Inclusion-exclusion for chi.
    CHECK(euler_characteristic(a) + euler_characteristic(b) ==
          euler_characteristic(union_of(a, b)) + euler_characteristic(intersection(a, b)));
    // Subdivision preserves chi.
    CHECK(euler_characteristic(barycentric_subdivision(ambient).complex) ==
          euler_characteristic(ambient));
  }
}

TEST_CASE("isomorphism search", "[complex]") {
  const auto a = tetra_boundary();
  const auto relabeled = relabel(
      a, VertexMap({{0, Vertex("w")}, {1, Vertex("x")}, {2, Vertex("y")}, {3, Vertex("z")}}));
  const auto iso = find_isomorphism(a, relabeled);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(a, relabeled, *iso));
  CHECK_FALSE(find_isomorphism(a, make_complex({{0, 1, 2, 3}})).has_value());
  CHECK_FALSE(find_isomorphism(make_complex({{0, 1}, {1, 2}, {2, 3}}),
                               make_complex({{0, 1}, {0, 2}, {0, 3}}))
                  .has_value());
}
