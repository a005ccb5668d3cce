#include <catch_amalgamated.hpp>

#include <random>

#include "covtype/bounds.hpp"
#include "covtype/complex.hpp"
#include "covtype/cover.hpp"
#include "covtype/search.hpp"

using namespace covtype;

namespace {

const SimplicialComplex hollow_triangle = make_complex({{0, 1}, {1, 2}, {0, 2}});
const SimplicialComplex tetra_boundary = make_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});

SearchConfig exhaustive(std::size_t n) {
  SearchConfig c;
  c.max_cover_size = n;
  c.universe = ElementUniverse::AllSubcomplexes;
  return c;
}

std::optional<std::size_t> found_size(const SearchOutcome& o) {
  if (const auto* f = std::get_if<FoundGoodCover>(&o.verdict)) return f->cover.size();
  return std::nullopt;
}

SimplicialComplex random_connected_graph(std::mt19937& rng, int n, int extra) {
  std::vector<std::vector<Vertex>> edges;
  for (int v = 1; v < n; ++v) {
    edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  }
  for (int i = 0; i < extra; ++i) {
    const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (a != b) edges.push_back({a, b});
  }
  return make_complex(edges);
}

}  // namespace

TEST_CASE("exhaustive search on small complexes", "[search]") {
  SECTION("hollow triangle") {
    const auto none = strict_ct_search(hollow_triangle, exhaustive(2));
    REQUIRE(std::holds_alternative<NoGoodCoverUpTo>(none.verdict));
    CHECK(std::get<NoGoodCoverUpTo>(none.verdict).size == 2);
    CHECK(none.exhaustive);
    const auto some = strict_ct_search(hollow_triangle, exhaustive(3));
    CHECK(found_size(some) == std::optional<std::size_t>{3});
    CHECK(combined_lower_bound(hollow_triangle).lower == 3);
  }
  SECTION("tetrahedron boundary") {
    const auto none = strict_ct_search(tetra_boundary, exhaustive(3));
    REQUIRE(std::holds_alternative<NoGoodCoverUpTo>(none.verdict));
    CHECK(std::get<NoGoodCoverUpTo>(none.verdict).size == 3);
    const auto some = strict_ct_search(tetra_boundary, exhaustive(4));
    CHECK(found_size(some) == std::optional<std::size_t>{4});
    CHECK(combined_lower_bound(tetra_boundary).lower == 4);
  }
  SECTION("contractible and disconnected") {
    CHECK(found_size(strict_ct_search(make_complex({{0, 1, 2}}), exhaustive(3))) == std::optional<std::size_t>{1});
    CHECK(found_size(strict_ct_search(make_complex({{0}, {1}}), exhaustive(3))) == std::optional<std::size_t>{2});
  }
}

TEST_CASE("found covers are re-verified and deterministic", "[search]") {
  const auto a = strict_ct_search(tetra_boundary, exhaustive(4));
  const auto b = strict_ct_search(tetra_boundary, exhaustive(4));
  REQUIRE(found_size(a));
  const auto& ca = std::get<FoundGoodCover>(a.verdict).cover;
  const auto& cb = std::get<FoundGoodCover>(b.verdict).cover;
  CHECK(verify_good_cover(ca).good());
  for (std::size_t i = 0; i < ca.size(); ++i) CHECK(ca[i].complex == cb[i].complex);
  CHECK(a.explored == b.explored);
}

TEST_CASE("non-exhaustive universes never claim a lower bound", "[search]") {
  SearchConfig c;
  c.max_cover_size = 2;
  c.universe = ElementUniverse::InducedByVertexSets;
  const auto o = strict_ct_search(hollow_triangle, c);
  CHECK_FALSE(o.exhaustive);
  CHECK(std::holds_alternative<Inconclusive>(o.verdict));
  c.max_cover_size = 3;
  CHECK(found_size(strict_ct_search(hollow_triangle, c)) == std::optional<std::size_t>{3});
  c.universe = ElementUniverse::UnionsOfFacets;
  CHECK(found_size(strict_ct_search(hollow_triangle, c)) == std::optional<std::size_t>{3});
  c.max_cover_size = 2;
  CHECK(std::holds_alternative<Inconclusive>(strict_ct_search(hollow_triangle, c).verdict));

  // More than 12 faces selects the induced universe by default.
  SearchConfig d;
  d.max_cover_size = 3;
  const auto big = strict_ct_search(tetra_boundary, d);
  CHECK(big.universe == ElementUniverse::InducedByVertexSets);
  CHECK_FALSE(big.exhaustive);
  CHECK(std::holds_alternative<Inconclusive>(big.verdict));
}

TEST_CASE("budgets downgrade to inconclusive", "[search]") {
  auto c = exhaustive(3);
  c.time_budget = std::chrono::milliseconds(0);
  const auto o = strict_ct_search(tetra_boundary, c);
  REQUIRE(std::holds_alternative<Inconclusive>(o.verdict));
  CHECK(std::get<Inconclusive>(o.verdict).reason == "time budget expired");

  auto small = exhaustive(3);
  small.universe_limit = 10;
  CHECK(std::holds_alternative<Inconclusive>(strict_ct_search(tetra_boundary, small).verdict));
  CHECK_THROWS_AS(strict_ct_search(hollow_triangle, exhaustive(0)), PreconditionError);
}

TEST_CASE("search agrees with lower bounds on random graphs", "[search][property]") {
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_connected_graph(rng, 3 + trial % 3, trial % 3);
    if (g.num_faces() > 12) continue;
    const auto o = strict_ct_search(g, exhaustive(5));
    const auto lower = combined_lower_bound(g).lower;
    if (const auto n = found_size(o)) {
      CHECK(*n >= lower);
      ++checked;
    } else {
      REQUIRE(std::holds_alternative<NoGoodCoverUpTo>(o.verdict));
      CHECK(lower > 5);
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("classifying good 3-covers", "[search]") {
  const auto hexagon = make_complex({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const Cover arcs(hexagon, {{"a", make_complex({{0, 1}, {1, 2}})},
                             {"b", make_complex({{2, 3}, {3, 4}})},
                             {"c", make_complex({{4, 5}, {0, 5}})}});
  CHECK(classify_three_covers(arcs) == ThreeCoverClass::CircleLike);

  const auto tri = make_complex({{0, 1, 2}});
  const Cover solid(tri, {{"t", tri}, {"e", make_complex({{0, 1}})}, {"v", make_complex({{2}})}});
  CHECK(classify_three_covers(solid) == ThreeCoverClass::Contractible);

  CHECK_THROWS_AS(classify_three_covers(Cover(hexagon, {{"a", hexagon}})), PreconditionError);
  const Cover bad(hollow_triangle, {{"a", make_complex({{0, 1}})},
                                    {"b", make_complex({{1, 2}})},
                                    {"c", make_complex({{0, 2}, {1, 2}})}});
  CHECK_THROWS_AS(classify_three_covers(bad), PreconditionError);
}

TEST_CASE("random good 3-covers match the first Betti number", "[search][property]") {
  std::mt19937 rng(17);
  int classified = 0;
  for (int trial = 0; trial < 3000 && classified < 60; ++trial) {
    const auto g = random_connected_graph(rng, 4 + trial % 4, trial % 3);
    const auto& edges = g.faces(1);
    std::vector<std::vector<Simplex>> parts(3);
    for (const auto& e : edges) parts[std::uniform_int_distribution<int>(0, 2)(rng)].push_back(e);
    // Random overlap.
    for (const auto& e : edges) {
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) parts[std::uniform_int_distribution<int>(0, 2)(rng)].push_back(e);
    }
    if (std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); })) continue;
    std::vector<CoverElement> els;
    for (int i = 0; i < 3; ++i) els.push_back({std::string(1, static_cast<char>('a' + i)), SimplicialComplex::from_maximal(parts[static_cast<std::size_t>(i)])});
    const Cover c(g, std::move(els));
    if (!verify_good_cover(c).good()) continue;
    const std::size_t b1 = g.faces(1).size() + 1 - g.vertices().size();
    const auto cls = classify_three_covers(c);
    CHECK(cls == (b1 == 1 ? ThreeCoverClass::CircleLike : ThreeCoverClass::Contractible));
    ++classified;
  }
  CHECK(classified >= 20);
}
