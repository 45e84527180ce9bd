#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace mbs;

TEST_CASE("multigraph basics", "[graphs]") {
  auto g = theta_graph();
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.betti_number() == 2);
  CHECK(g.connected());
  CHECK(g.dart_name(0) == "e1-");
  CHECK(g.dart_name(1) == "e1+");
  CHECK(g.dart_index("e3+") == 5u);
  CHECK_FALSE(g.dart_index("e3"));
  CHECK_FALSE(g.dart_index("x+"));
  CHECK_THROWS_AS(Multigraph({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(Multigraph({"a"}, {{"e", "a", "b"}}), InputError);
  CHECK_THROWS_AS(Multigraph({"a", "b"}, {{"e", "a", "b"}, {"e", "b", "a"}}), InputError);
  CHECK(Multigraph({"a", "b"}, {{"e", "a", "a"}}).has_isolated_vertex());
}

TEST_CASE("faces of small rotation systems", "[graphs]") {
  auto loop = bouquet_graph(1);
  auto one = faces(loop, parse_rotation_system("v:a1+,a1-"));
  CHECK(one.face_count == 2);
  CHECK(one.genus == 0);

  auto b2 = bouquet_graph(2);
  auto interleaved = faces(b2, parse_rotation_system("v:a1+,a2+,a1-,a2-"));
  CHECK(interleaved.face_count == 1);
  CHECK(interleaved.genus == 1);
  auto planar = faces(b2, parse_rotation_system("v:a1+,a1-,a2+,a2-"));
  CHECK(planar.face_count == 3);
  CHECK(planar.genus == 0);

  CHECK_THROWS_AS(faces(b2, parse_rotation_system("v:a1+,a1-,a2+")), InputError);
  CHECK_THROWS_AS(parse_rotation_system("v:a1,a2"), InputError);
  CHECK_THROWS_AS(faces(Multigraph({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"f", "c", "d"}}),
                        parse_rotation_system("a:e-;b:e+;c:f-;d:f+")),
                  InputError);
}

TEST_CASE("every rotation of K4", "[graphs]") {
  auto k4 = complete_graph(4);
  RotationSpace space(k4);
  REQUIRE(space.size() == 16);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    auto r = faces(k4, space.at(i));
    CHECK((r.face_count == 2 || r.face_count == 4));
    CHECK(r.genus == (r.face_count == 4 ? 0 : 1));
  }
}

TEST_CASE("min and max genus of the standard graphs", "[graphs]") {
  auto k4 = embedding_genus_range(complete_graph(4));
  CHECK(k4.min_genus == 0);
  CHECK(k4.max_genus == 1);
  CHECK(faces(complete_graph(4), k4.witness_min).genus == 0);
  CHECK(faces(complete_graph(4), k4.witness_max).genus == 1);

  auto k5 = embedding_genus_range(complete_graph(5));
  CHECK(k5.total == 7776);
  CHECK(k5.min_genus == 1);
  CHECK(k5.max_genus == 3);

  auto k33 = embedding_genus_range(complete_bipartite_graph(3, 3));
  CHECK(k33.total == 64);
  CHECK(k33.min_genus == 1);
  CHECK(min_genus(complete_bipartite_graph(3, 3)).genus == 1);
  CHECK(max_genus(complete_graph(4)).genus == 1);

  for (int n = 2; n <= 6; ++n) {
    auto p = embedding_genus_range(path_graph(n));
    CHECK(p.min_genus == 0);
    CHECK(p.max_genus == 0);
    CHECK(embedding_genus_range(cycle_graph(n)).min_genus == 0);
  }
  GraphSearchOptions tiny;
  tiny.guard = 10;
  CHECK_THROWS_AS(embedding_genus_range(complete_graph(4), tiny), LimitError);
}

TEST_CASE("Xuong's formula", "[graphs]") {
  auto k4 = xuong_max_genus(complete_graph(4));
  CHECK(k4.max_genus == 1);
  CHECK(k4.betti == 3);
  CHECK(k4.deficiency == 1);
  CHECK(k4.spanning_tree.size() == 3);
  for (int n = 1; n <= 4; ++n) CHECK(xuong_max_genus(bouquet_graph(2 * n)).max_genus == n);
  CHECK(xuong_max_genus(path_graph(5)).max_genus == 0);
  CHECK(xuong_max_genus(complete_graph(5)).max_genus == 3);
  CHECK(xuong_max_genus(complete_bipartite_graph(3, 3)).max_genus == 2);
}

TEST_CASE("Xuong equals exhaustive max on small multigraphs", "[graphs][property]") {
  for (const auto& g : mbs::testing::connected_multigraphs(3, 5)) {
    INFO(mbs::testing::describe(g));
    CHECK(xuong_max_genus(g).max_genus == embedding_genus_range(g).max_genus);
  }
}

TEST_CASE("face walks use every dart once and genus is integral", "[graphs][property]") {
  std::mt19937_64 rng(61);
  for (const auto& g : mbs::testing::connected_multigraphs(3, 4)) {
    RotationSpace space(g);
    std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
    for (int k = 0; k < 5; ++k) {
      auto r = faces(g, space.at(pick(rng)));
      std::size_t darts = 0;
      std::set<std::string> seen;
      for (const auto& w : r.face_walks) {
        darts += w.size();
        seen.insert(w.begin(), w.end());
      }
      CHECK(darts == 2 * g.edge_count());
      CHECK(seen.size() == darts);
      auto euler = 2 - static_cast<long long>(g.vertex_count()) + static_cast<long long>(g.edge_count()) -
                   static_cast<long long>(r.face_count);
      CHECK(euler % 2 == 0);
      CHECK(euler >= 0);
      CHECK(r.genus == euler / 2);
    }
  }
}

TEST_CASE("times circle", "[graphs]") {
  auto x = times_circle(bouquet_graph(4));
  CHECK(validate(x).valid());
  CHECK(x.branch_count() == 1);
  CHECK(x.sector_count() == 4);
  CHECK(rank_h1(x) == 5);
  CHECK(rank_h1(times_circle(theta_graph())) == 3);
  CHECK_THROWS_AS(times_circle(Multigraph({"a", "b"}, {{"e", "a", "a"}})), InputError);
  auto e = times_circle(path_graph(2));
  CHECK(rank_h1(e) == 1);
}

TEST_CASE("rotation systems become permutation systems", "[graphs]") {
  auto g = bouquet_graph(2);
  auto x = times_circle(g);
  CHECK(boundary_genus(x, rotation_to_permutation(g, parse_rotation_system("v:a1+,a1-,a2+,a2-"))) == 3);
  CHECK(boundary_genus(x, rotation_to_permutation(g, parse_rotation_system("v:a1+,a2+,a1-,a2-"))) == 1);
  CHECK_THROWS_AS(rotation_to_permutation(g, parse_rotation_system("v:a1+,a1-")), InputError);
  // A tree has one face, so the boundary is a single torus.
  auto tree = path_graph(4);
  RotationSpace space(tree);
  for (std::uint64_t i = 0; i < space.size(); ++i)
    CHECK(boundary_genus(times_circle(tree), rotation_to_permutation(tree, space.at(i))) == static_cast<long long>(faces(tree, space.at(i)).face_count));
}

TEST_CASE("product theorem on named graphs", "[graphs]") {
  auto b2 = verify_product_theorem(bouquet_graph(2));
  CHECK(b2.passed);
  CHECK(b2.rank_h1 - b2.max_boundary_genus == 0);
  CHECK(b2.rank_h1 - b2.min_boundary_genus == 2);

  auto k4 = verify_product_theorem(complete_graph(4));
  CHECK(k4.passed);
  CHECK(k4.min_genus == 0);
  CHECK(k4.max_genus == 1);

  auto theta = verify_product_theorem(theta_graph());
  CHECK(theta.passed);
  CHECK(theta.rank_h1 == 3);
  CHECK(theta.min_boundary_genus == 1);
  CHECK(theta.max_boundary_genus == 3);
  CHECK_FALSE(theta.counterexample);
}

TEST_CASE("product theorem on small multigraphs", "[graphs][property]") {
  for (const auto& g : mbs::testing::connected_multigraphs(3, 4)) {
    INFO(mbs::testing::describe(g));
    auto r = verify_product_theorem(g);
    CHECK(r.passed);
  }
}

TEST_CASE("swapping head and tail keeps every genus", "[graphs][property]") {
  for (const auto& g : mbs::testing::connected_multigraphs(3, 4)) {
    std::vector<Edge> reversed;
    for (const auto& e : g.edges()) reversed.push_back({e.id, e.to, e.from});
    Multigraph h(g.vertices(), reversed);
    auto a = embedding_genus_range(g), b = embedding_genus_range(h);
    CHECK(a.min_genus == b.min_genus);
    CHECK(a.max_genus == b.max_genus);
    CHECK(rank_h1(times_circle(g)) == rank_h1(times_circle(h)));
    auto ra = genus_range(times_circle(g)), rb = genus_range(times_circle(h));
    CHECK(ra.min_genus == rb.min_genus);
    CHECK(ra.max_genus == rb.max_genus);
  }
}

TEST_CASE("planar graphs in the corpus are exactly the genus-zero ones", "[graphs]") {
  for (const auto& g : {complete_graph(4), path_graph(3), path_graph(6), cycle_graph(4), theta_graph()})
    CHECK(embedding_genus_range(g).min_genus == 0);
  for (const auto& g : {complete_graph(5), complete_bipartite_graph(3, 3)}) CHECK(embedding_genus_range(g).min_genus > 0);
}
