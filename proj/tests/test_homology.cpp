#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace mbs;
using mbs::testing::rose;

TEST_CASE("relation matrix", "[homology]") {
  CHECK(relation_matrix(lens_spine(5)) == Matrix<std::int64_t>(1, 1, {5}));
  CHECK(relation_matrix(rose(1)) == Matrix<std::int64_t>(2, 1, {0, 0}));
  auto theta = relation_matrix(times_circle(theta_graph()));
  REQUIRE(theta.rows() == 3);
  REQUIRE(theta.cols() == 2);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(theta(r, 0) == -1);  // tails at u
    CHECK(theta(r, 1) == 1);   // heads at v
  }
  CHECK(smith_normal_form(theta).rank == 1);
}

TEST_CASE("first homology of the standard examples", "[homology]") {
  for (int n : {1, 2, 3}) {
    CHECK(h1(rose(n)) == AbelianGroup{2 * n + 1, {}});
    CHECK(h1_cw_oracle(rose(n)) == h1(rose(n)));
  }
  for (int p : {2, 3, 5}) CHECK(h1(lens_spine(p)) == AbelianGroup{0, {p}});
  CHECK(h1(lens_spine(1)) == AbelianGroup{});
  CHECK(h1(torus()) == AbelianGroup{2, {}});
  CHECK(h1_cw_oracle(torus()) == AbelianGroup{2, {}});
  CHECK(rank_h1(rose(2)) == 5);
  CHECK(rank_h1(lens_spine(7)) == 0);
  CHECK(rank_h1(times_circle(theta_graph())) == 3);
  CHECK(rank_h1(times_circle(path_graph(2))) == 1);
}

TEST_CASE("disjoint unions of lens spines are pure torsion", "[homology]") {
  auto x = lens_spine(2);
  for (int k = 2; k <= 4; ++k) {
    x = disjoint_union(x, lens_spine(k + 1));
    CHECK(rank_h1(x) == 0);
    CHECK(h1(x) == h1_cw_oracle(x));
  }
}

TEST_CASE("disk sum of lens spines", "[homology]") {
  auto x = disk_sum(lens_spine(2), "disk", lens_spine(3), "disk");
  auto g = h1(x);
  CHECK(g.free_rank == 0);
  CHECK(g.elementary_divisors() == std::vector<std::int64_t>{2, 3});
  CHECK(g.torsion == std::vector<std::int64_t>{6});  // Z/2 + Z/3 = Z/6
  CHECK(h1_cw_oracle(x) == g);
  auto y = disk_sum(lens_spine(2), "disk", lens_spine(4), "disk");
  CHECK(h1(y) == AbelianGroup{0, {2, 4}});
  CHECK(h1_cw_oracle(y) == h1(y));
}

TEST_CASE("CW complex is a chain complex", "[homology]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto x = mbs::testing::random_surface(rng);
    auto cw = cell_complex(x);
    auto product = cw.d1 * cw.d2;
    CHECK(product == Matrix<std::int64_t>(product.rows(), product.cols()));
  }
}

TEST_CASE("formula equals the cellular oracle on random surfaces", "[homology][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto x = mbs::testing::random_surface(rng);
    auto g = h1(x);
    INFO(surface_to_json(x).dump());
    CHECK(g == h1_cw_oracle(x));
    // rank H1(X) >= rank H1(X dot) - n
    CHECK(g.free_rank >= punctured_excess_rank(x));
  }
}

TEST_CASE("small graphs times the circle have torsion-free homology", "[homology][graphs]") {
  for (const auto& g : mbs::testing::connected_multigraphs(3, 5)) {
    auto x = times_circle(g);
    auto a = h1(x), b = h1_cw_oracle(x);
    INFO(mbs::testing::describe(g));
    CHECK(a == b);
    CHECK(a.torsion.empty());
    CHECK(a.free_rank == g.betti_number() + 1);
  }
}

TEST_CASE("rank is additive under disk sum", "[homology][property]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = mbs::testing::random_surface(rng), b = mbs::testing::random_surface(rng);
    auto x = disk_sum(a, a.sectors().front().id, b, b.sectors().back().id);
    CHECK(rank_h1(x) == rank_h1(a) + rank_h1(b));
  }
}

TEST_CASE("relabeling does not change homology", "[homology][property]") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto x = mbs::testing::random_surface(rng);
    CHECK(h1(x) == h1(mbs::testing::relabel(x, mbs::testing::scramble)));
  }
}

TEST_CASE("group rendering grammar", "[homology]") {
  CHECK(to_string(AbelianGroup{}) == "0");
  CHECK(to_string(AbelianGroup{3, {}}) == "Z^3");
  CHECK(to_string(AbelianGroup{1, {}}) == "Z^1");
  CHECK(to_string(AbelianGroup{2, {2, 6}}) == "Z^2 ⊕ Z/2 ⊕ Z/6");
  CHECK(to_string(AbelianGroup{0, {5}}) == "Z/5");
  for (const auto* s : {"0", "Z^3", "Z^2 ⊕ Z/2 ⊕ Z/6", "Z/5"}) CHECK(to_string(parse_group(s)) == s);
  CHECK_THROWS_AS(parse_group("Z/4 ⊕ Z/6"), InputError);
  CHECK_THROWS_AS(parse_group("Z/2 ⊕ Z^1"), InputError);
  CHECK_THROWS_AS(parse_group("Z"), InputError);
}
