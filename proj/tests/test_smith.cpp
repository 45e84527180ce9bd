#include <catch_amalgamated.hpp>

#include <limits>

#include "test_support.hpp"

using namespace mbs;
using mbs::testing::BigInt;

namespace {

using M = Matrix<std::int64_t>;

M diagonal_matrix(std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& d) {
  M out(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

template <class Int>
void check_round_trip(const Matrix<Int>& m) {
  auto snf = smith_normal_form(m, true);
  REQUIRE(snf.left);
  REQUIRE(snf.right);
  CHECK(mbs::testing::reproduces_diagonal(*snf.left, m, *snf.right, snf.diagonal));
  CHECK(abs(mbs::testing::determinant(*snf.left)) == 1);
  CHECK(abs(mbs::testing::determinant(*snf.right)) == 1);
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    CHECK(snf.diagonal[i] > Int(0));
    if (i + 1 < snf.diagonal.size()) CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == Int(0));
  }
}

}  // namespace

TEST_CASE("2x2 example", "[smith]") {
  M m(2, 2, {2, 4, 6, 8});
  auto snf = smith_normal_form(m, true);
  CHECK(snf.diagonal == std::vector<std::int64_t>{2, 4});
  CHECK(snf.rank == 2);
  CHECK(*snf.left * m * *snf.right == diagonal_matrix(2, 2, snf.diagonal));
  check_round_trip(m);
}

TEST_CASE("zero and identity", "[smith]") {
  auto zero = smith_normal_form(M(3, 3));
  CHECK(zero.diagonal.empty());
  CHECK(zero.rank == 0);
  for (std::size_t n : {1u, 4u, 7u}) {
    auto snf = smith_normal_form(M::identity(n));
    CHECK(snf.rank == n);
    CHECK(snf.diagonal == std::vector<std::int64_t>(n, 1));
  }
  check_round_trip(M(3, 3));
  check_round_trip(M(0, 4));
  check_round_trip(M(4, 0));
}

TEST_CASE("divisibility is enforced", "[smith]") {
  // diag(2, 3) is not in normal form; its invariant factors are 1, 6.
  M m(2, 2, {2, 0, 0, 3});
  CHECK(smith_normal_form(m).diagonal == std::vector<std::int64_t>{1, 6});
  M n(3, 3, {4, 0, 0, 0, 6, 0, 0, 0, 10});
  CHECK(smith_normal_form(n).diagonal == std::vector<std::int64_t>{2, 2, 60});
  check_round_trip(n);
}

TEST_CASE("random matrices: round trip, rank and minors agree with exact arithmetic", "[smith][property]") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
  int narrow = 0;
  for (int trial = 0; trial < 200; ++trial) {
    M m(dim(rng), dim(rng));
    Matrix<BigInt> big(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) big(i, j) = m(i, j) = entry(rng);
    auto snf = smith_normal_form(m);
    check_round_trip(big);
    CHECK(snf.rank == mbs::testing::bareiss_rank(mbs::testing::to_big(m)));
    if (m.rows() <= 5 && m.cols() <= 5) {
      BigInt product = 1;
      for (auto d : snf.diagonal) product *= d;
      CHECK(product == mbs::testing::gcd_of_maximal_minors(m, snf.rank));
    }
    // Fixed width transforms either round trip or fail loudly.
    try {
      check_round_trip(m);
      ++narrow;
    } catch (const OverflowError&) {
    }
  }
  CHECK(narrow > 150);
}

TEST_CASE("arbitrary precision instantiation agrees", "[smith]") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int trial = 0; trial < 30; ++trial) {
    M m(4, 5);
    Matrix<BigInt> big(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) big(i, j) = m(i, j) = entry(rng);
    auto a = smith_normal_form(m);
    auto b = smith_normal_form(big);
    REQUIRE(a.diagonal.size() == b.diagonal.size());
    for (std::size_t i = 0; i < a.diagonal.size(); ++i) CHECK(BigInt(a.diagonal[i]) == b.diagonal[i]);
  }
}

TEST_CASE("overflow is reported, not wrapped", "[smith]") {
  const auto big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  M m(2, 2, {big, 1, 1, big});
  // det = big^2 - 1 does not fit; the last invariant factor cannot be represented.
  CHECK_THROWS_AS(smith_normal_form(m), OverflowError);
  M product_overflow(1, 1, {big});
  CHECK_THROWS_AS(product_overflow * M(1, 1, {4}), OverflowError);
  M min_entry(1, 1, {std::numeric_limits<std::int64_t>::min()});
  CHECK_THROWS_AS(smith_normal_form(min_entry), OverflowError);
}
