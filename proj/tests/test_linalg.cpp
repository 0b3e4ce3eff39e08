#include <doctest.h>

#include <random>

#include "gog/approx.hpp"
#include "gog/errors.hpp"
#include "gog/linalg.hpp"

using namespace gog;

namespace {
Mat rows(const std::vector<std::vector<long>>& values) {
  std::vector<std::vector<Rat>> r;
  for (const auto& row : values) r.emplace_back(row.begin(), row.end());
  return Mat::from_rows(r);
}
} // namespace

TEST_CASE("nullspace of [1 -1] is spanned by (1,1)") {
  Subspace k = nullspace(rows({{1, -1}}));
  CHECK(k.dim() == 1);
  CHECK(k.contains({Rat(1), Rat(1)}));
}

TEST_CASE("nullspace of the zero 2x3 matrix is everything") {
  CHECK(nullspace(Mat(2, 3)).dim() == 3);
}

TEST_CASE("nullspace of the identity is zero") {
  CHECK(nullspace(Mat::identity(3)).dim() == 0);
}

TEST_CASE("intersection and sum of coordinate lines") {
  Subspace a = Subspace::from_rows(3, rows({{1, 0, 0}}));
  Subspace b = Subspace::from_rows(3, rows({{0, 1, 0}}));
  CHECK(intersect(a, b).dim() == 0);
  CHECK(sum(a, b).dim() == 2);
  CHECK(intersect(a, a) == a);
  CHECK(sum(a, a) == a);
}

TEST_CASE("ambient mismatch is an input error") {
  Subspace a = Subspace::from_rows(3, rows({{1, 0, 0}}));
  Subspace b = Subspace::from_rows(2, rows({{1, 0}}));
  CHECK_THROWS_AS(intersect(a, b), input_error);
  CHECK_THROWS_AS(sum(a, b), input_error);
}

TEST_CASE("complement rows invert to the subspace") {
  Subspace a = Subspace::from_rows(4, rows({{1, 2, 3, 4}, {0, 1, 1, 0}}));
  Mat comp = orthogonal_complement_rows(a);
  CHECK(comp.rows() == 2);
  CHECK(nullspace(comp) == a);
}

TEST_CASE("rational arithmetic stays exact through elimination") {
  Mat m = rows({{2, 4, 6}, {1, 2, 3}, {0, 1, 7}});
  CHECK(rank(m) == 2);
  Subspace k = nullspace(m);
  CHECK(k.dim() == 1);
  // kernel vector satisfies both independent rows exactly
  auto v = k.basis().row(0);
  CHECK(Rat(2) * v[0] + Rat(4) * v[1] + Rat(6) * v[2] == 0);
  CHECK(v[1] + Rat(7) * v[2] == 0);
}

TEST_CASE("rank + nullity = columns on random rational matrices") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t r = size(rng), c = size(rng);
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = make_rat(num(rng), den(rng));
    CHECK(rank(m) + nullspace(m).dim() == c);
  }
}

TEST_CASE("subspace dimension bounds on random subspaces") {
  // dim(sum) <= dim a + dim b and dim(intersection) >= dim a + dim b - n
  std::mt19937_64 rng(77001);
  std::uniform_int_distribution<long> num(-5, 5);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 6;
    auto sample = [&](std::size_t count) {
      Mat m(count, n);
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = num(rng);
      return Subspace::from_rows(n, m);
    };
    Subspace a = sample(1 + (iter % 5));
    Subspace b = sample(1 + (iter % 4));
    CHECK(sum(a, b).dim() <= a.dim() + b.dim());
    CHECK(static_cast<long>(intersect(a, b).dim()) >=
          static_cast<long>(a.dim()) + static_cast<long>(b.dim()) - static_cast<long>(n));
    // complement identity on the fly
    CHECK(nullspace(orthogonal_complement_rows(a)) == a);
  }
}

TEST_CASE("coordinates against the canonical basis") {
  Subspace a = Subspace::from_rows(3, rows({{1, 0, 2}, {0, 1, 5}}));
  std::vector<Rat> v{Rat(3), Rat(-2), Rat(3 * 2 - 2 * 5)};
  auto c = a.coordinates(v);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == 3);
  CHECK(c[1] == -2);
}

TEST_CASE("solve_row reports infeasibility") {
  Mat m = rows({{1, 0, 0}, {0, 1, 0}});
  CHECK(solve_row(m, {Rat(2), Rat(3), Rat(0)}).has_value());
  CHECK(!solve_row(m, {Rat(0), Rat(0), Rat(1)}).has_value());
}

TEST_CASE("approximate rank uses the singular-value cutoff") {
  std::vector<std::vector<double>> m{{1.0, 0.0}, {0.0, 1e-12}};
  ApproxRank r = approx_rank(m);
  CHECK(r.rank == 1);
  CHECK(r.nullity == 1);
  ApproxRank strict = approx_rank(m, 1e-15);
  CHECK(strict.rank == 2);
  CHECK(std::string(ApproxRank::label) == "approximate");
}
