#include <doctest.h>

#include <exckit/arith.hpp>
#include <exckit/chern_sums.hpp>
#include <exckit/compositions.hpp>
#include <exckit/graded.hpp>
#include <exckit/polynomial.hpp>

#include <stdexcept>
#include <vector>

using namespace exckit;

namespace {

// Independent route: accumulate mult * d^j / j! over explicit graded pieces.
Rat sum_over_pieces(const Geometry& g, int j, int r) {
  Rat acc(0);
  for (int i = 0; i < r; ++i) {
    const TwistMultiset piece = ideal_power_graded_piece(g, i);
    for (const auto& [twist, mult] : piece.entries())
      acc += make_rat(mult * degree_pow(twist, j), factorial(j));
  }
  return acc;
}

Rat sum_over_weighted_pieces(const Geometry& g, int h, int j, int r) {
  Rat acc(0);
  for (int s = 0; s < r; ++s) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      const TwistMultiset piece = weighted_graded_piece(g, h, s, parity);
      for (const auto& [twist, mult] : piece.entries())
        acc += make_rat(mult * degree_pow(twist, j), factorial(j));
    }
  }
  return acc;
}

Int monomial_sum(const std::vector<Degree>& a, int p) {
  Int total(0);
  for_each_composition(static_cast<int>(a.size()), p, [&](const auto& t) {
    Int term(1);
    for (std::size_t i = 0; i < a.size(); ++i)
      term *= degree_pow(a[i], t[i]);
    total += term;
  });
  return total;
}

std::vector<Degree> double_prefix(std::vector<Degree> a, int h) {
  for (int i = 0; i < h; ++i) a[static_cast<std::size_t>(i)] *= 2;
  return a;
}

}  // namespace

TEST_CASE("partial sums for the diagonal surface geometry") {
  Geometry g(3, 1, {1, 1});
  CHECK_EQ(degree_power_sum(g, 1, 0), Rat(0));
  CHECK_EQ(degree_power_sum(g, 1, 2), Rat(2));
  CHECK_EQ(degree_power_sum(g, 1, 3), Rat(8));
  // Closed form (r^3 - r)/3 for this geometry.
  for (int r = 0; r <= 6; ++r) {
    long rr = r;
    CHECK_EQ(degree_power_sum(g, 1, r), make_rat(rr * rr * rr - rr, 3));
  }
}

TEST_CASE("partial sums agree with direct accumulation over graded pieces") {
  for (const auto& a :
       std::vector<std::vector<Degree>>{{1, 2}, {-1, 3}, {2, 0, 1}}) {
    const int codim = static_cast<int>(a.size());
    for (int p = 1; p <= 2; ++p) {
      Geometry g(p + codim, p, a);
      for (int j = 1; j <= p; ++j)
        for (int r = 0; r <= 5; ++r)
          CHECK_EQ(degree_power_sum(g, j, r), sum_over_pieces(g, j, r));
    }
  }
}

TEST_CASE("weighted partial sums for the filtered threefold geometry") {
  Geometry g(3, 1, {1, 2});
  CHECK_EQ(weighted_degree_power_sum(g, 1, 1, 0), Rat(0));
  CHECK_EQ(weighted_degree_power_sum(g, 1, 1, 1), Rat(1));
  CHECK_EQ(weighted_degree_power_sum(g, 1, 1, 2), Rat(11));
  CHECK_EQ(weighted_degree_power_sum(g, 1, 1, 3), Rat(38));
}

TEST_CASE("weighted partial sums agree with the two-parity piece route") {
  for (const auto& a :
       std::vector<std::vector<Degree>>{{1, 2}, {-1, 3}, {1, 1, 2}}) {
    const int codim = static_cast<int>(a.size());
    for (int p = 1; p <= 2; ++p) {
      Geometry g(p + codim, p, a);
      for (int h = 1; h < codim; ++h)
        for (int j = 1; j <= p; ++j)
          for (int r = 0; r <= 4; ++r)
            CHECK_EQ(weighted_degree_power_sum(g, h, j, r),
                     sum_over_weighted_pieces(g, h, j, r));
    }
  }
}

TEST_CASE("partial sums interpolate to a polynomial of degree at most n") {
  Geometry g(4, 2, {1, 3});
  RationalPolynomial f = degree_power_sum_polynomial(g, 2, g.n + 4);
  CHECK_LE(f.degree(), g.n);
  for (int r = 0; r <= 9; ++r)
    CHECK_EQ(f.evaluate(Rat(r)), degree_power_sum(g, 2, r));

  RationalPolynomial w = weighted_degree_power_sum_polynomial(g, 1, 2, g.n + 4);
  CHECK_LE(w.degree(), g.n);
  for (int r = 0; r <= 9; ++r)
    CHECK_EQ(w.evaluate(Rat(r)), weighted_degree_power_sum(g, 1, 2, r));
}

TEST_CASE("leading coefficient values") {
  CHECK_EQ(leading_coefficient(Geometry(3, 1, {1, 1})), make_rat(1, 3));
  CHECK_EQ(leading_coefficient(Geometry(4, 2, {1, 5})), make_rat(31, 24));
  CHECK_EQ(leading_coefficient(Geometry(4, 2, {0, 0})), Rat(0));
}

TEST_CASE("n! times the leading coefficient is the degree-p monomial sum") {
  for (int p = 1; p <= 2; ++p)
    for (Degree a1 = -2; a1 <= 2; ++a1)
      for (Degree a2 = -2; a2 <= 2; ++a2) {
        Geometry g(p + 2, p, {a1, a2});
        CHECK_EQ(leading_coefficient(g) * Rat(factorial(g.n)),
                 Rat(monomial_sum({a1, a2}, p)));
      }
}

TEST_CASE("weighted leading coefficient values") {
  CHECK_EQ(weighted_leading_coefficient(Geometry(3, 1, {1, 2}), 1),
           make_rat(4, 3));
}

TEST_CASE("weighted leading coefficient is proportional to the doubled sum") {
  // The ratio against the prefix-doubled monomial sum depends only on
  // (n, p, h): it must agree across degree vectors and stay positive.
  for (int p = 1; p <= 2; ++p)
    for (int codim = 2; codim <= 3; ++codim)
      for (int h = 1; h < codim; ++h) {
        std::vector<std::vector<Degree>> pool;
        if (codim == 2)
          pool = {{1, 2}, {3, 1}, {2, 2}, {1, 4}};
        else
          pool = {{1, 1, 2}, {2, 1, 3}, {1, 2, 1}};
        Rat ratio;
        bool have_ratio = false;
        for (const auto& a : pool) {
          Geometry g(p + codim, p, a);
          Rat doubled = Rat(monomial_sum(double_prefix(a, h), p));
          REQUIRE_NE(doubled, Rat(0));
          Rat r = weighted_leading_coefficient(g, h) / doubled;
          CHECK_GT(r, Rat(0));
          if (!have_ratio) {
            ratio = r;
            have_ratio = true;
          } else {
            CHECK_EQ(r, ratio);
          }
        }
      }
}

TEST_CASE("argument validation") {
  Geometry g(4, 2, {1, 3});
  CHECK_THROWS_AS(degree_power_sum(g, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(degree_power_sum(g, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(degree_power_sum(g, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(weighted_degree_power_sum(g, 0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(weighted_degree_power_sum(g, 2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(weighted_degree_power_sum(g, 1, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(degree_power_sum_polynomial(g, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(weighted_degree_power_sum_polynomial(g, 1, 1, 0),
                  std::invalid_argument);
}
