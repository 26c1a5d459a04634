#include <exckit/graded.hpp>

#include <exckit/combinatorics.hpp>
#include <exckit/compositions.hpp>

#include "helpers.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

using namespace exckit;

namespace {

TwistMultiset make_multiset(const std::map<Degree, Int>& entries) {
  TwistMultiset m;
  for (const auto& [d, c] : entries) m.add(d, c);
  return m;
}

}  // namespace

TEST_CASE("geometry rejects malformed input") {
  CHECK_NOTHROW(Geometry(4, 2, {5, 1}));
  CHECK_THROWS_AS(Geometry(4, 0, {5, 1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Geometry(3, 2, {1}), std::invalid_argument);
  CHECK_THROWS_AS(Geometry(4, 2, {5}), std::invalid_argument);
  CHECK_EQ(Geometry(5, 2, {1, 2, 3}).codim(), 3);
}

TEST_CASE("twist multiset accumulates and compares") {
  TwistMultiset m;
  CHECK(m.empty());
  m.add(3);
  m.add(3, 2);
  m.add(-1);
  m.add(0, Int(0));
  CHECK_EQ(m.length(), 4);
  CHECK_EQ(m.entries().size(), std::size_t{2});
  CHECK_EQ(m.entries().at(3), 3);
  CHECK_THROWS_AS(m.add(1, Int(-2)), std::invalid_argument);

  TwistMultiset other;
  other.add(3);
  m += other;
  CHECK_EQ(m.entries().at(3), 4);
}

TEST_CASE("symmetric powers of split bundles") {
  CHECK_EQ(symmetric_power(std::vector<Degree>{1, 1}, 2), make_multiset({{2, 3}}));
  CHECK_EQ(symmetric_power(std::vector<Degree>{7}, 3), make_multiset({{21, 1}}));
  CHECK_EQ(symmetric_power(std::vector<Degree>{5, 1}, 1), make_multiset({{5, 1}, {1, 1}}));
  CHECK_EQ(symmetric_power(std::vector<Degree>{}, 0), make_multiset({{0, 1}}));
  CHECK(symmetric_power(std::vector<Degree>{}, 2).empty());
  CHECK_THROWS_AS(symmetric_power(std::vector<Degree>{1}, -1), std::invalid_argument);

  for (int len = 1; len <= 3; ++len) {
    const std::vector<Degree> d(static_cast<std::size_t>(len), 2);
    for (int r = 0; r <= 6; ++r)
      CHECK_EQ(symmetric_power(d, r).length(), composition_count(len, r));
  }
}

TEST_CASE("tensor convolution of twist sums") {
  const TwistMultiset unit = make_multiset({{0, 1}});
  const TwistMultiset x = make_multiset({{0, 1}, {1, 1}});
  CHECK_EQ(tensor_product(unit, x), x);
  CHECK_EQ(tensor_product(make_multiset({{1, 2}}), make_multiset({{2, 3}})),
           make_multiset({{3, 6}}));
  CHECK_EQ(tensor_product(x, x), make_multiset({{0, 1}, {1, 2}, {2, 1}}));
  CHECK_EQ(tensor_product(x, make_multiset({{2, 5}, {-1, 3}})).length(), x.length() * 8);
}

TEST_CASE("graded pieces of ideal powers") {
  const Geometry example(4, 2, {5, 1});
  CHECK_EQ(ideal_power_graded_piece(example, 1), make_multiset({{5, 1}, {1, 1}}));
  CHECK_EQ(ideal_power_graded_piece(example, 0), make_multiset({{0, 1}}));
  CHECK_EQ(ideal_power_graded_piece(Geometry(3, 1, {1, 1}), 2), make_multiset({{2, 3}}));

  for (int r = 0; r <= 5; ++r)
    CHECK_EQ(ideal_power_graded_piece(example, r).length(), composition_count(2, r));
}

TEST_CASE("graded pieces are blind to the ordering of the degrees") {
  const Geometry fwd(5, 2, {1, -2, 4});
  const Geometry perm(5, 2, {4, 1, -2});
  for (int r = 0; r <= 4; ++r)
    CHECK_EQ(ideal_power_graded_piece(fwd, r), ideal_power_graded_piece(perm, r));
}

TEST_CASE("weighted graded pieces at a filtration step") {
  const Geometry g(3, 1, {1, 2});
  CHECK_EQ(weighted_graded_piece(g, 1, 0, Parity::odd), make_multiset({{1, 1}}));
  CHECK_EQ(weighted_graded_piece(g, 1, 0, Parity::even), make_multiset({{0, 1}}));
  CHECK_EQ(weighted_graded_piece(g, 1, 1, Parity::even), make_multiset({{2, 2}}));
  CHECK_THROWS_AS(weighted_graded_piece(g, 0, 1, Parity::even), std::invalid_argument);
  CHECK_THROWS_AS(weighted_graded_piece(g, 2, 1, Parity::even), std::invalid_argument);
  CHECK_THROWS_AS(weighted_graded_piece(g, 1, -1, Parity::odd), std::invalid_argument);
}

TEST_CASE("weighted pieces agree with the filtered symmetric-power route") {
  const std::vector<Degree> pool{-1, 1, 2};
  for (int codim = 2; codim <= 3; ++codim) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(codim), 0);
    for (;;) {
      std::vector<Degree> a(pick.size());
      for (std::size_t i = 0; i < pick.size(); ++i) a[i] = pool[pick[i]];
      const Geometry g(1 + codim, 1, a);
      for (int h = 1; h <= codim - 1; ++h)
        for (int r = 0; r <= 4; ++r)
          for (const Parity parity : {Parity::even, Parity::odd})
            CHECK_EQ(weighted_graded_piece(g, h, r, parity),
                     testing::filtered_union(g, h, r, parity));
      std::size_t idx = pick.size();
      while (idx > 0 && pick[idx - 1] == pool.size() - 1) pick[--idx] = 0;
      if (idx == 0) break;
      ++pick[idx - 1];
    }
  }
}

TEST_CASE("numerical classes carry length and elementary symmetric data") {
  const NumericalClass conormal = numerical_class(make_multiset({{5, 1}, {1, 1}}), 2);
  CHECK_EQ(conormal.length, 2);
  CHECK_EQ(conormal.chern, std::vector<Int>{6, 5});

  const NumericalClass trivial = numerical_class(make_multiset({{0, 4}}), 3);
  CHECK_EQ(trivial.length, 4);
  CHECK_EQ(trivial.chern, std::vector<Int>{0, 0, 0});

  const NumericalClass line = numerical_class(make_multiset({{2, 3}}), 1);
  CHECK_EQ(line.length, 3);
  CHECK_EQ(line.chern, std::vector<Int>{6});

  // Degrees (1, 1, 3): e1 = 5, e2 = 7, e3 = 3.
  const NumericalClass mixed = numerical_class(make_multiset({{1, 2}, {3, 1}}), 3);
  CHECK_EQ(mixed.chern, std::vector<Int>{5, 7, 3});

  CHECK_THROWS_AS(numerical_class(make_multiset({{1, 1}}), 0), std::invalid_argument);
}

TEST_CASE("numerical class of a graded piece is permutation invariant") {
  const Geometry fwd(5, 3, {3, -1});
  const Geometry perm(5, 3, {-1, 3});
  for (int r = 1; r <= 4; ++r)
    CHECK_EQ(numerical_class(ideal_power_graded_piece(fwd, r), 3),
             numerical_class(ideal_power_graded_piece(perm, r), 3));
}
