#include <exckit/chern_sums.hpp>

#include <exckit/compositions.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exckit {

namespace {

void check_exponent(const Geometry& g, int j) {
  if (j < 1 || j > g.p)
    throw std::invalid_argument("chern sums: exponent " + std::to_string(j) +
                                " outside [1, p]");
}

void check_step(const Geometry& g, int h) {
  if (h < 1 || h > g.codim() - 1)
    throw std::invalid_argument("chern sums: filtration step " + std::to_string(h) +
                                " outside [1, " + std::to_string(g.codim() - 1) + "]");
}

Int twist_pow(std::span<const Degree> a, const Composition& m, unsigned j) {
  Int d = 0;
  for (std::size_t s = 0; s < m.size(); ++s) d += Int(m[s]) * make_int(a[s]);
  return int_pow(d, j);
}

// Sum of twist^j over the graded piece at a single symmetric degree.
Int plain_layer(const Geometry& g, int j, int i) {
  Int sum = 0;
  for_each_composition(g.codim(), i, [&](const Composition& m) {
    sum += twist_pow(g.conormal_degrees, m, static_cast<unsigned>(j));
  });
  return sum;
}

Int weighted_layer(const Geometry& g, int h, int j, int q) {
  Int sum = 0;
  for_each_weighted_composition(h, g.codim(), q, [&](const Composition& m) {
    sum += twist_pow(g.conormal_degrees, m, static_cast<unsigned>(j));
  });
  return sum;
}

}  // namespace

Rat degree_power_sum(const Geometry& g, int j, int r) {
  check_exponent(g, j);
  if (r < 0) throw std::invalid_argument("degree_power_sum: negative r");
  Int sum = 0;
  for (int i = 0; i < r; ++i) sum += plain_layer(g, j, i);
  return make_rat(sum, factorial(static_cast<unsigned long>(j)));
}

Rat weighted_degree_power_sum(const Geometry& g, int h, int j, int r) {
  check_step(g, h);
  check_exponent(g, j);
  if (r < 0) throw std::invalid_argument("weighted_degree_power_sum: negative r");
  Int sum = 0;
  for (int q = 0; q < 2 * r; ++q) sum += weighted_layer(g, h, j, q);
  return make_rat(sum, factorial(static_cast<unsigned long>(j)));
}

RationalPolynomial degree_power_sum_polynomial(const Geometry& g, int j, int node_count) {
  check_exponent(g, j);
  if (node_count < 1) throw std::invalid_argument("degree_power_sum_polynomial: no nodes");
  const Rat scale = make_rat(Int(1), factorial(static_cast<unsigned long>(j)));
  std::vector<std::pair<long long, Rat>> samples;
  samples.reserve(static_cast<std::size_t>(node_count));
  Int running = 0;
  samples.emplace_back(0, Rat(0));
  for (int r = 1; r < node_count; ++r) {
    running += plain_layer(g, j, r - 1);
    samples.emplace_back(r, Rat(running) * scale);
  }
  return interpolate(samples);
}

RationalPolynomial weighted_degree_power_sum_polynomial(const Geometry& g, int h, int j,
                                                        int node_count) {
  check_step(g, h);
  check_exponent(g, j);
  if (node_count < 1)
    throw std::invalid_argument("weighted_degree_power_sum_polynomial: no nodes");
  const Rat scale = make_rat(Int(1), factorial(static_cast<unsigned long>(j)));
  std::vector<std::pair<long long, Rat>> samples;
  samples.reserve(static_cast<std::size_t>(node_count));
  Int running = 0;
  samples.emplace_back(0, Rat(0));
  for (int r = 1; r < node_count; ++r) {
    running += weighted_layer(g, h, j, 2 * r - 2);
    running += weighted_layer(g, h, j, 2 * r - 1);
    samples.emplace_back(r, Rat(running) * scale);
  }
  return interpolate(samples);
}

Rat leading_coefficient(const Geometry& g) {
  return degree_power_sum_polynomial(g, g.p, g.n + 1).coeff(g.n);
}

Rat weighted_leading_coefficient(const Geometry& g, int h) {
  return weighted_degree_power_sum_polynomial(g, h, g.p, g.n + 1).coeff(g.n);
}

}  // namespace exckit
