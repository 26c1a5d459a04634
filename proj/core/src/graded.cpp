#include <exckit/graded.hpp>

#include <exckit/combinatorics.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace exckit {

Geometry::Geometry(int n_, int p_, std::vector<Degree> a)
    : n(n_), p(p_), conormal_degrees(std::move(a)) {
  if (p < 1) throw std::invalid_argument("Geometry: requires p >= 1");
  if (n - p < 2) throw std::invalid_argument("Geometry: requires codimension n - p >= 2");
  if (conormal_degrees.size() != static_cast<std::size_t>(n - p))
    throw std::invalid_argument("Geometry: degree vector length must equal n - p");
}

void TwistMultiset::add(Degree twist, const Int& count) {
  if (sgn(count) < 0) throw std::invalid_argument("TwistMultiset::add: negative multiplicity");
  if (sgn(count) == 0) return;
  mult_[twist] += count;
}

TwistMultiset& TwistMultiset::operator+=(const TwistMultiset& other) {
  for (const auto& [twist, count] : other.mult_) mult_[twist] += count;
  return *this;
}

Int TwistMultiset::length() const {
  Int total = 0;
  for (const auto& [twist, count] : mult_) total += count;
  return total;
}

namespace {

Degree dot(std::span<const Degree> d, const Composition& m) {
  Degree sum = 0;
  for (std::size_t i = 0; i < m.size(); ++i) sum += static_cast<Degree>(m[i]) * d[i];
  return sum;
}

}  // namespace

TwistMultiset symmetric_power(std::span<const Degree> twists, int r) {
  if (r < 0) throw std::invalid_argument("symmetric_power: negative order");
  TwistMultiset out;
  for_each_composition(static_cast<int>(twists.size()), r,
                       [&](const Composition& m) { out.add(dot(twists, m)); });
  return out;
}

TwistMultiset tensor_product(const TwistMultiset& x, const TwistMultiset& y) {
  TwistMultiset out;
  for (const auto& [dx, cx] : x.entries())
    for (const auto& [dy, cy] : y.entries()) out.add(dx + dy, cx * cy);
  return out;
}

TwistMultiset ideal_power_graded_piece(const Geometry& g, int r) {
  return symmetric_power(g.conormal_degrees, r);
}

TwistMultiset weighted_graded_piece(const Geometry& g, int h, int r, Parity level) {
  if (h < 1 || h > g.codim() - 1)
    throw std::invalid_argument("weighted_graded_piece: filtration step " + std::to_string(h) +
                                " outside [1, " + std::to_string(g.codim() - 1) + "]");
  if (r < 0) throw std::invalid_argument("weighted_graded_piece: negative order");
  const int total = level == Parity::even ? 2 * r : 2 * r + 1;
  TwistMultiset out;
  for_each_weighted_composition(h, g.codim(), total, [&](const Composition& m) {
    out.add(dot(g.conormal_degrees, m));
  });
  return out;
}

NumericalClass numerical_class(const TwistMultiset& x, int p) {
  if (p < 1) throw std::invalid_argument("numerical_class: requires p >= 1");
  NumericalClass out;
  out.length = x.length();
  // e_1..e_p via the product of (1 + d t)^mult truncated at degree p.
  std::vector<Int> e(static_cast<std::size_t>(p) + 1);
  e[0] = 1;
  std::vector<Int> factor(e.size()), next(e.size());
  for (const auto& [d, mult] : x.entries()) {
    for (std::size_t j = 0; j < factor.size(); ++j)
      factor[j] = binomial(mult, Int(static_cast<long>(j))) * degree_pow(d, static_cast<unsigned>(j));
    for (auto& c : next) c = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; i + j < e.size(); ++j) next[i + j] += e[i] * factor[j];
    e.swap(next);
  }
  out.chern.assign(e.begin() + 1, e.end());
  return out;
}

}  // namespace exckit
