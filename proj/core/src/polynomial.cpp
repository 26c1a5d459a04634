#include <exckit/polynomial.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exckit {

RationalPolynomial::RationalPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rat& c) {
  return RationalPolynomial(std::vector<Rat>{c});
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat RationalPolynomial::coeff(int power) const {
  if (power < 0) throw std::invalid_argument("RationalPolynomial::coeff: negative power");
  if (static_cast<std::size_t>(power) >= coeffs_.size()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rat RationalPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat RationalPolynomial::evaluate(const Rat& x) const {
  Rat value(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
  return value;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
  std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return RationalPolynomial();
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const Rat& s) const {
  std::vector<Rat> out(coeffs_);
  for (auto& c : out) c *= s;
  return RationalPolynomial(std::move(out));
}

RationalPolynomial interpolate(const std::vector<std::pair<long long, Rat>>& samples) {
  if (samples.empty()) throw std::invalid_argument("interpolate: no samples");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw std::invalid_argument("interpolate: duplicate node " +
                                    std::to_string(samples[i].first));

  RationalPolynomial result;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    RationalPolynomial basis = RationalPolynomial::constant(Rat(1));
    Rat denom(1);
    const Rat xi(static_cast<long>(samples[i].first));
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (j == i) continue;
      const Rat xj(static_cast<long>(samples[j].first));
      basis = basis * RationalPolynomial(std::vector<Rat>{-xj, Rat(1)});
      denom *= xi - xj;
    }
    result = result + basis * (samples[i].second / denom);
  }
  return result;
}

}  // namespace exckit
