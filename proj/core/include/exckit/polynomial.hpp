#pragma once

#include <exckit/arith.hpp>

#include <utility>
#include <vector>

namespace exckit {

/// Exact univariate polynomial over the rationals. Trailing zero coefficients
/// are trimmed; the zero polynomial has degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rat> coeffs);
  static RationalPolynomial constant(const Rat& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int power) const;
  Rat leading_coefficient() const;
  Rat evaluate(const Rat& x) const;
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const Rat& s) const;

  bool operator==(const RationalPolynomial&) const = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;  // index = power
};

/// Unique polynomial of degree < samples.size() through all samples, in
/// exact Lagrange form. Duplicate nodes are rejected.
RationalPolynomial interpolate(const std::vector<std::pair<long long, Rat>>& samples);

}  // namespace exckit
