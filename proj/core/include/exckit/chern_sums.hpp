#pragma once

#include <exckit/graded.hpp>
#include <exckit/polynomial.hpp>

namespace exckit {

/// Chern-character partial sum over the graded pieces of the first r ideal
/// powers: (1/j!) sum_{i<r} sum_{|m|=i} (sum_s m_s a_s)^j. Requires
/// 1 <= j <= p.
Rat degree_power_sum(const Geometry& g, int j, int r);

/// Same accumulation over the weight-(1,2) region at filtration step h:
/// (1/j!) sum over all m with weighted degree <= 2r-1 of (sum_s m_s a_s)^j.
/// Requires 1 <= h <= codim-1 and 1 <= j <= p.
Rat weighted_degree_power_sum(const Geometry& g, int h, int j, int r);

/// Interpolation of the partial sums at r = 0..node_count-1. With
/// node_count = n+1 this recovers the degree-n polynomial the sums satisfy;
/// extra nodes act as consistency checks.
RationalPolynomial degree_power_sum_polynomial(const Geometry& g, int j, int node_count);
RationalPolynomial weighted_degree_power_sum_polynomial(const Geometry& g, int h, int j, int node_count);

/// Coefficient of r^n in the degree-p partial-sum polynomial. Satisfies
/// n! * leading_coefficient(g) = sum over |t| = p of prod_i a_i^{t_i}.
Rat leading_coefficient(const Geometry& g);

/// Weighted analogue at step h; proportional to the prefix-doubled monomial
/// sum by a positive constant depending only on (n, p, h).
Rat weighted_leading_coefficient(const Geometry& g, int h);

}  // namespace exckit
