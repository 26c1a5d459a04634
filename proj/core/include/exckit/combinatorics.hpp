#pragma once

#include <exckit/arith.hpp>

#include <vector>

namespace exckit {

/// C(n, k). Out-of-range k (k < 0 or k > n) gives 0 so that summation
/// formulas compose without case splits. Negative n is rejected.
Int binomial(const Int& n, const Int& k);
Int binomial(long long n, long long k);

/// Alternating difference sum_{t=0}^{k} (-1)^t C(k,t) t^j with 0^0 = 1.
/// Vanishes for j < k and equals (-1)^k k! at j = k. Requires 0 <= j <= k.
Int finite_difference(unsigned k, unsigned j);

/// sum_{t=0}^{k} (-1)^t C(k,t) (k+i-t)^k, equal to k! for every i >= 0.
/// Requires k >= 1.
Int shifted_difference(unsigned k, unsigned i);

/// Brute-force sum of m_1^exponent over all compositions (m_1,...,m_parts)
/// of `total` into nonnegative parts. Requires parts >= 1.
Int power_sum_compositions(unsigned parts, unsigned total, unsigned exponent);

/// Coefficients u_1..u_{k-1} expressing the composition power sum in the
/// binomial basis:
///
///   sum_{|m| = j, len i} m_1^k
///     = C(i+j+k-2, i+k-1) + sum_s u_s C(i+j+k-2-s, i+k-1),
///
/// with 1 + sum_s u_s = k!.
struct PowerSumExpansion {
  unsigned k = 1;
  std::vector<Int> u;  // length k-1

  /// Right-hand side of the expansion at (parts, total) = (i, j).
  Int evaluate(unsigned parts, unsigned total) const;
};

/// Solves for the expansion coefficients from brute-force power sums, twice
/// with disjoint (i, j) samples. A disagreement between the two solves, a
/// singular system, or a violated coefficient-sum constraint raises
/// std::logic_error. Requires k >= 1.
PowerSumExpansion power_sum_expansion(unsigned k);

}  // namespace exckit
