#include <exckit/combinatorics.hpp>

#include <exckit/compositions.hpp>

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace exckit {

Int degree_pow(Degree base, unsigned exp) {
  if (exp == 0) return Int(1);
  long long acc = 1;
  bool fits = true;
  for (unsigned e = 0; e < exp && fits; ++e)
    fits = !__builtin_mul_overflow(acc, static_cast<long long>(base), &acc);
  if (fits) return Int(static_cast<long>(acc));
  return int_pow(make_int(base), exp);
}

Int binomial(const Int& n, const Int& k) {
  if (sgn(n) < 0) throw std::invalid_argument("binomial: negative n");
  if (sgn(k) < 0 || k > n) return Int(0);
  Int small = k;
  if (Int(n - k) < small) small = n - k;
  if (!small.fits_ulong_p()) throw std::overflow_error("binomial: k out of practical range");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), small.get_ui());
  return r;
}

Int binomial(long long n, long long k) {
  return binomial(Int(static_cast<long>(n)), Int(static_cast<long>(k)));
}

Int finite_difference(unsigned k, unsigned j) {
  if (j > k) throw std::invalid_argument("finite_difference: requires j <= k");
  Int sum = 0;
  for (unsigned t = 0; t <= k; ++t) {
    Int term = binomial(static_cast<long long>(k), static_cast<long long>(t));
    term *= int_pow(Int(static_cast<long>(t)), j);
    if (t % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Int shifted_difference(unsigned k, unsigned i) {
  if (k == 0) throw std::invalid_argument("shifted_difference: requires k >= 1");
  Int sum = 0;
  for (unsigned t = 0; t <= k; ++t) {
    Int term = binomial(static_cast<long long>(k), static_cast<long long>(t));
    term *= int_pow(Int(static_cast<long>(k + i - t)), k);
    if (t % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Int power_sum_compositions(unsigned parts, unsigned total, unsigned exponent) {
  if (parts == 0) throw std::invalid_argument("power_sum_compositions: requires parts >= 1");
  Int sum = 0;
  for_each_composition(static_cast<int>(parts), static_cast<int>(total),
                       [&](const Composition& m) { sum += int_pow(Int(m[0]), exponent); });
  return sum;
}

namespace {

// Right-hand side of the binomial expansion at (i, j); u[s] holds u_{s+1}.
Int expansion_rhs(unsigned k, const std::vector<Int>& u, unsigned i, unsigned j) {
  const long long top = static_cast<long long>(i) + j + k - 2;
  const long long bottom = static_cast<long long>(i) + k - 1;
  Int value = binomial(top, bottom);
  for (std::size_t s = 0; s < u.size(); ++s)
    value += u[s] * binomial(top - static_cast<long long>(s) - 1, bottom);
  return value;
}

// Exact Gaussian elimination; throws std::logic_error on a singular matrix.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  const std::size_t dim = rhs.size();
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == dim) throw std::logic_error("power sum expansion: singular sample system");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      const Rat factor = m[row][col] / m[col][col];
      for (std::size_t c = col; c < dim; ++c) m[row][c] -= factor * m[col][c];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::vector<Rat> x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// Solves for u from the sample rows (i, j) with j = 2..k at the given width i.
std::vector<Int> solve_expansion(unsigned k, unsigned i) {
  const std::size_t dim = k - 1;
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim));
  std::vector<Rat> rhs(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    const unsigned j = static_cast<unsigned>(row) + 2;
    const long long top = static_cast<long long>(i) + j + k - 2;
    const long long bottom = static_cast<long long>(i) + k - 1;
    for (std::size_t s = 0; s < dim; ++s)
      m[row][s] = Rat(binomial(top - static_cast<long long>(s) - 1, bottom));
    rhs[row] = Rat(power_sum_compositions(i, j, k) - binomial(top, bottom));
  }
  const std::vector<Rat> x = solve_linear(std::move(m), std::move(rhs));
  std::vector<Int> u(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    if (x[s].get_den() != 1)
      throw std::logic_error("power sum expansion: non-integer coefficient");
    u[s] = x[s].get_num();
  }
  return u;
}

}  // namespace

Int PowerSumExpansion::evaluate(unsigned parts, unsigned total) const {
  if (parts == 0) throw std::invalid_argument("PowerSumExpansion: requires parts >= 1");
  return expansion_rhs(k, u, parts, total);
}

PowerSumExpansion power_sum_expansion(unsigned k) {
  if (k == 0) throw std::invalid_argument("power_sum_expansion: requires k >= 1");
  PowerSumExpansion result;
  result.k = k;
  if (k == 1) return result;
  result.u = solve_expansion(k, 1);
  if (result.u != solve_expansion(k, 2))
    throw std::logic_error("power sum expansion: solves from disjoint samples disagree");
  Int total = 1;
  for (const Int& v : result.u) total += v;
  if (total != factorial(k))
    throw std::logic_error("power sum expansion: coefficient sum constraint violated");
  return result;
}

}  // namespace exckit
