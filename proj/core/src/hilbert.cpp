#include <exckit/hilbert.hpp>

#include <exckit/combinatorics.hpp>
#include <exckit/compositions.hpp>

#include <string>

namespace exckit {

namespace {

void check_hypothesis(std::span<const Degree> a, int p) {
  if (p < 1) throw std::invalid_argument("hilbert: requires p >= 1");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0)
      throw hypothesis_error("hilbert: degree a[" + std::to_string(i + 1) + "] = " +
                             std::to_string(a[i]) +
                             " is negative; values are defined only for nonnegative degrees");
}

}  // namespace

Int hilbert_value(std::span<const Degree> a, int p, int r) {
  check_hypothesis(a, p);
  if (r < 0) throw std::invalid_argument("hilbert_value: negative r");
  const Int pp(p);
  Int sum = 0;
  for_each_composition(static_cast<int>(a.size()), r, [&](const Composition& m) {
    Int d = pp;
    for (std::size_t s = 0; s < m.size(); ++s) d += Int(m[s]) * make_int(a[s]);
    sum += binomial(d, pp);
  });
  return sum;
}

Int embedding_dimension(std::span<const Degree> a, int p) {
  check_hypothesis(a, p);
  Int sum = 0;
  for (Degree v : a) sum += binomial(make_int(p) + make_int(v), make_int(v));
  return sum;
}

bool rationality_established(std::span<const Degree> a) {
  for (Degree v : a)
    if (v < 0) return false;
  return true;
}

HilbertProfile hilbert_profile(std::span<const Degree> a, int p, int rmax) {
  check_hypothesis(a, p);
  if (rmax < 0) throw std::invalid_argument("hilbert_profile: negative rmax");
  if (rmax > 50) throw std::invalid_argument("hilbert_profile: rmax above 50 unsupported");
  HilbertProfile profile;
  profile.a.assign(a.begin(), a.end());
  profile.p = p;
  profile.values.reserve(static_cast<std::size_t>(rmax) + 1);
  for (int r = 0; r <= rmax; ++r) profile.values.push_back(hilbert_value(a, p, r));
  profile.embedding_dim = embedding_dimension(a, p);
  profile.rational_established = rationality_established(a);
  return profile;
}

}  // namespace exckit
