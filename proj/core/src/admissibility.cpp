#include <exckit/admissibility.hpp>

#include <exckit/parallel.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace exckit {

Int complete_homogeneous(std::span<const Degree> a, int p) {
  if (p < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
  Int sum = 0;
  for_each_composition(static_cast<int>(a.size()), p, [&](const Composition& t) {
    Int term = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] != 0) term *= int_pow(make_int(a[i]), static_cast<unsigned long>(t[i]));
    sum += term;
  });
  return sum;
}

Int pattern_sum(std::span<const Degree> a, const DoublingPattern& pattern, int p) {
  const std::vector<Degree> doubled = pattern.apply(a);
  return complete_homogeneous(doubled, p);
}

namespace {

InequalityReport report_from_patterns(const Geometry& g, std::vector<DoublingPattern> patterns) {
  InequalityReport report;
  report.records.reserve(patterns.size());
  for (auto& pattern : patterns) {
    Int value = pattern_sum(g.conormal_degrees, pattern, g.p);
    const bool pass = sgn(value) >= 0;
    report.overall = report.overall && pass;
    report.records.push_back({std::move(pattern), std::move(value), pass});
  }
  return report;
}

}  // namespace

InequalityReport check_filtration(const Geometry& g) {
  std::vector<DoublingPattern> patterns;
  for (int h = 0; h <= g.codim() - 1; ++h) patterns.push_back(DoublingPattern::prefix(h));
  return report_from_patterns(g, std::move(patterns));
}

InequalityReport check_split(const Geometry& g) {
  const int c = g.codim();
  if (c > 16) throw std::invalid_argument("check_split: codimension above 16 unsupported");
  std::vector<DoublingPattern> patterns;
  patterns.reserve(std::size_t{1} << c);
  for (unsigned mask = 0; mask < (1u << c); ++mask) {
    std::vector<int> indices;
    for (int i = 0; i < c; ++i)
      if (mask & (1u << i)) indices.push_back(i);
    patterns.push_back(DoublingPattern::subset(std::move(indices)));
  }
  return report_from_patterns(g, std::move(patterns));
}

Int p1_linear_form(std::span<const Degree> a, int h) {
  if (h < 0 || static_cast<std::size_t>(h) > a.size())
    throw std::invalid_argument("p1_linear_form: step outside [0, len]");
  Int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += make_int(a[i]) * (static_cast<int>(i) < h ? 2 : 1);
  return sum;
}

Codim2OddReport codim2_odd_check(Degree a1, Degree a2, int p) {
  if (p < 1 || p % 2 == 0)
    throw std::invalid_argument("codim2_odd_check: requires odd p >= 1");
  const std::vector<Degree> a{a1, a2};
  Codim2OddReport report;

  Int even_part = 0;
  for (int i = 0; 2 * i <= p - 1; ++i)
    even_part += degree_pow(a1, static_cast<unsigned>(2 * i)) *
                 degree_pow(a2, static_cast<unsigned>(p - 1 - 2 * i));
  report.factored_ok =
      complete_homogeneous(a, p) == (make_int(a1) + make_int(a2)) * even_part;

  const bool split_passes = check_split(Geometry(p + 2, p, a)).overall;
  report.implied = !split_passes ||
                   (a1 + a2 >= 0 && 2 * a1 + a2 >= 0 && a1 + 2 * a2 >= 0);
  return report;
}

bool is_crepant(std::span<const Degree> a, int p) {
  if (p < 1) throw std::invalid_argument("is_crepant: requires p >= 1");
  Int sum = 0;
  for (Degree v : a) sum += make_int(v);
  return sum == p + 1;
}

namespace {

void extend_nondecreasing(std::vector<Degree>& prefix, int remaining, Degree bound,
                          const CatalogParams& params, std::uint64_t& candidates,
                          std::vector<std::vector<Degree>>& out) {
  if (remaining == 0) {
    ++candidates;
    if (params.filter_crepant && !is_crepant(prefix, params.p)) return;
    if (params.filter_nonnegative && prefix.front() < 0) return;
    const Geometry g(params.p + params.codim, params.p, prefix);
    const bool pass = params.system == InequalitySystem::filtration
                          ? check_filtration(g).overall
                          : check_split(g).overall;
    if (pass) out.push_back(prefix);
    return;
  }
  for (Degree v = prefix.back(); v <= bound; ++v) {
    prefix.push_back(v);
    extend_nondecreasing(prefix, remaining - 1, bound, params, candidates, out);
    prefix.pop_back();
  }
}

}  // namespace

AdmissibleCatalog enumerate_admissible(const CatalogParams& params) {
  if (params.p < 1) throw std::invalid_argument("enumerate_admissible: requires p >= 1");
  if (params.codim < 2 || params.codim > 6)
    throw std::invalid_argument("enumerate_admissible: codim outside [2, 6]");
  if (params.bound < 0 || params.bound > 12)
    throw std::invalid_argument("enumerate_admissible: bound outside [0, 12]");

  struct Slice {
    std::uint64_t candidates = 0;
    std::vector<std::vector<Degree>> vectors;
  };

  const Degree bound = params.bound;
  const std::size_t jobs = static_cast<std::size_t>(2 * bound + 1);
  auto slices = ordered_parallel_map<Slice>(jobs, params.threads, [&](std::size_t job) {
    Slice slice;
    std::vector<Degree> prefix{static_cast<Degree>(job) - bound};
    extend_nondecreasing(prefix, params.codim - 1, bound, params, slice.candidates,
                         slice.vectors);
    return slice;
  });

  AdmissibleCatalog catalog;
  catalog.params = params;
  for (auto& slice : slices) {
    catalog.candidates += slice.candidates;
    for (auto& v : slice.vectors) catalog.vectors.push_back(std::move(v));
  }
  return catalog;
}

}  // namespace exckit
