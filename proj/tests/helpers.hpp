#pragma once

#include <exckit/graded.hpp>

#include <span>

namespace exckit::testing {

// Second route to the intermediate graded piece: direct sum over k of
// S^{2k(+1)}(leading block) tensor S^{r-k}(trailing block). Kept independent
// of the weighted-composition enumeration on purpose.
inline TwistMultiset filtered_union(const Geometry& g, int h, int r, Parity parity) {
  const std::span<const Degree> a(g.conormal_degrees);
  const auto sub = a.first(static_cast<std::size_t>(h));
  const auto quot = a.subspan(static_cast<std::size_t>(h));
  TwistMultiset acc;
  for (int k = 0; k <= r; ++k) {
    const int sub_order = parity == Parity::odd ? 2 * k + 1 : 2 * k;
    acc += tensor_product(symmetric_power(sub, sub_order), symmetric_power(quot, r - k));
  }
  return acc;
}

}  // namespace exckit::testing
