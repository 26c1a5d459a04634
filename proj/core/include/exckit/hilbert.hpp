#pragma once

#include <exckit/arith.hpp>

#include <span>
#include <stdexcept>
#include <vector>

namespace exckit {

/// Raised when a computation is requested outside its validity hypothesis
/// (here: negative conormal degrees for Hilbert data).
class hypothesis_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hilbert function of the contracted point:
/// h(r) = sum_{|i| = r} C(p + sum_s i_s a_s, p). Requires all a_i >= 0.
Int hilbert_value(std::span<const Degree> a, int p, int r);

/// sum_i C(p + a_i, a_i); equals hilbert_value(a, p, 1).
Int embedding_dimension(std::span<const Degree> a, int p);

/// True iff every a_i >= 0, which establishes rationality of the contracted
/// singularity. False means "not established by this criterion", not
/// "irrational".
bool rationality_established(std::span<const Degree> a);

struct HilbertProfile {
  std::vector<Degree> a;
  int p = 1;
  std::vector<Int> values;  // h(0..rmax)
  Int embedding_dim;
  bool rational_established = false;
};

/// Assembles h(0..rmax), the embedding dimension, and the rationality flag.
/// Requires all a_i >= 0 and rmax <= 50.
HilbertProfile hilbert_profile(std::span<const Degree> a, int p, int rmax);

}  // namespace exckit
