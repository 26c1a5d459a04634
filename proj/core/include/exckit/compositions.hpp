#pragma once

#include <exckit/arith.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exckit {

/// Ordered tuple of nonnegative integers with a fixed (weighted) sum.
using Composition = std::vector<int>;

namespace detail {

inline void check_enum_args(int parts, int total) {
  if (parts < 0) throw std::invalid_argument("composition enumeration: negative part count");
  if (total < 0) throw std::invalid_argument("composition enumeration: negative total");
}

template <typename F>
void weighted_rec(Composition& m, int idx, int ones_prefix, int remaining, F& visit) {
  const int parts = static_cast<int>(m.size());
  const int w = idx < ones_prefix ? 1 : 2;
  if (idx == parts - 1) {
    if (remaining % w == 0) {
      m[idx] = remaining / w;
      visit(std::as_const(m));
      m[idx] = 0;
    }
    return;
  }
  const int max_v = remaining / w;
  for (int v = 0; v <= max_v; ++v) {
    m[idx] = v;
    weighted_rec(m, idx + 1, ones_prefix, remaining - v * w, visit);
  }
  m[idx] = 0;
}

}  // namespace detail

/// Visits every composition of `total` into `parts` nonnegative parts exactly
/// once, in lexicographic order. The visited vector is scratch storage; copy
/// it if it must outlive the call.
template <typename F>
void for_each_composition(int parts, int total, F&& visit) {
  detail::check_enum_args(parts, total);
  if (parts == 0) {
    if (total == 0) {
      const Composition empty;
      visit(empty);
    }
    return;
  }
  Composition m(static_cast<std::size_t>(parts), 0);
  m[parts - 1] = total;
  for (;;) {
    visit(std::as_const(m));
    int z = parts - 1;
    while (z >= 0 && m[z] == 0) --z;
    if (z <= 0) return;
    const int v = m[z];
    m[z] = 0;
    ++m[z - 1];
    m[parts - 1] = v - 1;
  }
}

/// Weighted variant: weight 1 on the first `ones_prefix` indices and 2 on the
/// rest; visits every m with sum_i w_i m_i = total, lexicographic order.
/// ones_prefix = parts degenerates to for_each_composition.
template <typename F>
void for_each_weighted_composition(int ones_prefix, int parts, int total, F&& visit) {
  detail::check_enum_args(parts, total);
  if (ones_prefix < 0 || ones_prefix > parts)
    throw std::invalid_argument("for_each_weighted_composition: ones_prefix out of range");
  if (parts == 0) {
    if (total == 0) {
      const Composition empty;
      visit(empty);
    }
    return;
  }
  Composition m(static_cast<std::size_t>(parts), 0);
  detail::weighted_rec(m, 0, ones_prefix, total, visit);
}

/// Selects which entries of a degree vector get doubled: either the first h
/// entries (an ordered filtration step) or an arbitrary index subset (a
/// reordering-free split type). Subset indices are 0-based internally and
/// rendered 1-based.
class DoublingPattern {
 public:
  static DoublingPattern prefix(int h);
  static DoublingPattern subset(std::vector<int> indices);

  bool is_prefix() const { return is_prefix_; }
  int prefix_length() const;
  const std::vector<int>& indices() const;

  bool doubles(int index) const;
  /// Throws std::invalid_argument if the pattern refers past `len` entries.
  void validate(std::size_t len) const;
  std::vector<Degree> apply(std::span<const Degree> a) const;

  std::string describe() const;  // "prefix=2", "subset={1,3}"

  bool operator==(const DoublingPattern&) const = default;

 private:
  DoublingPattern() = default;
  bool is_prefix_ = true;
  int prefix_len_ = 0;
  std::vector<int> subset_;  // sorted, unique
};

std::vector<Composition> compositions(int parts, int total);
std::vector<Composition> weighted_compositions(const DoublingPattern& pattern, int parts, int total);

/// Exponent vectors t with |t| = degree, indexing the degree-p monomials of
/// the inequality systems. Identical to compositions(parts, degree).
std::vector<Composition> exponent_set(int parts, int degree);

/// C(total + parts - 1, parts - 1).
Int composition_count(int parts, int total);

}  // namespace exckit
