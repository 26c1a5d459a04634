#pragma once

#include <exckit/arith.hpp>
#include <exckit/compositions.hpp>
#include <exckit/graded.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace exckit {

/// Complete homogeneous sum of degree p: sum over all exponent vectors t
/// with |t| = p of prod_i a_i^{t_i}. p = 0 gives 1.
Int complete_homogeneous(std::span<const Degree> a, int p);

/// complete_homogeneous of the pattern-doubled vector.
Int pattern_sum(std::span<const Degree> a, const DoublingPattern& pattern, int p);

struct InequalityRecord {
  DoublingPattern pattern;
  Int value;
  bool pass = false;  // value >= 0
};

struct InequalityReport {
  std::vector<InequalityRecord> records;
  bool overall = true;  // every record passed
};

/// Inequality family for an ordered filtration: the undoubled base sum plus
/// one prefix doubling per 1 <= h <= codim-1.
InequalityReport check_filtration(const Geometry& g);

/// Inequality family for a split bundle: all 2^codim subset doublings.
/// Refuses codim > 16.
InequalityReport check_split(const Geometry& g);

/// Curve-case linear form 2(a_1+...+a_h) + (a_{h+1}+...+a_len); agrees with
/// pattern_sum(a, prefix h, p=1) for every a and h. Requires 0 <= h <= len.
Int p1_linear_form(std::span<const Degree> a, int h);

struct Codim2OddReport {
  /// The degree-p sum factors as (a1+a2) times the even-exponent sum.
  bool factored_ok = false;
  /// Passing the split system forces a1+a2, 2a1+a2 and a1+2a2 nonnegative.
  bool implied = false;
};

/// Consequences of the codimension-2, odd-p inequality system. Requires odd
/// p >= 1.
Codim2OddReport codim2_odd_check(Degree a1, Degree a2, int p);

/// Degree condition for a crepant contraction of projective p-space:
/// sum a_i == p + 1.
bool is_crepant(std::span<const Degree> a, int p);

enum class InequalitySystem { filtration, split };

struct CatalogParams {
  int p = 1;
  int codim = 2;
  int bound = 0;
  InequalitySystem system = InequalitySystem::split;
  bool filter_crepant = false;
  bool filter_nonnegative = false;
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// Degree vectors passing the requested inequality system, deduplicated up
/// to reordering by storing only nondecreasing vectors. These are necessary
/// conditions: the catalog is admissible, not certified realizable.
struct AdmissibleCatalog {
  CatalogParams params;
  std::uint64_t candidates = 0;  // nondecreasing vectors examined
  std::vector<std::vector<Degree>> vectors;  // admissible, lexicographic order
};

/// Scans the box [-bound, bound]^codim. Guards: codim <= 6, bound <= 12.
AdmissibleCatalog enumerate_admissible(const CatalogParams& params);

}  // namespace exckit
