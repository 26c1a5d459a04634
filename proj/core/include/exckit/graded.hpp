#pragma once

#include <exckit/arith.hpp>
#include <exckit/compositions.hpp>

#include <map>
#include <span>
#include <vector>

namespace exckit {

/// Ambient dimension n, exceptional-set dimension p, and the conormal twist
/// degrees a_1..a_{n-p}. Sign convention: a holds conormal degrees, so the
/// split normal bundle is the direct sum of O(-a_i); callers starting from
/// normal-bundle degrees must negate.
struct Geometry {
  int n = 0;
  int p = 0;
  std::vector<Degree> conormal_degrees;

  Geometry(int n_, int p_, std::vector<Degree> a);
  int codim() const { return n - p; }
};

/// Finite formal sum of line-bundle twists O(d) with positive multiplicities.
class TwistMultiset {
 public:
  void add(Degree twist) { add(twist, 1); }
  void add(Degree twist, const Int& count);
  TwistMultiset& operator+=(const TwistMultiset& other);

  Int length() const;
  const std::map<Degree, Int>& entries() const { return mult_; }
  bool empty() const { return mult_.empty(); }

  bool operator==(const TwistMultiset&) const = default;

 private:
  std::map<Degree, Int> mult_;
};

enum class Parity { even, odd };

/// S^r of a split bundle with the given twist degrees: one summand
/// O(sum_i m_i d_i) per composition m of r.
TwistMultiset symmetric_power(std::span<const Degree> twists, int r);

/// Degree-additive convolution of multiplicities.
TwistMultiset tensor_product(const TwistMultiset& x, const TwistMultiset& y);

/// Graded piece of the r-th ideal power: one twist per composition of r in
/// the conormal degrees.
TwistMultiset ideal_power_graded_piece(const Geometry& g, int r);

/// Graded piece for the intermediate ideal at filtration step h: twists
/// indexed by the weight-(1,2) compositions of 2r (even level, piece below
/// the ideal) or 2r+1 (odd level, piece above the next power).
/// Requires 1 <= h <= codim-1.
TwistMultiset weighted_graded_piece(const Geometry& g, int h, int r, Parity level);

/// Length plus the Chern classes c_1..c_p, i.e. the elementary symmetric
/// functions of the twist degrees taken with multiplicity.
struct NumericalClass {
  Int length;
  std::vector<Int> chern;

  bool operator==(const NumericalClass&) const = default;
};

NumericalClass numerical_class(const TwistMultiset& x, int p);

}  // namespace exckit
