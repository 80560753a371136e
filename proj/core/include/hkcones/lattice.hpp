#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hkcones/linalg.hpp"
#include "hkcones/scalar.hpp"

namespace hkcones {

/// Coordinates of a real divisor class in the fixed lattice basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  DivisorClass(std::initializer_list<Scalar> coords) : coords_(coords) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<Scalar>(rank)); }
  static DivisorClass basis(std::size_t rank, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_rational() const;

  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Scalar& t);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Scalar& t, DivisorClass a) { return a *= t; }
  friend DivisorClass operator*(DivisorClass a, const Scalar& t) { return a *= t; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  std::string to_string() const;

 private:
  std::vector<Scalar> coords_;
};

/// The Neron-Severi lattice: a symmetric rational Gram matrix in a fixed basis,
/// of hyperbolic signature (1, rank-1) for valid fixtures.
class NSLattice {
 public:
  NSLattice() = default;
  explicit NSLattice(Matrix<Rational> gram);

  std::size_t rank() const noexcept { return gram_.rows(); }
  const Matrix<Rational>& gram() const noexcept { return gram_; }
  bool is_symmetric() const;

  Scalar pairing(const DivisorClass& x, const DivisorClass& y) const;
  Scalar square(const DivisorClass& x) const { return pairing(x, x); }

  /// (positives, negatives); SingularForm when the Gram matrix is degenerate.
  std::pair<int, int> signature() const;

  /// The unique rational class x with pairing(e_i, x) == degrees[i].
  DivisorClass dual_divisor(const std::vector<Rational>& degrees) const;

  /// degrees[i] = pairing(e_i, x): the coordinates of x in the dual basis.
  DivisorClass degrees(const DivisorClass& x) const;

  friend bool operator==(const NSLattice& a, const NSLattice& b) { return a.gram_ == b.gram_; }

 private:
  Matrix<Rational> gram_;
};

/// A curve class stored through its dual divisor: D . C == q(D, dual_divisor).
struct CurveClass {
  DivisorClass dual_divisor;
  std::string label;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

inline Scalar curve_degree(const NSLattice& lattice, const DivisorClass& d, const CurveClass& c) {
  return lattice.pairing(d, c.dual_divisor);
}

/// 2x2 determinant of (x, y); the orientation primitive for rank-2 geometry.
Scalar cross(const DivisorClass& x, const DivisorClass& y);

}  // namespace hkcones
