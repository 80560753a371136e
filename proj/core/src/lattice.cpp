#include "hkcones/lattice.hpp"

#include "hkcones/error.hpp"

namespace hkcones {

DivisorClass DivisorClass::basis(std::size_t rank, std::size_t i) {
  DivisorClass e = zero(rank);
  e[i] = Scalar(1);
  return e;
}

bool DivisorClass::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool DivisorClass::is_rational() const {
  for (const auto& c : coords_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (o.size() != size()) fail(ErrorCode::DimensionMismatch, "adding classes of different rank");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (o.size() != size()) fail(ErrorCode::DimensionMismatch, "subtracting classes of different rank");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Scalar& t) {
  for (auto& c : coords_) c *= t;
  return *this;
}

std::string DivisorClass::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += ", ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

NSLattice::NSLattice(Matrix<Rational> gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) fail(ErrorCode::DimensionMismatch, "Gram matrix must be square");
}

bool NSLattice::is_symmetric() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = i + 1; j < rank(); ++j) {
      if (gram_(i, j) != gram_(j, i)) return false;
    }
  }
  return true;
}

Scalar NSLattice::pairing(const DivisorClass& x, const DivisorClass& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    fail(ErrorCode::DimensionMismatch, "pairing of " + x.to_string() + " and " + y.to_string() +
                                           " on a rank " + std::to_string(rank()) + " lattice");
  }
  Scalar total;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i].is_zero()) continue;
    Scalar row;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (gram_(i, j).is_zero() || y[j].is_zero()) continue;
      row += Scalar(gram_(i, j)) * y[j];
    }
    total += x[i] * row;
  }
  return total;
}

std::pair<int, int> NSLattice::signature() const {
  if (!is_symmetric()) fail(ErrorCode::InvalidFixture, "Gram matrix is not symmetric");
  const Inertia in = inertia(gram_);
  if (in.zero > 0) fail(ErrorCode::SingularForm, "Gram matrix is degenerate");
  return {in.positive, in.negative};
}

DivisorClass NSLattice::dual_divisor(const std::vector<Rational>& degrees) const {
  if (degrees.size() != rank()) fail(ErrorCode::DimensionMismatch, "degree vector length");
  auto x = solve_linear(gram_, degrees);
  if (!x) fail(ErrorCode::SingularForm, "Gram matrix is not invertible");
  std::vector<Scalar> coords;
  coords.reserve(rank());
  for (auto& r : *x) coords.emplace_back(std::move(r));
  return DivisorClass(std::move(coords));
}

DivisorClass NSLattice::degrees(const DivisorClass& x) const {
  std::vector<Scalar> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(pairing(DivisorClass::basis(rank(), i), x));
  return DivisorClass(std::move(out));
}

Scalar cross(const DivisorClass& x, const DivisorClass& y) {
  if (x.size() != 2 || y.size() != 2) fail(ErrorCode::RankUnsupported, "orientation needs rank 2");
  return x[0] * y[1] - x[1] * y[0];
}

}  // namespace hkcones
