#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation receives input outside its mathematical domain
/// (zero vectors, dependent tuples, non-pointed cones, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An integer point of a lattice Z^r. Also used for integral covectors in
/// the dual lattice M, where the pairing is the ordinary dot product.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  /// gcd of the coordinates (0 for the zero vector).
  Integer content() const;
  bool is_primitive() const { return content() == 1; }

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& k);
  LatticeVector operator-() const;

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& k, LatticeVector a) { return a *= k; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

Integer dot(const LatticeVector& m, const LatticeVector& n);

/// An element of M_Q = M (x) Q. Pairings with lattice vectors are exact.
class Covector {
 public:
  Covector() = default;
  explicit Covector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  explicit Covector(const LatticeVector& integral);

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  Rational pair(const LatticeVector& n) const;
  /// Least k >= 1 with k * m integral.
  Integer denominator() const;
  bool is_integral() const { return denominator() == 1; }
  /// k * m for k = denominator(); throws if the result would not be integral.
  LatticeVector scaled_to_integral() const;

  friend bool operator==(const Covector& a, const Covector& b) { return a.coords_ == b.coords_; }
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector col(std::size_t j) const;
  IntMatrix transposed() const;
  /// M * v with v a column vector.
  LatticeVector apply(const LatticeVector& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer determinant(const IntMatrix& a);
/// Exact inverse of a unimodular matrix; throws DomainError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

LatticeVector primitive(const LatticeVector& v);

/// Row-style Hermite normal form: h = u * a with u unimodular, h in row
/// echelon form with positive pivots and entries above each pivot reduced
/// into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};
HermiteForm hermite_normal_form(const IntMatrix& a);

/// Smith normal form: p * a * q = d, with p and q unimodular and the
/// nonzero diagonal entries d_1 | d_2 | ... positive.
struct SmithForm {
  IntMatrix d;
  IntMatrix p;
  IntMatrix q;
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors() const;
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Index of the subgroup generated by vs inside the lattice induced on
/// their linear span.
Integer lattice_determinant(std::span<const LatticeVector> vs);

std::size_t rank_of(std::span<const LatticeVector> vs);

/// A lattice basis of lin(vs) cap Z^r together with the unimodular
/// coordinate change that sends the span onto the first `dim` coordinates.
struct SpanLattice {
  std::size_t dim = 0;
  /// Rows 0..dim-1 form a basis of the saturated span; all rows form a basis of Z^r.
  IntMatrix basis;
  /// Column j is the coordinate functional for basis row j: coords = x * to_coords.
  IntMatrix to_coords;

  LatticeVector coordinates(const LatticeVector& x) const;  // first dim entries
  LatticeVector lift(const LatticeVector& c) const;         // inverse of coordinates on the span
  /// Lifts a functional given in span coordinates to M.
  LatticeVector lift_functional(const LatticeVector& a) const;
  /// Functionals vanishing on the span (a basis of its orthogonal in M).
  std::vector<LatticeVector> orthogonal() const;
};
SpanLattice span_lattice(std::span<const LatticeVector> vs, std::size_t rank);

/// Primitive integral normal of d-1 vectors in Z^d (generalised cross
/// product); zero if they are dependent.
LatticeVector normal_vector(std::span<const LatticeVector> vs);

/// Particular rational solution of rows * x = rhs, if one exists.
std::optional<std::vector<Rational>> solve_rational(std::span<const LatticeVector> rows,
                                                    std::span<const Rational> rhs);

/// Basis of the integer kernel {x in Z^n : a x = 0}.
std::vector<LatticeVector> integer_kernel(const IntMatrix& a);

}  // namespace toric
