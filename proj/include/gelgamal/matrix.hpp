#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>

#include "gelgamal/field.hpp"
#include "gelgamal/random.hpp"

namespace gelgamal {

class Polynomial;

/// Dense d x d matrix over Z_p, 2 <= d <= 16.
///
/// Entries are canonical residues held one per byte in a fixed inline
/// buffer, row-major, so matrices are plain values with no heap traffic.
/// The type also represents singular matrices; membership in GL(d, F_p) is
/// checked by the operations that need it.
class Matrix {
 public:
  static constexpr std::size_t kMinDim = 2;
  static constexpr std::size_t kMaxDim = 16;

  /// Zero matrix. Throws ContractViolation for bad dim or non-prime p.
  Matrix(std::size_t dim, std::uint8_t p = kDefaultModulus);

  static Matrix identity(std::size_t dim, std::uint8_t p = kDefaultModulus);
  static Matrix diagonal(std::span<const FieldElement> entries);
  /// Row-major values, each reduced mod p. Size must be dim*dim.
  static Matrix from_values(std::size_t dim, std::span<const std::uint8_t> values,
                            std::uint8_t p = kDefaultModulus);

  std::size_t dim() const noexcept { return dim_; }
  std::uint8_t modulus() const noexcept { return modulus_; }

  /// 0-based row/column.
  FieldElement at(std::size_t row, std::size_t col) const {
    return FieldElement::from_canonical(raw(row, col), modulus_);
  }
  void set(std::size_t row, std::size_t col, FieldElement v);

  std::uint8_t raw(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }
  std::uint8_t& raw(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }

  /// The d*d entries in row-major order.
  std::span<const std::uint8_t> entries() const noexcept { return {data_.data(), std::size_t{dim_} * dim_}; }

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

 private:
  std::array<std::uint8_t, kMaxDim * kMaxDim> data_{};
  std::uint8_t dim_;
  std::uint8_t modulus_;
};

/// Throws ContractViolation unless a and b have the same dimension and modulus.
void require_same_shape(const Matrix& a, const Matrix& b);

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Square-and-multiply; a^0 = I.
Matrix power(const Matrix& a, std::uint64_t e);

/// Gauss-Jordan elimination against an augmented identity, taking the first
/// nonzero pivot down each column. Throws SingularMatrix when det(a) = 0.
Matrix inverse(const Matrix& a);
std::optional<Matrix> try_inverse(const Matrix& a);

FieldElement determinant(const Matrix& a);
FieldElement trace(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Companion matrix of a monic f with deg f = d >= 2: ones on the
/// subdiagonal, last column holding -f_0, ..., -f_{d-1} top to bottom.
/// Its characteristic polynomial is f.
Matrix companion_matrix(const Polynomial& f);

/// Uniform over all d x d matrices.
Matrix random_matrix(RandomSource& rng, std::size_t dim, std::uint8_t p = kDefaultModulus);

/// Uniform over GL(d, F_p) by rejecting singular draws. If `rejections` is
/// non-null the number of discarded singular draws is added to it.
Matrix random_invertible(RandomSource& rng, std::size_t dim, std::uint8_t p = kDefaultModulus,
                         std::uint64_t* rejections = nullptr);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace gelgamal
