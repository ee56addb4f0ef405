#include "gelgamal/matrix.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <string>
#include <utility>

#include "gelgamal/errors.hpp"
#include "gelgamal/polynomial.hpp"

namespace gelgamal {

namespace {

void require_dim(std::size_t dim) {
  if (dim < Matrix::kMinDim || dim > Matrix::kMaxDim) {
    throw ContractViolation("matrix dimension " + std::to_string(dim) + " outside [2, 16]");
  }
}

// Row-reduces `work` in place (optionally mirroring row operations onto
// `mirror`) to reduced row echelon form. Returns the determinant of the
// original `work`; zero means elimination stopped at a missing pivot.
std::uint8_t eliminate(Matrix& work, Matrix* mirror) {
  const std::size_t d = work.dim();
  const std::uint8_t p = work.modulus();
  std::uint8_t det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && work.raw(pivot, col) == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < d; ++j) {
        std::swap(work.raw(pivot, j), work.raw(col, j));
        if (mirror) std::swap(mirror->raw(pivot, j), mirror->raw(col, j));
      }
      det = sub_mod(0, det, p);
    }
    const std::uint8_t pv = work.raw(col, col);
    det = mul_mod(det, pv, p);
    const std::uint8_t scale = inv_mod(pv, p);
    for (std::size_t j = 0; j < d; ++j) {
      work.raw(col, j) = mul_mod(work.raw(col, j), scale, p);
      if (mirror) mirror->raw(col, j) = mul_mod(mirror->raw(col, j), scale, p);
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const std::uint8_t f = work.raw(r, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        work.raw(r, j) = sub_mod(work.raw(r, j), mul_mod(f, work.raw(col, j), p), p);
        if (mirror) mirror->raw(r, j) = sub_mod(mirror->raw(r, j), mul_mod(f, mirror->raw(col, j), p), p);
      }
    }
  }
  return det;
}

}  // namespace

Matrix::Matrix(std::size_t dim, std::uint8_t p)
    : dim_(static_cast<std::uint8_t>(dim)), modulus_(p) {
  require_dim(dim);
  require_prime_modulus(p);
}

Matrix Matrix::identity(std::size_t dim, std::uint8_t p) {
  Matrix m(dim, p);
  for (std::size_t i = 0; i < dim; ++i) m.raw(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const FieldElement> entries) {
  if (entries.empty()) throw ContractViolation("diagonal: no entries");
  Matrix m(entries.size(), entries.front().modulus());
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

Matrix Matrix::from_values(std::size_t dim, std::span<const std::uint8_t> values, std::uint8_t p) {
  Matrix m(dim, p);
  if (values.size() != dim * dim) {
    throw ContractViolation("from_values: expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) m.data_[i] = static_cast<std::uint8_t>(values[i] % p);
  return m;
}

void Matrix::set(std::size_t row, std::size_t col, FieldElement v) {
  if (v.modulus() != modulus_) throw ContractViolation("entry modulus differs from matrix modulus");
  raw(row, col) = v.value();
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
  return a.dim_ == b.dim_ && a.modulus_ == b.modulus_ &&
         std::equal(a.entries().begin(), a.entries().end(), b.entries().begin());
}

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus()) {
    throw ContractViolation("matrix shape mismatch: " + std::to_string(a.dim()) + "x" +
                            std::to_string(a.dim()) + " mod " + std::to_string(a.modulus()) + " vs " +
                            std::to_string(b.dim()) + "x" + std::to_string(b.dim()) + " mod " +
                            std::to_string(b.modulus()));
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  const std::size_t d = a.dim();
  const unsigned p = a.modulus();
  Matrix c(d, a.modulus());
  // 16 * 250 * 250 < 2^32, so a whole row-column dot product fits before reducing.
  for (std::size_t i = 0; i < d; ++i) {
    std::uint32_t acc[Matrix::kMaxDim] = {};
    for (std::size_t k = 0; k < d; ++k) {
      const std::uint32_t aik = a.raw(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < d; ++j) acc[j] += aik * b.raw(k, j);
    }
    for (std::size_t j = 0; j < d; ++j) c.raw(i, j) = static_cast<std::uint8_t>(acc[j] % p);
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c(a.dim(), a.modulus());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c.raw(i, j) = add_mod(a.raw(i, j), b.raw(i, j), a.modulus());
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c(a.dim(), a.modulus());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c.raw(i, j) = sub_mod(a.raw(i, j), b.raw(i, j), a.modulus());
  return c;
}

Matrix power(const Matrix& a, std::uint64_t e) {
  Matrix result = Matrix::identity(a.dim(), a.modulus());
  Matrix base = a;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
  Matrix work = a;
  Matrix inv = Matrix::identity(a.dim(), a.modulus());
  if (eliminate(work, &inv) == 0) return std::nullopt;
  return inv;
}

Matrix inverse(const Matrix& a) {
  auto inv = try_inverse(a);
  if (!inv) throw SingularMatrix("matrix is singular (determinant is zero)");
  return *std::move(inv);
}

FieldElement determinant(const Matrix& a) {
  Matrix work = a;
  return FieldElement::from_canonical(eliminate(work, nullptr), a.modulus());
}

FieldElement trace(const Matrix& a) {
  std::uint8_t t = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) t = add_mod(t, a.raw(i, i), a.modulus());
  return FieldElement::from_canonical(t, a.modulus());
}

bool is_invertible(const Matrix& a) { return !determinant(a).is_zero(); }

Matrix companion_matrix(const Polynomial& f) {
  if (!f.is_monic()) throw ContractViolation("companion_matrix: polynomial must be monic");
  const int deg = f.degree();
  if (deg < 2) throw ContractViolation("companion_matrix: degree must be at least 2");
  const auto d = static_cast<std::size_t>(deg);
  const std::uint8_t p = f.modulus();
  Matrix c(d, p);
  for (std::size_t i = 1; i < d; ++i) c.raw(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c.raw(i, d - 1) = sub_mod(0, f.coeff(i), p);
  return c;
}

Matrix random_matrix(RandomSource& rng, std::size_t dim, std::uint8_t p) {
  Matrix m(dim, p);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.raw(i, j) = rng.uniform_residue(p).value();
  return m;
}

Matrix random_invertible(RandomSource& rng, std::size_t dim, std::uint8_t p, std::uint64_t* rejections) {
  for (;;) {
    Matrix m = random_matrix(rng, dim, p);
    if (is_invertible(m)) return m;
    if (rejections) ++*rejections;
  }
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      os << (j == 0 ? "" : " ") << std::setw(3) << unsigned{m.raw(i, j)};
    }
    os << '\n';
  }
  return os;
}

}  // namespace gelgamal
