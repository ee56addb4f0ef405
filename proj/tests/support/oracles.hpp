#pragma once

// Slow, independent reimplementations used as test oracles. Nothing here
// calls into the library's arithmetic beyond reading entries.

#include <cstdint>
#include <vector>

#include "gelgamal/matrix.hpp"

namespace oracle {

using Dense = std::vector<std::vector<long>>;
using Poly = std::vector<long>;  // low to high, not trimmed

inline long mod(long v, long p) { return ((v % p) + p) % p; }

inline Dense to_dense(const gelgamal::Matrix& m) {
  Dense out(m.dim(), std::vector<long>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out[r][c] = m.raw(r, c);
  return out;
}

inline gelgamal::Matrix from_dense(const Dense& a, std::uint8_t p) {
  std::vector<std::uint8_t> v;
  for (const auto& row : a)
    for (long x : row) v.push_back(static_cast<std::uint8_t>(mod(x, p)));
  return gelgamal::Matrix::from_values(a.size(), v, p);
}

inline Dense mul(const Dense& a, const Dense& b, long p) {
  const std::size_t d = a.size();
  Dense out(d, std::vector<long>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < d; ++k) s += a[i][k] * b[k][j];
      out[i][j] = mod(s, p);
    }
  return out;
}

inline long det2(const Dense& a, long p) { return mod(a[0][0] * a[1][1] - a[0][1] * a[1][0], p); }

// Every d x d matrix over F_p, in lexicographic order of the row-major entries.
inline std::vector<gelgamal::Matrix> all_matrices(std::size_t d, std::uint8_t p) {
  std::vector<gelgamal::Matrix> out;
  std::vector<std::uint8_t> v(d * d, 0);
  while (true) {
    out.push_back(gelgamal::Matrix::from_values(d, v, p));
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == p) v[i++] = 0;
    if (i == v.size()) break;
  }
  return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b, long p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  return out;
}

inline Poly poly_add(Poly a, const Poly& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] + b[i], p);
  return a;
}

// det(xI - C) by expansion over permutations, memoised on the set of used
// columns (row i is placed at column j with sign from the used columns right of j).
inline Poly char_poly(const gelgamal::Matrix& c) {
  const std::size_t d = c.dim();
  const long p = c.modulus();
  std::vector<Poly> f(std::size_t{1} << d, Poly{0});
  f[0] = Poly{1};
  for (std::size_t mask = 0; mask < f.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row >= d) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      Poly entry{mod(-static_cast<long>(c.raw(row, j)), p)};
      if (row == j) entry.push_back(1);
      const auto above = static_cast<unsigned>(__builtin_popcountll(mask >> (j + 1)));
      Poly term = poly_mul(f[mask], entry, p);
      if (above % 2) for (long& t : term) t = mod(-t, p);
      f[mask | (std::size_t{1} << j)] = poly_add(f[mask | (std::size_t{1} << j)], term, p);
    }
  }
  Poly out = f.back();
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// Remainder of a modulo a monic b, by schoolbook long division.
inline Poly poly_rem_monic(Poly a, const Poly& b, long p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const long lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
    a.pop_back();
  }
  return a;
}

// Monic f irreducible iff no monic polynomial of degree 1..deg/2 divides it.
inline bool irreducible_by_trial_division(const Poly& f, long p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    Poly g(k + 1, 0);
    g[k] = 1;
    while (true) {
      const Poly r = poly_rem_monic(f, g, p);
      bool zero = true;
      for (long x : r) zero = zero && x == 0;
      if (zero) return false;
      std::size_t i = 0;
      while (i < k && ++g[i] == p) g[i++] = 0;
      if (i == k) break;
    }
  }
  return true;
}

// Every monic polynomial of degree d over F_p.
inline std::vector<Poly> all_monic(std::size_t d, long p) {
  std::vector<Poly> out;
  Poly f(d + 1, 0);
  f[d] = 1;
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < d && ++f[i] == p) f[i++] = 0;
    if (i == d) break;
  }
  return out;
}

inline unsigned long count_irreducible_exhaustive(std::size_t d, long p) {
  unsigned long n = 0;
  for (const Poly& f : all_monic(d, p)) n += irreducible_by_trial_division(f, p) ? 1 : 0;
  return n;
}

// Smallest k >= 1 with a^k = I, by repeated multiplication. Gives up after `limit`.
inline std::uint64_t order_by_powering(const gelgamal::Matrix& a, std::uint64_t limit) {
  const long p = a.modulus();
  const Dense start = to_dense(a);
  Dense cur = start;
  Dense id(a.dim(), std::vector<long>(a.dim(), 0));
  for (std::size_t i = 0; i < a.dim(); ++i) id[i][i] = 1;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (cur == id) return k;
    cur = mul(cur, start, p);
  }
  return 0;
}

}  // namespace oracle
