#ifndef SCATTERED_LINEARIZED_HPP
#define SCATTERED_LINEARIZED_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "scattered/field_tower.hpp"

namespace scattered {

/// Dense row-major matrix of field elements.
class Grid {
 public:
  Grid(std::size_t rows, std::size_t cols, const Elt& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elt> data_;
};

/// f(x) = sum_{i<6} a[i] x^{q^i} over F_{q^6}.
struct LinPoly {
  std::array<Elt, 6> a;

  static LinPoly zero(const TowerCtx& ctx);
  static LinPoly identity(const TowerCtx& ctx);
  static LinPoly from_coeffs(const std::array<Elt, 6>& coeffs) { return LinPoly{coeffs}; }

  const TowerCtx& ctx() const { return *a[0].ctx(); }
  bool is_zero() const;

  friend LinPoly operator+(const LinPoly& f, const LinPoly& g);
  friend bool operator==(const LinPoly&, const LinPoly&) = default;
};

Elt evaluate(const LinPoly& f, const Elt& x);

/// Entry (i, j) = a_{(j - i) mod 6}^{q^i}.
Grid dickson(const LinPoly& f);

/// Determinant by Gaussian elimination; the grid must be square.
Elt det(const Grid& m);

/// Rank by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(const Grid& m);

/// First 6 - r rows and last 6 - r columns, 0 <= r <= 5.
Grid submatrix_Mr(const Grid& m, int r);

/// Smallest t with det M_t != 0; 6 when every minor vanishes (the zero map).
int kernel_dim_dickson(const LinPoly& f);

/// log_q |ker f| by enumerating F_{q^6}; requires q^6 <= 2^24.
int kernel_dim_brute(const LinPoly& f);

inline constexpr std::uint64_t kBruteEnumerationLimit = std::uint64_t{1} << 24;

}  // namespace scattered

#endif  // SCATTERED_LINEARIZED_HPP
