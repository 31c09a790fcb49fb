#include "scattered/linearized.hpp"

#include <string>
#include <utility>

namespace scattered {

LinPoly LinPoly::zero(const TowerCtx& ctx) {
  LinPoly f;
  f.a.fill(ctx.zero());
  return f;
}

LinPoly LinPoly::identity(const TowerCtx& ctx) {
  LinPoly f = zero(ctx);
  f.a[0] = ctx.one();
  return f;
}

bool LinPoly::is_zero() const {
  for (const auto& c : a) {
    if (!c.is_zero()) return false;
  }
  return true;
}

LinPoly operator+(const LinPoly& f, const LinPoly& g) {
  LinPoly h;
  for (std::size_t i = 0; i < 6; ++i) h.a[i] = f.a[i] + g.a[i];
  return h;
}

Elt evaluate(const LinPoly& f, const Elt& x) {
  const TowerCtx& ctx = f.ctx();
  Elt acc = ctx.zero();
  for (unsigned i = 0; i < 6; ++i) {
    if (f.a[i].is_zero()) continue;
    acc += f.a[i] * ctx.frobenius(x, i);
  }
  return acc;
}

Grid dickson(const LinPoly& f) {
  const TowerCtx& ctx = f.ctx();
  Grid m(6, 6, ctx.zero());
  for (unsigned i = 0; i < 6; ++i) {
    for (unsigned j = 0; j < 6; ++j) m(i, j) = ctx.frobenius(f.a[(j + 6 - i) % 6], i);
  }
  return m;
}

namespace {

// Row-reduces `m` in place; returns the rank and the sign/pivot product when square.
std::pair<std::size_t, Elt> eliminate(Grid& m) {
  const TowerCtx& ctx = *m(0, 0).ctx();
  Elt det_acc = ctx.one();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) {
      det_acc = ctx.zero();
      continue;
    }
    if (sel != row) {
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
      det_acc = -det_acc;
    }
    const Elt pivot = m(row, col);
    det_acc *= pivot;
    const Elt pivot_inv = pivot.inv();
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const Elt factor = m(r, col) * pivot_inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    ++row;
  }
  if (row < m.rows()) det_acc = ctx.zero();
  return {row, det_acc};
}

}  // namespace

Elt det(const Grid& m) {
  if (m.rows() != m.cols()) throw MathError(ErrorKind::BadIndex, "determinant of a non-square grid");
  if (m.rows() == 0) throw MathError(ErrorKind::BadIndex, "determinant of an empty grid");
  Grid work = m;
  return eliminate(work).second;
}

std::size_t rank(const Grid& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Grid work = m;
  return eliminate(work).first;
}

Grid submatrix_Mr(const Grid& m, int r) {
  if (m.rows() != 6 || m.cols() != 6) throw MathError(ErrorKind::BadIndex, "expected a 6x6 Dickson matrix");
  if (r < 0 || r > 5) throw MathError(ErrorKind::BadIndex, "r must lie in [0, 5], got " + std::to_string(r));
  const std::size_t k = 6 - static_cast<std::size_t>(r);
  Grid out(k, k, m(0, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j + static_cast<std::size_t>(r));
  }
  return out;
}

int kernel_dim_dickson(const LinPoly& f) {
  const Grid m = dickson(f);
  for (int t = 0; t < 6; ++t) {
    if (!det(submatrix_Mr(m, t)).is_zero()) return t;
  }
  return 6;
}

int kernel_dim_brute(const LinPoly& f) {
  const TowerCtx& ctx = f.ctx();
  const std::uint64_t order = ctx.field_order();
  if (order > kBruteEnumerationLimit) {
    throw MathError(ErrorKind::EnumerationTooLarge, "q^6 = " + std::to_string(order) + " exceeds 2^24");
  }
  std::uint64_t zeros = 0;
  for (std::uint64_t i = 0; i < order; ++i) {
    if (evaluate(f, ctx.from_index(i)).is_zero()) ++zeros;
  }
  int dim = 0;
  std::uint64_t size = 1;
  while (size < zeros) {
    size *= ctx.q();
    ++dim;
  }
  if (size != zeros) {
    throw MathError(ErrorKind::NonSubspaceKernel, "kernel has " + std::to_string(zeros) + " elements");
  }
  return dim;
}

}  // namespace scattered
