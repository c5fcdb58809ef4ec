#include "matchfield/linalg.hpp"

#include <stdexcept>

namespace mf {

std::optional<RatVector> solve_linear_system(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows) throw std::invalid_argument("solve_linear_system: size mismatch");
  const size_t rows = a.rows, cols = a.cols;
  RatMatrix m(rows, cols + 1);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = a.at(r, c);
    m.at(r, cols) = b[r];
  }

  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m.at(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    for (size_t c = col; c <= cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    Rat inv = m.at(row, col);
    for (size_t c = col; c <= cols; ++c) m.at(row, c) /= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (size_t c = col; c <= cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t r = row; r < rows; ++r)
    if (m.at(r, cols) != 0) return std::nullopt;

  RatVector x(cols, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m.at(i, cols);
  return x;
}

size_t rational_rank(RatMatrix a) {
  size_t rank = 0;
  for (size_t col = 0; col < a.cols && rank < a.rows; ++col) {
    size_t sel = rank;
    while (sel < a.rows && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    for (size_t c = 0; c < a.cols; ++c) std::swap(a.at(sel, c), a.at(rank, c));
    for (size_t r = rank + 1; r < a.rows; ++r) {
      if (a.at(r, col) == 0) continue;
      Rat f = a.at(r, col) / a.at(rank, col);
      for (size_t c = col; c < a.cols; ++c) a.at(r, c) -= f * a.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::optional<RatMatrix> invert(const RatMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("invert: matrix must be square");
  const size_t n = a.rows;
  RatMatrix m(n, 2 * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) m.at(r, c) = a.at(r, c);
    m.at(r, n + r) = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t sel = col;
    while (sel < n && m.at(sel, col) == 0) ++sel;
    if (sel == n) return std::nullopt;
    for (size_t c = 0; c < 2 * n; ++c) std::swap(m.at(sel, c), m.at(col, c));
    Rat inv = m.at(col, col);
    for (size_t c = 0; c < 2 * n; ++c) m.at(col, c) /= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (size_t c = 0; c < 2 * n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  RatMatrix out(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) out.at(r, c) = m.at(r, n + c);
  return out;
}

size_t integer_row_rank(std::vector<IntVector> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Int a = rows[rank][col], b = rows[r][col];
      const Int g = boost::multiprecision::gcd(a, b);
      const Int fa = a / g, fb = b / g;
      for (size_t c = col; c < cols; ++c) rows[r][c] = rows[r][c] * fa - rows[rank][c] * fb;
      make_primitive(rows[r]);
    }
    ++rank;
  }
  return rank;
}

void make_primitive(IntVector& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) return;
  int lead_sign = 0;
  for (const Int& x : v) {
    if (x != 0) {
      lead_sign = x > 0 ? 1 : -1;
      break;
    }
  }
  if (lead_sign < 0) g = -g;
  if (g != 1)
    for (Int& x : v) x /= g;
}

IntVector primitive_integer(const RatVector& v) {
  Int denom = 1;
  for (const Rat& q : v)
    denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(q));
  IntVector out;
  out.reserve(v.size());
  for (const Rat& q : v) {
    Rat scaled = q * denom;
    out.push_back(boost::multiprecision::numerator(scaled));
  }
  make_primitive(out);
  return out;
}

}  // namespace mf
