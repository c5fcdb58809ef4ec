#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace mf {

/// Exponent matrix of a monomial in K[x_ij], 1 <= i <= n-1, 1 <= j <= n.
struct ExponentMatrix {
  int n = 0;
  std::vector<int> e;  // (n-1) x n, row-major

  static ExponentMatrix zero(int n) {
    ExponentMatrix m;
    m.n = n;
    m.e.assign(static_cast<size_t>(n - 1) * n, 0);
    return m;
  }

  /// x_{1,c[0]} x_{2,c[1]} ... for a matching-field-arranged column c.
  static ExponentMatrix of_column(int n, const std::vector<int>& arranged) {
    ExponentMatrix m = zero(n);
    for (size_t r = 0; r < arranged.size(); ++r) m.at(static_cast<int>(r) + 1, arranged[r]) += 1;
    return m;
  }

  int& at(int row, int col) { return e[static_cast<size_t>(row - 1) * n + (col - 1)]; }
  int at(int row, int col) const { return e[static_cast<size_t>(row - 1) * n + (col - 1)]; }

  ExponentMatrix& operator+=(const ExponentMatrix& o) {
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
    return *this;
  }

  int total_degree() const {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }

  std::string to_string() const {
    std::string s;
    for (int r = 1; r <= n - 1; ++r)
      for (int c = 1; c <= n; ++c)
        for (int k = 0; k < at(r, c); ++k)
          s += "x" + std::to_string(r) + std::to_string(c);
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
  auto operator<=>(const ExponentMatrix&) const = default;
};

struct ExponentMatrixHash {
  size_t operator()(const ExponentMatrix& m) const {
    size_t h = std::hash<int>()(m.n);
    for (int v : m.e) h = h * 1000003u + static_cast<size_t>(v) + 0x9e3779b9u;
    return h;
  }
};

}  // namespace mf
