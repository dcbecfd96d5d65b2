#ifndef ESDGMHD_TYPES_HPP
#define ESDGMHD_TYPES_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace esdg {

/// One nodal value of the 9-component system (rho, rho*v, E, B, psi).
using Vec9 = std::array<double, 9>;

using Mat9 = std::array<std::array<double, 9>, 9>;

// component indices of the 9-vector
inline constexpr int kRho = 0;
inline constexpr int kMomX = 1;
inline constexpr int kMomY = 2;
inline constexpr int kMomZ = 3;
inline constexpr int kEnergy = 4;
inline constexpr int kMagX = 5;
inline constexpr int kMagY = 6;
inline constexpr int kMagZ = 7;
inline constexpr int kPsi = 8;

inline Vec9 operator+(const Vec9& a, const Vec9& b) {
  Vec9 r;
  for (int c = 0; c < 9; ++c) r[c] = a[c] + b[c];
  return r;
}

inline Vec9 operator-(const Vec9& a, const Vec9& b) {
  Vec9 r;
  for (int c = 0; c < 9; ++c) r[c] = a[c] - b[c];
  return r;
}

inline Vec9 operator*(double s, const Vec9& a) {
  Vec9 r;
  for (int c = 0; c < 9; ++c) r[c] = s * a[c];
  return r;
}

inline void axpy(double s, const Vec9& x, Vec9& y) {
  for (int c = 0; c < 9; ++c) y[c] += s * x[c];
}

inline double dot(const Vec9& a, const Vec9& b) {
  double r = 0.0;
  for (int c = 0; c < 9; ++c) r += a[c] * b[c];
  return r;
}

inline Vec9 matvec(const Mat9& m, const Vec9& x) {
  Vec9 r{};
  for (int i = 0; i < 9; ++i) {
    double s = 0.0;
    for (int j = 0; j < 9; ++j) s += m[i][j] * x[j];
    r[i] = s;
  }
  return r;
}

/// Swaps the x/y roles of a state or flux vector: components 1<->2 and 5<->6.
/// The y-direction kernels of every Cartesian flux are the x-direction ones
/// conjugated by this permutation.
inline Vec9 swap_xy(const Vec9& a) {
  Vec9 r = a;
  r[kMomX] = a[kMomY];
  r[kMomY] = a[kMomX];
  r[kMagX] = a[kMagY];
  r[kMagY] = a[kMagX];
  return r;
}

/// Minimal dense row-major matrix used for the collocation operators.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

}  // namespace esdg

#endif
