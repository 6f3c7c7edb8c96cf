#pragma once

// Arithmetic over the three-element field and a small dense linear-algebra
// kernel (rank, determinant, null space) sized for the block-solving systems.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace witt {

/// An element of GF(3), stored as its canonical residue 0, 1 or 2.
class Scalar {
 public:
  constexpr Scalar() = default;
  /// Reduces any integer modulo 3.
  constexpr Scalar(int value) : value_(static_cast<std::uint8_t>(((value % 3) + 3) % 3)) {}

  constexpr int value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr Scalar operator+(Scalar a, Scalar b) { return Scalar(a.value_ + b.value_); }
  friend constexpr Scalar operator-(Scalar a, Scalar b) { return Scalar(a.value_ + 3 - b.value_); }
  friend constexpr Scalar operator*(Scalar a, Scalar b) { return Scalar(a.value_ * b.value_); }
  constexpr Scalar operator-() const { return Scalar(3 - value_); }
  constexpr Scalar& operator+=(Scalar o) { return *this = *this + o; }
  constexpr Scalar& operator-=(Scalar o) { return *this = *this - o; }
  constexpr Scalar& operator*=(Scalar o) { return *this = *this * o; }

  friend constexpr bool operator==(Scalar, Scalar) = default;
  friend constexpr auto operator<=>(Scalar, Scalar) = default;

 private:
  std::uint8_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Scalar s);

/// Multiplicative inverse. Throws std::domain_error for zero.
Scalar inv(Scalar x);

struct Vec3 {
  std::array<Scalar, 3> coords{};

  constexpr Scalar operator[](std::size_t i) const { return coords[i]; }
  constexpr Scalar& operator[](std::size_t i) { return coords[i]; }
  constexpr bool is_zero() const { return coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero(); }

  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
  }
  friend constexpr Vec3 operator*(Scalar s, const Vec3& v) { return {{s * v[0], s * v[1], s * v[2]}}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
  friend constexpr auto operator<=>(const Vec3&, const Vec3&) = default;
};

constexpr Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::ostream& operator<<(std::ostream& os, const Vec3& v);

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over GF(3). Both dimensions are capped at kMaxDim.
class Mat {
 public:
  static constexpr int kMaxDim = 8;

  Mat(int rows, int cols);
  Mat(int rows, int cols, std::initializer_list<int> entries);
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar operator()(int r, int c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(int r, int c) { return data_[r * cols_ + c]; }

  Vec row(int r) const;
  void set_row(int r, const Vec& values);
  /// Appends a row; the column count must match.
  Mat with_row(const Vec& values) const;

  Vec operator*(const Vec& v) const;
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form and the pivot columns, ascending.
struct Echelon {
  Mat reduced;
  std::vector<int> pivots;
};

Echelon rref(const Mat& m);
int rank(const Mat& m);

/// Basis of { v : m v = 0 }. One vector per free column in ascending order,
/// with that free variable set to 1 and the other free variables 0.
std::vector<Vec> null_space(const Mat& m);

/// Throws std::domain_error for non-square input.
Scalar det(const Mat& m);

}  // namespace witt
