#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "knotmeta/exactalg.hpp"

namespace knotmeta {

/// Dense integer matrix, row-major.
class IntMat {
 public:
  IntMat(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument on ragged or empty input.
  static IntMat from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  IntMat transpose() const;
  std::vector<std::vector<Int>> to_rows() const;

  friend IntMat operator+(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a, const IntMat& b);
  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for a non-square matrix.
Int det(const IntMat& m);

/// U * W * Vt = D with U, Vt unimodular and D = diag(d_1, ..., d_n),
/// d_i >= 0, d_i | d_{i+1}.
struct SnfResult {
  IntMat U;
  IntMat D;
  IntMat Vt;

  std::vector<Int> diagonal() const;
};

SnfResult smith_normal_form(const IntMat& w);

/// A point of (Q/Z)^n: each entry is a rational in [0, 1) standing for the
/// rotation number theta / 2pi of a root of unity.
class RotationVector {
 public:
  RotationVector() = default;
  /// Entries are reduced into [0, 1).
  explicit RotationVector(std::vector<Rat> thetas);

  const std::vector<Rat>& thetas() const { return t_; }
  std::size_t size() const { return t_.size(); }
  const Rat& operator[](std::size_t i) const { return t_[i]; }

  bool is_zero() const;
  /// theta -> -theta mod 1.
  RotationVector negated() const;
  /// lcm of the denominators.
  Int order() const;

  friend bool operator==(const RotationVector& a, const RotationVector& b) { return a.t_ == b.t_; }
  friend std::strong_ordering operator<=>(const RotationVector& a, const RotationVector& b);

  std::string to_string() const;

 private:
  std::vector<Rat> t_;
};

/// All theta in (Q/Z)^n with W * theta = 0 mod 1, in lexicographic order.
/// The count is |det W|. Throws MathError when det W = 0.
std::vector<RotationVector> torsion_solutions(const IntMat& w);

/// Row-by-row check of W * theta = 0 mod 1; returns the first failing row
/// index or -1.
long first_nonintegral_row(const IntMat& w, const RotationVector& theta);

}  // namespace knotmeta
