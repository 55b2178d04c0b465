#pragma once

// Dense matrices and vectors over any Scalar, with the semiring operations.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "laytrop/error.hpp"
#include "laytrop/scalar.hpp"

namespace laytrop {

template <Scalar S>
using Vector = std::vector<S>;

/// Row-major m×n matrix. A default-constructed entry is the semiring zero.
template <Scalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S::zero()) {}

  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<const S> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const S> entries() const noexcept { return data_; }

  Vector<S> column(std::size_t j) const {
    Vector<S> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <Scalar S>
Matrix<S> identity(std::size_t n) {
  return Matrix<S>::identity(n);
}

template <Scalar S>
Matrix<S> operator+(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix sum of different shapes");
  Matrix<S> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

template <Scalar S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("inner dimensions " + std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                        " differ");
  Matrix<S> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

/// α ⊗ A
template <Scalar S>
Matrix<S> operator*(const S& alpha, const Matrix<S>& a) {
  Matrix<S> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = alpha * a(i, j);
  return r;
}

template <Scalar S>
Vector<S> operator*(const Matrix<S>& a, std::span<const S> x) {
  if (a.cols() != x.size())
    throw ShapeMismatch("matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                        std::to_string(x.size()) + " entries");
  Vector<S> r(a.rows(), S::zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
  return r;
}

template <Scalar S>
Vector<S> operator*(const Matrix<S>& a, const Vector<S>& x) {
  return a * std::span<const S>(x);
}

template <Scalar S>
Matrix<S> mat_add(const Matrix<S>& a, const Matrix<S>& b) {
  return a + b;
}

template <Scalar S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b;
}

template <Scalar S>
Vector<S> mat_vec(const Matrix<S>& a, const Vector<S>& x) {
  return a * x;
}

inline constexpr unsigned kDefaultMaxPower = 64;

/// A^k by iterated multiplication; A^0 is the identity.
template <Scalar S>
Matrix<S> mat_pow(const Matrix<S>& a, unsigned k, unsigned max_power = kDefaultMaxPower) {
  if (!a.is_square()) throw NotSquare("power of a non-square matrix");
  if (k > max_power) throw Error("power " + std::to_string(k) + " exceeds the configured bound");
  Matrix<S> r = Matrix<S>::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

/// p(A) = ⊕_k coeffs[k] ⊗ A^k.
template <Scalar S>
Matrix<S> poly_eval(std::span<const S> coeffs, const Matrix<S>& a) {
  if (!a.is_square()) throw NotSquare("polynomial of a non-square matrix");
  if (coeffs.empty()) throw Error("polynomial needs at least one coefficient");
  Matrix<S> power = Matrix<S>::identity(a.rows());
  Matrix<S> sum(a.rows(), a.cols());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) power = power * a;
    sum = sum + coeffs[k] * power;
  }
  return sum;
}

template <Scalar S>
Matrix<S> poly_eval(const std::vector<S>& coeffs, const Matrix<S>& a) {
  return poly_eval(std::span<const S>(coeffs), a);
}

template <Scalar S>
Matrix<Trop> modulus(const Matrix<S>& a) {
  Matrix<Trop> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = modulus(a(i, j));
  return r;
}

template <Scalar S>
Vector<Trop> modulus(const Vector<S>& x) {
  Vector<Trop> r;
  r.reserve(x.size());
  for (const auto& v : x) r.push_back(modulus(v));
  return r;
}

/// Componentwise u ≤ v.
inline bool dominated(std::span<const Trop> u, std::span<const Trop> v) {
  if (u.size() != v.size()) throw ShapeMismatch("comparing vectors of different length");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

}  // namespace laytrop
