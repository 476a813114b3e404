#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "chevalley/error.hpp"
#include "chevalley/rational.hpp"

namespace chevalley {

/// Dense square matrix over an exact field.  Products skip zero entries,
/// which keeps root elements and torus elements cheap to multiply.
template <class Field>
class Matrix {
 public:
  using Element = typename Field::Element;

  Matrix(const Field& field, std::size_t n) : field_(field), n_(n), data_(n * n, field.zero()) {}

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t size() const { return n_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  bool is_identity() const {
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        const Element& x = (*this)(r, c);
        if (r == c ? !x.is_one() : !x.is_zero()) return false;
      }
    }
    return true;
  }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (r != c && !(*this)(r, c).is_zero()) return false;
      }
    }
    return true;
  }

  Element trace() const {
    Element total = field_.zero();
    for (std::size_t i = 0; i < n_; ++i) total += (*this)(i, i);
    return total;
  }

  Matrix map(const std::function<Element(const Element&)>& f) const {
    Matrix out(field_, n_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k]);
    return out;
  }

  /// Gauss-Jordan elimination.  Throws SingularMatrix.
  Matrix inverse() const {
    Matrix a = *this;
    Matrix inv = identity(field_, n_);
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && a(pivot, col).is_zero()) ++pivot;
      if (pivot == n_) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
      if (pivot != col) {
        for (std::size_t c = 0; c < n_; ++c) {
          std::swap(a(pivot, c), a(col, c));
          std::swap(inv(pivot, c), inv(col, c));
        }
      }
      const Element scale = a(col, col).inverse();
      if (!scale.is_one()) {
        for (std::size_t c = 0; c < n_; ++c) {
          if (!a(col, c).is_zero()) a(col, c) *= scale;
          if (!inv(col, c).is_zero()) inv(col, c) *= scale;
        }
      }
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        const Element factor = a(r, col);
        for (std::size_t c = 0; c < n_; ++c) {
          if (!a(col, c).is_zero()) a(r, c) -= factor * a(col, c);
          if (!inv(col, c).is_zero()) inv(r, c) -= factor * inv(col, c);
        }
      }
    }
    return inv;
  }

  Matrix& operator*=(const Element& s) {
    for (auto& x : data_) {
      if (!x.is_zero()) x *= s;
    }
    return *this;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::FieldMismatch, "matrix sizes differ");
    if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, a.field_.name() + " vs " + b.field_.name());
    Matrix out(a.field_, a.n_);
    const std::size_t n = a.n_;
    for (std::size_t i = 0; i < n; ++i) {
      Element* row = &out.data_[i * n];
      for (std::size_t k = 0; k < n; ++k) {
        const Element& x = a.data_[i * n + k];
        if (x.is_zero()) continue;
        const Element* brow = &b.data_[k * n];
        if (x.is_one()) {
          for (std::size_t j = 0; j < n; ++j) {
            if (!brow[j].is_zero()) row[j] += brow[j];
          }
        } else {
          for (std::size_t j = 0; j < n; ++j) {
            if (!brow[j].is_zero()) row[j] += x * brow[j];
          }
        }
      }
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  /// Coefficients of det(X·1 - M), constant term first (Faddeev-LeVerrier).
  std::vector<Element> characteristic_polynomial() const {
    std::vector<Element> c(n_ + 1, field_.zero());
    c[n_] = field_.one();
    Matrix product(field_, n_);  // M·M_{k-1}, with M_0 = 0
    for (std::size_t k = 1; k <= n_; ++k) {
      for (std::size_t i = 0; i < n_; ++i) product(i, i) += c[n_ - k + 1];
      product = *this * product;
      c[n_ - k] = product.trace() * field_.from_rational(Rational(Integer(-1), Integer(static_cast<long>(k))));
    }
    return c;
  }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Element> data_;
};

}  // namespace chevalley
