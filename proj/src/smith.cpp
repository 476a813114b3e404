#include "chevalley/smith.hpp"

#include <utility>

#include "chevalley/error.hpp"

namespace chevalley {

IntMatrix::IntMatrix(const std::vector<std::vector<int>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()), data_(rows_ * cols_) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) throw Error(ErrorKind::ParseError, "ragged integer matrix");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = rows[r][c];
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

std::vector<Integer> IntMatrix::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) out.push_back((*this)(i, i));
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += (*this)(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::NotSquare, "matrix shapes do not compose");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

namespace {

// Truncating quotient: |a - q*b| < |b|.
Integer truncated_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = out.d;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = k; r < rows; ++r) {
        for (std::size_t c = k; c < cols; ++c) {
          if (d(r, c) == 0) continue;
          if (pr == rows || abs(d(r, c)) < abs(d(pr, pc))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) break;  // trailing block is zero
      d.swap_rows(k, pr);
      u.swap_rows(k, pr);
      d.swap_cols(k, pc);
      v.swap_cols(k, pc);

      bool clean = true;
      for (std::size_t r = k + 1; r < rows; ++r) {
        if (d(r, k) == 0) continue;
        const Integer q = truncated_quotient(d(r, k), d(k, k));
        d.add_row(r, k, -q);
        u.add_row(r, k, -q);
        if (d(r, k) != 0) clean = false;
      }
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (d(k, c) == 0) continue;
        const Integer q = truncated_quotient(d(k, c), d(k, k));
        d.add_col(c, k, -q);
        v.add_col(c, k, -q);
        if (d(k, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any entry not divisible by the pivot into row k.
      std::size_t bad_row = rows;
      for (std::size_t r = k + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = k + 1; c < cols; ++c) {
          if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(k, k).get_mpz_t())) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      d.add_row(k, bad_row, 1);
      u.add_row(k, bad_row, 1);
    }
    if (d(k, k) < 0) {
      d.negate_row(k);
      u.negate_row(k);
    }
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NotSquare,
                "determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer value = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = value;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace chevalley
