#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <ostream>
#include <vector>

#include "framedcob/errors.hpp"

namespace framedcob {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact entries.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("IntMatrix: ragged initializer");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw InputError("IntMatrix product: dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const BigInt& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
      }
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithDecomposition {
  IntMatrix d;  // diagonal, d_1 | d_2 | ..., all >= 0
  IntMatrix u;  // rows x rows unimodular
  IntMatrix v;  // cols x cols unimodular, d = u * a * v

  /// Nonzero diagonal entries in order.
  std::vector<BigInt> invariant_factors() const {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
      if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
  }

  std::size_t rank() const { return invariant_factors().size(); }
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] += k * row[source]
inline void add_row(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += k * m(source, j);
}

inline void add_col(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += k * m(i, source);
}

inline void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

} // namespace detail

/// Smith normal form with transforms. Pivot is always the entry of smallest
/// nonzero absolute value in the remaining block (first in row-major order on
/// ties), so the output is deterministic.
inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  using detail::add_col;
  using detail::add_row;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  // Row ops are mirrored on u, column ops on v, so u*a*v == d throughout.
  auto row_swap = [&](std::size_t x, std::size_t y) {
    detail::swap_rows(d, x, y);
    detail::swap_rows(u, x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    detail::swap_cols(d, x, y);
    detail::swap_cols(v, x, y);
  };
  auto row_add = [&](std::size_t t, std::size_t s, const BigInt& k) {
    add_row(d, t, s, k);
    add_row(u, t, s, k);
  };
  auto col_add = [&](std::size_t t, std::size_t s, const BigInt& k) {
    add_col(d, t, s, k);
    add_col(v, t, s, k);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // smallest nonzero |entry| in the block [t.., t..]
      bool found = false;
      std::size_t pi = t, pj = t;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          BigInt mag = abs(d(i, j));
          if (!found || mag < best) {
            found = true;
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (!found) break;
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = true;
      const BigInt p = d(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / p;  // truncating; remainder strictly smaller than |p|
        row_add(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / p;
        col_add(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder becomes the next pivot

      // enforce divisibility of the remaining block by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % p != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      detail::negate_row(d, t);
      detail::negate_row(u, t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

} // namespace framedcob
