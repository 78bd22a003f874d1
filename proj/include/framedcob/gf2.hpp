#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "framedcob/errors.hpp"

namespace framedcob {

/// Fixed-length vector over GF(2), packed 64 bits per word.
class BitVector {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b & 1);
  }

  static BitVector from_bits(const std::vector<int>& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] & 1);
    return v;
  }

  // Low `size` bits of an integer, bit i -> component i.
  static BitVector from_mask(std::uint64_t mask, std::size_t size) {
    BitVector v(size);
    for (std::size_t i = 0; i < size && i < word_bits; ++i) v.set(i, (mask >> i) & 1u);
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
  bool operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, bool value) {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value)
      words_[i / word_bits] |= mask;
    else
      words_[i / word_bits] &= ~mask;
  }

  void flip(std::size_t i) { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

  BitVector& operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator+(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  /// Standard inner product mod 2.
  bool dot(const BitVector& other) const {
    check_same_size(other);
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (word_type w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
  }
  bool any() const { return !none(); }

  // Index of the lowest set bit, or size() when zero.
  std::size_t first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  std::vector<int> to_bits() const {
    std::vector<int> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = get(i);
    return out;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s += get(i) ? '1' : '0';
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

private:
  void check_same_size(const BitVector& other) const {
    if (other.size_ != size_) throw InputError("BitVector size mismatch");
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// Dense matrix over GF(2) stored as bit-packed rows.
class Gf2Matrix {
public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("Gf2Matrix: ragged initializer");
      BitVector row(cols_);
      std::size_t j = 0;
      for (int b : r) row.set(j++, b & 1);
      rows_.push_back(std::move(row));
    }
  }

  static Gf2Matrix identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static Gf2Matrix from_rows(std::vector<BitVector> rows, std::size_t cols) {
    Gf2Matrix m;
    m.cols_ = cols;
    for (const auto& r : rows)
      if (r.size() != cols) throw InputError("Gf2Matrix: row length mismatch");
    m.rows_ = std::move(rows);
    return m;
  }

  static Gf2Matrix from_columns(const std::vector<BitVector>& columns, std::size_t rows) {
    Gf2Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw InputError("Gf2Matrix: column length mismatch");
      for (std::size_t i = 0; i < rows; ++i)
        if (columns[j].get(i)) m.set(i, j, true);
    }
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  bool operator()(std::size_t i, std::size_t j) const { return get(i, j); }
  void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }

  BitVector column(std::size_t j) const {
    BitVector c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c.set(i, get(i, j));
    return c;
  }

  Gf2Matrix transpose() const {
    Gf2Matrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) t.set(j, i, true);
    return t;
  }

  BitVector operator*(const BitVector& x) const {
    if (x.size() != cols_) throw InputError("Gf2Matrix * vector: dimension mismatch");
    BitVector y(rows());
    for (std::size_t i = 0; i < rows(); ++i) y.set(i, rows_[i].dot(x));
    return y;
  }

  Gf2Matrix operator*(const Gf2Matrix& other) const {
    if (other.rows() != cols_) throw InputError("Gf2Matrix product: dimension mismatch");
    Gf2Matrix out(rows(), other.cols());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t k = 0; k < cols_; ++k)
        if (get(i, k)) out.rows_[i] ^= other.rows_[k];
    return out;
  }

  /// x^T M y over GF(2).
  bool bilinear(const BitVector& x, const BitVector& y) const { return x.dot((*this) * y); }

  bool is_symmetric() const {
    if (rows() != cols_) return false;
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (get(i, j) != get(j, i)) return false;
    return true;
  }

  bool has_zero_diagonal() const {
    for (std::size_t i = 0; i < std::min(rows(), cols_); ++i)
      if (get(i, i)) return false;
    return true;
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

namespace detail {

struct Gf2Echelon {
  Gf2Matrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan elimination. When `augment` is given it receives the same
// row operations (used by solve).
inline Gf2Echelon rref(Gf2Matrix m, BitVector* augment = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      std::swap(m.row(p), m.row(r));
      if (augment) {
        bool tmp = augment->get(p);
        augment->set(p, augment->get(r));
        augment->set(r, tmp);
      }
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m.get(i, c)) {
        m.row(i) ^= m.row(r);
        if (augment && augment->get(r)) augment->flip(i);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

} // namespace detail

inline std::size_t rank_gf2(const Gf2Matrix& a) { return detail::rref(a).pivots.size(); }

/// Some x with a*x = b, or nothing when the system is inconsistent. Free
/// variables are set to zero.
inline std::optional<BitVector> solve_gf2(const Gf2Matrix& a, const BitVector& b) {
  if (b.size() != a.rows()) throw InputError("solve_gf2: right-hand side has length " + std::to_string(b.size()) +
                                             ", matrix has " + std::to_string(a.rows()) + " rows");
  BitVector rhs = b;
  auto [red, pivots] = detail::rref(a, &rhs);
  for (std::size_t i = pivots.size(); i < red.rows(); ++i)
    if (rhs.get(i)) return std::nullopt;
  BitVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], rhs.get(i));
  return x;
}

/// Basis of ker(a); one vector per free column of the echelon form.
inline std::vector<BitVector> nullspace_gf2(const Gf2Matrix& a) {
  auto [red, pivots] = detail::rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(a.cols());
    v.set(free, true);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (red.get(i, free)) v.set(pivots[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank of the span of a list of vectors of common length.
inline std::size_t span_rank(const std::vector<BitVector>& vectors, std::size_t length) {
  return rank_gf2(Gf2Matrix::from_rows(vectors, length));
}

} // namespace framedcob
