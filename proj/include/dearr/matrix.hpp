#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "dearr/rational.hpp"

namespace dearr {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      assert(row.size() == cols_);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    assert(values.size() == cols_);
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  /// Drops every row from `count` onwards.
  void truncate_rows(std::size_t count) {
    if (count >= rows_) return;
    rows_ = count;
    data_.resize(rows_ * cols_);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  [[nodiscard]] const std::vector<Rational>& data() const noexcept { return data_; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RationalMatrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form. Zero rows
/// are kept at the bottom so the shape is unchanged. `pivot_cols` limits the
/// columns that may hold pivots (used for augmented systems).
inline RrefResult rref(RationalMatrix m, std::size_t pivot_cols) {
  RrefResult out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < pivot_cols && lead < m.rows(); ++col) {
    std::size_t pick = lead;
    while (pick < m.rows() && m(pick, col) == 0) ++pick;
    if (pick == m.rows()) continue;
    m.swap_rows(lead, pick);

    const Rational inv = 1 / m(lead, col);
    for (auto& v : m.row(lead)) v *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead, c);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  out.form = std::move(m);
  return out;
}

inline RrefResult rref(RationalMatrix m) {
  const auto cols = m.cols();
  return rref(std::move(m), cols);
}

/// Reduces `row` against the pivot rows of an RREF matrix; the result is zero
/// exactly when `row` lies in the row space.
inline std::vector<Rational> reduce_against(const RrefResult& basis, std::span<const Rational> row) {
  std::vector<Rational> rest(row.begin(), row.end());
  for (std::size_t r = 0; r < basis.rank; ++r) {
    const Rational factor = rest[basis.pivots[r]];
    if (factor == 0) continue;
    const auto pivot_row = basis.form.row(r);
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= factor * pivot_row[c];
  }
  return rest;
}

}  // namespace dearr
