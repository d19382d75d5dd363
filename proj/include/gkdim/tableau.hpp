#pragma once

// Young tableaux and Schensted row insertion.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gkdim/rational.hpp"

namespace gkdim {

// Partition shape, stored by column sizes c_1 >= c_2 >= ... > 0.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<std::size_t> column_sizes);

  static Shape from_row_lengths(std::span<const std::size_t> row_lengths);

  const std::vector<std::size_t>& column_sizes() const { return columns_; }
  std::vector<std::size_t> row_lengths() const;
  std::size_t boxes() const;
  std::size_t num_columns() const { return columns_.size(); }
  std::size_t num_rows() const { return columns_.empty() ? 0 : columns_.front(); }

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<std::size_t> columns_;
};

// Sum over columns of c(c-1)/2.
std::size_t column_statistic(const Shape& s);

// All shapes with n boxes.
std::vector<Shape> shapes_of_size(std::size_t n);

// 1-based (row, column) of a box.
struct BoxPosition {
  std::size_t row;
  std::size_t column;
  friend bool operator==(const BoxPosition&, const BoxPosition&) = default;
};

template <typename T>
class Tableau {
 public:
  using Row = std::vector<T>;

  Tableau() = default;
  explicit Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
    std::erase_if(rows_, [](const Row& r) { return r.empty(); });
  }

  const std::vector<Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  std::size_t boxes() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.size();
    return total;
  }

  Shape shape() const {
    std::vector<std::size_t> lengths;
    lengths.reserve(rows_.size());
    for (const auto& r : rows_) lengths.push_back(r.size());
    return Shape::from_row_lengths(lengths);
  }

  // Entries of column c (0-based), top to bottom.
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    for (const auto& r : rows_) {
      if (r.size() <= c) break;
      out.push_back(r[c]);
    }
    return out;
  }

  bool has_partition_shape() const {
    for (std::size_t i = 1; i < rows_.size(); ++i) {
      if (rows_[i].size() > rows_[i - 1].size()) return false;
    }
    return true;
  }

  // Rows weakly increasing, columns strictly increasing.
  bool is_semistandard() const {
    if (!has_partition_shape()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j > 0 && rows_[i][j - 1] > rows_[i][j]) return false;
        if (i > 0 && !(rows_[i - 1][j] < rows_[i][j])) return false;
      }
    }
    return true;
  }

  // Rows and columns strictly increasing.
  bool is_strict() const {
    if (!is_semistandard()) return false;
    for (const auto& r : rows_) {
      for (std::size_t j = 1; j < r.size(); ++j) {
        if (!(r[j - 1] < r[j])) return false;
      }
    }
    return true;
  }

  // Schensted row insertion: x replaces the leftmost entry strictly bigger
  // than it, and the bumped entry moves to the next row.
  std::pair<Tableau, BoxPosition> insert(T x) const {
    Tableau out = *this;
    const BoxPosition pos = out.insert_in_place(std::move(x));
    return {std::move(out), pos};
  }

  BoxPosition insert_in_place(T x) {
    for (std::size_t i = 0;; ++i) {
      if (i == rows_.size()) {
        rows_.push_back(Row{std::move(x)});
        return BoxPosition{i + 1, 1};
      }
      Row& row = rows_[i];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(std::move(x));
        return BoxPosition{i + 1, row.size()};
      }
      std::swap(*it, x);
    }
  }

  // Adds `value` at the end of row `row` (1-based; may open a new row).
  void place(const BoxPosition& pos, T value) {
    if (pos.row == rows_.size() + 1) rows_.emplace_back();
    rows_[pos.row - 1].push_back(std::move(value));
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<Row> rows_;
};

using YoungTableau = Tableau<Rational>;
using RecordingTableau = Tableau<int>;

template <typename T>
struct InsertionPair {
  Tableau<T> p;
  RecordingTableau q;
};

template <typename T>
InsertionPair<T> rs_pair(std::span<const T> seq) {
  InsertionPair<T> out;
  int step = 0;
  for (const T& x : seq) {
    out.q.place(out.p.insert_in_place(x), ++step);
  }
  return out;
}

template <typename T>
InsertionPair<T> rs_pair(const std::vector<T>& seq) {
  return rs_pair(std::span<const T>(seq));
}

// P alone, skipping the recording tableau.
template <typename T>
Tableau<T> insertion_tableau(std::span<const T> seq) {
  Tableau<T> p;
  for (const T& x : seq) p.insert_in_place(x);
  return p;
}

// One row per line, entries separated by single spaces.
std::string pretty(const YoungTableau& t);
std::string pretty(const RecordingTableau& t);

}  // namespace gkdim
