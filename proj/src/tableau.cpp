#include "gkdim/tableau.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace gkdim {

Shape::Shape(std::vector<std::size_t> column_sizes) : columns_(std::move(column_sizes)) {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == 0) throw std::invalid_argument("shape columns must be positive");
    if (i > 0 && columns_[i] > columns_[i - 1]) {
      throw std::invalid_argument("shape columns must be weakly decreasing");
    }
  }
}

Shape Shape::from_row_lengths(std::span<const std::size_t> row_lengths) {
  // Conjugate partition.
  std::vector<std::size_t> cols;
  const std::size_t width = row_lengths.empty() ? 0 : row_lengths.front();
  for (std::size_t c = 0; c < width; ++c) {
    std::size_t height = 0;
    for (std::size_t len : row_lengths) {
      if (len > c) ++height;
    }
    cols.push_back(height);
  }
  return Shape(std::move(cols));
}

std::vector<std::size_t> Shape::row_lengths() const {
  std::vector<std::size_t> rows;
  const std::size_t height = num_rows();
  for (std::size_t r = 0; r < height; ++r) {
    std::size_t len = 0;
    for (std::size_t c : columns_) {
      if (c > r) ++len;
    }
    rows.push_back(len);
  }
  return rows;
}

std::size_t Shape::boxes() const { return std::accumulate(columns_.begin(), columns_.end(), std::size_t{0}); }

std::size_t column_statistic(const Shape& s) {
  std::size_t total = 0;
  for (std::size_t c : s.column_sizes()) total += c * (c - 1) / 2;
  return total;
}

namespace {

void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<Shape>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

template <typename T, typename F>
std::string render(const Tableau<T>& t, F&& fmt) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += fmt(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::vector<Shape> shapes_of_size(std::size_t n) {
  std::vector<Shape> out;
  std::vector<std::size_t> current;
  partitions(n, n, current, out);
  return out;
}

std::string pretty(const YoungTableau& t) {
  return render(t, [](const Rational& r) { return r.to_string(); });
}

std::string pretty(const RecordingTableau& t) {
  return render(t, [](int v) { return std::to_string(v); });
}

}  // namespace gkdim
