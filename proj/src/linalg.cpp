#include "hhq8/linalg.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace hhq8 {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// In-place reduced row echelon form. Returns pivot column per leading row.
std::vector<std::size_t> reduce_rows(std::vector<GF2Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] += rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

}  // namespace

GF2Vector::GF2Vector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

GF2Vector GF2Vector::unit(std::size_t size, std::size_t index) {
  GF2Vector v(size);
  v.set(index, true);
  return v;
}

bool GF2Vector::get(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("GF2Vector index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void GF2Vector::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("GF2Vector index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void GF2Vector::flip(std::size_t i) {
  if (i >= size_) throw std::out_of_range("GF2Vector index out of range");
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

void GF2Vector::check_same_size(const GF2Vector& other) const {
  if (size_ != other.size_) throw std::invalid_argument("GF2Vector length mismatch");
}

GF2Vector& GF2Vector::operator+=(const GF2Vector& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool GF2Vector::is_zero() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t GF2Vector::weight() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> GF2Vector::leading_index() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

bool GF2Vector::dot(const GF2Vector& other) const {
  check_same_size(other);
  unsigned parity = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    parity ^= static_cast<unsigned>(std::popcount(words_[w] & other.words_[w])) & 1U;
  }
  return parity != 0;
}

std::string GF2Vector::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, GF2Vector(cols)) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::from_columns(std::size_t rows, std::span<const GF2Vector> columns) {
  GF2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (columns[c].get(r)) m.set(r, c, true);
    }
  }
  return m;
}

GF2Vector GF2Matrix::column(std::size_t c) const {
  GF2Vector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (get(r, c)) v.set(r, true);
  }
  return v;
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

GF2Vector GF2Matrix::operator*(const GF2Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  GF2Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].dot(v)) out.set(r, true);
  }
  return out;
}

std::size_t rank(const GF2Matrix& m) {
  std::vector<GF2Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return reduce_rows(rows, m.cols()).size();
}

std::vector<GF2Vector> kernel_basis(const GF2Matrix& m) {
  std::vector<GF2Vector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  const auto pivots = reduce_rows(rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<GF2Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    GF2Vector v(m.cols());
    v.set(free, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(free)) v.set(pivots[i], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<GF2Vector> image_basis(const GF2Matrix& m) {
  const GF2Matrix t = m.transpose();
  std::vector<GF2Vector> rows;
  for (std::size_t r = 0; r < t.rows(); ++r) rows.push_back(t.row(r));
  reduce_rows(rows, t.cols());
  return rows;
}

bool in_span(const GF2Vector& v, std::span<const GF2Vector> basis) {
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw std::invalid_argument("in_span: length mismatch");
  }
  return EchelonBasis(v.size(), basis).contains(v);
}

std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length must equal row count");
  // Augmented rows [m | rhs].
  const std::size_t n = m.cols();
  std::vector<GF2Vector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    GF2Vector a(n + 1);
    for (std::size_t c = 0; c < n; ++c) {
      if (m.get(r, c)) a.set(c, true);
    }
    if (rhs.get(r)) a.set(n, true);
    rows.push_back(std::move(a));
  }
  const auto pivots = reduce_rows(rows, n + 1);
  GF2Vector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == n) return std::nullopt;
    if (rows[i].get(n)) x.set(pivots[i], true);
  }
  return x;
}

EchelonBasis::EchelonBasis(std::size_t dimension, std::span<const GF2Vector> spanning)
    : dimension_(dimension) {
  for (const auto& v : spanning) insert(v);
}

bool EchelonBasis::insert(GF2Vector v) {
  if (v.size() != dimension_) throw std::invalid_argument("EchelonBasis: length mismatch");
  v = reduce(std::move(v));
  const auto lead = v.leading_index();
  if (!lead) return false;
  // Keep the rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    if (row.get(*lead)) row += v;
  }
  auto pos = pivots_.begin();
  auto rpos = rows_.begin();
  while (pos != pivots_.end() && *pos < *lead) {
    ++pos;
    ++rpos;
  }
  pivots_.insert(pos, *lead);
  rows_.insert(rpos, std::move(v));
  return true;
}

GF2Vector EchelonBasis::reduce(GF2Vector v) const {
  if (v.size() != dimension_) throw std::invalid_argument("EchelonBasis: length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.get(pivots_[i])) v += rows_[i];
  }
  return v;
}

}  // namespace hhq8
