#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hhq8 {

/// Dense vector over GF(2), packed 64 coefficients per word.
class GF2Vector {
 public:
  GF2Vector() = default;
  explicit GF2Vector(std::size_t size);

  static GF2Vector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }
  bool operator[](std::size_t i) const { return get(i); }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  GF2Vector& operator+=(const GF2Vector& other);
  friend GF2Vector operator+(GF2Vector a, const GF2Vector& b) { return a += b; }

  bool is_zero() const;
  std::size_t weight() const;
  /// Index of the first nonzero coefficient, if any.
  std::optional<std::size_t> leading_index() const;
  bool dot(const GF2Vector& other) const;

  std::string to_string() const;

  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
  friend auto operator<=>(const GF2Vector&, const GF2Vector&) = default;

 private:
  void check_same_size(const GF2Vector& other) const;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major GF(2) matrix; each row is a packed GF2Vector.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  static GF2Matrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j]; all columns must have length `rows`.
  static GF2Matrix from_columns(std::size_t rows, std::span<const GF2Vector> columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value) { rows_[r].set(c, value); }
  const GF2Vector& row(std::size_t r) const { return rows_[r]; }
  GF2Vector column(std::size_t c) const;

  GF2Matrix transpose() const;
  GF2Vector operator*(const GF2Vector& v) const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<GF2Vector> rows_;
};

std::size_t rank(const GF2Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column in increasing column order.
std::vector<GF2Vector> kernel_basis(const GF2Matrix& m);

/// Basis of the column space of m, as reduced rows of the transpose.
std::vector<GF2Vector> image_basis(const GF2Matrix& m);

/// Throws std::invalid_argument if any basis vector differs in length from v.
bool in_span(const GF2Vector& v, std::span<const GF2Vector> basis);

/// One solution of m x = rhs, or nullopt. Throws std::invalid_argument on
/// dimension mismatch.
std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& rhs);

/// Reduced echelon basis of a subspace, kept for repeated membership and
/// normal-form queries. Pivot of each row is its leading (lowest) index.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension = 0) : dimension_(dimension) {}
  EchelonBasis(std::size_t dimension, std::span<const GF2Vector> spanning);

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<GF2Vector>& rows() const { return rows_; }

  /// Adds v to the subspace; returns false if it was already contained.
  bool insert(GF2Vector v);
  /// Canonical coset representative of v modulo the subspace.
  GF2Vector reduce(GF2Vector v) const;
  bool contains(const GF2Vector& v) const { return reduce(v).is_zero(); }

 private:
  std::size_t dimension_;
  std::vector<GF2Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hhq8
