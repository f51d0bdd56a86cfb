#pragma once

// The quaternion group algebra kQ8 over GF(2), presented as
// k<x, y> / (x^2 + yxy, y^2 + xyx, x^4, y^4).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhq8/linalg.hpp"
#include "hhq8/report.hpp"

namespace hhq8 {

/// Monomial basis of A in its fixed global order. `one` is the unit and
/// `xyxy` spans the socle.
enum class Monomial : std::uint8_t { one, x, y, xy, yx, xyx, yxy, xyxy };

inline constexpr std::size_t kAlgebraDim = 8;

inline constexpr std::array<Monomial, kAlgebraDim> kBasis = {
    Monomial::one, Monomial::x,   Monomial::y,   Monomial::xy,
    Monomial::yx,  Monomial::xyx, Monomial::yxy, Monomial::xyxy};

/// Basis without the unit; the normalized bar complex uses these in its interior slots.
inline constexpr std::array<Monomial, kAlgebraDim - 1> kRadicalBasis = {
    Monomial::x, Monomial::y, Monomial::xy, Monomial::yx, Monomial::xyx, Monomial::yxy, Monomial::xyxy};

constexpr std::size_t index(Monomial m) { return static_cast<std::size_t>(m); }
constexpr Monomial monomial_at(std::size_t i) { return static_cast<Monomial>(i); }

/// "1", "x", "y", "xy", ...
std::string_view name(Monomial m);
/// The monomial as a word in x, y; empty for the unit.
std::string_view word(Monomial m);
std::optional<Monomial> parse_monomial(std::string_view text);

/// Reduces a word in {x, y} to normal form: x^2 -> yxy, y^2 -> xyx,
/// yxyx -> xyxy, and any word of length >= 5 is zero (nullopt).
std::optional<Monomial> reduce_word(std::string_view word);

/// Element of A as a GF(2) coefficient vector over kBasis, packed in one byte.
class AlgebraElement {
 public:
  constexpr AlgebraElement() = default;
  constexpr AlgebraElement(Monomial m) : bits_(static_cast<std::uint8_t>(1U << index(m))) {}  // NOLINT

  static constexpr AlgebraElement from_bits(std::uint8_t bits) {
    AlgebraElement a;
    a.bits_ = bits;
    return a;
  }
  static AlgebraElement from_vector(const GF2Vector& v);

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool coeff(Monomial m) const { return (bits_ >> index(m)) & 1U; }
  constexpr bool is_zero() const { return bits_ == 0; }
  GF2Vector to_vector() const;

  constexpr AlgebraElement& operator+=(AlgebraElement o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend constexpr AlgebraElement operator+(AlgebraElement a, AlgebraElement b) { return a += b; }
  friend constexpr bool operator==(AlgebraElement, AlgebraElement) = default;

  /// Calls f(Monomial) for each basis monomial with coefficient 1, in basis order.
  template <class F>
  void for_each_term(F&& f) const {
    for (auto m : kBasis) {
      if (coeff(m)) f(m);
    }
  }

 private:
  std::uint8_t bits_ = 0;
};

AlgebraElement multiply(AlgebraElement a, AlgebraElement b);
inline AlgebraElement operator*(AlgebraElement a, AlgebraElement b) { return multiply(a, b); }

/// "0", "x", "1+xy", ...
std::string to_string(AlgebraElement a);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
AlgebraElement parse_element(std::string_view text);

/// Products of basis monomials. Built once by word rewriting and checked
/// against the group-algebra oracle; construction throws std::logic_error if
/// the two disagree.
class MultiplicationTable {
 public:
  static const MultiplicationTable& instance();

  AlgebraElement product(Monomial a, Monomial b) const { return table_[index(a)][index(b)]; }

  /// Table computed by rewriting alone, without the oracle cross-check.
  static MultiplicationTable from_rewriting();

 private:
  MultiplicationTable() = default;
  std::array<std::array<AlgebraElement, kAlgebraDim>, kAlgebraDim> table_{};
};

/// Independent model of A inside the group algebra F4[Q8], F4 = GF(2)(w).
/// Group elements are indexed 1, i, j, k, -1, -i, -j, -k. The embedding sends
/// x -> i + w j + w^2 k and y -> i + w^2 j + w k.
class GroupAlgebraOracle {
 public:
  GroupAlgebraOracle();

  static constexpr std::size_t kOrder = 8;
  int group_product(int g, int h) const { return group_[g][h]; }
  int group_inverse(int g) const;

  /// True if the images of the eight basis monomials are F4-linearly independent.
  bool images_independent() const { return independent_; }
  /// True if the images satisfy x^2 + yxy = y^2 + xyx = x^4 = y^4 = 0.
  bool relations_hold() const { return relations_hold_; }
  /// The product a*b computed in F4[Q8] and expressed back in the monomial basis.
  /// Throws std::logic_error if the result is not a GF(2)-combination of the images.
  AlgebraElement pulled_back_product(Monomial a, Monomial b) const;

 private:
  std::array<std::array<int, kOrder>, kOrder> group_{};
  std::array<std::array<std::uint8_t, kOrder>, kAlgebraDim> images_{};
  bool independent_ = false;
  bool relations_hold_ = false;
};

/// Symmetrizing form: the xyxy-coefficient of a*b.
bool bilinear_form(AlgebraElement a, AlgebraElement b);
/// <a, 1>: the xyxy-coefficient of a.
bool socle_pairing_with_one(AlgebraElement a);
/// The basis monomial b* with <m, b*> = 1.
Monomial dual_basis(Monomial m);

enum class Letter : std::uint8_t { x, y };

struct DerivationTerm {
  Monomial prefix;
  Letter letter;
  Monomial suffix;
  friend bool operator==(const DerivationTerm&, const DerivationTerm&) = default;
};

/// C(a1...an) = sum_j a1..a_{j-1} (x) a_j (x) a_{j+1}..a_n over letter positions.
std::vector<DerivationTerm> bimodule_derivation_C(Monomial m);

/// Oracle agreement of the multiplication table, associativity, defining
/// relations, and the symmetry, associativity, nondegeneracy and dual-basis
/// table of the form.
Report verify_algebra();

}  // namespace hhq8
