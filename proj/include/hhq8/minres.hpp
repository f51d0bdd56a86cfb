#pragma once

// The period-4 minimal bimodule resolution P_* of A with its differentials,
// the maps rho and tau across the period seam, and the weak self-homotopy t_*.
//
//   P_n = A (x) A              n = 0, 3 (mod 4), generator iota
//   P_n = A (x) kQ1 (x) A      n = 1 (mod 4),   generators x, y
//   P_n = A (x) kQ1* (x) A     n = 2 (mod 4),   generators r_x, r_y

#include <array>
#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhq8/algebra.hpp"
#include "hhq8/report.hpp"

namespace hhq8 {

/// Number of free generators of P_n: 1, 2, 2, 1 repeating. Throws for n < 0.
int generator_count(int degree);
/// "1" for rank-one degrees, else "x"/"y" or "rx"/"ry".
std::string_view generator_name(int degree, int slot);

/// Element of P_n: a GF(2) set of basis tensors left (x) gen (x) right.
class MinResElement {
 public:
  explicit MinResElement(int degree = 0);
  static MinResElement basis(int degree, Monomial left, int slot, Monomial right);
  /// 1 (x) gen (x) 1.
  static MinResElement generator(int degree, int slot) { return basis(degree, Monomial::one, slot, Monomial::one); }

  int degree() const { return degree_; }
  int generators() const { return generator_count(degree_); }

  void toggle(Monomial left, int slot, Monomial right);
  bool coeff(Monomial left, int slot, Monomial right) const;
  MinResElement& operator+=(const MinResElement& other);
  friend MinResElement operator+(MinResElement a, const MinResElement& b) { return a += b; }
  bool is_zero() const { return bits_.none(); }
  std::size_t size() const { return bits_.count(); }
  friend bool operator==(const MinResElement&, const MinResElement&) = default;

  /// Calls f(left, slot, right) per term, ordered by (left, slot, right).
  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < kBits; ++i) {
      if (bits_.test(i)) f(monomial_at(i / 16), static_cast<int>(i / 8 % 2), monomial_at(i % 8));
    }
  }

  /// The same terms regarded as an element of another degree with equal rank.
  MinResElement relabeled(int degree) const;

 private:
  static constexpr std::size_t kBits = kAlgebraDim * 2 * kAlgebraDim;
  static std::size_t bit(Monomial left, int slot, Monomial right);
  void check_slot(int slot) const;

  int degree_;
  std::bitset<kBits> bits_;
};

/// Bimodule actions on the outer factors.
MinResElement operator*(AlgebraElement a, const MinResElement& e);
MinResElement operator*(const MinResElement& e, AlgebraElement a);

/// Parses "x|rx|1 + 1|ry|y" (rank-two degrees) or "1|yxy + y|xy" (rank-one
/// degrees). Outer factors may be parenthesized sums; "0" is the zero element.
MinResElement parse_min_element(int degree, std::string_view text);
std::string to_string(const MinResElement& e);

/// One term left (x) gen (x) right of a differential image.
struct ResolutionTerm {
  Monomial left;
  int slot;
  Monomial right;
};

/// The terms of d_n(1 (x) gen (x) 1), n >= 1, as stored generator data.
const std::vector<ResolutionTerm>& differential_terms(int degree, int slot);

/// d_n for n >= 1; throws std::domain_error for n < 1.
MinResElement min_differential(const MinResElement& e);
/// d_0: P_0 -> A, l (x) r |-> lr. Accepts any rank-one degree.
AlgebraElement augmentation(const MinResElement& e);
/// rho: A -> P_3, rho(1) = sum_b b* (x) b.
MinResElement rho(AlgebraElement a);
/// tau: P_3 -> A, right-linear, tau(xyxy (x) 1) = 1 and tau(b (x) 1) = 0 otherwise.
AlgebraElement tau(const MinResElement& e);

/// Values t_i(b (x) gen (x) 1) for i = 0, 1, 2, indexed [slot][index(b)].
struct HomotopyTable {
  std::array<std::array<MinResElement, kAlgebraDim>, 2> t0;
  std::array<std::array<MinResElement, kAlgebraDim>, 2> t1;
  std::array<std::array<MinResElement, kAlgebraDim>, 2> t2;

  static const HomotopyTable& standard();
};

/// The weak self-homotopy defined by a table; t_3 = t_{-1} tau and t_{4k+i} = t_i.
class WeakHomotopy {
 public:
  explicit WeakHomotopy(HomotopyTable table = HomotopyTable::standard()) : table_(std::move(table)) {}

  /// t_{-1}(a) = 1 (x) a.
  MinResElement initial(AlgebraElement a) const;
  /// t_n on P_n, n >= 0, extended right-linearly from the table.
  MinResElement operator()(const MinResElement& e) const;

  const HomotopyTable& table() const { return table_; }

 private:
  HomotopyTable table_;
};

/// t_n with the standard table.
MinResElement homotopy_t(const MinResElement& e);

/// Checks d0 t_{-1} = Id, d t + t d = Id in degrees 0..2, t2 d3 + rho tau = Id,
/// tau rho = Id, t_{i+1} t_i = 0, and d t + t d = Id across later periods.
Report verify_homotopy(const WeakHomotopy& t = WeakHomotopy());

/// Bimodule map P_n -> A, one value per generator.
class MinCochain {
 public:
  explicit MinCochain(int degree = 0);
  MinCochain(int degree, std::vector<AlgebraElement> values);

  int degree() const { return degree_; }
  const std::vector<AlgebraElement>& values() const { return values_; }
  AlgebraElement value(int slot) const { return values_.at(static_cast<std::size_t>(slot)); }

  /// f(l (x) gen (x) r) = l f(gen) r, extended linearly.
  AlgebraElement evaluate(const MinResElement& e) const;

  MinCochain& operator+=(const MinCochain& other);
  friend MinCochain operator+(MinCochain a, const MinCochain& b) { return a += b; }
  bool is_zero() const;
  friend bool operator==(const MinCochain&, const MinCochain&) = default;

  /// Coordinates: 8 per generator, slot-major.
  GF2Vector to_vector() const;
  static MinCochain from_vector(int degree, const GF2Vector& v);
  /// Dimension of the cochain space in this degree.
  static std::size_t dimension(int degree) { return kAlgebraDim * static_cast<std::size_t>(generator_count(degree)); }

 private:
  int degree_;
  std::vector<AlgebraElement> values_;
};

/// "(1+xy,x)" for rank-two degrees, "y" for rank-one degrees.
std::string to_string(const MinCochain& f);
MinCochain parse_min_cochain(int degree, std::string_view text);

/// (delta f)(gen) = f(d_{n+1}(1 (x) gen (x) 1)).
MinCochain min_cochain_differential(const MinCochain& f);

}  // namespace hhq8
