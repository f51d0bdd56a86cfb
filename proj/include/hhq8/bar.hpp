#pragma once

// Normalized bar resolution of A, the normalized Hochschild cochain and chain
// complexes, and the operations defined on them. All signs are dropped: the
// coefficient field is GF(2).
//
// Unit-slot policy: a tensor whose interior slot would hold the unit is zero,
// and every cochain vanishes on argument tuples containing the unit.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhq8/algebra.hpp"

namespace hhq8 {

using MidTuple = std::vector<Monomial>;

/// left (x) mids[0] (x) ... (x) mids[n-1] (x) right, every mid a non-unit monomial.
struct BarTensor {
  Monomial left = Monomial::one;
  MidTuple mids;
  Monomial right = Monomial::one;

  int degree() const { return static_cast<int>(mids.size()); }
  friend auto operator<=>(const BarTensor&, const BarTensor&) = default;
};

/// GF(2)-linear combination of bar tensors of one degree.
class BarChain {
 public:
  explicit BarChain(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  /// Adds (XORs) one tensor. Throws std::invalid_argument on a degree
  /// mismatch or a unit mid.
  void add(const BarTensor& t);
  BarChain& operator+=(const BarChain& other);
  friend BarChain operator+(BarChain a, const BarChain& b) { return a += b; }

  const std::set<BarTensor>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const BarChain&, const BarChain&) = default;

 private:
  int degree_;
  std::set<BarTensor> terms_;
};

/// a . c and c . a, acting on the outer factors.
BarChain operator*(AlgebraElement a, const BarChain& c);
BarChain operator*(const BarChain& c, AlgebraElement a);

/// Parses "1|x|x|1 + 1|y|x|y"; outer factors may be sums in parentheses,
/// e.g. "(1+xy)|x|1". Every term must have degree+2 factors.
BarChain parse_bar_chain(int degree, std::string_view text);
std::string to_string(const BarChain& c);

/// d_n on the normalized bar resolution, n >= 1.
BarChain bar_differential(const BarChain& c);

/// The contracting homotopy s(a0 (x) m (x) r) = 1 (x) a0 (x) m (x) r; terms with a0 = 1 vanish.
BarChain bar_contraction(const BarChain& c);

/// Normalized Hochschild cochain Hom(Abar^{(x)n}, A), evaluated lazily on
/// basis tuples and memoized. Copies share the cache.
class BarCochain {
 public:
  using Evaluator = std::function<AlgebraElement(std::span<const Monomial>)>;

  BarCochain(int degree, Evaluator eval);
  static BarCochain constant(AlgebraElement value);
  static BarCochain zero(int degree);

  int degree() const { return degree_; }

  /// Value on a tuple of basis monomials; zero if any argument is the unit.
  AlgebraElement operator()(std::span<const Monomial> args) const;
  AlgebraElement operator()(std::initializer_list<Monomial> args) const {
    return (*this)(std::span<const Monomial>(args.begin(), args.size()));
  }
  /// Bimodule extension: left . f(mids) . right.
  AlgebraElement on_tensor(const BarTensor& t) const;
  AlgebraElement on_chain(const BarChain& c) const;

  std::size_t cached_values() const;

  /// Pointwise sum; degrees must agree.
  friend BarCochain operator+(const BarCochain& f, const BarCochain& g);

 private:
  struct State;
  int degree_;
  std::shared_ptr<State> state_;
};

/// Sum over the basis expansion of `value` (unit part dropped) of f(args with
/// args[slot] replaced by each monomial).
AlgebraElement evaluate_at_slot(const BarCochain& f, MidTuple args, std::size_t slot, AlgebraElement value);

BarCochain cochain_differential(const BarCochain& f);
BarCochain cup(const BarCochain& f, const BarCochain& g);
/// f o_i g for 1 <= i <= deg f; throws std::out_of_range otherwise. A
/// degree-0 g is inserted as an argument.
BarCochain circle_i(const BarCochain& f, const BarCochain& g, int i);
/// f o g = sum_i f o_i g; zero when deg f = 0.
BarCochain circle(const BarCochain& f, const BarCochain& g);
BarCochain bracket(const BarCochain& f, const BarCochain& g);
/// Delta(f)(a1..a_{n-1}) = sum_{b != 1} <sum_i f(a_i..a_{n-1}, b, a_1..a_{i-1}), 1> b*.
/// Throws std::domain_error for deg f = 0.
BarCochain tradler_delta(const BarCochain& f);

/// head (x) mids in the normalized Hochschild chain complex C_r = A (x) Abar^{(x)r}.
struct HochschildTensor {
  Monomial head = Monomial::one;
  MidTuple mids;

  int degree() const { return static_cast<int>(mids.size()); }
  friend auto operator<=>(const HochschildTensor&, const HochschildTensor&) = default;
};

class HochschildChain {
 public:
  explicit HochschildChain(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  void add(const HochschildTensor& t);
  HochschildChain& operator+=(const HochschildChain& other);
  friend HochschildChain operator+(HochschildChain a, const HochschildChain& b) { return a += b; }

  const std::set<HochschildTensor>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const HochschildChain&, const HochschildChain&) = default;

 private:
  int degree_;
  std::set<HochschildTensor> terms_;
};

HochschildChain chain_differential(const HochschildChain& c);
/// Normalized Connes operator: sum_i 1 (x) a_i..a_r (x) a_0..a_{i-1}.
HochschildChain connes_B(const HochschildChain& c);

/// Duality pairing sum_t <f(t.mids), t.head> between C^n and C_n.
bool pair(const BarCochain& f, const HochschildChain& c);

/// All tuples of n non-unit basis monomials, in lexicographic basis order.
std::vector<MidTuple> all_mid_tuples(int n);

}  // namespace hhq8
