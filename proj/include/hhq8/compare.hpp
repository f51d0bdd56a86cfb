#pragma once

// Comparison morphisms between the minimal resolution P_* and the normalized
// bar resolution: Phi: P_* -> Bar_* and Psi: Bar_* -> P_*, and the cochain
// transports they induce.

#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "hhq8/bar.hpp"
#include "hhq8/minres.hpp"
#include "hhq8/report.hpp"

namespace hhq8 {

/// Phi_n(1 (x) gen (x) 1) for n <= max_degree, built by the recursion
///   Phi_n(e) = sum over terms a (x) e' (x) b of d_n(e) with a != 1 of s(a Phi_{n-1}(e') b),
/// where s is the bar contraction.
class PhiTable {
 public:
  explicit PhiTable(int max_degree = 8);
  static const PhiTable& standard();

  int max_degree() const { return static_cast<int>(images_.size()) - 1; }
  /// Throws std::out_of_range beyond max_degree.
  const BarChain& at(int degree, int slot) const;
  /// Bimodule extension to all of P_n.
  BarChain apply(const MinResElement& e) const;

 private:
  std::vector<std::vector<BarChain>> images_;
};

/// The explicit formulas for Phi_0 .. Phi_5, written out independently of
/// the recursion. Throws std::out_of_range for degree > 5.
BarChain closed_form_phi(int degree, int slot);

/// Psi_n(1 (x) a_1 .. a_n (x) 1) = t_{n-1}(a_1 Psi_{n-1}(1 (x) a_2 .. a_n (x) 1)),
/// Psi_0 = identity, memoized per tuple.
class PsiEvaluator {
 public:
  static constexpr int kMaxDegree = 8;

  explicit PsiEvaluator(WeakHomotopy t = WeakHomotopy()) : t_(std::move(t)) {}
  static std::shared_ptr<const PsiEvaluator> standard();

  /// Throws std::invalid_argument on a unit argument and std::out_of_range
  /// beyond kMaxDegree.
  MinResElement operator()(std::span<const Monomial> mids) const;
  MinResElement operator()(std::initializer_list<Monomial> mids) const {
    return (*this)(std::span<const Monomial>(mids.begin(), mids.size()));
  }
  /// Bimodule extension to bar chains.
  MinResElement apply(const BarChain& c) const;

  std::size_t cached_values() const;

 private:
  WeakHomotopy t_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, MinResElement> memo_;
};

/// Checks: Phi chain map in degrees 1..max_degree; Psi chain map on all
/// tuples in degrees 1..3 and on tuples from Phi images above; Psi Phi = Id
/// in degrees 0..4; recursion equals the explicit formulas in degrees 0..5.
/// Requires max_degree <= 6.
Report verify_chain_maps(int max_degree = 6, const PsiEvaluator& psi = *PsiEvaluator::standard(),
                         const PhiTable& phi = PhiTable::standard());

/// f o Psi_n, evaluated lazily.
BarCochain transport_to_bar(const MinCochain& f,
                            std::shared_ptr<const PsiEvaluator> psi = PsiEvaluator::standard());
/// g o Phi_n.
MinCochain transport_to_min(const BarCochain& g, const PhiTable& phi = PhiTable::standard());

/// Compares Psi and transported cochains against hand-computed value tables.
Report verify_transport_oracles();

}  // namespace hhq8
