#pragma once

// Command implementations behind the hhq8 executable. Each returns its exit
// code and the text it prints: 0 on success, 1 on a failed verification,
// 2 on a usage error.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhq8/hhring.hpp"
#include "hhq8/report.hpp"

namespace hhq8 {

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// algebra, homotopy, comparison, relations, bv, all; nullopt for anything else.
std::optional<Report> run_suite(std::string_view suite);

CommandResult cmd_verify(std::string_view suite, bool json);
/// kind: delta, bracket, cup; format: markdown, json.
CommandResult cmd_table(std::string_view kind, std::string_view format);
/// hh_dim for degrees 0..max_degree, max_degree <= 8.
CommandResult cmd_dims(int max_degree);

/// Writes classes as sums of generator monomials with at most one degree-0
/// factor, choosing a smallest matching set of monomials.
class ExpressionFinder {
 public:
  static constexpr std::size_t kSearchBudget = std::size_t{1} << 16;

  explicit ExpressionFinder(HochschildRing& ring) : ring_(ring) {}

  /// Monomials in alphabetical order of their ASCII names; empty for the
  /// zero class; nullopt if no match is found within the budget.
  std::optional<std::vector<GeneratorMonomial>> find(const CohomologyClass& c);

 private:
  struct Candidate {
    std::string name;
    GeneratorMonomial monomial;
    GF2Vector vector;
  };
  const std::vector<Candidate>& candidates(int degree);

  HochschildRing& ring_;
  std::vector<std::optional<std::vector<Candidate>>> by_degree_ = std::vector<std::optional<std::vector<Candidate>>>(9);
};

/// "p2p", "u1p^2 + v2", "0".
std::string ascii_expression(const std::vector<GeneratorMonomial>& terms);
/// "p₂′", "u₁′² + v₂", "0".
std::string unicode_expression(const std::vector<GeneratorMonomial>& terms);

}  // namespace hhq8
