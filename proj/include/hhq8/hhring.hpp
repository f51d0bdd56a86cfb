#pragma once

// Hochschild cohomology classes computed on the minimal resolution, with
// cup product, Delta and bracket obtained by transport through the bar
// resolution.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhq8/compare.hpp"
#include "hhq8/linalg.hpp"
#include "hhq8/minres.hpp"
#include "hhq8/report.hpp"

namespace hhq8 {

/// A cocycle standing for its class; compare classes with HochschildRing::class_eq.
struct CohomologyClass {
  MinCochain rep;
  int degree() const { return rep.degree(); }
};

enum class Generator : std::uint8_t { p1, p2, p2p, p3, u1, u1p, v1, v2, v2p, z };
inline constexpr std::size_t kGeneratorCount = 10;

struct GeneratorInfo {
  Generator id;
  std::string_view ascii;
  std::string_view unicode;
  int degree;
  std::string_view rep;  // cocycle in "(a,b)" / "a" notation
};

/// The ten generators in catalog order p1, p2, p2', p3, u1, u1', v1, v2, v2', z.
const std::array<GeneratorInfo, kGeneratorCount>& generator_catalog();
const GeneratorInfo& info(Generator g);
/// Accepts ASCII ("u1p") or Unicode ("u₁′") names.
std::optional<Generator> parse_generator(std::string_view name);

/// Exponent vector over the catalog; a monomial in the generators.
using GeneratorMonomial = std::array<int, kGeneratorCount>;

GeneratorMonomial monomial_of(std::initializer_list<Generator> factors);
int monomial_degree(const GeneratorMonomial& m);
/// Number of degree-0 factors counted with multiplicity.
int p_factor_count(const GeneratorMonomial& m);
/// "p2*u1", "u1p^2", "1" for the empty monomial.
std::string ascii_name(const GeneratorMonomial& m);
/// "p₂u₁", "u₁′²".
std::string unicode_name(const GeneratorMonomial& m);
/// Monomials of the given degree with at most one degree-0 factor, in
/// graded lexicographic order over the catalog.
std::vector<GeneratorMonomial> generator_monomials(int degree);

/// A defining relation: the listed monomials sum to zero.
struct Relation {
  std::string label;
  std::vector<GeneratorMonomial> terms;
  int degree() const { return monomial_degree(terms.front()); }
};

/// The relations of the presentation in degrees 0..4.
const std::vector<Relation>& presentation_relations();

class HochschildRing {
 public:
  static constexpr int kMaxDegree = 8;

  HochschildRing();
  /// Process-wide instance sharing the standard Phi and Psi.
  static HochschildRing& standard();

  /// Basis of the coboundaries B^n, 0 <= n <= 8.
  const std::vector<MinCochain>& coboundary_space(int n) const;
  /// Basis of the cocycles Z^n.
  const std::vector<MinCochain>& cocycle_space(int n) const;
  int hh_dim(int n) const;

  bool is_cocycle(const MinCochain& f) const;
  /// Throws std::invalid_argument unless f is a cocycle.
  CohomologyClass make_class(MinCochain f) const;
  CohomologyClass zero_class(int degree) const { return {MinCochain(degree)}; }
  /// Throws std::invalid_argument on a degree mismatch.
  bool class_eq(const CohomologyClass& a, const CohomologyClass& b) const;
  bool is_zero(const CohomologyClass& a) const;
  /// Canonical representative: the rep reduced against the echelon basis of B^n.
  MinCochain normal_form(const CohomologyClass& a) const;
  /// Lowest-weight representative of the class; ties broken by index sum,
  /// then lexicographically on coordinates.
  MinCochain witness(const CohomologyClass& a) const;

  CohomologyClass generator(Generator g) const;
  /// Iterated cup product; memoized. The empty monomial is the unit.
  CohomologyClass monomial_class(const GeneratorMonomial& m);

  /// Degree sum must be <= 8 (std::domain_error otherwise).
  CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) const;
  /// Degree must be 1..8 (std::domain_error otherwise).
  CohomologyClass delta(const CohomologyClass& a) const;
  /// Degree sum must be 1..9 (std::domain_error otherwise).
  CohomologyClass bracket(const CohomologyClass& a, const CohomologyClass& b) const;

 private:
  struct DegreeData {
    std::vector<MinCochain> coboundaries;
    std::vector<MinCochain> cocycles;
    EchelonBasis echelon;
  };
  const DegreeData& data(int n) const;

  std::shared_ptr<const PsiEvaluator> psi_;
  const PhiTable* phi_;
  std::vector<DegreeData> degrees_;
  std::map<GeneratorMonomial, CohomologyClass> monomials_;
};

/// Checks every relation of the presentation up to degree n_max <= 4 and
/// the cup-product witness values.
Report verify_generalov(HochschildRing& ring, int n_max = 4);

struct DeltaEntry {
  GeneratorMonomial argument;
  CohomologyClass value;
};

struct BracketEntry {
  Generator a;
  Generator b;
  CohomologyClass value;  // degree -1 pairs carry an empty degree-0 placeholder
  bool vanishes_by_degree = false;
};

struct StructureTables {
  std::vector<DeltaEntry> delta;
  std::vector<BracketEntry> bracket;
};

/// Delta on the generators, on the v*p and a*z products and on the products
/// with nonzero values; brackets on all 45 generator pairs.
StructureTables build_structure_tables(HochschildRing& ring);

/// The expected values: generators and products whose Delta is nonzero,
/// mapped to the expected value as a sum of generator monomials.
const std::vector<std::pair<GeneratorMonomial, std::vector<GeneratorMonomial>>>& expected_nonzero_delta();

/// Compares the tables against the expected Delta and bracket values and
/// checks Delta o Delta = 0, the BV identity on all pairs, the seven-term
/// identity on three triples, z-periodicity and graded commutativity.
Report verify_bv(HochschildRing& ring);

/// d o d, delta o delta, boundary o boundary, B o B and boundary B + B boundary
/// on basis inputs, plus Delta-versus-B duality for transported cocycles of
/// degree <= 3.
Report verify_complex_identities(HochschildRing& ring);

}  // namespace hhq8
