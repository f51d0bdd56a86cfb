#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hhq8/hhring.hpp"
#include "oracles.hpp"

using namespace hhq8;
using G = Generator;
using oracle::conjugacy_classes_of_q8;
using oracle::enumerate_monomials;
using oracle::presentation_dimension;

namespace {

HochschildRing& ring() { return HochschildRing::standard(); }

CohomologyClass cls(int degree, const char* rep) { return ring().make_class(parse_min_cochain(degree, rep)); }
CohomologyClass gen(G g) { return ring().generator(g); }
CohomologyClass mono(std::initializer_list<G> factors) { return ring().monomial_class(monomial_of(factors)); }

}  // namespace

TEST_CASE("coboundary spaces") {
  CHECK(ring().coboundary_space(0).empty());
  auto contains = [](int n, const char* rep) {
    std::vector<GF2Vector> span;
    for (const auto& c : ring().coboundary_space(n)) span.push_back(c.to_vector());
    return in_span(parse_min_cochain(n, rep).to_vector(), span);
  };
  CHECK(contains(1, "(xyx,yxy)"));
  CHECK(contains(1, "(xy+yx,0)"));
  CHECK(contains(5, "(xy+yx,0)"));
  CHECK(contains(2, "(xyxy,yxy)"));
  CHECK(contains(2, "(xy+yx,yxy)"));
  CHECK(contains(2, "(xyx,xy+yx)"));
  CHECK(contains(2, "(xyx,xyxy)"));
  CHECK_FALSE(contains(1, "(1+xy,x)"));
  CHECK_THROWS_AS(ring().coboundary_space(9), std::domain_error);
}

TEST_CASE("dimensions") {
  CHECK(conjugacy_classes_of_q8() == 5);
  CHECK(ring().hh_dim(0) == conjugacy_classes_of_q8());
  for (int n = 1; n <= 3; ++n) CHECK(ring().hh_dim(n + 4) == ring().hh_dim(n));
  CHECK(ring().hh_dim(4) == ring().hh_dim(8));
}

TEST_CASE("presentation monomial counts match the dimensions in degrees <= 4") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(enumerate_monomials(n).size() == generator_monomials(n).size());
    CHECK_MESSAGE(presentation_dimension(n) == ring().hh_dim(n), "degree " << n);
  }
}

TEST_CASE("catalog: names, parsing and cocycles") {
  CHECK(generator_catalog().size() == 10);
  for (const auto& g : generator_catalog()) {
    CHECK(ring().is_cocycle(parse_min_cochain(g.degree, g.rep)));
    CHECK(parse_generator(g.ascii) == g.id);
    CHECK(parse_generator(g.unicode) == g.id);
    CHECK_FALSE(ring().is_zero(gen(g.id)));
  }
  CHECK_FALSE(parse_generator("w3").has_value());
  CHECK(ascii_name(monomial_of({G::p2, G::u1})) == "p2*u1");
  CHECK(ascii_name(monomial_of({G::u1p, G::u1p})) == "u1p^2");
  CHECK(unicode_name(monomial_of({G::u1p, G::u1p})) == "u₁′²");
  CHECK(ascii_name(GeneratorMonomial{}) == "1");
  CHECK(monomial_degree(monomial_of({G::v1, G::z, G::u1})) == 7);
  CHECK(p_factor_count(monomial_of({G::p1, G::p3, G::v1})) == 2);
}

TEST_CASE("class equality") {
  CHECK(ring().class_eq(cls(1, "(xyx,yxy)"), ring().zero_class(1)));
  CHECK_FALSE(ring().class_eq(gen(G::u1), gen(G::u1p)));
  CHECK(ring().class_eq(gen(G::v1), gen(G::v1)));
  CHECK_THROWS_AS(ring().class_eq(gen(G::u1), gen(G::v1)), std::invalid_argument);
  CHECK_THROWS_AS(ring().make_class(parse_min_cochain(1, "(1,0)")), std::invalid_argument);
  const auto shifted = cls(1, "(1+xy+xyx,x+yxy)");
  CHECK(ring().class_eq(shifted, gen(G::u1)));
  CHECK(ring().normal_form(shifted) == ring().normal_form(gen(G::u1)));
  CHECK(ring().witness(shifted) == ring().witness(gen(G::u1)));
}

TEST_CASE("cup products") {
  CHECK(ring().class_eq(mono({G::u1, G::u1}), cls(2, "(1,y)")));
  CHECK(ring().class_eq(mono({G::u1p, G::u1p}), cls(2, "(x,1)")));
  CHECK(ring().class_eq(mono({G::u1p, G::v2p}), cls(3, "y")));
  CHECK(ring().class_eq(mono({G::u1, G::v2}), cls(3, "x")));
  CHECK(ring().class_eq(mono({G::u1p, G::v2}), cls(3, "xy")));
  CHECK(ring().is_zero(ring().cup(gen(G::p1), gen(G::p1))));
  CHECK(ring().witness(mono({G::u1, G::u1})) == parse_min_cochain(2, "(1,y)"));
  CHECK_THROWS_AS(ring().cup(gen(G::z), mono({G::z, G::u1})), std::domain_error);
}

TEST_CASE("property: cup is graded commutative on generators") {
  for (const auto& a : generator_catalog()) {
    for (const auto& b : generator_catalog()) {
      CHECK(ring().class_eq(ring().cup(gen(a.id), gen(b.id)), ring().cup(gen(b.id), gen(a.id))));
    }
  }
}

TEST_CASE("Delta") {
  CHECK(ring().is_zero(ring().delta(gen(G::u1))));
  CHECK(ring().is_zero(ring().delta(gen(G::u1p))));
  CHECK(ring().is_zero(ring().delta(gen(G::v1))));
  CHECK(ring().class_eq(ring().delta(mono({G::p2, G::u1})), gen(G::p1)));
  CHECK(ring().class_eq(ring().delta(mono({G::p1, G::u1})), gen(G::p2p)));
  CHECK(ring().class_eq(ring().delta(mono({G::u1p, G::v2})), gen(G::v1)));
  CHECK(ring().class_eq(ring().delta(mono({G::u1, G::v1})),
                        ring().make_class(mono({G::u1p, G::u1p}).rep + gen(G::v2).rep)));
  CHECK(ring().is_zero(ring().delta(mono({G::v2, G::z}))));
  CHECK_THROWS_AS(ring().delta(gen(G::p1)), std::domain_error);
}

TEST_CASE("property: Delta o Delta = 0 on generators and their pairwise products") {
  for (const auto& a : generator_catalog()) {
    if (a.degree >= 2) CHECK(ring().is_zero(ring().delta(ring().delta(gen(a.id)))));
    for (const auto& b : generator_catalog()) {
      const auto ab = ring().cup(gen(a.id), gen(b.id));
      if (ab.degree() >= 2 && ab.degree() <= 8) CHECK(ring().is_zero(ring().delta(ring().delta(ab))));
    }
  }
}

TEST_CASE("brackets") {
  CHECK(ring().is_zero(ring().bracket(gen(G::u1), gen(G::z))));
  CHECK(ring().is_zero(ring().bracket(gen(G::v2), gen(G::z))));
  CHECK(ring().class_eq(ring().bracket(gen(G::p2), gen(G::u1)), gen(G::p1)));
  CHECK(ring().class_eq(ring().bracket(gen(G::u1p), gen(G::v2)), gen(G::v1)));
  CHECK_THROWS_AS(ring().bracket(gen(G::p1), gen(G::p2)), std::domain_error);
  for (const auto& a : generator_catalog()) {
    if (a.degree >= 1) CHECK(ring().is_zero(ring().bracket(gen(a.id), gen(a.id))));
  }
}

TEST_CASE("property: BV identity on all generator pairs") {
  for (const auto& a : generator_catalog()) {
    for (const auto& b : generator_catalog()) {
      if (a.degree + b.degree < 1) continue;
      const auto x = gen(a.id);
      const auto y = gen(b.id);
      auto rhs = ring().delta(ring().cup(x, y)).rep;
      if (a.degree >= 1) rhs += ring().cup(ring().delta(x), y).rep;
      if (b.degree >= 1) rhs += ring().cup(x, ring().delta(y)).rep;
      CHECK_MESSAGE(ring().class_eq(ring().bracket(x, y), ring().make_class(rhs)), a.ascii << ", " << b.ascii);
    }
  }
}

TEST_CASE("suites pass") {
  CHECK(verify_generalov(ring()).passed());
  CHECK(verify_bv(ring()).passed());
  CHECK(verify_complex_identities(ring()).passed());
}

TEST_CASE("structure tables") {
  const StructureTables t = build_structure_tables(ring());
  CHECK(t.bracket.size() == 45);
  std::size_t nonzero = 0;
  for (const auto& e : t.bracket) nonzero += !e.vanishes_by_degree && !ring().is_zero(e.value);
  CHECK(nonzero == 14);
  CHECK(expected_nonzero_delta().size() == 14);
}
