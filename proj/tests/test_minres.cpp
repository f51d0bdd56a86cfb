#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hhq8/minres.hpp"

using namespace hhq8;
using M = Monomial;

namespace {

std::vector<MinResElement> basis_inputs(int degree) {
  std::vector<MinResElement> out;
  for (int slot = 0; slot < generator_count(degree); ++slot) {
    for (auto l : kBasis) {
      for (auto r : kBasis) out.push_back(MinResElement::basis(degree, l, slot, r));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("shape: ranks 1, 2, 2, 1 repeating") {
  const int expected[] = {1, 2, 2, 1};
  for (int n = 0; n < 12; ++n) CHECK(generator_count(n) == expected[n % 4]);
  CHECK_THROWS(generator_count(-1));
  CHECK(generator_name(1, 0) == "x");
  CHECK(generator_name(2, 1) == "ry");
  CHECK(generator_name(3, 0) == "1");
}

TEST_CASE("elements: parsing, slots and actions") {
  const auto e = parse_min_element(2, "x|rx|1 + 1|ry|(y+xy)");
  CHECK(e.size() == 3);
  CHECK(parse_min_element(2, to_string(e)) == e);
  CHECK(parse_min_element(4, "1|yxy + y|xy").size() == 2);
  CHECK(parse_min_element(1, "0").is_zero());
  CHECK_THROWS(MinResElement::basis(0, M::one, 1, M::one));
  CHECK(AlgebraElement(M::x) * MinResElement::generator(1, 0) == parse_min_element(1, "x|x|1"));
  CHECK(MinResElement::generator(1, 1) * AlgebraElement(M::xy) == parse_min_element(1, "1|y|xy"));
}

TEST_CASE("differential examples") {
  CHECK(min_differential(MinResElement::generator(1, 0)) == parse_min_element(0, "x|1 + 1|x"));
  CHECK(min_differential(MinResElement::generator(2, 0)) ==
        parse_min_element(1, "1|x|x + x|x|1 + 1|y|xy + y|x|y + yx|y|1"));
  CHECK(min_differential(MinResElement::generator(3, 0)) ==
        parse_min_element(2, "x|rx|1 + 1|rx|x + y|ry|1 + 1|ry|y"));
  CHECK(min_differential(MinResElement::generator(4, 0)) == rho(AlgebraElement(M::one)));
  CHECK(min_differential(MinResElement::generator(4, 0)).size() == 8);
  CHECK_THROWS_AS(min_differential(MinResElement(0)), std::domain_error);
}

TEST_CASE("property: d o d = 0 in degrees 1..8 and d0 d1 = 0") {
  for (const auto& e : basis_inputs(1)) CHECK(augmentation(min_differential(e)).is_zero());
  for (int n = 2; n <= 8; ++n) {
    for (const auto& e : basis_inputs(n)) CHECK(min_differential(min_differential(e)).is_zero());
  }
}

TEST_CASE("property: differentials are 4-periodic") {
  for (int n = 1; n <= 4; ++n) {
    for (int slot = 0; slot < generator_count(n); ++slot) {
      CHECK(min_differential(MinResElement::generator(n + 4, slot)) ==
            min_differential(MinResElement::generator(n, slot)).relabeled(n + 3));
    }
  }
}

TEST_CASE("rho and tau") {
  CHECK(tau(rho(AlgebraElement(M::one))) == AlgebraElement(M::one));
  CHECK(tau(parse_min_element(3, "xyxy|1")) == AlgebraElement(M::one));
  CHECK(tau(parse_min_element(3, "xyx|y")).is_zero());
  CHECK(tau(parse_min_element(3, "xyxy|y")) == AlgebraElement(M::y));
  for (int bits = 0; bits < 256; ++bits) {
    const auto a = AlgebraElement::from_bits(static_cast<std::uint8_t>(bits));
    CHECK(tau(rho(a)) == a);
  }
}

TEST_CASE("homotopy table examples") {
  CHECK(homotopy_t(parse_min_element(1, "x|x|1")) == MinResElement::generator(2, 0));
  CHECK(homotopy_t(parse_min_element(2, "xyxy|rx|1")) == parse_min_element(3, "1|yxy + yxy|1 + y|xy + yx|y"));
  for (auto b : kBasis) {
    const auto t3 = homotopy_t(MinResElement::basis(3, b, 0, M::one));
    if (b == M::xyxy) {
      CHECK(t3 == MinResElement::generator(4, 0));
    } else {
      CHECK(t3.is_zero());
    }
  }
  const WeakHomotopy t;
  CHECK(t.initial(AlgebraElement(M::x)) == parse_min_element(0, "1|x"));
}

TEST_CASE("homotopy identities hold") {
  const Report r = verify_homotopy();
  CHECK(r.checks().size() == 12);
  CHECK(r.passed());
}

TEST_CASE("fault injection names a counterexample") {
  HomotopyTable table = HomotopyTable::standard();
  table.t1[0][index(M::x)] = MinResElement(2);
  const Report r = verify_homotopy(WeakHomotopy(table));
  CHECK_FALSE(r.passed());
  bool named = false;
  for (const auto& c : r.checks()) {
    if (!c.passed) {
      named = named || c.detail.find("x|x|1") != std::string::npos;
    }
  }
  CHECK(named);
  CHECK(r.checks()[2].id == "d2 t1 + t0 d1 = Id");
  CHECK_FALSE(r.checks()[2].passed);
}

TEST_CASE("property: every t is right A-linear") {
  for (int n = 0; n <= 7; ++n) {
    for (int slot = 0; slot < generator_count(n); ++slot) {
      for (auto b : kBasis) {
        const auto xi = MinResElement::basis(n, b, slot, M::one);
        for (auto a : kBasis) CHECK(homotopy_t(xi * AlgebraElement(a)) == homotopy_t(xi) * AlgebraElement(a));
      }
    }
  }
}

TEST_CASE("cochain differential on the minimal resolution") {
  CHECK(min_cochain_differential(parse_min_cochain(0, "xyxy")).is_zero());
  CHECK(min_cochain_differential(parse_min_cochain(0, "x")) == parse_min_cochain(1, "(0,xy+yx)"));
  for (int n = 0; n <= 7; ++n) {
    for (std::size_t i = 0; i < MinCochain::dimension(n); ++i) {
      const auto f = MinCochain::from_vector(n, GF2Vector::unit(MinCochain::dimension(n), i));
      CHECK(min_cochain_differential(min_cochain_differential(f)).is_zero());
    }
  }
  const auto f = parse_min_cochain(2, "(1+xy,x)");
  CHECK(parse_min_cochain(2, to_string(f)) == f);
  CHECK(MinCochain::from_vector(2, f.to_vector()) == f);
  CHECK(f.evaluate(parse_min_element(2, "x|rx|y + 1|ry|1")) == AlgebraElement(M::x) * parse_element("1+xy") * M::y + M::x);
}
