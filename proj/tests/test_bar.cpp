#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "hhq8/bar.hpp"

using namespace hhq8;
using M = Monomial;

namespace {

// A fixed cochain with scrambled values, for identities that hold for every cochain.
BarCochain scrambled(int degree, std::uint32_t seed) {
  return BarCochain(degree, [seed](std::span<const Monomial> a) {
    std::uint32_t h = seed * 2654435761U;
    for (auto m : a) h = (h ^ static_cast<std::uint32_t>(index(m) + 1)) * 16777619U;
    return AlgebraElement::from_bits(static_cast<std::uint8_t>(h >> 11));
  });
}

BarCochain identity_cochain() {
  return BarCochain(1, [](std::span<const Monomial> a) { return AlgebraElement(a[0]); });
}

BarCochain product_cochain() {
  return BarCochain(2, [](std::span<const Monomial> a) { return AlgebraElement(a[0]) * a[1]; });
}

std::vector<BarChain> bar_basis(int n) {
  std::vector<BarChain> out;
  for (const auto& mids : all_mid_tuples(n)) {
    for (auto l : kBasis) {
      for (auto r : kBasis) {
        BarChain c(n);
        c.add({l, mids, r});
        out.push_back(c);
      }
    }
  }
  return out;
}

std::vector<HochschildChain> chain_basis(int n) {
  std::vector<HochschildChain> out;
  for (const auto& mids : all_mid_tuples(n)) {
    for (auto h : kBasis) {
      HochschildChain c(n);
      c.add({h, mids});
      out.push_back(c);
    }
  }
  return out;
}

HochschildChain single(M head, MidTuple mids) {
  HochschildChain c(static_cast<int>(mids.size()));
  c.add({head, std::move(mids)});
  return c;
}

}  // namespace

TEST_CASE("bar chains: set semantics and parsing") {
  BarChain c(1);
  c.add({M::one, {M::x}, M::one});
  c.add({M::one, {M::x}, M::one});
  CHECK(c.is_zero());
  CHECK_THROWS_AS(c.add({M::one, {M::one}, M::one}), std::invalid_argument);
  CHECK_THROWS_AS(c.add({M::one, {M::x, M::y}, M::one}), std::invalid_argument);
  CHECK(parse_bar_chain(1, "(1+xy)|x|1").size() == 2);
  CHECK_THROWS_AS(parse_bar_chain(2, "1|x|1"), std::invalid_argument);
  const BarChain e = parse_bar_chain(2, "1|x|y|1 + y|xy|x|(1+x)");
  CHECK(parse_bar_chain(2, to_string(e)) == e);
}

TEST_CASE("bar differential examples") {
  CHECK(bar_differential(parse_bar_chain(1, "1|x|1")) == parse_bar_chain(0, "x|1 + 1|x"));
  CHECK(bar_differential(parse_bar_chain(2, "1|x|x|1")) == parse_bar_chain(1, "x|x|1 + 1|yxy|1 + 1|x|x"));
  CHECK(bar_differential(bar_differential(parse_bar_chain(2, "1|x|y|1"))).is_zero());
  CHECK_THROWS_AS(bar_differential(BarChain(0)), std::domain_error);
}

TEST_CASE("property: d o d = 0 on bar bases of degree <= 3") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& c : bar_basis(n)) CHECK(bar_differential(bar_differential(c)).is_zero());
  }
}

TEST_CASE("property: ds + sd = Id on the bar resolution") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& c : bar_basis(n)) {
      CHECK(bar_differential(bar_contraction(c)) + bar_contraction(bar_differential(c)) == c);
    }
  }
}

TEST_CASE("cochain differential examples") {
  const BarCochain a = BarCochain::constant(M::x);
  const BarCochain da = cochain_differential(a);
  for (auto m : kRadicalBasis) CHECK(da({m}) == AlgebraElement(m) * M::x + AlgebraElement(M::x) * m);

  const BarCochain p1 = cochain_differential(BarCochain::constant(parse_element("xy+yx")));
  for (auto m : kRadicalBasis) CHECK(p1({m}).is_zero());

  const BarCochain dd = cochain_differential(da);
  for (const auto& t : all_mid_tuples(2)) CHECK(dd(t).is_zero());
}

TEST_CASE("property: delta o delta = 0 in degrees <= 2") {
  for (int n = 0; n <= 1; ++n) {
    const BarCochain dd = cochain_differential(cochain_differential(scrambled(n, 5)));
    for (const auto& t : all_mid_tuples(n + 2)) CHECK(dd(t).is_zero());
  }
}

TEST_CASE("cochains vanish on unit arguments") {
  const BarCochain f = scrambled(2, 1);
  CHECK(f({M::one, M::x}).is_zero());
  CHECK(f({M::x, M::one}).is_zero());
}

TEST_CASE("cup products") {
  CHECK(cup(BarCochain::constant(M::x), BarCochain::constant(M::y))({}) == AlgebraElement(M::xy));
  const BarCochain f = scrambled(2, 3);
  const BarCochain with_unit = cup(BarCochain::constant(M::one), f);
  for (const auto& t : all_mid_tuples(2)) CHECK(with_unit(t) == f(t));
}

TEST_CASE("property: cup is associative in degrees <= 1") {
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j <= 1; ++j) {
      for (int k = 0; k <= 1; ++k) {
        const BarCochain f = scrambled(i, 11);
        const BarCochain g = scrambled(j, 12);
        const BarCochain h = scrambled(k, 13);
        const BarCochain left = cup(cup(f, g), h);
        const BarCochain right = cup(f, cup(g, h));
        for (const auto& t : all_mid_tuples(i + j + k)) CHECK(left(t) == right(t));
      }
    }
  }
}

TEST_CASE("circle products") {
  const BarCochain f = scrambled(2, 21);
  const BarCochain unit = BarCochain::constant(M::one);
  for (int i = 1; i <= 2; ++i) {
    const BarCochain g = circle_i(f, unit, i);
    for (const auto& t : all_mid_tuples(1)) CHECK(g(t).is_zero());
  }

  const BarCochain u = scrambled(1, 22);
  const BarCochain v = scrambled(1, 23);
  const BarCochain uv = circle_i(u, v, 1);
  for (auto a : kRadicalBasis) {
    AlgebraElement expected;
    v({a}).for_each_term([&](M m) { expected += u({m}); });
    CHECK(uv({a}) == expected);
  }

  const BarCochain mult = product_cochain();
  const BarCochain composed = circle_i(mult, identity_cochain(), 1);
  for (const auto& t : all_mid_tuples(2)) CHECK(composed(t) == mult(t));

  CHECK_THROWS_AS(circle_i(f, u, 3), std::out_of_range);
  CHECK_THROWS_AS(circle_i(unit, u, 1), std::out_of_range);
  CHECK_THROWS_AS(circle(unit, unit), std::domain_error);
}

TEST_CASE("bracket: [f, f] = 0") {
  CHECK_THROWS_AS(bracket(BarCochain::constant(M::x), BarCochain::constant(M::x)), std::domain_error);
  for (int n = 1; n <= 3; ++n) {
    const BarCochain f = scrambled(n, 30 + static_cast<std::uint32_t>(n));
    const BarCochain b = bracket(f, f);
    for (const auto& t : all_mid_tuples(b.degree())) CHECK(b(t).is_zero());
  }
}

TEST_CASE("Hochschild chain differential") {
  CHECK(chain_differential(single(M::x, {M::y})) == single(M::xy, {}) + single(M::yx, {}));
  CHECK(chain_differential(chain_differential(single(M::x, {M::y, M::x}))).is_zero());
  CHECK(chain_differential(single(M::x, {M::yxy})).is_zero());
  CHECK_THROWS_AS(chain_differential(single(M::x, {})), std::domain_error);
}

TEST_CASE("Connes operator") {
  CHECK(connes_B(single(M::x, {})) == single(M::one, {M::x}));
  CHECK(connes_B(single(M::one, {M::y})).is_zero());
  CHECK(connes_B(single(M::x, {M::y})) == single(M::one, {M::x, M::y}) + single(M::one, {M::y, M::x}));
  CHECK(connes_B(connes_B(single(M::x, {M::y}))).is_zero());
  const auto c = single(M::x, {M::y, M::x});
  CHECK((chain_differential(connes_B(c)) + connes_B(chain_differential(c))).is_zero());
}

TEST_CASE("property: chain complex identities on bases of degree <= 3") {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& c : chain_basis(n)) {
      CHECK(connes_B(connes_B(c)).is_zero());
      if (n >= 1) {
        CHECK((chain_differential(connes_B(c)) + connes_B(chain_differential(c))).is_zero());
      }
      if (n >= 2) CHECK(chain_differential(chain_differential(c)).is_zero());
    }
  }
}

TEST_CASE("Tradler Delta") {
  CHECK_THROWS_AS(tradler_delta(BarCochain::constant(M::x)), std::domain_error);
  CHECK(tradler_delta(BarCochain::zero(1))({}).is_zero());
  // Delta of the identity: sum over b of <b, 1> b* = xyxy*.
  CHECK(tradler_delta(identity_cochain())({}) == AlgebraElement(M::one));
}

TEST_CASE("property: Delta is dual to B") {
  for (int n = 1; n <= 3; ++n) {
    const BarCochain f = scrambled(n, 40 + static_cast<std::uint32_t>(n));
    const BarCochain df = tradler_delta(f);
    for (const auto& c : chain_basis(n - 1)) CHECK(pair(df, c) == pair(f, connes_B(c)));
  }
}

TEST_CASE("memoized cochains are consistent across threads") {
  const BarCochain reference = cochain_differential(scrambled(2, 50));
  const BarCochain shared = cochain_differential(scrambled(2, 50));
  const auto tuples = all_mid_tuples(3);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&shared, &tuples, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < tuples.size() + static_cast<std::size_t>(w); ++i) {
        (void)shared(tuples[i % tuples.size()]);
      }
    });
  }
  for (auto& t : workers) t.join();
  CHECK(shared.cached_values() == tuples.size());
  for (const auto& t : tuples) CHECK(shared(t) == reference(t));
}
