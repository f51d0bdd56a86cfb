#pragma once

// Brute-force counts used as independent references by the tests.

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hhq8/algebra.hpp"
#include "hhq8/hhring.hpp"
#include "hhq8/linalg.hpp"

namespace hhq8::oracle {

/// Counts orbits of Q8 acting on itself by conjugation.
inline int conjugacy_classes_of_q8() {
  const GroupAlgebraOracle group;
  std::set<std::set<int>> classes;
  for (int g = 0; g < 8; ++g) {
    std::set<int> orbit;
    for (int h = 0; h < 8; ++h) orbit.insert(group.group_product(group.group_product(h, g), group.group_inverse(h)));
    classes.insert(orbit);
  }
  return static_cast<int>(classes.size());
}

inline int degree_zero_factors(const GeneratorMonomial& m) {
  int n = 0;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) n += generator_catalog()[i].degree == 0 ? m[i] : 0;
  return n;
}

/// Monomials of the given degree with at most one degree-0 factor.
inline std::vector<GeneratorMonomial> enumerate_monomials(int degree) {
  std::vector<GeneratorMonomial> out;
  GeneratorMonomial m{};
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int left, int ps) {
    if (i == kGeneratorCount) {
      if (left == 0) out.push_back(m);
      return;
    }
    const int d = generator_catalog()[i].degree;
    for (int e = 0; d == 0 ? ps + e <= 1 : d * e <= left; ++e) {
      m[i] = e;
      rec(i + 1, left - d * e, ps + (d == 0 ? e : 0));
    }
    m[i] = 0;
  };
  rec(0, degree, 0);
  return out;
}

/// Dimension of the degree-n part of the presented ring: monomials modulo
/// monomial multiples of the relations. Every product of two degree-0
/// generators is itself a relation, so monomials with two such factors are
/// dropped from the count.
inline int presentation_dimension(int n) {
  const auto basis = enumerate_monomials(n);
  std::map<GeneratorMonomial, std::size_t> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = i;
  std::vector<GF2Vector> multiples;
  for (const auto& r : presentation_relations()) {
    if (r.degree() > n) continue;
    for (const auto& m : enumerate_monomials(n - r.degree())) {
      GF2Vector v(basis.size());
      for (const auto& t : r.terms) {
        GeneratorMonomial product{};
        for (std::size_t i = 0; i < kGeneratorCount; ++i) product[i] = m[i] + t[i];
        if (degree_zero_factors(product) <= 1) v.flip(position.at(product));
      }
      multiples.push_back(v);
    }
  }
  return static_cast<int>(basis.size() - rank(GF2Matrix::from_columns(basis.size(), multiples)));
}

}  // namespace hhq8::oracle
