#include "hhq8/algebra.hpp"

#include <stdexcept>
#include <string>

namespace hhq8 {

namespace {

constexpr std::array<std::string_view, kAlgebraDim> kNames = {"1", "x", "y", "xy", "yx", "xyx", "yxy", "xyxy"};
constexpr std::array<std::string_view, kAlgebraDim> kWords = {"", "x", "y", "xy", "yx", "xyx", "yxy", "xyxy"};

// GF(4) = {0, 1, w, w^2} encoded 0, 1, 2, 3; addition is XOR.
std::uint8_t f4_mul(std::uint8_t a, std::uint8_t b) {
  if (a == 0 || b == 0) return 0;
  constexpr std::array<int, 4> log = {-1, 0, 1, 2};
  constexpr std::array<std::uint8_t, 3> exp = {1, 2, 3};
  return exp[(log[a] + log[b]) % 3];
}

std::uint8_t f4_inv(std::uint8_t a) {
  constexpr std::array<std::uint8_t, 4> inv = {0, 1, 3, 2};
  if (a == 0) throw std::domain_error("inverse of zero in GF(4)");
  return inv[a];
}

using F4Vector = std::array<std::uint8_t, GroupAlgebraOracle::kOrder>;

// Solves sum_i c_i images[i] = target over GF(4) by Gauss-Jordan on the
// 8x8 system. Returns false if the images are dependent or the target lies
// outside their span.
bool f4_solve(const std::array<F4Vector, kAlgebraDim>& images, const F4Vector& target,
              std::array<std::uint8_t, kAlgebraDim>& coeffs) {
  constexpr std::size_t n = kAlgebraDim;
  // rows: group coordinates, columns: images, last column: target.
  std::array<std::array<std::uint8_t, n + 1>, GroupAlgebraOracle::kOrder> aug{};
  for (std::size_t g = 0; g < GroupAlgebraOracle::kOrder; ++g) {
    for (std::size_t i = 0; i < n; ++i) aug[g][i] = images[i][g];
    aug[g][n] = target[g];
  }
  std::size_t row = 0;
  std::array<std::size_t, n> pivot_row{};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = row;
    while (p < aug.size() && aug[p][col] == 0) ++p;
    if (p == aug.size()) return false;
    std::swap(aug[row], aug[p]);
    const std::uint8_t inv = f4_inv(aug[row][col]);
    for (auto& v : aug[row]) v = f4_mul(v, inv);
    for (std::size_t r = 0; r < aug.size(); ++r) {
      if (r == row || aug[r][col] == 0) continue;
      const std::uint8_t f = aug[r][col];
      for (std::size_t c = 0; c <= n; ++c) aug[r][c] ^= f4_mul(f, aug[row][c]);
    }
    pivot_row[col] = row++;
  }
  for (std::size_t r = row; r < aug.size(); ++r) {
    if (aug[r][n] != 0) return false;
  }
  for (std::size_t col = 0; col < n; ++col) coeffs[col] = aug[pivot_row[col]][n];
  return true;
}

}  // namespace

std::string_view name(Monomial m) { return kNames[index(m)]; }
std::string_view word(Monomial m) { return kWords[index(m)]; }

std::optional<Monomial> parse_monomial(std::string_view text) {
  for (auto m : kBasis) {
    if (kNames[index(m)] == text) return m;
  }
  return std::nullopt;
}

std::optional<Monomial> reduce_word(std::string_view input) {
  std::string w(input);
  for (char c : w) {
    if (c != 'x' && c != 'y') throw std::invalid_argument("word must be over {x, y}");
  }
  while (true) {
    if (w.size() >= 5) return std::nullopt;
    bool rewrote = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        w.replace(i, 2, w[i] == 'x' ? "yxy" : "xyx");
        rewrote = true;
        break;
      }
      if (w.compare(i, 4, "yxyx") == 0) {
        w.replace(i, 4, "xyxy");
        rewrote = true;
        break;
      }
    }
    if (!rewrote) break;
  }
  for (auto m : kBasis) {
    if (kWords[index(m)] == w) return m;
  }
  throw std::logic_error("rewriting produced a non-basis word: " + w);
}

AlgebraElement AlgebraElement::from_vector(const GF2Vector& v) {
  if (v.size() != kAlgebraDim) throw std::invalid_argument("algebra vector must have length 8");
  std::uint8_t bits = 0;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    if (v.get(i)) bits |= static_cast<std::uint8_t>(1U << i);
  }
  return from_bits(bits);
}

GF2Vector AlgebraElement::to_vector() const {
  GF2Vector v(kAlgebraDim);
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    if ((bits_ >> i) & 1U) v.set(i, true);
  }
  return v;
}

MultiplicationTable MultiplicationTable::from_rewriting() {
  MultiplicationTable t;
  for (auto a : kBasis) {
    for (auto b : kBasis) {
      std::string w(word(a));
      w += word(b);
      const auto r = reduce_word(w);
      t.table_[index(a)][index(b)] = r ? AlgebraElement(*r) : AlgebraElement();
    }
  }
  return t;
}

const MultiplicationTable& MultiplicationTable::instance() {
  static const MultiplicationTable table = [] {
    MultiplicationTable t = from_rewriting();
    const GroupAlgebraOracle oracle;
    if (!oracle.images_independent() || !oracle.relations_hold()) {
      throw std::logic_error("group-algebra oracle does not model the presentation");
    }
    for (auto a : kBasis) {
      for (auto b : kBasis) {
        if (t.product(a, b) != oracle.pulled_back_product(a, b)) {
          throw std::logic_error("rewriting table disagrees with group algebra at " + std::string(name(a)) +
                                 "*" + std::string(name(b)));
        }
      }
    }
    return t;
  }();
  return table;
}

AlgebraElement multiply(AlgebraElement a, AlgebraElement b) {
  const auto& table = MultiplicationTable::instance();
  AlgebraElement out;
  a.for_each_term([&](Monomial ma) { b.for_each_term([&](Monomial mb) { out += table.product(ma, mb); }); });
  return out;
}

std::string to_string(AlgebraElement a) {
  if (a.is_zero()) return "0";
  std::string s;
  a.for_each_term([&](Monomial m) {
    if (!s.empty()) s += '+';
    s += name(m);
  });
  return s;
}

AlgebraElement parse_element(std::string_view text) {
  AlgebraElement out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw std::invalid_argument("malformed algebra element: " + std::string(text));
    if (token != "0") {
      const auto m = parse_monomial(token);
      if (!m) throw std::invalid_argument("unknown monomial: " + token);
      out += *m;
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (c == '+') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

GroupAlgebraOracle::GroupAlgebraOracle() {
  // Unit quaternions 1, i, j, k: product table as (sign, unit).
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> units = {{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  for (int g = 0; g < 8; ++g) {
    for (int h = 0; h < 8; ++h) {
      const auto [s, u] = units[g % 4][h % 4];
      group_[g][h] = 4 * ((g / 4 + h / 4 + s) % 2) + u;
    }
  }

  auto mul = [&](const F4Vector& a, const F4Vector& b) {
    F4Vector r{};
    for (int g = 0; g < 8; ++g) {
      for (int h = 0; h < 8; ++h) r[group_[g][h]] ^= f4_mul(a[g], b[h]);
    }
    return r;
  };
  const F4Vector one = {1, 0, 0, 0, 0, 0, 0, 0};
  const F4Vector x = {0, 1, 2, 3, 0, 0, 0, 0};
  const F4Vector y = {0, 1, 3, 2, 0, 0, 0, 0};
  for (auto m : kBasis) {
    F4Vector v = one;
    for (char c : word(m)) v = mul(v, c == 'x' ? x : y);
    images_[index(m)] = v;
  }

  const F4Vector zero{};
  auto sum = [](F4Vector a, const F4Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return a;
  };
  const F4Vector x2 = mul(x, x);
  const F4Vector y2 = mul(y, y);
  relations_hold_ = sum(x2, mul(mul(y, x), y)) == zero && sum(y2, mul(mul(x, y), x)) == zero &&
                    mul(x2, x2) == zero && mul(y2, y2) == zero;

  std::array<std::uint8_t, kAlgebraDim> coeffs{};
  independent_ = f4_solve(images_, zero, coeffs);
}

int GroupAlgebraOracle::group_inverse(int g) const {
  for (int h = 0; h < 8; ++h) {
    if (group_[g][h] == 0) return h;
  }
  throw std::logic_error("group element without inverse");
}

AlgebraElement GroupAlgebraOracle::pulled_back_product(Monomial a, Monomial b) const {
  F4Vector prod{};
  const auto& ia = images_[index(a)];
  const auto& ib = images_[index(b)];
  for (int g = 0; g < 8; ++g) {
    for (int h = 0; h < 8; ++h) prod[group_[g][h]] ^= f4_mul(ia[g], ib[h]);
  }
  std::array<std::uint8_t, kAlgebraDim> coeffs{};
  if (!f4_solve(images_, prod, coeffs)) throw std::logic_error("product outside the span of monomial images");
  std::uint8_t bits = 0;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    if (coeffs[i] > 1) throw std::logic_error("structure constant outside GF(2)");
    if (coeffs[i] == 1) bits |= static_cast<std::uint8_t>(1U << i);
  }
  return AlgebraElement::from_bits(bits);
}

bool bilinear_form(AlgebraElement a, AlgebraElement b) { return (a * b).coeff(Monomial::xyxy); }

bool socle_pairing_with_one(AlgebraElement a) { return a.coeff(Monomial::xyxy); }

Monomial dual_basis(Monomial m) {
  for (auto b : kBasis) {
    if (bilinear_form(m, b)) return b;
  }
  throw std::logic_error("form is degenerate at " + std::string(name(m)));
}

std::vector<DerivationTerm> bimodule_derivation_C(Monomial m) {
  const std::string_view w = word(m);
  std::vector<DerivationTerm> out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const auto prefix = reduce_word(w.substr(0, j));
    const auto suffix = reduce_word(w.substr(j + 1));
    // Subwords of basis words are basis words, never zero.
    out.push_back({*prefix, w[j] == 'x' ? Letter::x : Letter::y, *suffix});
  }
  return out;
}

}  // namespace hhq8

namespace hhq8 {

Report verify_algebra() {
  Report report("algebra");
  const auto& table = MultiplicationTable::instance();

  const GroupAlgebraOracle oracle;
  int agree = 0;
  for (auto a : kBasis) {
    for (auto b : kBasis) agree += table.product(a, b) == oracle.pulled_back_product(a, b) ? 1 : 0;
  }
  report.add("multiplication table agrees with the group algebra (" + std::to_string(agree) + "/64)", agree == 64);
  report.add("group algebra images independent and satisfy the relations",
             oracle.images_independent() && oracle.relations_hold());

  bool assoc = true;
  bool form_assoc = true;
  for (auto a : kBasis) {
    for (auto b : kBasis) {
      for (auto c : kBasis) {
        const AlgebraElement A = a;
        const AlgebraElement B = b;
        const AlgebraElement C = c;
        if ((A * B) * C != A * (B * C)) assoc = false;
        if (bilinear_form(A * B, C) != bilinear_form(A, B * C)) form_assoc = false;
      }
    }
  }
  report.add("associativity on 512 triples", assoc);

  const AlgebraElement x = Monomial::x;
  const AlgebraElement y = Monomial::y;
  const bool relations = (x * x + y * x * y).is_zero() && (y * y + x * y * x).is_zero() &&
                         (x * x * x * x).is_zero() && (y * y * y * y).is_zero();
  report.add("x^2 + yxy = y^2 + xyx = x^4 = y^4 = 0", relations);

  bool symmetric = true;
  GF2Matrix gram(kAlgebraDim, kAlgebraDim);
  for (auto a : kBasis) {
    for (auto b : kBasis) {
      if (bilinear_form(a, b) != bilinear_form(b, a)) symmetric = false;
      gram.set(index(a), index(b), bilinear_form(a, b));
    }
  }
  report.add("form is symmetric", symmetric);
  report.add("form is associative on 512 triples", form_assoc);
  report.add("form is nondegenerate", rank(gram) == kAlgebraDim);

  using M = Monomial;
  const std::array<std::pair<M, M>, kAlgebraDim> dual_table = {{{M::one, M::xyxy},
                                                                 {M::x, M::yxy},
                                                                 {M::y, M::xyx},
                                                                 {M::xy, M::xy},
                                                                 {M::yx, M::yx},
                                                                 {M::xyx, M::y},
                                                                 {M::yxy, M::x},
                                                                 {M::xyxy, M::one}}};
  std::string dual_fail;
  for (const auto& [b, dual] : dual_table) {
    if (dual_basis(b) != dual || !bilinear_form(b, dual)) dual_fail = std::string(name(b));
  }
  report.add("dual basis table", dual_fail.empty(), dual_fail);
  return report;
}

}  // namespace hhq8
