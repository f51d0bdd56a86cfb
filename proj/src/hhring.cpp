#include "hhq8/hhring.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhq8 {

namespace {

constexpr std::array<std::string_view, 10> kSuperscripts = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(int n) {
  std::string s;
  for (char c : std::to_string(n)) s += kSuperscripts[static_cast<std::size_t>(c - '0')];
  return s;
}

GF2Matrix cochain_differential_matrix(int n) {
  const std::size_t dim = MinCochain::dimension(n);
  std::vector<GF2Vector> columns;
  for (std::size_t i = 0; i < dim; ++i) {
    columns.push_back(min_cochain_differential(MinCochain::from_vector(n, GF2Vector::unit(dim, i))).to_vector());
  }
  return GF2Matrix::from_columns(MinCochain::dimension(n + 1), columns);
}

// Strict order used to pick class witnesses.
bool lighter(const GF2Vector& a, const GF2Vector& b) {
  const auto wa = a.weight();
  const auto wb = b.weight();
  if (wa != wb) return wa < wb;
  std::size_t sa = 0;
  std::size_t sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.get(i)) sa += i;
    if (b.get(i)) sb += i;
  }
  if (sa != sb) return sa < sb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.get(i) != b.get(i)) return b.get(i);
  }
  return false;
}

}  // namespace

const std::array<GeneratorInfo, kGeneratorCount>& generator_catalog() {
  static const std::array<GeneratorInfo, kGeneratorCount> catalog = {{
      {Generator::p1, "p1", "p₁", 0, "xy+yx"},
      {Generator::p2, "p2", "p₂", 0, "xyx"},
      {Generator::p2p, "p2p", "p₂′", 0, "yxy"},
      {Generator::p3, "p3", "p₃", 0, "xyxy"},
      {Generator::u1, "u1", "u₁", 1, "(1+xy,x)"},
      {Generator::u1p, "u1p", "u₁′", 1, "(y,1+yx)"},
      {Generator::v1, "v1", "v₁", 2, "(y,x)"},
      {Generator::v2, "v2", "v₂", 2, "(x,0)"},
      {Generator::v2p, "v2p", "v₂′", 2, "(0,y)"},
      {Generator::z, "z", "z", 4, "1"},
  }};
  return catalog;
}

const GeneratorInfo& info(Generator g) { return generator_catalog()[static_cast<std::size_t>(g)]; }

std::optional<Generator> parse_generator(std::string_view name) {
  for (const auto& g : generator_catalog()) {
    if (g.ascii == name || g.unicode == name) return g.id;
  }
  return std::nullopt;
}

GeneratorMonomial monomial_of(std::initializer_list<Generator> factors) {
  GeneratorMonomial m{};
  for (auto g : factors) ++m[static_cast<std::size_t>(g)];
  return m;
}

int monomial_degree(const GeneratorMonomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) d += m[i] * generator_catalog()[i].degree;
  return d;
}

int p_factor_count(const GeneratorMonomial& m) { return m[0] + m[1] + m[2] + m[3]; }

std::string ascii_name(const GeneratorMonomial& m) {
  std::string s;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += generator_catalog()[i].ascii;
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string unicode_name(const GeneratorMonomial& m) {
  std::string s;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    if (m[i] == 0) continue;
    s += generator_catalog()[i].unicode;
    if (m[i] > 1) s += superscript(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<GeneratorMonomial> generator_monomials(int degree) {
  std::vector<GeneratorMonomial> out;
  if (degree < 0) return out;
  // Exponents of u1, u1', v1, v2, v2', z with the right degree.
  std::vector<GeneratorMonomial> positive;
  for (int e = 0; 4 * e <= degree; ++e) {
    for (int v1 = 0; 4 * e + 2 * v1 <= degree; ++v1) {
      for (int v2 = 0; 4 * e + 2 * (v1 + v2) <= degree; ++v2) {
        for (int v3 = 0; 4 * e + 2 * (v1 + v2 + v3) <= degree; ++v3) {
          const int rest = degree - 4 * e - 2 * (v1 + v2 + v3);
          for (int a = 0; a <= rest; ++a) {
            GeneratorMonomial m{};
            m[4] = a;
            m[5] = rest - a;
            m[6] = v1;
            m[7] = v2;
            m[8] = v3;
            m[9] = e;
            positive.push_back(m);
          }
        }
      }
    }
  }
  for (const auto& m : positive) {
    out.push_back(m);
    for (std::size_t p = 0; p < 4; ++p) {
      auto q = m;
      ++q[p];
      out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

const std::vector<Relation>& presentation_relations() {
  using G = Generator;
  static const std::vector<Relation> relations = [] {
    std::vector<Relation> r;
    auto add = [&](std::vector<GeneratorMonomial> terms) {
      std::string label;
      for (const auto& t : terms) label += (label.empty() ? "" : " + ") + ascii_name(t);
      r.push_back({label, std::move(terms)});
    };
    // Degree 0.
    add({monomial_of({G::p1, G::p1})});
    add({monomial_of({G::p2, G::p2})});
    add({monomial_of({G::p2p, G::p2p})});
    add({monomial_of({G::p1, G::p2})});
    add({monomial_of({G::p1, G::p2p})});
    add({monomial_of({G::p2, G::p2p})});
    add({monomial_of({G::p3, G::p3})});
    add({monomial_of({G::p1, G::p3})});
    add({monomial_of({G::p2, G::p3})});
    add({monomial_of({G::p2p, G::p3})});
    // Degree 1.
    add({monomial_of({G::p2, G::u1}), monomial_of({G::p2p, G::u1p})});
    add({monomial_of({G::p2p, G::u1}), monomial_of({G::p1, G::u1p})});
    add({monomial_of({G::p1, G::u1}), monomial_of({G::p2, G::u1p})});
    // Degree 2.
    add({monomial_of({G::p1, G::v1})});
    add({monomial_of({G::p2, G::v2})});
    add({monomial_of({G::p2p, G::v2p})});
    add({monomial_of({G::p3, G::v1})});
    add({monomial_of({G::p3, G::v2})});
    add({monomial_of({G::p3, G::v2p})});
    add({monomial_of({G::u1, G::u1p})});
    add({monomial_of({G::p2, G::v1}), monomial_of({G::p1, G::v2p})});
    add({monomial_of({G::p2, G::v1}), monomial_of({G::p2p, G::v2})});
    add({monomial_of({G::p2, G::v1}), monomial_of({G::p3, G::u1, G::u1})});
    add({monomial_of({G::p2p, G::v1}), monomial_of({G::p1, G::v2})});
    add({monomial_of({G::p2p, G::v1}), monomial_of({G::p2, G::v2p})});
    add({monomial_of({G::p2p, G::v1}), monomial_of({G::p3, G::u1p, G::u1p})});
    // Degree 3.
    add({monomial_of({G::u1p, G::v2}), monomial_of({G::u1, G::v2p})});
    add({monomial_of({G::u1p, G::v1}), monomial_of({G::u1, G::v2})});
    add({monomial_of({G::u1, G::v1}), monomial_of({G::u1p, G::v2p})});
    add({monomial_of({G::u1, G::u1, G::u1}), monomial_of({G::u1p, G::u1p, G::u1p})});
    // Degree 4.
    add({monomial_of({G::v1, G::v1})});
    add({monomial_of({G::v2, G::v2})});
    add({monomial_of({G::v2p, G::v2p})});
    add({monomial_of({G::v1, G::v2})});
    add({monomial_of({G::v1, G::v2p})});
    add({monomial_of({G::v2, G::v2p})});
    return r;
  }();
  return relations;
}

HochschildRing::HochschildRing() : psi_(PsiEvaluator::standard()), phi_(&PhiTable::standard()) {
  GF2Matrix previous;  // delta^{n-1}
  for (int n = 0; n <= kMaxDegree; ++n) {
    DegreeData d;
    const std::size_t dim = MinCochain::dimension(n);
    if (n > 0) {
      for (const auto& v : image_basis(previous)) d.coboundaries.push_back(MinCochain::from_vector(n, v));
    }
    const GF2Matrix current = cochain_differential_matrix(n);
    for (const auto& v : kernel_basis(current)) d.cocycles.push_back(MinCochain::from_vector(n, v));
    std::vector<GF2Vector> spanning;
    for (const auto& c : d.coboundaries) spanning.push_back(c.to_vector());
    d.echelon = EchelonBasis(dim, spanning);
    degrees_.push_back(std::move(d));
    previous = current;
  }
}

HochschildRing& HochschildRing::standard() {
  static HochschildRing ring;
  return ring;
}

const HochschildRing::DegreeData& HochschildRing::data(int n) const {
  if (n < 0 || n > kMaxDegree) throw std::domain_error("cohomological degree outside 0..8");
  return degrees_[static_cast<std::size_t>(n)];
}

const std::vector<MinCochain>& HochschildRing::coboundary_space(int n) const { return data(n).coboundaries; }
const std::vector<MinCochain>& HochschildRing::cocycle_space(int n) const { return data(n).cocycles; }

int HochschildRing::hh_dim(int n) const {
  return static_cast<int>(data(n).cocycles.size() - data(n).coboundaries.size());
}

bool HochschildRing::is_cocycle(const MinCochain& f) const { return min_cochain_differential(f).is_zero(); }

CohomologyClass HochschildRing::make_class(MinCochain f) const {
  if (!is_cocycle(f)) throw std::invalid_argument("not a cocycle: " + to_string(f));
  return {std::move(f)};
}

bool HochschildRing::class_eq(const CohomologyClass& a, const CohomologyClass& b) const {
  if (a.degree() != b.degree()) throw std::invalid_argument("classes of different degrees");
  return data(a.degree()).echelon.contains((a.rep + b.rep).to_vector());
}

bool HochschildRing::is_zero(const CohomologyClass& a) const { return data(a.degree()).echelon.contains(a.rep.to_vector()); }

MinCochain HochschildRing::normal_form(const CohomologyClass& a) const {
  return MinCochain::from_vector(a.degree(), data(a.degree()).echelon.reduce(a.rep.to_vector()));
}

MinCochain HochschildRing::witness(const CohomologyClass& a) const {
  const auto& rows = data(a.degree()).echelon.rows();
  GF2Vector current = a.rep.to_vector();
  GF2Vector best = current;
  // Gray-code walk over the coset rep + span(rows).
  const std::size_t count = std::size_t{1} << rows.size();
  for (std::size_t i = 1; i < count; ++i) {
    current += rows[static_cast<std::size_t>(__builtin_ctzll(i))];
    if (lighter(current, best)) best = current;
  }
  return MinCochain::from_vector(a.degree(), best);
}

CohomologyClass HochschildRing::generator(Generator g) const {
  const auto& i = info(g);
  return make_class(parse_min_cochain(i.degree, i.rep));
}

CohomologyClass HochschildRing::monomial_class(const GeneratorMonomial& m) {
  if (auto it = monomials_.find(m); it != monomials_.end()) return it->second;
  CohomologyClass value;
  const auto first = std::find_if(m.begin(), m.end(), [](int e) { return e > 0; });
  if (first == m.end()) {
    value = make_class(MinCochain(0, {Monomial::one}));
  } else {
    auto rest = m;
    --rest[static_cast<std::size_t>(first - m.begin())];
    value = cup(generator(static_cast<Generator>(first - m.begin())), monomial_class(rest));
  }
  monomials_.emplace(m, value);
  return value;
}

CohomologyClass HochschildRing::cup(const CohomologyClass& a, const CohomologyClass& b) const {
  if (a.degree() + b.degree() > kMaxDegree) throw std::domain_error("cup product beyond degree 8");
  const BarCochain product = hhq8::cup(transport_to_bar(a.rep, psi_), transport_to_bar(b.rep, psi_));
  return make_class(transport_to_min(product, *phi_));
}

CohomologyClass HochschildRing::delta(const CohomologyClass& a) const {
  if (a.degree() < 1 || a.degree() > kMaxDegree) throw std::domain_error("Delta needs degree 1..8");
  return make_class(transport_to_min(tradler_delta(transport_to_bar(a.rep, psi_)), *phi_));
}

CohomologyClass HochschildRing::bracket(const CohomologyClass& a, const CohomologyClass& b) const {
  const int n = a.degree() + b.degree() - 1;
  if (n < 0 || n > kMaxDegree) throw std::domain_error("bracket result outside degrees 0..8");
  return make_class(transport_to_min(hhq8::bracket(transport_to_bar(a.rep, psi_), transport_to_bar(b.rep, psi_)), *phi_));
}

Report verify_generalov(HochschildRing& ring, int n_max) {
  if (n_max > 4) throw std::invalid_argument("relations are listed up to degree 4");
  Report report("relations");
  for (const auto& r : presentation_relations()) {
    if (r.degree() > n_max) continue;
    CohomologyClass sum = ring.zero_class(r.degree());
    for (const auto& t : r.terms) sum.rep += ring.monomial_class(t).rep;
    report.add("relation " + r.label + " = 0", ring.is_zero(sum), ring.is_zero(sum) ? "" : to_string(ring.normal_form(sum)));
  }

  using G = Generator;
  const std::vector<std::pair<GeneratorMonomial, const char*>> witnesses = {
      {monomial_of({G::u1, G::u1}), "(1,y)"},
      {monomial_of({G::u1p, G::u1p}), "(x,1)"},
      {monomial_of({G::u1p, G::v2p}), "y"},
      {monomial_of({G::u1, G::v2}), "x"},
      {monomial_of({G::u1p, G::v2}), "xy"},
      {monomial_of({G::p1, G::u1}), "(xyxy,xyx)"},
      {monomial_of({G::p2, G::u1p}), "(xyxy,xyx)"},
      {monomial_of({G::p2, G::u1}), "(xyx,0)"},
      {monomial_of({G::p2p, G::u1p}), "(xyx,0)"},
      {monomial_of({G::p2p, G::u1}), "(yxy,xyxy)"},
      {monomial_of({G::p1, G::u1p}), "(yxy,xyxy)"},
      {monomial_of({G::p3, G::u1}), "(xyxy,0)"},
      {monomial_of({G::p3, G::u1p}), "(0,xyxy)"},
  };
  for (const auto& [m, rep] : witnesses) {
    if (monomial_degree(m) > n_max) continue;
    const auto got = ring.monomial_class(m);
    const CohomologyClass expected = ring.make_class(parse_min_cochain(got.degree(), rep));
    const bool ok = ring.class_eq(got, expected);
    report.add("cup " + ascii_name(m) + " = " + rep, ok, ok ? "" : "got " + to_string(got.rep));
  }
  return report;
}

const std::vector<std::pair<GeneratorMonomial, std::vector<GeneratorMonomial>>>& expected_nonzero_delta() {
  using G = Generator;
  static const std::vector<std::pair<GeneratorMonomial, std::vector<GeneratorMonomial>>> table = {
      {monomial_of({G::p1, G::u1}), {monomial_of({G::p2p})}},
      {monomial_of({G::p3, G::u1}), {monomial_of({G::p2p})}},
      {monomial_of({G::p2, G::u1p}), {monomial_of({G::p2p})}},
      {monomial_of({G::p2, G::u1}), {monomial_of({G::p1})}},
      {monomial_of({G::p2p, G::u1p}), {monomial_of({G::p1})}},
      {monomial_of({G::p2p, G::u1}), {monomial_of({G::p2})}},
      {monomial_of({G::p1, G::u1p}), {monomial_of({G::p2})}},
      {monomial_of({G::p3, G::u1p}), {monomial_of({G::p2})}},
      {monomial_of({G::u1, G::v1}), {monomial_of({G::u1p, G::u1p}), monomial_of({G::v2})}},
      {monomial_of({G::u1p, G::v2p}), {monomial_of({G::u1p, G::u1p}), monomial_of({G::v2})}},
      {monomial_of({G::u1p, G::v1}), {monomial_of({G::u1, G::u1}), monomial_of({G::v2p})}},
      {monomial_of({G::u1, G::v2}), {monomial_of({G::u1, G::u1}), monomial_of({G::v2p})}},
      {monomial_of({G::u1p, G::v2}), {monomial_of({G::v1})}},
      {monomial_of({G::u1, G::v2p}), {monomial_of({G::v1})}},
  };
  return table;
}

StructureTables build_structure_tables(HochschildRing& ring) {
  using G = Generator;
  StructureTables tables;
  std::vector<GeneratorMonomial> arguments;
  auto push = [&](const GeneratorMonomial& m) {
    if (std::find(arguments.begin(), arguments.end(), m) == arguments.end()) arguments.push_back(m);
  };
  for (const auto& g : generator_catalog()) {
    if (g.degree > 0) push(monomial_of({g.id}));
  }
  for (auto v : {G::v1, G::v2, G::v2p}) {
    for (auto p : {G::p1, G::p2, G::p2p, G::p3}) push(monomial_of({v, p}));
  }
  for (const auto& g : generator_catalog()) push(monomial_of({g.id, G::z}));
  for (const auto& [m, value] : expected_nonzero_delta()) push(m);
  for (const auto& m : arguments) tables.delta.push_back({m, ring.delta(ring.monomial_class(m))});

  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    for (std::size_t j = i + 1; j < kGeneratorCount; ++j) {
      const auto a = static_cast<Generator>(i);
      const auto b = static_cast<Generator>(j);
      if (info(a).degree + info(b).degree == 0) {
        tables.bracket.push_back({a, b, ring.zero_class(0), true});
      } else {
        tables.bracket.push_back({a, b, ring.bracket(ring.generator(a), ring.generator(b))});
      }
    }
  }
  return tables;
}

namespace {

CohomologyClass sum_of(HochschildRing& ring, int degree, const std::vector<GeneratorMonomial>& terms) {
  CohomologyClass out = ring.zero_class(degree);
  for (const auto& t : terms) out.rep += ring.monomial_class(t).rep;
  return out;
}

// Delta, or the zero class one degree down when the degree is 0 (then the
// result has no degree; callers only add it to other vanishing terms).
std::optional<CohomologyClass> delta_or_none(HochschildRing& ring, const CohomologyClass& a) {
  if (a.degree() == 0) return std::nullopt;
  return ring.delta(a);
}

}  // namespace

Report verify_bv(HochschildRing& ring) {
  using G = Generator;
  Report report("bv");
  const StructureTables tables = build_structure_tables(ring);

  auto expected_delta = [&](const GeneratorMonomial& m) -> std::optional<std::vector<GeneratorMonomial>> {
    for (const auto& [arg, value] : expected_nonzero_delta()) {
      if (arg == m) return value;
    }
    return std::nullopt;
  };

  std::string gen_fail;
  std::string vp_fail;
  std::string z_fail;
  std::string nonzero_fail;
  for (const auto& e : tables.delta) {
    const auto expected = expected_delta(e.argument);
    const CohomologyClass want = expected ? sum_of(ring, e.value.degree(), *expected) : ring.zero_class(e.value.degree());
    if (ring.class_eq(e.value, want)) continue;
    const std::string msg = "Delta(" + ascii_name(e.argument) + ") = " + to_string(ring.normal_form(e.value));
    const auto& m = e.argument;
    if (expected) {
      if (nonzero_fail.empty()) nonzero_fail = msg;
    } else if (m[static_cast<std::size_t>(G::z)] > 0 && m != monomial_of({G::z})) {
      if (z_fail.empty()) z_fail = msg;
    } else if (p_factor_count(m) > 0) {
      if (vp_fail.empty()) vp_fail = msg;
    } else if (gen_fail.empty()) {
      gen_fail = msg;
    }
  }
  report.add("Delta vanishes on the generators", gen_fail.empty(), gen_fail);
  report.add("Delta(v p) = 0 for v in {v1,v2,v2p}, p in {p1,p2,p2p,p3}", vp_fail.empty(), vp_fail);
  report.add("Delta(a z) = 0 for every generator a", z_fail.empty(), z_fail);
  report.add("nonzero Delta values on products", nonzero_fail.empty(), nonzero_fail);

  // Brackets: generator pairs have [a,b] = Delta(ab) since Delta vanishes on generators.
  std::string bracket_fail;
  std::size_t nonzero_brackets = 0;
  for (const auto& e : tables.bracket) {
    if (e.vanishes_by_degree) continue;
    const auto m = monomial_of({e.a, e.b});
    const auto expected = expected_delta(m);
    const CohomologyClass want = expected ? sum_of(ring, e.value.degree(), *expected) : ring.zero_class(e.value.degree());
    if (expected) ++nonzero_brackets;
    if (!ring.class_eq(e.value, want) && bracket_fail.empty()) {
      bracket_fail = "[" + std::string(info(e.a).ascii) + "," + std::string(info(e.b).ascii) +
                     "] = " + to_string(ring.normal_form(e.value));
    }
  }
  report.add("bracket table on all " + std::to_string(tables.bracket.size()) + " generator pairs (" +
                 std::to_string(nonzero_brackets) + " nonzero)",
             bracket_fail.empty(), bracket_fail);

  // Delta o Delta = 0.
  std::string dd_fail;
  auto check_dd = [&](const GeneratorMonomial& m, const CohomologyClass& d) {
    if (d.degree() == 0 || !dd_fail.empty()) return;
    if (!ring.is_zero(ring.delta(d))) dd_fail = "on " + ascii_name(m);
  };
  for (const auto& e : tables.delta) check_dd(e.argument, e.value);
  report.add("Delta o Delta = 0 on generators and products", dd_fail.empty(), dd_fail);

  // BV identity: [a,b] = Delta(ab) + Delta(a) b + a Delta(b).
  std::string bv_fail;
  for (const auto& e : tables.bracket) {
    if (e.vanishes_by_degree) continue;
    const auto a = ring.generator(e.a);
    const auto b = ring.generator(e.b);
    const auto ab = ring.monomial_class(monomial_of({e.a, e.b}));
    CohomologyClass rhs = ring.delta(ab);
    if (const auto da = delta_or_none(ring, a)) rhs.rep += ring.cup(*da, b).rep;
    if (const auto db = delta_or_none(ring, b)) rhs.rep += ring.cup(a, *db).rep;
    if (!ring.class_eq(e.value, rhs) && bv_fail.empty()) {
      bv_fail = "pair (" + std::string(info(e.a).ascii) + "," + std::string(info(e.b).ascii) + ")";
    }
  }
  report.add("BV identity on all generator pairs", bv_fail.empty(), bv_fail);

  // Seven-term identity.
  const std::vector<std::array<G, 3>> triples = {{G::p2, G::u1, G::z}, {G::u1, G::u1p, G::v1}, {G::p3, G::u1, G::v2}};
  for (const auto& [a, b, c] : triples) {
    const auto abc = ring.monomial_class(monomial_of({a, b, c}));
    const CohomologyClass lhs = ring.delta(abc);
    CohomologyClass rhs = ring.zero_class(lhs.degree());
    auto add_term = [&](std::initializer_list<G> inner, std::initializer_list<G> outer) {
      const auto d = delta_or_none(ring, ring.monomial_class(monomial_of(inner)));
      if (d) rhs.rep += ring.cup(*d, ring.monomial_class(monomial_of(outer))).rep;
    };
    add_term({a, b}, {c});
    add_term({a, c}, {b});
    add_term({b, c}, {a});
    add_term({a}, {b, c});
    add_term({b}, {a, c});
    add_term({c}, {a, b});
    const bool ok = ring.class_eq(lhs, rhs);
    report.add("seven-term identity on (" + std::string(info(a).ascii) + "," + std::string(info(b).ascii) + "," +
                   std::string(info(c).ascii) + ")",
               ok, ok ? "" : "Delta(abc) = " + to_string(ring.normal_form(lhs)));
  }

  // z-periodicity.
  std::string zp_fail;
  for (const auto& g : generator_catalog()) {
    const auto az = ring.monomial_class(monomial_of({g.id, G::z}));
    const auto lhs = ring.delta(az);
    CohomologyClass rhs = ring.zero_class(lhs.degree());
    if (const auto d = delta_or_none(ring, ring.generator(g.id))) rhs = ring.cup(*d, ring.generator(G::z));
    if (!ring.class_eq(lhs, rhs) && zp_fail.empty()) zp_fail = std::string(g.ascii);
  }
  report.add("Delta(a z) = Delta(a) z for every generator a", zp_fail.empty(), zp_fail);

  // Graded commutativity of the cup product.
  std::string comm_fail;
  for (std::size_t i = 0; i < kGeneratorCount && comm_fail.empty(); ++i) {
    for (std::size_t j = i + 1; j < kGeneratorCount; ++j) {
      const auto a = ring.generator(static_cast<G>(i));
      const auto b = ring.generator(static_cast<G>(j));
      if (!ring.class_eq(ring.cup(a, b), ring.cup(b, a))) {
        comm_fail = std::string(generator_catalog()[i].ascii) + "," + std::string(generator_catalog()[j].ascii);
        break;
      }
    }
  }
  report.add("cup product is graded commutative on generators", comm_fail.empty(), comm_fail);
  return report;
}

namespace {

std::vector<HochschildChain> basis_chains(int degree) {
  std::vector<HochschildChain> out;
  for (auto head : kBasis) {
    for (auto& mids : all_mid_tuples(degree)) {
      HochschildChain c(degree);
      c.add({head, mids});
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

Report verify_complex_identities(HochschildRing& ring) {
  Report report("complexes");

  for (int n = 2; n <= 3; ++n) {
    bool ok = true;
    for (const auto& mids : all_mid_tuples(n)) {
      for (auto l : kBasis) {
        for (auto r : kBasis) {
          BarChain c(n);
          c.add({l, mids, r});
          if (!bar_differential(bar_differential(c)).is_zero()) ok = false;
        }
      }
    }
    report.add("bar d o d = 0 in degree " + std::to_string(n), ok);
  }

  for (int n = 0; n <= 1; ++n) {
    bool ok = true;
    for (auto v : kBasis) {
      const BarCochain f(n, [v](std::span<const Monomial> a) {
        AlgebraElement out = v;
        for (auto m : a) out = out * AlgebraElement(m);
        return out;
      });
      const BarCochain dd = cochain_differential(cochain_differential(f));
      for (const auto& args : all_mid_tuples(n + 2)) {
        if (!dd(args).is_zero()) ok = false;
      }
    }
    report.add("cochain delta o delta = 0 from degree " + std::to_string(n), ok);
  }

  for (int n = 0; n <= 3; ++n) {
    bool dd = true;
    bool bb = true;
    bool mixed = true;
    for (const auto& c : basis_chains(n)) {
      if (n >= 2 && !chain_differential(chain_differential(c)).is_zero()) dd = false;
      if (!connes_B(connes_B(c)).is_zero()) bb = false;
      HochschildChain lhs = chain_differential(connes_B(c));
      if (n >= 1) lhs += connes_B(chain_differential(c));
      if (!lhs.is_zero()) mixed = false;
    }
    if (n >= 2) report.add("boundary o boundary = 0 in degree " + std::to_string(n), dd);
    report.add("B o B = 0 in degree " + std::to_string(n), bb);
    report.add("boundary B + B boundary = 0 in degree " + std::to_string(n), mixed);
  }

  for (int n = 1; n <= 3; ++n) {
    std::string fail;
    const auto chains = basis_chains(n - 1);
    for (const auto& z : ring.cocycle_space(n)) {
      const BarCochain f = transport_to_bar(z);
      const BarCochain df = tradler_delta(f);
      for (const auto& c : chains) {
        if (pair(df, c) != pair(f, connes_B(c))) {
          fail = "cocycle " + to_string(z);
          break;
        }
      }
      if (!fail.empty()) break;
    }
    report.add("Delta is dual to B on transported cocycles of degree " + std::to_string(n), fail.empty(), fail);
  }
  return report;
}

}  // namespace hhq8
