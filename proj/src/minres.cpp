#include "hhq8/minres.hpp"

#include <stdexcept>

#include "detail/text.hpp"

namespace hhq8 {

namespace {

int phase(int degree) {
  if (degree < 0) throw std::invalid_argument("negative resolution degree");
  return degree % 4;
}

std::vector<ResolutionTerm> parse_terms(int target_degree, std::string_view text) {
  std::vector<ResolutionTerm> out;
  parse_min_element(target_degree, text).for_each_term([&](Monomial l, int s, Monomial r) { out.push_back({l, s, r}); });
  return out;
}

const std::vector<ResolutionTerm>& d4_terms() {
  static const std::vector<ResolutionTerm> terms = [] {
    std::vector<ResolutionTerm> t;
    for (auto b : kBasis) t.push_back({dual_basis(b), 0, b});
    return t;
  }();
  return terms;
}

}  // namespace

int generator_count(int degree) {
  const int p = phase(degree);
  return (p == 1 || p == 2) ? 2 : 1;
}

std::string_view generator_name(int degree, int slot) {
  switch (phase(degree)) {
    case 1: return slot == 0 ? "x" : "y";
    case 2: return slot == 0 ? "rx" : "ry";
    default: return "1";
  }
}

MinResElement::MinResElement(int degree) : degree_(degree) { phase(degree); }

MinResElement MinResElement::basis(int degree, Monomial left, int slot, Monomial right) {
  MinResElement e(degree);
  e.toggle(left, slot, right);
  return e;
}

std::size_t MinResElement::bit(Monomial left, int slot, Monomial right) {
  return (index(left) * 2 + static_cast<std::size_t>(slot)) * kAlgebraDim + index(right);
}

void MinResElement::check_slot(int slot) const {
  if (slot < 0 || slot >= generators()) throw std::out_of_range("generator slot out of range for degree");
}

void MinResElement::toggle(Monomial left, int slot, Monomial right) {
  check_slot(slot);
  bits_.flip(bit(left, slot, right));
}

bool MinResElement::coeff(Monomial left, int slot, Monomial right) const {
  check_slot(slot);
  return bits_.test(bit(left, slot, right));
}

MinResElement& MinResElement::operator+=(const MinResElement& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("resolution degree mismatch");
  bits_ ^= other.bits_;
  return *this;
}

MinResElement MinResElement::relabeled(int degree) const {
  if (generator_count(degree) != generators()) throw std::invalid_argument("relabel between different ranks");
  MinResElement e = *this;
  e.degree_ = degree;
  return e;
}

MinResElement operator*(AlgebraElement a, const MinResElement& e) {
  MinResElement out(e.degree());
  e.for_each_term([&](Monomial l, int s, Monomial r) {
    (a * AlgebraElement(l)).for_each_term([&](Monomial m) { out.toggle(m, s, r); });
  });
  return out;
}

MinResElement operator*(const MinResElement& e, AlgebraElement a) {
  MinResElement out(e.degree());
  e.for_each_term([&](Monomial l, int s, Monomial r) {
    (AlgebraElement(r) * a).for_each_term([&](Monomial m) { out.toggle(l, s, m); });
  });
  return out;
}

MinResElement parse_min_element(int degree, std::string_view text) {
  MinResElement out(degree);
  const std::string body = detail::trim(text);
  if (body == "0") return out;
  const int rank = generator_count(degree);
  for (const auto& term : detail::split_top(body, '+')) {
    const auto f = detail::split_top(term, '|');
    int slot = 0;
    if (rank == 2) {
      if (f.size() != 3) throw std::invalid_argument("expected l|gen|r: " + term);
      if (f[1] == generator_name(degree, 0)) {
        slot = 0;
      } else if (f[1] == generator_name(degree, 1)) {
        slot = 1;
      } else {
        throw std::invalid_argument("unknown generator: " + f[1]);
      }
    } else if (f.size() != 2) {
      throw std::invalid_argument("expected l|r: " + term);
    }
    const AlgebraElement left = parse_element(detail::unwrap(f.front()));
    const AlgebraElement right = parse_element(detail::unwrap(f.back()));
    left.for_each_term([&](Monomial l) { right.for_each_term([&](Monomial r) { out.toggle(l, slot, r); }); });
  }
  return out;
}

std::string to_string(const MinResElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  const bool rank_two = e.generators() == 2;
  e.for_each_term([&](Monomial l, int slot, Monomial r) {
    if (!s.empty()) s += " + ";
    s += name(l);
    s += '|';
    if (rank_two) {
      s += generator_name(e.degree(), slot);
      s += '|';
    }
    s += name(r);
  });
  return s;
}

const std::vector<ResolutionTerm>& differential_terms(int degree, int slot) {
  if (degree < 1) throw std::domain_error("resolution differential needs degree >= 1");
  static const std::array<std::vector<ResolutionTerm>, 2> d1 = {parse_terms(0, "x|1 + 1|x"),
                                                                parse_terms(0, "y|1 + 1|y")};
  static const std::array<std::vector<ResolutionTerm>, 2> d2 = {
      parse_terms(1, "1|x|x + x|x|1 + 1|y|xy + y|x|y + yx|y|1"),
      parse_terms(1, "1|y|y + y|y|1 + 1|x|yx + x|y|x + xy|x|1")};
  static const std::vector<ResolutionTerm> d3 = parse_terms(2, "x|rx|1 + 1|rx|x + y|ry|1 + 1|ry|y");
  if (slot < 0 || slot >= generator_count(degree)) throw std::out_of_range("generator slot out of range");
  const auto s = static_cast<std::size_t>(slot);
  switch (phase(degree)) {
    case 1: return d1[s];
    case 2: return d2[s];
    case 3: return d3;
    default: return d4_terms();
  }
}

MinResElement min_differential(const MinResElement& e) {
  const int n = e.degree();
  if (n < 1) throw std::domain_error("resolution differential needs degree >= 1");
  MinResElement out(n - 1);
  e.for_each_term([&](Monomial l, int s, Monomial r) {
    for (const auto& t : differential_terms(n, s)) {
      const AlgebraElement left = AlgebraElement(l) * t.left;
      const AlgebraElement right = AlgebraElement(t.right) * r;
      left.for_each_term([&](Monomial a) { right.for_each_term([&](Monomial b) { out.toggle(a, t.slot, b); }); });
    }
  });
  return out;
}

AlgebraElement augmentation(const MinResElement& e) {
  if (e.generators() != 1) throw std::invalid_argument("augmentation is defined on rank-one degrees");
  AlgebraElement out;
  e.for_each_term([&](Monomial l, int, Monomial r) { out += AlgebraElement(l) * r; });
  return out;
}

MinResElement rho(AlgebraElement a) {
  MinResElement out(3);
  for (auto b : kBasis) {
    (AlgebraElement(b) * a).for_each_term([&](Monomial r) { out.toggle(dual_basis(b), 0, r); });
  }
  return out;
}

AlgebraElement tau(const MinResElement& e) {
  if (e.generators() != 1) throw std::invalid_argument("tau is defined on rank-one degrees");
  AlgebraElement out;
  e.for_each_term([&](Monomial l, int, Monomial r) {
    if (l == Monomial::xyxy) out += r;
  });
  return out;
}

const HomotopyTable& HomotopyTable::standard() {
  static const HomotopyTable table = [] {
    HomotopyTable h;
    for (int s = 0; s < 2; ++s) {
      for (auto& e : h.t0[static_cast<std::size_t>(s)]) e = MinResElement(1);
      for (auto& e : h.t1[static_cast<std::size_t>(s)]) e = MinResElement(2);
      for (auto& e : h.t2[static_cast<std::size_t>(s)]) e = MinResElement(3);
    }
    for (auto b : kBasis) {
      for (const auto& c : bimodule_derivation_C(b)) {
        h.t0[0][index(b)].toggle(c.prefix, c.letter == Letter::x ? 0 : 1, c.suffix);
      }
    }
    auto set = [](auto& row, Monomial b, int degree, std::string_view text) {
      row[index(b)] = parse_min_element(degree, text);
    };
    using M = Monomial;
    set(h.t1[0], M::x, 2, "1|rx|1");
    set(h.t1[0], M::yx, 2, "y|rx|1 + xy|rx|y + 1|ry|xy");
    set(h.t1[0], M::xyx, 2, "xy|rx|1 + x|ry|xy");
    set(h.t1[0], M::yxy, 2, "1|ry|y + y|ry|1");
    set(h.t1[0], M::xyxy, 2, "1|rx|yxy + x|rx|x + yxy|rx|1 + yx|ry|xy");
    set(h.t1[1], M::y, 2, "1|ry|1");
    set(h.t1[1], M::xy, 2, "1|rx|yx + x|ry|1 + yx|ry|x");
    set(h.t1[1], M::yxy, 2, "y|rx|yx + yx|ry|1");
    set(h.t1[1], M::xyxy, 2, "xy|rx|yx + xyx|ry|1");
    set(h.t2[0], M::x, 3, "1|1");
    set(h.t2[0], M::yx, 3, "y|1");
    set(h.t2[0], M::xyx, 3, "xy|1 + x|y");
    set(h.t2[0], M::yxy, 3, "1|x");
    set(h.t2[0], M::xyxy, 3, "1|yxy + yxy|1 + y|xy + yx|y");
    set(h.t2[1], M::xy, 3, "x|1");
    set(h.t2[1], M::yxy, 3, "y|x + yx|1");
    set(h.t2[1], M::xyxy, 3, "x|yx + xy|x + xyx|1");
    return h;
  }();
  return table;
}

MinResElement WeakHomotopy::initial(AlgebraElement a) const {
  MinResElement out(0);
  a.for_each_term([&](Monomial m) { out.toggle(Monomial::one, 0, m); });
  return out;
}

MinResElement WeakHomotopy::operator()(const MinResElement& e) const {
  const int n = e.degree();
  const int p = phase(n);
  if (p == 3) return initial(tau(e)).relabeled(n + 1);
  const auto& rows = p == 0 ? table_.t0 : (p == 1 ? table_.t1 : table_.t2);
  MinResElement out(n + 1);
  e.for_each_term([&](Monomial l, int s, Monomial r) {
    out += rows[static_cast<std::size_t>(s)][index(l)].relabeled(n + 1) * AlgebraElement(r);
  });
  return out;
}

MinResElement homotopy_t(const MinResElement& e) {
  static const WeakHomotopy standard;
  return standard(e);
}

namespace {

// All basis tensors l (x) gen (x) r of P_n.
std::vector<MinResElement> all_basis_elements(int degree) {
  std::vector<MinResElement> out;
  for (auto l : kBasis) {
    for (int s = 0; s < generator_count(degree); ++s) {
      for (auto r : kBasis) out.push_back(MinResElement::basis(degree, l, s, r));
    }
  }
  return out;
}

template <class Value, class F>
void check_all(Report& report, const std::string& id, const std::vector<Value>& args, F&& holds) {
  for (const auto& a : args) {
    std::string why;
    if (!holds(a, why)) {
      report.add(id, false, why);
      return;
    }
  }
  report.add(id, true);
}

std::vector<AlgebraElement> basis_elements() { return {kBasis.begin(), kBasis.end()}; }

}  // namespace

Report verify_homotopy(const WeakHomotopy& t) {
  Report report("homotopy");
  const auto algebra_args = basis_elements();

  check_all(report, "d0 t-1 = Id", algebra_args, [&](AlgebraElement a, std::string& why) {
    const auto got = augmentation(t.initial(a));
    why = "on " + to_string(a) + ": got " + to_string(got);
    return got == a;
  });

  auto identity_check = [&](int p) {
    return [&, p](const MinResElement& e, std::string& why) {
      MinResElement lhs = min_differential(t(e));
      if (p == 0) {
        lhs += t.initial(augmentation(e));
      } else {
        lhs += t(min_differential(e));
      }
      why = "on " + to_string(e) + ": got " + to_string(lhs);
      return lhs == e;
    };
  };
  for (int p = 0; p <= 2; ++p) {
    const std::string id = "d" + std::to_string(p + 1) + " t" + std::to_string(p) + " + t" + std::to_string(p - 1) +
                           " d" + std::to_string(p) + " = Id";
    check_all(report, id, all_basis_elements(p), identity_check(p));
  }

  check_all(report, "t2 d3 + rho tau = Id", all_basis_elements(3), [&](const MinResElement& e, std::string& why) {
    const MinResElement lhs = t(min_differential(e)) + rho(tau(e));
    why = "on " + to_string(e) + ": got " + to_string(lhs);
    return lhs == e;
  });

  check_all(report, "tau rho = Id", algebra_args, [&](AlgebraElement a, std::string& why) {
    const auto got = tau(rho(a));
    why = "on " + to_string(a) + ": got " + to_string(got);
    return got == a;
  });

  check_all(report, "t0 t-1 = 0", algebra_args, [&](AlgebraElement a, std::string& why) {
    const auto got = t(t.initial(a));
    why = "on " + to_string(a) + ": got " + to_string(got);
    return got.is_zero();
  });
  for (int i = 0; i <= 3; ++i) {
    const std::string id = "t" + std::to_string(i + 1) + " t" + std::to_string(i) + " = 0";
    check_all(report, id, all_basis_elements(i), [&](const MinResElement& e, std::string& why) {
      const auto got = t(t(e));
      why = "on " + to_string(e) + ": got " + to_string(got);
      return got.is_zero();
    });
  }

  bool periodic = true;
  std::string periodic_detail;
  for (int p = 3; p <= 8 && periodic; ++p) {
    for (const auto& e : all_basis_elements(p)) {
      std::string why;
      if (!identity_check(p)(e, why)) {
        periodic = false;
        periodic_detail = "degree " + std::to_string(p) + " " + why;
        break;
      }
    }
  }
  report.add("d t + t d = Id in degrees 3..8", periodic, periodic_detail);
  return report;
}

MinCochain::MinCochain(int degree) : degree_(degree), values_(static_cast<std::size_t>(generator_count(degree))) {}

MinCochain::MinCochain(int degree, std::vector<AlgebraElement> values) : degree_(degree), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != generator_count(degree)) {
    throw std::invalid_argument("cochain needs one value per generator");
  }
}

AlgebraElement MinCochain::evaluate(const MinResElement& e) const {
  if (e.degree() != degree_) throw std::invalid_argument("cochain evaluated in the wrong degree");
  AlgebraElement out;
  e.for_each_term([&](Monomial l, int s, Monomial r) {
    out += AlgebraElement(l) * values_[static_cast<std::size_t>(s)] * AlgebraElement(r);
  });
  return out;
}

MinCochain& MinCochain::operator+=(const MinCochain& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("cochain degree mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

bool MinCochain::is_zero() const {
  for (auto v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

GF2Vector MinCochain::to_vector() const {
  GF2Vector v(dimension(degree_));
  for (std::size_t s = 0; s < values_.size(); ++s) {
    values_[s].for_each_term([&](Monomial m) { v.set(s * kAlgebraDim + index(m), true); });
  }
  return v;
}

MinCochain MinCochain::from_vector(int degree, const GF2Vector& v) {
  if (v.size() != dimension(degree)) throw std::invalid_argument("cochain vector has the wrong length");
  MinCochain f(degree);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) f.values_[i / kAlgebraDim] += monomial_at(i % kAlgebraDim);
  }
  return f;
}

std::string to_string(const MinCochain& f) {
  if (f.values().size() == 1) return to_string(f.values().front());
  return "(" + to_string(f.value(0)) + "," + to_string(f.value(1)) + ")";
}

MinCochain parse_min_cochain(int degree, std::string_view text) {
  const std::string body = detail::trim(text);
  if (generator_count(degree) == 1) return MinCochain(degree, {parse_element(detail::unwrap(body))});
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw std::invalid_argument("expected (a,b): " + body);
  }
  const auto parts = detail::split_top(body.substr(1, body.size() - 2), ',');
  if (parts.size() != 2) throw std::invalid_argument("expected (a,b): " + body);
  return MinCochain(degree, {parse_element(parts[0]), parse_element(parts[1])});
}

MinCochain min_cochain_differential(const MinCochain& f) {
  const int n = f.degree() + 1;
  std::vector<AlgebraElement> values;
  for (int s = 0; s < generator_count(n); ++s) values.push_back(f.evaluate(min_differential(MinResElement::generator(n, s))));
  return MinCochain(n, std::move(values));
}

}  // namespace hhq8
