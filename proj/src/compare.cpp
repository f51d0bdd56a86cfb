#include "hhq8/compare.hpp"

#include <set>
#include <stdexcept>

#include "detail/text.hpp"

namespace hhq8 {

namespace {

BarChain unit_frame(MidTuple mids) {
  BarChain c(static_cast<int>(mids.size()));
  c.add({Monomial::one, std::move(mids), Monomial::one});
  return c;
}

MidTuple mids_of(std::string_view text) {
  MidTuple out;
  for (const auto& part : detail::split_top(text, ',')) {
    const auto m = parse_monomial(part);
    if (!m || *m == Monomial::one) throw std::invalid_argument("bad tuple entry: " + part);
    out.push_back(*m);
  }
  return out;
}

std::string tuple_string(const MidTuple& mids) {
  std::string s = "(";
  for (std::size_t i = 0; i < mids.size(); ++i) {
    if (i != 0) s += ",";
    s += name(mids[i]);
  }
  return s + ")";
}

}  // namespace

PhiTable::PhiTable(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative degree");
  images_.push_back({unit_frame({})});
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<BarChain> row;
    for (int s = 0; s < generator_count(n); ++s) {
      BarChain image(n);
      for (const auto& t : differential_terms(n, s)) {
        if (t.left == Monomial::one) continue;
        image += bar_contraction(AlgebraElement(t.left) * images_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(t.slot)] *
                                 AlgebraElement(t.right));
      }
      row.push_back(std::move(image));
    }
    images_.push_back(std::move(row));
  }
}

const PhiTable& PhiTable::standard() {
  static const PhiTable table(8);
  return table;
}

const BarChain& PhiTable::at(int degree, int slot) const {
  if (degree < 0 || degree > max_degree()) throw std::out_of_range("Phi degree outside the table");
  return images_[static_cast<std::size_t>(degree)].at(static_cast<std::size_t>(slot));
}

BarChain PhiTable::apply(const MinResElement& e) const {
  BarChain out(e.degree());
  e.for_each_term([&](Monomial l, int s, Monomial r) { out += AlgebraElement(l) * at(e.degree(), s) * AlgebraElement(r); });
  return out;
}

BarChain closed_form_phi(int degree, int slot) {
  static const BarChain phi3 = parse_bar_chain(
      3, "1|x|x|x|1 + 1|x|y|x|y + 1|x|yx|y|1 + 1|y|y|y|1 + 1|y|x|y|x + 1|y|xy|x|1");
  static const BarChain phi4 = [] {
    BarChain c(4);
    for (auto b : kRadicalBasis) c += bar_contraction(AlgebraElement(b) * phi3 * AlgebraElement(dual_basis(b)));
    return c;
  }();
  switch (degree) {
    case 0: return parse_bar_chain(0, "1|1");
    case 1: return parse_bar_chain(1, slot == 0 ? "1|x|1" : "1|y|1");
    case 2:
      return parse_bar_chain(2, slot == 0 ? "1|x|x|1 + 1|y|x|y + 1|yx|y|1" : "1|y|y|1 + 1|x|y|x + 1|xy|x|1");
    case 3: return phi3;
    case 4: return phi4;
    case 5: return bar_contraction(AlgebraElement(slot == 0 ? Monomial::x : Monomial::y) * phi4);
    default: throw std::out_of_range("no explicit Phi formula in this degree");
  }
}

std::shared_ptr<const PsiEvaluator> PsiEvaluator::standard() {
  static const auto psi = std::make_shared<const PsiEvaluator>();
  return psi;
}

MinResElement PsiEvaluator::operator()(std::span<const Monomial> mids) const {
  const int n = static_cast<int>(mids.size());
  if (n > kMaxDegree) throw std::out_of_range("Psi is guarded beyond degree 8");
  // A leading 1 bit marks the tuple length.
  std::uint64_t key = 1;
  for (auto m : mids) {
    if (m == Monomial::one) throw std::invalid_argument("unit argument to Psi");
    key = (key << 3) | index(m);
  }
  if (n == 0) return MinResElement::generator(0, 0);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const MinResElement value = t_(AlgebraElement(mids.front()) * (*this)(mids.subspan(1)));
  std::lock_guard lock(mutex_);
  memo_.emplace(key, value);
  return value;
}

MinResElement PsiEvaluator::apply(const BarChain& c) const {
  MinResElement out(c.degree());
  for (const auto& t : c.terms()) out += AlgebraElement(t.left) * (*this)(t.mids) * AlgebraElement(t.right);
  return out;
}

std::size_t PsiEvaluator::cached_values() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

Report verify_chain_maps(int max_degree, const PsiEvaluator& psi, const PhiTable& phi) {
  if (max_degree > 6) throw std::invalid_argument("chain map verification is limited to degree 6");
  Report report("comparison");

  for (int n = 1; n <= max_degree; ++n) {
    std::string detail;
    for (int s = 0; s < generator_count(n) && detail.empty(); ++s) {
      if (bar_differential(phi.at(n, s)) != phi.apply(min_differential(MinResElement::generator(n, s)))) {
        detail = "generator " + std::string(generator_name(n, s));
      }
    }
    report.add("Phi chain map degree " + std::to_string(n), detail.empty(), detail);
  }

  for (int n = 1; n <= max_degree; ++n) {
    std::vector<MidTuple> tuples;
    if (n <= 3) {
      tuples = all_mid_tuples(n);
    } else {
      std::set<MidTuple> seen;
      for (int s = 0; s < generator_count(n); ++s) {
        for (const auto& t : phi.at(n, s).terms()) seen.insert(t.mids);
      }
      tuples.assign(seen.begin(), seen.end());
    }
    std::string detail;
    for (const auto& mids : tuples) {
      if (min_differential(psi(mids)) != psi.apply(bar_differential(unit_frame(mids)))) {
        detail = "tuple " + tuple_string(mids);
        break;
      }
    }
    report.add("Psi chain map degree " + std::to_string(n) + " (" + std::to_string(tuples.size()) + " tuples)",
               detail.empty(), detail);
  }

  for (int n = 0; n <= 4; ++n) {
    std::string detail;
    for (int s = 0; s < generator_count(n) && detail.empty(); ++s) {
      const auto got = psi.apply(phi.at(n, s));
      if (got != MinResElement::generator(n, s)) detail = "got " + to_string(got);
    }
    report.add("Psi Phi = Id degree " + std::to_string(n), detail.empty(), detail);
  }

  for (int n = 0; n <= 5 && n <= phi.max_degree(); ++n) {
    std::string detail;
    for (int s = 0; s < generator_count(n) && detail.empty(); ++s) {
      if (phi.at(n, s) != closed_form_phi(n, s)) detail = "generator " + std::string(generator_name(n, s));
    }
    report.add("Phi explicit formula degree " + std::to_string(n), detail.empty(), detail);
  }
  return report;
}

BarCochain transport_to_bar(const MinCochain& f, std::shared_ptr<const PsiEvaluator> psi) {
  return BarCochain(f.degree(), [f, psi = std::move(psi)](std::span<const Monomial> args) {
    return f.evaluate((*psi)(args));
  });
}

MinCochain transport_to_min(const BarCochain& g, const PhiTable& phi) {
  const int n = g.degree();
  std::vector<AlgebraElement> values;
  for (int s = 0; s < generator_count(n); ++s) values.push_back(g.on_chain(phi.at(n, s)));
  return MinCochain(n, std::move(values));
}

namespace {

struct PsiCase {
  const char* mids;
  const char* expected;
};

// Psi summed over tuple templates in which "b" ranges over the radical basis.
struct SumCase {
  int degree;
  std::vector<const char*> templates;
  std::array<const char*, 7> expected;  // indexed by kRadicalBasis
};

MinResElement psi_on_template(const PsiEvaluator& psi, const char* pattern, Monomial b) {
  MidTuple mids;
  for (const auto& part : detail::split_top(pattern, ',')) {
    if (part == "b") {
      mids.push_back(b);
    } else {
      mids.push_back(mids_of(part).front());
    }
  }
  return psi(mids);
}

}  // namespace

Report verify_transport_oracles() {
  Report report("transport");
  const auto psi = PsiEvaluator::standard();

  const MinCochain u1 = parse_min_cochain(1, "(1+xy,x)");
  const MinCochain u1p = parse_min_cochain(1, "(y,1+yx)");
  const std::array<const char*, 7> u1_table = {"1+xy", "x", "y+yxy", "y", "xy+yx", "xyx", "yxy"};
  const std::array<const char*, 7> u1p_table = {"y", "1+yx", "x", "x+xyx", "yxy", "xy+yx", "xyx"};
  auto value_table = [&](const std::string& id, const MinCochain& f, const std::array<const char*, 7>& table) {
    const BarCochain g = transport_to_bar(f, psi);
    std::string detail;
    for (std::size_t i = 0; i < kRadicalBasis.size() && detail.empty(); ++i) {
      const auto got = g({kRadicalBasis[i]});
      if (got != parse_element(table[i])) detail = "at " + std::string(name(kRadicalBasis[i])) + ": got " + to_string(got);
    }
    report.add(id, detail.empty(), detail);
  };
  value_table("u1 o Psi1 value table", u1, u1_table);
  value_table("u1p o Psi1 value table", u1p, u1p_table);

  const std::vector<PsiCase> singles = {
      {"x", "1|x|1"},          {"xy", "1|x|y + x|y|1"},  {"x,x", "1|rx|1"},       {"xy,x", "0"},
      {"y,xy", "0"},           {"y,x", "0"},             {"yx,y", "0"},           {"x,x,x", "1|1"},
      {"x,y,x", "0"},          {"x,yx,y", "0"},          {"y,y,y", "0"},          {"y,x,y", "0"},
      {"y,xy,x", "0"},         {"xy,x,x", "0"},          {"x,x,xy", "1|y"},       {"y,x,x", "0"},
      {"x,x,y", "0"},          {"x,yx,x", "0"},          {"x,y,y", "0"},          {"x,yx,yx", "x|1"},
      {"yx,y,y", "0"},         {"y,y,yx", "1|x"},        {"x,y,xy", "0"},         {"x,x,x,xyxy", "0"},
  };
  std::string detail;
  for (const auto& c : singles) {
    const MidTuple mids = mids_of(c.mids);
    const auto got = (*psi)(mids);
    if (got != parse_min_element(static_cast<int>(mids.size()), c.expected)) {
      detail = "Psi" + tuple_string(mids) + " = " + to_string(got);
      break;
    }
  }
  report.add("Psi spot values in degrees 1-4", detail.empty(), detail);

  const std::vector<SumCase> sums = {
      {2, {"b,x", "x,b"},
       {"0", "0", "1|rx|y + y|rx|yx + yx|ry|1", "y|rx|1 + xy|rx|y + 1|ry|xy",
        "xy|rx|1 + x|ry|xy + 1|rx|yx + yx|ry|x", "1|ry|y + y|ry|1", "x|rx|x + yxy|rx|1"}},
      {2, {"b,y", "y,b"},
       {"0", "0", "1|rx|yx + x|ry|1 + yx|ry|x", "1|ry|x + xy|rx|1 + x|ry|xy", "1|ry|y + y|ry|1",
        "y|rx|yx + yx|ry|1 + 1|ry|xy + xy|rx|y", "1|ry|xyx + y|ry|y"}},
      {3, {"b,x,x", "x,b,x", "x,x,b"},
       {"1|1", "0", "1|y", "y|1", "xy|1 + x|y + yx|xy + 1|yx", "1|x + x|1", "1|yxy"}},
      {3, {"b,y,x", "x,b,y", "y,x,b"}, {"0", "0", "1|yx + y|x + yx|1 + xy|yx", "0", "0", "0", "0"}},
      {3, {"b,yx,y", "y,b,yx", "yx,y,b"}, {"0", "1|x", "0", "0", "yx|1", "0", "xy|yxy + xyx|x"}},
      {3, {"b,y,y", "y,b,y", "y,y,b"},
       {"0", "0", "x|1", "1|x", "0", "y|x + yx|1 + xy|yx + 1|xy", "x|yx + xy|x + xyx|1"}},
      {3, {"b,x,y", "y,b,x", "x,y,b"}, {"0", "0", "0", "xy|1 + x|y + 1|xy + yx|xy", "1|x + x|1", "0", "y|x"}},
      {3, {"b,xy,x", "x,b,xy", "xy,x,b"}, {"1|y", "0", "0", "0", "0", "x|y", "yxy|y + yx|xyx"}},
  };
  for (const auto& c : sums) {
    std::string why;
    for (std::size_t i = 0; i < kRadicalBasis.size() && why.empty(); ++i) {
      const Monomial b = kRadicalBasis[i];
      MinResElement got(c.degree);
      for (const char* pattern : c.templates) got += psi_on_template(*psi, pattern, b);
      if (got != parse_min_element(c.degree, c.expected[i])) {
        why = "b = " + std::string(name(b)) + ": got " + to_string(got);
      }
    }
    report.add("Psi" + std::to_string(c.degree) + " sum over (" + c.templates.front() + ")", why.empty(), why);
  }

  // Degree-4 rows: value 1|1 exactly when b = xyxy, except where noted zero.
  struct Row {
    const char* pattern;
    bool socle_hit;
  };
  const std::vector<Row> rows = {{"b,x,x,x", true}, {"x,b,x,x", true}, {"y,b,y,y", true}, {"x,x,b,x", true},
                                 {"x,x,x,b", false}, {"y,y,b,y", true}, {"y,y,y,b", true}};
  for (const auto& row : rows) {
    std::string why;
    for (auto b : kRadicalBasis) {
      const auto got = psi_on_template(*psi, row.pattern, b);
      const bool hit = row.socle_hit && b == Monomial::xyxy;
      if (got != parse_min_element(4, hit ? "1|1" : "0")) {
        why = "b = " + std::string(name(b)) + ": got " + to_string(got);
        break;
      }
    }
    report.add(std::string("Psi4 row (") + row.pattern + ")", why.empty(), why);
  }

  const BarCochain z = transport_to_bar(MinCochain(4, {Monomial::one}), psi);
  std::string zwhy;
  for (auto b : kRadicalBasis) {
    const auto got = z({b, Monomial::x, Monomial::x, Monomial::x});
    const AlgebraElement expected = b == Monomial::xyxy ? AlgebraElement(Monomial::one) : AlgebraElement();
    if (got != expected) {
      zwhy = "b = " + std::string(name(b)) + ": got " + to_string(got);
      break;
    }
  }
  report.add("z o Psi4 on (b,x,x,x)", zwhy.empty(), zwhy);
  return report;
}

}  // namespace hhq8
