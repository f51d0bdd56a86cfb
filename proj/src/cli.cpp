#include "hhq8/cli.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace hhq8 {

namespace {

std::string join(const std::vector<GeneratorMonomial>& terms, std::string (*render)(const GeneratorMonomial&)) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) s += (s.empty() ? "" : " + ") + render(t);
  return s;
}

std::vector<std::string> factor_names(const GeneratorMonomial& m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    for (int e = 0; e < m[i]; ++e) names.emplace_back(generator_catalog()[i].unicode);
  }
  return names;
}

struct TableRow {
  std::vector<std::string> args;
  std::string label;  // argument as one monomial, for Delta rows
  std::string ascii_value;
  std::string unicode_value;
  std::string witness;
};

TableRow render_value(ExpressionFinder& finder, HochschildRing& ring, std::vector<std::string> args,
                      const CohomologyClass& value) {
  const std::string witness = to_string(ring.witness(value));
  if (const auto terms = finder.find(value)) {
    return {std::move(args), {}, ascii_expression(*terms), unicode_expression(*terms), witness};
  }
  return {std::move(args), {}, witness, witness, witness};
}

std::vector<TableRow> table_rows(std::string_view kind) {
  auto& ring = HochschildRing::standard();
  ExpressionFinder finder(ring);
  std::vector<TableRow> rows;
  if (kind == "delta") {
    for (const auto& e : build_structure_tables(ring).delta) {
      rows.push_back(render_value(finder, ring, factor_names(e.argument), e.value));
      rows.back().label = unicode_name(e.argument);
    }
  } else if (kind == "bracket") {
    for (const auto& e : build_structure_tables(ring).bracket) {
      std::vector<std::string> args = {std::string(info(e.a).unicode), std::string(info(e.b).unicode)};
      if (e.vanishes_by_degree) {
        rows.push_back({std::move(args), {}, "0", "0", "0"});
      } else {
        rows.push_back(render_value(finder, ring, std::move(args), e.value));
      }
    }
  } else {
    for (std::size_t i = 0; i < kGeneratorCount; ++i) {
      for (std::size_t j = i; j < kGeneratorCount; ++j) {
        const auto a = static_cast<Generator>(i);
        const auto b = static_cast<Generator>(j);
        rows.push_back(render_value(finder, ring, {std::string(info(a).unicode), std::string(info(b).unicode)},
                                    ring.monomial_class(monomial_of({a, b}))));
      }
    }
  }
  return rows;
}

std::string markdown_line(std::string_view kind, const TableRow& row) {
  if (kind == "delta") return "- Δ(" + row.label + ") = " + row.unicode_value;
  if (kind == "bracket") return "- [" + row.args[0] + ", " + row.args[1] + "] = " + row.unicode_value;
  return "- " + row.args[0] + " ⌣ " + row.args[1] + " = " + row.unicode_value + " (witness " + row.witness + ")";
}

}  // namespace

std::string ascii_expression(const std::vector<GeneratorMonomial>& terms) {
  return join(terms, [](const GeneratorMonomial& m) { return ascii_name(m); });
}

std::string unicode_expression(const std::vector<GeneratorMonomial>& terms) {
  return join(terms, [](const GeneratorMonomial& m) { return unicode_name(m); });
}

const std::vector<ExpressionFinder::Candidate>& ExpressionFinder::candidates(int degree) {
  auto& slot = by_degree_.at(static_cast<std::size_t>(degree));
  if (slot) return *slot;
  std::vector<Candidate> all;
  for (const auto& m : generator_monomials(degree)) {
    const auto c = ring_.monomial_class(m);
    if (ring_.is_zero(c)) continue;
    all.push_back({ascii_name(m), m, ring_.normal_form(c).to_vector()});
  }
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) { return a.name < b.name; });
  std::vector<Candidate> unique;
  for (auto& c : all) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const Candidate& u) { return u.vector == c.vector; });
    if (!seen) unique.push_back(std::move(c));
  }
  slot = std::move(unique);
  return *slot;
}

std::optional<std::vector<GeneratorMonomial>> ExpressionFinder::find(const CohomologyClass& c) {
  if (ring_.is_zero(c)) return std::vector<GeneratorMonomial>{};
  const GF2Vector target = ring_.normal_form(c).to_vector();
  const auto& cands = candidates(c.degree());
  const std::size_t n = cands.size();
  std::size_t examined = 0;
  // Subsets by increasing size, each size in lexicographic order of indices.
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (++examined > kSearchBudget) return std::nullopt;
      GF2Vector sum(target.size());
      for (auto i : idx) sum += cands[i].vector;
      if (sum == target) {
        std::vector<GeneratorMonomial> terms;
        for (auto i : idx) terms.push_back(cands[i].monomial);
        return terms;
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<Report> run_suite(std::string_view suite) {
  auto& ring = [&]() -> HochschildRing& { return HochschildRing::standard(); }();
  if (suite == "algebra") return verify_algebra();
  if (suite == "homotopy") return verify_homotopy();
  if (suite == "comparison") {
    Report r("comparison");
    r.merge(verify_chain_maps(6));
    r.merge(verify_transport_oracles());
    return r;
  }
  if (suite == "relations") {
    Report r("relations");
    r.merge(verify_generalov(ring, 4));
    return r;
  }
  if (suite == "bv") {
    Report r("bv");
    r.merge(verify_bv(ring));
    r.merge(verify_complex_identities(ring));
    return r;
  }
  if (suite == "all") {
    Report r("all");
    for (const char* s : {"algebra", "homotopy", "comparison", "relations", "bv"}) r.merge(*run_suite(s));
    return r;
  }
  return std::nullopt;
}

CommandResult cmd_verify(std::string_view suite, bool json) {
  const auto report = run_suite(suite);
  if (!report) return {kExitUsage, "unknown suite '" + std::string(suite) + "'; expected algebra, homotopy, comparison, relations, bv or all\n"};
  return {report->passed() ? kExitPass : kExitFail, json ? report->to_json() + "\n" : report->to_text()};
}

CommandResult cmd_table(std::string_view kind, std::string_view format) {
  if (kind != "delta" && kind != "bracket" && kind != "cup") {
    return {kExitUsage, "unknown table '" + std::string(kind) + "'; expected delta, bracket or cup\n"};
  }
  if (format != "markdown" && format != "json") {
    return {kExitUsage, "unknown format '" + std::string(format) + "'; expected markdown or json\n"};
  }
  const auto rows = table_rows(kind);
  if (format == "json") {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& r : rows) entries.push_back({{"args", r.args}, {"value", r.ascii_value}, {"witness", r.witness}});
    const nlohmann::json doc = {{"kind", kind}, {"entries", entries}};
    return {kExitPass, doc.dump(2) + "\n"};
  }
  std::string out = "# " + std::string(kind) + " table\n\n";
  for (const auto& r : rows) out += markdown_line(kind, r) + "\n";
  return {kExitPass, out};
}

CommandResult cmd_dims(int max_degree) {
  if (max_degree < 0 || max_degree > HochschildRing::kMaxDegree) {
    return {kExitUsage, "--max must be between 0 and 8\n"};
  }
  const auto& ring = HochschildRing::standard();
  std::string out;
  for (int n = 0; n <= max_degree; ++n) out += "HH^" + std::to_string(n) + " " + std::to_string(ring.hh_dim(n)) + "\n";
  return {kExitPass, out};
}

}  // namespace hhq8
