#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hhq8/cli.hpp"
#include "json.hpp"

using namespace hhq8;
using nlohmann::json;

namespace {

const json* find_entry(const json& table, const std::vector<std::string>& args) {
  for (const auto& e : table.at("entries")) {
    if (e.at("args").get<std::vector<std::string>>() == args) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("verify: exit codes") {
  const auto homotopy = cmd_verify("homotopy", false);
  CHECK(homotopy.exit_code == kExitPass);
  CHECK(homotopy.output.find("12/12") != std::string::npos);
  CHECK(cmd_verify("algebra", false).exit_code == kExitPass);
  CHECK(cmd_verify("relations", false).exit_code == kExitPass);
  CHECK(cmd_verify("bv", false).exit_code == kExitPass);
  CHECK(cmd_verify("bogus", false).exit_code == kExitUsage);
  CHECK_FALSE(run_suite("bogus").has_value());
}

TEST_CASE("verify: the comparison suite reports its two failing oracle entries") {
  const auto r = cmd_verify("comparison", true);
  CHECK(r.exit_code == kExitFail);
  const json j = json::parse(r.output);
  std::size_t failed = 0;
  for (const auto& c : j.at("checks")) failed += c.at("status") == "fail";
  CHECK(failed == 2);
  CHECK(cmd_verify("all", false).exit_code == kExitFail);
}

TEST_CASE("table delta json") {
  const auto r = cmd_table("delta", "json");
  REQUIRE(r.exit_code == kExitPass);
  const json j = json::parse(r.output);
  CHECK(j.at("kind") == "delta");
  const json* e = find_entry(j, {"p₂", "u₁"});
  REQUIRE(e != nullptr);
  CHECK(e->at("value") == "p1");
  const json* f = find_entry(j, {"u₁", "v₁"});
  REQUIRE(f != nullptr);
  CHECK(f->at("value") == "u1p^2 + v2");
}

TEST_CASE("table cup json carries witnesses") {
  const json j = json::parse(cmd_table("cup", "json").output);
  const json* e = find_entry(j, {"u₁", "u₁"});
  REQUIRE(e != nullptr);
  CHECK(e->at("value") == "u1^2");
  CHECK(e->at("witness") == "(1,y)");
}

TEST_CASE("json output round-trips byte for byte") {
  for (const char* kind : {"delta", "bracket", "cup"}) {
    const std::string text = cmd_table(kind, "json").output;
    CHECK(json::parse(text).dump(2) + "\n" == text);
  }
  const std::string report = cmd_verify("homotopy", true).output;
  CHECK(json::parse(report).dump(2) + "\n" == report);
}

TEST_CASE("table markdown rows") {
  const auto bracket = cmd_table("bracket", "markdown");
  CHECK(bracket.output.find("- [u₁′, v₂] = v₁\n") != std::string::npos);
  CHECK(bracket.output.find("- [p₂, u₁] = p₁\n") != std::string::npos);
  const auto delta = cmd_table("delta", "markdown");
  CHECK(delta.output.find("- Δ(p₂u₁) = p₁\n") != std::string::npos);
  CHECK(cmd_table("cup", "markdown").output.find("- u₁ ⌣ u₁ = u₁² (witness (1,y))") != std::string::npos);
  CHECK(cmd_table("squares", "markdown").exit_code == kExitUsage);
  CHECK(cmd_table("delta", "csv").exit_code == kExitUsage);
}

TEST_CASE("dims") {
  const auto r = cmd_dims(8);
  CHECK(r.exit_code == kExitPass);
  CHECK(r.output == "HH^0 5\nHH^1 7\nHH^2 7\nHH^3 5\nHH^4 5\nHH^5 7\nHH^6 7\nHH^7 5\nHH^8 5\n");
  CHECK(cmd_dims(9).exit_code == kExitUsage);
  CHECK(cmd_dims(-1).exit_code == kExitUsage);
}

TEST_CASE("expressions") {
  ExpressionFinder finder(HochschildRing::standard());
  auto& ring = HochschildRing::standard();
  const auto zero = finder.find(ring.zero_class(3));
  REQUIRE(zero.has_value());
  CHECK(zero->empty());
  CHECK(ascii_expression(*zero) == "0");
  const auto sum = ring.make_class(ring.monomial_class(monomial_of({Generator::u1p, Generator::u1p})).rep +
                                   ring.generator(Generator::v2).rep);
  const auto terms = finder.find(sum);
  REQUIRE(terms.has_value());
  CHECK(ascii_expression(*terms) == "u1p^2 + v2");
  CHECK(unicode_expression(*terms) == "u₁′² + v₂");
}
