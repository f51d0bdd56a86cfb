#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hhq8/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of kQ8 over GF(2): verification suites and structure tables"};
  app.require_subcommand(1);

  std::string suite;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "algebra | homotopy | comparison | relations | bv | all")->required();
  verify->add_flag("--json", json, "print the report as JSON");

  std::string kind;
  std::string format = "markdown";
  auto* table = app.add_subcommand("table", "print a structure table");
  table->add_option("kind", kind, "delta | bracket | cup")->required();
  table->add_option("--format", format, "markdown | json");

  int max_degree = 8;
  auto* dims = app.add_subcommand("dims", "print dim HH^n for n = 0..max");
  dims->add_option("--max", max_degree, "largest degree (<= 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hhq8::kExitUsage;
  }

  hhq8::CommandResult result;
  if (*verify) {
    result = hhq8::cmd_verify(suite, json);
  } else if (*table) {
    result = hhq8::cmd_table(kind, format);
  } else {
    result = hhq8::cmd_dims(max_degree);
  }
  (result.exit_code == hhq8::kExitUsage ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
