#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "milnor/cli.hpp"
#include "milnor/errors.hpp"

int main(int argc, char** argv) {
  namespace cli = milnor::cli;
  CLI::App app{"Exact Milnor triple linking and Seifert-form computations"};
  app.require_subcommand(1, 1);

  cli::RunConfig config;
  std::string input_path;
  std::string output = "json";
  std::uint64_t seed = 0;

  for (const std::string& name : cli::subcommands()) {
    CLI::App* sub = app.add_subcommand(name, "run '" + name + "' on a JSON document");
    sub->add_option("-i,--input", input_path, "input file (default: standard input)");
    sub->add_option("-o,--output", output, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", seed, "seed for randomized self-checks");
    if (name == "mu") sub->add_flag("--show-series", config.show_series, "include the truncated Magnus series");
  }

  if (argc >= 2 && argv[1][0] != '-') {
    const auto& names = cli::subcommands();
    if (std::find(names.begin(), names.end(), argv[1]) == names.end()) {
      config.subcommand = argv[1];
      const cli::RunResult r = cli::run(config, "");
      std::cout << r.output;
      return r.exit_code;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cout << R"({"error":"bad_input","detail":"invalid command line"})" << "\n";
    return cli::kExitBadInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.subcommand = chosen->get_name();
  config.output = output == "text" ? cli::OutputFormat::text : cli::OutputFormat::json;
  if (chosen->count("--seed") > 0) config.seed = seed;
  try {
    if (auto cap = cli::degree_cap_from_env(std::getenv(cli::kDegreeCapEnv))) config.degree_cap = *cap;
  } catch (const milnor::InputError& e) {
    std::cout << R"({"error":"bad_input","detail":")" << e.what() << "\"}\n";
    return cli::kExitBadInput;
  }

  std::string input;
  if (input_path.empty()) {
    input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    config.input_path = input_path;
    std::ifstream file(input_path);
    if (!file) {
      std::cout << R"({"error":"bad_input","detail":"cannot open input file"})" << "\n";
      return cli::kExitBadInput;
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    input = buf.str();
  }

  const cli::RunResult result = cli::run(config, input);
  std::cout << result.output;
  return result.exit_code;
}
