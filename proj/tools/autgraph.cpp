#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "autgraph/commands.hpp"

namespace {

const std::map<std::string, autgraph::Family> generate_families{
    {"biconn", autgraph::Family::biconn},
    {"conn", autgraph::Family::conn},
    {"2edge", autgraph::Family::two_edge},
    {"2edge-cycles", autgraph::Family::two_edge_cycles},
};

const std::map<std::string, autgraph::OutputFormat> formats{
    {"json", autgraph::OutputFormat::json},
    {"dot", autgraph::OutputFormat::dot},
    {"table", autgraph::OutputFormat::table},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate multigraph classes weighted by inverse automorphism order"};
  app.require_subcommand(1);

  autgraph::GenerateOptions gen;
  int min_block_n = 0, min_block_k = 0;
  auto* generate = app.add_subcommand("generate", "Print one recursion result");
  generate->add_option("--family", gen.family, "Graph family")
      ->required()
      ->transform(CLI::CheckedTransformer(generate_families, CLI::ignore_case));
  generate->add_option("--n", gen.n, "Vertex number")->required();
  generate->add_option("--k", gen.k, "Cyclomatic number")->required();
  generate->add_option("--s", gen.s, "Number of legs")->capture_default_str();
  auto* bn = generate->add_option("--min-block-n", min_block_n, "Minimum block vertex number (2edge families)");
  auto* bk = generate->add_option("--min-block-k", min_block_k, "Minimum block cyclomatic number (2edge families)");
  generate->add_option("--format", gen.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");
  generate->add_option("--cache", gen.cache_dir, "Cache directory (AUTGRAPH_CACHE overrides)");
  generate->add_option("--jobs", gen.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  autgraph::VerifyOptions ver;
  std::string verify_family = "all";
  auto* verify = app.add_subcommand("verify", "Check recursion results against exhaustive enumeration");
  verify->add_option("--max-order", ver.max_order, "Bound on n + k")->required();
  verify->add_option("--s", ver.max_s, "Largest leg count checked")->capture_default_str();
  verify->add_option("--family", verify_family, "Family or 'all'")
      ->check(CLI::IsMember({"all", "biconn", "aux", "conn", "2edge", "2edge-cycles"}))
      ->capture_default_str();
  verify->add_option("--format", ver.format, "Report format (json or table)")
      ->transform(CLI::CheckedTransformer(std::map<std::string, autgraph::OutputFormat>{
                                              {"json", autgraph::OutputFormat::json},
                                              {"table", autgraph::OutputFormat::table}},
                                          CLI::ignore_case))
      ->default_str("table");
  verify->add_option("--seed", ver.seed, "Seed for random relabelings")->capture_default_str();
  verify->add_option("--jobs", ver.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return autgraph::exit_usage;
  }

  if (generate->parsed()) {
    if (*bn) gen.min_block_n = min_block_n;
    if (*bk) gen.min_block_k = min_block_k;
    const int code = autgraph::run_generate(gen, std::cout, std::cerr);
    if (code == autgraph::exit_usage) std::cerr << generate->help();
    return code;
  }
  if (verify_family != "all") ver.family = autgraph::parse_family(verify_family);
  return autgraph::run_verify(ver, std::cout, std::cerr);
}
