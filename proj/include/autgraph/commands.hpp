#pragma once

// Command implementations shared by the CLI and the tests. Each returns a
// process exit code: 0 success, 1 domain error or failed verification,
// 2 usage error.

#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "autgraph/cache.hpp"
#include "autgraph/family.hpp"
#include "autgraph/io.hpp"
#include "autgraph/recursion.hpp"
#include "autgraph/verify.hpp"

namespace autgraph {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

enum class OutputFormat { json, dot, table };

inline OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "dot") return OutputFormat::dot;
  if (name == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown format '" + name + "'");
}

struct GenerateOptions {
  Family family = Family::biconn;
  int n = 2;
  int k = 0;
  int s = 0;
  std::optional<int> min_block_n;
  std::optional<int> min_block_k;
  OutputFormat format = OutputFormat::json;
  std::string cache_dir;  // empty: no cache
  unsigned jobs = 1;
};

struct VerifyOptions {
  int max_order = 5;
  int max_s = 2;
  std::optional<Family> family;  // empty: all families
  OutputFormat format = OutputFormat::table;
  unsigned seed = 20240601;
  unsigned jobs = 1;
};

/// AUTGRAPH_CACHE takes precedence over the --cache flag.
inline std::string effective_cache_dir(const std::string& flag) {
  if (const char* env = std::getenv("AUTGRAPH_CACHE"); env && *env) return env;
  return flag;
}

inline void write_combination(std::ostream& out, const LinearCombination& lc, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: out << to_json(lc).dump(2) << "\n"; break;
    case OutputFormat::dot: write_dot(out, lc); break;
    case OutputFormat::table: write_table(out, lc); break;
  }
}

inline int run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  const bool has_limits = opt.family == Family::two_edge || opt.family == Family::two_edge_cycles;
  if (!has_limits && (opt.min_block_n || opt.min_block_k)) {
    err << "error: --min-block-n/--min-block-k only apply to the 2edge families\n";
    return exit_usage;
  }
  if (opt.family == Family::aux) {
    err << "error: family 'aux' is internal and cannot be generated directly\n";
    return exit_usage;
  }
  try {
    GeneratorConfig config;
    config.jobs = opt.jobs;
    if (auto dir = effective_cache_dir(opt.cache_dir); !dir.empty()) config.store = std::make_shared<DirectoryCache>(dir);
    Generator gen(config);
    BetaKey key{opt.family, 0, opt.n, opt.k, opt.s, {}};
    if (opt.min_block_n) key.limits.min_block_n = *opt.min_block_n;
    if (opt.min_block_k) key.limits.min_block_k = *opt.min_block_k;
    write_combination(out, gen.beta(key), opt.format);
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

/// Every recursion key the verifier checks for the given options.
inline std::vector<BetaKey> verification_keys(const VerifyOptions& opt) {
  std::vector<Family> families;
  if (opt.family)
    families = {*opt.family};
  else
    families = {Family::biconn, Family::aux, Family::conn, Family::two_edge, Family::two_edge_cycles};
  std::vector<BetaKey> keys;
  for (Family f : families)
    for (int s = 0; s <= opt.max_s; ++s)
      for (int total = 2; total <= opt.max_order; ++total)
        for (int n = 2; n <= total; ++n) {
          const int k = total - n;
          if (f == Family::aux) {
            for (int j = 2; j < n && j <= k; ++j) keys.push_back({f, j, n, k, s, {}});
          } else {
            keys.push_back({f, 0, n, k, s, {}});
          }
        }
  return keys;
}

inline int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.max_order < 2 || opt.max_order > default_enumeration_bound) {
    err << "error: --max-order must lie in [2, " << default_enumeration_bound << "], got " << opt.max_order << "\n";
    return exit_failure;
  }
  if (opt.max_s < 0 || opt.max_s > max_enumeration_legs) {
    err << "error: --s must lie in [0, " << max_enumeration_legs << "], got " << opt.max_s << "\n";
    return exit_failure;
  }
  try {
    GeneratorConfig config;
    config.jobs = opt.jobs;
    Generator gen(config);
    bool pass = true;
    json beta_reports = json::array();
    for (const auto& key : verification_keys(opt)) {
      const auto report = verify_beta(gen, key, opt.max_order);
      pass = pass && report.pass;
      if (opt.format == OutputFormat::json) {
        beta_reports.push_back(to_json(report));
        continue;
      }
      out << (report.pass ? "PASS " : "FAIL ") << key.describe() << ": " << report.rows.size() << " classes, "
          << report.enumerated << " enumerated\n";
      for (const auto& row : report.rows)
        if (!row.match)
          out << "  coefficient " << to_fraction_string(row.coefficient) << " expected "
              << to_fraction_string(row.expected) << " for " << to_json(row.representative).dump() << "\n";
      for (const auto& g : report.missing) out << "  missing " << to_json(g).dump() << "\n";
      for (const auto& hex : report.extra) out << "  extra class " << hex << "\n";
    }
    const auto lemmas = verify_lemmas(gen, opt.max_order, opt.seed);
    pass = pass && lemmas.pass();
    if (opt.format == OutputFormat::json) {
      out << json{{"beta", beta_reports}, {"lemmas", to_json(lemmas)}, {"pass", pass}}.dump(2) << "\n";
    } else {
      write_table(out, lemmas);
      out << (pass ? "all checks passed" : "verification FAILED") << "\n";
    }
    return pass ? exit_ok : exit_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

}  // namespace autgraph
