// wiegold: command-line front end over the C API.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wiegold/wiegold.h"

namespace {

struct Config {
  std::string algebra;
  std::string out;
  std::string format = "text";
  std::string method = "greedy";
  std::string term;
  std::string frame = "maltsev";
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t g = 0;
  std::uint32_t n = 0;
  std::uint32_t n_max = 6;
  std::uint32_t k_max = 3;
  std::uint32_t b = 2;
  std::uint32_t k = 0;
  std::uint32_t max_attempts = 100;
  bool verbose = false;
};

int emit(wg_status status, char* text, const Config& cfg) {
  if (text) {
    if (cfg.out.empty()) {
      std::fputs(text, stdout);
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      f << text;
      if (!f) {
        std::fprintf(stderr, "error: cannot write %s\n", cfg.out.c_str());
        wg_string_free(text);
        return WG_ERR_OTHER;
      }
    }
    wg_string_free(text);
  } else {
    std::fprintf(stderr, "error: %s\n", wg_last_error());
  }
  return status;
}

bool read_env_budget(std::uint64_t& out) {
  const char* env = std::getenv("WIEGOLD_BUDGET");
  if (!env || !*env) return true;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return false;
  out = v;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Growth rates, cube terms and generating sets of finite algebras"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_algebra) {
    if (needs_algebra) {
      sub->add_option("--algebra", cfg.algebra, "Algebra JSON file")
          ->required()
          ->check(CLI::ExistingFile);
    }
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Write output to this file");
    sub->add_option("--budget", cfg.budget,
                    "Largest power (tuple count) materialised; "
                    "default from WIEGOLD_BUDGET");
    sub->add_flag("--verbose,-v", cfg.verbose, "Print full tuple lists");
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "Matrix construction")
        ->check(CLI::IsMember({"random", "greedy"}));
    sub->add_option("--seed", cfg.seed, "Seed for the random construction");
    sub->add_option("--max-attempts", cfg.max_attempts,
                    "Attempts for the random construction");
  };

  auto* info = app.add_subcommand("info", "Summarise an algebra");
  add_common(info, true);

  auto* classify = app.add_subcommand("classify", "Logarithmic or linear growth");
  add_common(classify, true);
  classify->add_option("--k-max", cfg.k_max, "Largest cube frame size searched");

  auto* growth = app.add_subcommand("growth", "Table of d(n)");
  add_common(growth, true);
  growth->add_option("--n-max", cfg.n_max, "Largest n")->check(CLI::PositiveNumber);
  growth->add_option("--k-max", cfg.k_max, "Largest cube frame size searched");

  auto* certify = app.add_subcommand("certify", "Verified generating set of A^n");
  add_common(certify, true);
  add_method(certify);
  certify->add_option("--n", cfg.n, "Power")->required()->check(CLI::PositiveNumber);
  certify->add_option("--k-max", cfg.k_max, "Largest cube frame size searched");

  auto* covering = app.add_subcommand("covering", "k-surjective matrix");
  add_common(covering, false);
  add_method(covering);
  covering->add_option("--b", cfg.b, "Alphabet size")->required();
  covering->add_option("--k", cfg.k, "Strength")->required();
  covering->add_option("--n", cfg.n, "Columns")->required();
  covering->add_option("--g", cfg.g, "Rows (default: the row bound)");

  auto* check = app.add_subcommand("check-term", "Check a term against a frame");
  add_common(check, true);
  check->add_option("--term", cfg.term, "Term in prefix notation")->required();
  check->add_option("--frame", cfg.frame,
                    "maltsev, majority, nuK, edgeK, cubeK or a frame file");

  auto* maximal = app.add_subcommand("maximal", "Maximal subuniverses of A^n");
  add_common(maximal, true);
  maximal->add_option("--n", cfg.n, "Power")->required()->check(CLI::PositiveNumber);

  auto* dichotomy = app.add_subcommand(
      "verify-dichotomy", "Check how maximal subuniverses of A^n are induced");
  add_common(dichotomy, true);
  dichotomy->add_option("--n", cfg.n, "Power")->required()->check(CLI::PositiveNumber);
  dichotomy->add_option("--k", cfg.k, "Cube term size (default: from search)");
  dichotomy->add_option("--k-max", cfg.k_max, "Largest cube frame size searched");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : WG_ERR_OTHER;
  }

  wg_options opts;
  wg_options_default(&opts);
  if (!read_env_budget(opts.budget.max_tuples)) {
    std::fprintf(stderr, "error: WIEGOLD_BUDGET must be a positive integer\n");
    return WG_ERR_OTHER;
  }
  if (cfg.budget) opts.budget.max_tuples = cfg.budget;
  opts.format = cfg.format == "json" ? WG_FORMAT_JSON : WG_FORMAT_TEXT;
  opts.method = cfg.method == "random" ? WG_METHOD_RANDOM : WG_METHOD_GREEDY;
  opts.seed = cfg.seed;
  opts.max_attempts = cfg.max_attempts;
  opts.verbose = cfg.verbose ? 1 : 0;

  char* text = nullptr;
  if (covering->parsed()) {
    const wg_status status =
        wg_report_covering(cfg.b, cfg.k, cfg.n, cfg.g, &opts, &text);
    return emit(status, text, cfg);
  }

  wg_algebra* alg = nullptr;
  wg_status status = wg_algebra_load(cfg.algebra.c_str(), &alg);
  if (status != WG_OK) {
    std::fprintf(stderr, "error: %s\n", wg_last_error());
    return status;
  }
  if (info->parsed()) {
    status = wg_report_info(alg, &opts, &text);
  } else if (classify->parsed()) {
    status = wg_report_classify(alg, cfg.k_max, &opts, &text);
  } else if (growth->parsed()) {
    status = wg_report_growth(alg, cfg.n_max, cfg.k_max, &opts, &text);
  } else if (certify->parsed()) {
    status = wg_report_certify(alg, cfg.n, cfg.k_max, &opts, &text);
  } else if (check->parsed()) {
    status = wg_report_check_term(alg, cfg.term.c_str(), cfg.frame.c_str(),
                                  &opts, &text);
  } else if (maximal->parsed()) {
    status = wg_report_maximal(alg, cfg.n, &opts, &text);
  } else {
    status = wg_report_verify_dichotomy(alg, cfg.n, cfg.k, cfg.k_max, &opts,
                                        &text);
  }
  wg_algebra_free(alg);
  return emit(status, text, cfg);
}
