#include "wiegold/wiegold.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "wiegold/closure.hpp"
#include "wiegold/covering.hpp"
#include "wiegold/errors.hpp"
#include "wiegold/report.hpp"

struct wg_algebra {
  wiegold::FiniteAlgebra alg;
};

namespace {

thread_local std::string last_error;

wg_status fail(wg_status s, const char* what) {
  last_error = what;
  return s;
}

template <class F>
wg_status guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const std::bad_alloc&) {
    return fail(WG_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return fail(static_cast<wg_status>(wiegold::status_of(e)), e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wiegold::Budget to_budget(const wg_budget* b) {
  wiegold::Budget out;
  if (b) {
    out.max_tuples = b->max_tuples;
    out.max_candidates = b->max_candidates;
    out.exhaustive_subset_cap = b->exhaustive_subset_cap;
    out.max_subuniverses = b->max_subuniverses;
  }
  return out;
}

wiegold::RunOptions to_options(const wg_options* o) {
  wiegold::RunOptions out;
  if (!o) return out;
  out.budget = to_budget(&o->budget);
  out.format = o->format == WG_FORMAT_JSON ? wiegold::Format::kJson
                                           : wiegold::Format::kText;
  out.method = o->method == WG_METHOD_RANDOM ? wiegold::CoveringMethod::kRandom
                                             : wiegold::CoveringMethod::kGreedy;
  out.seed = o->seed;
  out.max_attempts = o->max_attempts;
  out.verbose = o->verbose != 0;
  return out;
}

template <class F>
wg_status report(char** out, F&& f) {
  if (!out) return fail(WG_ERR_OTHER, "null output pointer");
  *out = nullptr;
  return guard([&] {
    wiegold::Report r = f();
    *out = duplicate(r.body);
    if (r.status != wiegold::Status::kOk) last_error = "see report";
    return static_cast<wg_status>(r.status);
  });
}

}  // namespace

extern "C" {

void wg_budget_default(wg_budget* out) {
  if (!out) return;
  const wiegold::Budget b;
  *out = {b.max_tuples, b.max_candidates, b.exhaustive_subset_cap,
          b.max_subuniverses};
}

void wg_options_default(wg_options* out) {
  if (!out) return;
  wg_budget_default(&out->budget);
  out->format = WG_FORMAT_TEXT;
  out->method = WG_METHOD_GREEDY;
  out->seed = 0;
  out->max_attempts = 100;
  out->verbose = 0;
}

const char* wg_last_error(void) { return last_error.c_str(); }

void wg_string_free(char* s) { std::free(s); }

wg_status wg_algebra_load(const char* path, wg_algebra** out) {
  if (!path || !out) return fail(WG_ERR_OTHER, "null argument");
  *out = nullptr;
  return guard([&] {
    *out = new wg_algebra{wiegold::load_algebra_file(path)};
    return WG_OK;
  });
}

wg_status wg_algebra_parse(const char* json, wg_algebra** out) {
  if (!json || !out) return fail(WG_ERR_OTHER, "null argument");
  *out = nullptr;
  return guard([&] {
    *out = new wg_algebra{wiegold::parse_algebra_json(json)};
    return WG_OK;
  });
}

void wg_algebra_free(wg_algebra* alg) { delete alg; }

uint32_t wg_algebra_size(const wg_algebra* alg) {
  return alg ? alg->alg.size() : 0;
}

size_t wg_algebra_operation_count(const wg_algebra* alg) {
  return alg ? alg->alg.operation_count() : 0;
}

wg_status wg_algebra_apply(const wg_algebra* alg, size_t op,
                           const uint32_t* args, size_t nargs, uint32_t* out) {
  if (!alg || !out || (nargs && !args)) return fail(WG_ERR_OTHER, "null argument");
  return guard([&] {
    if (op >= alg->alg.operation_count()) {
      throw wiegold::ContractError("operation index out of range");
    }
    *out = alg->alg.apply(op, std::span<const uint32_t>(args, nargs));
    return WG_OK;
  });
}

wg_status wg_d_exact(const wg_algebra* alg, uint32_t n, const wg_budget* budget,
                     uint64_t* out) {
  if (!alg || !out) return fail(WG_ERR_OTHER, "null argument");
  return guard([&] {
    *out = wiegold::d_exact(alg->alg, n, to_budget(budget)).size;
    return WG_OK;
  });
}

wg_status wg_row_bound(uint32_t b, uint32_t k, uint32_t n, uint64_t* out) {
  if (!out) return fail(WG_ERR_OTHER, "null argument");
  return guard([&] {
    *out = wiegold::row_bound(b, k, n);
    return WG_OK;
  });
}

wg_status wg_report_info(const wg_algebra* alg, const wg_options* opts,
                         char** out) {
  if (!alg) return fail(WG_ERR_OTHER, "null algebra");
  return report(out, [&] { return wiegold::report_info(alg->alg, to_options(opts)); });
}

wg_status wg_report_classify(const wg_algebra* alg, uint32_t k_max,
                             const wg_options* opts, char** out) {
  if (!alg) return fail(WG_ERR_OTHER, "null algebra");
  return report(out, [&] {
    return wiegold::report_classify(alg->alg, k_max, to_options(opts));
  });
}

wg_status wg_report_growth(const wg_algebra* alg, uint32_t n_max,
                           uint32_t k_max, const wg_options* opts, char** out) {
  if (!alg) return fail(WG_ERR_OTHER, "null algebra");
  return report(out, [&] {
    return wiegold::report_growth(alg->alg, n_max, k_max, to_options(opts));
  });
}

wg_status wg_report_certify(const wg_algebra* alg, uint32_t n, uint32_t k_max,
                            const wg_options* opts, char** out) {
  if (!alg) return fail(WG_ERR_OTHER, "null algebra");
  return report(out, [&] {
    return wiegold::report_certify(alg->alg, n, k_max, to_options(opts));
  });
}

wg_status wg_report_covering(uint32_t b, uint32_t k, uint32_t n, uint64_t g,
                             const wg_options* opts, char** out) {
  return report(out, [&] {
    std::optional<std::uint64_t> rows;
    if (g) rows = g;
    return wiegold::report_covering(b, k, n, rows, to_options(opts));
  });
}

wg_status wg_report_check_term(const wg_algebra* alg, const char* term,
                               const char* frame, const wg_options* opts,
                               char** out) {
  if (!alg || !term || !frame) return fail(WG_ERR_OTHER, "null argument");
  return report(out, [&] {
    return wiegold::report_check_term(alg->alg, term, frame, to_options(opts));
  });
}

wg_status wg_report_maximal(const wg_algebra* alg, uint32_t n,
                            const wg_options* opts, char** out) {
  if (!alg) return fail(WG_ERR_OTHER, "null algebra");
  return report(out, [&] {
    return wiegold::report_maximal(alg->alg, n, to_options(opts));
  });
}

wg_status wg_report_verify_dichotomy(const wg_algebra* alg, uint32_t n,
                                     uint32_t cube_k, uint32_t k_max,
                                     const wg_options* opts, char** out) {
  if (!alg) return fail(WG_ERR_OTHER, "null algebra");
  return report(out, [&] {
    std::optional<std::uint32_t> k;
    if (cube_k) k = cube_k;
    return wiegold::report_verify_dichotomy(alg->alg, n, k, k_max,
                                            to_options(opts));
  });
}

}  // extern "C"
