#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>

#include "wiegold/algebra.hpp"
#include "wiegold/budget.hpp"
#include "wiegold/covering.hpp"
#include "wiegold/cube_terms.hpp"

namespace wiegold {

// Exit codes shared by the C API and the command-line tool.
enum class Status : int {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kBudget = 3,
  kVerification = 4,
  kNoWitness = 5,
};

// Maps a library exception to its status.
Status status_of(const std::exception& e);

enum class Format { kText, kJson };

struct RunOptions {
  Budget budget;
  Format format = Format::kText;
  CoveringMethod method = CoveringMethod::kGreedy;
  std::uint64_t seed = 0;
  std::uint32_t max_attempts = 100;
  // Print full tuple lists.
  bool verbose = false;
};

struct Report {
  std::string body;
  Status status = Status::kOk;
};

// A built-in frame name (maltsev, majority, nuK, edgeK, cubeK) or a path to
// a frame file.
CubeFrame resolve_frame(const std::string& spec);

Report report_info(const FiniteAlgebra& alg, const RunOptions& opts);
// Status kNoWitness when no cataloged frame up to k_max has a witness.
Report report_classify(const FiniteAlgebra& alg, std::uint32_t k_max,
                       const RunOptions& opts);
Report report_growth(const FiniteAlgebra& alg, std::uint32_t n_max,
                     std::uint32_t k_max, const RunOptions& opts);
// Status kNoWitness when there is no cube witness to build from.
Report report_certify(const FiniteAlgebra& alg, std::uint32_t n,
                      std::uint32_t k_max, const RunOptions& opts);
// g defaults to row_bound(b, k, n).
Report report_covering(std::uint32_t b, std::uint32_t k, std::uint32_t n,
                       std::optional<std::uint64_t> g, const RunOptions& opts);
// Status kNoWitness when the term does not satisfy the frame.
Report report_check_term(const FiniteAlgebra& alg, const std::string& term,
                         const std::string& frame, const RunOptions& opts);
Report report_maximal(const FiniteAlgebra& alg, std::uint32_t n,
                      const RunOptions& opts);
// cube_k defaults to the k of the first cataloged witness up to k_max.
// Status kVerification when some maximal subuniverse is in neither branch.
Report report_verify_dichotomy(const FiniteAlgebra& alg, std::uint32_t n,
                               std::optional<std::uint32_t> cube_k,
                               std::uint32_t k_max, const RunOptions& opts);

}  // namespace wiegold
