#include "wiegold/report.hpp"

#include <cstdio>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "wiegold/closure.hpp"
#include "wiegold/congruence.hpp"
#include "wiegold/errors.hpp"
#include "wiegold/growth.hpp"
#include "wiegold/relations.hpp"
#include "wiegold/term.hpp"

namespace wiegold {

using Json = nlohmann::ordered_json;

Status status_of(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return Status::kParse;
  if (dynamic_cast<const BudgetExceeded*>(&e)) return Status::kBudget;
  if (dynamic_cast<const VerificationFailure*>(&e)) return Status::kVerification;
  return Status::kOther;
}

namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string tuple_text(const PowerCodec& codec, TupleCode c) {
  std::string out = "(";
  for (std::uint32_t i = 0; i < codec.width(); ++i) {
    if (i) out += ',';
    out += std::to_string(codec.coordinate(c, i));
  }
  return out + ")";
}

Json tuple_json(const PowerCodec& codec, TupleCode c) {
  return Json(codec.decode(c));
}

Json tuples_json(const PowerCodec& codec, std::span<const TupleCode> codes) {
  Json out = Json::array();
  for (TupleCode c : codes) out.push_back(tuple_json(codec, c));
  return out;
}

std::string tuples_text(const PowerCodec& codec,
                        std::span<const TupleCode> codes) {
  std::string out;
  for (TupleCode c : codes) {
    if (!out.empty()) out += ' ';
    out += tuple_text(codec, c);
  }
  return out;
}

std::string coords_text(const CoordinateSet& u) {
  std::string out = "{";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(u[i] + 1);
  }
  return out + "}";
}

Json coords_json(const CoordinateSet& u) {
  Json out = Json::array();
  for (auto c : u) out.push_back(c + 1);
  return out;
}

std::string rational_text(const Rational& r) {
  std::ostringstream s;
  s << numerator(r) << "/" << denominator(r);
  return s.str();
}

Report finish(const Json& j, const std::string& text, const RunOptions& opts,
              Status status = Status::kOk) {
  return {opts.format == Format::kJson ? j.dump(2) + "\n" : text, status};
}

}  // namespace

CubeFrame resolve_frame(const std::string& spec) {
  static const std::regex numbered(R"((nu|near-unanimity-|edge-?|cube-?)(\d+))");
  if (spec == "maltsev") return maltsev_frame();
  if (spec == "majority") return majority_frame();
  std::smatch m;
  if (std::regex_match(spec, m, numbered)) {
    const auto k = static_cast<std::uint32_t>(std::stoul(m[2]));
    const std::string kind = m[1];
    if (kind == "nu" || kind == "near-unanimity-") return near_unanimity_frame(k);
    if (kind.rfind("edge", 0) == 0) return edge_frame(k);
    return full_cube_frame(k);
  }
  return load_frame_file(spec);
}

Report report_info(const FiniteAlgebra& alg, const RunOptions& opts) {
  Json j;
  j["name"] = alg.name();
  j["size"] = alg.size();
  if (!alg.labels().empty()) j["labels"] = alg.labels();
  Json ops = Json::array();
  std::string text = "algebra: " + alg.name() + "\nsize: " +
                     std::to_string(alg.size()) + "\noperations:";
  for (const auto& op : alg.operations()) {
    ops.push_back({{"symbol", op.symbol()}, {"arity", op.arity()}});
    text += " " + op.symbol() + "/" + std::to_string(op.arity());
  }
  j["operations"] = ops;
  const auto constants = alg.constants();
  j["constants"] = constants;
  j["idempotent"] = alg.is_idempotent();
  text += "\nconstants:";
  if (constants.empty()) text += " none";
  for (auto c : constants) text += " " + std::to_string(c);
  text += std::string("\nidempotent: ") +
          (alg.is_idempotent() ? "yes" : "no") + "\n";
  return finish(j, text, opts);
}

Report report_classify(const FiniteAlgebra& alg, std::uint32_t k_max,
                       const RunOptions& opts) {
  const Classification c = classify_growth(alg, k_max, opts.budget);
  Json j;
  j["algebra"] = alg.name();
  j["k_max"] = k_max;
  j["classification"] = to_string(c.kind);
  std::string text = "algebra: " + alg.name() + "\nclassification: " +
                     to_string(c.kind) + "\n";
  if (c.witness) {
    const std::string term = to_string(alg, c.witness->term);
    j["witness"] = {{"frame", c.witness->frame.name()},
                    {"k", c.witness->k()},
                    {"term", term}};
    j["perfect"] = c.perfect;
    j["modularity_verified"] = c.modularity_verified;
    text += "witness: " + c.witness->frame.name() + " (k = " +
            std::to_string(c.witness->k()) + ")\nterm: " + term +
            "\nperfect: " + (c.perfect ? "yes" : "no") + "\n";
  } else {
    j["witness"] = nullptr;
    text += "witness: none among cataloged frames with k <= " +
            std::to_string(k_max) + "\n";
  }
  return finish(j, text, opts,
                c.witness ? Status::kOk : Status::kNoWitness);
}

Report report_growth(const FiniteAlgebra& alg, std::uint32_t n_max,
                     std::uint32_t k_max, const RunOptions& opts) {
  if (n_max < 1) throw ContractError("--n-max must be at least 1");
  const GrowthCurve curve = growth_curve(alg, n_max, opts.budget, k_max);
  const FitReport fit = fit_report(curve);
  Json j;
  j["algebra"] = alg.name();
  Json pts = Json::array();
  std::string text = "algebra: " + alg.name() + "\n n  d  status\n";
  for (const auto& p : curve.points) {
    pts.push_back({{"n", p.n}, {"d", p.d}, {"proved", p.proved}});
    char line[96];
    std::snprintf(line, sizeof line, "%2u %2llu  %s\n", p.n,
                  static_cast<unsigned long long>(p.d),
                  p.proved ? "exact" : "upper-bound");
    text += line;
  }
  j["points"] = pts;
  auto fit_json = [](const LinearFit& f) {
    return Json{{"slope", f.slope}, {"intercept", f.intercept},
                {"residual", f.residual}};
  };
  j["fit"] = {{"logarithmic", fit_json(fit.logarithmic)},
              {"linear", fit_json(fit.linear)},
              {"degenerate", fit.degenerate},
              {"better", fit.better}};
  text += "fit log:    d = " + fixed(fit.logarithmic.slope) + " ln n + " +
          fixed(fit.logarithmic.intercept) + "  residual " +
          fixed(fit.logarithmic.residual) + "\n";
  text += "fit linear: d = " + fixed(fit.linear.slope) + " n + " +
          fixed(fit.linear.intercept) + "  residual " +
          fixed(fit.linear.residual) + "\n";
  text += "better: " + fit.better + (fit.degenerate ? " (degenerate)" : "") +
          "\n";
  return finish(j, text, opts);
}

Report report_certify(const FiniteAlgebra& alg, std::uint32_t n,
                      std::uint32_t k_max, const RunOptions& opts) {
  if (n < 1) throw ContractError("--n must be at least 1");
  Json j;
  j["algebra"] = alg.name();
  j["n"] = n;
  const auto witness = cube_witness(alg, k_max, opts.budget);
  if (!witness) {
    j["certificate"] = nullptr;
    return finish(j,
                  "algebra: " + alg.name() +
                      "\nno cube witness with k <= " + std::to_string(k_max) +
                      "; nothing to certify\n",
                  opts, Status::kNoWitness);
  }
  const LiftOptions lift{opts.method, opts.seed, opts.max_attempts};
  const auto cert =
      build_dichotomy_generating_set(alg, n, *witness, lift, opts.budget);
  if (!generates(alg, n, cert.g, opts.budget)) {
    throw VerificationFailure("certificate failed re-verification");
  }
  const PowerCodec codec(alg.size(), n);
  j["witness"] = {{"frame", witness->frame.name()},
                  {"k", witness->k()},
                  {"term", to_string(alg, witness->term)}};
  j["k_prime"] = cert.k_prime;
  j["perfect"] = cert.perfect;
  j["modularity_verified"] = cert.modularity_verified;
  j["sizes"] = {{"H", cert.h.size()},
                {"G_pi", cert.g_pi.size()},
                {"G_eta", cert.g_eta.size()},
                {"G", cert.g.size()}};
  j["verified"] = true;
  j["transcript"] = cert.transcript;
  std::string text = "algebra: " + alg.name() + "\nn: " + std::to_string(n) +
                     "\nwitness: " + witness->frame.name() +
                     "\nperfect: " + (cert.perfect ? "yes" : "no") +
                     "\n|H| = " + std::to_string(cert.h.size()) +
                     "  |G_pi| = " + std::to_string(cert.g_pi.size()) +
                     "  |G_eta| = " + std::to_string(cert.g_eta.size()) +
                     "  |G| = " + std::to_string(cert.g.size()) +
                     "\nverified: yes\n";
  for (const auto& line : cert.transcript) text += "  " + line + "\n";
  if (opts.verbose) {
    j["G_pi"] = tuples_json(codec, cert.g_pi);
    j["G_eta"] = tuples_json(codec, cert.g_eta);
    text += "G_pi: " + tuples_text(codec, cert.g_pi) + "\n";
    text += "G_eta: " + tuples_text(codec, cert.g_eta) + "\n";
  }
  return finish(j, text, opts);
}

Report report_covering(std::uint32_t b, std::uint32_t k, std::uint32_t n,
                       std::optional<std::uint64_t> g, const RunOptions& opts) {
  const std::uint64_t bound = row_bound(b, k, n);
  const std::uint64_t rows = g.value_or(bound);
  const Rational expected = expected_bad_minors(b, k, n, rows);
  std::optional<AlphabetMatrix> m;
  std::optional<std::uint32_t> attempts;
  if (opts.method == CoveringMethod::kGreedy) {
    m.emplace(greedy_construct(b, k, n, rows));
  } else {
    auto r = random_construct(b, k, n, rows, opts.seed, opts.max_attempts);
    attempts = r.attempts;
    m.emplace(std::move(r.matrix));
  }
  if (!verify_k_surjective(*m, k).surjective) {
    throw VerificationFailure("matrix is not k-surjective");
  }
  const std::string method =
      opts.method == CoveringMethod::kGreedy ? "greedy" : "random";
  Json j;
  j["b"] = b;
  j["k"] = k;
  j["n"] = n;
  j["g"] = rows;
  j["row_bound"] = bound;
  j["expected_bad_minors"] = rational_text(expected);
  j["method"] = method;
  if (attempts) {
    j["seed"] = opts.seed;
    j["attempts"] = *attempts;
  }
  j["verified"] = true;
  Json matrix = Json::array();
  for (std::uint64_t i = 0; i < m->rows(); ++i) {
    auto row = m->row(i);
    matrix.push_back(Json(std::vector<std::uint32_t>(row.begin(), row.end())));
  }
  j["matrix"] = matrix;
  std::string text = "b = " + std::to_string(b) + "  k = " + std::to_string(k) +
                     "  n = " + std::to_string(n) + "  g = " +
                     std::to_string(rows) + " (row bound " +
                     std::to_string(bound) + ")\nexpected bad minors: ";
  const std::string exact = rational_text(expected);
  if (exact.size() <= 40) text += exact + " ~ ";
  text += fixed(static_cast<double>(expected)) + "\nmethod: " + method;
  if (attempts) {
    text += " (seed " + std::to_string(opts.seed) + ", attempt " +
            std::to_string(*attempts) + ")";
  }
  text += "\nverified: " + std::to_string(k) + "-surjective\n" + to_string(*m);
  return finish(j, text, opts);
}

Report report_check_term(const FiniteAlgebra& alg, const std::string& term_text,
                         const std::string& frame_spec, const RunOptions& opts) {
  const Term term = parse_term(alg, term_text);
  const CubeFrame frame = resolve_frame(frame_spec);
  const bool ok = satisfies_frame(alg, term, frame);
  Json j;
  j["algebra"] = alg.name();
  j["term"] = to_string(alg, term);
  j["frame"] = frame.name();
  j["satisfied"] = ok;
  const std::string text = "algebra: " + alg.name() + "\nterm: " +
                           to_string(alg, term) + "\nframe: " + frame.name() +
                           "\nresult: " + (ok ? "pass" : "fail") + "\n";
  return finish(j, text, opts, ok ? Status::kOk : Status::kNoWitness);
}

Report report_maximal(const FiniteAlgebra& alg, std::uint32_t n,
                      const RunOptions& opts) {
  if (n < 1) throw ContractError("--n must be at least 1");
  const auto maximal = maximal_subuniverses(alg, n, opts.budget);
  const PowerCodec codec(alg.size(), n);
  Json j;
  j["algebra"] = alg.name();
  j["n"] = n;
  Json list = Json::array();
  std::string text = "algebra: " + alg.name() + "\nn: " + std::to_string(n) +
                     "\nmaximal subuniverses: " +
                     std::to_string(maximal.size()) + "\n";
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    const auto& m = maximal[i];
    const CoordinateSet support = minimal_support(m);
    const bool critical = is_critical_maximal(m);
    const bool parallelogram = has_parallelogram(m);
    Json e{{"size", m.cardinality()},
           {"support", coords_json(support)},
           {"critical", critical},
           {"parallelogram", parallelogram}};
    text += "  M" + std::to_string(i + 1) + ": size " +
            std::to_string(m.cardinality()) + ", support " +
            coords_text(support) + (critical ? ", critical" : "") +
            (parallelogram ? ", parallelogram" : "") + "\n";
    if (opts.verbose) {
      e["members"] = tuples_json(codec, m.members());
      text += "    " + tuples_text(codec, m.members()) + "\n";
    }
    list.push_back(e);
  }
  j["maximal"] = list;
  return finish(j, text, opts);
}

Report report_verify_dichotomy(const FiniteAlgebra& alg, std::uint32_t n,
                               std::optional<std::uint32_t> cube_k,
                               std::uint32_t k_max, const RunOptions& opts) {
  if (n < 1) throw ContractError("--n must be at least 1");
  const auto witness =
      cube_witness(alg, cube_k.value_or(k_max), opts.budget);
  if (!cube_k && !witness) {
    Json j{{"algebra", alg.name()}, {"n", n}, {"witness", nullptr}};
    return finish(j,
                  "algebra: " + alg.name() + "\nno cube witness with k <= " +
                      std::to_string(k_max) + "\n",
                  opts, Status::kNoWitness);
  }
  const std::uint32_t k = cube_k.value_or(witness ? witness->k() : 0);
  const DichotomyReport rep =
      verify_theorem_induced(alg, n, k, witness.has_value(), opts.budget);
  Json j;
  j["algebra"] = alg.name();
  j["n"] = n;
  j["k"] = k;
  j["projection_bound"] = rep.projection_bound;
  j["modularity_verified"] = rep.modularity_verified;
  std::string text = "algebra: " + alg.name() + "\nn: " + std::to_string(n) +
                     "  k: " + std::to_string(k) + "  projection bound: " +
                     std::to_string(rep.projection_bound) + "\n";
  Json list = Json::array();
  for (std::size_t i = 0; i < rep.branches.size(); ++i) {
    const auto& br = rep.branches[i];
    const char* kind = br.kind == InducedBranch::Kind::kProjection
                           ? "projection"
                       : br.kind == InducedBranch::Kind::kAbelianization
                           ? "abelianization"
                           : "neither";
    list.push_back({{"size", rep.maximal[i].cardinality()},
                    {"support", coords_json(br.support)},
                    {"branch", kind}});
    text += "  M" + std::to_string(i + 1) + ": size " +
            std::to_string(rep.maximal[i].cardinality()) + ", support " +
            coords_text(br.support) + ", induced by " + kind + "\n";
  }
  j["maximal"] = list;
  j["pass"] = rep.pass();
  text += std::string("result: ") + (rep.pass() ? "pass" : "fail") + "\n";
  return finish(j, text, opts,
                rep.pass() ? Status::kOk : Status::kVerification);
}

}  // namespace wiegold
