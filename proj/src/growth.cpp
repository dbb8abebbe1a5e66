#include "wiegold/growth.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "wiegold/closure.hpp"
#include "wiegold/congruence.hpp"
#include "wiegold/errors.hpp"

namespace wiegold {

namespace {

// Codes in increasing order, each added when not yet generated.
std::vector<TupleCode> greedy_generating_set(const FiniteAlgebra& alg,
                                             std::uint32_t n,
                                             const Budget& budget) {
  const PowerCodec codec(alg.size(), n);
  std::vector<TupleCode> gens;
  Subuniverse current = close(alg, n, gens, budget);
  for (TupleCode c = 0; c < codec.cardinality() && !current.is_full(); ++c) {
    if (current.contains(c)) continue;
    gens.push_back(c);
    current = close(alg, n, gens, budget);
  }
  return gens;
}

std::vector<TupleCode> generating_set(const FiniteAlgebra& alg, std::uint32_t n,
                                      const Budget& budget,
                                      std::vector<std::string>& transcript) {
  try {
    auto m = d_exact(alg, n, budget);
    transcript.push_back("H: minimum generating set of A^" + std::to_string(n) +
                         ", size " + std::to_string(m.size));
    return m.witness;
  } catch (const BudgetExceeded&) {
    auto gens = greedy_generating_set(alg, n, budget);
    transcript.push_back("H: greedy generating set of A^" + std::to_string(n) +
                         ", size " + std::to_string(gens.size()));
    return gens;
  }
}

// Greedy generating set of Q^n: unit deviations from the zero diagonal
// first, then all tuples in code order.
std::vector<TupleCode> quotient_generators(const FiniteAlgebra& q,
                                           std::uint32_t n,
                                           const Budget& budget) {
  const PowerCodec codec(q.size(), n);
  std::vector<TupleCode> order;
  std::vector<Element> tuple(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (Element v = 1; v < q.size(); ++v) {
      tuple[i] = v;
      order.push_back(codec.encode(tuple));
    }
    tuple[i] = 0;
  }
  std::vector<TupleCode> gens;
  Subuniverse current = close(q, n, gens, budget);
  auto consider = [&](TupleCode c) {
    if (current.is_full() || current.contains(c)) return;
    gens.push_back(c);
    current = close(q, n, gens, budget);
  };
  for (TupleCode c : order) consider(c);
  for (TupleCode c = 0; c < codec.cardinality() && !current.is_full(); ++c) {
    consider(c);
  }
  return gens;
}

}  // namespace

DichotomyCertificate build_dichotomy_generating_set(
    const FiniteAlgebra& alg, std::uint32_t n, const CubeWitness& witness,
    const LiftOptions& options, const Budget& budget) {
  if (n == 0) throw ContractError("certificate needs n >= 1");
  if (witness.frame.pointedness() != 0) {
    throw ContractError("the cube witness must be 0-pointed");
  }
  if (!satisfies_frame(alg, witness.term, witness.frame)) {
    throw ContractError("the term does not satisfy frame " +
                        witness.frame.name());
  }
  DichotomyCertificate cert{witness, n, std::max(3U, witness.k()), false,
                            false, {}, {}, {}, {}, {}};
  auto& log = cert.transcript;
  log.push_back("witness: " + witness.frame.name() + " term, k = " +
                std::to_string(witness.k()));

  const Commutator comm = commutator_11(alg, true, budget);
  cert.perfect = comm.value.is_full();
  cert.modularity_verified = comm.modularity_verified;
  log.push_back(std::string("[1,1] ") +
                (cert.perfect ? "= 1, perfect" : "< 1, imperfect"));

  if (n < cert.k_prime) {
    cert.h = generating_set(alg, n, budget, log);
    cert.g_pi = cert.h;
    log.push_back("G_pi: n < k', H used directly");
  } else {
    cert.h = generating_set(alg, cert.k_prime, budget, log);
    LiftResult lift =
        lift_to_power(alg, cert.h, cert.k_prime, n, options, budget);
    cert.g_pi = std::move(lift.generators);
    log.push_back("G_pi: " + std::to_string(lift.matrix.rows()) + " x " +
                  std::to_string(n) + " matrix over " +
                  std::to_string(lift.alphabet.size()) +
                  " symbols, every " + std::to_string(cert.k_prime) +
                  "-projection verified onto");
  }

  if (!cert.perfect) {
    const Abelianization ab = abelianization(alg, true, budget);
    const FiniteAlgebra& q = ab.algebra;
    const auto quotient_gens = quotient_generators(q, n, budget);
    std::vector<Element> rep(q.size(), alg.size());
    for (Element a = 0; a < alg.size(); ++a) {
      rep[ab.eta[a]] = std::min(rep[ab.eta[a]], a);
    }
    const PowerCodec qc(q.size(), n);
    const PowerCodec ac(alg.size(), n);
    std::vector<Element> tuple(n);
    for (TupleCode c : quotient_gens) {
      for (std::uint32_t i = 0; i < n; ++i) tuple[i] = rep[qc.coordinate(c, i)];
      cert.g_eta.push_back(ac.encode(tuple));
    }
    std::sort(cert.g_eta.begin(), cert.g_eta.end());
    log.push_back("G_eta: " + std::to_string(cert.g_eta.size()) +
                  " lifts of a generating set of (A/[1,1])^" +
                  std::to_string(n) + ", |A/[1,1]| = " +
                  std::to_string(q.size()));
  }

  std::sort(cert.g_pi.begin(), cert.g_pi.end());
  std::set_union(cert.g_pi.begin(), cert.g_pi.end(), cert.g_eta.begin(),
                 cert.g_eta.end(), std::back_inserter(cert.g));
  if (!generates(alg, n, cert.g, budget)) {
    throw VerificationFailure("G_pi ∪ G_eta does not generate A^" +
                              std::to_string(n));
  }
  log.push_back("verified: G generates A^" + std::to_string(n) + ", |G| = " +
                std::to_string(cert.g.size()));
  return cert;
}

GrowthCurve growth_curve(const FiniteAlgebra& alg, std::uint32_t n_max,
                         const Budget& budget, std::uint32_t k_max) {
  GrowthCurve curve{alg.name(), {}};
  std::optional<std::optional<CubeWitness>> witness;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    try {
      curve.points.push_back({n, d_exact(alg, n, budget).size, true});
      continue;
    } catch (const BudgetExceeded& e) {
      std::optional<std::uint64_t> bound = e.best_upper_bound();
      try {
        if (!witness) witness = cube_witness(alg, k_max, budget);
        if (*witness) {
          const auto cert =
              build_dichotomy_generating_set(alg, n, **witness, {}, budget);
          bound = std::min(bound.value_or(UINT64_MAX), cert.g.size());
        }
      } catch (const BudgetExceeded&) {
      }
      if (!bound) break;
      curve.points.push_back({n, *bound, false});
    }
  }
  return curve;
}

Classification classify_growth(const FiniteAlgebra& alg, std::uint32_t k_max,
                               const Budget& budget) {
  Classification out;
  out.witness = cube_witness(alg, k_max, budget);
  if (!out.witness) return out;
  const Commutator comm = commutator_11(alg, true, budget);
  out.perfect = comm.value.is_full();
  out.modularity_verified = comm.modularity_verified;
  out.kind = out.perfect ? GrowthClass::kLogarithmic : GrowthClass::kLinear;
  return out;
}

std::string to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::kLogarithmic:
      return "Logarithmic";
    case GrowthClass::kLinear:
      return "Linear";
    case GrowthClass::kNoCubeWitness:
      break;
  }
  return "NoCubeWitness";
}

namespace {

LinearFit least_squares(const std::vector<double>& x,
                        const std::vector<double>& y) {
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double rss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    rss += r * r;
  }
  fit.residual = std::sqrt(rss);
  return fit;
}

}  // namespace

FitReport fit_report(const GrowthCurve& curve) {
  FitReport report;
  std::vector<double> logs, ns, ds;
  for (const auto& p : curve.points) {
    logs.push_back(std::log(static_cast<double>(p.n)));
    ns.push_back(p.n);
    ds.push_back(static_cast<double>(p.d));
  }
  if (ds.empty()) {
    report.degenerate = true;
    report.better = "none";
    return report;
  }
  report.logarithmic = least_squares(logs, ds);
  report.linear = least_squares(ns, ds);
  const bool constant =
      std::all_of(ds.begin(), ds.end(), [&](double d) { return d == ds[0]; });
  report.degenerate = constant || ds.size() < 2;
  if (report.degenerate) {
    report.better = "none";
  } else if (report.logarithmic.residual < report.linear.residual) {
    report.better = "logarithmic";
  } else {
    report.better = "linear";
  }
  return report;
}

}  // namespace wiegold
