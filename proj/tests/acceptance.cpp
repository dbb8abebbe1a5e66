// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
// fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wiegold/closure.hpp"
#include "wiegold/congruence.hpp"
#include "wiegold/covering.hpp"
#include "wiegold/cube_terms.hpp"
#include "wiegold/growth.hpp"
#include "wiegold/relations.hpp"

using namespace wiegold;

namespace {

FiniteAlgebra fixture(const std::string& name) {
  return load_algebra_file(std::string(WIEGOLD_FIXTURES) + "/algebras/" +
                           name + ".json");
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (out.pass && secs > limit_seconds) {
    out.pass = false;
    out.detail = "took " + std::to_string(secs) + " s, limit " +
                 std::to_string(limit_seconds) + " s";
  }
  if (!out.pass) ++failures;
  std::printf("%s %d %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", id,
              name.c_str(), secs, out.detail.empty() ? "" : ": ",
              out.detail.c_str());
  std::fflush(stdout);
}

std::string run(const std::string& args, int& status) {
  const std::string cmd = std::string(WIEGOLD_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main() {
  criterion(1, "linear growth of Z2: d(n) = n for n = 1..5 (GF(2) rank)", 60,
            [] {
              Outcome o;
              const auto z2 = fixture("z2");
              for (std::uint32_t n = 1; n <= 5; ++n) {
                const auto m = d_exact(z2, n);
                o.require(m.size == n && oracle::gf2_rank(m.witness) == n,
                          "n = " + std::to_string(n) + ": d = " +
                              std::to_string(m.size));
              }
              return o;
            });

  criterion(2, "logarithmic growth of lattice2 for n = 1..8", 600, [] {
    Outcome o;
    const auto lat = fixture("lattice2");
    const GrowthCurve curve = growth_curve(lat, 8);
    o.require(curve.points.size() == 8, "curve incomplete");
    std::vector<std::uint64_t> d;
    for (const auto& p : curve.points) {
      o.require(p.proved, "point " + std::to_string(p.n) + " not exact");
      o.require(p.d == oracle::lattice_growth(p.n),
                "d(" + std::to_string(p.n) + ") = " + std::to_string(p.d) +
                    " differs from the antichain oracle");
      d.push_back(p.d);
    }
    for (std::size_t i = 1; i < d.size(); ++i)
      o.require(d[i - 1] <= d[i], "not nondecreasing");
    std::uint64_t c = 0;
    for (std::size_t n = 1; 2 * n <= d.size(); ++n)
      c = std::max(c, d[2 * n - 1] - std::min(d[2 * n - 1], d[n - 1]));
    o.require(c <= 2, "d(2n) - d(n) reaches " + std::to_string(c));
    const auto w = cube_witness(lat, 3);
    o.require(w.has_value(), "no cube witness");
    if (w) {
      const auto cert = build_dichotomy_generating_set(lat, 8, *w);
      o.require(cert.g_eta.empty(), "G_eta not empty");
      o.require(generates(lat, 8, cert.g), "certificate does not generate");
    }
    return o;
  });

  criterion(3, "row bound, expectation, random and greedy matrices on the grid",
            300, [] {
              Outcome o;
              for (std::uint32_t b : {2U, 3U})
                for (std::uint32_t k : {2U, 3U})
                  for (std::uint32_t n = k; n <= 10; ++n) {
                    const std::string at = "(b, k, n) = (" + std::to_string(b) +
                                           ", " + std::to_string(k) + ", " +
                                           std::to_string(n) + ")";
                    const std::uint64_t g = row_bound(b, k, n);
                    o.require(g == oracle::row_bound_float(b, k, n) &&
                                  g == oracle::row_bound_exact(b, k, n),
                              "row bound mismatch at " + at);
                    const Rational e = expected_bad_minors(b, k, n, g);
                    o.require(e <= 1, "expectation above 1 at " + at);
                    if (e < 1) {
                      const auto r = random_construct(b, k, n, g, 0, 25);
                      o.require(verify_k_surjective(r.matrix, k).surjective,
                                "random matrix not surjective at " + at);
                    }
                    const AlphabetMatrix m = greedy_construct(b, k, n, g);
                    std::vector<std::uint32_t> entries;
                    for (std::uint64_t i = 0; i < m.rows(); ++i)
                      for (auto v : m.row(i)) entries.push_back(v);
                    o.require(verify_k_surjective(m, k).surjective &&
                                  oracle::k_surjective(m.rows(), m.cols(), b, k,
                                                       entries),
                              "greedy matrix not surjective at " + at);
                  }
              return o;
            });

  criterion(4, "row_bound(2,2,2) = 8, expected bad minors 6561/16384 < 1", 10,
            [] {
              Outcome o;
              o.require(row_bound(2, 2, 2) == 8, "row bound");
              const Rational e = expected_bad_minors(2, 2, 2, 8);
              o.require(e == Rational(4 * 6561, 65536), "expectation value");
              o.require(e == Rational(6561, 16384) && e < 1, "expectation < 1");
              return o;
            });

  criterion(5, "maximal subuniverses induced by projection or abelianization",
            120, [] {
              Outcome o;
              struct Case {
                const char* name;
                std::uint32_t n, k;
              };
              for (const Case& c : {Case{"z2", 2, 2}, Case{"z2", 3, 2},
                                    Case{"lattice2", 2, 3},
                                    Case{"lattice2", 3, 3}}) {
                const auto alg = fixture(c.name);
                const bool has = cube_witness(alg, c.k).has_value();
                const auto rep = verify_theorem_induced(alg, c.n, c.k, has);
                o.require(has && rep.pass() && !rep.maximal.empty(),
                          std::string(c.name) + " n = " + std::to_string(c.n));
              }
              return o;
            });

  criterion(6, "commutator: group cosets on Z2, Z4, S3; full on lattice2", 60,
            [] {
              Outcome o;
              for (const char* name : {"z2", "z4", "s3"}) {
                const auto g = fixture(name);
                o.require(commutator_11(g, true).value.partition() ==
                              Partition(oracle::commutator_cosets(g)),
                          name);
              }
              o.require(commutator_11(fixture("lattice2"), true).value.is_full(),
                        "lattice2");
              return o;
            });

  criterion(7, "cube-term search on Z2, Z4, lattice2 and the semilattice", 120,
            [] {
              Outcome o;
              for (const char* name : {"z2", "z4"}) {
                const auto alg = fixture(name);
                const auto t = find_frame_witness(alg, maltsev_frame());
                o.require(t && satisfies_frame(alg, *t, maltsev_frame()),
                          std::string("Maltsev witness for ") + name);
              }
              const auto lat = fixture("lattice2");
              const auto maj = find_frame_witness(lat, majority_frame());
              o.require(maj && satisfies_frame(lat, *maj, majority_frame()),
                        "majority witness for lattice2");
              o.require(!find_frame_witness(lat, maltsev_frame()),
                        "lattice2 has a Maltsev witness");
              const auto semi = fixture("semilattice2");
              for (const auto& f : default_catalog(3, true))
                o.require(!find_frame_witness(semi, f),
                          "semilattice has a " + f.name() + " witness");
              return o;
            });

  criterion(8, "parallelogram property on Z2^3; lattice order fails", 60, [] {
    Outcome o;
    const auto z2 = fixture("z2");
    const auto subs = all_subuniverses(z2, 3);
    o.require(subs.size() == 16, "expected 16 subgroups of Z2^3");
    for (const auto& r : subs)
      o.require(has_parallelogram(r), "a subgroup of Z2^3 fails");
    const auto lat = fixture("lattice2");
    const PowerCodec c(2, 2);
    const std::vector<TupleCode> le{c.encode(std::vector<Element>{0, 0}),
                                    c.encode(std::vector<Element>{0, 1}),
                                    c.encode(std::vector<Element>{1, 1})};
    const Relation order = close(lat, 2, le);
    o.require(order.cardinality() == 3, "order relation");
    const auto w = parallelogram_violation(order);
    o.require(w.has_value(), "no violation found");
    if (w) {
      o.require(w->au == le[0] && w->av == le[1] && w->bv == le[2] &&
                    w->bu == c.encode(std::vector<Element>{1, 0}),
                "unexpected witness");
    }
    return o;
  });

  criterion(9, "CLI output is byte-identical across repeated runs", 300, [] {
    Outcome o;
    const std::string a = std::string(WIEGOLD_FIXTURES) + "/algebras/";
    std::vector<std::string> commands;
    for (const char* name : {"z2", "z4", "s3", "lattice2", "semilattice2",
                             "quasigroup3", "trivial"}) {
      const std::string alg = " --algebra " + a + name + ".json";
      commands.push_back("info" + alg);
      commands.push_back("info --format json" + alg);
      commands.push_back("classify" + alg);
      commands.push_back("classify --format json" + alg);
    }
    const std::vector<std::string> more{
        "growth --n-max 4 --algebra " + a + "z2.json",
        "growth --n-max 6 --format json --algebra " + a + "lattice2.json",
        "certify --n 8 --algebra " + a + "lattice2.json",
        "certify --n 6 --method random --seed 11 --format json -v --algebra " +
            a + "z2.json",
        "certify --n 3 --algebra " + a + "s3.json",
        "covering --b 2 --k 2 --n 8",
        "covering --b 3 --k 3 --n 10 --method random --seed 0",
        "covering --b 2 --k 3 --n 9 --method random --seed 42 --format json",
        "check-term --term '(+ x1 (+ x2 x3))' --frame maltsev --algebra " + a +
            "z2.json",
        "check-term --term x1 --frame majority --algebra " + a +
            "lattice2.json",
        "maximal --n 3 --algebra " + a + "z2.json",
        "maximal --n 3 -v --format json --algebra " + a + "lattice2.json",
        "verify-dichotomy --n 3 --algebra " + a + "z2.json",
        "verify-dichotomy --n 3 --format json --algebra " + a +
            "lattice2.json",
    };
    commands.insert(commands.end(), more.begin(), more.end());
    for (const auto& cmd : commands) {
      int s1 = 0, s2 = 0;
      const std::string first = run(cmd, s1);
      const std::string second = run(cmd, s2);
      o.require(!first.empty(), "no output: " + cmd);
      o.require(first == second && s1 == s2, "output differs: " + cmd);
    }
    return o;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
