#include "wiegold/covering.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "wiegold/closure.hpp"
#include "wiegold/errors.hpp"

namespace wiegold {

namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt binomial(std::uint32_t n, std::uint32_t k) {
  BigInt r = 1;
  for (std::uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt factorial(std::uint32_t k) {
  BigInt r = 1;
  for (std::uint32_t i = 2; i <= k; ++i) r *= i;
  return r;
}

void validate_bkn(std::uint32_t b, std::uint32_t k, std::uint32_t n) {
  if (b < 2) throw ContractError("alphabet size b must be at least 2");
  if (k < 2) throw ContractError("strength k must be at least 2");
  if (n < k) throw ContractError("width n must be at least k");
  if (k > 16 || !checked_pow(b, k) || *checked_pow(b, k) > (1U << 24)) {
    throw ContractError("b^k is too large");
  }
}

// Increasing k-subsets of [0,n) in lexicographic order.
std::vector<std::vector<std::uint32_t>> selections(std::uint32_t n,
                                                   std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> sel(k);
  for (std::uint32_t i = 0; i < k; ++i) sel[i] = i;
  for (;;) {
    out.push_back(sel);
    std::uint32_t i = k;
    while (i-- > 0) {
      if (sel[i] < n - k + i) break;
      if (i == 0) return out;
    }
    if (sel[i] >= n - k + i) return out;
    ++sel[i];
    for (std::uint32_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint32_t uniform_below(std::mt19937_64& rng, std::uint32_t b) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % b + 1) % b;
  for (;;) {
    const std::uint64_t x = rng();
    if (x <= limit) return static_cast<std::uint32_t>(x % b);
  }
}

}  // namespace

void CoveringParams::validate() const {
  validate_bkn(b, k, n);
  if (g < 1) throw ContractError("row count g must be positive");
}

Rational CoveringParams::u() const {
  const BigInt bk = big_pow(b, k);
  return Rational(bk, bk - 1);
}

// ---------------------------------------------------------------------------
// AlphabetMatrix

AlphabetMatrix::AlphabetMatrix(std::uint64_t rows, std::uint32_t cols,
                               std::uint32_t alphabet,
                               std::vector<std::uint32_t> entries)
    : rows_(rows), cols_(cols), alphabet_(alphabet), entries_(std::move(entries)) {
  if (alphabet_ < 1) throw ContractError("alphabet must be nonempty");
  if (entries_.size() != rows_ * cols_) {
    throw ContractError("matrix has " + std::to_string(entries_.size()) +
                        " entries, expected " + std::to_string(rows_ * cols_));
  }
  for (auto e : entries_) {
    if (e >= alphabet_) throw ContractError("matrix entry outside the alphabet");
  }
}

AlphabetMatrix AlphabetMatrix::minor(std::span<const std::uint32_t> columns) const {
  std::vector<std::uint32_t> entries;
  entries.reserve(rows_ * columns.size());
  for (std::uint64_t i = 0; i < rows_; ++i) {
    for (auto c : columns) {
      if (c >= cols_) throw ContractError("minor column out of range");
      entries.push_back(at(i, c));
    }
  }
  return AlphabetMatrix(rows_, static_cast<std::uint32_t>(columns.size()),
                        alphabet_, std::move(entries));
}

AlphabetMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long g = -1, n = -1, b = -1;
  if (!(in >> g >> n >> b) || g < 0 || n < 1 || b < 1) {
    throw ParseError("matrix: header must be `g n b` with n, b >= 1");
  }
  std::vector<std::uint32_t> entries;
  entries.reserve(static_cast<std::size_t>(g * n));
  for (long long i = 0; i < g * n; ++i) {
    long long v = -1;
    if (!(in >> v)) {
      throw ParseError("matrix: expected " + std::to_string(g * n) +
                       " entries, found " + std::to_string(i));
    }
    if (v < 0 || v >= b) {
      throw ParseError("matrix: entry " + std::to_string(v) + " at row " +
                       std::to_string(i / n + 1) + " outside [0, b)");
    }
    entries.push_back(static_cast<std::uint32_t>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("matrix: trailing input '" + extra + "'");
  return AlphabetMatrix(static_cast<std::uint64_t>(g),
                        static_cast<std::uint32_t>(n),
                        static_cast<std::uint32_t>(b), std::move(entries));
}

std::string to_string(const AlphabetMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) +
                    " " + std::to_string(m.alphabet()) + "\n";
  for (std::uint64_t i = 0; i < m.rows(); ++i) {
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

std::uint64_t row_bound(std::uint32_t b, std::uint32_t k, std::uint32_t n) {
  validate_bkn(b, k, n);
  const long double bk = std::pow(static_cast<long double>(b), k);
  const long double log_u = -std::log1p(-1.0L / bk);
  const long double value =
      (k * std::log(static_cast<long double>(n)) + std::log(bk) -
       std::lgamma(static_cast<long double>(k) + 1.0L)) /
      log_u;
  const long double nearest = std::nearbyint(value);
  if (std::fabs(value - nearest) >= std::ldexp(1.0L, -30)) {
    return static_cast<std::uint64_t>(std::ceil(value));
  }
  // Near an integer N: g = N iff u^N >= n^k b^k / k!, i.e.
  // b^(kN) k! >= n^k b^k (b^k - 1)^N.
  const auto big_n = static_cast<std::uint64_t>(std::max(0.0L, nearest));
  const BigInt bkk = big_pow(b, k);
  const BigInt lhs = boost::multiprecision::pow(bkk, static_cast<unsigned>(big_n)) *
                     factorial(k);
  const BigInt rhs = big_pow(n, k) * bkk *
                     boost::multiprecision::pow(BigInt(bkk - 1),
                                                static_cast<unsigned>(big_n));
  return lhs >= rhs ? big_n : big_n + 1;
}

bool is_bad_minor(const AlphabetMatrix& minor) {
  const std::uint32_t b = minor.alphabet();
  const std::uint32_t k = minor.cols();
  auto words = checked_pow(b, k);
  if (!words) throw ContractError("b^k too large");
  if (minor.rows() < *words) return true;
  std::vector<bool> seen(*words, false);
  std::uint64_t covered = 0;
  for (std::uint64_t i = 0; i < minor.rows(); ++i) {
    std::uint64_t code = 0;
    for (std::uint32_t j = 0; j < k; ++j) code = code * b + minor.at(i, j);
    if (!seen[code]) {
      seen[code] = true;
      ++covered;
    }
  }
  return covered != *words;
}

SurjectivityCheck verify_k_surjective(const AlphabetMatrix& m, std::uint32_t k) {
  if (k < 1 || k > m.cols()) throw ContractError("need 1 <= k <= n");
  const std::uint32_t b = m.alphabet();
  auto words = checked_pow(b, k);
  if (!words || *words > (1U << 26)) throw ContractError("b^k too large");
  std::vector<std::uint8_t> seen(*words);
  for (const auto& sel : selections(m.cols(), k)) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t covered = 0;
    for (std::uint64_t i = 0; i < m.rows() && covered < *words; ++i) {
      std::uint64_t code = 0;
      for (auto c : sel) code = code * b + m.at(i, c);
      if (!seen[code]) {
        seen[code] = 1;
        ++covered;
      }
    }
    if (covered != *words) return {false, sel};
  }
  return {true, std::nullopt};
}

Rational expected_bad_minors(std::uint32_t b, std::uint32_t k, std::uint32_t n,
                             std::uint64_t g) {
  validate_bkn(b, k, n);
  const BigInt bk = big_pow(b, k);
  const BigInt num = binomial(n, k) * bk *
                     boost::multiprecision::pow(BigInt(bk - 1),
                                                static_cast<unsigned>(g));
  const BigInt den = boost::multiprecision::pow(bk, static_cast<unsigned>(g));
  return Rational(num, den);
}

// ---------------------------------------------------------------------------
// Constructions

RandomConstruction random_construct(std::uint32_t b, std::uint32_t k,
                                    std::uint32_t n, std::uint64_t g,
                                    std::uint64_t seed,
                                    std::uint32_t max_attempts) {
  CoveringParams{b, k, n, g}.validate();
  std::vector<std::uint32_t> entries(g * n);
  for (std::uint32_t a = 0; a < max_attempts; ++a) {
    std::mt19937_64 rng(splitmix64(splitmix64(seed) + a));
    for (auto& e : entries) e = uniform_below(rng, b);
    AlphabetMatrix m(g, n, b, entries);
    if (verify_k_surjective(m, k).surjective) {
      return {std::move(m), a + 1};
    }
  }
  const Rational bound = expected_bad_minors(b, k, n, g);
  throw BudgetExceeded(
      "no k-surjective matrix in " + std::to_string(max_attempts) +
      " attempts (expected bad minors bound " +
      std::to_string(static_cast<double>(bound)) + ")");
}

AlphabetMatrix greedy_construct(std::uint32_t b, std::uint32_t k,
                                std::uint32_t n, std::uint64_t g) {
  CoveringParams{b, k, n, g}.validate();
  if (expected_bad_minors(b, k, n, g) >= 1) {
    throw ContractError("greedy construction needs expected bad minors < 1 (b=" +
                        std::to_string(b) + ", k=" + std::to_string(k) +
                        ", n=" + std::to_string(n) + ", g=" + std::to_string(g) +
                        ")");
  }
  const auto sels = selections(n, k);
  const std::uint32_t words = *checked_pow(b, k);
  // Scaled by b^k per row, a row factor is an integer:
  //   b^k                 if a fixed entry disagrees with v,
  //   b^k - b^(k - free)  otherwise.
  const BigInt bk = big_pow(b, k);
  std::vector<BigInt> b_pow(k + 1);
  for (std::uint32_t e = 0; e <= k; ++e) b_pow[e] = big_pow(b, e);

  // weight[σ][v] = product of the row factors, initially (b^k - 1)^g.
  const BigInt initial =
      boost::multiprecision::pow(BigInt(bk - 1), static_cast<unsigned>(g));
  std::vector<std::vector<BigInt>> weight(sels.size(),
                                          std::vector<BigInt>(words, initial));
  // Selections containing column j, and j's position within each.
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> containing(n);
  for (std::size_t s = 0; s < sels.size(); ++s) {
    for (std::uint32_t p = 0; p < k; ++p) containing[sels[s][p]].emplace_back(s, p);
  }
  // digits[v][p] = symbol of word v at position p.
  std::vector<std::vector<std::uint32_t>> digits(words, std::vector<std::uint32_t>(k));
  for (std::uint32_t v = 0; v < words; ++v) {
    std::uint32_t rest = v;
    for (std::uint32_t p = k; p-- > 0;) {
      digits[v][p] = rest % b;
      rest /= b;
    }
  }

  std::vector<std::uint32_t> entries(g * n, 0);
  std::vector<BigInt> score(b);
  std::vector<std::vector<BigInt>> quotient_cache;
  for (std::uint64_t i = 0; i < g; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto& cs = containing[j];
      quotient_cache.assign(cs.size(), {});
      for (auto& sc : score) sc = 0;
      for (std::size_t idx = 0; idx < cs.size(); ++idx) {
        const auto [s, p] = cs[idx];
        const auto& sel = sels[s];
        // Columns of σ before j are fixed in row i; positions p.. are free.
        const std::uint32_t free_before = k - p;
        const BigInt old_factor = bk - b_pow[k - free_before];
        auto& q = quotient_cache[idx];
        q.assign(words, 0);
        for (std::uint32_t v = 0; v < words; ++v) {
          bool match = true;
          for (std::uint32_t t = 0; t < p && match; ++t) {
            match = entries[i * n + sel[t]] == digits[v][t];
          }
          if (!match) continue;
          q[v] = weight[s][v] / old_factor;
          // Choosing c = v_p lowers this term by q·b^(k - free + 1).
          score[digits[v][p]] += q[v] * b_pow[k - free_before + 1];
        }
      }
      std::uint32_t best = 0;
      for (std::uint32_t c = 1; c < b; ++c) {
        if (score[c] > score[best]) best = c;
      }
      entries[i * n + j] = best;
      for (std::size_t idx = 0; idx < cs.size(); ++idx) {
        const auto [s, p] = cs[idx];
        const std::uint32_t free_after = k - p - 1;
        const auto& q = quotient_cache[idx];
        for (std::uint32_t v = 0; v < words; ++v) {
          if (q[v] == 0) continue;
          if (digits[v][p] == best) {
            weight[s][v] = q[v] * (bk - b_pow[k - free_after]);
          } else {
            weight[s][v] = q[v] * bk;
          }
        }
      }
    }
  }
  AlphabetMatrix m(g, n, b, std::move(entries));
  if (!verify_k_surjective(m, k).surjective) {
    throw VerificationFailure("greedy construction produced a bad minor");
  }
  return m;
}

// ---------------------------------------------------------------------------
// Lift into A^n

LiftResult lift_to_power(const FiniteAlgebra& alg, std::span<const TupleCode> h,
                         std::uint32_t k, std::uint32_t n,
                         const LiftOptions& options, const Budget& budget) {
  if (k < 1 || n < k) throw ContractError("lift needs n >= k >= 1");
  if (!generates(alg, k, h, budget)) {
    throw ContractError("H does not generate A^" + std::to_string(k));
  }
  const PowerCodec hk(alg.size(), k);
  std::set<Element> used;
  for (TupleCode c : h) {
    for (std::uint32_t i = 0; i < k; ++i) used.insert(hk.coordinate(c, i));
  }
  std::vector<Element> alphabet(used.begin(), used.end());
  const auto b = static_cast<std::uint32_t>(alphabet.size());

  std::optional<AlphabetMatrix> matrix;
  if (b <= 1) {
    // Only possible when A^k is generated by constant tuples alone.
    matrix.emplace(b == 0 ? 0 : 1, n, std::max(b, 1U),
                   std::vector<std::uint32_t>(b == 0 ? 0 : n, 0));
  } else if (n == k || k == 1) {
    // Exhaustive B^k (k = n), or all constant rows (k = 1).
    const std::uint32_t width = n == k ? k : 1;
    const std::uint64_t rows = *checked_pow(b, width);
    std::vector<std::uint32_t> entries;
    for (std::uint64_t r = 0; r < rows; ++r) {
      std::vector<std::uint32_t> row(width);
      std::uint64_t rest = r;
      for (std::uint32_t j = width; j-- > 0;) {
        row[j] = static_cast<std::uint32_t>(rest % b);
        rest /= b;
      }
      for (std::uint32_t j = 0; j < n; ++j) entries.push_back(row[n == k ? j : 0]);
    }
    matrix.emplace(rows, n, b, std::move(entries));
  } else {
    const std::uint64_t g = row_bound(b, k, n);
    if (options.method == CoveringMethod::kGreedy) {
      matrix.emplace(greedy_construct(b, k, n, g));
    } else {
      matrix.emplace(random_construct(b, k, n, g, options.seed,
                                      options.max_attempts)
                         .matrix);
    }
  }

  const PowerCodec codec(alg.size(), n);
  std::vector<TupleCode> gens;
  std::vector<Element> tuple(n);
  for (std::uint64_t i = 0; i < matrix->rows(); ++i) {
    for (std::uint32_t j = 0; j < n; ++j) tuple[j] = alphabet[matrix->at(i, j)];
    gens.push_back(codec.encode(tuple));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  const Subuniverse s = close(alg, n, gens, budget);
  for (const auto& sel : selections(n, k)) {
    std::vector<TupleCode> image;
    for (TupleCode c : s.members()) {
      TupleCode out = 0;
      for (auto col : sel) out = out * alg.size() + codec.coordinate(c, col);
      image.push_back(out);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image.size() != hk.cardinality()) {
      throw VerificationFailure("lifted set does not project onto A^k");
    }
  }
  return LiftResult{std::move(alphabet), std::move(*matrix), std::move(gens)};
}

}  // namespace wiegold
