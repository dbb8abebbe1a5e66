#include "wiegold/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wiegold/errors.hpp"

namespace wiegold {

namespace {

TupleCode sub_code(const PowerCodec& codec, TupleCode code,
                   const CoordinateSet& coords) {
  TupleCode out = 0;
  for (std::uint32_t c : coords) out = out * codec.base() + codec.coordinate(code, c);
  return out;
}

void check_coordinates(const Relation& r, const CoordinateSet& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] >= r.width() || (i > 0 && u[i] <= u[i - 1])) {
      throw ContractError("coordinate set must be strictly increasing and < n");
    }
  }
}

CoordinateSet all_coordinates(std::uint32_t n) {
  CoordinateSet u(n);
  std::iota(u.begin(), u.end(), 0U);
  return u;
}

// S = {0} ∪ {i >= 1 : bit i-1 of mask}; T the rest (nonempty).
Bipartition split(std::uint32_t n, std::uint64_t mask) {
  Bipartition b;
  b.u.push_back(0);
  for (std::uint32_t i = 1; i < n; ++i) {
    if ((mask >> (i - 1)) & 1U) {
      b.u.push_back(i);
    } else {
      b.v.push_back(i);
    }
  }
  return b;
}

// Reassembles a tuple from its S and T parts.
TupleCode join(const PowerCodec& codec, const Bipartition& b, TupleCode s_code,
               TupleCode t_code) {
  std::vector<Element> tuple(codec.width());
  for (std::size_t i = b.u.size(); i-- > 0;) {
    tuple[b.u[i]] = static_cast<Element>(s_code % codec.base());
    s_code /= codec.base();
  }
  for (std::size_t i = b.v.size(); i-- > 0;) {
    tuple[b.v[i]] = static_cast<Element>(t_code % codec.base());
    t_code /= codec.base();
  }
  return codec.encode(tuple);
}

}  // namespace

Relation project(const Relation& r, const CoordinateSet& u) {
  check_coordinates(r, u);
  std::vector<TupleCode> image;
  image.reserve(r.cardinality());
  for (TupleCode c : r.members()) image.push_back(sub_code(r.codec(), c, u));
  return Relation(r.base(), static_cast<std::uint32_t>(u.size()),
                  std::move(image));
}

bool is_support(const Relation& m, const CoordinateSet& u) {
  return !project(m, u).is_full();
}

bool is_induced_by_projection(const Relation& m, const CoordinateSet& u) {
  const Relation image = project(m, u);
  const std::uint64_t fibre =
      *checked_pow(m.base(), m.width() - static_cast<std::uint32_t>(u.size()));
  return m.cardinality() == image.cardinality() * fibre;
}

bool is_induced_by_map(const Relation& m, const std::vector<Element>& eta,
                       std::uint32_t image_size) {
  if (eta.size() != m.base()) throw ContractError("map has the wrong domain");
  std::vector<std::uint64_t> fibre(image_size, 0);
  for (Element e : eta) {
    if (e >= image_size) throw ContractError("map value out of range");
    ++fibre[e];
  }
  const PowerCodec target(image_size, m.width());
  std::vector<TupleCode> image;
  image.reserve(m.cardinality());
  for (TupleCode c : m.members()) {
    TupleCode out = 0;
    for (std::uint32_t i = 0; i < m.width(); ++i) {
      out = out * image_size + eta[m.codec().coordinate(c, i)];
    }
    image.push_back(out);
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::uint64_t preimage = 0;
  for (TupleCode y : image) {
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < m.width(); ++i) {
      size *= fibre[target.coordinate(y, i)];
    }
    preimage += size;
  }
  return preimage == m.cardinality();
}

CoordinateSet minimal_support(const Relation& m) {
  const std::uint32_t n = m.width();
  CoordinateSet u = all_coordinates(n);
  if (!is_support(m, u)) {
    throw ContractError("relation is all of A^n and has no support");
  }
  // Subsets of a non-support are non-supports, so one pass suffices.
  for (std::uint32_t i = 0; i < n; ++i) {
    CoordinateSet smaller;
    for (std::uint32_t c : u) {
      if (c != i) smaller.push_back(c);
    }
    if (is_support(m, smaller)) u = std::move(smaller);
  }
  if (n <= 6) {
    std::vector<CoordinateSet> minimal;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      CoordinateSet cand;
      for (std::uint32_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) cand.push_back(i);
      }
      if (!is_support(m, cand)) continue;
      bool is_minimal = true;
      for (std::size_t drop = 0; drop < cand.size() && is_minimal; ++drop) {
        CoordinateSet sub = cand;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        if (is_support(m, sub)) is_minimal = false;
      }
      if (is_minimal) minimal.push_back(std::move(cand));
    }
    if (minimal.size() != 1) {
      throw ContractError("relation has " + std::to_string(minimal.size()) +
                          " minimal supports; it is not maximal");
    }
  }
  if (!is_induced_by_projection(m, u)) {
    throw ContractError("M is not M_U x A^(n-U) for its minimal support; it "
                        "is not maximal");
  }
  return u;
}

std::optional<ParallelogramWitness> parallelogram_violation(const Relation& r) {
  const std::uint32_t n = r.width();
  if (n < 2) return std::nullopt;
  const PowerCodec& codec = r.codec();
  const std::uint64_t masks = (std::uint64_t{1} << (n - 1)) - 1;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    const Bipartition b = split(n, mask);
    // a -> sorted neighbours u with au ∈ R; v -> sorted a's with av ∈ R.
    std::map<TupleCode, std::vector<TupleCode>> right;
    std::map<TupleCode, std::vector<TupleCode>> left;
    for (TupleCode c : r.members()) {
      const TupleCode a = sub_code(codec, c, b.u);
      const TupleCode t = sub_code(codec, c, b.v);
      right[a].push_back(t);
      left[t].push_back(a);
    }
    for (auto& [_, v] : right) std::sort(v.begin(), v.end());
    for (auto& [_, v] : left) std::sort(v.begin(), v.end());
    for (const auto& [a, nbrs] : right) {
      for (TupleCode u : nbrs) {
        for (TupleCode v : nbrs) {
          if (u == v) continue;
          for (TupleCode bb : left[v]) {
            const auto& bn = right[bb];
            if (!std::binary_search(bn.begin(), bn.end(), u)) {
              return ParallelogramWitness{b.u, join(codec, b, a, u),
                                          join(codec, b, a, v),
                                          join(codec, b, bb, v),
                                          join(codec, b, bb, u)};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool has_parallelogram(const Relation& r) {
  return !parallelogram_violation(r).has_value();
}

std::optional<Bipartition> is_directly_decomposable(const Relation& r) {
  const std::uint32_t n = r.width();
  if (n < 2) return std::nullopt;
  const std::uint64_t masks = (std::uint64_t{1} << (n - 1)) - 1;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    Bipartition b = split(n, mask);
    if (project(r, b.u).cardinality() * project(r, b.v).cardinality() ==
        r.cardinality()) {
      return b;
    }
  }
  return std::nullopt;
}

bool is_critical_maximal(const Relation& m) {
  const bool indecomposable = !is_directly_decomposable(m).has_value();
  const bool full_support = minimal_support(m).size() == m.width();
  if (indecomposable != full_support) {
    throw VerificationFailure(
        "direct indecomposability disagrees with the minimal support");
  }
  return indecomposable;
}

CoordinateKernels coordinate_kernels(const FiniteAlgebra& alg,
                                     const Relation& r) {
  if (r.base() != alg.size()) throw ContractError("relation is over another algebra");
  if (r.empty()) throw ContractError("empty relation");
  const std::uint32_t n = r.width();
  const std::uint32_t s = alg.size();
  CoordinateKernels out;
  for (std::uint32_t i = 0; i < n; ++i) {
    CoordinateSet rest;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (c != i) rest.push_back(c);
    }
    std::map<TupleCode, std::vector<Element>> by_complement;
    std::vector<Element> values;
    for (TupleCode c : r.members()) {
      const Element a = r.codec().coordinate(c, i);
      by_complement[sub_code(r.codec(), c, rest)].push_back(a);
      values.push_back(a);
    }
    Subalgebra factor = restrict_to(alg, values);
    const auto t = factor.algebra.size();
    std::vector<std::uint32_t> local(s, UINT32_MAX);
    for (std::uint32_t j = 0; j < t; ++j) local[factor.embedding[j]] = j;
    std::vector<std::vector<bool>> rel(t, std::vector<bool>(t, false));
    for (const auto& [_, group] : by_complement) {
      for (Element a : group) {
        for (Element b : group) rel[local[a]][local[b]] = true;
      }
    }
    for (std::uint32_t a = 0; a < t; ++a) {
      for (std::uint32_t b = 0; b < t; ++b) {
        if (!rel[a][b]) continue;
        for (std::uint32_t c = 0; c < t; ++c) {
          if (rel[b][c] && !rel[a][c]) {
            throw ContractError("coordinate kernel " + std::to_string(i + 1) +
                                " is not transitive; the relation lacks the "
                                "parallelogram property");
          }
        }
      }
    }
    std::vector<std::uint32_t> labels(t);
    for (std::uint32_t a = 0; a < t; ++a) {
      labels[a] = a;
      for (std::uint32_t b = 0; b < a; ++b) {
        if (rel[a][b]) {
          labels[a] = labels[b];
          break;
        }
      }
    }
    Congruence theta(factor.algebra, Partition(labels));
    out.factors.push_back(std::move(factor));
    out.kernels.push_back(std::move(theta));
  }
  return out;
}

Reduction reduction(const FiniteAlgebra& alg, const Relation& r) {
  Reduction red{coordinate_kernels(alg, r), {}, {}};
  const std::uint32_t n = r.width();
  std::vector<std::vector<std::uint32_t>> block_of(n);
  std::vector<std::vector<std::uint64_t>> block_size(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& factor = red.kernels.factors[i];
    const auto& part = red.kernels.kernels[i].partition();
    red.quotients.push_back(quotient(factor.algebra, red.kernels.kernels[i]).algebra);
    block_of[i].assign(alg.size(), UINT32_MAX);
    block_size[i].assign(part.block_count(), 0);
    for (std::uint32_t j = 0; j < factor.embedding.size(); ++j) {
      block_of[i][factor.embedding[j]] = part.block(j);
      ++block_size[i][part.block(j)];
    }
  }
  for (TupleCode c : r.members()) {
    std::vector<Element> image(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      image[i] = block_of[i][r.codec().coordinate(c, i)];
    }
    red.members.push_back(std::move(image));
  }
  std::sort(red.members.begin(), red.members.end());
  red.members.erase(std::unique(red.members.begin(), red.members.end()),
                    red.members.end());
  std::uint64_t preimage = 0;
  for (const auto& y : red.members) {
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < n; ++i) size *= block_size[i][y[i]];
    preimage += size;
  }
  if (preimage != r.cardinality()) {
    throw VerificationFailure("relation is not induced by its reduction map");
  }
  return red;
}

bool DichotomyReport::pass() const {
  return std::none_of(branches.begin(), branches.end(), [](const auto& b) {
    return b.kind == InducedBranch::Kind::kNeither;
  });
}

DichotomyReport verify_theorem_induced(const FiniteAlgebra& alg,
                                       std::uint32_t n, std::uint32_t cube_k,
                                       bool has_cube_witness,
                                       const Budget& budget) {
  if (n == 0) throw ContractError("n must be positive");
  if (cube_k < 2) throw ContractError("cube terms have k >= 2");
  DichotomyReport report;
  report.n = n;
  report.cube_k = cube_k;
  report.projection_bound = std::max<std::uint32_t>(3, cube_k);
  const auto ab = abelianization(alg, has_cube_witness, budget);
  report.modularity_verified = ab.modularity_verified;
  report.maximal = maximal_subuniverses(alg, n, budget);
  for (const auto& m : report.maximal) {
    InducedBranch branch{InducedBranch::Kind::kNeither, minimal_support(m)};
    if (branch.support.size() < report.projection_bound &&
        is_induced_by_projection(m, branch.support)) {
      branch.kind = InducedBranch::Kind::kProjection;
    } else if (is_induced_by_map(m, ab.eta, ab.algebra.size())) {
      branch.kind = InducedBranch::Kind::kAbelianization;
    }
    report.branches.push_back(std::move(branch));
  }
  return report;
}

}  // namespace wiegold
