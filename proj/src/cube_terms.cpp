#include "wiegold/cube_terms.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "closure_engine.hpp"
#include "wiegold/errors.hpp"

namespace wiegold {

CubeFrame::CubeFrame(std::string name,
                     std::vector<std::vector<FrameCell>> rows)
    : name_(std::move(name)), rows_(std::move(rows)) {
  if (rows_.empty()) throw ContractError("frame has no rows");
  const std::size_t m = rows_.front().size();
  if (m == 0) throw ContractError("frame has no columns");
  for (const auto& r : rows_) {
    if (r.size() != m) throw ContractError("frame rows differ in length");
    for (const auto& c : r) {
      if (c.kind == FrameCell::Kind::kVariable && c.value == 0) {
        throw ContractError("frame variables are numbered from y1");
      }
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    const bool has_symbol = std::any_of(rows_.begin(), rows_.end(), [&](const auto& r) {
      return r[j].kind != FrameCell::Kind::kTarget;
    });
    if (!has_symbol) {
      throw ContractError("column " + std::to_string(j + 1) +
                          " contains only the target variable x");
    }
  }
}

std::uint32_t CubeFrame::pointedness() const noexcept {
  std::set<std::uint32_t> constants;
  for (const auto& r : rows_) {
    for (const auto& c : r) {
      if (c.kind == FrameCell::Kind::kConstant) constants.insert(c.value);
    }
  }
  return static_cast<std::uint32_t>(constants.size());
}

std::vector<std::uint32_t> CubeFrame::named_variables() const {
  std::set<std::uint32_t> vars;
  for (const auto& r : rows_) {
    for (const auto& c : r) {
      if (c.kind == FrameCell::Kind::kVariable) vars.insert(c.value);
    }
  }
  return {vars.begin(), vars.end()};
}

// ---------------------------------------------------------------------------
// Built-in frames

namespace {
constexpr FrameCell X = FrameCell{FrameCell::Kind::kTarget, 0};
constexpr FrameCell Y = FrameCell{FrameCell::Kind::kVariable, 1};
}  // namespace

CubeFrame maltsev_frame() {
  return CubeFrame("maltsev", {{X, Y, Y}, {Y, Y, X}});
}

CubeFrame majority_frame() {
  return CubeFrame("majority", {{X, X, Y}, {X, Y, X}, {Y, X, X}});
}

CubeFrame near_unanimity_frame(std::uint32_t k) {
  if (k < 3) throw ContractError("near-unanimity frames need k >= 3");
  std::vector<std::vector<FrameCell>> rows(k, std::vector<FrameCell>(k, X));
  for (std::uint32_t i = 0; i < k; ++i) rows[i][i] = Y;
  if (k == 3) return CubeFrame("majority", {{X, X, Y}, {X, Y, X}, {Y, X, X}});
  return CubeFrame("near-unanimity-" + std::to_string(k), std::move(rows));
}

CubeFrame edge_frame(std::uint32_t k) {
  if (k < 2) throw ContractError("edge frames need k >= 2");
  std::vector<std::vector<FrameCell>> rows(k, std::vector<FrameCell>(k + 1, X));
  rows[0][0] = Y;
  rows[0][1] = Y;
  rows[1][0] = Y;
  rows[1][2] = Y;
  for (std::uint32_t i = 2; i < k; ++i) rows[i][i + 1] = Y;
  return CubeFrame("edge-" + std::to_string(k), std::move(rows));
}

CubeFrame full_cube_frame(std::uint32_t k) {
  if (k < 2 || k > 12) throw ContractError("full cube frames need 2 <= k <= 12");
  const std::uint32_t cols = (1U << k) - 1;
  std::vector<std::vector<FrameCell>> rows(k, std::vector<FrameCell>(cols, X));
  // Column c encodes the pattern c+1; row i reads bit k-1-i.
  for (std::uint32_t c = 0; c < cols; ++c) {
    for (std::uint32_t i = 0; i < k; ++i) {
      if (((c + 1) >> (k - 1 - i)) & 1U) rows[i][c] = Y;
    }
  }
  return CubeFrame("cube-" + std::to_string(k), std::move(rows));
}

// ---------------------------------------------------------------------------
// Text format

CubeFrame parse_frame(std::string_view text, std::string name) {
  std::vector<std::vector<FrameCell>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream cells(line);
    std::string cell;
    std::vector<FrameCell> row;
    while (cells >> cell) {
      if (row.empty() && cell[0] == '%') break;
      const std::string where =
          "frame line " + std::to_string(line_no) + ": cell '" + cell + "'";
      if (cell == "x") {
        row.push_back(X);
      } else if (cell == "y") {
        row.push_back(Y);
      } else if ((cell[0] == 'y' || cell[0] == '#') && cell.size() > 1 &&
                 cell.size() < 10 &&
                 std::all_of(cell.begin() + 1, cell.end(),
                             [](char c) { return c >= '0' && c <= '9'; })) {
        const auto v = static_cast<std::uint32_t>(std::stoul(cell.substr(1)));
        if (cell[0] == 'y') {
          if (v == 0) throw ParseError(where + ": variables start at y1");
          row.push_back(FrameCell::var(v));
        } else {
          row.push_back(FrameCell::constant(v));
        }
      } else {
        throw ParseError(where + ": expected x, y<N> or #<e>");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  try {
    return CubeFrame(std::move(name), std::move(rows));
  } catch (const ContractError& e) {
    throw ParseError(std::string("frame: ") + e.what());
  }
}

CubeFrame load_frame_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open frame file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  if (auto dot = name.find('.'); dot != std::string::npos) name.resize(dot);
  return parse_frame(buf.str(), name);
}

std::string to_string(const CubeFrame& frame) {
  std::string out;
  for (const auto& r : frame.rows()) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out += ' ';
      switch (r[j].kind) {
        case FrameCell::Kind::kTarget:
          out += 'x';
          break;
        case FrameCell::Kind::kVariable:
          out += 'y' + std::to_string(r[j].value);
          break;
        case FrameCell::Kind::kConstant:
          out += '#' + std::to_string(r[j].value);
          break;
      }
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification and search

namespace {

// The indexed power A^D for a frame: coordinate d = row * s^v + assignment,
// where an assignment gives values to (x, y_1', ..., y_v-1') in that order.
struct FrameDomain {
  std::vector<std::uint32_t> named;  // named variable numbers
  std::uint64_t assignments = 0;     // s^v
  std::uint64_t width = 0;           // k * s^v
  std::vector<std::vector<Element>> columns;  // generator per frame column
  std::vector<Element> target;

  FrameDomain(const FiniteAlgebra& alg, const CubeFrame& frame,
              std::uint64_t max_width)
      : named(frame.named_variables()) {
    const std::uint32_t s = alg.size();
    const auto v = static_cast<std::uint32_t>(named.size() + 1);
    auto a = checked_pow(s, v);
    if (!a || *a > max_width || *a * frame.k() > max_width) {
      throw BudgetExceeded("frame '" + frame.name() + "' needs A^D with D = " +
                           std::to_string(frame.k()) + " x " +
                           std::to_string(s) + "^" + std::to_string(v) +
                           " coordinates");
    }
    assignments = *a;
    width = assignments * frame.k();
    for (const auto& r : frame.rows()) {
      for (const auto& c : r) {
        if (c.kind == FrameCell::Kind::kConstant && c.value >= s) {
          throw ContractError("frame constant #" + std::to_string(c.value) +
                              " outside the universe");
        }
      }
    }
    const PowerCodec codec(s, v);
    std::vector<Element> theta(v);
    columns.assign(frame.m(), std::vector<Element>(width));
    target.resize(width);
    for (std::uint32_t i = 0; i < frame.k(); ++i) {
      for (std::uint64_t t = 0; t < assignments; ++t) {
        codec.decode(t, theta);
        const std::uint64_t d = i * assignments + t;
        target[d] = theta[0];
        for (std::uint32_t j = 0; j < frame.m(); ++j) {
          const auto& cell = frame.rows()[i][j];
          switch (cell.kind) {
            case FrameCell::Kind::kTarget:
              columns[j][d] = theta[0];
              break;
            case FrameCell::Kind::kVariable: {
              auto pos = std::lower_bound(named.begin(), named.end(),
                                          cell.value) -
                         named.begin();
              columns[j][d] = theta[1 + pos];
              break;
            }
            case FrameCell::Kind::kConstant:
              columns[j][d] = cell.value;
              break;
          }
        }
      }
    }
  }
};

std::vector<std::uint8_t> as_bytes(const std::vector<Element>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

bool satisfies_frame(const FiniteAlgebra& alg, const Term& term,
                     const CubeFrame& frame) {
  if (term.variable_bound() > frame.m()) {
    throw ContractError("term uses x" + std::to_string(term.variable_bound()) +
                        " but the frame has " + std::to_string(frame.m()) +
                        " columns");
  }
  const std::uint32_t s = alg.size();
  const auto named = frame.named_variables();
  const auto v = static_cast<std::uint32_t>(named.size() + 1);
  const PowerCodec codec(s, v);
  std::vector<Element> theta(v);
  std::vector<Element> args(frame.m());
  // Straight evaluation, one assignment and row at a time.
  for (TupleCode t = 0; t < codec.cardinality(); ++t) {
    codec.decode(t, theta);
    for (const auto& row : frame.rows()) {
      for (std::uint32_t j = 0; j < frame.m(); ++j) {
        const auto& cell = row[j];
        if (cell.kind == FrameCell::Kind::kTarget) {
          args[j] = theta[0];
        } else if (cell.kind == FrameCell::Kind::kConstant) {
          if (cell.value >= s) throw ContractError("frame constant out of range");
          args[j] = cell.value;
        } else {
          auto pos = std::lower_bound(named.begin(), named.end(), cell.value) -
                     named.begin();
          args[j] = theta[1 + pos];
        }
      }
      if (eval_term(alg, term, args) != theta[0]) return false;
    }
  }
  return true;
}

std::optional<Term> find_frame_witness(const FiniteAlgebra& alg,
                                       const CubeFrame& frame,
                                       const Budget& budget) {
  const FrameDomain dom(alg, frame, budget.max_tuples);
  detail::ClosureEngine engine(
      alg, static_cast<std::uint32_t>(dom.width),
      {.max_members = std::min(budget.max_tuples,
                               std::max<std::uint64_t>(
                                   1, budget.max_tuples * 16 / dom.width)),
       .record_provenance = true,
       .target = as_bytes(dom.target)});
  for (const auto& col : dom.columns) engine.add_generator(as_bytes(col));
  if (!engine.run()) return std::nullopt;
  const auto target = *engine.index_of(as_bytes(dom.target));

  // Rebuild the term for the target from provenance. Arguments always have
  // smaller indices, so build the needed members in increasing order.
  std::vector<bool> needed(target + 1, false);
  needed[target] = true;
  for (std::uint32_t i = target + 1; i-- > 0;) {
    if (!needed[i]) continue;
    const auto p = engine.provenance(i);
    if (p.op >= 0) {
      for (std::uint32_t a : p.args) needed[a] = true;
    }
  }
  std::vector<std::optional<Term>> built(target + 1);
  for (std::uint32_t i = 0; i <= target; ++i) {
    if (!needed[i]) continue;
    const auto p = engine.provenance(i);
    if (p.op < 0) {
      // Duplicate generators collapse onto the first column with that value.
      built[i] = Term::variable(p.args[0]);
    } else {
      std::vector<Term> kids;
      for (std::uint32_t a : p.args) kids.push_back(*built[a]);
      built[i] = Term::operation(static_cast<std::size_t>(p.op), std::move(kids));
    }
  }
  Term witness = *built[target];
  if (!satisfies_frame(alg, witness, frame)) {
    throw VerificationFailure("reconstructed term for frame '" + frame.name() +
                              "' fails verification");
  }
  return witness;
}

std::vector<CubeFrame> default_catalog(std::uint32_t k_max, bool extended) {
  std::vector<CubeFrame> out;
  for (std::uint32_t k = 2; k <= k_max; ++k) {
    if (k == 2) {
      out.push_back(maltsev_frame());
    } else {
      out.push_back(near_unanimity_frame(k));
      out.push_back(edge_frame(k));
    }
    if (extended) out.push_back(full_cube_frame(k));
  }
  return out;
}

std::optional<CubeWitness> cube_witness(const FiniteAlgebra& alg,
                                        std::uint32_t k_max,
                                        const Budget& budget) {
  return cube_witness(alg, default_catalog(k_max), budget);
}

std::optional<CubeWitness> cube_witness(const FiniteAlgebra& alg,
                                        const std::vector<CubeFrame>& catalog,
                                        const Budget& budget) {
  for (const auto& frame : catalog) {
    if (frame.pointedness() != 0) continue;
    if (auto t = find_frame_witness(alg, frame, budget)) {
      return CubeWitness{*t, frame};
    }
  }
  return std::nullopt;
}

}  // namespace wiegold
