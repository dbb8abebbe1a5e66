#include "wiegold/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "wiegold/errors.hpp"

namespace wiegold {

std::optional<std::uint64_t> checked_pow(std::uint64_t base,
                                         std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// OperationTable

OperationTable::OperationTable(std::string symbol, std::uint32_t arity,
                               std::vector<Element> table)
    : symbol_(std::move(symbol)), arity_(arity), table_(std::move(table)) {
  if (symbol_.empty()) throw ContractError("operation symbol is empty");
}

OperationTable OperationTable::from_function(
    std::string symbol, std::uint32_t arity, std::uint32_t size,
    const std::function<Element(std::span<const Element>)>& f) {
  auto rows = checked_pow(size, arity);
  if (!rows || *rows > (std::uint64_t{1} << 28)) {
    throw ContractError("operation table too large for '" + symbol + "'");
  }
  std::vector<Element> table(*rows);
  std::vector<Element> args(arity, 0);
  for (std::uint64_t r = 0; r < *rows; ++r) {
    std::uint64_t rest = r;
    for (std::uint32_t j = arity; j-- > 0;) {
      args[j] = static_cast<Element>(rest % size);
      rest /= size;
    }
    table[r] = f(args);
  }
  return OperationTable(std::move(symbol), arity, std::move(table));
}

// ---------------------------------------------------------------------------
// FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(std::string name, std::uint32_t size,
                             std::vector<OperationTable> operations,
                             std::vector<std::string> labels)
    : name_(std::move(name)),
      size_(size),
      operations_(std::move(operations)),
      labels_(std::move(labels)) {
  if (size_ < 1) throw ContractError("algebra size must be at least 1");
  if (size_ > kMaxUniverse) {
    throw ContractError("algebra size " + std::to_string(size_) +
                        " exceeds the supported maximum of " +
                        std::to_string(kMaxUniverse));
  }
  if (!labels_.empty() && labels_.size() != size_) {
    throw ContractError("label list has " + std::to_string(labels_.size()) +
                        " entries, expected " + std::to_string(size_));
  }
  for (const auto& op : operations_) {
    auto rows = checked_pow(size_, op.arity());
    if (!rows || op.table().size() != *rows) {
      throw ContractError("operation '" + op.symbol() + "' has table length " +
                          std::to_string(op.table().size()) + ", expected " +
                          (rows ? std::to_string(*rows) : "overflow"));
    }
    for (Element e : op.table()) {
      if (e >= size_) {
        throw ContractError("operation '" + op.symbol() + "' has entry " +
                            std::to_string(e) + " outside [0, " +
                            std::to_string(size_) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < operations_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (operations_[i].symbol() == operations_[j].symbol()) {
        throw ContractError("duplicate operation symbol '" +
                            operations_[i].symbol() + "'");
      }
    }
  }
}

const OperationTable& FiniteAlgebra::operation(std::size_t index) const {
  if (index >= operations_.size()) {
    throw ContractError("operation index " + std::to_string(index) +
                        " out of range");
  }
  return operations_[index];
}

std::optional<std::size_t> FiniteAlgebra::find_operation(
    std::string_view symbol) const {
  for (std::size_t i = 0; i < operations_.size(); ++i) {
    if (operations_[i].symbol() == symbol) return i;
  }
  return std::nullopt;
}

std::vector<Element> FiniteAlgebra::constants() const {
  std::vector<Element> out;
  for (const auto& op : operations_) {
    if (op.arity() == 0) out.push_back(op.at(0));
  }
  return out;
}

bool FiniteAlgebra::is_idempotent() const {
  for (const auto& op : operations_) {
    if (op.arity() == 0) {
      if (size_ > 1) return false;
      continue;
    }
    for (Element a = 0; a < size_; ++a) {
      std::size_t row = 0;
      for (std::uint32_t j = 0; j < op.arity(); ++j) row = row * size_ + a;
      if (op.at(row) != a) return false;
    }
  }
  return true;
}

std::uint32_t FiniteAlgebra::max_arity() const noexcept {
  std::uint32_t m = 0;
  for (const auto& op : operations_) m = std::max(m, op.arity());
  return m;
}

Element FiniteAlgebra::apply(std::size_t op,
                             std::span<const Element> args) const {
  const auto& table = operation(op);
  if (args.size() != table.arity()) {
    throw ContractError("operation '" + table.symbol() + "' has arity " +
                        std::to_string(table.arity()) + ", got " +
                        std::to_string(args.size()) + " arguments");
  }
  std::size_t row = 0;
  for (Element a : args) {
    if (a >= size_) {
      throw ContractError("element " + std::to_string(a) +
                          " outside universe of size " +
                          std::to_string(size_));
    }
    row = row * size_ + a;
  }
  return table.at(row);
}

// ---------------------------------------------------------------------------
// PowerCodec

PowerCodec::PowerCodec(std::uint32_t size, std::uint32_t width)
    : base_(size), width_(width), place_(width) {
  if (size < 1) throw ContractError("codec base must be positive");
  auto card = checked_pow(size, width);
  if (!card) {
    throw ContractError("A^" + std::to_string(width) +
                        " is too large to encode");
  }
  card_ = *card;
  std::uint64_t p = 1;
  for (std::uint32_t i = width; i-- > 0;) {
    place_[i] = p;
    p *= size;
  }
}

TupleCode PowerCodec::encode(std::span<const Element> tuple) const {
  if (tuple.size() != width_) {
    throw ContractError("tuple width " + std::to_string(tuple.size()) +
                        " does not match " + std::to_string(width_));
  }
  TupleCode code = 0;
  for (Element a : tuple) {
    if (a >= base_) throw ContractError("tuple entry out of range");
    code = code * base_ + a;
  }
  return code;
}

void PowerCodec::decode(TupleCode code, std::span<Element> out) const {
  for (std::uint32_t i = width_; i-- > 0;) {
    out[i] = static_cast<Element>(code % base_);
    code /= base_;
  }
}

std::vector<Element> PowerCodec::decode(TupleCode code) const {
  if (code >= card_) throw ContractError("tuple code out of range");
  std::vector<Element> out(width_);
  decode(code, out);
  return out;
}

Element PowerCodec::coordinate(TupleCode code, std::uint32_t i) const {
  return static_cast<Element>((code / place_[i]) % base_);
}

TupleCode PowerCodec::constant(Element a) const {
  TupleCode code = 0;
  for (std::uint32_t i = 0; i < width_; ++i) code = code * base_ + a;
  return code;
}

TupleCode power_apply(const FiniteAlgebra& alg, const PowerCodec& codec,
                      std::size_t op, std::span<const TupleCode> args) {
  const auto& table = alg.operation(op);
  if (args.size() != table.arity()) {
    throw ContractError("operation '" + table.symbol() + "' has arity " +
                        std::to_string(table.arity()) + ", got " +
                        std::to_string(args.size()) + " arguments");
  }
  if (codec.base() != alg.size()) {
    throw ContractError("codec base does not match algebra size");
  }
  for (TupleCode c : args) {
    if (c >= codec.cardinality()) {
      throw ContractError("argument tuple has the wrong width");
    }
  }
  const std::uint32_t s = alg.size();
  TupleCode result = 0;
  for (std::uint32_t i = 0; i < codec.width(); ++i) {
    std::size_t row = 0;
    for (TupleCode c : args) row = row * s + codec.coordinate(c, i);
    result = result * s + table.at(row);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Partition / Congruence

Partition::Partition(std::uint32_t size) : block_of_(size), block_count_(size) {
  for (std::uint32_t i = 0; i < size; ++i) block_of_[i] = i;
}

Partition::Partition(std::span<const std::uint32_t> labels)
    : block_of_(labels.size()) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], block_count_);
      block_of_[i] = block_count_++;
    } else {
      block_of_[i] = it->second;
    }
  }
}

Partition Partition::full(std::uint32_t size) {
  std::vector<std::uint32_t> zeros(size, 0);
  return Partition(std::span<const std::uint32_t>(zeros));
}

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out(block_count_);
  for (Element a = 0; a < size(); ++a) out[block_of_[a]].push_back(a);
  return out;
}

std::vector<Element> Partition::representatives() const {
  std::vector<Element> reps(block_count_);
  for (Element a = size(); a-- > 0;) reps[block_of_[a]] = a;
  return reps;
}

bool Partition::refines(const Partition& other) const {
  if (other.size() != size()) return false;
  std::vector<std::uint32_t> image(block_count_, UINT32_MAX);
  for (Element a = 0; a < size(); ++a) {
    auto& slot = image[block_of_[a]];
    if (slot == UINT32_MAX) {
      slot = other.block(a);
    } else if (slot != other.block(a)) {
      return false;
    }
  }
  return true;
}

bool is_compatible(const FiniteAlgebra& alg, const Partition& partition) {
  if (partition.size() != alg.size()) return false;
  // Enough to check one argument position at a time against related pairs:
  // compatibility with all basic translations implies compatibility.
  const std::uint32_t s = alg.size();
  for (const auto& op : alg.operations()) {
    const std::uint32_t m = op.arity();
    if (m == 0) continue;
    std::uint64_t rows = *checked_pow(s, m);
    std::vector<std::uint64_t> place(m);
    std::uint64_t p = 1;
    for (std::uint32_t j = m; j-- > 0;) {
      place[j] = p;
      p *= s;
    }
    for (std::uint64_t r = 0; r < rows; ++r) {
      for (std::uint32_t j = 0; j < m; ++j) {
        Element aj = static_cast<Element>((r / place[j]) % s);
        for (Element b = aj + 1; b < s; ++b) {
          if (!partition.related(aj, b)) continue;
          std::uint64_t r2 = r + (b - aj) * place[j];
          if (!partition.related(op.at(r), op.at(r2))) return false;
        }
      }
    }
  }
  return true;
}

Congruence::Congruence(const FiniteAlgebra& alg, Partition partition)
    : partition_(std::move(partition)) {
  if (!is_compatible(alg, partition_)) {
    throw ContractError("partition is not compatible with the operations of " +
                        alg.name());
  }
}

Congruence Congruence::equality(const FiniteAlgebra& alg) {
  return make_congruence_unchecked(Partition(alg.size()));
}

Congruence Congruence::full(const FiniteAlgebra& alg) {
  return make_congruence_unchecked(Partition::full(alg.size()));
}

Congruence make_congruence_unchecked(Partition partition) {
  return Congruence(Congruence::Unchecked{}, std::move(partition));
}

Quotient quotient(const FiniteAlgebra& alg, const Congruence& cong) {
  const Partition& part = cong.partition();
  if (part.size() != alg.size()) {
    throw ContractError("congruence is on a universe of a different size");
  }
  const std::uint32_t q = part.block_count();
  const auto reps = part.representatives();
  std::vector<OperationTable> ops;
  ops.reserve(alg.operation_count());
  for (std::size_t i = 0; i < alg.operation_count(); ++i) {
    const auto& op = alg.operation(i);
    std::vector<Element> rep_args(op.arity());
    ops.push_back(OperationTable::from_function(
        op.symbol(), op.arity(), q, [&](std::span<const Element> args) {
          for (std::size_t j = 0; j < args.size(); ++j) {
            rep_args[j] = reps[args[j]];
          }
          return part.block(alg.apply(i, rep_args));
        }));
  }
  std::vector<std::string> labels;
  if (!alg.labels().empty()) {
    for (const auto& block : part.blocks()) {
      std::string label = "[";
      for (std::size_t j = 0; j < block.size(); ++j) {
        if (j) label += ",";
        label += alg.labels()[block[j]];
      }
      labels.push_back(label + "]");
    }
  }
  std::vector<Element> map(part.block_ids().begin(), part.block_ids().end());
  return Quotient{FiniteAlgebra(alg.name() + "/~", q, std::move(ops),
                                std::move(labels)),
                  std::move(map)};
}

Subalgebra restrict_to(const FiniteAlgebra& alg,
                       std::span<const Element> subset) {
  if (subset.empty()) throw ContractError("empty subuniverse");
  std::vector<Element> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<std::uint32_t> index(alg.size(), UINT32_MAX);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= alg.size()) throw ContractError("element out of range");
    index[members[i]] = static_cast<std::uint32_t>(i);
  }
  const auto t = static_cast<std::uint32_t>(members.size());
  std::vector<OperationTable> ops;
  for (std::size_t i = 0; i < alg.operation_count(); ++i) {
    const auto& op = alg.operation(i);
    std::vector<Element> parent_args(op.arity());
    ops.push_back(OperationTable::from_function(
        op.symbol(), op.arity(), t, [&](std::span<const Element> args) {
          for (std::size_t j = 0; j < args.size(); ++j) {
            parent_args[j] = members[args[j]];
          }
          Element v = alg.apply(i, parent_args);
          if (index[v] == UINT32_MAX) {
            throw ContractError("subset is not closed under '" + op.symbol() +
                                "'");
          }
          return index[v];
        }));
  }
  std::vector<std::string> labels;
  if (!alg.labels().empty()) {
    for (Element e : members) labels.push_back(alg.labels()[e]);
  }
  return Subalgebra{
      FiniteAlgebra(alg.name() + "|sub", t, std::move(ops), std::move(labels)),
      std::move(members)};
}

FiniteAlgebra trivial_like(const FiniteAlgebra& alg, std::string name) {
  std::vector<OperationTable> ops;
  for (const auto& op : alg.operations()) {
    ops.emplace_back(op.symbol(), op.arity(), std::vector<Element>{0});
  }
  return FiniteAlgebra(std::move(name), 1, std::move(ops));
}

// ---------------------------------------------------------------------------
// JSON file format

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const char* field,
                          const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw ParseError(where + ": missing field '" + field + "'");
  }
  return *it;
}

std::uint64_t as_unsigned(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError(where + ": expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

FiniteAlgebra parse_algebra_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("algebra file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("algebra file: expected an object");
  const auto& name_field = require_field(doc, "name", "algebra");
  if (!name_field.is_string()) throw ParseError("algebra.name: expected text");
  const auto size64 = as_unsigned(require_field(doc, "size", "algebra"),
                                  "algebra.size");
  if (size64 < 1 || size64 > kMaxUniverse) {
    throw ParseError("algebra.size: must be in [1, " +
                     std::to_string(kMaxUniverse) + "]");
  }
  const auto size = static_cast<std::uint32_t>(size64);

  std::vector<std::string> labels;
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("algebra.labels: expected an array");
    for (const auto& l : *it) {
      if (!l.is_string()) throw ParseError("algebra.labels: expected text");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != size) {
      throw ParseError("algebra.labels: has " + std::to_string(labels.size()) +
                       " entries, expected " + std::to_string(size));
    }
  }

  const auto& ops_field = require_field(doc, "operations", "algebra");
  if (!ops_field.is_array()) {
    throw ParseError("algebra.operations: expected an array");
  }
  std::vector<OperationTable> ops;
  for (std::size_t i = 0; i < ops_field.size(); ++i) {
    const auto& o = ops_field[i];
    std::string where = "algebra.operations[" + std::to_string(i) + "]";
    if (!o.is_object()) throw ParseError(where + ": expected an object");
    const auto& sym = require_field(o, "symbol", where);
    if (!sym.is_string() || sym.get<std::string>().empty()) {
      throw ParseError(where + ".symbol: expected nonempty text");
    }
    where = "operation '" + sym.get<std::string>() + "'";
    const auto arity = as_unsigned(require_field(o, "arity", where),
                                   where + ".arity");
    const auto& table_field = require_field(o, "table", where);
    if (!table_field.is_array()) {
      throw ParseError(where + ".table: expected an array");
    }
    auto expected = checked_pow(size, arity);
    if (!expected || table_field.size() != *expected) {
      throw ParseError(where + ": table length " +
                       std::to_string(table_field.size()) + ", expected " +
                       (expected ? std::to_string(*expected) : "overflow") +
                       " (size^arity)");
    }
    std::vector<Element> table;
    table.reserve(table_field.size());
    for (std::size_t r = 0; r < table_field.size(); ++r) {
      auto v = as_unsigned(table_field[r],
                           where + ".table[" + std::to_string(r) + "]");
      if (v >= size) {
        throw ParseError(where + ".table[" + std::to_string(r) +
                         "]: entry " + std::to_string(v) +
                         " outside the universe");
      }
      table.push_back(static_cast<Element>(v));
    }
    ops.emplace_back(sym.get<std::string>(), static_cast<std::uint32_t>(arity),
                     std::move(table));
  }
  try {
    return FiniteAlgebra(name_field.get<std::string>(), size, std::move(ops),
                         std::move(labels));
  } catch (const ContractError& e) {
    throw ParseError(std::string("algebra: ") + e.what());
  }
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string to_json(const FiniteAlgebra& alg) {
  json doc;
  doc["name"] = alg.name();
  doc["size"] = alg.size();
  if (!alg.labels().empty()) doc["labels"] = alg.labels();
  doc["operations"] = json::array();
  for (const auto& op : alg.operations()) {
    json o;
    o["symbol"] = op.symbol();
    o["arity"] = op.arity();
    o["table"] = std::vector<Element>(op.table().begin(), op.table().end());
    doc["operations"].push_back(std::move(o));
  }
  return doc.dump(2);
}

}  // namespace wiegold
