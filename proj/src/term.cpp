#include "wiegold/term.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "wiegold/errors.hpp"

namespace wiegold {

Term Term::variable(std::uint32_t index) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kVariable, index, {}, index + 1}));
}

Term Term::constant(Element value) {
  return Term(
      std::make_shared<const Node>(Node{Kind::kConstant, value, {}, 0}));
}

Term Term::operation(std::size_t op, std::vector<Term> children) {
  std::uint32_t bound = 0;
  for (const auto& c : children) bound = std::max(bound, c.variable_bound());
  return Term(std::make_shared<const Node>(
      Node{Kind::kOperation, static_cast<std::uint32_t>(op),
           std::move(children), bound}));
}

void validate_term(const FiniteAlgebra& alg, const Term& term) {
  std::vector<const Term*> stack{&term};
  std::unordered_map<const void*, bool> seen;
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    if (!seen.emplace(t->identity(), true).second) continue;
    switch (t->kind()) {
      case Term::Kind::kVariable:
        break;
      case Term::Kind::kConstant:
        if (t->index() >= alg.size()) {
          throw ContractError("constant #" + std::to_string(t->index()) +
                              " outside the universe");
        }
        break;
      case Term::Kind::kOperation: {
        const auto& op = alg.operation(t->index());
        if (op.arity() != t->children().size()) {
          throw ContractError("'" + op.symbol() + "' expects " +
                              std::to_string(op.arity()) + " arguments, got " +
                              std::to_string(t->children().size()));
        }
        for (const auto& c : t->children()) stack.push_back(&c);
        break;
      }
    }
  }
}

std::vector<Element> eval_term_batch(
    const FiniteAlgebra& alg, const Term& term,
    std::span<const std::vector<Element>> columns) {
  validate_term(alg, term);
  if (term.variable_bound() > columns.size()) {
    throw ContractError("unbound variable x" +
                        std::to_string(term.variable_bound()));
  }
  const std::size_t batch = columns.empty() ? 1 : columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != batch) throw ContractError("ragged assignment batch");
    for (Element e : c) {
      if (e >= alg.size()) throw ContractError("assignment out of range");
    }
  }
  // Post-order over the shared DAG, each node evaluated once.
  std::unordered_map<const void*, std::vector<Element>> values;
  std::vector<std::pair<const Term*, bool>> stack{{&term, false}};
  std::vector<Element> args;
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (values.contains(t->identity())) continue;
    if (t->kind() == Term::Kind::kOperation && !expanded) {
      stack.emplace_back(t, true);
      for (const auto& c : t->children()) {
        if (!values.contains(c.identity())) stack.emplace_back(&c, false);
      }
      continue;
    }
    std::vector<Element> out(batch);
    switch (t->kind()) {
      case Term::Kind::kVariable:
        out = columns[t->index()];
        break;
      case Term::Kind::kConstant:
        std::fill(out.begin(), out.end(), t->index());
        break;
      case Term::Kind::kOperation: {
        const auto kids = t->children();
        args.resize(kids.size());
        std::vector<const std::vector<Element>*> inputs;
        for (const auto& c : kids) inputs.push_back(&values.at(c.identity()));
        for (std::size_t b = 0; b < batch; ++b) {
          for (std::size_t j = 0; j < kids.size(); ++j) {
            args[j] = (*inputs[j])[b];
          }
          out[b] = alg.apply(t->index(), args);
        }
        break;
      }
    }
    values.emplace(t->identity(), std::move(out));
  }
  return values.at(term.identity());
}

Element eval_term(const FiniteAlgebra& alg, const Term& term,
                  std::span<const Element> assignment) {
  std::vector<std::vector<Element>> columns;
  columns.reserve(assignment.size());
  for (Element a : assignment) columns.push_back({a});
  return eval_term_batch(alg, term, columns).front();
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  [[nodiscard]] bool at_end() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  std::string_view atom() {
    skip_space();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) fail("expected a symbol");
    return text.substr(start, pos - start);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("term, offset " + std::to_string(pos) + ": " + msg);
  }
};

std::optional<std::uint32_t> parse_index(std::string_view digits) {
  if (digits.empty() || digits.size() > 9) return std::nullopt;
  std::uint32_t v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::uint32_t>(c - '0');
  }
  return v;
}

Term parse_leaf(const FiniteAlgebra& alg, Lexer& lex, std::string_view tok) {
  if (tok.size() > 1 && tok[0] == 'x') {
    if (auto v = parse_index(tok.substr(1)); v && *v >= 1) {
      return Term::variable(*v - 1);
    }
  }
  if (tok.size() > 1 && tok[0] == '#') {
    auto v = parse_index(tok.substr(1));
    if (!v || *v >= alg.size()) lex.fail("bad constant '" + std::string(tok) + "'");
    return Term::constant(*v);
  }
  auto op = alg.find_operation(tok);
  if (!op) lex.fail("unknown symbol '" + std::string(tok) + "'");
  if (alg.operation(*op).arity() != 0) {
    lex.fail("'" + std::string(tok) + "' needs arguments");
  }
  return Term::operation(*op, {});
}

Term parse_node(const FiniteAlgebra& alg, Lexer& lex) {
  if (lex.at_end()) lex.fail("unexpected end of input");
  if (lex.peek() == ')') lex.fail("unexpected ')'");
  if (lex.peek() != '(') return parse_leaf(alg, lex, lex.atom());
  ++lex.pos;
  const std::string_view sym = lex.atom();
  auto op = alg.find_operation(sym);
  if (!op) lex.fail("unknown operation '" + std::string(sym) + "'");
  std::vector<Term> children;
  while (lex.peek() != ')') {
    if (lex.at_end()) lex.fail("missing ')'");
    children.push_back(parse_node(alg, lex));
  }
  ++lex.pos;
  const auto arity = alg.operation(*op).arity();
  if (children.size() != arity) {
    lex.fail("'" + std::string(sym) + "' expects " + std::to_string(arity) +
             " arguments, got " + std::to_string(children.size()));
  }
  return Term::operation(*op, std::move(children));
}

void print(const FiniteAlgebra& alg, const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
      out += "x" + std::to_string(t.index() + 1);
      return;
    case Term::Kind::kConstant:
      out += "#" + std::to_string(t.index());
      return;
    case Term::Kind::kOperation:
      if (t.children().empty()) {
        out += alg.operation(t.index()).symbol();
        return;
      }
      out += "(" + alg.operation(t.index()).symbol();
      for (const auto& c : t.children()) {
        out += ' ';
        print(alg, c, out);
      }
      out += ')';
      return;
  }
}

}  // namespace

Term parse_term(const FiniteAlgebra& alg, std::string_view text) {
  Lexer lex{text};
  Term t = parse_node(alg, lex);
  if (!lex.at_end()) lex.fail("trailing input");
  return t;
}

std::string to_string(const FiniteAlgebra& alg, const Term& term) {
  std::string out;
  print(alg, term, out);
  return out;
}

}  // namespace wiegold
