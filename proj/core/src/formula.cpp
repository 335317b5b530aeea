#include "bivalence/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bivalence/error.hpp"

namespace bivalence {

std::string_view to_string(Connective c) noexcept {
  switch (c) {
  case Connective::Atom: return "Atom";
  case Connective::Not: return "Not";
  case Connective::And: return "And";
  case Connective::Or: return "Or";
  case Connective::Xor: return "Xor";
  }
  return "?";
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw Error(Errc::MalformedInput, "atom name must be nonempty");
  return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(name), {}}));
}

Formula Formula::negation(Formula child) {
  return Formula(std::make_shared<const Node>(Node{Connective::Not, {}, {std::move(child)}}));
}

Formula Formula::binary(Connective c, Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(Node{c, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::conjunction(Formula l, Formula r) { return binary(Connective::And, std::move(l), std::move(r)); }
Formula Formula::disjunction(Formula l, Formula r) { return binary(Connective::Or, std::move(l), std::move(r)); }
Formula Formula::exclusive(Formula l, Formula r) { return binary(Connective::Xor, std::move(l), std::move(r)); }

const std::string& Formula::name() const {
  if (!is_atom()) throw Error(Errc::MalformedInput, "name() on a non-atom formula");
  return node_->name;
}

const Formula& Formula::left() const {
  if (is_atom()) throw Error(Errc::MalformedInput, "atoms have no operands");
  return node_->children.front();
}

const Formula& Formula::right() const {
  if (!is_binary()) throw Error(Errc::MalformedInput, "right() on a non-binary formula");
  return node_->children.back();
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_atom()) return a.node_->name == b.node_->name;
  return a.node_->children == b.node_->children;
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    Formula f = parse_or();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula parse_or() {
    Formula f = parse_xor();
    while (accept('|')) f = Formula::disjunction(f, parse_xor());
    return f;
  }

  Formula parse_xor() {
    Formula f = parse_and();
    while (accept('^')) f = Formula::exclusive(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept('&')) f = Formula::conjunction(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept('!')) return Formula::negation(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const std::size_t start = pos_;
    if (text_[pos_] == '(') {
      ++pos_;
      Formula f = parse_or();
      if (!accept(')')) {
        skip_space();
        throw SyntaxError(pos_, "expected ')' to close '(' at position " + std::to_string(start));
      }
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Formula::atom(std::string(text_.substr(start, pos_ - start)));
    }
    throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(Connective c) {
  switch (c) {
  case Connective::Or: return 1;
  case Connective::Xor: return 2;
  case Connective::And: return 3;
  case Connective::Not: return 4;
  case Connective::Atom: return 5;
  }
  return 0;
}

char symbol(Connective c) {
  switch (c) {
  case Connective::And: return '&';
  case Connective::Or: return '|';
  case Connective::Xor: return '^';
  case Connective::Not: return '!';
  default: return '?';
  }
}

void render_into(const Formula& f, std::string& out) {
  auto child = [&out](const Formula& c, bool wrap) {
    if (wrap) out.push_back('(');
    render_into(c, out);
    if (wrap) out.push_back(')');
  };
  switch (f.kind()) {
  case Connective::Atom:
    out += f.name();
    return;
  case Connective::Not:
    out.push_back('!');
    child(f.left(), f.left().is_binary());
    return;
  default: {
    const int p = precedence(f.kind());
    child(f.left(), precedence(f.left().kind()) < p);
    out += ' ';
    out.push_back(symbol(f.kind()));
    out += ' ';
    child(f.right(), precedence(f.right().kind()) <= p);
  }
  }
}

void tree_into(const Formula& f, int indent, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(indent) * 2, ' ') << to_string(f.kind());
  if (f.is_atom()) {
    os << ' ' << f.name() << '\n';
    return;
  }
  os << '\n';
  tree_into(f.left(), indent + 1, os);
  if (f.is_binary()) tree_into(f.right(), indent + 1, os);
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.is_atom()) {
    if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
    return;
  }
  collect_atoms(f.left(), out);
  if (f.is_binary()) collect_atoms(f.right(), out);
}

} // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

Formula desugar_xor(const Formula& f) {
  switch (f.kind()) {
  case Connective::Atom: return f;
  case Connective::Not: return Formula::negation(desugar_xor(f.left()));
  case Connective::And: return Formula::conjunction(desugar_xor(f.left()), desugar_xor(f.right()));
  case Connective::Or: return Formula::disjunction(desugar_xor(f.left()), desugar_xor(f.right()));
  case Connective::Xor: {
    Formula a = desugar_xor(f.left());
    Formula b = desugar_xor(f.right());
    return Formula::conjunction(Formula::disjunction(a, b), Formula::negation(Formula::conjunction(a, b)));
  }
  }
  return f;
}

bool contains_xor(const Formula& f) {
  if (f.kind() == Connective::Xor) return true;
  if (f.is_atom()) return false;
  return contains_xor(f.left()) || (f.is_binary() && contains_xor(f.right()));
}

std::vector<std::string> atoms(const Formula& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::string render_tree(const Formula& f) {
  std::ostringstream os;
  tree_into(f, 0, os);
  return os.str();
}

Formula exactly_one(const std::string& x1, const std::string& x2) {
  return Formula::exclusive(Formula::atom(x1), Formula::atom(x2));
}

} // namespace bivalence
