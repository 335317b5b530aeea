#ifndef BIVALENCE_FORMULA_HPP
#define BIVALENCE_FORMULA_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bivalence {

enum class Connective { Atom, Not, And, Or, Xor };

std::string_view to_string(Connective c) noexcept;

/// Immutable propositional formula over named atoms. Copies share subtrees.
class Formula {
public:
  static Formula atom(std::string name);
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula exclusive(Formula left, Formula right);

  Connective kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return kind() == Connective::Atom; }
  bool is_binary() const noexcept { return kind() != Connective::Atom && kind() != Connective::Not; }

  /// Valid only for atoms.
  const std::string& name() const;
  /// Sole operand of `Not`, left operand of binary connectives.
  const Formula& left() const;
  const Formula& right() const;

  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node {
    Connective kind;
    std::string name;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Connective c, Formula left, Formula right);

  std::shared_ptr<const Node> node_;
};

/// Grammar: atoms `[A-Za-z][A-Za-z0-9_]*`; `!` binds tighter than `&`, then
/// `^`, then `|`; binary operators associate to the left. Throws `SyntaxError`.
Formula parse(std::string_view text);

/// Replaces every `a ^ b` by `(a | b) & !(a & b)`, innermost first.
Formula desugar_xor(const Formula& f);

bool contains_xor(const Formula& f);

/// Distinct atom names in order of first appearance.
std::vector<std::string> atoms(const Formula& f);

/// Minimal-parenthesis text; `parse(render(f)) == f`.
std::string render(const Formula& f);

/// Indented one-node-per-line dump used by the CLI.
std::string render_tree(const Formula& f);

/// The exclusive disjunction of two atoms, written with `^`.
Formula exactly_one(const std::string& x1, const std::string& x2);

} // namespace bivalence

#endif // BIVALENCE_FORMULA_HPP
