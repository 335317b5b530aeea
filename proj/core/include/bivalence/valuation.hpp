#ifndef BIVALENCE_VALUATION_HPP
#define BIVALENCE_VALUATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bivalence/formula.hpp"
#include "bivalence/lattice.hpp"
#include "bivalence/rational.hpp"

namespace bivalence {

/// Exact truth degree in [0, 1], or the absence of a truth value.
class TruthValue {
public:
  /// Throws `Error{Errc::OutOfRange}` outside [0, 1].
  explicit TruthValue(Rational degree);

  static TruthValue undefined() { return TruthValue(); }
  static TruthValue zero() { return TruthValue(Rational(0)); }
  static TruthValue one() { return TruthValue(Rational(1)); }

  bool is_defined() const noexcept { return degree_.has_value(); }
  bool is_true() const { return degree_ && *degree_ == 1; }
  bool is_false() const { return degree_ && *degree_ == 0; }

  /// Throws `Error{Errc::OutOfRange}` when undefined.
  const Rational& degree() const;

  friend bool operator==(const TruthValue&, const TruthValue&) = default;
  /// Undefined sorts after every degree.
  friend bool operator<(const TruthValue& a, const TruthValue& b);

private:
  TruthValue() = default;
  std::optional<Rational> degree_;
};

std::string to_string(const TruthValue& t);
/// `undefined` or any form accepted by `parse_rational`.
TruthValue parse_truth_value(std::string_view text);

TruthValue lukasiewicz_neg(const TruthValue& t);
TruthValue lukasiewicz_or(const TruthValue& s, const TruthValue& t);
TruthValue lukasiewicz_and(const TruthValue& s, const TruthValue& t);

class ValueSystem {
public:
  enum class Kind { Bivalent, Finite, Infinite, Partial };

  static ValueSystem bivalent();
  /// N equally spaced degrees from 0 to 1, N >= 2.
  static ValueSystem finite(unsigned cardinality);
  /// Grid {k/d : 0 <= k <= d} standing in for the unit interval.
  static ValueSystem infinite(unsigned denominator);
  /// Only the bounds are valued; every other element has no truth value.
  static ValueSystem partial();

  Kind kind() const noexcept { return kind_; }
  unsigned parameter() const noexcept { return parameter_; }

  /// Permitted defined degrees, ascending.
  const std::vector<TruthValue>& admissible() const noexcept { return admissible_; }
  /// Candidate atom values: the admissible degrees, plus `undefined` for partial.
  std::vector<TruthValue> atom_values() const;
  bool admits(const TruthValue& t) const;
  /// Values a truth function may give `e`: 0 at bottom, 1 at top, otherwise
  /// the admissible degrees (or only `undefined` for partial).
  std::vector<TruthValue> values_for(const Lattice& lattice, Element e) const;

  std::string describe() const;

  friend bool operator==(const ValueSystem& a, const ValueSystem& b) {
    return a.kind_ == b.kind_ && a.parameter_ == b.parameter_;
  }

private:
  ValueSystem(Kind kind, unsigned parameter, std::vector<TruthValue> admissible)
      : kind_(kind), parameter_(parameter), admissible_(std::move(admissible)) {}

  Kind kind_;
  unsigned parameter_;
  std::vector<TruthValue> admissible_;
};

/// Total map from lattice elements to truth values with v(0_L) = 0 and
/// v(1_L) = 1.
class TruthFunction {
public:
  /// Throws `BoundaryCondition` if the bounds are not valued 0 and 1, and
  /// `OutOfRange` if `values` does not cover the lattice.
  TruthFunction(Lattice lattice, std::vector<TruthValue> values);

  /// Elements missing from `named` get `fallback`.
  static TruthFunction from_named(const Lattice& lattice, const std::map<std::string, TruthValue>& named,
                                  const TruthValue& fallback = TruthValue::undefined());

  const Lattice& lattice() const noexcept { return lattice_; }
  const TruthValue& operator()(Element e) const;
  const std::vector<TruthValue>& values() const noexcept { return values_; }

  bool admissible_under(const ValueSystem& system) const;

  friend bool operator==(const TruthFunction& a, const TruthFunction& b) {
    return a.lattice_ == b.lattice_ && a.values_ == b.values_;
  }

private:
  Lattice lattice_;
  std::vector<TruthValue> values_;
};

/// Association of formula atoms with lattice elements.
class Binding {
public:
  Binding() = default;

  /// Throws `UnknownElement` if a name is not in the lattice.
  static Binding from_names(const Lattice& lattice, const std::vector<std::pair<std::string, std::string>>& pairs);

  void bind(std::string atom, Element e) { map_[std::move(atom)] = e; }
  bool has(const std::string& atom) const { return map_.contains(atom); }
  /// Throws `UnboundAtom`.
  Element at(const std::string& atom) const;
  const std::map<std::string, Element>& entries() const noexcept { return map_; }

private:
  std::map<std::string, Element> map_;
};

using AtomValues = std::map<std::string, TruthValue>;

/// Reduces the formula to one lattice element, reading connectives as
/// join, meet and involution. Xor is desugared first.
Element reduce(const Formula& f, const Binding& binding, const Lattice& lattice);

/// Reduce first, then apply the truth function once.
TruthValue evaluate_lattice(const Formula& f, const Binding& binding, const TruthFunction& v);

/// Łukasiewicz degree functions applied to the desugared formula.
TruthValue evaluate_degrees(const Formula& f, const AtomValues& values);

/// Reduce first; 0 at bottom, 1 at top, undefined elsewhere.
TruthValue evaluate_supervaluation(const Formula& f, const Binding& binding, const Lattice& lattice);

struct AxiomViolation {
  enum class Kind { Join, Meet, Negation };

  Kind kind;
  Element y;
  Element z;  // equals y for Negation
  TruthValue lattice_side;  // v(y ⊔ z), v(y ⊓ z) or v(~y)
  TruthValue degree_side;   // the matching Łukasiewicz degree

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

std::string_view to_string(AxiomViolation::Kind kind) noexcept;

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  /// Comparisons skipped because a side was undefined.
  std::size_t skipped = 0;
  std::size_t checked = 0;
  /// Structural properties of the involution, reported but not required.
  bool involution_order_reversing = true;
  bool de_morgan = true;

  bool clean() const noexcept { return violations.empty() && skipped == 0; }
};

/// Compares v(y ⊔ z), v(y ⊓ z) with the Łukasiewicz degrees over all
/// unordered pairs (diagonal included) and v(~y) with 1 - v(y).
AxiomReport check_valuational_axioms(const TruthFunction& v);

/// Every truth function admissible under a value system, optionally with some
/// elements frozen. Element i is the i-th most significant digit of the index,
/// so iteration is in declaration order with values ascending.
class TruthFunctionSpace {
public:
  /// Throws `InfeasibleFrozen` if a frozen entry conflicts with the bounds or
  /// is not admissible.
  TruthFunctionSpace(Lattice lattice, ValueSystem system, std::map<Element, TruthValue> frozen = {});

  /// Throws `OutOfRange` if the count does not fit in 64 bits.
  std::uint64_t size() const;
  TruthFunction at(std::uint64_t index) const;
  void for_each(const std::function<void(const TruthFunction&)>& visit) const;

  const std::vector<Element>& free_elements() const noexcept { return free_; }
  const Lattice& lattice() const noexcept { return lattice_; }
  const ValueSystem& system() const noexcept { return system_; }

private:
  Lattice lattice_;
  ValueSystem system_;
  std::vector<TruthValue> base_;
  std::vector<Element> free_;
  std::vector<std::vector<TruthValue>> choices_;
};

std::vector<TruthFunction> enumerate_truth_functions(const Lattice& lattice, const ValueSystem& system,
                                                     const std::map<Element, TruthValue>& frozen = {});

} // namespace bivalence

#endif // BIVALENCE_VALUATION_HPP
