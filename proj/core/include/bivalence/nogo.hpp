#ifndef BIVALENCE_NOGO_HPP
#define BIVALENCE_NOGO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bivalence/formula.hpp"
#include "bivalence/lattice.hpp"
#include "bivalence/probability.hpp"
#include "bivalence/valuation.hpp"

namespace bivalence {

/// Physical constraints of the two-slit set-up, in the order they are tested.
enum class Constraint {
  Collapse,      // C-COLLAPSE: at most one detector clicks
  True,          // C-TRUE: "exactly one slit" holds of the verified system
  Interference,  // C-INT: observed two-path interference is nonzero
};

std::string_view to_string(Constraint c) noexcept;

/// Names of the two path propositions.
inline constexpr std::string_view kPathOne = "X1";
inline constexpr std::string_view kPathTwo = "X2";

/// Double-slit scenario: a lattice, path propositions X1 and X2 bound to
/// distinct elements, and the observed screen probabilities.
class Scenario {
public:
  struct Options {
    bool equal_priors = true;
    /// Admit zero interference; such scenarios exist only to exercise the
    /// degenerate case.
    bool allow_degenerate = false;
  };

  /// Throws `DegenerateScenario` for zero interference (unless allowed) and
  /// `MalformedInput` when X1 and X2 share an element.
  static Scenario make(Lattice lattice, Element x1, Element x2, InterferenceInputs interference, Options options);
  static Scenario make(Lattice lattice, Element x1, Element x2, InterferenceInputs interference);

  const Lattice& lattice() const noexcept { return lattice_; }
  Element x1() const noexcept { return x1_; }
  Element x2() const noexcept { return x2_; }
  const Binding& binding() const noexcept { return binding_; }
  /// X1 ^ X2.
  const Formula& exactly_one() const noexcept { return exactly_one_; }
  const InterferenceInputs& interference() const noexcept { return interference_; }
  const Rational& observed_term() const noexcept { return observed_term_; }
  bool equal_priors() const noexcept { return options_.equal_priors; }
  bool degenerate() const noexcept { return observed_term_ == 0; }

private:
  Scenario(Lattice lattice, Element x1, Element x2, InterferenceInputs interference, Options options);

  Lattice lattice_;
  Element x1_;
  Element x2_;
  Binding binding_;
  Formula exactly_one_;
  InterferenceInputs interference_;
  Rational observed_term_;
  Options options_;
};

enum class Rule {
  Evaluate,          // Łukasiewicz evaluation of `subject`
  Bridge,            // truth-to-probability bridge on `subject`
  Additivity,        // inclusion-exclusion on X1, X2
  EqualPriors,       // P[X1] = P[X2], weights 1/2 each
  TotalProbability,  // P[R|X1 ∨ X2] as the equal-weight mixture
  InterferenceTerm,  // I12 of the mixture
  Contradiction,     // clash with the constraint named in `subject`
};

std::string_view to_string(Rule r) noexcept;

struct TraceStep {
  Rule rule;
  std::string subject;
  std::optional<TruthValue> truth;
  std::optional<Rational> quantity;
  std::string statement;
};

struct Violation {
  Constraint constraint;
  AtomValues assignment;
  std::vector<TraceStep> trace;
  std::vector<Constraint> also_violates;
  std::vector<std::string> remarks;
};

struct AssignmentResult {
  TruthValue v1;
  TruthValue v2;
  std::optional<Violation> violation;

  bool consistent() const noexcept { return !violation.has_value(); }
};

/// Tests one pre-assigned pair (v(x1), v(x2)). Throws `InadmissibleValue` if
/// either value is outside `system`.
AssignmentResult check_assignment(const Scenario& scenario, const TruthValue& v1, const TruthValue& v2,
                                  const ValueSystem& system);
AssignmentResult check_assignment(const Scenario& scenario, const TruthValue& v1, const TruthValue& v2);

/// Re-executes each trace step through the valuation and probability
/// functions. True iff every step reproduces and the trace ends in the
/// recorded contradiction.
bool replay(const Scenario& scenario, const Violation& violation);

struct TruthFunctionTally {
  TruthValue v1;
  TruthValue v2;
  std::uint64_t count = 0;
  std::optional<Constraint> constraint;
};

struct Certificate {
  std::vector<AssignmentResult> corners;
  /// Bivalent truth functions grouped by their values on x1 and x2.
  std::vector<TruthFunctionTally> truth_functions;
  std::uint64_t truth_function_count = 0;
  /// False when the full space was too large and only the bound elements
  /// were varied.
  bool exhaustive_truth_functions = true;
  std::uint64_t enumeration_count = 0;
  bool nogo_holds = false;
};

/// Largest bivalent truth-function space enumerated in full by `run_nogo`.
inline constexpr std::uint64_t kMaxEnumeratedTruthFunctions = std::uint64_t{1} << 20;

Certificate run_nogo(const Scenario& scenario);

struct GridReport {
  ValueSystem system;
  /// Every pair of atom values, v1-major, ascending.
  std::vector<AssignmentResult> rows;
  std::vector<std::pair<TruthValue, TruthValue>> consistent;
  bool corners_violated = false;
  /// Every violated pair has a coordinate equal to 0 or 1.
  bool violations_on_boundary = false;
  std::map<Constraint, std::size_t> counts;
};

/// `threads` > 1 splits the rows across workers; the result is identical.
GridReport scan_grid(const Scenario& scenario, const ValueSystem& system, unsigned threads = 1);

struct SupervaluationReport {
  TruthValue x1;
  TruthValue x2;
  Element reduced;
  TruthValue exactly_one;
  Bridge bridge_x1;
  Bridge bridge_x2;
  AssignmentResult pre_verification;

  bool clean() const noexcept {
    return !x1.is_defined() && !x2.is_defined() && bridge_x1 == Bridge::Unconstrained &&
           bridge_x2 == Bridge::Unconstrained && pre_verification.consistent();
  }
};

/// Throws `BindingAtExtreme` if X1 or X2 is bound to 0_L or 1_L.
SupervaluationReport check_supervaluation(const Scenario& scenario);

} // namespace bivalence

#endif // BIVALENCE_NOGO_HPP
