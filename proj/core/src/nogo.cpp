#include "bivalence/nogo.hpp"

#include <algorithm>
#include <thread>

#include "bivalence/error.hpp"

namespace bivalence {

std::string_view to_string(Constraint c) noexcept {
  switch (c) {
  case Constraint::Collapse: return "C-COLLAPSE";
  case Constraint::True: return "C-TRUE";
  case Constraint::Interference: return "C-INT";
  }
  return "?";
}

std::string_view to_string(Rule r) noexcept {
  switch (r) {
  case Rule::Evaluate: return "evaluate";
  case Rule::Bridge: return "bridge";
  case Rule::Additivity: return "additivity";
  case Rule::EqualPriors: return "equal-priors";
  case Rule::TotalProbability: return "total-probability";
  case Rule::InterferenceTerm: return "interference-term";
  case Rule::Contradiction: return "contradiction";
  }
  return "?";
}

// Scenario

Scenario::Scenario(Lattice lattice, Element x1, Element x2, InterferenceInputs interference, Options options)
    : lattice_(std::move(lattice)),
      x1_(x1),
      x2_(x2),
      exactly_one_(bivalence::exactly_one(std::string(kPathOne), std::string(kPathTwo))),
      interference_(std::move(interference)),
      observed_term_(interference_term(interference_)),
      options_(options) {
  binding_.bind(std::string(kPathOne), x1_);
  binding_.bind(std::string(kPathTwo), x2_);
}

Scenario Scenario::make(Lattice lattice, Element x1, Element x2, InterferenceInputs interference, Options options) {
  if (x1.index >= lattice.size() || x2.index >= lattice.size()) {
    throw Error(Errc::UnknownElement, "scenario binding refers to an element outside the lattice");
  }
  if (x1 == x2) {
    throw Error(Errc::MalformedInput, "X1 and X2 must be bound to distinct elements, both are '" + lattice.name(x1) + "'");
  }
  // Range check.
  interference = InterferenceInputs::make(interference.p_or, interference.p1, interference.p2);
  if (interference_term(interference) == 0 && !options.allow_degenerate) {
    throw Error(Errc::DegenerateScenario, "observed interference term is zero; pass allow_degenerate to study this case");
  }
  return Scenario(std::move(lattice), x1, x2, std::move(interference), options);
}

Scenario Scenario::make(Lattice lattice, Element x1, Element x2, InterferenceInputs interference) {
  return make(std::move(lattice), x1, x2, std::move(interference), Options{});
}

// Assignment checks

namespace {

const std::string kOneName{kPathOne};
const std::string kTwoName{kPathTwo};

Formula x1_atom() { return Formula::atom(kOneName); }
Formula x2_atom() { return Formula::atom(kTwoName); }
Formula either() { return Formula::disjunction(x1_atom(), x2_atom()); }
Formula both() { return Formula::conjunction(x1_atom(), x2_atom()); }

struct Evaluation {
  AtomValues values;
  TruthValue either;
  TruthValue both;
  TruthValue exactly_one;
};

Evaluation evaluate_pair(const Scenario& s, const TruthValue& v1, const TruthValue& v2) {
  AtomValues values{{kOneName, v1}, {kTwoName, v2}};
  Evaluation e{values, evaluate_degrees(either(), values), evaluate_degrees(both(), values),
               evaluate_degrees(s.exactly_one(), values)};
  return e;
}

TraceStep evaluate_step(const Formula& f, const TruthValue& t) {
  return {Rule::Evaluate, render(f), t, std::nullopt, "[[" + render(f) + "]] = " + to_string(t)};
}

TraceStep bridge_step(const Formula& f, const TruthValue& t) {
  const Bridge b = bridge(t);
  return {Rule::Bridge, render(f), t, forced_probability(b),
          "[[" + render(f) + "]] = " + to_string(t) + " => P[" + render(f) + "] " + std::string(to_string(b))};
}

std::vector<TraceStep> collapse_trace(const Evaluation& e) {
  return {evaluate_step(both(), e.both),
          {Rule::Contradiction, std::string(to_string(Constraint::Collapse)), e.both, std::nullopt,
           "both detectors would click, but on verification exactly one does"}};
}

std::vector<TraceStep> true_trace(const Scenario& s, const Evaluation& e) {
  return {evaluate_step(either(), e.either),
          evaluate_step(both(), e.both),
          evaluate_step(s.exactly_one(), e.exactly_one),
          {Rule::Contradiction, std::string(to_string(Constraint::True)), e.exactly_one, std::nullopt,
           "X1 ^ X2 is false, but passage through exactly one slit is a sharp property of the verified system"}};
}

/// The inference chain from forced probabilities to a vanishing interference
/// term; empty when some link does not go through.
std::vector<TraceStep> interference_trace(const Scenario& s, const Evaluation& e, const TruthValue& v1,
                                          const TruthValue& v2) {
  const auto p1 = forced_probability(bridge(v1));
  const auto p2 = forced_probability(bridge(v2));
  const auto p_or = forced_probability(bridge(e.either));
  const auto p_and = forced_probability(bridge(e.both));
  if (!p1 || !p2 || !p_or || !p_and) return {};
  if (*p_or != 1 || *p_and != 0) return {};
  if (!s.equal_priors() || s.observed_term() == 0) return {};

  ProbabilityAssignment prob;
  prob.set(x1_atom(), *p1);
  prob.set(x2_atom(), *p2);
  prob.set(either(), *p_or);
  prob.set(both(), *p_and);
  if (!check_additivity(prob, x1_atom(), x2_atom()).pass) return {};
  const Rational sum = *p1 + *p2;

  const auto& in = s.interference();
  const Rational mixture = equal_weight_mixture(in.p1, in.p2);
  const Rational predicted = interference_term({mixture, in.p1, in.p2});

  std::vector<TraceStep> trace;
  trace.push_back(bridge_step(x1_atom(), v1));
  trace.push_back(bridge_step(x2_atom(), v2));
  trace.push_back(evaluate_step(either(), e.either));
  trace.push_back(bridge_step(either(), e.either));
  trace.push_back(evaluate_step(both(), e.both));
  trace.push_back(bridge_step(both(), e.both));
  trace.push_back({Rule::Additivity, render(either()), std::nullopt, sum,
                   "P[X1 | X2] = P[X1] + P[X2] - P[X1 & X2] with P[X1 & X2] = 0 => P[X1] + P[X2] = " + to_string(sum)});
  trace.push_back({Rule::EqualPriors, "X1, X2", std::nullopt, half(),
                   "P[X1] = P[X2] => each path carries weight 1/2"});
  trace.push_back({Rule::TotalProbability, "R", std::nullopt, mixture,
                   "P[R|X1 | X2] = 1/2 P[R|X1] + 1/2 P[R|X2] = " + to_string(mixture)});
  trace.push_back({Rule::InterferenceTerm, "I12", std::nullopt, predicted,
                   "I12 = P[R|X1 | X2] - 1/2 P[R|X1] - 1/2 P[R|X2] = " + to_string(predicted)});
  trace.push_back({Rule::Contradiction, std::string(to_string(Constraint::Interference)), std::nullopt,
                   s.observed_term(),
                   "predicted I12 = " + to_string(predicted) + " but observed I12 = " + to_string(s.observed_term())});
  return trace;
}

std::vector<std::string> remarks_for(Constraint c, const TruthValue& v1, const TruthValue& v2) {
  std::vector<std::string> out;
  if (c == Constraint::True) {
    out.emplace_back("C-TRUE is conditional: it requires X1 ^ X2 to hold of the pre-assigned values");
    if (v1.is_false() && v2.is_false()) {
      out.emplace_back("the (0, 0) corner is implicit in the original case analysis; formalized here as C-TRUE");
    }
  }
  return out;
}

} // namespace

AssignmentResult check_assignment(const Scenario& scenario, const TruthValue& v1, const TruthValue& v2) {
  const Evaluation e = evaluate_pair(scenario, v1, v2);

  std::vector<std::pair<Constraint, std::vector<TraceStep>>> fired;
  if (e.both.is_true()) fired.emplace_back(Constraint::Collapse, collapse_trace(e));
  if (e.exactly_one.is_false()) fired.emplace_back(Constraint::True, true_trace(scenario, e));
  if (auto t = interference_trace(scenario, e, v1, v2); !t.empty()) fired.emplace_back(Constraint::Interference, std::move(t));

  AssignmentResult result{v1, v2, std::nullopt};
  if (fired.empty()) return result;

  Violation v;
  v.constraint = fired.front().first;
  v.assignment = e.values;
  v.trace = std::move(fired.front().second);
  for (std::size_t i = 1; i < fired.size(); ++i) v.also_violates.push_back(fired[i].first);
  v.remarks = remarks_for(v.constraint, v1, v2);
  result.violation = std::move(v);
  return result;
}

AssignmentResult check_assignment(const Scenario& scenario, const TruthValue& v1, const TruthValue& v2,
                                  const ValueSystem& system) {
  for (const auto* v : {&v1, &v2}) {
    if (!system.admits(*v)) {
      throw Error(Errc::InadmissibleValue, to_string(*v) + " is not admissible under " + system.describe());
    }
  }
  return check_assignment(scenario, v1, v2);
}

bool replay(const Scenario& scenario, const Violation& violation) {
  if (violation.trace.empty()) return false;
  const auto& last = violation.trace.back();
  if (last.rule != Rule::Contradiction || last.subject != to_string(violation.constraint)) return false;

  const auto& values = violation.assignment;
  if (!values.contains(kOneName) || !values.contains(kTwoName)) return false;

  ProbabilityAssignment prob;
  std::optional<Rational> mixture;
  std::optional<Rational> predicted;
  bool priors_split = false;

  for (const auto& step : violation.trace) {
    switch (step.rule) {
    case Rule::Evaluate: {
      if (!step.truth || evaluate_degrees(parse(step.subject), values) != *step.truth) return false;
      break;
    }
    case Rule::Bridge: {
      const Formula f = parse(step.subject);
      if (!step.truth || evaluate_degrees(f, values) != *step.truth) return false;
      const auto forced = forced_probability(bridge(*step.truth));
      if (forced != step.quantity || !forced) return false;
      prob.set(f, *forced);
      break;
    }
    case Rule::Additivity: {
      const auto check = check_additivity(prob, x1_atom(), x2_atom());
      if (!check.pass || prob.at(both()) != 0) return false;
      if (!step.quantity || prob.at(x1_atom()) + prob.at(x2_atom()) != *step.quantity || *step.quantity != 1) return false;
      break;
    }
    case Rule::EqualPriors:
      if (!scenario.equal_priors() || step.quantity != std::optional<Rational>(half())) return false;
      priors_split = true;
      break;
    case Rule::TotalProbability: {
      if (!priors_split) return false;
      const auto& in = scenario.interference();
      mixture = equal_weight_mixture(in.p1, in.p2);
      if (step.quantity != mixture) return false;
      break;
    }
    case Rule::InterferenceTerm: {
      if (!mixture) return false;
      const auto& in = scenario.interference();
      predicted = interference_term({*mixture, in.p1, in.p2});
      if (step.quantity != predicted) return false;
      break;
    }
    case Rule::Contradiction:
      switch (violation.constraint) {
      case Constraint::Collapse:
        if (!evaluate_degrees(both(), values).is_true()) return false;
        break;
      case Constraint::True:
        if (!evaluate_degrees(scenario.exactly_one(), values).is_false()) return false;
        break;
      case Constraint::Interference:
        if (!predicted || step.quantity != scenario.observed_term() || *predicted == scenario.observed_term()) {
          return false;
        }
        break;
      }
      break;
    }
  }
  return true;
}

// Certificates

Certificate run_nogo(const Scenario& scenario) {
  Certificate cert;
  const auto bivalent = ValueSystem::bivalent();
  for (const auto& v1 : bivalent.admissible()) {
    for (const auto& v2 : bivalent.admissible()) cert.corners.push_back(check_assignment(scenario, v1, v2, bivalent));
  }

  const Lattice& lattice = scenario.lattice();
  std::optional<TruthFunctionSpace> space;
  try {
    space.emplace(lattice, bivalent);
    if (space->size() > kMaxEnumeratedTruthFunctions) space.reset();
  } catch (const Error&) {
    space.reset();
  }
  if (!space) {
    // Only the bound elements vary; all other free elements are pinned to 0.
    std::map<Element, TruthValue> frozen;
    for (auto e : lattice.elements()) {
      if (!lattice.is_extreme(e) && e != scenario.x1() && e != scenario.x2()) frozen.emplace(e, TruthValue::zero());
    }
    space.emplace(lattice, bivalent, std::move(frozen));
    cert.exhaustive_truth_functions = false;
  }

  std::map<std::pair<TruthValue, TruthValue>, std::uint64_t> tallies;
  space->for_each([&](const TruthFunction& v) { ++tallies[{v(scenario.x1()), v(scenario.x2())}]; });
  cert.truth_function_count = space->size();

  bool all_violated = std::all_of(cert.corners.begin(), cert.corners.end(),
                                  [](const AssignmentResult& r) { return !r.consistent(); });
  for (const auto& [pair, count] : tallies) {
    const auto result = check_assignment(scenario, pair.first, pair.second, bivalent);
    TruthFunctionTally tally{pair.first, pair.second, count, std::nullopt};
    if (result.violation) {
      tally.constraint = result.violation->constraint;
    } else {
      all_violated = false;
    }
    cert.truth_functions.push_back(std::move(tally));
  }

  cert.enumeration_count = cert.corners.size() + cert.truth_function_count;
  cert.nogo_holds = all_violated;
  return cert;
}

GridReport scan_grid(const Scenario& scenario, const ValueSystem& system, unsigned threads) {
  const auto values = system.atom_values();
  std::vector<std::pair<TruthValue, TruthValue>> pairs;
  pairs.reserve(values.size() * values.size());
  for (const auto& v1 : values) {
    for (const auto& v2 : values) pairs.emplace_back(v1, v2);
  }

  std::vector<std::optional<AssignmentResult>> slots(pairs.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) slots[i] = check_assignment(scenario, pairs[i].first, pairs[i].second, system);
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
  if (threads == 1) {
    work(0, pairs.size());
  } else {
    // Each worker fills a disjoint slice; row order is fixed by `pairs`.
    std::vector<std::jthread> pool;
    const std::size_t chunk = (pairs.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < pairs.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(pairs.size(), begin + chunk));
    }
  }

  GridReport report{system, {}, {}, true, true, {}};
  for (auto& slot : slots) report.rows.push_back(std::move(*slot));

  auto bivalent_value = [](const TruthValue& t) { return t.is_true() || t.is_false(); };
  for (const auto& row : report.rows) {
    if (row.consistent()) {
      report.consistent.emplace_back(row.v1, row.v2);
      if (bivalent_value(row.v1) && bivalent_value(row.v2)) report.corners_violated = false;
    } else {
      ++report.counts[row.violation->constraint];
      if (!bivalent_value(row.v1) && !bivalent_value(row.v2)) report.violations_on_boundary = false;
    }
  }
  return report;
}

SupervaluationReport check_supervaluation(const Scenario& scenario) {
  const Lattice& lattice = scenario.lattice();
  for (auto [name, e] : scenario.binding().entries()) {
    if (lattice.is_extreme(e)) {
      throw Error(Errc::BindingAtExtreme, name + " is bound to the extreme element '" + lattice.name(e) + "'");
    }
  }

  const Binding& binding = scenario.binding();
  SupervaluationReport report{
      evaluate_supervaluation(x1_atom(), binding, lattice),
      evaluate_supervaluation(x2_atom(), binding, lattice),
      reduce(scenario.exactly_one(), binding, lattice),
      evaluate_supervaluation(scenario.exactly_one(), binding, lattice),
      Bridge::Unconstrained,
      Bridge::Unconstrained,
      AssignmentResult{TruthValue::undefined(), TruthValue::undefined(), std::nullopt},
  };
  report.bridge_x1 = bridge(report.x1);
  report.bridge_x2 = bridge(report.x2);
  report.pre_verification = check_assignment(scenario, report.x1, report.x2, ValueSystem::partial());
  return report;
}

} // namespace bivalence
