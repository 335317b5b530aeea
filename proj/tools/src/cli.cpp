#include "bivalence/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "bivalence/bivalence.hpp"

namespace bivalence::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Text helpers

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

/// `key=value,key=value`, keys unique.
std::vector<std::pair<std::string, std::string>> parse_pairs(std::string_view text, std::string_view flag) {
  std::vector<std::pair<std::string, std::string>> out;
  if (text.empty()) return out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw UsageError(std::string(flag) + ": expected key=value, got '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    if (std::any_of(out.begin(), out.end(), [&](const auto& p) { return p.first == key; })) {
      throw UsageError(std::string(flag) + ": '" + key + "' given twice");
    }
    out.emplace_back(std::move(key), item.substr(eq + 1));
  }
  return out;
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << "  " << text << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
  return out.str();
}

std::string indent(const std::string& text, std::size_t by = 2) {
  std::string out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out += std::string(by, ' ') + l + '\n';
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// Shared pieces of the scenario-based commands

struct ScenarioFlags {
  std::string lattice = "builtin:boolean:2";
  std::string bind = "X1=a,X2=b";
  std::string amp1;
  std::string amp2;
  std::string p_or;
  std::string p1;
  std::string p2;
  bool allow_degenerate = false;
  bool unequal_priors = false;
};

void add_scenario_flags(CLI::App& cmd, ScenarioFlags& f) {
  cmd.add_option("--lattice", f.lattice, "builtin:<family>:<n> or a lattice file")->capture_default_str();
  cmd.add_option("--bind", f.bind, "X1=<element>,X2=<element>")->capture_default_str();
  cmd.add_option("--amp1", f.amp1, "amplitude through slit 1 as re,im");
  cmd.add_option("--amp2", f.amp2, "amplitude through slit 2 as re,im");
  cmd.add_option("--p-or", f.p_or, "P[R|X1 | X2]");
  cmd.add_option("--p1", f.p1, "P[R|X1]");
  cmd.add_option("--p2", f.p2, "P[R|X2]");
  cmd.add_flag("--allow-degenerate", f.allow_degenerate, "accept zero interference");
  cmd.add_flag("--unequal-priors", f.unequal_priors, "drop the equal-priors premise");
}

struct InterferenceSource {
  InterferenceInputs inputs;
  std::optional<std::pair<Amplitude, Amplitude>> amplitudes;
};

/// Amplitudes are relative weights, rescaled so that |a1|^2 + |a2|^2 = 1.
InterferenceSource interference_from(const std::string& amp1, const std::string& amp2, const std::string& p_or,
                                     const std::string& p1, const std::string& p2, bool defaulted) {
  const bool amps = !amp1.empty() || !amp2.empty();
  const bool probs = !p_or.empty() || !p1.empty() || !p2.empty();
  if (amps && probs) throw UsageError("give either --amp1/--amp2 or --p-or/--p1/--p2, not both");
  if (amps) {
    if (amp1.empty() || amp2.empty()) throw UsageError("--amp1 and --amp2 go together");
    const Amplitude a1 = parse_amplitude(amp1);
    const Amplitude a2 = parse_amplitude(amp2);
    return {normalized_amplitude_interference(a1, a2), std::make_pair(a1, a2)};
  }
  if (probs) {
    if (p_or.empty() || p1.empty() || p2.empty()) throw UsageError("--p-or, --p1 and --p2 go together");
    return {InterferenceInputs::make(parse_rational(p_or), parse_rational(p1), parse_rational(p2)), std::nullopt};
  }
  if (!defaulted) throw UsageError("give --amp1/--amp2 or --p-or/--p1/--p2");
  const Amplitude unit{1, 0};
  return {normalized_amplitude_interference(unit, unit), std::make_pair(unit, unit)};
}

struct ScenarioContext {
  Scenario scenario;
  InterferenceSource source;
  std::string lattice_source;
};

ScenarioContext build_scenario(const ScenarioFlags& f) {
  const Lattice lattice = resolve_lattice(f.lattice);
  const auto pairs = parse_pairs(f.bind, "--bind");
  std::optional<Element> x1, x2;
  for (const auto& [atom, element] : pairs) {
    if (atom == kPathOne) x1 = lattice.element(element);
    else if (atom == kPathTwo) x2 = lattice.element(element);
    else throw UsageError("--bind: only X1 and X2 can be bound, got '" + atom + "'");
  }
  if (!x1 || !x2) throw UsageError("--bind: both X1 and X2 must be bound");
  InterferenceSource source = interference_from(f.amp1, f.amp2, f.p_or, f.p1, f.p2, true);
  Scenario::Options opts;
  opts.equal_priors = !f.unequal_priors;
  opts.allow_degenerate = f.allow_degenerate;
  Scenario s = Scenario::make(lattice, *x1, *x2, source.inputs, opts);
  return {std::move(s), std::move(source), f.lattice};
}

Json scenario_json(const ScenarioContext& ctx) {
  const Scenario& s = ctx.scenario;
  Json j;
  j["lattice"] = ctx.lattice_source;
  j["binding"] = {{"X1", s.lattice().name(s.x1())}, {"X2", s.lattice().name(s.x2())}};
  if (ctx.source.amplitudes) {
    j["amplitudes"] = {to_string(ctx.source.amplitudes->first), to_string(ctx.source.amplitudes->second)};
  }
  const auto& in = s.interference();
  j["p_or"] = to_string(in.p_or);
  j["p1"] = to_string(in.p1);
  j["p2"] = to_string(in.p2);
  j["interference"] = to_string(s.observed_term());
  j["equal_priors"] = s.equal_priors();
  return j;
}

std::string scenario_text(const ScenarioContext& ctx) {
  const Scenario& s = ctx.scenario;
  std::ostringstream out;
  out << "lattice: " << ctx.lattice_source << '\n';
  out << "binding: X1=" << s.lattice().name(s.x1()) << ", X2=" << s.lattice().name(s.x2()) << '\n';
  if (ctx.source.amplitudes) {
    out << "amplitudes: a1=" << to_string(ctx.source.amplitudes->first)
        << " a2=" << to_string(ctx.source.amplitudes->second) << '\n';
  }
  const auto& in = s.interference();
  out << "screen: P[R|X1 | X2]=" << to_string(in.p_or) << " P[R|X1]=" << to_string(in.p1)
      << " P[R|X2]=" << to_string(in.p2) << " I12=" << to_string(s.observed_term()) << '\n';
  out << "equal priors: " << (s.equal_priors() ? "yes" : "no") << '\n';
  return out.str();
}

std::string outcome_name(const AssignmentResult& r) {
  return r.consistent() ? "consistent" : std::string(to_string(r.violation->constraint));
}

std::vector<std::string> also_names(const AssignmentResult& r) {
  std::vector<std::string> out;
  if (r.violation)
    for (auto c : r.violation->also_violates) out.emplace_back(to_string(c));
  return out;
}

struct Degrees {
  TruthValue either, both, exactly_one;
};

Degrees degrees_of(const Scenario& s, const AssignmentResult& r) {
  const AtomValues values{{std::string(kPathOne), r.v1}, {std::string(kPathTwo), r.v2}};
  const Formula x1 = Formula::atom(std::string(kPathOne));
  const Formula x2 = Formula::atom(std::string(kPathTwo));
  return {evaluate_degrees(Formula::disjunction(x1, x2), values),
          evaluate_degrees(Formula::conjunction(x1, x2), values), evaluate_degrees(s.exactly_one(), values)};
}

Json trace_json(const std::vector<TraceStep>& trace) {
  Json steps = Json::array();
  for (const auto& step : trace) {
    Json j;
    j["rule"] = to_string(step.rule);
    j["subject"] = step.subject;
    if (step.truth) j["truth"] = to_string(*step.truth);
    if (step.quantity) j["quantity"] = to_string(*step.quantity);
    j["statement"] = step.statement;
    steps.push_back(std::move(j));
  }
  return steps;
}

Json assignment_json(const Scenario& s, const AssignmentResult& r) {
  const Degrees d = degrees_of(s, r);
  Json j;
  j["v1"] = to_string(r.v1);
  j["v2"] = to_string(r.v2);
  j["or"] = to_string(d.either);
  j["and"] = to_string(d.both);
  j["exactly_one"] = to_string(d.exactly_one);
  j["outcome"] = outcome_name(r);
  if (r.violation) {
    j["also_violates"] = also_names(r);
    j["remarks"] = r.violation->remarks;
    j["trace"] = trace_json(r.violation->trace);
  }
  return j;
}

std::vector<std::string> assignment_row(const Scenario& s, const AssignmentResult& r) {
  const Degrees d = degrees_of(s, r);
  return {to_string(r.v1),          to_string(r.v2),       to_string(d.either), to_string(d.both),
          to_string(d.exactly_one), outcome_name(r),        join(also_names(r), ",")};
}

const std::vector<std::string> kAssignmentHeader{"v(X1)", "v(X2)", "X1 | X2", "X1 & X2",
                                                 "X1 ^ X2", "outcome", "also"};

std::string traces_text(const std::vector<AssignmentResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    if (!r.violation) continue;
    out << "\ntrace for (" << to_string(r.v1) << ", " << to_string(r.v2) << ") -> "
        << to_string(r.violation->constraint) << '\n';
    std::size_t n = 1;
    for (const auto& step : r.violation->trace) {
      out << "  " << n++ << ". [" << to_string(step.rule) << "] " << step.statement << '\n';
    }
    for (const auto& remark : r.violation->remarks) out << "  note: " << remark << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Commands

Report lattice_check(const std::string& source) {
  const LatticeSpec spec = resolve_lattice_spec(source);
  const auto violations = verify_axioms(spec);

  Report r;
  r.verdict = violations.empty() ? "lattice laws hold" : "lattice laws violated";
  std::ostringstream body;
  body << "elements (" << spec.elements.size() << "): " << join(spec.elements, " ") << '\n';
  body << "violations: " << violations.size() << '\n';
  for (const auto& v : violations) body << "  " << to_string(v) << '\n';
  r.body = body.str();

  Json list = Json::array();
  for (const auto& v : violations) {
    list.push_back({{"law", to_string(v.law)}, {"witnesses", v.witnesses}, {"detail", v.detail}});
  }
  r.payload["elements"] = spec.elements;
  r.payload["violations"] = std::move(list);
  r.exit_code = violations.empty() ? kExitOk : kExitViolation;
  return r;
}

Json tree_json(const Formula& f) {
  Json j;
  j["kind"] = to_string(f.kind());
  if (f.is_atom()) {
    j["name"] = f.name();
  } else if (f.is_binary()) {
    j["children"] = {tree_json(f.left()), tree_json(f.right())};
  } else {
    j["children"] = {tree_json(f.left())};
  }
  return j;
}

Report parse_command(const std::string& text) {
  const Formula f = parse(text);
  const Formula d = desugar_xor(f);
  Report r;
  r.verdict = "parsed: " + render(f);
  std::ostringstream body;
  body << "tree:\n" << indent(render_tree(f));
  body << "desugared: " << render(d) << '\n';
  body << "atoms: " << join(atoms(f), " ") << '\n';
  r.body = body.str();
  r.payload["formula"] = render(f);
  r.payload["tree"] = tree_json(f);
  r.payload["desugared"] = render(d);
  r.payload["atoms"] = atoms(f);
  return r;
}

struct EvalFlags {
  std::string formula;
  std::string mode = "lukasiewicz";
  std::string lattice = "builtin:boolean:2";
  std::string assign;
  std::string truth;
};

Report eval_command(const EvalFlags& f) {
  const Formula formula = parse(f.formula);
  const auto pairs = parse_pairs(f.assign, "--assign");
  Report r;
  std::ostringstream body;
  body << "formula: " << render(formula) << '\n' << "mode: " << f.mode << '\n';
  r.payload["formula"] = render(formula);
  r.payload["mode"] = f.mode;

  TruthValue value = TruthValue::undefined();
  if (f.mode == "lukasiewicz") {
    if (!f.truth.empty()) throw UsageError("--truth applies to --mode lattice only");
    AtomValues values;
    Json assigned;
    for (const auto& [atom, text] : pairs) {
      values.emplace(atom, parse_truth_value(text));
      assigned[atom] = to_string(values.at(atom));
    }
    body << "atoms: ";
    std::vector<std::string> shown;
    for (const auto& [atom, v] : values) shown.push_back(atom + "=" + to_string(v));
    body << join(shown, " ") << '\n';
    r.payload["assign"] = std::move(assigned);
    value = evaluate_degrees(formula, values);
  } else if (f.mode == "lattice" || f.mode == "super") {
    const Lattice lattice = resolve_lattice(f.lattice);
    const Binding binding = Binding::from_names(lattice, pairs);
    Json assigned;
    std::vector<std::string> shown;
    for (const auto& [atom, e] : binding.entries()) {
      assigned[atom] = lattice.name(e);
      shown.push_back(atom + "=" + lattice.name(e));
    }
    const Element reduced = reduce(formula, binding, lattice);
    body << "lattice: " << f.lattice << '\n' << "atoms: " << join(shown, " ") << '\n';
    body << "reduced: " << lattice.name(reduced) << '\n';
    r.payload["lattice"] = f.lattice;
    r.payload["assign"] = std::move(assigned);
    r.payload["reduced"] = lattice.name(reduced);
    if (f.mode == "lattice") {
      std::map<std::string, TruthValue> named{{lattice.name(lattice.bottom()), TruthValue::zero()},
                                              {lattice.name(lattice.top()), TruthValue::one()}};
      for (const auto& [element, text] : parse_pairs(f.truth, "--truth")) {
        lattice.element(element);
        named.insert_or_assign(element, parse_truth_value(text));
      }
      value = evaluate_lattice(formula, binding, TruthFunction::from_named(lattice, named));
    } else {
      if (!f.truth.empty()) throw UsageError("--truth applies to --mode lattice only");
      value = evaluate_supervaluation(formula, binding, lattice);
    }
  } else {
    throw UsageError("--mode must be lattice, lukasiewicz or super");
  }
  body << "value: " << to_string(value) << '\n';
  r.verdict = "value: " + to_string(value);
  r.body = body.str();
  r.payload["value"] = to_string(value);
  return r;
}

struct InterferenceFlags {
  std::string amp1, amp2, p_or, p1, p2;
};

Report interference_command(const InterferenceFlags& f) {
  const InterferenceSource source = interference_from(f.amp1, f.amp2, f.p_or, f.p1, f.p2, false);
  const Rational term = interference_term(source.inputs);
  Report r;
  r.verdict = "I12 = " + to_string(term);
  std::ostringstream body;
  if (source.amplitudes) {
    const auto& [a1, a2] = *source.amplitudes;
    const Rational total = a1.norm_squared() + a2.norm_squared();
    body << "amplitudes: a1=" << to_string(a1) << " a2=" << to_string(a2) << '\n';
    body << "normalization: |a1|^2 + |a2|^2 = " << to_string(total) << '\n';
    body << "Re(a1 conj a2): " << to_string(cross_term(a1, a2)) << '\n';
    r.payload["amplitudes"] = {to_string(a1), to_string(a2)};
    r.payload["normalization"] = to_string(total);
    r.payload["cross_term"] = to_string(cross_term(a1, a2));
  }
  const auto& in = source.inputs;
  body << "P[R|X1 | X2]: " << to_string(in.p_or) << '\n';
  body << "P[R|X1]: " << to_string(in.p1) << '\n';
  body << "P[R|X2]: " << to_string(in.p2) << '\n';
  body << "I12: " << to_string(term) << '\n';
  r.body = body.str();
  r.payload["p_or"] = to_string(in.p_or);
  r.payload["p1"] = to_string(in.p1);
  r.payload["p2"] = to_string(in.p2);
  r.payload["interference"] = to_string(term);
  return r;
}

Report nogo_command(const ScenarioFlags& f) {
  const ScenarioContext ctx = build_scenario(f);
  const Scenario& s = ctx.scenario;
  const Certificate cert = run_nogo(s);

  Report r;
  r.verdict = cert.nogo_holds ? "no-go holds" : "no-go fails";
  std::ostringstream body;
  body << scenario_text(ctx);

  body << "\nbivalent corners:\n";
  std::vector<std::vector<std::string>> rows;
  Json corners = Json::array();
  for (const auto& c : cert.corners) {
    rows.push_back(assignment_row(s, c));
    corners.push_back(assignment_json(s, c));
  }
  body << table(kAssignmentHeader, rows);

  body << "\nbivalent truth functions: " << cert.truth_function_count << " of " << cert.enumeration_count
       << (cert.exhaustive_truth_functions ? " (exhaustive)" : " (other free elements fixed at 0)") << '\n';
  std::vector<std::vector<std::string>> tallies;
  Json functions = Json::array();
  for (const auto& t : cert.truth_functions) {
    const std::string outcome = t.constraint ? std::string(to_string(*t.constraint)) : "consistent";
    tallies.push_back({to_string(t.v1), to_string(t.v2), std::to_string(t.count), outcome});
    functions.push_back({{"v1", to_string(t.v1)}, {"v2", to_string(t.v2)}, {"count", t.count}, {"outcome", outcome}});
  }
  body << table({"v(X1)", "v(X2)", "count", "outcome"}, tallies);
  body << traces_text(cert.corners);
  r.body = body.str();

  r.payload["scenario"] = scenario_json(ctx);
  r.payload["corners"] = std::move(corners);
  r.payload["truth_functions"] = {{"count", cert.truth_function_count},
                                  {"enumerated", cert.enumeration_count},
                                  {"exhaustive", cert.exhaustive_truth_functions},
                                  {"by_pair", std::move(functions)}};
  r.exit_code = cert.nogo_holds ? kExitOk : kExitViolation;
  return r;
}

struct ScanFlags {
  ScenarioFlags scenario;
  unsigned values = 0;
  unsigned denominator = 10;
  bool partial = false;
  unsigned threads = 0;
};

Report scan_command(const ScanFlags& f, bool values_given, bool denominator_given) {
  if (static_cast<int>(values_given) + static_cast<int>(denominator_given) + static_cast<int>(f.partial) > 1) {
    throw UsageError("--values, --denominator and --partial are mutually exclusive");
  }
  const ValueSystem system = values_given ? ValueSystem::finite(f.values)
                             : f.partial  ? ValueSystem::partial()
                                          : ValueSystem::infinite(f.denominator);
  const ScenarioContext ctx = build_scenario(f.scenario);
  const Scenario& s = ctx.scenario;
  const unsigned threads = f.threads ? f.threads : std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  const GridReport grid = scan_grid(s, system, threads);

  Report r;
  r.verdict = std::string(grid.corners_violated ? "corners violated" : "corners not all violated") + "; " +
              std::to_string(grid.consistent.size()) + " of " + std::to_string(grid.rows.size()) +
              " pairs consistent";
  std::ostringstream body;
  body << scenario_text(ctx) << "values: " << system.describe() << '\n' << '\n';
  std::vector<std::vector<std::string>> rows;
  Json table_json = Json::array();
  for (const auto& row : grid.rows) {
    rows.push_back(assignment_row(s, row));
    table_json.push_back(assignment_json(s, row));
  }
  body << table(kAssignmentHeader, rows);

  std::vector<std::string> consistent;
  Json consistent_json = Json::array();
  for (const auto& [a, b] : grid.consistent) {
    consistent.push_back("(" + to_string(a) + ", " + to_string(b) + ")");
    consistent_json.push_back({to_string(a), to_string(b)});
  }
  body << "\nconsistent pairs: " << (consistent.empty() ? "none" : join(consistent, " ")) << '\n';
  Json counts = Json::object();
  std::vector<std::string> count_text;
  for (const auto& [c, n] : grid.counts) {
    counts[std::string(to_string(c))] = n;
    count_text.push_back(std::string(to_string(c)) + "=" + std::to_string(n));
  }
  body << "violations: " << (count_text.empty() ? "none" : join(count_text, " ")) << '\n';
  body << "violations on boundary only: " << (grid.violations_on_boundary ? "yes" : "no") << '\n';
  body << traces_text(grid.rows);
  r.body = body.str();

  r.payload["scenario"] = scenario_json(ctx);
  r.payload["values"] = system.describe();
  r.payload["rows"] = std::move(table_json);
  r.payload["consistent"] = std::move(consistent_json);
  r.payload["counts"] = std::move(counts);
  r.payload["corners_violated"] = grid.corners_violated;
  r.payload["violations_on_boundary"] = grid.violations_on_boundary;
  r.exit_code = grid.corners_violated ? kExitOk : kExitViolation;
  return r;
}

Report super_command(const ScenarioFlags& f) {
  const ScenarioContext ctx = build_scenario(f);
  const Scenario& s = ctx.scenario;
  const SupervaluationReport sv = check_supervaluation(s);
  const Lattice& l = s.lattice();

  Report r;
  r.verdict = sv.clean() ? "supervaluation escapes: atoms undefined, X1 ^ X2 = " + to_string(sv.exactly_one)
                         : "supervaluation does not escape";
  std::ostringstream body;
  body << scenario_text(ctx);
  body << "[[X1]]: " << to_string(sv.x1) << " (" << to_string(sv.bridge_x1) << ")\n";
  body << "[[X2]]: " << to_string(sv.x2) << " (" << to_string(sv.bridge_x2) << ")\n";
  body << "X1 ^ X2 reduces to: " << l.name(sv.reduced) << '\n';
  body << "[[X1 ^ X2]]: " << to_string(sv.exactly_one) << '\n';
  body << "pre-verification check: " << outcome_name(sv.pre_verification) << '\n';
  body << traces_text({sv.pre_verification});
  r.body = body.str();

  r.payload["scenario"] = scenario_json(ctx);
  r.payload["x1"] = {{"value", to_string(sv.x1)}, {"bridge", to_string(sv.bridge_x1)}};
  r.payload["x2"] = {{"value", to_string(sv.x2)}, {"bridge", to_string(sv.bridge_x2)}};
  r.payload["reduced"] = l.name(sv.reduced);
  r.payload["exactly_one"] = to_string(sv.exactly_one);
  r.payload["pre_verification"] = assignment_json(s, sv.pre_verification);
  r.exit_code = sv.clean() ? kExitOk : kExitViolation;
  return r;
}

Report usage_report(const std::string& message) {
  Report r;
  r.verdict = "error: " + message;
  r.payload["error"] = message;
  r.exit_code = kExitUsage;
  return r;
}

std::string single_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

} // namespace

LatticeSpec resolve_lattice_spec(std::string_view source) {
  if (source.starts_with("builtin:")) return resolve_lattice(source).to_spec();
  return parse_lattice_spec(read_file(std::string(source)));
}

Lattice resolve_lattice(std::string_view source) {
  if (source.starts_with("builtin:")) {
    const auto parts = split(source, ':');
    if (parts.size() != 3) throw UsageError("expected builtin:<family>:<n>, got '" + std::string(source) + "'");
    const Rational n = parse_rational(parts[2]);
    if (boost::multiprecision::denominator(n) != 1 || n < 0 || n > 100000) {
      throw UsageError("builtin lattice size must be a small non-negative integer");
    }
    return builtin(parts[1], boost::multiprecision::numerator(n).convert_to<unsigned>());
  }
  return build_from_order(resolve_lattice_spec(source));
}

Report dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Verification tool for many-valued readings of the two-slit experiment", "bivalence"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* lattice = app.add_subcommand("lattice", "lattice utilities");
  lattice->require_subcommand(1);
  std::string lattice_file;
  auto* check = lattice->add_subcommand("check", "verify the lattice laws of a lattice file");
  check->add_option("file", lattice_file, "lattice file or builtin:<family>:<n>")->required();

  std::string formula_text;
  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and show its tree");
  parse_cmd->add_option("text", formula_text, "formula")->required();

  EvalFlags eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula");
  eval_cmd->add_option("--formula", eval.formula)->required();
  eval_cmd->add_option("--mode", eval.mode, "lattice, lukasiewicz or super")->capture_default_str();
  eval_cmd->add_option("--lattice", eval.lattice)->capture_default_str();
  eval_cmd->add_option("--assign", eval.assign, "atom=element or atom=value, comma separated");
  eval_cmd->add_option("--truth", eval.truth, "element=value, comma separated (lattice mode)");

  InterferenceFlags inter;
  auto* inter_cmd = app.add_subcommand("interference", "compute the interference term");
  inter_cmd->add_option("--amp1", inter.amp1);
  inter_cmd->add_option("--amp2", inter.amp2);
  inter_cmd->add_option("--p-or", inter.p_or);
  inter_cmd->add_option("--p1", inter.p1);
  inter_cmd->add_option("--p2", inter.p2);

  ScenarioFlags nogo;
  auto* nogo_cmd = app.add_subcommand("nogo", "certify the no-go result for a scenario");
  add_scenario_flags(*nogo_cmd, nogo);

  ScanFlags scan;
  auto* scan_cmd = app.add_subcommand("scan", "check every pair of atom values in a value system");
  add_scenario_flags(*scan_cmd, scan.scenario);
  auto* values_opt = scan_cmd->add_option("--values", scan.values, "finite system with N values")
                         ->check(CLI::Range(2U, 100000U));
  auto* denominator_opt = scan_cmd->add_option("--denominator", scan.denominator, "grid k/d")
                              ->check(CLI::Range(1U, 100000U))
                              ->capture_default_str();
  scan_cmd->add_flag("--partial", scan.partial, "bivalent values plus undefined");
  scan_cmd->add_option("--threads", scan.threads, "worker threads (0 = auto)");

  ScenarioFlags super;
  auto* super_cmd = app.add_subcommand("super", "supervaluation check for a scenario");
  add_scenario_flags(*super_cmd, super);

  std::vector<std::string> owned{"bivalence"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : owned) argv.push_back(a.data());

  Report report;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    std::string command;
    if (check->parsed()) {
      command = "lattice check";
      report = lattice_check(lattice_file);
    } else if (parse_cmd->parsed()) {
      command = "parse";
      report = parse_command(formula_text);
    } else if (eval_cmd->parsed()) {
      command = "eval";
      report = eval_command(eval);
    } else if (inter_cmd->parsed()) {
      command = "interference";
      report = interference_command(inter);
    } else if (nogo_cmd->parsed()) {
      command = "nogo";
      report = nogo_command(nogo);
    } else if (scan_cmd->parsed()) {
      command = "scan";
      report = scan_command(scan, values_opt->count() > 0, denominator_opt->count() > 0);
    } else {
      command = "super";
      report = super_command(super);
    }
    Json payload;
    payload["command"] = command;
    payload["verdict"] = report.verdict;
    payload["exit_code"] = report.exit_code;
    for (auto& [key, value] : report.payload.items()) payload[key] = value;
    report.payload = std::move(payload);
  } catch (const CLI::CallForHelp&) {
    report = Report{};
    report.verdict = "usage";
    report.body = app.help();
    report.payload["usage"] = report.body;
  } catch (const CLI::CallForAllHelp&) {
    report = Report{};
    report.verdict = "usage";
    report.body = app.help("", CLI::AppFormatMode::All);
    report.payload["usage"] = report.body;
  } catch (const CLI::ParseError& e) {
    report = usage_report(single_line(e.what()));
  } catch (const std::exception& e) {
    report = usage_report(single_line(e.what()));
  }
  report.format = format == "json" ? Format::Json : Format::Text;
  return report;
}

std::string render(const Report& report) {
  if (report.format == Format::Json) return report.payload.dump(2) + "\n";
  return report.verdict + "\n" + report.body;
}

} // namespace bivalence::cli
