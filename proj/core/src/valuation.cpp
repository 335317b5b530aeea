#include "bivalence/valuation.hpp"

#include <limits>

#include "bivalence/error.hpp"

namespace bivalence {

TruthValue::TruthValue(Rational degree) {
  if (degree < 0 || degree > 1) {
    throw Error(Errc::OutOfRange, "truth degree " + to_string(degree) + " outside [0, 1]");
  }
  degree_ = std::move(degree);
}

const Rational& TruthValue::degree() const {
  if (!degree_) throw Error(Errc::OutOfRange, "undefined truth value has no degree");
  return *degree_;
}

bool operator<(const TruthValue& a, const TruthValue& b) {
  if (!a.is_defined()) return false;
  if (!b.is_defined()) return true;
  return a.degree() < b.degree();
}

std::string to_string(const TruthValue& t) { return t.is_defined() ? to_string(t.degree()) : "undefined"; }

TruthValue parse_truth_value(std::string_view text) {
  if (text == "undefined") return TruthValue::undefined();
  return TruthValue(parse_rational(text));
}

TruthValue lukasiewicz_neg(const TruthValue& t) {
  if (!t.is_defined()) return t;
  return TruthValue(1 - t.degree());
}

TruthValue lukasiewicz_or(const TruthValue& s, const TruthValue& t) {
  if (!s.is_defined() || !t.is_defined()) return TruthValue::undefined();
  Rational sum = s.degree() + t.degree();
  return TruthValue(sum > 1 ? Rational(1) : sum);
}

TruthValue lukasiewicz_and(const TruthValue& s, const TruthValue& t) {
  if (!s.is_defined() || !t.is_defined()) return TruthValue::undefined();
  Rational excess = s.degree() + t.degree() - 1;
  return TruthValue(excess < 0 ? Rational(0) : excess);
}

// ValueSystem

namespace {

std::vector<TruthValue> grid(unsigned denominator) {
  std::vector<TruthValue> out;
  out.reserve(denominator + 1);
  for (unsigned k = 0; k <= denominator; ++k) out.emplace_back(Rational(k, denominator));
  return out;
}

} // namespace

ValueSystem ValueSystem::bivalent() { return ValueSystem(Kind::Bivalent, 2, grid(1)); }

ValueSystem ValueSystem::finite(unsigned cardinality) {
  if (cardinality < 2) throw Error(Errc::OutOfRange, "finite value system needs at least 2 values");
  return ValueSystem(Kind::Finite, cardinality, grid(cardinality - 1));
}

ValueSystem ValueSystem::infinite(unsigned denominator) {
  if (denominator < 1) throw Error(Errc::OutOfRange, "grid denominator must be positive");
  return ValueSystem(Kind::Infinite, denominator, grid(denominator));
}

ValueSystem ValueSystem::partial() { return ValueSystem(Kind::Partial, 2, grid(1)); }

std::vector<TruthValue> ValueSystem::atom_values() const {
  auto out = admissible_;
  if (kind_ == Kind::Partial) out.push_back(TruthValue::undefined());
  return out;
}

bool ValueSystem::admits(const TruthValue& t) const {
  if (!t.is_defined()) return kind_ == Kind::Partial;
  // Grids are k/(size-1); membership is a denominator test.
  const auto den = boost::multiprecision::denominator(t.degree());
  const unsigned steps = static_cast<unsigned>(admissible_.size() - 1);
  return den <= steps && steps % den.convert_to<unsigned>() == 0;
}

std::vector<TruthValue> ValueSystem::values_for(const Lattice& lattice, Element e) const {
  if (e == lattice.bottom()) return {TruthValue::zero()};
  if (e == lattice.top()) return {TruthValue::one()};
  if (kind_ == Kind::Partial) return {TruthValue::undefined()};
  return admissible_;
}

std::string ValueSystem::describe() const {
  switch (kind_) {
  case Kind::Bivalent: return "bivalent";
  case Kind::Finite: return "finite(" + std::to_string(parameter_) + ")";
  case Kind::Infinite: return "infinite(d=" + std::to_string(parameter_) + ")";
  case Kind::Partial: return "partial";
  }
  return "?";
}

// TruthFunction

TruthFunction::TruthFunction(Lattice lattice, std::vector<TruthValue> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  if (values_.size() != lattice_.size()) {
    throw Error(Errc::OutOfRange, "truth function has " + std::to_string(values_.size()) + " values for " +
                                      std::to_string(lattice_.size()) + " elements");
  }
  if (!values_[lattice_.bottom().index].is_false()) {
    throw Error(Errc::BoundaryCondition, "v(" + lattice_.name(lattice_.bottom()) + ") must be 0");
  }
  if (!values_[lattice_.top().index].is_true()) {
    throw Error(Errc::BoundaryCondition, "v(" + lattice_.name(lattice_.top()) + ") must be 1");
  }
}

TruthFunction TruthFunction::from_named(const Lattice& lattice, const std::map<std::string, TruthValue>& named,
                                        const TruthValue& fallback) {
  std::vector<TruthValue> values(lattice.size(), fallback);
  values[lattice.bottom().index] = TruthValue::zero();
  values[lattice.top().index] = TruthValue::one();
  for (const auto& [name, value] : named) values[lattice.element(name).index] = value;
  return TruthFunction(lattice, std::move(values));
}

const TruthValue& TruthFunction::operator()(Element e) const {
  if (e.index >= values_.size()) throw Error(Errc::UnknownElement, "element outside the truth function's lattice");
  return values_[e.index];
}

bool TruthFunction::admissible_under(const ValueSystem& system) const {
  for (auto e : lattice_.elements()) {
    const auto allowed = system.values_for(lattice_, e);
    if (std::find(allowed.begin(), allowed.end(), values_[e.index]) == allowed.end()) return false;
  }
  return true;
}

// Binding

Binding Binding::from_names(const Lattice& lattice, const std::vector<std::pair<std::string, std::string>>& pairs) {
  Binding b;
  for (const auto& [atom, element] : pairs) b.bind(atom, lattice.element(element));
  return b;
}

Element Binding::at(const std::string& atom) const {
  auto it = map_.find(atom);
  if (it == map_.end()) throw Error(Errc::UnboundAtom, "atom '" + atom + "' is not bound");
  return it->second;
}

// Evaluation

namespace {

Element reduce_desugared(const Formula& f, const Binding& binding, const Lattice& lattice) {
  switch (f.kind()) {
  case Connective::Atom: {
    Element e = binding.at(f.name());
    if (e.index >= lattice.size()) throw Error(Errc::UnknownElement, "atom '" + f.name() + "' bound outside the lattice");
    return e;
  }
  case Connective::Not: return lattice.involute(reduce_desugared(f.left(), binding, lattice));
  case Connective::And:
    return lattice.meet(reduce_desugared(f.left(), binding, lattice), reduce_desugared(f.right(), binding, lattice));
  case Connective::Or:
    return lattice.join(reduce_desugared(f.left(), binding, lattice), reduce_desugared(f.right(), binding, lattice));
  case Connective::Xor: break;
  }
  throw Error(Errc::MalformedInput, "xor survived desugaring");
}

TruthValue degrees_desugared(const Formula& f, const AtomValues& values) {
  switch (f.kind()) {
  case Connective::Atom: {
    auto it = values.find(f.name());
    if (it == values.end()) throw Error(Errc::UnboundAtom, "atom '" + f.name() + "' has no value");
    return it->second;
  }
  case Connective::Not: return lukasiewicz_neg(degrees_desugared(f.left(), values));
  case Connective::And:
    return lukasiewicz_and(degrees_desugared(f.left(), values), degrees_desugared(f.right(), values));
  case Connective::Or:
    return lukasiewicz_or(degrees_desugared(f.left(), values), degrees_desugared(f.right(), values));
  case Connective::Xor: break;
  }
  throw Error(Errc::MalformedInput, "xor survived desugaring");
}

} // namespace

Element reduce(const Formula& f, const Binding& binding, const Lattice& lattice) {
  return reduce_desugared(desugar_xor(f), binding, lattice);
}

TruthValue evaluate_lattice(const Formula& f, const Binding& binding, const TruthFunction& v) {
  return v(reduce(f, binding, v.lattice()));
}

TruthValue evaluate_degrees(const Formula& f, const AtomValues& values) {
  return degrees_desugared(desugar_xor(f), values);
}

TruthValue evaluate_supervaluation(const Formula& f, const Binding& binding, const Lattice& lattice) {
  const Element e = reduce(f, binding, lattice);
  if (e == lattice.bottom()) return TruthValue::zero();
  if (e == lattice.top()) return TruthValue::one();
  return TruthValue::undefined();
}

std::string_view to_string(AxiomViolation::Kind kind) noexcept {
  switch (kind) {
  case AxiomViolation::Kind::Join: return "join";
  case AxiomViolation::Kind::Meet: return "meet";
  case AxiomViolation::Kind::Negation: return "negation";
  }
  return "?";
}

AxiomReport check_valuational_axioms(const TruthFunction& v) {
  AxiomReport report;
  const Lattice& l = v.lattice();
  const auto elements = l.elements();

  auto compare = [&](AxiomViolation::Kind kind, Element y, Element z, const TruthValue& lhs, const TruthValue& rhs) {
    if (!lhs.is_defined() || !rhs.is_defined()) {
      ++report.skipped;
      return;
    }
    ++report.checked;
    if (lhs != rhs) report.violations.push_back({kind, y, z, lhs, rhs});
  };

  for (auto y : elements) {
    for (auto z : elements) {
      if (z < y) continue;
      compare(AxiomViolation::Kind::Join, y, z, v(l.join(y, z)), lukasiewicz_or(v(y), v(z)));
      compare(AxiomViolation::Kind::Meet, y, z, v(l.meet(y, z)), lukasiewicz_and(v(y), v(z)));
    }
  }
  for (auto y : elements) compare(AxiomViolation::Kind::Negation, y, y, v(l.involute(y)), lukasiewicz_neg(v(y)));

  for (auto y : elements) {
    for (auto z : elements) {
      if (l.leq(y, z) && !l.leq(l.involute(z), l.involute(y))) report.involution_order_reversing = false;
      if (l.involute(l.join(y, z)) != l.meet(l.involute(y), l.involute(z))) report.de_morgan = false;
    }
  }
  return report;
}

// Enumeration

TruthFunctionSpace::TruthFunctionSpace(Lattice lattice, ValueSystem system, std::map<Element, TruthValue> frozen)
    : lattice_(std::move(lattice)), system_(std::move(system)) {
  base_.assign(lattice_.size(), TruthValue::undefined());
  for (const auto& [e, value] : frozen) {
    if (e.index >= lattice_.size()) throw Error(Errc::InfeasibleFrozen, "frozen element outside the lattice");
    const auto allowed = system_.values_for(lattice_, e);
    if (std::find(allowed.begin(), allowed.end(), value) == allowed.end()) {
      throw Error(Errc::InfeasibleFrozen, "v(" + lattice_.name(e) + ") = " + to_string(value) + " is not permitted under " +
                                              system_.describe());
    }
  }
  for (auto e : lattice_.elements()) {
    if (auto it = frozen.find(e); it != frozen.end()) {
      base_[e.index] = it->second;
      continue;
    }
    auto allowed = system_.values_for(lattice_, e);
    if (allowed.size() == 1) {
      base_[e.index] = allowed.front();
      continue;
    }
    free_.push_back(e);
    choices_.push_back(std::move(allowed));
  }
}

std::uint64_t TruthFunctionSpace::size() const {
  std::uint64_t total = 1;
  for (const auto& c : choices_) {
    if (total > std::numeric_limits<std::uint64_t>::max() / c.size()) {
      throw Error(Errc::OutOfRange, "truth-function space exceeds 2^64 entries");
    }
    total *= c.size();
  }
  return total;
}

TruthFunction TruthFunctionSpace::at(std::uint64_t index) const {
  if (index >= size()) throw Error(Errc::OutOfRange, "truth-function index out of range");
  auto values = base_;
  for (std::size_t k = free_.size(); k-- > 0;) {
    const auto radix = choices_[k].size();
    values[free_[k].index] = choices_[k][index % radix];
    index /= radix;
  }
  return TruthFunction(lattice_, std::move(values));
}

void TruthFunctionSpace::for_each(const std::function<void(const TruthFunction&)>& visit) const {
  const std::uint64_t total = size();
  std::vector<std::size_t> digits(free_.size(), 0);
  auto values = base_;
  for (std::size_t k = 0; k < free_.size(); ++k) values[free_[k].index] = choices_[k][0];
  for (std::uint64_t n = 0; n < total; ++n) {
    visit(TruthFunction(lattice_, values));
    // odometer increment, least significant digit last
    for (std::size_t k = free_.size(); k-- > 0;) {
      if (++digits[k] < choices_[k].size()) {
        values[free_[k].index] = choices_[k][digits[k]];
        break;
      }
      digits[k] = 0;
      values[free_[k].index] = choices_[k][0];
    }
  }
}

std::vector<TruthFunction> enumerate_truth_functions(const Lattice& lattice, const ValueSystem& system,
                                                     const std::map<Element, TruthValue>& frozen) {
  TruthFunctionSpace space(lattice, system, frozen);
  std::vector<TruthFunction> out;
  out.reserve(static_cast<std::size_t>(space.size()));
  space.for_each([&](const TruthFunction& f) { out.push_back(f); });
  return out;
}

} // namespace bivalence
