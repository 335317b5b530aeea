#include "bivalence/probability.hpp"

#include "bivalence/error.hpp"

namespace bivalence {
namespace {

void check_unit(const Rational& p, std::string_view what) {
  if (p < 0 || p > 1) throw Error(Errc::OutOfRange, std::string(what) + " = " + to_string(p) + " outside [0, 1]");
}

} // namespace

Bridge bridge(const TruthValue& truth) {
  if (truth.is_true()) return Bridge::ForcedOne;
  if (truth.is_false()) return Bridge::ForcedZero;
  return Bridge::Unconstrained;
}

std::optional<Rational> forced_probability(Bridge b) {
  switch (b) {
  case Bridge::ForcedOne: return Rational(1);
  case Bridge::ForcedZero: return Rational(0);
  case Bridge::Unconstrained: return std::nullopt;
  }
  return std::nullopt;
}

std::string_view to_string(Bridge b) noexcept {
  switch (b) {
  case Bridge::ForcedOne: return "forced(1)";
  case Bridge::ForcedZero: return "forced(0)";
  case Bridge::Unconstrained: return "unconstrained";
  }
  return "?";
}

void ProbabilityAssignment::set(const Formula& proposition, Rational p) {
  check_unit(p, "P[" + render(proposition) + "]");
  marginal_[render(proposition)] = std::move(p);
}

void ProbabilityAssignment::set_conditional(const std::string& region, const Formula& given, Rational p) {
  check_unit(p, "P[" + region + "|" + render(given) + "]");
  conditional_[{region, render(given)}] = std::move(p);
}

std::optional<Rational> ProbabilityAssignment::find(const Formula& proposition) const {
  auto it = marginal_.find(render(proposition));
  if (it == marginal_.end()) return std::nullopt;
  return it->second;
}

const Rational& ProbabilityAssignment::at(const Formula& proposition) const {
  const auto key = render(proposition);
  auto it = marginal_.find(key);
  if (it == marginal_.end()) throw Error(Errc::MissingEntry, "no probability for '" + key + "'");
  return it->second;
}

const Rational& ProbabilityAssignment::conditional(const std::string& region, const Formula& given) const {
  const auto key = std::make_pair(region, render(given));
  auto it = conditional_.find(key);
  if (it == conditional_.end()) {
    throw Error(Errc::MissingEntry, "no probability for '" + region + "|" + key.second + "'");
  }
  return it->second;
}

AdditivityCheck check_additivity(const ProbabilityAssignment& p, const Formula& y, const Formula& z) {
  const Rational& py = p.at(y);
  const Rational& pz = p.at(z);
  const Rational& p_or = p.at(Formula::disjunction(y, z));
  const Rational& p_and = p.at(Formula::conjunction(y, z));
  Rational expected = py + pz - p_and;
  return {p_or == expected, p_or, std::move(expected)};
}

InterferenceInputs InterferenceInputs::make(Rational p_or, Rational p1, Rational p2) {
  check_unit(p_or, "P[R|X1 | X2]");
  check_unit(p1, "P[R|X1]");
  check_unit(p2, "P[R|X2]");
  return {std::move(p_or), std::move(p1), std::move(p2)};
}

Rational equal_weight_mixture(const Rational& p1, const Rational& p2) { return half() * p1 + half() * p2; }

Rational interference_term(const InterferenceInputs& in) { return in.p_or - equal_weight_mixture(in.p1, in.p2); }

Amplitude parse_amplitude(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw Error(Errc::MalformedInput, "amplitude must be written re,im: '" + std::string(text) + "'");
  }
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string to_string(const Amplitude& a) { return to_string(a.re) + "," + to_string(a.im); }

Rational cross_term(const Amplitude& a1, const Amplitude& a2) { return a1.re * a2.re + a1.im * a2.im; }

InterferenceInputs amplitude_interference(const Amplitude& a1, const Amplitude& a2) {
  Rational p1 = a1.norm_squared();
  Rational p2 = a2.norm_squared();
  Rational p_or = (a1 + a2).norm_squared() / 2;
  if (p1 > 1 || p2 > 1 || p_or > 1) {
    throw Error(Errc::OutOfRange, "amplitudes " + to_string(a1) + " and " + to_string(a2) +
                                      " give a probability above 1");
  }
  return {std::move(p_or), std::move(p1), std::move(p2)};
}

InterferenceInputs normalized_amplitude_interference(const Amplitude& a1, const Amplitude& a2) {
  const Rational total = a1.norm_squared() + a2.norm_squared();
  if (total == 0) throw Error(Errc::OutOfRange, "both amplitudes are zero");
  // |a1 + a2|^2 <= 2(|a1|^2 + |a2|^2), so every entry lands in [0, 1].
  return {(a1 + a2).norm_squared() / (2 * total), a1.norm_squared() / total, a2.norm_squared() / total};
}

} // namespace bivalence
