#ifndef BIVALENCE_PROBABILITY_HPP
#define BIVALENCE_PROBABILITY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "bivalence/formula.hpp"
#include "bivalence/rational.hpp"
#include "bivalence/valuation.hpp"

namespace bivalence {

/// What a truth value says about the probability of its proposition: truth
/// forces 1, falsity forces 0, anything else leaves it open.
enum class Bridge { ForcedOne, ForcedZero, Unconstrained };

Bridge bridge(const TruthValue& truth);
std::optional<Rational> forced_probability(Bridge b);
std::string_view to_string(Bridge b) noexcept;

/// Probabilities of propositions and of screen regions conditioned on
/// propositions, keyed by the rendered formula text.
class ProbabilityAssignment {
public:
  /// Throws `OutOfRange` outside [0, 1].
  void set(const Formula& proposition, Rational p);
  void set_conditional(const std::string& region, const Formula& given, Rational p);

  std::optional<Rational> find(const Formula& proposition) const;
  /// Throws `MissingEntry`.
  const Rational& at(const Formula& proposition) const;
  const Rational& conditional(const std::string& region, const Formula& given) const;

  const std::map<std::string, Rational>& entries() const noexcept { return marginal_; }

private:
  std::map<std::string, Rational> marginal_;
  std::map<std::pair<std::string, std::string>, Rational> conditional_;
};

struct AdditivityCheck {
  bool pass;
  Rational disjunction;       // P[Y ∨ Z]
  Rational inclusion_exclusion;  // P[Y] + P[Z] - P[Y ∧ Z]
};

/// Throws `MissingEntry` unless Y, Z, Y ∨ Z and Y ∧ Z all have entries.
AdditivityCheck check_additivity(const ProbabilityAssignment& p, const Formula& y, const Formula& z);

/// Screen-region probabilities with both slits open (`p_or`) and with one
/// slit at a time (`p1`, `p2`).
struct InterferenceInputs {
  Rational p_or;
  Rational p1;
  Rational p2;

  /// Throws `OutOfRange` if any entry is outside [0, 1].
  static InterferenceInputs make(Rational p_or, Rational p1, Rational p2);

  friend bool operator==(const InterferenceInputs&, const InterferenceInputs&) = default;
};

/// P[R|X1 ∨ X2] - P[R|X1]/2 - P[R|X2]/2.
Rational interference_term(const InterferenceInputs& in);

/// The pattern predicted when each path is taken with weight 1/2.
Rational equal_weight_mixture(const Rational& p1, const Rational& p2);

/// Complex path amplitude with exact rational parts.
struct Amplitude {
  Rational re;
  Rational im;

  Rational norm_squared() const { return re * re + im * im; }
  friend Amplitude operator+(const Amplitude& a, const Amplitude& b) { return {a.re + b.re, a.im + b.im}; }
  friend bool operator==(const Amplitude&, const Amplitude&) = default;
};

/// `re,im` with each part in any `parse_rational` form.
Amplitude parse_amplitude(std::string_view text);
std::string to_string(const Amplitude& a);

/// Re(a1 · conj(a2)).
Rational cross_term(const Amplitude& a1, const Amplitude& a2);

/// p1 = |a1|², p2 = |a2|², p_or = |a1 + a2|² / 2. Throws `OutOfRange` when any
/// of them exceeds 1.
InterferenceInputs amplitude_interference(const Amplitude& a1, const Amplitude& a2);

/// Same, with amplitudes read as relative weights rescaled so that
/// |a1|² + |a2|² = 1. Throws `OutOfRange` if both amplitudes vanish.
InterferenceInputs normalized_amplitude_interference(const Amplitude& a1, const Amplitude& a2);

} // namespace bivalence

#endif // BIVALENCE_PROBABILITY_HPP
