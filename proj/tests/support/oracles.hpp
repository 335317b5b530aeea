// Independent reference computations used only by the tests. Nothing here
// calls into the evaluation paths it is used to check.
#ifndef BIVALENCE_TESTS_ORACLES_HPP
#define BIVALENCE_TESTS_ORACLES_HPP

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bivalence/formula.hpp"
#include "bivalence/lattice.hpp"

namespace bivalence::testing {

/// Classical two-valued semantics, xor evaluated natively.
inline bool classical(const Formula& f, const std::map<std::string, bool>& env) {
  switch (f.kind()) {
  case Connective::Atom: return env.at(f.name());
  case Connective::Not: return !classical(f.left(), env);
  case Connective::And: return classical(f.left(), env) && classical(f.right(), env);
  case Connective::Or: return classical(f.left(), env) || classical(f.right(), env);
  case Connective::Xor: return classical(f.left(), env) != classical(f.right(), env);
  }
  return false;
}

/// Every assignment of the given atoms, first atom most significant.
inline std::vector<std::map<std::string, bool>> all_assignments(const std::vector<std::string>& names) {
  std::vector<std::map<std::string, bool>> out;
  const std::size_t n = names.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::map<std::string, bool> env;
    for (std::size_t i = 0; i < n; ++i) env[names[i]] = (mask >> (n - 1 - i)) & 1U;
    out.push_back(std::move(env));
  }
  return out;
}

/// Least upper bound by definition over the order relation alone: an upper
/// bound below every other upper bound.
inline std::optional<std::uint32_t> brute_lub(const LatticeTables& t, std::uint32_t y, std::uint32_t z) {
  const auto n = static_cast<std::uint32_t>(t.size());
  for (std::uint32_t u = 0; u < n; ++u) {
    if (!t.less_equal(y, u) || !t.less_equal(z, u)) continue;
    bool least = true;
    for (std::uint32_t w = 0; w < n && least; ++w) {
      if (t.less_equal(y, w) && t.less_equal(z, w) && !t.less_equal(u, w)) least = false;
    }
    if (least) return u;
  }
  return std::nullopt;
}

inline std::optional<std::uint32_t> brute_glb(const LatticeTables& t, std::uint32_t y, std::uint32_t z) {
  const auto n = static_cast<std::uint32_t>(t.size());
  for (std::uint32_t u = 0; u < n; ++u) {
    if (!t.less_equal(u, y) || !t.less_equal(u, z)) continue;
    bool greatest = true;
    for (std::uint32_t w = 0; w < n && greatest; ++w) {
      if (t.less_equal(w, y) && t.less_equal(w, z) && !t.less_equal(w, u)) greatest = false;
    }
    if (greatest) return u;
  }
  return std::nullopt;
}

/// Random formulas over a fixed atom pool, depth at most `max_depth`.
class FormulaGenerator {
public:
  FormulaGenerator(std::uint32_t seed, std::vector<std::string> pool) : rng_(seed), pool_(std::move(pool)) {}

  Formula operator()(int max_depth) {
    std::uniform_int_distribution<int> pick(0, max_depth <= 1 ? 0 : 4);
    const int choice = pick(rng_);
    if (choice == 0) {
      std::uniform_int_distribution<std::size_t> atom(0, pool_.size() - 1);
      return Formula::atom(pool_[atom(rng_)]);
    }
    if (choice == 1) return Formula::negation((*this)(max_depth - 1));
    Formula l = (*this)(max_depth - 1);
    Formula r = (*this)(max_depth - 1);
    if (choice == 2) return Formula::conjunction(l, r);
    if (choice == 3) return Formula::disjunction(l, r);
    return Formula::exclusive(l, r);
  }

  std::mt19937& rng() { return rng_; }

private:
  std::mt19937 rng_;
  std::vector<std::string> pool_;
};

} // namespace bivalence::testing

#endif // BIVALENCE_TESTS_ORACLES_HPP
