#include <gtest/gtest.h>

#include <set>

#include "bivalence/error.hpp"
#include "bivalence/valuation.hpp"
#include "oracles.hpp"

namespace bivalence {
namespace {

TruthValue tv(long num, long den = 1) { return TruthValue(Rational(num, den)); }
const TruthValue kUndef = TruthValue::undefined();

const Formula kEq1 = parse("(X1 | X2) & !(X1 & X2)");

TEST(TruthValue, RangeAndParsing) {
  EXPECT_THROW(tv(3, 2), Error);
  EXPECT_THROW(tv(-1, 3), Error);
  EXPECT_EQ(parse_truth_value("0.3"), tv(3, 10));
  EXPECT_EQ(parse_truth_value("1/2"), tv(1, 2));
  EXPECT_EQ(parse_truth_value("undefined"), kUndef);
  EXPECT_EQ(to_string(tv(2, 4)), "1/2");
  EXPECT_EQ(to_string(tv(1)), "1");
  EXPECT_EQ(to_string(kUndef), "undefined");
  EXPECT_THROW(kUndef.degree(), Error);
  EXPECT_TRUE(tv(1, 3) < tv(1, 2));
  EXPECT_TRUE(tv(1) < kUndef);
  EXPECT_FALSE(kUndef < tv(0));
}

TEST(Lukasiewicz, Examples) {
  EXPECT_EQ(lukasiewicz_neg(tv(3, 10)), tv(7, 10));
  EXPECT_EQ(lukasiewicz_or(tv(1, 2), tv(1, 2)), tv(1));
  EXPECT_EQ(lukasiewicz_and(tv(1, 2), tv(1, 2)), tv(0));
  EXPECT_EQ(lukasiewicz_or(tv(1), tv(0)), tv(1));
  EXPECT_EQ(lukasiewicz_and(tv(1), tv(1)), tv(1));
  EXPECT_EQ(lukasiewicz_neg(kUndef), kUndef);
}

TEST(Lukasiewicz, UndefinedAbsorbs) {
  for (const auto& t : {tv(0), tv(1, 2), tv(1), kUndef}) {
    EXPECT_EQ(lukasiewicz_or(t, kUndef), kUndef);
    EXPECT_EQ(lukasiewicz_or(kUndef, t), kUndef);
    EXPECT_EQ(lukasiewicz_and(t, kUndef), kUndef);
    EXPECT_EQ(lukasiewicz_and(kUndef, t), kUndef);
  }
}

TEST(Lukasiewicz, ClassicalOnBounds) {
  for (bool s : {false, true}) {
    EXPECT_EQ(lukasiewicz_neg(tv(s)), tv(!s));
    for (bool t : {false, true}) {
      EXPECT_EQ(lukasiewicz_or(tv(s), tv(t)), tv(s || t));
      EXPECT_EQ(lukasiewicz_and(tv(s), tv(t)), tv(s && t));
    }
  }
}

TEST(Lukasiewicz, NegationIsInvolutionOnGrid) {
  for (const auto& t : ValueSystem::infinite(10).admissible()) EXPECT_EQ(lukasiewicz_neg(lukasiewicz_neg(t)), t);
}

TEST(Lukasiewicz, StaysInUnitInterval) {
  const auto grid = ValueSystem::infinite(12).admissible();
  for (const auto& s : grid) {
    for (const auto& t : grid) {
      // Oracle: the degree formulas computed directly on rationals.
      const Rational sum = s.degree() + t.degree();
      EXPECT_EQ(lukasiewicz_or(s, t).degree(), sum > 1 ? Rational(1) : sum);
      EXPECT_EQ(lukasiewicz_and(s, t).degree(), sum - 1 < 0 ? Rational(0) : Rational(sum - 1));
    }
  }
}

TEST(ValueSystem, Grids) {
  EXPECT_EQ(ValueSystem::bivalent().admissible(), (std::vector<TruthValue>{tv(0), tv(1)}));
  EXPECT_EQ(ValueSystem::finite(3).admissible(), (std::vector<TruthValue>{tv(0), tv(1, 2), tv(1)}));
  EXPECT_EQ(ValueSystem::infinite(10).admissible().size(), 11U);
  EXPECT_EQ(ValueSystem::finite(11).admissible(), ValueSystem::infinite(10).admissible());
  EXPECT_TRUE(ValueSystem::infinite(10).admits(tv(3, 10)));
  EXPECT_TRUE(ValueSystem::infinite(10).admits(tv(1, 5)));
  EXPECT_FALSE(ValueSystem::infinite(10).admits(tv(1, 3)));
  EXPECT_FALSE(ValueSystem::bivalent().admits(tv(1, 2)));
  EXPECT_FALSE(ValueSystem::bivalent().admits(kUndef));
  EXPECT_TRUE(ValueSystem::partial().admits(kUndef));
  EXPECT_EQ(ValueSystem::partial().atom_values().size(), 3U);
  EXPECT_THROW(ValueSystem::finite(1), Error);
  EXPECT_THROW(ValueSystem::infinite(0), Error);
}

TEST(TruthFunction, BoundaryConditions) {
  const Lattice l = builtin(Family::Boolean, 2);
  try {
    TruthFunction(l, {tv(1), tv(0), tv(0), tv(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundaryCondition);
  }
  EXPECT_THROW(TruthFunction(l, {tv(0), tv(1)}), Error);
  const auto v = TruthFunction::from_named(l, {{"a", tv(1, 2)}});
  EXPECT_EQ(v(l.element("a")), tv(1, 2));
  EXPECT_EQ(v(l.element("b")), kUndef);
  EXPECT_FALSE(v.admissible_under(ValueSystem::finite(3)));
  EXPECT_TRUE(TruthFunction::from_named(l, {{"a", tv(1, 2)}, {"b", tv(1)}}).admissible_under(ValueSystem::finite(3)));
}

TEST(EvaluateLattice, ExtremeBindingGivesTop) {
  const Lattice l = builtin(Family::Boolean, 2);
  Binding b;
  b.bind("X1", l.bottom());
  b.bind("X2", l.top());
  EXPECT_EQ(reduce(kEq1, b, l), l.top());
  for (const auto& v : enumerate_truth_functions(l, ValueSystem::finite(3))) {
    EXPECT_EQ(evaluate_lattice(kEq1, b, v), tv(1));
  }
}

TEST(EvaluateLattice, AtomIsTruthFunctionValue) {
  const Lattice l = builtin(Family::Chain, 2);
  const auto v = TruthFunction::from_named(l, {{"c1", tv(1, 2)}});
  Binding b;
  b.bind("X1", l.element("c1"));
  EXPECT_EQ(evaluate_lattice(parse("X1"), b, v), tv(1, 2));
}

TEST(EvaluateLattice, ComplementaryAtomsOfBooleanTwo) {
  // Hand-computed: a ⊔ b = 1, a ⊓ b = 0, ~0 = 1, 1 ⊓ 1 = 1.
  const Lattice l = builtin(Family::Boolean, 2);
  const auto b = Binding::from_names(l, {{"X1", "a"}, {"X2", "b"}});
  EXPECT_EQ(reduce(parse("X1 | X2"), b, l), l.top());
  EXPECT_EQ(reduce(parse("X1 & X2"), b, l), l.bottom());
  EXPECT_EQ(reduce(kEq1, b, l), l.top());
  EXPECT_EQ(reduce(parse("X1 ^ X2"), b, l), l.top());
  const auto v = TruthFunction::from_named(l, {{"a", tv(1, 2)}, {"b", tv(1, 2)}});
  EXPECT_EQ(evaluate_lattice(kEq1, b, v), tv(1));
}

TEST(EvaluateLattice, UnboundAtom) {
  const Lattice l = builtin(Family::Boolean, 2);
  const auto b = Binding::from_names(l, {{"X1", "a"}});
  try {
    reduce(kEq1, b, l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnboundAtom);
  }
  EXPECT_THROW(Binding::from_names(l, {{"X1", "nope"}}), Error);
}

TEST(EvaluateDegrees, ExactlyOneCorners) {
  EXPECT_EQ(evaluate_degrees(kEq1, {{"X1", tv(1)}, {"X2", tv(0)}}), tv(1));
  EXPECT_EQ(evaluate_degrees(kEq1, {{"X1", tv(0)}, {"X2", tv(1)}}), tv(1));
  EXPECT_EQ(evaluate_degrees(kEq1, {{"X1", tv(1)}, {"X2", tv(1)}}), tv(0));
  EXPECT_EQ(evaluate_degrees(kEq1, {{"X1", tv(0)}, {"X2", tv(0)}}), tv(0));
}

TEST(EvaluateDegrees, HalfHalf) {
  // and(or(1/2, 1/2), neg(and(1/2, 1/2))) = and(1, neg(0)) = and(1, 1) = 1
  const AtomValues half{{"X1", tv(1, 2)}, {"X2", tv(1, 2)}};
  EXPECT_EQ(evaluate_degrees(kEq1, half), tv(1));
  EXPECT_EQ(evaluate_degrees(parse("X1 ^ X2"), half), tv(1));
}

TEST(EvaluateDegrees, XorIsClassicalOnBounds) {
  const Formula x = parse("X1 ^ X2");
  for (const auto& env : testing::all_assignments({"X1", "X2"})) {
    AtomValues values{{"X1", tv(env.at("X1"))}, {"X2", tv(env.at("X2"))}};
    EXPECT_EQ(evaluate_degrees(x, values), tv(testing::classical(x, env)));
  }
}

TEST(EvaluateDegrees, UndefinedAndUnbound) {
  EXPECT_EQ(evaluate_degrees(kEq1, {{"X1", kUndef}, {"X2", tv(0)}}), kUndef);
  try {
    evaluate_degrees(kEq1, {{"X1", tv(1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnboundAtom);
  }
}

TEST(Supervaluation, Examples) {
  const Lattice l = builtin(Family::Boolean, 2);
  const auto b = Binding::from_names(l, {{"X1", "a"}, {"X2", "b"}});
  EXPECT_EQ(evaluate_supervaluation(parse("X1"), b, l), kUndef);
  EXPECT_EQ(evaluate_supervaluation(kEq1, b, l), tv(1));
  EXPECT_EQ(evaluate_supervaluation(parse("X1 & X2"), b, l), tv(0));
  EXPECT_EQ(evaluate_supervaluation(parse("X1 | !X1"), b, l), tv(1));
}

TEST(Supervaluation, DefinedIffExtreme) {
  testing::FormulaGenerator gen(11, {"X1", "X2"});
  for (const auto& l : {builtin(Family::Boolean, 3), builtin(Family::Lantern, 2), builtin(Family::Chain, 3)}) {
    for (int i = 0; i < 60; ++i) {
      const Formula f = gen(5);
      for (auto y : l.elements()) {
        for (auto z : l.elements()) {
          Binding b;
          b.bind("X1", y);
          b.bind("X2", z);
          const Element e = reduce(f, b, l);
          EXPECT_EQ(evaluate_supervaluation(f, b, l).is_defined(), l.is_extreme(e));
        }
      }
    }
  }
}

TEST(ValuationalAxioms, TwoChainIsClean) {
  const Lattice l = builtin(Family::Chain, 1);
  const auto report = check_valuational_axioms(TruthFunction(l, {tv(0), tv(1)}));
  EXPECT_TRUE(report.violations.empty());
  EXPECT_TRUE(report.clean());
}

TEST(ValuationalAxioms, ChainMidpointDivergesOnlyOnDiagonal) {
  const Lattice l = builtin(Family::Chain, 2);
  const Element m = l.element("c1");
  const auto report = check_valuational_axioms(TruthFunction::from_named(l, {{"c1", tv(1, 2)}}));
  ASSERT_EQ(report.violations.size(), 2U);
  EXPECT_EQ(report.violations[0], (AxiomViolation{AxiomViolation::Kind::Join, m, m, tv(1, 2), tv(1)}));
  EXPECT_EQ(report.violations[1], (AxiomViolation{AxiomViolation::Kind::Meet, m, m, tv(1, 2), tv(0)}));
  EXPECT_EQ(report.skipped, 0U);
}

TEST(ValuationalAxioms, BooleanTwoHalvesDivergeOnDiagonal) {
  const Lattice l = builtin(Family::Boolean, 2);
  const auto report = check_valuational_axioms(TruthFunction::from_named(l, {{"a", tv(1, 2)}, {"b", tv(1, 2)}}));
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& v : report.violations) {
    EXPECT_NE(v.kind, AxiomViolation::Kind::Negation);
    pairs.emplace(l.name(v.y), l.name(v.z));
  }
  EXPECT_EQ(pairs, (std::set<std::pair<std::string, std::string>>{{"a", "a"}, {"b", "b"}}));
  EXPECT_EQ(report.violations.size(), 4U);
}

TEST(ValuationalAxioms, UndefinedPairsAreSkipped) {
  const Lattice l = builtin(Family::Boolean, 2);
  const auto report = check_valuational_axioms(TruthFunction::from_named(l, {}));
  EXPECT_TRUE(report.violations.empty());
  EXPECT_GT(report.skipped, 0U);
  EXPECT_FALSE(report.clean());
}

TEST(ValuationalAxioms, NonReversingInvolutionAlwaysFlagged) {
  // 0 < a < b < 1 with a, b fixed by the involution.
  const Lattice l = build_from_order({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}},
                                     {{"0", "1"}, {"a", "a"}, {"b", "b"}});
  const auto functions = enumerate_truth_functions(l, ValueSystem::finite(3));
  ASSERT_EQ(functions.size(), 9U);
  for (const auto& v : functions) {
    const auto report = check_valuational_axioms(v);
    EXPECT_FALSE(report.violations.empty());
    EXPECT_FALSE(report.involution_order_reversing);
  }
  const auto chain = builtin(Family::Chain, 3);
  EXPECT_TRUE(check_valuational_axioms(enumerate_truth_functions(chain, ValueSystem::bivalent()).front())
                  .involution_order_reversing);
}

TEST(ValuationalAxioms, CleanFunctionsMakeBothReadingsAgree) {
  testing::FormulaGenerator gen(99, {"p", "q", "r"});
  std::vector<Formula> formulas;
  for (int i = 0; i < 40; ++i) formulas.push_back(gen(5));

  std::size_t clean_found = 0;
  for (const auto& l : {builtin(Family::Chain, 1), builtin(Family::Boolean, 2), builtin(Family::Boolean, 3),
                        builtin(Family::Lantern, 2), builtin(Family::Chain, 2)}) {
    for (const auto& v : enumerate_truth_functions(l, ValueSystem::finite(3))) {
      if (!check_valuational_axioms(v).clean()) continue;
      ++clean_found;
      for (const auto& f : formulas) {
        for (auto y : l.elements()) {
          for (auto z : l.elements()) {
            for (auto w : l.elements()) {
              Binding b;
              b.bind("p", y);
              b.bind("q", z);
              b.bind("r", w);
              const AtomValues values{{"p", v(y)}, {"q", v(z)}, {"r", v(w)}};
              ASSERT_EQ(evaluate_lattice(f, b, v), evaluate_degrees(f, values)) << render(f);
            }
          }
        }
      }
    }
  }
  EXPECT_GE(clean_found, 3U);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_truth_functions(builtin(Family::Chain, 1), ValueSystem::bivalent()).size(), 1U);
  EXPECT_EQ(enumerate_truth_functions(builtin(Family::Boolean, 2), ValueSystem::bivalent()).size(), 4U);
  EXPECT_EQ(enumerate_truth_functions(builtin(Family::Boolean, 2), ValueSystem::finite(3)).size(), 9U);
  EXPECT_EQ(enumerate_truth_functions(builtin(Family::Boolean, 3), ValueSystem::partial()).size(), 1U);
}

TEST(Enumerate, OrderIsDeclarationMajorValuesAscending) {
  const Lattice l = builtin(Family::Boolean, 2);
  const auto all = enumerate_truth_functions(l, ValueSystem::bivalent());
  const Element a = l.element("a");
  const Element b = l.element("b");
  const std::vector<std::pair<int, int>> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i](a), tv(expected[i].first));
    EXPECT_EQ(all[i](b), tv(expected[i].second));
  }
}

TEST(Enumerate, SpaceInvariants) {
  for (const auto& l : {builtin(Family::Boolean, 2), builtin(Family::Lantern, 2), builtin(Family::Chain, 4)}) {
    for (const auto& system : {ValueSystem::bivalent(), ValueSystem::finite(3), ValueSystem::finite(4)}) {
      TruthFunctionSpace space(l, system);
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < space.free_elements().size(); ++i) expected *= system.admissible().size();
      ASSERT_EQ(space.size(), expected);
      std::set<std::vector<TruthValue>> seen;
      std::uint64_t index = 0;
      space.for_each([&](const TruthFunction& v) {
        EXPECT_TRUE(v.admissible_under(system));
        EXPECT_EQ(v(l.bottom()), tv(0));
        EXPECT_EQ(v(l.top()), tv(1));
        EXPECT_EQ(space.at(index++), v);
        seen.insert(v.values());
      });
      EXPECT_EQ(seen.size(), expected);
    }
  }
}

TEST(Enumerate, Frozen) {
  const Lattice l = builtin(Family::Boolean, 2);
  const auto fs = enumerate_truth_functions(l, ValueSystem::finite(3), {{l.element("a"), tv(1, 2)}});
  ASSERT_EQ(fs.size(), 3U);
  for (const auto& v : fs) EXPECT_EQ(v(l.element("a")), tv(1, 2));

  auto infeasible = [&](std::map<Element, TruthValue> frozen) {
    try {
      TruthFunctionSpace(l, ValueSystem::bivalent(), std::move(frozen));
    } catch (const Error& e) {
      return e.code() == Errc::InfeasibleFrozen;
    }
    return false;
  };
  EXPECT_TRUE(infeasible({{l.bottom(), tv(1)}}));
  EXPECT_TRUE(infeasible({{l.top(), tv(0)}}));
  EXPECT_TRUE(infeasible({{l.element("a"), tv(1, 2)}}));
  EXPECT_THROW(TruthFunctionSpace(l, ValueSystem::bivalent()).at(4), Error);
}

TEST(Enumerate, OverflowIsReported) {
  TruthFunctionSpace space(builtin(Family::Boolean, 7), ValueSystem::bivalent());
  EXPECT_THROW((void)space.size(), Error);
}

} // namespace
} // namespace bivalence
