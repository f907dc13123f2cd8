#include "doctest.h"

#include "oracles.hpp"
#include "pgroupoid/adapters.hpp"
#include "pgroupoid/order.hpp"

using namespace pg;

namespace {

using Pairs = std::vector<std::pair<ElementId, ElementId>>;

ElementSet ids(const FiniteGroupoid& g, std::initializer_list<const char*> names) {
  return g.indices_of(std::vector<ElementId>(names.begin(), names.end()));
}

oracle::NameSet name_set(const FiniteGroupoid& g, const ElementSet& s) {
  auto n = g.names(s);
  return {n.begin(), n.end()};
}

bool leq_by_table(const FiniteGroupoid& g, OrderVariant v, Index p, Index q) {
  auto pq = g.compose(p, q);
  auto qp = g.compose(q, p);
  switch (v) {
    case OrderVariant::RightLeq: return pq == q;
    case OrderVariant::LeftLeq: return qp == q;
    case OrderVariant::Leq: return pq == q && qp == q;
  }
  return false;
}

// Random reflexive groupoid that satisfies I and CA: try until one does.
FiniteGroupoid random_i_ca(std::mt19937& rng, std::size_t n, bool symmetric) {
  while (true) {
    auto t = oracle::random_table(rng, n, 0.35, true);
    for (const auto& x : t.elements) t.op[{x, x}] = x;
    if (symmetric && !oracle::law_S(t)) continue;
    if (oracle::law_CA(t)) return oracle::to_groupoid(t);
  }
}

}  // namespace

TEST_CASE("natural orders on P1") {
  auto p1 = builtin("P1");
  auto right = OrderRelation::natural(p1, OrderVariant::RightLeq);
  CHECK(right.named_pairs() == Pairs{{"a", "a"}, {"a", "b"}, {"b", "b"}, {"b", "c"}, {"c", "c"}});
  auto leq = OrderRelation::natural(p1, OrderVariant::Leq);
  CHECK(leq.named_pairs() == Pairs{{"a", "a"}, {"b", "b"}, {"c", "c"}});

  auto audit = order_law_audit(right);
  CHECK(audit.reflexive.holds);
  CHECK(audit.antisymmetric.holds);
  REQUIRE_FALSE(audit.transitive.holds);
  CHECK(audit.transitive.witness->elements == std::vector<ElementId>{"a", "b", "c"});

  CHECK(maximal_elements(p1, OrderVariant::RightLeq) == ids(p1, {"c"}));
}

TEST_CASE("natural orders agree with the defining equations") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::to_groupoid(oracle::random_table(rng, 4, 0.5));
    for (auto v : {OrderVariant::LeftLeq, OrderVariant::RightLeq, OrderVariant::Leq}) {
      auto rel = OrderRelation::natural(g, v);
      for (Index p = 0; p < g.size(); ++p)
        for (Index q = 0; q < g.size(); ++q) CHECK(rel.contains(p, q) == leq_by_table(g, v, p, q));
    }
  }
}

TEST_CASE("singleton and empty relations") {
  auto unit = builtin("unit");
  for (auto v : {OrderVariant::LeftLeq, OrderVariant::RightLeq, OrderVariant::Leq}) {
    CHECK(OrderRelation::natural(unit, v).named_pairs() == Pairs{{"e", "e"}});
  }
  auto empty = OrderRelation::from_pairs(builtin("P1"), {});
  auto audit = order_law_audit(empty);
  REQUIRE_FALSE(audit.reflexive.holds);
  CHECK(audit.reflexive.witness->elements == std::vector<ElementId>{"a"});
  CHECK_THROWS_AS(OrderRelation::from_pairs(unit, {{"e", "zz"}}), Error);
}

TEST_CASE("maximal and full elements") {
  auto max10 = builtin("maxN");
  CHECK(maximal_elements(max10, OrderVariant::Leq) == ids(max10, {"9"}));
  CHECK(full_elements(max10, Side::Both) == ids(max10, {"9"}));

  auto two = builtin("twoblock");
  CHECK(maximal_elements(two, OrderVariant::Leq) == ElementSet{0, 1});
  CHECK(full_elements(two, Side::Both) == ElementSet{0, 1});
  CHECK(full_elements(builtin("unit"), Side::Both) == ElementSet{0});

  auto q2 = builtin("Q2");
  auto right_full = full_elements(q2, Side::Right);
  CHECK(std::find(right_full.begin(), right_full.end(), q2.index_of("a")) == right_full.end());
  CHECK(name_set(q2, full_elements(q2, Side::Both)) == oracle::full(oracle::from(q2)));
}

TEST_CASE("full and maximal elements match the oracle") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    auto t = oracle::random_table(rng, 4, 0.4, trial % 2 == 0);
    auto g = oracle::to_groupoid(t);
    CHECK(name_set(g, full_elements(g, Side::Both)) == oracle::full(t));
    CHECK(name_set(g, maximal_elements(g, OrderVariant::Leq)) == oracle::maximal(t));
  }
}

TEST_CASE("domination") {
  auto max10 = builtin("maxN");
  CHECK(dominates(max10, ids(max10, {"3", "5"}), ids(max10, {"9"})));
  CHECK_FALSE(dominates(max10, ids(max10, {"9"}), ids(max10, {"3", "5"})));
  CHECK(dominates(max10, ids(max10, {"2", "4"}), ids(max10, {"2", "4"})));
  auto p1 = builtin("P1");
  CHECK_FALSE(dominates(p1, ids(p1, {"a"}), ids(p1, {"c"})));
  CHECK(dominates(p1, {}, ids(p1, {"c"})));
}

TEST_CASE("domination is reflexive under I and transitive under CA") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_i_ca(rng, 4, false);
    std::uniform_int_distribution<Index> pick(0, 3);
    ElementSet a = make_set({pick(rng), pick(rng)});
    ElementSet b = make_set({pick(rng), pick(rng)});
    ElementSet c = make_set({pick(rng), pick(rng)});
    CHECK(dominates(g, a, a));
    if (dominates(g, a, b) && dominates(g, b, c)) CHECK(dominates(g, a, c));
  }
}

TEST_CASE("order axioms") {
  auto max10 = builtin("maxN");
  auto leq = OrderRelation::natural(max10, OrderVariant::Leq);
  CHECK(check_order_axioms(max10, leq).all_hold());

  auto p1 = builtin("P1");
  auto ax = check_order_axioms(p1, OrderRelation::natural(p1, OrderVariant::Leq));
  REQUIRE_FALSE(ax.lu.holds);
  CHECK(ax.lu.witness->elements.front() == "a");

  auto unit = builtin("unit");
  CHECK(check_order_axioms(unit, OrderRelation::natural(unit, OrderVariant::Leq)).all_hold());

  try {
    check_order_axioms(p1, OrderRelation::natural(p1, OrderVariant::RightLeq));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPartialOrder);
  }
}

TEST_CASE("characterization on a total max order") {
  auto max10 = builtin("maxN");
  auto natural = order_characterization_check(max10, OrderRelation::natural(max10, OrderVariant::Leq));
  CHECK(natural.order_side);
  CHECK(natural.algebra_side);
  CHECK(natural.rel_is_natural);
  CHECK(natural.verdict.holds);

  OrderRelation equality(max10.elements(), OrderRelation::Provenance::UserSupplied, "equality");
  for (Index i = 0; i < max10.size(); ++i) equality.add(i, i);
  auto eq = order_characterization_check(max10, equality);
  CHECK_FALSE(eq.order_side);
  CHECK_FALSE(eq.algebra_side);
  CHECK_FALSE(eq.rel_is_natural);
  CHECK(eq.order_discrepancy.has_value());
  CHECK(eq.verdict.holds);
}

TEST_CASE("characterization preconditions") {
  auto q2 = builtin("Q2");
  OrderRelation eq(q2.elements(), OrderRelation::Provenance::UserSupplied, "equality");
  for (Index i = 0; i < q2.size(); ++i) eq.add(i, i);
  try {
    order_characterization_check(q2, eq);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainNotReflexive);
  }
}

// Loops plus 2*1 = 1: I, weak C, A and R hold and the relation is the
// natural order, yet LU fails because 2 is not below 2*1 = 1 (1*2 is
// undefined). The two sides of the equivalence disagree here.
TEST_CASE("characterization counterexample without a symmetric domain") {
  auto g = FiniteGroupoid::from_names({"0", "1", "2"}, {{"0", "0", "0"}, {"1", "1", "1"}, {"2", "2", "2"}, {"2", "1", "1"}});
  auto r = order_characterization_check(g, OrderRelation::natural(g, OrderVariant::Leq));
  CHECK(r.algebra_side);
  CHECK(r.rel_is_natural);
  CHECK_FALSE(r.order_side);
  REQUIRE_FALSE(r.axioms.lu.holds);
  CHECK(r.axioms.lu.witness->elements == std::vector<ElementId>{"2", "1"});
  CHECK_FALSE(r.verdict.holds);
  CHECK(r.verdict.note == "algebraic side holds but LU or CP fails");
}

TEST_CASE("LU and CP imply the algebraic side on every reflexive 3-element groupoid") {
  int valid = 0, order_side = 0, algebra_only = 0;
  oracle::for_each_reflexive_table3([&](const oracle::Table& t) {
    auto g = oracle::to_groupoid(t);
    auto rel = OrderRelation::natural(g, OrderVariant::Leq);
    if (!order_law_audit(rel).is_partial_order()) return;
    ++valid;
    auto r = order_characterization_check(g, rel);
    if (r.order_side) {
      ++order_side;
      CHECK(r.algebra_side);
    } else if (r.algebra_side) {
      ++algebra_only;
    }
  });
  CHECK(valid == 4010);
  CHECK(order_side == 25);
  CHECK(algebra_only == 156);
}

TEST_CASE("natural order laws") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::to_groupoid(oracle::random_table(rng, 4, 0.5));
    CHECK(order_law_audit(OrderRelation::natural(g, OrderVariant::Leq)).antisymmetric.holds);
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_i_ca(rng, 4, false);
    for (auto v : {OrderVariant::LeftLeq, OrderVariant::RightLeq, OrderVariant::Leq}) {
      auto audit = order_law_audit(OrderRelation::natural(g, v));
      CHECK(audit.reflexive.holds);
      CHECK(audit.transitive.holds);
    }
  }
}

TEST_CASE("compositions sit above their factors") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_i_ca(rng, 4, false);
    auto left = OrderRelation::natural(g, OrderVariant::LeftLeq);
    auto right = OrderRelation::natural(g, OrderVariant::RightLeq);
    for (const auto& c : g.compositions()) {
      CHECK(left.contains(c.right, c.result));
      CHECK(right.contains(c.left, c.result));
    }
  }
}

TEST_CASE("maximal elements agree across variants under S, I and CA") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_i_ca(rng, 4, true);
    auto m = maximal_elements(g, OrderVariant::Leq);
    CHECK(maximal_elements(g, OrderVariant::LeftLeq) == m);
    CHECK(maximal_elements(g, OrderVariant::RightLeq) == m);
  }
}

TEST_CASE("full elements equal maximal elements") {
  std::mt19937 rng(61);
  SUBCASE("one-sided, under I, CA and weak C") {
    int seen = 0;
    while (seen < 150) {
      auto g = random_i_ca(rng, 4, false);
      if (!check_property(g, PropertyId::C).holds) continue;
      ++seen;
      CHECK(full_elements(g, Side::Left) == maximal_elements(g, OrderVariant::LeftLeq));
      CHECK(full_elements(g, Side::Right) == maximal_elements(g, OrderVariant::RightLeq));
    }
  }
  SUBCASE("two-sided, under I, CA and SC") {
    int seen = 0;
    while (seen < 150) {
      auto g = random_i_ca(rng, 4, true);
      if (!check_property(g, PropertyId::SC).holds) continue;
      ++seen;
      CHECK(full_elements(g, Side::Both) == maximal_elements(g, OrderVariant::Leq));
    }
  }
  SUBCASE("I and CA alone are not enough") {
    // Left-zero band: pq = p, qp = q. Neither element is left full, yet both
    // are left maximal since p <=l q and q <=l p.
    auto g = builtin("leftzero2");
    REQUIRE(check_property(g, PropertyId::I).holds);
    REQUIRE(check_property(g, PropertyId::CA).holds);
    REQUIRE(check_property(g, PropertyId::S).holds);
    CHECK(full_elements(g, Side::Left).empty());
    CHECK(maximal_elements(g, OrderVariant::LeftLeq) == ids(g, {"p", "q"}));
    CHECK(full_elements(g, Side::Both).empty());
    CHECK(maximal_elements(g, OrderVariant::Leq) == ids(g, {"p", "q"}));
    CHECK(full_elements(g, Side::Right) == maximal_elements(g, OrderVariant::RightLeq));
  }
  SUBCASE("two-sided fails without S") {
    // aa = a, bb = b, ab = b: b is the only full element, but nothing lies
    // strictly above a under <= since ba is undefined.
    auto g = FiniteGroupoid::from_names({"a", "b"}, {{"a", "a", "a"}, {"b", "b", "b"}, {"a", "b", "b"}});
    CHECK(full_elements(g, Side::Both) == ids(g, {"b"}));
    CHECK(maximal_elements(g, OrderVariant::Leq) == ids(g, {"a", "b"}));
    CHECK(full_elements(g, Side::Left) == maximal_elements(g, OrderVariant::LeftLeq));
    CHECK(full_elements(g, Side::Right) == maximal_elements(g, OrderVariant::RightLeq));
  }
}
