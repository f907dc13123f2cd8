// Acceptance suite: one PASS/FAIL line per criterion, followed by indented
// detail lines. Exit status is the number of failing criteria.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pgroupoid/adapters.hpp"
#include "pgroupoid/closure.hpp"
#include "pgroupoid/domain_graph.hpp"
#include "pgroupoid/io.hpp"
#include "pgroupoid/order.hpp"
#include "pgroupoid/properties.hpp"
#include "pgroupoid/quotient.hpp"

using namespace pg;

namespace {

struct Fixture {
  std::string name;
  FiniteGroupoid g;
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string join(const std::vector<ElementId>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out + "}";
}

// Every builtin at its default size plus every fixture file whose finite
// view closes within the default budget.
std::vector<Fixture> all_fixtures(std::vector<std::string>& skipped) {
  std::vector<Fixture> out;
  for (const auto& info : builtin_fixtures()) out.push_back({info.name, builtin(info.name)});
  for (const char* file : {"p1", "q2", "maxN", "chainA", "uchain", "records", "path4", "twoblock", "leftzero2",
                           "p1sym", "max4_order"}) {
    const std::string path = std::string(PGROUPOID_FIXTURE_DIR) + "/" + file + ".json";
    try {
      auto src = load_source_file(path);
      out.push_back({std::string(file) + ".json", finite_view(src, src.instance, Budget{})});
    } catch (const Error& e) {
      skipped.push_back(std::string(file) + ".json (" + std::string(to_string(e.kind())) + ")");
    }
  }
  return out;
}

bool has(const FiniteGroupoid& g, PropertyId p, int bound = 3) { return check_property(g, p, CheckConfig{bound}).holds; }

bool reflexive_domain(const FiniteGroupoid& g) {
  for (Index i = 0; i < g.size(); ++i)
    if (!g.defined(i, i)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  auto expect = [&](const std::string& name, const FiniteGroupoid& g, PropertyId p, bool holds,
                    const std::vector<ElementId>& witness = {}) {
    auto v = check_property(g, p);
    if (v.holds != holds) {
      o.fail(name + " " + std::string(to_string(p)) + ": expected " + (holds ? "holds" : "fails"));
      return;
    }
    if (!witness.empty() && (!v.witness || v.witness->elements != witness)) {
      o.fail(name + " " + std::string(to_string(p)) + ": witness " +
             (v.witness ? format_tuple(v.witness->elements) : "none") + ", expected " + format_tuple(witness));
    }
  };
  auto p1 = builtin("P1");
  expect("P1", p1, PropertyId::I, true);
  expect("P1", p1, PropertyId::A, true);
  expect("P1", p1, PropertyId::CA, false, {"a", "b", "c"});
  expect("P1", p1, PropertyId::SA, false);
  auto q2 = builtin("Q2");
  expect("Q2", q2, PropertyId::I, false);
  // The commutativity Q2 is said to break is the strong form (S and C).
  expect("Q2", q2, PropertyId::SC, false);
  expect("Q2", q2, PropertyId::A, false, {"a", "b", "c"});
  expect("Q2", q2, PropertyId::R, false);
  o.note("Q2 weak C (both orders defined and different) " +
         std::string(has(q2, PropertyId::C) ? "holds vacuously" : "fails"));
  auto max10 = builtin("maxN");
  for (auto p : {PropertyId::I, PropertyId::SC, PropertyId::A, PropertyId::CA, PropertyId::SA, PropertyId::R})
    expect("maxN", max10, p, true);
  return o;
}

Outcome criterion2(const std::vector<Fixture>& fixtures) {
  Outcome o;
  const std::vector<std::string> keys{"name", "phone", "mail"};
  auto rg = record_groupoid({keys});
  std::mt19937 rng(20240601);
  int compared = 0, guarded = 0, attempts = 0;
  while (compared < 200 && attempts < 5000) {
    ++attempts;
    std::uniform_int_distribution<std::size_t> size(1, 8);
    auto recs = oracle::random_records(rng, size(rng), 8);
    std::vector<ElementId> ids;
    for (const auto& r : recs) ids.push_back(oracle::to_json(r));
    auto inst = make_instance(rg, ids);
    auto c = merge_closure(rg, inst);
    if (!c.closed()) {
      o.fail("record closure did not close");
      continue;
    }
    auto maximal = er_maximal(c).resolved;
    auto full = er_full(c).resolved;
    auto swoosh = r_swoosh(rg, inst, 100000).resolved;
    if (full != maximal || swoosh != maximal) {
      o.fail("records: maximal " + join(maximal) + " full " + join(full) + " rswoosh " + join(swoosh));
    }
    if (c.carrier.size() > kBruteforceLimit) {
      ++guarded;
      continue;
    }
    if (er_bruteforce(c).resolved != maximal) o.fail("records: bruteforce differs on " + join(inst.records));
    ++compared;
  }
  o.note(std::to_string(compared) + " record instances compared by all four methods; " + std::to_string(guarded) +
         " larger closures compared without the bruteforce oracle");
  if (compared < 200) o.fail("fewer than 200 record instances within the bruteforce limit");

  int fixtures_seen = 0, full_only = 0;
  for (const auto& f : fixtures) {
    if (!has(f.g, PropertyId::I) || !has(f.g, PropertyId::CA)) continue;
    ++fixtures_seen;
    auto c = merge_closure(f.g, make_instance(f.g, f.g.elements()));
    auto maximal = er_maximal(c).resolved;
    auto full = er_full(c).resolved;
    std::string line = f.name + ": maximal " + join(maximal) + ", full " + join(full);
    bool ok = full == maximal;
    if (c.carrier.size() <= kBruteforceLimit) {
      auto brute = er_bruteforce(c).resolved;
      line += ", bruteforce " + join(brute);
      ok = ok && brute == maximal;
    }
    if (property_report(c.groupoid).is_icar) {
      auto bb = as_black_box(f.g);
      auto swoosh = r_swoosh(bb, make_instance(bb, f.g.elements()), 100000).resolved;
      line += ", rswoosh " + join(swoosh);
      ok = ok && swoosh == maximal;
    } else {
      line += ", rswoosh not applicable (not ICAR)";
    }
    if (!ok) {
      o.fail(line + (has(f.g, PropertyId::SC) ? "; SC holds" : "; SC fails"));
      if (full != maximal) ++full_only;
    }
  }
  o.note(std::to_string(fixtures_seen) + " fixtures satisfy I and CA");
  if (full_only > 0)
    o.note(std::to_string(full_only) + " failing fixture(s) have maximal = bruteforce; the full-element set is "
           "the one that differs. Full and maximal elements coincide under I, CA and SC but not under I and CA");
  return o;
}

Outcome criterion3(const std::vector<Fixture>& fixtures) {
  Outcome o;
  int seen = 0;
  for (const auto& f : fixtures) {
    if (!has(f.g, PropertyId::I) || !has(f.g, PropertyId::CA)) continue;
    ++seen;
    auto audit = order_law_audit(OrderRelation::natural(f.g, OrderVariant::Leq));
    if (!audit.is_partial_order()) o.fail(f.name + ": natural order fails an order law");
  }
  auto p1 = builtin("P1");
  auto audit = order_law_audit(OrderRelation::natural(p1, OrderVariant::RightLeq));
  if (audit.transitive.holds || !audit.transitive.witness ||
      audit.transitive.witness->elements != std::vector<ElementId>{"a", "b", "c"}) {
    o.fail("P1 right order: expected transitivity failure at (a,b,c)");
  }
  o.note(std::to_string(seen) + " I+CA fixtures audited; P1 right order fails transitivity at (a,b,c)");
  return o;
}

Outcome criterion4(const std::vector<Fixture>& fixtures) {
  Outcome o;
  std::mt19937 rng(4242);
  int tested = 0, disagree = 0, order_only = 0, algebra_only = 0;
  std::string first;
  auto run = [&](const std::string& label, const FiniteGroupoid& g, const OrderRelation& rel) {
    auto r = order_characterization_check(g, rel);
    ++tested;
    if (r.verdict.holds) return;
    ++disagree;
    (r.order_side ? order_only : algebra_only)++;
    if (first.empty()) {
      std::ostringstream ss;
      ss << label << " " << r.verdict.note << ": table";
      for (const auto& c : g.compositions()) ss << " " << g.name(c.left) << g.name(c.right) << "=" << g.name(c.result);
      if (!r.axioms.lu.holds && r.axioms.lu.witness) ss << "; LU witness " << format_tuple(r.axioms.lu.witness->elements);
      first = ss.str();
    }
  };
  int random_cases = 0;
  while (random_cases < 400) {
    auto g = oracle::to_groupoid(oracle::random_table(rng, 3, 0.5, true));
    auto rel = OrderRelation::natural(g, OrderVariant::Leq);
    if (!order_law_audit(rel).is_partial_order()) continue;
    ++random_cases;
    run("random", g, rel);
  }
  int fixture_cases = 0;
  for (const auto& f : fixtures) {
    if (!reflexive_domain(f.g)) continue;
    auto rel = OrderRelation::natural(f.g, OrderVariant::Leq);
    if (!order_law_audit(rel).is_partial_order()) continue;
    ++fixture_cases;
    run(f.name, f.g, rel);
  }
  auto src = load_source_file(std::string(PGROUPOID_FIXTURE_DIR) + "/max4_order.json");
  auto user = OrderRelation::from_pairs(*src.finite, *src.order);
  run("max4_order.json (user order)", *src.finite, user);
  ++fixture_cases;

  o.note(std::to_string(random_cases) + " random reflexive 3-element cases and " + std::to_string(fixture_cases) +
         " fixture cases");

  const int tested_before = tested, disagree_before = disagree, order_only_before = order_only;
  oracle::for_each_reflexive_table3([&](const oracle::Table& t) {
    auto g = oracle::to_groupoid(t);
    auto rel = OrderRelation::natural(g, OrderVariant::Leq);
    if (order_law_audit(rel).is_partial_order()) run("exhaustive", g, rel);
  });
  o.note("exhaustive pass over every reflexive 3-element groupoid: " + std::to_string(tested - tested_before) +
         " with a valid natural order, " + std::to_string(disagree - disagree_before) + " counterexamples, " +
         std::to_string(order_only - order_only_before) + " with LU and CP only");
  if (disagree > 0) {
    o.fail(std::to_string(disagree) + " of " + std::to_string(tested) + " cases violate the biconditional (" +
           std::to_string(algebra_only) + " with the algebraic side only, " + std::to_string(order_only) +
           " with LU and CP only)");
    o.note("first: " + first);
    o.note("with weak commutativity, LU fails whenever xy is defined but yx is not, yet I, C, A, R can all hold; "
           "the algebraic side does not imply LU without a symmetric domain");
  }
  return o;
}

Outcome criterion5(const std::vector<Fixture>& fixtures) {
  Outcome o;
  std::size_t checked = 0;
  auto audit = [&](const std::string& label, const FiniteGroupoid& g) {
    auto r = property_report(g);
    ++checked;
    for (const auto& v : implication_audit(r)) o.fail(label + ": " + v);
  };
  for (const auto& f : fixtures) audit(f.name, f.g);
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    auto g = oracle::to_groupoid(oracle::random_table(rng, 4, 0.15 + 0.1 * (i % 8), i % 2 == 0));
    audit("random #" + std::to_string(i), g);
  }
  o.note(std::to_string(checked) + " groupoids audited");
  return o;
}

Outcome criterion6(const std::vector<Fixture>& fixtures) {
  Outcome o;
  auto unit = std::make_shared<const FiniteGroupoid>(builtin("unit"));
  int maps = 0;
  auto check = [&](const std::string& label, const Homomorphism& h) {
    auto v = check_homomorphism(h);
    if (!v.holds) {
      o.fail(label + ": not a homomorphism");
      return;
    }
    ++maps;
    auto img = image(h);
    for (auto p : kAllProperties) {
      if (has(*h.source, p) && !has(img, p)) o.fail(label + ": " + std::string(to_string(p)) + " lost in the image");
    }
  };
  int quotients = 0;
  for (const auto& f : fixtures) {
    auto g = std::make_shared<const FiniteGroupoid>(f.g);
    check(f.name + " identity", Homomorphism::identity(g));
    check(f.name + " constant", Homomorphism::constant(g, unit, 0));
    try {
      auto q = quotient(f.g);
      ++quotients;
      check(f.name + " quotient projection", q.projection);
    } catch (const Error&) {
      // No quotient for this fixture; criterion 7 reports which.
    }
  }
  o.note(std::to_string(maps) + " homomorphisms checked, " + std::to_string(quotients) + " of them quotient projections");
  return o;
}

Outcome criterion7(const std::vector<Fixture>& fixtures) {
  Outcome o;
  int seen = 0;
  for (const auto& f : fixtures) {
    if (!has(f.g, PropertyId::NR)) continue;
    ++seen;
    auto audit = audit_sim_c(f.g);
    if (!audit.all_hold()) {
      std::string law = !audit.reflexive.holds ? "reflexivity" : !audit.symmetric.holds ? "symmetry"
                        : !audit.transitive.holds ? "transitivity" : "congruence";
      const auto& v = !audit.reflexive.holds ? audit.reflexive : !audit.symmetric.holds ? audit.symmetric
                      : !audit.transitive.holds ? audit.transitive : audit.congruence;
      o.fail(f.name + ": ~c fails " + law + (v.witness ? " at " + format_tuple(v.witness->elements) : "") +
             (has(f.g, PropertyId::CA) ? "" : " (CA fails here)"));
      continue;
    }
    auto q = quotient(f.g);
    if (!q.projection_verdict.holds) o.fail(f.name + ": projection is not a surjective homomorphism");
    if (has(f.g, PropertyId::S) && (!q.commutativity || !q.commutativity->holds))
      o.fail(f.name + ": quotient of a symmetric source is not commutative");
    if (!quotient_idempotence_check(f.g).holds) o.fail(f.name + ": Q(Q) differs from Q");
    for (const auto& cls : q.classes.classes) {
      auto v = class_semigroup_check(f.g, cls);
      if (!v.holds) o.fail(f.name + ": class " + join(f.g.names(cls)) + " is not a semigroup: " + v.note);
    }
  }
  o.note(std::to_string(seen) + " NR fixtures (words up to length 3)");
  return o;
}

Outcome criterion8(const std::vector<Fixture>& fixtures) {
  Outcome o;
  int runs = 0;
  for (const auto& f : fixtures) {
    auto t = oracle::from(f.g);
    std::vector<std::vector<ElementId>> seeds{f.g.elements()};
    for (const auto& e : f.g.elements()) seeds.push_back({e});
    for (std::size_t i = 0; i + 1 < f.g.size(); ++i) seeds.push_back({f.g.name(i), f.g.name(i + 1)});
    for (const auto& seed : seeds) {
      auto c = merge_closure(f.g, make_instance(f.g, seed));
      auto want = oracle::naive_closure([&](const auto& x, const auto& y) { return t.at(x, y); },
                                        oracle::NameSet(seed.begin(), seed.end()));
      ++runs;
      if (!c.closed() || oracle::NameSet(c.carrier.begin(), c.carrier.end()) != want)
        o.fail(f.name + ": closure of " + join(seed) + " differs from the naive fixed point");
    }
  }
  // Black-box adapters against the same loop over their compose.
  const std::vector<std::string> dirs{"records", "path4"};
  for (const auto& name : dirs) {
    auto src = load_source_file(std::string(PGROUPOID_FIXTURE_DIR) + "/" + name + ".json");
    auto c = merge_closure(src.black_box, make_instance(src.black_box, src.instance));
    auto want = oracle::naive_closure([&](const auto& x, const auto& y) { return src.black_box.compose(x, y); },
                                      oracle::NameSet(src.instance.begin(), src.instance.end()));
    ++runs;
    if (!c.closed() || oracle::NameSet(c.carrier.begin(), c.carrier.end()) != want)
      o.fail(name + ": black-box closure differs from the naive fixed point");
  }
  auto chain = chain_groupoid(false);
  auto c = merge_closure(chain, make_instance(chain, {"a1", "a2"}), Budget{10, 1000});
  if (c.status != ClosureStatus::BudgetExhausted) o.fail("chainA from {a1,a2} closed under a budget of 10");
  o.note(std::to_string(runs) + " closures compared; chainA {a1,a2} with budget 10 is budget_exhausted");
  return o;
}

Outcome criterion9(const std::vector<Fixture>& fixtures) {
  Outcome o;
  int symmetric = 0;
  for (const auto& f : fixtures) {
    if (has(f.g, PropertyId::S)) {
      ++symmetric;
      auto t = is_total(f.g);
      // Complete: every pair of distinct nodes joined both ways.
      bool complete = true;
      for (Index x = 0; x < f.g.size(); ++x)
        for (Index y = 0; y < f.g.size(); ++y)
          if (x != y && !f.g.defined(x, y)) complete = false;
      if (t.total != complete) o.fail(f.name + ": totality and graph completeness disagree");
      if (t.total != t.graph_complete) o.fail(f.name + ": totality and the loop-aware completeness disagree");
    }
    auto cover = clique_cover(f.g);
    std::vector<bool> seen(f.g.size(), false);
    for (const auto& cl : cover.cliques)
      for (auto x : cl.nodes) seen[x] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) o.fail(f.name + ": clique cover misses a node");
    for (Index x = 0; x < f.g.size(); ++x)
      for (Index y = x + 1; y < f.g.size(); ++y) {
        if (!f.g.defined(x, y) || !f.g.defined(y, x)) continue;
        bool covered = false;
        for (const auto& cl : cover.cliques)
          covered = covered || (std::binary_search(cl.nodes.begin(), cl.nodes.end(), x) &&
                                std::binary_search(cl.nodes.begin(), cl.nodes.end(), y));
        if (!covered) o.fail(f.name + ": clique cover misses an edge");
      }
    auto parts = connected_components(f.g);
    std::vector<std::size_t> owner(f.g.size());
    for (std::size_t i = 0; i < parts.parts.size(); ++i)
      for (auto x : parts.parts[i].nodes) owner[x] = i;
    for (Index x = 0; x < f.g.size(); ++x)
      for (Index y = 0; y < f.g.size(); ++y)
        if (owner[x] != owner[y] && f.g.defined(x, y)) o.fail(f.name + ": composition across components");
    if (!parts.separation.holds) o.fail(f.name + ": separation verdict fails");
  }
  o.note(std::to_string(symmetric) + " symmetric fixtures, " + std::to_string(fixtures.size()) +
         " fixtures covered and decomposed");
  return o;
}

Outcome criterion10(const std::vector<Fixture>& fixtures) {
  Outcome o;
  auto p1 = builtin("P1");
  if (has(null_extension(p1), PropertyId::A)) o.fail("null extension of P1 is associative");
  if (!has(null_extension(builtin("maxN")), PropertyId::A)) o.fail("null extension of maxN is not associative");
  for (const auto& f : fixtures) {
    if (has(null_extension(f.g), PropertyId::A) != has(f.g, PropertyId::SA))
      o.fail(f.name + ": associativity of the null extension differs from SA");
  }
  o.note("P1: extension not associative, SA fails; maxN: both hold; " + std::to_string(fixtures.size()) +
         " fixtures agree");
  return o;
}

}  // namespace

int main() {
  std::vector<std::string> skipped;
  const auto fixtures = all_fixtures(skipped);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 example regression (P1, Q2, maxN verdicts)", [] { return criterion1(); }},
      {"2 resolvers agree (bruteforce, maximal, full, rswoosh)", [&] { return criterion2(fixtures); }},
      {"3 natural order laws and P1 right-order witness", [&] { return criterion3(fixtures); }},
      {"4 LU and CP versus I, C, A, R and the natural order", [&] { return criterion4(fixtures); }},
      {"5 implication audit", [&] { return criterion5(fixtures); }},
      {"6 properties survive homomorphic images", [&] { return criterion6(fixtures); }},
      {"7 ~c quotient suite", [&] { return criterion7(fixtures); }},
      {"8 closure equals the naive fixed point; chain budget", [&] { return criterion8(fixtures); }},
      {"9 totality, clique covers, components", [&] { return criterion9(fixtures); }},
      {"10 null extension associative iff SA", [&] { return criterion10(fixtures); }},
  };

  std::cout << "fixtures: " << fixtures.size() << " loaded";
  for (const auto& s : skipped) std::cout << "; skipped " << s;
  std::cout << "\n";

  int failures = 0;
  for (const auto& [label, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("unexpected error: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << label << "\n";
    const std::size_t limit = 12;
    for (std::size_t i = 0; i < o.notes.size() && i < limit; ++i) std::cout << "      " << o.notes[i] << "\n";
    if (o.notes.size() > limit) std::cout << "      ... " << o.notes.size() - limit << " more\n";
    if (!o.pass) ++failures;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria pass\n";
  return failures;
}
