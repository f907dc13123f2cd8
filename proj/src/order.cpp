#include "pgroupoid/order.hpp"

#include <algorithm>

namespace pg {

std::string_view to_string(OrderVariant v) {
  switch (v) {
    case OrderVariant::LeftLeq: return "<=l";
    case OrderVariant::RightLeq: return "<=r";
    case OrderVariant::Leq: return "<=";
  }
  return "?";
}

std::string_view to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Both: return "both";
  }
  return "?";
}

OrderRelation::OrderRelation(std::vector<ElementId> carrier, Provenance provenance, std::string label)
    : carrier_(std::move(carrier)),
      matrix_(carrier_.size() * carrier_.size(), false),
      provenance_(provenance),
      label_(std::move(label)) {}

void OrderRelation::add(Index p, Index q) {
  if (p >= size() || q >= size()) throw Error(ErrorKind::ForeignElement, "order pair outside carrier");
  matrix_[p * size() + q] = true;
}

OrderRelation OrderRelation::natural(const FiniteGroupoid& g, OrderVariant v) {
  OrderRelation rel(g.elements(), Provenance::Natural, std::string(to_string(v)));
  const auto n = static_cast<Index>(g.size());
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      auto pq = g.compose(p, q);
      auto qp = g.compose(q, p);
      bool below = false;
      switch (v) {
        case OrderVariant::RightLeq: below = pq && *pq == q; break;
        case OrderVariant::LeftLeq: below = qp && *qp == q; break;
        case OrderVariant::Leq: below = pq && qp && *pq == q && *qp == q; break;
      }
      if (below) rel.add(p, q);
    }
  }
  return rel;
}

OrderRelation OrderRelation::from_pairs(const FiniteGroupoid& g,
                                        const std::vector<std::pair<ElementId, ElementId>>& pairs) {
  OrderRelation rel(g.elements(), Provenance::UserSupplied, "user");
  for (const auto& [p, q] : pairs) rel.add(g.index_of(p), g.index_of(q));
  return rel;
}

std::vector<std::pair<Index, Index>> OrderRelation::pairs() const {
  std::vector<std::pair<Index, Index>> out;
  const auto n = static_cast<Index>(size());
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q)
      if (contains(p, q)) out.emplace_back(p, q);
  return out;
}

std::vector<std::pair<ElementId, ElementId>> OrderRelation::named_pairs() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (auto [p, q] : pairs()) out.emplace_back(carrier_[p], carrier_[q]);
  return out;
}

OrderLawAudit order_law_audit(const OrderRelation& rel) {
  OrderLawAudit audit{Verdict::pass(), Verdict::pass(), Verdict::pass()};
  const auto n = static_cast<Index>(rel.size());
  const auto& c = rel.carrier();
  for (Index p = 0; p < n && audit.reflexive.holds; ++p) {
    if (!rel.contains(p, p)) audit.reflexive = Verdict::fail({{c[p]}, "(p,p) missing"});
  }
  for (Index p = 0; p < n && audit.antisymmetric.holds; ++p) {
    for (Index q = 0; q < n; ++q) {
      if (p != q && rel.contains(p, q) && rel.contains(q, p)) {
        audit.antisymmetric = Verdict::fail({{c[p], c[q]}, "p below q and q below p with p != q"});
        break;
      }
    }
  }
  for (Index p = 0; p < n && audit.transitive.holds; ++p) {
    for (Index q = 0; q < n && audit.transitive.holds; ++q) {
      if (!rel.contains(p, q)) continue;
      for (Index r = 0; r < n; ++r) {
        if (rel.contains(q, r) && !rel.contains(p, r)) {
          audit.transitive = Verdict::fail({{c[p], c[q], c[r]}, "p below q, q below r, p not below r"});
          break;
        }
      }
    }
  }
  return audit;
}

ElementSet maximal_elements(const OrderRelation& rel) {
  ElementSet out;
  const auto n = static_cast<Index>(rel.size());
  for (Index m = 0; m < n; ++m) {
    bool maximal = true;
    for (Index k = 0; k < n && maximal; ++k) {
      if (rel.contains(m, k) && !rel.contains(k, m)) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

ElementSet maximal_elements(const FiniteGroupoid& g, OrderVariant v) {
  return maximal_elements(OrderRelation::natural(g, v));
}

ElementSet full_elements(const FiniteGroupoid& g, Side side) {
  ElementSet out;
  const auto n = static_cast<Index>(g.size());
  for (Index p = 0; p < n; ++p) {
    bool full = true;
    for (Index x = 0; x < n && full; ++x) {
      if (side != Side::Right) {
        auto xp = g.compose(x, p);
        if (xp && *xp != p) full = false;
      }
      if (side != Side::Left) {
        auto px = g.compose(p, x);
        if (px && *px != p) full = false;
      }
    }
    if (full) out.push_back(p);
  }
  return out;
}

bool dominates(const OrderRelation& leq, const ElementSet& lower, const ElementSet& upper) {
  return std::all_of(lower.begin(), lower.end(), [&](Index e) {
    return std::any_of(upper.begin(), upper.end(), [&](Index u) { return leq.contains(e, u); });
  });
}

bool dominates(const FiniteGroupoid& g, const ElementSet& lower, const ElementSet& upper) {
  return dominates(OrderRelation::natural(g, OrderVariant::Leq), lower, upper);
}

namespace {

void require_partial_order(const OrderRelation& rel) {
  auto audit = order_law_audit(rel);
  if (audit.is_partial_order()) return;
  const Verdict& bad = !audit.reflexive.holds       ? audit.reflexive
                       : !audit.antisymmetric.holds ? audit.antisymmetric
                                                    : audit.transitive;
  throw Error(ErrorKind::NotPartialOrder, "relation '" + rel.label() + "' is not a partial order: " +
                                              bad.witness->detail + " at " +
                                              format_tuple(bad.witness->elements));
}

Verdict check_lu(const FiniteGroupoid& g, const OrderRelation& rel) {
  const auto n = static_cast<Index>(g.size());
  for (const auto& c : g.compositions()) {
    const Index v = c.result;
    if (!rel.contains(c.left, v) || !rel.contains(c.right, v)) {
      return Verdict::fail({g.names(std::vector<Index>{c.left, c.right}),
                            "p1p2 is not an upper bound of p1 and p2"});
    }
    for (Index u = 0; u < n; ++u) {
      if (rel.contains(c.left, u) && rel.contains(c.right, u) && !rel.contains(v, u)) {
        return Verdict::fail({g.names(std::vector<Index>{c.left, c.right, u}),
                              "u bounds p1 and p2 but p1p2 is not below u"});
      }
    }
  }
  return Verdict::pass();
}

// Witness order (p1, p2, p) with p1 below p2.
Verdict check_cp(const FiniteGroupoid& g, const OrderRelation& rel, bool left) {
  const auto n = static_cast<Index>(g.size());
  for (auto [p1, p2] : rel.pairs()) {
    for (Index p = 0; p < n; ++p) {
      auto a = left ? g.compose(p, p1) : g.compose(p1, p);
      if (!a) continue;
      auto b = left ? g.compose(p, p2) : g.compose(p2, p);
      std::vector<Index> t{p1, p2, p};
      if (!b) {
        return Verdict::fail({g.names(t), left ? "(p,p1) in D but (p,p2) not in D"
                                               : "(p1,p) in D but (p2,p) not in D"});
      }
      if (!rel.contains(*a, *b)) {
        return Verdict::fail({g.names(t), left ? "p p1 not below p p2" : "p1 p not below p2 p"});
      }
    }
  }
  return Verdict::pass();
}

}  // namespace

OrderAxioms check_order_axioms(const FiniteGroupoid& g, const OrderRelation& rel) {
  if (rel.size() != g.size()) throw Error(ErrorKind::InvalidArgument, "relation carrier differs from groupoid");
  require_partial_order(rel);
  return {check_lu(g, rel), check_cp(g, rel, true), check_cp(g, rel, false)};
}

OrderCharacterization order_characterization_check(const FiniteGroupoid& g, const OrderRelation& rel) {
  for (Index p = 0; p < g.size(); ++p) {
    if (!g.defined(p, p)) {
      throw Error(ErrorKind::DomainNotReflexive, "(" + g.name(p) + "," + g.name(p) + ") not in D");
    }
  }
  OrderCharacterization out;
  out.axioms = check_order_axioms(g, rel);
  out.order_side = out.axioms.all_hold();

  bool algebra_ok = true;
  for (auto p : {PropertyId::I, PropertyId::C, PropertyId::A, PropertyId::R}) {
    out.algebra.push_back(check_property(g, p));
    algebra_ok = algebra_ok && out.algebra.back().holds;
  }

  auto natural = OrderRelation::natural(g, OrderVariant::Leq);
  out.rel_is_natural = rel.same_pairs(natural);
  if (!out.rel_is_natural) {
    const auto n = static_cast<Index>(g.size());
    for (Index p = 0; p < n && !out.order_discrepancy; ++p) {
      for (Index q = 0; q < n; ++q) {
        if (rel.contains(p, q) != natural.contains(p, q)) {
          out.order_discrepancy = Witness{{g.name(p), g.name(q)},
                                          rel.contains(p, q) ? "in rel but not in the natural order"
                                                             : "in the natural order but not in rel"};
          break;
        }
      }
    }
  }
  out.algebra_side = algebra_ok && out.rel_is_natural;

  if (out.order_side == out.algebra_side) {
    out.verdict = Verdict::pass(out.order_side ? "both sides hold" : "both sides fail");
    return out;
  }
  if (out.order_side) {
    Witness w;
    for (const auto& v : out.algebra) {
      if (!v.holds) {
        w = *v.witness;
        w.detail = std::string(to_string(v.property)) + ": " + w.detail;
        break;
      }
    }
    if (w.elements.empty() && out.order_discrepancy) w = *out.order_discrepancy;
    out.verdict = Verdict::fail(std::move(w), "LU and CP hold but the algebraic side fails");
  } else {
    const Verdict& bad = !out.axioms.lu.holds ? out.axioms.lu : !out.axioms.lcp.holds ? out.axioms.lcp
                                                                                      : out.axioms.rcp;
    Witness w = *bad.witness;
    w.detail = std::string(&bad == &out.axioms.lu ? "LU" : &bad == &out.axioms.lcp ? "lCP" : "rCP") +
               ": " + w.detail;
    out.verdict = Verdict::fail(std::move(w), "algebraic side holds but LU or CP fails");
  }
  return out;
}

}  // namespace pg
