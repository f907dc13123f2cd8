#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgroupoid/groupoid.hpp"
#include "pgroupoid/properties.hpp"

namespace pg {

// p <=r q iff pq = q; p <=l q iff qp = q; p <= q iff pq = qp = q.
enum class OrderVariant { LeftLeq, RightLeq, Leq };

std::string_view to_string(OrderVariant v);

/// Materialized binary relation on a carrier; (p, q) present means p below q.
class OrderRelation {
 public:
  enum class Provenance { Natural, UserSupplied };

  OrderRelation(std::vector<ElementId> carrier, Provenance provenance, std::string label);

  static OrderRelation natural(const FiniteGroupoid& g, OrderVariant v);
  // Throws Error(ForeignElement) for names outside the carrier.
  static OrderRelation from_pairs(const FiniteGroupoid& g,
                                  const std::vector<std::pair<ElementId, ElementId>>& pairs);

  void add(Index p, Index q);
  bool contains(Index p, Index q) const { return matrix_[p * size() + q]; }
  std::size_t size() const { return carrier_.size(); }
  const std::vector<ElementId>& carrier() const { return carrier_; }
  // Sorted by (p, q).
  std::vector<std::pair<Index, Index>> pairs() const;
  std::vector<std::pair<ElementId, ElementId>> named_pairs() const;
  Provenance provenance() const { return provenance_; }
  const std::string& label() const { return label_; }

  bool same_pairs(const OrderRelation& other) const { return matrix_ == other.matrix_; }

 private:
  std::vector<ElementId> carrier_;
  std::vector<bool> matrix_;
  Provenance provenance_;
  std::string label_;
};

struct OrderLawAudit {
  Verdict reflexive;
  Verdict antisymmetric;
  Verdict transitive;

  bool is_partial_order() const {
    return reflexive.holds && antisymmetric.holds && transitive.holds;
  }
};

OrderLawAudit order_law_audit(const OrderRelation& rel);

// { m | m below n implies n below m }, in carrier order.
ElementSet maximal_elements(const OrderRelation& rel);
ElementSet maximal_elements(const FiniteGroupoid& g, OrderVariant v);

enum class Side { Left, Right, Both };
std::string_view to_string(Side s);

// Left full: every defined xp equals p. Right full: every defined px equals p.
ElementSet full_elements(const FiniteGroupoid& g, Side side);

// Every element of `lower` lies below some element of `upper` under the
// natural order.
bool dominates(const FiniteGroupoid& g, const ElementSet& lower, const ElementSet& upper);
bool dominates(const OrderRelation& leq, const ElementSet& lower, const ElementSet& upper);

struct OrderAxioms {
  Verdict lu;
  Verdict lcp;
  Verdict rcp;

  bool all_hold() const { return lu.holds && lcp.holds && rcp.holds; }
};

// LU, lCP and rCP with respect to rel. Throws Error(NotPartialOrder).
OrderAxioms check_order_axioms(const FiniteGroupoid& g, const OrderRelation& rel);

struct OrderCharacterization {
  bool order_side = false;    // LU and CP under rel
  bool algebra_side = false;  // I, C, A, R and rel equal to the natural order
  OrderAxioms axioms;
  std::vector<PropertyVerdict> algebra;  // I, C, A, R in that order
  bool rel_is_natural = false;
  std::optional<Witness> order_discrepancy;  // first pair in rel xor natural order
  Verdict verdict;  // holds iff the two sides agree
};

// Evaluates both sides of the equivalence "LU and CP under rel" versus
// "I, C, A, R hold and rel is the natural order"; the verdict fails, naming
// the side that holds, when they disagree.
// Requires (p,p) in D for every p (Error DomainNotReflexive) and a partial
// order (Error NotPartialOrder).
OrderCharacterization order_characterization_check(const FiniteGroupoid& g, const OrderRelation& rel);

}  // namespace pg
