#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "pgroupoid/groupoid.hpp"
#include "pgroupoid/properties.hpp"

namespace pg {

// p ~c q iff pqp = {p} and qpq = {q} as subset products.
bool sim_c(const FiniteGroupoid& g, Index p, Index q);

struct CongruenceClasses {
  std::vector<ElementSet> classes;   // ordered by representative
  std::vector<Index> representative;  // minimum index of each class
  std::vector<Index> class_of;        // element -> class position
};

struct CongruenceAudit {
  Verdict reflexive;
  Verdict symmetric;
  Verdict transitive;
  Verdict congruence;  // p ~c p', q ~c q', both products defined => pq ~c p'q'

  bool all_hold() const {
    return reflexive.holds && symmetric.holds && transitive.holds && congruence.holds;
  }
};

CongruenceAudit audit_sim_c(const FiniteGroupoid& g);

// Requires NR up to config.nr_word_bound (Error(Hypothesis)) and a clean
// audit (Error(Congruence) carrying the first failing law's witness).
CongruenceClasses congruence_classes(const FiniteGroupoid& g, const CheckConfig& config = {});

struct QuotientGroupoid {
  CongruenceClasses classes;
  std::shared_ptr<const FiniteGroupoid> source;
  std::shared_ptr<const FiniteGroupoid> groupoid;  // carrier named by representatives
  Homomorphism projection;
  Verdict projection_verdict;  // homomorphism and surjective
  // Present when the source satisfies S: SC of the quotient.
  std::optional<PropertyVerdict> commutativity;
};

// Throws as congruence_classes, and Error(WellDefinedness) if two member
// pairs of the same class pair land in different classes.
QuotientGroupoid quotient(const FiniteGroupoid& g, const CheckConfig& config = {});

// Q(Q(g)) equals Q(g) under the identity on representatives.
Verdict quotient_idempotence_check(const FiniteGroupoid& g, const CheckConfig& config = {});

// Closure, totality and associativity inside cls, and x1...xk = x1xk for
// 2 <= k <= config.nr_word_bound.
Verdict class_semigroup_check(const FiniteGroupoid& g, const ElementSet& cls,
                              const CheckConfig& config = {});

}  // namespace pg
