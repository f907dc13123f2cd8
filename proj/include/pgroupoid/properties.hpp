#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgroupoid/groupoid.hpp"

namespace pg {

enum class PropertyId { S, I, C, SC, Rl, Rr, R, A, CA, SA, NR };

inline constexpr std::array<PropertyId, 11> kAllProperties = {
    PropertyId::S,  PropertyId::I, PropertyId::C,  PropertyId::SC, PropertyId::Rl, PropertyId::Rr,
    PropertyId::R,  PropertyId::A, PropertyId::CA, PropertyId::SA, PropertyId::NR};

std::string_view to_string(PropertyId p);
std::optional<PropertyId> parse_property(std::string_view name);

struct CheckConfig {
  int nr_word_bound = 3;
};

struct PropertyVerdict {
  PropertyId property;
  bool holds = true;
  std::optional<Witness> witness;
  std::string universe;
};

/// Exhaustive check of one axiom. Pairs for S, I, C, SC; triples for the
/// representativity and associativity laws; words up to the configured
/// length for NR (a pass there means "up to that bound" only). The witness
/// is the first violation in lexicographic index order.
PropertyVerdict check_property(const FiniteGroupoid& g, PropertyId p, const CheckConfig& config = {});

// Does this tuple violate the axiom? Used by check_property and to replay
// witnesses; tuple arity is 1 for I, 2 for S/C/SC, 3 for the triple laws and
// any word length for NR.
bool violates(const FiniteGroupoid& g, PropertyId p, const std::vector<Index>& tuple);

struct PropertyReport {
  std::map<PropertyId, PropertyVerdict> verdicts;
  bool is_icar = false;
  bool is_partial_semigroup_ca = false;

  const PropertyVerdict& at(PropertyId p) const { return verdicts.at(p); }
  bool holds(PropertyId p) const { return verdicts.at(p).holds; }
};

PropertyReport property_report(const FiniteGroupoid& g, const CheckConfig& config = {});

// Implications that are theorems: CA <=> A and R, SA => A, CA => A,
// NR => I, SC <=> C and S. Any entry returned points at a checker bug.
std::vector<std::string> implication_audit(const PropertyReport& report);

}  // namespace pg
