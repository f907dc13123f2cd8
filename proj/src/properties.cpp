#include "pgroupoid/properties.hpp"

#include <functional>

namespace pg {

std::string_view to_string(PropertyId p) {
  switch (p) {
    case PropertyId::S: return "S";
    case PropertyId::I: return "I";
    case PropertyId::C: return "C";
    case PropertyId::SC: return "SC";
    case PropertyId::Rl: return "Rl";
    case PropertyId::Rr: return "Rr";
    case PropertyId::R: return "R";
    case PropertyId::A: return "A";
    case PropertyId::CA: return "CA";
    case PropertyId::SA: return "SA";
    case PropertyId::NR: return "NR";
  }
  return "?";
}

std::optional<PropertyId> parse_property(std::string_view name) {
  for (auto p : kAllProperties) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

namespace {

int arity(PropertyId p) {
  switch (p) {
    case PropertyId::I: return 1;
    case PropertyId::S:
    case PropertyId::C:
    case PropertyId::SC: return 2;
    case PropertyId::NR: return 0;
    default: return 3;
  }
}

bool left_repr_fails(const FiniteGroupoid& g, Index p1, Index p2, Index p) {
  auto v = g.compose(p1, p2);
  return v && g.defined(p, p1) && !g.defined(p, *v);
}

bool right_repr_fails(const FiniteGroupoid& g, Index p1, Index p2, Index p) {
  auto v = g.compose(p1, p2);
  return v && g.defined(p2, p) && !g.defined(*v, p);
}

// (p1 p2) p3 and p1 (p2 p3), each possibly undefined.
std::pair<std::optional<Index>, std::optional<Index>> bracketings(const FiniteGroupoid& g, Index p1,
                                                                  Index p2, Index p3) {
  std::optional<Index> left, right;
  if (auto l = g.compose(p1, p2)) left = g.compose(*l, p3);
  if (auto r = g.compose(p2, p3)) right = g.compose(p1, *r);
  return {left, right};
}

bool nr_violated(const FiniteGroupoid& g, const std::vector<Index>& word) {
  auto once = word_product(g, word);
  if (once.empty()) return false;
  std::vector<Index> twice(word);
  twice.insert(twice.end(), word.begin(), word.end());
  return word_product(g, twice) != once;
}

std::string detail_for(const FiniteGroupoid& g, PropertyId p, const std::vector<Index>& t) {
  switch (p) {
    case PropertyId::S: return "(x,y) in D but (y,x) not in D";
    case PropertyId::I: return g.defined(t[0], t[0]) ? "pp != p" : "pp undefined";
    case PropertyId::C: return "xy != yx";
    case PropertyId::SC:
      return g.defined(t[0], t[1]) != g.defined(t[1], t[0]) ? "domain not symmetric at (x,y)"
                                                            : "xy != yx";
    case PropertyId::Rl: return "(p,p1) in D but (p,p1p2) not in D";
    case PropertyId::Rr: return "(p2,p) in D but (p1p2,p) not in D";
    case PropertyId::R:
      return left_repr_fails(g, t[0], t[1], t[2]) ? "left: (p,p1) in D but (p,p1p2) not in D"
                                                   : "right: (p2,p) in D but (p1p2,p) not in D";
    case PropertyId::A: return "(p1p2)p3 != p1(p2p3)";
    case PropertyId::CA: {
      auto [l, r] = bracketings(g, t[0], t[1], t[2]);
      if (!l || !r) return "p1p2 and p2p3 defined but a bracketing is undefined";
      return "(p1p2)p3 != p1(p2p3)";
    }
    case PropertyId::SA: {
      auto [l, r] = bracketings(g, t[0], t[1], t[2]);
      if (l.has_value() != r.has_value()) return "one bracketing defined, the other not";
      return "(p1p2)p3 != p1(p2p3)";
    }
    case PropertyId::NR: return "product(t t) != product(t)";
  }
  return {};
}

}  // namespace

bool violates(const FiniteGroupoid& g, PropertyId p, const std::vector<Index>& t) {
  const int k = arity(p);
  if (k != 0 && static_cast<int>(t.size()) != k) {
    throw Error(ErrorKind::InvalidArgument,
                "tuple of wrong arity for property " + std::string(to_string(p)));
  }
  switch (p) {
    case PropertyId::S: return g.defined(t[0], t[1]) != g.defined(t[1], t[0]);
    case PropertyId::I: {
      auto v = g.compose(t[0], t[0]);
      return !v || *v != t[0];
    }
    case PropertyId::C: {
      auto xy = g.compose(t[0], t[1]);
      auto yx = g.compose(t[1], t[0]);
      return xy && yx && *xy != *yx;
    }
    case PropertyId::SC:
      return violates(g, PropertyId::S, t) || violates(g, PropertyId::C, t);
    case PropertyId::Rl: return left_repr_fails(g, t[0], t[1], t[2]);
    case PropertyId::Rr: return right_repr_fails(g, t[0], t[1], t[2]);
    case PropertyId::R:
      return left_repr_fails(g, t[0], t[1], t[2]) || right_repr_fails(g, t[0], t[1], t[2]);
    case PropertyId::A: {
      auto [l, r] = bracketings(g, t[0], t[1], t[2]);
      return l && r && *l != *r;
    }
    case PropertyId::CA: {
      if (!g.defined(t[0], t[1]) || !g.defined(t[1], t[2])) return false;
      auto [l, r] = bracketings(g, t[0], t[1], t[2]);
      return !l || !r || *l != *r;
    }
    case PropertyId::SA: {
      auto [l, r] = bracketings(g, t[0], t[1], t[2]);
      return l != r;
    }
    case PropertyId::NR:
      if (t.empty()) throw Error(ErrorKind::InvalidArgument, "NR word must be non-empty");
      return nr_violated(g, t);
  }
  return false;
}

namespace {

// Calls visit on every tuple of the given length in lexicographic order;
// stops at the first tuple for which visit returns true.
std::optional<std::vector<Index>> first_tuple(std::size_t n, std::size_t length,
                                              const std::function<bool(const std::vector<Index>&)>& visit) {
  if (n == 0) return std::nullopt;
  std::vector<Index> t(length, 0);
  while (true) {
    if (visit(t)) return t;
    std::size_t pos = length;
    while (true) {
      if (pos == 0) return std::nullopt;
      --pos;
      if (++t[pos] < n) break;
      t[pos] = 0;
    }
  }
}

}  // namespace

PropertyVerdict check_property(const FiniteGroupoid& g, PropertyId p, const CheckConfig& config) {
  PropertyVerdict verdict{p, true, std::nullopt, "|P|=" + std::to_string(g.size())};
  std::optional<std::vector<Index>> hit;
  if (p == PropertyId::NR) {
    if (config.nr_word_bound < 1) {
      throw Error(ErrorKind::InvalidArgument, "NR word bound must be at least 1");
    }
    verdict.universe += ", words<=" + std::to_string(config.nr_word_bound);
    for (int len = 1; len <= config.nr_word_bound && !hit; ++len) {
      hit = first_tuple(g.size(), static_cast<std::size_t>(len),
                        [&](const std::vector<Index>& t) { return nr_violated(g, t); });
    }
  } else {
    hit = first_tuple(g.size(), static_cast<std::size_t>(arity(p)),
                      [&](const std::vector<Index>& t) { return violates(g, p, t); });
  }
  if (hit) {
    verdict.holds = false;
    verdict.witness = Witness{g.names(*hit), detail_for(g, p, *hit)};
  }
  return verdict;
}

PropertyReport property_report(const FiniteGroupoid& g, const CheckConfig& config) {
  PropertyReport report;
  for (auto p : kAllProperties) report.verdicts.emplace(p, check_property(g, p, config));
  report.is_icar = report.holds(PropertyId::I) && report.holds(PropertyId::SC) &&
                   report.holds(PropertyId::A) && report.holds(PropertyId::R);
  report.is_partial_semigroup_ca = report.holds(PropertyId::CA);
  return report;
}

std::vector<std::string> implication_audit(const PropertyReport& report) {
  auto h = [&](PropertyId p) { return report.holds(p); };
  std::vector<std::string> broken;
  if (h(PropertyId::CA) != (h(PropertyId::A) && h(PropertyId::R))) broken.push_back("CA <=> A and R");
  if (h(PropertyId::SA) && !h(PropertyId::A)) broken.push_back("SA => A");
  if (h(PropertyId::CA) && !h(PropertyId::A)) broken.push_back("CA => A");
  if (h(PropertyId::NR) && !h(PropertyId::I)) broken.push_back("NR => I");
  if (h(PropertyId::SC) != (h(PropertyId::C) && h(PropertyId::S))) broken.push_back("SC <=> C and S");
  if (h(PropertyId::R) != (h(PropertyId::Rl) && h(PropertyId::Rr))) broken.push_back("R <=> Rl and Rr");
  return broken;
}

}  // namespace pg
