#include "pgroupoid/closure.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

#include "pgroupoid/order.hpp"

namespace pg {

namespace {

Instance finish_instance(std::vector<ElementId> records) {
  if (records.empty()) throw Error(ErrorKind::InvalidArgument, "instance must be non-empty");
  std::sort(records.begin(), records.end());
  records.erase(std::unique(records.begin(), records.end()), records.end());
  return Instance{std::move(records)};
}

std::vector<ElementId> sorted_names(const FiniteGroupoid& g, const ElementSet& s) {
  auto out = g.names(s);
  std::sort(out.begin(), out.end());
  return out;
}

void require_closed(const ClosureResult& closure) {
  if (!closure.closed()) {
    throw Error(ErrorKind::BudgetExhausted, "closure did not close within the budget");
  }
}

}  // namespace

Instance make_instance(const BlackBoxGroupoid& g, const std::vector<ElementId>& ids) {
  std::vector<ElementId> records;
  for (const auto& id : ids) {
    auto c = g.canonicalize(id);
    if (g.accepts && !g.accepts(c)) {
      throw Error(ErrorKind::ForeignElement, "element '" + id + "' is outside the universe");
    }
    records.push_back(std::move(c));
  }
  return finish_instance(std::move(records));
}

Instance make_instance(const FiniteGroupoid& g, const std::vector<ElementId>& ids) {
  for (const auto& id : ids) g.index_of(id);
  return finish_instance(ids);
}

ClosureResult merge_closure(const BlackBoxGroupoid& g, const Instance& instance, Budget budget) {
  return generated_subgroupoid(g, instance.records, budget);
}

ClosureResult merge_closure(const FiniteGroupoid& g, const Instance& instance, Budget budget) {
  return generated_subgroupoid(g, g.indices_of(instance.records), budget);
}

std::string_view to_string(ErMethod m) {
  switch (m) {
    case ErMethod::Auto: return "auto";
    case ErMethod::Bruteforce: return "bruteforce";
    case ErMethod::Full: return "full";
    case ErMethod::Maximal: return "maximal";
    case ErMethod::RSwoosh: return "rswoosh";
  }
  return "?";
}

std::optional<ErMethod> parse_er_method(std::string_view name) {
  for (auto m : {ErMethod::Auto, ErMethod::Bruteforce, ErMethod::Full, ErMethod::Maximal, ErMethod::RSwoosh}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

ERResult er_bruteforce(const ClosureResult& closure) {
  require_closed(closure);
  const auto& g = closure.groupoid;
  const std::size_t n = g.size();
  if (n > kBruteforceLimit) {
    throw Error(ErrorKind::SizeGuard, "closure has " + std::to_string(n) + " elements (limit " +
                                          std::to_string(kBruteforceLimit) + "); use er_maximal");
  }
  // up[e]: elements at or above e under the natural order.
  auto leq = OrderRelation::natural(g, OrderVariant::Leq);
  std::vector<std::uint32_t> up(n, 0);
  for (auto [p, q] : leq.pairs()) up[p] |= std::uint32_t{1} << q;
  auto dominating = [&](std::uint32_t s) {
    return std::all_of(up.begin(), up.end(), [s](std::uint32_t u) { return (u & s) != 0; });
  };

  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint32_t> hits;
    // Gosper's hack walks k-subsets in increasing mask order.
    std::uint32_t s = (std::uint32_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      if (dominating(s)) hits.push_back(s);
      const std::uint32_t c = s & -s;
      const std::uint32_t r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
    if (hits.empty()) continue;
    auto as_set = [&](std::uint32_t mask) {
      ElementSet out;
      for (Index i = 0; i < n; ++i)
        if (mask >> i & 1U) out.push_back(i);
      return out;
    };
    ERResult res;
    res.method = ErMethod::Bruteforce;
    res.method_line = "bruteforce";
    res.resolved = sorted_names(g, as_set(hits.front()));
    res.certificate.push_back("smallest dominating subset has " + std::to_string(k) + " element(s)");
    if (hits.size() == 1) {
      res.certificate.push_back("unique at that size");
    } else {
      res.certificate.push_back(std::to_string(hits.size()) + " dominating subsets of that size");
      for (std::size_t i = 1; i < hits.size(); ++i) {
        res.certificate.push_back("also dominating: " + format_tuple(sorted_names(g, as_set(hits[i]))));
      }
    }
    return res;
  }
  throw Error(ErrorKind::NoResolution, "no subset of the closure dominates it");
}

ERResult er_full(const ClosureResult& closure) {
  require_closed(closure);
  ERResult res;
  res.method = ErMethod::Full;
  res.method_line = "full";
  res.resolved = sorted_names(closure.groupoid, full_elements(closure.groupoid, Side::Both));
  res.certificate.push_back("full elements of a " + std::to_string(closure.carrier.size()) +
                            "-element closure");
  return res;
}

ERResult er_maximal(const ClosureResult& closure) {
  require_closed(closure);
  const auto& g = closure.groupoid;
  for (auto p : {PropertyId::I, PropertyId::CA}) {
    auto v = check_property(g, p);
    if (!v.holds) {
      throw Error(ErrorKind::Hypothesis, "hypotheses I+CA not satisfied: " + std::string(to_string(p)) +
                                             " fails at " + format_tuple(v.witness->elements) + " (" +
                                             v.witness->detail + ")");
    }
  }
  ERResult res;
  res.method = ErMethod::Maximal;
  res.method_line = "maximal";
  res.resolved = sorted_names(g, maximal_elements(g, OrderVariant::Leq));
  res.certificate.push_back("I and CA hold on the closure");
  return res;
}

ERResult r_swoosh(const BlackBoxGroupoid& g, const Instance& instance, std::size_t max_merges) {
  std::deque<ElementId> queue(instance.records.begin(), instance.records.end());
  std::vector<ElementId> resolved;
  std::size_t merges = 0;
  while (!queue.empty()) {
    ElementId r = std::move(queue.front());
    queue.pop_front();
    bool merged = false;
    for (auto it = resolved.begin(); it != resolved.end(); ++it) {
      auto m = g.compose(r, *it);
      if (!m) continue;
      if (++merges > max_merges) {
        throw Error(ErrorKind::BudgetExhausted, "r_swoosh exceeded " + std::to_string(max_merges) + " merges");
      }
      auto again = g.compose(*m, *m);
      if (!again || *again != *m) {
        throw Error(ErrorKind::IcarViolation, "merge of " + format_tuple({r, *it}) +
                                                  " is not idempotent: " + *m);
      }
      resolved.erase(it);
      queue.push_back(std::move(*m));
      merged = true;
      break;
    }
    if (!merged) resolved.push_back(std::move(r));
  }
  std::sort(resolved.begin(), resolved.end());
  resolved.erase(std::unique(resolved.begin(), resolved.end()), resolved.end());
  ERResult res;
  res.method = ErMethod::RSwoosh;
  res.method_line = "rswoosh";
  res.resolved = std::move(resolved);
  res.certificate.push_back(std::to_string(merges) + " merge(s)");
  return res;
}

ERResult resolve(const BlackBoxGroupoid& g, const Instance& instance, ErMethod method, Budget budget,
                 const CheckConfig& config) {
  if (method == ErMethod::RSwoosh) {
    auto res = r_swoosh(g, instance, budget.max_elements);
    res.method_line = "rswoosh (requested)";
    return res;
  }
  auto closure = merge_closure(g, instance, budget);
  require_closed(closure);
  switch (method) {
    case ErMethod::Bruteforce: return er_bruteforce(closure);
    case ErMethod::Full: return er_full(closure);
    case ErMethod::Maximal: return er_maximal(closure);
    default: break;
  }

  std::vector<std::string> trail;
  trail.push_back("closure closed with " + std::to_string(closure.carrier.size()) + " element(s)");
  auto report = property_report(closure.groupoid, config);
  ERResult res;
  if (report.is_icar) {
    trail.push_back("ICAR holds: rswoosh");
    res = r_swoosh(g, instance, budget.max_elements);
    res.method_line = "rswoosh (ICAR verified)";
  } else if (report.holds(PropertyId::I) && report.holds(PropertyId::CA)) {
    trail.push_back("ICAR fails; I and CA hold: maximal");
    res = er_maximal(closure);
    res.method_line = "maximal (I+CA verified)";
  } else if (closure.carrier.size() <= kBruteforceLimit) {
    trail.push_back("I+CA fails; closure within " + std::to_string(kBruteforceLimit) +
                    " elements: bruteforce");
    res = er_bruteforce(closure);
    res.method_line = "bruteforce (no algebraic hypotheses)";
  } else {
    trail.push_back("I+CA fails; closure above " + std::to_string(kBruteforceLimit) + " elements: full");
    res = er_full(closure);
    res.method_line = "full (no algebraic hypotheses)";
  }
  res.trail = std::move(trail);
  return res;
}

}  // namespace pg
