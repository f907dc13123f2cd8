#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pgroupoid/groupoid.hpp"
#include "pgroupoid/properties.hpp"

namespace pg {

/// A finite set of records, canonicalized, deduplicated and sorted by
/// canonical serialization.
struct Instance {
  std::vector<ElementId> records;
};

// Throws Error(ForeignElement) for ids outside the universe and
// Error(InvalidArgument) for an empty instance.
Instance make_instance(const BlackBoxGroupoid& g, const std::vector<ElementId>& ids);
Instance make_instance(const FiniteGroupoid& g, const std::vector<ElementId>& ids);

ClosureResult merge_closure(const BlackBoxGroupoid& g, const Instance& instance, Budget budget = {});
ClosureResult merge_closure(const FiniteGroupoid& g, const Instance& instance, Budget budget = {});

enum class ErMethod { Auto, Bruteforce, Full, Maximal, RSwoosh };

std::string_view to_string(ErMethod m);
std::optional<ErMethod> parse_er_method(std::string_view name);

struct ERResult {
  ErMethod method = ErMethod::Full;
  std::vector<ElementId> resolved;      // sorted
  std::vector<std::string> certificate;
  std::vector<std::string> trail;       // auto-dispatch decisions
  std::string method_line;              // e.g. "rswoosh (ICAR verified)"
};

inline constexpr std::size_t kBruteforceLimit = 20;

// Smallest subsets of the closure dominating it under the natural order.
// Throws Error(SizeGuard) above kBruteforceLimit elements and
// Error(NoResolution) when no subset dominates.
ERResult er_bruteforce(const ClosureResult& closure);
ERResult er_full(const ClosureResult& closure);
// Throws Error(Hypothesis) unless the closure satisfies I and CA.
ERResult er_maximal(const ClosureResult& closure);

// FIFO worklist over the instance in canonical order. `max_merges` bounds
// the number of merges (Error(BudgetExhausted)); a merge result m with
// mm != m aborts with Error(IcarViolation).
ERResult r_swoosh(const BlackBoxGroupoid& g, const Instance& instance, std::size_t max_merges);

// Computes the closure (Error(BudgetExhausted) if it does not close) and
// runs the requested method. Auto picks rswoosh under ICAR, else maximal
// under I and CA, else bruteforce for small closures, else full.
ERResult resolve(const BlackBoxGroupoid& g, const Instance& instance, ErMethod method,
                 Budget budget = {}, const CheckConfig& config = {});

}  // namespace pg
