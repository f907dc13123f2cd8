#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pgroupoid/error.hpp"
#include "pgroupoid/verdict.hpp"

namespace pg {

using Index = std::uint32_t;

// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Index>;

ElementSet make_set(std::vector<Index> items);

struct Composition {
  Index left;
  Index right;
  Index result;

  bool operator==(const Composition&) const = default;
};

/// A finite partial groupoid (P, D, o) given by an explicit carrier and a
/// composition table defined exactly on D.
class FiniteGroupoid {
 public:
  // Validates the carrier (non-empty, distinct names) and the table (one
  // entry per pair, all indices in range). Throws Error(InvalidGroupoid).
  FiniteGroupoid(std::vector<ElementId> elements, std::vector<Composition> table);

  static FiniteGroupoid from_names(
      std::vector<ElementId> elements,
      const std::vector<std::array<ElementId, 3>>& compositions);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<ElementId>& elements() const noexcept { return elements_; }
  const ElementId& name(Index i) const { return elements_.at(i); }
  std::vector<ElementId> names(std::span<const Index> items) const;

  std::optional<Index> find(std::string_view id) const;
  // Throws Error(ForeignElement) for names outside the carrier.
  Index index_of(std::string_view id) const;
  ElementSet indices_of(const std::vector<ElementId>& ids) const;

  std::optional<Index> compose(Index x, Index y) const;
  bool defined(Index x, Index y) const { return compose(x, y).has_value(); }

  // Table entries sorted by (left, right).
  const std::vector<Composition>& compositions() const noexcept { return table_; }
  std::size_t domain_size() const noexcept { return table_.size(); }

  // Restriction to a subset: keeps pairs inside `subset` whose result also
  // lies in `subset`; element order follows this groupoid.
  FiniteGroupoid restrict_to(const ElementSet& subset) const;

  bool operator==(const FiniteGroupoid& other) const;

 private:
  static constexpr Index kUndefined = static_cast<Index>(-1);
  static constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

  std::vector<ElementId> elements_;
  std::map<std::string, Index, std::less<>> index_;
  std::vector<Composition> table_;
  std::vector<Index> dense_;
  std::unordered_map<std::uint64_t, Index> sparse_;
};

/// A match predicate plus merge function over an open universe of
/// canonically serialized elements.
struct BlackBoxGroupoid {
  std::string description;
  std::function<bool(const ElementId&)> accepts;
  std::function<bool(const ElementId&, const ElementId&)> match;
  std::function<ElementId(const ElementId&, const ElementId&)> merge;
  // Maps user-written ids onto the canonical form; identity when unset.
  std::function<ElementId(const ElementId&)> canonical;
  std::vector<ElementId> carrier;

  // Throws Error(ForeignElement) when either side is outside the universe.
  std::optional<ElementId> compose(const ElementId& x, const ElementId& y) const;
  ElementId canonicalize(const ElementId& x) const;
};

BlackBoxGroupoid as_black_box(FiniteGroupoid g);

// Name-level composition on an explicit groupoid; foreign names throw.
std::optional<ElementId> compose(const FiniteGroupoid& g, std::string_view x,
                                 std::string_view y);

struct Budget {
  std::size_t max_elements = 10000;
  std::size_t max_rounds = 1000;
};

enum class ClosureStatus { Closed, BudgetExhausted };

struct ClosureResult {
  ClosureStatus status = ClosureStatus::Closed;
  std::vector<ElementId> carrier;
  FiniteGroupoid groupoid;
  std::size_t iterations = 0;
  Budget budget;

  bool closed() const { return status == ClosureStatus::Closed; }
};

/// Products of subsets I1...In, all bracketings, by interval dynamic
/// programming. The all-undefined case is the empty set.
ElementSet product_of_subsets(const FiniteGroupoid& g, std::span<const ElementSet> seq);
ElementSet word_product(const FiniteGroupoid& g, std::span<const Index> word);

/// [M]: fixed point of pairwise compositions starting from M. Carrier order
/// follows g's element order.
ClosureResult generated_subgroupoid(const FiniteGroupoid& g, const ElementSet& seed,
                                    Budget budget = {});
/// Black-box variant; carrier order is seed order, then discovery order.
ClosureResult generated_subgroupoid(const BlackBoxGroupoid& g,
                                    const std::vector<ElementId>& seed,
                                    Budget budget = {});

// Greedy removal in carrier order. Throws Error(NotGenerating).
ElementSet irreducible_generating_set(const FiniteGroupoid& g, const ElementSet& generators);

// Name used for the absorbing element of a null extension.
inline constexpr std::string_view kNullElement = "⊥";

// Totalization by a fresh absorbing element (named kNullElement, primed
// until fresh) that also stands in for every undefined composition.
FiniteGroupoid null_extension(const FiniteGroupoid& g);

struct Homomorphism {
  std::shared_ptr<const FiniteGroupoid> source;
  std::shared_ptr<const FiniteGroupoid> target;
  std::vector<Index> map;  // source index -> target index, total

  static Homomorphism from_names(std::shared_ptr<const FiniteGroupoid> source,
                                 std::shared_ptr<const FiniteGroupoid> target,
                                 const std::map<ElementId, ElementId>& assignment);
  static Homomorphism identity(std::shared_ptr<const FiniteGroupoid> g);
  static Homomorphism constant(std::shared_ptr<const FiniteGroupoid> source,
                               std::shared_ptr<const FiniteGroupoid> target, Index value);
};

Verdict check_homomorphism(const Homomorphism& h);
bool is_surjective(const Homomorphism& h);
// (f(P), f(D), .) ; throws Error(NotHomomorphism).
FiniteGroupoid image(const Homomorphism& h);

}  // namespace pg
