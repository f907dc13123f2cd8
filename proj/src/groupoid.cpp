#include "pgroupoid/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::InvalidGroupoid: return "invalid groupoid";
    case ErrorKind::ForeignElement: return "foreign element";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "i/o error";
    case ErrorKind::UnknownFixture: return "unknown fixture";
    case ErrorKind::BudgetExhausted: return "budget exhausted";
    case ErrorKind::NotGenerating: return "not a generating set";
    case ErrorKind::NotHomomorphism: return "not a homomorphism";
    case ErrorKind::NotPartialOrder: return "not a partial order";
    case ErrorKind::DomainNotReflexive: return "domain not reflexive";
    case ErrorKind::DomainNotSymmetric: return "domain not symmetric";
    case ErrorKind::Hypothesis: return "hypothesis not satisfied";
    case ErrorKind::Congruence: return "not an equivalence/congruence";
    case ErrorKind::WellDefinedness: return "quotient not well defined";
    case ErrorKind::SizeGuard: return "size guard exceeded";
    case ErrorKind::IcarViolation: return "ICAR violation";
    case ErrorKind::NoResolution: return "no dominating subset";
  }
  return "error";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidGroupoid:
    case ErrorKind::ForeignElement:
    case ErrorKind::Parse:
    case ErrorKind::Io:
    case ErrorKind::UnknownFixture:
      return true;
    default:
      return false;
  }
}

std::string format_tuple(const std::vector<ElementId>& elements) {
  std::string out = "(";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ',';
    out += elements[i];
  }
  out += ')';
  return out;
}

ElementSet make_set(std::vector<Index> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

namespace {

std::uint64_t pair_key(Index x, Index y) {
  return (static_cast<std::uint64_t>(x) << 32) | y;
}

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::vector<ElementId> elements, std::vector<Composition> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  if (elements_.empty()) {
    throw Error(ErrorKind::InvalidGroupoid, "carrier must be non-empty");
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto [it, inserted] = index_.emplace(elements_[i], static_cast<Index>(i));
    if (!inserted) {
      throw Error(ErrorKind::InvalidGroupoid, "duplicate element '" + elements_[i] + "'");
    }
  }
  const auto n = elements_.size();
  std::sort(table_.begin(), table_.end(), [](const Composition& a, const Composition& b) {
    return std::tie(a.left, a.right) < std::tie(b.left, b.right);
  });
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const auto& c = table_[i];
    if (c.left >= n || c.right >= n || c.result >= n) {
      throw Error(ErrorKind::InvalidGroupoid, "composition refers to an element outside the carrier");
    }
    if (i > 0 && table_[i - 1].left == c.left && table_[i - 1].right == c.right) {
      throw Error(ErrorKind::InvalidGroupoid, "duplicate composition for pair (" +
                                                  elements_[c.left] + "," + elements_[c.right] + ")");
    }
  }
  if (n * n <= kDenseLimit) {
    dense_.assign(n * n, kUndefined);
    for (const auto& c : table_) dense_[c.left * n + c.right] = c.result;
  } else {
    sparse_.reserve(table_.size());
    for (const auto& c : table_) sparse_.emplace(pair_key(c.left, c.right), c.result);
  }
}

FiniteGroupoid FiniteGroupoid::from_names(
    std::vector<ElementId> elements, const std::vector<std::array<ElementId, 3>>& compositions) {
  std::map<std::string, Index, std::less<>> lookup;
  for (std::size_t i = 0; i < elements.size(); ++i) lookup.emplace(elements[i], static_cast<Index>(i));
  auto at = [&](const ElementId& id) {
    auto it = lookup.find(id);
    if (it == lookup.end()) {
      throw Error(ErrorKind::InvalidGroupoid, "composition uses unknown element '" + id + "'");
    }
    return it->second;
  };
  std::vector<Composition> table;
  table.reserve(compositions.size());
  for (const auto& [x, y, r] : compositions) table.push_back({at(x), at(y), at(r)});
  return FiniteGroupoid(std::move(elements), std::move(table));
}

std::vector<ElementId> FiniteGroupoid::names(std::span<const Index> items) const {
  std::vector<ElementId> out;
  out.reserve(items.size());
  for (Index i : items) out.push_back(elements_.at(i));
  return out;
}

std::optional<Index> FiniteGroupoid::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index FiniteGroupoid::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::ForeignElement, "element '" + std::string(id) + "' is not in the carrier");
}

ElementSet FiniteGroupoid::indices_of(const std::vector<ElementId>& ids) const {
  std::vector<Index> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(index_of(id));
  return make_set(std::move(out));
}

std::optional<Index> FiniteGroupoid::compose(Index x, Index y) const {
  const auto n = elements_.size();
  if (x >= n || y >= n) {
    throw Error(ErrorKind::ForeignElement, "element index out of range");
  }
  if (!dense_.empty()) {
    Index r = dense_[x * n + y];
    if (r == kUndefined) return std::nullopt;
    return r;
  }
  auto it = sparse_.find(pair_key(x, y));
  if (it == sparse_.end()) return std::nullopt;
  return it->second;
}

FiniteGroupoid FiniteGroupoid::restrict_to(const ElementSet& subset) const {
  std::vector<Index> position(size(), kUndefined);
  std::vector<ElementId> names;
  for (Index i : subset) {
    position.at(i) = static_cast<Index>(names.size());
    names.push_back(elements_[i]);
  }
  std::vector<Composition> table;
  for (const auto& c : table_) {
    if (position[c.left] == kUndefined || position[c.right] == kUndefined ||
        position[c.result] == kUndefined) {
      continue;
    }
    table.push_back({position[c.left], position[c.right], position[c.result]});
  }
  return FiniteGroupoid(std::move(names), std::move(table));
}

bool FiniteGroupoid::operator==(const FiniteGroupoid& other) const {
  return elements_ == other.elements_ && table_ == other.table_;
}

std::optional<ElementId> BlackBoxGroupoid::compose(const ElementId& x, const ElementId& y) const {
  if (accepts && (!accepts(x) || !accepts(y))) {
    const auto& bad = accepts(x) ? y : x;
    throw Error(ErrorKind::ForeignElement, "element '" + bad + "' is outside the universe of " +
                                               (description.empty() ? "the groupoid" : description));
  }
  if (!match(x, y)) return std::nullopt;
  return merge(x, y);
}

ElementId BlackBoxGroupoid::canonicalize(const ElementId& x) const {
  return canonical ? canonical(x) : x;
}

BlackBoxGroupoid as_black_box(FiniteGroupoid g) {
  auto shared = std::make_shared<const FiniteGroupoid>(std::move(g));
  BlackBoxGroupoid bb;
  bb.description = "explicit table";
  bb.accepts = [shared](const ElementId& x) { return shared->find(x).has_value(); };
  bb.match = [shared](const ElementId& x, const ElementId& y) {
    return shared->defined(shared->index_of(x), shared->index_of(y));
  };
  bb.merge = [shared](const ElementId& x, const ElementId& y) {
    return shared->name(*shared->compose(shared->index_of(x), shared->index_of(y)));
  };
  bb.carrier = shared->elements();
  return bb;
}

std::optional<ElementId> compose(const FiniteGroupoid& g, std::string_view x, std::string_view y) {
  auto r = g.compose(g.index_of(x), g.index_of(y));
  if (!r) return std::nullopt;
  return g.name(*r);
}

// ---------------------------------------------------------------------------
// Subset products

namespace {

// Bitset-backed subsets of a carrier; n is small at the scales the
// exhaustive checkers run on.
using Mask = std::vector<bool>;

ElementSet mask_to_set(const Mask& m) {
  ElementSet out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) out.push_back(static_cast<Index>(i));
  }
  return out;
}

}  // namespace

ElementSet product_of_subsets(const FiniteGroupoid& g, std::span<const ElementSet> seq) {
  if (seq.empty()) throw Error(ErrorKind::InvalidArgument, "product of an empty sequence");
  const std::size_t len = seq.size();
  const std::size_t n = g.size();
  for (const auto& s : seq) {
    for (Index x : s) {
      if (x >= n) throw Error(ErrorKind::ForeignElement, "element index out of range");
    }
  }
  // span[i][j] holds the product of seq[i..j] as a sorted set.
  std::vector<std::vector<ElementSet>> span(len, std::vector<ElementSet>(len));
  for (std::size_t i = 0; i < len; ++i) span[i][i] = make_set(seq[i]);
  Mask hit(n);
  for (std::size_t width = 2; width <= len; ++width) {
    for (std::size_t i = 0; i + width <= len; ++i) {
      const std::size_t j = i + width - 1;
      std::fill(hit.begin(), hit.end(), false);
      for (std::size_t k = i; k < j; ++k) {
        for (Index y : span[i][k]) {
          for (Index z : span[k + 1][j]) {
            if (auto r = g.compose(y, z)) hit[*r] = true;
          }
        }
      }
      span[i][j] = mask_to_set(hit);
    }
  }
  return span[0][len - 1];
}

ElementSet word_product(const FiniteGroupoid& g, std::span<const Index> word) {
  std::vector<ElementSet> seq;
  seq.reserve(word.size());
  for (Index x : word) seq.push_back({x});
  return product_of_subsets(g, seq);
}

// ---------------------------------------------------------------------------
// Closure engine

namespace {

using ComposeFn = std::function<std::optional<ElementId>(const ElementId&, const ElementId&)>;

struct RawClosure {
  ClosureStatus status;
  std::vector<ElementId> carrier;
  std::vector<Composition> table;
  std::size_t rounds;
};

// Semi-naive fixed point: each round only evaluates pairs that involve at
// least one element first seen in the previous round.
RawClosure close_under(const ComposeFn& op, const std::vector<ElementId>& seed, Budget budget) {
  RawClosure out{ClosureStatus::Closed, {}, {}, 0};
  std::unordered_map<ElementId, Index> where;
  for (const auto& s : seed) {
    if (where.emplace(s, static_cast<Index>(out.carrier.size())).second) out.carrier.push_back(s);
  }
  if (out.carrier.empty()) throw Error(ErrorKind::InvalidArgument, "closure seed must be non-empty");
  if (out.carrier.size() > budget.max_elements) {
    throw Error(ErrorKind::InvalidArgument, "budget smaller than the seed");
  }

  bool escaped = false;
  std::size_t done = 0;  // pairs inside [0, done) are evaluated
  auto evaluate = [&](std::size_t limit, bool may_grow) {
    for (std::size_t i = 0; i < limit; ++i) {
      for (std::size_t j = 0; j < limit; ++j) {
        if (i < done && j < done) continue;
        auto r = op(out.carrier[i], out.carrier[j]);
        if (!r) continue;
        auto it = where.find(*r);
        if (it == where.end()) {
          if (!may_grow || out.carrier.size() >= budget.max_elements) {
            escaped = true;
            continue;
          }
          it = where.emplace(*r, static_cast<Index>(out.carrier.size())).first;
          out.carrier.push_back(*r);
        }
        out.table.push_back({static_cast<Index>(i), static_cast<Index>(j), it->second});
      }
    }
  };

  while (true) {
    if (out.rounds == budget.max_rounds) {
      // Round budget spent: finish the table for the last additions without
      // growing; the carrier is closed only if nothing escapes.
      evaluate(out.carrier.size(), false);
      out.status = escaped ? ClosureStatus::BudgetExhausted : ClosureStatus::Closed;
      return out;
    }
    ++out.rounds;
    const std::size_t limit = out.carrier.size();
    evaluate(limit, true);
    done = limit;
    if (escaped) {
      evaluate(out.carrier.size(), false);
      out.status = ClosureStatus::BudgetExhausted;
      return out;
    }
    if (out.carrier.size() == limit) return out;
  }
}

}  // namespace

ClosureResult generated_subgroupoid(const FiniteGroupoid& g, const ElementSet& seed, Budget budget) {
  if (seed.empty()) throw Error(ErrorKind::InvalidArgument, "generating set must be non-empty");
  std::vector<ElementId> names;
  for (Index i : seed) names.push_back(g.name(i));
  ComposeFn op = [&g](const ElementId& x, const ElementId& y) { return compose(g, x, y); };
  auto raw = close_under(op, names, budget);

  // Re-express in g's element order.
  std::vector<Index> source(raw.carrier.size());
  for (std::size_t i = 0; i < raw.carrier.size(); ++i) source[i] = g.index_of(raw.carrier[i]);
  std::vector<Index> order(raw.carrier.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return source[a] < source[b]; });
  std::vector<Index> rank(order.size());
  std::vector<ElementId> carrier;
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = static_cast<Index>(r);
    carrier.push_back(raw.carrier[order[r]]);
  }
  std::vector<Composition> table;
  for (const auto& c : raw.table) table.push_back({rank[c.left], rank[c.right], rank[c.result]});
  FiniteGroupoid sub(carrier, std::move(table));
  return ClosureResult{raw.status, std::move(carrier), std::move(sub), raw.rounds, budget};
}

ClosureResult generated_subgroupoid(const BlackBoxGroupoid& g, const std::vector<ElementId>& seed,
                                    Budget budget) {
  std::vector<ElementId> canonical;
  for (const auto& s : seed) {
    auto c = g.canonicalize(s);
    if (g.accepts && !g.accepts(c)) {
      throw Error(ErrorKind::ForeignElement, "element '" + s + "' is outside the universe");
    }
    canonical.push_back(std::move(c));
  }
  ComposeFn op = [&g](const ElementId& x, const ElementId& y) { return g.compose(x, y); };
  auto raw = close_under(op, canonical, budget);
  FiniteGroupoid sub(raw.carrier, std::move(raw.table));
  return ClosureResult{raw.status, std::move(raw.carrier), std::move(sub), raw.rounds, budget};
}

ElementSet irreducible_generating_set(const FiniteGroupoid& g, const ElementSet& generators) {
  const Budget unlimited{g.size(), g.size() + 1};
  auto generates = [&](const ElementSet& m) {
    if (m.empty()) return false;
    auto c = generated_subgroupoid(g, m, unlimited);
    return c.closed() && c.carrier.size() == g.size();
  };
  auto current = make_set(generators);
  if (!generates(current)) {
    throw Error(ErrorKind::NotGenerating, "the given set does not generate the carrier");
  }
  for (Index m : ElementSet(current)) {
    ElementSet without;
    std::copy_if(current.begin(), current.end(), std::back_inserter(without),
                 [m](Index x) { return x != m; });
    if (generates(without)) current = std::move(without);
  }
  return current;
}

FiniteGroupoid null_extension(const FiniteGroupoid& g) {
  ElementId bottom(kNullElement);
  while (g.find(bottom)) bottom += '\'';
  auto names = g.elements();
  names.push_back(bottom);
  const auto n = static_cast<Index>(g.size());
  std::vector<Composition> table;
  table.reserve((n + 1) * (n + 1));
  for (Index x = 0; x <= n; ++x) {
    for (Index y = 0; y <= n; ++y) {
      Index r = n;
      if (x < n && y < n) {
        if (auto v = g.compose(x, y)) r = *v;
      }
      table.push_back({x, y, r});
    }
  }
  return FiniteGroupoid(std::move(names), std::move(table));
}

// ---------------------------------------------------------------------------
// Homomorphisms

Homomorphism Homomorphism::from_names(std::shared_ptr<const FiniteGroupoid> source,
                                      std::shared_ptr<const FiniteGroupoid> target,
                                      const std::map<ElementId, ElementId>& assignment) {
  std::vector<Index> map(source->size());
  for (Index x = 0; x < source->size(); ++x) {
    auto it = assignment.find(source->name(x));
    if (it == assignment.end()) {
      throw Error(ErrorKind::InvalidArgument, "map is not total: no image for '" + source->name(x) + "'");
    }
    map[x] = target->index_of(it->second);
  }
  return {std::move(source), std::move(target), std::move(map)};
}

Homomorphism Homomorphism::identity(std::shared_ptr<const FiniteGroupoid> g) {
  std::vector<Index> map(g->size());
  std::iota(map.begin(), map.end(), 0);
  return {g, g, std::move(map)};
}

Homomorphism Homomorphism::constant(std::shared_ptr<const FiniteGroupoid> source,
                                    std::shared_ptr<const FiniteGroupoid> target, Index value) {
  if (value >= target->size()) throw Error(ErrorKind::ForeignElement, "constant outside target");
  std::vector<Index> map(source->size(), value);
  return {std::move(source), std::move(target), std::move(map)};
}

Verdict check_homomorphism(const Homomorphism& h) {
  const auto& src = *h.source;
  const auto& dst = *h.target;
  if (h.map.size() != src.size()) {
    throw Error(ErrorKind::InvalidArgument, "map is not total on the source carrier");
  }
  for (const auto& c : src.compositions()) {
    const Index fx = h.map[c.left];
    const Index fy = h.map[c.right];
    auto v = dst.compose(fx, fy);
    if (!v) {
      return Verdict::fail({{src.name(c.left), src.name(c.right)},
                            "f(x).f(y) undefined in the target"});
    }
    if (*v != h.map[c.result]) {
      return Verdict::fail({{src.name(c.left), src.name(c.right)}, "f(xy) != f(x).f(y)"});
    }
  }
  return Verdict::pass();
}

bool is_surjective(const Homomorphism& h) {
  std::vector<bool> hit(h.target->size());
  for (Index v : h.map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FiniteGroupoid image(const Homomorphism& h) {
  auto verdict = check_homomorphism(h);
  if (!verdict.holds) {
    throw Error(ErrorKind::NotHomomorphism,
                "not a homomorphism; witness " + format_tuple(verdict.witness->elements));
  }
  auto carrier = make_set(h.map);
  auto sub = h.target->restrict_to(carrier);
  // Keep only f(D): pairs of images of composable source pairs.
  std::vector<Composition> table;
  std::vector<bool> seen(sub.size() * sub.size());
  for (const auto& c : h.source->compositions()) {
    Index x = sub.index_of(h.target->name(h.map[c.left]));
    Index y = sub.index_of(h.target->name(h.map[c.right]));
    if (seen[x * sub.size() + y]) continue;
    seen[x * sub.size() + y] = true;
    table.push_back({x, y, sub.index_of(h.target->name(h.map[c.result]))});
  }
  return FiniteGroupoid(sub.elements(), std::move(table));
}

}  // namespace pg
