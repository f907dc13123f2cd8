#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pgroupoid/groupoid.hpp"

namespace pg {

// Records --------------------------------------------------------------------

/// Attribute name -> non-empty value set.
struct Record {
  std::map<std::string, std::set<std::string>> attributes;

  bool operator==(const Record&) const = default;
};

// Compact JSON with sorted keys and sorted values, e.g.
// {"mail":["m1"],"name":["ann"]}.
ElementId canonical_id(const Record& r);
// Throws Error(Parse) for text that is not a record object.
Record parse_record(const std::string& json_text);

// Attribute-wise union.
Record merge_records(const Record& a, const Record& b);
// Some key attribute shares at least one value.
bool records_match(const Record& a, const Record& b, const std::vector<std::string>& key_attributes);

struct RecordMatchRule {
  std::vector<std::string> key_attributes;
};

// Throws Error(InvalidArgument) for an empty key list.
BlackBoxGroupoid record_groupoid(const RecordMatchRule& rule);

// Paths ----------------------------------------------------------------------

struct Digraph {
  struct Arc {
    std::string name;
    std::string from;
    std::string to;
  };
  std::vector<std::string> nodes;
  std::vector<Arc> arcs;  // names distinct, endpoints among nodes
};

/// Arc indices into a host digraph.
struct DiPath {
  std::vector<std::size_t> edges;

  bool operator==(const DiPath&) const = default;
};

// Chained, distinct edges with distinct end vertices.
bool is_valid_path(const Digraph& host, const DiPath& p);
// "[e1,e2]" from arc names.
ElementId path_id(const Digraph& host, const DiPath& p);
// Throws Error(ForeignElement) for unknown arcs or invalid paths.
DiPath parse_path(const Digraph& host, const std::string& id);

// Smallest i with e_i..e_m = f_1..f_{m-i+1}; the result is
// [e_1..e_{i-1}, f_1..f_n] when that is again a path.
std::optional<DiPath> compose_paths(const Digraph& host, const DiPath& e, const DiPath& f);

// Every path of the host, sorted by id.
std::vector<DiPath> all_paths(const Digraph& host);

// Throws Error(InvalidGroupoid) for a malformed host.
BlackBoxGroupoid path_groupoid(Digraph host);

// Chains ---------------------------------------------------------------------

// Infinite carrier a1, a2, ... with a_i a_{i+1} = a_{i+2}, plus a_i a_i = a_i
// when `loops` is set.
BlackBoxGroupoid chain_groupoid(bool loops);

// Builtin fixtures -----------------------------------------------------------

struct FixtureInfo {
  std::string name;
  std::string description;
  std::size_t default_size;  // 0 for fixed-size fixtures
};

const std::vector<FixtureInfo>& builtin_fixtures();

// size == 0 selects the default. Throws Error(UnknownFixture).
FiniteGroupoid builtin(const std::string& name, std::size_t size = 0);

// Merge closure of `seed` as a finite groupoid; Error(BudgetExhausted) when
// the closure does not close.
FiniteGroupoid materialize(const BlackBoxGroupoid& g, const std::vector<ElementId>& seed,
                           Budget budget = {});

}  // namespace pg
