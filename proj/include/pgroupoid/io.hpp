#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgroupoid/groupoid.hpp"

namespace pg {

/// A loaded document: an explicit table, or a black-box adapter plus the
/// instance to close when a finite view is needed.
struct Source {
  std::string kind;  // groupoid, records, digraph, chain, builtin
  std::string origin;
  std::optional<FiniteGroupoid> finite;
  BlackBoxGroupoid black_box;
  std::vector<ElementId> instance;  // default instance, canonical ids
  std::optional<std::vector<std::pair<ElementId, ElementId>>> order;
};

// Documents (JSON):
//   {"elements": [...], "compositions": [[x, y, r], ...], "order": [[p, q], ...]}
//   {"records": [{attr: [values]}, ...], "key_attributes": [...]}
//   {"nodes": [...], "arcs": [[u, v] | [u, v, name], ...]}
//   {"chain": {"loops": bool}}
//   {"builtin": name, "size": n}
// Any of them may carry "instance": ids, or record objects for records.
// Malformed text throws Error(Parse) with line:column or a JSON pointer.
Source load_source_text(const std::string& text, const std::string& origin = "<input>");
// Tries `path`, then `path` + ".json"; Error(Io) when neither opens.
Source load_source_file(const std::string& path);
Source builtin_source(const std::string& name, std::size_t size = 0);

std::string read_file(const std::string& path);

// "a,b,c", or a JSON array of ids / record objects when it starts with '['.
std::vector<ElementId> parse_instance_list(const Source& src, const std::string& spec);
// Document with an "instance" key.
std::vector<ElementId> load_instance_text(const Source& src, const std::string& text,
                                          const std::string& origin = "<instance>");

// The explicit table itself, or the merge closure of `instance` (falling
// back to the source's default instance). Error(BudgetExhausted) when the
// closure does not close; Error(InvalidArgument) without any instance.
FiniteGroupoid finite_view(const Source& src, const std::vector<ElementId>& instance, Budget budget = {});

}  // namespace pg
