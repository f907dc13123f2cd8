#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pg {

using ElementId = std::string;

// Elements that violate a law, in the order of the law's quantified
// variables, plus a short note on which clause failed.
struct Witness {
  std::vector<ElementId> elements;
  std::string detail;

  bool operator==(const Witness&) const = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  std::string note;

  static Verdict pass(std::string note = {}) { return {true, std::nullopt, std::move(note)}; }
  static Verdict fail(Witness w, std::string note = {}) {
    return {false, std::move(w), std::move(note)};
  }
};

// "(a,b,c)"
std::string format_tuple(const std::vector<ElementId>& elements);

}  // namespace pg
