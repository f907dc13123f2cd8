#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pgroupoid/groupoid.hpp"

namespace pg {

/// Directed graph with an edge (p1, p2) for every pair in D.
struct DomainGraph {
  std::vector<ElementId> nodes;
  std::vector<std::pair<Index, Index>> edges;  // sorted
  // Each (p1, p2) in D is also labelled with p1 p2.
  std::vector<Index> labels;

  bool has_edge(Index x, Index y) const;
  // Undirected simple view: {x, y} with x < y and an edge either way.
  std::vector<std::pair<Index, Index>> symmetric_view() const;
};

DomainGraph domain_graph(const FiniteGroupoid& g);

struct Component {
  ElementSet nodes;
  FiniteGroupoid subgroupoid;
  bool closed = false;  // compositions inside stay inside
};

struct Components {
  std::vector<Component> parts;  // ordered by smallest member
  // Fails with the first cross-component pair in D (never expected).
  Verdict separation;
};

Components connected_components(const FiniteGroupoid& g);

struct TotalityResult {
  bool total = false;
  bool graph_complete = false;  // symmetric view complete and every loop present
  std::optional<Witness> missing;  // first ordered pair outside D
};

// Throws Error(DomainNotSymmetric) when S fails.
TotalityResult is_total(const FiniteGroupoid& g);

struct Clique {
  ElementSet nodes;
  FiniteGroupoid subgroupoid;  // restriction of g to the clique
  bool total = false;   // every ordered pair inside, loops included, in D
  bool closed = false;  // every composition inside lands inside
};

struct CliqueCover {
  std::vector<Clique> cliques;
};

// Greedy cover of the graph of pairs defined both ways (loops ignored for
// adjacency): grow a maximal clique from the lowest uncovered node, then
// from the lowest uncovered edge.
CliqueCover clique_cover(const FiniteGroupoid& g);

// Sorted nodes and edges; edge labels give the composition.
std::string to_dot(const FiniteGroupoid& g, const std::string& name = "domain");

}  // namespace pg
