#include "pgroupoid/domain_graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <tuple>

namespace pg {

bool DomainGraph::has_edge(Index x, Index y) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(x, y));
}

std::vector<std::pair<Index, Index>> DomainGraph::symmetric_view() const {
  std::vector<std::pair<Index, Index>> out;
  for (auto [x, y] : edges) {
    if (x == y) continue;
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DomainGraph domain_graph(const FiniteGroupoid& g) {
  DomainGraph dg;
  dg.nodes = g.elements();
  for (const auto& c : g.compositions()) {
    dg.edges.emplace_back(c.left, c.right);
    dg.labels.push_back(c.result);
  }
  return dg;
}

namespace {

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool closed_under(const FiniteGroupoid& g, const ElementSet& s) {
  for (Index x : s)
    for (Index y : s)
      if (auto v = g.compose(x, y); v && !std::binary_search(s.begin(), s.end(), *v)) return false;
  return true;
}

}  // namespace

Components connected_components(const FiniteGroupoid& g) {
  const auto n = static_cast<Index>(g.size());
  UnionFind uf(n);
  for (const auto& c : g.compositions()) uf.unite(c.left, c.right);
  std::vector<ElementSet> groups;
  std::vector<int> slot(n, -1);
  std::vector<Index> component_of(n);
  for (Index x = 0; x < n; ++x) {
    Index root = uf.find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    component_of[x] = static_cast<Index>(slot[root]);
    groups[slot[root]].push_back(x);
  }
  Components out{{}, Verdict::pass()};
  for (auto& nodes : groups) {
    auto sub = g.restrict_to(nodes);
    bool closed = closed_under(g, nodes);
    out.parts.push_back({std::move(nodes), std::move(sub), closed});
  }
  for (const auto& c : g.compositions()) {
    if (component_of[c.left] != component_of[c.right]) {
      out.separation = Verdict::fail({{g.name(c.left), g.name(c.right)},
                                      "composition crosses components"});
      break;
    }
  }
  return out;
}

TotalityResult is_total(const FiniteGroupoid& g) {
  const auto n = static_cast<Index>(g.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (g.defined(x, y) != g.defined(y, x)) {
        throw Error(ErrorKind::DomainNotSymmetric,
                    "(" + g.name(x) + "," + g.name(y) + ") in D but not its reverse");
      }
    }
  }
  TotalityResult out;
  out.total = g.domain_size() == std::size_t{n} * n;
  for (Index x = 0; x < n && !out.missing; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!g.defined(x, y)) {
        out.missing = Witness{{g.name(x), g.name(y)}, "pair not in D"};
        break;
      }
    }
  }
  auto dg = domain_graph(g);
  std::size_t loops = 0;
  for (auto [x, y] : dg.edges) loops += x == y;
  out.graph_complete = loops == n && dg.symmetric_view().size() == std::size_t{n} * (n - 1) / 2;
  return out;
}

CliqueCover clique_cover(const FiniteGroupoid& g) {
  const auto n = static_cast<Index>(g.size());
  std::vector<bool> adj(std::size_t{n} * n, false);
  for (const auto& c : g.compositions()) {
    if (c.left != c.right && g.defined(c.right, c.left)) adj[c.left * n + c.right] = true;
  }
  auto adjacent = [&](Index x, Index y) { return adj[x * n + y]; };

  std::vector<bool> node_covered(n, false);
  std::vector<bool> edge_covered(std::size_t{n} * n, false);
  std::vector<ElementSet> cliques;
  auto grow = [&](ElementSet members) {
    for (Index v = 0; v < n; ++v) {
      if (std::find(members.begin(), members.end(), v) != members.end()) continue;
      if (std::all_of(members.begin(), members.end(), [&](Index m) { return adjacent(m, v); })) {
        members.push_back(v);
      }
    }
    std::sort(members.begin(), members.end());
    for (Index a : members) {
      node_covered[a] = true;
      for (Index b : members) edge_covered[a * n + b] = true;
    }
    cliques.push_back(std::move(members));
  };

  for (Index v = 0; v < n; ++v)
    if (!node_covered[v]) grow({v});
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      if (adjacent(x, y) && !edge_covered[x * n + y]) grow({x, y});

  CliqueCover cover;
  for (auto& members : cliques) {
    Clique c{members, g.restrict_to(members), true, closed_under(g, members)};
    for (Index a : members)
      for (Index b : members)
        if (!g.defined(a, b)) c.total = false;
    cover.cliques.push_back(std::move(c));
  }
  return cover;
}

namespace {

std::string dot_id(const std::string& s) {
  bool ident = !s.empty() && !std::isdigit(static_cast<unsigned char>(s[0]));
  bool numeral = !s.empty();
  for (unsigned char ch : s) {
    if (!(std::isalnum(ch) || ch == '_')) ident = false;
    if (!std::isdigit(ch)) numeral = false;
  }
  if (ident || numeral) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const FiniteGroupoid& g, const std::string& name) {
  auto dg = domain_graph(g);
  std::vector<Index> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return g.name(a) < g.name(b); });
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (std::size_t i = 0; i < dg.edges.size(); ++i) {
    edges.emplace_back(g.name(dg.edges[i].first), g.name(dg.edges[i].second), g.name(dg.labels[i]));
  }
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "digraph " << dot_id(name) << " {\n";
  for (Index v : order) out << "  " << dot_id(g.name(v)) << ";\n";
  for (const auto& [x, y, r] : edges) {
    out << "  " << dot_id(x) << " -> " << dot_id(y) << " [label=" << dot_id(r) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pg
