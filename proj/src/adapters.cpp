#include "pgroupoid/adapters.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <memory>

#include "json.hpp"

namespace pg {

using nlohmann::json;

// Records --------------------------------------------------------------------

ElementId canonical_id(const Record& r) {
  json j = json::object();
  for (const auto& [attr, values] : r.attributes) j[attr] = json(std::vector<std::string>(values.begin(), values.end()));
  return j.dump();
}

Record parse_record(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, "record is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object() || j.empty()) throw Error(ErrorKind::Parse, "record must be a non-empty object");
  Record r;
  for (const auto& [attr, values] : j.items()) {
    if (!values.is_array() || values.empty()) {
      throw Error(ErrorKind::Parse, "attribute '" + attr + "' must map to a non-empty array");
    }
    auto& slot = r.attributes[attr];
    for (const auto& v : values) {
      if (!v.is_string()) throw Error(ErrorKind::Parse, "values of '" + attr + "' must be strings");
      slot.insert(v.get<std::string>());
    }
  }
  return r;
}

Record merge_records(const Record& a, const Record& b) {
  Record out = a;
  for (const auto& [attr, values] : b.attributes) out.attributes[attr].insert(values.begin(), values.end());
  return out;
}

bool records_match(const Record& a, const Record& b, const std::vector<std::string>& key_attributes) {
  for (const auto& key : key_attributes) {
    auto ia = a.attributes.find(key);
    auto ib = b.attributes.find(key);
    if (ia == a.attributes.end() || ib == b.attributes.end()) continue;
    for (const auto& v : ia->second)
      if (ib->second.count(v)) return true;
  }
  return false;
}

BlackBoxGroupoid record_groupoid(const RecordMatchRule& rule) {
  if (rule.key_attributes.empty()) throw Error(ErrorKind::InvalidArgument, "key_attributes must be non-empty");
  auto keys = std::make_shared<const std::vector<std::string>>(rule.key_attributes);
  BlackBoxGroupoid bb;
  bb.description = "union-merge records";
  bb.accepts = [](const ElementId& id) {
    try {
      return canonical_id(parse_record(id)) == id;
    } catch (const Error&) {
      return false;
    }
  };
  bb.canonical = [](const ElementId& id) {
    try {
      return canonical_id(parse_record(id));
    } catch (const Error&) {
      return id;
    }
  };
  bb.match = [keys](const ElementId& x, const ElementId& y) {
    return records_match(parse_record(x), parse_record(y), *keys);
  };
  bb.merge = [](const ElementId& x, const ElementId& y) {
    return canonical_id(merge_records(parse_record(x), parse_record(y)));
  };
  return bb;
}

// Paths ----------------------------------------------------------------------

bool is_valid_path(const Digraph& host, const DiPath& p) {
  if (p.edges.empty()) return false;
  std::set<std::size_t> seen_edges;
  std::set<std::string> seen_ends;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] >= host.arcs.size()) return false;
    const auto& arc = host.arcs[p.edges[i]];
    if (i > 0 && host.arcs[p.edges[i - 1]].to != arc.from) return false;
    if (!seen_edges.insert(p.edges[i]).second) return false;
    if (!seen_ends.insert(arc.to).second) return false;
  }
  return true;
}

ElementId path_id(const Digraph& host, const DiPath& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ',';
    out += host.arcs.at(p.edges[i]).name;
  }
  return out + "]";
}

DiPath parse_path(const Digraph& host, const std::string& id) {
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  std::string body = trim(id);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw Error(ErrorKind::ForeignElement, "'" + id + "' is not a path of the form [e1,...,em]");
  }
  body = body.substr(1, body.size() - 2);
  DiPath p;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    auto name = trim(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    auto it = std::find_if(host.arcs.begin(), host.arcs.end(),
                           [&](const Digraph::Arc& a) { return a.name == name; });
    if (it == host.arcs.end()) throw Error(ErrorKind::ForeignElement, "unknown arc '" + name + "' in " + id);
    p.edges.push_back(static_cast<std::size_t>(it - host.arcs.begin()));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!is_valid_path(host, p)) throw Error(ErrorKind::ForeignElement, "'" + id + "' is not a path of the host");
  return p;
}

std::optional<DiPath> compose_paths(const Digraph& host, const DiPath& e, const DiPath& f) {
  const std::size_t m = e.edges.size();
  const std::size_t n = f.edges.size();
  for (std::size_t i = 1; i <= std::min(m, n); ++i) {
    const std::size_t overlap = m - i + 1;
    if (overlap > n) continue;
    if (!std::equal(e.edges.begin() + static_cast<std::ptrdiff_t>(i - 1), e.edges.end(), f.edges.begin())) {
      continue;
    }
    DiPath out;
    out.edges.assign(e.edges.begin(), e.edges.begin() + static_cast<std::ptrdiff_t>(i - 1));
    out.edges.insert(out.edges.end(), f.edges.begin(), f.edges.end());
    if (!is_valid_path(host, out)) return std::nullopt;
    return out;
  }
  return std::nullopt;
}

std::vector<DiPath> all_paths(const Digraph& host) {
  std::vector<DiPath> out;
  DiPath current;
  std::function<void()> extend = [&] {
    out.push_back(current);
    const auto& end = host.arcs[current.edges.back()].to;
    for (std::size_t a = 0; a < host.arcs.size(); ++a) {
      if (host.arcs[a].from != end) continue;
      current.edges.push_back(a);
      if (is_valid_path(host, current)) extend();
      current.edges.pop_back();
    }
  };
  for (std::size_t a = 0; a < host.arcs.size(); ++a) {
    current.edges = {a};
    extend();
  }
  std::sort(out.begin(), out.end(),
            [&](const DiPath& x, const DiPath& y) { return path_id(host, x) < path_id(host, y); });
  return out;
}

BlackBoxGroupoid path_groupoid(Digraph host) {
  std::set<std::string> nodes(host.nodes.begin(), host.nodes.end());
  std::set<std::string> names;
  for (const auto& a : host.arcs) {
    if (!nodes.count(a.from) || !nodes.count(a.to)) {
      throw Error(ErrorKind::InvalidGroupoid, "arc '" + a.name + "' has an endpoint outside the node list");
    }
    if (a.name.empty() || a.name.find_first_of(",[] ") != std::string::npos) {
      throw Error(ErrorKind::InvalidGroupoid, "arc name '" + a.name + "' must be non-empty without , [ ] or spaces");
    }
    if (!names.insert(a.name).second) throw Error(ErrorKind::InvalidGroupoid, "duplicate arc name '" + a.name + "'");
  }
  auto h = std::make_shared<const Digraph>(std::move(host));
  BlackBoxGroupoid bb;
  bb.description = "paths of a digraph";
  bb.accepts = [h](const ElementId& id) {
    try {
      return path_id(*h, parse_path(*h, id)) == id;
    } catch (const Error&) {
      return false;
    }
  };
  bb.canonical = [h](const ElementId& id) {
    try {
      return path_id(*h, parse_path(*h, id));
    } catch (const Error&) {
      return id;
    }
  };
  bb.match = [h](const ElementId& x, const ElementId& y) {
    return compose_paths(*h, parse_path(*h, x), parse_path(*h, y)).has_value();
  };
  bb.merge = [h](const ElementId& x, const ElementId& y) {
    return path_id(*h, *compose_paths(*h, parse_path(*h, x), parse_path(*h, y)));
  };
  for (const auto& p : all_paths(*h)) bb.carrier.push_back(path_id(*h, p));
  return bb;
}

// Chains ---------------------------------------------------------------------

namespace {

std::optional<std::uint64_t> chain_index(const ElementId& id) {
  if (id.size() < 2 || id[0] != 'a' || id[1] == '0') return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), v);
  if (ec != std::errc{} || ptr != id.data() + id.size() || v == 0) return std::nullopt;
  return v;
}

}  // namespace

BlackBoxGroupoid chain_groupoid(bool loops) {
  BlackBoxGroupoid bb;
  bb.description = loops ? "chain a_i a_i = a_i, a_i a_(i+1) = a_(i+2)" : "chain a_i a_(i+1) = a_(i+2)";
  bb.accepts = [](const ElementId& id) { return chain_index(id).has_value(); };
  bb.match = [loops](const ElementId& x, const ElementId& y) {
    auto i = *chain_index(x);
    auto j = *chain_index(y);
    return j == i + 1 || (loops && i == j);
  };
  bb.merge = [](const ElementId& x, const ElementId& y) {
    auto i = *chain_index(x);
    auto j = *chain_index(y);
    return i == j ? x : "a" + std::to_string(i + 2);
  };
  return bb;
}

// Builtin fixtures -----------------------------------------------------------

const std::vector<FixtureInfo>& builtin_fixtures() {
  static const std::vector<FixtureInfo> list = {
      {"P1", "a, b, c with loops, ab = b, bc = c", 0},
      {"Q2", "a*b = c, b*c = b, c*c = b", 0},
      {"maxN", "{0..n-1} under max (total)", 10},
      {"chainA", "a1..an with a_i a_(i+1) = a_(i+2), truncated", 8},
      {"uchain", "a1..an with loops and a_i a_(i+1) = a_(i+2), truncated", 8},
      {"twoblock", "two idempotents x, y and nothing else", 0},
      {"leftzero2", "p, q with xy = x for all x, y (one ~c class)", 0},
      {"P1sym", "P1 plus ba = b, cb = c", 0},
      {"unit", "a single idempotent e", 0},
  };
  return list;
}

FiniteGroupoid builtin(const std::string& name, std::size_t size) {
  using Triples = std::vector<std::array<ElementId, 3>>;
  auto sized = [&](std::size_t fallback) { return size == 0 ? fallback : size; };
  if (name == "P1") {
    return FiniteGroupoid::from_names(
        {"a", "b", "c"}, Triples{{"a", "a", "a"}, {"b", "b", "b"}, {"c", "c", "c"}, {"a", "b", "b"}, {"b", "c", "c"}});
  }
  if (name == "P1sym") {
    return FiniteGroupoid::from_names({"a", "b", "c"},
                                      Triples{{"a", "a", "a"}, {"b", "b", "b"}, {"c", "c", "c"}, {"a", "b", "b"},
                                              {"b", "a", "b"}, {"b", "c", "c"}, {"c", "b", "c"}});
  }
  if (name == "Q2") {
    return FiniteGroupoid::from_names({"a", "b", "c"}, Triples{{"a", "b", "c"}, {"b", "c", "b"}, {"c", "c", "b"}});
  }
  if (name == "maxN") {
    const auto n = static_cast<Index>(sized(10));
    std::vector<ElementId> names;
    std::vector<Composition> table;
    for (Index i = 0; i < n; ++i) names.push_back(std::to_string(i));
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) table.push_back({x, y, std::max(x, y)});
    return FiniteGroupoid(std::move(names), std::move(table));
  }
  if (name == "chainA" || name == "uchain") {
    const auto n = static_cast<Index>(sized(8));
    std::vector<ElementId> names;
    std::vector<Composition> table;
    for (Index i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
    for (Index i = 0; i < n; ++i) {
      if (name == "uchain") table.push_back({i, i, i});
      if (i + 2 < n) table.push_back({i, i + 1, i + 2});
    }
    return FiniteGroupoid(std::move(names), std::move(table));
  }
  if (name == "twoblock") {
    return FiniteGroupoid::from_names({"x", "y"}, Triples{{"x", "x", "x"}, {"y", "y", "y"}});
  }
  if (name == "leftzero2") {
    return FiniteGroupoid::from_names({"p", "q"},
                                      Triples{{"p", "p", "p"}, {"p", "q", "p"}, {"q", "p", "q"}, {"q", "q", "q"}});
  }
  if (name == "unit") return FiniteGroupoid::from_names({"e"}, Triples{{"e", "e", "e"}});
  throw Error(ErrorKind::UnknownFixture, "unknown fixture '" + name + "'");
}

FiniteGroupoid materialize(const BlackBoxGroupoid& g, const std::vector<ElementId>& seed, Budget budget) {
  auto c = generated_subgroupoid(g, seed, budget);
  if (!c.closed()) {
    throw Error(ErrorKind::BudgetExhausted, "closure exceeded the budget after " + std::to_string(c.iterations) +
                                                " round(s) with " + std::to_string(c.carrier.size()) +
                                                " element(s)");
  }
  return std::move(c.groupoid);
}

}  // namespace pg
