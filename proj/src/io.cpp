#include "pgroupoid/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pgroupoid/adapters.hpp"

namespace pg {

using nlohmann::json;

namespace {

[[noreturn]] void fail_at(const std::string& origin, const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::Parse, origin + ": at " + (pointer.empty() ? "/" : pointer) + ": " + what);
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    throw Error(ErrorKind::Parse, origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

const json& require(const json& obj, const std::string& key, const std::string& origin) {
  auto it = obj.find(key);
  if (it == obj.end()) fail_at(origin, "", "missing key '" + key + "'");
  return *it;
}

std::string as_string(const json& j, const std::string& origin, const std::string& pointer) {
  if (!j.is_string()) fail_at(origin, pointer, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_array(const json& j, const std::string& origin, const std::string& pointer) {
  if (!j.is_array()) fail_at(origin, pointer, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], origin, pointer + "/" + std::to_string(i)));
  return out;
}

std::string record_text(const json& j, const std::string& origin, const std::string& pointer) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_object()) fail_at(origin, pointer, "expected a record object");
  try {
    return canonical_id(parse_record(j.dump()));
  } catch (const Error& e) {
    fail_at(origin, pointer, e.what());
  }
}

std::vector<ElementId> instance_from(const Source& src, const json& arr, const std::string& origin,
                                     const std::string& pointer) {
  if (!arr.is_array()) fail_at(origin, pointer, "expected an array");
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto at = pointer + "/" + std::to_string(i);
    out.push_back(src.kind == "records" ? record_text(arr[i], origin, at) : as_string(arr[i], origin, at));
  }
  return out;
}

Source groupoid_source(const json& doc, const std::string& origin) {
  auto elements = string_array(require(doc, "elements", origin), origin, "/elements");
  const auto& comps = require(doc, "compositions", origin);
  if (!comps.is_array()) fail_at(origin, "/compositions", "expected an array");
  std::vector<std::array<ElementId, 3>> triples;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto at = "/compositions/" + std::to_string(i);
    auto t = string_array(comps[i], origin, at);
    if (t.size() != 3) fail_at(origin, at, "expected [x, y, result]");
    if (!seen.emplace(t[0], t[1]).second) fail_at(origin, at, "duplicate composition for (" + t[0] + "," + t[1] + ")");
    triples.push_back({t[0], t[1], t[2]});
  }
  Source src;
  src.kind = "groupoid";
  src.finite = FiniteGroupoid::from_names(std::move(elements), triples);
  if (auto it = doc.find("order"); it != doc.end()) {
    if (!it->is_array()) fail_at(origin, "/order", "expected an array");
    std::vector<std::pair<ElementId, ElementId>> pairs;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto at = "/order/" + std::to_string(i);
      auto p = string_array((*it)[i], origin, at);
      if (p.size() != 2) fail_at(origin, at, "expected [p, q]");
      src.finite->index_of(p[0]);
      src.finite->index_of(p[1]);
      pairs.emplace_back(p[0], p[1]);
    }
    src.order = std::move(pairs);
  }
  return src;
}

Source records_source(const json& doc, const std::string& origin) {
  RecordMatchRule rule{string_array(require(doc, "key_attributes", origin), origin, "/key_attributes")};
  Source src;
  src.kind = "records";
  src.black_box = record_groupoid(rule);
  const auto& recs = require(doc, "records", origin);
  if (!recs.is_array() || recs.empty()) fail_at(origin, "/records", "expected a non-empty array");
  for (std::size_t i = 0; i < recs.size(); ++i) {
    src.instance.push_back(record_text(recs[i], origin, "/records/" + std::to_string(i)));
  }
  return src;
}

Source digraph_source(const json& doc, const std::string& origin) {
  Digraph host;
  host.nodes = string_array(require(doc, "nodes", origin), origin, "/nodes");
  const auto& arcs = require(doc, "arcs", origin);
  if (!arcs.is_array()) fail_at(origin, "/arcs", "expected an array");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto at = "/arcs/" + std::to_string(i);
    auto a = string_array(arcs[i], origin, at);
    if (a.size() != 2 && a.size() != 3) fail_at(origin, at, "expected [u, v] or [u, v, name]");
    host.arcs.push_back({a.size() == 3 ? a[2] : "e" + std::to_string(i + 1), a[0], a[1]});
  }
  Source src;
  src.kind = "digraph";
  try {
    src.black_box = path_groupoid(std::move(host));
  } catch (const Error& e) {
    fail_at(origin, "/arcs", e.what());
  }
  src.instance = src.black_box.carrier;
  return src;
}

}  // namespace

Source builtin_source(const std::string& name, std::size_t size) {
  Source src;
  src.kind = "builtin";
  src.origin = name;
  src.finite = builtin(name, size);
  src.black_box = as_black_box(*src.finite);
  return src;
}

Source load_source_text(const std::string& text, const std::string& origin) {
  json doc = parse_json(text, origin);
  if (!doc.is_object()) fail_at(origin, "", "expected a JSON object");
  Source src;
  if (doc.contains("elements")) {
    src = groupoid_source(doc, origin);
    src.black_box = as_black_box(*src.finite);
  } else if (doc.contains("records")) {
    src = records_source(doc, origin);
  } else if (doc.contains("arcs")) {
    src = digraph_source(doc, origin);
  } else if (doc.contains("chain")) {
    const auto& c = doc["chain"];
    if (!c.is_object()) fail_at(origin, "/chain", "expected an object");
    bool loops = false;
    if (auto it = c.find("loops"); it != c.end()) {
      if (!it->is_boolean()) fail_at(origin, "/chain/loops", "expected a boolean");
      loops = it->get<bool>();
    }
    src.kind = "chain";
    src.black_box = chain_groupoid(loops);
  } else if (doc.contains("builtin")) {
    std::size_t size = 0;
    if (auto it = doc.find("size"); it != doc.end()) {
      if (!it->is_number_unsigned()) fail_at(origin, "/size", "expected a non-negative integer");
      size = it->get<std::size_t>();
    }
    src = builtin_source(as_string(doc["builtin"], origin, "/builtin"), size);
  } else {
    fail_at(origin, "", "expected one of the keys elements, records, arcs, chain, builtin");
  }
  src.origin = origin;
  if (auto it = doc.find("instance"); it != doc.end()) {
    src.instance = instance_from(src, *it, origin, "/instance");
  }
  return src;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Source load_source_file(const std::string& path) {
  for (const auto& candidate : {path, path + ".json"}) {
    std::ifstream probe(candidate);
    if (probe) return load_source_text(read_file(candidate), candidate);
  }
  throw Error(ErrorKind::Io, "cannot open '" + path + "' (also tried '" + path + ".json')");
}

std::vector<ElementId> parse_instance_list(const Source& src, const std::string& spec) {
  auto first = spec.find_first_not_of(" \t");
  if (first != std::string::npos && spec[first] == '[') {
    return instance_from(src, parse_json(spec, "--instance"), "--instance", "");
  }
  std::vector<ElementId> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<ElementId> load_instance_text(const Source& src, const std::string& text, const std::string& origin) {
  json doc = parse_json(text, origin);
  if (!doc.is_object()) fail_at(origin, "", "expected a JSON object");
  return instance_from(src, require(doc, "instance", origin), origin, "/instance");
}

FiniteGroupoid finite_view(const Source& src, const std::vector<ElementId>& instance, Budget budget) {
  if (src.finite && instance.empty()) return *src.finite;
  const auto& seed = instance.empty() ? src.instance : instance;
  if (seed.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a " + src.kind + " source needs an instance (--instance)");
  }
  std::vector<ElementId> canonical;
  for (const auto& id : seed) {
    auto c = src.black_box.canonicalize(id);
    if (src.black_box.accepts && !src.black_box.accepts(c)) {
      throw Error(ErrorKind::ForeignElement, "element '" + id + "' is outside the universe of " + src.origin);
    }
    canonical.push_back(std::move(c));
  }
  return materialize(src.black_box, canonical, budget);
}

}  // namespace pg
