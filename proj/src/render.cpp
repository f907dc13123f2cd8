#include "pgroupoid/render.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pgroupoid/adapters.hpp"
#include "pgroupoid/domain_graph.hpp"
#include "pgroupoid/order.hpp"
#include "pgroupoid/properties.hpp"
#include "pgroupoid/quotient.hpp"

namespace pg {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string set_text(const std::vector<ElementId>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out + "}";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

ordered_json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return ordered_json{{"elements", w->elements}, {"detail", w->detail}};
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j{{"holds", v.holds}, {"witness", witness_json(v.witness)}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

std::string verdict_text(const Verdict& v) {
  if (v.holds) return "yes";
  std::string out = "no";
  if (v.witness) {
    if (!v.witness->elements.empty()) out += " " + format_tuple(v.witness->elements);
    out += " " + v.witness->detail;
  }
  return out;
}

ordered_json groupoid_json(const FiniteGroupoid& g) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : g.compositions()) comps.push_back({g.name(c.left), g.name(c.right), g.name(c.result)});
  return ordered_json{{"elements", g.elements()}, {"compositions", comps}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string source_label(const Source& src, const FiniteGroupoid& g) {
  return src.origin + " (" + std::to_string(g.size()) + " elements, " + std::to_string(g.domain_size()) +
         " defined pairs)";
}

FiniteGroupoid view(const Source& src, const CommandOptions& opt) {
  return finite_view(src, opt.instance, opt.budget);
}

std::vector<ElementId> seed_of(const Source& src, const CommandOptions& opt) {
  if (!opt.instance.empty()) return opt.instance;
  if (!src.instance.empty()) return src.instance;
  if (src.finite) return src.finite->elements();
  throw Error(ErrorKind::InvalidArgument, "a " + src.kind + " source needs an instance (--instance)");
}

}  // namespace

std::string groupoid_document(const FiniteGroupoid& g) { return dump(groupoid_json(g)); }

Rendered run_check(const Source& src, const CommandOptions& opt) {
  auto g = view(src, opt);
  CheckConfig config{opt.nr_bound};
  auto report = property_report(g, config);
  auto audit = implication_audit(report);

  if (opt.format == Format::Machine) {
    ordered_json props = ordered_json::array();
    for (auto p : kAllProperties) {
      const auto& v = report.at(p);
      props.push_back({{"property", std::string(to_string(p))},
                       {"holds", v.holds},
                       {"witness", witness_json(v.witness)},
                       {"universe", v.universe}});
    }
    ordered_json j{{"source", src.origin},
                   {"elements", g.size()},
                   {"defined_pairs", g.domain_size()},
                   {"properties", props},
                   {"is_icar", report.is_icar},
                   {"is_partial_semigroup_ca", report.is_partial_semigroup_ca},
                   {"implication_audit", audit}};
    return {dump(j), std::nullopt};
  }

  std::ostringstream out;
  out << "groupoid: " << source_label(src, g) << "\n";
  out << pad("property", 10) << pad("holds", 7) << pad("witness", 14) << pad("universe", 20) << "detail\n";
  for (auto p : kAllProperties) {
    const auto& v = report.at(p);
    out << pad(std::string(to_string(p)), 10) << pad(yes_no(v.holds), 7)
        << pad(v.witness ? format_tuple(v.witness->elements) : "-", 14) << pad(v.universe, 20)
        << (v.witness ? v.witness->detail : "") << "\n";
  }
  out << "ICAR: " << yes_no(report.is_icar) << "\n";
  out << "CA partial semigroup: " << yes_no(report.is_partial_semigroup_ca) << "\n";
  if (audit.empty()) {
    out << "implication audit: ok\n";
  } else {
    out << "implication audit: VIOLATED";
    for (const auto& a : audit) out << " [" << a << "]";
    out << "\n";
  }
  return {out.str(), audit.empty() ? std::nullopt : std::optional(ErrorKind::Hypothesis)};
}

Rendered run_closure(const Source& src, const CommandOptions& opt) {
  auto seed = seed_of(src, opt);
  ClosureResult c = src.finite ? merge_closure(*src.finite, make_instance(*src.finite, seed), opt.budget)
                               : merge_closure(src.black_box, make_instance(src.black_box, seed), opt.budget);
  const std::string status = c.closed() ? "closed" : "budget_exhausted";
  std::optional<ErrorKind> outcome;
  if (!c.closed()) outcome = ErrorKind::BudgetExhausted;

  if (opt.format == Format::Machine) {
    auto j = groupoid_json(c.groupoid);
    j["status"] = status;
    j["iterations"] = c.iterations;
    j["budget"] = {{"max_elements", c.budget.max_elements}, {"max_rounds", c.budget.max_rounds}};
    return {dump(j), outcome};
  }
  std::ostringstream out;
  out << "status: " << status << "\n";
  out << "rounds: " << c.iterations << "\n";
  out << "budget: " << c.budget.max_elements << " elements, " << c.budget.max_rounds << " rounds\n";
  out << "carrier (" << c.carrier.size() << "):\n";
  for (const auto& e : c.groupoid.elements()) out << "  " << e << "\n";
  out << "compositions (" << c.groupoid.domain_size() << "):\n";
  for (const auto& k : c.groupoid.compositions()) {
    out << "  " << c.groupoid.name(k.left) << " . " << c.groupoid.name(k.right) << " = "
        << c.groupoid.name(k.result) << "\n";
  }
  return {out.str(), outcome};
}

Rendered run_er(const Source& src, const CommandOptions& opt) {
  auto seed = seed_of(src, opt);
  auto instance = src.finite ? make_instance(*src.finite, seed) : make_instance(src.black_box, seed);
  auto res = resolve(src.black_box, instance, opt.method, opt.budget, CheckConfig{opt.nr_bound});

  if (opt.format == Format::Machine) {
    ordered_json j{{"method", std::string(to_string(res.method))},
                   {"method_line", res.method_line},
                   {"trail", res.trail},
                   {"resolved", res.resolved},
                   {"certificate", res.certificate}};
    return {dump(j), std::nullopt};
  }
  std::ostringstream out;
  out << "method: " << res.method_line << "\n";
  if (!res.trail.empty()) {
    out << "decision trail:\n";
    for (const auto& t : res.trail) out << "  " << t << "\n";
  }
  out << "resolved (" << res.resolved.size() << "):\n";
  for (const auto& r : res.resolved) out << "  " << r << "\n";
  out << "certificate:\n";
  for (const auto& c : res.certificate) out << "  " << c << "\n";
  return {out.str(), std::nullopt};
}

Rendered run_graph(const Source& src, const CommandOptions& opt) {
  auto g = view(src, opt);
  auto dg = domain_graph(g);
  const bool symmetric = check_property(g, PropertyId::S).holds;
  std::optional<TotalityResult> totality;
  if (symmetric) totality = is_total(g);
  std::optional<Components> comps;
  if (opt.components) comps = connected_components(g);
  std::optional<CliqueCover> cover;
  if (opt.clique_cover) cover = clique_cover(g);

  std::string dot;
  if (opt.dot_path) {
    dot = to_dot(g);
    if (*opt.dot_path != "-") {
      std::ofstream f(*opt.dot_path);
      if (!f) throw Error(ErrorKind::Io, "cannot write '" + *opt.dot_path + "'");
      f << dot;
    }
  }

  if (opt.format == Format::Machine) {
    ordered_json edges = ordered_json::array();
    for (std::size_t i = 0; i < dg.edges.size(); ++i) {
      edges.push_back({g.name(dg.edges[i].first), g.name(dg.edges[i].second), g.name(dg.labels[i])});
    }
    ordered_json j{{"nodes", dg.nodes}, {"edges", edges}, {"symmetric", symmetric}};
    if (totality) {
      j["total"] = totality->total;
      j["graph_complete"] = totality->graph_complete;
      j["missing"] = witness_json(totality->missing);
    }
    if (comps) {
      ordered_json parts = ordered_json::array();
      for (const auto& p : comps->parts) parts.push_back({{"nodes", g.names(p.nodes)}, {"closed", p.closed}});
      j["components"] = parts;
      j["separation"] = verdict_json(comps->separation);
    }
    if (cover) {
      ordered_json cl = ordered_json::array();
      for (const auto& c : cover->cliques) {
        cl.push_back({{"nodes", g.names(c.nodes)}, {"total", c.total}, {"closed", c.closed}});
      }
      j["clique_cover"] = cl;
    }
    if (opt.dot_path && *opt.dot_path == "-") j["dot"] = dot;
    return {dump(j), std::nullopt};
  }

  std::ostringstream out;
  if (opt.dot_path && *opt.dot_path == "-") return {dot, std::nullopt};
  out << "groupoid: " << source_label(src, g) << "\n";
  out << "edges (" << dg.edges.size() << "):\n";
  for (std::size_t i = 0; i < dg.edges.size(); ++i) {
    out << "  " << g.name(dg.edges[i].first) << " -> " << g.name(dg.edges[i].second) << "  ["
        << g.name(dg.labels[i]) << "]\n";
  }
  if (totality) {
    out << "total: " << yes_no(totality->total);
    if (totality->missing) out << " (missing " << format_tuple(totality->missing->elements) << ")";
    out << "; graph complete: " << yes_no(totality->graph_complete) << "\n";
  } else {
    out << "total: no (domain not symmetric)\n";
  }
  if (comps) {
    out << "components (" << comps->parts.size() << "):\n";
    for (const auto& p : comps->parts) {
      out << "  " << set_text(g.names(p.nodes)) << (p.closed ? "" : " (compositions leave the component)") << "\n";
    }
    out << "cross-component pairs undefined: " << verdict_text(comps->separation) << "\n";
  }
  if (cover) {
    out << "clique cover (" << cover->cliques.size() << "):\n";
    for (const auto& c : cover->cliques) {
      out << "  " << set_text(g.names(c.nodes)) << " total: " << yes_no(c.total) << ", closed: " << yes_no(c.closed)
          << "\n";
    }
  }
  if (opt.dot_path) out << "dot written to " << *opt.dot_path << "\n";
  return {out.str(), std::nullopt};
}

Rendered run_quotient(const Source& src, const CommandOptions& opt) {
  auto g = view(src, opt);
  CheckConfig config{opt.nr_bound};
  auto q = quotient(g, config);
  auto idem = quotient_idempotence_check(g, config);
  std::vector<Verdict> semigroups;
  for (const auto& cls : q.classes.classes) semigroups.push_back(class_semigroup_check(g, cls, config));

  bool ok = q.projection_verdict.holds && idem.holds && (!q.commutativity || q.commutativity->holds);
  for (const auto& v : semigroups) ok = ok && v.holds;
  std::optional<ErrorKind> outcome;
  if (!ok) outcome = ErrorKind::Hypothesis;

  if (opt.format == Format::Machine) {
    auto j = groupoid_json(*q.groupoid);
    ordered_json classes = ordered_json::array();
    for (std::size_t i = 0; i < q.classes.classes.size(); ++i) {
      classes.push_back({{"representative", g.name(q.classes.representative[i])},
                         {"members", g.names(q.classes.classes[i])},
                         {"semigroup", verdict_json(semigroups[i])}});
    }
    j["classes"] = classes;
    j["nr_bound"] = opt.nr_bound;
    j["projection"] = verdict_json(q.projection_verdict);
    if (q.commutativity) j["commutative"] = q.commutativity->holds;
    j["idempotent"] = verdict_json(idem);
    return {dump(j), outcome};
  }
  std::ostringstream out;
  out << "groupoid: " << source_label(src, g) << "\n";
  out << "NR holds up to word length " << opt.nr_bound << "\n";
  out << "classes (" << q.classes.classes.size() << "):\n";
  for (std::size_t i = 0; i < q.classes.classes.size(); ++i) {
    out << "  [" << g.name(q.classes.representative[i]) << "] = " << set_text(g.names(q.classes.classes[i]))
        << "  semigroup: " << verdict_text(semigroups[i]) << "\n";
  }
  out << "projection is a surjective homomorphism: " << verdict_text(q.projection_verdict) << "\n";
  if (q.commutativity) {
    out << "quotient commutative (S holds): " << yes_no(q.commutativity->holds) << "\n";
  }
  out << "Q(Q) = Q: " << verdict_text(idem) << "\n";
  out << "quotient table:\n" << groupoid_document(*q.groupoid);
  return {out.str(), outcome};
}

Rendered run_order(const Source& src, const CommandOptions& opt) {
  auto g = view(src, opt);
  const OrderVariant variants[] = {OrderVariant::LeftLeq, OrderVariant::RightLeq, OrderVariant::Leq};
  const Side sides[] = {Side::Left, Side::Right, Side::Both};

  std::optional<OrderRelation> user;
  if (src.order && src.finite && opt.instance.empty()) user = OrderRelation::from_pairs(g, *src.order);

  ordered_json j = ordered_json::object();
  std::ostringstream out;
  out << "groupoid: " << source_label(src, g) << "\n";

  auto describe = [&](const OrderRelation& rel, ordered_json& node) {
    auto audit = order_law_audit(rel);
    auto max = g.names(maximal_elements(rel));
    std::vector<std::vector<ElementId>> pairs;
    std::string line;
    for (const auto& [p, q] : rel.named_pairs()) {
      pairs.push_back({p, q});
      line += " (" + p + "," + q + ")";
    }
    node = {{"pairs", pairs},
            {"reflexive", verdict_json(audit.reflexive)},
            {"antisymmetric", verdict_json(audit.antisymmetric)},
            {"transitive", verdict_json(audit.transitive)},
            {"maximal", max}};
    out << "relation " << rel.label() << ":" << (line.empty() ? " (empty)" : line) << "\n";
    out << "  reflexive: " << verdict_text(audit.reflexive) << "\n";
    out << "  antisymmetric: " << verdict_text(audit.antisymmetric) << "\n";
    out << "  transitive: " << verdict_text(audit.transitive) << "\n";
    out << "  maximal: " << set_text(max) << "\n";
    return audit;
  };

  ordered_json rels = ordered_json::object();
  for (auto v : variants) {
    ordered_json node;
    describe(OrderRelation::natural(g, v), node);
    rels[std::string(to_string(v))] = node;
  }
  j["relations"] = rels;

  ordered_json full = ordered_json::object();
  for (auto s : sides) {
    auto f = g.names(full_elements(g, s));
    full[std::string(to_string(s))] = f;
    out << "full (" << to_string(s) << "): " << set_text(f) << "\n";
  }
  j["full"] = full;

  if (user) {
    ordered_json node;
    auto audit = describe(*user, node);
    if (audit.is_partial_order()) {
      auto ax = check_order_axioms(g, *user);
      node["LU"] = verdict_json(ax.lu);
      node["lCP"] = verdict_json(ax.lcp);
      node["rCP"] = verdict_json(ax.rcp);
      out << "  LU: " << verdict_text(ax.lu) << "\n  lCP: " << verdict_text(ax.lcp) << "\n  rCP: "
          << verdict_text(ax.rcp) << "\n";
      bool reflexive_domain = true;
      for (Index p = 0; p < g.size(); ++p) reflexive_domain = reflexive_domain && g.defined(p, p);
      if (reflexive_domain) {
        auto ch = order_characterization_check(g, *user);
        node["characterization"] = {{"order_side", ch.order_side},
                                    {"algebra_side", ch.algebra_side},
                                    {"rel_is_natural", ch.rel_is_natural},
                                    {"verdict", verdict_json(ch.verdict)}};
        out << "  LU and CP: " << yes_no(ch.order_side) << "; I, C, A, R and rel = natural <=: "
            << yes_no(ch.algebra_side) << "\n";
        out << "  sides agree: " << verdict_text(ch.verdict) << "\n";
      } else {
        out << "  characterization: skipped (domain not reflexive)\n";
      }
    } else {
      out << "  LU/CP: skipped (not a partial order)\n";
    }
    j["user"] = node;
  }
  if (opt.format == Format::Machine) return {dump(j), std::nullopt};
  return {out.str(), std::nullopt};
}

Rendered run_fixtures(Format format) {
  const auto& list = builtin_fixtures();
  if (format == Format::Machine) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : list) {
      arr.push_back({{"name", f.name}, {"description", f.description}, {"default_size", f.default_size}});
    }
    return {dump(ordered_json{{"fixtures", arr}}), std::nullopt};
  }
  std::ostringstream out;
  for (const auto& f : list) {
    out << pad(f.name, 11) << f.description;
    if (f.default_size) out << " (default n=" << f.default_size << ")";
    out << "\n";
  }
  return {out.str(), std::nullopt};
}

}  // namespace pg
