#include "pgroupoid/quotient.hpp"

#include <algorithm>
#include <tuple>

namespace pg {

bool sim_c(const FiniteGroupoid& g, Index p, Index q) {
  const Index pqp[] = {p, q, p};
  const Index qpq[] = {q, p, q};
  return word_product(g, pqp) == ElementSet{p} && word_product(g, qpq) == ElementSet{q};
}

namespace {

std::vector<bool> sim_matrix(const FiniteGroupoid& g) {
  const auto n = static_cast<Index>(g.size());
  std::vector<bool> m(std::size_t{n} * n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) m[p * n + q] = sim_c(g, p, q);
  return m;
}

}  // namespace

CongruenceAudit audit_sim_c(const FiniteGroupoid& g) {
  const auto n = static_cast<Index>(g.size());
  const auto m = sim_matrix(g);
  auto rel = [&](Index p, Index q) { return m[p * n + q]; };
  auto names = [&](std::initializer_list<Index> t) { return g.names(std::vector<Index>(t)); };
  CongruenceAudit a{Verdict::pass(), Verdict::pass(), Verdict::pass(), Verdict::pass()};

  for (Index p = 0; p < n && a.reflexive.holds; ++p)
    if (!rel(p, p)) a.reflexive = Verdict::fail({names({p}), "ppp != p"});

  for (Index p = 0; p < n && a.symmetric.holds; ++p)
    for (Index q = 0; q < n; ++q)
      if (rel(p, q) && !rel(q, p)) {
        a.symmetric = Verdict::fail({names({p, q}), "p ~c q but not q ~c p"});
        break;
      }

  for (Index p = 0; p < n && a.transitive.holds; ++p)
    for (Index q = 0; q < n && a.transitive.holds; ++q) {
      if (!rel(p, q)) continue;
      for (Index r = 0; r < n; ++r)
        if (rel(q, r) && !rel(p, r)) {
          a.transitive = Verdict::fail({names({p, q, r}), "p ~c q, q ~c r, but not p ~c r"});
          break;
        }
    }

  const auto& table = g.compositions();
  for (std::size_t i = 0; i < table.size() && a.congruence.holds; ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      const auto& x = table[i];
      const auto& y = table[j];
      if (rel(x.left, y.left) && rel(x.right, y.right) && !rel(x.result, y.result)) {
        a.congruence = Verdict::fail({names({x.left, x.right, y.left, y.right}),
                                      "p ~c p', q ~c q' but pq and p'q' are not related"});
        break;
      }
    }
  }
  return a;
}

CongruenceClasses congruence_classes(const FiniteGroupoid& g, const CheckConfig& config) {
  auto nr = check_property(g, PropertyId::NR, config);
  if (!nr.holds) {
    throw Error(ErrorKind::Hypothesis, "NR fails (" + nr.universe + ") at " +
                                           format_tuple(nr.witness->elements));
  }
  auto audit = audit_sim_c(g);
  for (const auto* v : {&audit.reflexive, &audit.symmetric, &audit.transitive, &audit.congruence}) {
    if (!v->holds) {
      throw Error(ErrorKind::Congruence, "~c is not an equivalence/congruence: " + v->witness->detail +
                                             " at " + format_tuple(v->witness->elements));
    }
  }
  const auto n = static_cast<Index>(g.size());
  CongruenceClasses out;
  out.class_of.assign(n, 0);
  std::vector<bool> placed(n, false);
  for (Index p = 0; p < n; ++p) {
    if (placed[p]) continue;
    ElementSet cls;
    for (Index q = p; q < n; ++q) {
      if (!placed[q] && sim_c(g, p, q)) {
        placed[q] = true;
        out.class_of[q] = static_cast<Index>(out.classes.size());
        cls.push_back(q);
      }
    }
    out.representative.push_back(p);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

QuotientGroupoid quotient(const FiniteGroupoid& g, const CheckConfig& config) {
  auto classes = congruence_classes(g, config);
  const auto k = static_cast<Index>(classes.classes.size());
  std::vector<ElementId> names;
  for (Index r : classes.representative) names.push_back(g.name(r));

  std::vector<Index> slot(std::size_t{k} * k, static_cast<Index>(-1));
  std::vector<Composition> table;
  for (const auto& c : g.compositions()) {
    const Index x = classes.class_of[c.left];
    const Index y = classes.class_of[c.right];
    const Index v = classes.class_of[c.result];
    auto& s = slot[x * k + y];
    if (s == static_cast<Index>(-1)) {
      s = v;
      table.push_back({x, y, v});
    } else if (s != v) {
      throw Error(ErrorKind::WellDefinedness,
                  "class product [" + names[x] + "][" + names[y] + "] is not well defined at " +
                      format_tuple({g.name(c.left), g.name(c.right)}));
    }
  }
  std::sort(table.begin(), table.end(), [](const Composition& a, const Composition& b) {
    return std::tie(a.left, a.right) < std::tie(b.left, b.right);
  });

  auto source = std::make_shared<const FiniteGroupoid>(g);
  auto target = std::make_shared<const FiniteGroupoid>(std::move(names), std::move(table));
  Homomorphism projection{source, target, classes.class_of};
  auto verdict = check_homomorphism(projection);
  if (verdict.holds && !is_surjective(projection)) {
    verdict = Verdict::fail({{}, "projection is not surjective"});
  }
  std::optional<PropertyVerdict> comm;
  if (check_property(g, PropertyId::S).holds) comm = check_property(*target, PropertyId::SC);
  return QuotientGroupoid{std::move(classes), source, target, std::move(projection), std::move(verdict),
                          std::move(comm)};
}

Verdict quotient_idempotence_check(const FiniteGroupoid& g, const CheckConfig& config) {
  auto q = quotient(g, config);
  auto qq = quotient(*q.groupoid, config);
  for (const auto& cls : qq.classes.classes) {
    if (cls.size() > 1) {
      return Verdict::fail({q.groupoid->names(cls), "distinct classes of Q are ~c related in Q"});
    }
  }
  if (!(*qq.groupoid == *q.groupoid)) {
    return Verdict::fail({{}, "Q(Q) table differs from Q"});
  }
  return Verdict::pass("Q(Q) = Q on " + std::to_string(q.groupoid->size()) + " class(es)");
}

Verdict class_semigroup_check(const FiniteGroupoid& g, const ElementSet& cls, const CheckConfig& config) {
  if (cls.empty()) throw Error(ErrorKind::InvalidArgument, "class must be non-empty");
  auto inside = [&](Index v) { return std::binary_search(cls.begin(), cls.end(), v); };
  for (Index x : cls) {
    for (Index y : cls) {
      auto v = g.compose(x, y);
      if (!v) return Verdict::fail({g.names(std::vector<Index>{x, y}), "xy undefined inside the class"});
      if (!inside(*v)) return Verdict::fail({g.names(std::vector<Index>{x, y}), "xy leaves the class"});
    }
  }
  for (Index x : cls)
    for (Index y : cls)
      for (Index z : cls) {
        if (*g.compose(*g.compose(x, y), z) != *g.compose(x, *g.compose(y, z))) {
          return Verdict::fail({g.names(std::vector<Index>{x, y, z}), "(xy)z != x(yz)"});
        }
      }
  for (int len = 3; len <= config.nr_word_bound; ++len) {
    std::vector<std::size_t> pos(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<Index> word;
      for (auto i : pos) word.push_back(cls[i]);
      ElementSet expect{*g.compose(word.front(), word.back())};
      if (word_product(g, word) != expect) {
        return Verdict::fail({g.names(word), "x1...xk != x1xk"});
      }
      std::size_t i = pos.size();
      while (i > 0 && ++pos[i - 1] == cls.size()) pos[--i] = 0;
      if (i == 0) break;
    }
  }
  return Verdict::pass();
}

}  // namespace pg
