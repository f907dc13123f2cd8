#include "pgroupoid/pgroupoid.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "pgroupoid/adapters.hpp"
#include "pgroupoid/io.hpp"
#include "pgroupoid/render.hpp"

struct pg_groupoid {
  pg::Source source;
};

namespace {

thread_local std::string last_error;

pg_status status_for(pg::ErrorKind kind) {
  using pg::ErrorKind;
  switch (kind) {
    case ErrorKind::Parse: return PG_ERR_PARSE;
    case ErrorKind::Io: return PG_ERR_IO;
    case ErrorKind::ForeignElement: return PG_ERR_FOREIGN_ELEMENT;
    case ErrorKind::UnknownFixture: return PG_ERR_UNKNOWN_FIXTURE;
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidGroupoid: return PG_ERR_INVALID;
    case ErrorKind::BudgetExhausted: return PG_ERR_BUDGET;
    default: return PG_ERR_HYPOTHESIS;
  }
}

pg_status fail(pg_status s, const std::string& message) {
  last_error = message;
  return s;
}

char* copy_out(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
pg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const pg::Error& e) {
    return fail(status_for(e.kind()), std::string(pg::to_string(e.kind())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(PG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PG_ERR_INTERNAL, e.what());
  }
}

pg::CommandOptions to_options(const pg_groupoid* g, const pg_options* in) {
  pg_options defaults;
  pg_options_init(&defaults);
  const pg_options& o = in ? *in : defaults;
  pg::CommandOptions out;
  out.format = o.format == PG_FORMAT_MACHINE ? pg::Format::Machine : pg::Format::Text;
  if (o.nr_bound != 0) out.nr_bound = o.nr_bound;
  if (out.nr_bound < 1) throw pg::Error(pg::ErrorKind::InvalidArgument, "NR bound must be at least 1");
  if (o.budget_elements) out.budget.max_elements = o.budget_elements;
  if (o.budget_rounds) out.budget.max_rounds = o.budget_rounds;
  if (o.method && *o.method) {
    auto m = pg::parse_er_method(o.method);
    if (!m) throw pg::Error(pg::ErrorKind::InvalidArgument, std::string("unknown method '") + o.method + "'");
    out.method = *m;
  }
  if (o.instance_file && *o.instance_file) {
    out.instance = pg::load_instance_text(g->source, pg::read_file(o.instance_file), o.instance_file);
  }
  if (o.instance && *o.instance) {
    auto more = pg::parse_instance_list(g->source, o.instance);
    out.instance.insert(out.instance.end(), more.begin(), more.end());
  }
  out.components = o.components != 0;
  out.clique_cover = o.clique_cover != 0;
  if (o.dot_path && *o.dot_path) out.dot_path = o.dot_path;
  return out;
}

using Runner = pg::Rendered (*)(const pg::Source&, const pg::CommandOptions&);

pg_status run(Runner runner, const pg_groupoid* g, const pg_options* opts, char** out) {
  if (!g || !out) return fail(PG_ERR_NULL_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto r = runner(g->source, to_options(g, opts));
    *out = copy_out(r.text);
    if (!*out) return fail(PG_ERR_INTERNAL, "out of memory");
    if (r.outcome) {
      return fail(status_for(*r.outcome), std::string(pg::to_string(*r.outcome)) + ": see report");
    }
    return PG_OK;
  });
}

pg_status emit(pg::Source src, pg_groupoid** out) {
  *out = new pg_groupoid{std::move(src)};
  return PG_OK;
}

}  // namespace

extern "C" {

void pg_options_init(pg_options* opts) {
  if (!opts) return;
  *opts = pg_options{};
  opts->format = PG_FORMAT_TEXT;
  opts->nr_bound = 3;
}

const char* pg_version(void) { return "0.1.0"; }

const char* pg_status_name(pg_status status) {
  switch (status) {
    case PG_OK: return "ok";
    case PG_ERR_NULL_ARG: return "null argument";
    case PG_ERR_PARSE: return "parse error";
    case PG_ERR_IO: return "io error";
    case PG_ERR_FOREIGN_ELEMENT: return "foreign element";
    case PG_ERR_UNKNOWN_FIXTURE: return "unknown fixture";
    case PG_ERR_INVALID: return "invalid argument";
    case PG_ERR_BUDGET: return "budget exhausted";
    case PG_ERR_HYPOTHESIS: return "hypothesis failed";
    case PG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int pg_status_is_input_error(pg_status status) {
  switch (status) {
    case PG_ERR_NULL_ARG:
    case PG_ERR_PARSE:
    case PG_ERR_IO:
    case PG_ERR_FOREIGN_ELEMENT:
    case PG_ERR_UNKNOWN_FIXTURE:
    case PG_ERR_INVALID: return 1;
    default: return 0;
  }
}

const char* pg_last_error(void) { return last_error.c_str(); }

pg_status pg_load_file(const char* path, pg_groupoid** out) {
  if (!path || !out) return fail(PG_ERR_NULL_ARG, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(pg::load_source_file(path), out); });
}

pg_status pg_load_string(const char* text, pg_groupoid** out) {
  if (!text || !out) return fail(PG_ERR_NULL_ARG, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(pg::load_source_text(text), out); });
}

pg_status pg_builtin(const char* name, size_t size, pg_groupoid** out) {
  if (!name || !out) return fail(PG_ERR_NULL_ARG, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(pg::builtin_source(name, size), out); });
}

void pg_free(pg_groupoid* g) { delete g; }

void pg_string_free(char* s) { std::free(s); }

pg_status pg_size(const pg_groupoid* g, size_t* out) {
  if (!g || !out) return fail(PG_ERR_NULL_ARG, "null argument");
  if (!g->source.finite) return fail(PG_ERR_INVALID, "source has no explicit carrier; materialize it first");
  *out = g->source.finite->size();
  return PG_OK;
}

pg_status pg_compose(const pg_groupoid* g, const char* x, const char* y, char** out) {
  if (!g || !x || !y || !out) return fail(PG_ERR_NULL_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto& bb = g->source.black_box;
    auto r = bb.compose(bb.canonicalize(x), bb.canonicalize(y));
    if (r) {
      *out = copy_out(*r);
      if (!*out) return fail(PG_ERR_INTERNAL, "out of memory");
    }
    return PG_OK;
  });
}

pg_status pg_materialize(const pg_groupoid* g, const pg_options* opts, pg_groupoid** out) {
  if (!g || !out) return fail(PG_ERR_NULL_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto o = to_options(g, opts);
    pg::Source src;
    src.kind = "groupoid";
    src.origin = g->source.origin;
    src.finite = pg::finite_view(g->source, o.instance, o.budget);
    src.black_box = pg::as_black_box(*src.finite);
    return emit(std::move(src), out);
  });
}

pg_status pg_check(const pg_groupoid* g, const pg_options* o, char** out) { return run(pg::run_check, g, o, out); }
pg_status pg_closure(const pg_groupoid* g, const pg_options* o, char** out) { return run(pg::run_closure, g, o, out); }
pg_status pg_er(const pg_groupoid* g, const pg_options* o, char** out) { return run(pg::run_er, g, o, out); }
pg_status pg_graph(const pg_groupoid* g, const pg_options* o, char** out) { return run(pg::run_graph, g, o, out); }
pg_status pg_quotient(const pg_groupoid* g, const pg_options* o, char** out) { return run(pg::run_quotient, g, o, out); }
pg_status pg_order(const pg_groupoid* g, const pg_options* o, char** out) { return run(pg::run_order, g, o, out); }

pg_status pg_fixtures_list(pg_format format, char** out) {
  if (!out) return fail(PG_ERR_NULL_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto r = pg::run_fixtures(format == PG_FORMAT_MACHINE ? pg::Format::Machine : pg::Format::Text);
    *out = copy_out(r.text);
    return *out ? PG_OK : fail(PG_ERR_INTERNAL, "out of memory");
  });
}

}  // extern "C"
