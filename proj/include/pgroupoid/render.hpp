#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgroupoid/closure.hpp"
#include "pgroupoid/io.hpp"

namespace pg {

enum class Format { Text, Machine };

struct CommandOptions {
  Format format = Format::Text;
  int nr_bound = 3;
  std::vector<ElementId> instance;  // empty: the source's default
  Budget budget;
  ErMethod method = ErMethod::Auto;
  bool components = false;
  bool clique_cover = false;
  std::optional<std::string> dot_path;  // "-" prints the dot text
};

/// Output of one command; `outcome` is set when the command produced a
/// report but ended in a structured failure (e.g. budget exhaustion).
struct Rendered {
  std::string text;
  std::optional<ErrorKind> outcome;
};

Rendered run_check(const Source& src, const CommandOptions& opt);
Rendered run_closure(const Source& src, const CommandOptions& opt);
Rendered run_er(const Source& src, const CommandOptions& opt);
Rendered run_graph(const Source& src, const CommandOptions& opt);
Rendered run_quotient(const Source& src, const CommandOptions& opt);
Rendered run_order(const Source& src, const CommandOptions& opt);
Rendered run_fixtures(Format format);

// {"elements": [...], "compositions": [[x, y, r], ...]} with two-space indent.
std::string groupoid_document(const FiniteGroupoid& g);

}  // namespace pg
