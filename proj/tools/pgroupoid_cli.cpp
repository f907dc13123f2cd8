// pgroupoid: audit and resolve match/merge systems given as partial groupoids.
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "pgroupoid/pgroupoid.h"

namespace {

struct Flags {
  std::string input;
  std::string format = "text";
  int nr_bound = 3;
  std::string instance;
  std::string instance_file;
  std::size_t budget_elements = 0;
  std::size_t budget_rounds = 0;
  std::string method = "auto";
  std::string dot;
  bool components = false;
  bool clique_cover = false;
};

int exit_code(pg_status s) {
  if (s == PG_OK) return 0;
  return pg_status_is_input_error(s) ? 2 : 1;
}

int report_failure(pg_status s) {
  std::cerr << "error: " << pg_last_error() << "\n";
  return exit_code(s);
}

// "builtin:NAME" or "builtin:NAME:SIZE", otherwise a file path.
pg_status open_input(const std::string& input, pg_groupoid** out) {
  const std::string prefix = "builtin:";
  if (input.rfind(prefix, 0) != 0) return pg_load_file(input.c_str(), out);
  std::string name = input.substr(prefix.size());
  std::size_t size = 0;
  if (auto colon = name.find(':'); colon != std::string::npos) {
    try {
      size = std::stoul(name.substr(colon + 1));
    } catch (const std::exception&) {
      size = 0;
    }
    name = name.substr(0, colon);
  }
  return pg_builtin(name.c_str(), size, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial groupoid toolkit for match/merge systems"};
  app.require_subcommand(1, 1);
  Flags f;

  const std::map<std::string, pg_format> formats{{"text", PG_FORMAT_TEXT}, {"machine", PG_FORMAT_MACHINE}};
  auto common = [&](CLI::App* sub, bool instance) {
    sub->add_option("input", f.input, "groupoid, records, digraph or chain document, or builtin:NAME[:SIZE]")
        ->required();
    sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--nr-bound", f.nr_bound, "NR word length bound")->check(CLI::PositiveNumber);
    sub->add_option("--budget-elements", f.budget_elements, "closure element budget");
    sub->add_option("--budget-rounds", f.budget_rounds, "closure round budget");
    if (instance) {
      sub->add_option("--instance", f.instance, "comma-separated ids, or a JSON array");
      sub->add_option("--instance-file", f.instance_file, "document with an \"instance\" key");
    }
  };

  auto* check = app.add_subcommand("check", "property report and implication audit");
  common(check, true);
  auto* closure = app.add_subcommand("closure", "merge closure of an instance");
  common(closure, true);
  auto* er = app.add_subcommand("er", "entity resolution of an instance");
  common(er, true);
  er->add_option("--method", f.method, "resolution method")
      ->check(CLI::IsMember({"auto", "bruteforce", "full", "maximal", "rswoosh"}));
  auto* graph = app.add_subcommand("graph", "domain graph, components and clique cover");
  common(graph, true);
  graph->add_option("--dot", f.dot, "write the graph in dot syntax ('-' for stdout)");
  graph->add_flag("--components", f.components, "list connected components");
  graph->add_flag("--clique-cover", f.clique_cover, "greedy clique cover");
  auto* quotient = app.add_subcommand("quotient", "~c classes and the quotient table");
  common(quotient, true);
  auto* order = app.add_subcommand("order", "natural orders, maximal and full elements");
  common(order, true);
  auto* fixtures = app.add_subcommand("fixtures", "list builtin fixtures");
  fixtures->add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const pg_format format = formats.at(f.format);
  char* out = nullptr;
  pg_status status = PG_OK;

  if (fixtures->parsed()) {
    status = pg_fixtures_list(format, &out);
  } else {
    pg_groupoid* g = nullptr;
    status = open_input(f.input, &g);
    if (status != PG_OK) return report_failure(status);

    pg_options opts;
    pg_options_init(&opts);
    opts.format = format;
    opts.nr_bound = f.nr_bound;
    opts.instance = f.instance.empty() ? nullptr : f.instance.c_str();
    opts.instance_file = f.instance_file.empty() ? nullptr : f.instance_file.c_str();
    opts.budget_elements = f.budget_elements;
    opts.budget_rounds = f.budget_rounds;
    opts.method = f.method.c_str();
    opts.components = f.components;
    opts.clique_cover = f.clique_cover;
    opts.dot_path = f.dot.empty() ? nullptr : f.dot.c_str();

    if (check->parsed()) status = pg_check(g, &opts, &out);
    else if (closure->parsed()) status = pg_closure(g, &opts, &out);
    else if (er->parsed()) status = pg_er(g, &opts, &out);
    else if (graph->parsed()) status = pg_graph(g, &opts, &out);
    else if (quotient->parsed()) status = pg_quotient(g, &opts, &out);
    else if (order->parsed()) status = pg_order(g, &opts, &out);
    pg_free(g);
  }

  if (out) {
    std::fputs(out, stdout);
    pg_string_free(out);
  }
  if (status != PG_OK) return report_failure(status);
  return 0;
}
