// acqnet: command-line front end over the acq C interface.
//
// Exit codes: 0 success, 1 usage error, 2 parse or I/O error, 3 precondition
// violation or refused size, 4 internal failure. Errors go to standard error
// as `error: <kind>: <message>`.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "acq/acq.h"

namespace {

int exit_code(acq_status status) {
  switch (status) {
    case ACQ_OK: return 0;
    case ACQ_E_USAGE:
    case ACQ_E_INVALID_ARGUMENT: return 1;
    case ACQ_E_PARSE:
    case ACQ_E_IO: return 2;
    case ACQ_E_PRECONDITION:
    case ACQ_E_CAPACITY: return 3;
    case ACQ_E_INTERNAL: return 4;
  }
  return 4;
}

int report_failure(acq_status status) {
  std::cerr << "error: " << acq_status_kind(status) << ": " << acq_last_error() << "\n";
  return exit_code(status);
}

struct GraphDeleter {
  void operator()(acq_graph* g) const { acq_graph_free(g); }
};
using GraphHandle = std::unique_ptr<acq_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { acq_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Loads `path`, runs `call` on the graph and prints the produced text.
template <class Call>
int with_graph(const std::string& path, Call&& call) {
  acq_graph* raw = nullptr;
  if (acq_status s = acq_graph_load(path.c_str(), &raw); s != ACQ_OK) return report_failure(s);
  GraphHandle graph(raw);
  char* text = nullptr;
  if (acq_status s = call(graph.get(), &text); s != ACQ_OK) return report_failure(s);
  OwnedString owned(text);
  std::cout << owned.get() << (owned.get()[0] != '\0' ? "\n" : "");
  return 0;
}

int print_produced(acq_status status, char* text) {
  if (status != ACQ_OK) return report_failure(status);
  OwnedString owned(text);
  std::cout << owned.get();
  const std::string_view view(owned.get());
  if (view.empty() || view.back() != '\n') std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acquaintance-network analysis: span, girth and typology of diameter-2 graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(acq_version()));

  std::string file;
  std::size_t cap = 9;
  std::string span_method = "closed";
  std::string dot_path;
  std::size_t min_size = 1;
  std::size_t node_cap = 30;
  std::size_t n = 0;
  std::size_t n_max = 7;
  double p = 0.5;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::uint64_t d = 2;
  std::string format = "json";
  std::string census_mode = "exhaustive";

  auto* classify = app.add_subcommand("classify", "Typology report as JSON");
  classify->add_option("file", file, "Edge-list file")->required();

  auto* span = app.add_subcommand("span", "Span (smallest spanning-tree diameter)");
  span->add_option("file", file, "Edge-list file")->required();
  span->add_option("--method", span_method, "closed (diameter 2), bruteforce or bound")
      ->check(CLI::IsMember({"closed", "bruteforce", "bound"}))
      ->capture_default_str();
  span->add_option("--cap", cap, "Vertex limit for bruteforce")->capture_default_str();

  auto* girth = app.add_subcommand("girth", "Girth with a shortest cycle");
  girth->add_option("file", file, "Edge-list file")->required();

  auto* sst = app.add_subcommand("sst", "Smallest spanning tree");
  sst->add_option("file", file, "Edge-list file")->required();
  sst->add_option("--dot", dot_path, "Write DOT with the tree in bold to this path");
  sst->add_option("--cap", cap, "Vertex limit for non-diameter-2 graphs")->capture_default_str();

  auto* detect = app.add_subcommand("detect", "Structural witnesses");
  detect->add_option("file", file, "Edge-list file")->required();

  auto* clubs = app.add_subcommand("clubs", "Maximal 2-clubs with their typology");
  clubs->add_option("file", file, "Edge-list file")->required();
  clubs->add_option("--min-size", min_size, "Smallest club to report")->capture_default_str();
  clubs->add_option("--cap", node_cap, "Refuse hosts above this many vertices")
      ->capture_default_str();

  auto* random = app.add_subcommand("random", "Fraction of G(n,p) graphs with diameter <= 2");
  random->add_option("--n", n, "Vertices")->required();
  random->add_option("--p", p, "Edge probability")->required();
  random->add_option("--trials", trials, "Samples")->required();
  random->add_option("--seed", seed, "Master seed")->required();
  random->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* census = app.add_subcommand("census", "Diameters of graphs and their complements");
  census->add_option("--n-max", n_max, "Largest order")->required();
  census->add_option("--mode", census_mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}))
      ->capture_default_str();
  census->add_option("--trials", trials, "Samples in sampled mode")->capture_default_str();
  census->add_option("--seed", seed, "Master seed in sampled mode")->capture_default_str();
  census->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* sabidussi = app.add_subcommand("sabidussi", "Minimum-degree diameter bound scan");
  sabidussi->add_option("--n", n, "Vertices")->required();
  sabidussi->add_option("--trials", trials, "Samples")->required();
  sabidussi->add_option("--seed", seed, "Master seed")->required();
  sabidussi->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* count = app.add_subcommand("count-subclasses", "Span-girth subclasses for diameter d");
  count->add_option("--d", d, "Diameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 1;
  }

  const acq_format out_format = format == "csv" ? ACQ_FORMAT_CSV : ACQ_FORMAT_JSON;

  if (*classify) {
    return with_graph(file, [](const acq_graph* g, char** out) { return acq_classify(g, out); });
  }
  if (*span) {
    const acq_span_method method = span_method == "bruteforce" ? ACQ_SPAN_BRUTE_FORCE
                                   : span_method == "bound"    ? ACQ_SPAN_BFS_BOUND
                                                               : ACQ_SPAN_CLOSED_FORM;
    return with_graph(file, [&](const acq_graph* g, char** out) {
      return acq_span(g, method, cap, out);
    });
  }
  if (*girth) {
    return with_graph(file, [](const acq_graph* g, char** out) { return acq_girth(g, out); });
  }
  if (*detect) {
    return with_graph(file, [](const acq_graph* g, char** out) { return acq_detect(g, out); });
  }
  if (*sst) {
    return with_graph(file, [&](const acq_graph* g, char** out) {
      if (dot_path.empty()) return acq_sst(g, cap, out, nullptr);
      char* dot = nullptr;
      const acq_status s = acq_sst(g, cap, out, &dot);
      if (s != ACQ_OK) return s;
      OwnedString owned(dot);
      std::ofstream file_out(dot_path, std::ios::binary);
      file_out << owned.get();
      if (!file_out) {
        acq_string_free(*out);
        *out = nullptr;
        std::cerr << "error: io: cannot write '" << dot_path << "'\n";
        return ACQ_E_IO;
      }
      return ACQ_OK;
    });
  }
  if (*clubs) {
    return with_graph(file, [&](const acq_graph* g, char** out) {
      return acq_clubs(g, min_size, node_cap, out);
    });
  }
  if (*random) {
    char* out = nullptr;
    const acq_status s = acq_random_sweep(n, p, trials, seed, out_format, &out);
    return print_produced(s, out);
  }
  if (*census) {
    char* out = nullptr;
    const acq_census_mode mode =
        census_mode == "sampled" ? ACQ_CENSUS_SAMPLED : ACQ_CENSUS_EXHAUSTIVE;
    const acq_status s = acq_census(n_max, mode, trials, seed, out_format, &out);
    return print_produced(s, out);
  }
  if (*sabidussi) {
    char* out = nullptr;
    const acq_status s = acq_sabidussi(n, trials, seed, out_format, &out);
    return print_produced(s, out);
  }
  if (*count) {
    std::uint64_t value = 0;
    if (acq_status s = acq_subclass_count(d, &value); s != ACQ_OK) return report_failure(s);
    std::cout << value << "\n";
    return 0;
  }
  return 1;
}
