// classcut command-line tool. Thin shell over the C API: parse arguments,
// read the input file, call the library, print the result.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "classcut.h"

namespace {

enum class InputFormat { Auto, Cdl, Json, Csv };

struct Options {
  std::string file;
  std::string input_format = "auto";
  std::string format; // per-subcommand default
  std::string out;
  classcut_config config{};
};

constexpr int kExitOk = 0;
constexpr int kExitLowCohesion = 1;
constexpr int kExitError = 2;

int fail(const std::string &msg) {
  std::cerr << "classcut: " << msg << "\n";
  return kExitError;
}

int fail_status(classcut_status status) {
  std::cerr << "classcut: " << classcut_status_name(status) << ": "
            << classcut_last_error() << "\n";
  return kExitError;
}

bool read_file(const std::string &path, std::string &out, std::string &err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot open '" + path + "'";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

InputFormat detect_format(const Options &opt) {
  if (opt.input_format == "cdl")
    return InputFormat::Cdl;
  if (opt.input_format == "json")
    return InputFormat::Json;
  if (opt.input_format == "csv")
    return InputFormat::Csv;
  auto dot = opt.file.rfind('.');
  std::string ext = dot == std::string::npos ? "" : opt.file.substr(dot + 1);
  if (ext == "cdl")
    return InputFormat::Cdl;
  if (ext == "json")
    return InputFormat::Json;
  if (ext == "csv")
    return InputFormat::Csv;
  return InputFormat::Auto;
}

bool parse_output_format(const std::string &name, classcut_format &out) {
  if (name == "text")
    out = CLASSCUT_FORMAT_TEXT;
  else if (name == "json")
    out = CLASSCUT_FORMAT_JSON;
  else if (name == "dot")
    out = CLASSCUT_FORMAT_DOT;
  else
    return false;
  return true;
}

int emit(const Options &opt, const char *text) {
  if (opt.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) {
    return fail("cannot write '" + opt.out + "'");
  }
  out << text;
  return kExitOk;
}

// Loads a graph input (.cdl or .json). Returns nullptr after printing an
// error; caller frees.
classcut_graph *load_graph(const Options &opt) {
  std::string text, err;
  if (!read_file(opt.file, text, err)) {
    fail(err);
    return nullptr;
  }
  InputFormat fmt = detect_format(opt);
  if (fmt == InputFormat::Csv) {
    fail("'" + opt.file + "' is a similarity matrix; this command needs a class description");
    return nullptr;
  }
  if (fmt == InputFormat::Auto) {
    fail("cannot determine input format of '" + opt.file + "'; use --input-format");
    return nullptr;
  }
  classcut_graph *graph = nullptr;
  classcut_status status = fmt == InputFormat::Json
                               ? classcut_graph_parse_json(text.c_str(), &graph)
                               : classcut_graph_parse_cdl(text.c_str(), &graph);
  if (status != CLASSCUT_OK) {
    fail_status(status);
    return nullptr;
  }
  return graph;
}

void add_common_flags(CLI::App *cmd, Options &opt, bool clustering_flags) {
  cmd->add_option("file", opt.file, "input file (.cdl, .json, or .csv)")->required();
  cmd->add_option("--input-format", opt.input_format, "override format detection")
      ->check(CLI::IsMember({"auto", "cdl", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--format", opt.format, "output format")->capture_default_str();
  cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
  cmd->add_option("--lcom-threshold", opt.config.lcom_threshold,
                  "LCOM above this value counts as low cohesion")
      ->capture_default_str();
  cmd->add_option("--tcc-threshold", opt.config.tcc_threshold,
                  "TCC below this value counts as low cohesion")
      ->capture_default_str();
  cmd->add_option_function<std::string>(
         "--tcc-mode",
         [&opt](const std::string &v) {
           opt.config.tcc_mode =
               v == "closure" ? CLASSCUT_TCC_CALL_CLOSURE : CLASSCUT_TCC_DIRECT;
         },
         "TCC connectivity: direct field sharing or via the call closure")
      ->check(CLI::IsMember({"direct", "closure"}))
      ->default_str("direct");
  if (!clustering_flags)
    return;
  cmd->add_option("--threshold", opt.config.threshold, "similarity cut-off")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option_function<std::string>(
         "--linkage",
         [&opt](const std::string &v) {
           if (v == "single")
             opt.config.linkage = CLASSCUT_LINKAGE_SINGLE;
           else if (v == "average")
             opt.config.linkage = CLASSCUT_LINKAGE_AVERAGE;
           else if (v == "weighted")
             opt.config.linkage = CLASSCUT_LINKAGE_WEIGHTED;
           else
             opt.config.linkage = CLASSCUT_LINKAGE_COMPLETE;
         },
         "cluster linkage rule")
      ->check(CLI::IsMember({"single", "complete", "average", "weighted"}))
      ->default_str("complete");
  cmd->add_option("--min-size", opt.config.min_size,
                  "clusters smaller than this are merged into a sibling")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
}

int run_metrics(Options &opt) {
  classcut_format format;
  if (!parse_output_format(opt.format, format) || format == CLASSCUT_FORMAT_DOT)
    return fail("metrics supports --format text or json");
  classcut_graph *graph = load_graph(opt);
  if (!graph)
    return kExitError;
  char *text = nullptr;
  classcut_verdict verdict{};
  classcut_status status = classcut_metrics(graph, &opt.config, format, &text, &verdict);
  classcut_graph_free(graph);
  if (status != CLASSCUT_OK)
    return fail_status(status);
  int rc = emit(opt, text);
  classcut_string_free(text);
  if (rc != kExitOk)
    return rc;
  return verdict == CLASSCUT_VERDICT_LOW_COHESION ? kExitLowCohesion : kExitOk;
}

int run_analyze(Options &opt) {
  classcut_format format;
  if (!parse_output_format(opt.format, format) || format == CLASSCUT_FORMAT_DOT)
    return fail("analyze supports --format text or json");
  classcut_graph *graph = load_graph(opt);
  if (!graph)
    return kExitError;
  char *text = nullptr;
  classcut_status status = classcut_analyze(graph, &opt.config, format, &text, nullptr);
  classcut_graph_free(graph);
  if (status != CLASSCUT_OK)
    return fail_status(status);
  int rc = emit(opt, text);
  classcut_string_free(text);
  return rc;
}

int run_cluster_or_dendrogram(Options &opt, bool dendrogram) {
  classcut_format format;
  if (!parse_output_format(opt.format, format))
    return fail("unknown --format '" + opt.format + "'");
  if (dendrogram && format == CLASSCUT_FORMAT_JSON)
    return fail("dendrogram supports --format text or dot");
  std::string input, err;
  if (!read_file(opt.file, input, err))
    return fail(err);
  InputFormat in_fmt = detect_format(opt);
  if (in_fmt == InputFormat::Auto)
    return fail("cannot determine input format of '" + opt.file + "'; use --input-format");

  char *text = nullptr;
  classcut_status status;
  if (in_fmt == InputFormat::Csv) {
    classcut_matrix *matrix = nullptr;
    status = classcut_matrix_parse_csv(input.c_str(), &matrix);
    if (status != CLASSCUT_OK)
      return fail_status(status);
    status = dendrogram ? classcut_dendrogram_matrix(matrix, &opt.config, format, &text)
                        : classcut_cluster_matrix(matrix, &opt.config, format, &text);
    classcut_matrix_free(matrix);
  } else {
    classcut_graph *graph = nullptr;
    status = in_fmt == InputFormat::Json ? classcut_graph_parse_json(input.c_str(), &graph)
                                         : classcut_graph_parse_cdl(input.c_str(), &graph);
    if (status != CLASSCUT_OK)
      return fail_status(status);
    status = dendrogram ? classcut_dendrogram_graph(graph, &opt.config, format, &text)
                        : classcut_cluster_graph(graph, &opt.config, format, &text);
    classcut_graph_free(graph);
  }
  if (status != CLASSCUT_OK)
    return fail_status(status);
  int rc = emit(opt, text);
  classcut_string_free(text);
  return rc;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Identify low-cohesive classes and propose extract-class refactorings"};
  app.require_subcommand(1);

  Options opt;
  classcut_config_init(&opt.config);

  auto *analyze = app.add_subcommand("analyze", "Run the full two-step pipeline");
  auto *metrics = app.add_subcommand("metrics", "Report LCOM/TCC and the cohesion verdict");
  auto *cluster = app.add_subcommand("cluster", "Compute similarities and the cluster cut");
  auto *dendro = app.add_subcommand("dendrogram", "Print the merge tree");

  // Each subcommand re-registers the shared flags so `--help` stays accurate.
  add_common_flags(analyze, opt, true);
  analyze->add_flag("--force", [&opt](std::int64_t) { opt.config.force = 1; },
                    "cluster even when cohesion is acceptable");
  add_common_flags(metrics, opt, false);
  add_common_flags(cluster, opt, true);
  add_common_flags(dendro, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  if (opt.format.empty())
    opt.format = "text";

  if (app.got_subcommand(metrics))
    return run_metrics(opt);
  if (app.got_subcommand(analyze))
    return run_analyze(opt);
  if (app.got_subcommand(cluster))
    return run_cluster_or_dendrogram(opt, false);
  return run_cluster_or_dendrogram(opt, true);
}
