#include "classcut.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "classcut/ingest.hpp"
#include "classcut/pipeline.hpp"

using namespace classcut;

struct classcut_graph {
  ClassGraph graph;
};

struct classcut_matrix {
  MatrixDocument doc;
};

namespace {

thread_local std::string g_last_error;

classcut_status status_of(ErrorCode code) {
  switch (code) {
  case ErrorCode::Syntax: return CLASSCUT_E_SYNTAX;
  case ErrorCode::DuplicateMember: return CLASSCUT_E_DUPLICATE_MEMBER;
  case ErrorCode::UnknownMember: return CLASSCUT_E_UNKNOWN_MEMBER;
  case ErrorCode::KindMismatch: return CLASSCUT_E_KIND_MISMATCH;
  case ErrorCode::MalformedDocument: return CLASSCUT_E_MALFORMED_DOCUMENT;
  case ErrorCode::NonSquare: return CLASSCUT_E_NON_SQUARE;
  case ErrorCode::ValueOutOfRange: return CLASSCUT_E_VALUE_OUT_OF_RANGE;
  case ErrorCode::AsymmetricConflict: return CLASSCUT_E_ASYMMETRIC_CONFLICT;
  case ErrorCode::EmptyGraph: return CLASSCUT_E_EMPTY_GRAPH;
  case ErrorCode::NoMethodsInTarget: return CLASSCUT_E_NO_METHODS_IN_TARGET;
  case ErrorCode::NoFieldsInTarget: return CLASSCUT_E_NO_FIELDS_IN_TARGET;
  case ErrorCode::InvalidArgument: return CLASSCUT_E_INVALID_ARGUMENT;
  }
  return CLASSCUT_E_INTERNAL;
}

template <typename Fn> classcut_status guarded(Fn &&fn) {
  try {
    fn();
    return CLASSCUT_OK;
  } catch (const Error &e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return CLASSCUT_E_INTERNAL;
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

AnalysisConfig to_config(const classcut_config *c) {
  AnalysisConfig cfg;
  if (!c)
    return cfg;
  cfg.threshold = c->threshold;
  switch (c->linkage) {
  case CLASSCUT_LINKAGE_SINGLE: cfg.linkage = Linkage::Single; break;
  case CLASSCUT_LINKAGE_COMPLETE: cfg.linkage = Linkage::Complete; break;
  case CLASSCUT_LINKAGE_AVERAGE: cfg.linkage = Linkage::Average; break;
  case CLASSCUT_LINKAGE_WEIGHTED: cfg.linkage = Linkage::Weighted; break;
  }
  cfg.min_size = c->min_size;
  cfg.lcom_threshold = c->lcom_threshold;
  cfg.tcc_threshold = c->tcc_threshold;
  cfg.tcc_mode = c->tcc_mode == CLASSCUT_TCC_CALL_CLOSURE ? TccMode::CallClosure : TccMode::Direct;
  cfg.force = c->force != 0;
  return cfg;
}

void require(bool cond, const char *msg) {
  if (!cond)
    throw Error(ErrorCode::InvalidArgument, msg);
}

std::vector<std::string> label_names(const MatrixDocument &doc) {
  std::vector<std::string> names;
  for (auto &l : doc.labels)
    names.push_back(l.name);
  return names;
}

std::vector<std::string> member_names(const ClassGraph &g) {
  std::vector<std::string> names;
  for (auto &m : g.members())
    names.push_back(m.name);
  return names;
}

} // namespace

extern "C" {

void classcut_config_init(classcut_config *config) {
  if (!config)
    return;
  config->threshold = 0.2;
  config->linkage = CLASSCUT_LINKAGE_COMPLETE;
  config->min_size = 2;
  config->lcom_threshold = 0;
  config->tcc_threshold = 0.5;
  config->tcc_mode = CLASSCUT_TCC_DIRECT;
  config->force = 0;
}

classcut_status classcut_graph_parse_cdl(const char *text, classcut_graph **out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new classcut_graph{parse_cdl(text)};
  });
}

classcut_status classcut_graph_parse_json(const char *text, classcut_graph **out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new classcut_graph{parse_graph_json(text)};
  });
}

classcut_status classcut_graph_to_cdl(const classcut_graph *graph, char **out) {
  return guarded([&] {
    require(graph && out, "null argument");
    *out = dup_string(write_cdl(graph->graph));
  });
}

void classcut_graph_free(classcut_graph *graph) { delete graph; }

classcut_status classcut_matrix_parse_csv(const char *text, classcut_matrix **out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new classcut_matrix{parse_matrix_csv(text)};
  });
}

classcut_status classcut_matrix_from_graph(const classcut_graph *graph, classcut_matrix **out) {
  return guarded([&] {
    require(graph && out, "null argument");
    *out = new classcut_matrix{document_from_graph(graph->graph)};
  });
}

classcut_status classcut_matrix_to_csv(const classcut_matrix *matrix, char **out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    *out = dup_string(write_matrix_csv(matrix->doc));
  });
}

void classcut_matrix_free(classcut_matrix *matrix) { delete matrix; }

classcut_status classcut_metrics(const classcut_graph *graph, const classcut_config *config,
                                 classcut_format format, char **out,
                                 classcut_verdict *verdict_out) {
  return guarded([&] {
    require(graph && out, "null argument");
    require(format != CLASSCUT_FORMAT_DOT, "metrics output supports text or json");
    auto cfg = to_config(config);
    auto report = assess(graph->graph, cfg.lcom_threshold, cfg.tcc_threshold, cfg.tcc_mode);
    *out = dup_string(format == CLASSCUT_FORMAT_JSON
                          ? cohesion_to_json(graph->graph.name(), report)
                          : cohesion_to_text(graph->graph.name(), report));
    if (verdict_out) {
      switch (report.verdict) {
      case Verdict::LowCohesion: *verdict_out = CLASSCUT_VERDICT_LOW_COHESION; break;
      case Verdict::Acceptable: *verdict_out = CLASSCUT_VERDICT_ACCEPTABLE; break;
      case Verdict::Indeterminate: *verdict_out = CLASSCUT_VERDICT_INDETERMINATE; break;
      }
    }
  });
}

classcut_status classcut_analyze(const classcut_graph *graph, const classcut_config *config,
                                 classcut_format format, char **out, int *proposed_out) {
  return guarded([&] {
    require(graph && out, "null argument");
    require(format != CLASSCUT_FORMAT_DOT, "analyze output supports text or json");
    auto report = run_pipeline(graph->graph, to_config(config));
    *out = dup_string(format == CLASSCUT_FORMAT_JSON ? report_to_json(report)
                                                     : report_to_text(report));
    if (proposed_out)
      *proposed_out = report.refactoring_proposed ? 1 : 0;
  });
}

classcut_status classcut_cluster_graph(const classcut_graph *graph, const classcut_config *config,
                                       classcut_format format, char **out) {
  return guarded([&] {
    require(graph && out, "null argument");
    auto cfg = to_config(config);
    auto cut = agglomerate(similarity_matrix(graph->graph), cfg.linkage, cfg.threshold);
    if (format == CLASSCUT_FORMAT_DOT) {
      *out = dup_string(render_dendrogram(cut.dendrogram, member_names(graph->graph),
                                          TreeFormat::Dot));
      return;
    }
    MatrixCutReport report{document_from_graph(graph->graph).labels, cfg, std::move(cut)};
    *out = dup_string(format == CLASSCUT_FORMAT_JSON ? matrix_report_to_json(report)
                                                     : matrix_report_to_text(report));
  });
}

classcut_status classcut_cluster_matrix(const classcut_matrix *matrix,
                                        const classcut_config *config, classcut_format format,
                                        char **out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    auto cfg = to_config(config);
    auto report = run_matrix_cut(matrix->doc, cfg);
    if (format == CLASSCUT_FORMAT_DOT) {
      *out = dup_string(render_dendrogram(report.cut.dendrogram, label_names(matrix->doc),
                                          TreeFormat::Dot));
      return;
    }
    *out = dup_string(format == CLASSCUT_FORMAT_JSON ? matrix_report_to_json(report)
                                                     : matrix_report_to_text(report));
  });
}

classcut_status classcut_dendrogram_graph(const classcut_graph *graph,
                                          const classcut_config *config, classcut_format format,
                                          char **out) {
  return guarded([&] {
    require(graph && out, "null argument");
    require(format != CLASSCUT_FORMAT_JSON, "dendrogram output supports text or dot");
    auto cfg = to_config(config);
    auto cut = agglomerate(similarity_matrix(graph->graph), cfg.linkage, cfg.threshold);
    *out = dup_string(render_dendrogram(cut.dendrogram, member_names(graph->graph),
                                        format == CLASSCUT_FORMAT_DOT ? TreeFormat::Dot
                                                                      : TreeFormat::Text));
  });
}

classcut_status classcut_dendrogram_matrix(const classcut_matrix *matrix,
                                           const classcut_config *config, classcut_format format,
                                           char **out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    require(format != CLASSCUT_FORMAT_JSON, "dendrogram output supports text or dot");
    auto cfg = to_config(config);
    auto report = run_matrix_cut(matrix->doc, cfg);
    *out = dup_string(render_dendrogram(report.cut.dendrogram, label_names(matrix->doc),
                                        format == CLASSCUT_FORMAT_DOT ? TreeFormat::Dot
                                                                      : TreeFormat::Text));
  });
}

void classcut_string_free(char *s) { std::free(s); }

const char *classcut_last_error(void) { return g_last_error.c_str(); }

const char *classcut_status_name(classcut_status status) {
  switch (status) {
  case CLASSCUT_OK: return "ok";
  case CLASSCUT_E_SYNTAX: return "syntax error";
  case CLASSCUT_E_DUPLICATE_MEMBER: return "duplicate member";
  case CLASSCUT_E_UNKNOWN_MEMBER: return "unknown member";
  case CLASSCUT_E_KIND_MISMATCH: return "kind mismatch";
  case CLASSCUT_E_MALFORMED_DOCUMENT: return "malformed document";
  case CLASSCUT_E_NON_SQUARE: return "non-square matrix";
  case CLASSCUT_E_VALUE_OUT_OF_RANGE: return "value out of range";
  case CLASSCUT_E_ASYMMETRIC_CONFLICT: return "asymmetric matrix";
  case CLASSCUT_E_EMPTY_GRAPH: return "empty graph";
  case CLASSCUT_E_NO_METHODS_IN_TARGET: return "no methods in target";
  case CLASSCUT_E_NO_FIELDS_IN_TARGET: return "no fields in target";
  case CLASSCUT_E_INVALID_ARGUMENT: return "invalid argument";
  case CLASSCUT_E_INTERNAL: return "internal error";
  }
  return "?";
}

} // extern "C"
