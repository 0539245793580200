#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classcut/clustering.hpp"
#include "classcut/cohesion.hpp"
#include "classcut/merging.hpp"

namespace classcut {

enum class OutputFormat { Text, Json, Dot };

struct AnalysisConfig {
  double threshold = 0.2;
  Linkage linkage = Linkage::Complete;
  int min_size = 2;
  long lcom_threshold = 0;
  double tcc_threshold = 0.5;
  TccMode tcc_mode = TccMode::Direct;
  bool force = false;

  bool operator==(const AnalysisConfig &) const = default;
};

struct ProposedClass {
  std::string name;
  std::vector<std::string> members;
  CohesionReport cohesion;

  bool operator==(const ProposedClass &) const = default;
};

struct RefactoringReport {
  std::string class_name;
  std::vector<std::string> member_names; // declaration order, dendrogram leaves
  AnalysisConfig config;
  CohesionReport cohesion_before;
  bool refactoring_proposed{};
  std::optional<CutResult> cut;
  MergeLog merge_log;
  std::vector<ProposedClass> proposed_classes;

  bool operator==(const RefactoringReport &) const;
};

// Two-step pipeline: assess cohesion, then (when low or forced) cluster the
// member similarity matrix at the cut-off and merge residual small clusters.
RefactoringReport run_pipeline(const ClassGraph &graph, const AnalysisConfig &config);

// Raw-matrix route: clustering only. Cohesion and merge metrics need the
// graph, so reports from this route carry neither.
struct MatrixCutReport {
  std::vector<MatrixLabel> labels;
  AnalysisConfig config;
  CutResult cut;
};

MatrixCutReport run_matrix_cut(const MatrixDocument &doc, const AnalysisConfig &config);

std::string report_to_text(const RefactoringReport &report);
std::string report_to_json(const RefactoringReport &report);
RefactoringReport report_from_json(const std::string &text);

std::string matrix_report_to_text(const MatrixCutReport &report);
std::string matrix_report_to_json(const MatrixCutReport &report);

std::string cohesion_to_text(const std::string &class_name, const CohesionReport &report);
std::string cohesion_to_json(const std::string &class_name, const CohesionReport &report);

const char *verdict_name(Verdict v);
const char *linkage_name(Linkage l);

} // namespace classcut
