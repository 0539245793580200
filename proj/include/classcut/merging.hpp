#pragma once

#include <optional>
#include <vector>

#include "classcut/model.hpp"

namespace classcut {

enum class MergeContext {
  SingleVariable, // exactly one field
  SingleMethod,   // exactly one method
  OnlyVariables,  // two or more members, all fields
  OnlyMethods,    // two or more members, all methods
  Mixed,          // at least one method and one field
};

// Cluster-identification scores for placing one source cluster into a
// candidate target. The four per-kind values are means over the source
// members they apply to; combined averages every computed term with equal
// weight (0 when nothing was computable).
struct CimScore {
  std::uint32_t source_id{}, target_id{};
  std::optional<double> cim_v;
  std::optional<double> cim_vr_m;
  std::optional<double> cim_c_m;
  std::optional<double> cim_i_m;
  double combined{};

  bool operator==(const CimScore &) const = default;
};

struct MergeStep {
  Cluster source;
  std::optional<std::uint32_t> chosen_target; // empty when no valid target existed
  bool tie{};
  std::vector<CimScore> scores; // one per candidate target, ascending target id

  bool operator==(const MergeStep &) const = default;
};

struct MergeLog {
  std::vector<MergeStep> steps;

  bool operator==(const MergeLog &) const = default;
};

// Fraction of the target's methods that reference the variable.
double cim_v(MemberId variable, const Cluster &target, const ClassGraph &graph);

// Fraction of the target's fields the method references.
double cim_vr_m(MemberId method, const Cluster &target, const ClassGraph &graph);

// Fraction of the target's methods the method calls.
double cim_c_m(MemberId method, const Cluster &target, const ClassGraph &graph);

// Fraction of the target's methods that call the method.
double cim_i_m(MemberId method, const Cluster &target, const ClassGraph &graph);

MergeContext classify_context(const Cluster &cluster, const ClassGraph &graph);

// A cluster needs merging when it has no methods, is a singleton, or is
// smaller than min_size.
bool is_mergeable(const Cluster &cluster, const ClassGraph &graph, int min_size = 2);

CimScore score_merge(const Cluster &source, const Cluster &target, const ClassGraph &graph);

// Merge every mergeable cluster into its best-scoring target, smallest
// sources first. Exact score ties go to the lowest target id and are
// flagged; resolving them properly needs cross-class coupling data.
std::pair<Partition, MergeLog> merge_small_clusters(const Partition &partition,
                                                    const ClassGraph &graph,
                                                    int min_size = 2);

} // namespace classcut
