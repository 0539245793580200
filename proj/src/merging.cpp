#include "classcut/merging.hpp"

#include <algorithm>

namespace classcut {

namespace {

void check_disjoint(MemberId member, const Cluster &target) {
  if (target.members.count(member))
    throw Error(ErrorCode::InvalidArgument, "member already belongs to the target cluster");
}

} // namespace

double cim_v(MemberId variable, const Cluster &target, const ClassGraph &graph) {
  if (!graph.is_field(variable))
    throw Error(ErrorCode::KindMismatch, "cim_v expects a field");
  check_disjoint(variable, target);
  auto methods = methods_of(target, graph);
  if (methods.empty())
    throw Error(ErrorCode::NoMethodsInTarget, "cim_v needs a target with methods");
  std::size_t referencing = 0;
  for (auto m : methods)
    if (graph.uses(m).count(variable))
      ++referencing;
  return static_cast<double>(referencing) / static_cast<double>(methods.size());
}

double cim_vr_m(MemberId method, const Cluster &target, const ClassGraph &graph) {
  if (!graph.is_method(method))
    throw Error(ErrorCode::KindMismatch, "cim_vr_m expects a method");
  check_disjoint(method, target);
  auto fields = fields_of(target, graph);
  if (fields.empty())
    throw Error(ErrorCode::NoFieldsInTarget, "cim_vr_m needs a target with fields");
  std::size_t referenced = 0;
  for (auto f : fields)
    if (graph.uses(method).count(f))
      ++referenced;
  return static_cast<double>(referenced) / static_cast<double>(fields.size());
}

double cim_c_m(MemberId method, const Cluster &target, const ClassGraph &graph) {
  if (!graph.is_method(method))
    throw Error(ErrorCode::KindMismatch, "cim_c_m expects a method");
  check_disjoint(method, target);
  auto methods = methods_of(target, graph);
  if (methods.empty())
    throw Error(ErrorCode::NoMethodsInTarget, "cim_c_m needs a target with methods");
  std::size_t called = 0;
  for (auto m : methods)
    if (graph.calls(method).count(m))
      ++called;
  return static_cast<double>(called) / static_cast<double>(methods.size());
}

double cim_i_m(MemberId method, const Cluster &target, const ClassGraph &graph) {
  if (!graph.is_method(method))
    throw Error(ErrorCode::KindMismatch, "cim_i_m expects a method");
  check_disjoint(method, target);
  auto methods = methods_of(target, graph);
  if (methods.empty())
    throw Error(ErrorCode::NoMethodsInTarget, "cim_i_m needs a target with methods");
  std::size_t invoking = 0;
  for (auto m : methods)
    if (graph.calls(m).count(method))
      ++invoking;
  return static_cast<double>(invoking) / static_cast<double>(methods.size());
}

MergeContext classify_context(const Cluster &cluster, const ClassGraph &graph) {
  if (cluster.members.empty())
    throw Error(ErrorCode::InvalidArgument, "cannot classify an empty cluster");
  std::size_t methods = methods_of(cluster, graph).size();
  std::size_t fields = cluster.members.size() - methods;
  if (methods > 0 && fields > 0)
    return MergeContext::Mixed;
  if (methods == 1)
    return MergeContext::SingleMethod;
  if (fields == 1)
    return MergeContext::SingleVariable;
  return methods > 0 ? MergeContext::OnlyMethods : MergeContext::OnlyVariables;
}

bool is_mergeable(const Cluster &cluster, const ClassGraph &graph, int min_size) {
  if (cluster.members.size() == 1)
    return true;
  if (cluster.members.size() < static_cast<std::size_t>(std::max(min_size, 0)))
    return true;
  return methods_of(cluster, graph).empty();
}

CimScore score_merge(const Cluster &source, const Cluster &target, const ClassGraph &graph) {
  auto target_methods = methods_of(target, graph);
  if (target_methods.empty())
    throw Error(ErrorCode::NoMethodsInTarget, "merge targets must contain methods");
  auto target_fields = fields_of(target, graph);

  CimScore score;
  score.source_id = source.id;
  score.target_id = target.id;
  double total = 0.0;
  std::size_t terms = 0;
  auto accumulate = [&](std::optional<double> &slot, double value) {
    slot = slot ? *slot + value : value;
    total += value;
    ++terms;
  };
  std::size_t n_fields = 0, n_methods = 0;
  for (auto member : source.members) {
    if (graph.is_field(member)) {
      ++n_fields;
      accumulate(score.cim_v, cim_v(member, target, graph));
    } else {
      ++n_methods;
      if (!target_fields.empty())
        accumulate(score.cim_vr_m, cim_vr_m(member, target, graph));
      accumulate(score.cim_c_m, cim_c_m(member, target, graph));
      accumulate(score.cim_i_m, cim_i_m(member, target, graph));
    }
  }
  // per-kind values are reported as means over the contributing members
  if (score.cim_v)
    *score.cim_v /= static_cast<double>(n_fields);
  if (score.cim_vr_m)
    *score.cim_vr_m /= static_cast<double>(n_methods);
  if (score.cim_c_m)
    *score.cim_c_m /= static_cast<double>(n_methods);
  if (score.cim_i_m)
    *score.cim_i_m /= static_cast<double>(n_methods);
  score.combined = terms == 0 ? 0.0 : total / static_cast<double>(terms);
  return score;
}

std::pair<Partition, MergeLog> merge_small_clusters(const Partition &partition,
                                                    const ClassGraph &graph, int min_size) {
  if (!partition.is_valid())
    throw Error(ErrorCode::InvalidArgument, "partition is not valid over the graph");

  std::vector<Cluster> sources, targets;
  for (auto &c : partition.clusters)
    (is_mergeable(c, graph, min_size) ? sources : targets).push_back(c);
  std::stable_sort(sources.begin(), sources.end(), [](const Cluster &a, const Cluster &b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.id < b.id;
  });

  MergeLog log;
  std::vector<Cluster> unmerged;
  for (auto &source : sources) {
    MergeStep step;
    step.source = source;
    const CimScore *best = nullptr;
    Cluster *best_target = nullptr;
    for (auto &target : targets) {
      if (methods_of(target, graph).empty())
        continue;
      step.scores.push_back(score_merge(source, target, graph));
    }
    std::sort(step.scores.begin(), step.scores.end(),
              [](const CimScore &a, const CimScore &b) { return a.target_id < b.target_id; });
    for (auto &s : step.scores)
      if (!best || s.combined > best->combined)
        best = &s;
    if (best) {
      auto at_max = std::count_if(step.scores.begin(), step.scores.end(),
                                  [&](const CimScore &s) { return s.combined == best->combined; });
      step.tie = at_max > 1; // resolved to the lowest target id below
    }
    if (best) {
      for (auto &target : targets)
        if (target.id == best->target_id)
          best_target = &target;
      step.chosen_target = best->target_id;
      best_target->members.insert(source.members.begin(), source.members.end());
    } else {
      unmerged.push_back(source); // no cluster with methods to merge into
    }
    log.steps.push_back(std::move(step));
  }

  Partition result;
  result.member_count = partition.member_count;
  result.clusters = std::move(targets);
  result.clusters.insert(result.clusters.end(), unmerged.begin(), unmerged.end());
  std::sort(result.clusters.begin(), result.clusters.end(),
            [](const Cluster &a, const Cluster &b) { return a.id < b.id; });
  return {std::move(result), std::move(log)};
}

} // namespace classcut
