#include "classcut/cohesion.hpp"

#include <vector>

namespace classcut {

namespace {

bool in_view(MemberId id, const std::set<MemberId> *subset) {
  return subset == nullptr || subset->count(id) > 0;
}

std::vector<MemberId> view_methods(const ClassGraph &graph, const std::set<MemberId> *subset) {
  std::vector<MemberId> out;
  for (auto &m : graph.members())
    if (m.kind == MemberKind::Method && in_view(m.id, subset))
      out.push_back(m.id);
  return out;
}

std::set<MemberId> used_fields(const ClassGraph &graph, MemberId method,
                               const std::set<MemberId> *subset) {
  std::set<MemberId> out;
  for (auto f : graph.uses(method))
    if (in_view(f, subset))
      out.insert(f);
  return out;
}

std::set<MemberId> used_fields_closure(const ClassGraph &graph, MemberId method,
                                       const std::set<MemberId> *subset) {
  std::set<MemberId> fields;
  std::set<MemberId> visited;
  std::vector<MemberId> stack{method};
  while (!stack.empty()) {
    MemberId m = stack.back();
    stack.pop_back();
    if (!visited.insert(m).second)
      continue;
    auto direct = used_fields(graph, m, subset);
    fields.insert(direct.begin(), direct.end());
    for (auto callee : graph.calls(m))
      if (in_view(callee, subset))
        stack.push_back(callee);
  }
  return fields;
}

bool intersects(const std::set<MemberId> &a, const std::set<MemberId> &b) {
  for (auto id : a)
    if (b.count(id))
      return true;
  return false;
}

} // namespace

long lcom(const ClassGraph &graph, const std::set<MemberId> *subset) {
  auto methods = view_methods(graph, subset);
  std::vector<std::set<MemberId>> fields;
  fields.reserve(methods.size());
  for (auto m : methods)
    fields.push_back(used_fields(graph, m, subset));
  long disjoint = 0, sharing = 0;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = i + 1; j < methods.size(); ++j) {
      if (intersects(fields[i], fields[j]))
        ++sharing;
      else
        ++disjoint;
    }
  }
  return std::max(disjoint - sharing, 0L);
}

std::optional<double> tcc(const ClassGraph &graph, TccMode mode,
                          const std::set<MemberId> *subset) {
  auto methods = view_methods(graph, subset);
  if (methods.size() < 2)
    return std::nullopt;
  std::vector<std::set<MemberId>> fields;
  fields.reserve(methods.size());
  for (auto m : methods)
    fields.push_back(mode == TccMode::Direct ? used_fields(graph, m, subset)
                                             : used_fields_closure(graph, m, subset));
  std::size_t connected = 0, pairs = 0;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = i + 1; j < methods.size(); ++j) {
      ++pairs;
      if (intersects(fields[i], fields[j]))
        ++connected;
    }
  }
  return static_cast<double>(connected) / static_cast<double>(pairs);
}

CohesionReport assess(const ClassGraph &graph, long lcom_threshold, double tcc_threshold,
                      TccMode mode, const std::set<MemberId> *subset) {
  CohesionReport report;
  report.method_count = view_methods(graph, subset).size();
  report.lcom = lcom(graph, subset);
  report.tcc = tcc(graph, mode, subset);
  if (!report.tcc)
    report.verdict = Verdict::Indeterminate;
  else if (report.lcom > lcom_threshold && *report.tcc < tcc_threshold)
    report.verdict = Verdict::LowCohesion;
  else
    report.verdict = Verdict::Acceptable;
  return report;
}

} // namespace classcut
