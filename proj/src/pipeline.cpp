#include "classcut/pipeline.hpp"

#include <json.hpp>

#include "classcut/detail/format.hpp"

namespace classcut {

using nlohmann::json;

bool RefactoringReport::operator==(const RefactoringReport &o) const {
  return class_name == o.class_name && member_names == o.member_names && config == o.config &&
         cohesion_before == o.cohesion_before && refactoring_proposed == o.refactoring_proposed &&
         cut == o.cut && merge_log == o.merge_log && proposed_classes == o.proposed_classes;
}

RefactoringReport run_pipeline(const ClassGraph &graph, const AnalysisConfig &config) {
  if (config.threshold < 0.0 || config.threshold > 1.0)
    throw Error(ErrorCode::InvalidArgument, "threshold must lie in [0,1]");
  RefactoringReport report;
  report.class_name = graph.name();
  for (auto &m : graph.members())
    report.member_names.push_back(m.name);
  report.config = config;
  report.cohesion_before =
      assess(graph, config.lcom_threshold, config.tcc_threshold, config.tcc_mode);
  report.refactoring_proposed =
      report.cohesion_before.verdict == Verdict::LowCohesion || config.force;
  if (!report.refactoring_proposed)
    return report;

  auto matrix = similarity_matrix(graph);
  report.cut = agglomerate(matrix, config.linkage, config.threshold);
  auto [merged, log] = merge_small_clusters(report.cut->partition, graph, config.min_size);
  report.merge_log = std::move(log);
  int part = 1;
  for (auto &cluster : merged.clusters) {
    ProposedClass pc;
    pc.name = graph.name() + "Part" + std::to_string(part++);
    for (auto id : cluster.members)
      pc.members.push_back(graph.member(id).name);
    pc.cohesion = assess(graph, config.lcom_threshold, config.tcc_threshold, config.tcc_mode,
                         &cluster.members);
    report.proposed_classes.push_back(std::move(pc));
  }
  return report;
}

MatrixCutReport run_matrix_cut(const MatrixDocument &doc, const AnalysisConfig &config) {
  MatrixCutReport report;
  report.labels = doc.labels;
  report.config = config;
  report.cut = agglomerate(matrix_from_document(doc), config.linkage, config.threshold);
  return report;
}

// ---- serialization ----

namespace {

json cohesion_json(const CohesionReport &r) {
  json j;
  j["lcom"] = r.lcom;
  if (r.tcc)
    j["tcc"] = *r.tcc;
  else
    j["tcc"] = nullptr;
  j["method_count"] = r.method_count;
  j["verdict"] = verdict_name(r.verdict);
  return j;
}

CohesionReport cohesion_from_json(const json &j) {
  CohesionReport r;
  r.lcom = j.at("lcom").get<long>();
  if (!j.at("tcc").is_null())
    r.tcc = j.at("tcc").get<double>();
  r.method_count = j.at("method_count").get<std::size_t>();
  std::string v = j.at("verdict").get<std::string>();
  r.verdict = v == "low-cohesion"   ? Verdict::LowCohesion
              : v == "acceptable"   ? Verdict::Acceptable
                                    : Verdict::Indeterminate;
  return r;
}

json config_json(const AnalysisConfig &c) {
  json j;
  j["threshold"] = c.threshold;
  j["linkage"] = linkage_name(c.linkage);
  j["min_size"] = c.min_size;
  j["lcom_threshold"] = c.lcom_threshold;
  j["tcc_threshold"] = c.tcc_threshold;
  j["tcc_mode"] = c.tcc_mode == TccMode::Direct ? "direct" : "closure";
  j["force"] = c.force;
  return j;
}

AnalysisConfig config_from_json(const json &j) {
  AnalysisConfig c;
  c.threshold = j.at("threshold").get<double>();
  std::string l = j.at("linkage").get<std::string>();
  c.linkage = l == "single"     ? Linkage::Single
              : l == "average"  ? Linkage::Average
              : l == "weighted" ? Linkage::Weighted
                                : Linkage::Complete;
  c.min_size = j.at("min_size").get<int>();
  c.lcom_threshold = j.at("lcom_threshold").get<long>();
  c.tcc_threshold = j.at("tcc_threshold").get<double>();
  c.tcc_mode = j.at("tcc_mode").get<std::string>() == "closure" ? TccMode::CallClosure
                                                                : TccMode::Direct;
  c.force = j.at("force").get<bool>();
  return c;
}

json cut_json(const CutResult &cut) {
  json j;
  j["threshold"] = cut.threshold;
  j["linkage"] = linkage_name(cut.linkage);
  json clusters = json::array();
  for (auto &c : cut.partition.clusters) {
    json jc;
    jc["id"] = c.id;
    jc["members"] = json::array();
    for (auto id : c.members)
      jc["members"].push_back(id.index);
    clusters.push_back(std::move(jc));
  }
  j["clusters"] = std::move(clusters);
  j["member_count"] = cut.partition.member_count;
  json merges = json::array();
  for (auto &m : cut.dendrogram.merges) {
    json jm;
    jm["left"] = m.left;
    jm["right"] = m.right;
    jm["similarity"] = m.similarity;
    jm["cluster_id"] = m.cluster_id;
    jm["below_cut"] = m.below_cut;
    merges.push_back(std::move(jm));
  }
  j["dendrogram"] = {{"leaf_count", cut.dendrogram.leaf_count}, {"merges", std::move(merges)}};
  return j;
}

CutResult cut_from_json(const json &j) {
  CutResult cut;
  cut.threshold = j.at("threshold").get<double>();
  std::string l = j.at("linkage").get<std::string>();
  cut.linkage = l == "single"     ? Linkage::Single
                : l == "average"  ? Linkage::Average
                : l == "weighted" ? Linkage::Weighted
                                  : Linkage::Complete;
  for (auto &jc : j.at("clusters")) {
    Cluster c;
    c.id = jc.at("id").get<std::uint32_t>();
    for (auto &idx : jc.at("members"))
      c.members.insert(MemberId{idx.get<std::uint32_t>()});
    cut.partition.clusters.push_back(std::move(c));
  }
  cut.partition.member_count = j.at("member_count").get<std::size_t>();
  auto &jd = j.at("dendrogram");
  cut.dendrogram.leaf_count = jd.at("leaf_count").get<std::size_t>();
  for (auto &jm : jd.at("merges")) {
    DendrogramNode node;
    node.left = jm.at("left").get<std::size_t>();
    node.right = jm.at("right").get<std::size_t>();
    node.similarity = jm.at("similarity").get<double>();
    node.cluster_id = jm.at("cluster_id").get<std::uint32_t>();
    node.below_cut = jm.at("below_cut").get<bool>();
    cut.dendrogram.merges.push_back(node);
  }
  return cut;
}

json merge_log_json(const MergeLog &log) {
  json steps = json::array();
  for (auto &step : log.steps) {
    json js;
    js["source"] = {{"id", step.source.id}, {"members", json::array()}};
    for (auto id : step.source.members)
      js["source"]["members"].push_back(id.index);
    if (step.chosen_target)
      js["chosen_target"] = *step.chosen_target;
    else
      js["chosen_target"] = nullptr;
    js["tie"] = step.tie;
    json scores = json::array();
    for (auto &s : step.scores) {
      json jsc;
      jsc["source_id"] = s.source_id;
      jsc["target_id"] = s.target_id;
      auto opt = [](const std::optional<double> &v) { return v ? json(*v) : json(nullptr); };
      jsc["cim_v"] = opt(s.cim_v);
      jsc["cim_vr_m"] = opt(s.cim_vr_m);
      jsc["cim_c_m"] = opt(s.cim_c_m);
      jsc["cim_i_m"] = opt(s.cim_i_m);
      jsc["combined"] = s.combined;
      scores.push_back(std::move(jsc));
    }
    js["scores"] = std::move(scores);
    steps.push_back(std::move(js));
  }
  return steps;
}

MergeLog merge_log_from_json(const json &j) {
  MergeLog log;
  for (auto &js : j) {
    MergeStep step;
    step.source.id = js.at("source").at("id").get<std::uint32_t>();
    for (auto &idx : js.at("source").at("members"))
      step.source.members.insert(MemberId{idx.get<std::uint32_t>()});
    if (!js.at("chosen_target").is_null())
      step.chosen_target = js.at("chosen_target").get<std::uint32_t>();
    step.tie = js.at("tie").get<bool>();
    for (auto &jsc : js.at("scores")) {
      CimScore s;
      s.source_id = jsc.at("source_id").get<std::uint32_t>();
      s.target_id = jsc.at("target_id").get<std::uint32_t>();
      auto opt = [&](const char *key) -> std::optional<double> {
        if (jsc.at(key).is_null())
          return std::nullopt;
        return jsc.at(key).get<double>();
      };
      s.cim_v = opt("cim_v");
      s.cim_vr_m = opt("cim_vr_m");
      s.cim_c_m = opt("cim_c_m");
      s.cim_i_m = opt("cim_i_m");
      s.combined = jsc.at("combined").get<double>();
      step.scores.push_back(std::move(s));
    }
    log.steps.push_back(std::move(step));
  }
  return log;
}

std::string cluster_members_line(const std::set<MemberId> &members,
                                 const std::vector<std::string> &names) {
  std::string out;
  bool first = true;
  for (auto id : members) {
    if (!first)
      out += ", ";
    out += names[id.index];
    first = false;
  }
  return out;
}

std::string cohesion_line(const CohesionReport &r) {
  std::string out = "LCOM=" + std::to_string(r.lcom);
  out += " TCC=";
  out += r.tcc ? detail::format_fixed2(*r.tcc) : "n/a";
  return out;
}

} // namespace

const char *verdict_name(Verdict v) {
  switch (v) {
  case Verdict::LowCohesion: return "low-cohesion";
  case Verdict::Acceptable: return "acceptable";
  case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char *linkage_name(Linkage l) {
  switch (l) {
  case Linkage::Single: return "single";
  case Linkage::Complete: return "complete";
  case Linkage::Average: return "average";
  case Linkage::Weighted: return "weighted";
  }
  return "?";
}

std::string report_to_json(const RefactoringReport &report) {
  json j;
  j["schema"] = 1;
  j["class"] = report.class_name;
  j["members"] = report.member_names;
  j["config"] = config_json(report.config);
  j["cohesion_before"] = cohesion_json(report.cohesion_before);
  j["refactoring_proposed"] = report.refactoring_proposed;
  if (report.cut)
    j["cut"] = cut_json(*report.cut);
  else
    j["cut"] = nullptr;
  j["merge_log"] = merge_log_json(report.merge_log);
  json proposed = json::array();
  for (auto &pc : report.proposed_classes) {
    json jp;
    jp["name"] = pc.name;
    jp["members"] = pc.members;
    jp["cohesion"] = cohesion_json(pc.cohesion);
    proposed.push_back(std::move(jp));
  }
  j["proposed_classes"] = std::move(proposed);
  return j.dump(2) + "\n";
}

RefactoringReport report_from_json(const std::string &text) {
  json j = json::parse(text);
  if (!j.contains("schema") || j["schema"].get<int>() != 1)
    throw Error(ErrorCode::MalformedDocument, "unsupported report schema");
  RefactoringReport report;
  report.class_name = j.at("class").get<std::string>();
  report.member_names = j.at("members").get<std::vector<std::string>>();
  report.config = config_from_json(j.at("config"));
  report.cohesion_before = cohesion_from_json(j.at("cohesion_before"));
  report.refactoring_proposed = j.at("refactoring_proposed").get<bool>();
  if (!j.at("cut").is_null())
    report.cut = cut_from_json(j.at("cut"));
  report.merge_log = merge_log_from_json(j.at("merge_log"));
  for (auto &jp : j.at("proposed_classes")) {
    ProposedClass pc;
    pc.name = jp.at("name").get<std::string>();
    pc.members = jp.at("members").get<std::vector<std::string>>();
    pc.cohesion = cohesion_from_json(jp.at("cohesion"));
    report.proposed_classes.push_back(std::move(pc));
  }
  return report;
}

std::string report_to_text(const RefactoringReport &report) {
  std::string out = "class " + report.class_name + "\n";
  out += "cohesion: " + cohesion_line(report.cohesion_before) + " -> " +
         verdict_name(report.cohesion_before.verdict) + "\n";
  if (!report.refactoring_proposed) {
    out += "no refactoring proposed\n";
    return out;
  }
  out += "\nclusters at threshold " + detail::format_fixed2(report.config.threshold) + " (" +
         linkage_name(report.config.linkage) + " linkage):\n";
  for (auto &c : report.cut->partition.clusters)
    out += "  cluster " + std::to_string(c.id) + ": " +
           cluster_members_line(c.members, report.member_names) + "\n";
  if (!report.merge_log.steps.empty()) {
    out += "\nsmall-cluster merges:\n";
    for (auto &step : report.merge_log.steps) {
      out += "  {" + cluster_members_line(step.source.members, report.member_names) + "}";
      if (step.chosen_target) {
        out += " -> cluster " + std::to_string(*step.chosen_target);
        for (auto &s : step.scores)
          if (s.target_id == *step.chosen_target)
            out += " (combined=" + detail::format_fixed2(s.combined) + ")";
        if (step.tie)
          out += " [tie: cross-class coupling not computed]";
      } else {
        out += " -> left unmerged (no target with methods)";
      }
      out += "\n";
    }
  }
  out += "\nproposed classes:\n";
  for (auto &pc : report.proposed_classes) {
    out += "  " + pc.name + ": ";
    bool first = true;
    for (auto &m : pc.members) {
      if (!first)
        out += ", ";
      out += m;
      first = false;
    }
    out += "  [" + cohesion_line(pc.cohesion) + "]\n";
  }
  return out;
}

std::string matrix_report_to_json(const MatrixCutReport &report) {
  json j;
  j["schema"] = 1;
  j["labels"] = json::array();
  for (auto &l : report.labels)
    j["labels"].push_back(l.name + (l.kind == MemberKind::Method ? ":m" : ":f"));
  j["config"] = config_json(report.config);
  j["cut"] = cut_json(report.cut);
  j["warning"] = "matrix input: cohesion metrics and small-cluster merging need a class graph";
  return j.dump(2) + "\n";
}

std::string matrix_report_to_text(const MatrixCutReport &report) {
  std::vector<std::string> names;
  for (auto &l : report.labels)
    names.push_back(l.name);
  std::string out = "clusters at threshold " + detail::format_fixed2(report.config.threshold) +
                    " (" + linkage_name(report.config.linkage) + " linkage):\n";
  for (auto &c : report.cut.partition.clusters)
    out += "  cluster " + std::to_string(c.id) + ": " + cluster_members_line(c.members, names) +
           "\n";
  out += "note: matrix input; cohesion metrics and small-cluster merging need a class graph\n";
  return out;
}

std::string cohesion_to_text(const std::string &class_name, const CohesionReport &report) {
  return "class " + class_name + "\n" + cohesion_line(report) + " (methods: " +
         std::to_string(report.method_count) + ") -> " + verdict_name(report.verdict) + "\n";
}

std::string cohesion_to_json(const std::string &class_name, const CohesionReport &report) {
  json j;
  j["schema"] = 1;
  j["class"] = class_name;
  j["cohesion"] = cohesion_json(report);
  return j.dump(2) + "\n";
}

} // namespace classcut
