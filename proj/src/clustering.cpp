#include "classcut/clustering.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "classcut/detail/format.hpp"

namespace classcut {

namespace {

double cross_pair_similarity(const std::set<MemberId> &a, const std::set<MemberId> &b,
                             const SimilarityMatrix &m, Linkage linkage) {
  double best_min = std::numeric_limits<double>::infinity();
  double best_max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (auto i : a) {
    for (auto j : b) {
      double s = m.at(i.index, j.index);
      best_min = std::min(best_min, s);
      best_max = std::max(best_max, s);
      sum += s;
    }
  }
  switch (linkage) {
  case Linkage::Single: return best_max;
  case Linkage::Complete: return best_min;
  case Linkage::Average: return sum / static_cast<double>(a.size() * b.size());
  case Linkage::Weighted: break;
  }
  throw Error(ErrorCode::InvalidArgument,
              "weighted linkage between multi-member clusters needs merge history");
}

struct Active {
  std::uint32_t id;
  std::size_t node; // dendrogram node index
  std::set<MemberId> members;
};

} // namespace

double cluster_similarity(const std::set<MemberId> &cluster_a,
                          const std::set<MemberId> &cluster_b,
                          const SimilarityMatrix &matrix, Linkage linkage) {
  if (cluster_a.empty() || cluster_b.empty())
    throw Error(ErrorCode::InvalidArgument, "clusters must be non-empty");
  if (linkage == Linkage::Weighted && (cluster_a.size() > 1 || cluster_b.size() > 1))
    return cross_pair_similarity(cluster_a, cluster_b, matrix, linkage); // throws
  if (linkage == Linkage::Weighted)
    return matrix.at(cluster_a.begin()->index, cluster_b.begin()->index);
  return cross_pair_similarity(cluster_a, cluster_b, matrix, linkage);
}

CutResult agglomerate(const SimilarityMatrix &matrix, Linkage linkage, double threshold) {
  if (threshold < 0.0 || threshold > 1.0)
    throw Error(ErrorCode::InvalidArgument, "threshold must lie in [0,1]");
  std::size_t n = matrix.size();
  if (n == 0)
    throw Error(ErrorCode::EmptyGraph, "cannot cluster an empty matrix");

  CutResult result;
  result.threshold = threshold;
  result.linkage = linkage;
  result.dendrogram.leaf_count = n;

  std::vector<Active> active;
  active.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    active.push_back({static_cast<std::uint32_t>(i), i, {MemberId{static_cast<std::uint32_t>(i)}}});

  // Pairwise linkage similarities between active clusters, updated by the
  // Lance-Williams rules so Weighted linkage sees its merge history.
  std::vector<std::vector<double>> sims(n, std::vector<double>(n, 0.0));
  std::vector<std::size_t> sizes(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sims[i][j] = matrix.at(i, j);

  bool cutting = true;
  double prev_similarity = std::numeric_limits<double>::infinity();
  while (active.size() > 1) {
    std::size_t bi = 0, bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        double s = sims[i][j];
        if (s > best) {
          best = s;
          bi = i;
          bj = j;
        } else if (s == best) {
          auto lo = std::min(active[i].id, active[j].id);
          auto hi = std::max(active[i].id, active[j].id);
          auto cur_lo = std::min(active[bi].id, active[bj].id);
          auto cur_hi = std::max(active[bi].id, active[bj].id);
          if (lo < cur_lo || (lo == cur_lo && hi < cur_hi)) {
            bi = i;
            bj = j;
          }
        }
      }
    }
    if (cutting && best < threshold) {
      // capture the partition at the cut, then keep building to the root
      for (auto &c : active)
        result.partition.clusters.push_back({c.id, c.members});
      cutting = false;
    }
    if (linkage == Linkage::Complete) {
      // standard reducibility: complete-link merge similarities never increase
      assert(best <= prev_similarity + 1e-12);
      prev_similarity = best;
      (void)prev_similarity;
    }
    // left child is the cluster with the smaller id
    if (active[bj].id < active[bi].id)
      std::swap(bi, bj);
    DendrogramNode node;
    node.left = active[bi].node;
    node.right = active[bj].node;
    node.similarity = best;
    node.cluster_id = active[bi].id;
    node.below_cut = !cutting;
    std::size_t node_index = n + result.dendrogram.merges.size();
    result.dendrogram.merges.push_back(node);

    // Lance-Williams update of row bi, then drop row bj.
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (k == bi || k == bj)
        continue;
      double sa = sims[bi][k], sb = sims[bj][k];
      double merged;
      switch (linkage) {
      case Linkage::Single: merged = std::max(sa, sb); break;
      case Linkage::Complete: merged = std::min(sa, sb); break;
      case Linkage::Average:
        merged = (static_cast<double>(sizes[bi]) * sa + static_cast<double>(sizes[bj]) * sb) /
                 static_cast<double>(sizes[bi] + sizes[bj]);
        break;
      case Linkage::Weighted: merged = (sa + sb) / 2.0; break;
      default: merged = 0.0; break;
      }
      sims[bi][k] = sims[k][bi] = merged;
    }
    active[bi].members.insert(active[bj].members.begin(), active[bj].members.end());
    active[bi].node = node_index;
    sizes[bi] += sizes[bj];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
    sizes.erase(sizes.begin() + static_cast<std::ptrdiff_t>(bj));
    for (auto &row : sims)
      row.erase(row.begin() + static_cast<std::ptrdiff_t>(bj));
    sims.erase(sims.begin() + static_cast<std::ptrdiff_t>(bj));
  }

  if (cutting) // every merge made the cut (or n == 1)
    for (auto &c : active)
      result.partition.clusters.push_back({c.id, c.members});
  std::sort(result.partition.clusters.begin(), result.partition.clusters.end(),
            [](const Cluster &a, const Cluster &b) { return a.id < b.id; });
  result.partition.member_count = n;
  return result;
}

namespace {

void render_text(const Dendrogram &d, const std::vector<std::string> &names,
                 std::size_t node, int depth, std::string &out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (node < d.leaf_count) {
    out += names[node];
    out += '\n';
    return;
  }
  const auto &m = d.merges[node - d.leaf_count];
  out += "@ s=" + detail::format_fixed2(m.similarity);
  if (m.below_cut)
    out += " (below cut)";
  out += '\n';
  render_text(d, names, m.left, depth + 1, out);
  render_text(d, names, m.right, depth + 1, out);
}

} // namespace

std::string render_dendrogram(const Dendrogram &dendrogram,
                              const std::vector<std::string> &leaf_names,
                              TreeFormat format) {
  if (leaf_names.size() != dendrogram.leaf_count)
    throw Error(ErrorCode::InvalidArgument, "leaf name count does not match dendrogram");
  if (format == TreeFormat::Text) {
    std::string out;
    if (dendrogram.merges.empty()) {
      for (auto &name : leaf_names)
        out += name + "\n";
      return out;
    }
    std::size_t root = dendrogram.leaf_count + dendrogram.merges.size() - 1;
    render_text(dendrogram, leaf_names, root, 0, out);
    return out;
  }
  std::string out = "digraph dendrogram {\n";
  for (std::size_t i = 0; i < dendrogram.leaf_count; ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + leaf_names[i] + "\", shape=box];\n";
  for (std::size_t k = 0; k < dendrogram.merges.size(); ++k) {
    const auto &m = dendrogram.merges[k];
    std::size_t id = dendrogram.leaf_count + k;
    out += "  n" + std::to_string(id) + " [label=\"s=" + detail::format_fixed2(m.similarity) +
           "\"];\n";
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(m.left) + ";\n";
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(m.right) + ";\n";
  }
  out += "}\n";
  return out;
}

} // namespace classcut
