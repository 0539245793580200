#pragma once

#include <string>
#include <vector>

#include "classcut/similarity.hpp"

namespace classcut {

enum class Linkage { Single, Complete, Average, Weighted };

struct DendrogramNode {
  // Child node indices: 0..leaf_count-1 are leaves (MemberId order),
  // internal nodes follow at leaf_count + merge position.
  std::size_t left{}, right{};
  double similarity{};
  std::uint32_t cluster_id{};
  bool below_cut{};

  bool operator==(const DendrogramNode &) const = default;
};

// Full binary merge tree. Always built to the root, with merges that fell
// below the requested cut flagged, so one run serves display at any cut.
struct Dendrogram {
  std::size_t leaf_count{};
  std::vector<DendrogramNode> merges;

  bool operator==(const Dendrogram &) const = default;
};

struct CutResult {
  Partition partition;
  double threshold{};
  Linkage linkage{};
  Dendrogram dendrogram;

  bool operator==(const CutResult &) const = default;
};

// Linkage similarity between two disjoint member sets. Weighted (WPGMA)
// linkage depends on merge history and is only supported here when both
// sides are singletons; agglomerate() handles the general case.
double cluster_similarity(const std::set<MemberId> &cluster_a,
                          const std::set<MemberId> &cluster_b,
                          const SimilarityMatrix &matrix, Linkage linkage);

// Agglomerative clustering with an inclusive similarity cut-off:
// repeatedly merge the most similar pair while its linkage similarity is
// >= threshold. Ties break to the pair with the lowest cluster ids;
// singletons carry their member index as id and a merged cluster keeps the
// smaller id of its children.
CutResult agglomerate(const SimilarityMatrix &matrix, Linkage linkage, double threshold);

enum class TreeFormat { Text, Dot };

std::string render_dendrogram(const Dendrogram &dendrogram,
                              const std::vector<std::string> &leaf_names,
                              TreeFormat format);

} // namespace classcut
