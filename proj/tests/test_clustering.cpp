#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "classcut/clustering.hpp"
#include "helpers.hpp"

using namespace classcut;

namespace {

std::set<MemberId> ids(std::initializer_list<std::uint32_t> xs) {
  std::set<MemberId> out;
  for (auto x : xs)
    out.insert(MemberId{x});
  return out;
}

std::vector<std::set<MemberId>> member_sets(const Partition &p) {
  std::vector<std::set<MemberId>> out;
  for (auto &c : p.clusters)
    out.push_back(c.members);
  return out;
}

} // namespace

TEST_CASE("10-member matrix cut at 0.2 yields the expected three clusters") {
  auto m = matrix_from_document(load_csv_fixture("table2.csv"));
  auto cut = agglomerate(m, Linkage::Complete, 0.2);
  REQUIRE(cut.partition.is_valid());
  REQUIRE(cut.partition.clusters.size() == 3);
  // clusters arrive sorted by id; the id is the smallest member index inside
  CHECK(cut.partition.clusters[0].id == 0);
  CHECK(cut.partition.clusters[0].members == ids({0, 1, 2, 3, 6})); // A1-A4, av1
  CHECK(cut.partition.clusters[1].id == 4);
  CHECK(cut.partition.clusters[1].members == ids({4, 5, 8, 9})); // A5, A6, av3, av4
  CHECK(cut.partition.clusters[2].id == 7);
  CHECK(cut.partition.clusters[2].members == ids({7})); // av2
}

TEST_CASE("22-member matrix cut at 0.2 yields the expected five clusters") {
  auto m = matrix_from_document(load_csv_fixture("table3.csv"));
  auto cut = agglomerate(m, Linkage::Complete, 0.2);
  REQUIRE(cut.partition.is_valid());
  REQUIRE(cut.partition.clusters.size() == 5);
  auto sets = member_sets(cut.partition);
  CHECK(sets[0] == ids({0, 1, 2, 3, 4}));       // M1..M5
  CHECK(sets[1] == ids({5, 6, 7, 16, 17, 18})); // M6..M8, V6..V8
  CHECK(sets[2] == ids({8, 9, 10, 19, 20, 21})); // M9..M11, V9..V11
  CHECK(sets[3] == ids({11, 12, 14, 15}));      // V1, V2, V4, V5
  CHECK(sets[4] == ids({13}));                  // V3
}

TEST_CASE("threshold extremes collapse or shatter the partition") {
  auto m = matrix_from_document(load_csv_fixture("table2.csv"));
  auto all = agglomerate(m, Linkage::Complete, 0.0);
  CHECK(all.partition.clusters.size() == 1);
  CHECK(all.partition.clusters[0].members.size() == 10);
  auto none = agglomerate(m, Linkage::Complete, 1.0);
  CHECK(none.partition.clusters.size() == 10); // no off-diagonal 1.0 in the fixture
}

TEST_CASE("dendrogram is always built to the root with cut flags") {
  auto m = matrix_from_document(load_csv_fixture("table2.csv"));
  auto cut = agglomerate(m, Linkage::Complete, 0.2);
  CHECK(cut.dendrogram.leaf_count == 10);
  REQUIRE(cut.dendrogram.merges.size() == 9); // full binary tree
  int below = 0;
  for (auto &node : cut.dendrogram.merges)
    below += node.below_cut ? 1 : 0;
  CHECK(below == 2); // 3 clusters at the cut need 2 more merges to reach the root
  // complete-linkage merge similarities never increase
  for (std::size_t i = 1; i < cut.dendrogram.merges.size(); ++i)
    CHECK(cut.dendrogram.merges[i].similarity <= cut.dendrogram.merges[i - 1].similarity);
}

TEST_CASE("ties break toward the lowest cluster ids") {
  SimilarityMatrix m(3);
  m.set(0, 1, 0.5);
  m.set(0, 2, 0.5);
  m.set(1, 2, 0.5);
  auto cut = agglomerate(m, Linkage::Complete, 0.4);
  REQUIRE(cut.dendrogram.merges.size() == 2);
  CHECK(cut.dendrogram.merges[0].left == 0);
  CHECK(cut.dendrogram.merges[0].right == 1);
  CHECK(cut.dendrogram.merges[0].cluster_id == 0);
}

TEST_CASE("merged clusters keep the smaller child id") {
  SimilarityMatrix m(4);
  m.set(2, 3, 0.9);
  m.set(0, 1, 0.8);
  m.set(1, 2, 0.1);
  auto cut = agglomerate(m, Linkage::Complete, 0.5);
  REQUIRE(cut.partition.clusters.size() == 2);
  CHECK(cut.partition.clusters[0].id == 0);
  CHECK(cut.partition.clusters[0].members == ids({0, 1}));
  CHECK(cut.partition.clusters[1].id == 2);
  CHECK(cut.partition.clusters[1].members == ids({2, 3}));
}

TEST_CASE("linkages disagree on chain-shaped data") {
  // 0-1 and 1-2 are similar, 0-2 is not: single linkage chains all three,
  // complete linkage keeps {2} out at a 0.5 cut.
  SimilarityMatrix m(3);
  m.set(0, 1, 0.9);
  m.set(1, 2, 0.8);
  m.set(0, 2, 0.0);
  auto single = agglomerate(m, Linkage::Single, 0.5);
  CHECK(single.partition.clusters.size() == 1);
  auto complete = agglomerate(m, Linkage::Complete, 0.5);
  CHECK(complete.partition.clusters.size() == 2);
  auto average = agglomerate(m, Linkage::Average, 0.5);
  // after {0,1}, average similarity to 2 is (0.8 + 0.0) / 2 = 0.4 < 0.5
  CHECK(average.partition.clusters.size() == 2);
}

TEST_CASE("weighted linkage averages the two branch similarities") {
  // after {0,1} merges, WPGMA similarity to 2 is (0.9 + 0.1) / 2 = 0.5
  SimilarityMatrix m(3);
  m.set(0, 1, 1.0);
  m.set(0, 2, 0.9);
  m.set(1, 2, 0.1);
  auto cut = agglomerate(m, Linkage::Weighted, 0.5);
  CHECK(cut.partition.clusters.size() == 1); // 0.5 >= threshold, inclusive cut
  REQUIRE(cut.dendrogram.merges.size() == 2);
  CHECK(cut.dendrogram.merges[1].similarity == doctest::Approx(0.5));
}

TEST_CASE("cluster_similarity matches each linkage definition") {
  SimilarityMatrix m(4);
  m.set(0, 2, 0.8);
  m.set(0, 3, 0.4);
  m.set(1, 2, 0.6);
  m.set(1, 3, 0.2);
  auto a = ids({0, 1});
  auto b = ids({2, 3});
  CHECK(cluster_similarity(a, b, m, Linkage::Single) == doctest::Approx(0.8));
  CHECK(cluster_similarity(a, b, m, Linkage::Complete) == doctest::Approx(0.2));
  CHECK(cluster_similarity(a, b, m, Linkage::Average) == doctest::Approx(0.5));
  CHECK(cluster_similarity(ids({0}), ids({3}), m, Linkage::Weighted) == doctest::Approx(0.4));
  try {
    cluster_similarity(a, b, m, Linkage::Weighted);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("agglomerate validates its inputs") {
  SimilarityMatrix m(2);
  try {
    agglomerate(m, Linkage::Complete, 1.5);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  try {
    agglomerate(SimilarityMatrix{}, Linkage::Complete, 0.5);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::EmptyGraph);
  }
  auto lone = agglomerate(SimilarityMatrix(1), Linkage::Complete, 0.5);
  CHECK(lone.partition.clusters.size() == 1);
  CHECK(lone.dendrogram.merges.empty());
}

TEST_CASE("text rendering shows merge similarities and cut position") {
  auto m = matrix_from_document(load_csv_fixture("table2.csv"));
  auto cut = agglomerate(m, Linkage::Complete, 0.2);
  std::vector<std::string> names{"A1", "A2", "A3", "A4", "A5",
                                 "A6", "av1", "av2", "av3", "av4"};
  auto text = render_dendrogram(cut.dendrogram, names, TreeFormat::Text);
  for (auto &n : names)
    CHECK(text.find(n) != std::string::npos);
  CHECK(text.find("@ s=") != std::string::npos);
  CHECK(text.find("(below cut)") != std::string::npos);

  auto dot = render_dendrogram(cut.dendrogram, names, TreeFormat::Dot);
  CHECK(dot.find("digraph dendrogram {") == 0);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);

  try {
    render_dendrogram(cut.dendrogram, {"just-one"}, TreeFormat::Text);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}
