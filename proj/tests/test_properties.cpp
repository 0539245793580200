#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "classcut/clustering.hpp"
#include "classcut/merging.hpp"
#include "classcut/similarity.hpp"

using namespace classcut;

namespace {

PropertySet random_property_set(std::mt19937 &rng, std::uint32_t universe) {
  std::uniform_int_distribution<std::uint32_t> pick(0, universe - 1);
  PropertySet ps;
  ps.owner = MemberId{pick(rng)};
  ps.properties.insert(ps.owner);
  std::uniform_int_distribution<int> count(0, 8);
  int extra = count(rng);
  for (int i = 0; i < extra; ++i)
    ps.properties.insert(MemberId{pick(rng)});
  return ps;
}

SimilarityMatrix random_matrix(std::mt19937 &rng, std::size_t n) {
  std::uniform_real_distribution<double> value(0.0, 1.0);
  SimilarityMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m.set(i, j, value(rng));
  return m;
}

ClassGraph random_graph(std::mt19937 &rng, int max_methods, int max_fields) {
  std::uniform_int_distribution<int> method_count(1, max_methods);
  std::uniform_int_distribution<int> field_count(1, max_fields);
  int n_methods = method_count(rng);
  int n_fields = field_count(rng);
  std::vector<MemberDecl> members;
  for (int i = 0; i < n_methods; ++i)
    members.push_back({"m" + std::to_string(i), MemberKind::Method});
  for (int i = 0; i < n_fields; ++i)
    members.push_back({"f" + std::to_string(i), MemberKind::Field});
  EdgeMap uses, calls;
  std::bernoulli_distribution edge(0.4);
  for (int i = 0; i < n_methods; ++i) {
    for (int j = 0; j < n_fields; ++j)
      if (edge(rng))
        uses["m" + std::to_string(i)].push_back("f" + std::to_string(j));
    for (int j = 0; j < n_methods; ++j)
      if (j != i && edge(rng))
        calls["m" + std::to_string(i)].push_back("m" + std::to_string(j));
  }
  return ClassGraph::build("R", std::move(members), uses, calls);
}

// Merged member set of every dendrogram node, leaves included.
std::vector<std::set<MemberId>> node_sets(const Dendrogram &d) {
  std::vector<std::set<MemberId>> sets;
  for (std::uint32_t i = 0; i < d.leaf_count; ++i)
    sets.push_back({MemberId{i}});
  for (auto &m : d.merges) {
    std::set<MemberId> merged = sets[m.left];
    merged.insert(sets[m.right].begin(), sets[m.right].end());
    sets.push_back(std::move(merged));
  }
  return sets;
}

} // namespace

TEST_CASE("jaccard: reflexivity, symmetry, and range on 500 random pairs") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_property_set(rng, 20);
    auto b = random_property_set(rng, 20);
    double ab = jaccard(a, b);
    CHECK(jaccard(b, a) == ab);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    CHECK(jaccard(a, a) == 1.0);
    // against a direct set computation
    std::set<MemberId> inter, uni = a.properties;
    uni.insert(b.properties.begin(), b.properties.end());
    std::set_intersection(a.properties.begin(), a.properties.end(), b.properties.begin(),
                          b.properties.end(), std::inserter(inter, inter.begin()));
    CHECK(ab == static_cast<double>(inter.size()) / static_cast<double>(uni.size()));
  }
}

TEST_CASE("clustering invariants on 200 random matrices") {
  std::mt19937 rng(907);
  const double thresholds[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 20);
    std::size_t n = size(rng);
    auto m = random_matrix(rng, n);

    std::size_t prev_clusters = 0;
    for (double t : thresholds) {
      auto cut = agglomerate(m, Linkage::Complete, t);
      CHECK(cut.partition.is_valid());
      CHECK(cut.partition.member_count == n);
      // raising the threshold can only split the partition further
      CHECK(cut.partition.clusters.size() >= prev_clusters);
      prev_clusters = cut.partition.clusters.size();
      // complete-linkage merge similarities never increase
      for (std::size_t i = 1; i < cut.dendrogram.merges.size(); ++i)
        CHECK(cut.dendrogram.merges[i].similarity <=
              cut.dendrogram.merges[i - 1].similarity);
    }

    // determinism under relabeling: permute the matrix, cluster, map back
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    SimilarityMatrix pm(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        pm.set(perm[i], perm[j], m.at(i, j));
    auto base = agglomerate(m, Linkage::Complete, 0.5);
    auto permuted = agglomerate(pm, Linkage::Complete, 0.5);
    auto canonical = [&](const Partition &p, const std::uint32_t *map) {
      std::set<std::set<std::uint32_t>> out;
      for (auto &c : p.clusters) {
        std::set<std::uint32_t> members;
        for (auto id : c.members)
          members.insert(map ? map[id.index] : id.index);
        out.insert(std::move(members));
      }
      return out;
    };
    std::vector<std::uint32_t> inverse(n);
    for (std::size_t i = 0; i < n; ++i)
      inverse[perm[i]] = static_cast<std::uint32_t>(i);
    CHECK(canonical(base.partition, nullptr) ==
          canonical(permuted.partition, inverse.data()));
  }
}

TEST_CASE("cim metrics: range and boundary laws on 200 random graphs") {
  std::mt19937 rng(5150);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, 6, 5);
    // random target cluster containing at least one method
    std::set<MemberId> target_members;
    std::bernoulli_distribution in_target(0.5);
    for (auto &m : g.members())
      if (in_target(rng))
        target_members.insert(m.id);
    target_members.insert(MemberId{0}); // m0 guarantees a method
    Cluster target{0, target_members};
    auto target_methods = methods_of(target, g);

    for (auto &m : g.members()) {
      if (target_members.count(m.id))
        continue;
      ++checked;
      if (m.kind == MemberKind::Field) {
        double v = cim_v(m.id, target, g);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        std::size_t referencing = 0;
        for (auto tm : target_methods)
          if (g.uses(tm).count(m.id))
            ++referencing;
        CHECK((v == 0.0) == (referencing == 0));
        CHECK((v == 1.0) == (referencing == target_methods.size()));
      } else {
        double c = cim_c_m(m.id, target, g);
        double i = cim_i_m(m.id, target, g);
        for (double v : {c, i}) {
          CHECK(v >= 0.0);
          CHECK(v <= 1.0);
        }
        std::size_t called = 0, invoking = 0;
        for (auto tm : target_methods) {
          called += g.calls(m.id).count(tm);
          invoking += g.calls(tm).count(m.id);
        }
        CHECK((c == 1.0) == (called == target_methods.size()));
        CHECK((c == 0.0) == (called == 0));
        CHECK((i == 1.0) == (invoking == target_methods.size()));
        CHECK((i == 0.0) == (invoking == 0));
        if (!fields_of(target, g).empty()) {
          double vr = cim_vr_m(m.id, target, g);
          CHECK(vr >= 0.0);
          CHECK(vr <= 1.0);
        }
      }
    }
  }
  CHECK(checked > 200); // the loop actually exercised members
}

TEST_CASE("agglomerate agrees with a brute-force argmax oracle") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = random_graph(rng, 5, 3);
    if (g.size() > 8)
      continue;
    auto matrix = similarity_matrix(g);
    for (auto linkage : {Linkage::Complete, Linkage::Single}) {
      auto cut = agglomerate(matrix, linkage, 0.3);
      auto sets = node_sets(cut.dendrogram);

      // replay: at each step the chosen pair must maximize cluster_similarity,
      // ties broken toward the lowest cluster ids
      struct Live {
        std::uint32_t id;
        std::set<MemberId> members;
      };
      std::vector<Live> live;
      for (std::uint32_t i = 0; i < matrix.size(); ++i)
        live.push_back({i, {MemberId{i}}});
      for (auto &merge : cut.dendrogram.merges) {
        double best = -1.0;
        std::size_t bi = 0, bj = 1;
        for (std::size_t i = 0; i < live.size(); ++i) {
          for (std::size_t j = i + 1; j < live.size(); ++j) {
            double s = cluster_similarity(live[i].members, live[j].members, matrix, linkage);
            bool better = s > best;
            if (s == best) {
              auto lo = std::min(live[i].id, live[j].id);
              auto hi = std::max(live[i].id, live[j].id);
              auto cur_lo = std::min(live[bi].id, live[bj].id);
              auto cur_hi = std::max(live[bi].id, live[bj].id);
              better = lo < cur_lo || (lo == cur_lo && hi < cur_hi);
            }
            if (better) {
              best = s;
              bi = i;
              bj = j;
            }
          }
        }
        // the dendrogram's merged node must be exactly this argmax pair
        std::set<MemberId> expect = live[bi].members;
        expect.insert(live[bj].members.begin(), live[bj].members.end());
        std::set<MemberId> got = sets[merge.left];
        got.insert(sets[merge.right].begin(), sets[merge.right].end());
        CHECK(got == expect);
        CHECK(merge.similarity == best);

        live[bi].id = std::min(live[bi].id, live[bj].id);
        live[bi].members = std::move(expect);
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(bj));
      }
    }
  }
}
