#include "classcut/similarity.hpp"

#include <algorithm>
#include <iterator>

namespace classcut {

PropertySet property_set(MemberId member, const ClassGraph &graph) {
  PropertySet ps{member, {member}};
  if (graph.is_method(member)) {
    auto &u = graph.uses(member);
    auto &c = graph.calls(member);
    ps.properties.insert(u.begin(), u.end());
    ps.properties.insert(c.begin(), c.end());
  } else {
    auto &users = graph.users(member);
    ps.properties.insert(users.begin(), users.end());
  }
  return ps;
}

double jaccard(const PropertySet &a, const PropertySet &b) {
  std::size_t inter = 0;
  for (auto id : a.properties)
    if (b.properties.count(id))
      ++inter;
  std::size_t uni = a.properties.size() + b.properties.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

SimilarityMatrix similarity_matrix(const ClassGraph &graph) {
  std::size_t n = graph.size();
  if (n == 0)
    throw Error(ErrorCode::EmptyGraph, "cannot build a similarity matrix for an empty class");
  std::vector<PropertySet> sets;
  sets.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    sets.push_back(property_set(MemberId{static_cast<std::uint32_t>(i)}, graph));
  SimilarityMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m.set(i, j, jaccard(sets[i], sets[j]));
  return m;
}

SimilarityMatrix matrix_from_document(const MatrixDocument &doc) {
  std::size_t n = doc.labels.size();
  if (n == 0 || doc.values.size() != n)
    throw Error(ErrorCode::NonSquare, "matrix document size mismatch");
  SimilarityMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (doc.values[i].size() != n)
      throw Error(ErrorCode::NonSquare, "matrix document row size mismatch");
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, doc.values[i][j]);
  }
  return m;
}

MatrixDocument document_from_matrix(const SimilarityMatrix &matrix,
                                    const std::vector<MatrixLabel> &labels) {
  MatrixDocument doc;
  doc.labels = labels;
  std::size_t n = matrix.size();
  doc.values.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      doc.values[i][j] = matrix.at(i, j);
  return doc;
}

MatrixDocument document_from_graph(const ClassGraph &graph) {
  std::vector<MatrixLabel> labels;
  for (auto &m : graph.members())
    labels.push_back({m.name, m.kind});
  return document_from_matrix(similarity_matrix(graph), labels);
}

} // namespace classcut
