#pragma once

#include <vector>

#include "classcut/ingest.hpp"
#include "classcut/model.hpp"

namespace classcut {

// Dependency footprint of one member. For a method: itself plus the fields
// it references and the methods it calls. For a field: itself plus the
// methods referencing it. Always contains its owner.
struct PropertySet {
  MemberId owner;
  std::set<MemberId> properties;
};

// Symmetric, unit-diagonal matrix of Jaccard similarities in [0,1],
// indexed by MemberId.
class SimilarityMatrix {
public:
  SimilarityMatrix() = default;
  explicit SimilarityMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      set(i, i, 1.0);
  }

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    values_[i * n_ + j] = values_[j * n_ + i] = v;
  }

  bool operator==(const SimilarityMatrix &) const = default;

private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

PropertySet property_set(MemberId member, const ClassGraph &graph);

double jaccard(const PropertySet &a, const PropertySet &b);

SimilarityMatrix similarity_matrix(const ClassGraph &graph);

// Raw-matrix route: validate a parsed CSV document into a SimilarityMatrix.
SimilarityMatrix matrix_from_document(const MatrixDocument &doc);

MatrixDocument document_from_matrix(const SimilarityMatrix &matrix,
                                    const std::vector<MatrixLabel> &labels);

MatrixDocument document_from_graph(const ClassGraph &graph);

} // namespace classcut
