#pragma once

#include <optional>

#include "classcut/model.hpp"

namespace classcut {

enum class TccMode { Direct, CallClosure };

enum class Verdict { LowCohesion, Acceptable, Indeterminate };

struct CohesionReport {
  long lcom{};
  std::optional<double> tcc; // undefined for fewer than two methods
  std::size_t method_count{};
  Verdict verdict{};

  bool operator==(const CohesionReport &) const = default;
};

// Chidamber-Kemerer LCOM: method pairs with disjoint used-field sets minus
// pairs sharing a field, floored at zero. A null subset means the whole
// graph; otherwise only members (and fields) inside the subset count.
long lcom(const ClassGraph &graph, const std::set<MemberId> *subset = nullptr);

// Bieman-Kang TCC: fraction of method pairs connected through shared field
// use. CallClosure extends a method's used fields with those of methods it
// transitively calls within the view.
std::optional<double> tcc(const ClassGraph &graph, TccMode mode,
                          const std::set<MemberId> *subset = nullptr);

CohesionReport assess(const ClassGraph &graph, long lcom_threshold, double tcc_threshold,
                      TccMode mode = TccMode::Direct,
                      const std::set<MemberId> *subset = nullptr);

} // namespace classcut
