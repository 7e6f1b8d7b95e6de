#pragma once

#include "ahs/error.hpp"
#include "ahs/sparse_vector.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace ahs {

/// Subspace held as reduced row-echelon rows (pivot entry 1, zero in every
/// other row's pivot column), sorted by pivot.
template <class Scalar>
class Echelon {
 public:
  using Vec = SparseVec<Scalar>;

  Echelon() = default;
  explicit Echelon(int ambient) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }

  Vec reduce(Vec v) const {
    for (const auto& row : rows_) {
      const Scalar c = v[row.leading()];
      if (c != 0) v.axpy(-c, row);
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Adds v to the span. Returns true iff the dimension grew.
  bool insert(const Vec& v) {
    Vec w = reduce(v);
    if (w.empty()) return false;
    if (w.entries().back().first >= ambient_ || w.leading() < 0)
      throw Error(ErrorKind::DimensionMismatch, "vector index outside ambient space");
    const int pivot = w.leading();
    w *= Scalar(1) / w[pivot];
    for (auto& row : rows_) {
      const Scalar c = row[pivot];
      if (c != 0) row.axpy(-c, w);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const Vec& r, int p) { return r.leading() < p; });
    rows_.insert(pos, std::move(w));
    return true;
  }

  friend bool operator==(const Echelon& a, const Echelon& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  int ambient_ = 0;
  std::vector<Vec> rows_;
};

using Subspace = Echelon<Rational>;

/// Incremental span with a log of the generators that raised the dimension.
template <class Scalar>
class SpanTracker {
 public:
  using Vec = SparseVec<Scalar>;

  struct Witness {
    std::string descriptor;
    Vec value;
  };

  explicit SpanTracker(int ambient) : span_(ambient) {}

  int dim() const { return span_.dim(); }
  int ambient() const { return span_.ambient(); }
  const Echelon<Scalar>& span() const { return span_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }

  bool insert(const Vec& v, std::string witness = {}) {
    if (!span_.insert(v)) return false;
    witnesses_.push_back({std::move(witness), v});
    return true;
  }

  bool contains(const Vec& v) const { return span_.contains(v); }

  /// Replays the other tracker's witnesses, in its order, into this one.
  void merge(const SpanTracker& other) {
    if (other.ambient() != ambient())
      throw Error(ErrorKind::DimensionMismatch, "merging trackers of different ambient dimension");
    for (const auto& w : other.witnesses_) insert(w.value, w.descriptor);
  }

 private:
  Echelon<Scalar> span_;
  std::vector<Witness> witnesses_;
};

}  // namespace ahs
