#pragma once

#include "ahs/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

namespace ahs {

/// Sparse coefficient vector with sorted indices and no stored zeros.
template <class Scalar>
class SparseVec {
 public:
  using Entry = std::pair<int, Scalar>;

  SparseVec() = default;
  SparseVec(std::initializer_list<Entry> entries) {
    for (const auto& [i, v] : entries) add(i, v);
  }

  static SparseVec unit(int index, Scalar value = Scalar(1)) {
    SparseVec v;
    if (value != 0) v.entries_.emplace_back(index, std::move(value));
    return v;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Index of the first nonzero entry; -1 for the zero vector.
  int leading() const { return entries_.empty() ? -1 : entries_.front().first; }

  Scalar operator[](int index) const {
    auto it = find(index);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  /// this += value * e_index
  void add(int index, const Scalar& value) {
    if (value == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) {
      it->second += value;
      if (it->second == 0) entries_.erase(it);
    } else {
      entries_.insert(it, Entry(index, value));
    }
  }

  /// this += factor * other
  void axpy(const Scalar& factor, const SparseVec& other) {
    if (factor == 0 || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, factor * b->second);
        ++b;
      } else {
        Scalar s = a->second + factor * b->second;
        if (s != 0) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  SparseVec& operator+=(const SparseVec& o) {
    axpy(Scalar(1), o);
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    axpy(Scalar(-1), o);
    return *this;
  }
  SparseVec& operator*=(const Scalar& s) {
    if (s == 0) {
      entries_.clear();
    } else {
      for (auto& e : entries_) e.second *= s;
    }
    return *this;
  }

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator-(SparseVec a) { return a *= Scalar(-1); }
  friend SparseVec operator*(const Scalar& s, SparseVec a) { return a *= s; }
  friend SparseVec operator*(SparseVec a, const Scalar& s) { return a *= s; }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

 private:
  typename std::vector<Entry>::const_iterator find(int index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it : entries_.end();
  }

  std::vector<Entry> entries_;
};

/// Element of the Lie algebra in its fixed basis.
using LieVec = SparseVec<Rational>;

}  // namespace ahs
