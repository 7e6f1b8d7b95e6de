#include "ahs/root_system.hpp"

#include "ahs/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ahs {

namespace {

std::vector<int> key(const Eigen::VectorXi& v) { return {v.data(), v.data() + v.size()}; }

Eigen::MatrixXi simple_form(const SeriesLabel& label) {
  const int n = label.rank;
  Eigen::MatrixXi f = Eigen::MatrixXi::Zero(n, n);
  auto link = [&](int i, int j, int value) {  // 1-based nodes
    f(i - 1, j - 1) = value;
    f(j - 1, i - 1) = value;
  };
  switch (label.series) {
    case Series::A:
      for (int i = 1; i <= n; ++i) f(i - 1, i - 1) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case Series::B:
      // alpha_n short
      for (int i = 1; i < n; ++i) f(i - 1, i - 1) = 4;
      f(n - 1, n - 1) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      break;
    case Series::C:
      // alpha_n long
      for (int i = 1; i < n; ++i) f(i - 1, i - 1) = 2;
      f(n - 1, n - 1) = 4;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case Series::D:
      for (int i = 1; i <= n; ++i) f(i - 1, i - 1) = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case Series::E6:
    case Series::E7:
    case Series::E8:
      for (int i = 1; i <= n; ++i) f(i - 1, i - 1) = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case Series::F4:
      f(0, 0) = 4;
      f(1, 1) = 4;
      f(2, 2) = 2;
      f(3, 3) = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case Series::G2:
      f(0, 0) = 2;
      f(1, 1) = 6;
      link(1, 2, -3);
      break;
  }
  return f;
}

}  // namespace

std::string to_string(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::E6: return "E6";
    case Series::E7: return "E7";
    case Series::E8: return "E8";
    case Series::F4: return "F4";
    case Series::G2: return "G2";
  }
  return "?";
}

std::string to_string(const SeriesLabel& label) {
  if (has_fixed_rank(label.series)) return to_string(label.series);
  return to_string(label.series) + std::to_string(label.rank);
}

Series parse_series(const std::string& name) {
  static const std::map<std::string, Series> names = {
      {"A", Series::A},   {"B", Series::B},   {"C", Series::C},
      {"D", Series::D},   {"E6", Series::E6}, {"E7", Series::E7},
      {"E8", Series::E8}, {"F4", Series::F4}, {"G2", Series::G2}};
  auto it = names.find(name);
  if (it == names.end()) throw Error(ErrorKind::InvalidConfig, "unknown series '" + name + "'");
  return it->second;
}

bool has_fixed_rank(Series s) {
  return s == Series::E6 || s == Series::E7 || s == Series::E8 || s == Series::F4 ||
         s == Series::G2;
}

int min_rank(Series s) {
  switch (s) {
    case Series::A: return 2;
    case Series::B: return 2;
    case Series::C: return 2;
    case Series::D: return 3;
    case Series::E6: return 6;
    case Series::E7: return 7;
    case Series::E8: return 8;
    case Series::F4: return 4;
    case Series::G2: return 2;
  }
  return 0;
}

void validate(const SeriesLabel& label) {
  const int lo = min_rank(label.series);
  const bool ok = has_fixed_rank(label.series) ? label.rank == lo : label.rank >= lo;
  if (!ok)
    throw Error(ErrorKind::InvalidRank, "rank " + std::to_string(label.rank) +
                                            " not allowed for series " + to_string(label.series));
}

std::optional<int> RootSystem::find(const Eigen::VectorXi& coords) const {
  auto it = index_.find(key(coords));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::negative_of(int i) const {
  const int p = num_positive();
  return i < p ? i + p : i - p;
}

int RootSystem::highest_root() const {
  int best = 0;
  for (int i = 1; i < num_positive(); ++i)
    if (roots[i].height() > roots[best].height()) best = i;
  return best;
}

int RootSystem::inner(const Eigen::VectorXi& x, const Eigen::VectorXi& y) const {
  return x.dot(form * y);
}

int RootSystem::coroot_pairing(const Eigen::VectorXi& v, int i) const {
  return cartan.row(i).dot(v);
}

RootSystem build_root_system(const SeriesLabel& label) {
  validate(label);
  RootSystem rs;
  rs.label = label;
  rs.form = simple_form(label);
  const int n = label.rank;
  rs.cartan.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.cartan(i, j) = 2 * rs.form(i, j) / rs.form(i, i);

  // Orbit of the simple roots under the simple reflections.
  std::set<std::vector<int>> seen;
  std::deque<Eigen::VectorXi> queue;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Unit(n, i);
    seen.insert(key(e));
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Eigen::VectorXi v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXi w = v;
      w(i) -= rs.coroot_pairing(v, i);
      if (seen.insert(key(w)).second) queue.push_back(w);
    }
  }

  std::vector<Eigen::VectorXi> positive;
  for (const auto& k : seen) {
    if (std::all_of(k.begin(), k.end(), [](int c) { return c >= 0; }))
      positive.push_back(Eigen::Map<const Eigen::VectorXi>(k.data(), n));
  }
  std::sort(positive.begin(), positive.end(), [](const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  for (const auto& p : positive) rs.roots.push_back({p, true});
  for (const auto& p : positive) rs.roots.push_back({Eigen::VectorXi(-p), false});
  for (int i = 0; i < static_cast<int>(rs.roots.size()); ++i) rs.index_[key(rs.roots[i].coords)] = i;
  return rs;
}

int alpha_grade(const Root& r, int node) { return r.coords(node - 1); }

std::vector<int> valid_one_gradings(const RootSystem& rs) {
  std::vector<int> nodes;
  const Root& top = rs.roots[rs.highest_root()];
  for (int node = 1; node <= rs.rank(); ++node)
    if (alpha_grade(top, node) == 1) nodes.push_back(node);
  return nodes;
}

int classical_root_count(const SeriesLabel& label) {
  const int n = label.rank;
  switch (label.series) {
    case Series::A: return n * (n + 1);
    case Series::B:
    case Series::C: return 2 * n * n;
    case Series::D: return 2 * n * (n - 1);
    case Series::E6: return 72;
    case Series::E7: return 126;
    case Series::E8: return 240;
    case Series::F4: return 48;
    case Series::G2: return 12;
  }
  return 0;
}

GradingRow grading_row(const SeriesLabel& label, int node) {
  const auto nodes = valid_one_gradings(build_root_system(label));
  if (std::find(nodes.begin(), nodes.end(), node) == nodes.end())
    throw Error(ErrorKind::InvalidNode, "node " + std::to_string(node) + " of " + to_string(label) +
                                            " does not define a |1|-grading");
  const int n = label.rank;
  GradingRow row;
  switch (label.series) {
    case Series::A: {
      const int p = node, q = n + 1 - node;
      if (p == 1 || q == 1) {
        row = {"sl(" + std::to_string(n + 1) + ",K)", "gl(" + std::to_string(n) + ",K)",
               "K^" + std::to_string(n), n, true};
      } else {
        row = {"sl(" + std::to_string(p) + "+" + std::to_string(q) + ",K)",
               "s(gl(" + std::to_string(p) + ",K)+gl(" + std::to_string(q) + ",K))",
               "K^" + std::to_string(p) + "* (x) K^" + std::to_string(q), p * q, true};
      }
      break;
    }
    case Series::B:
    case Series::D:
      if (node == 1) {
        const int m = label.series == Series::B ? 2 * n - 1 : 2 * n - 2;
        row = {"so(" + std::to_string(m + 2) + ",K)", "cso(" + std::to_string(m) + ",K)",
               "K^" + std::to_string(m), m, m >= 3};
      } else {
        row = {"so(" + std::to_string(2 * n) + ",K)", "gl(" + std::to_string(n) + ",K)",
               "Lambda^2 K^" + std::to_string(n), n * (n - 1) / 2, n >= 4};
      }
      break;
    case Series::C:
      row = {"sp(" + std::to_string(2 * n) + ",K)", "gl(" + std::to_string(n) + ",K)",
             "S^2 K^" + std::to_string(n), n * (n + 1) / 2, n >= 3};
      break;
    case Series::E6:
      row = {"E6 (split form EI)", "cspin(10,K)", "K^16", 16, true};
      break;
    case Series::E7:
      row = {"E7 (split form EV)", "E6+K", "K^27", 27, true};
      break;
    default:
      break;
  }
  return row;
}

}  // namespace ahs
