// Chevalley basis structure constants by the extraspecial-pair method: the
// sign of N on each extraspecial pair is fixed to +, every other positive pair
// follows from the four-root identity, and pairs involving negative roots from
// the three-root identity and N_{-a,-b} = -N_{a,b}.

#include "ahs/graded_lie.hpp"

#include "ahs/error.hpp"
#include "ahs/rational.hpp"

#include <cstdlib>
#include <vector>

namespace ahs {

namespace {

class Solver {
 public:
  explicit Solver(const RootSystem& rs)
      : rs_(rs), m_(static_cast<int>(rs.roots.size())), p_(rs.num_positive()),
        table_(static_cast<std::size_t>(m_) * m_, 0), known_(static_cast<std::size_t>(p_) * p_, 0) {}

  std::vector<std::int64_t> run() {
    // Positive roots are ordered by height, so every pair needed by the
    // recursion belongs to a lower-height sum.
    for (int xi = rs_.rank(); xi < p_; ++xi) solve_sum(xi);
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b) table_[a * m_ + b] = general(a, b);
    return table_;
  }

 private:
  std::optional<int> sum(int a, int b) const {
    return rs_.find(rs_.roots[a].coords + rs_.roots[b].coords);
  }
  int len2(int r) const { return rs_.inner(rs_.roots[r].coords, rs_.roots[r].coords); }
  int neg(int r) const { return rs_.negative_of(r); }

  /// Largest k with b - k a a root.
  int string_below(int a, int b) const {
    int k = 0;
    Eigen::VectorXi v = rs_.roots[b].coords;
    while (rs_.find(v - rs_.roots[a].coords)) {
      v -= rs_.roots[a].coords;
      ++k;
    }
    return k;
  }

  void set_pos(int a, int b, std::int64_t value) {
    known_[a * p_ + b] = value;
    known_[b * p_ + a] = -value;
  }

  std::int64_t pos(int a, int b) const {
    if (!sum(a, b)) return 0;
    const std::int64_t v = known_[a * p_ + b];
    if (v == 0) throw Error(ErrorKind::InvalidConfig, "structure constant requested before it was fixed");
    return v;
  }

  /// N_{a,b} for arbitrary roots, from the positive table.
  std::int64_t general(int a, int b) const {
    if (a == neg(b)) return 0;
    auto s = sum(a, b);
    if (!s) return 0;
    const bool pa = rs_.roots[a].is_positive, pb = rs_.roots[b].is_positive;
    if (pa && pb) return pos(a, b);
    if (!pa && !pb) return -pos(neg(a), neg(b));
    if (!pa) return -general(b, a);
    // a positive, b negative
    const int c = *s;
    if (rs_.roots[c].is_positive) {
      const Rational v = Rational(-len2(c)) / len2(a) * Rational(pos(neg(b), c));
      return v.convert_to<std::int64_t>();
    }
    const Rational v = Rational(len2(c)) / len2(b) * Rational(pos(neg(c), a));
    return v.convert_to<std::int64_t>();
  }

  void solve_sum(int xi) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < p_; ++a) {
      auto b = rs_.find(rs_.roots[xi].coords - rs_.roots[a].coords);
      if (b && *b < p_ && a < *b) pairs.emplace_back(a, *b);
    }
    const auto [ea, eb] = pairs.front();  // extraspecial: smallest first root
    set_pos(ea, eb, string_below(ea, eb) + 1);
    const std::int64_t n_ext = known_[ea * p_ + eb];
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [a, b] = pairs[k];
      // four-root identity with (a, b, -ea, -eb)
      Rational acc = 0;
      if (auto s = sum(b, neg(ea)))
        acc += Rational(general(b, neg(ea)) * general(a, neg(eb))) / len2(*s);
      if (auto s = sum(neg(ea), a))
        acc += Rational(general(neg(ea), a) * general(b, neg(eb))) / len2(*s);
      const Rational value = Rational(len2(xi)) / n_ext * acc;
      if (!is_integer(value))
        throw Error(ErrorKind::InvalidConfig, "non-integral Chevalley constant");
      const auto v = value.convert_to<std::int64_t>();
      if (std::abs(v) != string_below(a, b) + 1)
        throw Error(ErrorKind::InvalidConfig, "Chevalley constant with wrong magnitude");
      set_pos(a, b, v);
    }
  }

  const RootSystem& rs_;
  int m_, p_;
  std::vector<std::int64_t> table_;
  std::vector<std::int64_t> known_;
};

}  // namespace

ChevalleyConstants::ChevalleyConstants(const RootSystem& rs)
    : size_(static_cast<int>(rs.roots.size())), table_(Solver(rs).run()) {}

}  // namespace ahs
