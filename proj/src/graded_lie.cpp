#include "ahs/graded_lie.hpp"

#include "ahs/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace ahs {

namespace {

using Terms = GradedLieAlgebra::Terms;

void add_term(Terms& t, int index, std::int64_t value) {
  if (value == 0) return;
  auto it = std::lower_bound(t.begin(), t.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  if (it != t.end() && it->first == index) {
    it->second += value;
    if (it->second == 0) t.erase(it);
  } else {
    t.insert(it, {index, value});
  }
}

LieVec to_vec(const Terms& t) {
  LieVec v;
  for (const auto& [i, c] : t) v.add(i, Rational(c));
  return v;
}

}  // namespace

int GradedLieAlgebra::root_of(int i) const {
  const auto& g = basis_[i];
  switch (g.kind) {
    case GenKind::Cartan: return -1;
    case GenKind::PosRoot: return g.index;
    case GenKind::NegRoot: return g.index + rs_.num_positive();
  }
  return -1;
}

std::string GradedLieAlgebra::basis_name(int i) const {
  const auto& g = basis_[i];
  if (g.kind == GenKind::Cartan) return "h" + std::to_string(g.index + 1);
  std::string coords;
  const auto& c = rs_.roots[g.index].coords;
  for (int k = 0; k < c.size(); ++k) coords += std::to_string(c(k));
  return (g.kind == GenKind::PosRoot ? "e[" : "f[") + coords + "]";
}

void GradedLieAlgebra::compute_gram() {
  const int n = dim();
  gram_.assign(static_cast<std::size_t>(n) * n, 0);
  // trace(ad_i ad_j) = sum_k sum_l c_{jk}^l c_{il}^k
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::int64_t tr = 0;
      for (int k = 0; k < n; ++k) {
        for (const auto& [l, c] : structure(j, k)) {
          for (const auto& [m, d] : structure(i, l))
            if (m == k) tr += c * d;
        }
      }
      gram_[i * n + j] = tr;
      gram_[j * n + i] = tr;
    }
  }
}

GradedLieAlgebra GradedLieAlgebra::with_perturbed_constant(int i, int j, int k,
                                                           std::int64_t delta) const {
  GradedLieAlgebra copy = *this;
  add_term(copy.table_[i * dim() + j], k, delta);
  copy.compute_gram();
  return copy;
}

GradedLieAlgebra build_algebra(const RootSystem& rs, int node) {
  const auto nodes = valid_one_gradings(rs);
  if (nodes.empty())
    throw Error(ErrorKind::NoOneGrading,
                to_string(rs.label) + " has no node with highest-root coefficient 1");
  if (std::find(nodes.begin(), nodes.end(), node) == nodes.end())
    throw Error(ErrorKind::InvalidNode,
                "node " + std::to_string(node) + " does not give a |1|-grading of " + to_string(rs.label));

  GradedLieAlgebra alg;
  alg.rs_ = rs;
  alg.node_ = node;
  const int r = rs.rank(), p = rs.num_positive();
  for (int i = 0; i < r; ++i) alg.basis_.push_back({GenKind::Cartan, i});
  for (int b = 0; b < p; ++b) alg.basis_.push_back({GenKind::PosRoot, b});
  for (int b = 0; b < p; ++b) alg.basis_.push_back({GenKind::NegRoot, b});
  const int n = alg.dim();

  alg.by_grade_.assign(3, {});
  alg.grade_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int root = alg.root_of(i);
    alg.grade_[i] = root < 0 ? 0 : alpha_grade(rs.roots[root], node);
    alg.by_grade_[alg.grade_[i] + 1].push_back(i);
  }

  const ChevalleyConstants N(rs);
  alg.table_.assign(static_cast<std::size_t>(n) * n, {});
  auto set = [&](int i, int j, Terms t) { alg.table_[i * n + j] = std::move(t); };

  for (int i = 0; i < r; ++i) {
    for (int x = 0; x < 2 * p; ++x) {
      // [h_i, e_x] = x(h_i) e_x
      const std::int64_t c = rs.cartan.row(i).dot(rs.roots[x].coords);
      const int ex = alg.root_vector_index(x);
      if (c != 0) {
        set(i, ex, {{ex, c}});
        set(ex, i, {{ex, -c}});
      }
    }
  }
  for (int x = 0; x < 2 * p; ++x) {
    for (int y = 0; y < 2 * p; ++y) {
      const int ex = alg.root_vector_index(x), ey = alg.root_vector_index(y);
      if (y == rs.negative_of(x)) {
        // [e_a, e_{-a}] = h_a = sum_i c_i |a_i|^2/|a|^2 h_i for a positive
        const int a = rs.roots[x].is_positive ? x : y;
        const auto& coords = rs.roots[a].coords;
        const int len = rs.inner(coords, coords);
        Terms t;
        for (int i = 0; i < r; ++i) {
          const int num = coords(i) * rs.form(i, i);
          if (num % len != 0) throw Error(ErrorKind::InvalidConfig, "non-integral coroot");
          add_term(t, i, num / len);
        }
        if (!rs.roots[x].is_positive)
          for (auto& e : t) e.second = -e.second;
        set(ex, ey, std::move(t));
        continue;
      }
      const std::int64_t c = N(x, y);
      if (c != 0) set(ex, ey, {{alg.root_vector_index(*rs.find(rs.roots[x].coords + rs.roots[y].coords)), c}});
    }
  }
  alg.compute_gram();
  return alg;
}

LieVec basis_vector(int i) { return LieVec::unit(i); }

LieVec bracket(const GradedLieAlgebra& alg, const LieVec& a, const LieVec& b) {
  std::map<int, Rational> acc;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      const auto& t = alg.structure(i, j);
      if (t.empty()) continue;
      const Rational xy = x * y;
      for (const auto& [k, c] : t) acc[k] += xy * c;
    }
  }
  LieVec out;
  for (auto& [k, v] : acc) out.add(k, v);
  return out;
}

Rational killing(const GradedLieAlgebra& alg, const LieVec& a, const LieVec& b) {
  Rational s = 0;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      const auto g = alg.killing_basis(i, j);
      if (g != 0) s += x * y * g;
    }
  return s;
}

Rational killing_trace(const GradedLieAlgebra& alg, const LieVec& a, const LieVec& b) {
  Rational tr = 0;
  for (int k = 0; k < alg.dim(); ++k) {
    const LieVec image = bracket(alg, a, bracket(alg, b, basis_vector(k)));
    tr += image[k];
  }
  return tr;
}

std::optional<int> pure_grade(const GradedLieAlgebra& alg, const LieVec& v) {
  if (v.empty()) return std::nullopt;
  const int g = alg.grade(v.leading());
  for (const auto& [i, c] : v)
    if (alg.grade(i) != g) return std::nullopt;
  return g;
}

LieVec grading_element(const GradedLieAlgebra& alg) {
  const int r = alg.rank();
  const auto& cartan = alg.roots().cartan;
  // alpha_i(sum_j c_j h_j) = sum_j c_j cartan(j, i) = delta_{i,node}
  RationalMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = cartan(j, i);
  RationalVector rhs = RationalVector::Zero(r);
  rhs(alg.node() - 1) = 1;
  const auto c = exact_solve(m, rhs);
  if (!c) throw Error(ErrorKind::SingularPairing, "Cartan matrix is singular");
  LieVec e;
  for (int j = 0; j < r; ++j) e.add(alg.cartan_index(j), (*c)(j));
  return e;
}

Subspace semisimple_part(const GradedLieAlgebra& alg) {
  Subspace s(alg.dim());
  const auto& zero = alg.basis_of_grade(0);
  for (std::size_t a = 0; a < zero.size(); ++a)
    for (std::size_t b = a + 1; b < zero.size(); ++b)
      s.insert(to_vec(alg.structure(zero[a], zero[b])));
  return s;
}

Subspace degree_zero(const GradedLieAlgebra& alg) {
  Subspace s(alg.dim());
  for (int i : alg.basis_of_grade(0)) s.insert(basis_vector(i));
  return s;
}

std::vector<LieVec> default_g_minus_basis(const GradedLieAlgebra& alg) {
  std::vector<LieVec> out;
  for (int i : alg.basis_of_grade(-1)) out.push_back(basis_vector(i));
  return out;
}

std::vector<LieVec> dual_basis_g1(const GradedLieAlgebra& alg, const std::vector<LieVec>& basis_x) {
  const auto& plus = alg.basis_of_grade(1);
  const int n = static_cast<int>(plus.size());
  if (static_cast<int>(basis_x.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "basis of g_-1 has the wrong size");
  RationalMatrix m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = killing(alg, basis_vector(plus[a]), basis_x[b]);
  const auto inv = exact_inverse(m);
  if (!inv) throw Error(ErrorKind::SingularPairing, "Killing pairing of g_1 and g_-1 is degenerate");
  std::vector<LieVec> z(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) z[i].add(plus[a], (*inv)(i, a));
  return z;
}

std::vector<SimpleIdeal> simple_ideals(const GradedLieAlgebra& alg) {
  const auto& rs = alg.roots();
  const int r = rs.rank(), crossed = alg.node() - 1;
  std::vector<int> comp(r, -1);
  int count = 0;
  for (int start = 0; start < r; ++start) {
    if (start == crossed || comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < r; ++w)
        if (w != crossed && comp[w] < 0 && rs.adjacent(v, w)) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  std::vector<SimpleIdeal> ideals(count);
  for (auto& ideal : ideals) ideal.space = Subspace(alg.dim());
  for (int i = 0; i < r; ++i) {
    if (comp[i] < 0) continue;
    ideals[comp[i]].nodes.push_back(i + 1);
    ideals[comp[i]].space.insert(basis_vector(alg.cartan_index(i)));
  }
  for (int b = 0; b < rs.num_positive(); ++b) {
    const auto& c = rs.roots[b].coords;
    if (c(crossed) != 0) continue;
    int owner = -1;
    for (int i = 0; i < r; ++i)
      if (c(i) != 0) owner = comp[i];
    ideals[owner].space.insert(basis_vector(alg.pos_index(b)));
    ideals[owner].space.insert(basis_vector(alg.neg_index(b)));
  }
  return ideals;
}

LieVec act_bullet(const GradedLieAlgebra& alg, const LieVec& a, const LieVec& v) {
  if (!a.empty() && pure_grade(alg, a) != 0)
    throw Error(ErrorKind::GradeError, "act_bullet needs an element of g_0");
  return bracket(alg, a, v);
}

Subspace g0_orbit_span(const GradedLieAlgebra& alg, const LieVec& v) {
  Subspace span(alg.dim());
  std::vector<LieVec> frontier;
  if (span.insert(v)) frontier.push_back(v);
  while (!frontier.empty()) {
    std::vector<LieVec> next;
    for (const auto& w : frontier)
      for (int i : alg.basis_of_grade(0)) {
        LieVec image = bracket(alg, basis_vector(i), w);
        if (span.insert(image)) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  return span;
}

namespace {

Terms bracket_basis_terms(const GradedLieAlgebra& alg, int i, const Terms& b) {
  Terms out;
  for (const auto& [j, y] : b)
    for (const auto& [k, c] : alg.structure(i, j)) add_term(out, k, y * c);
  return out;
}

bool jacobi_holds(const GradedLieAlgebra& alg, int i, int j, int k) {
  // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] = 0
  Terms total = bracket_basis_terms(alg, i, alg.structure(j, k));
  for (const auto& [m, c] : bracket_basis_terms(alg, j, alg.structure(k, i))) add_term(total, m, c);
  for (const auto& [m, c] : bracket_basis_terms(alg, k, alg.structure(i, j))) add_term(total, m, c);
  return total.empty();
}

}  // namespace

std::size_t jacobi_violations(const GradedLieAlgebra& alg, std::size_t samples, std::uint64_t seed) {
  const int n = alg.dim();
  std::size_t bad = 0;
  if (samples == 0) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          if (!jacobi_holds(alg, i, j, k)) ++bad;
    return bad;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n),
              k = static_cast<int>(rng() % n);
    if (!jacobi_holds(alg, i, j, k)) ++bad;
  }
  return bad;
}

std::size_t antisymmetry_violations(const GradedLieAlgebra& alg) {
  std::size_t bad = 0;
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i; j < alg.dim(); ++j) {
      Terms sum = alg.structure(i, j);
      for (const auto& [k, c] : alg.structure(j, i)) add_term(sum, k, c);
      if (!sum.empty()) ++bad;
    }
  return bad;
}

std::size_t grading_violations(const GradedLieAlgebra& alg) {
  std::size_t bad = 0;
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      const int g = alg.grade(i) + alg.grade(j);
      for (const auto& [k, c] : alg.structure(i, j))
        if (g < -1 || g > 1 || alg.grade(k) != g) {
          ++bad;
          break;
        }
    }
  return bad;
}

std::size_t killing_invariance_violations(const GradedLieAlgebra& alg, std::size_t samples,
                                          std::uint64_t seed) {
  const int n = alg.dim();
  auto holds = [&](int i, int j, int k) {
    const LieVec x = basis_vector(i), y = basis_vector(j), z = basis_vector(k);
    return killing(alg, bracket(alg, x, y), z) == killing(alg, x, bracket(alg, y, z));
  };
  std::size_t bad = 0;
  if (samples == 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!holds(i, j, k)) ++bad;
    return bad;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n),
              k = static_cast<int>(rng() % n);
    if (!holds(i, j, k)) ++bad;
  }
  return bad;
}

int g1_pairing_rank(const GradedLieAlgebra& alg) {
  const auto& plus = alg.basis_of_grade(1);
  const auto& minus = alg.basis_of_grade(-1);
  RationalMatrix m(plus.size(), minus.size());
  for (std::size_t a = 0; a < plus.size(); ++a)
    for (std::size_t b = 0; b < minus.size(); ++b) m(a, b) = alg.killing_basis(plus[a], minus[b]);
  return static_cast<int>(exact_rank(m));
}

}  // namespace ahs
