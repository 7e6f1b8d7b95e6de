#include "ahs/holonomy.hpp"

#include "ahs/error.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace ahs {

namespace {

bool in_minus(const GradedLieAlgebra& alg, const LieVec& v) {
  return v.empty() || pure_grade(alg, v) == -1;
}

std::string z_name(int i) { return "Z" + std::to_string(i + 1); }
std::string x_name(int i) { return "X" + std::to_string(i + 1); }

std::vector<std::pair<int, int>> ordered_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) out.emplace_back(k, l);
  return out;
}

GeneratorBlock del_block(const Frame& frame, const RhoCandidate& p, const std::string& prefix) {
  GeneratorBlock block;
  for (const auto& [k, l] : ordered_pairs(frame.n())) {
    block.values.push_back(del_op(frame, p, frame.x(k), frame.x(l)));
    block.descriptors.push_back(prefix + ", " + x_name(k) + ", " + x_name(l));
  }
  return block;
}

std::function<bool(const LieVec&)> target_predicate(const Frame& frame, bool semisimple) {
  return [&frame, semisimple](const LieVec& v) {
    if (v.empty()) return true;
    if (pure_grade(frame.algebra(), v) != 0) return false;
    return !semisimple || killing(frame.algebra(), v, frame.grading_element()) == 0;
  };
}

}  // namespace

Frame::Frame(const GradedLieAlgebra& alg)
    : alg_(&alg),
      x_(default_g_minus_basis(alg)),
      z_(dual_basis_g1(alg, x_)),
      e_(ahs::grading_element(alg)),
      g0_(degree_zero(alg)),
      g0ss_(semisimple_part(alg)) {}

std::vector<Rational> Frame::coords_minus(const LieVec& x) const {
  std::vector<Rational> c(n());
  for (int a = 0; a < n(); ++a) c[a] = killing(*alg_, z_[a], x);
  return c;
}

RhoCandidate RhoCandidate::zero(int n) { return {RationalMatrix::Zero(n, n), true}; }

RhoCandidate RhoCandidate::from_matrix(RationalMatrix m) {
  const bool sym = m == m.transpose();
  return {std::move(m), sym};
}

RhoCandidate RhoCandidate::symmetric_product(int n, int i, int j) {
  RationalMatrix m = RationalMatrix::Zero(n, n);
  m(j, i) += Rational(1, 2);
  m(i, j) += Rational(1, 2);
  return {m, true};
}

RhoCandidate RhoCandidate::tensor_product(int n, int i, int j) {
  RationalMatrix m = RationalMatrix::Zero(n, n);
  m(j, i) = 1;
  return from_matrix(m);
}

LieVec apply(const Frame& frame, const RhoCandidate& p, const LieVec& x) {
  const auto c = frame.coords_minus(x);
  LieVec out;
  for (int a = 0; a < frame.n(); ++a) {
    if (c[a] == 0) continue;
    for (int b = 0; b < frame.n(); ++b)
      if (p.matrix(a, b) != 0) out.axpy(c[a] * p.matrix(a, b), frame.z(b));
  }
  return out;
}

LieVec del_op(const Frame& frame, const RhoCandidate& p, const LieVec& x, const LieVec& y) {
  const auto& alg = frame.algebra();
  if (!in_minus(alg, x) || !in_minus(alg, y))
    throw Error(ErrorKind::GradeError, "del_op arguments must lie in g_-1");
  return bracket(alg, apply(frame, p, x), y) - bracket(alg, apply(frame, p, y), x);
}

Certificate span_certify(const std::string& name, const std::string& target_name, int target_dim,
                         int ambient, std::size_t block_count,
                         const std::function<GeneratorBlock(std::size_t)>& block,
                         const std::function<bool(const LieVec&)>& in_target,
                         const SpanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.name = name;
  cert.target_name = target_name;
  cert.target_dim = target_dim;
  SpanTracker<Rational> tracker(ambient);
  auto saturated = [&] { return options.early_exit && tracker.dim() >= target_dim; };

  if (options.parallel <= 1) {
    for (std::size_t b = 0; b < block_count && !saturated(); ++b) {
      const GeneratorBlock blk = block(b);
      for (std::size_t i = 0; i < blk.values.size() && !saturated(); ++i) {
        ++cert.generators_consumed;
        if (!in_target(blk.values[i])) cert.contained = false;
        tracker.insert(blk.values[i], blk.descriptors[i]);
      }
      if (options.progress) options.progress(cert.generators_consumed, tracker.dim());
    }
  } else {
    struct Partial {
      SpanTracker<Rational> tracker;
      std::size_t consumed = 0;
      bool contained = true;
    };
    const auto p = static_cast<std::size_t>(options.parallel);
    for (std::size_t first = 0; first < block_count && !saturated(); first += p) {
      const std::size_t last = std::min(block_count, first + p);
      std::vector<Partial> partials(last - first, Partial{SpanTracker<Rational>(ambient)});
      std::vector<std::thread> workers;
      for (std::size_t b = first; b < last; ++b) {
        workers.emplace_back([&, b] {
          Partial& part = partials[b - first];
          const GeneratorBlock blk = block(b);
          for (std::size_t i = 0; i < blk.values.size(); ++i) {
            ++part.consumed;
            if (!in_target(blk.values[i])) part.contained = false;
            part.tracker.insert(blk.values[i], blk.descriptors[i]);
          }
        });
      }
      for (auto& w : workers) w.join();
      for (const auto& part : partials) {
        if (saturated()) break;
        tracker.merge(part.tracker);
        cert.generators_consumed += part.consumed;
        cert.contained = cert.contained && part.contained;
      }
      if (options.progress) options.progress(cert.generators_consumed, tracker.dim());
    }
  }

  cert.achieved_dim = tracker.dim();
  for (const auto& w : tracker.witnesses()) cert.witnesses.push_back(w.descriptor);
  cert.pass = cert.contained && cert.achieved_dim == target_dim;
  cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

Certificate lemma1_certify(const Frame& frame, bool symmetric, const SpanOptions& options) {
  const int n = frame.n();
  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = symmetric ? i : 0; j < n; ++j) candidates.emplace_back(i, j);
  auto block = [&](std::size_t b) {
    const auto [i, j] = candidates[b];
    if (symmetric)
      return del_block(frame, RhoCandidate::symmetric_product(n, i, j), "P=" + z_name(i) + z_name(j));
    return del_block(frame, RhoCandidate::tensor_product(n, i, j),
                     "P=" + z_name(i) + "(x)" + z_name(j));
  };
  const Subspace& target = symmetric ? frame.g0ss() : frame.g0();
  return span_certify(symmetric ? "lemma1_symmetric" : "lemma1_full", symmetric ? "g0ss" : "g0",
                      target.dim(), frame.algebra().dim(), candidates.size(), block,
                      target_predicate(frame, symmetric), options);
}

Rational center_value(const Frame& frame, const RhoCandidate& p) {
  return killing(frame.algebra(), del_op(frame, p, frame.x(0), frame.x(1)), frame.grading_element());
}

CenterWitness lemma1_center_witness(const Frame& frame) {
  if (frame.n() < 2) throw Error(ErrorKind::DimensionMismatch, "center witness needs dim g_-1 > 1");
  const auto p = RhoCandidate::tensor_product(frame.n(), 1, 0);
  CenterWitness w;
  Subspace pair(frame.algebra().dim());
  pair.insert(frame.x(0));
  w.independent = pair.insert(frame.x(1));
  w.p_of_y_zero = apply(frame, p, frame.x(1)).empty();
  w.pairing = killing(frame.algebra(), apply(frame, p, frame.x(0)), frame.x(1));
  w.value = center_value(frame, p);
  w.pass = w.independent && w.p_of_y_zero && w.pairing != 0 && w.value == w.pairing;
  return w;
}

IdealWitness lemma1_ideal_witness(const Frame& frame, const SimpleIdeal& ideal) {
  const auto& alg = frame.algebra();
  const auto& rs = alg.roots();
  const int alpha = alg.node() - 1;
  IdealWitness w;
  w.ideal_nodes = ideal.nodes;
  w.alpha_node = alg.node();
  int beta = -1;
  for (int node : ideal.nodes)
    if (rs.adjacent(alpha, node - 1)) {
      beta = node - 1;
      break;
    }
  if (beta < 0) throw Error(ErrorKind::NoAdjacentRoot, "no simple root of the ideal meets the crossed node");
  w.beta_node = beta + 1;
  const auto sum = rs.find(rs.roots[alpha].coords + rs.roots[beta].coords);
  if (!sum) throw Error(ErrorKind::NoAdjacentRoot, "alpha + beta is not a root");
  for (int k = 0; k < rs.rank(); ++k) w.alpha_plus_beta += std::to_string(rs.roots[*sum].coords(k));

  const auto& minus = alg.basis_of_grade(-1);
  auto slot = [&](int root) {
    const auto it = std::find(minus.begin(), minus.end(), alg.neg_index(root));
    return static_cast<int>(it - minus.begin());
  };
  const int a = slot(alpha), c = slot(*sum);
  RhoCandidate p = RhoCandidate::symmetric_product(frame.n(), a, a);
  p.matrix += RhoCandidate::symmetric_product(frame.n(), c, c).matrix;
  w.value = del_op(frame, p, frame.x(a), frame.x(c));
  w.coeff_e_beta = w.value[alg.pos_index(beta)];
  w.coeff_f_beta = w.value[alg.neg_index(beta)];
  w.killing_with_e = killing(alg, w.value, frame.grading_element());
  w.pass = w.coeff_e_beta != 0 && w.coeff_f_beta != 0 && w.killing_with_e == 0 &&
           ideal.space.contains(w.value);
  return w;
}

SymTensor lemma2_symmetric_element(int n) {
  SymTensor t{6, n, Variance::Dual, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) t.add({i, i, i, i, j, j}, 1);
  return t;
}

MixedTensor lemma2_mixed_element(int n) {
  MixedTensor t{5, n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.add({i, i, i, j, j}, i, 1);
  return t;
}

namespace {

SymTensor vector_monomial(const MultiIndex& m, int n) {
  SymTensor w{static_cast<int>(m.size()), n, Variance::Vector, {}};
  w.add(m, 1);
  return w;
}

SparseVec<Rational> lemma2_image(const SymTensor& t, const MixedTensor& mixed, bool symmetric,
                                 const MultiIndex& m, int n) {
  const SymTensor w = vector_monomial(m, n);
  return symmetric ? coordinates(contract(t, w)) : coordinates(contract(mixed, w));
}

bool single_term(const SparseVec<Rational>& v, int index) {
  return v.nnz() == 1 && v.leading() == index;
}

}  // namespace

int lemma2_dense_rank(int n, bool symmetric) {
  const auto domain = sym_basis(4, n);
  const int cols = symmetric ? n * (n + 1) / 2 : n * n;
  const auto t = lemma2_symmetric_element(n);
  const auto mixed = lemma2_mixed_element(n);
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(domain.size()), cols);
  for (std::size_t r = 0; r < domain.size(); ++r)
    for (const auto& [c, v] : lemma2_image(t, mixed, symmetric, domain[r], n)) m(r, c) = v;
  return static_cast<int>(exact_rank(m));
}

Lemma2Report lemma2_certify(int n, bool symmetric) {
  if (n < 2) throw Error(ErrorKind::DimensionMismatch, "lemma2 certificate needs n >= 2");
  const auto start = std::chrono::steady_clock::now();
  const auto domain = sym_basis(4, n);
  const int target = symmetric ? n * (n + 1) / 2 : n * n;
  const auto t = lemma2_symmetric_element(n);
  const auto mixed = lemma2_mixed_element(n);
  auto descr = [](const MultiIndex& m) { return "W=" + format_monomial(m, "e"); };

  Lemma2Report report;
  Certificate& cert = report.cert;
  cert.name = symmetric ? "lemma2_symmetric" : "lemma2_full";
  cert.target_name = symmetric ? "S2(g-1*)" : "g-1*(x)g-1*";
  cert.target_dim = target;

  if (n <= 8) {
    report.dense = true;
    // Independent rows of the map matrix are the pivot columns of its transpose.
    RationalMatrix mt = RationalMatrix::Zero(target, static_cast<Eigen::Index>(domain.size()));
    for (std::size_t r = 0; r < domain.size(); ++r)
      for (const auto& [c, v] : lemma2_image(t, mixed, symmetric, domain[r], n)) mt(c, r) = v;
    for (auto col : row_reduce(mt)) cert.witnesses.push_back(descr(domain[col]));
    cert.achieved_dim = static_cast<int>(cert.witnesses.size());
    cert.generators_consumed = domain.size();
  } else {
    SpanTracker<Rational> tracker(target);
    for (const auto& m : domain) {
      if (tracker.dim() >= target) break;
      ++cert.generators_consumed;
      tracker.insert(lemma2_image(t, mixed, symmetric, m, n), descr(m));
    }
    cert.achieved_dim = tracker.dim();
    for (const auto& w : tracker.witnesses()) cert.witnesses.push_back(w.descriptor);
  }
  cert.pass = cert.achieved_dim == target;

  auto check = [&](const MultiIndex& w, const MultiIndex& target_mono, int free_slot,
                   const std::string& text) {
    const auto img = lemma2_image(t, mixed, symmetric, w, n);
    const int index = static_cast<int>(sym_rank(target_mono, n)) * (symmetric ? 1 : n) +
                      (symmetric ? 0 : free_slot);
    report.checks.push_back({text, single_term(img, index)});
  };
  if (symmetric) {
    for (int i = 0; i + 1 < n; ++i)
      check({i, i, i + 1, i + 1}, {i, i}, 0,
            format_monomial({i, i, i + 1, i + 1}, "e") + " -> c*" + format_monomial({i, i}, "l"));
    check({n - 2, n - 2, n - 2, n - 2}, {n - 1, n - 1}, 0,
          format_monomial({n - 2, n - 2, n - 2, n - 2}, "e") + " -> c*" +
              format_monomial({n - 1, n - 1}, "l"));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        check({i, i, i, j}, {i, j}, 0,
              format_monomial({i, i, i, j}, "e") + " -> c*" + format_monomial({i, j}, "l"));
  } else {
    for (int i = 0; i < n; ++i) {
      check({i, i, i, i}, {i}, i,
            format_monomial({i, i, i, i}, "e") + " -> c*l" + std::to_string(i + 1) + "(x)l" +
                std::to_string(i + 1));
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        MultiIndex w{i, i, i, j};
        std::sort(w.begin(), w.end());
        check(w, {j}, i,
              format_monomial(w, "e") + " -> c*l" + std::to_string(j + 1) + "(x)l" +
                  std::to_string(i + 1));
      }
    }
  }
  report.pass = cert.pass && std::all_of(report.checks.begin(), report.checks.end(),
                                         [](const PreimageCheck& c) { return c.pass; });
  cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

RhoCandidate theorem_candidate(const SymTensor& t, const MixedTensor& mixed, bool exact_weyl,
                               const SymTensor& w) {
  if (exact_weyl) return RhoCandidate::from_matrix(bilinear_form(contract(t, w)));
  return RhoCandidate::from_matrix(bilinear_form(contract(mixed, w)));
}

Certificate theorem_certify(const Frame& frame, bool exact_weyl, const SpanOptions& options) {
  const int n = frame.n();
  const auto domain = sym_basis(4, n);
  const auto t = lemma2_symmetric_element(n);
  const auto mixed = lemma2_mixed_element(n);
  auto block = [&](std::size_t b) {
    const SymTensor w = vector_monomial(domain[b], n);
    const RhoCandidate p = theorem_candidate(t, mixed, exact_weyl, w);
    if (p.matrix.isZero()) return GeneratorBlock{};
    return del_block(frame, p, "W=" + format_monomial(domain[b], "e"));
  };
  const Subspace& target = exact_weyl ? frame.g0ss() : frame.g0();
  return span_certify(exact_weyl ? "theorem_exact" : "theorem_general", exact_weyl ? "g0ss" : "g0",
                      target.dim(), frame.algebra().dim(), domain.size(), block,
                      target_predicate(frame, exact_weyl), options);
}

}  // namespace ahs
