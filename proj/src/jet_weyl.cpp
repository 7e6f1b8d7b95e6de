#include "ahs/jet_weyl.hpp"

#include "ahs/error.hpp"
#include "ahs/multitensor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

namespace ahs {

namespace {

Monomial to_monomial(const MultiIndex& m, int n) {
  Monomial out(n, 0);
  for (int i : m) ++out[i];
  return out;
}

void require(const JetPoly& p, Fiber f, const char* what) {
  if (p.fiber != f)
    throw Error(ErrorKind::FiberMismatch,
                std::string(what) + " must be " + to_string(f) + ", got " + to_string(p.fiber));
}

std::size_t power(int n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(n);
  return r;
}

std::string args_text(const std::vector<int>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + std::to_string(args[i] + 1);
  return out;
}

Rational factorial(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

int fiber_grade(Fiber f) {
  switch (f) {
    case Fiber::Tangent: return -1;
    case Fiber::Endomorphism: return 0;
    case Fiber::Cotangent: return 1;
  }
  return 0;
}

const char* to_string(Fiber f) {
  switch (f) {
    case Fiber::Tangent: return "g-1";
    case Fiber::Endomorphism: return "g0";
    case Fiber::Cotangent: return "g1";
  }
  return "?";
}

std::size_t flat_index(const std::vector<int>& args, int n) {
  std::size_t idx = 0;
  for (int a : args) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
  return idx;
}

std::vector<int> unflatten(std::size_t index, int slots, int n) {
  std::vector<int> args(slots);
  for (int i = slots - 1; i >= 0; --i) {
    args[i] = static_cast<int>(index % static_cast<std::size_t>(n));
    index /= static_cast<std::size_t>(n);
  }
  return args;
}

int TensorField::order() const {
  int o = components.empty() ? 0 : components.front().order();
  for (const auto& c : components) o = std::min(o, c.order());
  return o;
}

const LieJet& TensorField::at(const std::vector<int>& args) const {
  return components[flat_index(args, n)];
}

const LieVec& ValueTensor::at(const std::vector<int>& args) const {
  return values[flat_index(args, n)];
}

ModelChart::ModelChart(const GradedLieAlgebra& alg, int order) : frame_(alg), order_(order) {
  if (order < 2) throw Error(ErrorKind::InvalidConfig, "jet order must be at least 2");
}

JetPoly ModelChart::constant(Fiber fiber, const LieVec& v) const {
  JetPoly p{fiber, LieJet(n(), order_)};
  p.jet.add(Monomial(n(), 0), v);
  return p;
}

JetPoly ModelChart::coordinate_field(int a) const { return constant(Fiber::Tangent, frame_.x(a)); }

ScalarJet ModelChart::coordinate(int a) const {
  ScalarJet x(n(), order_);
  Monomial m(n(), 0);
  m[a] = 1;
  x.add(m, 1);
  return x;
}

std::vector<ScalarJet> ModelChart::components(const JetPoly& tangent) const {
  require(tangent, Fiber::Tangent, "vector field");
  std::vector<ScalarJet> out(n(), ScalarJet(n(), tangent.jet.order()));
  for (const auto& [m, v] : tangent.jet.terms()) {
    const auto c = frame_.coords_minus(v);
    for (int a = 0; a < n(); ++a) out[a].add(m, c[a]);
  }
  return out;
}

JetPoly flat_nabla(const JetPoly& s, int i) { return {s.fiber, s.jet.derivative(i)}; }

JetPoly flat_nabla_along(const ModelChart& chart, const JetPoly& s, const JetPoly& xi) {
  const auto c = chart.components(xi);
  JetPoly out{s.fiber, LieJet(chart.n(), std::min(s.jet.order() - 1, xi.jet.order()))};
  for (int a = 0; a < chart.n(); ++a)
    if (!c[a].empty()) out.jet += c[a] * s.jet.derivative(a);
  return out;
}

JetPoly lie_bracket(const ModelChart& chart, const JetPoly& xi, const JetPoly& eta) {
  JetPoly out = flat_nabla_along(chart, eta, xi);
  out.jet -= flat_nabla_along(chart, xi, eta).jet;
  return out;
}

JetPoly connection_form(const ModelChart& chart, const JetPoly& upsilon, const JetPoly& xi) {
  require(upsilon, Fiber::Cotangent, "Upsilon");
  require(xi, Fiber::Tangent, "direction");
  return {Fiber::Endomorphism, bracket(chart.algebra(), upsilon.jet, xi.jet)};
}

JetPoly hat_nabla(const ModelChart& chart, const JetPoly& upsilon, const JetPoly& s,
                  const JetPoly& xi) {
  const JetPoly a = connection_form(chart, upsilon, xi);
  JetPoly out = flat_nabla_along(chart, s, xi);
  out.jet += bracket(chart.algebra(), a.jet, s.jet);
  return out;
}

TensorField hat_rho(const ModelChart& chart, const JetPoly& upsilon, const TensorField* base) {
  require(upsilon, Fiber::Cotangent, "Upsilon");
  if (base && (base->fiber != Fiber::Cotangent || base->slots != 1 || base->n != chart.n()))
    throw Error(ErrorKind::FiberMismatch, "base Rho tensor must be a one-slot g1 field");
  const auto& alg = chart.algebra();
  TensorField rho{Fiber::Cotangent, 1, chart.n(), {}};
  for (int a = 0; a < chart.n(); ++a) {
    LieJet v = upsilon.jet.derivative(a);
    const LieJet inner = bracket(alg, chart.coordinate_field(a).jet, upsilon.jet, v.order());
    v += Rational(1, 2) * bracket(alg, upsilon.jet, inner, v.order());
    if (base) v += base->components[a];
    rho.components.push_back(std::move(v));
  }
  return rho;
}

JetPoly hat_curvature_direct(const ModelChart& chart, const JetPoly& upsilon, const JetPoly& xi,
                             const JetPoly& eta, const JetPoly& zeta) {
  require(xi, Fiber::Tangent, "xi");
  require(eta, Fiber::Tangent, "eta");
  require(zeta, Fiber::Tangent, "zeta");
  JetPoly out = hat_nabla(chart, upsilon, hat_nabla(chart, upsilon, zeta, eta), xi);
  out.jet -= hat_nabla(chart, upsilon, hat_nabla(chart, upsilon, zeta, xi), eta).jet;
  out.jet -= hat_nabla(chart, upsilon, zeta, lie_bracket(chart, xi, eta)).jet;
  return out;
}

TensorField curvature_form(const ModelChart& chart, const JetPoly& upsilon) {
  const int n = chart.n();
  std::vector<LieJet> a;
  for (int c = 0; c < n; ++c) a.push_back(connection_form(chart, upsilon, chart.coordinate_field(c)).jet);
  TensorField r{Fiber::Endomorphism, 2, n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LieJet v = a[j].derivative(i) - a[i].derivative(j);
      v += bracket(chart.algebra(), a[i], a[j], v.order());
      r.components.push_back(std::move(v));
    }
  return r;
}

TensorField rho_curvature(const ModelChart& chart, const TensorField& rho) {
  if (rho.fiber != Fiber::Cotangent || rho.slots != 1)
    throw Error(ErrorKind::FiberMismatch, "rho_curvature needs a one-slot g1 field");
  const int n = chart.n();
  const auto& alg = chart.algebra();
  TensorField r{Fiber::Endomorphism, 2, n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.components.push_back(bracket(alg, rho.components[i], chart.coordinate_field(j).jet) -
                             bracket(alg, rho.components[j], chart.coordinate_field(i).jet));
  return r;
}

CurvatureDiff check_curvature_identity(const ModelChart& chart, const JetPoly& upsilon,
                                       const TupleSample& sample) {
  if (chart.order() < 3) throw Error(ErrorKind::InvalidConfig, "curvature identity needs order >= 3");
  const int n = chart.n();
  const auto& alg = chart.algebra();
  const TensorField rho = hat_rho(chart, upsilon);
  CurvatureDiff diff;
  diff.compared_order = chart.order();
  const auto triples = sample_tuples(n, 3, sample);
  diff.tuples_checked = triples.size();
  diff.tuples_total = power(n, 3);
  for (const auto& t : triples) {
    const int a = t[0], b = t[1], c = t[2];
    LieJet direct = hat_curvature_direct(chart, upsilon, chart.coordinate_field(a),
                                         chart.coordinate_field(b), chart.coordinate_field(c))
                        .jet;
    const LieJet dp = bracket(alg, rho.components[a], chart.coordinate_field(b).jet) -
                      bracket(alg, rho.components[b], chart.coordinate_field(a).jet);
    LieJet ident = bracket(alg, dp, chart.coordinate_field(c).jet);
    const int order = std::min(direct.order(), ident.order());
    diff.compared_order = std::min(diff.compared_order, order);
    direct = direct.truncated(order);
    ident = ident.truncated(order);
    std::map<Monomial, bool> keys;
    for (const auto& term : direct.terms()) keys[term.first];
    for (const auto& term : ident.terms()) keys[term.first];
    for (const auto& [m, unused] : keys) {
      const LieVec u = direct.coefficient(m), v = ident.coefficient(m);
      ++diff.coefficients_compared;
      if (u == v) continue;
      diff.pass = false;
      if (diff.mismatches.size() < 32) diff.mismatches.push_back({a + 1, b + 1, c + 1, format_monomial(m), u, v});
    }
  }
  return diff;
}

TensorField covariant_derivative_slice(const ModelChart& chart, const JetPoly& upsilon,
                                       const TensorField& t, int c) {
  const int n = chart.n();
  const auto& alg = chart.algebra();
  const LieJet a = connection_form(chart, upsilon, chart.coordinate_field(c)).jet;
  // gamma[s][b]: component b of [A_c, X_s]
  std::vector<std::vector<ScalarJet>> gamma;
  bool flat = true;
  for (int s = 0; s < n; ++s) {
    gamma.push_back(
        chart.components({Fiber::Tangent, bracket(alg, a, chart.coordinate_field(s).jet)}));
    for (const auto& g : gamma.back()) flat = flat && g.truncated(t.order()).empty();
  }
  const bool a_zero = a.truncated(t.order()).empty();

  TensorField out{t.fiber, t.slots, n, {}};
  out.components.reserve(t.components.size());
  for (std::size_t idx = 0; idx < t.components.size(); ++idx) {
    const LieJet& comp = t.components[idx];
    LieJet v = comp.derivative(c);
    if (!a_zero) v += bracket(alg, a, comp);
    if (!flat) {
      auto args = unflatten(idx, t.slots, n);
      for (int slot = 0; slot < t.slots; ++slot) {
        const int s = args[slot];
        for (int b = 0; b < n; ++b) {
          if (gamma[s][b].empty()) continue;
          auto moved = args;
          moved[slot] = b;
          v -= gamma[s][b] * t.components[flat_index(moved, n)];
        }
      }
    }
    out.components.push_back(std::move(v));
  }
  return out;
}

TensorField covariant_derivative(const ModelChart& chart, const JetPoly& upsilon,
                                 const TensorField& t) {
  TensorField out{t.fiber, t.slots + 1, chart.n(), {}};
  out.components.reserve(t.components.size() * static_cast<std::size_t>(chart.n()));
  for (int c = 0; c < chart.n(); ++c) {
    auto slice = covariant_derivative_slice(chart, upsilon, t, c);
    for (auto& comp : slice.components) out.components.push_back(std::move(comp));
  }
  return out;
}

namespace {

TensorField truncate_field(const TensorField& t, int k) {
  TensorField out{t.fiber, t.slots, t.n, {}};
  for (const auto& c : t.components) out.components.push_back(c.truncated(k));
  return out;
}

ValueTensor values_at_o(const TensorField& t) {
  ValueTensor v{t.fiber, t.slots, t.n, {}};
  for (const auto& c : t.components) v.values.push_back(c.at_origin());
  return v;
}

}  // namespace

ValueTensor iterated_hat_nabla_at_o(const ModelChart& chart, const JetPoly& upsilon,
                                    const TensorField& t, int k) {
  if (t.order() < k) throw Error(ErrorKind::OrderExhausted, "tensor jet order below derivative count");
  const JetPoly ups{upsilon.fiber, upsilon.jet.truncated(k)};
  TensorField cur = truncate_field(t, k);
  for (int i = 0; i < k; ++i) cur = covariant_derivative(chart, ups, cur);
  return values_at_o(cur);
}

ValueTensor flat_derivatives_at_o(const JetPoly& field, int m) {
  const int n = field.jet.vars();
  if (field.jet.order() < m) throw Error(ErrorKind::OrderExhausted, "jet order below derivative count");
  ValueTensor v{field.fiber, m, n, {}};
  for (std::size_t idx = 0; idx < power(n, m); ++idx) {
    Monomial mono(n, 0);
    for (int a : unflatten(idx, m, n)) ++mono[a];
    Rational scale = 1;
    for (auto e : mono) scale *= factorial(e);
    v.values.push_back(scale * field.jet.coefficient(mono));
  }
  return v;
}

ValueTensor apply_del_last(const ModelChart& chart, const ValueTensor& v) {
  if (v.slots < 1) throw Error(ErrorKind::DimensionMismatch, "need at least one slot");
  const int n = chart.n();
  const auto& alg = chart.algebra();
  ValueTensor out{Fiber::Endomorphism, v.slots + 1, n, {}};
  for (std::size_t idx = 0; idx < power(n, v.slots + 1); ++idx) {
    auto args = unflatten(idx, v.slots + 1, n);
    const int b = args.back();
    args.pop_back();
    const int a = args.back();
    const LieVec pa = v.at(args);
    args.back() = b;
    const LieVec pb = v.at(args);
    out.values.push_back(bracket(alg, pa, chart.frame().x(b)) - bracket(alg, pb, chart.frame().x(a)));
  }
  return out;
}

bool symmetric_in_first(const ValueTensor& v, int m) {
  for (std::size_t idx = 0; idx < v.values.size(); ++idx) {
    const auto args = unflatten(idx, v.slots, v.n);
    for (int i = 0; i + 1 < m; ++i) {
      auto swapped = args;
      std::swap(swapped[i], swapped[i + 1]);
      if (v.at(swapped) != v.values[idx]) return false;
    }
  }
  return true;
}

JetPoly random_upsilon(const ModelChart& chart, std::uint64_t seed, int min_deg, int max_deg) {
  if (max_deg > chart.order())
    throw Error(ErrorKind::InvalidConfig, "random Upsilon degree exceeds the jet order");
  const int n = chart.n();
  const auto& g1 = chart.algebra().basis_of_grade(1);
  std::mt19937_64 engine(seed);
  JetPoly ups{Fiber::Cotangent, LieJet(n, chart.order())};
  for (int d = std::max(0, min_deg); d <= max_deg; ++d)
    for (const auto& mi : sym_basis(d, n)) {
      const Monomial m = to_monomial(mi, n);
      for (int idx : g1) {
        const std::uint64_t r = engine();
        if (r % 2 == 0) continue;
        const auto c = static_cast<int>((r >> 1) % 7) - 3;
        ups.jet.add(m, LieVec::unit(idx, Rational(c)));
      }
    }
  return ups;
}

JetPoly theorem_upsilon(const ModelChart& chart, bool exact_weyl) {
  const int n = chart.n();
  if (chart.order() < 5) throw Error(ErrorKind::OrderExhausted, "theorem Upsilon needs order >= 5");
  JetPoly ups{Fiber::Cotangent, LieJet(n, chart.order())};
  if (exact_weyl) {
    ScalarJet f(n, chart.order() + 1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) f.add(to_monomial({i, i, i, i, j, j}, n), Rational(1, 720));
    for (int a = 0; a < n; ++a) {
      const ScalarJet df = f.derivative(a);
      for (const auto& [m, c] : df.terms()) ups.jet.add(m, c * chart.frame().z(a));
    }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        ups.jet.add(to_monomial({i, i, i, j, j}, n), Rational(1, 120) * chart.frame().z(i));
  }
  return ups;
}

std::vector<std::vector<int>> sample_tuples(int n, int slots, const TupleSample& sample) {
  const std::size_t total = power(n, slots);
  std::vector<std::vector<int>> out;
  if (sample.budget == 0 || total <= sample.budget) {
    out.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) out.push_back(unflatten(idx, slots, n));
    return out;
  }
  std::mt19937_64 rng(sample.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  out.reserve(sample.budget);
  for (std::size_t i = 0; i < sample.budget; ++i) {
    std::vector<int> args(slots);
    for (auto& x : args) x = pick(rng);
    out.push_back(std::move(args));
  }
  return out;
}

LieVec flat_derivative_at_o(const JetPoly& field, const std::vector<int>& args) {
  if (field.jet.order() < static_cast<int>(args.size()))
    throw Error(ErrorKind::OrderExhausted, "jet order below derivative count");
  Monomial mono(field.jet.vars(), 0);
  for (int a : args) ++mono[a];
  Rational scale = 1;
  for (auto e : mono) scale *= factorial(e);
  return scale * field.jet.coefficient(mono);
}

RhoJetCheck rho_jet_check(const ModelChart& chart, std::uint64_t seed, int k, const TupleSample& sample) {
  RhoJetCheck r;
  r.k = k;
  const JetPoly ups = random_upsilon(chart, seed, k + 1, std::min(k + 2, chart.order()));
  const TensorField rho = hat_rho(chart, ups);
  r.lower_jet_vanishes = std::all_of(rho.components.begin(), rho.components.end(),
                                     [k](const LieJet& c) { return c.lowest_degree() >= k; });
  CovariantDerivativeCache cache(chart, ups, rho, k);
  const auto tuples = sample_tuples(chart.n(), k + 1, sample);
  r.tuples_checked = tuples.size();
  r.tuples_total = power(chart.n(), k + 1);
  r.matches_flat = r.symmetric = true;
  for (const auto& args : tuples) {
    const LieVec v = cache.at_o(args);
    if (v != flat_derivative_at_o(ups, args)) r.matches_flat = false;
    auto sorted = args;
    std::sort(sorted.begin(), sorted.end());
    if (v != cache.at_o(sorted)) r.symmetric = false;
  }
  r.pass = r.lower_jet_vanishes && r.matches_flat && r.symmetric;
  return r;
}

TupleCheck curvature_derivative_check(const ModelChart& chart, const JetPoly& upsilon, int k,
                                      const TupleSample& sample) {
  const auto& alg = chart.algebra();
  const JetPoly ups{upsilon.fiber, upsilon.jet.truncated(k + 1)};
  CovariantDerivativeCache curvature(chart, ups, curvature_form(chart, ups), k);
  CovariantDerivativeCache rho(chart, ups, hat_rho(chart, ups), k);
  TupleCheck out;
  const auto tuples = sample_tuples(chart.n(), k + 2, sample);
  out.tuples_checked = tuples.size();
  out.tuples_total = power(chart.n(), k + 2);
  for (const auto& args : tuples) {
    const int a = args[k], b = args[k + 1];
    auto with_a = args, with_b = args;
    with_a.pop_back();
    with_b.pop_back();
    with_b.back() = b;
    const LieVec expected = bracket(alg, rho.at_o(with_a), chart.frame().x(b)) -
                            bracket(alg, rho.at_o(with_b), chart.frame().x(a));
    if (curvature.at_o(args) != expected) {
      out.pass = false;
      break;
    }
  }
  return out;
}

CovariantDerivativeCache::CovariantDerivativeCache(const ModelChart& chart, const JetPoly& upsilon,
                                                   const TensorField& base, int k)
    : chart_(chart), k_(k), n_(chart.n()), base_(truncate_field(base, k)) {
  const JetPoly ups{upsilon.fiber, upsilon.jet.truncated(k)};
  for (int c = 0; c < n_; ++c) {
    a_.push_back(connection_form(chart, ups, chart.coordinate_field(c)).jet);
    std::vector<std::vector<ScalarJet>> row;
    for (int s = 0; s < n_; ++s)
      row.push_back(chart.components({Fiber::Tangent, bracket(chart.algebra(), a_.back(), chart.coordinate_field(s).jet)}));
    gamma_.push_back(std::move(row));
  }
}

const LieJet& CovariantDerivativeCache::get(const std::vector<int>& args) {
  const int level = static_cast<int>(args.size()) - base_.slots;
  if (level < 0 || level > k_) throw Error(ErrorKind::InvalidConfig, "derivative level outside 0..k");
  if (level == 0) return base_.components[flat_index(args, n_)];
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(args);
    if (it != memo_.end()) return it->second;
  }
  const int order = k_ - level;
  const auto& alg = chart_.algebra();
  const int c = args[0];
  std::vector<int> rest(args.begin() + 1, args.end());
  const LieJet& base = get(rest);
  LieJet v = base.derivative(c);
  if (a_[c].lowest_degree() <= order)
    v += bracket(alg, a_[c], base, order);
  for (std::size_t slot = 0; slot < rest.size(); ++slot)
    for (int b = 0; b < n_; ++b) {
      const ScalarJet& g = gamma_[c][rest[slot]][b];
      if (g.lowest_degree() > order) continue;
      auto moved = rest;
      moved[slot] = b;
      v -= product_up_to(g, get(moved), order, [](const Rational& x, const LieVec& y) { return x * y; });
    }
  v = v.truncated(order);
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(args, std::move(v)).first->second;
}

JetSpanReport holonomy_span_jets(const GradedLieAlgebra& alg, bool exact_weyl, int order,
                                 const SpanOptions& options) {
  constexpr int k = 4;
  const ModelChart chart(alg, order);
  const int n = chart.n();
  const JetPoly ups = theorem_upsilon(chart, exact_weyl);
  const JetPoly ups_t{ups.fiber, ups.jet.truncated(k + 1)};
  CovariantDerivativeCache lazy(chart, ups_t, curvature_form(chart, ups_t), k);

  // one block per derivative tuple (c1..c4), all (a, b) inside; lexicographic overall
  std::size_t blocks = 1;
  for (int i = 0; i < k; ++i) blocks *= static_cast<std::size_t>(n);
  auto block = [&](std::size_t index) {
    std::vector<int> args = unflatten(index, k, n);
    args.resize(k + 2);
    GeneratorBlock b;
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        args[k] = a;
        args[k + 1] = c;
        b.values.push_back(lazy.get(args).at_origin());
        b.descriptors.push_back("nabla^4 R(" + args_text(args) + ")");
      }
    return b;
  };
  const Frame& frame = chart.frame();
  const Subspace& target = exact_weyl ? frame.g0ss() : frame.g0();
  auto in_target = [&](const LieVec& v) {
    if (v.empty()) return true;
    if (pure_grade(alg, v) != 0) return false;
    return !exact_weyl || killing(alg, v, frame.grading_element()) == 0;
  };
  JetSpanReport report;
  report.cert = span_certify(exact_weyl ? "jets_exact" : "jets_general", exact_weyl ? "g0ss" : "g0",
                             target.dim(), alg.dim(), blocks, block, in_target, options);
  report.algebraic_dim = theorem_certify(frame, exact_weyl, options).achieved_dim;
  report.agree = report.algebraic_dim == report.cert.achieved_dim;
  report.pass = report.cert.pass && report.agree;
  return report;
}

}  // namespace ahs
