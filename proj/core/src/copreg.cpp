#include "copfaces/copreg.hpp"

#include <algorithm>

#include "copfaces/errors.hpp"
#include "copfaces/lp.hpp"
#include "copfaces/oracle.hpp"
#include "copfaces/zeros.hpp"

namespace copfaces {

LinearCopProblem::LinearCopProblem(Vector objective, std::vector<SymMatrix> constraint_map)
    : objective_(std::move(objective)), map_(std::move(constraint_map)) {
  if (objective_.empty()) throw InvariantError("linear copositive problem needs at least one variable");
  if (map_.size() != objective_.size() + 1) {
    throw DimensionError("constraint map needs A_0..A_n with n = " + std::to_string(objective_.size()));
  }
  for (const auto& a : map_) {
    if (a.order() != map_.front().order()) throw DimensionError("constraint matrices of different order");
  }
}

SymMatrix LinearCopProblem::evaluate(const Vector& x) const {
  if (x.size() != num_variables()) throw DimensionError("point has the wrong number of variables");
  SymMatrix a = map_.front();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) a += x[i] * map_[i + 1];
  }
  return a;
}

std::pair<Vector, Scalar> LinearCopProblem::bilinear_form(const Vector& u, const Vector& v) const {
  Vector coeffs(num_variables());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = map_[i + 1].bilinear(u, v);
  return {coeffs, map_.front().bilinear(u, v)};
}

bool feasible_membership(const LinearCopProblem& prob, const Vector& x, const Limits& limits) {
  return is_copositive(prob.evaluate(x), limits);
}

EquivalentVerdict equivalent_membership(const LinearCopProblem& prob, const Vector& x,
                                        const std::vector<SimplexVector>& v, int grid_denominator,
                                        const Limits& limits) {
  const SymMatrix a = prob.evaluate(x);
  EquivalentVerdict out;
  for (const auto& t : v) {
    for (int k = 0; k < a.order(); ++k) {
      if (matvec_row(a, t, k) < 0) {
        out.failed_check = "column";
        out.witness = t;
        return out;
      }
    }
  }
  std::optional<VectorFamily> fam;
  if (!v.empty()) fam.emplace(v);
  const auto grid = fam ? omega_grid(*fam, grid_denominator, limits) : simplex_grid(a.order(), grid_denominator, limits);
  for (const auto& t : grid) {
    if (quad_form(a, t) < 0) {
      out.failed_check = "omega-grid";
      out.witness = t;
      return out;
    }
  }
  const auto qp = min_quad_over_simplex(a, limits);
  if (qp.min_value >= 0) {
    out.member = true;
    return out;
  }
  const auto& t = qp.minimizers.front();
  if (fam && !in_omega(t, *fam)) throw InternalError("negative minimizer " + t.to_string() + " lies outside Omega(V)");
  out.failed_check = "oracle";
  out.witness = t;
  return out;
}

const char* to_string(CertStatus status) {
  return status == CertStatus::Certified ? "certified" : "inconclusive";
}

bool ImmobileCertificate::complete() const {
  return std::all_of(zeros.begin(), zeros.end(), [](const ZeroRecord& z) { return z.status == CertStatus::Certified; }) &&
         std::all_of(rows.begin(), rows.end(), [](const RowRecord& r) { return r.status == CertStatus::Certified; });
}

std::vector<SimplexVector> ImmobileCertificate::zero_vectors() const {
  std::vector<SimplexVector> out;
  for (const auto& z : zeros) out.push_back(z.tau);
  return out;
}

namespace {

// Outer relaxation: rows . x >= rhs, one per sampled t (t^T A(x) t >= 0).
class Relaxation {
 public:
  explicit Relaxation(const LinearCopProblem& prob) : prob_(prob) {}

  void add_point(const SimplexVector& t) {
    auto [coeffs, constant] = prob_.bilinear_form(t.coords(), t.coords());
    add_row(std::move(coeffs), -constant);
  }

  void add_row(Vector coeffs, Scalar rhs) {
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c == 0; })) {
      if (rhs > 0) trivially_infeasible_ = true;
      return;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r] == coeffs && rhs_[r] >= rhs) return;
    }
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(std::move(rhs));
  }

  [[nodiscard]] LinearProgram program(Sense sense, const Vector& objective) const {
    const std::size_t n = prob_.num_variables();
    LinearProgram lp(n, sense);
    lp.objective = objective;
    for (std::size_t j = 0; j < n; ++j) lp.set_free(j);
    for (std::size_t r = 0; r < rows_.size(); ++r) lp.add_constraint(rows_[r], Relation::GreaterEqual, rhs_[r]);
    if (trivially_infeasible_) lp.add_constraint(Vector(n, Scalar(0)), Relation::GreaterEqual, 1);
    return lp;
  }

 private:
  const LinearCopProblem& prob_;
  std::vector<Vector> rows_;
  Vector rhs_;
  bool trivially_infeasible_ = false;
};

Vector unit(std::size_t n, std::size_t i, int s) {
  Vector v(n, Scalar(0));
  v[i] = s;
  return v;
}

// Oracle minimizer of A(x) when it is not copositive.
std::optional<SimplexVector> violation(const LinearCopProblem& prob, const Vector& x, const Limits& limits) {
  const auto qp = min_quad_over_simplex(prob.evaluate(x), limits);
  if (qp.min_value >= 0) return std::nullopt;
  return qp.minimizers.front();
}

// Nearby point with small denominators that still separates, else t itself.
SimplexVector coarse_cut(const SymMatrix& a, const SimplexVector& t, const VectorFamily* omega = nullptr) {
  const int p = t.order();
  for (int den = 2; den <= 4096; den *= 2) {
    Vector c(static_cast<std::size_t>(p));
    std::vector<std::pair<Scalar, int>> frac;
    int used = 0;
    for (int k = 0; k < p; ++k) {
      const Scalar scaled = t[k] * den;
      const boost::multiprecision::mpz_int whole = numerator(scaled) / denominator(scaled);
      const int fl = whole.convert_to<int>();
      c[static_cast<std::size_t>(k)] = Scalar(fl, den);
      used += fl;
      frac.emplace_back(scaled - fl, k);
    }
    std::stable_sort(frac.begin(), frac.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    for (int r = 0; r < den - used; ++r) c[static_cast<std::size_t>(frac[static_cast<std::size_t>(r)].second)] += Scalar(1, den);
    SimplexVector cand(std::move(c));
    if (quad_form(a, cand) < 0 && (omega == nullptr || in_omega(cand, *omega))) return cand;
  }
  return t;
}

struct ExchangeState {
  const LinearCopProblem& prob;
  const ImmobileOptions& options;
  Relaxation relax;
  ImmobileCertificate cert;

  bool budget_left() const { return cert.lp_solves < options.budget; }

  LpResult solve(const LinearProgram& lp) {
    ++cert.lp_solves;
    return solve_lp(lp);
  }

  Vector find_feasible_point() {
    const std::size_t n = prob.num_variables();
    std::vector<Vector> probes{Vector(n, Scalar(0))};
    for (std::size_t i = 0; i < n; ++i) {
      probes.push_back(unit(n, i, 1));
      probes.push_back(unit(n, i, -1));
    }
    for (const auto& x : probes) {
      if (feasible_membership(prob, x, options.limits)) return x;
    }
    while (budget_left()) {
      const auto res = solve(relax.program(Sense::Minimize, Vector(n, Scalar(0))));
      if (res.status != LpStatus::Optimal) break;
      const auto t = violation(prob, res.solution, options.limits);
      if (!t) return res.solution;
      relax.add_point(*t);
      ++cert.cuts;
    }
    throw Error("no feasible point found within the budget");
  }

  enum class Outcome { Certified, NewSample, Exhausted };

  // Certifies max f = 0 over X for f(x) = coeffs . x + constant (f >= 0 on X,
  // f = 0 on every sample), or finds a feasible point with f > 0.
  Outcome certify(const Vector& coeffs, const Scalar& constant, Scalar* relaxation_max) {
    const auto f = [&](const Vector& x) { return dot(coeffs, x) + constant; };
    while (budget_left()) {
      const auto res = solve(relax.program(Sense::Maximize, coeffs));
      if (res.status == LpStatus::Infeasible) throw InternalError("outer relaxation lost every feasible point");
      Vector x_star = res.solution;
      if (res.status == LpStatus::Optimal) {
        const Scalar best = res.value + constant;
        if (best == 0) {
          if (relaxation_max) *relaxation_max = best;
          return Outcome::Certified;
        }
        if (best < 0) throw InternalError("relaxation maximum below a sampled value");
      } else {
        // A recession direction of X usually shows up as the LP ray.
        for (const auto& base : cert.samples) {
          Vector x(base);
          for (std::size_t i = 0; i < x.size(); ++i) x[i] += res.ray[i];
          if (f(x) > 0 && feasible_membership(prob, x, options.limits)) {
            cert.samples.push_back(std::move(x));
            return Outcome::NewSample;
          }
        }
        const Scalar slope = dot(coeffs, res.ray);
        const Scalar deficit = f(x_star) < 0 ? -f(x_star) : Scalar(0);
        const Scalar step = 1 + deficit / slope;
        for (std::size_t i = 0; i < x_star.size(); ++i) x_star[i] += step * res.ray[i];
      }
      // f is linear, zero at every sample and positive at x_star: scan segments.
      const std::size_t bases = std::min<std::size_t>(cert.samples.size(), 4);
      for (std::size_t b = 0; b < bases; ++b) {
        const Vector& base = cert.samples[cert.samples.size() - 1 - b];
        Scalar lambda = 1;
        for (int halvings = 0; halvings <= 10; ++halvings, lambda /= 2) {
          Vector x(base);
          for (std::size_t i = 0; i < x.size(); ++i) x[i] += lambda * (x_star[i] - base[i]);
          if (feasible_membership(prob, x, options.limits)) {
            cert.samples.push_back(std::move(x));
            return Outcome::NewSample;
          }
        }
      }
      const auto t = violation(prob, x_star, options.limits);
      if (!t) throw InternalError("segment scan rejected a feasible endpoint");
      relax.add_point(coarse_cut(prob.evaluate(x_star), *t));
      ++cert.cuts;
    }
    return Outcome::Exhausted;
  }
};

bool contains_vector(const std::vector<SimplexVector>& list, const SimplexVector& t) {
  return std::find(list.begin(), list.end(), t) != list.end();
}

}  // namespace

ImmobileCertificate find_immobile_zeros(const LinearCopProblem& prob, const ImmobileOptions& options) {
  ExchangeState st{prob, options, Relaxation(prob), {}};
  st.cert.order = prob.order();
  for (const auto& t : simplex_grid(prob.order(), options.grid_denominator, options.limits)) st.relax.add_point(t);
  st.cert.samples.push_back(st.find_feasible_point());

  std::vector<SimplexVector> certified, abandoned;
  std::vector<std::pair<SimplexVector, int>> certified_rows, abandoned_rows;
  std::vector<SimplexVector> z;
  std::vector<IndexSet> m;

  for (;;) {
    std::vector<SymMatrix> mats;
    for (const auto& x : st.cert.samples) mats.push_back(prob.evaluate(x));
    const MatrixSet q(mats, options.limits);
    z = minimal_zeros(q);
    m = m_sets(q, z);

    bool resample = false;
    for (const auto& tau : z) {
      if (contains_vector(certified, tau) || contains_vector(abandoned, tau)) continue;
      auto [coeffs, constant] = prob.bilinear_form(tau.coords(), tau.coords());
      const auto outcome = st.certify(coeffs, constant, nullptr);
      if (outcome == ExchangeState::Outcome::Certified) certified.push_back(tau);
      if (outcome == ExchangeState::Outcome::Exhausted) abandoned.push_back(tau);
      if (outcome == ExchangeState::Outcome::NewSample) {
        resample = true;
        break;
      }
    }
    if (resample) continue;

    for (std::size_t j = 0; j < z.size() && !resample; ++j) {
      for (int k : m[j].indices()) {
        if (z[j].support().contains(k)) continue;
        const std::pair<SimplexVector, int> key{z[j], k};
        if (std::find(certified_rows.begin(), certified_rows.end(), key) != certified_rows.end()) continue;
        if (std::find(abandoned_rows.begin(), abandoned_rows.end(), key) != abandoned_rows.end()) continue;
        auto [coeffs, constant] = prob.bilinear_form(unit(static_cast<std::size_t>(prob.order()), static_cast<std::size_t>(k), 1), z[j].coords());
        const auto outcome = st.certify(coeffs, constant, nullptr);
        if (outcome == ExchangeState::Outcome::Certified) certified_rows.push_back(key);
        if (outcome == ExchangeState::Outcome::Exhausted) abandoned_rows.push_back(key);
        if (outcome == ExchangeState::Outcome::NewSample) {
          resample = true;
          break;
        }
      }
    }
    if (!resample) break;
  }

  for (std::size_t j = 0; j < z.size(); ++j) {
    ZeroRecord rec{z[j], CertStatus::Inconclusive, std::nullopt};
    if (contains_vector(certified, z[j])) {
      rec.status = CertStatus::Certified;
      rec.relaxation_max = Scalar(0);
    }
    st.cert.zeros.push_back(std::move(rec));
    for (int k : m[j].indices()) {
      if (z[j].support().contains(k)) continue;
      const std::pair<SimplexVector, int> key{z[j], k};
      const bool ok = std::find(certified_rows.begin(), certified_rows.end(), key) != certified_rows.end();
      st.cert.rows.push_back({j, k, ok ? CertStatus::Certified : CertStatus::Inconclusive});
    }
  }
  st.cert.m_sets = std::move(m);
  return st.cert;
}

namespace {

void require_complete(const ImmobileCertificate& cert) {
  if (!cert.complete()) throw InvariantError("immobile-zero certificate has inconclusive entries");
}

}  // namespace

RegularizedProblem regularize(const LinearCopProblem& prob, const ImmobileCertificate& cert, int grid_denominator,
                              const Limits& limits) {
  require_complete(cert);
  if (cert.order != prob.order()) throw DimensionError("certificate order does not match the problem");
  RegularizedProblem reg{prob, cert.zero_vectors(), cert.m_sets, std::nullopt, grid_denominator, {}};
  if (reg.anchors.empty()) {
    reg.omega_points = simplex_grid(prob.order(), grid_denominator, limits);
  } else {
    const VectorFamily fam(reg.anchors);
    reg.sigma = fam.sigma();
    reg.omega_points = omega_grid(fam, grid_denominator, limits);
  }
  return reg;
}

RegularizedProblem unregularized(const LinearCopProblem& prob, int grid_denominator, const Limits& limits) {
  return RegularizedProblem{prob, {}, {}, std::nullopt, grid_denominator,
                            simplex_grid(prob.order(), grid_denominator, limits)};
}

FaceData minimal_face_of_problem(const LinearCopProblem& prob, const ImmobileCertificate& cert) {
  require_complete(cert);
  FaceData f;
  f.order = prob.order();
  f.minimal_zeros = cert.zero_vectors();
  f.m_sets = cert.m_sets;
  if (auto fam = f.family()) f.sigma = fam->sigma();
  f.source = "lincop";
  return f;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::RefinementCapExceeded: return "refinement-cap-exceeded";
  }
  return "unknown";
}

SolveResult solve_discretized(const RegularizedProblem& reg, std::size_t max_rounds, const Limits& limits) {
  const auto& prob = reg.base;
  const int p = prob.order();
  Relaxation relax(prob);
  for (const auto& tau : reg.anchors) {
    for (int k = 0; k < p; ++k) {
      auto [coeffs, constant] = prob.bilinear_form(unit(static_cast<std::size_t>(p), static_cast<std::size_t>(k), 1), tau.coords());
      relax.add_row(std::move(coeffs), -constant);
    }
  }
  for (const auto& t : reg.omega_points) relax.add_point(t);
  std::optional<VectorFamily> fam;
  if (!reg.anchors.empty()) fam.emplace(reg.anchors);

  SolveResult out;
  while (out.rounds < max_rounds) {
    ++out.rounds;
    const auto res = solve_lp(relax.program(Sense::Minimize, prob.objective()));
    if (res.status == LpStatus::Infeasible) {
      out.status = SolveStatus::Infeasible;
      return out;
    }
    if (res.status == LpStatus::Unbounded) {
      out.status = SolveStatus::Unbounded;
      return out;
    }
    out.x = res.solution;
    out.value = res.value;
    const SymMatrix a = prob.evaluate(out.x);
    const auto qp = min_quad_over_simplex(a, limits);
    if (qp.min_value >= 0) {
      out.status = SolveStatus::Optimal;
      out.oracle_copositive = true;
      return out;
    }
    const auto& t_min = qp.minimizers.front();
    if (fam && !in_omega(t_min, *fam)) throw InternalError("cut point " + t_min.to_string() + " lies outside Omega(Z)");
    // Low-denominator cuts keep the LP data small.
    const SimplexVector t = coarse_cut(a, t_min, fam ? &*fam : nullptr);
    out.cuts.emplace_back(t, quad_form(a, t));
    relax.add_point(t);
  }
  out.status = SolveStatus::RefinementCapExceeded;
  return out;
}

}  // namespace copfaces
