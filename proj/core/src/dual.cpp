#include "copfaces/dual.hpp"

#include <algorithm>

#include "copfaces/errors.hpp"
#include "copfaces/geometry.hpp"
#include "copfaces/lp.hpp"
#include "copfaces/oracle.hpp"

namespace copfaces {

const char* to_string(DualFlavor flavor) {
  switch (flavor) {
    case DualFlavor::G: return "G";
    case DualFlavor::GTilde: return "G-tilde";
    case DualFlavor::GBar: return "G-bar";
  }
  return "unknown";
}

DualFlavor parse_dual_flavor(const std::string& text) {
  if (text == "G") return DualFlavor::G;
  if (text == "G-tilde") return DualFlavor::GTilde;
  if (text == "G-bar") return DualFlavor::GBar;
  throw ParseError("unknown dual flavor '" + text + "' (expected G, G-tilde or G-bar)");
}

std::size_t max_rank_one_terms(int p) { return static_cast<std::size_t>(p) * static_cast<std::size_t>(p + 1) / 2; }

namespace {

std::string term_label(const char* what, std::size_t i) { return std::string(what) + " " + std::to_string(i + 1); }

// Anchors and sign masks required by the flavor.
struct AnchorRules {
  std::vector<SimplexVector> anchors;
  std::vector<IndexSet> masks;
};

std::optional<AnchorRules> anchor_rules(const DualDecomposition& dd) {
  if (dd.flavor == DualFlavor::GBar) {
    if (!dd.context.data) return std::nullopt;
    return AnchorRules{dd.context.data->minimal_zeros, dd.context.data->m_sets};
  }
  return AnchorRules{dd.context.spec.vectors(), dd.context.spec.masks()};
}

}  // namespace

std::optional<std::string> validate(const DualDecomposition& dd) {
  const int p = dd.context.spec.order();
  if (dd.rank_one_terms.size() > max_rank_one_terms(p)) {
    return "more than p(p+1)/2 = " + std::to_string(max_rank_one_terms(p)) + " rank-one terms";
  }
  for (std::size_t i = 0; i < dd.rank_one_terms.size(); ++i) {
    const auto& t = dd.rank_one_terms[i];
    if (t.mu.order() != p) return term_label("order mismatch in rank-one term", i);
    if (t.alpha < 0) return term_label("negative alpha in rank-one term", i);
  }
  const auto rules = anchor_rules(dd);
  if (!rules) return std::string("G-bar decomposition needs canonical face data");
  if (dd.cross_terms.size() != rules->anchors.size()) {
    return "expected " + std::to_string(rules->anchors.size()) + " cross terms, got " +
           std::to_string(dd.cross_terms.size());
  }
  for (std::size_t j = 0; j < dd.cross_terms.size(); ++j) {
    const auto& c = dd.cross_terms[j];
    if (c.lambda.size() != static_cast<std::size_t>(p)) return term_label("lambda of wrong length in cross term", j);
    if (!(c.anchor == rules->anchors[j])) return term_label("anchor mismatch in cross term", j);
    for (int k : rules->masks[j].complement(p).indices()) {
      const auto& l = c.lambda[static_cast<std::size_t>(k)];
      if (dd.flavor == DualFlavor::G && l != 0) {
        return "lambda_" + std::to_string(k + 1) + " must vanish outside L(" + std::to_string(j + 1) + ")";
      }
      if (l < 0) {
        return "lambda_" + std::to_string(k + 1) + " is negative outside the mask of cross term " +
               std::to_string(j + 1);
      }
    }
  }
  if (dd.flavor == DualFlavor::GBar) {
    if (auto fam = dd.context.data->family()) {
      for (std::size_t i = 0; i < dd.rank_one_terms.size(); ++i) {
        const auto& t = dd.rank_one_terms[i];
        if (t.alpha > 0 && !in_omega(t.mu, *fam)) return term_label("mu outside Omega(Z) in rank-one term", i);
      }
    }
  }
  return std::nullopt;
}

SymMatrix assemble_unchecked(const DualDecomposition& dd) {
  SymMatrix d(dd.context.spec.order());
  for (const auto& t : dd.rank_one_terms) d += t.alpha * SymMatrix::outer(t.mu.coords());
  for (const auto& c : dd.cross_terms) d += SymMatrix::symmetric_outer(c.lambda, c.anchor.coords());
  return d;
}

SymMatrix assemble(const DualDecomposition& dd) {
  if (auto err = validate(dd)) throw InvariantError(std::string(to_string(dd.flavor)) + " decomposition: " + *err);
  return assemble_unchecked(dd);
}

Scalar pairing(const SymMatrix& d, const DualDecomposition& dd) { return inner(d, assemble(dd)); }

bool verify_duality(const SymMatrix& d, const DualDecomposition& dd, const Limits& limits) {
  if (!face_membership(d, dd.context.spec, limits)) throw InvariantError("verify_duality: matrix is not in the face");
  return pairing(d, dd) >= 0;
}

namespace {

Vector scaled(const Vector& v, const Scalar& s) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

void add_to(Vector& target, const Vector& v, const Scalar& s) {
  for (std::size_t k = 0; k < target.size(); ++k) target[k] += s * v[k];
}

}  // namespace

DualDecomposition promote_tilde_to_bar(const DualDecomposition& dd, const Limits& limits) {
  if (dd.flavor == DualFlavor::GBar) return dd;
  if (auto err = validate(dd)) throw InvariantError("promote_tilde_to_bar: " + *err);
  const FaceData data = dd.context.data ? *dd.context.data : canonicalize_face(dd.context.spec, limits);
  const int p = dd.context.spec.order();
  const auto& z = data.minimal_zeros;

  DualDecomposition out;
  out.flavor = DualFlavor::GBar;
  out.context = DualContext{dd.context.spec, data};
  for (const auto& tau : z) out.cross_terms.push_back({tau, Vector(static_cast<std::size_t>(p), Scalar(0))});

  // Re-anchor: t(i) = sum_j alpha_ij tau(j).
  for (std::size_t i = 0; i < dd.cross_terms.size(); ++i) {
    const auto alpha = convex_weights_min_support(dd.cross_terms[i].anchor, z);
    if (!alpha) {
      throw InvariantError("anchor " + dd.cross_terms[i].anchor.to_string() + " is not in conv Z_K");
    }
    for (std::size_t j = 0; j < z.size(); ++j) {
      if ((*alpha)[j] != 0) add_to(out.cross_terms[j].lambda, dd.cross_terms[i].lambda, (*alpha)[j]);
    }
  }

  const auto family = data.family();
  for (const auto& term : dd.rank_one_terms) {
    if (term.alpha == 0) continue;
    if (!family) {
      out.rank_one_terms.push_back(term);
      continue;
    }
    Scalar weight = term.alpha;
    SimplexVector mu = term.mu;
    for (;;) {
      const Scalar rho = l1_distance_to_hull(mu, *family);
      if (rho >= family->sigma()) {
        out.rank_one_terms.push_back({weight, mu});
        break;
      }
      if (rho == 0) {
        // weight mu mu^T = (weight / 2) sum_j beta_j (tau(j) mu^T + mu tau(j)^T).
        const auto beta = convex_weights_min_support(mu, z);
        if (!beta) throw InternalError("hull member without convex weights");
        for (std::size_t j = 0; j < z.size(); ++j) {
          if ((*beta)[j] != 0) add_to(out.cross_terms[j].lambda, mu.coords(), weight * (*beta)[j] / 2);
        }
        break;
      }
      // 0 < rho < sigma: mu = theta tau + (1 - theta) mu' with supp(tau) inside supp(mu).
      const std::size_t i0 = support_cover_witness(mu, *family);
      const auto& tau = z[i0];
      std::optional<Scalar> theta;
      for (int k : tau.support().indices()) {
        Scalar r = mu[k] / tau[k];
        if (!theta || r < *theta) theta = std::move(r);
      }
      if (*theta >= 1) throw InternalError("peeling step did not shrink the support");
      Vector rest(mu.coords());
      add_to(rest, tau.coords(), -*theta);
      SimplexVector next(scaled(rest, 1 / (1 - *theta)));
      auto& lambda = out.cross_terms[i0].lambda;
      add_to(lambda, tau.coords(), weight * *theta * *theta / 2);
      add_to(lambda, next.coords(), weight * *theta * (1 - *theta));
      weight *= (1 - *theta) * (1 - *theta);
      mu = std::move(next);
    }
  }

  if (auto err = validate(out)) throw InternalError("promoted decomposition is invalid: " + *err);
  if (!(assemble_unchecked(out) == assemble_unchecked(dd))) {
    throw InternalError("promotion changed the assembled matrix");
  }
  return out;
}

GRefutation refute_g_membership(const SymMatrix& d, const FaceSpec& f) {
  if (d.order() != f.order()) throw DimensionError("refute_g_membership: order mismatch");
  const int p = f.order();
  GRefutation r;
  for (int b = 0; b < p; ++b) {
    bool isolated = true;
    for (std::size_t i = 0; i < f.size() && isolated; ++i) {
      if (f.vectors()[i][b] != 0 || f.masks()[i].contains(b)) isolated = false;
    }
    if (!isolated || d(b, b) != 0) continue;
    for (int a = 0; a < p; ++a) {
      if (a == b || d(a, b) == 0) continue;
      const std::string bb = std::to_string(b + 1);
      const std::string ab = "(" + std::to_string(std::min(a, b) + 1) + "," + std::to_string(std::max(a, b) + 1) + ")";
      r.refuted = true;
      r.row = std::min(a, b);
      r.col = std::max(a, b);
      r.pivot = b;
      r.required = d(a, b);
      r.derivable = 0;
      r.trace = {
          "index " + bb + ": t_" + bb + "(i) = 0 and " + bb + " is outside L(i) for every i, so lambda_" + bb +
              "(i) = 0",
          "entry (" + bb + "," + bb + ") = sum alpha mu_" + bb + "^2 = " + to_display(d(b, b)) +
              ", so mu_" + bb + " = 0 whenever alpha > 0",
          "entry " + ab + " = sum alpha mu_a mu_b + sum (lambda_a t_b + t_a lambda_b) reduces to 0",
          "contradiction at entry " + ab + ": required " + to_display(r.required) + ", derivable 0",
      };
      return r;
    }
  }
  r.trace = {"no isolated zero-diagonal index; G-membership not refuted"};
  return r;
}

GRefutation refute_g_membership_worked_example() {
  const FaceSpec f(2, {SimplexVector({Scalar(1), Scalar(0)})}, {IndexSet{0}});
  return refute_g_membership(SymMatrix::from_rows({{0, 1}, {1, 0}}), f);
}

std::optional<DualDecomposition> search_decomposition(const SymMatrix& d, const FaceSpec& f, DualFlavor flavor,
                                                      int grid_denominator, const Limits& limits) {
  if (flavor == DualFlavor::GBar) throw InvariantError("search_decomposition supports G and G-tilde only");
  if (d.order() != f.order()) throw DimensionError("search_decomposition: order mismatch");
  const int p = f.order();
  const auto grid = simplex_grid(p, grid_denominator, limits);
  const std::size_t n_mu = grid.size();
  const std::size_t n = n_mu + f.size() * static_cast<std::size_t>(p);
  LinearProgram lp(n);
  auto lambda_col = [&](std::size_t i, int k) { return n_mu + i * static_cast<std::size_t>(p) + static_cast<std::size_t>(k); };
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int k = 0; k < p; ++k) {
      if (f.masks()[i].contains(k)) lp.set_free(lambda_col(i, k));
    }
  }
  for (int a = 0; a < p; ++a) {
    for (int b = a; b < p; ++b) {
      Vector row(n, Scalar(0));
      for (std::size_t m = 0; m < n_mu; ++m) row[m] = grid[m][a] * grid[m][b];
      for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& t = f.vectors()[i];
        row[lambda_col(i, a)] += t[b];
        row[lambda_col(i, b)] += t[a];
      }
      lp.add_constraint(std::move(row), Relation::Equal, d(a, b));
    }
  }
  // G: lambda vanishes off the mask.
  if (flavor == DualFlavor::G) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (int k : f.masks()[i].complement(p).indices()) {
        Vector row(n, Scalar(0));
        row[lambda_col(i, k)] = 1;
        lp.add_constraint(std::move(row), Relation::Equal, 0);
      }
    }
  }
  const auto res = solve_lp(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;

  DualDecomposition dd;
  dd.flavor = flavor;
  dd.context = DualContext{f, std::nullopt};
  for (std::size_t m = 0; m < n_mu; ++m) {
    if (res.solution[m] != 0) dd.rank_one_terms.push_back({res.solution[m], grid[m]});
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    Vector lambda(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) lambda[static_cast<std::size_t>(k)] = res.solution[lambda_col(i, k)];
    dd.cross_terms.push_back({f.vectors()[i], std::move(lambda)});
  }
  if (auto err = validate(dd)) throw InternalError("search_decomposition produced an invalid decomposition: " + *err);
  return dd;
}

namespace {

SimplexVector random_simplex_point(int p, Rng& rng) {
  std::uniform_int_distribution<int> w(0, 4);
  for (;;) {
    Vector v(static_cast<std::size_t>(p));
    bool any = false;
    for (auto& x : v) {
      x = w(rng);
      if (x != 0) any = true;
    }
    if (any) return SimplexVector::normalized(std::move(v));
  }
}

Vector random_lambda(int p, const IndexSet& mask, Rng& rng) {
  Vector l(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    l[static_cast<std::size_t>(k)] = mask.contains(k) ? random_rational(rng, 3, 3) : random_nonnegative(rng, 3, 3);
  }
  return l;
}

}  // namespace

DualDecomposition sample_tilde_decomposition(const FaceSpec& f, Rng& rng) {
  const int p = f.order();
  DualDecomposition dd;
  dd.flavor = DualFlavor::GTilde;
  dd.context = DualContext{f, std::nullopt};
  std::uniform_int_distribution<std::size_t> count(0, std::min<std::size_t>(3, max_rank_one_terms(p)));
  const std::size_t terms = count(rng);
  for (std::size_t r = 0; r < terms; ++r) dd.rank_one_terms.push_back({random_nonnegative(rng, 3, 2), random_simplex_point(p, rng)});
  for (std::size_t i = 0; i < f.size(); ++i) dd.cross_terms.push_back({f.vectors()[i], random_lambda(p, f.masks()[i], rng)});
  return dd;
}

DualDecomposition sample_bar_decomposition(const FaceSpec& f, const FaceData& data, Rng& rng, int grid_denominator,
                                           const Limits& limits) {
  const int p = f.order();
  DualDecomposition dd;
  dd.flavor = DualFlavor::GBar;
  dd.context = DualContext{f, data};
  const auto fam = data.family();
  const auto pool = fam ? omega_grid(*fam, grid_denominator, limits) : simplex_grid(p, grid_denominator, limits);
  if (!pool.empty()) {
    std::uniform_int_distribution<std::size_t> count(0, std::min<std::size_t>(3, max_rank_one_terms(p)));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t terms = count(rng);
    for (std::size_t r = 0; r < terms; ++r) dd.rank_one_terms.push_back({random_nonnegative(rng, 3, 2), pool[pick(rng)]});
  }
  for (std::size_t j = 0; j < data.minimal_zeros.size(); ++j) {
    dd.cross_terms.push_back({data.minimal_zeros[j], random_lambda(p, data.m_sets[j], rng)});
  }
  return dd;
}

}  // namespace copfaces
