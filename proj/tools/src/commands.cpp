#include "copfaces_cli/commands.hpp"

namespace copfaces::cli {

namespace {

Certificate start(const char* operation, const ProblemFile& problem, const Options& options) {
  Certificate c;
  c.operation = operation;
  c.digest = inputs_digest(problem);
  c.parameters = options.to_json();
  return c;
}

void require_kind(const ProblemFile& problem, std::initializer_list<ProblemKind> allowed, const char* command) {
  for (auto k : allowed) {
    if (problem.kind == k) return;
  }
  throw InvariantError(std::string(command) + " does not accept problems of kind " + to_string(problem.kind));
}

// Generators with their transcript references.
std::vector<std::pair<SymMatrix, std::string>> generators_of(const ProblemFile& problem) {
  std::vector<std::pair<SymMatrix, std::string>> out;
  if (problem.kind == ProblemKind::Matrix) {
    out.emplace_back(*problem.matrix, "input");
  } else {
    for (std::size_t i = 0; i < problem.generators.size(); ++i) {
      out.emplace_back(problem.generators[i], "generator/" + std::to_string(i));
    }
  }
  return out;
}

std::vector<SymMatrix> matrices_only(const std::vector<std::pair<SymMatrix, std::string>>& gens) {
  std::vector<SymMatrix> out;
  for (const auto& g : gens) out.push_back(g.first);
  return out;
}

// Non-copositive generator: fills a negative certificate (exit 2).
bool reject_non_copositive(Certificate& c, const std::vector<std::pair<SymMatrix, std::string>>& gens,
                           const Limits& limits) {
  for (const auto& [m, ref] : gens) {
    const auto qp = min_quad_over_simplex(m, limits);
    if (qp.min_value >= 0) continue;
    const auto& w = qp.minimizers.front();
    c.outputs["copositive"] = false;
    c.outputs["not_copositive"] = ref;
    c.outputs["witness"] = simplex_json(w);
    c.record_quad(ref, w, quad_form(m, w));
    c.add("result", "not copositive (" + ref + ")");
    c.add("witness", w.to_string());
    c.exit_code = 2;
    return true;
  }
  return false;
}

Json zeros_json(const std::vector<SimplexVector>& z, const std::vector<IndexSet>& m) {
  Json out = Json::array();
  for (std::size_t j = 0; j < z.size(); ++j) {
    out.push_back({{"tau", simplex_json(z[j])}, {"m_set", index_set_json(m[j])}});
  }
  return out;
}

Json face_json(const FaceData& f) {
  Json out;
  out["order"] = f.order;
  out["minimal_zeros"] = zeros_json(f.minimal_zeros, f.m_sets);
  out["sigma"] = f.sigma ? scalar_json(*f.sigma) : Json(nullptr);
  out["heuristic"] = f.heuristic;
  out["source"] = f.source;
  return out;
}

void report_face(Certificate& c, const FaceData& f) {
  c.add("minimal_zeros", std::to_string(f.minimal_zeros.size()));
  for (std::size_t j = 0; j < f.minimal_zeros.size(); ++j) {
    c.add("zero." + std::to_string(j + 1), f.minimal_zeros[j].to_string() + " M=" + f.m_sets[j].to_string());
  }
  c.add("sigma", f.sigma ? to_display(*f.sigma) : "none");
  c.add("heuristic", f.heuristic ? "true" : "false");
}

// Zero and row equalities of every generator at each (tau, M).
void record_face_checks(Certificate& c, const std::vector<std::pair<SymMatrix, std::string>>& gens,
                        const std::vector<SimplexVector>& z, const std::vector<IndexSet>& m) {
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (const auto& [a, ref] : gens) {
      c.record_quad(ref, z[j], quad_form(a, z[j]));
      for (int k : m[j].indices()) c.record_row(ref, z[j], k, matvec_row(a, z[j], k));
    }
  }
}

Json decomposition_with_matrix(const DualDecomposition& dd) {
  Json out = decomposition_json(dd);
  out["assembled"] = matrix_json(assemble(dd));
  return out;
}

Json refutation_json(const GRefutation& r) {
  Json out;
  out["refuted"] = r.refuted;
  if (r.refuted) {
    out["row"] = r.row + 1;
    out["col"] = r.col + 1;
    out["required"] = scalar_json(r.required);
    out["derivable"] = scalar_json(r.derivable);
  }
  out["trace"] = r.trace;
  return out;
}

Json certificate_json(const ImmobileCertificate& cert) {
  Json out;
  out["complete"] = cert.complete();
  out["zeros"] = Json::array();
  for (std::size_t j = 0; j < cert.zeros.size(); ++j) {
    const auto& z = cert.zeros[j];
    out["zeros"].push_back({{"tau", simplex_json(z.tau)},
                            {"status", to_string(z.status)},
                            {"m_set", index_set_json(cert.m_sets[j])}});
  }
  out["rows"] = Json::array();
  for (const auto& r : cert.rows) {
    out["rows"].push_back({{"zero", r.zero + 1}, {"row", r.row + 1}, {"status", to_string(r.status)}});
  }
  out["samples"] = Json::array();
  for (const auto& x : cert.samples) out["samples"].push_back(vector_json(x));
  out["cuts"] = cert.cuts;
  out["lp_solves"] = cert.lp_solves;
  return out;
}

void record_immobile_checks(Certificate& c, const ImmobileCertificate& cert) {
  for (const auto& x : cert.samples) {
    const Json extra{{"x", vector_json(x)}, {"matrix", "map"}};
    for (const auto& z : cert.zeros) {
      if (z.status == CertStatus::Certified) c.record_quad("map", z.tau, Scalar(0), extra);
    }
  }
}

Json solve_json(const SolveResult& r) {
  Json out;
  out["status"] = to_string(r.status);
  if (r.status == SolveStatus::Optimal || r.status == SolveStatus::RefinementCapExceeded) {
    out["x"] = vector_json(r.x);
    out["value"] = scalar_json(r.value);
  }
  out["rounds"] = r.rounds;
  out["cuts"] = Json::array();
  for (const auto& [t, v] : r.cuts) out["cuts"].push_back({{"t", simplex_json(t)}, {"violation", scalar_json(v)}});
  out["oracle_copositive"] = r.oracle_copositive;
  return out;
}

}  // namespace

Limits Options::limits() const {
  Limits l;
  l.max_exhaustive_order = max_p;
  return l;
}

Json Options::to_json() const { return {{"grid", grid}, {"seed", seed}, {"max_p", max_p}}; }

Certificate cmd_check_cop(const ProblemFile& problem, const Options& options) {
  require_kind(problem, {ProblemKind::Matrix}, "check-cop");
  Certificate c = start("check-cop", problem, options);
  const auto& a = *problem.matrix;
  const auto qp = min_quad_over_simplex(a, options.limits());
  const bool cop = qp.min_value >= 0;
  c.outputs["copositive"] = cop;
  c.outputs["min_value"] = scalar_json(qp.min_value);
  c.outputs["minimizers"] = Json::array();
  for (const auto& t : qp.minimizers) c.outputs["minimizers"].push_back(simplex_json(t));
  c.outputs["supports_examined"] = qp.supports_examined;
  c.record_min("input", qp.min_value);
  for (const auto& t : qp.minimizers) c.record_quad("input", t, quad_form(a, t));
  if (cop) {
    const auto z = minimal_zeros_of_matrix(a, options.limits());
    c.outputs["minimal_zeros"] = Json::array();
    for (const auto& t : z) c.outputs["minimal_zeros"].push_back(simplex_json(t));
    c.add("result", "copositive, min " + to_display(qp.min_value) + ", " + std::to_string(z.size()) + " minimal zeros");
  } else {
    const auto& w = qp.minimizers.front();
    c.outputs["witness"] = simplex_json(w);
    c.add("result", "not copositive, min " + to_display(qp.min_value));
    c.add("witness", w.to_string());
    c.exit_code = 2;
  }
  return c;
}

Certificate cmd_zeros(const ProblemFile& problem, const Options& options) {
  require_kind(problem, {ProblemKind::Matrix, ProblemKind::MatrixSet}, "zeros");
  Certificate c = start("zeros", problem, options);
  const auto gens = generators_of(problem);
  if (reject_non_copositive(c, gens, options.limits())) return c;
  const MatrixSet q(matrices_only(gens), options.limits());
  const auto pieces = zero_set(q);
  c.outputs["pieces"] = Json::array();
  for (const auto& piece : pieces) {
    c.outputs["pieces"].push_back({{"support", index_set_json(piece.support)},
                                   {"point", simplex_json(piece.point)},
                                   {"degrees_of_freedom", piece.degrees_of_freedom}});
    for (const auto& [a, ref] : gens) c.record_quad(ref, piece.point, quad_form(a, piece.point));
  }
  c.outputs["slater"] = pieces.empty();
  c.add("pieces", std::to_string(pieces.size()));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    c.add("piece." + std::to_string(i + 1), pieces[i].support.to_string() + " " + pieces[i].point.to_string() + " dof " +
                                                std::to_string(pieces[i].degrees_of_freedom));
  }
  return c;
}

Certificate cmd_minimal_zeros(const ProblemFile& problem, const Options& options) {
  require_kind(problem, {ProblemKind::Matrix, ProblemKind::MatrixSet}, "minimal-zeros");
  Certificate c = start("minimal-zeros", problem, options);
  const auto gens = generators_of(problem);
  if (reject_non_copositive(c, gens, options.limits())) return c;
  const MatrixSet q(matrices_only(gens), options.limits());
  const auto cat = zero_catalog(q);
  c.outputs["minimal_zeros"] = zeros_json(cat.minimal_zeros, cat.m_sets);
  record_face_checks(c, gens, cat.minimal_zeros, cat.m_sets);
  c.add("minimal_zeros", std::to_string(cat.minimal_zeros.size()));
  for (std::size_t j = 0; j < cat.minimal_zeros.size(); ++j) {
    c.add("zero." + std::to_string(j + 1), cat.minimal_zeros[j].to_string() + " M=" + cat.m_sets[j].to_string());
  }
  return c;
}

Certificate cmd_face(const ProblemFile& problem, const Options& options) {
  Certificate c = start("face", problem, options);
  if (problem.kind == ProblemKind::FaceSpec) {
    const FaceData f = canonicalize_face(*problem.face, options.limits());
    c.outputs["face"] = face_json(f);
    c.outputs["exposed"] = is_exposed(*problem.face);
    const SymMatrix g = generic_face_element(*problem.face);
    c.outputs["generic_element"] = matrix_json(g);
    record_face_checks(c, {{g, "outputs/generic_element"}}, f.minimal_zeros, f.m_sets);
    c.add("exposed", is_exposed(*problem.face) ? "true" : "false");
    report_face(c, f);
    return c;
  }
  require_kind(problem, {ProblemKind::Matrix, ProblemKind::MatrixSet}, "face");
  const auto gens = generators_of(problem);
  if (reject_non_copositive(c, gens, options.limits())) return c;
  const MatrixSet q(matrices_only(gens), options.limits());
  const FaceData f = minimal_face(q);
  c.outputs["face"] = face_json(f);
  const auto mae = minimally_active_element(q);
  c.outputs["minimally_active_element"] = matrix_json(mae.element);
  c.outputs["slater"] = mae.slater;
  record_face_checks(c, {{mae.element, "outputs/minimally_active_element"}}, f.minimal_zeros, f.m_sets);
  c.add("slater", mae.slater ? "true" : "false");
  report_face(c, f);
  return c;
}

Certificate cmd_dual(const ProblemFile& problem, const Options& options,
                     const std::optional<DualDecomposition>& decomposition) {
  require_kind(problem, {ProblemKind::FaceSpec}, "dual");
  Certificate c = start("dual", problem, options);
  const auto& face = *problem.face;
  DualDecomposition dd;
  if (decomposition) {
    dd = *decomposition;
    dd.context = DualContext{face, std::nullopt};
  } else if (problem.decomposition) {
    dd = *problem.decomposition;
  } else {
    Rng rng(options.seed);
    dd = sample_tilde_decomposition(face, rng);
  }
  if (dd.flavor == DualFlavor::GBar) dd.context.data = canonicalize_face(face, options.limits());
  if (auto err = validate(dd)) throw InvariantError("decomposition violates: " + *err);
  const SymMatrix d = assemble(dd);
  c.outputs["decomposition"] = decomposition_with_matrix(dd);
  c.add("flavor", to_string(dd.flavor));
  c.add("assembled", d.to_string());
  if (dd.flavor == DualFlavor::GTilde) {
    const auto promoted = promote_tilde_to_bar(dd, options.limits());
    c.outputs["promoted"] = decomposition_with_matrix(promoted);
    c.add("promoted_rank_one_terms", std::to_string(promoted.rank_one_terms.size()));
    c.add("promotion", "G-bar element with the same matrix");
    c.record_inner("outputs/promoted/assembled", "outputs/decomposition/assembled", inner(assemble(promoted), d));
  }
  const auto refutation = refute_g_membership(d, face);
  c.outputs["g_refutation"] = refutation_json(refutation);
  c.add("g_membership", refutation.refuted ? "refuted" : "not refuted");
  for (std::size_t i = 0; i < refutation.trace.size(); ++i) c.add("trace." + std::to_string(i + 1), refutation.trace[i]);
  if (refutation.refuted) {
    const int b = refutation.pivot;
    const int a = refutation.row == b ? refutation.col : refutation.row;
    const auto eb = SimplexVector::vertex(face.order(), b);
    c.record_quad("outputs/decomposition/assembled", eb, Scalar(0));
    c.record_row("outputs/decomposition/assembled", eb, a, refutation.required);
  }
  if (problem.matrix) {
    if (!face_membership(*problem.matrix, face, options.limits())) {
      c.outputs["pairing"] = nullptr;
      c.add("pairing", "matrix is not in the face");
      c.exit_code = 2;
      return c;
    }
    const Scalar value = inner(*problem.matrix, d);
    c.outputs["pairing"] = scalar_json(value);
    c.record_inner("input", "outputs/decomposition/assembled", value);
    c.add("pairing", to_display(value));
    if (value < 0) c.exit_code = 2;
  }
  return c;
}

Certificate cmd_regularize(const ProblemFile& problem, const Options& options) {
  require_kind(problem, {ProblemKind::LinCop}, "regularize");
  Certificate c = start("regularize", problem, options);
  const auto& prob = *problem.lincop;
  const auto cert = find_immobile_zeros(prob, {options.budget, options.grid, options.limits()});
  c.outputs["immobile"] = certificate_json(cert);
  record_immobile_checks(c, cert);
  c.add("immobile_zeros", std::to_string(cert.zeros.size()));
  for (std::size_t j = 0; j < cert.zeros.size(); ++j) {
    c.add("zero." + std::to_string(j + 1), cert.zeros[j].tau.to_string() + " M=" + cert.m_sets[j].to_string() + " " +
                                               to_string(cert.zeros[j].status));
  }
  c.add("complete", cert.complete() ? "true" : "false");
  if (!cert.complete()) {
    c.exit_code = 2;
    return c;
  }
  const auto reg = regularize(prob, cert, options.grid, options.limits());
  Json r;
  r["anchors"] = zeros_json(reg.anchors, reg.m_sets);
  r["sigma"] = reg.sigma ? scalar_json(*reg.sigma) : Json(nullptr);
  r["grid_denominator"] = reg.grid_denominator;
  r["omega_points"] = reg.omega_points.size();
  c.outputs["regularized"] = r;
  c.outputs["face"] = face_json(minimal_face_of_problem(prob, cert));
  c.add("sigma", reg.sigma ? to_display(*reg.sigma) : "none");
  c.add("omega_points", std::to_string(reg.omega_points.size()));
  return c;
}

Certificate cmd_solve(const ProblemFile& problem, const Options& options) {
  require_kind(problem, {ProblemKind::LinCop}, "solve");
  Certificate c = start("solve", problem, options);
  const auto& prob = *problem.lincop;
  const auto original = solve_discretized(unregularized(prob, options.grid, options.limits()), 64, options.limits());
  c.outputs["original"] = solve_json(original);
  const auto cert = find_immobile_zeros(prob, {options.budget, options.grid, options.limits()});
  c.outputs["immobile"] = certificate_json(cert);
  c.add("original_status", to_string(original.status));
  if (original.status == SolveStatus::Optimal) {
    const Scalar m = min_quad_over_simplex(prob.evaluate(original.x), options.limits()).min_value;
    c.record_min("map", m, {{"x", vector_json(original.x)}, {"matrix", "map"}});
    c.add("original_value", to_display(original.value));
  }
  if (cert.complete()) {
    const auto reg = regularize(prob, cert, options.grid, options.limits());
    const auto solved = solve_discretized(reg, 64, options.limits());
    c.outputs["regularized"] = solve_json(solved);
    c.add("regularized_status", to_string(solved.status));
    if (solved.status == SolveStatus::Optimal) {
      const Scalar m = min_quad_over_simplex(prob.evaluate(solved.x), options.limits()).min_value;
      c.record_min("map", m, {{"x", vector_json(solved.x)}, {"matrix", "map"}});
      c.add("regularized_value", to_display(solved.value));
      if (original.status == SolveStatus::Optimal) {
        c.outputs["values_agree"] = solved.value == original.value;
        c.add("values_agree", solved.value == original.value ? "true" : "false");
      }
    }
  } else {
    c.outputs["regularized"] = nullptr;
    c.add("regularized_status", "skipped (immobile-zero certificate incomplete)");
  }
  if (original.status == SolveStatus::Infeasible || original.status == SolveStatus::Unbounded) c.exit_code = 2;
  if (original.status == SolveStatus::RefinementCapExceeded) throw Error("refinement cap exceeded");
  return c;
}

Certificate cmd_verify(const ProblemFile& problem, const Json& certificate, const Options& options) {
  Certificate c = start("verify", problem, options);
  const auto res = replay_transcript(problem, certificate, options.limits());
  c.outputs["checked"] = res.checked;
  c.outputs["mismatches"] = res.mismatches;
  c.add("checked", std::to_string(res.checked));
  c.add("mismatches", std::to_string(res.mismatches.size()));
  for (std::size_t i = 0; i < res.mismatches.size(); ++i) c.add("mismatch." + std::to_string(i + 1), res.mismatches[i]);
  if (!res.ok()) c.exit_code = 2;
  return c;
}

Certificate run_command(const std::string& name, const ProblemFile& problem, const Options& options) {
  if (name == "check-cop") return cmd_check_cop(problem, options);
  if (name == "zeros") return cmd_zeros(problem, options);
  if (name == "minimal-zeros") return cmd_minimal_zeros(problem, options);
  if (name == "face") return cmd_face(problem, options);
  if (name == "dual") return cmd_dual(problem, options);
  if (name == "regularize") return cmd_regularize(problem, options);
  if (name == "solve") return cmd_solve(problem, options);
  throw Error("unknown command " + name);
}

}  // namespace copfaces::cli
