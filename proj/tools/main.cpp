#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "copfaces_cli/commands.hpp"

namespace {

using copfaces::cli::Certificate;
using copfaces::cli::Json;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw copfaces::Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const Certificate& c, const std::string& format, const std::string& out_path) {
  const std::string text = format == "text" ? c.to_text() : copfaces::cli::dump_canonical(c.to_json());
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw copfaces::Error("cannot write " + out_path);
    out << text;
  }
  return c.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact faces, zeros and regularization for the copositive cone"};
  app.require_subcommand(1);
  app.fallthrough();

  copfaces::cli::Options options;
  std::string out_path;
  std::string format = "json";
  app.add_option("--grid", options.grid, "Simplex grid denominator")->check(CLI::Range(1, 4096));
  app.add_option("--seed", options.seed, "Seed for random sampling");
  app.add_option("--max-p", options.max_p, "Largest order for exhaustive routines")->check(CLI::Range(1, 30));
  app.add_option("--out", out_path, "Write the certificate here instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string problem_path;
  std::string certificate_path;
  std::string decomposition_path;
  const std::vector<std::pair<const char*, const char*>> simple = {
      {"check-cop", "Decide copositivity of a matrix"},
      {"zeros", "Zero set of a matrix or matrix set, by support pieces"},
      {"minimal-zeros", "Minimal zeros and their M-sets"},
      {"face", "Minimal face of a matrix or matrix set, or canonical data of a face spec"},
      {"regularize", "Certify immobile zeros of a linear copositive program"},
      {"solve", "Solve a linear copositive program, original and regularized"},
  };
  for (const auto& [name, help] : simple) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("problem", problem_path, "Problem file (JSON)")->required();
  }
  auto* dual = app.add_subcommand("dual", "Validate, assemble and promote a dual decomposition over a face spec");
  dual->add_option("problem", problem_path, "Face spec file (JSON)")->required();
  dual->add_option("--decomposition", decomposition_path, "Decomposition file (JSON), overrides the one in the problem");
  auto* verify = app.add_subcommand("verify", "Replay the transcript of a certificate against its inputs");
  verify->add_option("problem", problem_path, "Problem file (JSON)")->required();
  verify->add_option("certificate", certificate_path, "Certificate file (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const auto problem = copfaces::cli::read_problem_file(problem_path);
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "verify") {
      const Json cert = copfaces::cli::parse_json_text(read_text(certificate_path));
      return emit(copfaces::cli::cmd_verify(problem, cert, options), format, out_path);
    }
    if (name == "dual" && !decomposition_path.empty()) {
      if (problem.kind != copfaces::cli::ProblemKind::FaceSpec) throw copfaces::InvariantError("dual needs a face_spec problem");
      const Json doc = copfaces::cli::parse_json_text(read_text(decomposition_path));
      const auto dd = copfaces::cli::decomposition_from(doc, *problem.face, "");
      return emit(copfaces::cli::cmd_dual(problem, options, dd), format, out_path);
    }
    return emit(copfaces::cli::run_command(name, problem, options), format, out_path);
  } catch (const copfaces::NotCopositiveError& e) {
    std::cerr << "not copositive: " << e.what() << "\n";
    return 2;
  } catch (const copfaces::InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
