#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <copfaces/copfaces.hpp>

#include "json.hpp"

namespace copfaces::cli {

using Json = nlohmann::json;
using copfaces::to_string;

enum class ProblemKind { Matrix, MatrixSet, FaceSpec, LinCop };

const char* to_string(ProblemKind kind);

/// Parsed problem document. Exactly the members required by `kind` are set;
/// face_spec files may also carry a decomposition and a test matrix.
struct ProblemFile {
  int p = 0;
  ProblemKind kind = ProblemKind::Matrix;
  std::optional<SymMatrix> matrix;
  std::vector<SymMatrix> generators;
  std::optional<copfaces::FaceSpec> face;
  std::optional<LinearCopProblem> lincop;
  std::optional<DualDecomposition> decomposition;
};

/// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

/// Rejects number tokens with a fraction or exponent, reporting line:column.
void reject_float_tokens(std::string_view text);

/// Syntax check plus float rejection; errors carry line:column.
Json parse_json_text(std::string_view text);

ProblemFile parse_problem(std::string_view text);
ProblemFile parse_problem_json(const Json& doc);
ProblemFile read_problem_file(const std::string& path);

Json to_json(const ProblemFile& problem);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const ProblemFile& problem);
std::string dump_canonical(const Json& doc);

Json scalar_json(const Scalar& s);
Json vector_json(const Vector& v);
Json simplex_json(const SimplexVector& t);
Json matrix_json(const SymMatrix& m);
Json index_set_json(const IndexSet& s);
Json decomposition_json(const DualDecomposition& dd);

Scalar scalar_from(const Json& j, const std::string& path);
Vector vector_from(const Json& j, const std::string& path);
SimplexVector simplex_from(const Json& j, const std::string& path);
SymMatrix matrix_from(const Json& j, const std::string& path);
IndexSet index_set_from(const Json& j, int p, const std::string& path);
DualDecomposition decomposition_from(const Json& j, const copfaces::FaceSpec& context, const std::string& path);

}  // namespace copfaces::cli
