#include "copfaces_cli/problem_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace copfaces::cli {

namespace {

[[noreturn]] void fail_at(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail_at(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail_at(path, std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail_at(path, "expected an array");
  return j;
}

int int_from(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail_at(path, "expected an integer");
  return j.get<int>();
}

ProblemKind kind_from(const Json& j, const std::string& path) {
  if (!j.is_string()) fail_at(path, "expected a string");
  const auto s = j.get<std::string>();
  if (s == "matrix") return ProblemKind::Matrix;
  if (s == "matrix_set") return ProblemKind::MatrixSet;
  if (s == "face_spec") return ProblemKind::FaceSpec;
  if (s == "lincop") return ProblemKind::LinCop;
  fail_at(path, "unknown kind \"" + s + "\"");
}

void require_order(const SymMatrix& m, int p, const std::string& path) {
  if (m.order() != p) fail_at(path, "matrix of order " + std::to_string(m.order()) + ", expected p = " + std::to_string(p));
}

std::vector<SymMatrix> matrices_from(const Json& j, int p, const std::string& path) {
  std::vector<SymMatrix> out;
  const auto& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string sub = path + "/" + std::to_string(i);
    out.push_back(matrix_from(arr[i], sub));
    require_order(out.back(), p, sub);
  }
  return out;
}

}  // namespace

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Matrix: return "matrix";
    case ProblemKind::MatrixSet: return "matrix_set";
    case ProblemKind::FaceSpec: return "face_spec";
    case ProblemKind::LinCop: return "lincop";
  }
  return "unknown";
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void reject_float_tokens(std::string_view text) {
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') {
      in_string = true;
      continue;
    }
    if (c == '-' || (c >= '0' && c <= '9')) {
      const std::size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '-' || text[i] == '+' ||
                                 text[i] == '.' || text[i] == 'e' || text[i] == 'E')) {
        ++i;
      }
      const auto token = text.substr(start, i - start);
      if (token.find_first_of(".eE") != std::string_view::npos) {
        const auto [line, col] = line_column(text, start);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": floating-point number " +
                         std::string(token) + " is not allowed; write exact rationals as \"a/b\" strings");
      }
      --i;
    }
  }
}

Json parse_json_text(std::string_view text) {
  try {
    Json doc = Json::parse(text.begin(), text.end());
    reject_float_tokens(text);
    return doc;
  } catch (const Json::parse_error& e) {
    // byte is one past the offending character.
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
  }
}

Json scalar_json(const Scalar& s) { return to_string(s); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

Json simplex_json(const SimplexVector& t) { return vector_json(t.coords()); }

Json matrix_json(const SymMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m.rows()) out.push_back(vector_json(row));
  return out;
}

Json index_set_json(const IndexSet& s) { return s.one_based(); }

Scalar scalar_from(const Json& j, const std::string& path) {
  if (j.is_number_float()) fail_at(path, "floating-point numbers are not allowed");
  if (!j.is_string()) fail_at(path, "expected a rational string \"a/b\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    fail_at(path, e.what());
  }
}

Vector vector_from(const Json& j, const std::string& path) {
  Vector out;
  const auto& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(scalar_from(arr[i], path + "/" + std::to_string(i)));
  return out;
}

SimplexVector simplex_from(const Json& j, const std::string& path) {
  try {
    return SimplexVector(vector_from(j, path));
  } catch (const InvariantError& e) {
    fail_at(path, e.what());
  }
}

SymMatrix matrix_from(const Json& j, const std::string& path) {
  std::vector<Vector> rows;
  const auto& arr = array_at(j, path);
  if (arr.empty()) fail_at(path, "matrix needs at least one row");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    rows.push_back(vector_from(arr[i], path + "/" + std::to_string(i)));
    if (rows.back().size() != arr.size()) fail_at(path + "/" + std::to_string(i), "row length differs from the row count");
  }
  try {
    return SymMatrix::from_rows(rows);
  } catch (const Error& e) {
    fail_at(path, e.what());
  }
}

IndexSet index_set_from(const Json& j, int p, const std::string& path) {
  std::vector<int> members;
  const auto& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) members.push_back(int_from(arr[i], path + "/" + std::to_string(i)));
  try {
    return IndexSet::from_one_based(members, p);
  } catch (const Error& e) {
    fail_at(path, e.what());
  }
}

Json decomposition_json(const DualDecomposition& dd) {
  Json out;
  out["flavor"] = to_string(dd.flavor);
  out["rank_one_terms"] = Json::array();
  for (const auto& t : dd.rank_one_terms) out["rank_one_terms"].push_back({{"alpha", scalar_json(t.alpha)}, {"mu", simplex_json(t.mu)}});
  out["cross_terms"] = Json::array();
  for (const auto& c : dd.cross_terms) {
    out["cross_terms"].push_back({{"anchor", simplex_json(c.anchor)}, {"lambda", vector_json(c.lambda)}});
  }
  return out;
}

DualDecomposition decomposition_from(const Json& j, const copfaces::FaceSpec& context, const std::string& path) {
  DualDecomposition dd;
  const auto& flavor = member(j, "flavor", path);
  if (!flavor.is_string()) fail_at(path + "/flavor", "expected a string");
  try {
    dd.flavor = parse_dual_flavor(flavor.get<std::string>());
  } catch (const ParseError& e) {
    fail_at(path + "/flavor", e.what());
  }
  const auto& r1 = array_at(member(j, "rank_one_terms", path), path + "/rank_one_terms");
  for (std::size_t i = 0; i < r1.size(); ++i) {
    const std::string sub = path + "/rank_one_terms/" + std::to_string(i);
    dd.rank_one_terms.push_back({scalar_from(member(r1[i], "alpha", sub), sub + "/alpha"),
                                 simplex_from(member(r1[i], "mu", sub), sub + "/mu")});
  }
  const auto& ct = array_at(member(j, "cross_terms", path), path + "/cross_terms");
  for (std::size_t i = 0; i < ct.size(); ++i) {
    const std::string sub = path + "/cross_terms/" + std::to_string(i);
    dd.cross_terms.push_back({simplex_from(member(ct[i], "anchor", sub), sub + "/anchor"),
                              vector_from(member(ct[i], "lambda", sub), sub + "/lambda")});
  }
  dd.context = DualContext{context, std::nullopt};
  return dd;
}

ProblemFile parse_problem_json(const Json& doc) {
  ProblemFile out;
  out.p = int_from(member(doc, "p", ""), "/p");
  if (out.p < 1 || out.p > kMaxOrder) fail_at("/p", "order must be between 1 and " + std::to_string(kMaxOrder));
  out.kind = kind_from(member(doc, "kind", ""), "/kind");
  switch (out.kind) {
    case ProblemKind::Matrix: {
      out.matrix = matrix_from(member(doc, "matrix", ""), "/matrix");
      require_order(*out.matrix, out.p, "/matrix");
      break;
    }
    case ProblemKind::MatrixSet: {
      out.generators = matrices_from(member(doc, "generators", ""), out.p, "/generators");
      if (out.generators.empty()) fail_at("/generators", "matrix set needs at least one generator");
      break;
    }
    case ProblemKind::FaceSpec: {
      std::vector<SimplexVector> vectors;
      std::vector<IndexSet> masks;
      const auto& vs = array_at(member(doc, "vectors", ""), "/vectors");
      const auto& ms = array_at(member(doc, "masks", ""), "/masks");
      if (vs.size() != ms.size()) fail_at("/masks", "needs one mask per vector");
      for (std::size_t i = 0; i < vs.size(); ++i) {
        vectors.push_back(simplex_from(vs[i], "/vectors/" + std::to_string(i)));
        if (vectors.back().order() != out.p) fail_at("/vectors/" + std::to_string(i), "wrong length");
        masks.push_back(index_set_from(ms[i], out.p, "/masks/" + std::to_string(i)));
      }
      try {
        out.face.emplace(out.p, std::move(vectors), std::move(masks));
      } catch (const InvariantError& e) {
        fail_at("/masks", e.what());
      }
      if (doc.contains("decomposition")) out.decomposition = decomposition_from(doc["decomposition"], *out.face, "/decomposition");
      if (doc.contains("matrix")) {
        out.matrix = matrix_from(doc["matrix"], "/matrix");
        require_order(*out.matrix, out.p, "/matrix");
      }
      break;
    }
    case ProblemKind::LinCop: {
      const Vector c = vector_from(member(doc, "objective", ""), "/objective");
      auto maps = matrices_from(member(doc, "constraint_map", ""), out.p, "/constraint_map");
      try {
        out.lincop.emplace(c, std::move(maps));
      } catch (const Error& e) {
        fail_at("/constraint_map", e.what());
      }
      break;
    }
  }
  return out;
}

ProblemFile parse_problem(std::string_view text) { return parse_problem_json(parse_json_text(text)); }

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_problem(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json to_json(const ProblemFile& problem) {
  Json out;
  out["p"] = problem.p;
  out["kind"] = to_string(problem.kind);
  switch (problem.kind) {
    case ProblemKind::Matrix: out["matrix"] = matrix_json(*problem.matrix); break;
    case ProblemKind::MatrixSet: {
      out["generators"] = Json::array();
      for (const auto& g : problem.generators) out["generators"].push_back(matrix_json(g));
      break;
    }
    case ProblemKind::FaceSpec: {
      out["vectors"] = Json::array();
      out["masks"] = Json::array();
      for (std::size_t i = 0; i < problem.face->size(); ++i) {
        out["vectors"].push_back(simplex_json(problem.face->vectors()[i]));
        out["masks"].push_back(index_set_json(problem.face->masks()[i]));
      }
      if (problem.decomposition) out["decomposition"] = decomposition_json(*problem.decomposition);
      if (problem.matrix) out["matrix"] = matrix_json(*problem.matrix);
      break;
    }
    case ProblemKind::LinCop: {
      out["objective"] = vector_json(problem.lincop->objective());
      out["constraint_map"] = Json::array();
      for (const auto& a : problem.lincop->constraint_map()) out["constraint_map"].push_back(matrix_json(a));
      break;
    }
  }
  return out;
}

std::string dump_canonical(const Json& doc) { return doc.dump(2) + "\n"; }

std::string serialize(const ProblemFile& problem) { return dump_canonical(to_json(problem)); }

}  // namespace copfaces::cli
