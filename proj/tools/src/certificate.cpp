#include "copfaces_cli/certificate.hpp"

#include <cstdio>

namespace copfaces::cli {

std::string inputs_digest(const ProblemFile& problem) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : serialize(problem)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Json entry(const char* check, const std::string& matrix_ref, const Scalar& value, const Json& extra) {
  Json e = extra.is_object() ? extra : Json::object();
  e["check"] = check;
  if (!e.contains("matrix")) e["matrix"] = matrix_ref;
  e["value"] = scalar_json(value);
  return e;
}

SymMatrix resolve(const ProblemFile& problem, const Json& outputs, const Json& e) {
  const auto ref = e.at("matrix").get<std::string>();
  if (ref == "input") {
    if (!problem.matrix) throw Error("transcript refers to an input matrix the problem does not have");
    return *problem.matrix;
  }
  if (ref.rfind("generator/", 0) == 0) {
    const auto i = static_cast<std::size_t>(std::stoul(ref.substr(10)));
    if (i >= problem.generators.size()) throw Error("transcript refers to a missing generator");
    return problem.generators[i];
  }
  if (ref.rfind("outputs/", 0) == 0) {
    const Json* node = &outputs;
    std::size_t pos = 8;
    while (pos <= ref.size()) {
      const auto next = ref.find('/', pos);
      const auto key = ref.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      node = &node->at(key);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return matrix_from(*node, ref);
  }
  if (ref == "map") {
    if (!problem.lincop) throw Error("transcript refers to A(x) but the problem is not a lincop");
    return problem.lincop->evaluate(vector_from(e.at("x"), "x"));
  }
  throw Error("unknown matrix reference " + ref);
}

}  // namespace

void Certificate::record_quad(const std::string& matrix_ref, const SimplexVector& t, const Scalar& value,
                              const Json& extra) {
  Json e = entry("quad_form", matrix_ref, value, extra);
  e["t"] = simplex_json(t);
  transcript.push_back(std::move(e));
}

void Certificate::record_row(const std::string& matrix_ref, const SimplexVector& t, int k, const Scalar& value,
                             const Json& extra) {
  Json e = entry("matvec_row", matrix_ref, value, extra);
  e["t"] = simplex_json(t);
  e["k"] = k + 1;
  transcript.push_back(std::move(e));
}

void Certificate::record_min(const std::string& matrix_ref, const Scalar& value, const Json& extra) {
  transcript.push_back(entry("min_quad", matrix_ref, value, extra));
}

void Certificate::record_inner(const std::string& matrix_ref, const std::string& other_ref, const Scalar& value) {
  Json e = entry("inner", matrix_ref, value, {});
  e["other"] = other_ref;
  transcript.push_back(std::move(e));
}

Json Certificate::to_json() const {
  Json out;
  out["operation"] = operation;
  out["inputs_digest"] = digest;
  out["parameters"] = parameters;
  out["outputs"] = outputs;
  out["transcript"] = transcript;
  out["exit_code"] = exit_code;
  return out;
}

std::string Certificate::to_text() const {
  std::string out = "operation: " + operation + "\n";
  out += "inputs_digest: " + digest + "\n";
  for (const auto& [k, v] : report) out += k + ": " + v + "\n";
  out += "transcript_checks: " + std::to_string(transcript.size()) + "\n";
  return out;
}

ReplayResult replay_transcript(const ProblemFile& problem, const Json& certificate, const Limits& limits) {
  ReplayResult res;
  const auto expected = inputs_digest(problem);
  if (certificate.at("inputs_digest").get<std::string>() != expected) {
    res.mismatches.push_back("inputs digest differs: certificate was produced for another input");
    return res;
  }
  const Json& outputs = certificate.at("outputs");
  const Json& transcript = certificate.at("transcript");
  for (std::size_t i = 0; i < transcript.size(); ++i) {
    const Json& e = transcript[i];
    const auto check = e.at("check").get<std::string>();
    const Scalar recorded = scalar_from(e.at("value"), "transcript/" + std::to_string(i) + "/value");
    const SymMatrix m = resolve(problem, outputs, e);
    Scalar actual;
    if (check == "quad_form") {
      actual = quad_form(m, simplex_from(e.at("t"), "t"));
    } else if (check == "matvec_row") {
      actual = matvec_row(m, simplex_from(e.at("t"), "t"), e.at("k").get<int>() - 1);
    } else if (check == "min_quad") {
      actual = min_quad_over_simplex(m, limits).min_value;
    } else if (check == "inner") {
      Json other = e;
      other["matrix"] = e.at("other");
      actual = inner(m, resolve(problem, outputs, other));
    } else {
      res.mismatches.push_back("entry " + std::to_string(i) + ": unknown check " + check);
      continue;
    }
    ++res.checked;
    if (actual != recorded) {
      res.mismatches.push_back("entry " + std::to_string(i) + " (" + check + "): recorded " + to_string(recorded) +
                               ", recomputed " + to_string(actual));
    }
  }
  return res;
}

}  // namespace copfaces::cli
