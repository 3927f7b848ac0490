#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <copfaces/copfaces.hpp>

namespace copfaces::testing {

SymMatrix horn();
SymMatrix ray2();  ///< [[1,-1],[-1,1]]
SymMatrix worked_dstar();  ///< [[0,1],[1,0]]

/// Positive-support pattern and weights in 1..4, normalized.
SimplexVector random_simplex_point(Rng& rng, int p, int max_support);

/// Copositive p x p matrix as PSD + nonnegative. With `planted`, the PSD part
/// is orthogonal to it and the nonnegative part vanishes on its support block,
/// so planted^T D planted = 0.
SymMatrix random_copositive(Rng& rng, int p, const SimplexVector* planted);

/// Finitely generated Q with 1..4 generators, p in [2, max_p]. Roughly a third
/// share a planted zero, a third plant different zeros per generator, and a
/// third plant none.
std::vector<SymMatrix> random_matrix_set(Rng& rng, int max_p);

/// Symmetric integer matrix with entries in [-range, range] over den.
SymMatrix random_symmetric(Rng& rng, int p, int range, int den);

/// Deterministic corpus of finitely generated sets (p <= 4).
std::vector<std::vector<SymMatrix>> matrix_set_corpus(std::uint64_t seed, std::size_t count);

struct NamedFace {
  std::string name;
  FaceSpec spec;
};

/// Ten fixture faces of order <= 4, including the nested-support case.
std::vector<NamedFace> face_corpus();

struct NamedLinCop {
  std::string name;
  LinearCopProblem problem;
  Scalar optimum;  ///< frozen oracle value
};

/// The five linear copositive fixtures (p <= 3, n <= 3).
std::vector<NamedLinCop> lincop_fixtures();

SimplexVector sv(std::initializer_list<const char*> coords);

}  // namespace copfaces::testing

namespace copfaces {

// gtest printers
inline void PrintTo(const SymMatrix& m, std::ostream* os) { *os << m.to_string(); }
inline void PrintTo(const SimplexVector& t, std::ostream* os) { *os << t.to_string(); }

}  // namespace copfaces
