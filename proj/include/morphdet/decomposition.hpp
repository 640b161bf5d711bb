#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "morphdet/rep.hpp"

namespace morphdet {

/// A finite-dimensional associative algebra given by left multiplication
/// matrices of its basis elements.
struct FinDimAlgebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<Mat> left_mult;  // left_mult[i] * y = coords(b_i y)
  Mat unit;                    // dim x 1
  /// Optional faithful matrix representation, one matrix per basis element;
  /// the radical is computed from it when present.
  std::vector<Mat> action;

  Mat left_matrix(const Mat& x) const;
  Mat product(const Mat& x, const Mat& y) const { return left_matrix(x) * y; }
};

/// End(m) with its basis realized as endomorphisms of m.
struct EndAlgebra {
  HomSpace space;
  FinDimAlgebra algebra;
};

EndAlgebra end_algebra(const Rep& m);
/// Radical via the trace form. Needs characteristic 0 or p > dim.
Subspace algebra_radical(const FinDimAlgebra& e);

struct FittingSplit {
  SubResult kernel_part;  // ker phi^n
  SubResult image_part;   // im phi^n
};
/// Both parts, even when one of them is zero.
FittingSplit fitting_decomposition(const RepMorphism& phi);
/// The split when both parts are nonzero.
std::optional<FittingSplit> fitting_split(const RepMorphism& phi);

struct Decomposition {
  Rep module;
  std::vector<Rep> parts;              // indecomposable, sorted
  std::vector<std::size_t> class_of;   // parts[i] lies in class class_of[i]
  std::vector<Rep> summands;           // one representative per iso class
  std::vector<std::size_t> multiplicity;
  std::vector<RepMorphism> inclusions;   // parts[i] -> module
  std::vector<RepMorphism> projections;  // module -> parts[i]
  RepMorphism to_sum;    // module -> direct sum of parts
  RepMorphism from_sum;  // its inverse
};

Decomposition krull_schmidt(const Rep& m, std::uint64_t seed = 0);
bool is_indecomposable(const Rep& m, std::uint64_t seed = 0);

/// Exact for indecomposable m and n: some g f outside rad End(m).
bool isomorphic_indecomposables(const Rep& m, const Rep& n);
std::optional<RepMorphism> iso_between_indecomposables(const Rep& m, const Rep& n);
bool is_isomorphic(const Rep& m, const Rep& n, std::uint64_t seed = 0);
std::optional<RepMorphism> find_isomorphism(const Rep& m, const Rep& n, std::uint64_t seed = 0);

/// m is a direct summand of some c^k.
bool in_add(const Rep& m, const Rep& c);
/// Retraction r with r f = id, if f is split mono.
std::optional<RepMorphism> split_mono_check(const RepMorphism& f);

struct RightMinimalVersion {
  RepMorphism alpha1;      // alpha restricted to x1
  Rep x0, x1;              // X = X0 + X1, X0 inside the kernel
  RepMorphism incl0, incl1;
  RepMorphism proj0, proj1;
};
RightMinimalVersion right_minimal_version(const RepMorphism& alpha);
Rep intrinsic_kernel(const RepMorphism& alpha);

/// "S(x)", "P(x)", "I(x)", "R(b+2c)" or "M[dims]"; sums joined by " + ".
std::string recognized_name(const Rep& m, std::uint64_t seed = 0);
std::string dims_string(const std::vector<std::size_t>& dims);

}  // namespace morphdet
