#pragma once

#include "morphdet/rep.hpp"

namespace morphdet {

/// A map between sums of indecomposable projectives written as a matrix of
/// algebra elements: block (i, j) is the path combination u with
/// P(domain[j]) -> P(codomain[i]), e -> u. Coefficients are over
/// basis_between(codomain[i], domain[j]).
struct PathMatrix {
  AlgebraPtr algebra;
  std::vector<Vertex> domain, codomain;
  std::vector<std::vector<std::vector<Scalar>>> blocks;  // [i][j]
};

PathMatrix extract_path_matrix(const RepMorphism& f, const std::vector<Vertex>& domain,
                               const std::vector<Vertex>& codomain);
RepMorphism to_morphism(const PathMatrix& pm);
/// Hom(-, algebra): transposed blocks with reversed paths, over the opposite.
PathMatrix reverse(const PathMatrix& pm);

struct ProjPresentation {
  Rep base;
  ProjectiveSum p1, p0;
  RepMorphism map;    // p1 -> p0
  RepMorphism cover;  // p0 -> base
};
struct InjCopresentation {
  Rep base;
  InjectiveSum i0, i1;
  RepMorphism embed;  // base -> i0
  RepMorphism map;    // i0 -> i1
};

ProjPresentation minimal_projective_presentation(const Rep& m);
InjCopresentation minimal_injective_copresentation(const Rep& m);
/// k-th syzygy (k >= 0; k = 0 returns m).
Rep syzygy(const Rep& m, int k);
/// Projective dimension, or -1 if it exceeds `bound`.
int projective_dimension(const Rep& m, int bound = 8);

/// nu on a map between projective sums; the result maps I(domain) -> I(codomain).
RepMorphism nakayama(const RepMorphism& f, const std::vector<Vertex>& domain, const std::vector<Vertex>& codomain);
/// nu^- on a map between injective sums; the result maps P(domain) -> P(codomain).
RepMorphism nakayama_inverse(const RepMorphism& g, const std::vector<Vertex>& domain,
                             const std::vector<Vertex>& codomain);

/// Over the opposite algebra.
Rep transpose(const Rep& m);
Rep tau(const Rep& m);
Rep tau_minus(const Rep& m);

/// Ext^degree(m, n) computed as Ext^1(syzygy^(degree-1) m, n): the quotient
/// of Hom(omega, n) by maps extending to the projective cover.
struct ExtResult {
  int degree = 1;
  std::size_t dimension = 0;
  Rep source, target;  // (syzygy of) m, and n
  ProjectiveCover cover;
  SubResult omega;  // omega.map: omega -> cover
  HomSpace cocycles;
  Subspace coboundaries;             // in cocycle coordinates
  std::vector<RepMorphism> classes;  // representatives of a quotient basis

  Mat class_coordinates(const RepMorphism& cocycle) const;
  RepMorphism cocycle(const Mat& class_coords) const;
};

ExtResult ext(const Rep& m, const Rep& n, int degree);
/// 0 -> n -> E -> m -> 0 for a degree-1 class (pushout along the cocycle).
Ses realize_ext1(const ExtResult& e, const Mat& class_coords);

}  // namespace morphdet
