#include "morphdet/ar.hpp"

namespace morphdet {

ArSequence ar_sequence(const Rep& n, std::uint64_t seed) {
  if (n.is_zero() || is_projective(n)) throw PreconditionError("ar_sequence: module is zero or projective");
  if (!is_indecomposable(n, seed)) throw PreconditionError("ar_sequence: module is decomposable");
  const FieldSpec f = n.field();
  Rep t = tau(n);
  ExtResult e = ext(n, t, 1);
  if (e.dimension == 0) throw std::logic_error("ar_sequence: Ext^1(n, tau n) vanishes");
  EndAlgebra en = end_algebra(n);
  Mat rad = algebra_radical(en.algebra).basis_columns();
  const RepMorphism& pi = e.cover.epi;
  Subspace soc = Subspace::full(f, e.dimension);
  for (std::size_t k = 0; k < rad.cols(); ++k) {
    RepMorphism r = en.space.element(rad.col(k));
    auto lift = factors_through(pi, r * pi);
    if (!lift) throw std::logic_error("ar_sequence: endomorphism does not lift to the cover");
    RepMorphism r_omega = restrict_codomain(e.omega, *lift * e.omega.map);
    std::vector<Mat> cols;
    for (const auto& h : e.classes) cols.push_back(e.class_coordinates(h * r_omega));
    soc = intersect(soc, kernel_of(Mat::hstack(cols, f, e.dimension)));
  }
  if (soc.is_zero()) throw std::logic_error("ar_sequence: empty socle of Ext^1");
  Mat cls = soc.basis_rows().row(0).transpose();
  return {realize_ext1(e, cls)};
}

RepMorphism minimal_right_almost_split(const Rep& n, std::uint64_t seed) {
  if (n.is_zero()) throw PreconditionError("minimal_right_almost_split: zero module");
  if (is_projective(n)) {
    if (!is_indecomposable(n, seed)) throw PreconditionError("minimal_right_almost_split: module is decomposable");
    return sub_to_rep(radical(n)).map;
  }
  return ar_sequence(n, seed).ses.surj;
}

Subspace radical_maps(const HomSpace& h) {
  const FieldSpec f = h.from().field();
  if (h.dim() == 0) return Subspace::zero(f, 0);
  HomSpace back(h.to(), h.from());
  if (back.dim() == 0) return Subspace::full(f, h.dim());
  EndAlgebra eu = end_algebra(h.from());
  Mat q = algebra_radical(eu.algebra).quotient_map();
  std::vector<Mat> blocks;
  for (const auto& g : back.basis()) {
    std::vector<Mat> cols;
    for (const auto& b : h.basis()) cols.push_back(q * eu.space.coordinates(g * b));
    blocks.push_back(Mat::hstack(cols, f, q.rows()));
  }
  return kernel_of(Mat::vstack(blocks, f, h.dim()));
}

bool verify_almost_split(const ArSequence& seq, const std::vector<Rep>& universe) {
  const RepMorphism& s = seq.ses.surj;
  if (factors_through(s, RepMorphism::identity(seq.ses.right))) return false;
  for (const auto& u : universe) {
    if (!same_algebra(u.algebra(), s.to().algebra())) continue;
    HomSpace h(u, s.to());
    Mat rad = radical_maps(h).basis_columns();
    for (std::size_t k = 0; k < rad.cols(); ++k)
      if (!factors_through(s, h.element(rad.col(k)))) return false;
  }
  return true;
}

}  // namespace morphdet
