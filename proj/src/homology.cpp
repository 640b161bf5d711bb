#include "morphdet/homology.hpp"

namespace morphdet {

namespace {

// Offsets of each summand's block at vertex v in a projective sum.
std::vector<std::size_t> block_offsets(const BoundAlgebra& alg, const std::vector<Vertex>& xs, Vertex v) {
  std::vector<std::size_t> off(xs.size() + 1, 0);
  for (std::size_t k = 0; k < xs.size(); ++k) off[k + 1] = off[k] + alg.basis_between(xs[k], v).size();
  return off;
}

}  // namespace

PathMatrix extract_path_matrix(const RepMorphism& f, const std::vector<Vertex>& domain,
                               const std::vector<Vertex>& codomain) {
  const AlgebraPtr& alg = f.from().algebra();
  PathMatrix pm{alg, domain, codomain, {}};
  pm.blocks.assign(codomain.size(), std::vector<std::vector<Scalar>>(domain.size()));
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const Vertex x = domain[j];
    auto dom_off = block_offsets(*alg, domain, x);
    auto cod_off = block_offsets(*alg, codomain, x);
    if (dom_off.back() != f.from().dim(x) || cod_off.back() != f.to().dim(x))
      throw ContractViolation("morphism does not match the stated projective decomposition");
    // e_x is the first basis element of P(x) at x.
    const std::size_t col = dom_off[j];
    for (std::size_t i = 0; i < codomain.size(); ++i) {
      std::vector<Scalar> u;
      for (std::size_t r = cod_off[i]; r < cod_off[i + 1]; ++r) u.push_back(f.at(x)(r, col));
      pm.blocks[i][j] = std::move(u);
    }
  }
  return pm;
}

RepMorphism to_morphism(const PathMatrix& pm) {
  const BoundAlgebra& alg = *pm.algebra;
  const FieldSpec fs = alg.field();
  ProjectiveSum from = projective_sum(pm.algebra, pm.domain);
  ProjectiveSum to = projective_sum(pm.algebra, pm.codomain);
  std::vector<Mat> mats;
  for (std::size_t z = 0; z < alg.vertex_count(); ++z) {
    const Vertex vz = static_cast<Vertex>(z);
    auto dom_off = block_offsets(alg, pm.domain, vz);
    auto cod_off = block_offsets(alg, pm.codomain, vz);
    Mat m(fs, cod_off.back(), dom_off.back());
    for (std::size_t j = 0; j < pm.domain.size(); ++j) {
      const Vertex x = pm.domain[j];
      const auto& qs = alg.basis_between(x, vz);
      for (std::size_t k = 0; k < qs.size(); ++k) {
        const Path& q = alg.basis()[qs[k]];
        for (std::size_t i = 0; i < pm.codomain.size(); ++i) {
          const auto& us = alg.basis_between(pm.codomain[i], x);
          const auto& targets = alg.basis_between(pm.codomain[i], vz);
          for (std::size_t t = 0; t < us.size(); ++t) {
            const Scalar& c = pm.blocks[i][j][t];
            if (c.is_zero()) continue;
            Element e = alg.reduce(then(alg.basis()[us[t]], q));
            for (std::size_t r = 0; r < targets.size(); ++r)
              if (!e[targets[r]].is_zero()) m(cod_off[i] + r, dom_off[j] + k) += c * e[targets[r]];
          }
        }
      }
    }
    mats.push_back(std::move(m));
  }
  return make_unchecked(from.module, to.module, std::move(mats));
}

PathMatrix reverse(const PathMatrix& pm) {
  PathMatrix r{pm.algebra->opposite(), pm.codomain, pm.domain, {}};
  r.blocks.assign(pm.domain.size(), std::vector<std::vector<Scalar>>(pm.codomain.size()));
  // The opposite basis keeps indices, so coefficient vectors carry over.
  for (std::size_t i = 0; i < pm.codomain.size(); ++i)
    for (std::size_t j = 0; j < pm.domain.size(); ++j) r.blocks[j][i] = pm.blocks[i][j];
  return r;
}

ProjPresentation minimal_projective_presentation(const Rep& m) {
  ProjectiveCover c0 = projective_cover(m);
  SubResult k = kernel(c0.epi);
  ProjectiveCover c1 = projective_cover(k.module);
  RepMorphism map = make_unchecked(c1.cover.module, c0.cover.module, (k.map * c1.epi).mats());
  return {m, c1.cover, c0.cover, map, c0.epi};
}

InjCopresentation minimal_injective_copresentation(const Rep& m) {
  InjectiveEnvelope e0 = injective_envelope(m);
  SubResult c = cokernel(e0.mono);
  InjectiveEnvelope e1 = injective_envelope(c.module);
  RepMorphism map = make_unchecked(e0.envelope.module, e1.envelope.module, (e1.mono * c.map).mats());
  return {m, e0.envelope, e1.envelope, e0.mono, map};
}

Rep syzygy(const Rep& m, int k) {
  Rep cur = m;
  for (int i = 0; i < k; ++i) cur = kernel(projective_cover(cur).epi).module;
  return cur;
}

int projective_dimension(const Rep& m, int bound) {
  Rep cur = m;
  for (int k = 0; k <= bound; ++k) {
    if (is_projective(cur)) return k;
    cur = kernel(projective_cover(cur).epi).module;
  }
  return -1;
}

RepMorphism nakayama(const RepMorphism& f, const std::vector<Vertex>& domain, const std::vector<Vertex>& codomain) {
  RepMorphism over_op = to_morphism(reverse(extract_path_matrix(f, domain, codomain)));
  return dual_map(over_op);
}

RepMorphism nakayama_inverse(const RepMorphism& g, const std::vector<Vertex>& domain,
                             const std::vector<Vertex>& codomain) {
  RepMorphism over_op = dual_map(g);
  return to_morphism(reverse(extract_path_matrix(over_op, codomain, domain)));
}

Rep transpose(const Rep& m) {
  ProjPresentation p = minimal_projective_presentation(m);
  RepMorphism d = to_morphism(reverse(extract_path_matrix(p.map, p.p1.summands, p.p0.summands)));
  return cokernel(d).module;
}

Rep tau(const Rep& m) {
  ProjPresentation p = minimal_projective_presentation(m);
  return kernel(nakayama(p.map, p.p1.summands, p.p0.summands)).module;
}

Rep tau_minus(const Rep& m) {
  InjCopresentation c = minimal_injective_copresentation(m);
  return cokernel(nakayama_inverse(c.map, c.i0.summands, c.i1.summands)).module;
}

Mat ExtResult::class_coordinates(const RepMorphism& h) const {
  return coboundaries.quotient_map() * cocycles.coordinates(h);
}

RepMorphism ExtResult::cocycle(const Mat& class_coords) const {
  RepMorphism h = RepMorphism::zero(omega.module, target);
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (!class_coords(k, 0).is_zero()) h = h + class_coords(k, 0) * classes[k];
  return h;
}

ExtResult ext(const Rep& m, const Rep& n, int degree) {
  if (degree < 1 || degree > 2) throw ContractViolation("ext: degree must be 1 or 2");
  if (!same_algebra(m.algebra(), n.algebra())) throw ContractViolation("ext: modules over different algebras");
  ExtResult e;
  e.degree = degree;
  e.source = syzygy(m, degree - 1);
  e.target = n;
  e.cover = projective_cover(e.source);
  e.omega = kernel(e.cover.epi);
  e.cocycles = HomSpace(e.omega.module, n);
  HomSpace from_cover(e.cover.cover.module, n);
  const FieldSpec fs = m.field();
  std::vector<Mat> cols;
  for (const auto& g : from_cover.basis()) cols.push_back(e.cocycles.coordinates(g * e.omega.map));
  e.coboundaries = cols.empty() ? Subspace::zero(fs, e.cocycles.dim())
                                : Subspace::column_span(Mat::hstack(cols, fs, e.cocycles.dim()));
  Mat comp = e.coboundaries.standard_complement_columns();
  for (std::size_t k = 0; k < comp.cols(); ++k) e.classes.push_back(e.cocycles.element(comp.col(k)));
  e.dimension = e.classes.size();
  return e;
}

Ses realize_ext1(const ExtResult& e, const Mat& class_coords) {
  if (e.degree != 1) throw ContractViolation("realize_ext1 needs a degree-1 class");
  RepMorphism h = e.cocycle(class_coords);
  const Rep& p0 = e.cover.cover.module;
  DirectSum pn = direct_sum({p0, e.target});
  RepMorphism d = column_map({e.omega.map, Scalar(-1) * h});
  d = make_unchecked(d.from(), pn.sum, d.mats());
  SubResult q = cokernel(d);
  RepMorphism to_m = row_map({e.cover.epi, RepMorphism::zero(e.target, e.source)});
  to_m = make_unchecked(pn.sum, e.source, to_m.mats());
  return {e.target, q.module, e.source, q.map * pn.injections[1], descend(q, to_m)};
}

}  // namespace morphdet
