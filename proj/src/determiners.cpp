#include "morphdet/determiners.hpp"

namespace morphdet {

namespace {

Subspace span_of(const std::vector<Mat>& cols, const FieldSpec& f, std::size_t n) {
  if (cols.empty() || n == 0) return Subspace::zero(f, n);
  return Subspace::column_span(Mat::hstack(cols, f, n));
}

// {alpha phi : phi in Hom(w, X)} flattened inside Hom(w, Y).
Subspace through_alpha(const RepMorphism& alpha, const Rep& w) {
  HomSpace h(w, alpha.from());
  std::vector<Mat> cols;
  for (const auto& phi : h.basis()) cols.push_back((alpha * phi).flatten());
  return span_of(cols, w.field(), RepMorphism::flat_dim(w, alpha.to()));
}

// {eta in h : eta * pre lies in target}, as a subspace of h coordinates.
Subspace pulled_back(const HomSpace& h, const RepMorphism& pre, const Subspace& target) {
  const FieldSpec f = h.from().field();
  if (target.ambient_dim() == 0) return Subspace::full(f, h.dim());
  std::vector<Mat> cols;
  for (const auto& eta : h.basis()) cols.push_back((eta * pre).flatten());
  return preimage_of(Mat::hstack(cols, f, target.ambient_dim()), target);
}

// Coordinates in h of the maps alpha psi, psi: h.from() -> X.
Subspace factoring_maps(const HomSpace& h, const RepMorphism& alpha) {
  HomSpace hx(h.from(), alpha.from());
  std::vector<Mat> cols;
  for (const auto& psi : hx.basis()) cols.push_back(h.coordinates(alpha * psi));
  return span_of(cols, h.from().field(), h.dim());
}

std::optional<Mat> vector_outside(const Subspace& big, const Subspace& small) {
  Mat b = big.basis_columns();
  for (std::size_t k = 0; k < b.cols(); ++k)
    if (!small.contains(b.col(k))) return b.col(k);
  return std::nullopt;
}

RepMorphism radical_inclusion(const Rep& p) { return sub_to_rep(radical(p)).map; }

Rep sum_or_zero(const std::vector<Rep>& parts, const AlgebraPtr& alg) {
  return parts.empty() ? Rep::zero(alg) : direct_sum(parts).sum;
}

}  // namespace

std::optional<AlmostFactorCertificate> almost_factors_through(const RepMorphism& rho, const RepMorphism& alpha) {
  if (!same_algebra(rho.to().algebra(), alpha.to().algebra()))
    throw ContractViolation("almost_factors_through: modules over different algebras");
  HomSpace hn(rho.to(), alpha.to());
  if (hn.dim() == 0) return std::nullopt;
  Subspace g = pulled_back(hn, rho, through_alpha(alpha, rho.from()));
  Subspace f = factoring_maps(hn, alpha);
  auto v = vector_outside(g, f);
  if (!v) return std::nullopt;
  RepMorphism eta = hn.element(*v);
  auto eta_prime = factors_through(alpha, eta * rho);
  if (!eta_prime) throw std::logic_error("almost_factors_through: inconsistent lift");
  return AlmostFactorCertificate{rho.to(), rho, eta, *eta_prime};
}

std::optional<AlmostFactorCertificate> almost_factors_through(const Rep& n, const RepMorphism& alpha,
                                                              std::uint64_t seed) {
  return almost_factors_through(minimal_right_almost_split(n, seed), alpha);
}

AuslanderDeterminer auslander_determiner(const RepMorphism& alpha) {
  const AlgebraPtr& alg = alpha.to().algebra();
  Rep k = kernel(alpha).module;
  Rep tm = k.is_zero() ? Rep::zero(alg) : tau_minus(k);
  Rep soc = sub_to_rep(socle(cokernel(alpha).module)).module;
  Rep pp = soc.is_zero() ? Rep::zero(alg) : projective_cover(soc).cover.module;
  return {direct_sum({tm, pp}).sum, tm, pp};
}

DeterminerReport minimal_determiner(const RepMorphism& alpha, std::uint64_t seed) {
  const AlgebraPtr& alg = alpha.to().algebra();
  DeterminerReport r;
  r.alpha = alpha;
  RightMinimalVersion rm = right_minimal_version(alpha);
  r.intrinsic_kernel = kernel(rm.alpha1).module;
  auto add_t = [&r](const Rep& m) {
    for (const auto& t : r.t)
      if (isomorphic_indecomposables(t, m)) return;
    r.t.push_back(m);
  };
  if (!r.intrinsic_kernel.is_zero()) {
    Decomposition d = krull_schmidt(r.intrinsic_kernel, seed);
    for (const auto& l : d.summands) {
      Rep tm = tau_minus(l);
      r.kernel_summands.push_back({l, tm});
      if (!tm.is_zero()) add_t(tm);
    }
  }
  Rep q = cokernel(alpha).module;
  SubRep soc = socle(q);
  for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
    const Vertex v = static_cast<Vertex>(x);
    if (soc.at(v).dim() == 0) continue;
    Rep p = projective(alg, v);
    auto cert = almost_factors_through(radical_inclusion(p), alpha);
    if (!cert) {
      r.rejected_vertices.push_back(v);
      continue;
    }
    ProjectiveSummand ps{v, p, {}, *cert};
    Rep s = simple(alg, v);
    if (prop1_check(alpha)) ps.tags.push_back("prop1");
    if (prop2_check(s, alpha)) ps.tags.push_back("prop2");
    if (prop3_check(s, alpha)) ps.tags.push_back("prop3");
    Prop4Certificate c4 = prop4_from_almost_factor(*cert, alpha);
    if (image_sub(c4.alpha_tilde).total_dim() > image_sub(alpha).total_dim()) ps.tags.push_back("prop4-construction");
    ps.tags.push_back("direct-linear-test");
    r.projective_summands.push_back(std::move(ps));
    add_t(p);
  }
  r.t_sum = sum_or_zero(r.t, alg);
  r.auslander = auslander_determiner(alpha);
  return r;
}

Determination determine(const Rep& c, const DeterminerReport& report) {
  Determination d;
  for (const auto& n : report.t) {
    if (in_add(n, c)) continue;
    d.determined = false;
    d.missing = n;
    for (const auto& ps : report.projective_summands)
      if (ps.projective == n) d.witness = ps.certificate.eta;
    if (!d.witness)
      if (auto cert = almost_factors_through(n, report.alpha)) d.witness = cert->eta;
    break;
  }
  return d;
}

Determination determine(const Rep& c, const RepMorphism& alpha, std::uint64_t seed) {
  return determine(c, minimal_determiner(alpha, seed));
}

bool determines(const Rep& c, const RepMorphism& alpha, std::uint64_t seed) {
  return determine(c, alpha, seed).determined;
}

OracleVerdict oracle_check(const Rep& c, const RepMorphism& alpha, const std::vector<Rep>& universe) {
  const Rep& y = alpha.to();
  Subspace target = through_alpha(alpha, c);
  for (std::size_t k = 0; k < universe.size(); ++k) {
    const Rep& xp = universe[k];
    if (!same_algebra(xp.algebra(), y.algebra())) throw ContractViolation("oracle: universe module over another algebra");
    HomSpace h(xp, y);
    if (h.dim() == 0) continue;
    Subspace f = factoring_maps(h, alpha);
    Subspace hh = Subspace::full(y.field(), h.dim());
    HomSpace hc(c, xp);
    for (const auto& phi : hc.basis()) hh = intersect(hh, pulled_back(h, phi, target));
    if (hh.dim() != f.dim()) {
      OracleVerdict v;
      v.determined = false;
      v.witness_index = k;
      v.witness = h.element(*vector_outside(hh, f));
      return v;
    }
  }
  return {};
}

bool determines_oracle(const Rep& c, const RepMorphism& alpha, const std::vector<Rep>& universe) {
  return oracle_check(c, alpha, universe).determined;
}

Vertex simple_vertex(const Rep& s) {
  if (s.total_dim() != 1) throw ContractViolation("module is not simple");
  for (std::size_t x = 0; x < s.vertex_count(); ++x)
    if (s.dims()[x] == 1) return static_cast<Vertex>(x);
  throw ContractViolation("module is not simple");
}

bool simple_in_cokernel_socle(Vertex x, const RepMorphism& alpha) {
  return socle(cokernel(alpha).module).at(x).dim() > 0;
}

namespace {
Vertex cokernel_simple(const Rep& s, const RepMorphism& alpha) {
  Vertex x = simple_vertex(s);
  if (!simple_in_cokernel_socle(x, alpha)) throw PreconditionError("simple module is not a submodule of Cok(alpha)");
  return x;
}
}  // namespace

bool prop1_check(const RepMorphism& alpha) { return alpha.is_mono(); }

bool prop2_check(const Rep& s, const RepMorphism& alpha) {
  Vertex x = simple_vertex(s);
  SubRep soc = socle(alpha.to());
  return !image_sub(alpha).at(x).contains(soc.at(x));
}

bool prop3_check(const Rep& s, const RepMorphism& alpha) {
  Vertex x = cokernel_simple(s, alpha);
  return is_projective(sub_to_rep(radical(projective(alpha.to().algebra(), x))).module);
}

bool ext2_criterion(const Rep& s, const RepMorphism& alpha) {
  cokernel_simple(s, alpha);
  Rep k = kernel(alpha).module;
  if (k.is_zero()) return true;
  return ext(s, k, 2).dimension == 0;
}

Prop4Certificate prop4_from_almost_factor(const AlmostFactorCertificate& cert, const RepMorphism& alpha) {
  const Rep& x = alpha.from();
  const Rep& p = cert.n;
  DirectSum xp = direct_sum({x, p});
  RepMorphism d = column_map({cert.eta_prime, Scalar(-1) * cert.rho});
  d = make_unchecked(d.from(), xp.sum, d.mats());
  SubResult q = cokernel(d);
  RepMorphism both = row_map({alpha, cert.eta});
  both = make_unchecked(xp.sum, alpha.to(), both.mats());
  return {q.module, q.map * xp.injections[0], descend(q, both)};
}

std::optional<Prop4Certificate> prop4_certificate(const Rep& s, const RepMorphism& alpha, std::uint64_t) {
  Vertex x = cokernel_simple(s, alpha);
  auto cert = almost_factors_through(radical_inclusion(projective(alpha.to().algebra(), x)), alpha);
  if (!cert) return std::nullopt;
  return prop4_from_almost_factor(*cert, alpha);
}

AlmostFactorCertificate almost_factor_from_prop4(const Prop4Certificate& cert, const RepMorphism& alpha) {
  if (!cert.inclusion.is_mono()) throw PreconditionError("prop4: X -> J is not injective");
  if (!(cert.alpha_tilde * cert.inclusion == alpha)) throw PreconditionError("prop4: alpha_tilde does not extend alpha");
  SubResult eps = cokernel(cert.inclusion);
  Vertex x = simple_vertex(eps.module);
  if (image_sub(cert.alpha_tilde).total_dim() == image_sub(alpha).total_dim())
    throw PreconditionError("prop4: image of alpha_tilde equals image of alpha");
  const AlgebraPtr& alg = alpha.to().algebra();
  Rep p = projective(alg, x);
  RepMorphism to_s = yoneda_map(eps.module, x, Mat::unit_column(alg->field(), 1, 0));
  auto lift = factors_through(eps.map, to_s);
  if (!lift) throw std::logic_error("prop4: projective does not lift");
  RepMorphism iota = radical_inclusion(p);
  RepMorphism eta_prime = restrict_codomain(SubResult{alpha.from(), cert.inclusion}, *lift * iota);
  AlmostFactorCertificate out{p, iota, cert.alpha_tilde * *lift, eta_prime};
  if (factors_through(alpha, out.eta)) throw std::logic_error("prop4: converse produced a factoring map");
  return out;
}

}  // namespace morphdet
