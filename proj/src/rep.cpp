#include "morphdet/rep.hpp"

#include <numeric>

namespace morphdet {

namespace {

void require_same_algebra(const Rep& a, const Rep& b, const char* what) {
  if (!same_algebra(a.algebra(), b.algebra()))
    throw ContractViolation(std::string(what) + ": modules over different algebras");
}

std::vector<std::size_t> non_pivots(const Subspace& s) {
  std::vector<bool> piv(s.ambient_dim(), false);
  for (auto p : s.pivots()) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.ambient_dim(); ++j)
    if (!piv[j]) out.push_back(j);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Rep

Rep::Rep(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> arrow_maps) {
  if (!algebra) throw ContractViolation("module without an algebra");
  const Quiver& q = algebra->quiver();
  if (dims.size() != q.vertex_count())
    throw ContractViolation("dimension vector has " + std::to_string(dims.size()) + " entries, quiver has " +
                            std::to_string(q.vertex_count()) + " vertices");
  if (arrow_maps.size() != q.arrow_count())
    throw ContractViolation("expected " + std::to_string(q.arrow_count()) + " arrow matrices, got " +
                            std::to_string(arrow_maps.size()));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    const Mat& m = arrow_maps[a];
    if (m.rows() != dims[arr.target] || m.cols() != dims[arr.source])
      throw ContractViolation("matrix for arrow '" + arr.name + "' has shape " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(dims[arr.target]) + "x" +
                              std::to_string(dims[arr.source]));
  }
  auto d = std::make_shared<Data>();
  d->algebra = std::move(algebra);
  d->dims = std::move(dims);
  d->arrows = std::move(arrow_maps);
  d->total = std::accumulate(d->dims.begin(), d->dims.end(), std::size_t{0});
  d_ = d;
  const FieldSpec f = field();
  for (std::size_t ri = 0; ri < d_->algebra->relation_paths().size(); ++ri) {
    const auto& rel = d_->algebra->relation_paths()[ri];
    const Path& p0 = rel.front().second;
    Mat acc(f, dim(p0.target), dim(p0.source));
    for (const auto& [c, p] : rel) acc = acc + c * path_action(p);
    if (!acc.is_zero())
      throw ContractViolation("module violates relation " + std::to_string(ri));
  }
}

Rep Rep::zero(AlgebraPtr algebra) {
  const Quiver& q = algebra->quiver();
  std::vector<Mat> arrows;
  for (const auto& a : q.arrows()) {
    (void)a;
    arrows.emplace_back(algebra->field(), 0, 0);
  }
  return Rep(algebra, std::vector<std::size_t>(q.vertex_count(), 0), std::move(arrows));
}

Mat Rep::path_action(const Path& p) const {
  Mat acc = Mat::identity(field(), dim(p.source));
  for (int a : p.arrows) acc = arrow(a) * acc;
  return acc;
}

bool operator==(const Rep& a, const Rep& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return same_algebra(a.algebra(), b.algebra()) && a.dims() == b.dims() && a.arrow_maps() == b.arrow_maps();
}

// ---------------------------------------------------------------- RepMorphism

RepMorphism make_unchecked(Rep from, Rep to, std::vector<Mat> mats) {
  return RepMorphism(std::move(from), std::move(to), std::move(mats), RepMorphism::Unchecked{});
}

RepMorphism::RepMorphism(Rep from, Rep to, std::vector<Mat> mats)
    : from_(std::move(from)), to_(std::move(to)), mats_(std::move(mats)) {
  require_same_algebra(from_, to_, "morphism");
  const std::size_t nv = from_.vertex_count();
  if (mats_.size() != nv) throw ContractViolation("morphism needs one matrix per vertex");
  for (std::size_t v = 0; v < nv; ++v)
    if (mats_[v].rows() != to_.dims()[v] || mats_[v].cols() != from_.dims()[v])
      throw ContractViolation("morphism matrix at vertex '" + from_.algebra()->quiver().vertex_name(static_cast<Vertex>(v)) +
                              "' has the wrong shape");
  const Quiver& q = from_.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    if (!(to_.arrow(static_cast<int>(a)) * mats_[arr.source] == mats_[arr.target] * from_.arrow(static_cast<int>(a))))
      throw ContractViolation("morphism does not commute with arrow '" + arr.name + "'");
  }
}

RepMorphism RepMorphism::zero(const Rep& from, const Rep& to) {
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < from.vertex_count(); ++v) mats.emplace_back(from.field(), to.dims()[v], from.dims()[v]);
  return make_unchecked(from, to, std::move(mats));
}

RepMorphism RepMorphism::identity(const Rep& m) {
  std::vector<Mat> mats;
  for (auto d : m.dims()) mats.push_back(Mat::identity(m.field(), d));
  return make_unchecked(m, m, std::move(mats));
}

bool RepMorphism::is_zero() const {
  return std::all_of(mats_.begin(), mats_.end(), [](const Mat& m) { return m.is_zero(); });
}

std::size_t RepMorphism::rank() const {
  std::size_t r = 0;
  for (const auto& m : mats_) r += morphdet::rank(m);
  return r;
}

bool RepMorphism::is_mono() const { return rank() == from_.total_dim(); }
bool RepMorphism::is_epi() const { return rank() == to_.total_dim(); }
bool RepMorphism::is_iso() const { return from_.dims() == to_.dims() && is_mono(); }

std::size_t RepMorphism::flat_dim(const Rep& from, const Rep& to) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < from.vertex_count(); ++v) n += from.dims()[v] * to.dims()[v];
  return n;
}

Mat RepMorphism::flatten() const {
  std::vector<Scalar> e;
  e.reserve(flat_dim(from_, to_));
  for (const auto& m : mats_) e.insert(e.end(), m.data().begin(), m.data().end());
  return Mat::column(from_.field(), e);
}

RepMorphism RepMorphism::unflatten(const Rep& from, const Rep& to, const Mat& flat) {
  std::vector<Mat> mats;
  std::size_t k = 0;
  for (std::size_t v = 0; v < from.vertex_count(); ++v) {
    Mat m(from.field(), to.dims()[v], from.dims()[v]);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = flat(k++, 0);
    mats.push_back(std::move(m));
  }
  return make_unchecked(from, to, std::move(mats));
}

RepMorphism operator*(const RepMorphism& g, const RepMorphism& f) {
  if (!(f.to_ == g.from_)) throw ContractViolation("composition of non-composable morphisms");
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < f.mats_.size(); ++v) mats.push_back(g.mats_[v] * f.mats_[v]);
  return make_unchecked(f.from_, g.to_, std::move(mats));
}

RepMorphism operator+(const RepMorphism& f, const RepMorphism& g) {
  if (!(f.from_ == g.from_) || !(f.to_ == g.to_)) throw ContractViolation("sum of non-parallel morphisms");
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < f.mats_.size(); ++v) mats.push_back(f.mats_[v] + g.mats_[v]);
  return make_unchecked(f.from_, f.to_, std::move(mats));
}

RepMorphism operator-(const RepMorphism& f, const RepMorphism& g) { return f + (Scalar(-1) * g); }

RepMorphism operator*(const Scalar& s, const RepMorphism& f) {
  std::vector<Mat> mats;
  for (const auto& m : f.mats_) mats.push_back(s * m);
  return make_unchecked(f.from_, f.to_, std::move(mats));
}

bool operator==(const RepMorphism& f, const RepMorphism& g) {
  return f.from_ == g.from_ && f.to_ == g.to_ && f.mats_ == g.mats_;
}

// ---------------------------------------------------------------- SubRep

SubRep::SubRep(Rep ambient, std::vector<Subspace> spaces) : ambient_(std::move(ambient)), spaces_(std::move(spaces)) {
  if (spaces_.size() != ambient_.vertex_count()) throw ContractViolation("submodule needs one subspace per vertex");
  for (std::size_t v = 0; v < spaces_.size(); ++v)
    if (spaces_[v].ambient_dim() != ambient_.dims()[v]) throw ContractViolation("submodule subspace has wrong ambient dimension");
  const Quiver& q = ambient_.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    if (!spaces_[arr.target].contains(image_of(ambient_.arrow(static_cast<int>(a)), spaces_[arr.source])))
      throw ContractViolation("subspaces are not closed under arrow '" + arr.name + "'");
  }
}

SubRep SubRep::zero(const Rep& m) {
  std::vector<Subspace> s;
  for (auto d : m.dims()) s.push_back(Subspace::zero(m.field(), d));
  SubRep r;
  r.ambient_ = m;
  r.spaces_ = std::move(s);
  return r;
}

SubRep SubRep::full(const Rep& m) {
  std::vector<Subspace> s;
  for (auto d : m.dims()) s.push_back(Subspace::full(m.field(), d));
  SubRep r;
  r.ambient_ = m;
  r.spaces_ = std::move(s);
  return r;
}

std::vector<std::size_t> SubRep::dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : spaces_) d.push_back(s.dim());
  return d;
}

std::size_t SubRep::total_dim() const {
  std::size_t n = 0;
  for (const auto& s : spaces_) n += s.dim();
  return n;
}

bool SubRep::contains(const SubRep& other) const {
  for (std::size_t v = 0; v < spaces_.size(); ++v)
    if (!spaces_[v].contains(other.spaces_[v])) return false;
  return true;
}

SubRep intersect(const SubRep& a, const SubRep& b) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < a.spaces().size(); ++v) s.push_back(intersect(a.spaces()[v], b.spaces()[v]));
  return SubRep(a.ambient(), std::move(s));
}

SubRep sum(const SubRep& a, const SubRep& b) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < a.spaces().size(); ++v) s.push_back(sum(a.spaces()[v], b.spaces()[v]));
  return SubRep(a.ambient(), std::move(s));
}

SubRep generated_subrep(const Rep& m, const std::vector<Mat>& generators) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    s.push_back(generators[v].cols() ? Subspace::column_span(generators[v]) : Subspace::zero(m.field(), m.dims()[v]));
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arr = q.arrow(static_cast<int>(a));
      Subspace img = image_of(m.arrow(static_cast<int>(a)), s[arr.source]);
      if (!s[arr.target].contains(img)) {
        s[arr.target] = sum(s[arr.target], img);
        grew = true;
      }
    }
  }
  return SubRep(m, std::move(s));
}

// ---------------------------------------------------------------- Hom

HomSpace::HomSpace(Rep from, Rep to) : from_(std::move(from)), to_(std::move(to)) {
  require_same_algebra(from_, to_, "hom");
  const FieldSpec f = from_.field();
  const Quiver& q = from_.algebra()->quiver();
  const std::size_t nv = from_.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + from_.dims()[v] * to_.dims()[v];
  const std::size_t n = offset[nv];

  std::size_t neq = 0;
  for (const auto& arr : q.arrows()) neq += to_.dims()[arr.target] * from_.dims()[arr.source];
  Mat eq(f, neq, n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    const Mat& na = to_.arrow(static_cast<int>(a));
    const Mat& ma = from_.arrow(static_cast<int>(a));
    const std::size_t mx = from_.dims()[arr.source], nx = to_.dims()[arr.source];
    const std::size_t my = from_.dims()[arr.target], ny = to_.dims()[arr.target];
    // (N_a F_x - F_y M_a)(i, j) = 0
    for (std::size_t i = 0; i < ny; ++i)
      for (std::size_t j = 0; j < mx; ++j, ++row) {
        for (std::size_t k = 0; k < nx; ++k)
          if (!na(i, k).is_zero()) eq(row, offset[arr.source] + k * mx + j) += na(i, k);
        for (std::size_t k = 0; k < my; ++k)
          if (!ma(k, j).is_zero()) eq(row, offset[arr.target] + i * my + k) -= ma(k, j);
      }
  }
  NullspaceBasis ns = nullspace_basis(eq);
  flat_ = ns.basis;
  free_ = ns.free;
  for (std::size_t k = 0; k < free_.size(); ++k) basis_.push_back(RepMorphism::unflatten(from_, to_, flat_.col(k)));
}

Mat HomSpace::coordinates(const RepMorphism& f) const {
  Mat flat = f.flatten();
  Mat c(from_.field(), free_.size(), 1);
  for (std::size_t k = 0; k < free_.size(); ++k) c(k, 0) = flat(free_[k], 0);
  return c;
}

RepMorphism HomSpace::element(const Mat& coords) const {
  if (basis_.empty()) return RepMorphism::zero(from_, to_);
  return RepMorphism::unflatten(from_, to_, flat_ * coords);
}

RepMorphism HomSpace::element(const std::vector<Scalar>& coords) const {
  return element(Mat::column(from_.field(), coords));
}

std::vector<RepMorphism> hom_basis(const Rep& m, const Rep& n) { return HomSpace(m, n).basis(); }

// ---------------------------------------------------------------- standard modules

Rep simple(const AlgebraPtr& alg, Vertex x) {
  const Quiver& q = alg->quiver();
  if (x < 0 || static_cast<std::size_t>(x) >= q.vertex_count()) throw ContractViolation("unknown vertex index");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[x] = 1;
  std::vector<Mat> arrows;
  for (const auto& a : q.arrows()) arrows.emplace_back(alg->field(), dims[a.target], dims[a.source]);
  return Rep(alg, dims, std::move(arrows));
}

Rep projective(const AlgebraPtr& alg, Vertex x) {
  const Quiver& q = alg->quiver();
  const FieldSpec f = alg->field();
  std::vector<std::size_t> dims;
  for (std::size_t y = 0; y < q.vertex_count(); ++y) dims.push_back(alg->basis_between(x, static_cast<Vertex>(y)).size());
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    const auto& src = alg->basis_between(x, arr.source);
    const auto& tgt = alg->basis_between(x, arr.target);
    Mat m(f, tgt.size(), src.size());
    Path step{arr.source, arr.target, {static_cast<int>(a)}};
    for (std::size_t c = 0; c < src.size(); ++c) {
      Element e = alg->reduce(then(alg->basis()[src[c]], step));
      for (std::size_t r = 0; r < tgt.size(); ++r) m(r, c) = e[tgt[r]];
    }
    arrows.push_back(std::move(m));
  }
  return Rep(alg, std::move(dims), std::move(arrows));
}

Rep dual(const Rep& m) {
  std::vector<Mat> arrows;
  for (const auto& a : m.arrow_maps()) arrows.push_back(a.transpose());
  return Rep(m.algebra()->opposite(), m.dims(), std::move(arrows));
}

RepMorphism dual_map(const RepMorphism& f) {
  std::vector<Mat> mats;
  for (const auto& m : f.mats()) mats.push_back(m.transpose());
  return make_unchecked(dual(f.to()), dual(f.from()), std::move(mats));
}

Rep injective(const AlgebraPtr& alg, Vertex x) { return dual(projective(alg->opposite(), x)); }

// ---------------------------------------------------------------- sums

Rep direct_sum_rep(const std::vector<Rep>& parts, const AlgebraPtr& alg) {
  if (parts.empty()) return Rep::zero(alg);
  if (parts.size() == 1) return parts.front();
  const Quiver& q = alg->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (const auto& p : parts) {
    require_same_algebra(p, parts.front(), "direct sum");
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dims()[v];
  }
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::vector<Mat> blocks;
    for (const auto& p : parts) blocks.push_back(p.arrow(static_cast<int>(a)));
    arrows.push_back(Mat::block_diagonal(blocks, alg->field()));
  }
  return Rep(alg, std::move(dims), std::move(arrows));
}

DirectSum direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw ContractViolation("direct_sum of an empty list needs an algebra");
  DirectSum out;
  out.sum = direct_sum_rep(parts, parts.front().algebra());
  const FieldSpec f = out.sum.field();
  const std::size_t nv = out.sum.vertex_count();
  std::vector<std::size_t> off(nv, 0);
  for (const auto& p : parts) {
    std::vector<Mat> inj, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Mat i(f, out.sum.dims()[v], p.dims()[v]);
      for (std::size_t k = 0; k < p.dims()[v]; ++k) i(off[v] + k, k) = f.one();
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      off[v] += p.dims()[v];
    }
    out.injections.push_back(make_unchecked(p, out.sum, std::move(inj)));
    out.projections.push_back(make_unchecked(out.sum, p, std::move(proj)));
  }
  return out;
}

RepMorphism direct_sum_map(const std::vector<RepMorphism>& parts) {
  if (parts.empty()) throw ContractViolation("direct_sum_map of an empty list");
  std::vector<Rep> from, to;
  for (const auto& p : parts) {
    from.push_back(p.from());
    to.push_back(p.to());
  }
  const AlgebraPtr& alg = parts.front().from().algebra();
  Rep s = direct_sum_rep(from, alg), t = direct_sum_rep(to, alg);
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    std::vector<Mat> blocks;
    for (const auto& p : parts) blocks.push_back(p.at(static_cast<Vertex>(v)));
    mats.push_back(Mat::block_diagonal(blocks, s.field()));
  }
  return make_unchecked(s, t, std::move(mats));
}

RepMorphism row_map(const std::vector<RepMorphism>& parts) {
  if (parts.empty()) throw ContractViolation("row_map of an empty list");
  std::vector<Rep> from;
  for (const auto& p : parts) {
    if (!(p.to() == parts.front().to())) throw ContractViolation("row_map: codomains differ");
    from.push_back(p.from());
  }
  const Rep& to = parts.front().to();
  Rep s = direct_sum_rep(from, to.algebra());
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    std::vector<Mat> blocks;
    for (const auto& p : parts) blocks.push_back(p.at(static_cast<Vertex>(v)));
    mats.push_back(Mat::hstack(blocks, s.field(), to.dims()[v]));
  }
  return make_unchecked(s, to, std::move(mats));
}

RepMorphism column_map(const std::vector<RepMorphism>& parts) {
  if (parts.empty()) throw ContractViolation("column_map of an empty list");
  std::vector<Rep> to;
  for (const auto& p : parts) {
    if (!(p.from() == parts.front().from())) throw ContractViolation("column_map: domains differ");
    to.push_back(p.to());
  }
  const Rep& from = parts.front().from();
  Rep t = direct_sum_rep(to, from.algebra());
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    std::vector<Mat> blocks;
    for (const auto& p : parts) blocks.push_back(p.at(static_cast<Vertex>(v)));
    mats.push_back(Mat::vstack(blocks, t.field(), from.dims()[v]));
  }
  return make_unchecked(from, t, std::move(mats));
}

// ---------------------------------------------------------------- kernels and friends

SubRep kernel_sub(const RepMorphism& f) {
  std::vector<Subspace> s;
  for (const auto& m : f.mats()) s.push_back(kernel_of(m));
  return SubRep(f.from(), std::move(s));
}

SubRep image_sub(const RepMorphism& f) {
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < f.mats().size(); ++v)
    s.push_back(f.mats()[v].cols() ? column_space(f.mats()[v]) : Subspace::zero(f.from().field(), f.to().dims()[v]));
  return SubRep(f.to(), std::move(s));
}

SubResult sub_to_rep(const SubRep& s) {
  const Rep& m = s.ambient();
  const Quiver& q = m.algebra()->quiver();
  std::vector<Mat> basis;
  for (const auto& sp : s.spaces()) basis.push_back(sp.basis_columns());
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    // RREF rows: coordinates of a member vector are its pivot entries.
    arrows.push_back((m.arrow(static_cast<int>(a)) * basis[arr.source]).select_rows(s.spaces()[arr.target].pivots()));
  }
  Rep sub(m.algebra(), s.dims(), std::move(arrows));
  return {sub, make_unchecked(sub, m, std::move(basis))};
}

SubResult quotient(const Rep& m, const SubRep& s) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Mat> qm, comp;
  std::vector<std::size_t> dims;
  for (const auto& sp : s.spaces()) {
    qm.push_back(sp.quotient_map());
    comp.push_back(sp.standard_complement_columns());
    dims.push_back(sp.ambient_dim() - sp.dim());
  }
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    arrows.push_back(qm[arr.target] * m.arrow(static_cast<int>(a)) * comp[arr.source]);
  }
  Rep quo(m.algebra(), std::move(dims), std::move(arrows));
  return {quo, make_unchecked(m, quo, std::move(qm))};
}

SubResult kernel(const RepMorphism& f) { return sub_to_rep(kernel_sub(f)); }
SubResult image(const RepMorphism& f) { return sub_to_rep(image_sub(f)); }
SubResult cokernel(const RepMorphism& f) { return quotient(f.to(), image_sub(f)); }

RepMorphism corestrict_to_image(const RepMorphism& f, const SubResult& im) { return restrict_codomain(im, f); }

RepMorphism descend(const SubResult& q, const RepMorphism& f) {
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < f.mats().size(); ++v) {
    const Mat& qv = q.map.at(static_cast<Vertex>(v));
    auto sol = solve_all(qv, Mat::identity(f.from().field(), qv.rows()));
    if (!sol) throw ContractViolation("descend: map is not surjective");
    Mat h = f.mats()[v] * sol->particular;
    if (!(h * qv == f.mats()[v])) throw ContractViolation("descend: map does not vanish on the kernel");
    mats.push_back(std::move(h));
  }
  return make_unchecked(q.module, f.to(), std::move(mats));
}

RepMorphism restrict_codomain(const SubResult& incl, const RepMorphism& f) {
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < f.mats().size(); ++v) {
    auto sol = solve_all(incl.map.at(static_cast<Vertex>(v)), f.mats()[v]);
    if (!sol) throw ContractViolation("restrict_codomain: map leaves the submodule");
    mats.push_back(sol->particular);
  }
  return make_unchecked(f.from(), incl.module, std::move(mats));
}

SubRep preimage(const RepMorphism& f, const SubRep& s) {
  std::vector<Subspace> out;
  for (std::size_t v = 0; v < f.mats().size(); ++v) out.push_back(preimage_of(f.mats()[v], s.spaces()[v]));
  return SubRep(f.from(), std::move(out));
}

SubRep image_of_sub(const RepMorphism& f, const SubRep& s) {
  std::vector<Subspace> out;
  for (std::size_t v = 0; v < f.mats().size(); ++v) out.push_back(image_of(f.mats()[v], s.spaces()[v]));
  return SubRep(f.to(), std::move(out));
}

SubRep radical(const Rep& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Subspace> s;
  for (auto d : m.dims()) s.push_back(Subspace::zero(m.field(), d));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    if (m.dims()[arr.source] && m.dims()[arr.target])
      s[arr.target] = sum(s[arr.target], column_space(m.arrow(static_cast<int>(a))));
  }
  return SubRep(m, std::move(s));
}

SubRep socle(const Rep& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Subspace> s;
  for (auto d : m.dims()) s.push_back(Subspace::full(m.field(), d));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    if (m.dims()[arr.source]) s[arr.source] = intersect(s[arr.source], kernel_of(m.arrow(static_cast<int>(a))));
  }
  return SubRep(m, std::move(s));
}

SubResult top(const Rep& m) { return quotient(m, radical(m)); }

// ---------------------------------------------------------------- covers

ProjectiveSum projective_sum(const AlgebraPtr& alg, const std::vector<Vertex>& summands) {
  std::vector<Rep> parts;
  for (auto x : summands) parts.push_back(projective(alg, x));
  return {direct_sum_rep(parts, alg), summands};
}

InjectiveSum injective_sum(const AlgebraPtr& alg, const std::vector<Vertex>& summands) {
  return {dual(projective_sum(alg->opposite(), summands).module), summands};
}

RepMorphism yoneda_map(const Rep& m, Vertex x, const Mat& v) {
  const AlgebraPtr& alg = m.algebra();
  Rep p = projective(alg, x);
  std::vector<Mat> mats;
  for (std::size_t y = 0; y < m.vertex_count(); ++y) {
    const auto& paths = alg->basis_between(x, static_cast<Vertex>(y));
    Mat f(m.field(), m.dims()[y], paths.size());
    for (std::size_t c = 0; c < paths.size(); ++c) f.set_block(0, c, m.path_action(alg->basis()[paths[c]]) * v);
    mats.push_back(std::move(f));
  }
  return make_unchecked(p, m, std::move(mats));
}

ProjectiveCover projective_cover(const Rep& m) {
  const AlgebraPtr& alg = m.algebra();
  SubRep rad = radical(m);
  std::vector<Vertex> summands;
  std::vector<RepMorphism> maps;
  for (std::size_t x = 0; x < m.vertex_count(); ++x)
    for (auto j : non_pivots(rad.spaces()[x])) {
      summands.push_back(static_cast<Vertex>(x));
      maps.push_back(yoneda_map(m, static_cast<Vertex>(x), Mat::unit_column(m.field(), m.dims()[x], j)));
    }
  ProjectiveSum ps = projective_sum(alg, summands);
  if (maps.empty()) return {ps, RepMorphism::zero(ps.module, m)};
  RepMorphism epi = row_map(maps);
  return {ps, make_unchecked(ps.module, m, epi.mats())};
}

InjectiveEnvelope injective_envelope(const Rep& m) {
  ProjectiveCover pc = projective_cover(dual(m));
  RepMorphism mono = dual_map(pc.epi);
  InjectiveSum is{mono.to(), pc.cover.summands};
  return {is, make_unchecked(m, is.module, mono.mats())};
}

// ---------------------------------------------------------------- factorization

std::optional<RepMorphism> factors_through(const RepMorphism& alpha, const RepMorphism& alpha_prime) {
  if (!(alpha.to() == alpha_prime.to())) throw ContractViolation("factors_through: targets differ");
  HomSpace h(alpha_prime.from(), alpha.from());
  const FieldSpec f = alpha.from().field();
  const std::size_t n = RepMorphism::flat_dim(alpha_prime.from(), alpha.to());
  std::vector<Mat> cols;
  for (const auto& phi : h.basis()) cols.push_back((alpha * phi).flatten());
  Mat a = Mat::hstack(cols, f, n);
  auto sol = solve_all(a, alpha_prime.flatten());
  if (!sol) return std::nullopt;
  return h.element(sol->particular);
}

std::optional<RepMorphism> extends_through(const RepMorphism& e, const RepMorphism& f) {
  if (!(e.from() == f.from())) throw ContractViolation("extends_through: domains differ");
  HomSpace h(e.to(), f.to());
  const FieldSpec fs = e.from().field();
  const std::size_t n = RepMorphism::flat_dim(f.from(), f.to());
  std::vector<Mat> cols;
  for (const auto& g : h.basis()) cols.push_back((g * e).flatten());
  Mat a = Mat::hstack(cols, fs, n);
  auto sol = solve_all(a, f.flatten());
  if (!sol) return std::nullopt;
  return h.element(sol->particular);
}

RepMorphism extend_along_mono(const RepMorphism& e, const RepMorphism& f) {
  if (!e.is_mono()) throw ContractViolation("extend_along_mono: map is not a monomorphism");
  auto g = extends_through(e, f);
  if (!g) throw PreconditionError("extend_along_mono: no extension exists (target not injective?)");
  return *g;
}

Pushout pushout(const RepMorphism& f, const RepMorphism& g) {
  if (!(f.from() == g.from())) throw ContractViolation("pushout: domains differ");
  DirectSum bc = direct_sum({f.to(), g.to()});
  RepMorphism d = column_map({f, Scalar(-1) * g});
  d = make_unchecked(d.from(), bc.sum, d.mats());
  SubResult q = cokernel(d);
  return {q.module, q.map * bc.injections[0], q.map * bc.injections[1]};
}

bool is_projective(const Rep& m) { return projective_cover(m).cover.module.total_dim() == m.total_dim(); }
bool is_injective(const Rep& m) { return injective_envelope(m).envelope.module.total_dim() == m.total_dim(); }
bool is_semisimple(const Rep& m) { return radical(m).total_dim() == 0; }

}  // namespace morphdet
