#include "morphdet/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace morphdet {

Mat FinDimAlgebra::left_matrix(const Mat& x) const {
  Mat acc(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (!x(i, 0).is_zero()) acc = acc + x(i, 0) * left_mult[i];
  return acc;
}

namespace {
Mat global_matrix(const RepMorphism& f) { return Mat::block_diagonal(f.mats(), f.from().field()); }
}  // namespace

EndAlgebra end_algebra(const Rep& m) {
  EndAlgebra e;
  e.space = HomSpace(m, m);
  const std::size_t d = e.space.dim();
  e.algebra.field = m.field();
  e.algebra.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    Mat l(m.field(), d, d);
    for (std::size_t j = 0; j < d; ++j) l.set_block(0, j, e.space.coordinates(e.space[i] * e.space[j]));
    e.algebra.left_mult.push_back(std::move(l));
  }
  e.algebra.unit = e.space.coordinates(RepMorphism::identity(m));
  for (const auto& b : e.space.basis()) e.algebra.action.push_back(global_matrix(b));
  return e;
}

namespace {

using IntMat = std::vector<std::vector<std::int64_t>>;

IntMat mul_mod(const IntMat& a, const IntMat& b, std::int64_t q) {
  const std::size_t n = a.size();
  IntMat c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] = static_cast<std::int64_t>((c[i][j] + static_cast<__int128>(a[i][k]) * b[k][j]) % q);
    }
  return c;
}

// Tr(A^e) mod q for the integer lift A of an F_p matrix.
std::int64_t trace_power_mod(const Mat& m, std::uint64_t e, std::int64_t q) {
  const std::size_t n = m.rows();
  IntMat base(n, std::vector<std::int64_t>(n));
  IntMat acc(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    acc[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) base[i][j] = m(i, j).small_numerator();
  }
  for (; e; e >>= 1) {
    if (e & 1) acc = mul_mod(acc, base, q);
    if (e > 1) base = mul_mod(base, base, q);
  }
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + acc[i][i]) % q;
  return t;
}

}  // namespace

Subspace algebra_radical(const FinDimAlgebra& e) {
  const std::size_t n = e.dim;
  const std::vector<Mat>& rho = e.action.empty() ? e.left_mult : e.action;
  const std::size_t deg = n == 0 ? 0 : rho[0].rows();
  auto rep_of = [&](const Mat& x) {
    Mat acc(e.field, deg, deg);
    for (std::size_t i = 0; i < n; ++i)
      if (!x(i, 0).is_zero()) acc = acc + x(i, 0) * rho[i];
    return acc;
  };
  const std::uint32_t p = e.field.characteristic();
  if (p == 0 || p > deg) {
    Mat gram(e.field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Scalar tr = e.field.zero();
        for (std::size_t r = 0; r < deg; ++r)
          for (std::size_t k = 0; k < deg; ++k) tr += rho[i](r, k) * rho[j](k, r);
        gram(i, j) = tr;
        gram(j, i) = tr;
      }
    return kernel_of(gram);
  }
  // Small characteristic: I_i = {x in I_(i-1) : g_i(xy) = 0 for all y} with
  // g_i(z) = Tr(z^(p^i)) / p^i mod p, computed on integer lifts.
  Subspace cur = Subspace::full(e.field, n);
  for (std::uint64_t pi = 1; pi <= deg && !cur.is_zero(); pi *= p) {
    const auto q = static_cast<std::int64_t>(pi * p);
    Mat u = cur.basis_columns();
    Mat g(e.field, n, u.cols());
    for (std::size_t k = 0; k < u.cols(); ++k) {
      Mat ru = rep_of(u.col(k));
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t t = trace_power_mod(ru * rho[j], pi, q);
        g(j, k) = e.field.from_int(t / static_cast<std::int64_t>(pi));
      }
    }
    cur = image_of(u, kernel_of(g));
  }
  return cur;
}

// ---------------------------------------------------------------- Fitting

FittingSplit fitting_decomposition(const RepMorphism& phi) {
  if (!(phi.from() == phi.to())) throw ContractViolation("fitting: not an endomorphism");
  RepMorphism power = phi;
  std::size_t r = power.rank();
  while (true) {
    RepMorphism next = power * phi;
    std::size_t rn = next.rank();
    if (rn == r) break;
    power = next;
    r = rn;
  }
  return {kernel(power), image(power)};
}

std::optional<FittingSplit> fitting_split(const RepMorphism& phi) {
  FittingSplit s = fitting_decomposition(phi);
  if (s.kernel_part.module.is_zero() || s.image_part.module.is_zero()) return std::nullopt;
  return s;
}

namespace {

struct Part {
  Rep module;
  RepMorphism incl, proj;
};

// Inclusions of a decomposition X = A + B together with matching projections.
std::pair<Part, Part> split_parts(const Rep& m, const SubResult& a, const SubResult& b) {
  RepMorphism glue = row_map({a.map, b.map});
  std::vector<Mat> inv;
  for (const auto& mat : glue.mats()) inv.push_back(inverse(mat));
  RepMorphism ginv = make_unchecked(m, glue.from(), std::move(inv));
  DirectSum ds = direct_sum({a.module, b.module});
  RepMorphism pa = make_unchecked(m, a.module, (ds.projections[0] * ginv).mats());
  RepMorphism pb = make_unchecked(m, b.module, (ds.projections[1] * ginv).mats());
  return {Part{a.module, a.map, pa}, Part{b.module, b.map, pb}};
}

// Solve x a x = x modulo rad; return e = x a, idempotent modulo rad.
std::optional<Mat> idempotent_from(const FinDimAlgebra& e, const Subspace& rad, const Mat& x) {
  Mat lx = e.left_matrix(x);
  std::vector<Mat> cols;
  for (std::size_t k = 0; k < e.dim; ++k) cols.push_back(lx * (e.left_mult[k] * x));
  Mat rb = rad.basis_columns();
  for (std::size_t k = 0; k < rb.cols(); ++k) cols.push_back(rb.col(k));
  auto sol = solve_all(Mat::hstack(cols, e.field, e.dim), x);
  if (!sol) return std::nullopt;
  Mat a = sol->particular.block(0, 0, e.dim, 1);
  return lx * a;
}

std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs) {
  // coeffs[k] is the coefficient of t^k.
  std::vector<Scalar> roots;
  std::size_t lo = 0;
  while (lo < coeffs.size() && coeffs[lo].is_zero()) ++lo;
  if (lo > 0) roots.push_back(Scalar(0));
  if (lo + 1 >= coeffs.size()) return roots;
  mpz_class den = 1;
  for (const auto& c : coeffs) {
    mpz_class d = c.to_mpq().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  auto integral = [&](const Scalar& c) { return mpz_class(c.to_mpq() * den); };
  mpz_class a0 = abs(integral(coeffs[lo])), an = abs(integral(coeffs.back()));
  const mpz_class limit("1000000000000");
  if (a0 > limit || an > limit) return roots;
  auto divisors = [](mpz_class v) {
    std::vector<long> out;
    long n = v.get_si();
    for (long d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
      }
    return out;
  };
  for (long pnum : divisors(a0))
    for (long q : divisors(an))
      for (int sgn : {1, -1}) {
        Scalar cand = Scalar::rational(sgn * pnum, q);
        Scalar v(0);
        for (std::size_t k = coeffs.size(); k-- > 0;) v = v * cand + coeffs[k];
        if (v.is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
      }
  return roots;
}

// Eigenvalues in the base field of the endomorphism with global matrix g.
std::vector<Scalar> field_eigenvalues(const Mat& g) {
  const FieldSpec f = g.field();
  const std::size_t n = g.rows();
  std::vector<Scalar> out;
  if (n == 0) return out;
  if (f.is_prime_field()) {
    if (f.p > 5000) return out;
    for (std::uint32_t l = 0; l < f.p; ++l)
      if (rank(g - f.from_int(l) * Mat::identity(f, n)) < n) out.push_back(f.from_int(l));
    return out;
  }
  // Characteristic polynomial by interpolation at 0..n.
  std::vector<Scalar> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Scalar t = f.from_int(static_cast<std::int64_t>(k));
    xs.push_back(t);
    ys.push_back(determinant(t * Mat::identity(f, n) - g));
  }
  std::vector<Scalar> poly(n + 1, f.zero());
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Scalar> basis{f.one()};
    Scalar denom = f.one();
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Scalar> next(basis.size() + 1, f.zero());
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= xs[j] * basis[k];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    Scalar w = ys[i] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += w * basis[k];
  }
  return rational_roots(poly);
}

class SplitSearch {
 public:
  SplitSearch(const Rep& m, std::uint64_t seed) : m_(m), rng_(seed ^ 0x9e3779b97f4a7c15ULL) {
    end_ = end_algebra(m);
    rad_ = algebra_radical(end_.algebra);
  }

  const EndAlgebra& end() const { return end_; }
  const Subspace& rad() const { return rad_; }
  std::size_t top_dim() const { return end_.algebra.dim - rad_.dim(); }

  std::optional<FittingSplit> find() {
    if (m_.is_zero() || top_dim() <= 1) return std::nullopt;
    const FinDimAlgebra& e = end_.algebra;
    const FieldSpec f = e.field;
    const std::size_t d = e.dim;
    auto unit = [&](std::size_t i) { return Mat::unit_column(f, d, i); };
    for (std::size_t i = 0; i < d; ++i)
      if (auto s = try_candidate(unit(i))) return s;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (auto s = try_candidate(unit(i) + unit(j))) return s;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (auto s = try_candidate(e.product(unit(i), unit(j)))) return s;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
      Mat x(f, d, 1);
      for (std::size_t i = 0; i < d; ++i) x(i, 0) = f.from_int(coeff(rng_));
      if (auto s = try_candidate(x)) return s;
    }
    if (f.is_prime_field()) {
      const std::size_t q = top_dim();
      double count = 1;
      for (std::size_t k = 0; k < q; ++k) count *= f.p;
      if (count <= 1e4) {
        Mat comp = rad_.standard_complement_columns();
        std::vector<std::uint32_t> digits(q, 0);
        for (std::uint64_t idx = 1; idx < static_cast<std::uint64_t>(count); ++idx) {
          std::uint64_t v = idx;
          Mat x(f, d, 1);
          for (std::size_t k = 0; k < q; ++k, v /= f.p)
            if (v % f.p) x = x + f.from_int(static_cast<std::int64_t>(v % f.p)) * comp.col(k);
          if (auto s = try_candidate(x)) return s;
        }
      }
    }
    // Over Q no split was found: End/rad is treated as a division algebra.
    return std::nullopt;
  }

 private:
  std::optional<FittingSplit> try_candidate(const Mat& x) {
    if (rad_.contains(x)) return std::nullopt;
    RepMorphism g = end_.space.element(x);
    if (!g.is_iso()) return from_zero_divisor(x);
    for (const Scalar& l : field_eigenvalues(global_matrix(g))) {
      Mat y = x - l * end_.algebra.unit;
      if (!rad_.contains(y))
        if (auto s = from_zero_divisor(y)) return s;
    }
    return std::nullopt;
  }

  std::optional<FittingSplit> from_zero_divisor(const Mat& x) {
    auto e = idempotent_from(end_.algebra, rad_, x);
    if (!e) return std::nullopt;
    return fitting_split(end_.space.element(*e));
  }

  Rep m_;
  std::mt19937_64 rng_;
  EndAlgebra end_;
  Subspace rad_;
};

void collect_parts(const Part& whole, std::uint64_t seed, std::vector<Part>& out) {
  if (whole.module.is_zero()) return;
  SplitSearch search(whole.module, seed);
  auto s = search.find();
  if (!s) {
    out.push_back(whole);
    return;
  }
  auto [a, b] = split_parts(whole.module, s->kernel_part, s->image_part);
  for (Part* p : {&a, &b}) {
    Part lifted{p->module, whole.incl * p->incl, p->proj * whole.proj};
    collect_parts(lifted, seed + 1, out);
  }
}

std::string canonical_bytes(const Rep& m) {
  std::ostringstream os;
  for (const auto& a : m.arrow_maps())
    for (const auto& s : a.data()) os << s.str() << ',';
  return os.str();
}

}  // namespace

Decomposition krull_schmidt(const Rep& m, std::uint64_t seed) {
  std::vector<Part> parts;
  collect_parts(Part{m, RepMorphism::identity(m), RepMorphism::identity(m)}, seed, parts);
  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.module.dims() != b.module.dims()) return a.module.dims() < b.module.dims();
    return canonical_bytes(a.module) < canonical_bytes(b.module);
  });
  Decomposition d;
  d.module = m;
  for (const auto& p : parts) {
    std::size_t cls = d.summands.size();
    for (std::size_t c = 0; c < d.summands.size(); ++c)
      if (isomorphic_indecomposables(d.summands[c], p.module)) {
        cls = c;
        break;
      }
    if (cls == d.summands.size()) {
      d.summands.push_back(p.module);
      d.multiplicity.push_back(0);
    }
    ++d.multiplicity[cls];
    d.class_of.push_back(cls);
    d.parts.push_back(p.module);
    d.inclusions.push_back(p.incl);
    d.projections.push_back(p.proj);
  }
  if (parts.empty()) {
    d.to_sum = RepMorphism::identity(m);
    d.from_sum = RepMorphism::identity(m);
  } else {
    d.to_sum = column_map(d.projections);
    d.from_sum = row_map(d.inclusions);
  }
  return d;
}

bool is_indecomposable(const Rep& m, std::uint64_t seed) {
  if (m.is_zero()) return false;
  SplitSearch s(m, seed);
  return !s.find();
}

std::optional<RepMorphism> iso_between_indecomposables(const Rep& m, const Rep& n) {
  if (m.dims() != n.dims() || !same_algebra(m.algebra(), n.algebra())) return std::nullopt;
  if (m.is_zero()) return RepMorphism::zero(m, n);
  HomSpace hmn(m, n), hnm(n, m);
  if (hmn.dim() == 0 || hnm.dim() == 0) return std::nullopt;
  for (const auto& f : hmn.basis())
    if (f.is_iso()) return f;
  EndAlgebra e = end_algebra(m);
  Subspace rad = algebra_radical(e.algebra);
  for (const auto& f : hmn.basis())
    for (const auto& g : hnm.basis())
      if (!rad.contains(e.space.coordinates(g * f))) {
        // g f is a unit of the local ring End(m), so f is split mono.
        if (f.is_iso()) return f;
      }
  return std::nullopt;
}

bool isomorphic_indecomposables(const Rep& m, const Rep& n) { return iso_between_indecomposables(m, n).has_value(); }

std::optional<RepMorphism> find_isomorphism(const Rep& m, const Rep& n, std::uint64_t seed) {
  if (m.dims() != n.dims() || !same_algebra(m.algebra(), n.algebra())) return std::nullopt;
  if (m.is_zero()) return RepMorphism::zero(m, n);
  HomSpace h(m, n);
  if (h.dim() == 0) return std::nullopt;
  for (const auto& f : h.basis())
    if (f.is_iso()) return f;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  const FieldSpec fs = m.field();
  for (int trial = 0; trial < 20; ++trial) {
    Mat c(fs, h.dim(), 1);
    for (std::size_t i = 0; i < h.dim(); ++i) c(i, 0) = fs.from_int(coeff(rng));
    RepMorphism f = h.element(c);
    if (f.is_iso()) return f;
  }
  // Constructive fallback: match indecomposable parts.
  Decomposition dm = krull_schmidt(m, seed), dn = krull_schmidt(n, seed);
  if (dm.parts.size() != dn.parts.size()) return std::nullopt;
  std::vector<bool> used(dn.parts.size(), false);
  RepMorphism total = RepMorphism::zero(m, n);
  for (std::size_t i = 0; i < dm.parts.size(); ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.parts.size() && !matched; ++j) {
      if (used[j]) continue;
      if (auto f = iso_between_indecomposables(dm.parts[i], dn.parts[j])) {
        used[j] = true;
        matched = true;
        total = total + dn.inclusions[j] * (*f) * dm.projections[i];
      }
    }
    if (!matched) return std::nullopt;
  }
  return total;
}

bool is_isomorphic(const Rep& m, const Rep& n, std::uint64_t seed) { return find_isomorphism(m, n, seed).has_value(); }

bool in_add(const Rep& m, const Rep& c) {
  if (m.is_zero()) return true;
  if (c.is_zero()) return false;
  HomSpace to_c(m, c), from_c(c, m), end(m, m);
  const FieldSpec f = m.field();
  std::vector<Mat> cols;
  for (const auto& phi : to_c.basis())
    for (const auto& psi : from_c.basis()) cols.push_back(end.coordinates(psi * phi));
  if (cols.empty()) return false;
  Subspace span = Subspace::column_span(Mat::hstack(cols, f, end.dim()));
  return span.contains(end.coordinates(RepMorphism::identity(m)));
}

std::optional<RepMorphism> split_mono_check(const RepMorphism& f) {
  if (!f.is_mono()) throw ContractViolation("split_mono_check: map is not a monomorphism");
  return extends_through(f, RepMorphism::identity(f.from()));
}

RightMinimalVersion right_minimal_version(const RepMorphism& alpha) {
  const Rep& x = alpha.from();
  const FieldSpec f = x.field();
  Part cur{x, RepMorphism::identity(x), RepMorphism::identity(x)};
  std::vector<Part> pieces;
  while (!cur.module.is_zero()) {
    RepMorphism a = alpha * cur.incl;
    EndAlgebra e = end_algebra(cur.module);
    Subspace rad = algebra_radical(e.algebra);
    // U = {g : a g = 0}, a right ideal of End.
    std::vector<Mat> cols;
    for (const auto& g : e.space.basis()) cols.push_back((a * g).flatten());
    const std::size_t n = RepMorphism::flat_dim(cur.module, alpha.to());
    Subspace u = e.algebra.dim == 0 ? Subspace::zero(f, 0)
                                    : (n == 0 ? Subspace::full(f, e.algebra.dim) : kernel_of(Mat::hstack(cols, f, n)));
    if (rad.contains(u)) break;
    Mat ub = u.basis_columns();
    std::optional<Mat> pick;
    for (std::size_t k = 0; k < ub.cols() && !pick; ++k)
      if (!rad.contains(ub.col(k))) pick = ub.col(k);
    auto idem = idempotent_from(e.algebra, rad, *pick);
    if (!idem) throw std::logic_error("right_minimal_version: idempotent lifting failed");
    FittingSplit s = fitting_decomposition(e.space.element(*idem));
    if (s.image_part.module.is_zero()) throw std::logic_error("right_minimal_version: nilpotent lift");
    if (s.kernel_part.module.is_zero()) {
      pieces.push_back(cur);
      cur = Part{Rep::zero(x.algebra()), RepMorphism::zero(Rep::zero(x.algebra()), x),
                 RepMorphism::zero(x, Rep::zero(x.algebra()))};
      break;
    }
    auto [kp, ip] = split_parts(cur.module, s.kernel_part, s.image_part);
    pieces.push_back(Part{ip.module, cur.incl * ip.incl, ip.proj * cur.proj});
    cur = Part{kp.module, cur.incl * kp.incl, kp.proj * cur.proj};
  }
  RightMinimalVersion r;
  r.x1 = cur.module;
  r.incl1 = cur.incl;
  r.proj1 = cur.proj;
  r.alpha1 = alpha * cur.incl;
  if (pieces.empty()) {
    r.x0 = Rep::zero(x.algebra());
    r.incl0 = RepMorphism::zero(r.x0, x);
    r.proj0 = RepMorphism::zero(x, r.x0);
  } else {
    std::vector<RepMorphism> incls, projs;
    for (const auto& p : pieces) {
      incls.push_back(p.incl);
      projs.push_back(p.proj);
    }
    r.incl0 = row_map(incls);
    r.proj0 = column_map(projs);
    r.x0 = r.incl0.from();
  }
  return r;
}

Rep intrinsic_kernel(const RepMorphism& alpha) { return kernel(right_minimal_version(alpha).alpha1).module; }

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + "]";
}

namespace {

std::optional<std::string> kronecker_name(const Rep& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (m.dims()[v]) support.push_back(v);
  if (support.size() != 2 || m.dims()[support[0]] != 1 || m.dims()[support[1]] != 1) return std::nullopt;
  std::vector<int> parallel;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    bool inside = (static_cast<std::size_t>(arr.source) == support[0] || static_cast<std::size_t>(arr.source) == support[1]) &&
                  (static_cast<std::size_t>(arr.target) == support[0] || static_cast<std::size_t>(arr.target) == support[1]) &&
                  arr.source != arr.target;
    if (inside) parallel.push_back(static_cast<int>(a));
  }
  if (parallel.size() != 2) return std::nullopt;
  if (q.arrow(parallel[0]).source != q.arrow(parallel[1]).source) return std::nullopt;
  const Scalar beta = m.arrow(parallel[0])(0, 0), gamma = m.arrow(parallel[1])(0, 0);
  if (beta.is_zero() && gamma.is_zero()) return std::nullopt;
  const std::string& b = q.arrow(parallel[0]).name;
  const std::string& c = q.arrow(parallel[1]).name;
  // Annihilated by l1 b + l2 c with (l1, l2) proportional to (gamma, -beta).
  if (gamma.is_zero()) return "R(" + c + ")";
  Scalar l2 = -beta / gamma;
  if (l2.is_zero()) return "R(" + b + ")";
  std::string coeff = l2.is_one() ? "" : l2.str();
  std::string sign = "+";
  if (!coeff.empty() && coeff[0] == '-') {
    sign = "-";
    coeff = coeff.substr(1);
    if (coeff == "1") coeff.clear();
  }
  return "R(" + b + sign + coeff + c + ")";
}

std::string indecomposable_name(const Rep& m) {
  const AlgebraPtr& alg = m.algebra();
  const Quiver& q = alg->quiver();
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    const Vertex v = static_cast<Vertex>(x);
    if (m.total_dim() == 1 && m.dims()[x] == 1) return "S(" + q.vertex_name(v) + ")";
  }
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    const Vertex v = static_cast<Vertex>(x);
    Rep p = projective(alg, v);
    if (p.dims() == m.dims() && isomorphic_indecomposables(p, m)) return "P(" + q.vertex_name(v) + ")";
  }
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    const Vertex v = static_cast<Vertex>(x);
    Rep i = injective(alg, v);
    if (i.dims() == m.dims() && isomorphic_indecomposables(i, m)) return "I(" + q.vertex_name(v) + ")";
  }
  if (auto k = kronecker_name(m)) return *k;
  return "M" + dims_string(m.dims());
}

}  // namespace

std::string recognized_name(const Rep& m, std::uint64_t seed) {
  if (m.is_zero()) return "0";
  Decomposition d = krull_schmidt(m, seed);
  std::string out;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (i) out += " + ";
    out += indecomposable_name(d.parts[i]);
  }
  return out;
}

}  // namespace morphdet
