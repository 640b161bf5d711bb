#include "morphdet/kernel_determined.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace morphdet {

SmallEnvelope small_envelope(const Rep& m) {
  SmallEnvelope s;
  s.base = m;
  s.injective = injective_envelope(m);
  SubResult omega = cokernel(s.injective.mono);
  s.sub = preimage(omega.map, socle(omega.module));
  SubResult env = sub_to_rep(s.sub);
  s.envelope = env.module;
  s.inclusion = env.map;
  s.embedding = restrict_codomain(env, s.injective.mono);
  return s;
}

EpiContext i_epsilon(const RepMorphism& eps) {
  if (!eps.is_epi()) throw PreconditionError("i_epsilon: map is not an epimorphism");
  EpiContext c;
  c.epsilon = eps;
  c.x_envelope = small_envelope(eps.from());
  c.n_envelope = small_envelope(eps.to());
  const RepMorphism& mono = c.n_envelope.injective.mono;
  c.n_sub = image_sub(mono);
  RepMorphism target = mono * eps;
  const RepMorphism& mu = c.x_envelope.embedding;
  HomSpace h(c.x_envelope.envelope, c.injective());
  const FieldSpec f = eps.from().field();
  const std::size_t flat = RepMorphism::flat_dim(eps.from(), c.injective());
  std::vector<Mat> cols;
  for (const auto& g : h.basis()) cols.push_back((g * mu).flatten());
  auto sol = solve_all(Mat::hstack(cols, f, flat), target.flatten());
  if (!sol) throw std::logic_error("i_epsilon: no extension to the small envelope");
  c.extension = h.element(sol->particular);
  c.i_epsilon = image_sub(c.extension);
  // A second extension must have the same image.
  Mat other = sol->particular;
  const Mat& hom = sol->homogeneous.basis;
  for (std::size_t k = 0; k < hom.cols(); ++k) other = other + hom.col(k);
  if (!(image_sub(h.element(other)) == c.i_epsilon)) throw std::logic_error("i_epsilon: extension images differ");
  return c;
}

bool meets_i_epsilon_in_n(const EpiContext& ctx, const SubRep& y) {
  if (!y.contains(ctx.n_sub)) throw ContractViolation("submodule does not contain N");
  return intersect(y, ctx.i_epsilon) == ctx.n_sub;
}

RepMorphism prolongation_map(const EpiContext& ctx, const SubRep& y) {
  return restrict_codomain(sub_to_rep(y), ctx.n_envelope.injective.mono * ctx.epsilon);
}

KernelDeterminedVerdict kernel_determined_verdict(const RepMorphism& alpha, bool cross_check, std::uint64_t seed) {
  KernelDeterminedVerdict v;
  SubResult im = image(alpha);
  v.essential = image_sub(alpha).contains(socle(alpha.to()));
  if (v.essential) {
    EpiContext ctx = i_epsilon(corestrict_to_image(alpha, im));
    RepMorphism g = extend_along_mono(im.map, ctx.n_envelope.injective.mono);
    v.kernel_determined = meets_i_epsilon_in_n(ctx, image_sub(g));
  }
  if (cross_check) {
    v.no_projective = minimal_determiner(alpha, seed).projective_summands.empty();
    if (v.no_projective != v.kernel_determined)
      throw std::logic_error("kernel-determined: envelope criterion and minimal determiner disagree");
  }
  return v;
}

bool is_kernel_determined(const RepMorphism& alpha, bool cross_check, std::uint64_t seed) {
  return kernel_determined_verdict(alpha, cross_check, seed).kernel_determined;
}

Prolongation maximal_prolongation(const EpiContext& ctx) {
  std::vector<Subspace> spaces;
  const SubRep& bar = ctx.n_envelope.sub;
  for (std::size_t x = 0; x < bar.spaces().size(); ++x) {
    const Vertex v = static_cast<Vertex>(x);
    Subspace comp = complement_in(ctx.i_epsilon.at(v), bar.at(v));
    spaces.push_back(sum(ctx.n_sub.at(v), comp));
  }
  Prolongation p;
  p.z = SubRep(ctx.injective(), std::move(spaces));
  p.module = sub_to_rep(p.z).module;
  p.map = prolongation_map(ctx, p.z);
  p.length = p.z.total_dim();
  p.predicted_length = ctx.n_sub.total_dim() + bar.total_dim() - ctx.i_epsilon.total_dim();
  if (p.length != p.predicted_length || !meets_i_epsilon_in_n(ctx, p.z))
    throw std::logic_error("maximal_prolongation: length formula or criterion fails");
  return p;
}

std::size_t socle_growth_length(const EpiContext& ctx) {
  return ctx.n_envelope.sub.total_dim() - ctx.i_epsilon.total_dim();
}

namespace {

// Every subspace of F_p^k, as column-basis matrices (k x r).
std::vector<Mat> all_subspaces(const FieldSpec& f, std::size_t k) {
  std::vector<Mat> out;
  const std::uint32_t p = f.p;
  for (std::size_t r = 0; r <= k; ++r) {
    std::vector<std::size_t> piv(r);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t start) {
      if (i == r) {
        std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
        for (std::size_t row = 0; row < r; ++row)
          for (std::size_t col = piv[row] + 1; col < k; ++col)
            if (std::find(piv.begin(), piv.end(), col) == piv.end()) free.emplace_back(row, col);
        std::vector<std::uint32_t> digits(free.size(), 0);
        while (true) {
          Mat b(f, k, r);
          for (std::size_t row = 0; row < r; ++row) b(piv[row], row) = f.one();
          for (std::size_t t = 0; t < free.size(); ++t) b(free[t].second, free[t].first) = f.from_int(digits[t]);
          out.push_back(std::move(b));
          std::size_t t = 0;
          while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
          if (t == digits.size()) break;
        }
        return;
      }
      for (std::size_t c = start; c < k; ++c) {
        piv[i] = c;
        choose(i + 1, c + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

double subspace_count(std::uint32_t p, std::size_t k) {
  // Sum of Gaussian binomials.
  double total = 0;
  for (std::size_t r = 0; r <= k; ++r) {
    double g = 1;
    for (std::size_t i = 0; i < r; ++i) g *= (std::pow(double(p), double(k - i)) - 1) / (std::pow(double(p), double(i + 1)) - 1);
    total += g;
  }
  return total;
}

bool closed_under_arrows(const Rep& m, const std::vector<Subspace>& spaces) {
  const Quiver& q = m.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(static_cast<int>(a));
    const Subspace& src = spaces[static_cast<std::size_t>(arr.source)];
    const Subspace& dst = spaces[static_cast<std::size_t>(arr.target)];
    if (src.is_zero()) continue;
    Mat img = m.arrow(static_cast<int>(a)) * src.basis_columns();
    for (std::size_t k = 0; k < img.cols(); ++k)
      if (!dst.contains(img.col(k))) return false;
  }
  return true;
}

}  // namespace

std::vector<SubRep> intermediate_submodules(const SubRep& lower, const SubRep& upper, std::size_t limit) {
  if (!upper.contains(lower)) throw ContractViolation("intermediate_submodules: lower is not contained in upper");
  const Rep& m = upper.ambient();
  const FieldSpec f = m.field();
  if (!f.is_prime_field()) throw PreconditionError("submodule enumeration needs a prime field");
  const std::size_t nv = m.vertex_count();
  std::vector<Mat> comps;
  double count = 1;
  for (std::size_t x = 0; x < nv; ++x) {
    const Vertex v = static_cast<Vertex>(x);
    comps.push_back(complement_in(lower.at(v), upper.at(v)).basis_columns());
    count *= subspace_count(f.p, comps.back().cols());
  }
  if (count > static_cast<double>(limit)) throw PreconditionError("submodule enumeration exceeds the limit");
  std::vector<std::vector<Subspace>> options(nv);
  for (std::size_t x = 0; x < nv; ++x) {
    const Vertex v = static_cast<Vertex>(x);
    for (const Mat& s : all_subspaces(f, comps[x].cols())) {
      if (s.cols() == 0) {
        options[x].push_back(lower.at(v));
        continue;
      }
      options[x].push_back(sum(lower.at(v), Subspace::column_span(comps[x] * s)));
    }
  }
  std::vector<SubRep> out;
  std::vector<Subspace> pick(nv);
  std::function<void(std::size_t)> walk = [&](std::size_t x) {
    if (x == nv) {
      if (closed_under_arrows(m, pick)) out.emplace_back(m, pick);
      return;
    }
    for (const auto& s : options[x]) {
      pick[x] = s;
      walk(x + 1);
    }
  };
  walk(0);
  return out;
}

SubRep LineFamily::member(const Scalar& t) const {
  std::vector<Subspace> spaces = base.spaces();
  auto& s = spaces[static_cast<std::size_t>(vertex)];
  s = sum(s, Subspace::column_span(u + t * w));
  return SubRep(base.ambient(), std::move(spaces));
}

KernelDeterminedExtensions enumerate_kernel_determined_extensions(const EpiContext& ctx) {
  KernelDeterminedExtensions r;
  const SubRep& bar = ctx.n_envelope.sub;
  if (ctx.n().field().is_prime_field()) {
    for (const auto& y : intermediate_submodules(ctx.n_sub, bar))
      if (meets_i_epsilon_in_n(ctx, y)) r.members.push_back(y);
    return r;
  }
  r.members.push_back(ctx.n_sub);
  if (bar == ctx.i_epsilon) return r;
  // Over Q: one vertex where \bar N/N is a plane and I_eps(N)/N a line in it.
  std::optional<Vertex> plane;
  for (std::size_t x = 0; x < bar.spaces().size(); ++x) {
    const Vertex v = static_cast<Vertex>(x);
    const std::size_t w = bar.at(v).dim() - ctx.n_sub.at(v).dim();
    const std::size_t e = ctx.i_epsilon.at(v).dim() - ctx.n_sub.at(v).dim();
    if (w == 0) continue;
    if (w != 2 || e != 1 || plane) throw PreconditionError("enumeration over the rationals is only supported for a single line family");
    plane = v;
  }
  if (!plane) return r;
  LineFamily fam;
  fam.vertex = *plane;
  fam.base = ctx.n_sub;
  fam.w = complement_in(ctx.n_sub.at(*plane), ctx.i_epsilon.at(*plane)).basis_columns().col(0);
  fam.u = complement_in(ctx.i_epsilon.at(*plane), bar.at(*plane)).basis_columns().col(0);
  r.families.push_back(std::move(fam));
  return r;
}

}  // namespace morphdet
