#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace morphdet;
using namespace morphdet::testing;

namespace {

using Dims = std::vector<std::size_t>;

// Number of module maps m -> n over F_p by enumerating every tuple of matrices.
std::size_t brute_hom_count(const Rep& m, const Rep& n) {
  const FieldSpec f = m.field();
  std::size_t entries = 0;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) entries += m.dim(static_cast<Vertex>(v)) * n.dim(static_cast<Vertex>(v));
  std::vector<std::int64_t> c(entries, 0);
  std::size_t count = 0;
  while (true) {
    std::vector<Mat> mats;
    std::size_t k = 0;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      Mat x(f, n.dim(static_cast<Vertex>(v)), m.dim(static_cast<Vertex>(v)));
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = f.from_int(c[k++]);
      mats.push_back(x);
    }
    bool commutes = true;
    const Quiver& q = m.algebra()->quiver();
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arr = q.arrow(static_cast<int>(a));
      commutes = commutes && mats[static_cast<std::size_t>(arr.target)] * m.arrow(static_cast<int>(a)) ==
                                 n.arrow(static_cast<int>(a)) * mats[static_cast<std::size_t>(arr.source)];
    }
    count += commutes;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == static_cast<std::int64_t>(f.p)) c[i++] = 0;
    if (i == c.size()) break;
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("standard modules") {
  AlgebraPtr A = a3();
  CHECK(projective(A, 2).dims() == Dims{1, 1, 1});
  CHECK(projective(A, 0) == simple(A, 0));
  CHECK(injective(A, 2) == simple(A, 2));
  CHECK(projective(a2(), 1).dims() == Dims{1, 1});
  AlgebraPtr B = ex6();
  CHECK(injective(B, 1).dims() == Dims{0, 1, 2, 1});
  CHECK(projective(B, 3).dims() == Dims{0, 1, 1, 1});
  CHECK(recognized_name(sub_to_rep(radical(projective(B, 3))).module) == "R(b)");
  for (auto alg : {a3(), ex6(), uniserial3()})
    for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
      Rep p = projective(alg, static_cast<Vertex>(x));
      for (std::size_t y = 0; y < alg->vertex_count(); ++y)
        CHECK(p.dim(static_cast<Vertex>(y)) == alg->basis_between(static_cast<Vertex>(x), static_cast<Vertex>(y)).size());
    }
}

TEST_CASE("relations are enforced") {
  AlgebraPtr U = uniserial3();
  Mat shift(U->field(), 3, 3);
  shift(1, 0) = Scalar(1);
  shift(2, 1) = Scalar(1);
  CHECK_NOTHROW(Rep(U, {3}, {shift}));
  Mat bad = Mat::identity(U->field(), 2);
  CHECK_THROWS_AS(Rep(U, {2}, {bad}), ContractViolation);
}

TEST_CASE("Hom spaces") {
  AlgebraPtr A = a3();
  Rep m = projective(A, 2);
  HomSpace e(m, m);
  CHECK(e.coordinates(RepMorphism::identity(m)).rows() == e.dim());
  CHECK(e.element(e.coordinates(RepMorphism::identity(m))) == RepMorphism::identity(m));
  CHECK(HomSpace(projective(A, 1), projective(A, 2)).dim() == A->basis_between(2, 1).size());
  CHECK(HomSpace(projective(A, 1), projective(A, 2)).dim() == 1);
  CHECK(HomSpace(projective(a2(), 1), simple(a2(), 0)).dim() == 0);
}

TEST_CASE("Hom dimensions agree with enumeration over F3") {
  for (auto alg : {a3(FieldSpec::prime(3)), uniserial3(FieldSpec::prime(3))}) {
    auto u = nakayama_universe(alg);
    for (const auto& x : u)
      for (const auto& y : u) CHECK(ipow(3, HomSpace(x, y).dim()) == brute_hom_count(x, y));
  }
  AlgebraPtr B = ex6(FieldSpec::prime(3));
  Rep rb = sub_to_rep(radical(projective(B, 3))).module;
  CHECK(ipow(3, HomSpace(rb, injective(B, 1)).dim()) == brute_hom_count(rb, injective(B, 1)));
  CHECK(ipow(3, HomSpace(simple(B, 1), rb).dim()) == brute_hom_count(simple(B, 1), rb));
}

TEST_CASE("kernels, cokernels, images") {
  AlgebraPtr A = a3();
  Rep p3 = projective(A, 2);
  RepMorphism id = RepMorphism::identity(p3);
  CHECK(kernel(id).module.is_zero());
  CHECK(cokernel(id).module.is_zero());
  RepMorphism alpha = sub_to_rep(socle(p3)).map;
  CHECK(alpha.from() == simple(A, 0));
  CHECK(kernel(alpha).module.is_zero());
  CHECK(cokernel(alpha).module.dims() == Dims{0, 1, 1});
  CHECK(is_isomorphic(image(alpha).module, simple(A, 0)));
  CHECK(quotient(p3, socle(p3)).module.dims() == Dims{0, 1, 1});
  CHECK(preimage(id, socle(p3)) == socle(p3));

  AlgebraPtr B = a2();
  RepMorphism zero = RepMorphism::zero(Rep::zero(B), projective(B, 1));
  CHECK(cokernel(zero).module == projective(B, 1));
}

TEST_CASE("radical, socle, top") {
  AlgebraPtr A = a3();
  for (std::size_t x = 0; x < 3; ++x) {
    Rep s = simple(A, static_cast<Vertex>(x));
    CHECK(radical(s).total_dim() == 0);
    CHECK(socle(s).total_dim() == 1);
  }
  Rep q = cokernel(sub_to_rep(socle(projective(A, 2))).map).module;
  CHECK(sub_to_rep(socle(q)).module == simple(A, 1));
  AlgebraPtr U = uniserial3();
  Rep m3 = projective(U, 0);
  CHECK(radical(m3).total_dim() == 2);
  CHECK(socle(m3).total_dim() == 1);
  CHECK(top(m3).module == simple(U, 0));
}

TEST_CASE("projective covers and injective envelopes") {
  AlgebraPtr A = a3();
  for (std::size_t x = 0; x < 3; ++x)
    CHECK(projective_cover(simple(A, static_cast<Vertex>(x))).cover.summands == std::vector<Vertex>{static_cast<Vertex>(x)});
  Rep q = cokernel(sub_to_rep(socle(projective(A, 2))).map).module;
  CHECK(projective_cover(q).cover.summands == std::vector<Vertex>{2});
  CHECK(projective_cover(sub_to_rep(socle(q)).module).cover.summands == std::vector<Vertex>{1});
  AlgebraPtr B = ex6();
  InjectiveEnvelope e = injective_envelope(simple(B, 1));
  CHECK(e.envelope.summands == std::vector<Vertex>{1});
  CHECK(e.envelope.module.dims() == Dims{0, 1, 2, 1});
  CHECK(e.mono.is_mono());
}

TEST_CASE("factoring and extending") {
  AlgebraPtr A = a3();
  Rep p2 = projective(A, 1), p3 = projective(A, 2);
  RepMorphism alpha = sub_to_rep(socle(p3)).map;
  auto phi = factors_through(alpha, alpha);
  REQUIRE(phi);
  CHECK(alpha * *phi == alpha);
  RepMorphism incl = HomSpace(p2, p3).basis().at(0);
  CHECK(incl.is_mono());
  CHECK_FALSE(factors_through(alpha, incl));

  AlgebraPtr B = a2();
  RepMorphism zero = RepMorphism::zero(Rep::zero(B), projective(B, 1));
  RepMorphism s1 = sub_to_rep(socle(projective(B, 1))).map;
  CHECK_FALSE(factors_through(zero, s1));

  RepMorphism f = HomSpace(p2, p3).basis().at(0);
  CHECK(extend_along_mono(RepMorphism::identity(p2), f) == f);

  // Extending the identity of M2 along M2 inside M3 gives an automorphism of M3.
  AlgebraPtr U = uniserial3();
  SubResult m2 = sub_to_rep(radical(projective(U, 0)));
  RepMorphism g = extend_along_mono(m2.map, m2.map);
  CHECK(g.is_iso());
}

TEST_CASE("direct sums") {
  AlgebraPtr A = a2();
  DirectSum d = direct_sum({simple(A, 0), projective(A, 1)});
  CHECK(d.sum.dims() == Dims{2, 1});
  CHECK(d.projections[0] * d.injections[0] == RepMorphism::identity(simple(A, 0)));
  CHECK((d.projections[1] * d.injections[0]).is_zero());
}
