#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace morphdet;
using namespace morphdet::testing;

TEST_CASE("endomorphism algebras and radicals") {
  AlgebraPtr A = a2();
  CHECK(end_algebra(simple(A, 0)).algebra.dim == 1);
  CHECK(algebra_radical(end_algebra(simple(A, 0)).algebra).dim() == 0);
  Rep ss = direct_sum({simple(A, 0), simple(A, 0)}).sum;
  CHECK(end_algebra(ss).algebra.dim == 4);
  CHECK(algebra_radical(end_algebra(ss).algebra).dim() == 0);
  CHECK(algebra_radical(end_algebra(direct_sum({simple(A, 0), simple(A, 1)}).sum).algebra).dim() == 0);
  AlgebraPtr U = uniserial3();
  EndAlgebra e = end_algebra(projective(U, 0));
  CHECK(e.algebra.dim == 3);
  CHECK(algebra_radical(e.algebra).dim() == 2);
}

TEST_CASE("radical in small characteristic") {
  // End(M3) over F2 and F3: the trace form degenerates, the radical does not.
  for (std::uint32_t p : {2u, 3u}) {
    AlgebraPtr U = uniserial3(FieldSpec::prime(p));
    CHECK(algebra_radical(end_algebra(projective(U, 0)).algebra).dim() == 2);
    Rep ss = direct_sum({simple(U, 0), simple(U, 0), simple(U, 0)}).sum;
    CHECK(algebra_radical(end_algebra(ss).algebra).dim() == 0);
  }
}

TEST_CASE("Fitting decomposition") {
  AlgebraPtr A = a2();
  DirectSum d = direct_sum({simple(A, 0), simple(A, 1)});
  RepMorphism e = d.injections[0] * d.projections[0];
  auto split = fitting_split(e);
  REQUIRE(split);
  CHECK(split->image_part.module == simple(A, 0));
  CHECK(split->kernel_part.module == simple(A, 1));
  CHECK_FALSE(fitting_split(RepMorphism::identity(d.sum)));
  AlgebraPtr U = uniserial3();
  Rep m3 = projective(U, 0);
  CHECK_FALSE(fitting_split(HomSpace(m3, m3).basis().at(1)));
}

TEST_CASE("Krull-Schmidt") {
  AlgebraPtr A = a3();
  Decomposition p3 = krull_schmidt(projective(A, 2));
  CHECK(p3.parts.size() == 1);
  CHECK(p3.multiplicity == std::vector<std::size_t>{1});
  Decomposition ss = krull_schmidt(direct_sum({simple(A, 0), simple(A, 0)}).sum);
  CHECK(ss.summands.size() == 1);
  CHECK(ss.multiplicity == std::vector<std::size_t>{2});
  Decomposition mixed = krull_schmidt(direct_sum({simple(A, 1), simple(A, 0), simple(A, 0)}).sum);
  CHECK(mixed.summands.size() == 2);
  CHECK(mixed.from_sum * mixed.to_sum == RepMorphism::identity(mixed.module));
  CHECK(mixed.to_sum * mixed.from_sum == RepMorphism::identity(mixed.to_sum.to()));
  Decomposition mid = krull_schmidt(ar_sequence(injective(A, 1)).ses.middle);
  std::vector<std::string> names;
  for (const auto& s : mid.summands) names.push_back(recognized_name(s));
  CHECK(names == std::vector<std::string>{"S(2)", "P(3)"});
}

TEST_CASE("Krull-Schmidt on a twisted module") {
  // S(1) + P(2) glued through a change of basis stays decomposable.
  AlgebraPtr A = a2();
  Rep m = direct_sum({simple(A, 0), projective(A, 1)}).sum;
  Mat g(A->field(), 2, 2);
  g(0, 0) = Scalar(1);
  g(0, 1) = Scalar(1);
  g(1, 1) = Scalar(1);
  Rep twisted(A, m.dims(), {g * m.arrow(0)});
  Decomposition d = krull_schmidt(twisted);
  CHECK(d.parts.size() == 2);
  CHECK(is_isomorphic(twisted, m));
}

TEST_CASE("Kronecker modules over F5") {
  AlgebraPtr B = ex6();
  std::vector<std::string> names;
  for (int lambda = 0; lambda < 5; ++lambda) {
    Mat one(B->field(), 1, 1), l(B->field(), 1, 1);
    one(0, 0) = Scalar(1);
    l(0, 0) = B->field().from_int(lambda);
    // b acts as 1, c as lambda.
    Rep r(B, {0, 1, 1, 0}, {Mat(B->field(), 0, 1), one, l, Mat(B->field(), 1, 0)});
    names.push_back(recognized_name(r));
  }
  CHECK(names[0] == "R(c)");
  std::set<std::string> distinct(names.begin(), names.end());
  CHECK(distinct.size() == 5);
  CHECK(is_indecomposable(sub_to_rep(radical(projective(B, 3))).module));
}

TEST_CASE("add and split monos") {
  AlgebraPtr A = a3();
  Rep p2 = projective(A, 1);
  CHECK(in_add(p2, p2));
  CHECK_FALSE(in_add(simple(A, 0), projective(A, 2)));
  CHECK(in_add(direct_sum({p2, p2}).sum, p2));
  CHECK(split_mono_check(RepMorphism::identity(p2)));
  CHECK_FALSE(split_mono_check(sub_to_rep(socle(projective(A, 2))).map));
  DirectSum d = direct_sum({simple(A, 0), p2});
  auto r = split_mono_check(d.injections[1]);
  REQUIRE(r);
  CHECK(*r * d.injections[1] == RepMorphism::identity(p2));
}

TEST_CASE("right minimal version and intrinsic kernel") {
  AlgebraPtr A = a3();
  RepMorphism mono = sub_to_rep(socle(projective(A, 2))).map;
  RightMinimalVersion rm = right_minimal_version(mono);
  CHECK(rm.x0.is_zero());
  CHECK(intrinsic_kernel(mono).is_zero());

  Rep s = simple(A, 0);
  DirectSum ss = direct_sum({s, s});
  RepMorphism sum = row_map({RepMorphism::identity(s), RepMorphism::identity(s)});
  sum = make_unchecked(ss.sum, s, sum.mats());
  RightMinimalVersion rs = right_minimal_version(sum);
  CHECK(rs.x0 == s);
  CHECK((sum * rs.incl0).is_zero());
  CHECK(intrinsic_kernel(sum).is_zero());

  RepMorphism alpha = HomSpace(projective(A, 1), injective(A, 1)).basis().at(0);
  Rep k = intrinsic_kernel(alpha);
  CHECK(recognized_name(k) == "S(1)");
  CHECK(is_isomorphic(k, projective(A, 0)));
  CHECK(is_isomorphic(k, sub_to_rep(radical(projective(A, 1))).module));
}

TEST_CASE("recognized names") {
  AlgebraPtr A = a3();
  CHECK(recognized_name(Rep::zero(A)) == "0");
  CHECK(recognized_name(projective(A, 2)) == "P(3)");
  CHECK(recognized_name(injective(A, 1)) == "I(2)");
  CHECK(recognized_name(direct_sum({simple(A, 1), projective(A, 2)}).sum) == "S(2) + P(3)");
  CHECK(recognized_name(sub_to_rep(radical(projective(uniserial3(), 0))).module) == "M[2]");
}
