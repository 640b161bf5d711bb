#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace morphdet;
using namespace morphdet::testing;

namespace {

std::vector<std::string> middle_names(const ArSequence& s) {
  std::vector<std::string> out;
  for (const auto& p : krull_schmidt(s.ses.middle).parts) out.push_back(recognized_name(p));
  return out;
}

}  // namespace

TEST_CASE("A2") {
  AlgebraPtr A = a2();
  ArSequence s = ar_sequence(simple(A, 1));
  CHECK(s.ses.left == simple(A, 0));
  CHECK(is_isomorphic(s.ses.middle, projective(A, 1)));
  CHECK(verify_almost_split(s, nakayama_universe(A)));
  RepMorphism rho = minimal_right_almost_split(simple(A, 1));
  CHECK(is_isomorphic(rho.from(), projective(A, 1)));
}

TEST_CASE("A3 at I(2)") {
  AlgebraPtr A = a3();
  ArSequence s = ar_sequence(injective(A, 1));
  CHECK(is_isomorphic(s.ses.left, projective(A, 1)));
  CHECK(middle_names(s) == std::vector<std::string>{"S(2)", "P(3)"});
  CHECK(nakayama_universe(A).size() == 6);
  CHECK(verify_almost_split(s, nakayama_universe(A)));
}

TEST_CASE("every non-projective indecomposable") {
  for (auto alg : {a2(), a3(), uniserial3(), a3(FieldSpec::prime(2))}) {
    auto u = nakayama_universe(alg);
    for (const auto& n : u) {
      if (is_projective(n)) continue;
      ArSequence s = ar_sequence(n);
      CHECK(is_isomorphic(s.ses.left, tau(n)));
      CHECK(s.ses.middle.total_dim() == s.ses.left.total_dim() + n.total_dim());
      CHECK(verify_almost_split(s, u));
    }
  }
}

TEST_CASE("truncated polynomial ring") {
  AlgebraPtr U = uniserial3();
  Rep m3 = projective(U, 0);
  Rep m2 = sub_to_rep(radical(m3)).module;
  ArSequence s = ar_sequence(m2);
  CHECK(middle_names(s) == std::vector<std::string>{"S(1)", "P(1)"});
  RepMorphism rho = minimal_right_almost_split(m3);
  CHECK(rho.from().dims() == std::vector<std::size_t>{2});
  CHECK(rho.is_mono());
}

TEST_CASE("radical inclusion for projectives") {
  AlgebraPtr A = a3();
  RepMorphism rho = minimal_right_almost_split(projective(A, 2));
  CHECK(rho.from().dims() == std::vector<std::size_t>{1, 1, 0});
  CHECK(rho.is_mono());
}

TEST_CASE("split sequences fail verification") {
  AlgebraPtr A = a2();
  DirectSum d = direct_sum({simple(A, 0), simple(A, 1)});
  ArSequence split{{simple(A, 0), d.sum, simple(A, 1), d.injections[0], d.projections[1]}};
  CHECK_FALSE(verify_almost_split(split, nakayama_universe(A)));
}

TEST_CASE("radical maps") {
  AlgebraPtr A = a3();
  Rep p3 = projective(A, 2);
  HomSpace e(p3, p3);
  CHECK(radical_maps(e).dim() == 0);
  HomSpace h(projective(A, 1), p3);
  CHECK(radical_maps(h).dim() == 1);
  Rep m3 = projective(uniserial3(), 0);
  CHECK(radical_maps(HomSpace(m3, m3)).dim() == 2);
}
