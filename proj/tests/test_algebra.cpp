#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace morphdet;
using namespace morphdet::testing;

namespace {

// Nonzero paths of a quiver with monomial relations, by brute force over
// arrow words. Returns (source, target) -> count, trivial paths included.
std::map<std::pair<std::string, std::string>, std::size_t> monomial_path_count(
    const std::vector<std::string>& vertices, const std::vector<Quiver::ArrowSpec>& arrows,
    const std::vector<std::vector<std::string>>& zero_words, std::size_t max_len) {
  std::map<std::pair<std::string, std::string>, std::size_t> out;
  for (const auto& v : vertices) out[{v, v}] = 1;
  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t a = 0; a < arrows.size(); ++a) frontier.push_back({a});
  auto dies = [&](const std::vector<std::size_t>& w) {
    for (const auto& z : zero_words)
      for (std::size_t s = 0; s + z.size() <= w.size(); ++s) {
        bool match = true;
        for (std::size_t k = 0; k < z.size(); ++k) match = match && arrows[w[s + k]].name == z[k];
        if (match) return true;
      }
    return false;
  };
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : frontier) {
      if (dies(w)) continue;
      ++out[{arrows[w.front()].source, arrows[w.back()].target}];
      for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].source == arrows[w.back()].target) {
          auto w2 = w;
          w2.push_back(a);
          next.push_back(w2);
        }
    }
    frontier = std::move(next);
  }
  return out;
}

std::size_t total(const std::map<std::pair<std::string, std::string>, std::size_t>& m) {
  std::size_t t = 0;
  for (const auto& [k, v] : m) t += v;
  return t;
}

}  // namespace

TEST_CASE("A2 path algebra") {
  AlgebraPtr A = a2();
  CHECK(A->dim() == 3);
  CHECK(A->nilpotency_index() == 2);
  std::set<std::string> names;
  for (std::size_t i = 0; i < A->dim(); ++i) names.insert(A->basis_name(i));
  CHECK(names == std::set<std::string>{"e1", "e2", "a"});
}

TEST_CASE("truncated polynomial ring") {
  AlgebraPtr U = uniserial3();
  CHECK(U->dim() == 3);
  CHECK(U->nilpotency_index() == 3);
}

TEST_CASE("four-vertex algebra against monomial path enumeration") {
  std::vector<std::string> vs{"1", "2", "3", "4"};
  std::vector<Quiver::ArrowSpec> as{{"a", "2", "1"}, {"b", "3", "2"}, {"c", "3", "2"}, {"d", "4", "3"}};
  auto counts = monomial_path_count(vs, as, {{"c", "a"}, {"d", "b"}}, 8);
  AlgebraPtr B = ex6(FieldSpec::rationals());
  CHECK(B->dim() == total(counts));
  CHECK(B->dim() == 10);
  const Quiver& q = B->quiver();
  for (const auto& x : vs)
    for (const auto& y : vs)
      CHECK(B->basis_between(q.vertex(x), q.vertex(y)).size() == (counts.count({x, y}) ? counts.at({x, y}) : 0));
  // 3 -> 1 only through b then a; nothing reaches 1 from 4.
  CHECK(B->basis_between(q.vertex("3"), q.vertex("1")).size() == 1);
  CHECK(B->basis_between(q.vertex("4"), q.vertex("1")).empty());
  CHECK(B->basis_between(q.vertex("4"), q.vertex("2")).size() == 1);
  CHECK(ex6()->dim() == 10);
}

TEST_CASE("A3 blocks") {
  AlgebraPtr A = a3();
  const auto& ps = A->basis_between(2, 0);
  REQUIRE(ps.size() == 1);
  CHECK(A->basis()[ps[0]].length() == 2);
  for (std::size_t x = 0; x < 3; ++x) {
    const auto& loops = A->basis_between(static_cast<Vertex>(x), static_cast<Vertex>(x));
    REQUIRE(!loops.empty());
    CHECK(A->basis()[loops[0]].length() == 0);
  }
}

TEST_CASE("opposite algebra") {
  AlgebraPtr A = a2();
  AlgebraPtr O = A->opposite();
  CHECK(O->dim() == 3);
  const Arrow& a = O->quiver().arrow(0);
  CHECK(O->quiver().vertex_name(a.source) == "1");
  CHECK(O->quiver().vertex_name(a.target) == "2");
  CHECK(O->opposite().get() == A.get());
  for (auto alg : {a3(), ex6(), uniserial3()}) {
    AlgebraPtr op = alg->opposite();
    CHECK(op->dim() == alg->dim());
    for (std::size_t x = 0; x < alg->vertex_count(); ++x)
      for (std::size_t y = 0; y < alg->vertex_count(); ++y)
        CHECK(op->basis_between(static_cast<Vertex>(y), static_cast<Vertex>(x)).size() ==
              alg->basis_between(static_cast<Vertex>(x), static_cast<Vertex>(y)).size());
  }
}

TEST_CASE("non-admissible input") {
  Quiver loop({"1"}, {{"x", "1", "1"}});
  CHECK_THROWS_AS(build_algebra(loop, {}, FieldSpec::rationals(), 6), PreconditionError);
  CHECK_THROWS_AS(Quiver({"1"}, {{"x", "1", "2"}}), ContractViolation);
  CHECK_THROWS_AS(build_algebra(loop, {Relation{{{Scalar(1), {"y"}}}}}, FieldSpec::rationals()), ContractViolation);
}

TEST_CASE("non-monomial relation") {
  // Commutative square: b a = d c from 4 to 1.
  Quiver q({"1", "2", "3", "4"}, {{"a", "2", "1"}, {"b", "4", "2"}, {"c", "3", "1"}, {"d", "4", "3"}});
  AlgebraPtr C = build_algebra(q, {Relation{{{Scalar(1), {"b", "a"}}, {Scalar(-1), {"d", "c"}}}}}, FieldSpec::rationals());
  CHECK(C->dim() == 4 + 4 + 1);
  CHECK(C->basis_between(3, 0).size() == 1);
}
