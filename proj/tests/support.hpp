#pragma once

// Shared builders for the test programs.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "morphdet/session.hpp"

namespace morphdet::testing {

inline AlgebraPtr a2(FieldSpec f = FieldSpec::rationals()) {
  return build_algebra(Quiver({"1", "2"}, {{"a", "2", "1"}}), {}, f);
}

inline AlgebraPtr a3(FieldSpec f = FieldSpec::rationals()) {
  return build_algebra(Quiver({"1", "2", "3"}, {{"a", "2", "1"}, {"b", "3", "2"}}), {}, f);
}

inline AlgebraPtr uniserial3(FieldSpec f = FieldSpec::rationals()) {
  return build_algebra(Quiver({"1"}, {{"x", "1", "1"}}), {Relation{{{Scalar(1), {"x", "x", "x"}}}}}, f);
}

// a: 2->1, b, c: 3->2, d: 4->3 with ca = 0 and db = 0.
inline AlgebraPtr ex6(FieldSpec f = FieldSpec::prime(5)) {
  Quiver q({"1", "2", "3", "4"}, {{"a", "2", "1"}, {"b", "3", "2"}, {"c", "3", "2"}, {"d", "4", "3"}});
  return build_algebra(q, {Relation{{{Scalar(1), {"c", "a"}}}}, Relation{{{Scalar(1), {"d", "b"}}}}}, f);
}

/// P(x)/rad^k P(x) for all x and k >= 1. For the Nakayama fixtures these are
/// all indecomposables.
inline std::vector<Rep> nakayama_universe(const AlgebraPtr& alg) {
  std::vector<Rep> out;
  for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
    Rep p = projective(alg, static_cast<Vertex>(x));
    RepMorphism incl = RepMorphism::identity(p);
    while (!incl.from().is_zero()) {
      SubResult r = sub_to_rep(radical(incl.from()));
      incl = incl * r.map;
      Rep q = cokernel(incl).module;
      bool seen = false;
      for (const auto& u : out) seen = seen || (u.dims() == q.dims() && isomorphic_indecomposables(u, q));
      if (!seen) out.push_back(q);
    }
  }
  return out;
}

/// Every element of a Hom space over a prime field, or the basis plus zero
/// over Q.
inline std::vector<RepMorphism> hom_elements(const HomSpace& h) {
  std::vector<RepMorphism> out{RepMorphism::zero(h.from(), h.to())};
  const FieldSpec f = h.from().field();
  if (!f.is_prime_field()) {
    for (const auto& b : h.basis()) out.push_back(b);
    return out;
  }
  std::vector<std::int64_t> c(h.dim(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == static_cast<std::int64_t>(f.p)) c[k++] = 0;
    if (k == c.size()) break;
    std::vector<Scalar> coords;
    for (auto v : c) coords.push_back(f.from_int(v));
    out.push_back(h.element(coords));
  }
  return out;
}

struct Sweep {
  std::string name;
  AlgebraPtr alg;
  std::vector<Rep> universe;
  std::vector<RepMorphism> maps;  // between universe members
};

inline Sweep make_sweep(const std::string& name, const AlgebraPtr& alg) {
  Sweep s{name, alg, nakayama_universe(alg), {}};
  for (const auto& x : s.universe)
    for (const auto& y : s.universe)
      for (auto& f : hom_elements(HomSpace(x, y))) s.maps.push_back(std::move(f));
  return s;
}

inline std::vector<Sweep> standard_sweeps() {
  return {make_sweep("A2/Q", a2()),
          make_sweep("A3/Q", a3()),
          make_sweep("x3/Q", uniserial3()),
          make_sweep("A2/F5", a2(FieldSpec::prime(5))),
          make_sweep("A3/F5", a3(FieldSpec::prime(5))),
          make_sweep("x3/F5", uniserial3(FieldSpec::prime(5)))};
}

/// Iso classes of indecomposable summands of m, one representative each.
inline std::vector<Rep> summand_classes(const Rep& m) {
  if (m.is_zero()) return {};
  return krull_schmidt(m).summands;
}

inline bool same_classes(const std::vector<Rep>& a, const std::vector<Rep>& b) {
  auto covered = [](const std::vector<Rep>& xs, const std::vector<Rep>& ys) {
    for (const auto& x : xs) {
      bool found = false;
      for (const auto& y : ys) found = found || (x.dims() == y.dims() && isomorphic_indecomposables(x, y));
      if (!found) return false;
    }
    return true;
  };
  return a.size() == b.size() && covered(a, b) && covered(b, a);
}

inline Rep sum_of(const AlgebraPtr& alg, const std::vector<Rep>& parts) {
  return parts.empty() ? Rep::zero(alg) : direct_sum(parts).sum;
}

/// Random epimorphism from a sum of universe members onto the image of a
/// random map into another universe member.
inline RepMorphism random_epi(const std::vector<Rep>& universe, std::mt19937_64& rng) {
  const FieldSpec f = universe.front().field();
  std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> count(1, 2);
  while (true) {
    std::vector<Rep> parts;
    for (int k = count(rng); k > 0; --k) parts.push_back(universe[pick(rng)]);
    Rep x = direct_sum(parts).sum;
    Rep y = universe[pick(rng)];
    HomSpace h(x, y);
    if (h.dim() == 0) continue;
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < h.dim(); ++i) c.push_back(f.from_int(coeff(rng)));
    RepMorphism g = h.element(c);
    if (g.is_zero()) continue;
    return corestrict_to_image(g, image(g));
  }
}

}  // namespace morphdet::testing
