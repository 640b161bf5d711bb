// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace morphdet;
using namespace morphdet::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "failed: " << what;
    ok = ok && cond;
  }
};

std::size_t class_index(const std::vector<Rep>& universe, const Rep& m) {
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (universe[i].dims() == m.dims() && isomorphic_indecomposables(universe[i], m)) return i;
  return universe.size();
}

bool is_named(const Rep& m, const std::string& name) { return recognized_name(m) == name; }

void criterion1(Outcome& o) {
  AlgebraPtr A = a3();
  auto u = nakayama_universe(A);
  Rep p2 = projective(A, 1), p3 = projective(A, 2);
  RepMorphism alpha = sub_to_rep(socle(p3)).map;
  Determination d = determine(p3, alpha);
  o.require(!d.determined, "P(3) must not determine");
  o.require(d.witness && is_named(d.witness->from(), "P(2)") && d.witness->is_mono(), "witness inclusion P(2) -> P(3)");
  OracleVerdict v = oracle_check(p3, alpha, u);
  o.require(!v.determined && v.witness_index && is_named(u[*v.witness_index], "P(2)"), "oracle witness P(2)");
  o.require(determines(p2, alpha) && determines_oracle(p2, alpha, u), "P(2) determines");
  DeterminerReport r = minimal_determiner(alpha);
  o.require(r.t.size() == 1 && is_named(r.t[0], "P(2)"), "T = {P(2)}");
  o.note << "T = {P(2)}, P(3) fails with witness P(2)";
}

void criterion2(Outcome& o) {
  AlgebraPtr A = a2();
  auto u = nakayama_universe(A);
  Rep p2 = projective(A, 1);
  RepMorphism alpha = RepMorphism::zero(Rep::zero(A), p2);
  Determination d = determine(p2, alpha);
  o.require(!d.determined && d.witness && is_named(d.witness->from(), "S(1)"), "witness from S(1)");
  OracleVerdict v = oracle_check(p2, alpha, u);
  o.require(!v.determined && v.witness_index && is_named(u[*v.witness_index], "S(1)"), "oracle witness S(1)");
  DeterminerReport r = minimal_determiner(alpha);
  o.require(r.t.size() == 1 && is_named(r.t[0], "S(1)"), "T = {S(1)}");
  o.note << "T = {S(1)}, P(2) fails with witness S(1)";
}

void criterion3(Outcome& o, const std::vector<Sweep>& sweeps) {
  std::size_t n = 0;
  for (const auto& s : sweeps)
    for (const auto& alpha : s.maps) {
      ++n;
      o.require(determines_oracle(auslander_determiner(alpha).module, alpha, s.universe), s.name + ": Auslander module");
    }
  o.note << n << " morphisms over " << sweeps.size() << " fixtures";
}

void criterion4(Outcome& o, const std::vector<Sweep>& sweeps) {
  std::size_t n = 0, agree = 0, positive = 0;
  for (const auto& s : sweeps) {
    for (const auto& alpha : s.maps) {
      DeterminerReport r = minimal_determiner(alpha);
      o.require(determines_oracle(r.t_sum, alpha, s.universe), s.name + ": T determines");
      for (std::size_t k = 0; k < r.t.size(); ++k) {
        std::vector<Rep> rest;
        for (std::size_t i = 0; i < r.t.size(); ++i)
          if (i != k) rest.push_back(r.t[i]);
        o.require(!determines_oracle(sum_of(s.alg, rest), alpha, s.universe), s.name + ": dropping a summand");
      }
      ++n;
    }
    std::mt19937_64 rng(0xc0ffee ^ std::hash<std::string>{}(s.name));
    std::uniform_int_distribution<std::size_t> pick_map(0, s.maps.size() - 1), pick(0, s.universe.size() - 1);
    std::uniform_int_distribution<int> count(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
      const RepMorphism& alpha = s.maps[pick_map(rng)];
      std::vector<Rep> parts;
      for (int k = count(rng); k > 0; --k) parts.push_back(s.universe[pick(rng)]);
      Rep c = sum_of(s.alg, parts);
      const bool det = determines(c, alpha);
      const bool same = det == determines_oracle(c, alpha, s.universe);
      o.require(same, s.name + ": random candidate disagreement");
      agree += same;
      positive += det;
    }
  }
  o.note << n << " minimal determiners, " << agree << " random candidates agree (" << positive << " determine)";
}

void criterion5(Outcome& o) {
  AlgebraPtr A = a3();
  Rep p2 = projective(A, 1), i2 = injective(A, 1);
  HomSpace h(p2, i2);
  o.require(h.dim() == 1, "Hom(P(2), I(2)) is one-dimensional");
  DeterminerReport r = minimal_determiner(h.basis().at(0));
  std::set<std::string> names;
  for (const auto& t : r.t) names.insert(recognized_name(t));
  o.require(names == std::set<std::string>{"S(2)", "P(3)"}, "T = {S(2), P(3)}");
  ArSequence seq = ar_sequence(i2);
  o.require(same_classes(r.t, summand_classes(seq.ses.middle)), "T matches the middle term");
  o.note << "T = {S(2), P(3)} = middle term at I(2)";
}

void criterion6(Outcome& o, const std::vector<Sweep>& sweeps) {
  std::size_t n = 0, tests = 0;
  for (const auto& s : sweeps)
    for (const auto& alpha : s.maps) {
      DeterminerReport r = minimal_determiner(alpha);
      std::vector<Rep> nonproj, expected;
      for (const auto& t : r.t)
        if (!is_projective(t)) nonproj.push_back(t);
      for (const auto& l : summand_classes(intrinsic_kernel(alpha))) {
        Rep tm = tau_minus(l);
        if (!tm.is_zero()) expected.push_back(tm);
      }
      o.require(same_classes(nonproj, expected), s.name + ": non-projective part of T");
      for (const auto& m : s.universe) {
        bool af = almost_factors_through(m, alpha).has_value();
        bool add = !r.t_sum.is_zero() && in_add(m, r.t_sum);
        o.require(af == add, s.name + ": almost factoring vs add T");
        ++tests;
      }
      ++n;
    }
  o.note << n << " morphisms, " << tests << " (n, alpha) pairs";
}

void criterion7(Outcome& o, const std::vector<Sweep>& sweeps) {
  std::size_t n = 0, factoring = 0, kd = 0;
  for (const auto& s : sweeps) {
    if (s.name.rfind("x3", 0) != 0) continue;
    Rep p = projective(s.alg, 0);
    for (const auto& alpha : s.maps) {
      if (alpha.from().dims() == p.dims() && almost_factors_through(p, alpha)) {
        o.require(alpha.is_zero(), s.name + ": P almost factors only through 0");
        ++factoring;
      }
      const bool expected = (!alpha.is_zero() && is_projective(alpha.from())) || alpha.is_epi();
      const bool got = is_kernel_determined(alpha);
      o.require(got == expected, s.name + ": kernel-determined dichotomy");
      kd += got;
      ++n;
    }
  }
  AlgebraPtr B = ex6();
  ProjPresentation pres = minimal_projective_presentation(simple(B, 3));
  o.require(!almost_factors_through(projective(B, 3), pres.map), "P(4) against the presentation of S(4)");
  o.note << n << " local uniserial maps, " << kd << " kernel-determined, P almost factors through " << factoring
         << "; P(4) does not almost factor";
}

void criterion8(Outcome& o) {
  AlgebraPtr B = ex6();
  Rep p2 = projective(B, 1);
  EpiContext ctx = i_epsilon(top(p2).map);
  Rep ie = sub_to_rep(ctx.i_epsilon).module;
  const int c = B->quiver().arrow_index("c");
  o.require(ie.dims() == std::vector<std::size_t>{0, 1, 1, 0} && ie.arrow(c).is_zero() && is_named(ie, "R(c)"),
            "I_eps = R(c)");
  KernelDeterminedExtensions ex = enumerate_kernel_determined_extensions(ctx);
  std::set<std::string> names;
  for (const auto& y : ex.members) {
    names.insert(recognized_name(sub_to_rep(y).module));
    o.require(is_kernel_determined(prolongation_map(ctx, y)), "members are kernel-determined");
  }
  o.require(ex.members.size() == 6 &&
                names == std::set<std::string>{"S(2)", "R(b)", "R(b+c)", "R(b+2c)", "R(b+3c)", "R(b+4c)"},
            "six members N, R(b + lambda c)");
  Prolongation z = maximal_prolongation(ctx);
  const std::size_t nn = ctx.n_sub.total_dim(), nbar = ctx.n_envelope.sub.total_dim(), ne = ctx.i_epsilon.total_dim();
  o.require(nn == 1 && nbar == 3 && ne == 2 && z.length == 2 && z.length == nn + nbar - ne, "|Z| = 1 + 3 - 2");
  std::size_t with_proper = 0;
  for (const auto& y : ex.members) {
    if (y == ctx.n_sub) continue;
    for (const auto& yy : intermediate_submodules(y, SubRep::full(ctx.injective()))) {
      if (yy == y || !meets_i_epsilon_in_n(ctx, yy)) continue;
      ++with_proper;
      Rep ym = sub_to_rep(y).module, yym = sub_to_rep(yy).module;
      o.require(is_named(ym, "R(b)") && is_isomorphic(yym, projective(B, 3)), "only R(b) grows, to P(4)");
      o.require(is_kernel_determined(prolongation_map(ctx, yy)), "X -> P(4) is kernel-determined");
    }
  }
  o.require(with_proper == 1, "exactly one proper prolongation");
  // The same composite through rad P(4) inside P(4).
  SubResult rb = sub_to_rep(radical(projective(B, 3)));
  for (const auto& y : ex.members) {
    Rep ym = sub_to_rep(y).module;
    if (!is_named(ym, "R(b)")) continue;
    auto iso = find_isomorphism(ym, rb.module);
    o.require(iso.has_value(), "R(b) member is rad P(4)");
    if (iso) o.require(is_kernel_determined(rb.map * *iso * prolongation_map(ctx, y)), "X -> R(b) -> P(4) is kernel-determined");
  }
  o.note << "I_eps = R(c), 6 members, |Z| = 2, one proper prolongation";
}

std::vector<Rep> ex6_modules(const AlgebraPtr& B) {
  std::vector<Rep> out;
  for (std::size_t x = 0; x < B->vertex_count(); ++x)
    for (const Rep& m : {simple(B, static_cast<Vertex>(x)), projective(B, static_cast<Vertex>(x)),
                         injective(B, static_cast<Vertex>(x))})
      if (class_index(out, m) == out.size()) out.push_back(m);
  out.push_back(sub_to_rep(radical(projective(B, 3))).module);
  out.push_back(cokernel(sub_to_rep(socle(injective(B, 0))).map).module);
  return out;
}

void criterion9(Outcome& o) {
  struct Fx {
    std::string name;
    AlgebraPtr alg;
    std::vector<Rep> mods;
    bool hereditary;
  };
  std::vector<Fx> fxs;
  for (auto [name, alg, her] : {std::tuple{"A2", a2(), true}, std::tuple{"A3", a3(), true},
                                std::tuple{"x3", uniserial3(), false}})
    fxs.push_back({name, alg, nakayama_universe(alg), her});
  AlgebraPtr B = ex6();
  fxs.push_back({"ex6", B, ex6_modules(B), false});
  std::size_t checks = 0, epis = 0;
  for (const auto& f : fxs) {
    for (const auto& m : f.mods) {
      if (!is_injective(m)) o.require(is_isomorphic(tau(tau_minus(m)), m), f.name + ": tau tau^- M = M"), ++checks;
      if (!is_projective(m)) o.require(is_isomorphic(tau_minus(tau(m)), m), f.name + ": tau^- tau M = M"), ++checks;
      o.require(is_isomorphic(tau_minus(m), transpose(dual(m))), f.name + ": tau^- = Tr D"), ++checks;
      if (f.hereditary)
        for (const auto& n : f.mods) o.require(ext(m, n, 2).dimension == 0, f.name + ": Ext^2 vanishes"), ++checks;
    }
    std::mt19937_64 rng(0x5eed ^ std::hash<std::string>{}(f.name));
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
      RepMorphism eps = random_epi(f.mods, rng);
      EpiContext ctx = i_epsilon(eps);
      // Any other extension differs by a map killing X.
      const RepMorphism& emb = ctx.x_envelope.embedding;
      HomSpace from_bar(emb.to(), ctx.injective()), from_x(emb.from(), ctx.injective());
      std::vector<Mat> cols;
      for (const auto& b : from_bar.basis()) cols.push_back(from_x.coordinates(b * emb));
      RepMorphism other = ctx.extension;
      if (!cols.empty()) {
        NullspaceBasis ns = nullspace_basis(Mat::hstack(cols, eps.from().field(), from_x.dim()));
        for (std::size_t k = 0; k < ns.basis.cols(); ++k)
          other = other + eps.from().field().from_int(coeff(rng)) * from_bar.element(ns.basis.col(k));
      }
      o.require(other * emb == ctx.extension * emb, f.name + ": second extension restricts to eps");
      o.require(image_sub(other) == ctx.i_epsilon, f.name + ": extension image independent of choice");
      ++epis;
    }
  }
  o.note << checks << " functor identities, " << epis << " random epimorphisms";
}

void criterion10(Outcome& o, const std::vector<Sweep>& sweeps) {
  std::size_t n = 0;
  auto bound = [&](const AlgebraPtr& alg, const RepMorphism& alpha, const std::string& where) {
    std::size_t q = 0;
    for (std::size_t x = 0; x < alg->vertex_count(); ++x) q = std::max(q, injective(alg, static_cast<Vertex>(x)).total_dim());
    o.require(alpha.to().total_dim() <= q * alpha.from().total_dim(), where + ": |Y| <= q |X|");
    ++n;
  };
  for (const auto& s : sweeps)
    for (const auto& alpha : s.maps)
      if (is_kernel_determined(alpha)) bound(s.alg, alpha, s.name);
  AlgebraPtr B = ex6();
  EpiContext ctx = i_epsilon(top(projective(B, 1)).map);
  for (const auto& y : intermediate_submodules(ctx.n_sub, SubRep::full(ctx.injective()))) {
    RepMorphism f = prolongation_map(ctx, y);
    if (is_kernel_determined(f)) bound(B, f, "ex6");
  }
  o.note << n << " kernel-determined morphisms within the bound";
}

}  // namespace

int main() {
  std::vector<Sweep> sweeps = standard_sweeps();
  struct Entry {
    int number;
    const char* label;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Entry> entries = {
      {1, "A3 socle inclusion", criterion1},
      {2, "A2 zero map into P(2)", criterion2},
      {3, "Auslander formula sweep", [&](Outcome& o) { criterion3(o, sweeps); }},
      {4, "minimal determiner sweep", [&](Outcome& o) { criterion4(o, sweeps); }},
      {5, "A3 map P(2) -> I(2)", criterion5},
      {6, "kernel part and almost factoring sweep", [&](Outcome& o) { criterion6(o, sweeps); }},
      {7, "local uniserial and presentation of S(4)", [&](Outcome& o) { criterion7(o, sweeps); }},
      {8, "four-vertex algebra over F5", criterion8},
      {9, "homological identities", criterion9},
      {10, "length bound", [&](Outcome& o) { criterion10(o, sweeps); }},
  };
  bool all = true;
  for (const auto& e : entries) {
    Outcome o;
    try {
      e.body(o);
    } catch (const std::exception& ex) {
      o.ok = false;
      o.note << " exception: " << ex.what();
    }
    all = all && o.ok;
    std::printf("criterion %d [%s]: %s (%s)\n", e.number, e.label, o.ok ? "PASS" : "FAIL", o.note.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
