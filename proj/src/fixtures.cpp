#include "morphdet/session.hpp"

namespace morphdet {

namespace {

const char* kA2 = R"json({
  "field": "Q",
  "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "source": "2", "target": "1"}]},
  "modules": {"S1": "S(1)", "S2": "S(2)", "P2": "P(2)", "Z": "0"},
  "morphisms": {"alpha": "zero(Z, P2)"},
  "commands": [
    {"op": "minimal-determiner", "morphism": "alpha", "expect": {"summands": ["S(1)"], "intrinsic_kernel": "0"}},
    {"op": "auslander-determiner", "morphism": "alpha", "expect": {"summands": ["S(1)"]}},
    {"op": "check-determines", "module": "P2", "morphism": "alpha", "expect": {"verdict": false, "missing": "S(1)"}},
    {"op": "check-determines", "module": "S1", "morphism": "alpha", "expect": {"verdict": true}},
    {"op": "oracle", "module": "P2", "morphism": "alpha", "expect": {"verdict": false, "witness_module": "S(1)"}},
    {"op": "oracle", "module": "S1", "morphism": "alpha", "expect": {"verdict": true}},
    {"op": "prop-checks", "simple": "S1", "morphism": "alpha",
     "expect": {"in_cokernel_socle": true, "prop1": true, "prop2": true, "prop3": true, "prop4": true, "almost_factors": true}},
    {"op": "ar-sequence", "module": "S2", "expect": {"left": "S(1)", "middle": ["P(2)"], "right": "S(2)", "verified": true}},
    {"op": "ext", "left": "S2", "right": "S1", "expect": {"dimension": 1}}
  ]
})json";

const char* kA3Ex1 = R"json({
  "field": "Q",
  "quiver": {"vertices": ["1", "2", "3"],
             "arrows": [{"name": "a", "source": "2", "target": "1"}, {"name": "b", "source": "3", "target": "2"}]},
  "modules": {"S1": "S(1)", "S2": "S(2)", "S3": "S(3)", "P2": "P(2)", "P3": "P(3)", "I2": "I(2)"},
  "morphisms": {"alpha": "inclusion(socle(P3))"},
  "commands": [
    {"op": "minimal-determiner", "morphism": "alpha", "expect": {"summands": ["P(2)"], "intrinsic_kernel": "0"}},
    {"op": "check-determines", "module": "P3", "morphism": "alpha", "expect": {"verdict": false, "missing": "P(2)"}},
    {"op": "check-determines", "module": "P2", "morphism": "alpha", "expect": {"verdict": true}},
    {"op": "oracle", "module": "P3", "morphism": "alpha", "expect": {"verdict": false, "witness_module": "P(2)"}},
    {"op": "oracle", "module": "P2", "morphism": "alpha", "expect": {"verdict": true}},
    {"op": "auslander-determiner", "morphism": "alpha", "expect": {"summands": ["P(2)"]}},
    {"op": "prop-checks", "simple": "S2", "morphism": "alpha", "expect": {"in_cokernel_socle": true, "almost_factors": true}},
    {"op": "ar-sequence", "module": "I2", "expect": {"left": "P(2)", "middle": ["S(2)", "P(3)"], "verified": true}}
  ]
})json";

const char* kA3Ex3 = R"json({
  "field": "Q",
  "quiver": {"vertices": ["1", "2", "3"],
             "arrows": [{"name": "a", "source": "2", "target": "1"}, {"name": "b", "source": "3", "target": "2"}]},
  "modules": {"P2": "P(2)", "I2": "I(2)", "S2": "S(2)", "P3": "P(3)"},
  "morphisms": {"alpha": "hom(P2, I2, 0)"},
  "commands": [
    {"op": "intrinsic-kernel", "morphism": "alpha", "expect": {"name": "S(1)"}},
    {"op": "minimal-determiner", "morphism": "alpha", "expect": {"summands": ["S(2)", "P(3)"]}},
    {"op": "auslander-determiner", "morphism": "alpha", "expect": {"summands": ["S(2)", "P(3)"]}},
    {"op": "check-determines", "module": "S2 + P3", "morphism": "alpha", "expect": {"verdict": true}},
    {"op": "check-determines", "module": "P3", "morphism": "alpha", "expect": {"verdict": false, "missing": "S(2)"}},
    {"op": "oracle", "module": "S2 + P3", "morphism": "alpha", "expect": {"verdict": true}},
    {"op": "oracle", "module": "S2", "morphism": "alpha", "expect": {"verdict": false}},
    {"op": "tau-minus", "module": "S(1)", "expect": {"name": "S(2)"}}
  ]
})json";

const char* kUniserial = R"json({
  "field": "Q",
  "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "source": "1", "target": "1"}]},
  "relations": [[{"coeff": "1", "path": ["x", "x", "x"]}]],
  "modules": {"M1": "S(1)", "M3": "P(1)", "M2": "radical(M3)"},
  "morphisms": {"alpha": "inclusion(M2)", "beta": "projection(top(M3))", "gamma": "cover(M2)"},
  "commands": [
    {"op": "describe", "module": "M2", "expect": {"name": "M[2]", "indecomposable": true, "projective": false}},
    {"op": "describe", "module": "M3", "expect": {"name": "P(1)", "projective": true, "injective": true}},
    {"op": "minimal-determiner", "morphism": "alpha", "expect": {"summands": ["P(1)"]}},
    {"op": "kernel-determined", "morphism": "alpha", "expect": {"verdict": false}},
    {"op": "kernel-determined", "morphism": "beta", "expect": {"verdict": true}},
    {"op": "ar-sequence", "module": "M2", "expect": {"left": "M[2]", "middle": ["S(1)", "P(1)"], "right": "M[2]", "verified": true}},
    {"op": "tau", "module": "M1", "expect": {"name": "S(1)"}},
    {"op": "ext", "left": "M1", "right": "M1", "degree": 2, "expect": {"dimension": 1}},
    {"op": "i-epsilon", "morphism": "id(M2)", "expect": {"i_epsilon": "P(1)"}},
    {"op": "maximal-prolongation", "morphism": "beta", "expect": {"length": 2, "predicted_length": 2}}
  ]
})json";

const char* kEx6 = R"json({
  "field": "F5",
  "quiver": {"vertices": ["1", "2", "3", "4"],
             "arrows": [{"name": "a", "source": "2", "target": "1"}, {"name": "b", "source": "3", "target": "2"},
                        {"name": "c", "source": "3", "target": "2"}, {"name": "d", "source": "4", "target": "3"}]},
  "relations": [[{"coeff": "1", "path": ["c", "a"]}], [{"coeff": "1", "path": ["d", "b"]}]],
  "modules": {"S2": "S(2)", "S4": "S(4)", "P2": "P(2)", "P4": "P(4)", "I1": "I(1)", "I2": "I(2)",
              "RB": "radical(P4)", "RC": "cokernel(inclusion(socle(I1)))", "NBAR": "envelope(S2)"},
  "morphisms": {"eps": "projection(top(P2))", "delta": "compose(inclusion(RB), cover(RB))",
                "alpha_rb": "compose(inclusion(socle(RB)), eps)"},
  "commands": [
    {"op": "describe", "module": "RB", "expect": {"name": "R(b)", "dims": [0, 1, 1, 0]}},
    {"op": "describe", "module": "RC", "expect": {"name": "R(c)", "dims": [0, 1, 1, 0]}},
    {"op": "small-envelope", "module": "P2", "expect": {"name": "I(1)"}},
    {"op": "small-envelope", "module": "S2", "expect": {"dims": [0, 1, 2, 0]}},
    {"op": "i-epsilon", "morphism": "eps", "expect": {"i_epsilon": "R(c)", "dims": [0, 1, 1, 0]}},
    {"op": "kernel-determined-extensions", "morphism": "eps", "expect": {"count": 6, "families": 0}},
    {"op": "maximal-prolongation", "morphism": "eps", "expect": {"z": "R(b)", "length": 2, "predicted_length": 2, "socle_growth": 1}},
    {"op": "kernel-determined", "morphism": "alpha_rb", "expect": {"verdict": true}},
    {"op": "kernel-determined", "morphism": "compose(inclusion(RB), alpha_rb)", "expect": {"verdict": true}},
    {"op": "kernel-determined", "morphism": "compose(embedding(S2), eps)", "expect": {"verdict": false}},
    {"op": "almost-factors", "module": "P4", "morphism": "delta", "expect": {"verdict": false}},
    {"op": "prop-checks", "simple": "S4", "morphism": "delta", "expect": {"prop3": false, "ext2": false}}
  ]
})json";

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"a2-example2", "A2 with alpha = 0 -> P(2); T(alpha) = S(1)", kA2},
      {"a3-example1", "A3 with alpha = soc P(3) -> P(3); P(3) fails, P(2) determines", kA3Ex1},
      {"a3-example3", "A3 with alpha: P(2) -> I(2); T(alpha) = S(2) + P(3)", kA3Ex3},
      {"uniserial-x3", "k[x]/(x^3) with alpha = rad P -> P", kUniserial},
      {"ex6-bound-quiver", "four-vertex bound quiver over F5; I_eps, prolongations, extensions", kEx6},
  };
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace morphdet
