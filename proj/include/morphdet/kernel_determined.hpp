#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morphdet/determiners.hpp"

namespace morphdet {

/// \bar M = preimage of soc(I(M)/M) inside I(M).
struct SmallEnvelope {
  Rep base;
  InjectiveEnvelope injective;  // base -> I(base)
  SubRep sub;                   // \bar M inside I(base)
  Rep envelope;
  RepMorphism inclusion;  // envelope -> I(base)
  RepMorphism embedding;  // base -> envelope
};
SmallEnvelope small_envelope(const Rep& m);

/// Everything attached to an epimorphism eps: X -> N. Submodules of I(N)
/// are taken with respect to n_envelope.injective.
struct EpiContext {
  RepMorphism epsilon;
  SmallEnvelope x_envelope;
  SmallEnvelope n_envelope;
  SubRep n_sub;            // image of N in I(N)
  RepMorphism extension;   // \bar X -> I(N), restricting to eps on X
  SubRep i_epsilon;        // image of the extension

  const Rep& x() const { return epsilon.from(); }
  const Rep& n() const { return epsilon.to(); }
  const Rep& injective() const { return n_envelope.injective.envelope.module; }
};
EpiContext i_epsilon(const RepMorphism& eps);

/// N <= y <= I(N): the composite X -> N -> y is kernel-determined iff y meets I_eps(N) in N.
bool meets_i_epsilon_in_n(const EpiContext& ctx, const SubRep& y);
/// The composite X -> y for N <= y <= I(N).
RepMorphism prolongation_map(const EpiContext& ctx, const SubRep& y);

struct KernelDeterminedVerdict {
  bool kernel_determined = false;
  bool essential = false;      // Y essential over alpha(X)
  bool no_projective = false;  // minimal determiner has no projective summand
};
/// Criterion via I_eps(N) inside I(N), cross-checked against the minimal
/// determiner; disagreement raises std::logic_error.
KernelDeterminedVerdict kernel_determined_verdict(const RepMorphism& alpha, bool cross_check = true,
                                                  std::uint64_t seed = 0);
bool is_kernel_determined(const RepMorphism& alpha, bool cross_check = true, std::uint64_t seed = 0);

struct Prolongation {
  SubRep z;          // N <= Z <= \bar N inside I(N)
  Rep module;
  RepMorphism map;   // X -> Z
  std::size_t length = 0;
  std::size_t predicted_length = 0;  // |N| + |\bar N| - |I_eps(N)|
};
Prolongation maximal_prolongation(const EpiContext& ctx);
/// |soc(I(N)/N)| - |I_eps(N)/N|.
std::size_t socle_growth_length(const EpiContext& ctx);

/// All submodules between lower and upper (same ambient); prime fields only.
/// Throws PreconditionError when the count of candidates exceeds `limit`.
std::vector<SubRep> intermediate_submodules(const SubRep& lower, const SubRep& upper, std::size_t limit = 1000000);

/// N + span(u + t w) at one vertex, t ranging over the field.
struct LineFamily {
  Vertex vertex = 0;
  SubRep base;  // N
  Mat u, w;     // vectors of I(N) at vertex

  SubRep member(const Scalar& t) const;
};

struct KernelDeterminedExtensions {
  std::vector<SubRep> members;
  std::vector<LineFamily> families;  // only over the rationals
};
/// Submodules N <= Y <= \bar N with Y meeting I_eps(N) in N. Exhaustive over
/// F_p; over Q only the single-line shape is supported.
KernelDeterminedExtensions enumerate_kernel_determined_extensions(const EpiContext& ctx);

}  // namespace morphdet
