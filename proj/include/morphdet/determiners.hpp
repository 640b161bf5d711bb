#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morphdet/ar.hpp"

namespace morphdet {

/// alpha * eta_prime == eta * rho with eta not factoring through alpha.
struct AlmostFactorCertificate {
  Rep n;
  RepMorphism rho;        // minimal right almost split map E -> n
  RepMorphism eta;        // n -> Y
  RepMorphism eta_prime;  // E -> X
};

std::optional<AlmostFactorCertificate> almost_factors_through(const Rep& n, const RepMorphism& alpha,
                                                              std::uint64_t seed = 0);
/// Same test with rho = minimal_right_almost_split(n) already known.
std::optional<AlmostFactorCertificate> almost_factors_through(const RepMorphism& rho, const RepMorphism& alpha);

struct AuslanderDeterminer {
  Rep module;          // tau_minus_part + projective_part
  Rep tau_minus_part;  // tau^- of the kernel
  Rep projective_part; // projective cover of soc Cok(alpha)
};
AuslanderDeterminer auslander_determiner(const RepMorphism& alpha);

struct KernelSummand {
  Rep summand;     // indecomposable summand of the intrinsic kernel
  Rep tau_minus;   // zero when the summand is injective
};

struct ProjectiveSummand {
  Vertex vertex = 0;
  Rep projective;
  std::vector<std::string> tags;  // "prop1", "prop2", "prop3", "prop4-construction", "direct-linear-test"
  AlmostFactorCertificate certificate;
};

struct DeterminerReport {
  std::string id;
  RepMorphism alpha;
  Rep intrinsic_kernel;
  std::vector<KernelSummand> kernel_summands;
  std::vector<ProjectiveSummand> projective_summands;
  std::vector<Vertex> rejected_vertices;  // simples in soc Cok(alpha) whose cover does not qualify
  std::vector<Rep> t;                     // one per iso class
  Rep t_sum;
  AuslanderDeterminer auslander;
};
DeterminerReport minimal_determiner(const RepMorphism& alpha, std::uint64_t seed = 0);

struct Determination {
  bool determined = true;
  std::optional<Rep> missing;                // a summand of T(alpha) outside add c
  std::optional<RepMorphism> witness;        // alpha': N -> Y not factoring through alpha
};
Determination determine(const Rep& c, const RepMorphism& alpha, std::uint64_t seed = 0);
Determination determine(const Rep& c, const DeterminerReport& report);
bool determines(const Rep& c, const RepMorphism& alpha, std::uint64_t seed = 0);

struct OracleVerdict {
  bool determined = true;
  std::optional<std::size_t> witness_index;  // into the universe
  std::optional<RepMorphism> witness;        // alpha' in H outside F
};
/// Definition-level check over a list of test modules X'.
OracleVerdict oracle_check(const Rep& c, const RepMorphism& alpha, const std::vector<Rep>& universe);
bool determines_oracle(const Rep& c, const RepMorphism& alpha, const std::vector<Rep>& universe);

/// Vertex of a simple module; throws ContractViolation otherwise.
Vertex simple_vertex(const Rep& s);
/// Whether S(x) embeds in Cok(alpha).
bool simple_in_cokernel_socle(Vertex x, const RepMorphism& alpha);

bool prop1_check(const RepMorphism& alpha);
bool prop2_check(const Rep& s, const RepMorphism& alpha);
bool prop3_check(const Rep& s, const RepMorphism& alpha);
bool ext2_criterion(const Rep& s, const RepMorphism& alpha);

/// X inside J with J/X = S and alpha_tilde extending alpha with the same kernel.
struct Prop4Certificate {
  Rep j;
  RepMorphism inclusion;    // X -> J
  RepMorphism alpha_tilde;  // J -> Y
};
std::optional<Prop4Certificate> prop4_certificate(const Rep& s, const RepMorphism& alpha, std::uint64_t seed = 0);
/// The pushout construction from a given almost-factoring diagram of P(S).
Prop4Certificate prop4_from_almost_factor(const AlmostFactorCertificate& cert, const RepMorphism& alpha);
/// Converse: an almost-factoring diagram of P(S) from J; throws
/// PreconditionError when the certificate does not satisfy its conditions.
AlmostFactorCertificate almost_factor_from_prop4(const Prop4Certificate& cert, const RepMorphism& alpha);

}  // namespace morphdet
