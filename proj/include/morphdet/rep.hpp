#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "morphdet/algebra.hpp"

namespace morphdet {

/// A finite-dimensional representation: one space per vertex, one matrix per
/// arrow. Copies share storage; values never change after construction.
class Rep {
 public:
  Rep() = default;
  /// Validates shapes and that every relation acts as zero.
  Rep(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> arrow_maps);
  static Rep zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return d_->algebra; }
  const FieldSpec& field() const { return d_->algebra->field(); }
  std::size_t vertex_count() const { return d_->dims.size(); }
  std::size_t dim(Vertex v) const { return d_->dims.at(static_cast<std::size_t>(v)); }
  const std::vector<std::size_t>& dims() const { return d_->dims; }
  std::size_t total_dim() const { return d_->total; }
  /// Composition length; equals total_dim for a basic split algebra.
  std::size_t length() const { return d_->total; }
  const Mat& arrow(int a) const { return d_->arrows.at(static_cast<std::size_t>(a)); }
  const std::vector<Mat>& arrow_maps() const { return d_->arrows; }
  bool is_zero() const { return d_->total == 0; }
  bool valid() const { return static_cast<bool>(d_); }

  /// M_an ... M_a1 for the path (a1, ..., an); identity for a trivial path.
  Mat path_action(const Path& p) const;

  friend bool operator==(const Rep& a, const Rep& b);

 private:
  struct Data {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;
    std::vector<Mat> arrows;
    std::size_t total = 0;
  };
  std::shared_ptr<const Data> d_;
};

class RepMorphism {
 public:
  RepMorphism() = default;
  /// Validates shapes and the commuting condition for every arrow.
  RepMorphism(Rep from, Rep to, std::vector<Mat> mats);
  static RepMorphism zero(const Rep& from, const Rep& to);
  static RepMorphism identity(const Rep& m);

  const Rep& from() const { return from_; }
  const Rep& to() const { return to_; }
  const Mat& at(Vertex v) const { return mats_.at(static_cast<std::size_t>(v)); }
  const std::vector<Mat>& mats() const { return mats_; }

  bool is_zero() const;
  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const;
  /// rank summed over vertices = length of the image.
  std::size_t rank() const;

  /// All entries, vertex by vertex, row-major, as a column vector.
  Mat flatten() const;
  static RepMorphism unflatten(const Rep& from, const Rep& to, const Mat& flat);
  static std::size_t flat_dim(const Rep& from, const Rep& to);

  friend RepMorphism operator*(const RepMorphism& g, const RepMorphism& f);
  friend RepMorphism operator+(const RepMorphism& f, const RepMorphism& g);
  friend RepMorphism operator-(const RepMorphism& f, const RepMorphism& g);
  friend RepMorphism operator*(const Scalar& s, const RepMorphism& f);
  friend bool operator==(const RepMorphism& f, const RepMorphism& g);

 private:
  struct Unchecked {};
  RepMorphism(Rep from, Rep to, std::vector<Mat> mats, Unchecked)
      : from_(std::move(from)), to_(std::move(to)), mats_(std::move(mats)) {}
  friend RepMorphism make_unchecked(Rep, Rep, std::vector<Mat>);

  Rep from_, to_;
  std::vector<Mat> mats_;
};

/// g after f.
inline RepMorphism compose(const RepMorphism& g, const RepMorphism& f) { return g * f; }

/// Skips the commuting check; for constructions that are correct by design.
RepMorphism make_unchecked(Rep from, Rep to, std::vector<Mat> mats);

/// A submodule: one subspace per vertex, closed under the arrows.
class SubRep {
 public:
  SubRep() = default;
  SubRep(Rep ambient, std::vector<Subspace> spaces);
  static SubRep zero(const Rep& m);
  static SubRep full(const Rep& m);

  const Rep& ambient() const { return ambient_; }
  const Subspace& at(Vertex v) const { return spaces_.at(static_cast<std::size_t>(v)); }
  const std::vector<Subspace>& spaces() const { return spaces_; }
  std::vector<std::size_t> dims() const;
  std::size_t total_dim() const;
  bool contains(const SubRep& other) const;

  friend bool operator==(const SubRep& a, const SubRep& b) { return a.spaces_ == b.spaces_; }

 private:
  Rep ambient_;
  std::vector<Subspace> spaces_;
};

SubRep intersect(const SubRep& a, const SubRep& b);
SubRep sum(const SubRep& a, const SubRep& b);
/// Smallest submodule containing the given vectors (one column set per vertex).
SubRep generated_subrep(const Rep& m, const std::vector<Mat>& generators);

struct Ses {
  Rep left, middle, right;
  RepMorphism inj, surj;
};

/// Hom(from, to) as the nullspace of the commuting conditions. The basis is
/// indexed by free entries, so the coordinates of a morphism are its entries
/// at those positions.
class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(Rep from, Rep to);

  const Rep& from() const { return from_; }
  const Rep& to() const { return to_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RepMorphism>& basis() const { return basis_; }
  const RepMorphism& operator[](std::size_t i) const { return basis_[i]; }
  /// flat_dim x dim, columns = flattened basis morphisms.
  const Mat& flat_basis() const { return flat_; }
  /// dim x 1 coordinates of a member morphism.
  Mat coordinates(const RepMorphism& f) const;
  RepMorphism element(const Mat& coords) const;
  RepMorphism element(const std::vector<Scalar>& coords) const;

 private:
  Rep from_, to_;
  std::vector<RepMorphism> basis_;
  Mat flat_;
  std::vector<std::size_t> free_;
};

inline HomSpace hom(const Rep& m, const Rep& n) { return HomSpace(m, n); }
std::vector<RepMorphism> hom_basis(const Rep& m, const Rep& n);

// Constructions from the algebra.
Rep simple(const AlgebraPtr& alg, Vertex x);
/// Basis at y: classes of paths x -> y; arrows act by appending.
Rep projective(const AlgebraPtr& alg, Vertex x);
/// Dual of the opposite projective at x: basis at y dual to paths y -> x.
Rep injective(const AlgebraPtr& alg, Vertex x);

/// Vector-space dual over the opposite algebra.
Rep dual(const Rep& m);
RepMorphism dual_map(const RepMorphism& f);

struct DirectSum {
  Rep sum;
  std::vector<RepMorphism> injections;
  std::vector<RepMorphism> projections;
};
DirectSum direct_sum(const std::vector<Rep>& parts);
Rep direct_sum_rep(const std::vector<Rep>& parts, const AlgebraPtr& alg);
RepMorphism direct_sum_map(const std::vector<RepMorphism>& parts);
/// (f1, ..., fk): X1 + ... + Xk -> Y.
RepMorphism row_map(const std::vector<RepMorphism>& parts);
/// (f1; ...; fk): X -> Y1 + ... + Yk.
RepMorphism column_map(const std::vector<RepMorphism>& parts);

struct SubResult {
  Rep module;
  RepMorphism map;  // mono for kernels/submodules, epi for quotients
};

SubRep kernel_sub(const RepMorphism& f);
SubRep image_sub(const RepMorphism& f);
SubResult kernel(const RepMorphism& f);
/// Image as a module with its inclusion into f.to().
SubResult image(const RepMorphism& f);
/// f.from() -> image, so that image.map * coimage = f.
RepMorphism corestrict_to_image(const RepMorphism& f, const SubResult& im);
SubResult cokernel(const RepMorphism& f);

SubResult sub_to_rep(const SubRep& s);
SubResult quotient(const Rep& m, const SubRep& s);
/// The unique h with h * q = f, for q a quotient epi and f vanishing on ker q.
RepMorphism descend(const SubResult& q, const RepMorphism& f);
/// The unique h with incl * h = f, for incl a submodule inclusion and f
/// landing in its image.
RepMorphism restrict_codomain(const SubResult& incl, const RepMorphism& f);
SubRep preimage(const RepMorphism& f, const SubRep& s);
SubRep image_of_sub(const RepMorphism& f, const SubRep& s);

SubRep radical(const Rep& m);
SubRep socle(const Rep& m);
SubResult top(const Rep& m);

/// A direct sum of indecomposable projectives P(x) in the given order.
struct ProjectiveSum {
  Rep module;
  std::vector<Vertex> summands;
};
/// A direct sum of indecomposable injectives; `module` is the dual of the
/// corresponding opposite projective sum.
struct InjectiveSum {
  Rep module;
  std::vector<Vertex> summands;
};
ProjectiveSum projective_sum(const AlgebraPtr& alg, const std::vector<Vertex>& summands);
InjectiveSum injective_sum(const AlgebraPtr& alg, const std::vector<Vertex>& summands);

struct ProjectiveCover {
  ProjectiveSum cover;
  RepMorphism epi;
};
struct InjectiveEnvelope {
  InjectiveSum envelope;
  RepMorphism mono;
};
ProjectiveCover projective_cover(const Rep& m);
InjectiveEnvelope injective_envelope(const Rep& m);

/// The map P(x) -> m sending e_x to v (v a vector of m at x).
RepMorphism yoneda_map(const Rep& m, Vertex x, const Mat& v);

/// phi with alpha * phi == alpha_prime, if any.
std::optional<RepMorphism> factors_through(const RepMorphism& alpha, const RepMorphism& alpha_prime);
/// g with g * e == f; throws PreconditionError when none exists.
RepMorphism extend_along_mono(const RepMorphism& e, const RepMorphism& f);
/// g with g * h == f, if any (f extends through h).
std::optional<RepMorphism> extends_through(const RepMorphism& h, const RepMorphism& f);

struct Pushout {
  Rep object;
  RepMorphism from_b;  // B -> object
  RepMorphism from_c;  // C -> object
};
/// Pushout of f: A -> B and g: A -> C.
Pushout pushout(const RepMorphism& f, const RepMorphism& g);

bool is_projective(const Rep& m);
bool is_injective(const Rep& m);
bool is_semisimple(const Rep& m);

}  // namespace morphdet
