#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "morphdet/linalg.hpp"

namespace morphdet {

using Vertex = int;

struct Arrow {
  std::string name;
  Vertex source = 0;
  Vertex target = 0;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  struct ArrowSpec {
    std::string name, source, target;
  };

  Quiver() = default;
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_name(Vertex v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  /// Throws ContractViolation("unknown vertex ...").
  Vertex vertex(const std::string& name) const;
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_index(const std::string& name) const;
  bool has_vertex(const std::string& name) const;

  Quiver reversed() const;
  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path, traversed arrows.front() first. A path of length zero is the
/// trivial path at `source`.
struct Path {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  auto operator<=>(const Path&) const = default;
};

/// p then q (requires p.target == q.source).
Path then(const Path& p, const Path& q);
Path reversed(const Path& p);

/// A linear combination of parallel paths, each listed first-traversed-first
/// by arrow name.
struct Relation {
  struct Term {
    Scalar coeff;
    std::vector<std::string> path;
  };
  std::vector<Term> terms;
};

/// Coordinates of an algebra element in BoundAlgebra::basis().
using Element = std::vector<Scalar>;

class BoundAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundAlgebra>;

/// kQ/I realized by a path basis. Built together with its opposite algebra;
/// the two share ownership, so opposite()->opposite() is this object.
class BoundAlgebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Relation>& relations() const { return relations_; }
  /// Relations with paths resolved to arrow indices.
  const std::vector<std::vector<std::pair<Scalar, Path>>>& relation_paths() const { return rel_paths_; }

  std::size_t dim() const { return basis_.size(); }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }
  const std::vector<Path>& basis() const { return basis_; }
  std::size_t nilpotency_index() const { return nilpotency_; }

  /// Indices into basis() of the classes with the given endpoints, shortest
  /// first; the trivial path comes first when x == y.
  const std::vector<std::size_t>& basis_between(Vertex x, Vertex y) const;
  /// Position of `basis_index` within basis_between(source, target).
  std::size_t block_position(std::size_t basis_index) const { return block_pos_.at(basis_index); }

  /// Normal form of an arbitrary path.
  Element reduce(const Path& p) const;
  /// basis(i) then basis(j).
  Element then_basis(std::size_t i, std::size_t j) const;
  Element unit_element(std::size_t i) const;

  std::string path_name(const Path& p) const;
  std::string basis_name(std::size_t i) const { return path_name(basis_[i]); }

  AlgebraPtr opposite() const;
  bool is_opposite_side() const { return is_opposite_; }
  bool same_as(const BoundAlgebra& other) const;

 private:
  friend AlgebraPtr build_algebra(const Quiver&, const std::vector<Relation>&, FieldSpec, std::size_t);
  friend struct AlgebraPair;

  Quiver quiver_;
  FieldSpec field_;
  std::vector<Relation> relations_;
  std::vector<std::vector<std::pair<Scalar, Path>>> rel_paths_;
  std::vector<Path> basis_;
  std::size_t nilpotency_ = 1;
  std::vector<std::vector<std::vector<std::size_t>>> between_;  // [x][y]
  std::vector<std::size_t> block_pos_;
  std::map<std::pair<Vertex, std::vector<int>>, Element> normal_form_;
  bool is_opposite_ = false;
  const BoundAlgebra* partner_ = nullptr;
  std::weak_ptr<const void> owner_;
};

/// Computes the ideal generated by `relations`, truncating path space at
/// increasing lengths until the first L with J^L inside the ideal.
/// Throws PreconditionError("algebra not finite-dimensional within bound")
/// when no L <= max_path_length exists.
AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& relations, FieldSpec field,
                         std::size_t max_path_length = 32);

inline AlgebraPtr opposite_algebra(const AlgebraPtr& a) { return a->opposite(); }

/// Basis paths with source x and target y.
std::vector<Path> basis_between(const BoundAlgebra& a, Vertex x, Vertex y);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace morphdet
