#include "morphdet/algebra.hpp"

#include <algorithm>
#include <set>

namespace morphdet {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw ContractViolation("duplicate vertex name '" + v + "'");
  std::set<std::string> arrow_names;
  for (const auto& a : arrows) {
    if (!arrow_names.insert(a.name).second)
      throw ContractViolation("duplicate arrow name '" + a.name + "'");
    if (!has_vertex(a.source))
      throw ContractViolation("arrow '" + a.name + "' has unknown source vertex '" + a.source + "'");
    if (!has_vertex(a.target))
      throw ContractViolation("arrow '" + a.name + "' has unknown target vertex '" + a.target + "'");
    arrows_.push_back({a.name, vertex(a.source), vertex(a.target)});
  }
}

bool Quiver::has_vertex(const std::string& name) const {
  return std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end();
}

Vertex Quiver::vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw ContractViolation("unknown vertex '" + name + "'");
  return static_cast<Vertex>(it - vertices_.begin());
}

int Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<int>(i);
  throw ContractViolation("unknown arrow '" + name + "'");
}

Quiver Quiver::reversed() const {
  Quiver r;
  r.vertices_ = vertices_;
  for (const auto& a : arrows_) r.arrows_.push_back({a.name, a.target, a.source});
  return r;
}

Path then(const Path& p, const Path& q) {
  if (p.target != q.source) throw ContractViolation("paths do not compose");
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

Path reversed(const Path& p) {
  Path r{p.target, p.source, p.arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

struct AlgebraPair {
  BoundAlgebra algebra;
  BoundAlgebra opposite;
};

namespace {

// Larger paths first: they become pivots, leaving shortest lex-smallest
// representatives as the basis.
bool pivot_order(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.arrows > b.arrows;
}

bool basis_order(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  return a.arrows < b.arrows;
}

struct PathSpace {
  // by_length[l] = all paths of length l.
  std::vector<std::vector<Path>> by_length;

  void grow(const Quiver& q) {
    if (by_length.empty()) {
      by_length.emplace_back();
      for (std::size_t v = 0; v < q.vertex_count(); ++v)
        by_length[0].push_back({static_cast<Vertex>(v), static_cast<Vertex>(v), {}});
      return;
    }
    std::vector<Path> next;
    for (const auto& p : by_length.back())
      for (std::size_t a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(static_cast<int>(a)).source == p.target) {
          Path r = p;
          r.arrows.push_back(static_cast<int>(a));
          r.target = q.arrow(static_cast<int>(a)).target;
          next.push_back(std::move(r));
        }
    by_length.push_back(std::move(next));
  }
};

using Block = std::vector<Path>;  // columns in pivot_order

// Row span, per (source, target) block, of the truncated ideal generators
// p.r.q with len(p) + len(q) + minlen(r) <= bound.
std::map<std::pair<Vertex, Vertex>, std::pair<Block, Subspace>> truncated_ideal(
    const Quiver& q, const PathSpace& ps, const std::vector<std::vector<std::pair<Scalar, Path>>>& rels,
    std::size_t bound, FieldSpec field) {
  std::map<std::pair<Vertex, Vertex>, Block> blocks;
  for (std::size_t l = 0; l <= bound; ++l)
    for (const auto& p : ps.by_length[l]) blocks[{p.source, p.target}].push_back(p);
  std::map<std::pair<Vertex, Vertex>, std::map<Path, std::size_t>> column;
  for (auto& [key, blk] : blocks) {
    std::sort(blk.begin(), blk.end(), pivot_order);
    for (std::size_t i = 0; i < blk.size(); ++i) column[key][blk[i]] = i;
  }
  std::map<std::pair<Vertex, Vertex>, std::vector<std::vector<Scalar>>> gens;
  for (const auto& rel : rels) {
    std::size_t minlen = rel.front().second.length();
    for (const auto& t : rel) minlen = std::min(minlen, t.second.length());
    if (minlen > bound) continue;
    Vertex rs = rel.front().second.source, rt = rel.front().second.target;
    for (std::size_t lp = 0; lp + minlen <= bound; ++lp)
      for (const auto& p : ps.by_length[lp]) {
        if (p.target != rs) continue;
        for (std::size_t lq = 0; lp + lq + minlen <= bound; ++lq)
          for (const auto& qq : ps.by_length[lq]) {
            if (qq.source != rt) continue;
            auto key = std::make_pair(p.source, qq.target);
            std::vector<Scalar> row(blocks[key].size(), field.zero());
            bool nonzero = false;
            for (const auto& [c, path] : rel) {
              Path full = then(then(p, path), qq);
              if (full.length() > bound) continue;
              row[column[key].at(full)] += c;
              nonzero = true;
            }
            if (nonzero) gens[key].push_back(std::move(row));
          }
      }
  }
  std::map<std::pair<Vertex, Vertex>, std::pair<Block, Subspace>> out;
  for (auto& [key, blk] : blocks) {
    Mat g = Mat::from_rows(field, gens[key], blk.size());
    out.emplace(key, std::make_pair(blk, Subspace::row_span(g)));
  }
  (void)q;
  return out;
}

}  // namespace

AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& relations, FieldSpec field,
                         std::size_t max_path_length) {
  if (max_path_length < 1) throw ContractViolation("max-path-length must be at least 1");

  std::vector<std::vector<std::pair<Scalar, Path>>> rels;
  for (std::size_t ri = 0; ri < relations.size(); ++ri) {
    const auto& r = relations[ri];
    if (r.terms.empty()) throw ContractViolation("relation " + std::to_string(ri) + " has no terms");
    std::vector<std::pair<Scalar, Path>> resolved;
    for (const auto& t : r.terms) {
      if (t.path.size() < 2)
        throw ContractViolation("relation " + std::to_string(ri) + " has a path of length < 2");
      Path p;
      for (std::size_t k = 0; k < t.path.size(); ++k) {
        int a = q.arrow_index(t.path[k]);
        const Arrow& arr = q.arrow(a);
        if (k == 0) p.source = arr.source;
        else if (arr.source != p.target)
          throw ContractViolation("relation " + std::to_string(ri) + ": arrows do not compose at '" +
                                  t.path[k] + "'");
        p.target = arr.target;
        p.arrows.push_back(a);
      }
      if (!resolved.empty() &&
          (resolved.front().second.source != p.source || resolved.front().second.target != p.target))
        throw ContractViolation("relation " + std::to_string(ri) + " mixes non-parallel paths");
      resolved.emplace_back(t.coeff + field.zero(), p);
    }
    rels.push_back(std::move(resolved));
  }

  PathSpace ps;
  ps.grow(q);
  std::size_t found = 0;
  for (std::size_t L = 1; L <= max_path_length && !found; ++L) {
    while (ps.by_length.size() <= L) ps.grow(q);
    auto ideal = truncated_ideal(q, ps, rels, L, field);
    bool all_in = true;
    for (const auto& [key, bs] : ideal) {
      const auto& [blk, span] = bs;
      for (std::size_t i = 0; i < blk.size() && all_in; ++i)
        if (blk[i].length() == L && !span.contains(Mat::unit_column(field, blk.size(), i))) all_in = false;
      if (!all_in) break;
    }
    if (all_in) found = L;
  }
  if (!found) throw PreconditionError("algebra not finite-dimensional within bound");

  auto pair = std::make_shared<AlgebraPair>();
  BoundAlgebra& A = pair->algebra;
  A.quiver_ = q;
  A.field_ = field;
  A.relations_ = relations;
  for (auto& r : A.relations_)
    for (auto& t : r.terms) t.coeff = t.coeff + field.zero();
  A.rel_paths_ = rels;
  A.nilpotency_ = found;

  // Quotient of paths of length < L by the truncated ideal.
  auto ideal = truncated_ideal(q, ps, rels, found - 1, field);
  std::vector<Path> basis;
  for (const auto& [key, bs] : ideal) {
    const auto& [blk, span] = bs;
    std::vector<bool> is_pivot(blk.size(), false);
    for (auto pv : span.pivots()) is_pivot[pv] = true;
    for (std::size_t i = 0; i < blk.size(); ++i)
      if (!is_pivot[i]) basis.push_back(blk[i]);
  }
  std::sort(basis.begin(), basis.end(), basis_order);
  A.basis_ = basis;
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  for (const auto& [key, bs] : ideal) {
    const auto& [blk, span] = bs;
    std::vector<bool> is_pivot(blk.size(), false);
    for (auto pv : span.pivots()) is_pivot[pv] = true;
    for (std::size_t i = 0; i < blk.size(); ++i) {
      Element e(basis.size(), field.zero());
      if (!is_pivot[i]) {
        e[index.at(blk[i])] = field.one();
      } else {
        std::size_t row = static_cast<std::size_t>(
            std::find(span.pivots().begin(), span.pivots().end(), i) - span.pivots().begin());
        for (std::size_t j = 0; j < blk.size(); ++j)
          if (!is_pivot[j] && !span.basis_rows()(row, j).is_zero())
            e[index.at(blk[j])] = -span.basis_rows()(row, j);
      }
      A.normal_form_[{blk[i].source, blk[i].arrows}] = std::move(e);
    }
  }

  const std::size_t nv = q.vertex_count();
  A.between_.assign(nv, std::vector<std::vector<std::size_t>>(nv));
  A.block_pos_.resize(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto& list = A.between_[basis[i].source][basis[i].target];
    A.block_pos_[i] = list.size();
    list.push_back(i);
  }

  // Opposite: reversed quiver, reversed paths, identical coordinates.
  BoundAlgebra& O = pair->opposite;
  O.quiver_ = q.reversed();
  O.field_ = field;
  O.relations_ = A.relations_;
  for (auto& r : O.relations_)
    for (auto& t : r.terms) std::reverse(t.path.begin(), t.path.end());
  for (const auto& rel : rels) {
    std::vector<std::pair<Scalar, Path>> rr;
    for (const auto& [c, p] : rel) rr.emplace_back(c, reversed(p));
    O.rel_paths_.push_back(std::move(rr));
  }
  O.nilpotency_ = found;
  for (const auto& p : basis) O.basis_.push_back(reversed(p));
  for (const auto& [key, e] : A.normal_form_) {
    Path p{key.first, key.first, key.second};
    if (!key.second.empty()) p.target = q.arrow(key.second.back()).target;
    Path r = reversed(p);
    O.normal_form_[{r.source, r.arrows}] = e;
  }
  O.between_.assign(nv, std::vector<std::vector<std::size_t>>(nv));
  O.block_pos_.resize(basis.size());
  for (std::size_t i = 0; i < O.basis_.size(); ++i) {
    auto& list = O.between_[O.basis_[i].source][O.basis_[i].target];
    O.block_pos_[i] = list.size();
    list.push_back(i);
  }
  O.is_opposite_ = true;

  A.partner_ = &O;
  O.partner_ = &A;
  A.owner_ = pair;
  O.owner_ = pair;
  return AlgebraPtr(pair, &pair->algebra);
}

const std::vector<std::size_t>& BoundAlgebra::basis_between(Vertex x, Vertex y) const {
  if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= vertex_count() ||
      static_cast<std::size_t>(y) >= vertex_count())
    throw ContractViolation("unknown vertex index");
  return between_[x][y];
}

Element BoundAlgebra::reduce(const Path& p) const {
  if (p.length() >= nilpotency_) return Element(dim(), field_.zero());
  auto it = normal_form_.find({p.source, p.arrows});
  if (it == normal_form_.end()) throw ContractViolation("path is not a path of this quiver");
  return it->second;
}

Element BoundAlgebra::then_basis(std::size_t i, std::size_t j) const {
  if (basis_[i].target != basis_[j].source) return Element(dim(), field_.zero());
  return reduce(then(basis_[i], basis_[j]));
}

Element BoundAlgebra::unit_element(std::size_t i) const {
  Element e(dim(), field_.zero());
  e.at(i) = field_.one();
  return e;
}

std::string BoundAlgebra::path_name(const Path& p) const {
  if (p.arrows.empty()) return "e" + quiver_.vertex_name(p.source);
  bool single = std::all_of(quiver_.arrows().begin(), quiver_.arrows().end(),
                            [](const Arrow& a) { return a.name.size() == 1; });
  // Composition order: the last traversed arrow is written first.
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty() && !single) s += "*";
    s += quiver_.arrow(*it).name;
  }
  return s;
}

AlgebraPtr BoundAlgebra::opposite() const {
  auto owner = owner_.lock();
  if (!owner || !partner_) throw ContractViolation("algebra was not built by build_algebra");
  return AlgebraPtr(owner, partner_);
}

bool BoundAlgebra::same_as(const BoundAlgebra& o) const {
  if (this == &o) return true;
  return quiver_ == o.quiver_ && field_ == o.field_ && basis_ == o.basis_ &&
         rel_paths_.size() == o.rel_paths_.size() && normal_form_ == o.normal_form_;
}

std::vector<Path> basis_between(const BoundAlgebra& a, Vertex x, Vertex y) {
  std::vector<Path> out;
  for (auto i : a.basis_between(x, y)) out.push_back(a.basis()[i]);
  return out;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace morphdet
