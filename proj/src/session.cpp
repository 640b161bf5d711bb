#include "morphdet/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace morphdet {

namespace {

const std::set<std::string> kTopKeys = {"field", "quiver", "relations", "modules", "morphisms", "commands", "seed", "output"};

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) fail(path, "missing key '" + key + "'");
  return obj.at(key);
}

std::string require_string(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = require(obj, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

// ---------------------------------------------------------------- expressions

using Node = Workspace::Node;

class ExprParser {
 public:
  ExprParser(std::string text, std::string path) : s_(std::move(text)), path_(std::move(path)) {}

  Node parse() {
    Node n = sum();
    skip();
    if (pos_ != s_.size()) fail(path_, "unexpected '" + std::string(1, s_[pos_]) + "' in expression '" + s_ + "'");
    return n;
  }

 private:
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' || c == '-' || c == '/';
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  Node sum() {
    Node first = term();
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '+') return first;
    Node n{"+", {std::move(first)}, true};
    while (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      n.args.push_back(term());
      skip();
    }
    return n;
  }
  Node term() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    if (start == pos_) fail(path_, "expected a name in expression '" + s_ + "'");
    Node n{s_.substr(start, pos_ - start), {}, false};
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      n.call = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return n;
      }
      while (true) {
        n.args.push_back(sum());
        skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail(path_, "unbalanced parentheses in expression '" + s_ + "'");
      }
    }
    return n;
  }

  std::string s_;
  std::string path_;
  std::size_t pos_ = 0;
};

std::string node_text(const Node& n) {
  if (n.head == "+") {
    std::string out;
    for (std::size_t i = 0; i < n.args.size(); ++i) out += (i ? " + " : "") + node_text(n.args[i]);
    return out;
  }
  if (!n.call) return n.head;
  std::string out = n.head + "(";
  for (std::size_t i = 0; i < n.args.size(); ++i) out += (i ? ", " : "") + node_text(n.args[i]);
  return out + ")";
}

void arity(const Node& n, std::size_t k, const std::string& path) {
  if (n.args.size() != k)
    fail(path, n.head + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s") + " in '" + node_text(n) + "'");
}

}  // namespace

// ---------------------------------------------------------------- session

bool Session::operator==(const Session& o) const {
  auto same_arrows = [](const std::vector<Quiver::ArrowSpec>& a, const std::vector<Quiver::ArrowSpec>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].name != b[i].name || a[i].source != b[i].source || a[i].target != b[i].target) return false;
    return true;
  };
  return field == o.field && vertices == o.vertices && same_arrows(arrows, o.arrows) && relations == o.relations &&
         modules == o.modules && morphisms == o.morphisms && commands == o.commands && seed == o.seed &&
         output == o.output;
}

Session session_from_json(const Json& j, std::size_t max_path_length) {
  if (!j.is_object()) fail("$", "session must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!kTopKeys.count(key)) fail("$", "unknown key '" + key + "'");
  Session s;
  try {
    s.field = FieldSpec::parse(require_string(j, "field", "$"));
  } catch (const ContractViolation& e) {
    fail("$.field", e.what());
  }
  const Json& q = require(j, "quiver", "$");
  const Json& vs = require(q, "vertices", "$.quiver");
  if (!vs.is_array() || vs.empty()) fail("$.quiver.vertices", "expected a nonempty array of names");
  for (const auto& v : vs) {
    if (v.is_string()) s.vertices.push_back(v.get<std::string>());
    else if (v.is_number_integer()) s.vertices.push_back(std::to_string(v.get<long long>()));
    else fail("$.quiver.vertices", "vertex names must be strings");
  }
  if (q.contains("arrows")) {
    const Json& as = q.at("arrows");
    if (!as.is_array()) fail("$.quiver.arrows", "expected an array");
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string p = "$.quiver.arrows[" + std::to_string(i) + "]";
      Quiver::ArrowSpec a{require_string(as[i], "name", p), require_string(as[i], "source", p),
                          require_string(as[i], "target", p)};
      for (const auto* end : {&a.source, &a.target})
        if (std::find(s.vertices.begin(), s.vertices.end(), *end) == s.vertices.end())
          fail(p, "arrow '" + a.name + "' has unknown " + (end == &a.source ? "source" : "target") + " '" + *end + "'");
      s.arrows.push_back(a);
    }
  }
  if (j.contains("relations")) {
    if (!j.at("relations").is_array()) fail("$.relations", "expected an array");
    s.relations = j.at("relations");
  }
  for (const char* key : {"modules", "morphisms"}) {
    if (!j.contains(key)) continue;
    const Json& defs = j.at(key);
    if (!defs.is_object()) fail(std::string("$.") + key, "expected an object of named definitions");
    auto& out = std::string(key) == "modules" ? s.modules : s.morphisms;
    for (const auto& [name, def] : defs.items()) out.emplace_back(name, def);
  }
  if (j.contains("commands")) {
    const Json& cs = j.at("commands");
    if (!cs.is_array()) fail("$.commands", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string p = "$.commands[" + std::to_string(i) + "]";
      require_string(cs[i], "op", p);
      s.commands.push_back(cs[i]);
    }
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) fail("$.seed", "expected an integer");
    s.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("output")) {
    s.output = j.at("output").get<std::string>();
    if (s.output != "json" && s.output != "text") fail("$.output", "expected \"json\" or \"text\"");
  }
  // Resolve everything once.
  Workspace w(s, max_path_length);
  for (const auto& [name, def] : s.modules) w.module(name);
  for (const auto& [name, def] : s.morphisms) w.morphism(name);
  return s;
}

Session parse_session(const std::string& text, std::size_t max_path_length) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail("$", std::string("invalid JSON: ") + e.what());
  }
  return session_from_json(j, max_path_length);
}

Json session_to_json(const Session& s) {
  Json j;
  j["field"] = s.field.name();
  Json q;
  q["vertices"] = s.vertices;
  q["arrows"] = Json::array();
  for (const auto& a : s.arrows) q["arrows"].push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
  j["quiver"] = q;
  j["relations"] = s.relations;
  j["modules"] = Json::object();
  for (const auto& [name, def] : s.modules) j["modules"][name] = def;
  j["morphisms"] = Json::object();
  for (const auto& [name, def] : s.morphisms) j["morphisms"][name] = def;
  j["commands"] = s.commands;
  j["seed"] = s.seed;
  j["output"] = s.output;
  return j;
}

std::string render_session(const Session& s) { return session_to_json(s).dump(2); }

// ---------------------------------------------------------------- workspace

Workspace::Workspace(const Session& s, std::size_t max_path_length) : session_(&s), seed_(s.seed) {
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < s.relations.size(); ++i) {
    const std::string p = "$.relations[" + std::to_string(i) + "]";
    const Json& r = s.relations[i];
    if (!r.is_array() || r.empty()) fail(p, "a relation is a nonempty array of terms");
    Relation rel;
    for (std::size_t k = 0; k < r.size(); ++k) {
      const std::string tp = p + "[" + std::to_string(k) + "]";
      const Json& t = r[k];
      Relation::Term term;
      const Json& c = t.contains("coeff") ? t.at("coeff") : Json("1");
      try {
        term.coeff = c.is_number_integer() ? s.field.from_int(c.get<std::int64_t>()) : s.field.parse_scalar(c.get<std::string>());
      } catch (const std::exception& e) {
        fail(tp + ".coeff", e.what());
      }
      const Json& path = require(t, "path", tp);
      if (!path.is_array()) fail(tp + ".path", "expected an array of arrow names");
      for (const auto& a : path) term.path.push_back(a.get<std::string>());
      rel.terms.push_back(std::move(term));
    }
    rels.push_back(std::move(rel));
  }
  try {
    alg_ = build_algebra(Quiver(s.vertices, s.arrows), rels, s.field, max_path_length);
  } catch (const ContractViolation& e) {
    fail("$.relations", e.what());
  } catch (const PreconditionError& e) {
    fail("$.relations", e.what());
  }
}

Vertex Workspace::vertex(const std::string& name) const {
  const Quiver& q = alg_->quiver();
  if (!q.has_vertex(name)) throw InputError("unknown vertex '" + name + "'");
  return q.vertex(name);
}

Mat Workspace::read_matrix(const Json& rows, std::size_t r, std::size_t c, const std::string& path) const {
  const FieldSpec f = alg_->field();
  Mat m(f, r, c);
  if (!rows.is_array()) fail(path, "matrix must be an array of rows");
  if (rows.empty() && (r == 0 || c == 0)) return m;
  if (rows.size() != r) fail(path, "expected " + std::to_string(r) + " rows, got " + std::to_string(rows.size()));
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c)
      fail(path, "row " + std::to_string(i) + " must have " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < c; ++k) {
      const Json& v = rows[i][k];
      try {
        m(i, k) = v.is_number_integer() ? f.from_int(v.get<std::int64_t>()) : f.parse_scalar(v.get<std::string>());
      } catch (const std::exception& e) {
        fail(path, std::string("bad scalar: ") + e.what());
      }
    }
  }
  return m;
}

Workspace::ModuleValue Workspace::named_module(const std::string& name, const std::string& path) {
  if (auto it = modules_.find(name); it != modules_.end()) return it->second;
  auto def = std::find_if(session_->modules.begin(), session_->modules.end(), [&](const auto& p) { return p.first == name; });
  if (def == session_->modules.end()) {
    bool is_morphism = std::any_of(session_->morphisms.begin(), session_->morphisms.end(),
                                   [&](const auto& p) { return p.first == name; });
    fail(path, is_morphism ? "'" + name + "' is a morphism, not a module" : "unknown module '" + name + "'");
  }
  if (in_progress_[name]) fail(path, "cyclic definition involving '" + name + "'");
  in_progress_[name] = 1;
  const std::string p = "$.modules." + name;
  ModuleValue v;
  if (def->second.is_string()) {
    v = eval_module(ExprParser(def->second.get<std::string>(), p).parse(), p);
  } else {
    v.rep = module_value(def->second, p);
  }
  in_progress_[name] = 0;
  modules_[name] = v;
  return v;
}

Rep Workspace::module_value(const Json& def, const std::string& path) {
  if (def.is_string()) return eval_module(ExprParser(def.get<std::string>(), path).parse(), path).rep;
  if (!def.is_object()) fail(path, "a module is an expression string or an object with dims and arrows");
  const Quiver& q = alg_->quiver();
  const Json& dj = require(def, "dims", path);
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  if (dj.is_array()) {
    if (dj.size() != dims.size()) fail(path + ".dims", "expected one entry per vertex");
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = dj[i].get<std::size_t>();
  } else if (dj.is_object()) {
    for (const auto& [v, d] : dj.items()) {
      if (!q.has_vertex(v)) fail(path + ".dims", "unknown vertex '" + v + "'");
      dims[static_cast<std::size_t>(q.vertex(v))] = d.get<std::size_t>();
    }
  } else {
    fail(path + ".dims", "expected an array or an object");
  }
  std::vector<Mat> arrows;
  const Json arrows_def = def.contains("arrows") ? def.at("arrows") : Json::object();
  for (const auto& [a, _] : arrows_def.items())
    try {
      q.arrow_index(a);
    } catch (const ContractViolation&) {
      fail(path + ".arrows", "unknown arrow '" + a + "'");
    }
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(static_cast<int>(k));
    const std::size_t r = dims[static_cast<std::size_t>(a.target)], c = dims[static_cast<std::size_t>(a.source)];
    if (arrows_def.contains(a.name)) arrows.push_back(read_matrix(arrows_def.at(a.name), r, c, path + ".arrows." + a.name));
    else arrows.emplace_back(alg_->field(), r, c);
  }
  try {
    return Rep(alg_, dims, std::move(arrows));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

RepMorphism Workspace::named_morphism(const std::string& name, const std::string& path) {
  if (auto it = morphisms_.find(name); it != morphisms_.end()) return it->second;
  auto def = std::find_if(session_->morphisms.begin(), session_->morphisms.end(), [&](const auto& p) { return p.first == name; });
  if (def == session_->morphisms.end()) {
    bool is_module = std::any_of(session_->modules.begin(), session_->modules.end(), [&](const auto& p) { return p.first == name; });
    fail(path, is_module ? "'" + name + "' is a module, not a morphism" : "unknown morphism '" + name + "'");
  }
  if (in_progress_[name]) fail(path, "cyclic definition involving '" + name + "'");
  in_progress_[name] = 1;
  RepMorphism f = morphism_value(def->second, "$.morphisms." + name);
  in_progress_[name] = 0;
  morphisms_[name] = f;
  return f;
}

RepMorphism Workspace::morphism_value(const Json& def, const std::string& path) {
  if (def.is_string()) return eval_morphism(ExprParser(def.get<std::string>(), path).parse(), path);
  if (!def.is_object()) fail(path, "a morphism is an expression string or an object with from, to, matrices");
  Rep from = module_value(require(def, "from", path), path + ".from");
  Rep to = module_value(require(def, "to", path), path + ".to");
  const Quiver& q = alg_->quiver();
  const Json mats_def = def.contains("matrices") ? def.at("matrices") : Json::object();
  for (const auto& [v, _] : mats_def.items())
    if (!q.has_vertex(v)) fail(path + ".matrices", "unknown vertex '" + v + "'");
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    const Vertex v = static_cast<Vertex>(x);
    const std::string& name = q.vertex_name(v);
    if (mats_def.contains(name)) mats.push_back(read_matrix(mats_def.at(name), to.dim(v), from.dim(v), path + ".matrices." + name));
    else mats.emplace_back(alg_->field(), to.dim(v), from.dim(v));
  }
  try {
    return RepMorphism(from, to, std::move(mats));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

Rep Workspace::module(const std::string& expr) { return module_value(Json(expr), "$"); }
RepMorphism Workspace::morphism(const std::string& expr) { return morphism_value(Json(expr), "$"); }

Workspace::ModuleValue Workspace::eval_module(const Node& n, const std::string& path) {
  try {
    if (n.head == "+") {
      std::vector<Rep> parts;
      for (const auto& a : n.args) parts.push_back(eval_module(a, path).rep);
      return {direct_sum(parts).sum, {}, {}};
    }
    if (!n.call) {
      if (n.head == "0") return {Rep::zero(alg_), {}, {}};
      return named_module(n.head, path);
    }
    const std::string& h = n.head;
    auto vert = [&]() {
      arity(n, 1, path);
      if (n.args[0].call) fail(path, "expected a vertex name in '" + node_text(n) + "'");
      if (!alg_->quiver().has_vertex(n.args[0].head)) fail(path, "unknown vertex '" + n.args[0].head + "'");
      return alg_->quiver().vertex(n.args[0].head);
    };
    auto sub = [&]() {
      arity(n, 1, path);
      return eval_module(n.args[0], path);
    };
    if (h == "S" || h == "simple") return {simple(alg_, vert()), {}, {}};
    if (h == "P" || h == "projective") return {projective(alg_, vert()), {}, {}};
    if (h == "I" || h == "injective") return {injective(alg_, vert()), {}, {}};
    if (h == "kernel" || h == "ker" || h == "image" || h == "im") {
      arity(n, 1, path);
      RepMorphism f = eval_morphism(n.args[0], path);
      SubResult r = (h == "kernel" || h == "ker") ? kernel(f) : image(f);
      return {r.module, r.map, {}};
    }
    if (h == "cokernel" || h == "coker") {
      arity(n, 1, path);
      SubResult r = cokernel(eval_morphism(n.args[0], path));
      return {r.module, {}, r.map};
    }
    if (h == "radical" || h == "rad" || h == "socle" || h == "soc") {
      Rep m = sub().rep;
      SubResult r = sub_to_rep((h == "radical" || h == "rad") ? radical(m) : socle(m));
      return {r.module, r.map, {}};
    }
    if (h == "top") {
      SubResult r = top(sub().rep);
      return {r.module, {}, r.map};
    }
    if (h == "envelope" || h == "small_envelope") {
      SmallEnvelope e = small_envelope(sub().rep);
      return {e.envelope, {}, {}};
    }
    if (h == "syzygy" || h == "omega") {
      ProjectiveCover c = projective_cover(sub().rep);
      SubResult r = kernel(c.epi);
      return {r.module, r.map, {}};
    }
    if (h == "tau") return {tau(sub().rep), {}, {}};
    if (h == "tau_minus") return {tau_minus(sub().rep), {}, {}};
    if (h == "domain" || h == "codomain") {
      arity(n, 1, path);
      RepMorphism f = eval_morphism(n.args[0], path);
      return {h == "domain" ? f.from() : f.to(), {}, {}};
    }
    fail(path, "unknown module constructor '" + h + "'");
  } catch (const ContractViolation& e) {
    fail(path, std::string(e.what()) + " in '" + node_text(n) + "'");
  } catch (const PreconditionError& e) {
    fail(path, std::string(e.what()) + " in '" + node_text(n) + "'");
  }
}

RepMorphism Workspace::eval_morphism(const Node& n, const std::string& path) {
  try {
    if (n.head == "+") {
      RepMorphism f = eval_morphism(n.args[0], path);
      for (std::size_t i = 1; i < n.args.size(); ++i) f = f + eval_morphism(n.args[i], path);
      return f;
    }
    if (!n.call) return named_morphism(n.head, path);
    const std::string& h = n.head;
    if (h == "zero") {
      arity(n, 2, path);
      return RepMorphism::zero(eval_module(n.args[0], path).rep, eval_module(n.args[1], path).rep);
    }
    if (h == "id" || h == "identity") {
      arity(n, 1, path);
      return RepMorphism::identity(eval_module(n.args[0], path).rep);
    }
    if (h == "inclusion" || h == "projection") {
      arity(n, 1, path);
      ModuleValue v = eval_module(n.args[0], path);
      auto& m = h == "inclusion" ? v.incl : v.proj;
      if (!m) fail(path, "'" + node_text(n.args[0]) + "' has no canonical " + h);
      return *m;
    }
    if (h == "cover" || h == "projective_cover") {
      arity(n, 1, path);
      return projective_cover(eval_module(n.args[0], path).rep).epi;
    }
    if (h == "hull" || h == "injective_envelope") {
      arity(n, 1, path);
      return injective_envelope(eval_module(n.args[0], path).rep).mono;
    }
    if (h == "compose") {
      if (n.args.size() < 2) fail(path, "compose takes at least two morphisms");
      RepMorphism f = eval_morphism(n.args.back(), path);
      for (std::size_t i = n.args.size() - 1; i-- > 0;) f = eval_morphism(n.args[i], path) * f;
      return f;
    }
    if (h == "scale") {
      arity(n, 2, path);
      Scalar c = alg_->field().parse_scalar(n.args[0].head);
      return c * eval_morphism(n.args[1], path);
    }
    if (h == "hom") {
      arity(n, 3, path);
      Rep a = eval_module(n.args[0], path).rep, b = eval_module(n.args[1], path).rep;
      HomSpace hs(a, b);
      std::size_t k = std::stoul(n.args[2].head);
      if (k >= hs.dim()) fail(path, "Hom basis has only " + std::to_string(hs.dim()) + " elements");
      return hs[k];
    }
    if (h == "embedding") {
      arity(n, 1, path);
      return small_envelope(eval_module(n.args[0], path).rep).embedding;
    }
    if (h == "epi_part") {
      arity(n, 1, path);
      RepMorphism f = eval_morphism(n.args[0], path);
      return corestrict_to_image(f, image(f));
    }
    if (h == "restrict") {
      arity(n, 2, path);
      RepMorphism f = eval_morphism(n.args[0], path);
      ModuleValue v = eval_module(n.args[1], path);
      if (!v.incl) fail(path, "'" + node_text(n.args[1]) + "' is not a submodule");
      return f * *v.incl;
    }
    fail(path, "unknown morphism constructor '" + h + "'");
  } catch (const ContractViolation& e) {
    fail(path, std::string(e.what()) + " in '" + node_text(n) + "'");
  } catch (const PreconditionError& e) {
    fail(path, std::string(e.what()) + " in '" + node_text(n) + "'");
  } catch (const std::invalid_argument& e) {
    fail(path, std::string("bad number in '") + node_text(n) + "'");
  }
}

std::vector<Rep> Workspace::default_universe() {
  std::vector<Rep> candidates;
  for (const auto& [name, def] : session_->modules) candidates.push_back(named_module(name, "$.modules").rep);
  for (std::size_t x = 0; x < alg_->vertex_count(); ++x) {
    const Vertex v = static_cast<Vertex>(x);
    candidates.push_back(simple(alg_, v));
    candidates.push_back(projective(alg_, v));
    candidates.push_back(injective(alg_, v));
  }
  std::vector<Rep> out;
  for (const auto& c : candidates) {
    if (c.is_zero()) continue;
    for (const auto& part : krull_schmidt(c, seed_).summands) {
      bool seen = std::any_of(out.begin(), out.end(), [&](const Rep& u) { return isomorphic_indecomposables(u, part); });
      if (!seen) out.push_back(part);
    }
  }
  return out;
}

// ---------------------------------------------------------------- rendering

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(row);
  }
  return rows;
}

Json module_json(const Rep& m, std::uint64_t seed, bool with_arrows) {
  Json j;
  j["name"] = recognized_name(m, seed);
  j["dims"] = m.dims();
  j["length"] = m.total_dim();
  if (with_arrows) {
    Json a = Json::object();
    const Quiver& q = m.algebra()->quiver();
    for (std::size_t k = 0; k < q.arrow_count(); ++k) a[q.arrow(static_cast<int>(k)).name] = matrix_json(m.arrow(static_cast<int>(k)));
    j["arrows"] = a;
  }
  return j;
}

Json morphism_json(const RepMorphism& f) {
  Json j;
  j["from"] = f.from().dims();
  j["to"] = f.to().dims();
  Json mats = Json::object();
  const Quiver& q = f.from().algebra()->quiver();
  for (std::size_t x = 0; x < q.vertex_count(); ++x)
    mats[q.vertex_name(static_cast<Vertex>(x))] = matrix_json(f.at(static_cast<Vertex>(x)));
  j["matrices"] = mats;
  return j;
}

}  // namespace morphdet
