#include <functional>
#include <sstream>
#include <thread>

#include "morphdet/session.hpp"

namespace morphdet {

namespace {

struct Context {
  Workspace& w;
  const Json& cmd;
  std::string path;
  unsigned jobs;

  std::uint64_t seed() const { return w.seed(); }
  const Json& arg(const std::string& key) const {
    if (!cmd.contains(key)) throw InputError(path + ": missing key '" + key + "'");
    return cmd.at(key);
  }
  Rep module(const std::string& key) { return w.module_value(arg(key), path + "." + key); }
  RepMorphism morphism(const std::string& key) { return w.morphism_value(arg(key), path + "." + key); }
  std::string name(const Rep& m) const { return recognized_name(m, w.seed()); }
  std::vector<Rep> universe() {
    if (!cmd.contains("universe")) return w.default_universe();
    std::vector<Rep> out;
    const Json& u = cmd.at("universe");
    if (!u.is_array()) throw InputError(path + ".universe: expected an array of modules");
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(w.module_value(u[i], path + ".universe[" + std::to_string(i) + "]"));
    return out;
  }
};

Json names_of(const std::vector<Rep>& ms, std::uint64_t seed) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(recognized_name(m, seed));
  return out;
}

Json brief(const Rep& m, std::uint64_t seed) {
  return {{"name", recognized_name(m, seed)}, {"dims", m.dims()}};
}

Json vertex_name(const Rep& m, Vertex v) { return m.algebra()->quiver().vertex_name(v); }

OracleVerdict parallel_oracle(const Rep& c, const RepMorphism& alpha, const std::vector<Rep>& universe, unsigned jobs) {
  if (jobs <= 1 || universe.size() < 2) return oracle_check(c, alpha, universe);
  const std::size_t n = std::min<std::size_t>(jobs, universe.size());
  std::vector<OracleVerdict> verdicts(n);
  std::vector<std::size_t> starts(n + 1);
  for (std::size_t k = 0; k <= n; ++k) starts[k] = universe.size() * k / n;
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> threads;
  for (std::size_t k = 0; k < n; ++k) {
    threads.emplace_back([&, k] {
      try {
        std::vector<Rep> chunk(universe.begin() + static_cast<std::ptrdiff_t>(starts[k]),
                               universe.begin() + static_cast<std::ptrdiff_t>(starts[k + 1]));
        verdicts[k] = oracle_check(c, alpha, chunk);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (std::size_t k = 0; k < n; ++k) {
    if (verdicts[k].determined) continue;
    OracleVerdict v = verdicts[k];
    v.witness_index = *v.witness_index + starts[k];
    return v;
  }
  return {};
}

using Handler = std::function<Json(Context&)>;

Json op_describe(Context& c) {
  Rep m = c.module("module");
  Json j = module_json(m, c.seed(), true);
  Decomposition d = krull_schmidt(m, c.seed());
  j["indecomposable"] = d.parts.size() == 1;
  j["projective"] = is_projective(m);
  j["injective"] = is_injective(m);
  j["summands"] = names_of(d.parts, c.seed());
  return j;
}

Json op_decompose(Context& c) {
  Rep m = c.module("module");
  Decomposition d = krull_schmidt(m, c.seed());
  Json classes = Json::array();
  for (std::size_t k = 0; k < d.summands.size(); ++k)
    classes.push_back({{"name", c.name(d.summands[k])}, {"dims", d.summands[k].dims()}, {"multiplicity", d.multiplicity[k]}});
  return {{"summands", names_of(d.parts, c.seed())}, {"classes", classes}};
}

Json op_tau(Context& c) { return brief(tau(c.module("module")), c.seed()); }
Json op_tau_minus(Context& c) { return brief(tau_minus(c.module("module")), c.seed()); }

Json op_ext(Context& c) {
  int degree = c.cmd.contains("degree") ? c.cmd.at("degree").get<int>() : 1;
  return {{"dimension", ext(c.module("left"), c.module("right"), degree).dimension}};
}

Json op_ar_sequence(Context& c) {
  Rep n = c.module("module");
  if (is_projective(n)) throw InputError(c.path + ": no almost split sequence ends in a projective module");
  ArSequence seq = ar_sequence(n, c.seed());
  Decomposition mid = krull_schmidt(seq.ses.middle, c.seed());
  return {{"left", c.name(seq.ses.left)},
          {"middle", names_of(mid.parts, c.seed())},
          {"right", c.name(seq.ses.right)},
          {"verified", verify_almost_split(seq, c.universe())}};
}

Json op_almost_factors(Context& c) {
  Rep n = c.module("module");
  RepMorphism alpha = c.morphism("morphism");
  RepMorphism rho = minimal_right_almost_split(n, c.seed());
  auto cert = almost_factors_through(rho, alpha);
  Json j{{"verdict", cert.has_value()}, {"rho_source", c.name(rho.from())}};
  if (cert) j["eta"] = morphism_json(cert->eta);
  return j;
}

Json op_auslander(Context& c) {
  AuslanderDeterminer a = auslander_determiner(c.morphism("morphism"));
  Decomposition d = krull_schmidt(a.module, c.seed());
  return {{"module", c.name(a.module)},
          {"tau_minus_part", c.name(a.tau_minus_part)},
          {"projective_part", c.name(a.projective_part)},
          {"summands", names_of(d.summands, c.seed())}};
}

Json op_minimal_determiner(Context& c) {
  DeterminerReport r = minimal_determiner(c.morphism("morphism"), c.seed());
  Json ks = Json::array();
  for (const auto& k : r.kernel_summands)
    ks.push_back({{"summand", c.name(k.summand)}, {"tau_minus", c.name(k.tau_minus)}});
  Json ps = Json::array();
  for (const auto& p : r.projective_summands)
    ps.push_back({{"vertex", vertex_name(p.projective, p.vertex)}, {"name", c.name(p.projective)}, {"tags", p.tags}});
  Json rejected = Json::array();
  for (Vertex v : r.rejected_vertices) rejected.push_back(vertex_name(r.alpha.from(), v));
  return {{"intrinsic_kernel", c.name(r.intrinsic_kernel)},
          {"kernel_summands", ks},
          {"projective_summands", ps},
          {"rejected_vertices", rejected},
          {"summands", names_of(r.t, c.seed())},
          {"module", c.name(r.t_sum)}};
}

Json op_check_determines(Context& c) {
  Determination d = determine(c.module("module"), c.morphism("morphism"), c.seed());
  Json j{{"verdict", d.determined}};
  if (d.missing) j["missing"] = c.name(*d.missing);
  if (d.witness) {
    j["witness_domain"] = c.name(d.witness->from());
    j["witness_codomain"] = c.name(d.witness->to());
  }
  return j;
}

Json op_oracle(Context& c) {
  std::vector<Rep> u = c.universe();
  OracleVerdict v = parallel_oracle(c.module("module"), c.morphism("morphism"), u, c.jobs);
  Json j{{"verdict", v.determined}, {"universe_size", u.size()}};
  if (v.witness_index) {
    j["witness_index"] = *v.witness_index;
    j["witness_module"] = c.name(u[*v.witness_index]);
  }
  return j;
}

Json op_intrinsic_kernel(Context& c) { return brief(intrinsic_kernel(c.morphism("morphism")), c.seed()); }

Json op_prop_checks(Context& c) {
  Rep s = c.module("simple");
  RepMorphism alpha = c.morphism("morphism");
  Vertex x = simple_vertex(s);
  auto guarded = [](auto&& f) -> Json {
    try {
      return f();
    } catch (const PreconditionError&) {
      return nullptr;
    }
  };
  Json j;
  j["vertex"] = vertex_name(s, x);
  j["in_cokernel_socle"] = simple_in_cokernel_socle(x, alpha);
  j["prop1"] = guarded([&] { return prop1_check(alpha); });
  j["prop2"] = guarded([&] { return prop2_check(s, alpha); });
  j["prop3"] = guarded([&] { return prop3_check(s, alpha); });
  j["prop4"] = guarded([&] { return prop4_certificate(s, alpha, c.seed()).has_value(); });
  j["ext2"] = guarded([&] { return ext2_criterion(s, alpha); });
  j["almost_factors"] = almost_factors_through(projective(alpha.from().algebra(), x), alpha, c.seed()).has_value();
  return j;
}

Json op_small_envelope(Context& c) {
  SmallEnvelope e = small_envelope(c.module("module"));
  Json j = brief(e.envelope, c.seed());
  j["injective"] = c.name(e.injective.envelope.module);
  return j;
}

Json op_i_epsilon(Context& c) {
  EpiContext ctx = i_epsilon(c.morphism("morphism"));
  Rep ie = sub_to_rep(ctx.i_epsilon).module;
  return {{"i_epsilon", c.name(ie)},
          {"dims", ie.dims()},
          {"n_envelope", brief(ctx.n_envelope.envelope, c.seed())},
          {"x_envelope", brief(ctx.x_envelope.envelope, c.seed())}};
}

Json op_kernel_determined(Context& c) {
  KernelDeterminedVerdict v = kernel_determined_verdict(c.morphism("morphism"), true, c.seed());
  return {{"verdict", v.kernel_determined}, {"essential", v.essential}, {"no_projective", v.no_projective}};
}

Json op_maximal_prolongation(Context& c) {
  EpiContext ctx = i_epsilon(c.morphism("morphism"));
  Prolongation p = maximal_prolongation(ctx);
  return {{"z", c.name(p.module)},
          {"dims", p.module.dims()},
          {"length", p.length},
          {"predicted_length", p.predicted_length},
          {"socle_growth", socle_growth_length(ctx)}};
}

Json op_kd_extensions(Context& c) {
  EpiContext ctx = i_epsilon(c.morphism("morphism"));
  KernelDeterminedExtensions e = enumerate_kernel_determined_extensions(ctx);
  Json members = Json::array();
  for (const auto& y : e.members) members.push_back(brief(sub_to_rep(y).module, c.seed()));
  Json families = Json::array();
  const FieldSpec f = ctx.x().field();
  for (const auto& fam : e.families) {
    Json samples = Json::array();
    for (int t : {0, 1, -1, 2}) samples.push_back(c.name(sub_to_rep(fam.member(f.from_int(t))).module));
    families.push_back({{"vertex", vertex_name(ctx.x(), fam.vertex)}, {"samples", samples}});
  }
  return {{"count", e.members.size()}, {"families", e.families.size()}, {"members", members}, {"family_samples", families}};
}

Json op_in_add(Context& c) { return {{"verdict", in_add(c.module("module"), c.module("of"))}}; }

Json op_isomorphic(Context& c) { return {{"verdict", is_isomorphic(c.module("left"), c.module("right"), c.seed())}}; }

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"describe", op_describe},
      {"decompose", op_decompose},
      {"tau", op_tau},
      {"tau-minus", op_tau_minus},
      {"ext", op_ext},
      {"ar-sequence", op_ar_sequence},
      {"almost-factors", op_almost_factors},
      {"auslander-determiner", op_auslander},
      {"minimal-determiner", op_minimal_determiner},
      {"check-determines", op_check_determines},
      {"oracle", op_oracle},
      {"intrinsic-kernel", op_intrinsic_kernel},
      {"prop-checks", op_prop_checks},
      {"small-envelope", op_small_envelope},
      {"i-epsilon", op_i_epsilon},
      {"kernel-determined", op_kernel_determined},
      {"maximal-prolongation", op_maximal_prolongation},
      {"kernel-determined-extensions", op_kd_extensions},
      {"in-add", op_in_add},
      {"isomorphic", op_isomorphic},
  };
  return h;
}

Json algebra_json(const Workspace& w) {
  const BoundAlgebra& a = *w.algebra();
  return {{"field", a.field().name()}, {"vertices", a.quiver().vertex_names()}, {"dimension", a.dim()}};
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

Report run(const Session& s, const RunOptions& opts) {
  Workspace w(s, opts.max_path_length);
  if (opts.seed) w.set_seed(*opts.seed);
  Report r;
  r.json["algebra"] = algebra_json(w);
  r.json["seed"] = w.seed();
  Json results = Json::array();
  for (std::size_t i = 0; i < s.commands.size(); ++i) {
    const Json& cmd = s.commands[i];
    const std::string path = "$.commands[" + std::to_string(i) + "]";
    const std::string op = cmd.at("op").get<std::string>();
    auto it = handlers().find(op);
    if (it == handlers().end()) throw InputError(path + ": unknown op '" + op + "'");
    Context ctx{w, cmd, path, std::max(1u, opts.jobs)};
    Json result;
    try {
      result = it->second(ctx);
    } catch (const InputError&) {
      throw;
    } catch (const ContractViolation& e) {
      throw InputError(path + ": " + e.what());
    } catch (const PreconditionError& e) {
      throw InputError(path + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw InputError(path + ": " + e.what());
    }
    Json entry;
    entry["index"] = i;
    entry["op"] = op;
    Json args = cmd;
    args.erase("op");
    args.erase("expect");
    entry["args"] = args;
    entry["result"] = result;
    if (cmd.contains("expect")) {
      r.assertions = true;
      Json mismatches = Json::array();
      for (const auto& [key, want] : cmd.at("expect").items()) {
        const Json got = result.contains(key) ? result.at(key) : Json();
        if (got != want) mismatches.push_back({{"key", key}, {"expected", want}, {"actual", got}});
      }
      entry["passed"] = mismatches.empty();
      if (!mismatches.empty()) {
        entry["mismatches"] = mismatches;
        r.passed = false;
      }
    }
    results.push_back(entry);
  }
  r.json["results"] = results;
  r.json["passed"] = r.passed;
  return r;
}

Report run_oracle(const Session& s, const RunOptions& opts) {
  Workspace w(s, opts.max_path_length);
  if (opts.seed) w.set_seed(*opts.seed);
  const std::uint64_t seed = w.seed();
  const unsigned jobs = std::max(1u, opts.jobs);
  Report r;
  r.assertions = true;
  r.json["algebra"] = algebra_json(w);
  r.json["seed"] = seed;
  std::vector<Rep> universe = w.default_universe();
  r.json["universe"] = names_of(universe, seed);
  Json results = Json::array();
  for (const auto& [name, def] : s.morphisms) {
    RepMorphism alpha = w.morphism(name);
    DeterminerReport rep = minimal_determiner(alpha, seed);
    const bool a_ok = parallel_oracle(rep.auslander.module, alpha, universe, jobs).determined;
    const bool t_ok = parallel_oracle(rep.t_sum, alpha, universe, jobs).determined;
    bool ok = a_ok && t_ok;
    Json drops = Json::array();
    for (std::size_t k = 0; k < rep.t.size(); ++k) {
      std::vector<Rep> rest;
      for (std::size_t i = 0; i < rep.t.size(); ++i)
        if (i != k) rest.push_back(rep.t[i]);
      Rep c = rest.empty() ? Rep::zero(w.algebra()) : direct_sum(rest).sum;
      const bool det = parallel_oracle(c, alpha, universe, jobs).determined;
      ok = ok && !det;
      drops.push_back({{"dropped", recognized_name(rep.t[k], seed)}, {"determines", det}});
    }
    results.push_back({{"morphism", name},
                       {"t", names_of(rep.t, seed)},
                       {"auslander", recognized_name(rep.auslander.module, seed)},
                       {"auslander_determines", a_ok},
                       {"t_determines", t_ok},
                       {"drops", drops},
                       {"passed", ok}});
    r.passed = r.passed && ok;
  }
  r.json["results"] = results;
  r.json["passed"] = r.passed;
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  const Json& a = r.json.at("algebra");
  out << "algebra over " << a.at("field").get<std::string>() << ", " << a.at("vertices").size() << " vertices, dimension "
      << a.at("dimension").get<std::size_t>() << "\n";
  if (r.json.contains("universe")) out << "universe: " << r.json.at("universe").size() << " indecomposables\n";
  for (const auto& e : r.json.at("results")) {
    if (e.contains("op")) {
      out << "[" << e.at("index").get<std::size_t>() << "] " << e.at("op").get<std::string>();
      for (const auto& [k, v] : e.at("args").items()) out << " " << k << "=" << scalar_text(v);
      if (e.contains("passed")) out << (e.at("passed").get<bool>() ? "  ok" : "  MISMATCH");
      out << "\n";
      for (const auto& [k, v] : e.at("result").items()) out << "    " << k << ": " << scalar_text(v) << "\n";
      if (e.contains("mismatches"))
        for (const auto& m : e.at("mismatches"))
          out << "    ! " << m.at("key").get<std::string>() << " expected " << m.at("expected").dump() << ", got "
              << m.at("actual").dump() << "\n";
    } else {
      out << e.at("morphism").get<std::string>() << ": T = " << e.at("t").dump() << ", Auslander "
          << (e.at("auslander_determines").get<bool>() ? "determines" : "FAILS") << ", T "
          << (e.at("t_determines").get<bool>() ? "determines" : "FAILS");
      for (const auto& d : e.at("drops"))
        out << ", without " << d.at("dropped").get<std::string>() << (d.at("determines").get<bool>() ? " still determines" : " does not");
      out << (e.at("passed").get<bool>() ? "  ok" : "  FAILED") << "\n";
    }
  }
  out << (r.passed ? "passed" : "FAILED") << "\n";
  return out.str();
}

}  // namespace morphdet
