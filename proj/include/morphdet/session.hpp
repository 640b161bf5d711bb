#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "morphdet/kernel_determined.hpp"

namespace morphdet {

using Json = nlohmann::ordered_json;

/// Malformed session text, dangling references, shape errors. The message
/// starts with the JSON path of the offending item.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A session as written. Module and morphism definitions keep their source
/// form (expression string or explicit object) so that rendering round-trips.
struct Session {
  FieldSpec field;
  std::vector<std::string> vertices;
  std::vector<Quiver::ArrowSpec> arrows;
  Json relations = Json::array();  // [[{"coeff": "1", "path": ["c", "a"]}, ...], ...]
  std::vector<std::pair<std::string, Json>> modules;
  std::vector<std::pair<std::string, Json>> morphisms;
  std::vector<Json> commands;
  std::uint64_t seed = 0;
  std::string output = "json";

  bool operator==(const Session& other) const;
};

/// Parses and validates (builds the algebra and resolves every definition).
Session parse_session(const std::string& text, std::size_t max_path_length = 32);
Session session_from_json(const Json& j, std::size_t max_path_length = 32);
Json session_to_json(const Session& s);
std::string render_session(const Session& s);

/// Evaluated session objects.
class Workspace {
 public:
  explicit Workspace(const Session& s, std::size_t max_path_length = 32);

  const AlgebraPtr& algebra() const { return alg_; }
  const Session& session() const { return *session_; }
  std::uint64_t seed() const { return seed_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  Rep module(const std::string& expr);
  RepMorphism morphism(const std::string& expr);
  Rep module_value(const Json& def, const std::string& path);
  RepMorphism morphism_value(const Json& def, const std::string& path);
  Vertex vertex(const std::string& name) const;

  /// Indecomposable summands (one per iso class) of the named modules and of
  /// all S(x), P(x), I(x).
  std::vector<Rep> default_universe();
  std::size_t resolved_count() const { return modules_.size() + morphisms_.size(); }

  struct Node {
    std::string head;
    std::vector<Node> args;
    bool call = false;
  };
  struct ModuleValue {
    Rep rep;
    std::optional<RepMorphism> incl;  // canonical mono into an ambient module
    std::optional<RepMorphism> proj;  // canonical epi from an ambient module
  };

 private:
  ModuleValue eval_module(const Node& n, const std::string& path);
  RepMorphism eval_morphism(const Node& n, const std::string& path);
  ModuleValue named_module(const std::string& name, const std::string& path);
  RepMorphism named_morphism(const std::string& name, const std::string& path);
  Mat read_matrix(const Json& rows, std::size_t r, std::size_t c, const std::string& path) const;

  const Session* session_;
  AlgebraPtr alg_;
  std::uint64_t seed_ = 0;
  std::map<std::string, ModuleValue> modules_;
  std::map<std::string, RepMorphism> morphisms_;
  std::map<std::string, int> in_progress_;
};

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::size_t max_path_length = 32;
  unsigned jobs = 1;
};

struct Report {
  Json json;
  bool passed = true;        // every "expect" block matched
  bool assertions = false;   // some command carried an "expect" block
};

/// Executes the commands in order. Operation errors are rethrown as
/// InputError annotated with the command index.
Report run(const Session& s, const RunOptions& opts = {});
std::string render_text(const Report& r);

/// Definition-level oracle sweep over every named morphism: the Auslander
/// module and T(alpha) must determine alpha, and dropping any summand of
/// T(alpha) must not.
Report run_oracle(const Session& s, const RunOptions& opts = {});

struct Fixture {
  std::string name;
  std::string description;
  std::string text;  // session JSON
};
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);

/// Summary of a module for reports.
Json module_json(const Rep& m, std::uint64_t seed, bool with_arrows = false);
Json matrix_json(const Mat& m);
Json morphism_json(const RepMorphism& f);

}  // namespace morphdet
