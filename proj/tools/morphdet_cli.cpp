#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "morphdet/session.hpp"

using namespace morphdet;

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int emit(const Report& r, const std::string& format) {
  if (format == "text") std::cout << render_text(r);
  else std::cout << r.json.dump(2) << "\n";
  return r.assertions && !r.passed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morphdet: morphisms determined by modules over bound quiver algebras"};
  app.require_subcommand(1);

  std::string format;
  std::uint64_t seed = 0;
  std::size_t max_path_length = 32;
  unsigned jobs = 1;
  app.add_option("--format", format, "json or text (default: the session's output key)")
      ->check(CLI::IsMember({"json", "text"}));
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized searches");
  app.add_option("--max-path-length", max_path_length, "refuse algebras with longer nonzero paths")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "threads for oracle sweeps")->check(CLI::PositiveNumber);

  std::string file;
  auto* run_cmd = app.add_subcommand("run", "execute the commands of a session file");
  run_cmd->add_option("file", file, "session JSON, or - for stdin")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "check every named morphism against the definition");
  oracle_cmd->add_option("file", file, "session JSON, or - for stdin")->required();

  auto* fx = app.add_subcommand("fixtures", "built-in example sessions");
  fx->require_subcommand(1);
  auto* fx_list = fx->add_subcommand("list", "list fixture names");
  std::string fixture_name;
  auto* fx_run = fx->add_subcommand("run", "run a fixture");
  fx_run->add_option("name", fixture_name)->required();
  auto* fx_show = fx->add_subcommand("show", "print a fixture's session JSON");
  fx_show->add_option("name", fixture_name)->required();

  for (auto* sub : {run_cmd, oracle_cmd, fx, fx_list, fx_run, fx_show}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunOptions opts;
  if (*seed_opt) opts.seed = seed;
  opts.max_path_length = max_path_length;
  opts.jobs = jobs;

  try {
    if (*fx_list) {
      for (const auto& f : fixtures()) std::cout << f.name << "  " << f.description << "\n";
      return 0;
    }
    if (*fx_show) {
      std::cout << fixture(fixture_name).text << "\n";
      return 0;
    }
    std::string text = *fx_run ? fixture(fixture_name).text : read_file(file);
    Session s = parse_session(text, max_path_length);
    const std::string fmt = format.empty() ? s.output : format;
    if (*oracle_cmd) return emit(run_oracle(s, opts), fmt);
    return emit(run(s, opts), fmt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
