#ifndef CUBE_TOOLS_SESSION_HPP
#define CUBE_TOOLS_SESSION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cube/kernel.hpp"
#include "cube/reduction.hpp"
#include "cube/spec.hpp"
#include "cube/surface.hpp"

namespace cube::cli {

enum ExitCode : int { kOk = 0, kSemantic = 1, kUsage = 2 };

struct Settings {
  std::string spec = "coc";
  std::size_t fuel = kDefaultFuel;
  Strategy strategy = Strategy::NormalOrder;
  bool trace = false;
};

struct SessionDef {
  std::string name;
  Term term;
  Term type;  // null for untyped definitions
  std::size_t depth = 0;  // context size the term is scoped over
};

struct Reply {
  int status = kOk;
  std::string text;  // newline terminated lines
  bool quit = false;

  void line(const std::string& s) { text += s + "\n"; }
  Reply& fail(int code, const std::string& s) {
    status = code;
    line(s);
    return *this;
  }
};

/// Interpreter state shared by the REPL and the one-shot subcommands.
/// Every command is a function of the current state and its input line.
class Session {
 public:
  explicit Session(Settings settings);

  Reply execute(std::string_view line);

  Reply set_spec(const std::string& name);
  Reply check_expr(std::string_view text, bool type_only = false);
  Reply eval_expr(std::string_view text);
  Reply assume(std::string_view decl);
  Reply define(std::string_view line);
  // `stdlib` or a definition file.
  Reply load(const std::string& source);
  // Checks every entry of a definition file, honouring per-entry specs.
  Reply check_file(const std::string& path);
  Reply list_defs() const;

  const PtsSpec& spec() const { return spec_; }
  const Context& context() const { return ctx_; }
  const std::vector<SessionDef>& definitions() const { return defs_; }
  Settings& settings() { return settings_; }

 private:
  ParseEnv env(bool allow_free) const;
  Reply add_entries(const DefFile& file, const std::string& origin, bool honour_specs);
  Reply add_definition(const DefEntry& e, const PtsSpec& spec);
  Reply add_assumption(const std::string& name, const Term& type);
  std::string show(const Term& t) const;
  std::string show_type(const Term& t) const;

  Settings settings_;
  PtsSpec spec_;
  Context ctx_;
  std::vector<SessionDef> defs_;
};

std::string read_file(const std::string& path, bool& ok);

}  // namespace cube::cli

#endif
