#include "session.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cube/stdlib.hpp"

namespace cube::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_type(const Term& classifier) {
  auto nf = beta_normal_form(classifier);
  return nf && nf->is(Tag::Sort);
}

Context prefix(const Context& ctx, std::size_t n) {
  return Context(std::vector<Decl>(ctx.decls().begin(), ctx.decls().begin() + static_cast<std::ptrdiff_t>(n)));
}

const char* const kHelp =
    "commands:\n"
    "  <expr>              evaluate\n"
    "  :eval <expr>        evaluate with the current strategy and fuel\n"
    "  :check <expr>       print the term with its type\n"
    "  :type <expr>        print the type\n"
    "  :assume x : T       extend the context\n"
    "  def x [: T] := e    add a definition\n"
    "  :load <file>        load a definition file, or `stdlib`\n"
    "  :defs               list assumptions and definitions\n"
    "  :spec <name>        switch specification and re-check everything\n"
    "  :strategy s         cbv, cbn or normal\n"
    "  :fuel N             step budget\n"
    "  :trace on|off       print reduction traces\n"
    "  :quit               leave\n";

}  // namespace

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  ok = static_cast<bool>(in);
  if (!ok) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Session::Session(Settings settings) : settings_(std::move(settings)) {
  auto spec = spec_by_name(settings_.spec);
  spec_ = spec ? *spec : coc_spec();
}

ParseEnv Session::env(bool allow_free) const {
  ParseEnv e;
  e.scope = ctx_.names();
  for (const SessionDef& d : defs_) e.definitions[d.name] = DefinitionRef{d.term, d.depth};
  for (const ConstantDecl& c : spec_.constants) e.constants.insert(c.name);
  e.allow_free = allow_free;
  return e;
}

std::string Session::show(const Term& t) const { return print_term(t, ctx_.names()); }

std::string Session::show_type(const Term& t) const {
  auto nf = beta_normal_form(t);
  return show(nf ? *nf : t);
}

Reply Session::execute(std::string_view raw) {
  std::string_view line = trim(raw);
  Reply r;
  if (line.empty() || line.substr(0, 2) == "--") return r;
  if (line.front() != ':') {
    auto word_end = line.find_first_of(" \t");
    std::string_view head = line.substr(0, word_end);
    if (head == "def" || head == "assume") return define(line);
    return eval_expr(line);
  }
  auto split = line.find_first_of(" \t");
  std::string cmd(line.substr(0, split));
  std::string_view arg = split == std::string_view::npos ? std::string_view{} : trim(line.substr(split));

  if (cmd == ":quit" || cmd == ":q") {
    r.quit = true;
    return r;
  }
  if (cmd == ":help" || cmd == ":h") {
    r.text = kHelp;
    return r;
  }
  if (cmd == ":eval") return eval_expr(arg);
  if (cmd == ":check") return check_expr(arg);
  if (cmd == ":type") return check_expr(arg, true);
  if (cmd == ":assume") return assume(arg);
  if (cmd == ":load") return load(std::string(arg));
  if (cmd == ":defs") return list_defs();
  if (cmd == ":spec") {
    if (arg.empty()) {
      r.line("spec " + spec_.name);
      return r;
    }
    return set_spec(std::string(arg));
  }
  if (cmd == ":strategy") {
    auto s = parse_strategy(arg);
    if (!s) return r.fail(kUsage, "error: unknown strategy '" + std::string(arg) + "' (cbv, cbn, normal)");
    settings_.strategy = *s;
    r.line("strategy " + std::string(strategy_name(*s)));
    return r;
  }
  if (cmd == ":fuel") {
    std::size_t n = 0;
    std::istringstream in{std::string(arg)};
    if (!(in >> n) || n == 0) return r.fail(kUsage, "error: fuel must be a positive number");
    settings_.fuel = n;
    r.line("fuel " + std::to_string(n));
    return r;
  }
  if (cmd == ":trace") {
    if (arg != "on" && arg != "off") return r.fail(kUsage, "error: expected ':trace on' or ':trace off'");
    settings_.trace = arg == "on";
    r.line(std::string("trace ") + (settings_.trace ? "on" : "off"));
    return r;
  }
  return r.fail(kUsage, "error: unknown command " + cmd + " (try :help)");
}

Reply Session::check_expr(std::string_view text, bool type_only) {
  Reply r;
  auto parsed = parse_term(text, env(true));
  if (!parsed) return r.fail(kUsage, parsed.error().format());
  auto ty = infer(spec_, ctx_, parsed->term, KernelOptions{});
  if (!ty) return r.fail(kSemantic, format_diagnostic(ty.error()));
  r.line(type_only ? show_type(*ty) : show(parsed->term) + " : " + show_type(*ty));
  return r;
}

Reply Session::eval_expr(std::string_view text) {
  Reply r;
  ParseEnv e = env(true);
  auto parsed = parse_term(text, e);
  if (!parsed) return r.fail(kUsage, parsed.error().format());
  const std::vector<std::string> names = parsed->names(e);
  ReductionTrace trace = normalize(parsed->term, settings_.strategy, settings_.fuel,
                                   NormalizeOptions{64, settings_.trace});
  if (settings_.trace) r.text += render_trace(trace, names);
  switch (trace.outcome.kind) {
    case Outcome::Kind::NormalForm:
      r.line(print_term(trace.outcome.term, names));
      break;
    case Outcome::Kind::LoopDetected:
      r.fail(kSemantic, "diverges (loop period " + std::to_string(trace.outcome.period) + ") after " +
                            std::to_string(trace.step_count) + " steps");
      break;
    case Outcome::Kind::FuelExhausted:
      r.fail(kSemantic, "fuel exhausted after " + std::to_string(trace.step_count) + " steps");
      break;
  }
  return r;
}

Reply Session::add_assumption(const std::string& name, const Term& type) {
  Reply r;
  auto sort = infer(spec_, ctx_, type, KernelOptions{});
  if (!sort) return r.fail(kSemantic, format_diagnostic(sort.error()));
  if (!is_type(*sort)) {
    return r.fail(kSemantic, "error[VAR]: " + show(type) + " is not a type in " + spec_.name + " at root");
  }
  std::string shown = show(type);
  ctx_.push(name, type);
  defs_.erase(std::remove_if(defs_.begin(), defs_.end(), [&](const SessionDef& d) { return d.name == name; }),
              defs_.end());
  r.line(name + " : " + shown);
  return r;
}

Reply Session::assume(std::string_view decl) {
  return define("assume " + std::string(decl));
}

Reply Session::define(std::string_view line) {
  Reply r;
  ParseEnv e = env(false);
  e.file = "<repl>";
  auto file = parse_defs(line, e);
  if (!file) return r.fail(kUsage, file.error().format());
  return add_entries(*file, "", false);
}

Reply Session::add_definition(const DefEntry& e, const PtsSpec& spec) {
  Reply r;
  if (ctx_.find(e.name)) {
    return r.fail(kSemantic, "error: " + e.name + " is already assumed");
  }
  KernelOptions opts;
  SessionDef d{e.name, e.term, e.type, ctx_.size()};
  if (e.type) {
    auto sort = infer(spec, ctx_, e.type, opts);
    if (!sort) return r.fail(kSemantic, format_diagnostic(sort.error()));
    if (!is_type(*sort)) {
      return r.fail(kSemantic, "error[CHECK]: declared type of " + e.name + " is not a type");
    }
    auto ok = check(spec, ctx_, e.term, e.type, opts);
    if (!ok) return r.fail(kSemantic, format_diagnostic(ok.error()));
  } else {
    auto ty = infer(spec, ctx_, e.term, opts);
    if (ty) {
      d.type = *ty;
    } else if (ty.error().kind != DiagnosticKind::MissingAnnotation) {
      return r.fail(kSemantic, format_diagnostic(ty.error()));
    }
  }
  defs_.erase(std::remove_if(defs_.begin(), defs_.end(), [&](const SessionDef& o) { return o.name == e.name; }),
              defs_.end());
  defs_.push_back(d);
  r.line(d.type ? e.name + " : " + show_type(d.type) : e.name + " (untyped)");
  return r;
}

Reply Session::add_entries(const DefFile& file, const std::string& origin, bool per_entry_specs) {
  Reply r;
  std::vector<std::string> rejected;
  std::size_t accepted = 0;
  const bool summarize = !origin.empty() && !per_entry_specs;
  for (const DefEntry& e : file.entries) {
    Reply one;
    if (e.kind == DefEntry::Kind::Assume) {
      one = add_assumption(e.name, e.type);
      if (one.status != kOk) {
        r.text += one.text;
        r.status = one.status;
        return r;
      }
    } else {
      PtsSpec spec = spec_;
      if (per_entry_specs && e.spec) {
        auto named = spec_by_name(*e.spec);
        if (!named) return r.fail(kUsage, "error: unknown spec '" + *e.spec + "' on line " + std::to_string(e.line));
        spec = *named;
      }
      one = add_definition(e, spec);
    }
    if (one.status == kOk) {
      ++accepted;
      if (!summarize) r.text += one.text;
      continue;
    }
    if (per_entry_specs || origin.empty()) {
      r.text += one.text;
      r.status = one.status;
      return r;
    }
    rejected.push_back(e.name);
    r.status = kSemantic;
  }
  if (summarize) {
    r.line("loaded " + origin + ": " + std::to_string(accepted) + " of " + std::to_string(file.entries.size()) +
           " entries");
    if (!rejected.empty()) {
      std::string list;
      for (const std::string& n : rejected) list += (list.empty() ? "" : ", ") + n;
      r.line("rejected under " + spec_.name + ": " + list);
    }
  }
  return r;
}

Reply Session::load(const std::string& source) {
  Reply r;
  if (source.empty()) return r.fail(kUsage, "error: :load needs a file name or `stdlib`");
  std::string text;
  ParseEnv e = env(false);
  if (source == "stdlib") {
    text = std::string(stdlib_source());
    e.file = "<stdlib>";
  } else {
    bool ok = false;
    text = read_file(source, ok);
    if (!ok) return r.fail(kUsage, "error: cannot read " + source);
    e.file = source;
  }
  auto file = parse_defs(text, e);
  if (!file) return r.fail(kUsage, file.error().format());
  return add_entries(*file, source, false);
}

Reply Session::check_file(const std::string& path) {
  Reply r;
  bool ok = false;
  std::string text = read_file(path, ok);
  if (!ok) return r.fail(kUsage, "error: cannot read " + path);
  ParseEnv e = env(false);
  e.file = path;
  auto file = parse_defs(text, e);
  if (!file) return r.fail(kUsage, file.error().format());
  return add_entries(*file, path, true);
}

Reply Session::set_spec(const std::string& name) {
  Reply r;
  auto next = spec_by_name(name);
  if (!next) return r.fail(kUsage, "error: unknown spec '" + name + "'");
  KernelOptions opts;
  std::vector<std::string> casualties;

  // Keep the longest context prefix that is still well formed.
  std::size_t kept = 0;
  for (; kept < ctx_.size(); ++kept) {
    auto sort = infer(*next, prefix(ctx_, kept), ctx_[kept].type, opts);
    if (!sort || !is_type(*sort)) break;
  }
  for (std::size_t i = kept; i < ctx_.size(); ++i) casualties.push_back(ctx_[i].name);
  Context ctx = prefix(ctx_, kept);

  std::vector<SessionDef> defs;
  for (SessionDef d : defs_) {
    // A definition scoped over dropped assumptions survives if it never uses them.
    if (d.depth > kept) {
      const std::uint32_t drop = static_cast<std::uint32_t>(d.depth - kept);
      auto independent = [&](const Term& t) {
        if (!t) return true;
        auto fv = free_variables(t);
        return fv.empty() || *fv.begin() >= drop;
      };
      if (independent(d.term) && independent(d.type)) {
        d.term = shift(d.term, 0, -static_cast<std::int64_t>(drop));
        if (d.type) d.type = shift(d.type, 0, -static_cast<std::int64_t>(drop));
        d.depth = kept;
      }
    }
    bool keep = d.depth <= kept;
    if (keep && d.type) {
      Context scope = prefix(ctx, d.depth);
      auto sort = infer(*next, scope, d.type, opts);
      keep = sort && is_type(*sort) && check(*next, scope, d.term, d.type, opts);
    }
    if (keep) {
      defs.push_back(d);
    } else {
      casualties.push_back(d.name);
    }
  }
  spec_ = *next;
  settings_.spec = name;
  ctx_ = std::move(ctx);
  defs_ = std::move(defs);
  r.line("spec " + spec_.name);
  if (!casualties.empty()) {
    std::string list;
    for (const std::string& n : casualties) list += (list.empty() ? "" : ", ") + n;
    r.line("casualties: " + list);
  }
  return r;
}

Reply Session::list_defs() const {
  Reply r;
  for (std::size_t i = 0; i < ctx_.size(); ++i) {
    r.line("assume " + ctx_[i].name + " : " + print_term(ctx_[i].type, prefix(ctx_, i).names()));
  }
  for (const SessionDef& d : defs_) {
    std::vector<std::string> names = prefix(ctx_, d.depth).names();
    r.line(d.type ? d.name + " : " + print_term(d.type, names) : d.name + " (untyped)");
  }
  return r;
}

}  // namespace cube::cli
