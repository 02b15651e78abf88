#include <algorithm>
#include <cctype>
#include <memory>
#include <stdexcept>

#include "cube/surface.hpp"

namespace cube {

std::string ParseError::format() const {
  std::string out = "error[PARSE]: " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  out += " at " + span.file + ":" + std::to_string(span.start.line) + ":" + std::to_string(span.start.column);
  return out;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"Pi",   "Sig",   "forall", "Star", "Prop", "Box",
                                              "Type", "as",    "Unit",   "Void", "Bool", "true",
                                              "false", "if",   "absurd", "def",  "assume", "in"};
  return words;
}

std::vector<std::string> ParsedTerm::names(const ParseEnv& env) const {
  std::vector<std::string> out = free_names;
  out.insert(out.end(), env.scope.begin(), env.scope.end());
  return out;
}

namespace {

const std::set<std::string> kConstantWords = {"Unit", "Void", "Bool", "true", "false", "if", "absurd"};

// ---------------------------------------------------------------- lexer

enum class Tok {
  Ident,
  Number,
  Lambda,
  BigLambda,
  Pi,
  Sigma,
  Forall,
  Star,
  Box,
  Type,
  As,
  Dot,
  Proj,
  Colon,
  Arrow,
  Amp,
  LParen,
  RParen,
  Comma,
  Unit,
  End,
};

std::string tok_name(Tok t) {
  switch (t) {
    case Tok::Ident:
      return "identifier";
    case Tok::Number:
      return "number";
    case Tok::Lambda:
      return "'\\'";
    case Tok::BigLambda:
      return "'/\\'";
    case Tok::Pi:
      return "'Pi'";
    case Tok::Sigma:
      return "'Sig'";
    case Tok::Forall:
      return "'forall'";
    case Tok::Star:
      return "'Star'";
    case Tok::Box:
      return "'Box'";
    case Tok::Type:
      return "'Type'";
    case Tok::As:
      return "'as'";
    case Tok::Dot:
      return "'.'";
    case Tok::Proj:
      return "projection";
    case Tok::Colon:
      return "':'";
    case Tok::Arrow:
      return "'->'";
    case Tok::Amp:
      return "'&'";
    case Tok::LParen:
      return "'('";
    case Tok::RParen:
      return "')'";
    case Tok::Comma:
      return "','";
    case Tok::Unit:
      return "'*'";
    case Tok::End:
      return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos start;
  SourcePos end;
  std::uint64_t number = 0;
};

class Lexer {
 public:
  Lexer(std::string_view src, const ParseEnv& env) : src_(src), env_(env), pos_(env.origin) {}

  Expected<std::vector<Token>, ParseError> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      SourcePos start = pos_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", start, start});
        return out;
      }
      char c = src_[i_];
      auto emit = [&](Tok k, std::size_t bytes, std::size_t columns) {
        std::string text(src_.substr(i_, bytes));
        i_ += bytes;
        pos_.column += static_cast<std::uint32_t>(columns);
        out.push_back({k, std::move(text), start, pos_});
      };
      if (c == '\\') {
        emit(Tok::Lambda, 1, 1);
      } else if (c == '/' && peek(1) == '\\') {
        emit(Tok::BigLambda, 2, 2);
      } else if (c == '-' && peek(1) == '>') {
        emit(Tok::Arrow, 2, 2);
      } else if (c == '&') {
        emit(Tok::Amp, 1, 1);
      } else if (c == '(') {
        emit(Tok::LParen, 1, 1);
      } else if (c == ')') {
        emit(Tok::RParen, 1, 1);
      } else if (c == ',') {
        emit(Tok::Comma, 1, 1);
      } else if (c == ':') {
        emit(Tok::Colon, 1, 1);
      } else if (c == '*') {
        emit(Tok::Unit, 1, 1);
      } else if (c == '.') {
        bool after_atom = !out.empty() && ends_atom(out.back().kind) && out.back().end == start;
        char d = peek(1);
        if (after_atom && (d == '1' || d == '2') && !ident_char_at(i_ + 2)) {
          emit(Tok::Proj, 2, 2);
          out.back().number = static_cast<std::uint64_t>(d - '0');
        } else {
          emit(Tok::Dot, 1, 1);
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i_;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        std::string digits(src_.substr(i_, j - i_));
        if (digits.size() > 9) return error("number too large", start);
        emit(Tok::Number, j - i_, j - i_);
        out.back().number = std::stoull(digits);
      } else if (auto sym = unicode_symbol(); sym.first != Tok::End) {
        emit(sym.first, sym.second, 1);
      } else if (ident_start_at(i_)) {
        std::size_t j = i_;
        std::size_t cols = 0;
        while (j < src_.size() && ident_char_at(j)) {
          j += utf8_len(static_cast<unsigned char>(src_[j]));
          ++cols;
        }
        std::string word(src_.substr(i_, j - i_));
        Tok k = Tok::Ident;
        if (word == "Pi") k = Tok::Pi;
        else if (word == "Sig") k = Tok::Sigma;
        else if (word == "forall") k = Tok::Forall;
        else if (word == "Star" || word == "Prop") k = Tok::Star;
        else if (word == "Box") k = Tok::Box;
        else if (word == "Type") k = Tok::Type;
        else if (word == "as") k = Tok::As;
        emit(k, j - i_, cols);
      } else {
        return error("unexpected character '" + std::string(src_.substr(i_, utf8_len(c))) + "'", start);
      }
    }
  }

 private:
  static bool ends_atom(Tok k) {
    return k == Tok::Ident || k == Tok::Number || k == Tok::RParen || k == Tok::Proj || k == Tok::Unit ||
           k == Tok::Star || k == Tok::Box;
  }

  static std::size_t utf8_len(unsigned char c) {
    if (c < 0x80) return 1;
    if ((c >> 5) == 0x6) return 2;
    if ((c >> 4) == 0xe) return 3;
    if ((c >> 3) == 0x1e) return 4;
    return 1;
  }

  char peek(std::size_t k) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }

  std::pair<Tok, std::size_t> unicode_symbol() const {
    static const std::pair<std::string_view, Tok> table[] = {
        {"\xce\xbb", Tok::Lambda},        // λ
        {"\xce\x9b", Tok::BigLambda},     // Λ
        {"\xce\xa0", Tok::Pi},            // Π
        {"\xce\xa3", Tok::Sigma},         // Σ
        {"\xe2\x88\x80", Tok::Forall},    // ∀
        {"\xe2\x86\x92", Tok::Arrow},     // →
        {"\xe2\x8b\x86", Tok::Star},      // ⋆
        {"\xe2\x96\xa1", Tok::Box},       // □
        {"\xc3\x97", Tok::Amp},           // ×
    };
    for (const auto& [text, kind] : table) {
      if (src_.substr(i_, text.size()) == text) return {kind, text.size()};
    }
    return {Tok::End, 0};
  }

  bool is_symbol_at(std::size_t j) const {
    static const std::string_view symbols[] = {"\xce\xbb", "\xce\x9b", "\xce\xa0", "\xce\xa3", "\xe2\x88\x80",
                                               "\xe2\x86\x92", "\xe2\x8b\x86", "\xe2\x96\xa1", "\xc3\x97"};
    for (std::string_view s : symbols) {
      if (src_.substr(j, s.size()) == s) return true;
    }
    return false;
  }

  bool ident_start_at(std::size_t j) const {
    unsigned char c = static_cast<unsigned char>(src_[j]);
    if (c >= 0x80) return !is_symbol_at(j);
    return std::isalpha(c) || c == '_';
  }

  bool ident_char_at(std::size_t j) const {
    if (j >= src_.size()) return false;
    unsigned char c = static_cast<unsigned char>(src_[j]);
    if (c >= 0x80) return !is_symbol_at(j);
    return std::isalnum(c) || c == '_' || c == '\'';
  }

  void skip_space() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '\n') {
        ++i_;
        ++pos_.line;
        pos_.column = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i_;
        ++pos_.column;
      } else if (c == '-' && peek(1) == '-') {
        while (i_ < src_.size() && src_[i_] != '\n') ++i_;
      } else {
        return;
      }
    }
  }

  Unexpected<ParseError> error(std::string msg, SourcePos at) const {
    return unexpected(ParseError{std::move(msg), {env_.file, at, at}, {}});
  }

  std::string_view src_;
  const ParseEnv& env_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

// ---------------------------------------------------------------- syntax tree

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Ident, Number, Sort, Lam, Pi, Sigma, Arrow, Product, App, Pair, Proj, Unit };
  Kind kind;
  std::string name;
  std::uint64_t number = 0;
  SortId sort = SortId::star();
  std::vector<ExprPtr> kids;  // null entries mark absent annotations
  SourceSpan span;
};

// Failures inside the recursive-descent parser unwind to parse_term.
struct ParseFailure {
  ParseError error;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const ParseEnv& env) : toks_(std::move(toks)), env_(env) {}

  ExprPtr parse_all() {
    ExprPtr e = term(true);
    if (cur().kind != Tok::End) fail("unexpected " + tok_name(cur().kind), {"end of input"});
    return e;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& advance() { return toks_[i_++]; }
  bool at(Tok k) const { return cur().kind == k; }

  [[noreturn]] void fail(std::string msg, std::vector<std::string> expected) const {
    const Token& t = cur();
    throw ParseFailure{ParseError{std::move(msg), {env_.file, t.start, t.end}, std::move(expected)}};
  }

  const Token& expect(Tok k) {
    if (!at(k)) fail("unexpected " + tok_name(cur().kind), {tok_name(k)});
    return advance();
  }

  SourceSpan span_from(SourcePos start) const {
    SourcePos end = i_ > 0 ? toks_[i_ - 1].end : start;
    return {env_.file, start, end};
  }

  static ExprPtr node(Expr::Kind k, std::vector<ExprPtr> kids, SourceSpan span, std::string name = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->kids = std::move(kids);
    e->span = std::move(span);
    e->name = std::move(name);
    return e;
  }

  bool binder_start() const {
    Tok k = cur().kind;
    return k == Tok::Lambda || k == Tok::BigLambda || k == Tok::Pi || k == Tok::Sigma || k == Tok::Forall;
  }

  bool atom_start() const {
    Tok k = cur().kind;
    return k == Tok::Ident || k == Tok::Number || k == Tok::Star || k == Tok::Box || k == Tok::Type ||
           k == Tok::LParen || k == Tok::Unit;
  }

  ExprPtr term(bool allow_as) {
    if (binder_start()) return binder(allow_as);
    SourcePos start = cur().start;
    ExprPtr e = arrow(allow_as);
    if (allow_as && at(Tok::As)) {
      if (e->kind != Expr::Kind::Pair || e->kids[2]) fail("only pair literals can carry an 'as' annotation", {});
      advance();
      ExprPtr ann = term(true);
      e = node(Expr::Kind::Pair, {e->kids[0], e->kids[1], ann}, span_from(start));
    }
    return e;
  }

  ExprPtr arrow(bool allow_as) {
    SourcePos start = cur().start;
    ExprPtr lhs = product();
    if (at(Tok::Arrow)) {
      advance();
      ExprPtr rhs = term(allow_as);
      return node(Expr::Kind::Arrow, {lhs, rhs}, span_from(start));
    }
    return lhs;
  }

  ExprPtr product() {
    SourcePos start = cur().start;
    ExprPtr lhs = app();
    if (at(Tok::Amp)) {
      advance();
      ExprPtr rhs = product();
      return node(Expr::Kind::Product, {lhs, rhs}, span_from(start));
    }
    return lhs;
  }

  ExprPtr app() {
    SourcePos start = cur().start;
    if (!atom_start()) fail("unexpected " + tok_name(cur().kind), {"a term"});
    ExprPtr f = postfix();
    while (true) {
      if (atom_start()) {
        ExprPtr a = postfix();
        f = node(Expr::Kind::App, {f, a}, span_from(start));
      } else if (binder_start()) {
        ExprPtr a = binder(false);
        return node(Expr::Kind::App, {f, a}, span_from(start));
      } else {
        return f;
      }
    }
  }

  ExprPtr postfix() {
    SourcePos start = cur().start;
    ExprPtr e = atom();
    while (at(Tok::Proj)) {
      std::uint64_t which = advance().number;
      auto p = std::make_shared<Expr>();
      p->kind = Expr::Kind::Proj;
      p->number = which;
      p->kids = {e};
      p->span = span_from(start);
      e = p;
    }
    return e;
  }

  ExprPtr atom() {
    SourcePos start = cur().start;
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Ident: {
        advance();
        return node(Expr::Kind::Ident, {}, span_from(start), t.text);
      }
      case Tok::Number: {
        advance();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Number;
        e->number = t.number;
        e->span = span_from(start);
        return e;
      }
      case Tok::Unit:
        advance();
        return node(Expr::Kind::Unit, {}, span_from(start));
      case Tok::Star:
        advance();
        return sort_node(SortId::star(), start);
      case Tok::Box: {
        advance();
        std::uint32_t level = 1;
        if (at(Tok::Number)) {
          std::uint64_t n = advance().number;
          if (n == 0) fail("Box levels start at 1", {});
          level = static_cast<std::uint32_t>(n);
        }
        return sort_node(SortId::box(level), start);
      }
      case Tok::Type: {
        advance();
        if (!at(Tok::Number)) fail("'Type' needs a universe level", {"number"});
        std::uint64_t n = advance().number;
        return sort_node(SortId::universe(static_cast<std::uint32_t>(n)), start);
      }
      case Tok::LParen: {
        advance();
        ExprPtr first = term(true);
        if (at(Tok::Comma)) {
          advance();
          ExprPtr second = term(false);
          ExprPtr ann;
          if (at(Tok::As)) {
            advance();
            ann = term(true);
          }
          expect(Tok::RParen);
          return node(Expr::Kind::Pair, {first, second, ann}, span_from(start));
        }
        expect(Tok::RParen);
        return first;
      }
      default:
        fail("unexpected " + tok_name(t.kind), {"a term"});
    }
  }

  ExprPtr sort_node(SortId s, SourcePos start) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Sort;
    e->sort = std::move(s);
    e->span = span_from(start);
    return e;
  }

  std::string binder_name() {
    if (!at(Tok::Ident)) fail("unexpected " + tok_name(cur().kind), {"binder name"});
    const Token& t = advance();
    if (reserved_words().count(t.text) || env_.constants.count(t.text)) {
      --i_;
      fail("'" + t.text + "' is reserved and cannot be bound", {"binder name"});
    }
    return t.text;
  }

  struct Param {
    std::string name;
    ExprPtr type;
    SourcePos start;
  };

  std::vector<Param> params(bool type_required) {
    std::vector<Param> out;
    if (at(Tok::LParen)) {
      while (at(Tok::LParen)) {
        advance();
        std::vector<Param> group;
        while (at(Tok::Ident)) group.push_back({binder_name(), nullptr, toks_[i_ - 1].start});
        if (group.empty()) fail("unexpected " + tok_name(cur().kind), {"binder name"});
        expect(Tok::Colon);
        ExprPtr ty = term(true);
        expect(Tok::RParen);
        for (Param& p : group) {
          p.type = ty;
          out.push_back(std::move(p));
        }
      }
      return out;
    }
    while (at(Tok::Ident)) out.push_back({binder_name(), nullptr, toks_[i_ - 1].start});
    if (out.empty()) fail("unexpected " + tok_name(cur().kind), {"binder name"});
    if (at(Tok::Colon)) {
      advance();
      ExprPtr ty = term(false);
      for (Param& p : out) p.type = ty;
    } else if (type_required) {
      fail("unexpected " + tok_name(cur().kind), {"':'"});
    }
    return out;
  }

  ExprPtr binder(bool allow_as) {
    SourcePos start = cur().start;
    Tok k = advance().kind;
    std::vector<Param> ps = params(k == Tok::Pi || k == Tok::Sigma);
    expect(Tok::Dot);
    ExprPtr body = term(allow_as);
    SourceSpan span = span_from(start);
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
      ExprPtr ty = it->type;
      if (!ty && (k == Tok::BigLambda || k == Tok::Forall)) ty = sort_node_at(SortId::star(), span);
      Expr::Kind kind = Expr::Kind::Lam;
      if (k == Tok::Pi || k == Tok::Forall) kind = Expr::Kind::Pi;
      if (k == Tok::Sigma) kind = Expr::Kind::Sigma;
      body = node(kind, {ty, body}, span, it->name);
    }
    return body;
  }

  static ExprPtr sort_node_at(SortId s, const SourceSpan& span) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Sort;
    e->sort = std::move(s);
    e->span = span;
    return e;
  }

  std::vector<Token> toks_;
  const ParseEnv& env_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------- elaboration

class Elaborator {
 public:
  explicit Elaborator(const ParseEnv& env) : env_(env) {}

  ParsedTerm run(const ExprPtr& e) {
    std::vector<std::string> bound;
    collect_free(e, bound);
    ParsedTerm out;
    out.free_names = free_;
    out.term = elab(e, out.spans);
    return out;
  }

 private:
  bool is_constant(const std::string& name) const {
    return kConstantWords.count(name) || env_.constants.count(name);
  }

  bool in_scope(const std::string& name) const {
    return std::find(env_.scope.begin(), env_.scope.end(), name) != env_.scope.end();
  }

  void collect_free(const ExprPtr& e, std::vector<std::string>& bound) {
    if (!e) return;
    if (e->kind == Expr::Kind::Ident) {
      const std::string& n = e->name;
      if (std::find(bound.begin(), bound.end(), n) != bound.end()) return;
      if (in_scope(n) || env_.constants.count(n) || env_.definitions.count(n) || kConstantWords.count(n)) return;
      if (!env_.allow_free) {
        throw ParseFailure{ParseError{"unbound identifier '" + n + "'", e->span, {}}};
      }
      if (std::find(free_.begin(), free_.end(), n) == free_.end()) free_.push_back(n);
      return;
    }
    bool binds = e->kind == Expr::Kind::Lam || e->kind == Expr::Kind::Pi || e->kind == Expr::Kind::Sigma;
    for (std::size_t i = 0; i < e->kids.size(); ++i) {
      if (binds && i == 1) {
        bound.push_back(e->name);
        collect_free(e->kids[i], bound);
        bound.pop_back();
      } else {
        collect_free(e->kids[i], bound);
      }
    }
  }

  Term lookup(const ExprPtr& e) {
    const std::string& n = e->name;
    const auto depth = static_cast<std::uint32_t>(bound_.size());
    for (std::size_t i = bound_.size(); i-- > 0;) {
      if (bound_[i] == n) return Term::var(static_cast<std::uint32_t>(bound_.size() - 1 - i), n);
    }
    const auto scope = static_cast<std::uint32_t>(env_.scope.size());
    for (std::size_t i = env_.scope.size(); i-- > 0;) {
      if (env_.scope[i] == n) return Term::var(depth + static_cast<std::uint32_t>(scope - 1 - i), n);
    }
    if (is_constant(n)) return Term::constant(n);
    if (auto it = env_.definitions.find(n); it != env_.definitions.end()) {
      const DefinitionRef& def = it->second;
      if (def.depth > scope) {
        throw ParseFailure{ParseError{"definition '" + n + "' is out of scope here", e->span, {}}};
      }
      return shift(def.term, 0, static_cast<std::int64_t>(scope - def.depth + depth));
    }
    auto f = std::find(free_.begin(), free_.end(), n);
    auto j = static_cast<std::uint32_t>(f - free_.begin());
    return Term::var(depth + scope + static_cast<std::uint32_t>(free_.size()) - 1 - j, n);
  }

  static Term numeral(std::uint64_t n) {
    Term body = Term::var(0, "x");
    for (std::uint64_t i = 0; i < n; ++i) body = Term::app(Term::var(1, "f"), body);
    return Term::lam("f", Term::lam("x", body));
  }

  Term elab(const ExprPtr& e, SpanTable& spans) {
    if (!e) return Term();
    spans[path_] = e->span;
    auto child = [&](std::size_t i) {
      path_.push_back(static_cast<std::uint8_t>(i));
      Term t = elab(e->kids[i], spans);
      path_.pop_back();
      return t;
    };
    auto bound_child = [&](std::size_t i, const std::string& name) {
      bound_.push_back(name);
      Term t = child(i);
      bound_.pop_back();
      return t;
    };
    switch (e->kind) {
      case Expr::Kind::Ident:
        return lookup(e);
      case Expr::Kind::Number:
        return numeral(e->number);
      case Expr::Kind::Unit:
        return Term::constant("*");
      case Expr::Kind::Sort:
        return Term::sort(e->sort);
      case Expr::Kind::Lam: {
        Term ann = child(0);
        return Term::lam(e->name, ann, bound_child(1, e->name));
      }
      case Expr::Kind::Pi: {
        Term dom = child(0);
        return Term::pi(e->name, dom, bound_child(1, e->name));
      }
      case Expr::Kind::Sigma: {
        Term dom = child(0);
        return Term::sigma(e->name, dom, bound_child(1, e->name));
      }
      case Expr::Kind::Arrow: {
        Term dom = child(0);
        return Term::pi("_", dom, bound_child(1, "\x01"));
      }
      case Expr::Kind::Product: {
        Term first = child(0);
        return Term::sigma("_", first, bound_child(1, "\x01"));
      }
      case Expr::Kind::App: {
        Term f = child(0);
        return Term::app(f, child(1));
      }
      case Expr::Kind::Pair: {
        Term a = child(0);
        Term b = child(1);
        return Term::pair(a, b, child(2));
      }
      case Expr::Kind::Proj:
        return Term::proj(static_cast<int>(e->number), child(0));
    }
    return Term();
  }

  const ParseEnv& env_;
  std::vector<std::string> free_;
  std::vector<std::string> bound_;
  Path path_;
};

}  // namespace

Expected<ParsedTerm, ParseError> parse_term(std::string_view input, const ParseEnv& env) {
  auto toks = Lexer(input, env).run();
  if (!toks) return unexpected(std::move(toks).error());
  try {
    Parser parser(std::move(toks).value(), env);
    ExprPtr e = parser.parse_all();
    return Elaborator(env).run(e);
  } catch (const ParseFailure& f) {
    return unexpected(f.error);
  }
}

// ---------------------------------------------------------------- definition files

namespace {

struct Chunk {
  std::string text;
  std::uint32_t line;
};

std::string strip_comment(const std::string& line) {
  auto p = line.find("--");
  return p == std::string::npos ? line : line.substr(0, p);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

// Position (line, column) of byte offset `off` within a chunk that starts at `line`, column 1.
SourcePos position_in(const Chunk& c, std::size_t off) {
  SourcePos p{c.line, 1};
  for (std::size_t i = 0; i < off && i < c.text.size(); ++i) {
    if (c.text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else if ((static_cast<unsigned char>(c.text[i]) & 0xc0) != 0x80) {
      ++p.column;
    }
  }
  return p;
}

}  // namespace

Expected<DefFile, ParseError> parse_defs(std::string_view input, const ParseEnv& base) {
  std::vector<Chunk> chunks;
  {
    std::uint32_t line_no = 0;
    std::size_t start = 0;
    while (start <= input.size()) {
      std::size_t nl = input.find('\n', start);
      std::string raw(input.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
      ++line_no;
      std::string line = strip_comment(raw);
      if (!blank(line)) {
        bool continuation = std::isspace(static_cast<unsigned char>(line[0])) && !chunks.empty();
        if (continuation) {
          chunks.back().text += "\n" + line;
        } else {
          chunks.push_back({line, line_no});
        }
      } else if (!chunks.empty()) {
        chunks.back().text += "\n";
      }
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }

  DefFile out;
  ParseEnv env = base;
  auto fail = [&](const Chunk& c, std::size_t off, std::string msg, std::vector<std::string> expected = {}) {
    SourcePos p = position_in(c, off);
    return unexpected(ParseError{"line " + std::to_string(c.line) + ": " + std::move(msg), {env.file, p, p},
                                 std::move(expected)});
  };

  for (const Chunk& c : chunks) {
    const std::string& s = c.text;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto word = [&] {
      skip_ws();
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ':') ++j;
      std::string w = s.substr(i, j - i);
      i = j;
      return w;
    };
    auto parse_piece = [&](std::size_t from, std::size_t to) -> Expected<ParsedTerm, ParseError> {
      ParseEnv sub = env;
      sub.origin = position_in(c, from);
      return parse_term(std::string_view(s).substr(from, to - from), sub);
    };

    std::string head = word();
    DefEntry entry;
    entry.line = c.line;
    entry.depth = env.scope.size();
    if (head == "assume") {
      entry.kind = DefEntry::Kind::Assume;
      entry.name = word();
      if (entry.name.empty() || reserved_words().count(entry.name)) return fail(c, i, "invalid assumption name");
      skip_ws();
      if (i >= s.size() || s[i] != ':') return fail(c, i, "malformed assumption", {"':'"});
      auto ty = parse_piece(i + 1, s.size());
      if (!ty) return unexpected(std::move(ty).error());
      entry.type = ty->term;
      entry.free_names = ty->free_names;
      env.scope.push_back(entry.name);
      env.definitions.erase(entry.name);
      out.assumptions.push_back(entry.name);
      out.entries.push_back(std::move(entry));
      continue;
    }
    if (head != "def") return fail(c, 0, "expected 'def' or 'assume'", {"'def'", "'assume'"});
    entry.name = word();
    if (entry.name.empty() || reserved_words().count(entry.name)) return fail(c, i, "invalid definition name");
    std::size_t assign = s.find(":=", i);
    if (assign == std::string::npos) return fail(c, s.size(), "missing ':='", {"':='"});
    skip_ws();
    if (s.compare(i, 3, "in ") == 0 || s.compare(i, 3, "in\t") == 0) {
      i += 2;
      std::string spec = word();
      if (spec.empty()) return fail(c, i, "missing specification name after 'in'");
      entry.spec = spec;
      skip_ws();
    }
    if (i < assign && s[i] == ':') {
      auto ty = parse_piece(i + 1, assign);
      if (!ty) return unexpected(std::move(ty).error());
      entry.type = ty->term;
      entry.free_names = ty->free_names;
    } else if (i != assign) {
      return fail(c, i, "unexpected text before ':='", {"':'", "':='"});
    }
    auto body = parse_piece(assign + 2, s.size());
    if (!body) return unexpected(std::move(body).error());
    entry.term = body->term;
    for (const std::string& n : body->free_names) {
      if (std::find(entry.free_names.begin(), entry.free_names.end(), n) == entry.free_names.end()) {
        entry.free_names.push_back(n);
      }
    }
    if (entry.type && !body->free_names.empty() && entry.free_names != body->free_names) {
      // Type and term must agree on the free-name layout; re-parse both against the union.
      ParseEnv sub = env;
      sub.scope.insert(sub.scope.begin(), entry.free_names.begin(), entry.free_names.end());
      sub.origin = position_in(c, assign + 2);
      auto b2 = parse_term(std::string_view(s).substr(assign + 2), sub);
      if (!b2) return unexpected(std::move(b2).error());
      entry.term = b2->term;
      std::size_t colon = s.find(':', i);
      sub.origin = position_in(c, colon + 1);
      auto t2 = parse_term(std::string_view(s).substr(colon + 1, assign - colon - 1), sub);
      if (!t2) return unexpected(std::move(t2).error());
      entry.type = t2->term;
    }
    if (entry.free_names.empty()) {
      env.definitions[entry.name] = DefinitionRef{entry.term, env.scope.size()};
    } else {
      env.definitions.erase(entry.name);
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

}  // namespace cube
