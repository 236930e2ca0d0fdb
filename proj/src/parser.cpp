#include "lawforge/parser.hpp"

#include <cctype>
#include <functional>
#include <map>

namespace lawforge {

std::string ParseError::to_string() const {
  std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  if (!expected.empty()) out += " (expected " + expected + ")";
  return out;
}

namespace {

struct Pos {
  int line = 1;
  int column = 1;
};

struct Token {
  enum class Kind { Ident, Equals, Bar, LParen, RParen, Semi, End };
  Kind kind = Kind::End;
  std::string text;
  Pos pos;
};

struct ParseFailure {
  ParseError err;
};

[[noreturn]] void fail(Pos pos, std::string message, std::string expected = "") {
  throw ParseFailure{{pos.line, pos.column, std::move(message), std::move(expected)}};
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  Pos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Pos start = pos;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Token::Kind::Ident, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    switch (c) {
      case '=': out.push_back({Token::Kind::Equals, "=", start}); break;
      case '|': out.push_back({Token::Kind::Bar, "|", start}); break;
      case '(': out.push_back({Token::Kind::LParen, "(", start}); break;
      case ')': out.push_back({Token::Kind::RParen, ")", start}); break;
      case ';': out.push_back({Token::Kind::Semi, ";", start}); break;
      default:
        fail(start, std::string("unexpected character '") + c + "'");
    }
    advance(1);
  }
  out.push_back({Token::Kind::End, "", pos});
  return out;
}

bool is_upper_ident(const Token& t) {
  return t.kind == Token::Kind::Ident && !t.text.empty() &&
         (std::isupper(static_cast<unsigned char>(t.text[0])) || t.text[0] == '_');
}
bool is_lower_ident(const Token& t) {
  return t.kind == Token::Kind::Ident && !t.text.empty() &&
         std::islower(static_cast<unsigned char>(t.text[0]));
}
bool is_keyword_data(const Token& t) {
  return t.kind == Token::Kind::Ident && t.text == "data";
}

// Source positions for every parsed declaration, used to attach validate()
// diagnostics to the text they came from.
struct CtorPos {
  Pos name;
  std::vector<Pos> fields;
};
struct DeclPos {
  Pos name;
  std::vector<CtorPos> ctors;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Schema run() {
    Schema schema = Schema::with_builtins();
    while (!at_end()) {
      if (peek().kind == Token::Kind::Semi) {
        ++i_;
        continue;
      }
      if (!is_keyword_data(peek())) {
        fail(peek().pos, "unexpected token '" + describe(peek()) + "'", "'data'");
      }
      ++i_;
      parse_decl(schema);
    }
    check_validation(schema);
    return schema;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }

  static std::string describe(const Token& t) {
    return t.kind == Token::Kind::End ? "end of input" : t.text;
  }

  void parse_decl(Schema& schema) {
    if (!is_upper_ident(peek()) || is_keyword_data(peek())) {
      fail(peek().pos, "expected type name after 'data'", "upper case name");
    }
    DataDecl decl;
    DeclPos dpos;
    decl.name = peek().text;
    dpos.name = peek().pos;
    if (prim_from_name(decl.name)) {
      fail(peek().pos, "declaration '" + decl.name + "' shadows a primitive type name");
    }
    ++i_;

    std::map<std::string, int> params;
    while (is_lower_ident(peek()) && !is_keyword_data(peek())) {
      if (params.count(peek().text)) {
        fail(peek().pos, "duplicate type parameter '" + peek().text + "'");
      }
      int index = static_cast<int>(params.size());
      params.emplace(peek().text, index);
      ++i_;
    }
    decl.param_count = static_cast<int>(params.size());

    if (peek().kind == Token::Kind::Equals) {
      ++i_;
      parse_ctor(decl, dpos, params);
      while (peek().kind == Token::Kind::Bar) {
        ++i_;
        parse_ctor(decl, dpos, params);
      }
    }
    // No "=": an empty type; the next token must start something new.
    if (peek().kind != Token::Kind::Semi && peek().kind != Token::Kind::End &&
        !is_keyword_data(peek())) {
      fail(peek().pos, "unexpected token '" + describe(peek()) + "' in declaration",
           "'|', ';' or 'data'");
    }
    if (const DataDecl* existing = schema.find(decl.name)) {
      // Restating a declaration verbatim is harmless; overriding one (in
      // particular a built-in, which the oracles key on) is not.
      if (*existing == decl) return;
      fail(dpos.name, "redeclaration of type '" + decl.name + "'");
    }
    positions_.emplace(decl.name, std::move(dpos));
    schema.add(std::move(decl));
  }

  void parse_ctor(DataDecl& decl, DeclPos& dpos, const std::map<std::string, int>& params) {
    if (!is_upper_ident(peek()) || is_keyword_data(peek())) {
      fail(peek().pos, "expected constructor name", "upper case name");
    }
    ConstructorDecl ctor;
    CtorPos cpos;
    ctor.name = peek().text;
    cpos.name = peek().pos;
    ++i_;
    while (true) {
      const Token& t = peek();
      if (t.kind == Token::Kind::Bar || t.kind == Token::Kind::Semi ||
          t.kind == Token::Kind::End || is_keyword_data(t)) {
        break;
      }
      cpos.fields.push_back(t.pos);
      ctor.fields.push_back(parse_atom(params));
    }
    dpos.ctors.push_back(std::move(cpos));
    decl.constructors.push_back(std::move(ctor));
  }

  TypeExpr parse_atom(const std::map<std::string, int>& params) {
    const Token& t = peek();
    if (t.kind == Token::Kind::LParen) {
      ++i_;
      if (is_lower_ident(peek())) {
        fail(peek().pos,
             "type parameter '" + peek().text + "' cannot be applied (parameters have kind *)");
      }
      if (!is_upper_ident(peek()) || is_keyword_data(peek())) {
        fail(peek().pos, "expected type name after '('", "type name");
      }
      if (prim_from_name(peek().text)) {
        fail(peek().pos, "primitive type '" + peek().text + "' takes no arguments");
      }
      std::string name = peek().text;
      ++i_;
      std::vector<TypeExpr> args;
      while (peek().kind != Token::Kind::RParen) {
        if (peek().kind == Token::Kind::End) {
          fail(peek().pos, "unterminated '('", "')'");
        }
        args.push_back(parse_atom(params));
      }
      if (args.empty()) {
        fail(peek().pos, "application needs at least one argument", "type atom");
      }
      ++i_;  // ')'
      return TypeExpr::named(std::move(name), std::move(args));
    }
    if (is_lower_ident(t) && !is_keyword_data(t)) {
      auto it = params.find(t.text);
      if (it == params.end()) {
        fail(t.pos, "unknown type parameter '" + t.text + "'");
      }
      ++i_;
      return TypeExpr::param(it->second);
    }
    if (is_upper_ident(t)) {
      ++i_;
      if (auto p = prim_from_name(t.text)) return TypeExpr::prim(*p);
      return TypeExpr::named(t.text);
    }
    fail(t.pos, "unexpected token '" + describe(t) + "'", "type atom");
  }

  void check_validation(const Schema& schema) {
    auto diags = validate(schema);
    if (diags.empty()) return;
    const Diagnostic& d = diags.front();
    Pos pos{1, 1};
    auto it = positions_.find(d.decl);
    if (it != positions_.end()) {
      pos = it->second.name;
      if (d.ctor_index >= 0 &&
          d.ctor_index < static_cast<int>(it->second.ctors.size())) {
        const CtorPos& cp = it->second.ctors[d.ctor_index];
        pos = cp.name;
        if (d.field_index >= 0 && d.field_index < static_cast<int>(cp.fields.size())) {
          pos = cp.fields[d.field_index];
        }
      }
    }
    fail(pos, d.message);
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
  std::map<std::string, DeclPos> positions_;
};

}  // namespace

std::variant<Schema, ParseError> parse_schema(std::string_view text) {
  try {
    return Parser(text).run();
  } catch (const ParseFailure& f) {
    return f.err;
  }
}

std::variant<TypeExpr, ParseError> parse_ground_type(std::string_view text,
                                                     const Schema& schema) {
  try {
    auto tokens = lex(text);
    std::size_t i = 0;
    // atom := PrimName | Name | "(" appl ")" ; appl := Name atom*
    auto describe = [](const Token& t) {
      return t.kind == Token::Kind::End ? std::string("end of input") : t.text;
    };
    std::function<TypeExpr(bool)> parse = [&](bool top) -> TypeExpr {
      const Token& t = tokens[i];
      if (t.kind == Token::Kind::LParen) {
        ++i;
        TypeExpr inner = parse(true);
        if (tokens[i].kind != Token::Kind::RParen) {
          fail(tokens[i].pos, "unterminated '('", "')'");
        }
        ++i;
        return inner;
      }
      if (!is_upper_ident(t)) {
        fail(t.pos, "unexpected token '" + describe(t) + "'", "ground type");
      }
      ++i;
      TypeExpr head = prim_from_name(t.text) ? TypeExpr::prim(*prim_from_name(t.text))
                                             : TypeExpr::named(t.text);
      if (!top) return head;
      std::vector<TypeExpr> args;
      while (tokens[i].kind != Token::Kind::End && tokens[i].kind != Token::Kind::RParen) {
        args.push_back(parse(false));
      }
      if (args.empty()) return head;
      if (head.is_prim()) {
        fail(t.pos, "primitive type '" + t.text + "' takes no arguments");
      }
      return TypeExpr::named(t.text, std::move(args));
    };
    TypeExpr result = parse(true);
    if (tokens[i].kind != Token::Kind::End) {
      fail(tokens[i].pos, "trailing input after type");
    }
    // Resolve names and arities against the schema.
    std::function<void(const TypeExpr&)> check = [&](const TypeExpr& e) {
      if (!e.is_named()) return;
      const auto& n = e.as_named();
      const DataDecl* d = schema.find(n.name);
      if (d == nullptr) {
        fail(tokens.front().pos, "unresolved type name '" + n.name + "'");
      }
      if (static_cast<int>(n.args.size()) != d->param_count) {
        fail(tokens.front().pos,
             "'" + n.name + "' expects " + std::to_string(d->param_count) +
                 " argument(s), got " + std::to_string(n.args.size()));
      }
      for (const auto& a : n.args) check(a);
    };
    check(result);
    return result;
  } catch (const ParseFailure& f) {
    return f.err;
  }
}

std::string format_decl(const DataDecl& decl) {
  std::string out = "data " + decl.name;
  for (int i = 0; i < decl.param_count; ++i) {
    out += ' ';
    out += to_string(TypeExpr::param(i));
  }
  bool first = true;
  for (const auto& ctor : decl.constructors) {
    out += first ? " = " : " | ";
    first = false;
    out += ctor.name;
    for (const auto& f : ctor.fields) {
      out += ' ';
      out += to_string(f, /*atom=*/true);
    }
  }
  return out;
}

std::string format_schema(const Schema& schema, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < schema.decls().size(); ++i) {
    out += format_decl(schema.decls()[i]);
    out += '\n';
  }
  return out;
}

}  // namespace lawforge
