#include <doctest.h>

#include <random>

#include "lawforge/parser.hpp"

using namespace lawforge;

namespace {

Schema parse_ok(std::string_view text) {
  auto r = parse_schema(text);
  auto* e = std::get_if<ParseError>(&r);
  if (e != nullptr) FAIL("parse failed: ", e->to_string());
  return std::get<Schema>(std::move(r));
}

ParseError parse_err(std::string_view text) {
  auto r = parse_schema(text);
  REQUIRE(std::holds_alternative<ParseError>(r));
  return std::get<ParseError>(r);
}

}  // namespace

TEST_CASE("two-constructor declaration") {
  Schema s = parse_ok("data B = B1 Int | B2 Int");
  const DataDecl* b = s.find("B");
  REQUIRE(b != nullptr);
  CHECK(b->param_count == 0);
  REQUIRE(b->constructors.size() == 2);
  CHECK(b->constructors[0] == ConstructorDecl{"B1", {TypeExpr::prim(PrimType::Int)}});
  CHECK(b->constructors[1] == ConstructorDecl{"B2", {TypeExpr::prim(PrimType::Int)}});
}

TEST_CASE("recursive declaration") {
  Schema s = parse_ok("data Nat = Zero | Suc Nat");
  const DataDecl* nat = s.find("Nat");
  REQUIRE(nat != nullptr);
  CHECK(*nat == DataDecl{"Nat", 0, {{"Zero", {}}, {"Suc", {TypeExpr::named("Nat")}}}});
}

TEST_CASE("parameterized declaration with nested applications") {
  Schema s = parse_ok("data T a = MkT Int a (Maybe a) (List (List a))");
  const DataDecl* t = s.find("T");
  REQUIRE(t != nullptr);
  auto p0 = TypeExpr::param(0);
  CHECK(*t == DataDecl{"T", 1,
                       {{"MkT",
                         {TypeExpr::prim(PrimType::Int), p0, TypeExpr::named("Maybe", {p0}),
                          TypeExpr::named("List", {TypeExpr::named("List", {p0})})}}}});
}

TEST_CASE("unresolved reference is a positioned error naming the type") {
  ParseError e = parse_err("data Z = MkZ (Foo Int)");
  CHECK(e.message.find("Foo") != std::string::npos);
  CHECK(e.line == 1);
  CHECK(e.column == 14);  // the field starts at the '('
}

TEST_CASE("parsed schema includes the built-ins") {
  Schema s = parse_ok("data Pair a b = MkPair a b");
  CHECK(s.find("List") != nullptr);
  CHECK(s.find("Pair") != nullptr);
  CHECK(s.decls().size() == s.builtin_count() + 1);
}

TEST_CASE("empty input, comments and separators") {
  Schema s = parse_ok("");
  CHECK(s.decls().size() == s.builtin_count());
  s = parse_ok("-- nothing here\n\n  -- still nothing\n");
  CHECK(s.decls().size() == s.builtin_count());
  s = parse_ok("data X = MkX Int; data Y = MkY Bool -- trailing\ndata Z = MkZ X Y");
  CHECK(s.find("X") != nullptr);
  CHECK(s.find("Y") != nullptr);
  CHECK(s.find("Z") != nullptr);
}

TEST_CASE("declarations may span lines") {
  Schema s = parse_ok("data Shape a =\n    Dot\n  | Line a\n  | Square a\ndata Use = MkUse (Shape Int)");
  REQUIRE(s.find("Shape") != nullptr);
  CHECK(s.find("Shape")->constructors.size() == 3);
}

TEST_CASE("empty types parse to zero constructors") {
  Schema s = parse_ok("data Hollow");
  REQUIRE(s.find("Hollow") != nullptr);
  CHECK(s.find("Hollow")->constructors.empty());
  s = parse_ok("data Hollow2 a; data UseIt = MkUseIt Int");
  CHECK(s.find("Hollow2")->param_count == 1);
}

TEST_CASE("identical restatement of a built-in is tolerated, overrides are not") {
  Schema s = parse_ok("data List a = Nil | Cons a (List a)");
  CHECK(s.decls().size() == s.builtin_count());
  ParseError e = parse_err("data List a = Nil2 | Cons2 a (List a)");
  CHECK(e.message.find("redeclaration") != std::string::npos);
  e = parse_err("data Q = MkQ Int\ndata Q = Other");
  CHECK(e.line == 2);
}

TEST_CASE("primitive names cannot be declared or applied") {
  ParseError e = parse_err("data Int = MkInt");
  CHECK(e.message.find("primitive") != std::string::npos);
  e = parse_err("data V = MkV (Int Bool)");
  CHECK(e.message.find("takes no arguments") != std::string::npos);
}

TEST_CASE("parameter errors are positioned") {
  ParseError e = parse_err("data F a = MkF b");
  CHECK(e.message.find("unknown type parameter 'b'") != std::string::npos);
  CHECK(e.column == 16);
  e = parse_err("data G a a = MkG a");
  CHECK(e.message.find("duplicate type parameter") != std::string::npos);
  e = parse_err("data H f = MkH (f Int)");
  CHECK(e.message.find("kind *") != std::string::npos);
}

TEST_CASE("arity errors surface as parse errors with the field position") {
  ParseError e = parse_err("data Y = MkY (List Int Int)");
  CHECK(e.message.find("List") != std::string::npos);
  CHECK(e.line == 1);
  CHECK(e.column == 14);
}

TEST_CASE("grammar errors") {
  CHECK(parse_err("поток").message.find("unexpected character") != std::string::npos);
  CHECK(parse_err("frob Int").expected == "'data'");
  CHECK(parse_err("data").message.find("expected type name") != std::string::npos);
  CHECK(parse_err("data X = | A").message.find("constructor name") != std::string::npos);
  CHECK(parse_err("data X = A (List").expected == "')'");
  CHECK(parse_err("data X = A ()").message.find("expected type name") != std::string::npos);
  CHECK(parse_err("data X = A (Nat)").message.find("at least one argument") != std::string::npos);
  CHECK(parse_err("data X = A = B").message.find("unexpected token") != std::string::npos);
}

TEST_CASE("pretty printing declarations") {
  Schema s = parse_ok("data T a = MkT Int a (Maybe a) (List (List a))");
  CHECK(format_decl(*s.find("T")) == "data T a = MkT Int a (Maybe a) (List (List a))");
  CHECK(format_decl(*s.find("Nat")) == "data Nat = Zero | Suc Nat");
  CHECK(format_decl(*s.find("Either")) == "data Either a b = L a | R b");
  CHECK(format_decl(DataDecl{"Hollow", 2, {}}) == "data Hollow a b");
}

TEST_CASE("round-trip: pretty-printed schemas reparse structurally identical") {
  const char* sources[] = {
      "data T a = MkT Int a (Maybe a) (List (List a))",
      "data Rose a = Rose a (List (Rose a))",
      "data Pair a b = MkPair a b; data PairUse = MkPairUse (Pair Int Bool)",
      "data Hollow\ndata Wrap = MkWrap (Maybe (Either Int Char)) Unit Double",
      "data Mut1 = M1 Mut2 | Stop; data Mut2 = M2 Mut1",
  };
  for (const char* src : sources) {
    CAPTURE(src);
    Schema first = parse_ok(src);
    Schema second = parse_ok(format_schema(first, first.builtin_count()));
    CHECK(first.decls() == second.decls());
  }
}

TEST_CASE("round-trip holds for randomly generated declarations") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 50; ++round) {
    Schema gen = Schema::with_builtins();
    int n_decls = 1 + static_cast<int>(rng() % 3);
    for (int d = 0; d < n_decls; ++d) {
      DataDecl decl;
      decl.name = "Gen" + std::to_string(round) + "_" + std::to_string(d);
      decl.param_count = static_cast<int>(rng() % 3);
      int n_ctors = static_cast<int>(rng() % 3);
      for (int c = 0; c < n_ctors; ++c) {
        ConstructorDecl ctor;
        ctor.name = "C" + std::to_string(d) + "_" + std::to_string(c);
        int n_fields = static_cast<int>(rng() % 3);
        for (int f = 0; f < n_fields; ++f) {
          switch (rng() % 4) {
            case 0: ctor.fields.push_back(TypeExpr::prim(PrimType::Int)); break;
            case 1: ctor.fields.push_back(TypeExpr::named("Nat")); break;
            case 2:
              ctor.fields.push_back(
                  TypeExpr::named("List", {TypeExpr::prim(PrimType::Bool)}));
              break;
            default:
              if (decl.param_count > 0) {
                ctor.fields.push_back(
                    TypeExpr::param(static_cast<int>(rng() % decl.param_count)));
              } else {
                ctor.fields.push_back(TypeExpr::prim(PrimType::Unit));
              }
          }
        }
        decl.constructors.push_back(std::move(ctor));
      }
      gen.add(std::move(decl));
    }
    REQUIRE(validate(gen).empty());
    Schema reparsed = parse_ok(format_schema(gen, gen.builtin_count()));
    CHECK(gen.decls() == reparsed.decls());
  }
}

TEST_CASE("parsing is total on fuzzed input") {
  std::mt19937_64 rng(99);
  const std::string alphabet = "dataNILCons abc()|=;-\n\t_0189'Z";
  for (int i = 0; i < 300; ++i) {
    std::string input;
    std::size_t len = rng() % 60;
    for (std::size_t j = 0; j < len; ++j) input += alphabet[rng() % alphabet.size()];
    auto r = parse_schema(input);  // must not crash
    if (auto* e = std::get_if<ParseError>(&r)) {
      CHECK(e->line >= 1);
      CHECK(e->column >= 1);
    }
  }
  // Mutations of a valid source.
  const std::string base = "data Rose a = Rose a (List (Rose a))";
  for (int i = 0; i < 300; ++i) {
    std::string input = base;
    std::size_t pos = rng() % input.size();
    switch (rng() % 3) {
      case 0: input[pos] = alphabet[rng() % alphabet.size()]; break;
      case 1: input.erase(pos, 1); break;
      default: input.insert(pos, 1, alphabet[rng() % alphabet.size()]);
    }
    auto r = parse_schema(input);
    if (auto* e = std::get_if<ParseError>(&r)) {
      CHECK(e->line >= 1);
      CHECK(e->column >= 1);
    }
  }
}

TEST_CASE("parse_ground_type") {
  Schema s = Schema::with_builtins();
  auto ok = [&](std::string_view text) {
    auto r = parse_ground_type(text, s);
    REQUIRE(std::holds_alternative<TypeExpr>(r));
    return std::get<TypeExpr>(r);
  };
  CHECK(ok("Int") == TypeExpr::prim(PrimType::Int));
  CHECK(ok("List Int") == TypeExpr::named("List", {TypeExpr::prim(PrimType::Int)}));
  CHECK(ok("Either (List Int) Bool") ==
        TypeExpr::named("Either", {TypeExpr::named("List", {TypeExpr::prim(PrimType::Int)}),
                                   TypeExpr::prim(PrimType::Bool)}));
  CHECK(std::holds_alternative<ParseError>(parse_ground_type("List", s)));
  CHECK(std::holds_alternative<ParseError>(parse_ground_type("Wibble", s)));
  CHECK(std::holds_alternative<ParseError>(parse_ground_type("Int Int", s)));
  CHECK(std::holds_alternative<ParseError>(parse_ground_type("", s)));
}
