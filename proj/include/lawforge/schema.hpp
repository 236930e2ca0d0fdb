#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lawforge {

// The closed set of primitive field types. Each has a finite check-time
// sub-domain configured in DomainConfig.
enum class PrimType { Int, Bool, Char, Double, Unit };

constexpr std::string_view prim_name(PrimType p) {
  switch (p) {
    case PrimType::Int: return "Int";
    case PrimType::Bool: return "Bool";
    case PrimType::Char: return "Char";
    case PrimType::Double: return "Double";
    case PrimType::Unit: return "Unit";
  }
  return "?";
}

std::optional<PrimType> prim_from_name(std::string_view name);

struct TypeExpr;

// Positional reference to a type parameter of the enclosing declaration.
struct ParamRef {
  int index = 0;
  friend bool operator==(const ParamRef&, const ParamRef&) = default;
};

// Application of a declared type to argument expressions. Arity must match
// the referenced declaration's param_count (enforced by validate).
struct NamedType {
  std::string name;
  std::vector<TypeExpr> args;
  friend bool operator==(const NamedType&, const NamedType&);
};

struct TypeExpr {
  std::variant<PrimType, ParamRef, NamedType> node;

  TypeExpr() : node(PrimType::Unit) {}
  TypeExpr(PrimType p) : node(p) {}
  TypeExpr(ParamRef p) : node(p) {}
  TypeExpr(NamedType n) : node(std::move(n)) {}

  static TypeExpr prim(PrimType p) { return TypeExpr{p}; }
  static TypeExpr param(int index) { return TypeExpr{ParamRef{index}}; }
  static TypeExpr named(std::string name, std::vector<TypeExpr> args = {}) {
    return TypeExpr{NamedType{std::move(name), std::move(args)}};
  }

  bool is_prim() const { return std::holds_alternative<PrimType>(node); }
  bool is_param() const { return std::holds_alternative<ParamRef>(node); }
  bool is_named() const { return std::holds_alternative<NamedType>(node); }

  PrimType as_prim() const { return std::get<PrimType>(node); }
  const ParamRef& as_param() const { return std::get<ParamRef>(node); }
  const NamedType& as_named() const { return std::get<NamedType>(node); }

  // Contains no ParamRef anywhere.
  bool is_ground() const;

  friend bool operator==(const TypeExpr&, const TypeExpr&);
};

// Canonical text, e.g. "Int", "a", "List Int", "Either Int (List Bool)".
// In atom position applied types are parenthesized.
std::string to_string(const TypeExpr& t, bool atom = false);
std::string to_string(const std::vector<TypeExpr>& args);

struct ConstructorDecl {
  std::string name;
  std::vector<TypeExpr> fields;
  friend bool operator==(const ConstructorDecl&, const ConstructorDecl&) = default;
};

struct DataDecl {
  std::string name;
  int param_count = 0;
  std::vector<ConstructorDecl> constructors;  // may be empty: the empty type
  friend bool operator==(const DataDecl&, const DataDecl&) = default;
};

// Name-indexed declaration collection. Declaration order is significant: it
// fixes enumeration and report order. Immutable once built; safe to share.
class Schema {
 public:
  // Identity, Maybe, Either, List, Triple, Nat, B preloaded in that order.
  static Schema with_builtins();
  static Schema empty();

  // Appends. Duplicate names are kept in declaration order so validate can
  // report them; lookup resolves to the first occurrence.
  void add(DataDecl decl);

  const DataDecl* find(std::string_view name) const;
  const std::vector<DataDecl>& decls() const { return decls_; }
  std::size_t builtin_count() const { return builtin_count_; }

 private:
  std::vector<DataDecl> decls_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::size_t builtin_count_ = 0;
};

struct Diagnostic {
  enum class Code {
    UnresolvedName,
    ArityMismatch,
    ParamOutOfRange,
    DuplicateConstructor,
    DuplicateDeclaration,
    ShadowsPrimitive,
  };
  Code code;
  std::string message;
  std::string decl;     // offending declaration
  int ctor_index = -1;  // -1 when the diagnostic is declaration-level
  int field_index = -1;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// One diagnostic per violation, in declaration order, then constructor
// order, then field order. Empty result means the schema is valid.
std::vector<Diagnostic> validate(const Schema& schema);

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Substitutes ground_args[i] for every Param(i). ground_args must be ground
// and cover every parameter index reachable from expr.
TypeExpr instantiate(const TypeExpr& expr, const std::vector<TypeExpr>& ground_args);

}  // namespace lawforge
