#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lawforge/schema.hpp"

namespace lawforge {

// A representation-type tree. Builders produce right-nested Sum/Prod spines:
// every left child of a Sum is a non-Sum and every left child of a Prod is a
// non-Prod. Par1/Rec1/Comp1 occur only in shapes built by build_rep1.
struct RepShape {
  enum class Kind { V1, U1, K1, Par1, Rec1, Comp1, Sum, Prod };

  Kind kind = Kind::U1;
  TypeExpr payload;               // K1: the field type
  std::string head;               // Rec1/Comp1: applied type constructor
  std::vector<TypeExpr> prefix;   // Rec1/Comp1: arguments before the element
  std::vector<RepShape> kids;     // Sum/Prod: {left, right}; Comp1: {inner}

  static RepShape node(Kind k) {
    RepShape s;
    s.kind = k;
    return s;
  }
  static RepShape v1() { return node(Kind::V1); }
  static RepShape u1() { return node(Kind::U1); }
  static RepShape par1() { return node(Kind::Par1); }
  static RepShape k1(TypeExpr t) {
    RepShape s = node(Kind::K1);
    s.payload = std::move(t);
    return s;
  }
  static RepShape rec1(std::string head, std::vector<TypeExpr> prefix = {}) {
    RepShape s = node(Kind::Rec1);
    s.head = std::move(head);
    s.prefix = std::move(prefix);
    return s;
  }
  static RepShape comp1(std::string head, std::vector<TypeExpr> prefix, RepShape inner) {
    RepShape s = node(Kind::Comp1);
    s.head = std::move(head);
    s.prefix = std::move(prefix);
    s.kids.push_back(std::move(inner));
    return s;
  }
  static RepShape sum(RepShape l, RepShape r) {
    RepShape s = node(Kind::Sum);
    s.kids.push_back(std::move(l));
    s.kids.push_back(std::move(r));
    return s;
  }
  static RepShape prod(RepShape l, RepShape r) {
    RepShape s = node(Kind::Prod);
    s.kids.push_back(std::move(l));
    s.kids.push_back(std::move(r));
    return s;
  }

  const RepShape& left() const { return kids[0]; }
  const RepShape& right() const { return kids[1]; }
  const RepShape& inner() const { return kids[0]; }

  bool contains(Kind k) const;

  friend bool operator==(const RepShape& a, const RepShape& b);
};

// Canonical textual form: `V1`, `U1`, `K1 <type>`, `Par1`, `Rec1 <name>`,
// `Comp1 <name> (<inner>)`, `(<l> :+: <r>)`, `(<l> :*: <r>)`; right-nested
// chains of the same operator print flat, without redundant parentheses.
std::string to_string(const RepShape& shape);

// A source-level value: a primitive or a saturated constructor application.
struct Value {
  enum class Kind { Int, Bool, Char, Double, Unit, Con };

  Kind kind = Kind::Unit;
  std::int64_t i = 0;
  bool b = false;
  char c = '\0';
  double d = 0.0;
  std::string type_name;      // Con
  std::string con_name;       // Con
  std::vector<Value> fields;  // Con

  static Value of_int(std::int64_t v) {
    Value x;
    x.kind = Kind::Int;
    x.i = v;
    return x;
  }
  static Value of_bool(bool v) {
    Value x;
    x.kind = Kind::Bool;
    x.b = v;
    return x;
  }
  static Value of_char(char v) {
    Value x;
    x.kind = Kind::Char;
    x.c = v;
    return x;
  }
  static Value of_double(double v) {
    Value x;
    x.kind = Kind::Double;
    x.d = v;
    return x;
  }
  static Value unit() { return Value{}; }
  static Value con(std::string type_name, std::string con_name,
                   std::vector<Value> fields = {}) {
    Value x;
    x.kind = Kind::Con;
    x.type_name = std::move(type_name);
    x.con_name = std::move(con_name);
    x.fields = std::move(fields);
    return x;
  }

  // Structural equality. NaN compares equal to NaN so that round-trip and
  // enumeration identities hold; instance-level Double equality (IEEE ==)
  // lives in the registry's primitive bundle instead.
  friend bool operator==(const Value& a, const Value& b);
};

// Constructor-application text: `Cons 1 (Cons 2 Nil)`, `()` for unit,
// `True`/`False`, `'a'`, `NaN` for a double NaN. Negative numbers are
// parenthesized in argument position.
std::string to_string(const Value& v, bool atom = false);

// A representation-level value inhabiting exactly one RepShape.
struct GValue {
  enum class Kind { U1, K1, Par1, Rec1, Comp1, L, R, Prod };

  Kind kind = Kind::U1;
  Value payload;            // K1/Par1/Rec1/Comp1
  std::vector<GValue> kids; // L/R: {inner}; Prod: {left, right}

  static GValue u1() { return {}; }
  static GValue k1(Value v) { return {Kind::K1, std::move(v)}; }
  static GValue par1(Value v) { return {Kind::Par1, std::move(v)}; }
  static GValue rec1(Value v) { return {Kind::Rec1, std::move(v)}; }
  static GValue comp1(Value v) { return {Kind::Comp1, std::move(v)}; }
  static GValue l1(GValue g) { return {Kind::L, {}, {std::move(g)}}; }
  static GValue r1(GValue g) { return {Kind::R, {}, {std::move(g)}}; }
  static GValue prod(GValue l, GValue r) {
    return {Kind::Prod, {}, {std::move(l), std::move(r)}};
  }

  const GValue& inner() const { return kids[0]; }
  const GValue& left() const { return kids[0]; }
  const GValue& right() const { return kids[1]; }

  friend bool operator==(const GValue& a, const GValue& b);
};

std::string to_string(const GValue& g);

struct RepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// build_rep1 on a declaration without parameters.
struct ParamCountError : RepError {
  using RepError::RepError;
};

// The distinguished (last) parameter occurs in a non-final argument
// position, which the shape language cannot classify.
struct UnsupportedOccurrenceError : RepError {
  using RepError::RepError;
};

// Representation of decl fully applied to ground_args. Constructors fold
// into a right-nested Sum in declaration order, fields into a right-nested
// Prod; no fields gives U1, no constructors gives V1.
RepShape build_rep(const DataDecl& decl, const std::vector<TypeExpr>& ground_args);

// Representation of decl as a container over its LAST parameter; earlier
// parameters stay symbolic (K1/prefix positions may carry ParamRef).
RepShape build_rep1(const DataDecl& decl);

// build_rep1 with earlier parameters substituted by prefix_args
// (|prefix_args| = param_count - 1), giving ground K1 payloads and prefixes.
RepShape build_rep1_at(const DataDecl& decl, const std::vector<TypeExpr>& prefix_args);

GValue from_value(const Schema& schema, const Value& v);
Value to_value(const Schema& schema, const DataDecl& decl, const GValue& g);

GValue from1_value(const Schema& schema, const DataDecl& decl, const Value& v);
Value to1_value(const Schema& schema, const DataDecl& decl, const GValue& g);

// Structural shape conformance: GL/GR against Sum, GProd against Prod, and
// so on; nothing inhabits V1. Payloads of Rec1/Comp1 are held unconverted
// and are only checked to be constructor values of the right head.
bool conforms(const GValue& g, const RepShape& shape);

// Deep audit that v inhabits the ground type: constructor arities match and
// every field inhabits its instantiated field type.
bool typecheck_value(const Value& v, const TypeExpr& ground, const Schema& schema);

}  // namespace lawforge
