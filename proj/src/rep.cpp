#include "lawforge/rep.hpp"

#include <charconv>
#include <cmath>

namespace lawforge {

bool RepShape::contains(Kind k) const {
  if (kind == k) return true;
  for (const auto& c : kids) {
    if (c.contains(k)) return true;
  }
  return false;
}

bool operator==(const RepShape& a, const RepShape& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RepShape::Kind::V1:
    case RepShape::Kind::U1:
    case RepShape::Kind::Par1:
      return true;
    case RepShape::Kind::K1:
      return a.payload == b.payload;
    case RepShape::Kind::Rec1:
      return a.head == b.head && a.prefix == b.prefix;
    case RepShape::Kind::Comp1:
      return a.head == b.head && a.prefix == b.prefix && a.kids == b.kids;
    case RepShape::Kind::Sum:
    case RepShape::Kind::Prod:
      return a.kids == b.kids;
  }
  return false;
}

namespace {

std::string head_atom(const std::string& head, const std::vector<TypeExpr>& prefix) {
  if (prefix.empty()) return head;
  std::string out = "(" + head;
  for (const auto& a : prefix) {
    out += ' ';
    out += to_string(a, /*atom=*/true);
  }
  out += ')';
  return out;
}

}  // namespace

std::string to_string(const RepShape& shape) {
  using Kind = RepShape::Kind;
  switch (shape.kind) {
    case Kind::V1: return "V1";
    case Kind::U1: return "U1";
    case Kind::Par1: return "Par1";
    case Kind::K1: return "K1 " + to_string(shape.payload, /*atom=*/true);
    case Kind::Rec1: return "Rec1 " + head_atom(shape.head, shape.prefix);
    case Kind::Comp1:
      return "Comp1 " + head_atom(shape.head, shape.prefix) + " (" +
             to_string(shape.inner()) + ")";
    case Kind::Sum:
    case Kind::Prod: {
      const char* op = shape.kind == Kind::Sum ? " :+: " : " :*: ";
      std::string out = "(";
      const RepShape* cur = &shape;
      while (cur->kind == shape.kind) {
        out += to_string(cur->left());
        out += op;
        cur = &cur->right();
      }
      out += to_string(*cur);
      out += ')';
      return out;
    }
  }
  return "?";
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Value::Kind::Int: return a.i == b.i;
    case Value::Kind::Bool: return a.b == b.b;
    case Value::Kind::Char: return a.c == b.c;
    case Value::Kind::Double:
      if (std::isnan(a.d) && std::isnan(b.d)) return true;
      return a.d == b.d;
    case Value::Kind::Unit: return true;
    case Value::Kind::Con:
      return a.type_name == b.type_name && a.con_name == b.con_name &&
             a.fields == b.fields;
  }
  return false;
}

namespace {

std::string format_double(double d) {
  if (std::isnan(d)) return "NaN";
  if (std::isinf(d)) return d > 0 ? "Inf" : "-Inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string to_string(const Value& v, bool atom) {
  switch (v.kind) {
    case Value::Kind::Int: {
      std::string s = std::to_string(v.i);
      return atom && v.i < 0 ? "(" + s + ")" : s;
    }
    case Value::Kind::Bool: return v.b ? "True" : "False";
    case Value::Kind::Char: return std::string("'") + v.c + "'";
    case Value::Kind::Double: {
      std::string s = format_double(v.d);
      return atom && s[0] == '-' ? "(" + s + ")" : s;
    }
    case Value::Kind::Unit: return "()";
    case Value::Kind::Con: {
      if (v.fields.empty()) return v.con_name;
      std::string out = v.con_name;
      for (const auto& f : v.fields) {
        out += ' ';
        out += to_string(f, /*atom=*/true);
      }
      return atom ? "(" + out + ")" : out;
    }
  }
  return "?";
}

bool operator==(const GValue& a, const GValue& b) {
  return a.kind == b.kind && a.payload == b.payload && a.kids == b.kids;
}

std::string to_string(const GValue& g) {
  using Kind = GValue::Kind;
  switch (g.kind) {
    case Kind::U1: return "U1";
    case Kind::K1: return "K1 " + to_string(g.payload, true);
    case Kind::Par1: return "Par1 " + to_string(g.payload, true);
    case Kind::Rec1: return "Rec1 " + to_string(g.payload, true);
    case Kind::Comp1: return "Comp1 " + to_string(g.payload, true);
    case Kind::L: return "L1 (" + to_string(g.inner()) + ")";
    case Kind::R: return "R1 (" + to_string(g.inner()) + ")";
    case Kind::Prod:
      return "(" + to_string(g.left()) + " :*: " + to_string(g.right()) + ")";
  }
  return "?";
}

namespace {

RepShape fold_prod(std::vector<RepShape> items) {
  if (items.empty()) return RepShape::u1();
  RepShape out = std::move(items.back());
  for (auto it = items.rbegin() + 1; it != items.rend(); ++it) {
    out = RepShape::prod(std::move(*it), std::move(out));
  }
  return out;
}

RepShape fold_sum(std::vector<RepShape> items) {
  if (items.empty()) return RepShape::v1();
  RepShape out = std::move(items.back());
  for (auto it = items.rbegin() + 1; it != items.rend(); ++it) {
    out = RepShape::sum(std::move(*it), std::move(out));
  }
  return out;
}

bool mentions_param(const TypeExpr& e, int index) {
  if (e.is_param()) return e.as_param().index == index;
  if (e.is_named()) {
    for (const auto& a : e.as_named().args) {
      if (mentions_param(a, index)) return true;
    }
  }
  return false;
}

// Rep1 node for one field: Par1 for the parameter itself, Rec1 when it is
// the final argument of an application, Comp1 when the final argument still
// wraps it, K1 otherwise.
RepShape classify_field(const DataDecl& decl, const TypeExpr& field) {
  const int last = decl.param_count - 1;
  if (!mentions_param(field, last)) return RepShape::k1(field);
  if (field.is_param()) return RepShape::par1();
  const auto& n = field.as_named();
  for (std::size_t i = 0; i + 1 < n.args.size(); ++i) {
    if (mentions_param(n.args[i], last)) {
      throw UnsupportedOccurrenceError(
          "the mapped parameter of " + decl.name + " occurs in a non-final argument of '" +
          n.name + "' in field " + to_string(field, true));
    }
  }
  std::vector<TypeExpr> prefix(n.args.begin(), n.args.end() - 1);
  const TypeExpr& final_arg = n.args.back();
  if (final_arg.is_param() && final_arg.as_param().index == last) {
    return RepShape::rec1(n.name, std::move(prefix));
  }
  return RepShape::comp1(n.name, std::move(prefix), classify_field(decl, final_arg));
}

RepShape rep1_payload(const DataDecl& decl, const ConstructorDecl& ctor) {
  std::vector<RepShape> items;
  items.reserve(ctor.fields.size());
  for (const auto& f : ctor.fields) items.push_back(classify_field(decl, f));
  return fold_prod(std::move(items));
}

}  // namespace

RepShape build_rep(const DataDecl& decl, const std::vector<TypeExpr>& ground_args) {
  if (static_cast<int>(ground_args.size()) != decl.param_count) {
    throw RepError("build_rep: " + decl.name + " expects " +
                   std::to_string(decl.param_count) + " ground argument(s)");
  }
  std::vector<RepShape> ctors;
  ctors.reserve(decl.constructors.size());
  for (const auto& ctor : decl.constructors) {
    std::vector<RepShape> fields;
    fields.reserve(ctor.fields.size());
    for (const auto& f : ctor.fields) {
      fields.push_back(RepShape::k1(instantiate(f, ground_args)));
    }
    ctors.push_back(fold_prod(std::move(fields)));
  }
  return fold_sum(std::move(ctors));
}

RepShape build_rep1(const DataDecl& decl) {
  if (decl.param_count < 1) {
    throw ParamCountError("build_rep1: " + decl.name + " has no type parameter");
  }
  std::vector<RepShape> ctors;
  ctors.reserve(decl.constructors.size());
  for (const auto& ctor : decl.constructors) {
    ctors.push_back(rep1_payload(decl, ctor));
  }
  return fold_sum(std::move(ctors));
}

namespace {

RepShape substitute_prefixes(RepShape shape, const std::vector<TypeExpr>& args) {
  using Kind = RepShape::Kind;
  switch (shape.kind) {
    case Kind::K1:
      shape.payload = instantiate(shape.payload, args);
      return shape;
    case Kind::Rec1:
    case Kind::Comp1:
      for (auto& p : shape.prefix) p = instantiate(p, args);
      for (auto& k : shape.kids) k = substitute_prefixes(std::move(k), args);
      return shape;
    case Kind::Sum:
    case Kind::Prod:
      for (auto& k : shape.kids) k = substitute_prefixes(std::move(k), args);
      return shape;
    default:
      return shape;
  }
}

}  // namespace

RepShape build_rep1_at(const DataDecl& decl, const std::vector<TypeExpr>& prefix_args) {
  if (decl.param_count < 1) {
    throw ParamCountError("build_rep1: " + decl.name + " has no type parameter");
  }
  if (static_cast<int>(prefix_args.size()) != decl.param_count - 1) {
    throw RepError("build_rep1_at: " + decl.name + " expects " +
                   std::to_string(decl.param_count - 1) + " prefix argument(s)");
  }
  // The element slot itself never appears in K1 payloads or Rec1/Comp1
  // prefixes, so the placeholder is unreachable.
  std::vector<TypeExpr> args = prefix_args;
  args.push_back(TypeExpr::prim(PrimType::Unit));
  return substitute_prefixes(build_rep1(decl), args);
}

namespace {

struct CtorRef {
  const DataDecl* decl;
  std::size_t index;
};

CtorRef resolve_ctor(const Schema& schema, const Value& v) {
  if (v.kind != Value::Kind::Con) {
    throw RepError("from: expected a constructor value, got " + to_string(v));
  }
  const DataDecl* decl = schema.find(v.type_name);
  if (decl == nullptr) {
    throw RepError("from: unknown type '" + v.type_name + "'");
  }
  for (std::size_t i = 0; i < decl->constructors.size(); ++i) {
    if (decl->constructors[i].name == v.con_name) {
      if (decl->constructors[i].fields.size() != v.fields.size()) {
        throw RepError("from: constructor '" + v.con_name + "' arity mismatch");
      }
      return {decl, i};
    }
  }
  throw RepError("from: unknown constructor '" + v.con_name + "' of '" + v.type_name + "'");
}

GValue wrap_injections(GValue payload, std::size_t index, std::size_t n_ctors) {
  GValue g = std::move(payload);
  if (index + 1 < n_ctors) g = GValue::l1(std::move(g));
  for (std::size_t k = 0; k < index; ++k) g = GValue::r1(std::move(g));
  return g;
}

// Walks the GR spine and returns the constructor index for a declaration
// with n constructors; the payload node is left in *out.
std::size_t unwrap_injections(const GValue& g, std::size_t n_ctors, const GValue** out) {
  if (n_ctors == 0) throw RepError("to: the empty representation V1 has no values");
  const GValue* cur = &g;
  std::size_t depth = 0;
  while (cur->kind == GValue::Kind::R) {
    ++depth;
    cur = &cur->inner();
  }
  std::size_t index;
  if (cur->kind == GValue::Kind::L) {
    index = depth;
    cur = &cur->inner();
    if (index + 1 >= n_ctors) {
      throw RepError("to: sum injection does not match the declaration");
    }
  } else {
    index = depth;
    if (index + 1 != n_ctors) {
      throw RepError("to: sum injection does not match the declaration");
    }
  }
  *out = cur;
  return index;
}

// Splits a right-nested GProd payload into per-field nodes.
std::vector<const GValue*> split_payload(const GValue& payload, std::size_t n_fields) {
  std::vector<const GValue*> out;
  if (n_fields == 0) {
    if (payload.kind != GValue::Kind::U1) {
      throw RepError("to: expected U1 payload for a nullary constructor");
    }
    return out;
  }
  const GValue* cur = &payload;
  for (std::size_t i = 0; i + 1 < n_fields; ++i) {
    if (cur->kind != GValue::Kind::Prod) {
      throw RepError("to: product payload shorter than the constructor");
    }
    out.push_back(&cur->left());
    cur = &cur->right();
  }
  if (cur->kind == GValue::Kind::Prod) {
    throw RepError("to: product payload longer than the constructor");
  }
  out.push_back(cur);
  return out;
}

Value unwrap_k1(const GValue& g) {
  if (g.kind != GValue::Kind::K1) {
    throw RepError("to: expected K1 field, got " + to_string(g));
  }
  return g.payload;
}

}  // namespace

GValue from_value(const Schema& schema, const Value& v) {
  auto [decl, index] = resolve_ctor(schema, v);
  std::vector<GValue> fields;
  fields.reserve(v.fields.size());
  for (const auto& f : v.fields) fields.push_back(GValue::k1(f));
  GValue payload;
  if (fields.empty()) {
    payload = GValue::u1();
  } else {
    payload = std::move(fields.back());
    for (auto it = fields.rbegin() + 1; it != fields.rend(); ++it) {
      payload = GValue::prod(std::move(*it), std::move(payload));
    }
  }
  return wrap_injections(std::move(payload), index, decl->constructors.size());
}

Value to_value(const Schema& schema, const DataDecl& decl, const GValue& g) {
  (void)schema;
  const GValue* payload = nullptr;
  std::size_t index = unwrap_injections(g, decl.constructors.size(), &payload);
  const ConstructorDecl& ctor = decl.constructors[index];
  auto nodes = split_payload(*payload, ctor.fields.size());
  std::vector<Value> fields;
  fields.reserve(nodes.size());
  for (const GValue* n : nodes) fields.push_back(unwrap_k1(*n));
  return Value::con(decl.name, ctor.name, std::move(fields));
}

GValue from1_value(const Schema& schema, const DataDecl& decl, const Value& v) {
  if (decl.param_count < 1) {
    throw ParamCountError("from1: " + decl.name + " has no type parameter");
  }
  auto [vdecl, index] = resolve_ctor(schema, v);
  if (vdecl->name != decl.name) {
    throw RepError("from1: value of type '" + vdecl->name + "' given for '" + decl.name + "'");
  }
  const ConstructorDecl& ctor = decl.constructors[index];
  std::vector<GValue> fields;
  fields.reserve(v.fields.size());
  for (std::size_t i = 0; i < v.fields.size(); ++i) {
    RepShape node = classify_field(decl, ctor.fields[i]);
    switch (node.kind) {
      case RepShape::Kind::Par1: fields.push_back(GValue::par1(v.fields[i])); break;
      case RepShape::Kind::Rec1: fields.push_back(GValue::rec1(v.fields[i])); break;
      case RepShape::Kind::Comp1: fields.push_back(GValue::comp1(v.fields[i])); break;
      default: fields.push_back(GValue::k1(v.fields[i])); break;
    }
  }
  GValue payload;
  if (fields.empty()) {
    payload = GValue::u1();
  } else {
    payload = std::move(fields.back());
    for (auto it = fields.rbegin() + 1; it != fields.rend(); ++it) {
      payload = GValue::prod(std::move(*it), std::move(payload));
    }
  }
  return wrap_injections(std::move(payload), index, decl.constructors.size());
}

Value to1_value(const Schema& schema, const DataDecl& decl, const GValue& g) {
  (void)schema;
  if (decl.param_count < 1) {
    throw ParamCountError("to1: " + decl.name + " has no type parameter");
  }
  const GValue* payload = nullptr;
  std::size_t index = unwrap_injections(g, decl.constructors.size(), &payload);
  const ConstructorDecl& ctor = decl.constructors[index];
  auto nodes = split_payload(*payload, ctor.fields.size());
  std::vector<Value> fields;
  fields.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    RepShape shape_node = classify_field(decl, ctor.fields[i]);
    GValue::Kind want;
    switch (shape_node.kind) {
      case RepShape::Kind::Par1: want = GValue::Kind::Par1; break;
      case RepShape::Kind::Rec1: want = GValue::Kind::Rec1; break;
      case RepShape::Kind::Comp1: want = GValue::Kind::Comp1; break;
      default: want = GValue::Kind::K1; break;
    }
    if (nodes[i]->kind != want) {
      throw RepError("to1: field node does not match the Rep1 shape: " + to_string(*nodes[i]));
    }
    fields.push_back(nodes[i]->payload);
  }
  return Value::con(decl.name, ctor.name, std::move(fields));
}

bool conforms(const GValue& g, const RepShape& shape) {
  using SK = RepShape::Kind;
  using GK = GValue::Kind;
  switch (shape.kind) {
    case SK::V1: return false;
    case SK::U1: return g.kind == GK::U1;
    case SK::K1: return g.kind == GK::K1;
    case SK::Par1: return g.kind == GK::Par1;
    case SK::Rec1:
      return g.kind == GK::Rec1 && g.payload.kind == Value::Kind::Con &&
             g.payload.type_name == shape.head;
    case SK::Comp1:
      return g.kind == GK::Comp1 && g.payload.kind == Value::Kind::Con &&
             g.payload.type_name == shape.head;
    case SK::Sum:
      if (g.kind == GK::L) return conforms(g.inner(), shape.left());
      if (g.kind == GK::R) return conforms(g.inner(), shape.right());
      return false;
    case SK::Prod:
      return g.kind == GK::Prod && conforms(g.left(), shape.left()) &&
             conforms(g.right(), shape.right());
  }
  return false;
}

bool typecheck_value(const Value& v, const TypeExpr& ground, const Schema& schema) {
  if (ground.is_param()) return false;
  if (ground.is_prim()) {
    switch (ground.as_prim()) {
      case PrimType::Int: return v.kind == Value::Kind::Int;
      case PrimType::Bool: return v.kind == Value::Kind::Bool;
      case PrimType::Char: return v.kind == Value::Kind::Char;
      case PrimType::Double: return v.kind == Value::Kind::Double;
      case PrimType::Unit: return v.kind == Value::Kind::Unit;
    }
    return false;
  }
  const auto& n = ground.as_named();
  if (v.kind != Value::Kind::Con || v.type_name != n.name) return false;
  const DataDecl* decl = schema.find(n.name);
  if (decl == nullptr || static_cast<int>(n.args.size()) != decl->param_count) return false;
  for (const auto& ctor : decl->constructors) {
    if (ctor.name != v.con_name) continue;
    if (ctor.fields.size() != v.fields.size()) return false;
    for (std::size_t i = 0; i < ctor.fields.size(); ++i) {
      if (!typecheck_value(v.fields[i], instantiate(ctor.fields[i], n.args), schema)) {
        return false;
      }
    }
    return true;
  }
  return false;
}

}  // namespace lawforge
