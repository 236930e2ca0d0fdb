#include "lawforge/schema.hpp"

#include <algorithm>
#include <set>

namespace lawforge {

std::optional<PrimType> prim_from_name(std::string_view name) {
  if (name == "Int") return PrimType::Int;
  if (name == "Bool") return PrimType::Bool;
  if (name == "Char") return PrimType::Char;
  if (name == "Double") return PrimType::Double;
  if (name == "Unit") return PrimType::Unit;
  return std::nullopt;
}

bool operator==(const NamedType& a, const NamedType& b) {
  return a.name == b.name && a.args == b.args;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) { return a.node == b.node; }

bool TypeExpr::is_ground() const {
  if (is_param()) return false;
  if (is_prim()) return true;
  const auto& n = as_named();
  return std::all_of(n.args.begin(), n.args.end(),
                     [](const TypeExpr& t) { return t.is_ground(); });
}

namespace {

std::string param_display_name(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "p" + std::to_string(index);
}

}  // namespace

std::string to_string(const TypeExpr& t, bool atom) {
  if (t.is_prim()) return std::string(prim_name(t.as_prim()));
  if (t.is_param()) return param_display_name(t.as_param().index);
  const auto& n = t.as_named();
  if (n.args.empty()) return n.name;
  std::string out = n.name;
  for (const auto& a : n.args) {
    out += ' ';
    out += to_string(a, /*atom=*/true);
  }
  if (atom) return "(" + out + ")";
  return out;
}

std::string to_string(const std::vector<TypeExpr>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    out += to_string(a, /*atom=*/true);
  }
  return out;
}

Schema Schema::empty() { return Schema{}; }

Schema Schema::with_builtins() {
  Schema s;
  auto p0 = TypeExpr::param(0);
  auto p1 = TypeExpr::param(1);
  auto p2 = TypeExpr::param(2);

  s.add({"Identity", 1, {{"Identity", {p0}}}});
  s.add({"Maybe", 1, {{"Nothing", {}}, {"Just", {p0}}}});
  s.add({"Either", 2, {{"L", {p0}}, {"R", {p1}}}});
  s.add({"List", 1, {{"Nil", {}}, {"Cons", {p0, TypeExpr::named("List", {p0})}}}});
  s.add({"Triple", 3, {{"MkTriple", {p0, p1, p2}}}});
  s.add({"Nat", 0, {{"Zero", {}}, {"Suc", {TypeExpr::named("Nat")}}}});
  s.add({"B", 0, {{"B1", {TypeExpr::prim(PrimType::Int)}}, {"B2", {TypeExpr::prim(PrimType::Int)}}}});
  s.builtin_count_ = s.decls_.size();
  return s;
}

void Schema::add(DataDecl decl) {
  index_.try_emplace(decl.name, decls_.size());
  decls_.push_back(std::move(decl));
}

const DataDecl* Schema::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return nullptr;
  return &decls_[it->second];
}

namespace {

void check_expr(const Schema& schema, const DataDecl& decl, int ctor_index,
                int field_index, const TypeExpr& expr, std::vector<Diagnostic>& out) {
  if (expr.is_prim()) return;
  if (expr.is_param()) {
    int i = expr.as_param().index;
    if (i < 0 || i >= decl.param_count) {
      out.push_back({Diagnostic::Code::ParamOutOfRange,
                     "parameter index " + std::to_string(i) + " out of range in " +
                         decl.name + " (param count " + std::to_string(decl.param_count) + ")",
                     decl.name, ctor_index, field_index});
    }
    return;
  }
  const auto& n = expr.as_named();
  const DataDecl* target = schema.find(n.name);
  if (target == nullptr) {
    out.push_back({Diagnostic::Code::UnresolvedName,
                   "unresolved type name '" + n.name + "'", decl.name, ctor_index,
                   field_index});
  } else if (static_cast<int>(n.args.size()) != target->param_count) {
    out.push_back({Diagnostic::Code::ArityMismatch,
                   "'" + n.name + "' expects " + std::to_string(target->param_count) +
                       " argument(s), got " + std::to_string(n.args.size()),
                   decl.name, ctor_index, field_index});
  }
  for (const auto& a : n.args) check_expr(schema, decl, ctor_index, field_index, a, out);
}

}  // namespace

std::vector<Diagnostic> validate(const Schema& schema) {
  std::vector<Diagnostic> out;
  std::set<std::string> seen;
  for (const auto& decl : schema.decls()) {
    if (!seen.insert(decl.name).second) {
      out.push_back({Diagnostic::Code::DuplicateDeclaration,
                     "duplicate declaration '" + decl.name + "'", decl.name});
    }
    if (prim_from_name(decl.name)) {
      out.push_back({Diagnostic::Code::ShadowsPrimitive,
                     "declaration '" + decl.name + "' shadows a primitive type",
                     decl.name});
    }
    std::set<std::string> ctors;
    for (std::size_t ci = 0; ci < decl.constructors.size(); ++ci) {
      const auto& ctor = decl.constructors[ci];
      if (!ctors.insert(ctor.name).second) {
        out.push_back({Diagnostic::Code::DuplicateConstructor,
                       "duplicate constructor '" + ctor.name + "' in " + decl.name,
                       decl.name, static_cast<int>(ci)});
      }
      for (std::size_t fi = 0; fi < ctor.fields.size(); ++fi) {
        check_expr(schema, decl, static_cast<int>(ci), static_cast<int>(fi),
                   ctor.fields[fi], out);
      }
    }
  }
  return out;
}

TypeExpr instantiate(const TypeExpr& expr, const std::vector<TypeExpr>& ground_args) {
  if (expr.is_prim()) return expr;
  if (expr.is_param()) {
    int i = expr.as_param().index;
    if (i < 0 || static_cast<std::size_t>(i) >= ground_args.size()) {
      throw SchemaError("instantiate: parameter index " + std::to_string(i) +
                        " has no ground argument");
    }
    return ground_args[i];
  }
  const auto& n = expr.as_named();
  std::vector<TypeExpr> args;
  args.reserve(n.args.size());
  for (const auto& a : n.args) args.push_back(instantiate(a, ground_args));
  return TypeExpr::named(n.name, std::move(args));
}

}  // namespace lawforge
