#include "lawforge/derive.hpp"

#include <map>
#include <set>

namespace lawforge {

std::optional<LawId> law_from_name(std::string_view name) {
  static constexpr LawId all[] = {
      LawId::EqRefl,    LawId::EqSym,     LawId::EqTrans,  LawId::OrdRefl,
      LawId::OrdTotal,  LawId::OrdAnti,   LawId::OrdTrans, LawId::SgAssoc,
      LawId::MonLIdent, LawId::MonRIdent, LawId::FunId,    LawId::FunCompose,
      LawId::IsoToFrom, LawId::IsoFromTo, LawId::FromInj,  LawId::OracleEquiv,
  };
  for (LawId law : all) {
    if (law_name(law) == name) return law;
  }
  return std::nullopt;
}

Value FnRef::apply(const Value& v) const {
  for (const auto& [in, out] : table) {
    if (in == v) return out;
  }
  throw DeriveError("function '" + name + "' applied outside its domain: " + to_string(v));
}

FnRef compose_fn(const FnRef& f, const FnRef& g) {
  if (f.domain != g.codomain) {
    throw DeriveError("cannot compose '" + f.name + "' after '" + g.name + "'");
  }
  FnRef out;
  out.name = f.name + "." + g.name;
  out.domain = g.domain;
  out.codomain = f.codomain;
  out.table.reserve(g.table.size());
  for (const auto& [in, mid] : g.table) {
    out.table.emplace_back(in, f.apply(mid));
  }
  return out;
}

FnRef identity_fn(PrimType p, std::vector<Value> domain) {
  FnRef out;
  out.name = "id";
  out.domain = p;
  out.codomain = p;
  out.table.reserve(domain.size());
  for (auto& v : domain) out.table.emplace_back(v, v);
  return out;
}

Value InstanceBundle::fmap(const FnRef& f, const Value& v) const {
  if (!fmap_with) {
    throw DeriveError("bundle for " + display_type() + " has no fmap");
  }
  return fmap_with([&f](const Value& x) { return f.apply(x); }, v);
}

TypeExpr InstanceBundle::ground_type() const {
  if (auto p = prim_from_name(type_name); p && ground_args.empty()) {
    return TypeExpr::prim(*p);
  }
  return TypeExpr::named(type_name, ground_args);
}

TypeExpr InstanceBundle::applied_to(const TypeExpr& elem) const {
  std::vector<TypeExpr> args = ground_args;
  args.push_back(elem);
  return TypeExpr::named(type_name, std::move(args));
}

std::string InstanceBundle::key() const { return instance_key(type_name, ground_args); }

std::string InstanceBundle::display_type() const { return key(); }

std::string instance_key(std::string_view type_name, const std::vector<TypeExpr>& args) {
  std::string out(type_name);
  for (const auto& a : args) {
    out += ' ';
    out += to_string(a, /*atom=*/true);
  }
  return out;
}

struct Registry::State {
  std::map<std::pair<Concept, std::string>, std::shared_ptr<const InstanceBundle>> bundles;
};

Registry::Registry() : state_(std::make_shared<State>()) {}

const InstanceBundle* Registry::find(Concept c, const std::string& key) const {
  auto it = state_->bundles.find({c, key});
  return it == state_->bundles.end() ? nullptr : it->second.get();
}

std::shared_ptr<const InstanceBundle> Registry::get(Concept c, const std::string& key) const {
  auto it = state_->bundles.find({c, key});
  return it == state_->bundles.end() ? nullptr : it->second;
}

const InstanceBundle& Registry::require(Concept c, const std::string& key) const {
  const InstanceBundle* b = find(c, key);
  if (b == nullptr) {
    throw MissingInstanceError(std::string("no ") + std::string(concept_name(c)) +
                               " instance registered for " + key);
  }
  return *b;
}

void Registry::add(std::shared_ptr<const InstanceBundle> bundle) {
  auto key = std::make_pair(bundle->concept_, bundle->key());
  if (!state_->bundles.emplace(std::move(key), std::move(bundle)).second) {
    throw DeriveError("duplicate instance registration");
  }
}

void Registry::remove(Concept c, const std::string& key) {
  state_->bundles.erase({c, key});
}

namespace {

std::shared_ptr<InstanceBundle> make_prim_bundle(Concept c, PrimType p) {
  auto b = std::make_shared<InstanceBundle>();
  b->concept_ = c;
  b->type_name = std::string(prim_name(p));
  b->provenance = InstanceBundle::Provenance::BuiltinPrim;
  return b;
}

void add_prim_eq_ord(Registry& reg, PrimType p,
                     std::function<bool(const Value&, const Value&)> eq,
                     std::function<bool(const Value&, const Value&)> leq) {
  auto e = make_prim_bundle(Concept::Eq, p);
  e->eq = eq;
  reg.add(e);
  auto o = make_prim_bundle(Concept::Ord, p);
  o->eq = std::move(eq);
  o->leq = std::move(leq);
  reg.add(o);
}

}  // namespace

Registry Registry::with_builtins() {
  Registry reg;
  add_prim_eq_ord(reg, PrimType::Int,
                  [](const Value& a, const Value& b) { return a.i == b.i; },
                  [](const Value& a, const Value& b) { return a.i <= b.i; });
  add_prim_eq_ord(reg, PrimType::Bool,
                  [](const Value& a, const Value& b) { return a.b == b.b; },
                  [](const Value& a, const Value& b) { return !a.b || b.b; });
  add_prim_eq_ord(reg, PrimType::Char,
                  [](const Value& a, const Value& b) { return a.c == b.c; },
                  [](const Value& a, const Value& b) { return a.c <= b.c; });
  // IEEE comparisons on purpose: NaN makes these instances law-breaking,
  // which the checker is expected to expose.
  add_prim_eq_ord(reg, PrimType::Double,
                  [](const Value& a, const Value& b) { return a.d == b.d; },
                  [](const Value& a, const Value& b) { return a.d <= b.d; });
  add_prim_eq_ord(reg, PrimType::Unit,
                  [](const Value&, const Value&) { return true; },
                  [](const Value&, const Value&) { return true; });

  auto int_add = [](const Value& a, const Value& b) { return Value::of_int(a.i + b.i); };
  auto sg_int = make_prim_bundle(Concept::Semigroup, PrimType::Int);
  sg_int->combine = int_add;
  reg.add(sg_int);
  auto mon_int = make_prim_bundle(Concept::Monoid, PrimType::Int);
  mon_int->combine = int_add;
  mon_int->empty = []() { return Value::of_int(0); };
  reg.add(mon_int);

  auto unit_comb = [](const Value&, const Value&) { return Value::unit(); };
  auto sg_unit = make_prim_bundle(Concept::Semigroup, PrimType::Unit);
  sg_unit->combine = unit_comb;
  reg.add(sg_unit);
  auto mon_unit = make_prim_bundle(Concept::Monoid, PrimType::Unit);
  mon_unit->combine = unit_comb;
  mon_unit->empty = []() { return Value::unit(); };
  reg.add(mon_unit);
  return reg;
}

namespace {

std::string key_of(const TypeExpr& t) { return to_string(t); }

[[noreturn]] void bad_shape(const char* op, const RepShape& shape) {
  throw RepError(std::string(op) + ": unexpected shape node " + to_string(shape));
}

}  // namespace

bool g_eq(const RepShape& shape, const GValue& a, const GValue& b, const Registry& reg) {
  using SK = RepShape::Kind;
  using GK = GValue::Kind;
  switch (shape.kind) {
    case SK::U1:
      return true;
    case SK::K1:
      return reg.require(Concept::Eq, key_of(shape.payload)).eq(a.payload, b.payload);
    case SK::Prod:
      return g_eq(shape.left(), a.left(), b.left(), reg) &&
             g_eq(shape.right(), a.right(), b.right(), reg);
    case SK::Sum:
      if (a.kind != b.kind) return false;
      if (a.kind == GK::L) return g_eq(shape.left(), a.inner(), b.inner(), reg);
      return g_eq(shape.right(), a.inner(), b.inner(), reg);
    default:
      bad_shape("g_eq", shape);
  }
}

bool g_leq(const RepShape& shape, const GValue& a, const GValue& b, const Registry& reg) {
  using SK = RepShape::Kind;
  using GK = GValue::Kind;
  switch (shape.kind) {
    case SK::U1:
      return true;
    case SK::K1:
      return reg.require(Concept::Ord, key_of(shape.payload)).leq(a.payload, b.payload);
    case SK::Prod:
      // Lexicographic: fall through to the right only on equal left parts.
      if (g_eq(shape.left(), a.left(), b.left(), reg)) {
        return g_leq(shape.right(), a.right(), b.right(), reg);
      }
      return g_leq(shape.left(), a.left(), b.left(), reg);
    case SK::Sum:
      if (a.kind == GK::L && b.kind == GK::L) return g_leq(shape.left(), a.inner(), b.inner(), reg);
      if (a.kind == GK::L && b.kind == GK::R) return true;
      if (a.kind == GK::R && b.kind == GK::L) return false;
      return g_leq(shape.right(), a.inner(), b.inner(), reg);
    default:
      bad_shape("g_leq", shape);
  }
}

std::optional<GValue> g_combine(const RepShape& shape, const GValue& a, const GValue& b,
                                const Registry& reg) {
  using SK = RepShape::Kind;
  switch (shape.kind) {
    case SK::U1:
      return GValue::u1();
    case SK::K1:
      return GValue::k1(
          reg.require(Concept::Semigroup, key_of(shape.payload)).combine(a.payload, b.payload));
    case SK::Prod: {
      auto l = g_combine(shape.left(), a.left(), b.left(), reg);
      auto r = g_combine(shape.right(), a.right(), b.right(), reg);
      if (!l || !r) return std::nullopt;
      return GValue::prod(std::move(*l), std::move(*r));
    }
    case SK::Sum:
    case SK::V1:
      return std::nullopt;
    default:
      bad_shape("g_combine", shape);
  }
}

std::optional<GValue> g_empty(const RepShape& shape, const Registry& reg) {
  using SK = RepShape::Kind;
  switch (shape.kind) {
    case SK::U1:
      return GValue::u1();
    case SK::K1:
      return GValue::k1(reg.require(Concept::Monoid, key_of(shape.payload)).empty());
    case SK::Prod: {
      auto l = g_empty(shape.left(), reg);
      auto r = g_empty(shape.right(), reg);
      if (!l || !r) return std::nullopt;
      return GValue::prod(std::move(*l), std::move(*r));
    }
    case SK::Sum:
    case SK::V1:
      return std::nullopt;
    default:
      bad_shape("g_empty", shape);
  }
}

namespace {

// Element mapping for the inner layer of a composition: maps a value of the
// inner container by the given element function.
ValueFn inner_mapper(const RepShape& inner, const ValueFn& fn, const Registry& reg) {
  std::string key = instance_key(inner.head, inner.prefix);
  if (inner.kind == RepShape::Kind::Rec1) {
    return [reg, key, fn](const Value& x) {
      return reg.require(Concept::Functor, key).fmap_with(fn, x);
    };
  }
  if (inner.kind == RepShape::Kind::Comp1) {
    ValueFn deeper = inner_mapper(inner.inner(), fn, reg);
    return [reg, key, deeper](const Value& x) {
      return reg.require(Concept::Functor, key).fmap_with(deeper, x);
    };
  }
  bad_shape("g_fmap", inner);
}

}  // namespace

GValue g_fmap_with(const RepShape& rep1, const ValueFn& fn, const GValue& g,
                   const Registry& reg) {
  using SK = RepShape::Kind;
  using GK = GValue::Kind;
  switch (rep1.kind) {
    case SK::U1:
    case SK::K1:
      return g;
    case SK::Par1:
      return GValue::par1(fn(g.payload));
    case SK::Rec1:
      return GValue::rec1(
          reg.require(Concept::Functor, instance_key(rep1.head, rep1.prefix))
              .fmap_with(fn, g.payload));
    case SK::Comp1:
      return GValue::comp1(
          reg.require(Concept::Functor, instance_key(rep1.head, rep1.prefix))
              .fmap_with(inner_mapper(rep1.inner(), fn, reg), g.payload));
    case SK::Sum:
      if (g.kind == GK::L) return GValue::l1(g_fmap_with(rep1.left(), fn, g.inner(), reg));
      if (g.kind == GK::R) return GValue::r1(g_fmap_with(rep1.right(), fn, g.inner(), reg));
      throw RepError("g_fmap: value does not conform to the sum shape");
    case SK::Prod:
      return GValue::prod(g_fmap_with(rep1.left(), fn, g.left(), reg),
                          g_fmap_with(rep1.right(), fn, g.right(), reg));
    case SK::V1:
      bad_shape("g_fmap", rep1);
  }
  bad_shape("g_fmap", rep1);
}

GValue g_fmap(const RepShape& rep1, const FnRef& f, const GValue& g, const Registry& reg) {
  return g_fmap_with(rep1, [&f](const Value& v) { return f.apply(v); }, g, reg);
}

namespace {

void collect_k1_payloads(const RepShape& s, std::vector<TypeExpr>& out) {
  if (s.kind == RepShape::Kind::K1) {
    out.push_back(s.payload);
    return;
  }
  for (const auto& k : s.kids) collect_k1_payloads(k, out);
}

void collect_functor_heads(const RepShape& s,
                           std::vector<std::pair<std::string, std::vector<TypeExpr>>>& out) {
  if (s.kind == RepShape::Kind::Rec1 || s.kind == RepShape::Kind::Comp1) {
    out.emplace_back(s.head, s.prefix);
  }
  for (const auto& k : s.kids) collect_functor_heads(k, out);
}

// Structural check for the typed Semigroup/Monoid refusal: combine/empty
// exist only when no reachable representation contains a Sum or V1 node.
bool combinable(const Schema& schema, const TypeExpr& t, std::set<std::string>& visiting) {
  if (t.is_prim()) return true;
  const auto& n = t.as_named();
  if (!visiting.insert(key_of(t)).second) return true;
  const DataDecl* decl = schema.find(n.name);
  if (decl == nullptr) throw DeriveError("unknown type '" + n.name + "'");
  RepShape shape = build_rep(*decl, n.args);
  if (shape.contains(RepShape::Kind::Sum) || shape.contains(RepShape::Kind::V1)) return false;
  std::vector<TypeExpr> payloads;
  collect_k1_payloads(shape, payloads);
  for (const auto& p : payloads) {
    if (!combinable(schema, p, visiting)) return false;
  }
  return true;
}

std::shared_ptr<const InstanceBundle> ensure_bundle(const Schema& schema, const TypeExpr& ground,
                                                    Concept c, Registry& reg);

void ensure_payload_bundles(const Schema& schema, const RepShape& shape, Concept c,
                            Registry& reg) {
  std::vector<TypeExpr> payloads;
  collect_k1_payloads(shape, payloads);
  for (const auto& p : payloads) ensure_bundle(schema, p, c, reg);
}

std::shared_ptr<InstanceBundle> new_generic_bundle(Concept c, const NamedType& n) {
  auto b = std::make_shared<InstanceBundle>();
  b->concept_ = c;
  b->type_name = n.name;
  b->ground_args = n.args;
  b->provenance = InstanceBundle::Provenance::Generic;
  return b;
}

template <typename F>
void with_rollback(Registry& reg, Concept c, const std::string& key, F&& body) {
  try {
    body();
  } catch (...) {
    reg.remove(c, key);
    throw;
  }
}

std::shared_ptr<const InstanceBundle> ensure_functor(const Schema& schema,
                                                     const std::string& name,
                                                     const std::vector<TypeExpr>& prefix,
                                                     Registry& reg) {
  std::string key = instance_key(name, prefix);
  if (auto found = reg.get(Concept::Functor, key)) return found;
  const DataDecl* decl = schema.find(name);
  if (decl == nullptr) throw DeriveError("unknown type '" + name + "'");
  for (const auto& p : prefix) {
    if (!p.is_ground()) throw DeriveError("functor prefix arguments must be ground");
  }
  RepShape shape1 = build_rep1_at(*decl, prefix);

  auto b = std::make_shared<InstanceBundle>();
  b->concept_ = Concept::Functor;
  b->type_name = name;
  b->ground_args = prefix;
  b->provenance = InstanceBundle::Provenance::Generic;
  const Schema* sp = &schema;
  const DataDecl* dp = decl;
  Registry regh = reg;
  b->fmap_with = [sp, dp, regh, shape1](const ValueFn& fn, const Value& v) {
    return to1_value(*sp, *dp, g_fmap_with(shape1, fn, from1_value(*sp, *dp, v), regh));
  };
  reg.add(b);
  with_rollback(reg, Concept::Functor, key, [&] {
    std::vector<std::pair<std::string, std::vector<TypeExpr>>> heads;
    collect_functor_heads(shape1, heads);
    for (const auto& [h, pre] : heads) ensure_functor(schema, h, pre, reg);
  });
  return b;
}

std::shared_ptr<const InstanceBundle> ensure_bundle(const Schema& schema, const TypeExpr& ground,
                                                    Concept c, Registry& reg) {
  std::string key = key_of(ground);
  if (auto found = reg.get(c, key)) return found;
  if (ground.is_prim()) {
    // Preloaded or absent; Bool/Char/Double have no Semigroup/Monoid.
    throw MissingInstanceError(std::string("no ") + std::string(concept_name(c)) +
                               " instance for primitive " + key);
  }
  const auto& n = ground.as_named();
  const DataDecl* decl = schema.find(n.name);
  if (decl == nullptr) throw DeriveError("unknown type '" + n.name + "'");
  if (static_cast<int>(n.args.size()) != decl->param_count) {
    throw DeriveError("'" + n.name + "' expects " + std::to_string(decl->param_count) +
                      " ground argument(s)");
  }
  RepShape shape = build_rep(*decl, n.args);
  const Schema* sp = &schema;
  const DataDecl* dp = decl;
  Registry regh = reg;

  switch (c) {
    case Concept::Eq: {
      auto b = new_generic_bundle(c, n);
      b->eq = [sp, regh, shape](const Value& x, const Value& y) {
        return g_eq(shape, from_value(*sp, x), from_value(*sp, y), regh);
      };
      reg.add(b);
      with_rollback(reg, c, key, [&] { ensure_payload_bundles(schema, shape, Concept::Eq, reg); });
      return b;
    }
    case Concept::Ord: {
      auto eqb = ensure_bundle(schema, ground, Concept::Eq, reg);
      auto b = new_generic_bundle(c, n);
      b->eq = eqb->eq;
      b->leq = [sp, regh, shape](const Value& x, const Value& y) {
        return g_leq(shape, from_value(*sp, x), from_value(*sp, y), regh);
      };
      reg.add(b);
      with_rollback(reg, c, key, [&] { ensure_payload_bundles(schema, shape, Concept::Ord, reg); });
      return b;
    }
    case Concept::Semigroup:
    case Concept::Monoid: {
      std::set<std::string> visiting;
      if (!combinable(schema, ground, visiting)) return nullptr;  // typed Unsupported
      auto b = new_generic_bundle(c, n);
      b->combine = [sp, dp, regh, shape](const Value& x, const Value& y) {
        auto r = g_combine(shape, from_value(*sp, x), from_value(*sp, y), regh);
        if (!r) throw DeriveError("combine on an unsupported shape");
        return to_value(*sp, *dp, *r);
      };
      if (c == Concept::Monoid) {
        b->empty = [sp, dp, regh, shape]() {
          auto r = g_empty(shape, regh);
          if (!r) throw DeriveError("empty on an unsupported shape");
          return to_value(*sp, *dp, *r);
        };
      }
      reg.add(b);
      with_rollback(reg, c, key, [&] { ensure_payload_bundles(schema, shape, c, reg); });
      return b;
    }
    case Concept::Functor:
      throw DeriveError("functor derivation goes through derive_bundle with prefix arguments");
  }
  throw DeriveError("unreachable");
}

}  // namespace

std::shared_ptr<const InstanceBundle> derive_bundle(const Schema& schema,
                                                    const std::string& type_name,
                                                    const std::vector<TypeExpr>& ground_args,
                                                    Concept c, Registry& reg) {
  for (const auto& a : ground_args) {
    if (!a.is_ground()) throw DeriveError("derive_bundle arguments must be ground");
  }
  if (c == Concept::Functor) {
    if (prim_from_name(type_name)) {
      throw DeriveError("primitive types are not functors");
    }
    return ensure_functor(schema, type_name, ground_args, reg);
  }
  if (auto p = prim_from_name(type_name)) {
    if (!ground_args.empty()) throw DeriveError("primitive types take no arguments");
    return ensure_bundle(schema, TypeExpr::prim(*p), c, reg);
  }
  return ensure_bundle(schema, TypeExpr::named(type_name, ground_args), c, reg);
}

std::uint64_t proof_case_count(LawId law, int n_constructors) {
  if (n_constructors <= 0) {
    throw DeriveError("proof_case_count: constructor count must be positive");
  }
  std::uint64_t out = 1;
  for (int i = 0; i < law_arity(law); ++i) {
    out *= static_cast<std::uint64_t>(n_constructors);
  }
  return out;
}

namespace {

bool direct_eq(const TypeExpr& t, const Value& a, const Value& b);

bool direct_prim_eq(PrimType p, const Value& a, const Value& b) {
  switch (p) {
    case PrimType::Int: return a.i == b.i;
    case PrimType::Bool: return a.b == b.b;
    case PrimType::Char: return a.c == b.c;
    case PrimType::Double: return a.d == b.d;
    case PrimType::Unit: return true;
  }
  return false;
}

bool direct_prim_leq(PrimType p, const Value& a, const Value& b) {
  switch (p) {
    case PrimType::Int: return a.i <= b.i;
    case PrimType::Bool: return !a.b || b.b;
    case PrimType::Char: return a.c <= b.c;
    case PrimType::Double: return a.d <= b.d;
    case PrimType::Unit: return true;
  }
  return false;
}

[[noreturn]] void no_oracle(const std::string& what) {
  throw DeriveError("no direct oracle for " + what);
}

bool direct_eq(const TypeExpr& t, const Value& a, const Value& b) {
  if (t.is_prim()) return direct_prim_eq(t.as_prim(), a, b);
  const auto& n = t.as_named();
  if (n.name == "Identity") return direct_eq(n.args[0], a.fields[0], b.fields[0]);
  if (n.name == "Maybe") {
    if (a.con_name != b.con_name) return false;
    return a.con_name == "Nothing" || direct_eq(n.args[0], a.fields[0], b.fields[0]);
  }
  if (n.name == "Either") {
    if (a.con_name != b.con_name) return false;
    return direct_eq(n.args[a.con_name == "L" ? 0 : 1], a.fields[0], b.fields[0]);
  }
  if (n.name == "List") {
    if (a.con_name != b.con_name) return false;
    if (a.con_name == "Nil") return true;
    return direct_eq(n.args[0], a.fields[0], b.fields[0]) &&
           direct_eq(t, a.fields[1], b.fields[1]);
  }
  if (n.name == "Triple") {
    for (int i = 0; i < 3; ++i) {
      if (!direct_eq(n.args[i], a.fields[i], b.fields[i])) return false;
    }
    return true;
  }
  if (n.name == "Nat") {
    if (a.con_name != b.con_name) return false;
    return a.con_name == "Zero" || direct_eq(t, a.fields[0], b.fields[0]);
  }
  if (n.name == "B") {
    return a.con_name == b.con_name && a.fields[0].i == b.fields[0].i;
  }
  no_oracle(key_of(t));
}

bool direct_leq(const TypeExpr& t, const Value& a, const Value& b) {
  if (t.is_prim()) return direct_prim_leq(t.as_prim(), a, b);
  const auto& n = t.as_named();
  if (n.name == "Identity") return direct_leq(n.args[0], a.fields[0], b.fields[0]);
  if (n.name == "Maybe") {
    if (a.con_name == "Nothing") return true;
    if (b.con_name == "Nothing") return false;
    return direct_leq(n.args[0], a.fields[0], b.fields[0]);
  }
  if (n.name == "Either") {
    if (a.con_name == "L") {
      return b.con_name != "L" || direct_leq(n.args[0], a.fields[0], b.fields[0]);
    }
    return b.con_name == "R" && direct_leq(n.args[1], a.fields[0], b.fields[0]);
  }
  if (n.name == "List") {
    if (a.con_name == "Nil") return true;
    if (b.con_name == "Nil") return false;
    if (direct_eq(n.args[0], a.fields[0], b.fields[0])) {
      return direct_leq(t, a.fields[1], b.fields[1]);
    }
    return direct_leq(n.args[0], a.fields[0], b.fields[0]);
  }
  if (n.name == "Triple") {
    for (int i = 0; i < 2; ++i) {
      if (!direct_eq(n.args[i], a.fields[i], b.fields[i])) {
        return direct_leq(n.args[i], a.fields[i], b.fields[i]);
      }
    }
    return direct_leq(n.args[2], a.fields[2], b.fields[2]);
  }
  if (n.name == "Nat") {
    if (a.con_name == "Zero") return true;
    if (b.con_name == "Zero") return false;
    return direct_leq(t, a.fields[0], b.fields[0]);
  }
  if (n.name == "B") {
    if (a.con_name == b.con_name) return a.fields[0].i <= b.fields[0].i;
    return a.con_name == "B1";
  }
  no_oracle(key_of(t));
}

bool direct_combinable(const TypeExpr& t) {
  if (t.is_prim()) return t.as_prim() == PrimType::Int || t.as_prim() == PrimType::Unit;
  const auto& n = t.as_named();
  if (n.name == "Identity") return direct_combinable(n.args[0]);
  if (n.name == "Triple") {
    return direct_combinable(n.args[0]) && direct_combinable(n.args[1]) &&
           direct_combinable(n.args[2]);
  }
  return false;
}

Value direct_combine(const TypeExpr& t, const Value& a, const Value& b) {
  if (t.is_prim()) {
    if (t.as_prim() == PrimType::Int) return Value::of_int(a.i + b.i);
    if (t.as_prim() == PrimType::Unit) return Value::unit();
    no_oracle(key_of(t));
  }
  const auto& n = t.as_named();
  if (n.name == "Identity") {
    return Value::con("Identity", "Identity", {direct_combine(n.args[0], a.fields[0], b.fields[0])});
  }
  if (n.name == "Triple") {
    std::vector<Value> fields;
    for (int i = 0; i < 3; ++i) {
      fields.push_back(direct_combine(n.args[i], a.fields[i], b.fields[i]));
    }
    return Value::con("Triple", "MkTriple", std::move(fields));
  }
  no_oracle(key_of(t));
}

Value direct_empty(const TypeExpr& t) {
  if (t.is_prim()) {
    if (t.as_prim() == PrimType::Int) return Value::of_int(0);
    if (t.as_prim() == PrimType::Unit) return Value::unit();
    no_oracle(key_of(t));
  }
  const auto& n = t.as_named();
  if (n.name == "Identity") return Value::con("Identity", "Identity", {direct_empty(n.args[0])});
  if (n.name == "Triple") {
    return Value::con("Triple", "MkTriple",
                      {direct_empty(n.args[0]), direct_empty(n.args[1]), direct_empty(n.args[2])});
  }
  no_oracle(key_of(t));
}

Value direct_fmap(const std::string& name, const ValueFn& fn, const Value& v) {
  if (name == "Identity") return Value::con("Identity", "Identity", {fn(v.fields[0])});
  if (name == "Maybe") {
    if (v.con_name == "Nothing") return v;
    return Value::con("Maybe", "Just", {fn(v.fields[0])});
  }
  if (name == "Either") {
    if (v.con_name == "L") return v;
    return Value::con("Either", "R", {fn(v.fields[0])});
  }
  if (name == "List") {
    if (v.con_name == "Nil") return v;
    return Value::con("List", "Cons", {fn(v.fields[0]), direct_fmap(name, fn, v.fields[1])});
  }
  if (name == "Triple") {
    return Value::con("Triple", "MkTriple", {v.fields[0], v.fields[1], fn(v.fields[2])});
  }
  no_oracle(name + " functor");
}

bool oracle_type(const std::string& name) {
  return name == "Identity" || name == "Maybe" || name == "Either" || name == "List" ||
         name == "Triple" || name == "Nat" || name == "B";
}

}  // namespace

std::shared_ptr<const InstanceBundle> direct_oracle(const std::string& type_name,
                                                    const std::vector<TypeExpr>& ground_args,
                                                    Concept c) {
  auto b = std::make_shared<InstanceBundle>();
  b->concept_ = c;
  b->type_name = type_name;
  b->ground_args = ground_args;
  b->provenance = InstanceBundle::Provenance::DirectOracle;

  if (auto p = prim_from_name(type_name)) {
    PrimType prim = *p;
    switch (c) {
      case Concept::Eq:
        b->eq = [prim](const Value& x, const Value& y) { return direct_prim_eq(prim, x, y); };
        return b;
      case Concept::Ord:
        b->eq = [prim](const Value& x, const Value& y) { return direct_prim_eq(prim, x, y); };
        b->leq = [prim](const Value& x, const Value& y) { return direct_prim_leq(prim, x, y); };
        return b;
      case Concept::Semigroup:
      case Concept::Monoid: {
        TypeExpr t = TypeExpr::prim(prim);
        if (!direct_combinable(t)) no_oracle(std::string(concept_name(c)) + " " + type_name);
        b->combine = [t](const Value& x, const Value& y) { return direct_combine(t, x, y); };
        if (c == Concept::Monoid) b->empty = [t]() { return direct_empty(t); };
        return b;
      }
      case Concept::Functor:
        no_oracle("Functor " + type_name);
    }
  }
  if (!oracle_type(type_name)) no_oracle(type_name);

  if (c == Concept::Functor) {
    std::string name = type_name;
    if (name == "Nat" || name == "B") no_oracle("Functor " + name);
    b->fmap_with = [name](const ValueFn& fn, const Value& v) {
      return direct_fmap(name, fn, v);
    };
    return b;
  }

  TypeExpr t = TypeExpr::named(type_name, ground_args);
  switch (c) {
    case Concept::Eq:
      b->eq = [t](const Value& x, const Value& y) { return direct_eq(t, x, y); };
      return b;
    case Concept::Ord:
      b->eq = [t](const Value& x, const Value& y) { return direct_eq(t, x, y); };
      b->leq = [t](const Value& x, const Value& y) { return direct_leq(t, x, y); };
      return b;
    case Concept::Semigroup:
    case Concept::Monoid:
      if (!direct_combinable(t)) {
        no_oracle(std::string(concept_name(c)) + " " + key_of(t));
      }
      b->combine = [t](const Value& x, const Value& y) { return direct_combine(t, x, y); };
      if (c == Concept::Monoid) b->empty = [t]() { return direct_empty(t); };
      return b;
    default:
      no_oracle(type_name);
  }
}

}  // namespace lawforge
