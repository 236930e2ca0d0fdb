#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lawforge/law_id.hpp"
#include "lawforge/rep.hpp"

namespace lawforge {

enum class Concept { Eq, Ord, Semigroup, Monoid, Functor };

constexpr std::string_view concept_name(Concept c) {
  switch (c) {
    case Concept::Eq: return "Eq";
    case Concept::Ord: return "Ord";
    case Concept::Semigroup: return "Semigroup";
    case Concept::Monoid: return "Monoid";
    case Concept::Functor: return "Functor";
  }
  return "?";
}

struct DeriveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingInstanceError : DeriveError {
  using DeriveError::DeriveError;
};

// A first-class function over a finite primitive domain, stored as an
// explicit lookup table so functions themselves can be enumerated.
struct FnRef {
  std::string name;
  PrimType domain = PrimType::Bool;
  PrimType codomain = PrimType::Bool;
  std::vector<std::pair<Value, Value>> table;

  Value apply(const Value& v) const;  // throws DeriveError outside the domain
};

// f after g; total over g's domain. Named "f.g".
FnRef compose_fn(const FnRef& f, const FnRef& g);

FnRef identity_fn(PrimType p, std::vector<Value> domain);

using ValueFn = std::function<Value(const Value&)>;

// The executable operations of one concept at one type. Only the operations
// of the bundle's concept are populated (Ord also carries eq, Monoid also
// carries combine, mirroring the superclass obligations).
struct InstanceBundle {
  enum class Provenance { Generic, DirectOracle, BuiltinPrim };

  Concept concept_ = Concept::Eq;
  std::string type_name;
  std::vector<TypeExpr> ground_args;  // Functor: the earlier (prefix) parameters
  Provenance provenance = Provenance::Generic;

  std::function<bool(const Value&, const Value&)> eq;
  std::function<bool(const Value&, const Value&)> leq;
  std::function<Value(const Value&, const Value&)> combine;
  std::function<Value()> empty;
  std::function<Value(const ValueFn&, const Value&)> fmap_with;

  Value fmap(const FnRef& f, const Value& v) const;

  // Full ground carrier for Eq/Ord/Semigroup/Monoid bundles; for Functor
  // bundles use applied_to(elem).
  TypeExpr ground_type() const;
  TypeExpr applied_to(const TypeExpr& elem) const;
  std::string key() const;
  std::string display_type() const;
};

std::string instance_key(std::string_view type_name, const std::vector<TypeExpr>& args);

// Deterministic instance table. Handle semantics: copies share one table,
// and bundles capture the shared table, so derived bundles stay valid for
// as long as any copy (or any bundle) lives. Freeze after a derivation
// session before checking from multiple threads.
class Registry {
 public:
  Registry();

  // Int/Bool/Char/Double/Unit Eq and Ord; Int-sum Semigroup/Monoid with
  // identity 0; Unit Semigroup/Monoid.
  static Registry with_builtins();

  const InstanceBundle* find(Concept c, const std::string& key) const;
  std::shared_ptr<const InstanceBundle> get(Concept c, const std::string& key) const;
  const InstanceBundle& require(Concept c, const std::string& key) const;
  void add(std::shared_ptr<const InstanceBundle> bundle);  // duplicate key: error
  void remove(Concept c, const std::string& key);

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Generic operations over representation values. K1 payloads delegate to
// registered bundles; a missing entry raises MissingInstanceError.
bool g_eq(const RepShape& shape, const GValue& a, const GValue& b, const Registry& reg);
bool g_leq(const RepShape& shape, const GValue& a, const GValue& b, const Registry& reg);

// Sum (and V1) shapes have no canonical combine/empty; the refusal is a
// value, not an exception.
std::optional<GValue> g_combine(const RepShape& shape, const GValue& a, const GValue& b,
                                const Registry& reg);
std::optional<GValue> g_empty(const RepShape& shape, const Registry& reg);

GValue g_fmap_with(const RepShape& rep1, const ValueFn& fn, const GValue& g,
                   const Registry& reg);
GValue g_fmap(const RepShape& rep1, const FnRef& f, const GValue& g, const Registry& reg);

// Derives the concept's operations generically through the isomorphism and
// registers the bundle (recursively deriving component bundles). Returns
// nullptr for the typed Unsupported verdict (Semigroup/Monoid over a shape
// with Sum or V1, directly or in a component).
//
// For Functor, ground_args are the earlier parameters (param_count - 1 of
// them); everything else takes the full ground instantiation.
std::shared_ptr<const InstanceBundle> derive_bundle(const Schema& schema,
                                                    const std::string& type_name,
                                                    const std::vector<TypeExpr>& ground_args,
                                                    Concept c, Registry& reg);

// Hand-written, representation-free implementations for the built-in types
// (Identity, Maybe, Either, List, Triple, Nat, B) and primitive payloads.
// Throws DeriveError for combinations without an oracle.
std::shared_ptr<const InstanceBundle> direct_oracle(const std::string& type_name,
                                                    const std::vector<TypeExpr>& ground_args,
                                                    Concept c);

// Number of constructor-pattern combinations a direct proof of the law must
// exhaust for a type with n constructors: n ^ law_arity(law).
std::uint64_t proof_case_count(LawId law, int n_constructors);

}  // namespace lawforge
