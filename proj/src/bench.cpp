#include "lawforge/bench.hpp"

#include <chrono>

namespace lawforge {

namespace {

bool has_declared_field(const ConstructorDecl& ctor) {
  for (const auto& f : ctor.fields) {
    if (f.is_named()) return true;
  }
  return false;
}

}  // namespace

Value random_value(const Schema& schema, const TypeExpr& ground, std::mt19937_64& rng,
                   int budget) {
  if (ground.is_param()) throw DeriveError("random_value: type must be ground");
  if (ground.is_prim()) {
    switch (ground.as_prim()) {
      case PrimType::Int:
        return Value::of_int(static_cast<std::int64_t>(rng() % 201) - 100);
      case PrimType::Bool:
        return Value::of_bool((rng() & 1) != 0);
      case PrimType::Char:
        return Value::of_char(static_cast<char>('a' + rng() % 26));
      case PrimType::Double:
        return Value::of_double((static_cast<double>(rng() % 2001) - 1000.0) / 8.0);
      case PrimType::Unit:
        return Value::unit();
    }
  }
  if (budget < -16) {
    throw DeriveError("random_value: no finite values for " + to_string(ground));
  }
  const auto& n = ground.as_named();
  const DataDecl* decl = schema.find(n.name);
  if (decl == nullptr) throw DeriveError("random_value: unknown type '" + n.name + "'");
  if (decl->constructors.empty()) {
    throw DeriveError("random_value: '" + n.name + "' has no values");
  }
  std::vector<const ConstructorDecl*> candidates;
  for (const auto& ctor : decl->constructors) {
    if (budget > 0 || !has_declared_field(ctor)) candidates.push_back(&ctor);
  }
  if (candidates.empty()) {
    for (const auto& ctor : decl->constructors) candidates.push_back(&ctor);
  }
  const ConstructorDecl& ctor = *candidates[rng() % candidates.size()];
  std::vector<Value> fields;
  fields.reserve(ctor.fields.size());
  for (const auto& f : ctor.fields) {
    fields.push_back(random_value(schema, instantiate(f, n.args), rng, budget - 1));
  }
  return Value::con(decl->name, ctor.name, std::move(fields));
}

BenchResult run_bench(const Schema& schema, const std::string& type_name,
                      const std::vector<TypeExpr>& ground_args, Concept c, std::uint64_t n,
                      std::uint64_t seed) {
  if (c != Concept::Eq && c != Concept::Ord) {
    throw DeriveError("bench compares Eq or Ord instances");
  }
  Registry reg = Registry::with_builtins();
  auto derived = derive_bundle(schema, type_name, ground_args, c, reg);
  auto oracle = direct_oracle(type_name, ground_args, c);

  const TypeExpr ground = derived->ground_type();
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Value, Value>> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    Value a = random_value(schema, ground, rng, 3);
    Value b = random_value(schema, ground, rng, 3);
    pairs.emplace_back(std::move(a), std::move(b));
  }

  auto op_of = [c](const InstanceBundle& b) {
    return c == Concept::Ord ? b.leq : b.eq;
  };
  auto timed = [&](const std::function<bool(const Value&, const Value&)>& op,
                   std::uint64_t& checksum) {
    auto start = std::chrono::steady_clock::now();
    std::uint64_t acc = 0;
    for (const auto& [a, b] : pairs) acc = (acc << 1 | (op(a, b) ? 1 : 0)) ^ (acc >> 63);
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    checksum ^= acc;
    return elapsed.count();
  };

  BenchResult result;
  result.pairs = n;
  double generic_s = timed(op_of(*derived), result.checksum);
  double direct_s = timed(op_of(*oracle), result.checksum);
  result.generic_ops_per_sec = generic_s > 0 ? static_cast<double>(n) / generic_s : 0.0;
  result.direct_ops_per_sec = direct_s > 0 ? static_cast<double>(n) / direct_s : 0.0;

  auto gop = op_of(*derived);
  auto dop = op_of(*oracle);
  for (const auto& [a, b] : pairs) {
    if (gop(a, b) != dop(a, b)) ++result.mismatches;
  }
  return result;
}

}  // namespace lawforge
