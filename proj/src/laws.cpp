#include "lawforge/laws.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

namespace lawforge {

namespace {

constexpr std::uint64_t kNoFail = (std::numeric_limits<std::uint64_t>::max)();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > (std::numeric_limits<std::uint64_t>::max)() / b) {
    return (std::numeric_limits<std::uint64_t>::max)();
  }
  return a * b;
}

}  // namespace

std::vector<Value> prim_domain(PrimType p, const DomainConfig& cfg) {
  std::vector<Value> out;
  switch (p) {
    case PrimType::Int:
      for (auto i : cfg.int_domain) out.push_back(Value::of_int(i));
      break;
    case PrimType::Bool:
      out.push_back(Value::of_bool(false));
      out.push_back(Value::of_bool(true));
      break;
    case PrimType::Char:
      for (char c : cfg.char_domain) out.push_back(Value::of_char(c));
      break;
    case PrimType::Double:
      for (double d : cfg.double_domain) out.push_back(Value::of_double(d));
      if (cfg.include_nan) {
        out.push_back(Value::of_double(std::numeric_limits<double>::quiet_NaN()));
      }
      break;
    case PrimType::Unit:
      out.push_back(Value::unit());
      break;
  }
  return out;
}

namespace {

std::vector<Value> enum_rec(const TypeExpr& t, int depth, const DomainConfig& cfg,
                            const Schema& schema) {
  if (t.is_prim()) return prim_domain(t.as_prim(), cfg);
  if (t.is_param()) throw SchemaError("enumerate: type must be ground");
  const auto& n = t.as_named();
  const DataDecl* decl = schema.find(n.name);
  if (decl == nullptr) throw SchemaError("enumerate: unresolvable type '" + n.name + "'");
  std::vector<Value> out;
  if (depth <= 0) return out;
  for (const auto& ctor : decl->constructors) {
    std::vector<std::vector<Value>> field_values;
    field_values.reserve(ctor.fields.size());
    bool empty = false;
    for (const auto& f : ctor.fields) {
      field_values.push_back(enum_rec(instantiate(f, n.args), depth - 1, cfg, schema));
      if (field_values.back().empty()) {
        empty = true;
        break;
      }
    }
    if (empty) continue;
    // Odometer over field positions, first field most significant.
    std::vector<std::size_t> idx(ctor.fields.size(), 0);
    while (true) {
      std::vector<Value> fields;
      fields.reserve(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) fields.push_back(field_values[i][idx[i]]);
      out.push_back(Value::con(decl->name, ctor.name, std::move(fields)));
      std::size_t i = idx.size();
      while (i > 0) {
        --i;
        if (++idx[i] < field_values[i].size()) break;
        idx[i] = 0;
        if (i == 0) goto ctor_done;
      }
      if (idx.empty()) break;
    }
  ctor_done:;
  }
  return out;
}

}  // namespace

std::vector<Value> enumerate_values(const TypeExpr& ground, const DomainConfig& cfg,
                                    const Schema& schema) {
  return enum_rec(ground, cfg.depth, cfg, schema);
}

std::vector<FnRef> enumerate_functions(PrimType dom, PrimType cod, const DomainConfig& cfg) {
  std::vector<Value> din = prim_domain(dom, cfg);
  std::vector<Value> cout_ = prim_domain(cod, cfg);
  std::uint64_t total = 1;  // |cod| ^ |dom|, saturating
  for (std::size_t i = 0; i < din.size() && total <= 64; ++i) {
    total = sat_mul(total, cout_.size());
  }
  std::vector<FnRef> out;
  if (total <= 64) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      FnRef fn;
      fn.domain = dom;
      fn.codomain = cod;
      std::uint64_t weight = total;
      std::string name = "{";
      for (std::size_t j = 0; j < din.size(); ++j) {
        weight /= cout_.size();
        const Value& image = cout_[(idx / weight) % cout_.size()];
        fn.table.emplace_back(din[j], image);
        if (j > 0) name += ',';
        name += to_string(din[j]) + "->" + to_string(image);
      }
      fn.name = name + "}";
      out.push_back(std::move(fn));
    }
    return out;
  }
  // Fixed catalog for large spaces.
  if (dom == cod) {
    out.push_back(identity_fn(dom, din));
  }
  if (!cout_.empty()) {
    FnRef c;
    c.name = "const " + to_string(cout_.front(), true);
    c.domain = dom;
    c.codomain = cod;
    for (const auto& v : din) c.table.emplace_back(v, cout_.front());
    out.push_back(std::move(c));
  }
  if (dom == PrimType::Int && cod == PrimType::Int) {
    FnRef s;
    s.name = "succWrap";
    s.domain = dom;
    s.codomain = cod;
    for (std::size_t j = 0; j < din.size(); ++j) {
      s.table.emplace_back(din[j], din[(j + 1) % din.size()]);
    }
    out.push_back(std::move(s));
  }
  if (dom == PrimType::Bool && cod == PrimType::Bool) {
    FnRef neg;
    neg.name = "not";
    neg.domain = dom;
    neg.codomain = cod;
    neg.table.emplace_back(Value::of_bool(false), Value::of_bool(true));
    neg.table.emplace_back(Value::of_bool(true), Value::of_bool(false));
    out.push_back(std::move(neg));
  }
  return out;
}

std::vector<GValue> enumerate_gvalues(const RepShape& shape, const DomainConfig& cfg,
                                      const Schema& schema) {
  using SK = RepShape::Kind;
  switch (shape.kind) {
    case SK::V1:
      return {};
    case SK::U1:
      return {GValue::u1()};
    case SK::K1: {
      std::vector<GValue> out;
      for (auto& v : enum_rec(shape.payload, cfg.depth - 1, cfg, schema)) {
        out.push_back(GValue::k1(std::move(v)));
      }
      return out;
    }
    case SK::Sum: {
      std::vector<GValue> out;
      for (auto& g : enumerate_gvalues(shape.left(), cfg, schema)) {
        out.push_back(GValue::l1(std::move(g)));
      }
      for (auto& g : enumerate_gvalues(shape.right(), cfg, schema)) {
        out.push_back(GValue::r1(std::move(g)));
      }
      return out;
    }
    case SK::Prod: {
      auto ls = enumerate_gvalues(shape.left(), cfg, schema);
      auto rs = enumerate_gvalues(shape.right(), cfg, schema);
      std::vector<GValue> out;
      out.reserve(ls.size() * rs.size());
      for (const auto& l : ls) {
        for (const auto& r : rs) out.push_back(GValue::prod(l, r));
      }
      return out;
    }
    default:
      throw RepError("enumerate_gvalues: Rep shapes only");
  }
}

bool eval_law(LawId law, const InstanceBundle& b, const std::vector<Value>& v,
              const std::vector<FnRef>& fns) {
  switch (law) {
    case LawId::EqRefl:
      return b.eq(v[0], v[0]);
    case LawId::EqSym:
      return !b.eq(v[0], v[1]) || b.eq(v[1], v[0]);
    case LawId::EqTrans:
      return !(b.eq(v[0], v[1]) && b.eq(v[1], v[2])) || b.eq(v[0], v[2]);
    case LawId::OrdRefl:
      return b.leq(v[0], v[0]);
    case LawId::OrdTotal:
      return b.leq(v[0], v[1]) || b.leq(v[1], v[0]);
    case LawId::OrdAnti:
      return !(b.leq(v[0], v[1]) && b.leq(v[1], v[0])) || b.eq(v[0], v[1]);
    case LawId::OrdTrans:
      return !(b.leq(v[0], v[1]) && b.leq(v[1], v[2])) || b.leq(v[0], v[2]);
    case LawId::SgAssoc:
      return b.combine(v[0], b.combine(v[1], v[2])) == b.combine(b.combine(v[0], v[1]), v[2]);
    case LawId::MonLIdent:
      return b.combine(b.empty(), v[0]) == v[0];
    case LawId::MonRIdent:
      return b.combine(v[0], b.empty()) == v[0];
    case LawId::FunId:
      return b.fmap(fns[0], v[0]) == v[0];
    case LawId::FunCompose:
      return b.fmap(compose_fn(fns[0], fns[1]), v[0]) == b.fmap(fns[0], b.fmap(fns[1], v[0]));
    default:
      throw DeriveError("eval_law: not a pointwise law");
  }
}

namespace {

// Scans indices [0, min(space, max_cases)) for the canonically first
// predicate failure. The reported index is the same for any worker count.
template <typename Pred>
std::pair<std::uint64_t, std::uint64_t> scan_space(std::uint64_t space,
                                                   std::uint64_t max_cases, int workers,
                                                   const Pred& pred) {
  const std::uint64_t limit = std::min(space, max_cases);
  if (workers <= 1 || limit < 4096) {
    for (std::uint64_t i = 0; i < limit; ++i) {
      if (!pred(i)) return {i, limit};
    }
    return {kNoFail, limit};
  }
  const int n_workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), limit));
  std::atomic<std::uint64_t> first_fail{kNoFail};
  std::mutex err_mutex;
  std::exception_ptr error;
  const std::uint64_t chunk = (limit + n_workers - 1) / n_workers;
  std::vector<std::thread> threads;
  threads.reserve(n_workers);
  for (int w = 0; w < n_workers; ++w) {
    threads.emplace_back([&, w] {
      const std::uint64_t lo = static_cast<std::uint64_t>(w) * chunk;
      const std::uint64_t hi = std::min(lo + chunk, limit);
      try {
        for (std::uint64_t i = lo; i < hi; ++i) {
          if (i >= first_fail.load(std::memory_order_relaxed)) break;
          if (!pred(i)) {
            std::uint64_t seen = first_fail.load(std::memory_order_relaxed);
            while (i < seen && !first_fail.compare_exchange_weak(seen, i)) {
            }
            break;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!error) error = std::current_exception();
        first_fail.store(0, std::memory_order_relaxed);  // stop the others
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return {first_fail.load(), limit};
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Decodes a flat index into arity positions over a single sequence, first
// position most significant.
void decode_tuple(std::uint64_t idx, std::size_t n, int arity, std::size_t* out) {
  for (int k = arity - 1; k >= 0; --k) {
    out[k] = static_cast<std::size_t>(idx % n);
    idx /= n;
  }
}

LawReport finish(LawReport rep, std::uint64_t fail_idx, std::uint64_t limit,
                 std::uint64_t space) {
  if (fail_idx != kNoFail) {
    rep.outcome.status = CheckStatus::Fail;
    rep.outcome.cases_checked = fail_idx + 1;
  } else {
    rep.outcome.status = CheckStatus::Pass;
    rep.outcome.cases_checked = limit;
    rep.outcome.truncated = limit < space;
  }
  return rep;
}

}  // namespace

LawReport check_law(LawId law, const InstanceBundle* bundle, const DomainConfig& cfg,
                    const Schema& schema, int workers) {
  LawReport rep;
  rep.law = law;
  Timer timer;
  if (bundle == nullptr) {
    rep.outcome.status = CheckStatus::Unsupported;
    rep.wall_ms = timer.ms();
    return rep;
  }
  rep.type_text = bundle->display_type();
  rep.concept_text = std::string(concept_name(bundle->concept_));

  const int arity = law_arity(law);
  if (law == LawId::FunId || law == LawId::FunCompose) {
    // Functor laws quantify over Bool -> Bool tables and containers of Bool.
    const TypeExpr carrier = bundle->applied_to(TypeExpr::prim(PrimType::Bool));
    const std::vector<Value> values = enumerate_values(carrier, cfg, schema);
    const std::vector<Value> bools = prim_domain(PrimType::Bool, cfg);
    if (law == LawId::FunId) {
      const FnRef id = identity_fn(PrimType::Bool, bools);
      auto pred = [&](std::uint64_t i) {
        return eval_law(law, *bundle, {values[static_cast<std::size_t>(i)]}, {id});
      };
      auto [fail_idx, limit] = scan_space(values.size(), cfg.max_cases, workers, pred);
      rep = finish(std::move(rep), fail_idx, limit, values.size());
      if (fail_idx != kNoFail) {
        rep.outcome.counterexample = {values[static_cast<std::size_t>(fail_idx)]};
        rep.outcome.counterexample_fns = {id};
      }
      rep.wall_ms = timer.ms();
      return rep;
    }
    const std::vector<FnRef> fns = enumerate_functions(PrimType::Bool, PrimType::Bool, cfg);
    const std::uint64_t space =
        sat_mul(sat_mul(fns.size(), fns.size()), values.size());
    auto decode = [&](std::uint64_t idx) {
      std::size_t zi = static_cast<std::size_t>(idx % values.size());
      idx /= values.size();
      std::size_t gi = static_cast<std::size_t>(idx % fns.size());
      std::size_t fi = static_cast<std::size_t>(idx / fns.size());
      return std::tuple<std::size_t, std::size_t, std::size_t>{fi, gi, zi};
    };
    auto pred = [&](std::uint64_t i) {
      auto [fi, gi, zi] = decode(i);
      return eval_law(law, *bundle, {values[zi]}, {fns[fi], fns[gi]});
    };
    auto [fail_idx, limit] = scan_space(space, cfg.max_cases, workers, pred);
    rep = finish(std::move(rep), fail_idx, limit, space);
    if (fail_idx != kNoFail) {
      auto [fi, gi, zi] = decode(fail_idx);
      rep.outcome.counterexample = {values[zi]};
      rep.outcome.counterexample_fns = {fns[fi], fns[gi]};
    }
    rep.wall_ms = timer.ms();
    return rep;
  }

  const std::vector<Value> values = enumerate_values(bundle->ground_type(), cfg, schema);
  std::uint64_t space = 1;
  for (int k = 0; k < arity; ++k) space = sat_mul(space, values.size());
  auto pred = [&](std::uint64_t i) {
    std::size_t ix[3];
    decode_tuple(i, values.size(), arity, ix);
    std::vector<Value> tuple;
    tuple.reserve(arity);
    for (int k = 0; k < arity; ++k) tuple.push_back(values[ix[k]]);
    return eval_law(law, *bundle, tuple, {});
  };
  auto [fail_idx, limit] = scan_space(space, cfg.max_cases, workers, pred);
  rep = finish(std::move(rep), fail_idx, limit, space);
  if (fail_idx != kNoFail) {
    std::size_t ix[3];
    decode_tuple(fail_idx, values.size(), arity, ix);
    for (int k = 0; k < arity; ++k) rep.outcome.counterexample.push_back(values[ix[k]]);
  }
  rep.wall_ms = timer.ms();
  return rep;
}

LawReport check_oracle_equiv(const InstanceBundle& derived, const InstanceBundle& oracle,
                             const DomainConfig& cfg, const Schema& schema, int workers) {
  if (derived.concept_ != oracle.concept_) {
    throw DeriveError("oracle equivalence needs bundles of one concept");
  }
  LawReport rep;
  rep.law = LawId::OracleEquiv;
  rep.type_text = derived.display_type();
  rep.concept_text = "Oracle";
  Timer timer;

  const Concept c = derived.concept_;
  if (c == Concept::Functor) {
    const TypeExpr carrier = derived.applied_to(TypeExpr::prim(PrimType::Bool));
    const std::vector<Value> values = enumerate_values(carrier, cfg, schema);
    const std::vector<FnRef> fns = enumerate_functions(PrimType::Bool, PrimType::Bool, cfg);
    const std::uint64_t space = sat_mul(fns.size(), values.size());
    auto pred = [&](std::uint64_t i) {
      const FnRef& f = fns[static_cast<std::size_t>(i / values.size())];
      const Value& z = values[static_cast<std::size_t>(i % values.size())];
      return derived.fmap(f, z) == oracle.fmap(f, z);
    };
    auto [fail_idx, limit] = scan_space(space, cfg.max_cases, workers, pred);
    rep = finish(std::move(rep), fail_idx, limit, space);
    if (fail_idx != kNoFail) {
      rep.outcome.counterexample = {values[static_cast<std::size_t>(fail_idx % values.size())]};
      rep.outcome.counterexample_fns = {fns[static_cast<std::size_t>(fail_idx / values.size())]};
    }
    rep.wall_ms = timer.ms();
    return rep;
  }

  const std::vector<Value> values = enumerate_values(derived.ground_type(), cfg, schema);
  if (c == Concept::Monoid) {
    bool ok = derived.empty() == oracle.empty();
    rep.outcome.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    rep.outcome.cases_checked = 1;
    if (!ok) rep.outcome.counterexample = {derived.empty(), oracle.empty()};
    rep.wall_ms = timer.ms();
    return rep;
  }
  const std::uint64_t space = sat_mul(values.size(), values.size());
  auto pred = [&](std::uint64_t i) {
    const Value& x = values[static_cast<std::size_t>(i / values.size())];
    const Value& y = values[static_cast<std::size_t>(i % values.size())];
    switch (c) {
      case Concept::Eq: return derived.eq(x, y) == oracle.eq(x, y);
      case Concept::Ord: return derived.leq(x, y) == oracle.leq(x, y);
      case Concept::Semigroup: return derived.combine(x, y) == oracle.combine(x, y);
      default: return true;
    }
  };
  auto [fail_idx, limit] = scan_space(space, cfg.max_cases, workers, pred);
  rep = finish(std::move(rep), fail_idx, limit, space);
  if (fail_idx != kNoFail) {
    rep.outcome.counterexample = {
        values[static_cast<std::size_t>(fail_idx / values.size())],
        values[static_cast<std::size_t>(fail_idx % values.size())]};
  }
  rep.wall_ms = timer.ms();
  return rep;
}

std::vector<LawReport> check_iso(const Schema& schema, const std::string& type_name,
                                 const std::vector<TypeExpr>& ground_args,
                                 const DomainConfig& cfg, int workers) {
  const DataDecl* decl = schema.find(type_name);
  if (decl == nullptr) throw SchemaError("check_iso: unknown type '" + type_name + "'");
  const TypeExpr ground = TypeExpr::named(type_name, ground_args);
  const RepShape shape = build_rep(*decl, ground_args);
  const std::vector<Value> values = enumerate_values(ground, cfg, schema);
  const std::string type_text = instance_key(type_name, ground_args);

  std::vector<LawReport> out;

  {
    LawReport rep;
    rep.law = LawId::IsoToFrom;
    rep.type_text = type_text;
    rep.concept_text = "Iso";
    Timer timer;
    auto pred = [&](std::uint64_t i) {
      const Value& v = values[static_cast<std::size_t>(i)];
      return to_value(schema, *decl, from_value(schema, v)) == v;
    };
    auto [fail_idx, limit] = scan_space(values.size(), cfg.max_cases, workers, pred);
    rep = finish(std::move(rep), fail_idx, limit, values.size());
    if (fail_idx != kNoFail) {
      rep.outcome.counterexample = {values[static_cast<std::size_t>(fail_idx)]};
    }
    rep.wall_ms = timer.ms();
    out.push_back(std::move(rep));
  }

  {
    LawReport rep;
    rep.law = LawId::IsoFromTo;
    rep.type_text = type_text;
    rep.concept_text = "Iso";
    Timer timer;
    std::vector<GValue> gvalues;
    gvalues.reserve(values.size() * 2);
    for (const auto& v : values) gvalues.push_back(from_value(schema, v));
    for (auto& g : enumerate_gvalues(shape, cfg, schema)) gvalues.push_back(std::move(g));
    auto pred = [&](std::uint64_t i) {
      const GValue& g = gvalues[static_cast<std::size_t>(i)];
      return from_value(schema, to_value(schema, *decl, g)) == g;
    };
    auto [fail_idx, limit] = scan_space(gvalues.size(), cfg.max_cases, workers, pred);
    rep = finish(std::move(rep), fail_idx, limit, gvalues.size());
    if (fail_idx != kNoFail) {
      rep.outcome.counterexample = {
          to_value(schema, *decl, gvalues[static_cast<std::size_t>(fail_idx)])};
    }
    rep.wall_ms = timer.ms();
    out.push_back(std::move(rep));
  }

  {
    LawReport rep;
    rep.law = LawId::FromInj;
    rep.type_text = type_text;
    rep.concept_text = "Iso";
    Timer timer;
    const std::uint64_t space = sat_mul(values.size(), values.size());
    auto pred = [&](std::uint64_t i) {
      const Value& x = values[static_cast<std::size_t>(i / values.size())];
      const Value& y = values[static_cast<std::size_t>(i % values.size())];
      if (!(from_value(schema, x) == from_value(schema, y))) return true;
      return x == y;
    };
    auto [fail_idx, limit] = scan_space(space, cfg.max_cases, workers, pred);
    rep = finish(std::move(rep), fail_idx, limit, space);
    if (fail_idx != kNoFail) {
      rep.outcome.counterexample = {
          values[static_cast<std::size_t>(fail_idx / values.size())],
          values[static_cast<std::size_t>(fail_idx % values.size())]};
    }
    rep.wall_ms = timer.ms();
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<LawId> concept_laws(Concept c) {
  switch (c) {
    case Concept::Eq: return {LawId::EqRefl, LawId::EqSym, LawId::EqTrans};
    case Concept::Ord:
      return {LawId::OrdRefl, LawId::OrdTotal, LawId::OrdAnti, LawId::OrdTrans};
    case Concept::Semigroup: return {LawId::SgAssoc};
    case Concept::Monoid: return {LawId::MonLIdent, LawId::MonRIdent};
    case Concept::Functor: return {LawId::FunId, LawId::FunCompose};
  }
  return {};
}

std::vector<LawReport> run_concept_suite(const Schema& schema, const std::string& type_name,
                                         const std::vector<TypeExpr>& ground_args, Concept c,
                                         const DomainConfig& cfg, Registry& reg, int workers) {
  auto bundle = derive_bundle(schema, type_name, ground_args, c, reg);
  std::vector<LawReport> out;
  for (LawId law : concept_laws(c)) {
    LawReport rep = check_law(law, bundle.get(), cfg, schema, workers);
    rep.type_text = instance_key(type_name, ground_args);
    rep.concept_text = std::string(concept_name(c));
    out.push_back(std::move(rep));
  }
  return out;
}

namespace {

TypeExpr component_type(const ClosureComponent& comp) {
  if (auto p = prim_from_name(comp.type_name); p && comp.ground_args.empty()) {
    return TypeExpr::prim(*p);
  }
  return TypeExpr::named(comp.type_name, comp.ground_args);
}

std::string fresh_name(const Schema& schema, std::string base) {
  std::string name = std::move(base);
  while (schema.find(name) != nullptr) name += "_";
  return name;
}

}  // namespace

std::vector<LawReport> check_preservation(ClosureKind kind,
                                          const std::vector<ClosureComponent>& components,
                                          Concept c, const DomainConfig& cfg,
                                          const Schema& schema, int workers) {
  std::vector<LawReport> out;

  // Component suites first: the closure argument assumes them. For the iso
  // kind they run on the hand-written source-side instance, so the derived
  // side below really is checked against an independent witness.
  for (const auto& comp : components) {
    if (kind == ClosureKind::Iso) {
      auto oracle = direct_oracle(comp.type_name, comp.ground_args, c);
      for (LawId law : concept_laws(c)) {
        LawReport rep = check_law(law, oracle.get(), cfg, schema, workers);
        rep.type_text = instance_key(comp.type_name, comp.ground_args);
        rep.concept_text = std::string(concept_name(c));
        out.push_back(std::move(rep));
      }
      continue;
    }
    Registry reg = Registry::with_builtins();
    auto reports = run_concept_suite(schema, comp.type_name, comp.ground_args, c, cfg, reg,
                                     workers);
    for (auto& r : reports) out.push_back(std::move(r));
  }

  switch (kind) {
    case ClosureKind::Product: {
      Schema scratch = schema;
      std::string name = fresh_name(scratch, "ClosureProduct");
      ConstructorDecl ctor{"Mk" + name, {}};
      for (const auto& comp : components) ctor.fields.push_back(component_type(comp));
      scratch.add({name, 0, {std::move(ctor)}});
      Registry reg = Registry::with_builtins();
      auto reports = run_concept_suite(scratch, name, {}, c, cfg, reg, workers);
      for (auto& r : reports) out.push_back(std::move(r));
      break;
    }
    case ClosureKind::Sum: {
      if (components.size() != 2) {
        throw DeriveError("sum closure takes exactly two components");
      }
      Schema scratch = schema;
      std::string name = fresh_name(scratch, "ClosureSum");
      scratch.add({name,
                   0,
                   {{"InL", {component_type(components[0])}},
                    {"InR", {component_type(components[1])}}}});
      Registry reg = Registry::with_builtins();
      auto reports = run_concept_suite(scratch, name, {}, c, cfg, reg, workers);
      for (auto& r : reports) out.push_back(std::move(r));
      break;
    }
    case ClosureKind::Iso: {
      if (components.size() != 1) {
        throw DeriveError("iso closure takes exactly one component");
      }
      const auto& comp = components[0];
      // The transported instance: generic operations defined as the
      // representation-side operations after from. Checked against the
      // component's direct oracle as well.
      Registry reg = Registry::with_builtins();
      auto derived = derive_bundle(schema, comp.type_name, comp.ground_args, c, reg);
      for (LawId law : concept_laws(c)) {
        LawReport rep = check_law(law, derived.get(), cfg, schema, workers);
        rep.type_text = "Rep " + instance_key(comp.type_name, comp.ground_args);
        rep.concept_text = std::string(concept_name(c));
        out.push_back(std::move(rep));
      }
      if (derived != nullptr) {
        auto oracle = direct_oracle(comp.type_name, comp.ground_args, c);
        LawReport rep = check_oracle_equiv(*derived, *oracle, cfg, schema, workers);
        out.push_back(std::move(rep));
      }
      break;
    }
  }
  return out;
}

}  // namespace lawforge
