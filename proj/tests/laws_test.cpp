#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "lawforge/laws.hpp"
#include "lawforge/parser.hpp"
#include "lawforge/report.hpp"

using namespace lawforge;

namespace {

TypeExpr tint() { return TypeExpr::prim(PrimType::Int); }
Value vi(std::int64_t i) { return Value::of_int(i); }
Value nil() { return Value::con("List", "Nil", {}); }
Value cons(Value x, Value xs) { return Value::con("List", "Cons", {std::move(x), std::move(xs)}); }
Value zero() { return Value::con("Nat", "Zero", {}); }
Value suc(Value n) { return Value::con("Nat", "Suc", {std::move(n)}); }

Schema schema_with(std::string_view extra) {
  auto r = parse_schema(extra);
  REQUIRE(std::holds_alternative<Schema>(r));
  return std::get<Schema>(std::move(r));
}

std::string dump_reports(const std::vector<LawReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += report_to_json(r).dump() + "\n";
  return out;
}

// An Identity-Int comparator that violates antisymmetry: x <= y + 1.
std::shared_ptr<InstanceBundle> sloppy_ord_bundle() {
  auto b = std::make_shared<InstanceBundle>();
  b->concept_ = Concept::Ord;
  b->type_name = "Identity";
  b->ground_args = {tint()};
  b->eq = [](const Value& x, const Value& y) { return x.fields[0].i == y.fields[0].i; };
  b->leq = [](const Value& x, const Value& y) { return x.fields[0].i <= y.fields[0].i + 1; };
  return b;
}

}  // namespace

TEST_CASE("enumeration goldens") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;

  auto nats = enumerate_values(TypeExpr::named("Nat"), cfg, s);
  CHECK(nats == std::vector<Value>{zero(), suc(zero()), suc(suc(zero()))});

  DomainConfig small;
  small.int_domain = {0, 1};
  small.depth = 2;
  auto lists = enumerate_values(TypeExpr::named("List", {tint()}), small, s);
  CHECK(lists == std::vector<Value>{nil(), cons(vi(0), nil()), cons(vi(1), nil())});

  Schema hollow = schema_with("data Hollow");
  CHECK(enumerate_values(TypeExpr::named("Hollow"), cfg, hollow).empty());

  CHECK(enumerate_values(tint(), cfg, s).size() == 5);
  CHECK(enumerate_values(TypeExpr::prim(PrimType::Unit), cfg, s) ==
        std::vector<Value>{Value::unit()});
  CHECK_THROWS_AS(enumerate_values(TypeExpr::named("Wibble"), cfg, s), SchemaError);
  CHECK_THROWS_AS(enumerate_values(TypeExpr::param(0), cfg, s), SchemaError);
}

TEST_CASE("include_nan appends NaN to the double domain") {
  DomainConfig cfg;
  CHECK(prim_domain(PrimType::Double, cfg).size() == 3);
  cfg.include_nan = true;
  auto dom = prim_domain(PrimType::Double, cfg);
  REQUIRE(dom.size() == 4);
  CHECK(std::isnan(dom.back().d));
}

TEST_CASE("enumeration is duplicate-free and canonical") {
  Schema s = schema_with("data T a = MkT Int a (Maybe a) (List (List a))");
  DomainConfig cfg;
  cfg.int_domain = {0, 1};
  cfg.depth = 3;
  for (const char* text : {"List Int", "Maybe (List Int)", "Either Int Bool", "Nat",
                           "Triple Bool Bool Bool", "T Bool"}) {
    CAPTURE(text);
    auto parsed = parse_ground_type(text, s);
    auto values = enumerate_values(std::get<TypeExpr>(parsed), cfg, s);
    std::set<std::string> seen;
    for (const auto& v : values) CHECK(seen.insert(to_string(v)).second);
    auto again = enumerate_values(std::get<TypeExpr>(parsed), cfg, s);
    CHECK(values == again);
  }
}

TEST_CASE("enumeration at larger depth is a superset") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  cfg.int_domain = {0, 1};
  for (const char* text : {"List Int", "Nat", "Maybe Int"}) {
    for (int d = 1; d <= 3; ++d) {
      DomainConfig lo = cfg;
      lo.depth = d;
      DomainConfig hi = cfg;
      hi.depth = d + 1;
      auto parsed = std::get<TypeExpr>(parse_ground_type(text, s));
      auto small = enumerate_values(parsed, lo, s);
      auto large = enumerate_values(parsed, hi, s);
      std::set<std::string> big;
      for (const auto& v : large) big.insert(to_string(v));
      for (const auto& v : small) CHECK(big.count(to_string(v)) == 1);
    }
  }
}

TEST_CASE("function enumeration: exhaustive below the threshold") {
  DomainConfig cfg;
  auto bools = enumerate_functions(PrimType::Bool, PrimType::Bool, cfg);
  REQUIRE(bools.size() == 4);
  // Lexicographic in the output tuple: FF, FT, TF, TT.
  CHECK(bools[0].apply(Value::of_bool(false)) == Value::of_bool(false));
  CHECK(bools[0].apply(Value::of_bool(true)) == Value::of_bool(false));
  CHECK(bools[1].apply(Value::of_bool(false)) == Value::of_bool(false));
  CHECK(bools[1].apply(Value::of_bool(true)) == Value::of_bool(true));
  CHECK(bools[3].apply(Value::of_bool(true)) == Value::of_bool(true));

  DomainConfig two;
  two.int_domain = {0, 1};
  CHECK(enumerate_functions(PrimType::Int, PrimType::Int, two).size() == 4);
}

TEST_CASE("function enumeration: catalog above the threshold") {
  DomainConfig cfg;  // five ints: 5^5 = 3125 > 64
  auto fns = enumerate_functions(PrimType::Int, PrimType::Int, cfg);
  REQUIRE(fns.size() == 3);
  CHECK(fns[0].name == "id");
  CHECK(fns[1].name == "const (-2)");
  CHECK(fns[2].name == "succWrap");
  CHECK(fns[2].apply(vi(2)) == vi(-2));  // wraparound at the top
  CHECK(fns[0].apply(vi(1)) == vi(1));
}

TEST_CASE("gvalue enumeration mirrors the from image") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  RepShape shape = build_rep(*s.find("List"), {tint()});
  auto direct = enumerate_gvalues(shape, cfg, s);
  auto values = enumerate_values(TypeExpr::named("List", {tint()}), cfg, s);
  REQUIRE(direct.size() == values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    CHECK(direct[i] == from_value(s, values[i]));
  }
}

TEST_CASE("check_law counts pair cases over the value enumeration") {
  Schema s = Schema::with_builtins();
  Registry reg = Registry::with_builtins();
  DomainConfig cfg;
  cfg.int_domain = {0, 1};
  auto bundle = derive_bundle(s, "B", {}, Concept::Ord, reg);
  LawReport rep = check_law(LawId::OrdAnti, bundle.get(), cfg, s);
  CHECK(rep.outcome.status == CheckStatus::Pass);
  CHECK(rep.outcome.cases_checked == 16);  // 4 values, 4^2 pairs
  CHECK(!rep.outcome.truncated);
}

TEST_CASE("NaN breaks reflexivity and totality but not the vacuous laws") {
  Schema s = Schema::with_builtins();
  Registry reg = Registry::with_builtins();
  DomainConfig cfg;
  cfg.include_nan = true;
  const InstanceBundle& dbl = reg.require(Concept::Ord, "Double");
  LawReport refl = check_law(LawId::OrdRefl, &dbl, cfg, s);
  CHECK(refl.outcome.status == CheckStatus::Fail);
  REQUIRE(refl.outcome.counterexample.size() == 1);
  CHECK(std::isnan(refl.outcome.counterexample[0].d));
  CHECK(refl.outcome.cases_checked == 4);

  LawReport total = check_law(LawId::OrdTotal, &dbl, cfg, s);
  CHECK(total.outcome.status == CheckStatus::Fail);
  REQUIRE(total.outcome.counterexample.size() == 2);
  CHECK((std::isnan(total.outcome.counterexample[0].d) ||
         std::isnan(total.outcome.counterexample[1].d)));

  CHECK(check_law(LawId::OrdAnti, &dbl, cfg, s).outcome.status == CheckStatus::Pass);
  CHECK(check_law(LawId::OrdTrans, &dbl, cfg, s).outcome.status == CheckStatus::Pass);
}

TEST_CASE("monoid identity laws hold for the derived Triple instance") {
  Schema s = Schema::with_builtins();
  Registry reg = Registry::with_builtins();
  DomainConfig cfg;
  auto bundle = derive_bundle(s, "Triple", {tint(), tint(), tint()}, Concept::Monoid, reg);
  REQUIRE(bundle != nullptr);
  CHECK(bundle->empty() == Value::con("Triple", "MkTriple", {vi(0), vi(0), vi(0)}));
  CHECK(check_law(LawId::MonLIdent, bundle.get(), cfg, s).outcome.status == CheckStatus::Pass);
  CHECK(check_law(LawId::MonRIdent, bundle.get(), cfg, s).outcome.status == CheckStatus::Pass);
}

TEST_CASE("unsupported bundles report unsupported, never fail") {
  Schema s = Schema::with_builtins();
  Registry reg = Registry::with_builtins();
  DomainConfig cfg;
  auto bundle = derive_bundle(s, "Maybe", {tint()}, Concept::Semigroup, reg);
  CHECK(bundle == nullptr);
  LawReport rep = check_law(LawId::SgAssoc, bundle.get(), cfg, s);
  CHECK(rep.outcome.status == CheckStatus::Unsupported);
  CHECK(rep.outcome.cases_checked == 0);
}

TEST_CASE("vacuously true checks pass with zero cases") {
  Schema s = schema_with("data Hollow");
  Registry reg = Registry::with_builtins();
  DomainConfig cfg;
  auto bundle = derive_bundle(s, "Hollow", {}, Concept::Ord, reg);
  LawReport rep = check_law(LawId::OrdTrans, bundle.get(), cfg, s);
  CHECK(rep.outcome.status == CheckStatus::Pass);
  CHECK(rep.outcome.cases_checked == 0);
  for (const auto& r : check_iso(s, "Hollow", {}, cfg)) {
    CHECK(r.outcome.status == CheckStatus::Pass);
    CHECK(r.outcome.cases_checked == 0);
  }
}

TEST_CASE("cubic laws truncate deterministically at max_cases") {
  Schema s = Schema::with_builtins();
  Registry reg = Registry::with_builtins();
  DomainConfig cfg;
  cfg.max_cases = 1000;
  auto bundle = derive_bundle(s, "Triple", {tint(), tint(), tint()}, Concept::Ord, reg);
  LawReport rep = check_law(LawId::OrdTrans, bundle.get(), cfg, s);
  CHECK(rep.outcome.status == CheckStatus::Pass);
  CHECK(rep.outcome.cases_checked == 1000);
  CHECK(rep.outcome.truncated);
  // A failure inside the window is still found under truncation.
  LawReport bad = check_law(LawId::OrdAnti, sloppy_ord_bundle().get(), cfg, s);
  CHECK(bad.outcome.status == CheckStatus::Fail);
}

TEST_CASE("counterexamples are sound and canonical-first") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  auto bad = sloppy_ord_bundle();
  LawReport rep = check_law(LawId::OrdAnti, bad.get(), cfg, s);
  REQUIRE(rep.outcome.status == CheckStatus::Fail);
  // First failing pair in canonical order: (-2, -1).
  REQUIRE(rep.outcome.counterexample.size() == 2);
  CHECK(rep.outcome.counterexample[0].fields[0].i == -2);
  CHECK(rep.outcome.counterexample[1].fields[0].i == -1);
  CHECK(rep.outcome.cases_checked == 2);
  CHECK(!eval_law(LawId::OrdAnti, *bad, rep.outcome.counterexample,
                  rep.outcome.counterexample_fns));
}

TEST_CASE("counterexamples persist at larger depth") {
  // Scope monotonicity on a recursive carrier: sabotage the Int order under
  // a derived List instance.
  Schema s = Schema::with_builtins();
  Registry reg;
  auto bad_int = std::make_shared<InstanceBundle>();
  bad_int->concept_ = Concept::Ord;
  bad_int->type_name = "Int";
  bad_int->provenance = InstanceBundle::Provenance::BuiltinPrim;
  bad_int->eq = [](const Value& a, const Value& b) { return a.i == b.i; };
  bad_int->leq = [](const Value& a, const Value& b) { return a.i <= b.i + 1; };
  reg.add(bad_int);
  auto eq_int = std::make_shared<InstanceBundle>();
  eq_int->concept_ = Concept::Eq;
  eq_int->type_name = "Int";
  eq_int->provenance = InstanceBundle::Provenance::BuiltinPrim;
  eq_int->eq = [](const Value& a, const Value& b) { return a.i == b.i; };
  reg.add(eq_int);
  auto list = derive_bundle(s, "List", {tint()}, Concept::Ord, reg);

  DomainConfig cfg;
  cfg.int_domain = {0, 1, 2};
  cfg.depth = 2;
  LawReport shallow = check_law(LawId::OrdAnti, list.get(), cfg, s);
  REQUIRE(shallow.outcome.status == CheckStatus::Fail);
  cfg.depth = 3;
  LawReport deep = check_law(LawId::OrdAnti, list.get(), cfg, s);
  REQUIRE(deep.outcome.status == CheckStatus::Fail);
  CHECK(shallow.outcome.counterexample == deep.outcome.counterexample);
}

TEST_CASE("functor law checks use exhaustive Bool tables") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  for (const char* name : {"Maybe", "List", "Identity"}) {
    CAPTURE(name);
    Registry reg = Registry::with_builtins();
    auto bundle = derive_bundle(s, name, {}, Concept::Functor, reg);
    LawReport fun_id = check_law(LawId::FunId, bundle.get(), cfg, s);
    CHECK(fun_id.outcome.status == CheckStatus::Pass);
    LawReport fun_comp = check_law(LawId::FunCompose, bundle.get(), cfg, s);
    CHECK(fun_comp.outcome.status == CheckStatus::Pass);
    // 16 function pairs per container value.
    auto values = enumerate_values(TypeExpr::named(name, {TypeExpr::prim(PrimType::Bool)}),
                                   cfg, s);
    CHECK(fun_comp.outcome.cases_checked == 16 * values.size());
  }
}

TEST_CASE("a broken functor is caught with the witnessing functions") {
  auto bad = std::make_shared<InstanceBundle>();
  bad->concept_ = Concept::Functor;
  bad->type_name = "Identity";
  bad->fmap_with = [](const ValueFn& fn, const Value& v) {
    // Applies the function twice: composition still holds, identity fails.
    return Value::con("Identity", "Identity", {fn(fn(v.fields[0]))});
  };
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  LawReport rep = check_law(LawId::FunId, bad.get(), cfg, s);
  CHECK(rep.outcome.status == CheckStatus::Pass);  // id twice is id
  auto worse = std::make_shared<InstanceBundle>();
  worse->concept_ = Concept::Functor;
  worse->type_name = "Identity";
  worse->fmap_with = [](const ValueFn&, const Value& v) { return v; };
  LawReport comp = check_law(LawId::FunCompose, worse.get(), cfg, s);
  CHECK(comp.outcome.status == CheckStatus::Pass);  // constant map composes
  LawReport ident = check_law(LawId::FunId, worse.get(), cfg, s);
  CHECK(ident.outcome.status == CheckStatus::Pass);  // and preserves id
  auto swapper = std::make_shared<InstanceBundle>();
  swapper->concept_ = Concept::Functor;
  swapper->type_name = "Identity";
  swapper->fmap_with = [](const ValueFn& fn, const Value& v) {
    Value mapped = fn(v.fields[0]);
    mapped.b = !mapped.b;
    return Value::con("Identity", "Identity", {mapped});
  };
  LawReport swapped = check_law(LawId::FunId, swapper.get(), cfg, s);
  REQUIRE(swapped.outcome.status == CheckStatus::Fail);
  REQUIRE(swapped.outcome.counterexample_fns.size() == 1);
  CHECK(swapped.outcome.counterexample_fns[0].name == "id");
  CHECK(!eval_law(LawId::FunId, *swapper, swapped.outcome.counterexample,
                  swapped.outcome.counterexample_fns));
}

TEST_CASE("oracle equivalence across every applicable builtin concept") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  struct Entry {
    const char* type;
    std::vector<TypeExpr> args;
    std::vector<Concept> concepts;
  };
  std::vector<Entry> entries = {
      {"Identity", {tint()}, {Concept::Eq, Concept::Ord, Concept::Semigroup, Concept::Monoid}},
      {"Maybe", {tint()}, {Concept::Eq, Concept::Ord}},
      {"Either", {tint(), tint()}, {Concept::Eq, Concept::Ord}},
      {"List", {tint()}, {Concept::Eq, Concept::Ord}},
      {"Triple",
       {tint(), tint(), tint()},
       {Concept::Eq, Concept::Ord, Concept::Semigroup, Concept::Monoid}},
      {"Nat", {}, {Concept::Eq, Concept::Ord}},
      {"B", {}, {Concept::Eq, Concept::Ord}},
  };
  Registry reg = Registry::with_builtins();
  for (const auto& e : entries) {
    for (Concept c : e.concepts) {
      std::string label = std::string(e.type) + "/" + std::string(concept_name(c));
      CAPTURE(label);
      auto derived = derive_bundle(s, e.type, e.args, c, reg);
      REQUIRE(derived != nullptr);
      auto oracle = direct_oracle(e.type, e.args, c);
      LawReport rep = check_oracle_equiv(*derived, *oracle, cfg, s);
      CHECK(rep.outcome.status == CheckStatus::Pass);
      CHECK(!rep.outcome.truncated);
    }
  }
  for (const char* f : {"Identity", "Maybe", "List"}) {
    auto derived = derive_bundle(s, f, {}, Concept::Functor, reg);
    auto oracle = direct_oracle(f, {}, Concept::Functor);
    CHECK(check_oracle_equiv(*derived, *oracle, cfg, s).outcome.status == CheckStatus::Pass);
  }
  for (const char* f : {"Either", "Triple"}) {
    const DataDecl* decl = s.find(f);
    std::vector<TypeExpr> prefix(decl->param_count - 1, tint());
    auto derived = derive_bundle(s, f, prefix, Concept::Functor, reg);
    auto oracle = direct_oracle(f, prefix, Concept::Functor);
    CHECK(check_oracle_equiv(*derived, *oracle, cfg, s).outcome.status == CheckStatus::Pass);
  }
}

TEST_CASE("oracle equivalence flags a real divergence") {
  Schema s = Schema::with_builtins();
  Registry reg = Registry::with_builtins();
  DomainConfig cfg;
  auto derived = derive_bundle(s, "Identity", {tint()}, Concept::Ord, reg);
  LawReport rep = check_oracle_equiv(*derived, *sloppy_ord_bundle(), cfg, s);
  CHECK(rep.outcome.status == CheckStatus::Fail);
  REQUIRE(rep.outcome.counterexample.size() == 2);
}

TEST_CASE("check_iso passes for built-ins and exercises both generators") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  cfg.int_domain = {0, 1};
  auto reports = check_iso(s, "B", {}, cfg);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].law == LawId::IsoToFrom);
  CHECK(reports[0].outcome.cases_checked == 4);
  CHECK(reports[1].law == LawId::IsoFromTo);
  CHECK(reports[1].outcome.cases_checked == 8);  // from-image + direct enumerator
  CHECK(reports[2].law == LawId::FromInj);
  CHECK(reports[2].outcome.cases_checked == 16);
  for (const auto& r : reports) CHECK(r.outcome.status == CheckStatus::Pass);

  DomainConfig full;
  for (const auto& r : check_iso(s, "List", {tint()}, full)) {
    CHECK(r.outcome.status == CheckStatus::Pass);
  }
}

TEST_CASE("concept suites run the laws in canonical order") {
  Schema s = Schema::with_builtins();
  Registry reg = Registry::with_builtins();
  DomainConfig cfg;
  auto reports = run_concept_suite(s, "Nat", {}, Concept::Ord, cfg, reg);
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].law == LawId::OrdRefl);
  CHECK(reports[1].law == LawId::OrdTotal);
  CHECK(reports[2].law == LawId::OrdAnti);
  CHECK(reports[3].law == LawId::OrdTrans);
  for (const auto& r : reports) {
    CHECK(r.outcome.status == CheckStatus::Pass);
    CHECK(r.type_text == "Nat");
    CHECK(r.concept_text == "Ord");
  }
}

TEST_CASE("worker count does not change any report") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  cfg.include_nan = true;
  cfg.max_cases = 500;

  auto run_all = [&](int workers) {
    std::vector<LawReport> reports;
    Registry reg = Registry::with_builtins();
    for (Concept c : {Concept::Eq, Concept::Ord}) {
      for (const char* name : {"List", "Triple", "B"}) {
        const DataDecl* decl = s.find(name);
        std::vector<TypeExpr> args(decl->param_count, tint());
        auto rs = run_concept_suite(s, name, args, c, cfg, reg, workers);
        reports.insert(reports.end(), rs.begin(), rs.end());
      }
    }
    auto dbl = derive_bundle(s, "Identity", {TypeExpr::prim(PrimType::Double)}, Concept::Ord,
                             reg);
    reports.push_back(check_law(LawId::OrdRefl, dbl.get(), cfg, s, workers));
    reports.push_back(check_law(LawId::OrdTotal, dbl.get(), cfg, s, workers));
    auto bad = sloppy_ord_bundle();
    reports.push_back(check_law(LawId::OrdTrans, bad.get(), cfg, s, workers));
    return dump_reports(reports);
  };

  std::string one = run_all(1);
  CHECK(one == run_all(2));
  CHECK(one == run_all(8));
}

TEST_CASE("product, sum and iso closures hold for Ord") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;

  auto product = check_preservation(ClosureKind::Product,
                                    {{"Int", {}}, {"Bool", {}}}, Concept::Ord, cfg, s);
  REQUIRE(product.size() == 12);  // two component suites + composite suite
  for (const auto& r : product) CHECK(r.outcome.status == CheckStatus::Pass);
  // Composite rows follow the component rows.
  CHECK(product[0].type_text == "Int");
  CHECK(product[4].type_text == "Bool");
  CHECK(product[8].type_text == "ClosureProduct");

  auto sum = check_preservation(ClosureKind::Sum, {{"Nat", {}}, {"Bool", {}}}, Concept::Ord,
                                cfg, s);
  REQUIRE(sum.size() == 12);
  for (const auto& r : sum) CHECK(r.outcome.status == CheckStatus::Pass);

  auto iso = check_preservation(ClosureKind::Iso, {{"B", {}}}, Concept::Ord, cfg, s);
  REQUIRE(iso.size() == 9);  // oracle suite + rep suite + agreement row
  for (const auto& r : iso) CHECK(r.outcome.status == CheckStatus::Pass);
  CHECK(iso[4].type_text == "Rep B");
  CHECK(iso[8].law == LawId::OracleEquiv);
}

TEST_CASE("product closure matches a lexicographic pair oracle") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  Schema scratch = s;
  scratch.add({"PairIB", 0, {{"MkPairIB", {tint(), TypeExpr::prim(PrimType::Bool)}}}});
  Registry reg = Registry::with_builtins();
  auto bundle = derive_bundle(scratch, "PairIB", {}, Concept::Ord, reg);
  auto values = enumerate_values(TypeExpr::named("PairIB"), cfg, scratch);
  CHECK(values.size() == 10);
  auto pair_leq = [](const Value& a, const Value& b) {
    if (a.fields[0].i != b.fields[0].i) return a.fields[0].i <= b.fields[0].i;
    return !a.fields[1].b || b.fields[1].b;
  };
  for (const auto& x : values) {
    for (const auto& y : values) {
      CHECK(bundle->leq(x, y) == pair_leq(x, y));
    }
  }
}

TEST_CASE("sum closure matches a tagged-order oracle") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  Schema scratch = s;
  scratch.add({"NatOrBool", 0,
               {{"InL", {TypeExpr::named("Nat")}}, {"InR", {TypeExpr::prim(PrimType::Bool)}}}});
  Registry reg = Registry::with_builtins();
  auto bundle = derive_bundle(scratch, "NatOrBool", {}, Concept::Ord, reg);
  auto oracle_nat = direct_oracle("Nat", {}, Concept::Ord);
  auto values = enumerate_values(TypeExpr::named("NatOrBool"), cfg, scratch);
  auto tagged_leq = [&](const Value& a, const Value& b) {
    if (a.con_name == "InL" && b.con_name == "InR") return true;
    if (a.con_name == "InR" && b.con_name == "InL") return false;
    if (a.con_name == "InL") return oracle_nat->leq(a.fields[0], b.fields[0]);
    return !a.fields[0].b || b.fields[0].b;
  };
  for (const auto& x : values) {
    for (const auto& y : values) {
      CHECK(bundle->leq(x, y) == tagged_leq(x, y));
    }
  }
}

TEST_CASE("preservation reports a failing precondition instead of assuming it") {
  Schema s = Schema::with_builtins();
  DomainConfig cfg;
  cfg.include_nan = true;
  auto reports = check_preservation(ClosureKind::Product,
                                    {{"Double", {}}, {"Bool", {}}}, Concept::Ord, cfg, s);
  bool component_failed = false;
  for (const auto& r : reports) {
    if (r.type_text == "Double" && r.outcome.status == CheckStatus::Fail) {
      component_failed = true;
    }
  }
  CHECK(component_failed);
}

TEST_CASE("report document shape and determinism") {
  Schema s = Schema::with_builtins();
  Registry reg = Registry::with_builtins();
  DomainConfig cfg;
  auto reports = run_concept_suite(s, "B", {}, Concept::Ord, cfg, reg);
  auto doc = document_to_json(cfg, reports);
  CHECK(doc["tool_version"] == std::string(kToolVersion));
  CHECK(doc["config"]["depth"] == 3);
  CHECK(doc["reports"].size() == 4);
  CHECK(doc["summary"]["pass"] == 4);
  CHECK(doc["summary"]["fail"] == 0);
  auto doc2 = document_to_json(cfg, run_concept_suite(s, "B", {}, Concept::Ord, cfg, reg, 8));
  CHECK(doc.dump() == doc2.dump());
}
