#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lawforge/derive.hpp"
#include "lawforge/law_id.hpp"

namespace lawforge {

// Finite check-time domains: the bounded stand-in for the laws' universal
// quantifiers. The bool domain is fixed to {false, true}.
struct DomainConfig {
  std::vector<std::int64_t> int_domain{-2, -1, 0, 1, 2};
  std::vector<char> char_domain{'a', 'b'};
  std::vector<double> double_domain{-1.0, 0.0, 1.5};
  bool include_nan = false;  // appends NaN to the double domain
  int depth = 3;             // max constructor nesting
  std::uint64_t max_cases = 200000;
};

enum class CheckStatus { Pass, Fail, Unsupported };

constexpr std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unsupported: return "unsupported";
  }
  return "?";
}

struct CheckOutcome {
  CheckStatus status = CheckStatus::Pass;
  std::uint64_t cases_checked = 0;
  bool truncated = false;  // max_cases cut the tuple space short
  // First failing tuple in canonical enumeration order.
  std::vector<Value> counterexample;
  std::vector<FnRef> counterexample_fns;  // functor laws only
};

struct LawReport {
  std::string type_text;     // "List Int"; functor instances "Either Int"
  std::string concept_text;  // "Eq".."Functor", "Iso", "Oracle"
  LawId law = LawId::EqRefl;
  CheckOutcome outcome;
  double wall_ms = 0.0;  // informational; excluded from JSON documents
};

std::vector<Value> prim_domain(PrimType p, const DomainConfig& cfg);

// Canonical bounded-exhaustive enumeration: primitives yield their domain;
// a declared type at depth d yields, per constructor in declaration order,
// the cross product of its field enumerations at depth d-1 (first field
// most significant); depth 0 of a declared type yields nothing.
std::vector<Value> enumerate_values(const TypeExpr& ground, const DomainConfig& cfg,
                                    const Schema& schema);

// All total lookup tables dom -> cod in lexicographic order when there are
// at most 64, otherwise a fixed catalog (identity, constant, successor with
// wraparound for Int, negation for Bool).
std::vector<FnRef> enumerate_functions(PrimType dom, PrimType cod, const DomainConfig& cfg);

// Shape-conforming representation values generated without from(); K1
// payloads are enumerated one constructor level down, mirroring from's
// image of the source enumeration.
std::vector<GValue> enumerate_gvalues(const RepShape& shape, const DomainConfig& cfg,
                                      const Schema& schema);

// The single law predicate, re-evaluable on a reported counterexample.
// values has law_arity(law) entries; fns carries the identity function for
// FunId and (f, g) for FunCompose.
bool eval_law(LawId law, const InstanceBundle& bundle, const std::vector<Value>& values,
              const std::vector<FnRef>& fns);

// Checks one law over the canonical tuple enumeration, stopping at the
// first failure or at cfg.max_cases. A null bundle is the typed Unsupported
// verdict. The outcome is identical for any worker count.
LawReport check_law(LawId law, const InstanceBundle* bundle, const DomainConfig& cfg,
                    const Schema& schema, int workers = 1);

// Derived-vs-direct agreement over every enumerated input tuple of the
// bundles' concept.
LawReport check_oracle_equiv(const InstanceBundle& derived, const InstanceBundle& oracle,
                             const DomainConfig& cfg, const Schema& schema, int workers = 1);

// IsoToFrom, IsoFromTo, FromInj for one declared ground type. IsoFromTo
// draws representation values both from from() over the enumeration and
// from the independent direct enumerator.
std::vector<LawReport> check_iso(const Schema& schema, const std::string& type_name,
                                 const std::vector<TypeExpr>& ground_args,
                                 const DomainConfig& cfg, int workers = 1);

std::vector<LawId> concept_laws(Concept c);

// Derives the generic bundle and runs the concept's laws in LawId order.
std::vector<LawReport> run_concept_suite(const Schema& schema, const std::string& type_name,
                                         const std::vector<TypeExpr>& ground_args, Concept c,
                                         const DomainConfig& cfg, Registry& reg,
                                         int workers = 1);

enum class ClosureKind { Product, Sum, Iso };

struct ClosureComponent {
  std::string type_name;  // a primitive tag or a declared type name
  std::vector<TypeExpr> ground_args;
};

// Empirical model-theoretic closure witness. Component suites run first
// (precondition failures are reported, not assumed away); then the suite of
// the composed instance: a fresh single-constructor product declaration, a
// fresh two-constructor sum declaration, or — for Iso — the generic
// instance transported through from/to, checked against the component's
// direct oracle.
std::vector<LawReport> check_preservation(ClosureKind kind,
                                          const std::vector<ClosureComponent>& components,
                                          Concept c, const DomainConfig& cfg,
                                          const Schema& schema, int workers = 1);

}  // namespace lawforge
