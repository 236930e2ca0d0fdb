#pragma once

#include <optional>
#include <string_view>

namespace lawforge {

enum class LawId {
  EqRefl,
  EqSym,
  EqTrans,
  OrdRefl,
  OrdTotal,
  OrdAnti,
  OrdTrans,
  SgAssoc,
  MonLIdent,
  MonRIdent,
  FunId,
  FunCompose,
  IsoToFrom,
  IsoFromTo,
  FromInj,
  OracleEquiv,
};

// Number of quantified values: 1 for Refl-like laws, 2 for Anti/Total/Sym,
// 3 for Trans-like laws.
constexpr int law_arity(LawId law) {
  switch (law) {
    case LawId::EqRefl:
    case LawId::OrdRefl:
    case LawId::MonLIdent:
    case LawId::MonRIdent:
    case LawId::FunId:
    case LawId::FunCompose:
    case LawId::IsoToFrom:
    case LawId::IsoFromTo:
      return 1;
    case LawId::EqSym:
    case LawId::OrdTotal:
    case LawId::OrdAnti:
    case LawId::FromInj:
    case LawId::OracleEquiv:
      return 2;
    case LawId::EqTrans:
    case LawId::OrdTrans:
    case LawId::SgAssoc:
      return 3;
  }
  return 1;
}

constexpr std::string_view law_name(LawId law) {
  switch (law) {
    case LawId::EqRefl: return "EqRefl";
    case LawId::EqSym: return "EqSym";
    case LawId::EqTrans: return "EqTrans";
    case LawId::OrdRefl: return "OrdRefl";
    case LawId::OrdTotal: return "OrdTotal";
    case LawId::OrdAnti: return "OrdAnti";
    case LawId::OrdTrans: return "OrdTrans";
    case LawId::SgAssoc: return "SgAssoc";
    case LawId::MonLIdent: return "MonLIdent";
    case LawId::MonRIdent: return "MonRIdent";
    case LawId::FunId: return "FunId";
    case LawId::FunCompose: return "FunCompose";
    case LawId::IsoToFrom: return "IsoToFrom";
    case LawId::IsoFromTo: return "IsoFromTo";
    case LawId::FromInj: return "FromInj";
    case LawId::OracleEquiv: return "OracleEquiv";
  }
  return "?";
}

std::optional<LawId> law_from_name(std::string_view name);

}  // namespace lawforge
