#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bcvw/herm_forms.hpp"
#include "bcvw/lie_algebra.hpp"
#include "bcvw/presentation.hpp"
#include "bcvw/ps_model.hpp"

namespace bcvw {

using Json = nlohmann::ordered_json;

inline Json relationReportJson(const RelationReport& rep) {
  Json out = Json::array();
  for (const auto& e : rep.entries) {
    Json j;
    j["relation_id"] = e.id;
    j["latex_form"] = e.latex;
    j["status"] = e.status;
    if (!e.variant.empty()) j["holds_as"] = e.variant;
    if (!e.derived.empty()) {
      Json d;
      for (const auto& [k, v] : e.derived) d[k] = v;
      j["derived_constants"] = d;
    }
    out.push_back(std::move(j));
  }
  return out;
}

// paper-table values vs the derived constants, with explicit flags for the
// known sign/normalization mismatches
inline Json constantComparisonJson(const GroupSpec& spec, const GaussRat& m0Derived,
                                   const std::string& m1Derived) {
  Json out;
  GaussRat m0Paper = spec.family == Family::Sp ? GaussRat(-spec.n) : GaussRat(spec.halfSum());
  std::string m1Paper = spec.family == Family::Sp ? "0" : GaussRat(spec.p - spec.q).str();
  out["m0_derived"] = m0Derived.str();
  out["m0_paper_table"] = m0Paper.str();
  out["m0_abs_match"] = (m0Derived == m0Paper || m0Derived == -m0Paper);
  out["m1_derived"] = m1Derived;
  out["m1_paper_table"] = m1Paper;
  GaussRat m1d = GaussRat::parse(m1Derived);
  GaussRat m1p = GaussRat::parse(m1Paper);
  out["m1_abs_match"] = (m1d == m1p || m1d == -m1p);
  return out;
}

inline Json quotientConstantsJson(const GroupSpec& spec, const QuotientConstants& qc,
                                  KChar mu) {
  Json out;
  out["A"] = qc.A.str();
  out["B"] = qc.B.str();
  out["r_derived"] = qc.rShift.str();
  out["c_derived"] = qc.cHecke.str();
  out["mu"] = kcharStr(mu);
  // Table muconstants values
  if (spec.family == Family::Sp) {
    out["r_paper_table"] = mu == KChar::Triv ? "0" : "1";
    out["c_paper_table"] = GaussRat(-spec.n).str();
  } else {
    out["r_paper_table"] = GaussRat(spec.p + spec.q, 2).str();
    out["c_paper_table"] = GaussRat(spec.p - spec.q, 2).str();
  }
  return out;
}

}  // namespace bcvw
