#pragma once

// Report generation for the command surface. Every subcommand produces either
// a human-readable text block or a machine-readable JSON document with
// top-level fields {command, input, result, diagnostics}; the JSON form is
// canonical (keys sorted, two-space indent, rationals as "p/q" strings, no
// floating point, trailing newline).

#include "model.hpp"

#include <string>

namespace qtorb {

struct ReportOptions {
  bool json = false;
};

// Shared argument parsers (throw InvalidArgument on malformed input).
// Faces: comma-separated facet names ("F1,F5"); "P" or "" is the whole
// polytope. Lambda0: comma-separated integers ("1,1,1,1"). Sectors:
// "<face>:<lattice point>" ("F1,F5:1,1,1,1") or "untwisted".
Face parse_face_arg(const CombinatorialPolytope& p, const std::string& text);
IntVec parse_lambda0_arg(const std::string& text, int dim);
TwistedSector parse_sector_arg(const CharacteristicModel& m, const std::string& text);

// validate runs on raw file text so that broken files still get a report;
// *valid receives the outcome.
std::string validate_report_text(const std::string& file_text, const ReportOptions& opt,
                                 bool* valid);

std::string info_report(const CharacteristicModel& m, const ReportOptions& opt);
std::string sectors_report(const CharacteristicModel& m, const ReportOptions& opt);
std::string betti_report(const CharacteristicModel& m, const ReportOptions& opt);
std::string euler_report(const CharacteristicModel& m, const ReportOptions& opt);
std::string quasi_sl_report_text(const CharacteristicModel& m, const ReportOptions& opt);

// blowup/resolve also hand back the resulting model (when out_model != null)
// so callers can serialize it.
std::string blowup_report(const CharacteristicModel& m, const std::string& face_arg,
                          const std::string& lambda0_arg, const ReportOptions& opt,
                          CharacteristicModel* out_model);
std::string crepant_candidates_report(const CharacteristicModel& m,
                                      const std::string& face_arg,
                                      const ReportOptions& opt);
std::string mckay_report_text(const CharacteristicModel& m, const std::string& face_arg,
                              const std::string& lambda0_arg, const ReportOptions& opt);
std::string resolve_report(const CharacteristicModel& m, const ReportOptions& opt,
                           CharacteristicModel* out_model);
std::string product_report(const CharacteristicModel& m, const std::string& s1_arg,
                           const std::string& s2_arg, const ReportOptions& opt);

} // namespace qtorb
