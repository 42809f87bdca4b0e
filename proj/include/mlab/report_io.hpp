#pragma once

#include "mlab/verifier.hpp"

#include <string>
#include <vector>

namespace mlab {

enum class ReportFormat { Json, Csv, Text };

/// Object with keys claim, params, expected, computed, verdict, elapsed_ms.
Json report_to_json(const VerificationReport& r);

/// "d=2;m=2;n=1;k=2;s=1"
std::string params_string(const VerificationReport& r, char sep = ';');

std::string render_json(const std::vector<VerificationReport>& reports);
/// Header claim,params,expected,computed,verdict,elapsed_ms.
std::string render_csv(const std::vector<VerificationReport>& reports);
std::string render_text(const std::vector<VerificationReport>& reports);
std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat format);

}  // namespace mlab
