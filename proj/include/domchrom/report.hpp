#pragma once

#include <string>

#include <json.hpp>

#include "domchrom/coloring.hpp"
#include "domchrom/ops.hpp"
#include "domchrom/solver.hpp"
#include "domchrom/suite.hpp"
#include "domchrom/verify.hpp"

namespace domchrom {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "domchrom";
inline constexpr const char* kToolVersion = "0.1.0";

/// {"kind": ..., "edge": [u, v] | "vertex": v | "k": k}
Json to_json(const OperationDescriptor& op);
/// {"k": k, "colors": [...]}
Json to_json(const Coloring& c);
/// Coloring fields plus "dominators" (one vertex per class).
Json to_json(const DominatedColoringCertificate& cert);
/// Coloring fields plus "witnesses" (one 1-based color per vertex).
Json to_json(const TotalDominatorCertificate& cert);
Json to_json(const VerificationRecord& rec);
Json to_json(const TheoremSummary& s);
/// Config echo. The worker count is reported under "timing" instead, so the
/// body does not depend on it.
Json to_json(const SuiteConfig& config);

/// Top-level keys: tool, config, records, summary, per_theorem, graphs_scanned, timing.
Json suite_report_json(const SuiteReport& report);
Json conjecture_report_json(const ConjectureReport& report);
Json sharpness_report_json(const SharpnessReport& report);

Json solve_json(const Graph& g, const ChromaticResult& r);
Json solve_json(const Graph& g, const DominatedResult& r);
Json solve_json(const Graph& g, const TotalDominatorResult& r);

/// Copy without the top-level "timing" member.
Json report_body(Json report);

/// One row per theorem plus a "total" row.
std::string suite_summary_csv(const SuiteReport& report);

std::string suite_report_plain(const SuiteReport& report);
std::string conjecture_report_plain(const ConjectureReport& report);
std::string sharpness_report_plain(const SharpnessReport& report);

}  // namespace domchrom
