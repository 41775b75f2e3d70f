#pragma once

#include "qact/verify.hpp"

namespace qact {

// Stable JSON rendering (schema qact-report-v1); same seed and corpus give
// byte-identical output.
Json report_json(const VerifyRun& run, const DrawPlan& plan, const VerifyOptions& opts);

// Human-readable per-case table plus summary.
std::string report_text(const VerifyRun& run, const DrawPlan& plan, const VerifyOptions& opts);

// The dim R / dim I / perturbation summary table, sorted by case id.
std::string table_text(const Corpus& corpus, const VerifyRun& run);

}  // namespace qact
