#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bockstein/classifier.hpp"
#include "bockstein/expr.hpp"
#include "bockstein/theorems.hpp"

namespace bockstein {

enum class Format : std::uint8_t { text, json };

// Renderers for the CLI/C-API output records. JSON documents use fixed
// field names (kind, outcome, attribution, dims, n, checked, violations,
// elapsed_ms, ...) so they can be re-parsed by machines.
std::string render_eval(const EvalValue& v, Format f);
std::string render_verdict(const Verdict& v, const IntersectionQuery& q, Format f);
std::string render_report(const VerificationReport& r, Format f);
std::string render_atlas(const std::vector<AtlasRow>& rows, unsigned max_n, Format f);
std::string render_realizable(const std::optional<RealizabilityWitness>& w, Format f);

}  // namespace bockstein
