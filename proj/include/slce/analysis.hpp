#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slce/theorems.hpp"

namespace slce {

struct ReportTimings {
    double total_ms = 0;
    double field_ms = 0;
    double lc_ms = 0;
    double charsum_ms = 0;
    bool operator==(const ReportTimings&) const = default;
};

/// One per-q record; the JSON schema mirrors these fields exactly.
struct AnalysisReport {
    int64_t q = 0, p = 0, m = 0;
    int64_t k = 0, r = 0;
    int64_t d = 0, f = 0;  // d = r (odd part of q-1), f = 2^k
    int64_t primitive_element = 0;      // encoding
    std::optional<int64_t> modulus;     // encoding incl. leading term; null for m = 1
    std::string gcd_rendered;
    std::vector<std::pair<std::string, int64_t>> gcd_factors_hex;  // (hex, multiplicity)
    int64_t L = 0;
    std::optional<bool> lemma5_holds, eq6_holds, cor4_original_holds;
    bool s2_is_zero = false;
    bool divergence = false;
    TriState lemma4a = TriState::NotApplicable;
    TriState lemma4b = TriState::NotApplicable;
    std::optional<ProperRepresentation> proper_rep;
    int64_t bm_L = 0;
    std::optional<ReportTimings> timings;

    bool operator==(const AnalysisReport&) const = default;
};

struct AnalyzeOptions {
    std::optional<int64_t> alpha_encoding;  // override the canonical primitive element
    bool with_timings = false;
    int64_t max_q = PrimePowerField::kDefaultBound;
};

/// Full per-q pipeline: field, SLCE sequence, gcd-route linear complexity,
/// all verdicts, and the Berlekamp-Massey cross-check on two periods.
AnalysisReport analyze_q(int64_t q, const AnalyzeOptions& options = {});

/// One report per odd prime power in [min_q, max_q], sorted by q.
/// Work is distributed over `jobs` threads; output does not depend on jobs.
std::vector<AnalysisReport> divergence_scan(int64_t min_q, int64_t max_q, int jobs = 1,
                                            int64_t bound = PrimePowerField::kDefaultBound);

std::vector<int64_t> odd_prime_powers_in(int64_t min_q, int64_t max_q);

}  // namespace slce
