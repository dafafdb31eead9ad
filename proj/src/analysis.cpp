#include "slce/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "slce/errors.hpp"

namespace slce {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

AnalysisReport analyze_q(int64_t q, const AnalyzeOptions& options) {
    if (q > options.max_q)
        throw BoundExceeded("q = " + std::to_string(q) + " exceeds the bound " +
                            std::to_string(options.max_q));
    const auto t_start = std::chrono::steady_clock::now();
    const ApplicabilityProfile prof = applicability(q);
    if (prof.p == 2) throw NotPrimePower(q);  // the sequence needs odd characteristic

    AnalysisReport rep;
    rep.q = q;
    rep.p = prof.p;
    rep.m = prof.m;
    rep.k = prof.k;
    rep.r = prof.r;
    rep.d = prof.r;
    rep.f = int64_t(1) << prof.k;

    const auto t_field = std::chrono::steady_clock::now();
    const PrimePowerField field = build_field(prof.p, prof.m, options.max_q);
    FieldElement alpha = field.primitive_element();
    if (options.alpha_encoding) {
        if (*options.alpha_encoding < 1 || *options.alpha_encoding >= q)
            throw NotPrimitive("alpha encoding out of range");
        alpha = field.decode(*options.alpha_encoding);
        if (!field.is_primitive(alpha)) throw NotPrimitive("alpha override is not primitive");
    }
    rep.primitive_element = field.encode(alpha);
    if (field.m() >= 2) rep.modulus = field.modulus_encoding();
    const double field_ms = ms_since(t_field);

    const auto t_lc = std::chrono::steady_clock::now();
    const SlceSequence seq = generate_slce(field, alpha);
    const LinearComplexityResult lc = analyze_lc(seq);
    rep.L = lc.L;
    rep.gcd_rendered = lc.gcd_factors.to_text();
    for (const auto& [poly, mult] : lc.gcd_factors.factors)
        rep.gcd_factors_hex.emplace_back(poly.to_hex(), mult);

    std::vector<uint8_t> two_periods(seq.bits);
    two_periods.insert(two_periods.end(), seq.bits.begin(), seq.bits.end());
    rep.bm_L = berlekamp_massey(two_periods).L;
    const double lc_ms = ms_since(t_lc);

    const auto t_char = std::chrono::steady_clock::now();
    const TheoremVerdict verdict = evaluate_theorems(field, seq, lc, prof);
    rep.lemma5_holds = verdict.lemma5_holds;
    rep.eq6_holds = verdict.eq6_holds;
    rep.cor4_original_holds = verdict.cor4_original_holds;
    rep.s2_is_zero = verdict.s2_is_zero;
    rep.divergence = verdict.divergence;
    rep.lemma4a = verdict.lemma4a_ok;
    rep.lemma4b = verdict.lemma4b_ok;
    if (prof.p % 4 == 1) rep.proper_rep = proper_representation(q);
    const double charsum_ms = ms_since(t_char);

    if (options.with_timings)
        rep.timings = ReportTimings{ms_since(t_start), field_ms, lc_ms, charsum_ms};
    return rep;
}

std::vector<int64_t> odd_prime_powers_in(int64_t min_q, int64_t max_q) {
    std::vector<int64_t> qs;
    for (int64_t q = std::max<int64_t>(min_q, 3) | 1; q <= max_q; q += 2) {
        try {
            const auto [p, m] = prime_power_decompose(q);
            if (p != 2) qs.push_back(q);
        } catch (const NotPrimePower&) {
        }
    }
    return qs;
}

std::vector<AnalysisReport> divergence_scan(int64_t min_q, int64_t max_q, int jobs,
                                            int64_t bound) {
    if (max_q > bound)
        throw BoundExceeded("scan upper bound " + std::to_string(max_q) +
                            " exceeds the configured limit " + std::to_string(bound));
    // an empty or reversed range yields an empty list
    const std::vector<int64_t> qs = odd_prime_powers_in(std::max<int64_t>(min_q, 5), max_q);
    std::vector<AnalysisReport> reports(qs.size());

    const int workers = std::max(1, jobs);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mutex;

    auto work = [&] {
        for (size_t i = next.fetch_add(1); i < qs.size(); i = next.fetch_add(1)) {
            try {
                AnalyzeOptions opt;
                opt.max_q = bound;
                reports[i] = analyze_q(qs[i], opt);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed = true;
                if (error_message.empty())
                    error_message = "q = " + std::to_string(qs[i]) + ": " + e.what();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        pool.reserve(size_t(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failed) throw NotFound("scan failed at " + error_message);
    return reports;
}

}  // namespace slce
