#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "slce/charsums.hpp"
#include "slce/slce.hpp"

namespace slce {

enum class TriState { Pass, Fail, NotApplicable };

const char* to_string(TriState t);

/// Decomposition q - 1 = 2^k * r with r odd, plus the hypotheses of the
/// subgroup-quantified criterion: r an odd prime with 2 a primitive root mod r
/// (equivalently, all_ones(r) irreducible over GF(2)) and k >= 2.
struct ApplicabilityProfile {
    int64_t q = 0;
    int64_t p = 0;
    int64_t m = 0;
    int64_t k = 0;
    int64_t r = 0;
    bool r_is_odd_prime = false;
    bool two_primitive_mod_r = false;
    bool applicable = false;
};

ApplicabilityProfile applicability(int64_t q);  // throws NotPrimePower

/// The divisibility criterion for g(x) = x^{d-1}+...+1 | gcd(x^{q-1}+1, S_q(x)):
/// I_d(1) = -d (mod 4) and I_d(alpha^{-t}) = 0 (mod 4) for 1 <= t <= d-1.
/// Requires d odd and 4 | f (PreconditionViolated otherwise).
bool lemma5_condition(const CyclotomicContext& ctx);
bool lemma5_condition(const CyclotomicContext& ctx, const JacobsthalTable& table);

/// Literal negation of lemma5_condition.
bool eq6_condition(const CyclotomicContext& ctx);

/// The original subgroup-quantified residue condition over all of F_q*:
/// some a in <alpha^r> with I_r(a) != -r (mod 4), or
/// some a outside with I_r(a) != 0 (mod 4).
/// Requires profile.applicable and ctx.d == profile.r (NotApplicable otherwise).
bool cor4_original_condition(const CyclotomicContext& ctx, const ApplicabilityProfile& profile);
bool cor4_original_condition(const CyclotomicContext& ctx, const ApplicabilityProfile& profile,
                             const JacobsthalTable& table);

/// q = x^2 + 4y^2 with x = 1 (mod 4), y > 0, gcd(x, q) = 1.
/// Defined when p = 1 (mod 4); NotApplicable otherwise.
struct ProperRepresentation {
    int64_t x = 0;
    int64_t y = 0;
    bool operator==(const ProperRepresentation&) const = default;
};

ProperRepresentation proper_representation(int64_t q);

/// Multiplicity-of-(x+1) facts:
///  (a) q = 5 (mod 8): multiplicity exactly 1;
///  (b) q = 1 (mod 8): multiplicity >= 2, and < 4 when the proper
///      representation exists and (q-1)/8 + y/2 is odd.
std::pair<TriState, TriState> lemma4_check(const PrimePowerField& field,
                                           const LinearComplexityResult& lc);

/// Biconditional: gcd = (x+1)^i with 1 <= i <= 2^k  <=>  eq6_condition.
bool corrected_corollary_verdict(const CyclotomicContext& ctx, const ApplicabilityProfile& profile,
                                 const LinearComplexityResult& lc);

/// Corrected feedback-polynomial form under eq6: k = 2 forces gcd = x+1;
/// k >= 3 forces gcd = (x+1)^i with i >= 2, and i <= 4 when the proper
/// representation applies and (2^{k-2} r + y)/2 is odd. k = 1 and the
/// eq6-false case are NotApplicable.
TriState corrected_theorem_verdict(const CyclotomicContext& ctx,
                                   const ApplicabilityProfile& profile,
                                   const LinearComplexityResult& lc,
                                   const std::optional<ProperRepresentation>& rep);

/// Aggregated per-q verdicts (d = r throughout).
struct TheoremVerdict {
    std::optional<bool> lemma5_holds;         // set when d odd and 4 | f
    std::optional<bool> eq6_holds;            // literal negation of lemma5
    std::optional<bool> cor4_original_holds;  // set when applicable
    bool s2_is_zero = false;
    bool g_divides_gcd = false;
    bool gcd_is_power_of_xplus1 = false;
    int64_t xplus1_multiplicity = 0;
    bool divergence = false;  // lemma5 and the original condition both hold
    TriState lemma4a_ok = TriState::NotApplicable;
    TriState lemma4b_ok = TriState::NotApplicable;
};

TheoremVerdict evaluate_theorems(const PrimePowerField& field, const SlceSequence& seq,
                                 const LinearComplexityResult& lc,
                                 const ApplicabilityProfile& profile);

}  // namespace slce
