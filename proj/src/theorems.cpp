#include "slce/theorems.hpp"

#include <algorithm>
#include <cmath>

#include "slce/errors.hpp"

namespace slce {

const char* to_string(TriState t) {
    switch (t) {
        case TriState::Pass: return "pass";
        case TriState::Fail: return "fail";
        default: return "not_applicable";
    }
}

ApplicabilityProfile applicability(int64_t q) {
    if (q < 5) throw NotPrimePower(q);
    const auto [p, m] = prime_power_decompose(q);
    ApplicabilityProfile prof;
    prof.q = q;
    prof.p = p;
    prof.m = m;
    int64_t r = q - 1;
    while (r % 2 == 0) {
        r /= 2;
        ++prof.k;
    }
    prof.r = r;
    prof.r_is_odd_prime = r >= 3 && is_prime(r);
    if (prof.r_is_odd_prime) {
        int64_t order = 1, t = 2 % r;
        while (t != 1) {
            t = t * 2 % r;
            ++order;
        }
        prof.two_primitive_mod_r = order == r - 1;
    }
    prof.applicable = prof.k >= 2 && prof.r_is_odd_prime && prof.two_primitive_mod_r;
    return prof;
}

namespace {

void check_lemma5_preconditions(const CyclotomicContext& ctx) {
    if (ctx.d % 2 == 0) throw PreconditionViolated("d must be odd");
    if (ctx.f % 4 != 0) throw PreconditionViolated("4 must divide f = (q-1)/d");
}

bool residue_is(int64_t value, int64_t target) { return ((value - target) % 4 + 4) % 4 == 0; }

}  // namespace

bool lemma5_condition(const CyclotomicContext& ctx, const JacobsthalTable& table) {
    check_lemma5_preconditions(ctx);
    if (!residue_is(table.at_one(), -ctx.d)) return false;
    for (int64_t v : table.at_alpha_neg_t())
        if (!residue_is(v, 0)) return false;
    return true;
}

bool lemma5_condition(const CyclotomicContext& ctx) {
    check_lemma5_preconditions(ctx);
    const PrimePowerField& F = *ctx.field;
    if (!residue_is(jacobsthal_I(F, ctx.d, F.one()), -ctx.d)) return false;
    const int64_t q1 = F.q() - 1;
    const int64_t step = F.log_enc(uint32_t(F.encode(ctx.alpha)));
    for (int64_t t = 1; t < ctx.d; ++t) {
        const uint32_t enc = F.pow_of_alpha((q1 - t) * step % q1);
        if (!residue_is(jacobsthal_I(F, ctx.d, F.decode(enc)), 0)) return false;
    }
    return true;
}

bool eq6_condition(const CyclotomicContext& ctx) { return !lemma5_condition(ctx); }

namespace {

bool cor4_impl(const CyclotomicContext& ctx, const ApplicabilityProfile& profile,
               const JacobsthalTable* table) {
    if (!profile.applicable) throw NotApplicable("q is outside the corollary's hypotheses");
    if (ctx.d != profile.r) throw NotApplicable("context order must equal the odd prime r");
    const PrimePowerField& F = *ctx.field;
    for (int64_t enc = 1; enc < F.q(); ++enc) {
        const int64_t v = table && table->full_range()
                              ? table->unit_sum(uint32_t(enc))
                              : jacobsthal_I(F, ctx.d, F.decode(enc));
        const bool in_sub = F.log_enc(uint32_t(enc)) % ctx.d == 0;
        if (in_sub && !residue_is(v, -ctx.d)) return true;
        if (!in_sub && !residue_is(v, 0)) return true;
    }
    return false;
}

}  // namespace

bool cor4_original_condition(const CyclotomicContext& ctx, const ApplicabilityProfile& profile) {
    return cor4_impl(ctx, profile, nullptr);
}

bool cor4_original_condition(const CyclotomicContext& ctx, const ApplicabilityProfile& profile,
                             const JacobsthalTable& table) {
    return cor4_impl(ctx, profile, &table);
}

ProperRepresentation proper_representation(int64_t q) {
    const auto [p, m] = prime_power_decompose(q);
    if (p % 4 != 1)
        throw NotApplicable("proper representation requires p = 1 (mod 4), got p = " +
                            std::to_string(p));
    for (int64_t y = 1; 4 * y * y < q; ++y) {
        const int64_t x2 = q - 4 * y * y;
        const auto x0 = int64_t(std::sqrt(double(x2)));
        for (int64_t x = std::max<int64_t>(x0 - 1, 0); x <= x0 + 1; ++x) {
            if (x * x != x2) continue;
            if (x % p == 0) break;  // gcd(x, q) must be 1
            return {x % 4 == 1 ? x : -x, y};
        }
    }
    throw NotFound("no proper representation found");  // guaranteed to exist when applicable
}

std::pair<TriState, TriState> lemma4_check(const PrimePowerField& field,
                                           const LinearComplexityResult& lc) {
    const int64_t q = field.q();
    const int64_t mult = multiplicity(lc.gcd_poly, all_ones(2));
    TriState a = TriState::NotApplicable, b = TriState::NotApplicable;
    if (q % 8 == 5) a = (mult == 1) ? TriState::Pass : TriState::Fail;
    if (q % 8 == 1) {
        bool ok = mult >= 2;
        if (field.p() % 4 == 1) {
            const ProperRepresentation rep = proper_representation(q);
            const int64_t f = (q - 1) / 8;
            if ((f + rep.y / 2) % 2 != 0) ok = ok && mult < 4;
        }
        b = ok ? TriState::Pass : TriState::Fail;
    }
    return {a, b};
}

namespace {

bool gcd_is_pure_power(const LinearComplexityResult& lc, int64_t max_exponent) {
    const int64_t deg = lc.gcd_poly.degree();
    if (deg < 1 || deg > max_exponent) return false;
    return multiplicity(lc.gcd_poly, all_ones(2)) == deg;
}

}  // namespace

bool corrected_corollary_verdict(const CyclotomicContext& ctx, const ApplicabilityProfile& profile,
                                 const LinearComplexityResult& lc) {
    if (!profile.applicable) throw NotApplicable("q is outside the corollary's hypotheses");
    const bool pure = gcd_is_pure_power(lc, int64_t(1) << profile.k);
    return pure == eq6_condition(ctx);
}

TriState corrected_theorem_verdict(const CyclotomicContext& ctx,
                                   const ApplicabilityProfile& profile,
                                   const LinearComplexityResult& lc,
                                   const std::optional<ProperRepresentation>& rep) {
    if (profile.k < 1 || !profile.r_is_odd_prime || !profile.two_primitive_mod_r)
        throw NotApplicable("q is outside the theorem's hypotheses");
    if (profile.k == 1) return TriState::NotApplicable;  // no stated form for k = 1
    if (!eq6_condition(ctx)) return TriState::NotApplicable;
    const int64_t deg = lc.gcd_poly.degree();
    const int64_t mult = multiplicity(lc.gcd_poly, all_ones(2));
    const bool pure = deg >= 1 && mult == deg;
    if (profile.k == 2) return (pure && deg == 1) ? TriState::Pass : TriState::Fail;
    bool ok = pure && mult >= 2;
    if (rep) {
        const int64_t half = ((int64_t(1) << (profile.k - 2)) * profile.r + rep->y) / 2;
        if (half % 2 != 0) ok = ok && mult <= 4;
    }
    return ok ? TriState::Pass : TriState::Fail;
}

TheoremVerdict evaluate_theorems(const PrimePowerField& field, const SlceSequence& seq,
                                 const LinearComplexityResult& lc,
                                 const ApplicabilityProfile& profile) {
    TheoremVerdict v;
    const int64_t r = profile.r;
    v.xplus1_multiplicity = multiplicity(lc.gcd_poly, all_ones(2));
    v.gcd_is_power_of_xplus1 =
        lc.gcd_poly.degree() >= 1 && v.xplus1_multiplicity == lc.gcd_poly.degree();
    v.s2_is_zero = s2_polynomial(seq, r).is_zero();
    v.g_divides_gcd = rem(lc.gcd_poly, all_ones(r)).is_zero();

    if (profile.k >= 2) {
        const CyclotomicContext ctx = CyclotomicContext::create(field, r, seq.alpha);
        if (profile.applicable) {
            const JacobsthalTable table = jacobsthal_table(ctx);
            v.lemma5_holds = lemma5_condition(ctx, table);
            v.cor4_original_holds = cor4_original_condition(ctx, profile, table);
        } else {
            v.lemma5_holds = lemma5_condition(ctx);
        }
        v.eq6_holds = !*v.lemma5_holds;
    }
    v.divergence = v.lemma5_holds.value_or(false) && v.cor4_original_holds.value_or(false);

    const auto [a, b] = lemma4_check(field, lc);
    v.lemma4a_ok = a;
    v.lemma4b_ok = b;
    return v;
}

}  // namespace slce
