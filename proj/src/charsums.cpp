#include "slce/charsums.hpp"

#include <utility>

#include "slce/errors.hpp"

namespace slce {

int quadratic_character(const PrimePowerField& field, const FieldElement& beta) {
    return field.eta_enc(uint32_t(field.encode(beta)));
}

CyclotomicContext CyclotomicContext::create(const PrimePowerField& field, int64_t d) {
    return create(field, d, field.primitive_element());
}

CyclotomicContext CyclotomicContext::create(const PrimePowerField& field, int64_t d,
                                            const FieldElement& alpha) {
    if (d < 1 || (field.q() - 1) % d != 0)
        throw NotADivisor("d = " + std::to_string(d) + " does not divide q-1");
    if (!field.is_primitive(alpha)) throw NotPrimitive("alpha is not primitive");
    return {&field, alpha, d, (field.q() - 1) / d};
}

namespace {

// log of the context's alpha in the field's canonical base; coprime to q-1
int64_t alpha_log(const CyclotomicContext& ctx) {
    return ctx.field->log_enc(uint32_t(ctx.field->encode(ctx.alpha)));
}

int64_t mod_inverse(int64_t a, int64_t n) {
    int64_t t0 = 0, t1 = 1, r0 = n, r1 = ((a % n) + n) % n;
    while (r1 != 0) {
        const int64_t q = r0 / r1;
        t0 -= q * t1;
        std::swap(t0, t1);
        r0 -= q * r1;
        std::swap(r0, r1);
    }
    return ((t0 % n) + n) % n;
}

}  // namespace

std::vector<FieldElement> cyclotomic_class(const CyclotomicContext& ctx, int64_t i) {
    if (i < 0 || i >= ctx.d) throw IndexOutOfRange("class index out of [0,d)");
    const PrimePowerField& F = *ctx.field;
    const int64_t q1 = F.q() - 1;
    const int64_t step = alpha_log(ctx);
    std::vector<FieldElement> cls;
    cls.reserve(size_t(ctx.f));
    int64_t j = (step * (i % q1)) % q1;
    const int64_t stride = (step * (ctx.d % q1)) % q1;
    for (int64_t k = 0; k < ctx.f; ++k) {
        cls.push_back(F.decode(F.pow_of_alpha(j)));
        j += stride;
        if (j >= q1) j -= q1;
    }
    return cls;
}

int64_t cyclotomic_number(const CyclotomicContext& ctx, int64_t l, int64_t m) {
    if (l < 0 || l >= ctx.d || m < 0 || m >= ctx.d)
        throw IndexOutOfRange("cyclotomic number index out of [0,d)");
    const PrimePowerField& F = *ctx.field;
    const int64_t q1 = F.q() - 1;
    const int64_t step = alpha_log(ctx);
    // walk C_l; the class of u w.r.t. ctx.alpha is (log(u) * step^{-1}) mod d
    const int64_t inv = mod_inverse(step, q1);
    int64_t count = 0;
    int64_t j = (step * (l % q1)) % q1;
    const int64_t stride = (step * (ctx.d % q1)) % q1;
    for (int64_t k = 0; k < ctx.f; ++k) {
        const uint32_t u = F.pow_of_alpha(j);
        const uint32_t u1 = F.add_enc(u, 1);
        if (u1 != 0 && (F.log_enc(u1) % q1) * inv % q1 % ctx.d == m) ++count;
        j += stride;
        if (j >= q1) j -= q1;
    }
    return count;
}

int64_t jacobsthal_I(const PrimePowerField& field, int64_t n, const FieldElement& a) {
    if (n < 1) throw InvalidArgs("jacobsthal sums need n >= 1");
    const int64_t q1 = field.q() - 1;
    const uint32_t aenc = uint32_t(field.encode(a));
    const int64_t step = n % q1;
    int64_t sum = 0, j = 0;
    for (int64_t i = 0; i < q1; ++i) {
        sum += field.eta_enc(field.add_enc(field.pow_of_alpha(j), aenc));
        j += step;
        if (j >= q1) j -= q1;
    }
    return sum;
}

int64_t jacobsthal_I_full(const PrimePowerField& field, int64_t n, const FieldElement& a) {
    return quadratic_character(field, a) + jacobsthal_I(field, n, a);
}

int64_t jacobsthal_H(const PrimePowerField& field, int64_t n, const FieldElement& a) {
    if (n < 1) throw InvalidArgs("jacobsthal sums need n >= 1");
    const int64_t q1 = field.q() - 1;
    const uint32_t aenc = uint32_t(field.encode(a));
    const int64_t step = n % q1;
    int64_t sum = 0, j = 0;
    for (int64_t i = 0; i < q1; ++i) {
        const int sign = (i & 1) ? -1 : 1;
        sum += sign * field.eta_enc(field.add_enc(field.pow_of_alpha(j), aenc));
        j += step;
        if (j >= q1) j -= q1;
    }
    return sum;
}

int64_t JacobsthalTable::unit_sum(uint32_t enc) const {
    if (!full_range_) throw IndexOutOfRange("table was not built full-range");
    return values_[enc];
}

int64_t JacobsthalTable::full_sum(uint32_t enc) const {
    return unit_sum(enc) + field_->eta_enc(enc);
}

int JacobsthalTable::unit_sum_mod4(uint32_t enc) const {
    return int(((unit_sum(enc) % 4) + 4) % 4);
}

bool JacobsthalTable::in_subgroup(uint32_t enc) const {
    // <alpha^d> is the unique subgroup of order (q-1)/d, so a^{(q-1)/d} = 1
    // iff d divides log(a)
    return field_->log_enc(enc) % n_ == 0;
}

JacobsthalTable jacobsthal_table(const CyclotomicContext& ctx, int64_t full_range_limit,
                                 bool with_h) {
    const PrimePowerField& F = *ctx.field;
    const int64_t q1 = F.q() - 1;
    JacobsthalTable t;
    t.field_ = &F;
    t.n_ = ctx.d;
    t.full_range_ = ctx.d <= full_range_limit;
    if (t.full_range_) {
        t.values_.assign(size_t(F.q()), 0);
        if (with_h) t.h_values_.emplace(size_t(F.q()), 0);
        for (int64_t enc = 1; enc < F.q(); ++enc) {
            const FieldElement a = F.decode(enc);
            t.values_[size_t(enc)] = int32_t(jacobsthal_I(F, ctx.d, a));
            if (with_h) (*t.h_values_)[size_t(enc)] = int32_t(jacobsthal_H(F, ctx.d, a));
        }
    }
    t.at_one_ = t.full_range_ ? t.values_[1] : jacobsthal_I(F, ctx.d, F.one());
    const int64_t step = ctx.field->log_enc(uint32_t(ctx.field->encode(ctx.alpha)));
    for (int64_t tt = 1; tt < ctx.d; ++tt) {
        const int64_t j = ((q1 - tt % q1) * step) % q1;  // log of alpha^{-t}
        const uint32_t enc = F.pow_of_alpha(j);
        t.at_neg_t_.push_back(t.full_range_ ? t.values_[enc]
                                            : jacobsthal_I(F, ctx.d, F.decode(enc)));
    }
    return t;
}

}  // namespace slce
