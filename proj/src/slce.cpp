#include "slce/slce.hpp"

#include <bit>

#include "slce/errors.hpp"

namespace slce {

SlceSequence generate_slce(const PrimePowerField& field, const FieldElement& alpha) {
    if (!field.is_primitive(alpha)) throw NotPrimitive("alpha is not a primitive element");
    const int64_t q1 = field.q() - 1;
    const int64_t step = field.log_enc(uint32_t(field.encode(alpha)));
    SlceSequence seq{&field, alpha, std::vector<uint8_t>(size_t(q1), 0), q1};
    int64_t j = 0;
    for (int64_t i = 0; i < q1; ++i) {
        const uint32_t v = field.add_enc(field.pow_of_alpha(j), 1);
        seq.bits[size_t(i)] = field.eta_enc(v) == -1 ? 1 : 0;
        j += step;
        if (j >= q1) j -= q1;
    }
    return seq;
}

SlceSequence generate_slce(const PrimePowerField& field) {
    return generate_slce(field, field.primitive_element());
}

Gf2Poly sequence_polynomial(const SlceSequence& seq) { return Gf2Poly::from_bits(seq.bits); }

LinearComplexityResult analyze_lc(const SlceSequence& seq) {
    const Gf2Poly s = sequence_polynomial(seq);
    if (s.is_zero()) throw ZeroSequence();
    const Gf2Poly xn1 = Gf2Poly::monomial(seq.period) + Gf2Poly::one();
    LinearComplexityResult res;
    res.gcd_poly = gcd(xn1, s);
    res.L = seq.period - res.gcd_poly.degree();
    res.feedback_poly = divmod(xn1, res.gcd_poly).quotient;
    if (res.gcd_poly.is_one())
        res.gcd_factors = FactorizationResult{{}, true};  // empty product
    else
        res.gcd_factors = factorize(res.gcd_poly);
    return res;
}

BmResult berlekamp_massey(std::span<const uint8_t> bits) {
    const int64_t n_bits = int64_t(bits.size());
    const size_t nw = size_t(n_bits / 64) + 2;
    // c is the current connection polynomial, cs = c >> 1 kept in sync;
    // w is the bit window with bit j = bits[n-1-j]
    std::vector<uint64_t> c(nw, 0), b(nw, 0), cs(nw, 0), w(nw, 0), tmp;
    c[0] = b[0] = 1;
    int64_t L = 0, m = 1;

    auto xor_shifted = [](std::vector<uint64_t>& dst, const std::vector<uint64_t>& src,
                          int64_t shift) {
        const size_t ws = size_t(shift / 64);
        const int bs = int(shift % 64);
        if (bs == 0) {
            for (size_t i = 0; i + ws < dst.size(); ++i) dst[i + ws] ^= src[i];
        } else {
            uint64_t carry = 0;
            for (size_t i = 0; i + ws < dst.size(); ++i) {
                dst[i + ws] ^= (src[i] << bs) | carry;
                carry = src[i] >> (64 - bs);
            }
        }
    };

    for (int64_t n = 0; n < n_bits; ++n) {
        uint64_t acc = 0;
        const size_t lw = size_t(L / 64) + 1;
        for (size_t j = 0; j < lw; ++j) acc ^= cs[j] & w[j];
        const int d = (bits[size_t(n)] & 1) ^ (std::popcount(acc) & 1);
        if (d) {
            if (2 * L <= n) {
                tmp = c;
                xor_shifted(c, b, m);
                xor_shifted(cs, b, m - 1);
                L = n + 1 - L;
                b = std::move(tmp);
                m = 1;
            } else {
                xor_shifted(c, b, m);
                xor_shifted(cs, b, m - 1);
                ++m;
            }
        } else {
            ++m;
        }
        // slide the window left by one and insert bits[n]
        uint64_t carry = bits[size_t(n)] & 1;
        for (size_t j = 0; j < w.size(); ++j) {
            const uint64_t next = w[j] >> 63;
            w[j] = (w[j] << 1) | carry;
            carry = next;
        }
    }
    return {L, Gf2Poly::from_words(std::move(c))};
}

Gf2Poly s2_polynomial(std::span<const uint8_t> bits, int64_t d) {
    const int64_t n = int64_t(bits.size());
    if (d < 1 || n % d != 0)
        throw NotADivisor("d = " + std::to_string(d) + " does not divide the period");
    Gf2Poly s2;
    for (int64_t t = 0; t < d; ++t) {
        int64_t acc = 0;
        for (int64_t k = t; k < n; k += d) acc += bits[size_t(k)] & 1;
        if (acc & 1) s2.set_coeff(t, true);
    }
    return s2;
}

Gf2Poly s2_polynomial(const SlceSequence& seq, int64_t d) { return s2_polynomial(seq.bits, d); }

}  // namespace slce
