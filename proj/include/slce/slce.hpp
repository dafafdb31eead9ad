#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slce/finite_field.hpp"
#include "slce/gf2poly.hpp"

namespace slce {

/// The (q-1)-periodic binary sequence with s_i = 1 iff alpha^i + 1 is a
/// non-square; Hamming weight is (q-1)/2 and s_{(q-1)/2} = 0.
struct SlceSequence {
    const PrimePowerField* field;
    FieldElement alpha;
    std::vector<uint8_t> bits;  // one period, s_0..s_{q-2}
    int64_t period;
};

SlceSequence generate_slce(const PrimePowerField& field, const FieldElement& alpha);
SlceSequence generate_slce(const PrimePowerField& field);  // canonical alpha

/// S_q(x) = sum s_i x^i.
Gf2Poly sequence_polynomial(const SlceSequence& seq);

struct LinearComplexityResult {
    int64_t L;              // (q-1) - deg gcd
    Gf2Poly gcd_poly;       // gcd(x^{q-1}+1, S_q(x))
    Gf2Poly feedback_poly;  // (x^{q-1}+1) / gcd_poly
    FactorizationResult gcd_factors;
};

/// gcd-route linear complexity. Throws ZeroSequence on an all-zero period
/// (cannot occur for genuine SLCE input).
LinearComplexityResult analyze_lc(const SlceSequence& seq);

struct BmResult {
    int64_t L;
    Gf2Poly feedback;  // c(x) with c_0 = 1
};

/// Independent oracle: shortest LFSR for the given finite bit stream.
/// Feed two periods to recover the minimal polynomial of a periodic sequence.
BmResult berlekamp_massey(std::span<const uint8_t> bits);

/// Reduction of S_q(x) mod x^d + 1: coefficient t is the parity of
/// sum_k s_{t+kd}. Requires d | q-1 (NotADivisor otherwise).
Gf2Poly s2_polynomial(const SlceSequence& seq, int64_t d);
Gf2Poly s2_polynomial(std::span<const uint8_t> bits, int64_t d);

}  // namespace slce
