#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace slce {

/// Element of F_{p^m}, stored as its coefficient vector over F_p
/// (coeffs[0] = constant term; length m).
struct FieldElement {
    std::vector<int32_t> coeffs;

    bool operator==(const FieldElement& other) const = default;
    std::string to_text() const;  // "(c0,...,c_{m-1})"
};

/// F_{p^m} for an odd prime p. The modulus (for m >= 2) is the first monic
/// irreducible degree-m polynomial over F_p when the non-leading coefficients
/// are enumerated by ascending integer encoding sum(c_i * p^i). The stored
/// primitive element is the encoding-smallest element of order q-1; both
/// choices are deterministic, so repeated construction is reproducible.
class PrimePowerField {
  public:
    static constexpr int64_t kDefaultBound = int64_t(1) << 20;

    int64_t p() const { return p_; }
    int64_t m() const { return m_; }
    int64_t q() const { return q_; }

    /// Monic modulus coefficients c_0..c_m (c_m = 1); empty for m = 1.
    const std::vector<int32_t>& modulus() const { return modulus_; }
    /// Integer encoding of the modulus including the leading term; -1 for m = 1.
    int64_t modulus_encoding() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(int64_t c) const;  // embeds F_p
    FieldElement decode(int64_t enc) const;
    int64_t encode(const FieldElement& e) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;  // throws ZeroInverse
    FieldElement pow(const FieldElement& a, int64_t e) const;

    bool is_zero(const FieldElement& a) const;

    const FieldElement& primitive_element() const { return alpha_; }
    bool is_primitive(const FieldElement& a) const;

    std::vector<FieldElement> enumerate_units() const;

    /// Prime factorization of q-1, verified by re-multiplication.
    const std::vector<std::pair<int64_t, int64_t>>& qm1_factorization() const { return qm1_fac_; }

    // encoding-level fast path; tables built once at construction
    uint32_t add_enc(uint32_t a, uint32_t b) const;
    uint32_t pow_of_alpha(int64_t i) const { return pow_[size_t(i)]; }
    int64_t log_enc(uint32_t enc) const { return log_[enc]; }  // enc != 0
    int eta_enc(uint32_t enc) const { return eta_[enc]; }      // quadratic character

  private:
    PrimePowerField() = default;
    int64_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<int32_t> modulus_;  // size m+1 when m >= 2
    FieldElement alpha_;
    std::vector<std::pair<int64_t, int64_t>> qm1_fac_;
    std::vector<uint32_t> pow_;  // alpha^i for i in [0, q-1)
    std::vector<uint32_t> log_;  // inverse of pow_; log_[0] unused
    std::vector<int8_t> eta_;    // eta_[0] = 0; else +-1 by log parity

    friend PrimePowerField build_field(int64_t p, int64_t m, int64_t bound);
    FieldElement mul_raw(const FieldElement& a, const FieldElement& b) const;
    FieldElement find_primitive_scan() const;
};

/// Construct F_{p^m}. Throws NotPrime / EvenPrime / BoundExceeded / InvalidArgs.
PrimePowerField build_field(int64_t p, int64_t m, int64_t bound = PrimePowerField::kDefaultBound);

/// Re-runs the canonical scan (encoding order, order checked against the prime
/// factorization of q-1); equals field.primitive_element() by construction.
FieldElement find_primitive(const PrimePowerField& field);

bool is_prime(int64_t n);

/// Decompose q = p^m with p prime; returns {p, m} or throws NotPrimePower.
std::pair<int64_t, int64_t> prime_power_decompose(int64_t q);

}  // namespace slce
