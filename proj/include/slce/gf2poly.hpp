#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slce {

/// Polynomial over GF(2), bit-packed by exponent (bit 0 = constant term).
/// Canonical form: no trailing zero words; degree() is -1 for the zero polynomial.
class Gf2Poly {
  public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly x() { return monomial(1); }
    static Gf2Poly monomial(int64_t e);
    static Gf2Poly from_bits(const std::vector<uint8_t>& bits);
    static Gf2Poly from_words(std::vector<uint64_t> words);
    static Gf2Poly from_hex(std::string_view hex);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    int64_t degree() const;
    bool coeff(int64_t i) const;
    void set_coeff(int64_t i, bool v);
    int64_t weight() const;

    Gf2Poly& operator+=(const Gf2Poly& other);
    friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);

    Gf2Poly shifted_left(int64_t k) const;  // multiply by x^k
    Gf2Poly squared() const;
    Gf2Poly derivative() const;
    Gf2Poly sqrt_even() const;  // inverse of squared(); requires all exponents even

    bool operator==(const Gf2Poly& other) const = default;

    /// Order by (degree, then bit encoding as an integer).
    static bool order_less(const Gf2Poly& a, const Gf2Poly& b);

    std::string to_text() const;  // descending powers, e.g. "x^5+x^2+1"
    std::string to_hex() const;   // little-endian bytes by exponent

    const std::vector<uint64_t>& words() const { return words_; }

  private:
    std::vector<uint64_t> words_;
    void trim();
    friend struct Gf2PolyOps;
};

struct DivModResult {
    Gf2Poly quotient;
    Gf2Poly remainder;
};

DivModResult divmod(const Gf2Poly& a, const Gf2Poly& b);  // throws DivisionByZeroPoly
Gf2Poly rem(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);  // throws BothZero

/// Largest k with p^k | f. Requires f != 0 and deg(p) >= 1.
int64_t multiplicity(const Gf2Poly& f, const Gf2Poly& p);

/// x^{d-1} + x^{d-2} + ... + 1, with (x+1)*all_ones(d) = x^d + 1. Requires d >= 1.
Gf2Poly all_ones(int64_t d);

/// Rabin irreducibility test. Requires deg(f) >= 1.
bool is_irreducible(const Gf2Poly& f);

struct FactorizationResult {
    std::vector<std::pair<Gf2Poly, int64_t>> factors;  // sorted by (degree, encoding)
    bool certified = false;

    Gf2Poly reconstruct() const;
    std::string to_text() const;  // e.g. "(x+1)^6*(x^2+x+1)^2"
    bool operator==(const FactorizationResult& other) const = default;
};

/// Complete factorization into irreducibles: squarefree decomposition,
/// distinct-degree splitting, then trace-based equal-degree splitting with a
/// deterministic seed sweep. Requires f != 0 and deg(f) >= 1.
FactorizationResult factorize(const Gf2Poly& f);

Gf2Poly pow_mod(const Gf2Poly& base, uint64_t e, const Gf2Poly& mod);
Gf2Poly pow(Gf2Poly base, uint64_t e);

}  // namespace slce
