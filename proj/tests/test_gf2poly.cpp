#include "slce/gf2poly.hpp"

#include <doctest.h>

#include <random>

#include "slce/errors.hpp"

using namespace slce;

namespace {

// encode small polynomials as integers (bit i = coefficient of x^i)
Gf2Poly P(uint64_t bits) { return Gf2Poly::from_words({bits}); }

uint64_t enc(const Gf2Poly& p) {
    REQUIRE(p.degree() < 64);
    return p.is_zero() ? 0 : p.words()[0];
}

Gf2Poly random_poly(std::mt19937_64& rng, int64_t max_degree) {
    std::uniform_int_distribution<int64_t> dd(0, max_degree);
    const int64_t deg = dd(rng);
    std::vector<uint64_t> w(size_t(deg / 64) + 1, 0);
    for (auto& v : w) v = rng();
    Gf2Poly p = Gf2Poly::from_words(std::move(w));
    // force the exact degree
    Gf2Poly q = Gf2Poly::monomial(deg);
    for (int64_t i = deg; i >= 0 && !p.is_zero(); --i) {
        if (p.degree() <= deg) break;
        p.set_coeff(p.degree(), false);
    }
    return p + q;
}

// oracle: long division by repeated subtraction on integer-encoded polynomials
uint64_t oracle_rem(uint64_t a, uint64_t b) {
    const auto deg = [](uint64_t v) { return 63 - __builtin_clzll(v); };
    while (a != 0 && deg(a) >= deg(b)) a ^= b << (deg(a) - deg(b));
    return a;
}

// oracle: trial division by every polynomial of ascending encoding; composite
// divisors never divide first, so only irreducibles are emitted
std::vector<std::pair<uint64_t, int64_t>> oracle_factor(uint64_t f) {
    std::vector<std::pair<uint64_t, int64_t>> out;
    const auto deg = [](uint64_t v) { return v ? 63 - __builtin_clzll(v) : -1; };
    for (uint64_t c = 2; deg(c) * 2 <= deg(f); ++c) {
        int64_t k = 0;
        while (oracle_rem(f, c) == 0) {
            // divide exactly
            uint64_t q = 0, r = f;
            while (r != 0 && deg(r) >= deg(c)) {
                const int s = deg(r) - deg(c);
                q |= uint64_t(1) << s;
                r ^= c << s;
            }
            f = q;
            ++k;
        }
        if (k) out.emplace_back(c, k);
    }
    if (deg(f) >= 1) out.emplace_back(f, 1);
    return out;
}

}  // namespace

TEST_CASE("add is coefficientwise xor") {
    CHECK((P(0b11) + P(0b11)).is_zero());            // (x+1)+(x+1) = 0
    CHECK(enc(P(0b101) + P(0b11)) == 0b110);         // (x^2+1)+(x+1) = x^2+x
    CHECK(enc(Gf2Poly::zero() + P(0b111)) == 0b111); // 0 + g = g
}

TEST_CASE("mul basics") {
    CHECK(enc(P(0b11) * P(0b11)) == 0b101);    // (x+1)^2 = x^2+1
    CHECK(enc(P(0b11) * P(0b111)) == 0b1001);  // (x+1)(x^2+x+1) = x^3+1
    CHECK((P(0b1011) * Gf2Poly::zero()).is_zero());
    CHECK(P(0b110101).degree() + P(0b1011).degree() == (P(0b110101) * P(0b1011)).degree());
}

TEST_CASE("rem") {
    CHECK(rem(P(0b1001), P(0b11)).is_zero());     // x+1 | x^3+1
    CHECK(enc(rem(P(0b1001), P(0b101))) == 0b11); // x^3+1 mod x^2+1 = x+1
    CHECK(enc(rem(P(0b1), P(0b11))) == 0b1);      // 1 mod (x+1) = 1
    CHECK_THROWS_AS(rem(P(0b1), Gf2Poly::zero()), DivisionByZeroPoly);
}

TEST_CASE("gcd") {
    const Gf2Poly x48_1 = Gf2Poly::monomial(48) + Gf2Poly::one();
    CHECK(enc(gcd(x48_1, P(0b1001))) == 0b1001);  // x^3+1 | x^48+1
    CHECK(gcd(P(0b11), P(0b111)).is_one());
    CHECK(enc(gcd(P(0b101), P(0b11))) == 0b11);   // gcd((x+1)^2, x+1)
    CHECK_THROWS_AS(gcd(Gf2Poly::zero(), Gf2Poly::zero()), BothZero);
}

TEST_CASE("multiplicity") {
    const Gf2Poly x48_1 = Gf2Poly::monomial(48) + Gf2Poly::one();
    CHECK(multiplicity(x48_1, P(0b11)) == 16);
    CHECK(multiplicity(P(0b111), P(0b11)) == 0);
    const Gf2Poly f = pow(P(0b11), 6) * pow(P(0b111), 2);
    CHECK(multiplicity(f, P(0b111)) == 2);
    CHECK_THROWS_AS(multiplicity(Gf2Poly::zero(), P(0b11)), InvalidArgs);
    CHECK_THROWS_AS(multiplicity(P(0b11), Gf2Poly::one()), InvalidArgs);
}

TEST_CASE("all_ones") {
    CHECK(all_ones(1).is_one());
    CHECK(enc(all_ones(3)) == 0b111);
    CHECK(enc(all_ones(2)) == 0b11);
    CHECK_THROWS_AS(all_ones(0), InvalidArgs);
    for (int64_t d = 1; d <= 1024; ++d) {
        const Gf2Poly lhs = P(0b11) * all_ones(d);
        CHECK(lhs == Gf2Poly::monomial(d) + Gf2Poly::one());
    }
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(P(0b111)));       // x^2+x+1
    CHECK_FALSE(is_irreducible(P(0b101))); // (x+1)^2
    CHECK(is_irreducible(all_ones(3)));    // 2 is a primitive root mod 3
    CHECK_FALSE(is_irreducible(all_ones(7)));  // ord_7(2) = 3
    CHECK(is_irreducible(all_ones(5)));
    CHECK(is_irreducible(all_ones(11)));
    CHECK(is_irreducible(all_ones(13)));
    CHECK_THROWS_AS(is_irreducible(Gf2Poly::one()), InvalidArgs);

    // cross-check against trial division for every polynomial of degree 1..10
    for (uint64_t f = 2; f < (1u << 11); ++f) {
        const auto of = oracle_factor(f);
        const bool irr = of.size() == 1 && of[0].second == 1;
        CHECK(is_irreducible(P(f)) == irr);
    }
}

TEST_CASE("factorize examples") {
    const auto f1 = factorize(P(0b1001));  // x^3+1
    REQUIRE(f1.factors.size() == 2);
    CHECK(enc(f1.factors[0].first) == 0b11);
    CHECK(f1.factors[0].second == 1);
    CHECK(enc(f1.factors[1].first) == 0b111);
    CHECK(f1.factors[1].second == 1);
    CHECK(f1.certified);

    const auto f2 = factorize(Gf2Poly::monomial(48) + Gf2Poly::one());
    REQUIRE(f2.factors.size() == 2);
    CHECK(enc(f2.factors[0].first) == 0b11);
    CHECK(f2.factors[0].second == 16);
    CHECK(enc(f2.factors[1].first) == 0b111);
    CHECK(f2.factors[1].second == 16);
    CHECK(f2.certified);
    CHECK(f2.to_text() == "(x+1)^16*(x^2+x+1)^16");

    CHECK_THROWS_AS(factorize(Gf2Poly::zero()), InvalidArgs);
    CHECK_THROWS_AS(factorize(Gf2Poly::one()), InvalidArgs);
}

TEST_CASE("factorize matches trial division on all small polynomials") {
    for (uint64_t f = 2; f < (1u << 10); ++f) {
        const auto got = factorize(P(f));
        const auto want = oracle_factor(f);
        REQUIRE(got.factors.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i) {
            CHECK(enc(got.factors[i].first) == want[i].first);
            CHECK(got.factors[i].second == want[i].second);
        }
        CHECK(got.certified);
    }
}

TEST_CASE("factorize reconstruction on random inputs") {
    std::mt19937_64 rng(0x5eed);
    for (int iter = 0; iter < 60; ++iter) {
        Gf2Poly f = random_poly(rng, 64);
        if (f.degree() < 1) continue;
        const auto fac = factorize(f);
        CHECK(fac.certified);
        CHECK(fac.reconstruct() == f);
        for (const auto& [p, m] : fac.factors) CHECK(is_irreducible(p));
    }
}

TEST_CASE("gcd divides both inputs up to degree 2^14") {
    std::mt19937_64 rng(0xfeedface);
    for (int iter = 0; iter < 8; ++iter) {
        const Gf2Poly a = random_poly(rng, 1 << 14);
        const Gf2Poly b = random_poly(rng, 1 << 14);
        if (a.is_zero() && b.is_zero()) continue;
        const Gf2Poly g = gcd(a, b);
        CHECK(rem(a, g).is_zero());
        CHECK(rem(b, g).is_zero());
    }
}

TEST_CASE("rem(mul(a,b), b) = 0") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 40; ++iter) {
        const Gf2Poly a = random_poly(rng, 300);
        const Gf2Poly b = random_poly(rng, 300);
        if (b.is_zero()) continue;
        CHECK(rem(a * b, b).is_zero());
        // divmod identity: a = q*b + r with deg r < deg b
        const auto dm = divmod(a, b);
        CHECK(dm.quotient * b + dm.remainder == a);
        CHECK(dm.remainder.degree() < b.degree());
    }
}

TEST_CASE("multiplicity is exact") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        Gf2Poly p = random_poly(rng, 8);
        if (p.degree() < 1) continue;
        const int64_t k = int64_t(rng() % 5);
        Gf2Poly cofactor = random_poly(rng, 10) + Gf2Poly::one();
        if (cofactor.is_zero() || !rem(cofactor, p).is_zero()) {
            const Gf2Poly f = pow(p, k) * (rem(cofactor, p).is_zero() ? cofactor + Gf2Poly::one()
                                                                      : cofactor);
            if (f.is_zero()) continue;
            const int64_t got = multiplicity(f, p);
            CHECK(rem(f, pow(p, got)).is_zero());
            CHECK_FALSE(rem(f, pow(p, got + 1)).is_zero());
        }
    }
}

TEST_CASE("factorize splits many same-degree factors") {
    // x^n+1 for prime n with few orders: forces repeated equal-degree splits
    for (const int64_t n : {23, 47, 89}) {
        const Gf2Poly f = Gf2Poly::monomial(n) + Gf2Poly::one();
        const auto fac = factorize(f);
        CHECK(fac.certified);
        CHECK(fac.reconstruct() == f);
        CHECK(fac.factors.front().first.to_text() == "x+1");
        int64_t deg_sum = 0;
        for (const auto& [p, m] : fac.factors) deg_sum += p.degree() * m;
        CHECK(deg_sum == n);
    }
    // x^89+1 = (x+1) times eight degree-11 irreducibles
    const auto f89 = factorize(Gf2Poly::monomial(89) + Gf2Poly::one());
    CHECK(f89.factors.size() == 9);
    for (size_t i = 1; i < f89.factors.size(); ++i) CHECK(f89.factors[i].first.degree() == 11);
}

TEST_CASE("x^(2^k r)+1 factors as ((x+1) g(r))^(2^k)") {
    for (const int64_t r : {3, 5, 7, 11, 13}) {
        for (int64_t k = 0; k <= 12; ++k) {
            const int64_t n = (int64_t(1) << k) * r;
            const Gf2Poly lhs = Gf2Poly::monomial(n) + Gf2Poly::one();
            const Gf2Poly rhs = pow(P(0b11), uint64_t(1) << k) *
                                pow(all_ones(r), uint64_t(1) << k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("text and hex rendering") {
    CHECK(Gf2Poly::zero().to_text() == "0");
    CHECK(Gf2Poly::one().to_text() == "1");
    CHECK(P(0b11).to_text() == "x+1");
    CHECK(P(0b100101).to_text() == "x^5+x^2+1");
    CHECK(P(0b11).to_hex() == "03");
    CHECK((Gf2Poly::monomial(8) + Gf2Poly::one()).to_hex() == "0101");
    CHECK(Gf2Poly::from_hex("0101") == Gf2Poly::monomial(8) + Gf2Poly::one());

    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        const Gf2Poly p = random_poly(rng, 200);
        CHECK(Gf2Poly::from_hex(p.to_hex()) == p);
    }
}

TEST_CASE("squared and derivative and sqrt_even") {
    std::mt19937_64 rng(123);
    for (int iter = 0; iter < 20; ++iter) {
        const Gf2Poly p = random_poly(rng, 150);
        CHECK(p.squared() == p * p);
        CHECK(p.squared().sqrt_even() == p);
        CHECK(p.squared().derivative().is_zero());
    }
}
