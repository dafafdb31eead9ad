#include "slce/charsums.hpp"

#include <doctest.h>

#include <set>

#include "slce/errors.hpp"

using namespace slce;

namespace {

// independent character oracle: enumerate the squares directly
struct CharOracle {
    std::set<int64_t> squares;
    const PrimePowerField* f;
    explicit CharOracle(const PrimePowerField& field) : f(&field) {
        for (int64_t enc = 1; enc < field.q(); ++enc) {
            const FieldElement a = field.decode(enc);
            squares.insert(field.encode(field.mul(a, a)));
        }
    }
    int eta(int64_t enc) const {
        if (enc == 0) return 0;
        return squares.count(enc) ? 1 : -1;
    }
};

// direct-definition Jacobsthal oracles built on the character oracle
int64_t oracle_I(const PrimePowerField& f, const CharOracle& eta, int64_t n,
                 const FieldElement& a) {
    int64_t s = 0;
    for (int64_t enc = 1; enc < f.q(); ++enc) {
        const FieldElement cn = f.pow(f.decode(enc), n);
        s += eta.eta(f.encode(f.add(cn, a)));
    }
    return s;
}

int64_t oracle_H(const PrimePowerField& f, const CharOracle& eta, int64_t n,
                 const FieldElement& a) {
    int64_t s = 0;
    for (int64_t enc = 1; enc < f.q(); ++enc) {
        const FieldElement cn = f.pow(f.decode(enc), n);
        s += eta.eta(enc) * eta.eta(f.encode(f.add(cn, a)));
    }
    return s;
}

}  // namespace

TEST_CASE("quadratic character basics") {
    const PrimePowerField f7 = build_field(7, 1);
    CHECK(quadratic_character(f7, f7.one()) == 1);
    CHECK(quadratic_character(f7, f7.zero()) == 0);
    CHECK(quadratic_character(f7, f7.decode(3)) == -1);  // squares mod 7 are {1,2,4}
    CHECK(quadratic_character(f7, f7.decode(2)) == 1);
    CHECK(quadratic_character(f7, f7.decode(4)) == 1);
}

TEST_CASE("quadratic character agrees with the square-set oracle") {
    for (const auto& [p, m] :
         std::vector<std::pair<int64_t, int64_t>>{{7, 1}, {3, 2}, {13, 1}, {5, 2}, {3, 3}, {7, 2}}) {
        const PrimePowerField f = build_field(p, m);
        const CharOracle oracle(f);
        for (int64_t enc = 0; enc < f.q(); ++enc)
            CHECK(quadratic_character(f, f.decode(enc)) == oracle.eta(enc));
        // power route: eta(b) = 1 iff b^{(q-1)/2} = 1
        for (int64_t enc = 1; enc < f.q(); ++enc) {
            const FieldElement h = f.pow(f.decode(enc), (f.q() - 1) / 2);
            CHECK(quadratic_character(f, f.decode(enc)) == (h == f.one() ? 1 : -1));
        }
    }
}

TEST_CASE("eta is multiplicative, balanced, and splits units in half") {
    for (const auto& [p, m] :
         std::vector<std::pair<int64_t, int64_t>>{{13, 1}, {7, 2}, {3, 3}, {19, 1}}) {
        const PrimePowerField f = build_field(p, m);
        int64_t sum = 0, squares = 0;
        for (int64_t a = 1; a < f.q(); ++a) {
            const int ea = quadratic_character(f, f.decode(a));
            sum += ea;
            squares += ea == 1;
            for (int64_t b = 1; b < f.q(); ++b) {
                const int eb = quadratic_character(f, f.decode(b));
                const int eab = quadratic_character(f, f.mul(f.decode(a), f.decode(b)));
                CHECK(eab == ea * eb);
            }
        }
        CHECK(sum == 0);
        CHECK(squares == (f.q() - 1) / 2);
    }
}

TEST_CASE("cyclotomic classes partition the units") {
    const PrimePowerField f13 = build_field(13, 1);
    for (int64_t d : {1, 2, 3, 4, 6, 12}) {
        const CyclotomicContext ctx = CyclotomicContext::create(f13, d);
        std::set<int64_t> all;
        for (int64_t i = 0; i < d; ++i) {
            const auto cls = cyclotomic_class(ctx, i);
            CHECK(int64_t(cls.size()) == ctx.f);
            for (const auto& e : cls) all.insert(f13.encode(e));
        }
        CHECK(int64_t(all.size()) == 12);
    }
    const CyclotomicContext c1 = CyclotomicContext::create(f13, 1);
    CHECK(cyclotomic_class(c1, 0).size() == 12);
    CHECK_THROWS_AS(cyclotomic_class(c1, 1), IndexOutOfRange);
    CHECK_THROWS_AS(CyclotomicContext::create(f13, 5), NotADivisor);
}

TEST_CASE("cyclotomic numbers") {
    const PrimePowerField f13 = build_field(13, 1);
    const CyclotomicContext ctx2 = CyclotomicContext::create(f13, 2);
    // brute-force oracle over squares mod 13
    CHECK(cyclotomic_number(ctx2, 0, 0) == 2);
    CHECK(cyclotomic_number(ctx2, 0, 1) == 3);
    CHECK(cyclotomic_number(ctx2, 1, 0) == 3);
    CHECK(cyclotomic_number(ctx2, 1, 1) == 3);

    for (int64_t d : {1, 2, 3, 4, 6, 12}) {
        const CyclotomicContext ctx = CyclotomicContext::create(f13, d);
        int64_t total = 0;
        for (int64_t l = 0; l < d; ++l)
            for (int64_t m = 0; m < d; ++m) {
                const int64_t c = cyclotomic_number(ctx, l, m);
                CHECK(c >= 0);
                CHECK(c <= ctx.f);
                total += c;
            }
        CHECK(total == f13.q() - 2);
    }
    CHECK_THROWS_AS(cyclotomic_number(ctx2, 2, 0), IndexOutOfRange);
}

TEST_CASE("sum of cyclotomic numbers is q-2 across fields") {
    for (const auto& [p, m] : std::vector<std::pair<int64_t, int64_t>>{{17, 1}, {5, 2}, {3, 3}}) {
        const PrimePowerField f = build_field(p, m);
        for (int64_t d = 1; d <= f.q() - 1; ++d) {
            if ((f.q() - 1) % d) continue;
            const CyclotomicContext ctx = CyclotomicContext::create(f, d);
            int64_t total = 0;
            for (int64_t l = 0; l < d; ++l)
                for (int64_t mm = 0; mm < d; ++mm) total += cyclotomic_number(ctx, l, mm);
            CHECK(total == f.q() - 2);
        }
    }
}

TEST_CASE("jacobsthal I: first-order identity and frozen values") {
    for (const auto& [p, m] : std::vector<std::pair<int64_t, int64_t>>{{13, 1}, {7, 2}, {3, 3}}) {
        const PrimePowerField f = build_field(p, m);
        for (int64_t enc = 1; enc < f.q(); ++enc) {
            const FieldElement a = f.decode(enc);
            CHECK(jacobsthal_I(f, 1, a) == -quadratic_character(f, a));
        }
    }

    const PrimePowerField f13 = build_field(13, 1);
    // frozen from the direct-summation oracle
    const int64_t expected13[] = {-3, 6, -6, 6, 3, -6, -6, 3, 6, -6, 6, -3};
    for (int64_t a = 1; a <= 12; ++a)
        CHECK(jacobsthal_I(f13, 3, f13.decode(a)) == expected13[a - 1]);

    const PrimePowerField f49 = build_field(7, 2);
    CHECK(jacobsthal_I(f49, 3, f49.one()) == -3);
    CHECK(jacobsthal_I_full(f49, 3, f49.one()) == -2);

    const PrimePowerField f193 = build_field(193, 1);
    CHECK(jacobsthal_I(f193, 3, f193.one()) == -3);
    CHECK(jacobsthal_I_full(f193, 3, f193.one()) == -2);

    CHECK_THROWS_AS(jacobsthal_I(f13, 0, f13.one()), InvalidArgs);
}

TEST_CASE("jacobsthal sums agree with the definition oracle") {
    for (const auto& [p, m] : std::vector<std::pair<int64_t, int64_t>>{{13, 1}, {5, 2}, {3, 3}}) {
        const PrimePowerField f = build_field(p, m);
        const CharOracle oracle(f);
        for (int64_t n = 1; n <= 4; ++n)
            for (int64_t enc = 0; enc < f.q(); ++enc) {
                const FieldElement a = f.decode(enc);
                CHECK(jacobsthal_I(f, n, a) == oracle_I(f, oracle, n, a));
                CHECK(jacobsthal_H(f, n, a) == oracle_H(f, oracle, n, a));
            }
    }
}

TEST_CASE("jacobsthal H classical values") {
    const PrimePowerField f13 = build_field(13, 1);
    for (int64_t a = 1; a <= 12; ++a) CHECK(jacobsthal_H(f13, 1, f13.decode(a)) == -1);
    // H_n(0) = q-1 for odd n, 0 for even n
    CHECK(jacobsthal_H(f13, 1, f13.zero()) == 12);
    CHECK(jacobsthal_H(f13, 3, f13.zero()) == 12);
    CHECK(jacobsthal_H(f13, 2, f13.zero()) == 0);
    CHECK(jacobsthal_H(f13, 4, f13.zero()) == 0);
}

TEST_CASE("jacobsthal table") {
    const PrimePowerField f49 = build_field(7, 2);
    const CyclotomicContext ctx = CyclotomicContext::create(f49, 3);
    const JacobsthalTable t = jacobsthal_table(ctx, 64, /*with_h=*/true);
    REQUIRE(t.full_range());
    CHECK(t.n() == 3);
    CHECK(t.at_one() == -3);
    REQUIRE(t.at_alpha_neg_t().size() == 2);

    for (int64_t enc = 1; enc < 49; ++enc) {
        const FieldElement a = f49.decode(enc);
        CHECK(t.unit_sum(uint32_t(enc)) == jacobsthal_I(f49, 3, a));
        CHECK(t.full_sum(uint32_t(enc)) == jacobsthal_I_full(f49, 3, a));
        CHECK((*t.h_values())[size_t(enc)] == jacobsthal_H(f49, 3, a));
        // subgroup membership cross-check via the power route
        const bool member = f49.pow(a, (f49.q() - 1) / 3) == f49.one();
        CHECK(t.in_subgroup(uint32_t(enc)) == member);
    }

    // the published residue patterns: odd residues exactly on the subgroup,
    // zero residues off it
    for (int64_t enc = 1; enc < 49; ++enc) {
        const int mod4 = t.unit_sum_mod4(uint32_t(enc));
        if (t.in_subgroup(uint32_t(enc))) {
            CHECK((mod4 == 1 || mod4 == 3));
        } else {
            CHECK(mod4 == 0);
        }
    }

    // lemma-5 point values: I_3(1) = -3 = -d (mod 4); off-point residues are 0
    CHECK((t.at_one() + 3) % 4 == 0);
    for (int64_t v : t.at_alpha_neg_t()) CHECK(((v % 4) + 4) % 4 == 0);

    // a small-d table is full-range, a big-d table is not
    const PrimePowerField f29 = build_field(29, 1);
    const CyclotomicContext big = CyclotomicContext::create(f29, 7);
    const JacobsthalTable tb = jacobsthal_table(big, 3);
    CHECK_FALSE(tb.full_range());
    CHECK(tb.at_alpha_neg_t().size() == 6);
    CHECK_THROWS_AS(tb.unit_sum(1), IndexOutOfRange);
}

TEST_CASE("jacobsthal table with a non-canonical primitive element") {
    const PrimePowerField f49 = build_field(7, 2);
    // pick another primitive element: alpha^5 (gcd(5,48)=1)
    const FieldElement alpha2 = f49.decode(f49.pow_of_alpha(5));
    const CyclotomicContext ctx = CyclotomicContext::create(f49, 3, alpha2);
    const JacobsthalTable t = jacobsthal_table(ctx);
    CHECK(t.at_one() == -3);
    for (int64_t v : t.at_alpha_neg_t()) CHECK(((v % 4) + 4) % 4 == 0);
}
