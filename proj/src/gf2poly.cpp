#include "slce/gf2poly.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "slce/errors.hpp"

namespace slce {

namespace {

constexpr uint64_t kEvenMask = 0x5555555555555555ULL;

const std::array<uint16_t, 256>& spread8_table() {
    static const std::array<uint16_t, 256> t = [] {
        std::array<uint16_t, 256> a{};
        for (int i = 0; i < 256; ++i) {
            uint16_t s = 0;
            for (int b = 0; b < 8; ++b)
                if ((i >> b) & 1) s |= uint16_t(1) << (2 * b);
            a[i] = s;
        }
        return a;
    }();
    return t;
}

// compact the even-indexed bits of a 16-bit chunk into 8 bits
const std::array<uint8_t, 256>& even8_table() {
    static const std::array<uint8_t, 256> t = [] {
        std::array<uint8_t, 256> a{};
        for (int i = 0; i < 256; ++i) {
            uint8_t s = 0;
            for (int b = 0; b < 4; ++b)
                if ((i >> (2 * b)) & 1) s |= uint8_t(1) << b;
            a[i] = s;
        }
        return a;
    }();
    return t;
}

void xor_shifted(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src, int64_t shift) {
    const int64_t ws = shift / 64;
    const int bs = int(shift % 64);
    if (bs == 0) {
        for (size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
    } else {
        uint64_t carry = 0;
        for (size_t i = 0; i < src.size(); ++i) {
            dst[i + ws] ^= (src[i] << bs) | carry;
            carry = src[i] >> (64 - bs);
        }
        if (carry) dst[src.size() + ws] ^= carry;
    }
}

}  // namespace

struct Gf2PolyOps {
    static std::vector<uint64_t>& words(Gf2Poly& p) { return p.words_; }
};

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::monomial(int64_t e) {
    if (e < 0) throw InvalidArgs("negative exponent");
    Gf2Poly p;
    p.words_.assign(size_t(e / 64) + 1, 0);
    p.words_[size_t(e / 64)] = uint64_t(1) << (e % 64);
    return p;
}

Gf2Poly Gf2Poly::from_bits(const std::vector<uint8_t>& bits) {
    Gf2Poly p;
    p.words_.assign(bits.size() / 64 + 1, 0);
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1) p.words_[i / 64] |= uint64_t(1) << (i % 64);
    p.trim();
    return p;
}

Gf2Poly Gf2Poly::from_words(std::vector<uint64_t> words) {
    Gf2Poly p;
    p.words_ = std::move(words);
    p.trim();
    return p;
}

Gf2Poly Gf2Poly::from_hex(std::string_view hex) {
    if (hex.empty() || hex.size() % 2 != 0) throw InvalidArgs("hex string must have even length");
    Gf2Poly p;
    p.words_.assign(hex.size() / 16 + 1, 0);
    for (size_t b = 0; b < hex.size() / 2; ++b) {
        auto nib = [&](char c) -> uint64_t {
            if (c >= '0' && c <= '9') return uint64_t(c - '0');
            if (c >= 'a' && c <= 'f') return uint64_t(c - 'a' + 10);
            if (c >= 'A' && c <= 'F') return uint64_t(c - 'A' + 10);
            throw InvalidArgs("bad hex digit");
        };
        uint64_t byte = nib(hex[2 * b]) * 16 + nib(hex[2 * b + 1]);
        p.words_[b / 8] |= byte << (8 * (b % 8));
    }
    p.trim();
    return p;
}

int64_t Gf2Poly::degree() const {
    if (words_.empty()) return -1;
    return int64_t(words_.size() - 1) * 64 + (63 - std::countl_zero(words_.back()));
}

bool Gf2Poly::coeff(int64_t i) const {
    if (i < 0 || size_t(i / 64) >= words_.size()) return false;
    return (words_[size_t(i / 64)] >> (i % 64)) & 1;
}

void Gf2Poly::set_coeff(int64_t i, bool v) {
    if (i < 0) throw InvalidArgs("negative exponent");
    if (size_t(i / 64) >= words_.size()) {
        if (!v) return;
        words_.resize(size_t(i / 64) + 1, 0);
    }
    if (v)
        words_[size_t(i / 64)] |= uint64_t(1) << (i % 64);
    else
        words_[size_t(i / 64)] &= ~(uint64_t(1) << (i % 64));
    trim();
}

int64_t Gf2Poly::weight() const {
    int64_t w = 0;
    for (uint64_t v : words_) w += std::popcount(v);
    return w;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& aw = a.words();
    const auto& bw = b.words();
    std::vector<uint64_t> r(aw.size() + bw.size(), 0);
    for (size_t j = 0; j < bw.size(); ++j) {
        uint64_t w = bw[j];
        while (w) {
            const int bit = std::countr_zero(w);
            w &= w - 1;
            xor_shifted(r, aw, int64_t(j) * 64 + bit);
        }
    }
    return Gf2Poly::from_words(std::move(r));
}

Gf2Poly Gf2Poly::shifted_left(int64_t k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw InvalidArgs("negative shift");
    std::vector<uint64_t> r(words_.size() + size_t(k / 64) + 1, 0);
    xor_shifted(r, words_, k);
    return from_words(std::move(r));
}

Gf2Poly Gf2Poly::squared() const {
    const auto& t = spread8_table();
    std::vector<uint64_t> r(words_.size() * 2, 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        const uint64_t w = words_[i];
        r[2 * i] = uint64_t(t[w & 0xff]) | uint64_t(t[(w >> 8) & 0xff]) << 16 |
                   uint64_t(t[(w >> 16) & 0xff]) << 32 | uint64_t(t[(w >> 24) & 0xff]) << 48;
        r[2 * i + 1] = uint64_t(t[(w >> 32) & 0xff]) | uint64_t(t[(w >> 40) & 0xff]) << 16 |
                       uint64_t(t[(w >> 48) & 0xff]) << 32 | uint64_t(t[(w >> 56) & 0xff]) << 48;
    }
    return from_words(std::move(r));
}

Gf2Poly Gf2Poly::derivative() const {
    std::vector<uint64_t> r(words_.size(), 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i] >> 1;
        if (i + 1 < words_.size()) w |= words_[i + 1] << 63;
        r[i] = w & kEvenMask;
    }
    return from_words(std::move(r));
}

Gf2Poly Gf2Poly::sqrt_even() const {
    const auto& t = even8_table();
    std::vector<uint64_t> r((words_.size() + 1) / 2, 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        const uint64_t w = words_[i];
        uint64_t half = 0;
        for (int c = 0; c < 4; ++c) {
            const uint64_t chunk = (w >> (16 * c)) & 0xffff;
            half |= (uint64_t(t[chunk & 0xff]) | uint64_t(t[chunk >> 8]) << 4) << (8 * c);
        }
        r[i / 2] |= half << (32 * (i % 2));
    }
    return from_words(std::move(r));
}

bool Gf2Poly::order_less(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.words_.size(); i-- > 0;)
        if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
}

std::string Gf2Poly::to_text() const {
    if (is_zero()) return "0";
    std::string s;
    for (int64_t i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += '+';
        if (i == 0)
            s += '1';
        else if (i == 1)
            s += 'x';
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

std::string Gf2Poly::to_hex() const {
    static const char* digits = "0123456789abcdef";
    if (is_zero()) return "00";
    const int64_t nbytes = degree() / 8 + 1;
    std::string s(size_t(nbytes) * 2, '0');
    for (int64_t b = 0; b < nbytes; ++b) {
        const uint64_t byte = (words_[size_t(b / 8)] >> (8 * (b % 8))) & 0xff;
        s[size_t(2 * b)] = digits[byte >> 4];
        s[size_t(2 * b + 1)] = digits[byte & 0xf];
    }
    return s;
}

DivModResult divmod(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    DivModResult res;
    res.remainder = a;
    const int64_t db = b.degree();
    int64_t da = res.remainder.degree();
    if (da < db) return res;
    std::vector<uint64_t> q(size_t((da - db) / 64) + 1, 0);
    std::vector<uint64_t>& rw = Gf2PolyOps::words(res.remainder);
    while (!res.remainder.is_zero() && (da = res.remainder.degree()) >= db) {
        const int64_t s = da - db;
        q[size_t(s / 64)] |= uint64_t(1) << (s % 64);
        xor_shifted(rw, b.words(), s);
        while (!rw.empty() && rw.back() == 0) rw.pop_back();
    }
    res.quotient = Gf2Poly::from_words(std::move(q));
    return res;
}

Gf2Poly rem(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    Gf2Poly r = a;
    std::vector<uint64_t>& rw = Gf2PolyOps::words(r);
    const int64_t db = b.degree();
    int64_t da;
    while (!r.is_zero() && (da = r.degree()) >= db) {
        xor_shifted(rw, b.words(), da - db);
        while (!rw.empty() && rw.back() == 0) rw.pop_back();
    }
    return r;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    while (!b.is_zero()) {
        Gf2Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int64_t multiplicity(const Gf2Poly& f, const Gf2Poly& p) {
    if (f.is_zero() || p.degree() < 1) throw InvalidArgs("multiplicity needs f != 0 and deg(p) >= 1");
    int64_t k = 0;
    Gf2Poly cur = f;
    while (true) {
        DivModResult dm = divmod(cur, p);
        if (!dm.remainder.is_zero()) return k;
        cur = std::move(dm.quotient);
        ++k;
    }
}

Gf2Poly all_ones(int64_t d) {
    if (d < 1) throw InvalidArgs("all_ones needs d >= 1");
    std::vector<uint64_t> w(size_t((d - 1) / 64) + 1, ~uint64_t(0));
    const int top = int(d % 64);
    if (top != 0) w.back() = (uint64_t(1) << top) - 1;
    return Gf2Poly::from_words(std::move(w));
}

Gf2Poly pow_mod(const Gf2Poly& base, uint64_t e, const Gf2Poly& mod) {
    Gf2Poly r = rem(Gf2Poly::one(), mod);
    Gf2Poly b = rem(base, mod);
    while (e) {
        if (e & 1) r = rem(r * b, mod);
        b = rem(b.squared(), mod);
        e >>= 1;
    }
    return r;
}

Gf2Poly pow(Gf2Poly base, uint64_t e) {
    Gf2Poly r = Gf2Poly::one();
    while (e) {
        if (e & 1) r = r * base;
        base = base.squared();
        e >>= 1;
    }
    return r;
}

namespace {

std::vector<int64_t> prime_divisors(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

bool is_irreducible(const Gf2Poly& f) {
    const int64_t n = f.degree();
    if (n < 1) throw InvalidArgs("is_irreducible needs deg(f) >= 1");
    if (n == 1) return true;
    const Gf2Poly x = rem(Gf2Poly::x(), f);
    for (int64_t l : prime_divisors(n)) {
        Gf2Poly h = x;
        for (int64_t i = 0; i < n / l; ++i) h = rem(h.squared(), f);
        h += x;
        if (h.is_zero() || !gcd(h, f).is_one()) return false;
    }
    Gf2Poly h = x;
    for (int64_t i = 0; i < n; ++i) h = rem(h.squared(), f);
    return h == x;
}

namespace {

// trace-map equal-degree splitting; g is a product of >= 1 distinct irreducibles of degree d
void edf(const Gf2Poly& g, int64_t d, std::vector<Gf2Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    for (uint64_t encoding = 2; encoding != 0; ++encoding) {
        if (encoding > (uint64_t(1) << 20))
            throw NotFound("equal-degree splitting found no separating element");
        Gf2Poly u;
        for (int b = 0; b < 64; ++b)
            if ((encoding >> b) & 1) u.set_coeff(b, true);
        u = rem(u, g);
        if (u.degree() < 1) continue;
        Gf2Poly t = u;
        Gf2Poly s = u;
        for (int64_t j = 1; j < d; ++j) {
            s = rem(s.squared(), g);
            t += s;
        }
        for (int variant = 0; variant < 2; ++variant) {
            Gf2Poly cand = variant ? t + Gf2Poly::one() : t;
            if (cand.is_zero()) continue;
            Gf2Poly w = gcd(cand, g);
            if (!w.is_one() && w.degree() < g.degree()) {
                edf(w, d, out);
                edf(divmod(g, w).quotient, d, out);
                return;
            }
        }
    }
}

std::vector<std::pair<Gf2Poly, int64_t>> distinct_degree(Gf2Poly z) {
    std::vector<std::pair<Gf2Poly, int64_t>> res;
    Gf2Poly h = rem(Gf2Poly::x(), z);
    int64_t d = 0;
    while (z.degree() >= 2 * (d + 1)) {
        ++d;
        h = rem(h.squared(), z);
        Gf2Poly g = gcd(h + rem(Gf2Poly::x(), z), z);
        if (!g.is_one()) {
            res.emplace_back(g, d);
            z = divmod(z, g).quotient;
            h = rem(h, z);
        }
    }
    if (z.degree() >= 1) res.emplace_back(z, z.degree());
    return res;
}

void squarefree_parts(const Gf2Poly& f, int64_t mult,
                      std::vector<std::pair<Gf2Poly, int64_t>>& parts) {
    Gf2Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_parts(f.sqrt_even(), 2 * mult, parts);
        return;
    }
    Gf2Poly c = gcd(f, d);
    Gf2Poly w = divmod(f, c).quotient;
    int64_t i = 1;
    while (!w.is_one()) {
        Gf2Poly y = gcd(w, c);
        Gf2Poly z = divmod(w, y).quotient;
        if (!z.is_one()) parts.emplace_back(z, mult * i);
        ++i;
        w = std::move(y);
        c = divmod(c, w).quotient;
    }
    if (!c.is_one()) squarefree_parts(c.sqrt_even(), 2 * mult, parts);
}

}  // namespace

Gf2Poly FactorizationResult::reconstruct() const {
    Gf2Poly r = Gf2Poly::one();
    for (const auto& [p, m] : factors) r = r * pow(p, uint64_t(m));
    return r;
}

std::string FactorizationResult::to_text() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [p, m] : factors) {
        if (!s.empty()) s += '*';
        s += '(' + p.to_text() + ')';
        if (m > 1) s += '^' + std::to_string(m);
    }
    return s;
}

FactorizationResult factorize(const Gf2Poly& f) {
    if (f.is_zero() || f.degree() < 1) throw InvalidArgs("factorize needs deg(f) >= 1");
    std::vector<std::pair<Gf2Poly, int64_t>> parts;
    squarefree_parts(f, 1, parts);
    FactorizationResult res;
    for (const auto& [sqfree, mult] : parts) {
        for (const auto& [prod, d] : distinct_degree(sqfree)) {
            std::vector<Gf2Poly> irr;
            edf(prod, d, irr);
            for (auto& p : irr) res.factors.emplace_back(std::move(p), mult);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return Gf2Poly::order_less(a.first, b.first); });
    res.certified = res.reconstruct() == f;
    for (const auto& [p, m] : res.factors)
        if (!is_irreducible(p)) res.certified = false;
    return res;
}

}  // namespace slce
