#include "slce/finite_field.hpp"

#include <algorithm>

#include "slce/errors.hpp"

namespace slce {

namespace {

// ---- F_p[x] arithmetic on coefficient vectors (ascending), for the modulus scan ----

void fp_trim(std::vector<int64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<int64_t> fp_mulmod(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                               const std::vector<int64_t>& f, int64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int64_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    const size_t m = f.size() - 1;
    for (size_t i = prod.size(); i-- > m;) {
        const int64_t c = prod[i];
        if (c) {
            prod[i] = 0;
            for (size_t j = 0; j < m; ++j)
                prod[i - m + j] = ((prod[i - m + j] - c * f[j]) % p + p) % p;
        }
    }
    prod.resize(std::min(prod.size(), m));
    fp_trim(prod);
    return prod;
}

std::vector<int64_t> fp_powmod(std::vector<int64_t> a, int64_t n, const std::vector<int64_t>& f,
                               int64_t p) {
    std::vector<int64_t> r{1};
    while (n) {
        if (n & 1) r = fp_mulmod(r, a, f, p);
        a = fp_mulmod(a, a, f, p);
        n >>= 1;
    }
    return r;
}

std::vector<int64_t> fp_gcd(std::vector<int64_t> a, std::vector<int64_t> b, int64_t p) {
    auto modinv = [&](int64_t x) {
        int64_t r = 1, base = ((x % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        const int64_t binv = modinv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            const int64_t c = a.back() * binv % p;
            const size_t k = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[k + j] = ((a[k + j] - c * b[j]) % p + p) % p;
            fp_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<int64_t> small_prime_divisors(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Rabin test over F_p: f monic of degree m
bool fp_irreducible(const std::vector<int64_t>& f, int64_t p) {
    const size_t m = f.size() - 1;
    if (m == 1) return true;
    const std::vector<int64_t> x{0, 1};
    for (int64_t l : small_prime_divisors(int64_t(m))) {
        std::vector<int64_t> h = x;
        for (size_t i = 0; i < m / size_t(l); ++i) h = fp_powmod(h, p, f, p);
        // h - x
        std::vector<int64_t> diff = h;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        fp_trim(diff);
        if (diff.empty()) return false;
        if (fp_gcd(diff, f, p).size() != 1) return false;
    }
    std::vector<int64_t> h = x;
    for (size_t i = 0; i < m; ++i) h = fp_powmod(h, p, f, p);
    return h == x;
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (int64_t i = 3; i * i <= n; i += 2)
        if (n % i == 0) return false;
    return true;
}

std::pair<int64_t, int64_t> prime_power_decompose(int64_t q) {
    if (q < 3) throw NotPrimePower(q);
    int64_t p = q;
    for (int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int64_t m = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw NotPrimePower(q);
    return {p, m};
}

std::string FieldElement::to_text() const {
    std::string s = "(";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs[i]);
    }
    return s + ")";
}

int64_t PrimePowerField::modulus_encoding() const {
    if (m_ == 1) return -1;
    int64_t e = 0;
    for (size_t i = modulus_.size(); i-- > 0;) e = e * p_ + modulus_[i];
    return e;
}

FieldElement PrimePowerField::zero() const { return {std::vector<int32_t>(size_t(m_), 0)}; }

FieldElement PrimePowerField::one() const { return from_int(1); }

FieldElement PrimePowerField::from_int(int64_t c) const {
    FieldElement e = zero();
    e.coeffs[0] = int32_t(((c % p_) + p_) % p_);
    return e;
}

FieldElement PrimePowerField::decode(int64_t enc) const {
    FieldElement e = zero();
    for (int64_t i = 0; i < m_; ++i) {
        e.coeffs[size_t(i)] = int32_t(enc % p_);
        enc /= p_;
    }
    return e;
}

int64_t PrimePowerField::encode(const FieldElement& e) const {
    int64_t v = 0;
    for (size_t i = e.coeffs.size(); i-- > 0;) v = v * p_ + e.coeffs[i];
    return v;
}

FieldElement PrimePowerField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        r.coeffs[i] += b.coeffs[i];
        if (r.coeffs[i] >= p_) r.coeffs[i] -= int32_t(p_);
    }
    return r;
}

FieldElement PrimePowerField::neg(const FieldElement& a) const {
    FieldElement r = a;
    for (auto& c : r.coeffs)
        if (c) c = int32_t(p_) - c;
    return r;
}

FieldElement PrimePowerField::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement PrimePowerField::mul_raw(const FieldElement& a, const FieldElement& b) const {
    if (m_ == 1) {
        FieldElement r = zero();
        r.coeffs[0] = int32_t(int64_t(a.coeffs[0]) * b.coeffs[0] % p_);
        return r;
    }
    std::vector<int64_t> prod(size_t(2 * m_ - 1), 0);
    for (size_t i = 0; i < size_t(m_); ++i)
        if (a.coeffs[i])
            for (size_t j = 0; j < size_t(m_); ++j)
                prod[i + j] = (prod[i + j] + int64_t(a.coeffs[i]) * b.coeffs[j]) % p_;
    for (size_t i = prod.size(); i-- > size_t(m_);) {
        const int64_t c = prod[i];
        if (c) {
            prod[i] = 0;
            for (size_t j = 0; j < size_t(m_); ++j)
                prod[i - size_t(m_) + j] =
                    ((prod[i - size_t(m_) + j] - c * modulus_[j]) % p_ + p_) % p_;
        }
    }
    FieldElement r = zero();
    for (size_t i = 0; i < size_t(m_); ++i) r.coeffs[i] = int32_t(prod[i]);
    return r;
}

FieldElement PrimePowerField::mul(const FieldElement& a, const FieldElement& b) const {
    return mul_raw(a, b);
}

bool PrimePowerField::is_zero(const FieldElement& a) const {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](int32_t c) { return c == 0; });
}

FieldElement PrimePowerField::pow(const FieldElement& a, int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    FieldElement r = one(), b = a;
    while (e) {
        if (e & 1) r = mul_raw(r, b);
        b = mul_raw(b, b);
        e >>= 1;
    }
    return r;
}

FieldElement PrimePowerField::inv(const FieldElement& a) const {
    if (is_zero(a)) throw ZeroInverse();
    return pow(a, q_ - 2);
}

FieldElement PrimePowerField::find_primitive_scan() const {
    for (int64_t enc = 1; enc < q_; ++enc) {
        const FieldElement cand = decode(enc);
        bool ok = true;
        for (const auto& [l, _] : qm1_fac_)
            if (pow(cand, (q_ - 1) / l) == one()) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    throw NotFound("no primitive element found");  // cannot happen for a valid field
}

bool PrimePowerField::is_primitive(const FieldElement& a) const {
    if (is_zero(a)) return false;
    for (const auto& [l, _] : qm1_fac_)
        if (pow(a, (q_ - 1) / l) == one()) return false;
    return true;
}

std::vector<FieldElement> PrimePowerField::enumerate_units() const {
    std::vector<FieldElement> units;
    units.reserve(size_t(q_ - 1));
    for (int64_t enc = 1; enc < q_; ++enc) units.push_back(decode(enc));
    return units;
}

uint32_t PrimePowerField::add_enc(uint32_t a, uint32_t b) const {
    if (m_ == 1) {
        const uint32_t s = a + b;
        return s >= uint32_t(q_) ? s - uint32_t(q_) : s;
    }
    uint32_t r = 0, mul = 1;
    const uint32_t up = uint32_t(p_);
    for (int64_t i = 0; i < m_; ++i) {
        uint32_t s = a % up + b % up;
        if (s >= up) s -= up;
        r += s * mul;
        mul *= up;
        a /= up;
        b /= up;
    }
    return r;
}

PrimePowerField build_field(int64_t p, int64_t m, int64_t bound) {
    if (p == 2) throw EvenPrime();
    if (!is_prime(p)) throw NotPrime(p);
    if (m < 1) throw InvalidArgs("m must be >= 1");
    int64_t q = 1;
    for (int64_t i = 0; i < m; ++i) {
        q *= p;
        if (q > bound)
            throw BoundExceeded("p^m exceeds the configured bound " + std::to_string(bound));
    }

    PrimePowerField f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = q;

    // factor q-1 by trial division, then verify by re-multiplication
    int64_t n = q - 1;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            int64_t e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            f.qm1_fac_.emplace_back(d, e);
        }
    if (n > 1) f.qm1_fac_.emplace_back(n, 1);
    int64_t check = 1;
    for (const auto& [l, e] : f.qm1_fac_)
        for (int64_t i = 0; i < e; ++i) check *= l;
    if (check != q - 1) throw NotFound("internal factorization error");

    if (m >= 2) {
        // scan non-leading coefficient encodings ascending for the first irreducible
        bool found = false;
        for (int64_t enc = 0; enc < q && !found; ++enc) {
            std::vector<int64_t> cand(size_t(m) + 1, 0);
            int64_t e = enc;
            for (int64_t i = 0; i < m; ++i) {
                cand[size_t(i)] = e % p;
                e /= p;
            }
            cand[size_t(m)] = 1;
            if (fp_irreducible(cand, p)) {
                f.modulus_.assign(cand.begin(), cand.end());
                found = true;
            }
        }
        if (!found) throw NotFound("no irreducible modulus found");  // cannot happen
    }

    f.alpha_ = f.find_primitive_scan();

    // power, log and character tables
    f.pow_.assign(size_t(q - 1), 0);
    f.log_.assign(size_t(q), 0);
    f.eta_.assign(size_t(q), 0);
    FieldElement cur = f.one();
    for (int64_t i = 0; i < q - 1; ++i) {
        const uint32_t enc = uint32_t(f.encode(cur));
        f.pow_[size_t(i)] = enc;
        f.log_[enc] = uint32_t(i);
        f.eta_[enc] = (i % 2 == 0) ? int8_t(1) : int8_t(-1);
        cur = f.mul_raw(cur, f.alpha_);
    }
    if (!(cur == f.one())) throw NotFound("primitive element order check failed");
    return f;
}

FieldElement find_primitive(const PrimePowerField& field) {
    for (int64_t enc = 1; enc < field.q(); ++enc) {
        FieldElement cand = field.decode(enc);
        if (field.is_primitive(cand)) return cand;
    }
    throw NotFound("no primitive element found");
}

}  // namespace slce
