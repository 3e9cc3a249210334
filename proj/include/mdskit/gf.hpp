#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdskit {

namespace detail {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
// Trailing zero coefficients are allowed; degree is computed on the fly.
inline int poly_deg(const std::vector<uint32_t>& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

inline bool poly_is_zero(const std::vector<uint32_t>& f) { return poly_deg(f) < 0; }

inline std::vector<uint32_t> decode_poly(uint64_t enc, uint32_t len, uint32_t p) {
    std::vector<uint32_t> f(len);
    for (uint32_t i = 0; i < len; ++i) { f[i] = uint32_t(enc % p); enc /= p; }
    return f;
}

} // namespace detail

// GF(p^k) with elements encoded as integers in [0, p^k): the encoding's
// base-p digits are the coordinates in the polynomial basis, least
// significant coefficient first.  Elements below p are exactly the prime
// subfield.  The modulus is encoded the same way including its leading
// (monic) coefficient, e.g. x^2+x+1 over GF(2) is 7.
class Field {
public:
    using elem = uint32_t;

    Field(uint32_t p, uint32_t k) : Field(p, k, default_modulus(p, k)) {}

    Field(uint32_t p, uint32_t k, uint64_t modulus_enc) : p_(p), k_(k) {
        if (!detail::is_prime_u32(p)) throw std::invalid_argument("gf: p not prime");
        if (k < 1) throw std::invalid_argument("gf: k must be >= 1");
        uint64_t q = 1;
        for (uint32_t i = 0; i < k; ++i) {
            q *= p;
            if (q > (1u << 20)) throw std::invalid_argument("gf: order exceeds 2^20");
        }
        q_ = uint32_t(q);
        mod_ = detail::decode_poly(modulus_enc, k + 1, p);
        if (mod_[k] != 1) throw std::invalid_argument("gf: modulus not monic of degree k");
        if (!poly_irreducible(p, mod_)) throw std::invalid_argument("gf: modulus reducible");
        modulus_enc_ = modulus_enc;
    }

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t order() const { return q_; }
    uint64_t modulus() const { return modulus_enc_; }

    elem add(elem a, elem b) const {
        check(a); check(b);
        elem r = 0, m = 1;
        for (uint32_t i = 0; i < k_; ++i) {
            r += (a % p_ + b % p_) % p_ * m;
            a /= p_; b /= p_; m *= p_;
        }
        return r;
    }

    elem neg(elem a) const {
        check(a);
        elem r = 0, m = 1;
        for (uint32_t i = 0; i < k_; ++i) {
            r += (p_ - a % p_) % p_ * m;
            a /= p_; m *= p_;
        }
        return r;
    }

    elem sub(elem a, elem b) const { return add(a, neg(b)); }

    elem mul(elem a, elem b) const {
        check(a); check(b);
        uint32_t da[32], db[32];
        for (uint32_t i = 0; i < k_; ++i) { da[i] = a % p_; a /= p_; }
        for (uint32_t i = 0; i < k_; ++i) { db[i] = b % p_; b /= p_; }
        uint64_t conv[63] = {};
        for (uint32_t i = 0; i < k_; ++i) {
            if (!da[i]) continue;
            for (uint32_t j = 0; j < k_; ++j)
                conv[i + j] += uint64_t(da[i]) * db[j];
        }
        // reduce by the monic modulus
        for (int i = int(2 * k_ - 2); i >= int(k_); --i) {
            uint64_t c = conv[i] % p_;
            conv[i] = 0;
            if (!c) continue;
            for (uint32_t j = 0; j < k_; ++j)
                conv[i - k_ + j] += c * (p_ - mod_[j]);
        }
        elem r = 0, m = 1;
        for (uint32_t i = 0; i < k_; ++i) { r += uint32_t(conv[i] % p_) * m; m *= p_; }
        return r;
    }

    // s is a prime-subfield scalar in [0, p)
    elem scalar(uint32_t s, elem a) const {
        if (s >= p_) throw std::invalid_argument("gf: scalar out of range");
        return mul(s, a);
    }

    elem pow(elem a, uint64_t e) const {
        check(a);
        elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    elem inv(elem a) const {
        check(a);
        if (a == 0) throw std::invalid_argument("gf: inverse of zero");
        return pow(a, q_ - 2);
    }

    uint32_t digit(elem a, uint32_t i) const {
        check(a);
        for (uint32_t j = 0; j < i; ++j) a /= p_;
        return a % p_;
    }

    // The affine line {a + alpha*v : alpha in GF(p)}, in alpha order.
    std::vector<elem> line(elem a, elem v) const {
        if (v == 0) throw std::invalid_argument("gf: line direction is zero");
        std::vector<elem> pts(p_);
        for (uint32_t s = 0; s < p_; ++s) pts[s] = add(a, scalar(s, v));
        return pts;
    }

    // One representative per direction class {s*v : s != 0}; there are
    // (q-1)/(p-1) of them, and the lines through any point are exactly
    // line(a, r) over these representatives.
    std::vector<elem> direction_reps() const {
        std::vector<char> seen(q_, 0);
        std::vector<elem> reps;
        for (elem v = 1; v < q_; ++v) {
            if (seen[v]) continue;
            reps.push_back(v);
            for (uint32_t s = 1; s < p_; ++s) seen[mul(s, v)] = 1;
        }
        return reps;
    }

    static bool poly_irreducible(uint32_t p, const std::vector<uint32_t>& f) {
        int df = detail::poly_deg(f);
        if (df < 1) return false;
        if (df == 1) return true;
        // trial division by every monic polynomial of degree 1..df/2
        for (int dg = 1; dg <= df / 2; ++dg) {
            uint64_t count = 1;
            for (int i = 0; i < dg; ++i) count *= p;
            for (uint64_t c = 0; c < count; ++c) {
                std::vector<uint32_t> g = detail::decode_poly(c, dg, p);
                g.push_back(1); // monic
                std::vector<uint32_t> r = f;
                mod_by(r, g, dg, p);
                if (detail::poly_is_zero(r)) return false;
            }
        }
        return true;
    }

    static uint64_t default_modulus(uint32_t p, uint32_t k) {
        if (!detail::is_prime_u32(p)) throw std::invalid_argument("gf: p not prime");
        if (k < 1) throw std::invalid_argument("gf: k must be >= 1");
        uint64_t lead = 1;
        for (uint32_t i = 0; i < k; ++i) lead *= p;
        // lexicographically least encoding = smallest low-coefficient integer
        for (uint64_t c = 0; c < lead; ++c) {
            std::vector<uint32_t> f = detail::decode_poly(c, k, p);
            f.push_back(1);
            if (poly_irreducible(p, f)) return lead + c;
        }
        throw std::logic_error("gf: no irreducible modulus found"); // unreachable
    }

private:
    static void mod_by(std::vector<uint32_t>& f, const std::vector<uint32_t>& g,
                       int dg, uint32_t p) {
        for (int i = detail::poly_deg(f); i >= dg; --i) {
            uint32_t c = f[i];
            if (!c) continue;
            f[i] = 0;
            for (int j = 0; j < dg; ++j)
                f[i - dg + j] = uint32_t((f[i - dg + j] + uint64_t(c) * (p - g[j])) % p);
        }
    }

    void check(elem a) const {
        if (a >= q_) throw std::invalid_argument("gf: element " + std::to_string(a) +
                                                 " out of range for order " + std::to_string(q_));
    }

    uint32_t p_, k_, q_;
    uint64_t modulus_enc_;
    std::vector<uint32_t> mod_;
};

} // namespace mdskit
