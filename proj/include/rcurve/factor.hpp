#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "rcurve/poly.hpp"

namespace rcurve {

namespace detail {

// Polynomials over Z/p for a word-sized odd prime p, lowest degree first.
class ZpPoly {
public:
    using Word = std::uint64_t;

    ZpPoly(Word p, std::vector<Word> c) : p_(p), c_(std::move(c)) { trim(); }
    explicit ZpPoly(Word p) : p_(p) {}

    Word p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Word>& coeffs() const { return c_; }
    Word operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    Word lead() const { return c_.back(); }

    static ZpPoly x(Word p) { return ZpPoly(p, {0, 1}); }

    Word inv(Word a) const { return powmod(a, p_ - 2); }
    Word powmod(Word a, Word e) const {
        Word r = 1;
        a %= p_;
        while (e != 0) {
            if (e & 1U) r = r * a % p_;
            a = a * a % p_;
            e >>= 1U;
        }
        return r;
    }

    friend ZpPoly operator+(const ZpPoly& a, const ZpPoly& b) {
        std::vector<Word> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % a.p_;
        return ZpPoly(a.p_, std::move(r));
    }
    friend ZpPoly operator-(const ZpPoly& a, const ZpPoly& b) {
        std::vector<Word> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + a.p_ - b[i]) % a.p_;
        return ZpPoly(a.p_, std::move(r));
    }
    friend ZpPoly operator*(const ZpPoly& a, const ZpPoly& b) {
        if (a.is_zero() || b.is_zero()) return ZpPoly(a.p_);
        std::vector<Word> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + a.c_[i] * b.c_[j]) % a.p_;
        }
        return ZpPoly(a.p_, std::move(r));
    }
    ZpPoly scaled(Word s) const {
        std::vector<Word> r = c_;
        for (auto& v : r) v = v * (s % p_) % p_;
        return ZpPoly(p_, std::move(r));
    }

    std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& d) const {
        if (d.is_zero()) throw std::logic_error("ZpPoly division by zero");
        if (degree() < d.degree()) return {ZpPoly(p_), *this};
        std::vector<Word> rem = c_;
        std::vector<Word> quot(static_cast<std::size_t>(degree() - d.degree() + 1), 0);
        const Word il = inv(d.lead());
        const auto dd = static_cast<std::size_t>(d.degree());
        for (std::size_t k = quot.size(); k-- > 0;) {
            Word c = rem[k + dd] * il % p_;
            quot[k] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) rem[k + j] = (rem[k + j] + p_ - c * d.c_[j] % p_) % p_;
        }
        rem.resize(dd);
        return {ZpPoly(p_, std::move(quot)), ZpPoly(p_, std::move(rem))};
    }
    ZpPoly operator%(const ZpPoly& d) const { return divmod(d).second; }
    ZpPoly operator/(const ZpPoly& d) const { return divmod(d).first; }

    ZpPoly monic() const { return is_zero() ? *this : scaled(inv(lead())); }
    ZpPoly derivative() const {
        std::vector<Word> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * (i % p_) % p_);
        return ZpPoly(p_, std::move(r));
    }

    friend ZpPoly gcd(ZpPoly a, ZpPoly b) {
        while (!b.is_zero()) {
            ZpPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// (s, t) with s*a + t*b = 1, assuming gcd(a, b) = 1.
    friend std::pair<ZpPoly, ZpPoly> bezout(const ZpPoly& a, const ZpPoly& b) {
        const Word p = a.p_;
        ZpPoly r0 = a, r1 = b, s0(p, {1}), s1(p), t0(p), t1(p, {1});
        while (!r1.is_zero()) {
            auto [q, r] = r0.divmod(r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            ZpPoly s2 = s0 - q * s1;
            ZpPoly t2 = t0 - q * t1;
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.degree() != 0) throw std::logic_error("bezout: inputs not coprime mod p");
        Word il = r0.inv(r0.lead());
        return {s0.scaled(il), t0.scaled(il)};
    }

    ZpPoly powmod(const Integer& e, const ZpPoly& mod) const {
        ZpPoly result(p_, {1});
        ZpPoly base = *this % mod;
        const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            result = (result * result) % mod;
            if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = (result * base) % mod;
        }
        return result;
    }

    friend bool operator==(const ZpPoly& a, const ZpPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    Word p_;
    std::vector<Word> c_;
};

inline ZpPoly::Word mod_word(const Integer& z, ZpPoly::Word p) {
    Integer r = z % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

using ZPoly = std::vector<Integer>;  // integer polynomial, lowest degree first

inline void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZpPoly reduce_mod(const ZPoly& f, ZpPoly::Word p) {
    std::vector<ZpPoly::Word> c;
    c.reserve(f.size());
    for (const auto& z : f) c.push_back(mod_word(z, p));
    return ZpPoly(p, std::move(c));
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline void zmod(ZPoly& f, const Integer& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    trim(f);
}

inline void symmetric_mod(ZPoly& f, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    trim(f);
}

/// Exact division over Z; returns false if b does not divide a.
inline bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
    if (b.empty()) return false;
    if (a.size() < b.size()) {
        if (a.empty()) {
            quot.clear();
            return true;
        }
        return false;
    }
    ZPoly rem = a;
    ZPoly q(a.size() - b.size() + 1, 0);
    const Integer& lb = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        const Integer& top = rem[k + b.size() - 1];
        if (top % lb != 0) return false;
        Integer c = top / lb;
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    trim(q);
    quot = std::move(q);
    return true;
}

inline ZPoly content_free(ZPoly f) {
    Integer g = 0;
    for (const auto& c : f) g = int_gcd(g, c);
    if (g != 0)
        for (auto& c : f) c /= g;
    if (!f.empty() && f.back() < 0)
        for (auto& c : f) c = -c;
    return f;
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial mod p. Deterministic seed.
inline std::vector<ZpPoly> factor_mod_p(const ZpPoly& f_in) {
    const auto p = f_in.p();
    std::vector<std::pair<ZpPoly, int>> ddf;
    ZpPoly f = f_in.monic();
    ZpPoly h = ZpPoly::x(p);
    const ZpPoly x = ZpPoly::x(p);
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = h.powmod(Integer(static_cast<unsigned long>(p)), f);
        ZpPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            ddf.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) ddf.emplace_back(f, f.degree());

    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<ZpPoly> out;
    std::function<void(const ZpPoly&, int)> split = [&](const ZpPoly& g, int d) {
        if (g.degree() == d) {
            out.push_back(g.monic());
            return;
        }
        Integer e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
        e = (e - 1) / 2;
        while (true) {
            std::vector<ZpPoly::Word> coeffs(static_cast<std::size_t>(g.degree()));
            for (auto& c : coeffs) c = rng() % p;
            ZpPoly a(p, coeffs);
            if (a.degree() < 1) continue;
            ZpPoly b = a.powmod(e, g) - ZpPoly(p, {1});
            ZpPoly c = gcd(g, b);
            if (c.degree() > 0 && c.degree() < g.degree()) {
                split(c, d);
                split(g / c, d);
                return;
            }
        }
    };
    for (const auto& [g, d] : ddf) split(g, d);
    return out;
}

// Linear Hensel lifting of f = g*h (mod p), g monic, to modulus p^k.
inline void hensel_lift_pair(const ZPoly& f, ZPoly& g, ZPoly& h, ZpPoly::Word p, unsigned k) {
    const ZpPoly gp = reduce_mod(g, p);
    const ZpPoly hp = reduce_mod(h, p);
    auto [s, t] = bezout(gp, hp);
    Integer pj = static_cast<unsigned long>(p);
    for (unsigned j = 1; j < k; ++j) {
        ZPoly diff = f;
        ZPoly gh = zmul(g, h);
        diff.resize(std::max(diff.size(), gh.size()), 0);
        for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
        for (auto& c : diff) {
            if (c % pj != 0) throw std::logic_error("hensel: factorization lost");
            c /= pj;
        }
        trim(diff);
        ZpPoly e = reduce_mod(diff, p);
        auto [q, r] = (t * e).divmod(gp);
        ZpPoly dh = s * e + q * hp;
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
            if (g.size() <= i) g.resize(i + 1, 0);
            g[i] += pj * static_cast<unsigned long>(r.coeffs()[i]);
        }
        for (std::size_t i = 0; i < dh.coeffs().size(); ++i) {
            if (h.size() <= i) h.resize(i + 1, 0);
            h[i] += pj * static_cast<unsigned long>(dh.coeffs()[i]);
        }
        pj *= static_cast<unsigned long>(p);
        zmod(g, pj);
        zmod(h, pj);
    }
}

inline ZPoly from_zp(const ZpPoly& a) {
    ZPoly r;
    for (auto c : a.coeffs()) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

// Lifts f = lc * u_1 ... u_r (mod p) to mod p^k; u_i monic.
inline std::vector<ZPoly> hensel_lift_all(const ZPoly& f, const std::vector<ZpPoly>& us, ZpPoly::Word p, unsigned k,
                                          const Integer& modulus) {
    std::vector<ZPoly> lifted;
    ZPoly target = f;
    zmod(target, modulus);
    for (std::size_t i = 0; i + 1 < us.size(); ++i) {
        ZPoly g = from_zp(us[i]);
        ZpPoly rest_p = reduce_mod(target, p) / us[i];
        ZPoly h = from_zp(rest_p);
        hensel_lift_pair(target, g, h, p, k);
        lifted.push_back(g);
        target = h;
    }
    // The last factor absorbs the leading coefficient; normalize it to monic.
    Integer lc = target.back();
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    for (auto& c : target) c = c * inv;
    zmod(target, modulus);
    lifted.push_back(target);
    return lifted;
}

inline bool is_small_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Factors a primitive squarefree integer polynomial of degree >= 1 over Z.
inline std::vector<ZPoly> zassenhaus(const ZPoly& f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    // Prime choice: lc not divisible, squarefree mod p; prefer fewest modular factors.
    std::vector<ZpPoly> best_factors;
    ZpPoly::Word best_p = 0;
    int good = 0;
    for (unsigned long cand = 3; good < 6 && cand < 5000; cand += 2) {
        if (!is_small_prime(cand)) continue;
        if (mod_word(f.back(), cand) == 0) continue;
        ZpPoly fp = reduce_mod(f, cand);
        if (gcd(fp, fp.derivative()).degree() != 0) continue;
        ++good;
        auto fs = factor_mod_p(fp);
        if (best_p == 0 || fs.size() < best_factors.size()) {
            best_p = cand;
            best_factors = std::move(fs);
        }
        if (best_factors.size() == 1) return {f};
    }
    if (best_p == 0) throw std::logic_error("zassenhaus: no suitable prime");

    // Coefficient bound for any factor: 2^n * ||f||_2, times |lc| for the lc-scaled candidates.
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer bound = sqrt(norm2) + 1;
    bound <<= static_cast<unsigned>(n);
    bound *= abs(f.back());
    bound *= 2;
    unsigned k = 1;
    Integer modulus = static_cast<unsigned long>(best_p);
    while (modulus <= bound) {
        modulus *= static_cast<unsigned long>(best_p);
        ++k;
    }
    std::vector<ZPoly> lifted = hensel_lift_all(f, best_factors, best_p, k, modulus);

    std::vector<ZPoly> result;
    ZPoly rest = f;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

    std::size_t subset_size = 1;
    while (2 * subset_size <= remaining.size()) {
        bool found = false;
        const std::size_t r = remaining.size();
        std::vector<std::size_t> idx(subset_size);
        for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            const Integer& lc = rest.back();
            ZPoly cand{lc};
            for (auto i : idx) {
                cand = zmul(cand, lifted[remaining[i]]);
                zmod(cand, modulus);
            }
            symmetric_mod(cand, modulus);
            cand = content_free(cand);
            ZPoly quot;
            if (!cand.empty() && cand.size() > 1 && zdivide(rest, cand, quot)) {
                result.push_back(cand);
                rest = quot;
                std::vector<std::size_t> next;
                for (std::size_t i = 0; i < r; ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(remaining[i]);
                remaining = std::move(next);
                found = true;
                break;
            }
            // next combination
            std::size_t pos = subset_size;
            while (pos > 0 && idx[pos - 1] == r - subset_size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (rest.size() > 1) result.push_back(content_free(rest));
    return result;
}

}  // namespace detail

/// Irreducible factor of a rational polynomial with its multiplicity.
struct Factor {
    UPoly poly;  // monic, irreducible over Q
    unsigned multiplicity;
};

/// Complete factorization over Q: f = c * prod factor^multiplicity.
/// Factors are monic and sorted by (multiplicity, degree, coefficients).
inline std::vector<Factor> factor_rational(const UPoly& f) {
    if (f.degree() < 1) throw InvalidInput("factor_rational needs a non-constant polynomial");
    std::vector<Factor> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        UPoly prim = primitive_integer_part(part);
        detail::ZPoly z;
        for (const auto& c : prim.coeffs()) z.push_back(c.get_num());
        for (const auto& zf : detail::zassenhaus(z)) {
            std::vector<Rat> coeffs;
            for (const auto& c : zf) coeffs.emplace_back(c);
            out.push_back({monic(UPoly(std::move(coeffs))), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        for (std::size_t i = a.poly.size(); i-- > 0;) {
            int c = cmp(a.poly[i], b.poly[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

/// Irreducible factors of the squarefree part, without multiplicities.
inline std::vector<UPoly> irreducible_factors(const UPoly& f) {
    std::vector<UPoly> out;
    for (auto& fac : factor_rational(f)) out.push_back(std::move(fac.poly));
    std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = a.size(); i-- > 0;) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

}  // namespace rcurve
