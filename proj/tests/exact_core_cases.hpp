#pragma once

// Random exact-core instances with known answers: polynomials are built as
// products of irreducibles whose roots are known in closed form.

#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rcurve/rcurve.hpp"

namespace rcurve::test {

struct KnownIrreducible {
    UPoly poly;                // monic
    std::vector<double> real_roots;
    int complex_pairs = 0;
};

inline KnownIrreducible random_irreducible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<long> small(-6, 6);
    KnownIrreducible k;
    switch (kind(rng)) {
        case 0: {  // t - r
            std::uniform_int_distribution<long> den(1, 4);
            Rat r = make_rat(small(rng), den(rng));
            k.poly = UPoly{Rat(-r), Rat(1)};
            k.real_roots = {to_double(r)};
            break;
        }
        case 1: {  // t^2 + b t + c, b^2 < 4c
            long b = small(rng), c = 0;
            std::uniform_int_distribution<long> extra(1, 6);
            c = (b * b) / 4 + extra(rng);
            k.poly = UPoly{make_rat(c), make_rat(b), Rat(1)};
            k.complex_pairs = 1;
            break;
        }
        case 2: {  // t^2 - q, q not a square
            static const long qs[] = {2, 3, 5, 6, 7, 10, 11};
            long q = qs[std::uniform_int_distribution<int>(0, 6)(rng)];
            k.poly = UPoly{make_rat(-q), Rat(0), Rat(1)};
            k.real_roots = {-std::sqrt(double(q)), std::sqrt(double(q))};
            break;
        }
        default: {  // t^3 - p, Eisenstein at p
            static const long ps[] = {2, 3, 5, -2, -3};
            long p = ps[std::uniform_int_distribution<int>(0, 4)(rng)];
            k.poly = UPoly{make_rat(-p), Rat(0), Rat(0), Rat(1)};
            k.real_roots = {std::cbrt(double(p))};
            k.complex_pairs = 1;
            break;
        }
    }
    return k;
}

inline std::string poly_key(const UPoly& p) { return to_string(p); }

/// Multiset of known irreducibles, keyed by their monic text.
struct KnownProduct {
    std::map<std::string, std::pair<KnownIrreducible, unsigned>> parts;

    void add(const KnownIrreducible& k, unsigned mult) {
        auto [it, fresh] = parts.try_emplace(poly_key(k.poly), k, 0);
        it->second.second += mult;
    }
    UPoly value() const {
        UPoly out(Rat(1));
        for (const auto& [key, km] : parts) out = out * pow(km.first.poly, km.second);
        return out;
    }
    UPoly radical() const {
        UPoly out(Rat(1));
        for (const auto& [key, km] : parts) out = out * km.first.poly;
        return out;
    }
    unsigned mult(const std::string& key) const {
        auto it = parts.find(key);
        return it == parts.end() ? 0 : it->second.second;
    }
};

inline Rat random_unit(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 9), den(1, 5), sign(0, 1);
    Rat u = make_rat(num(rng), den(rng));
    return sign(rng) ? Rat(-u) : u;
}

/// One randomized instance; returns an empty string on success, else a description.
inline std::string run_exact_core_instance(std::mt19937_64& rng) {
    std::ostringstream why;
    std::uniform_int_distribution<int> count_a(1, 3), count_c(0, 2);
    std::uniform_int_distribution<int> quarter(0, 3);
    KnownProduct fa, fb;
    auto draw = [&](KnownProduct& into) {
        into.add(random_irreducible(rng), quarter(rng) == 0 ? 2 : 1);
    };
    for (int i = count_a(rng); i > 0; --i) draw(fa);
    for (int i = count_a(rng); i > 0; --i) draw(fb);
    for (int i = count_c(rng); i > 0; --i) {
        KnownIrreducible k = random_irreducible(rng);
        fa.add(k, 1);
        fb.add(k, 1);
    }
    const UPoly f = random_unit(rng) * fa.value();
    const UPoly g = random_unit(rng) * fb.value();
    const std::string tag = " [f = " + to_string(f) + ", g = " + to_string(g) + "]";

    // gcd against the known factorizations
    UPoly expected_gcd(Rat(1));
    for (const auto& [key, km] : fa.parts) {
        unsigned e = std::min(km.second, fb.mult(key));
        if (e > 0) expected_gcd = expected_gcd * pow(km.first.poly, e);
    }
    const UPoly h = monic(gcd(f, g));
    if (h != expected_gcd) return "gcd " + to_string(h) + " != " + to_string(expected_gcd) + tag;
    if (!divides(h, f) || !divides(h, g)) return "gcd does not divide both inputs" + tag;

    // resultant vanishes iff a common factor exists
    const bool res_zero = is_zero(resultant(f, g));
    if (res_zero != (h.degree() >= 1)) return "resultant/gcd disagree" + tag;

    // factorization matches the construction
    auto factors = factor_rational(f);
    UPoly prod(Rat(1));
    for (const auto& fac : factors) {
        prod = prod * pow(fac.poly, fac.multiplicity);
        if (fa.mult(poly_key(fac.poly)) != fac.multiplicity) return "factor " + to_string(fac.poly) + " unexpected" + tag;
    }
    if (factors.size() != fa.parts.size()) return "wrong number of irreducible factors" + tag;
    if (prod != monic(f)) return "factor product differs from f" + tag;

    // squarefree part
    const UPoly sqf = squarefree_part(f);
    if (gcd(sqf, sqf.derivative()).degree() != 0) return "squarefree part is not squarefree" + tag;
    if (sqf != fa.radical()) return "squarefree part differs from the radical" + tag;

    // Sturm counts against the known real roots
    std::vector<double> roots;
    int pairs = 0;
    for (const auto& [key, km] : fa.parts) {
        roots.insert(roots.end(), km.first.real_roots.begin(), km.first.real_roots.end());
        pairs += km.first.complex_pairs;
    }
    if (sturm_real_root_count(sqf) != static_cast<int>(roots.size())) return "Sturm count on R wrong" + tag;
    std::uniform_int_distribution<long> endpoint(-28, 28);
    Rat lo = make_rat(endpoint(rng), 4), hi = make_rat(endpoint(rng), 4);
    if (hi < lo) std::swap(lo, hi);
    int in_range = 0;
    for (double r : roots) in_range += (r > to_double(lo) && r <= to_double(hi)) ? 1 : 0;
    const int counted = sturm_real_root_count(sqf, lo, hi);
    if (counted != in_range) {
        why << "Sturm count on (" << lo << ", " << hi << "] is " << counted << ", expected " << in_range << tag;
        return why.str();
    }

    // complex isolation: deg boxes, real boxes match Sturm, conjugation is an involution
    auto boxes = isolate_complex_roots(sqf);
    if (static_cast<int>(boxes.size()) != sqf.degree()) return "isolate_complex_roots box count wrong" + tag;
    int real_boxes = 0;
    for (const auto& b : boxes) real_boxes += b.is_real() ? 1 : 0;
    if (real_boxes != static_cast<int>(roots.size()) || static_cast<int>(boxes.size()) - real_boxes != 2 * pairs)
        return "real/nonreal box split wrong" + tag;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (boxes[i].is_real()) continue;
        int partners = 0;
        for (std::size_t j = 0; j < boxes.size(); ++j)
            if (j != i && !boxes[j].is_real() && same_point(boxes[i].conj(), boxes[j])) ++partners;
        if (partners != 1) return "conjugate pairing is not an involution" + tag;
    }
    return "";
}

}  // namespace rcurve::test
