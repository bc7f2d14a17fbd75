#pragma once

#include <memory>
#include <utility>

#include "rcurve/interval.hpp"
#include "rcurve/poly.hpp"

namespace rcurve {

/// Element of the number field Q[t]/(q) for an irreducible q. Elements built
/// from plain integers carry no modulus and adopt the one of their partner.
class NFElem {
public:
    NFElem() = default;
    NFElem(int c) : v_(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    NFElem(const Rat& c) : v_(c) {}  // NOLINT(google-explicit-constructor)
    NFElem(std::shared_ptr<const UPoly> mod, const UPoly& v) : mod_(std::move(mod)), v_(v % *mod_) {}

    const UPoly& value() const { return v_; }
    const std::shared_ptr<const UPoly>& modulus() const { return mod_; }

    friend NFElem operator+(const NFElem& a, const NFElem& b) { return make(pick(a, b), a.v_ + b.v_); }
    friend NFElem operator-(const NFElem& a, const NFElem& b) { return make(pick(a, b), a.v_ - b.v_); }
    friend NFElem operator*(const NFElem& a, const NFElem& b) { return make(pick(a, b), a.v_ * b.v_); }
    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }
    friend bool operator==(const NFElem& a, const NFElem& b) { return a.v_ == b.v_; }

    NFElem inverse() const {
        if (v_.is_zero_poly()) throw InvalidInput("number field division by zero");
        if (v_.degree() == 0) return NFElem(mod_, UPoly(Rat(1) / v_[0]), 0);
        if (!mod_) throw std::logic_error("NFElem: inverse without modulus");
        auto eg = ext_gcd(v_, *mod_);
        if (eg.g.degree() != 0) throw std::logic_error("NFElem: modulus not irreducible");
        return NFElem(mod_, eg.s);
    }

    /// Certified enclosure of the value at a root of the modulus inside `at`.
    CBox enclose(const CBox& at) const { return v_.eval_in<CBox>(at); }

private:
    NFElem(std::shared_ptr<const UPoly> mod, UPoly v, int) : mod_(std::move(mod)), v_(std::move(v)) {}
    static const std::shared_ptr<const UPoly>& pick(const NFElem& a, const NFElem& b) { return a.mod_ ? a.mod_ : b.mod_; }
    static NFElem make(const std::shared_ptr<const UPoly>& mod, UPoly v) {
        if (mod && v.degree() >= mod->degree()) v = v % *mod;
        return NFElem(mod, std::move(v), 0);
    }

    std::shared_ptr<const UPoly> mod_;
    UPoly v_;
};

inline bool is_zero(const NFElem& e) { return e.value().is_zero_poly(); }

/// Q[t]/(q) with helpers to move rational polynomials into it.
class NumberField {
public:
    explicit NumberField(const UPoly& q) : mod_(std::make_shared<const UPoly>(monic(q))) {}

    const UPoly& modulus() const { return *mod_; }
    NFElem gen() const { return NFElem(mod_, UPoly::x()); }
    NFElem element(const UPoly& v) const { return NFElem(mod_, v); }
    /// Coefficients of a rational polynomial, lifted into the field.
    Poly<NFElem> lift(const UPoly& p) const {
        std::vector<NFElem> c;
        for (const auto& v : p.coeffs()) c.emplace_back(NFElem(mod_, UPoly(v)));
        return Poly<NFElem>(std::move(c));
    }

private:
    std::shared_ptr<const UPoly> mod_;
};

/// Certified enclosure of g(beta), coefficients evaluated at the root of the
/// field modulus inside `alpha`.
inline CBox enclose_at(const Poly<NFElem>& g, const CBox& alpha, const CBox& beta) {
    CBox acc(0);
    for (std::size_t k = g.size(); k-- > 0;) acc = acc * beta + g.coeffs()[k].enclose(alpha);
    return acc;
}

}  // namespace rcurve
