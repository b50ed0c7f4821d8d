#include "nah/characters.hpp"

#include <cmath>
#include <numbers>

namespace nah {

AdditiveCharacter AdditiveCharacter::standard(const LocalField& F, int conductorExp) {
    return twisted(F, conductorExp, F.one());
}

AdditiveCharacter AdditiveCharacter::twisted(const LocalField& F, int conductorExp, LocalElement unitTwist) {
    if (!F.isUnit(unitTwist)) throw std::invalid_argument("additive character twist must be a unit");
    AdditiveCharacter psi;
    psi.F_ = F;
    psi.c_ = conductorExp;
    psi.twist_ = std::move(unitTwist);
    return psi;
}

cx AdditiveCharacter::eval(const LocalElement& x) const {
    if (x.zero && x.exact()) return 1.0;
    LocalElement y = F_.mulPow(F_.mul(twist_, x), -c_);
    if (y.prec < 0) throw InsufficientPrecision("additive character needs digits below O");
    if (y.zero || y.val >= 0) return 1.0;
    double frac = 0.0;
    if (F_.kind() == FieldKind::PAdic) {
        double pk = std::pow((double)F_.p(), (double)y.val);
        for (int k = y.val; k < 0; k++) {
            frac += F_.digitAt(y, k) * pk;
            pk *= F_.p();
        }
        frac -= std::floor(frac);
    } else {
        long long t = fqTrace(F_.fqCtx(), F_.decodeDigit(F_.digitAt(y, -1)));
        frac = (double)t / F_.p();
    }
    double ang = 2.0 * std::numbers::pi * frac;
    return {std::cos(ang), std::sin(ang)};
}

cx AdditiveCharacter::evalPower(const LocalElement& x, int k) const {
    if (k == 0) return 1.0;
    return eval(F_.scaleInt(x, k));
}

AdditiveCharacter AdditiveCharacter::inverseChar() const {
    AdditiveCharacter psi = *this;
    psi.twist_ = F_.neg(twist_);
    return psi;
}

AdditiveCharacter AdditiveCharacter::scaledBy(const LocalElement& b) const {
    // psi(bx) = standard(u pi^{-c} b x): conductor c - val(b), twist u*unit(b)
    AdditiveCharacter psi = *this;
    psi.c_ = c_ - F_.valuation(b);
    psi.twist_ = F_.mul(twist_, F_.unitPart(b));
    return psi;
}

double AdditiveCharacter::volO() const { return std::pow((double)F_.q(), -0.5 * c_); }

MultiplicativeCharacter normChar(cx s) { return {UnitCharKind::Trivial, 1, s}; }
MultiplicativeCharacter unramQuadChar(cx s) { return {UnitCharKind::UnramQuad, 1, s}; }
MultiplicativeCharacter ramQuadChar(int chiPiSign, cx s) { return {UnitCharKind::RamQuad, chiPiSign, s}; }
MultiplicativeCharacter etaFromEpsilon(int epsilon, cx s) {
    return epsilon == 1 ? normChar(s) : unramQuadChar(s);
}

cx charUnitEval(const LocalField& F, const MultiplicativeCharacter& chi, const LocalElement& x) {
    if (x.zero) throw std::domain_error("character at zero");
    switch (chi.kind) {
        case UnitCharKind::Trivial: return 1.0;
        case UnitCharKind::UnramQuad: return x.val % 2 == 0 ? 1.0 : -1.0;
        case UnitCharKind::RamQuad: {
            double u = F.quadSymbolUnit(F.unitPart(x));
            double pi = x.val % 2 == 0 ? 1.0 : chi.ramSign;
            return u * pi;
        }
    }
    return 1.0;
}

cx charEval(const LocalField& F, const MultiplicativeCharacter& chi, const LocalElement& x) {
    cx u = charUnitEval(F, chi, x);
    cx mod = std::exp(-chi.s * (double)x.val * std::log((double)F.q()));
    return u * mod;
}

cx charPiValue(const LocalField& F, const MultiplicativeCharacter& chi) {
    return (double)chi.unitlessPiSign() * std::exp(-chi.s * std::log((double)F.q()));
}

cx charEvalAtPiPow(const LocalField& F, const MultiplicativeCharacter& chi, int k) {
    return std::pow(charPiValue(F, chi), k);
}

MultiplicativeCharacter charMul(const MultiplicativeCharacter& a, const MultiplicativeCharacter& b) {
    bool ram = a.ramified() != b.ramified();
    int v = a.unitlessPiSign() * b.unitlessPiSign();
    MultiplicativeCharacter r;
    r.s = a.s + b.s;
    if (ram) {
        r.kind = UnitCharKind::RamQuad;
        r.ramSign = v;
    } else {
        r.kind = v == 1 ? UnitCharKind::Trivial : UnitCharKind::UnramQuad;
        r.ramSign = 1;
    }
    return r;
}

MultiplicativeCharacter charInv(const MultiplicativeCharacter& a) {
    MultiplicativeCharacter r = a;
    r.s = -a.s;
    return r;
}

MultiplicativeCharacter charShift(const MultiplicativeCharacter& a, cx ds) {
    MultiplicativeCharacter r = a;
    r.s += ds;
    return r;
}

bool charKindEq(const MultiplicativeCharacter& a, const MultiplicativeCharacter& b) {
    if (a.kind != b.kind) return false;
    if (a.ramified() && a.ramSign != b.ramSign) return false;
    return true;
}

bool charEq(const MultiplicativeCharacter& a, const MultiplicativeCharacter& b, double tol) {
    return charKindEq(a, b) && std::abs(a.s - b.s) < tol;
}

}  // namespace nah
