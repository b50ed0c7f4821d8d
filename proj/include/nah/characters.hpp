#pragma once

#include <complex>

#include "nah/local_field.hpp"

namespace nah {

using cx = std::complex<double>;

// additive character psi(x) = standard(u * pi^{-c} * x) where standard has
// conductor O (trivial on O, nontrivial on pi^{-1}O) and u is a unit twist.
// standard rule: p-adic e^{2 pi i {y}_p}; Laurent e^{2 pi i Tr(y_{-1})/p}.
class AdditiveCharacter {
public:
    AdditiveCharacter() = default;
    static AdditiveCharacter standard(const LocalField& F, int conductorExp = 0);
    static AdditiveCharacter twisted(const LocalField& F, int conductorExp, LocalElement unitTwist);

    const LocalField& field() const { return F_; }
    int conductorExp() const { return c_; }
    const LocalElement& twist() const { return twist_; }

    cx eval(const LocalElement& x) const;
    cx evalPower(const LocalElement& x, int k) const;  // psi(k*x) = psi(x)^k

    AdditiveCharacter inverseChar() const;                  // x -> psi(-x)
    AdditiveCharacter scaledBy(const LocalElement& b) const;  // x -> psi(b*x)

    // self-dual additive measure: vol(O) = q^{-c/2}
    double volO() const;
    // multiplicative measure with vol(O^x)=1: vol of a coset x0+pi^M O
    // inside the unit shell of x0 is q^{-M+val(x0)} / (1 - 1/q)
    double volUnits() const { return 1.0; }

private:
    LocalField F_;
    int c_ = 0;
    LocalElement twist_;
};

enum class UnitCharKind { Trivial, UnramQuad, RamQuad };

// quasi-character chi(x) = chi0(x) * |x|^s with chi0 quadratic (or trivial)
struct MultiplicativeCharacter {
    UnitCharKind kind = UnitCharKind::Trivial;
    int ramSign = 1;  // chi0(pi) when ramified
    cx s = 0.0;

    bool ramified() const { return kind == UnitCharKind::RamQuad; }
    // chi0(pi): +1 trivial, -1 unramified quadratic, ramSign when ramified
    int unitlessPiSign() const {
        return kind == UnitCharKind::Trivial ? 1 : kind == UnitCharKind::UnramQuad ? -1 : ramSign;
    }
};

MultiplicativeCharacter normChar(cx s = 0.0);
MultiplicativeCharacter unramQuadChar(cx s = 0.0);
MultiplicativeCharacter ramQuadChar(int chiPiSign, cx s = 0.0);
// epsilon = eta(pi) for unramified quadratic data: +1 split, -1 inert
MultiplicativeCharacter etaFromEpsilon(int epsilon, cx s = 0.0);

cx charEval(const LocalField& F, const MultiplicativeCharacter& chi, const LocalElement& x);
// chi0(x) alone, no |x|^s factor
cx charUnitEval(const LocalField& F, const MultiplicativeCharacter& chi, const LocalElement& x);
cx charEvalAtPiPow(const LocalField& F, const MultiplicativeCharacter& chi, int k);
// chi(pi) = chi0(pi) q^{-s}
cx charPiValue(const LocalField& F, const MultiplicativeCharacter& chi);

MultiplicativeCharacter charMul(const MultiplicativeCharacter& a, const MultiplicativeCharacter& b);
MultiplicativeCharacter charInv(const MultiplicativeCharacter& a);
MultiplicativeCharacter charShift(const MultiplicativeCharacter& a, cx ds);
bool charKindEq(const MultiplicativeCharacter& a, const MultiplicativeCharacter& b);
bool charEq(const MultiplicativeCharacter& a, const MultiplicativeCharacter& b, double tol = 1e-12);

}  // namespace nah
