#pragma once

#include <string>
#include <vector>

#include "nah/characters.hpp"
#include "nah/errors.hpp"
#include "nah/local_field.hpp"

namespace nah {

// a + pi^n O; canonical when center is exact zero or val(center) < radius
struct Coset {
    LocalElement center;
    int radius = 0;
};

// value coeff * psi^{-1}(modFreq * x) on the coset, 0 elsewhere
struct RegularTerm {
    Coset coset;
    LocalElement modFreq;  // exact; exact zero means no modulation
    cx coeff = 0.0;
};

enum class TailLoc { At0, AtMinus1, AtInf };
enum class TailKind { Pure, PsiAtInverse, PsiAtPoint, Kloosterman };

// asymptotic term in the germ variable z (z = xi at 0/inf, z = xi+1 at -1):
//   Pure:         (c0 + c1*(-val z)) * chi(z)
//   PsiAtInverse: (c0 + c1*(-val z)) * psi^psiSign(1/z) * chi(z)
//   PsiAtPoint:   (c0 + c1*(-val z)) * psi^psiSign(z) * chi(z)
//   Kloosterman:  (c0 + c1*(-val z)) * K(kloosSign * z) * chi(z)
// region: At0/AtMinus1 valid for val(z) >= cutoff; AtInf for val(z) <= -cutoff
struct TailTerm {
    TailLoc loc = TailLoc::At0;
    int cutoff = 1;
    TailKind kind = TailKind::Pure;
    MultiplicativeCharacter chi;
    cx c0 = 0.0;
    cx c1 = 0.0;
    int psiSign = 1;
    int kloosSign = 1;
};

// Schwartz-Bruhat function enriched with tail terms; evaluation is additive
// over all terms whose support/region contains the point
struct ExtendedFunction {
    LocalField F;
    AdditiveCharacter psi;
    std::vector<RegularTerm> reg;
    std::vector<TailTerm> tails;
};

ExtendedFunction makeZero(const LocalField& F, const AdditiveCharacter& psi);
// indicator of a + pi^n O
ExtendedFunction indicatorCoset(const LocalField& F, const AdditiveCharacter& psi,
                                const LocalElement& a, int n, cx coeff = 1.0);
ExtendedFunction indicatorO(const LocalField& F, const AdditiveCharacter& psi);
ExtendedFunction indicatorUnits(const LocalField& F, const AdditiveCharacter& psi);

bool cosetContains(const LocalField& F, const Coset& c, const LocalElement& x);

// K(xi): 0 unless val(xi) = -2m < 0; else the complete exponential sum
// over the balanced shell, with self-dual additive measure
cx kloostermanValue(const LocalField& F, const AdditiveCharacter& psi, const LocalElement& xi);

cx evaluate(const ExtendedFunction& f, const LocalElement& xi);
// value of one tail term at a point of its region (z already the germ variable)
cx tailTermValueAt(const LocalField& F, const AdditiveCharacter& psi, const TailTerm& t,
                   const LocalElement& z);

// exact expansion of a tail term on one shell of the germ variable into
// regular terms (in the xi variable, including the -1 shift)
std::vector<RegularTerm> expandTailShell(const LocalField& F, const AdditiveCharacter& psi,
                                         const TailTerm& t, int shellVal);

ExtendedFunction canonicalize(const ExtendedFunction& f);
// raise every tail at loc to at least newCutoff, moving shells to regular terms
ExtendedFunction clipTails(const ExtendedFunction& f, TailLoc loc, int newCutoff);

ExtendedFunction add(const ExtendedFunction& f, const ExtendedFunction& g);
ExtendedFunction scale(const ExtendedFunction& f, cx k);
ExtendedFunction multiplyPointwise(const ExtendedFunction& f, const ExtendedFunction& g);
// multiply by chi(xi + delta), delta in {0, 1}
ExtendedFunction multiplyByShiftedCharacter(const ExtendedFunction& f,
                                            const MultiplicativeCharacter& chi, int delta);
// normalized dilation (a.f)(x) = |a|^{1/2} f(a x)
ExtendedFunction unitaryScale(const ExtendedFunction& f, const LocalElement& a);
// x -> -x; requires no tail at -1
ExtendedFunction reflect(const ExtendedFunction& f);

struct ComparisonReport {
    bool equal = false;
    double maxDiscrepancy = 0.0;
    std::string worstPoint;
};
ComparisonReport equalsWithin(const ExtendedFunction& f, const ExtendedFunction& g, double tol);

// deterministic evaluation grid covering all shells reached by either
// function plus deep tail witnesses (and -1 neighborhood points)
std::vector<LocalElement> sampleGrid(const ExtendedFunction& f, const ExtendedFunction& g);

enum class SpaceTag { PlainCompact, BabyX, S1, S2, S3, S4, Zs, Ws };

struct SpaceParams {
    cx s = 0.0;
    cx t = 0.0;
    MultiplicativeCharacter eta;  // eta_v with exponent 0
};

// structural membership: every tail term matches an allowed pattern
bool inSpace(const ExtendedFunction& f, SpaceTag tag, const SpaceParams& p, double tol = 1e-7);
void requireSpace(const ExtendedFunction& f, SpaceTag tag, const SpaceParams& p, double tol = 1e-7);

std::string toJson(const ExtendedFunction& f);
ExtendedFunction fromJson(const LocalField& F, const AdditiveCharacter& psi, const std::string& text);

}  // namespace nah
