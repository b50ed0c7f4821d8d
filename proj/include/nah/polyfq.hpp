#pragma once
// univariate polynomials over a prime field F_p, dense ascending coefficients in [0,p)

#include <cstdint>
#include <string>
#include <vector>

namespace nah {

struct FpPoly {
    int p = 0;
    std::vector<int> c;  // c[i] coeff of X^i, no trailing zeros

    bool isZero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }  // -1 for zero
    int leading() const { return c.empty() ? 0 : c.back(); }
    int coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : 0; }
    bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }
};

FpPoly fpZero(int p);
FpPoly fpConst(int p, long long v);
FpPoly fpX(int p);                       // the variable
FpPoly fpFromCoeffs(int p, std::vector<long long> coeffs);
FpPoly fpAdd(const FpPoly& a, const FpPoly& b);
FpPoly fpSub(const FpPoly& a, const FpPoly& b);
FpPoly fpNeg(const FpPoly& a);
FpPoly fpMul(const FpPoly& a, const FpPoly& b);
FpPoly fpScale(const FpPoly& a, long long k);
// division with remainder, b != 0
void fpDivRem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fpMod(const FpPoly& a, const FpPoly& b);
FpPoly fpDiv(const FpPoly& a, const FpPoly& b);
FpPoly fpGcd(FpPoly a, FpPoly b);        // monic gcd
FpPoly fpPowMod(const FpPoly& base, long long e, const FpPoly& mod);
FpPoly fpMakeMonic(const FpPoly& a);
// derivative
FpPoly fpDeriv(const FpPoly& a);
// inverse of a mod m, gcd(a,m)=1
FpPoly fpInvMod(const FpPoly& a, const FpPoly& m);
long long fpEval(const FpPoly& a, long long x);  // value in F_p

bool fpIsIrreducible(const FpPoly& a);
// all monic irreducibles of exact degree d, lexicographic by (c_0,...,c_{d-1})
std::vector<FpPoly> monicIrreducibles(int p, int d);
// deterministic choice used for abstract residue-field extensions
FpPoly defaultModulus(int p, int d);
// complete factorisation into monic irreducibles with multiplicity (constant discarded)
std::vector<std::pair<FpPoly, int>> fpFactor(const FpPoly& a);

std::string fpToString(const FpPoly& a, const std::string& var = "t");
// parse sums of k*var^e terms, e.g. "t^3+2t+1"; also "1", "t"
FpPoly fpParse(int p, const std::string& s, const std::string& var = "t");

long long modPow(long long b, long long e, long long m);
long long modInv(long long a, long long m);

// residue-field context F_q = F_p[x]/(modulus), q = p^deg
struct FqCtx {
    int p = 0;
    FpPoly modulus;  // monic irreducible
    int d() const { return modulus.deg(); }
    long long q() const {
        long long r = 1;
        for (int i = 0; i < d(); i++) r *= p;
        return r;
    }
};

using Fq = FpPoly;  // reduced mod ctx.modulus

Fq fqAdd(const FqCtx& k, const Fq& a, const Fq& b);
Fq fqSub(const FqCtx& k, const Fq& a, const Fq& b);
Fq fqMul(const FqCtx& k, const Fq& a, const Fq& b);
Fq fqNeg(const FqCtx& k, const Fq& a);
Fq fqInv(const FqCtx& k, const Fq& a);
Fq fqPow(const FqCtx& k, const Fq& a, long long e);
// enumerate all field elements (lex order), index 0 is zero
std::vector<Fq> fqAll(const FqCtx& k);
// quadratic residue symbol on F_q^*: +1 square, -1 nonsquare; 0 for zero
int fqQuadSymbol(const FqCtx& k, const Fq& a);
// absolute trace to F_p
long long fqTrace(const FqCtx& k, const Fq& a);

}  // namespace nah
