#pragma once

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nah/polyfq.hpp"

namespace nah {

struct InsufficientPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { PAdic, FqLaurent };

// sentinel absolute precision for exactly-known elements
inline constexpr int kExactPrec = INT_MAX / 4;

// element of a non-archimedean local field at finite precision.
// digits[i] is the digit of pi^(val+i); digits at exponents in
// [val+digits.size(), prec) are zero; exponents >= prec are unknown.
// for p-adic fields digits lie in [0,p); for Laurent fields each digit
// encodes an element of F_q = F_p[x]/(modulus) in base p.
struct LocalElement {
    bool zero = true;
    int val = 0;
    std::vector<int> digits;
    int prec = kExactPrec;

    bool exact() const { return prec >= kExactPrec; }
};

class LocalField {
public:
    LocalField() = default;
    LocalField(FieldKind kind, int p, int d, int workingPrec = 24);
    // descriptor strings: "Qp:p=3,N=24", "FqLaurent:q=9,N=24", "FqLaurent:p=3,d=2"
    static LocalField parse(const std::string& desc);
    std::string describe() const;

    FieldKind kind() const { return kind_; }
    int p() const { return p_; }
    int d() const { return d_; }
    long long q() const { return q_; }
    int workingPrec() const { return N_; }
    const FqCtx& fqCtx() const { return fq_; }

    // residue-field digit codec (base-p encoding of F_q elements)
    Fq decodeDigit(int v) const;
    int encodeDigit(const Fq& a) const;
    int digitNeg(int a) const;
    int digitAdd(int a, int b) const;  // Laurent only (no carry)
    int digitMul(int a, int b) const;  // Laurent only
    int digitInv(int a) const;         // Laurent only

    LocalElement zeroElem(int prec = kExactPrec) const;
    LocalElement one() const { return fromInteger(1); }
    LocalElement fromInteger(long long n) const;
    LocalElement fromRational(long long num, long long den) const;
    LocalElement uniformizerPow(int k) const;
    LocalElement fromDigits(int val, std::vector<int> digits, int prec = kExactPrec) const;

    LocalElement add(const LocalElement& a, const LocalElement& b) const;
    LocalElement sub(const LocalElement& a, const LocalElement& b) const;
    LocalElement neg(const LocalElement& a) const;
    LocalElement mul(const LocalElement& a, const LocalElement& b) const;
    LocalElement inv(const LocalElement& a) const;
    LocalElement div(const LocalElement& a, const LocalElement& b) const;
    LocalElement mulPow(const LocalElement& a, int k) const;  // a * pi^k
    LocalElement pow(const LocalElement& a, int e) const;
    LocalElement scaleInt(const LocalElement& a, long long n) const;
    LocalElement truncate(const LocalElement& a, int prec) const;

    int valuation(const LocalElement& a) const;
    double absValue(const LocalElement& a) const;
    bool isUnit(const LocalElement& a) const;
    // digit of pi^k; 0 below the support, throws when k >= prec
    int digitAt(const LocalElement& a, int k) const;
    int leadingDigit(const LocalElement& a) const;
    LocalElement unitPart(const LocalElement& a) const;
    // all digits at exponents < m agree (requires both known mod pi^m)
    bool agreesMod(const LocalElement& a, const LocalElement& b, int m) const;

    // residue quadratic symbol of the leading digit (+1 square, -1 not)
    int quadSymbolUnit(const LocalElement& a) const;

    // exact representatives of the units modulo pi^m (leading digit nonzero)
    std::vector<LocalElement> unitReps(int m) const;
    // exact representatives of O / pi^m O
    std::vector<LocalElement> integerReps(int m) const;

    std::string toString(const LocalElement& a) const;

private:
    FieldKind kind_ = FieldKind::PAdic;
    int p_ = 3;
    int d_ = 1;
    long long q_ = 3;
    int N_ = 24;
    FqCtx fq_{3, FpPoly{3, {0, 1}}};

    LocalElement normalized(int base, std::vector<long long> raw, int prec) const;
};

// legendre symbol of a mod odd prime p (0 when p | a)
int legendreSymbol(long long a, int p);

}  // namespace nah
