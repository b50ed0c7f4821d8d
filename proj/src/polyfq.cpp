#include "nah/polyfq.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nah {

static void trim(FpPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

static int normCoeff(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return (int)r;
}

long long modPow(long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

long long modInv(long long a, long long m) { return modPow(a, m - 2, m); }  // m prime

FpPoly fpZero(int p) { return FpPoly{p, {}}; }

FpPoly fpConst(int p, long long v) {
    FpPoly a{p, {normCoeff(v, p)}};
    trim(a);
    return a;
}

FpPoly fpX(int p) { return FpPoly{p, {0, 1}}; }

FpPoly fpFromCoeffs(int p, std::vector<long long> coeffs) {
    FpPoly a{p, {}};
    a.c.reserve(coeffs.size());
    for (long long v : coeffs) a.c.push_back(normCoeff(v, p));
    trim(a);
    return a;
}

FpPoly fpAdd(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, {}};
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.resize(n, 0);
    for (size_t i = 0; i < n; i++) r.c[i] = normCoeff((long long)a.coeff(i) + b.coeff(i), a.p);
    trim(r);
    return r;
}

FpPoly fpNeg(const FpPoly& a) {
    FpPoly r = a;
    for (int& v : r.c) v = v ? a.p - v : 0;
    return r;
}

FpPoly fpSub(const FpPoly& a, const FpPoly& b) { return fpAdd(a, fpNeg(b)); }

FpPoly fpMul(const FpPoly& a, const FpPoly& b) {
    if (a.isZero() || b.isZero()) return fpZero(a.p);
    FpPoly r{a.p, std::vector<int>(a.c.size() + b.c.size() - 1, 0)};
    for (size_t i = 0; i < a.c.size(); i++) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); j++)
            r.c[i + j] = normCoeff(r.c[i + j] + (long long)a.c[i] * b.c[j], a.p);
    }
    trim(r);
    return r;
}

FpPoly fpScale(const FpPoly& a, long long k) {
    FpPoly r = a;
    int kk = normCoeff(k, a.p);
    for (int& v : r.c) v = normCoeff((long long)v * kk, a.p);
    trim(r);
    return r;
}

void fpDivRem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    if (b.isZero()) throw std::domain_error("poly division by zero");
    int p = a.p;
    q = fpZero(p);
    r = a;
    long long invLead = modInv(b.leading(), p);
    while (!r.isZero() && r.deg() >= b.deg()) {
        int shift = r.deg() - b.deg();
        long long coef = r.leading() * invLead % p;
        if (q.deg() < shift) q.c.resize(shift + 1, 0);
        q.c[shift] = normCoeff(q.c[shift] + coef, p);
        for (int i = 0; i <= b.deg(); i++)
            r.c[i + shift] = normCoeff(r.c[i + shift] - coef * b.c[i], p);
        trim(r);
    }
    trim(q);
}

FpPoly fpMod(const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    fpDivRem(a, b, q, r);
    return r;
}

FpPoly fpDiv(const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    fpDivRem(a, b, q, r);
    return q;
}

FpPoly fpMakeMonic(const FpPoly& a) {
    if (a.isZero()) return a;
    return fpScale(a, modInv(a.leading(), a.p));
}

FpPoly fpGcd(FpPoly a, FpPoly b) {
    while (!b.isZero()) {
        FpPoly r = fpMod(a, b);
        a = b;
        b = r;
    }
    return fpMakeMonic(a);
}

FpPoly fpPowMod(const FpPoly& base, long long e, const FpPoly& mod) {
    FpPoly r = fpConst(base.p, 1), b = fpMod(base, mod);
    while (e > 0) {
        if (e & 1) r = fpMod(fpMul(r, b), mod);
        b = fpMod(fpMul(b, b), mod);
        e >>= 1;
    }
    return r;
}

FpPoly fpDeriv(const FpPoly& a) {
    FpPoly r{a.p, {}};
    for (int i = 1; i <= a.deg(); i++) r.c.push_back(normCoeff((long long)a.c[i] * i, a.p));
    trim(r);
    return r;
}

FpPoly fpInvMod(const FpPoly& a, const FpPoly& m) {
    // extended euclid
    FpPoly r0 = m, r1 = fpMod(a, m);
    FpPoly s0 = fpZero(a.p), s1 = fpConst(a.p, 1);
    while (!r1.isZero()) {
        FpPoly q, r2;
        fpDivRem(r0, r1, q, r2);
        FpPoly s2 = fpSub(s0, fpMul(q, s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0.deg() != 0) throw std::domain_error("not invertible mod m");
    return fpMod(fpScale(s0, modInv(r0.leading(), a.p)), m);
}

long long fpEval(const FpPoly& a, long long x) {
    long long r = 0;
    x = normCoeff(x, a.p);
    for (int i = a.deg(); i >= 0; i--) r = (r * x + a.c[i]) % a.p;
    return r;
}

bool fpIsIrreducible(const FpPoly& a) {
    int d = a.deg();
    if (d <= 0) return false;
    if (d == 1) return true;
    // x^(p^i) mod a; irreducible iff x^(p^d) == x and gcd(x^(p^(d/l)) - x, a) = 1 for prime l | d
    FpPoly x = fpX(a.p);
    FpPoly xp = x;
    std::vector<FpPoly> frob(d + 1);  // frob[i] = x^(p^i) mod a
    frob[0] = x;
    for (int i = 1; i <= d; i++) frob[i] = fpPowMod(frob[i - 1], a.p, a);
    if (!(frob[d] == fpMod(x, a))) return false;
    for (int l = 2; l <= d; l++) {
        if (d % l) continue;
        bool prime = true;
        for (int m = 2; m * m <= l; m++)
            if (l % m == 0) prime = false;
        if (!prime) continue;
        FpPoly g = fpGcd(fpSub(frob[d / l], x), a);
        if (g.deg() != 0) return false;
    }
    return true;
}

std::vector<FpPoly> monicIrreducibles(int p, int d) {
    std::vector<FpPoly> out;
    long long count = 1;
    for (int i = 0; i < d; i++) count *= p;
    for (long long idx = 0; idx < count; idx++) {
        FpPoly a{p, std::vector<int>(d + 1, 0)};
        long long k = idx;
        for (int i = 0; i < d; i++) {
            a.c[i] = (int)(k % p);
            k /= p;
        }
        a.c[d] = 1;
        if (fpIsIrreducible(a)) out.push_back(a);
    }
    return out;
}

FpPoly defaultModulus(int p, int d) {
    if (d == 1) return fpX(p);
    long long count = 1;
    for (int i = 0; i < d; i++) count *= p;
    for (long long idx = 0; idx < count; idx++) {
        FpPoly a{p, std::vector<int>(d + 1, 0)};
        long long k = idx;
        for (int i = 0; i < d; i++) {
            a.c[i] = (int)(k % p);
            k /= p;
        }
        a.c[d] = 1;
        if (fpIsIrreducible(a)) return a;
    }
    throw std::logic_error("no irreducible found");
}

std::vector<std::pair<FpPoly, int>> fpFactor(const FpPoly& a) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly rem = fpMakeMonic(a);
    if (rem.deg() <= 0) return out;
    for (int d = 1; d <= rem.deg(); d++) {
        if (rem.deg() < 2 * d) break;
        for (const FpPoly& irr : monicIrreducibles(rem.p, d)) {
            if (rem.deg() < d) break;
            int mult = 0;
            while (true) {
                FpPoly q, r;
                fpDivRem(rem, irr, q, r);
                if (!r.isZero()) break;
                rem = q;
                mult++;
            }
            if (mult) out.push_back({irr, mult});
        }
    }
    if (rem.deg() >= 1) out.push_back({rem, 1});
    return out;
}

std::string fpToString(const FpPoly& a, const std::string& var) {
    if (a.isZero()) return "0";
    std::string s;
    for (int i = a.deg(); i >= 0; i--) {
        if (!a.c[i]) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || a.c[i] != 1) s += std::to_string(a.c[i]);
        if (i >= 1) {
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

FpPoly fpParse(int p, const std::string& s, const std::string& var) {
    FpPoly out = fpZero(p);
    size_t i = 0;
    auto skipws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) i++; };
    int sign = 1;
    skipws();
    while (i < s.size()) {
        skipws();
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = s[i] == '-' ? -1 : 1;
            i++;
            skipws();
        }
        long long coef = 1;
        bool sawDigit = false;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            if (!sawDigit) coef = 0;
            sawDigit = true;
            coef = coef * 10 + (s[i] - '0');
            i++;
        }
        skipws();
        if (i < s.size() && s[i] == '*') { i++; skipws(); }
        int e = 0;
        if (s.compare(i, var.size(), var) == 0) {
            i += var.size();
            e = 1;
            skipws();
            if (i < s.size() && s[i] == '^') {
                i++;
                skipws();
                e = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                    e = e * 10 + (s[i] - '0');
                    i++;
                }
            }
        } else if (!sawDigit) {
            throw std::invalid_argument("cannot parse polynomial: " + s);
        }
        std::vector<long long> mono(e + 1, 0);
        mono[e] = sign * coef;
        out = fpAdd(out, fpFromCoeffs(p, mono));
        sign = 1;
        skipws();
    }
    return out;
}

Fq fqAdd(const FqCtx& k, const Fq& a, const Fq& b) {
    (void)k;
    return fpAdd(a, b);
}
Fq fqSub(const FqCtx& k, const Fq& a, const Fq& b) {
    (void)k;
    return fpSub(a, b);
}
Fq fqNeg(const FqCtx& k, const Fq& a) {
    (void)k;
    return fpNeg(a);
}
Fq fqMul(const FqCtx& k, const Fq& a, const Fq& b) { return fpMod(fpMul(a, b), k.modulus); }
Fq fqInv(const FqCtx& k, const Fq& a) { return fpInvMod(a, k.modulus); }
Fq fqPow(const FqCtx& k, const Fq& a, long long e) { return fpPowMod(a, e, k.modulus); }

std::vector<Fq> fqAll(const FqCtx& k) {
    std::vector<Fq> out;
    long long q = k.q();
    out.reserve(q);
    for (long long idx = 0; idx < q; idx++) {
        FpPoly a{k.p, std::vector<int>(k.d(), 0)};
        long long v = idx;
        for (int i = 0; i < k.d(); i++) {
            a.c[i] = (int)(v % k.p);
            v /= k.p;
        }
        trim(a);
        out.push_back(a);
    }
    return out;
}

int fqQuadSymbol(const FqCtx& k, const Fq& a) {
    if (a.isZero()) return 0;
    Fq s = fqPow(k, a, (k.q() - 1) / 2);
    if (s.deg() == 0 && s.c[0] == 1) return 1;
    return -1;
}

long long fqTrace(const FqCtx& k, const Fq& a) {
    Fq acc = fpMod(a, k.modulus);
    Fq frob = acc;
    for (int i = 1; i < k.d(); i++) {
        frob = fpPowMod(frob, k.p, k.modulus);
        acc = fpAdd(acc, frob);
    }
    if (acc.deg() > 0) throw std::logic_error("trace not scalar");
    return acc.isZero() ? 0 : acc.c[0];
}

}  // namespace nah
