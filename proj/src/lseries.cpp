#include "nah/lseries.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace nah {

PowerSeries psConst(cx a, int len) {
    PowerSeries r;
    r.lo = 0;
    r.c.assign(len, 0.0);
    r.c[0] = a;
    return r;
}

PowerSeries psMonomial(cx a, int k, int len) {
    PowerSeries r;
    r.lo = k;
    r.c.assign(len, 0.0);
    r.c[0] = a;
    return r;
}

PowerSeries psExp(cx a, int len) {
    PowerSeries r;
    r.lo = 0;
    r.c.assign(len, 0.0);
    cx term = 1.0;
    for (int k = 0; k < len; k++) {
        r.c[k] = term;
        term *= a / (double)(k + 1);
    }
    return r;
}

PowerSeries psGeomFactor(cx w0, cx lam, int len) {
    return psSub(psConst(1.0, len), psScale(psExp(lam, len), w0));
}

PowerSeries psPowW(cx w0, cx lam, int k, int len) {
    return psScale(psExp(lam * (double)k, len), std::pow(w0, k));
}

PowerSeries psAdd(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r;
    r.lo = std::min(a.lo, b.lo);
    int hi = std::min(a.hi(), b.hi());
    if (hi <= r.lo) hi = r.lo;  // degenerate overlap: empty window
    r.c.assign(hi - r.lo, 0.0);
    for (int k = r.lo; k < hi; k++) {
        cx v = 0.0;
        if (k >= a.lo && k < a.hi()) v += a.c[k - a.lo];
        if (k >= b.lo && k < b.hi()) v += b.c[k - b.lo];
        r.c[k - r.lo] = v;
    }
    return r;
}

PowerSeries psSub(const PowerSeries& a, const PowerSeries& b) { return psAdd(a, psScale(b, -1.0)); }

PowerSeries psScale(const PowerSeries& a, cx k) {
    PowerSeries r = a;
    for (cx& v : r.c) v *= k;
    return r;
}

PowerSeries psMul(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r;
    r.lo = a.lo + b.lo;
    size_t len = std::min(a.c.size(), b.c.size());
    r.c.assign(len, 0.0);
    for (size_t i = 0; i < a.c.size(); i++)
        for (size_t j = 0; j < b.c.size() && i + j < len; j++)
            r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

int psLeadingOrder(const PowerSeries& a, double relTol) {
    double mx = 0.0;
    for (const cx& v : a.c) mx = std::max(mx, std::abs(v));
    if (mx == 0.0) return INT_MAX;
    for (size_t i = 0; i < a.c.size(); i++)
        if (std::abs(a.c[i]) > relTol * mx) return a.lo + (int)i;
    return INT_MAX;
}

PowerSeries psInv(const PowerSeries& a, double relTol) {
    int lead = psLeadingOrder(a, relTol);
    if (lead == INT_MAX) throw ExceptionalParameter("inverse of a numerically zero series");
    size_t off = (size_t)(lead - a.lo);
    size_t len = a.c.size() - off;
    PowerSeries r;
    r.lo = -lead;
    r.c.assign(len, 0.0);
    cx b0 = a.c[off];
    r.c[0] = 1.0 / b0;
    for (size_t n = 1; n < len; n++) {
        cx acc = 0.0;
        for (size_t i = 1; i <= n; i++) acc += a.c[off + i] * r.c[n - i];
        r.c[n] = -acc / b0;
    }
    return r;
}

PowerSeries psDiv(const PowerSeries& a, const PowerSeries& b, double relTol) {
    return psMul(a, psInv(b, relTol));
}

PowerSeries psGeomSum0(cx w0, cx lam, int m, int len) {
    return psMul(psPowW(w0, lam, m, len), psInv(psGeomFactor(w0, lam, len)));
}

PowerSeries psGeomSum1(cx w0, cx lam, int m, int len) {
    // sum_{k>=m} k w^k = w^m (m - (m-1) w) / (1-w)^2
    PowerSeries w = psScale(psExp(lam, len), w0);
    PowerSeries numer = psMul(psPowW(w0, lam, m, len),
                              psSub(psConst((double)m, len), psScale(w, (double)(m - 1))));
    PowerSeries den = psGeomFactor(w0, lam, len);
    return psMul(numer, psInv(psMul(den, den)));
}

cx psCoeff(const PowerSeries& a, int k) {
    if (k < a.lo || k >= a.hi()) return 0.0;
    return a.c[k - a.lo];
}

cx psValueAt0(const PowerSeries& a, double relTol) {
    int lead = psLeadingOrder(a, relTol);
    if (lead < 0) throw ExceptionalParameter("pole at the evaluation point");
    return psCoeff(a, 0);
}

cx geomSum0(cx w, int m) {
    if (std::abs(1.0 - w) < 1e-9) throw ExceptionalParameter("geometric sum at ratio 1");
    return std::pow(w, m) / (1.0 - w);
}

cx geomSum1(cx w, int m) {
    if (std::abs(1.0 - w) < 1e-9) throw ExceptionalParameter("geometric sum at ratio 1");
    cx d = 1.0 - w;
    return std::pow(w, m) * ((double)m - (double)(m - 1) * w) / (d * d);
}

ZetaValue zetaFromSeries(const PowerSeries& a, double relTol) {
    ZetaValue z;
    int lead = psLeadingOrder(a, relTol);
    z.value = psCoeff(a, 0);
    if (lead == INT_MAX || lead >= 0) return z;
    z.poleOrder = -lead;
    z.leading = psCoeff(a, lead);
    z.next = psCoeff(a, lead + 1);
    return z;
}

}  // namespace nah
