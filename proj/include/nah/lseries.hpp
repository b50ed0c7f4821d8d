#pragma once

#include <complex>
#include <vector>

#include "nah/errors.hpp"

namespace nah {

using cx = std::complex<double>;

// truncated Laurent series in a deformation variable tau around 0;
// c[i] is the coefficient of tau^(lo+i)
struct PowerSeries {
    int lo = 0;
    std::vector<cx> c;

    int hi() const { return lo + (int)c.size(); }
};

inline constexpr int kSeriesLen = 12;

PowerSeries psConst(cx a, int len = kSeriesLen);
PowerSeries psMonomial(cx a, int k, int len = kSeriesLen);
PowerSeries psExp(cx a, int len = kSeriesLen);                  // e^{a tau}
PowerSeries psGeomFactor(cx w0, cx lam, int len = kSeriesLen);  // 1 - w0 e^{lam tau}
PowerSeries psPowW(cx w0, cx lam, int k, int len = kSeriesLen);  // (w0 e^{lam tau})^k
PowerSeries psAdd(const PowerSeries& a, const PowerSeries& b);
PowerSeries psSub(const PowerSeries& a, const PowerSeries& b);
PowerSeries psScale(const PowerSeries& a, cx k);
PowerSeries psMul(const PowerSeries& a, const PowerSeries& b);
PowerSeries psInv(const PowerSeries& a, double relTol = 1e-9);
PowerSeries psDiv(const PowerSeries& a, const PowerSeries& b, double relTol = 1e-9);

// sum_{k>=m} w^k and sum_{k>=m} k w^k for w = w0 e^{lam tau}
PowerSeries psGeomSum0(cx w0, cx lam, int m, int len = kSeriesLen);
PowerSeries psGeomSum1(cx w0, cx lam, int m, int len = kSeriesLen);

int psLeadingOrder(const PowerSeries& a, double relTol = 1e-9);  // INT_MAX when ~0
cx psCoeff(const PowerSeries& a, int k);
// value at tau=0; throws ExceptionalParameter when a pole survives
cx psValueAt0(const PowerSeries& a, double relTol = 1e-9);

// scalar geometric closures with pole guard
cx geomSum0(cx w, int m);  // sum_{k>=m} w^k
cx geomSum1(cx w, int m);  // sum_{k>=m} k w^k

// meromorphic data of a zeta-type quantity at the queried point,
// Laurent in the additive deformation tau of the exponent
struct ZetaValue {
    int poleOrder = 0;
    cx value = 0.0;    // coefficient of tau^0
    cx leading = 0.0;  // coefficient of tau^{-poleOrder}
    cx next = 0.0;     // coefficient of tau^{-poleOrder+1}
};

ZetaValue zetaFromSeries(const PowerSeries& a, double relTol = 1e-9);

}  // namespace nah
