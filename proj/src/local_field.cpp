#include "nah/local_field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace nah {

int legendreSymbol(long long a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    return modPow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

static bool isPrime(int n) {
    if (n < 2) return false;
    for (int i = 2; (long long)i * i <= n; i++)
        if (n % i == 0) return false;
    return true;
}

LocalField::LocalField(FieldKind kind, int p, int d, int workingPrec)
    : kind_(kind), p_(p), d_(d), N_(workingPrec), fq_{p, defaultModulus(p, d)} {
    if (!isPrime(p) || p == 2) throw std::invalid_argument("residue characteristic must be an odd prime");
    if (kind == FieldKind::PAdic && d != 1) throw std::invalid_argument("p-adic field needs d=1");
    if (d < 1 || workingPrec < 1) throw std::invalid_argument("bad field parameters");
    q_ = 1;
    for (int i = 0; i < d; i++) q_ *= p;
}

LocalField LocalField::parse(const std::string& desc) {
    auto colon = desc.find(':');
    std::string head = desc.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : desc.substr(colon + 1);
    int p = 0, d = 0, N = 24;
    long long q = 0;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad descriptor: " + desc);
        std::string k = item.substr(0, eq);
        long long v = std::stoll(item.substr(eq + 1));
        if (k == "p") p = (int)v;
        else if (k == "q") q = v;
        else if (k == "d") d = (int)v;
        else if (k == "N") N = (int)v;
        else throw std::invalid_argument("unknown descriptor key: " + k);
    }
    if (head == "Qp") {
        if (!p && q) p = (int)q;
        if (!p) throw std::invalid_argument("Qp descriptor needs p");
        return LocalField(FieldKind::PAdic, p, 1, N);
    }
    if (head == "FqLaurent") {
        if (!p) {
            if (!q) throw std::invalid_argument("FqLaurent descriptor needs q or p");
            int base = 2;
            while (q % base != 0) base++;
            p = base;
            int dd = 0;
            long long t = q;
            while (t > 1) {
                if (t % p) throw std::invalid_argument("q must be a prime power");
                t /= p;
                dd++;
            }
            if (d && d != dd) throw std::invalid_argument("inconsistent q and d");
            d = dd;
        }
        if (!d) d = 1;
        return LocalField(FieldKind::FqLaurent, p, d, N);
    }
    throw std::invalid_argument("unknown field kind: " + head);
}

std::string LocalField::describe() const {
    std::ostringstream os;
    if (kind_ == FieldKind::PAdic) os << "Qp:p=" << p_;
    else os << "FqLaurent:q=" << q_ << ",d=" << d_;
    os << ",N=" << N_;
    return os.str();
}

Fq LocalField::decodeDigit(int v) const {
    FpPoly a{p_, {}};
    while (v > 0) {
        a.c.push_back(v % p_);
        v /= p_;
    }
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
    return a;
}

int LocalField::encodeDigit(const Fq& a) const {
    int v = 0;
    for (int i = a.deg(); i >= 0; i--) v = v * p_ + a.c[i];
    return v;
}

int LocalField::digitNeg(int a) const { return encodeDigit(fqNeg(fq_, decodeDigit(a))); }
int LocalField::digitAdd(int a, int b) const { return encodeDigit(fqAdd(fq_, decodeDigit(a), decodeDigit(b))); }
int LocalField::digitMul(int a, int b) const { return encodeDigit(fqMul(fq_, decodeDigit(a), decodeDigit(b))); }
int LocalField::digitInv(int a) const { return encodeDigit(fqInv(fq_, decodeDigit(a))); }

LocalElement LocalField::zeroElem(int prec) const {
    LocalElement z;
    z.zero = true;
    z.prec = prec;
    return z;
}

// pack in-range digits: strip zeros, locate valuation, clamp to prec
LocalElement LocalField::normalized(int base, std::vector<long long> raw, int prec) const {
    if (kind_ == FieldKind::PAdic) {
        // carry/borrow propagation; cap runaway chains at N extra digits
        long long carry = 0;
        size_t cap = prec >= kExactPrec ? raw.size() + (size_t)N_ + 4
                                        : (size_t)std::max<long long>(0, (long long)prec - base);
        size_t i = 0;
        for (; i < raw.size() || carry != 0; i++) {
            if (i >= cap) {
                if (prec >= kExactPrec) prec = base + (int)cap;
                break;
            }
            if (i >= raw.size()) raw.push_back(0);
            long long v = raw[i] + carry;
            long long d = v % p_;
            if (d < 0) d += p_;
            carry = (v - d) / p_;
            raw[i] = d;
        }
    }
    // clamp support to below prec
    if (prec < kExactPrec) {
        long long maxLen = (long long)prec - base;
        if (maxLen < 0) maxLen = 0;
        if ((long long)raw.size() > maxLen) raw.resize((size_t)maxLen);
    }
    size_t lead = 0;
    while (lead < raw.size() && raw[lead] == 0) lead++;
    if (lead == raw.size()) return zeroElem(prec);
    size_t last = raw.size();
    while (last > lead && raw[last - 1] == 0) last--;
    LocalElement e;
    e.zero = false;
    e.val = base + (int)lead;
    e.prec = prec;
    e.digits.assign(raw.begin() + lead, raw.begin() + last);
    return e;
}

LocalElement LocalField::fromDigits(int val, std::vector<int> digits, int prec) const {
    std::vector<long long> raw(digits.begin(), digits.end());
    for (long long v : raw)
        if (v < 0 || v >= q_) throw std::invalid_argument("digit out of range");
    return normalized(val, std::move(raw), prec);
}

LocalElement LocalField::fromRational(long long num, long long den) const {
    if (den == 0) throw std::domain_error("division by zero");
    if (num == 0) return zeroElem();
    if (kind_ == FieldKind::FqLaurent) {
        long long g = std::gcd(std::abs(num), std::abs(den));
        num /= g;
        den /= g;
        long long dm = den % p_;
        if (dm == 0) throw std::domain_error("denominator not invertible in the prime field");
        long long v = ((num % p_) * modInv((dm + p_) % p_, p_)) % p_;
        if (v < 0) v += p_;
        if (v == 0) return zeroElem();
        return fromDigits(0, {(int)v});
    }
    int v0 = 0;
    while (num % p_ == 0) { num /= p_; v0++; }
    while (den % p_ == 0) { den /= p_; v0--; }
    long long dinv = modInv(((den % p_) + p_) % p_, p_);
    std::vector<int> digits;
    long long r = num;
    bool finite = false;
    for (int i = 0; i < N_; i++) {
        long long d = (r % p_) * dinv % p_;
        if (d < 0) d += p_;
        digits.push_back((int)d);
        r = (r - d * den) / p_;
        if (r == 0) { finite = true; break; }
    }
    return fromDigits(v0, digits, finite ? kExactPrec : v0 + N_);
}

LocalElement LocalField::fromInteger(long long n) const { return fromRational(n, 1); }

LocalElement LocalField::uniformizerPow(int k) const {
    LocalElement e;
    e.zero = false;
    e.val = k;
    e.digits = {1};
    return e;
}

LocalElement LocalField::truncate(const LocalElement& a, int prec) const {
    if (prec >= a.prec) return a;
    if (a.zero) return zeroElem(prec);
    std::vector<long long> raw(a.digits.begin(), a.digits.end());
    return normalized(a.val, std::move(raw), prec);
}

LocalElement LocalField::add(const LocalElement& a, const LocalElement& b) const {
    if (a.zero) return truncate(b, a.prec);
    if (b.zero) return truncate(a, b.prec);
    int base = std::min(a.val, b.val);
    int prec = std::min(a.prec, b.prec);
    size_t len = std::max(a.val + a.digits.size(), b.val + b.digits.size()) - base;
    std::vector<long long> raw(len, 0);
    if (kind_ == FieldKind::PAdic) {
        for (size_t i = 0; i < a.digits.size(); i++) raw[a.val - base + i] += a.digits[i];
        for (size_t i = 0; i < b.digits.size(); i++) raw[b.val - base + i] += b.digits[i];
    } else {
        for (size_t i = 0; i < a.digits.size(); i++) raw[a.val - base + i] = a.digits[i];
        for (size_t i = 0; i < b.digits.size(); i++)
            raw[b.val - base + i] = digitAdd((int)raw[b.val - base + i], b.digits[i]);
    }
    return normalized(base, std::move(raw), prec);
}

LocalElement LocalField::neg(const LocalElement& a) const {
    if (a.zero) return a;
    if (kind_ == FieldKind::FqLaurent) {
        LocalElement r = a;
        for (int& d : r.digits) d = digitNeg(d);
        return r;
    }
    std::vector<long long> raw(a.digits.size(), 0);
    for (size_t i = 0; i < a.digits.size(); i++) raw[i] = -(long long)a.digits[i];
    return normalized(a.val, std::move(raw), a.prec);
}

LocalElement LocalField::sub(const LocalElement& a, const LocalElement& b) const { return add(a, neg(b)); }

LocalElement LocalField::mul(const LocalElement& a, const LocalElement& b) const {
    if (a.zero && a.exact()) return a;
    if (b.zero && b.exact()) return b;
    if (a.zero || b.zero) {
        long long pa = a.zero ? a.prec : a.val;
        long long pb = b.zero ? b.prec : b.val;
        return zeroElem((int)std::min<long long>(pa + pb, kExactPrec));
    }
    int base = a.val + b.val;
    long long precLL = kExactPrec;
    if (!a.exact()) precLL = std::min(precLL, (long long)a.prec + b.val);
    if (!b.exact()) precLL = std::min(precLL, (long long)b.prec + a.val);
    int prec = (int)std::min<long long>(precLL, kExactPrec);
    std::vector<long long> raw(a.digits.size() + b.digits.size() - 1, 0);
    if (kind_ == FieldKind::PAdic) {
        for (size_t i = 0; i < a.digits.size(); i++)
            for (size_t j = 0; j < b.digits.size(); j++)
                raw[i + j] += (long long)a.digits[i] * b.digits[j];
    } else {
        std::vector<Fq> acc(raw.size(), fpZero(p_));
        std::vector<Fq> da(a.digits.size()), db(b.digits.size());
        for (size_t i = 0; i < a.digits.size(); i++) da[i] = decodeDigit(a.digits[i]);
        for (size_t j = 0; j < b.digits.size(); j++) db[j] = decodeDigit(b.digits[j]);
        for (size_t i = 0; i < da.size(); i++)
            for (size_t j = 0; j < db.size(); j++)
                acc[i + j] = fqAdd(fq_, acc[i + j], fqMul(fq_, da[i], db[j]));
        for (size_t k = 0; k < raw.size(); k++) raw[k] = encodeDigit(acc[k]);
    }
    return normalized(base, std::move(raw), prec);
}

LocalElement LocalField::mulPow(const LocalElement& a, int k) const {
    LocalElement r = a;
    if (!r.zero) r.val += k;
    if (!r.exact()) r.prec += k;
    return r;
}

LocalElement LocalField::inv(const LocalElement& a) const {
    if (a.zero) {
        if (a.exact()) throw std::domain_error("inverse of zero");
        throw InsufficientPrecision("inverse of element indistinguishable from zero");
    }
    if (a.digits.size() == 1 && (kind_ == FieldKind::FqLaurent || a.digits[0] == 1)) {
        LocalElement r;
        r.zero = false;
        r.val = -a.val;
        r.digits = {kind_ == FieldKind::FqLaurent ? digitInv(a.digits[0]) : 1};
        r.prec = a.exact() ? kExactPrec : a.prec - 2 * a.val;
        return r;
    }
    int rel = a.exact() ? N_ : a.prec - a.val;
    LocalElement u = truncate(unitPart(a), rel);
    int lead = a.digits[0];
    int w0 = kind_ == FieldKind::FqLaurent ? digitInv(lead) : (int)modInv(lead, p_);
    LocalElement w = fromDigits(0, {w0}, 1);
    LocalElement two = fromInteger(2);
    int cur = 1;
    while (cur < rel) {
        cur = std::min(2 * cur, rel);
        LocalElement uw = truncate(mul(u, w), cur);
        w = truncate(mul(w, sub(two, uw)), cur);
        w.prec = cur;  // newton doubles correct digits; product prec rule is too pessimistic here
    }
    return mulPow(w, -a.val);
}

LocalElement LocalField::div(const LocalElement& a, const LocalElement& b) const { return mul(a, inv(b)); }

LocalElement LocalField::pow(const LocalElement& a, int e) const {
    if (e < 0) return inv(pow(a, -e));
    LocalElement r = one(), b = a;
    unsigned k = (unsigned)e;
    while (k) {
        if (k & 1) r = mul(r, b);
        k >>= 1;
        if (k) b = mul(b, b);
    }
    return r;
}

LocalElement LocalField::scaleInt(const LocalElement& a, long long n) const { return mul(a, fromInteger(n)); }

int LocalField::valuation(const LocalElement& a) const {
    if (a.zero) {
        if (a.exact()) throw std::domain_error("valuation of zero");
        throw InsufficientPrecision("valuation below precision");
    }
    return a.val;
}

double LocalField::absValue(const LocalElement& a) const {
    if (a.zero) {
        if (a.exact()) return 0.0;
        throw InsufficientPrecision("absolute value below precision");
    }
    return std::pow((double)q_, -(double)a.val);
}

bool LocalField::isUnit(const LocalElement& a) const { return !a.zero && a.val == 0; }

int LocalField::digitAt(const LocalElement& a, int k) const {
    if (k >= a.prec) throw InsufficientPrecision("digit beyond known precision");
    if (a.zero) return 0;
    if (k < a.val || k >= a.val + (int)a.digits.size()) return 0;
    return a.digits[k - a.val];
}

int LocalField::leadingDigit(const LocalElement& a) const {
    if (a.zero) throw std::domain_error("leading digit of zero");
    return a.digits[0];
}

LocalElement LocalField::unitPart(const LocalElement& a) const {
    if (a.zero) throw std::domain_error("unit part of zero");
    return mulPow(a, -a.val);
}

bool LocalField::agreesMod(const LocalElement& a, const LocalElement& b, int m) const {
    if (a.prec < m || b.prec < m) throw InsufficientPrecision("comparison beyond known precision");
    int lo = m;
    if (!a.zero) lo = std::min(lo, a.val);
    if (!b.zero) lo = std::min(lo, b.val);
    for (int k = lo; k < m; k++)
        if (digitAt(a, k) != digitAt(b, k)) return false;
    return true;
}

int LocalField::quadSymbolUnit(const LocalElement& a) const {
    if (!isUnit(a)) throw std::domain_error("quadratic symbol needs a unit");
    if (kind_ == FieldKind::PAdic) return legendreSymbol(a.digits[0], p_);
    return fqQuadSymbol(fq_, decodeDigit(a.digits[0]));
}

std::vector<LocalElement> LocalField::unitReps(int m) const {
    if (m < 1) throw std::invalid_argument("need m >= 1");
    std::vector<LocalElement> out;
    long long total = q_ - 1;
    for (int i = 1; i < m; i++) total *= q_;
    out.reserve(total);
    std::vector<int> digits(m, 0);
    digits[0] = 1;
    while (true) {
        out.push_back(fromDigits(0, digits));
        int i = m - 1;
        while (i >= 0) {
            digits[i]++;
            if (digits[i] < q_) break;
            digits[i] = i == 0 ? 1 : 0;
            i--;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<LocalElement> LocalField::integerReps(int m) const {
    if (m < 0) throw std::invalid_argument("need m >= 0");
    std::vector<LocalElement> out;
    std::vector<int> digits(m, 0);
    long long total = 1;
    for (int i = 0; i < m; i++) total *= q_;
    out.reserve(total);
    for (long long idx = 0; idx < total; idx++) {
        long long v = idx;
        for (int i = 0; i < m; i++) {
            digits[i] = (int)(v % q_);
            v /= q_;
        }
        out.push_back(fromDigits(0, digits));
    }
    return out;
}

std::string LocalField::toString(const LocalElement& a) const {
    std::ostringstream os;
    if (a.zero) {
        if (a.exact()) return "0";
        os << "O(pi^" << a.prec << ")";
        return os.str();
    }
    os << "pi^" << a.val << "*[";
    for (size_t i = 0; i < a.digits.size(); i++) {
        if (i) os << ",";
        os << a.digits[i];
    }
    os << "]";
    if (!a.exact()) os << "+O(pi^" << a.prec << ")";
    return os.str();
}

}  // namespace nah
