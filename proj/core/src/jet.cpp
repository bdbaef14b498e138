#include "beamsym/jet.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "beamsym/errors.hpp"

namespace beamsym {

namespace {

// Binomial coefficients up to the stored orders.
constexpr int kBinom[5][5] = {
    {1, 0, 0, 0, 0},
    {1, 1, 0, 0, 0},
    {1, 2, 1, 0, 0},
    {1, 3, 3, 1, 0},
    {1, 4, 6, 4, 1},
};

[[noreturn]] void throwNonFinite(const char* primitive, double at) {
    std::ostringstream os;
    os << primitive << ": non-finite result (operand value " << at << ")";
    throw EvalError(os.str());
}

[[noreturn]] void throwDomain(const char* primitive, double at) {
    std::ostringstream os;
    os << primitive << ": domain violation at value " << at;
    throw EvalError(os.str());
}

void checkFinite(const Jet& j, const char* primitive, double at) {
    if (!j.allFinite()) throwNonFinite(primitive, at);
}

// Evaluates sum_{k=0}^{K} gk[k] * (f - f(0,0))^k in the truncated jet algebra.
// With gk[k] = g^(k)(f.value())/k! this is the truncated composition g(f):
// every term of w = f - f.value() has total order >= 1, so powers beyond
// kXOrder + kTOrder = 6 cannot reach any stored slot.
constexpr int kSeriesOrder = Jet::kXOrder + Jet::kTOrder;

Jet composeSeries(const Jet& f, const std::array<double, kSeriesOrder + 1>& gk,
                  const char* primitive) {
    Jet w = f;
    w.d(0, 0) = 0.0;
    Jet result = Jet::constant(gk[0]);
    Jet wp = Jet::constant(1.0);
    for (int k = 1; k <= kSeriesOrder; ++k) {
        wp = wp * w;
        result += gk[k] * wp;
    }
    checkFinite(result, primitive, f.value());
    return result;
}

} // namespace

Jet Jet::constant(double c) {
    Jet j;
    j.c_[0] = c;
    return j;
}

Jet Jet::coordinateX(double x0) {
    Jet j;
    j.c_[idx(0, 0)] = x0;
    j.c_[idx(1, 0)] = 1.0;
    return j;
}

Jet Jet::coordinateT(double t0) {
    Jet j;
    j.c_[idx(0, 0)] = t0;
    j.c_[idx(0, 1)] = 1.0;
    return j;
}

bool Jet::allFinite() const {
    for (double v : c_)
        if (!std::isfinite(v)) return false;
    return true;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (double& v : r.c_) v = -v;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    for (int s = 0; s < kSlots; ++s) c_[s] += o.c_[s];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    for (int s = 0; s < kSlots; ++s) c_[s] -= o.c_[s];
    return *this;
}

Jet& Jet::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

Jet& Jet::operator/=(double s) {
    for (double& v : c_) v /= s;
    return *this;
}

Jet operator+(Jet a, double c) {
    a.d(0, 0) += c;
    return a;
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int i = 0; i <= Jet::kXOrder; ++i) {
        for (int j = 0; j <= Jet::kTOrder; ++j) {
            double s = 0.0;
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= j; ++q)
                    s += kBinom[i][p] * kBinom[j][q] * a.d(p, q) * b.d(i - p, j - q);
            r.d(i, j) = s;
        }
    }
    checkFinite(r, "jet multiply", a.value());
    return r;
}

Jet operator/(const Jet& a, const Jet& b) {
    const double c = b.value();
    if (c == 0.0) throwDomain("jet divide (zero denominator)", c);
    std::array<double, kSeriesOrder + 1> gk{};
    double p = 1.0 / c;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        gk[k] = p; // (-1)^k / c^{k+1}
        p = -p / c;
    }
    return a * composeSeries(b, gk, "jet divide");
}

Jet exp(const Jet& a) {
    const double e = std::exp(a.value());
    std::array<double, kSeriesOrder + 1> gk{};
    double f = 1.0;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        gk[k] = e / f;
        f *= (k + 1);
    }
    return composeSeries(a, gk, "jet exp");
}

Jet log(const Jet& a) {
    const double c = a.value();
    if (!(c > 0.0)) throwDomain("jet log (needs positive value)", c);
    std::array<double, kSeriesOrder + 1> gk{};
    gk[0] = std::log(c);
    // g^(k)(c)/k! = (-1)^{k-1} / (k c^k)
    double p = 1.0 / c;
    for (int k = 1; k <= kSeriesOrder; ++k) {
        gk[k] = p / k;
        p = -p / c;
    }
    return composeSeries(a, gk, "jet log");
}

Jet sqrt(const Jet& a) {
    const double c = a.value();
    if (!(c > 0.0)) throwDomain("jet sqrt (needs positive value)", c);
    return pow(a, 0.5);
}

Jet sin(const Jet& a) {
    const double s = std::sin(a.value());
    const double co = std::cos(a.value());
    const double cycle[4] = {s, co, -s, -co};
    std::array<double, kSeriesOrder + 1> gk{};
    double f = 1.0;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        gk[k] = cycle[k % 4] / f;
        f *= (k + 1);
    }
    return composeSeries(a, gk, "jet sin");
}

Jet cos(const Jet& a) {
    const double co = std::cos(a.value());
    const double s = std::sin(a.value());
    const double cycle[4] = {co, -s, -co, s};
    std::array<double, kSeriesOrder + 1> gk{};
    double f = 1.0;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        gk[k] = cycle[k % 4] / f;
        f *= (k + 1);
    }
    return composeSeries(a, gk, "jet cos");
}

Jet powi(const Jet& a, long n) {
    if (n == 0) return Jet::constant(1.0);
    if (n < 0) {
        if (a.value() == 0.0) throwDomain("jet powi (negative exponent at zero)", 0.0);
        return Jet::constant(1.0) / powi(a, -n);
    }
    // binary exponentiation keeps polynomial cases exact
    Jet base = a;
    Jet result = Jet::constant(1.0);
    long m = n;
    while (m > 0) {
        if (m & 1) result = result * base;
        m >>= 1;
        if (m > 0) base = base * base;
    }
    checkFinite(result, "jet powi", a.value());
    return result;
}

Jet pow(const Jet& a, double p) {
    if (p == std::nearbyint(p) && std::abs(p) < 1e15) return powi(a, static_cast<long>(p));
    const double c = a.value();
    if (!(c > 0.0)) throwDomain("jet pow (non-integer exponent needs positive value)", c);
    std::array<double, kSeriesOrder + 1> gk{};
    // g^(k)(c)/k! = C(p, k) c^{p-k}
    double binom = 1.0;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        gk[k] = binom * std::pow(c, p - k);
        binom *= (p - k) / (k + 1);
    }
    return composeSeries(a, gk, "jet pow");
}

std::ostream& operator<<(std::ostream& os, const Jet& j) {
    os << "jet{";
    for (int i = 0; i <= Jet::kXOrder; ++i)
        for (int t = 0; t <= Jet::kTOrder; ++t)
            os << (i + t ? ", " : "") << "d(" << i << "," << t << ")=" << j.d(i, t);
    return os << "}";
}

} // namespace beamsym
