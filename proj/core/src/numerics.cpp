#include "beamsym/numerics.hpp"

#include <cmath>
#include <cstdio>

#include "beamsym/errors.hpp"

namespace beamsym {

namespace {

double simpsonStep(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpsonStep(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpsonStep(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptiveSimpson(const std::function<double(double)>& f, double a, double b, double tol,
                       int maxDepth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double r = simpsonStep(f, a, fa, b, fb, m, fm, whole, tol, maxDepth);
    if (!std::isfinite(r)) throw EvalError("adaptiveSimpson: non-finite quadrature result");
    return r;
}

double halton(std::uint64_t i, unsigned base) {
    double f = 1.0;
    double r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v;
    if (n <= 0) return v;
    v.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        v.push_back(a);
        return v;
    }
    for (int i = 0; i < n; ++i)
        v.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    return v;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace beamsym
