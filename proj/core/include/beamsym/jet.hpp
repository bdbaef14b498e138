#pragma once

#include <array>
#include <iosfwd>

namespace beamsym {

/// Truncated bivariate jet of a scalar field f(x, t).
///
/// Stores the raw partial derivatives d(i,j) = ∂^{i+j} f / ∂x^i ∂t^j for
/// 0 <= i <= 4 and 0 <= j <= 2 (15 slots), exactly the orders the beam
/// operator needs (u_xxxx and u_tt). Arithmetic propagates derivatives by
/// the Leibniz rule; elementary functions use the truncated composition
/// series, so every slot is chain-rule exact for the truncated orders.
class Jet {
public:
    static constexpr int kXOrder = 4;
    static constexpr int kTOrder = 2;
    static constexpr int kSlots = (kXOrder + 1) * (kTOrder + 1);

    Jet() = default; // all slots zero

    static Jet constant(double c);
    /// Seed for the coordinate x: value x0, d(1,0) = 1, all else zero.
    static Jet coordinateX(double x0);
    /// Seed for the coordinate t: value t0, d(0,1) = 1, all else zero.
    static Jet coordinateT(double t0);

    double d(int i, int j) const { return c_[idx(i, j)]; }
    double& d(int i, int j) { return c_[idx(i, j)]; }
    double value() const { return c_[0]; }

    bool allFinite() const;

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(double s);
    Jet& operator/=(double s);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator/(Jet a, double s) { return a /= s; }
    friend Jet operator+(Jet a, double c);
    friend Jet operator+(double c, Jet a) { return a + c; }
    friend Jet operator-(Jet a, double c) { return a + (-c); }
    friend Jet operator-(double c, const Jet& a) { return -a + c; }

    /// Leibniz product over both index directions.
    friend Jet operator*(const Jet& a, const Jet& b);
    /// Quotient; requires b.value() != 0.
    friend Jet operator/(const Jet& a, const Jet& b);

    friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }

private:
    static constexpr int idx(int i, int j) { return i * (kTOrder + 1) + j; }
    std::array<double, kSlots> c_{};
};

std::ostream& operator<<(std::ostream& os, const Jet& j);

/// Elementary functions (truncated composition, chain-rule exact).
/// Domain preconditions follow the scalar functions: log and sqrt need a
/// positive value slot, pow with non-integer exponent likewise. Violations
/// throw EvalError naming the primitive and the offending value.
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
/// Integer exponents (any sign) dispatch to exact repeated multiplication.
Jet pow(const Jet& a, double p);
Jet powi(const Jet& a, long n);

} // namespace beamsym
