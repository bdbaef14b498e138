#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace beamsym {

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
double adaptiveSimpson(const std::function<double(double)>& f, double a, double b,
                       double tol = 1e-10, int maxDepth = 48);

/// i-th element (i >= 1) of the base-b van der Corput sequence; Halton when
/// used with coprime bases per dimension. Deterministic low-discrepancy.
double halton(std::uint64_t i, unsigned base);

std::vector<double> linspace(double a, double b, int n);

/// Fixed 17-significant-digit formatting used for all CSV and schema output,
/// so identical inputs produce byte-identical files.
std::string fmt17(double v);

} // namespace beamsym
