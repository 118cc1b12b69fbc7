#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace rbfn {

enum class BasisType { Cubic, Gaussian };

/// Radial basis function family. Cubic is |x-m|^3 and is C^2, so it supports
/// derivative orders 0..2 only; the Gaussian exp(-((x-m)/width)^2) is smooth
/// and supports any order.
struct Basis {
    BasisType type = BasisType::Cubic;
    double width = 1.0;  // Gaussian only

    static Basis cubic() { return Basis{BasisType::Cubic, 1.0}; }

    static Basis gaussian(double width) {
        if (!(width > 0.0) || !std::isfinite(width))
            throw std::invalid_argument("gaussian width must be positive and finite");
        return Basis{BasisType::Gaussian, width};
    }

    int max_derivative_order() const {
        return type == BasisType::Cubic ? 2 : std::numeric_limits<int>::max();
    }

    bool supports_order(int order) const {
        return order >= 0 && order <= max_derivative_order();
    }
};

/// d^order/dx^order of phi(x, m).
inline double basis_value(const Basis& basis, double x, double m, int order) {
    if (!basis.supports_order(order))
        throw std::invalid_argument("unsupported derivative order " + std::to_string(order) +
                                    " for basis");
    if (basis.type == BasisType::Cubic) {
        const double t = x - m;
        const double a = std::abs(t);
        switch (order) {
            case 0: return a * a * a;
            case 1: return 3.0 * t * a;
            default: return 6.0 * a;
        }
    }
    // Gaussian: d^n/ds^n exp(-s^2) = (-1)^n H_n(s) exp(-s^2) with the
    // physicists' Hermite polynomials, s = (x-m)/width.
    const double s = (x - m) / basis.width;
    const double e = std::exp(-s * s);
    if (order == 0) return e;
    double h_prev = 1.0;      // H_0
    double h = 2.0 * s;       // H_1
    for (int n = 1; n < order; ++n) {
        const double h_next = 2.0 * s * h - 2.0 * n * h_prev;
        h_prev = h;
        h = h_next;
    }
    const double sign = (order % 2 == 0) ? 1.0 : -1.0;
    return sign * h * e / std::pow(basis.width, order);
}

}  // namespace rbfn
