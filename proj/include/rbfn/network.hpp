#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

#include "rbfn/basis.hpp"

namespace rbfn {

/// 1-in 1-out RBF network: f(x) = bias + sum_i weights[i] * phi(x, centers[i]).
struct Network {
    Basis basis;
    Eigen::VectorXd centers;
    Eigen::VectorXd weights;
    double bias = 0.0;
    int trained_order = 0;

    Eigen::Index size() const { return centers.size(); }

    void validate() const {
        if (centers.size() != weights.size())
            throw std::invalid_argument("network: centers/weights length mismatch");
        if (!centers.allFinite() || !weights.allFinite() || !std::isfinite(bias))
            throw std::invalid_argument("network: non-finite parameter");
        if (trained_order < 0 || !basis.supports_order(trained_order))
            throw std::invalid_argument("network: trained_order unsupported by basis");
    }
};

inline double eval(const Network& net, double x) {
    double acc = net.bias;
    for (Eigen::Index i = 0; i < net.size(); ++i)
        acc += net.weights[i] * basis_value(net.basis, x, net.centers[i], 0);
    return acc;
}

/// order-th derivative of the network; the bias contributes nothing.
inline double eval_derivative(const Network& net, double x, int order) {
    if (order < 1) throw std::invalid_argument("eval_derivative: order must be >= 1");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < net.size(); ++i)
        acc += net.weights[i] * basis_value(net.basis, x, net.centers[i], order);
    return acc;
}

}  // namespace rbfn
