#pragma once

#include "cstem/types.hpp"

namespace cstem {

/// Dirichlet hyperparameters. Covers both the topic prior (dimension = number
/// of topics) and the global word-weight prior (dimension = vocabulary size).
struct DirichletPrior {
    Vec alpha;

    static DirichletPrior symmetric(Index n, Scalar a) {
        require(n >= 1, "E_DOMAIN", "dirichlet dimension must be positive");
        require(a > 0, "E_DOMAIN", "dirichlet parameter must be positive");
        return {Vec::Constant(n, a)};
    }
};

/// Diagonal Gaussian (mean, per-component variance).
struct GaussianPrior {
    Vec mean;
    Vec var;

    Index size() const { return mean.size(); }
};

// Downstream KL terms divide by the variance.
inline constexpr Scalar kPriorVarianceFloor = 1e-8;

/// Gaussian approximation of a Dirichlet in softmax basis:
///   mean_k = log a_k - (1/n) sum_i log a_i
///   var_k  = (1/a_k)(1 - 2/n) + (1/n^2) sum_i 1/a_i
/// Rejects parameters whose approximate variance is not strictly positive.
GaussianPrior laplace_approximation(const DirichletPrior& prior);

}  // namespace cstem
