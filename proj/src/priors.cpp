#include "cstem/priors.hpp"

namespace cstem {

GaussianPrior laplace_approximation(const DirichletPrior& prior) {
    const Index n = prior.alpha.size();
    require(n >= 1, "E_DOMAIN", "empty dirichlet parameter vector");
    require((prior.alpha.array() > 0).all(), "E_DOMAIN",
            "dirichlet parameters must all be positive");

    const Vec log_a = prior.alpha.array().log();
    const Vec inv_a = prior.alpha.array().inverse();

    GaussianPrior g;
    g.mean = log_a.array() - log_a.mean();
    g.var = inv_a.array() * (1.0 - 2.0 / static_cast<Scalar>(n)) +
            inv_a.sum() / (static_cast<Scalar>(n) * static_cast<Scalar>(n));

    require((g.var.array() > kPriorVarianceFloor).all(), "E_DOMAIN",
            "laplace variance not positive; dimension too small for these parameters");
    return g;
}

}  // namespace cstem
