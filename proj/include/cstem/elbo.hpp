#pragma once

#include "cstem/corpus.hpp"
#include "cstem/decoder.hpp"
#include "cstem/encoder.hpp"
#include "cstem/priors.hpp"
#include "cstem/rng.hpp"

#include <vector>

namespace cstem {

/// How the global-weight KL enters each minibatch objective: charged in full
/// every evaluation (the estimator as written), or amortized by M/N.
enum class KlCScaling { full, amortized };

struct ElboOptions {
    long corpus_size = 0;  // N; the per-document sum is scaled by N/M
    int mc_samples = 1;    // L
    KlCScaling kl_c_scaling = KlCScaling::full;
    bool normalize_input = false;  // feed the encoder counts/N_d instead of counts
};

/// The objective to maximize: total = -kl_c - kl_theta_batch + recon_batch.
struct ElboBreakdown {
    Scalar kl_c = 0;            // charged value (scaled when amortized)
    Scalar kl_theta_batch = 0;  // summed over the batch, N/M-scaled
    Scalar recon_batch = 0;     // summed over the batch, N/M-scaled
    Scalar total = 0;
    long batch_tokens = 0;
    long recon_floor_hits = 0;
    long logvar_clamp_hits = 0;
};

/// Standard-normal draws for one minibatch: one eps per Monte Carlo sample
/// shared by the whole batch (c is sampled once per minibatch), one zeta per
/// document per sample.
struct BatchNoise {
    std::vector<Vec> eps_c;              // [L], each length V
    std::vector<std::vector<Vec>> zeta;  // [doc][L], each length K

    static BatchNoise draw(Rng& rng, std::size_t batch_size, Index vocab_size,
                           Index num_topics, int mc_samples);
};

/// KL( N(mu_q, diag var_q) || N(mu_p, diag var_p) ), closed form.
template <class D1, class D2, class D3, class D4>
Scalar kl_diag_gaussians(const Eigen::MatrixBase<D1>& mu_q, const Eigen::MatrixBase<D2>& var_q,
                         const Eigen::MatrixBase<D3>& mu_p, const Eigen::MatrixBase<D4>& var_p) {
    const Index n = mu_q.size();
    require(var_q.size() == n && mu_p.size() == n && var_p.size() == n, "E_SHAPE",
            "kl operands must have equal length");
    require((var_q.array() > 0).all() && (var_p.array() > 0).all(), "E_DOMAIN",
            "kl variances must be strictly positive");
    return 0.5 * ((var_q.array() / var_p.array()).sum() +
                  ((mu_p.array() - mu_q.array()).square() / var_p.array()).sum() -
                  static_cast<Scalar>(n) + (var_p.array() / var_q.array()).log().sum());
}

using Batch = std::vector<const BowDocument*>;

/// Minibatch evidence-lower-bound estimate. kl_c is charged once per call;
/// per-document KL and reconstruction terms are averaged over the L noise
/// draws, summed, and scaled by N/M.
ElboBreakdown minibatch_elbo(const Batch& batch, const ModelParams& model,
                             const EncoderParams& enc, const Vec& mu_c,
                             const Vec& log_sigma_c, const GaussianPrior& theta_prior,
                             const GaussianPrior& c_prior, const BatchNoise& noise,
                             const ElboOptions& opt);

}  // namespace cstem
