#pragma once

#include "cstem/rng.hpp"
#include "cstem/types.hpp"

namespace cstem {

/// Inference network: counts -> hidden -> hidden (softplus) -> two linear
/// heads for the posterior mean and log standard deviation of theta.
struct EncoderParams {
    Mat w1;  // H x V
    Vec b1;
    Mat w2;  // H x H
    Vec b2;
    Mat w_mu;  // K x H
    Vec b_mu;
    Mat w_logsig;  // K x H
    Vec b_logsig;

    Index input_dim() const { return w1.cols(); }
    Index hidden_dim() const { return w1.rows(); }
    Index latent_dim() const { return w_mu.rows(); }
};

/// Diagonal Gaussian posterior of theta for one document.
struct PosteriorParams {
    Vec mu;
    Vec log_sigma;
};

/// Forward intermediates kept for the backward pass.
struct EncoderCache {
    Vec x, a1, h1, a2, h2;
    Vec log_sigma_raw;  // head output before clamping
};

// Keeps the KL term finite; hits are counted, never silent.
inline constexpr Scalar kLogSigmaMin = -6.0;
inline constexpr Scalar kLogSigmaMax = 2.0;

/// Weights uniform in +-1/sqrt(fan_in), biases zero.
EncoderParams init_encoder(Index input_dim, Index hidden_dim, Index latent_dim, Rng& rng);

PosteriorParams encode(const Vec& input, const EncoderParams& params,
                       EncoderCache* cache = nullptr, long* clamp_hits = nullptr);

/// theta = mu + exp(log_sigma) .* zeta. The softmax over theta is applied at
/// the point of use (the decoder mixture), not here.
Vec sample_theta(const PosteriorParams& post, const Vec& zeta);

/// c = mu_c + exp(log_sigma_c) .* eps; c enters the decoder unconstrained.
Vec sample_c(const Vec& mu_c, const Vec& log_sigma_c, const Vec& eps);

}  // namespace cstem
