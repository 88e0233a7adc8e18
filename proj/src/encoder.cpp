#include "cstem/encoder.hpp"

namespace cstem {

namespace {

void init_layer(Mat& w, Vec& b, Index rows, Index cols, Rng& rng) {
    const Scalar bound = 1.0 / std::sqrt(static_cast<Scalar>(cols));
    w.resize(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) w(i, j) = rng.uniform(-bound, bound);
    b = Vec::Zero(rows);
}

}  // namespace

EncoderParams init_encoder(Index input_dim, Index hidden_dim, Index latent_dim, Rng& rng) {
    require(input_dim >= 1 && hidden_dim >= 1 && latent_dim >= 1, "E_SHAPE",
            "encoder dimensions must be positive");
    EncoderParams p;
    init_layer(p.w1, p.b1, hidden_dim, input_dim, rng);
    init_layer(p.w2, p.b2, hidden_dim, hidden_dim, rng);
    init_layer(p.w_mu, p.b_mu, latent_dim, hidden_dim, rng);
    init_layer(p.w_logsig, p.b_logsig, latent_dim, hidden_dim, rng);
    return p;
}

PosteriorParams encode(const Vec& input, const EncoderParams& params,
                       EncoderCache* cache, long* clamp_hits) {
    require(input.size() == params.input_dim(), "E_SHAPE",
            "encoder input length does not match the vocabulary size");

    const Vec a1 = params.w1 * input + params.b1;
    const Vec h1 = a1.unaryExpr([](Scalar x) { return softplus(x); });
    const Vec a2 = params.w2 * h1 + params.b2;
    const Vec h2 = a2.unaryExpr([](Scalar x) { return softplus(x); });

    PosteriorParams post;
    post.mu = params.w_mu * h2 + params.b_mu;
    const Vec raw = params.w_logsig * h2 + params.b_logsig;
    post.log_sigma = raw.cwiseMax(kLogSigmaMin).cwiseMin(kLogSigmaMax);

    if (clamp_hits)
        *clamp_hits += (raw.array() < kLogSigmaMin || raw.array() > kLogSigmaMax).count();
    if (cache) {
        cache->x = input;
        cache->a1 = a1;
        cache->h1 = h1;
        cache->a2 = a2;
        cache->h2 = h2;
        cache->log_sigma_raw = raw;
    }
    return post;
}

Vec sample_theta(const PosteriorParams& post, const Vec& zeta) {
    require(zeta.size() == post.mu.size(), "E_SHAPE", "noise length mismatch");
    return post.mu.array() + post.log_sigma.array().exp() * zeta.array();
}

Vec sample_c(const Vec& mu_c, const Vec& log_sigma_c, const Vec& eps) {
    require(eps.size() == mu_c.size() && log_sigma_c.size() == mu_c.size(), "E_SHAPE",
            "noise length mismatch");
    return mu_c.array() + log_sigma_c.array().exp() * eps.array();
}

}  // namespace cstem
