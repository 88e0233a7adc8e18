#include "cstem/decoder.hpp"

namespace cstem {

Mat squared_distances(const ModelParams& params) {
    require(params.topic_mu.cols() == params.word_emb.cols() &&
                params.topic_log_scale.rows() == params.topic_mu.rows() &&
                params.topic_log_scale.cols() == params.topic_mu.cols(),
            "E_SHAPE", "model parameter shapes disagree");

    const Mat& emb = params.word_emb;
    const Mat inv_var = (-params.topic_log_scale).array().exp();  // K x W

    // d2[v,k] = sum_j (emb_vj - mu_kj)^2 * inv_var_kj, expanded so the three
    // terms are plain matrix products.
    const Mat emb_sq = emb.array().square();
    const Mat mu_iv = params.topic_mu.array() * inv_var.array();
    Mat d2 = emb_sq * inv_var.transpose() - 2.0 * (emb * mu_iv.transpose());
    const Vec mu_sq_iv = (params.topic_mu.array().square() * inv_var.array()).rowwise().sum();
    d2.rowwise() += mu_sq_iv.transpose();
    return d2.cwiseMax(0.0);  // cancellation can leave tiny negatives
}

Mat word_topic_from_distances(const Mat& d2, const Vec& c, Scalar epsilon) {
    require(c.size() == d2.rows(), "E_SHAPE", "global weight length must match word count");
    require(c.allFinite(), "E_DOMAIN", "global weights must be finite");
    const Mat gain = (d2.array() + epsilon).inverse();
    const Mat scores = gain.array().colwise() * c.array();
    return softmax_columns(scores);
}

Mat word_topic_matrix(const ModelParams& params, const Vec& c, DecoderCache* cache,
                      DistanceKind kind) {
    require(kind == DistanceKind::mahalanobis, "E_CONFIG",
            "only the mahalanobis distance kernel is implemented");
    require(c.size() == params.vocab_size(), "E_SHAPE",
            "global weight length must match the vocabulary size");
    require(c.allFinite(), "E_DOMAIN", "global weights must be finite");

    const Mat d2 = squared_distances(params);
    const Mat gain = (d2.array() + params.epsilon).inverse();
    const Mat scores = gain.array().colwise() * c.array();
    Mat a = softmax_columns(scores);
    if (cache) {
        cache->d2 = d2;
        cache->gain = gain;
        cache->a = a;
    }
    return a;
}

Scalar reconstruction_loglik(const BowDocument& doc, const Mat& a, const Vec& theta,
                             long* floor_hits) {
    require(theta.size() == a.cols(), "E_SHAPE", "theta length must match topic count");
    const Vec mix = softmax(theta);
    const Vec p = a * mix;

    Scalar ll = 0;
    for (const auto& [v, count] : doc.counts) {
        require(v >= 0 && v < a.rows(), "E_SHAPE", "document index exceeds word count");
        Scalar pv = p[v];
        if (pv < kProbFloor) {
            pv = kProbFloor;
            if (floor_hits) ++*floor_hits;
        }
        ll += static_cast<Scalar>(count) * std::log(pv);
    }
    return ll;
}

}  // namespace cstem
