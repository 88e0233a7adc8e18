#pragma once

#include "cstem/corpus.hpp"
#include "cstem/types.hpp"

namespace cstem {

/// Semantic distance kernel between a word and a topic. Only the Mahalanobis
/// kernel is implemented; the enum is the extension point for the others.
enum class DistanceKind { mahalanobis, cauchy, student_t, logistic };

/// Decoder-side model parameters: word embeddings, topic centers, and the
/// per-topic diagonal metric stored as log-scale (exp gives the variances).
struct ModelParams {
    Mat word_emb;         // V x W
    Mat topic_mu;         // K x W
    Mat topic_log_scale;  // K x W
    Scalar epsilon = 1e-4;  // guards the zero-distance case

    Index vocab_size() const { return word_emb.rows(); }
    Index num_topics() const { return topic_mu.rows(); }
    Index embed_dim() const { return word_emb.cols(); }
};

/// Squared Mahalanobis distance with a diagonal metric:
/// sum_j (x_j - mu_j)^2 / scale_j, scale being the variances.
template <class D1, class D2, class D3>
Scalar mahalanobis_sq(const Eigen::MatrixBase<D1>& x, const Eigen::MatrixBase<D2>& mu,
                      const Eigen::MatrixBase<D3>& diag_scale) {
    require(x.size() == mu.size() && x.size() == diag_scale.size(), "E_SHAPE",
            "mahalanobis operands must have equal length");
    require((diag_scale.array() > 0).all(), "E_DOMAIN",
            "mahalanobis scale must be strictly positive");
    return ((x.array() - mu.array()).square() / diag_scale.array()).sum();
}

/// V x K matrix of squared Mahalanobis distances between every word embedding
/// and every topic.
Mat squared_distances(const ModelParams& params);

/// Column-stochastic word-topic matrix from a precomputed distance matrix:
/// A[:,k] = softmax_v( c_v / (d2[v,k] + epsilon) ).
Mat word_topic_from_distances(const Mat& d2, const Vec& c, Scalar epsilon);

/// Forward intermediates reused by the gradient pass.
struct DecoderCache {
    Mat d2;      // V x K
    Mat gain;    // 1 / (d2 + epsilon)
    Mat a;       // column-stochastic word-topic matrix
};

Mat word_topic_matrix(const ModelParams& params, const Vec& c, DecoderCache* cache = nullptr,
                      DistanceKind kind = DistanceKind::mahalanobis);

// Mixture probabilities below this are floored before the log; every hit is
// counted as a numerical-warning event.
inline constexpr Scalar kProbFloor = 1e-12;

/// Bag-of-words log-likelihood sum_v count_v * log((A * softmax(theta))_v).
Scalar reconstruction_loglik(const BowDocument& doc, const Mat& a, const Vec& theta,
                             long* floor_hits = nullptr);

}  // namespace cstem
