#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cstem {

using Scalar = double;

template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowVecX = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using Mat = MatX<Scalar>;
using Vec = VecX<Scalar>;
using RowVec = RowVecX<Scalar>;
using Index = Eigen::Index;

/// Error carrying a machine-parsable code; what() is "<code>: message",
/// which the CLI prints as a single line before exiting nonzero.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool cond, const std::string& code, const std::string& message) {
    if (!cond) fail(code, message);
}

// Numerically stable on both tails.
inline Scalar softplus(Scalar x) {
    return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

inline Scalar sigmoid(Scalar x) {
    if (x > 0) return 1.0 / (1.0 + std::exp(-x));
    const Scalar e = std::exp(x);
    return e / (1.0 + e);
}

/// Max-subtracted softmax of a score vector.
template <class Derived>
VecX<typename Derived::Scalar> softmax(const Eigen::MatrixBase<Derived>& scores) {
    using S = typename Derived::Scalar;
    VecX<S> z = scores;
    z.array() -= z.maxCoeff();
    z = z.array().exp();
    z /= z.sum();
    return z;
}

/// Column-wise max-subtracted softmax: every column of the result sums to 1.
template <class Derived>
MatX<typename Derived::Scalar> softmax_columns(const Eigen::MatrixBase<Derived>& scores) {
    using S = typename Derived::Scalar;
    MatX<S> a = scores;
    const RowVecX<S> mx = a.colwise().maxCoeff();
    a = (a.rowwise() - mx).array().exp();
    const RowVecX<S> z = a.colwise().sum();
    a.array().rowwise() /= z.array();
    return a;
}

}  // namespace cstem
