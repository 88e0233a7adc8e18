#pragma once

#include "cstem/types.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

namespace cstem {

/// Seeded RNG used by everything stochastic. The normal transform is
/// stateless (fresh Box-Muller per call, cosine branch only) so the engine
/// state alone reproduces the stream; std::normal_distribution keeps a
/// cached spare that would otherwise have to be serialized with it.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// 53-bit uniform in [0, 1).
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double normal() {
        const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    void fill_normal(Eigen::Ref<Vec> v) {
        for (Index i = 0; i < v.size(); ++i) v[i] = normal();
    }

    void fill_normal(Mat& m) {  // column-major fill order
        for (Index j = 0; j < m.cols(); ++j)
            for (Index i = 0; i < m.rows(); ++i) m(i, j) = normal();
    }

    /// Unbiased integer in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    /// Fisher-Yates; std::shuffle's draw sequence is implementation-defined.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }

    std::string state() const {
        std::ostringstream os;
        os << eng_;
        return os.str();
    }

    void set_state(const std::string& s) {
        std::istringstream is(s);
        is >> eng_;
        require(!is.fail(), "E_PARSE", "malformed rng state");
    }

private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;
    std::mt19937_64 eng_;
};

}  // namespace cstem
