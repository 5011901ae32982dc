#pragma once

#include "rllforge/matrix.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace rllforge {

// Symbolic: values pass through untouched.  Sampled: every scalar is
// specialized at the assignment before use.
struct Backend {
    enum class Mode { symbolic, sampled };
    Mode mode = Mode::symbolic;
    Assignment at;

    static Backend symbolic() { return {}; }
    // rejects u^2 = v^2 (r = s)
    static Backend sampled(const Assignment& a);

    bool is_sampled() const { return mode == Mode::sampled; }
    Scalar operator()(const Scalar& x) const { return is_sampled() ? x.eval(at) : x; }
    SparseMatrix operator()(const SparseMatrix& m) const { return is_sampled() ? m.eval(at) : m; }
    std::string describe() const { return is_sampled() ? "sampled" : "symbolic"; }
};

// u=2, v=3 (r=4, s=9), and z=5, w=7 when requested
Assignment desk_point(bool with_z = false, bool with_w = false);

// Small-height random rationals from one 64-bit seed.  Seed 0 yields the
// desk point first.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : seed_(seed), rng_(seed) {}
    std::uint64_t seed() const { return seed_; }
    Assignment next(bool with_z = false, bool with_w = false);

private:
    Rational draw();
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    bool desk_used_ = false;
};

// Runs f at a fresh sample, resampling (up to 10 times) when a pole is hit.
template <class F>
auto with_resample(Sampler& sampler, bool with_z, bool with_w, F&& f) -> decltype(f(Backend{}));

enum class LogLevel { error = 0, info = 1, debug = 2 };
LogLevel log_level();
void log(LogLevel level, const std::string& msg);

}  // namespace rllforge

#include "rllforge/errors.hpp"

namespace rllforge {

template <class F>
auto with_resample(Sampler& sampler, bool with_z, bool with_w, F&& f) -> decltype(f(Backend{})) {
    for (int attempt = 0;; ++attempt) {
        Backend b = Backend::sampled(sampler.next(with_z, with_w));
        try {
            return f(b);
        } catch (const DivisionByZero& e) {
            log(LogLevel::info, "pole at " + b.at.str() + " (" + e.what() + "), resampling");
            if (attempt >= 9) throw;
        }
    }
}

}  // namespace rllforge
