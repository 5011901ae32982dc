#include "rllforge/backend.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace rllforge {

Backend Backend::sampled(const Assignment& a) {
    if (!a.has(Var::u) || !a.has(Var::v)) throw InvalidOption("sampled backend needs values for u and v");
    const Rational& u = *a.value[0];
    const Rational& v = *a.value[1];
    if (u * u == v * v) throw InvalidOption("degenerate sample: r = s");
    Backend b;
    b.mode = Mode::sampled;
    b.at = a;
    return b;
}

Assignment desk_point(bool with_z, bool with_w) {
    Assignment a;
    a.set(Var::u, 2).set(Var::v, 3);
    if (with_z) a.set(Var::z, 5);
    if (with_w) a.set(Var::w, 7);
    return a;
}

Rational Sampler::draw() {
    std::uniform_int_distribution<int> num(1, 9), den(1, 7), sign(0, 1);
    // +-1 would make r, s or z degenerate
    for (;;) {
        Rational q(num(rng_) * (sign(rng_) ? -1 : 1), den(rng_));
        q.canonicalize();
        if (abs(q) != 1) return q;
    }
}

Assignment Sampler::next(bool with_z, bool with_w) {
    if (seed_ == 0 && !desk_used_) {
        desk_used_ = true;
        return desk_point(with_z, with_w);
    }
    Assignment a;
    Rational u, v;
    do {
        u = draw();
        v = draw();
    } while (u * u == v * v || u * u * v * v == 1);  // r = s or rs = 1 collapse distinct scalars
    a.set(Var::u, u).set(Var::v, v);
    if (with_z) a.set(Var::z, draw());
    if (with_w) a.set(Var::w, draw());
    return a;
}

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("RLLFORGE_LOG");
        std::string s = env ? env : "error";
        if (s == "debug") return LogLevel::debug;
        if (s == "info") return LogLevel::info;
        return LogLevel::error;
    }();
    return level;
}

void log(LogLevel level, const std::string& msg) {
    if (level > log_level()) return;
    static std::mutex mu;
    static const char* tag[] = {"error", "info", "debug"};
    std::lock_guard<std::mutex> lock(mu);
    std::cerr << "[rllforge " << tag[static_cast<int>(level)] << "] " << msg << '\n';
}

}  // namespace rllforge
