#pragma once

// Named checks, dump targets and selftest plans behind the CLI.

#include "rllforge/report.hpp"
#include "rllforge/rmat.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rllforge {

struct CheckOptions {
    std::optional<int> n;            // per-check default when unset
    std::string backend = "symbolic";
    std::uint64_t seed = 0;
    std::optional<int> samples;      // sample points, or case count for gauss
    std::size_t cap = 10000;
    int sites = 2;
    Variant variant = Variant::hat;
    bool spectral_symbolic = false;  // ybe/unitarity: sample u, v only
    std::optional<std::pair<int, int>> flip_d;  // fault injection
};

const std::vector<std::string>& check_names();
int default_rank(const std::string& check);

// Throws UnknownCheck, InvalidOption.
CheckReport run_check(const std::string& name, const CheckOptions& opts);

struct DumpOptions {
    int n = 2;
    std::string backend = "symbolic";
    std::uint64_t seed = 0;
    std::string gen;  // "e3" for t1, "i,j" for l-plus / l-minus
};

const std::vector<std::string>& dump_targets();
// Throws UnknownTarget, InvalidOption.
SparseMatrix dump_target(const std::string& which, const DumpOptions& opts);

struct PlannedCheck {
    std::string name;
    CheckOptions opts;
};

// "quick" or "full"; throws InvalidOption otherwise
std::vector<PlannedCheck> selftest_plan(const std::string& profile, std::uint64_t seed);

// "i,j" -> (i, j); throws InvalidOption
std::pair<int, int> parse_index_pair(const std::string& text);

}  // namespace rllforge
