#pragma once

#include "rllforge/matrix.hpp"

#include <chrono>
#include <cstdint>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace rllforge {

enum class Status { pass, fail, skipped };
const char* status_name(Status s);

// One identity instance.  Non-gating items are diagnostics: they are
// reported but never decide the overall status.
struct CheckItem {
    CheckItem() = default;
    explicit CheckItem(std::string name) : id(std::move(name)) {}

    std::string id;
    Status status = Status::pass;
    std::string residual = "0";
    std::string note;
    bool gating = true;
};

struct CheckReport {
    std::string name;
    int n = 0;
    std::string backend = "symbolic";
    std::string assignment;  // empty when symbolic
    Status status = Status::pass;
    std::string residual = "0";
    double elapsed_ms = 0;
    std::string anchor;
    std::uint64_t seed = 0;
    std::string reason;  // for skipped
    std::vector<CheckItem> items;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();

    CheckItem& add(CheckItem item);
    // overall status from the gating items
    void finalize();
    std::size_t count(Status s, bool gating_only = true) const;

    nlohmann::ordered_json to_json(bool with_timing = false) const;
};

CheckItem compare_matrices(std::string id, const SparseMatrix& lhs, const SparseMatrix& rhs, bool gating = true);
CheckItem compare_vectors(std::string id, const Vector& lhs, const Vector& rhs, bool gating = true);
CheckItem expect_zero(std::string id, const SparseMatrix& m, bool gating = true);

// Passes iff prod_k (m - roots_k I) = 0 and every proper sub-product is
// nonzero; each sub-product gets a witness basis vector in its note.
CheckReport minpoly_verify(const SparseMatrix& m, const std::vector<Scalar>& roots);

// Merges sub-reports (e.g. one per sample point) into target, prefixing item ids.
void absorb(CheckReport& target, const CheckReport& part, const std::string& prefix);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace rllforge
