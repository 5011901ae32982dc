#include "rllforge/report.hpp"

#include "rllforge/errors.hpp"

#include <algorithm>
#include <tuple>

namespace rllforge {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

CheckItem& CheckReport::add(CheckItem item) {
    items.push_back(std::move(item));
    return items.back();
}

void CheckReport::finalize() {
    if (status == Status::skipped) return;
    status = Status::pass;
    residual = "0";
    for (const auto& it : items) {
        if (!it.gating || it.status != Status::fail) continue;
        status = Status::fail;
        residual = it.id + " " + it.residual;
        break;
    }
}

std::size_t CheckReport::count(Status s, bool gating_only) const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [&](const CheckItem& it) {
        return it.status == s && (!gating_only || it.gating);
    }));
}

nlohmann::ordered_json CheckReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["check"] = name;
    j["n"] = n;
    j["backend"] = backend;
    if (!assignment.empty()) j["assignment"] = assignment;
    j["seed"] = seed;
    j["status"] = status_name(status);
    j["residual"] = residual;
    if (with_timing) j["elapsed_ms"] = elapsed_ms;
    j["anchor"] = anchor;
    if (!reason.empty()) j["reason"] = reason;
    j["summary"] = {{"pass", count(Status::pass)},
                    {"fail", count(Status::fail)},
                    {"skipped", count(Status::skipped, false)},
                    {"diagnostic_fail", count(Status::fail, false) - count(Status::fail)}};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& it : items) {
        nlohmann::ordered_json e;
        e["id"] = it.id;
        e["status"] = status_name(it.status);
        if (!it.gating) e["gating"] = false;
        if (it.residual != "0") e["residual"] = it.residual;
        if (!it.note.empty()) e["note"] = it.note;
        arr.push_back(std::move(e));
    }
    j["items"] = std::move(arr);
    if (!extra.empty()) j["details"] = extra;
    return j;
}

CheckItem compare_matrices(std::string id, const SparseMatrix& lhs, const SparseMatrix& rhs, bool gating) {
    return expect_zero(std::move(id), lhs - rhs, gating);
}

CheckItem expect_zero(std::string id, const SparseMatrix& m, bool gating) {
    CheckItem it;
    it.id = std::move(id);
    it.gating = gating;
    it.residual = residual_string(m);
    it.status = it.residual == "0" ? Status::pass : Status::fail;
    return it;
}

CheckItem compare_vectors(std::string id, const Vector& lhs, const Vector& rhs, bool gating) {
    CheckItem it;
    it.id = std::move(id);
    it.gating = gating;
    it.residual = residual_string(lhs - rhs);
    it.status = it.residual == "0" ? Status::pass : Status::fail;
    return it;
}

CheckReport minpoly_verify(const SparseMatrix& m, const std::vector<Scalar>& roots) {
    CheckReport rep;
    rep.name = "minpoly";
    const std::size_t k = roots.size();
    if (k == 0 || k > 16) throw InvalidOption("minpoly_verify needs 1..16 roots");
    const SparseMatrix I = SparseMatrix::identity(m.dim());
    std::vector<SparseMatrix> factor;
    for (const auto& x : roots) factor.push_back(m - x * I);
    auto product = [&](unsigned mask) {
        SparseMatrix p = I;
        for (std::size_t t = 0; t < k; ++t)
            if (mask & (1u << t)) p = p * factor[t];
        return p;
    };
    const unsigned full = (1u << k) - 1;
    rep.add(expect_zero("full product", product(full)));
    for (unsigned mask = 1; mask < full; ++mask) {
        CheckItem it;
        it.id = "sub-product {";
        for (std::size_t t = 0, first = 1; t < k; ++t)
            if (mask & (1u << t)) {
                it.id += (first ? "" : ", ") + roots[t].str();
                first = 0;
            }
        it.id += "} nonzero";
        auto nz = product(mask).first_nonzero();
        if (nz) {
            // column of the first nonzero entry: that basis vector is not killed
            it.note = "witness v" + std::to_string(std::get<1>(*nz) + 1);
        } else {
            it.status = Status::fail;
            it.residual = "sub-product vanishes";
        }
        rep.add(std::move(it));
    }
    rep.finalize();
    return rep;
}

void absorb(CheckReport& target, const CheckReport& part, const std::string& prefix) {
    for (auto it : part.items) {
        it.id = prefix + it.id;
        target.items.push_back(std::move(it));
    }
}

}  // namespace rllforge
