#include "rllforge/checks.hpp"

#include "rllforge/errors.hpp"
#include "rllforge/frt.hpp"
#include "rllforge/gauss.hpp"
#include "rllforge/repr.hpp"
#include "rllforge/transfer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

namespace rllforge {

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {"relations", "braid", "minpoly", "decompose", "ybe",   "unitarity",
                                                   "blocks",    "frt",   "frt-n4",  "psi",       "gauss", "transfer"};
    return names;
}

int default_rank(const std::string& check) {
    static const std::map<std::string, int> d = {{"relations", 3}, {"braid", 2}, {"minpoly", 2}, {"decompose", 3},
                                                 {"ybe", 2},       {"unitarity", 2}, {"blocks", 2}, {"frt", 3},
                                                 {"frt-n4", 4},    {"psi", 3},   {"gauss", 0}, {"transfer", 2}};
    auto it = d.find(check);
    if (it == d.end()) throw UnknownCheck("unknown check '" + check + "'");
    return it->second;
}

std::pair<int, int> parse_index_pair(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw InvalidOption("");
        std::size_t used = 0;
        int a = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw InvalidOption("");
        std::string rest = text.substr(comma + 1);
        int b = std::stoi(rest, &used);
        if (used != rest.size()) throw InvalidOption("");
        return {a, b};
    } catch (const std::exception&) {
        throw InvalidOption("expected an index pair 'i,j', got '" + text + "'");
    }
}

namespace {

using Body = std::function<CheckReport(const Backend&)>;

int default_samples(const std::string& name) {
    if (name == "relations") return 3;
    if (name == "ybe" || name == "unitarity") return 5;
    return 1;
}

// One run on the symbolic backend, or `samples` pole-avoiding sample points
// merged into one report.
CheckReport run_on_backend(const std::string& name, const CheckOptions& o, bool with_z, bool with_w, const Body& body) {
    if (o.backend == "symbolic") return body(Backend::symbolic());
    if (o.backend != "sampled") throw InvalidOption("backend must be symbolic or sampled, got '" + o.backend + "'");
    const int samples = o.samples.value_or(default_samples(name));
    if (samples < 1) throw InvalidOption("--samples must be >= 1");
    Sampler sampler(o.seed);
    std::vector<CheckReport> parts;
    for (int k = 0; k < samples; ++k) parts.push_back(with_resample(sampler, with_z, with_w, body));
    if (samples == 1) return parts.front();
    CheckReport rep = parts.front();
    rep.items.clear();
    rep.extra = nlohmann::ordered_json::object();
    std::string assignments;
    auto per = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        absorb(rep, parts[k], "sample " + std::to_string(k + 1) + ": ");
        assignments += (k ? " | " : "") + parts[k].assignment;
        nlohmann::ordered_json entry = {{"assignment", parts[k].assignment}, {"status", status_name(parts[k].status)}};
        if (!parts[k].extra.empty()) entry["extra"] = parts[k].extra;
        per.push_back(std::move(entry));
        if (parts[k].status == Status::skipped) rep.status = Status::skipped;
    }
    rep.assignment = assignments;
    rep.extra["samples"] = per;
    rep.finalize();
    return rep;
}

// ybe and unitarity share one computation; unitarity keeps its own items
CheckReport keep_unitarity(CheckReport rep) {
    std::erase_if(rep.items, [](const CheckItem& it) { return it.id.find("unitarity") == std::string::npos; });
    rep.finalize();
    return rep;
}

CheckReport dispatch(const std::string& name, const CheckOptions& o, int n) {
    if (name == "relations") {
        const GeneratorImages T = build_T1(n);
        return run_on_backend(name, o, false, false, [&](const Backend& b) {
            CheckReport rep = check_defining_relations(T, b);
            absorb(rep, highest_weight_report(T, b), "highest weight: ");
            rep.finalize();
            return rep;
        });
    }
    if (name == "braid") return run_on_backend(name, o, false, false, [&](const Backend& b) { return check_braid(n, b); });
    if (name == "minpoly")
        return run_on_backend(name, o, false, false, [&](const Backend& b) { return check_minpoly(n, b); });
    if (name == "decompose")
        return run_on_backend(name, o, false, false, [&](const Backend& b) { return decompose_VV(n, b); });
    if (name == "ybe" || name == "unitarity") {
        const bool zw = !o.spectral_symbolic;
        if (o.spectral_symbolic && o.backend != "sampled")
            throw InvalidOption("--spectral symbolic needs --backend sampled");
        CheckReport rep =
            run_on_backend(name, o, zw, zw, [&](const Backend& b) { return check_ybe_unitarity(n, b); });
        return name == "ybe" ? rep : keep_unitarity(std::move(rep));
    }
    if (name == "blocks") return run_on_backend(name, o, false, false, [&](const Backend& b) { return check_blocks(n, b); });
    if (name == "frt" || name == "frt-n4" || name == "psi") {
        if (name == "frt-n4" && n != 4) throw InvalidOption("frt-n4 is the n = 4 table; got --n " + std::to_string(n));
        const LGeneratorImages L = build_phi_images(n);
        if (name == "frt") return run_on_backend(name, o, false, false, [&](const Backend& b) { return check_B_relations(L, b); });
        if (name == "frt-n4") return run_on_backend(name, o, false, false, [&](const Backend& b) { return check_n4_table(L, b); });
        const GeneratorImages T = build_T1(n);
        return run_on_backend(name, o, false, false, [&](const Backend& b) { return psi_roundtrip(L, T, b); });
    }
    if (name == "gauss") {
        const int cases = o.samples.value_or(100);
        return check_gauss(o.seed, cases, std::max(1, cases / 2));
    }
    if (name == "transfer") {
        ChainSpec chain;
        chain.n = n;
        chain.sites = o.sites;
        chain.cap = o.cap;
        chain.variant = o.variant;
        try {
            return check_transfer(chain, o.seed, o.samples.value_or(3));
        } catch (const CapExceeded& e) {
            CheckReport rep;
            rep.name = "transfer";
            rep.n = n;
            rep.backend = "sampled";
            rep.seed = o.seed;
            rep.status = Status::skipped;
            rep.reason = e.what();
            rep.anchor = "quantum Yang-Baxter equation: commuting transfer matrices";
            return rep;
        }
    }
    throw UnknownCheck("unknown check '" + name + "'");
}

}  // namespace

CheckReport run_check(const std::string& name, const CheckOptions& opts) {
    const int n = opts.n.value_or(default_rank(name));
    std::unique_ptr<DCoeffSignFlip> flip;
    if (opts.flip_d) flip = std::make_unique<DCoeffSignFlip>(opts.flip_d->first, opts.flip_d->second);
    Stopwatch sw;
    CheckReport rep = dispatch(name, opts, n);
    rep.name = name;
    rep.seed = opts.seed;
    if (name != "gauss" && name != "transfer") rep.backend = opts.backend;
    if (opts.flip_d)
        rep.extra["injected"] =
            "sign of d_" + std::to_string(opts.flip_d->first) + "," + std::to_string(opts.flip_d->second) + " flipped";
    rep.elapsed_ms = sw.ms();
    log(LogLevel::info, name + " n=" + std::to_string(n) + " " + status_name(rep.status) + " in " +
                            std::to_string(rep.elapsed_ms) + " ms");
    return rep;
}

const std::vector<std::string>& dump_targets() {
    static const std::vector<std::string> t = {"t1", "r-basic", "rhat-basic", "r-spectral", "rhat-spectral", "l-plus", "l-minus"};
    return t;
}

SparseMatrix dump_target(const std::string& which, const DumpOptions& o) {
    if (std::find(dump_targets().begin(), dump_targets().end(), which) == dump_targets().end())
        throw UnknownTarget("unknown dump target '" + which + "'");
    Backend b = Backend::symbolic();
    if (o.backend == "sampled")
        b = Backend::sampled(Sampler(o.seed).next(which == "r-spectral" || which == "rhat-spectral", false));
    else if (o.backend != "symbolic")
        throw InvalidOption("backend must be symbolic or sampled, got '" + o.backend + "'");
    if (which == "t1") {
        if (o.gen.empty()) throw InvalidOption("dump t1 needs --gen (e.g. e1, f2, w3, wp1inv)");
        return b(build_T1(o.n).get(Generator::parse(o.gen)));
    }
    if (which == "r-basic") return b(build_R_basic(o.n).matrix);
    if (which == "rhat-basic") return b(build_Rhat_basic(o.n));
    if (which == "r-spectral") return b(build_R_spectral(o.n, Variant::plain).matrix);
    if (which == "rhat-spectral") return b(build_R_spectral(o.n, Variant::hat).matrix);
    if (o.gen.empty()) throw InvalidOption("dump " + which + " needs --gen i,j");
    auto [i, j] = parse_index_pair(o.gen);
    const LGeneratorImages L = build_phi_images(o.n);
    const bool plus = which == "l-plus";
    if (!L.has(plus, i, j)) throw InvalidOption(LGeneratorImages::name(plus, i, j) + " has no image");
    return b(plus ? L.lp(i, j) : L.lm(i, j));
}

std::vector<PlannedCheck> selftest_plan(const std::string& profile, std::uint64_t seed) {
    if (profile != "quick" && profile != "full") throw InvalidOption("profile must be quick or full");
    std::vector<PlannedCheck> plan;
    auto add = [&](const std::string& name, int n, const std::string& backend) {
        CheckOptions o;
        o.n = n;
        o.backend = backend;
        o.seed = seed;
        plan.push_back({name, o});
        return &plan.back().opts;
    };
    for (int n : {2, 3}) {
        add("braid", n, "symbolic");
        add("minpoly", n, "symbolic");
        add("decompose", n, "symbolic");
        add("blocks", n, "symbolic");
    }
    add("relations", 3, "symbolic");
    add("ybe", 2, "symbolic");
    add("ybe", 3, "symbolic");
    add("ybe", 2, "sampled")->spectral_symbolic = true;
    add("frt", 3, "symbolic");
    add("psi", 3, "symbolic");
    add("transfer", 2, "sampled");
    add("gauss", 0, "sampled")->samples = profile == "quick" ? 20 : 100;
    std::vector<int> sampled_ranks = {4};
    if (profile == "full") sampled_ranks = {4, 5, 6};
    for (int n : sampled_ranks) {
        for (const char* name : {"relations", "braid", "minpoly", "decompose", "ybe", "blocks", "frt", "psi"})
            add(name, n, "sampled")->samples = 1;
        if (n == 4) add("frt-n4", 4, "sampled");
    }
    if (profile == "full") add("transfer", 2, "sampled")->sites = 3;
    return plan;
}

}  // namespace rllforge
