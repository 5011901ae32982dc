#include "rllforge/checks.hpp"
#include "rllforge/dump.hpp"
#include "rllforge/errors.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace rllforge;

namespace {

// exit codes
constexpr int kPass = 0, kFail = 1, kUsage = 2;

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InvalidOption("cannot write " + out);
    f << text;
}

std::string summary_line(const CheckReport& r, bool timing) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s n=%-2d %-9s %-7s", r.name.c_str(), r.n, r.backend.c_str(), status_name(r.status));
    std::string line = buf;
    if (timing) {
        std::snprintf(buf, sizeof buf, " %10.1f ms", r.elapsed_ms);
        line += buf;
    }
    if (r.status == Status::fail) line += "  " + r.residual;
    if (r.status == Status::skipped) line += "  " + r.reason;
    return line + "\n";
}

bool is_usage_error(const Error& e) {
    return dynamic_cast<const UnknownCheck*>(&e) || dynamic_cast<const UnknownTarget*>(&e) ||
           dynamic_cast<const InvalidOption*>(&e) || dynamic_cast<const RankUnsupported*>(&e) ||
           dynamic_cast<const IndexOutOfRange*>(&e);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rllforge: exact checks for the two-parameter quantum group of type D_n"};
    app.require_subcommand(1);

    CheckOptions copt;
    std::string check_name, out, variant = "hat", spectral = "sampled", flip;
    int n = 0, samples = 0;
    bool timing = false;
    auto* check = app.add_subcommand("check", "run one named check and print its JSON report");
    check->add_option("name", check_name, "relations|braid|minpoly|decompose|ybe|unitarity|blocks|frt|frt-n4|psi|gauss|transfer")
        ->required();
    check->add_option("--n", n, "rank (default depends on the check)");
    check->add_option("--backend", copt.backend, "symbolic|sampled")->capture_default_str();
    check->add_option("--seed", copt.seed, "64-bit seed for every random choice")->capture_default_str();
    check->add_option("--samples", samples, "sample points (case count for gauss, (z,w) pairs for transfer)");
    check->add_option("--out", out, "write the report here instead of stdout");
    check->add_option("--cap", copt.cap, "transfer: bound on (2n)^(L+1)")->capture_default_str();
    check->add_option("--sites", copt.sites, "transfer: chain length L")->capture_default_str();
    check->add_option("--variant", variant, "transfer: Lax operator hat|plain")->capture_default_str();
    check->add_option("--spectral", spectral, "ybe/unitarity with sampled backend: sampled|symbolic z, w")
        ->capture_default_str();
    check->add_option("--inject-d-sign", flip, "fault injection: flip the sign of d_ij, given as i,j");
    check->add_flag("--timing", timing, "include elapsed_ms in the JSON");
    std::string table;
    check->add_option("--table", table, "frt: n4 runs the displayed n = 4 table (same as frt-n4)");

    std::string target;
    DumpOptions dopt;
    auto* dump = app.add_subcommand("dump", "write a matrix in the dump format");
    dump->add_option("target", target, "t1|r-basic|rhat-basic|r-spectral|rhat-spectral|l-plus|l-minus")->required();
    dump->add_option("--n", dopt.n, "rank")->capture_default_str();
    dump->add_option("--gen", dopt.gen, "generator: e1, f2, w3, wp1inv for t1; i,j for l-plus/l-minus");
    dump->add_option("--backend", dopt.backend, "symbolic|sampled")->capture_default_str();
    dump->add_option("--seed", dopt.seed, "seed for the sampled backend")->capture_default_str();
    dump->add_option("--out", out, "output file");

    std::string profile = "quick";
    std::uint64_t st_seed = 0;
    auto* self = app.add_subcommand("selftest", "run a fixed battery of checks and print a summary table");
    self->add_option("profile", profile, "quick|full")->capture_default_str();
    self->add_option("--seed", st_seed, "seed")->capture_default_str();
    self->add_option("--out", out, "write all reports as a JSON array here");
    self->add_option("--inject-d-sign", flip, "fault injection: flip the sign of d_ij, given as i,j");
    self->add_flag("--timing", timing, "show timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*check) {
            if (check->count("--n")) copt.n = n;
            if (check->count("--samples")) copt.samples = samples;
            if (variant != "hat" && variant != "plain") throw InvalidOption("--variant must be hat or plain");
            copt.variant = variant == "hat" ? Variant::hat : Variant::plain;
            if (spectral != "sampled" && spectral != "symbolic") throw InvalidOption("--spectral must be sampled or symbolic");
            copt.spectral_symbolic = spectral == "symbolic";
            if (!flip.empty()) copt.flip_d = parse_index_pair(flip);
            if (!table.empty()) {
                if (check_name != "frt" || table != "n4") throw InvalidOption("--table n4 applies to check frt only");
                check_name = "frt-n4";
                if (!copt.n) copt.n = 4;
            }
            CheckReport rep = run_check(check_name, copt);
            emit(rep.to_json(timing).dump(2) + "\n", out);
            return rep.status == Status::pass ? kPass : kFail;
        }
        if (*dump) {
            SparseMatrix m = dump_target(target, dopt);
            emit(dump_matrix_text(m), out);
            return kPass;
        }
        std::optional<std::pair<int, int>> flip_d;
        if (!flip.empty()) flip_d = parse_index_pair(flip);
        auto plan = selftest_plan(profile, st_seed);
        auto all = nlohmann::ordered_json::array();
        int failed = 0;
        std::cout << "selftest " << profile << " seed=" << st_seed << "\n";
        for (auto& item : plan) {
            item.opts.flip_d = flip_d;
            CheckReport rep = run_check(item.name, item.opts);
            if (rep.status != Status::pass) ++failed;
            std::cout << summary_line(rep, timing) << std::flush;
            all.push_back(rep.to_json(timing));
        }
        std::cout << plan.size() - failed << "/" << plan.size() << " passed\n";
        if (!out.empty()) emit(all.dump(2) + "\n", out);
        return failed == 0 ? kPass : kFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_usage_error(e) ? kUsage : kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
