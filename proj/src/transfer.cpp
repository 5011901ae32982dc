#include "rllforge/transfer.hpp"

#include "rllforge/errors.hpp"

namespace rllforge {

std::size_t chain_dim(const ChainSpec& chain) {
    if (chain.n < 2) throw RankUnsupported("transfer needs n >= 2");
    if (chain.sites < 1) throw InvalidOption("site count must be >= 1");
    const std::size_t d = 2 * static_cast<std::size_t>(chain.n);
    std::size_t total = 1;
    for (int k = 0; k <= chain.sites; ++k) {
        total *= d;
        if (total > chain.cap)
            throw CapExceeded("(2n)^(L+1) exceeds cap " + std::to_string(chain.cap) + " for n=" +
                              std::to_string(chain.n) + ", L=" + std::to_string(chain.sites));
    }
    return total;
}

SparseMatrix lax_at(const ChainSpec& chain, const Backend& b, const Rational& z) {
    Assignment at = b.is_sampled() ? b.at : Assignment{};
    at.set(Var::z, z);
    return build_R_spectral(chain.n, chain.variant).matrix.eval(at);
}

SparseMatrix monodromy_of(const ChainSpec& chain, const SparseMatrix& lax) {
    chain_dim(chain);
    const std::size_t d = 2 * static_cast<std::size_t>(chain.n);
    const std::size_t slots = static_cast<std::size_t>(chain.sites) + 1;
    SparseMatrix m = embed_two_site(lax, d, slots, 0, 1);
    for (std::size_t k = 2; k < slots; ++k) m = embed_two_site(lax, d, slots, 0, k) * m;
    return m;
}

SparseMatrix monodromy(const ChainSpec& chain, const Backend& b, const Rational& z) {
    chain_dim(chain);
    return monodromy_of(chain, lax_at(chain, b, z));
}

SparseMatrix transfer_of(const ChainSpec& chain, const SparseMatrix& lax) {
    return trace_first(monodromy_of(chain, lax), 2 * static_cast<std::size_t>(chain.n));
}

SparseMatrix transfer_trace(const ChainSpec& chain, const Backend& b, const Rational& z) {
    chain_dim(chain);
    return transfer_of(chain, lax_at(chain, b, z));
}

CheckReport check_commuting(const ChainSpec& chain, const Backend& b, const Rational& z, const Rational& w) {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "transfer";
    rep.n = chain.n;
    rep.backend = b.describe();
    rep.anchor = "quantum Yang-Baxter equation: commuting transfer matrices";
    Assignment at = b.is_sampled() ? b.at : Assignment{};
    at.set(Var::z, z).set(Var::w, w);
    rep.assignment = at.str();
    const SparseMatrix tz = transfer_trace(chain, b, z);
    const SparseMatrix tw = transfer_trace(chain, b, w);
    auto& it = rep.add(expect_zero("[T(z), T(w)] = 0", commutator(tz, tw)));
    it.note = "L=" + std::to_string(chain.sites) + ", dim " + std::to_string(tz.dim());
    CheckItem nz("T(z) nonzero");
    if (tz.is_zero()) {
        nz.status = Status::fail;
        nz.residual = "T(z) = 0";
    }
    rep.add(nz);
    rep.finalize();
    rep.elapsed_ms = sw.ms();
    return rep;
}

CheckReport check_transfer(const ChainSpec& chain, std::uint64_t seed, int pairs) {
    if (pairs < 1) throw InvalidOption("need at least one (z, w) pair");
    chain_dim(chain);
    Stopwatch sw;
    CheckReport rep;
    rep.name = "transfer";
    rep.n = chain.n;
    rep.backend = "sampled";
    rep.seed = seed;
    rep.anchor = "quantum Yang-Baxter equation: commuting transfer matrices";
    Sampler sampler(seed);
    auto points = nlohmann::ordered_json::array();
    for (int k = 0; k < pairs; ++k) {
        CheckReport part = with_resample(sampler, true, true, [&](const Backend& b) {
            return check_commuting(chain, b, *b.at.value[static_cast<int>(Var::z)], *b.at.value[static_cast<int>(Var::w)]);
        });
        absorb(rep, part, "pair " + std::to_string(k + 1) + ": ");
        points.push_back(part.assignment);
    }
    rep.extra["sites"] = chain.sites;
    rep.extra["points"] = points;
    rep.finalize();
    rep.elapsed_ms = sw.ms();
    return rep;
}

}  // namespace rllforge
