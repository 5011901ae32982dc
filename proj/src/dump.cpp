#include "rllforge/dump.hpp"

#include "rllforge/errors.hpp"

namespace rllforge {

nlohmann::ordered_json dump_matrix_json(const SparseMatrix& m) {
    nlohmann::ordered_json j;
    j["dim"] = m.dim();
    auto entries = nlohmann::ordered_json::array();
    // rows are kept sorted by column
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (const auto& [c, x] : m.row(i)) entries.push_back({i + 1, c + 1, x.str()});
    j["entries"] = std::move(entries);
    return j;
}

std::string dump_matrix_text(const SparseMatrix& m) {
    const auto j = dump_matrix_json(m);
    std::string out = "{\"dim\": " + std::to_string(m.dim()) + ", \"entries\": [";
    bool first = true;
    for (const auto& e : j["entries"]) {
        out += first ? "\n  " : ",\n  ";
        out += e.dump(-1, ' ', false);
        first = false;
    }
    out += first ? "]}\n" : "\n]}\n";
    return out;
}

SparseMatrix parse_matrix_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) throw ParseError("dump needs dim and entries");
        const auto dim = j.at("dim").get<std::size_t>();
        if (dim == 0) throw ParseError("dump dim must be positive");
        SparseMatrix m(dim);
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3) throw ParseError("dump entry must be [row, col, value]");
            const auto row = e[0].get<std::size_t>(), col = e[1].get<std::size_t>();
            if (row < 1 || row > dim || col < 1 || col > dim) throw ParseError("dump entry index out of range");
            m.add_to(row - 1, col - 1, Scalar::parse(e[2].get<std::string>()));
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad dump: ") + e.what());
    }
}

SparseMatrix parse_matrix_dump(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad dump: ") + e.what());
    }
    return parse_matrix_json(j);
}

}  // namespace rllforge
