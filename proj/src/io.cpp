#include "qlab/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qlab/errors.hpp"

namespace qlab {

namespace {

// Data lines with comments stripped; blank lines dropped.
std::vector<std::string> data_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.push_back(line);
    }
    return out;
}

}  // namespace

Quandle read_quandle(const std::string& path, bool transposed) {
    std::vector<std::string> lines = data_lines(path);
    if (lines.empty()) throw ParseError(path + ": missing order line");
    int n = 0;
    {
        std::istringstream hs(lines[0]);
        if (!(hs >> n) || n < 1) throw ParseError(path + ": bad order line");
        std::string extra;
        if (hs >> extra) throw ParseError(path + ": trailing tokens on order line");
    }
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError(path + ": expected " + std::to_string(n) + " rows");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        std::istringstream rs(lines[a + 1]);
        for (int b = 0; b < n; ++b) {
            int v = 0;
            if (!(rs >> v)) throw ParseError(path + ": short row " + std::to_string(a + 1));
            if (v < 1 || v > n)
                throw ParseError(path + ": entry " + std::to_string(v) + " out of range");
            if (transposed)
                table[b][a] = v - 1;
            else
                table[a][b] = v - 1;
        }
        std::string extra;
        if (rs >> extra) throw ParseError(path + ": long row " + std::to_string(a + 1));
    }
    return verify_quandle(table);
}

void write_quandle(const std::string& path, const Quandle& X) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << X.size() << "\n";
    for (int a = 0; a < X.size(); ++a) {
        for (int b = 0; b < X.size(); ++b) out << (b ? " " : "") << X.op(a, b) + 1;
        out << "\n";
    }
}

bool rig_transposed_env() {
    const char* v = std::getenv("RIG_TRANSPOSED");
    return v != nullptr && std::string(v) == "1";
}

Cocycle read_cocycle(const std::string& path) {
    std::vector<std::string> lines = data_lines(path);
    if (lines.empty()) throw ParseError(path + ": missing header line");
    int n = 0;
    std::string group;
    {
        std::istringstream hs(lines[0]);
        if (!(hs >> n >> group) || n < 1 || group.rfind("A=", 0) != 0)
            throw ParseError(path + ": header must be `n A=d1xd2x...`");
    }
    AbelianGroup A = AbelianGroup::parse(group.substr(2));
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError(path + ": expected " + std::to_string(n) + " rows");

    Cocycle phi = Cocycle::zero(A, n);
    for (int x = 0; x < n; ++x) {
        std::istringstream rs(lines[x + 1]);
        for (int y = 0; y < n; ++y) {
            std::string entry;
            if (!(rs >> entry)) throw ParseError(path + ": short row " + std::to_string(x + 1));
            std::istringstream es(entry);
            AbelianGroup::Elem v;
            std::string part;
            while (std::getline(es, part, ',')) {
                try {
                    v.push_back(std::stoll(part));
                } catch (const std::exception&) {
                    throw ParseError(path + ": bad residue `" + part + "`");
                }
            }
            if (static_cast<int>(v.size()) != A.factors() || !A.valid(v))
                throw ParseError(path + ": entry `" + entry + "` does not fit " + A.format());
            phi.at(x, y) = std::move(v);
        }
        std::string extra;
        if (rs >> extra) throw ParseError(path + ": long row " + std::to_string(x + 1));
    }
    return phi;
}

void write_cocycle(const std::string& path, const Cocycle& phi) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << phi.n << " A=" << phi.A.format() << "\n";
    for (int x = 0; x < phi.n; ++x) {
        for (int y = 0; y < phi.n; ++y) {
            if (y) out << " ";
            const AbelianGroup::Elem& v = phi.at(x, y);
            for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        }
        out << "\n";
    }
}

std::vector<RecoveryAnchor> read_anchors(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_array()) throw ParseError(path + ": anchors file must be a JSON array");
    std::vector<RecoveryAnchor> out;
    for (const auto& item : j) {
        try {
            RecoveryAnchor a;
            a.v = item.at("v").get<std::vector<std::int64_t>>();
            a.braid = parse_braid(item.at("braid").get<std::string>());
            a.r_e = item.at("r_e").get<std::int64_t>();
            a.r_v = item.at("r_v").get<std::int64_t>();
            out.push_back(std::move(a));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    return out;
}

ExtensionDescriptor read_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
        return ExtensionDescriptor{j.at("base").get<std::string>(),
                                   j.at("group").get<std::string>(),
                                   j.at("cocycle").get<std::string>()};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_descriptor(const std::string& path, const ExtensionDescriptor& d) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    nlohmann::json j{{"base", d.base}, {"group", d.group}, {"cocycle", d.cocycle}};
    out << j.dump(2) << "\n";
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace qlab
