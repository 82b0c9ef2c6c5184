#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "field.hpp"
#include "space.hpp"

namespace kakeya {

/// Malformed input file (schema or syntax); distinct from domain errors so
/// callers can map it to the right exit code.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance file: {"p": int, "m": int, "n": int, "T": [[int,...],...] | "full"}.
/// Coordinates are field element codes. "full" means every nonzero vector.
struct Instance {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    unsigned n = 0;
    bool full = false;
    std::vector<Vector> T;  // empty when full
};

inline Instance parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("instance file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance file must be a JSON object");
    for (const char* key : {"p", "m", "n", "T"})
        if (!doc.contains(key)) throw ParseError(std::string("instance file missing key \"") + key + "\"");
    Instance inst;
    if (!doc["p"].is_number_unsigned() || !doc["m"].is_number_unsigned() || !doc["n"].is_number_unsigned())
        throw ParseError("instance keys p, m, n must be non-negative integers");
    inst.p = doc["p"].get<std::uint32_t>();
    inst.m = doc["m"].get<std::uint32_t>();
    inst.n = doc["n"].get<unsigned>();
    const auto& t = doc["T"];
    if (t.is_string()) {
        if (t.get<std::string>() != "full") throw ParseError("instance key T must be \"full\" or an array of vectors");
        inst.full = true;
    } else if (t.is_array()) {
        for (const auto& row : t) {
            if (!row.is_array()) throw ParseError("instance key T must contain arrays of coordinates");
            Vector v;
            v.reserve(row.size());
            for (const auto& c : row) {
                if (!c.is_number_unsigned()) throw ParseError("vector coordinates must be non-negative integers");
                v.push_back(c.get<elem_t>());
            }
            inst.T.push_back(std::move(v));
        }
    } else {
        throw ParseError("instance key T must be \"full\" or an array of vectors");
    }
    return inst;
}

inline Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

inline std::string instance_to_json(const Instance& inst) {
    nlohmann::json doc;
    doc["p"] = inst.p;
    doc["m"] = inst.m;
    doc["n"] = inst.n;
    if (inst.full) {
        doc["T"] = "full";
    } else {
        auto rows = nlohmann::json::array();
        for (const Vector& v : inst.T) rows.push_back(v);
        doc["T"] = std::move(rows);
    }
    return doc.dump();
}

/// The vectors an instance stands for; "full" expands to all q^n - 1
/// nonzero vectors.
inline std::vector<Vector> instance_vectors(const Space& space, const Instance& inst) {
    if (!inst.full) return inst.T;
    std::vector<Vector> out;
    out.reserve(space.size() - 1);
    for (point_t code = 1; code < space.size(); ++code) out.push_back(space.decode(code));
    return out;
}

/// Point-set file: one point code per line, ascending. Blank lines and
/// '#'-prefixed comments are skipped on input, never written.
inline std::vector<point_t> read_point_file(std::istream& in) {
    std::vector<point_t> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::uint64_t value = 0;
        try {
            std::size_t pos = 0;
            value = std::stoull(line, &pos);
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\r')) ++pos;
            if (pos != line.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("point-set file line " + std::to_string(lineno) + " is not a point code: " + line);
        }
        if (!out.empty() && value <= out.back())
            throw ParseError("point-set file is not sorted ascending at line " + std::to_string(lineno));
        if (value > std::uint64_t(kMaxSpaceSize))
            throw ParseError("point code " + std::to_string(value) + " out of range at line " + std::to_string(lineno));
        out.push_back(static_cast<point_t>(value));
    }
    return out;
}

inline std::vector<point_t> load_point_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open point-set file: " + path);
    return read_point_file(in);
}

inline void write_point_file(std::ostream& out, const PointSet& set) {
    for (point_t p : set.to_sorted_codes()) out << p << '\n';
}

}  // namespace kakeya
