#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "reconstruction.hpp"

// Text and JSON serialization shared by the command-line tool and its
// fixtures.  Every parser throws ParseError on malformed input (unreadable
// files included), and every emitted graph re-parses to an equal graph.

namespace cbg {

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace detail {

// Arbitrary cap on parsed matrix sizes; everything downstream is dense and
// at desk scale, so anything larger is garbage input, not work.
constexpr long long kMaxParsedEntries = 1 << 20;

inline PrimeField field_from_modulus(long long p, const char* what) {
    if (p < 2 || p > 0x7fffffffLL || !PrimeField::is_prime(static_cast<std::uint32_t>(p)))
        throw ParseError(std::string(what) + ": modulus " + std::to_string(p) +
                         " is not a prime in [2, 2^31-1]");
    return PrimeField(static_cast<std::uint32_t>(p));
}

// Shared shape of the edge-list and edge-ideal text formats: a vertex count
// on the first line, then one "i j" pair per line.  Blank lines are skipped.
inline std::pair<int, std::vector<SimpleGraph::Edge>> parse_count_and_pairs(
    const std::string& text, const char* what) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_n = false;
    long long n = 0;
    std::vector<SimpleGraph::Edge> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (!have_n) {
            std::string extra;
            if (!(ls >> n) || (ls >> extra))
                throw ParseError(std::string(what) + " line " + std::to_string(lineno) +
                                 ": expected a single vertex count");
            if (n < 0 || n > kMaxParsedEntries)
                throw ParseError(std::string(what) + ": vertex count " + std::to_string(n) +
                                 " out of range");
            have_n = true;
            continue;
        }
        long long i = 0, j = 0;
        std::string extra;
        if (!(ls >> i)) continue;  // blank line
        if (!(ls >> j) || (ls >> extra))
            throw ParseError(std::string(what) + " line " + std::to_string(lineno) +
                             ": expected two vertex numbers");
        if (i < 1 || i > n || j < 1 || j > n)
            throw ParseError(std::string(what) + " line " + std::to_string(lineno) + ": vertex " +
                             std::to_string(i < 1 || i > n ? i : j) + " outside 1.." +
                             std::to_string(n));
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    if (!have_n) throw ParseError(std::string(what) + ": missing vertex count line");
    return {static_cast<int>(n), std::move(pairs)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Matrix text: first line "n_rows n_cols p", then rows of space-separated
// integers (any integers; they are reduced mod p).

inline PrimeFieldMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    long long rows = 0, cols = 0, p = 0;
    if (!(in >> rows >> cols >> p))
        throw ParseError("matrix text: first line must be \"n_rows n_cols p\"");
    if (rows < 0 || cols < 0 || rows * cols > detail::kMaxParsedEntries)
        throw ParseError("matrix text: dimensions " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " out of range");
    PrimeField field = detail::field_from_modulus(p, "matrix text");
    PrimeFieldMatrix m(static_cast<int>(rows), static_cast<int>(cols), field);
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) {
            long long v = 0;
            if (!(in >> v))
                throw ParseError("matrix text: expected " + std::to_string(rows * cols) +
                                 " entries, ran out at row " + std::to_string(i) + ", column " +
                                 std::to_string(j));
            m.set(i, j, v);
        }
    std::string extra;
    if (in >> extra) throw ParseError("matrix text: unexpected trailing token \"" + extra + "\"");
    return m;
}

inline std::string format_matrix_text(const PrimeFieldMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << ' ' << m.field().modulus() << '\n';
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            if (j > 1) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Graph JSON: {"n": int, "edges": [[i,j], ...]}, vertices 1-based, edges
// emitted normalized with i < j and sorted.

inline nlohmann::json graph_to_json(const SimpleGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back(nlohmann::json::array({i, j}));
    return nlohmann::json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline SimpleGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON: expected an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0 ||
        j["n"].get<long long>() > detail::kMaxParsedEntries)
        throw ParseError("graph JSON: \"n\" must be a nonnegative integer");
    if (!j["edges"].is_array()) throw ParseError("graph JSON: \"edges\" must be an array");
    SimpleGraph g(static_cast<int>(j["n"].get<long long>()));
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("graph JSON: each edge must be a pair of integers");
        long long a = e[0].get<long long>(), b = e[1].get<long long>();
        if (a < 1 || a > g.vertex_count() || b < 1 || b > g.vertex_count())
            throw ParseError("graph JSON: edge [" + std::to_string(a) + "," + std::to_string(b) +
                             "] outside 1.." + std::to_string(g.vertex_count()));
        try {
            g.add_edge(static_cast<int>(a), static_cast<int>(b));
        } catch (const std::invalid_argument& err) {
            throw ParseError(std::string("graph JSON: ") + err.what());
        }
    }
    return g;
}

inline SimpleGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
}

inline std::string format_graph_json(const SimpleGraph& g) { return graph_to_json(g).dump() + "\n"; }

// ---------------------------------------------------------------------------
// Edge-list text: first line n, then one "i j" per line.

inline SimpleGraph parse_graph_edgelist(const std::string& text) {
    auto [n, pairs] = detail::parse_count_and_pairs(text, "edge list");
    try {
        return SimpleGraph(n, std::move(pairs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

inline std::string format_graph_edgelist(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

// Reads a graph file in either supported format, deciding by the first
// non-whitespace byte: '{' means JSON, anything else the edge-list text.
inline SimpleGraph parse_graph_file(const std::string& path) {
    std::string text = read_text_file(path);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return parse_graph_json(text);
    return parse_graph_edgelist(text);
}

// ---------------------------------------------------------------------------
// DOT output (undirected).

inline std::string format_graph_dot(const SimpleGraph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [i, j] : g.edges()) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Edge-ideal text: same shape as the edge list; the pairs are the quadratic
// generators x_i x_j.

inline EdgeIdeal parse_edge_ideal_text(const std::string& text) {
    auto [n, pairs] = detail::parse_count_and_pairs(text, "edge ideal");
    try {
        return EdgeIdeal(n, std::move(pairs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge ideal: ") + e.what());
    }
}

inline std::string format_edge_ideal_text(const EdgeIdeal& ideal) {
    std::ostringstream out;
    out << ideal.n << '\n';
    for (const auto& [i, j] : ideal.generators) out << i << ' ' << j << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Pairing JSON: {"n": ..., "m": ..., "p": ..., "pairs": [{"r": ..., "s": ...,
// "value": [...]}]}.  Pairs not listed are zero; r > s is accepted and folded
// in antisymmetrically; listing the same unordered pair twice is an error.

inline PairingTensor pairing_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("p") ||
        !j.contains("pairs"))
        throw ParseError("pairing JSON: expected an object with \"n\", \"m\", \"p\", \"pairs\"");
    for (const char* key : {"n", "m", "p"})
        if (!j[key].is_number_integer() || j[key].get<long long>() < 0)
            throw ParseError(std::string("pairing JSON: \"") + key +
                             "\" must be a nonnegative integer");
    long long n = j["n"].get<long long>(), m = j["m"].get<long long>();
    if (n > 1000 || m > detail::kMaxParsedEntries)
        throw ParseError("pairing JSON: dimensions out of range");
    PrimeField field = detail::field_from_modulus(j["p"].get<long long>(), "pairing JSON");
    if (!j["pairs"].is_array()) throw ParseError("pairing JSON: \"pairs\" must be an array");

    std::size_t pair_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::vector<std::uint32_t>> values(
        pair_count, std::vector<std::uint32_t>(static_cast<std::size_t>(m), 0));
    std::vector<char> seen(pair_count, 0);
    auto lex_index = [n](int r, int s) {
        return static_cast<std::size_t>(r - 1) * n - static_cast<std::size_t>(r) * (r - 1) / 2 +
               (s - r - 1);
    };
    for (const auto& entry : j["pairs"]) {
        if (!entry.is_object() || !entry.contains("r") || !entry.contains("s") ||
            !entry.contains("value") || !entry["r"].is_number_integer() ||
            !entry["s"].is_number_integer() || !entry["value"].is_array())
            throw ParseError("pairing JSON: each pair needs integer \"r\", \"s\" and a \"value\" array");
        long long r = entry["r"].get<long long>(), s = entry["s"].get<long long>();
        if (r < 1 || r > n || s < 1 || s > n || r == s)
            throw ParseError("pairing JSON: pair (" + std::to_string(r) + "," + std::to_string(s) +
                             ") is not a pair of distinct indices in 1.." + std::to_string(n));
        if (static_cast<long long>(entry["value"].size()) != m)
            throw ParseError("pairing JSON: value of pair (" + std::to_string(r) + "," +
                             std::to_string(s) + ") must have length " + std::to_string(m));
        bool flip = r > s;
        if (flip) std::swap(r, s);
        std::size_t idx = lex_index(static_cast<int>(r), static_cast<int>(s));
        if (seen[idx])
            throw ParseError("pairing JSON: pair (" + std::to_string(r) + "," + std::to_string(s) +
                             ") listed twice");
        seen[idx] = 1;
        for (long long k = 0; k < m; ++k) {
            const auto& x = entry["value"][static_cast<std::size_t>(k)];
            if (!x.is_number_integer())
                throw ParseError("pairing JSON: value entries must be integers");
            std::uint32_t v = field.reduce(x.get<std::int64_t>());
            values[idx][static_cast<std::size_t>(k)] = flip ? field.neg(v) : v;
        }
    }
    return PairingTensor(static_cast<int>(n), static_cast<int>(m), field, std::move(values));
}

inline PairingTensor parse_pairing_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("pairing JSON: ") + e.what());
    }
    return pairing_from_json(j);
}

// Emits the nonzero pairs only, in lexicographic (r, s) order.
inline nlohmann::json pairing_to_json(const PairingTensor& t) {
    nlohmann::json pairs = nlohmann::json::array();
    for (int r = 1; r <= t.h1_dimension(); ++r)
        for (int s = r + 1; s <= t.h1_dimension(); ++s) {
            if (!t.is_nonzero(r, s)) continue;
            pairs.push_back(nlohmann::json{{"r", r}, {"s", s}, {"value", t.value(r, s)}});
        }
    return nlohmann::json{{"n", t.h1_dimension()},
                          {"m", t.h2_dimension()},
                          {"p", t.field().modulus()},
                          {"pairs", std::move(pairs)}};
}

// ---------------------------------------------------------------------------
// Matrices inside JSON reports.

inline nlohmann::json matrix_to_json(const PrimeFieldMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"n_rows", m.rows()},
                          {"n_cols", m.cols()},
                          {"p", m.field().modulus()},
                          {"rows", std::move(rows)}};
}

}  // namespace cbg
