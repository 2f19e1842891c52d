#pragma once

// Instance file formats.
//   .smat  line 1: "k l nnz", then nnz lines "i j" (1-indexed, any order,
//          duplicates rejected)
//   .dmat  line 1: "k l", then k lines of l characters over {0,1}
//   graph  line 1: "p graph n m", then m lines "e u v" (1-indexed; loops and
//          duplicate edges rejected). Lines starting with 'c' are comments.
// Readers and writers round-trip bit-exactly.

#include <fstream>
#include <sstream>

#include "circone/core.hpp"
#include "circone/graph.hpp"

namespace circone {

inline BinaryMatrix read_smat(std::istream& in) {
    long long k, l, nnz;
    if (!(in >> k >> l >> nnz)) throw ParseError("smat: bad header");
    if (k < 0 || l < 0 || nnz < 0) throw ParseError("smat: negative header field");
    std::vector<std::vector<int>> rows(static_cast<size_t>(k));
    for (long long e = 0; e < nnz; ++e) {
        long long i, j;
        if (!(in >> i >> j)) throw ParseError("smat: truncated entry list");
        if (i < 1 || i > k || j < 1 || j > l) throw ParseError("smat: entry out of range");
        rows[static_cast<size_t>(i) - 1].push_back(static_cast<int>(j));
    }
    return BinaryMatrix::from_rows(static_cast<int>(k), static_cast<int>(l), std::move(rows));
}

inline void write_smat(std::ostream& out, const BinaryMatrix& m) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.ones() << '\n';
    for (int i = 1; i <= m.rows(); ++i)
        for (int j : m.row(i)) out << i << ' ' << j << '\n';
}

inline BinaryMatrix read_dmat(std::istream& in) {
    long long k, l;
    if (!(in >> k >> l)) throw ParseError("dmat: bad header");
    if (k < 0 || l < 0) throw ParseError("dmat: negative dimension");
    std::vector<std::string> rows;
    rows.reserve(static_cast<size_t>(k));
    std::string line;
    std::getline(in, line);
    for (long long i = 0; i < k; ++i) {
        if (!std::getline(in, line)) throw ParseError("dmat: missing row");
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (static_cast<long long>(line.size()) != l) throw ParseError("dmat: row length mismatch");
        rows.push_back(line);
    }
    if (k == 0) return BinaryMatrix(0, static_cast<int>(l));
    BinaryMatrix m = BinaryMatrix::from_dense(rows);
    if (m.cols() != l) throw ParseError("dmat: column count mismatch");
    return m;
}

inline void write_dmat(std::ostream& out, const BinaryMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (const auto& r : m.dense_rows()) out << r << '\n';
}

inline Graph read_graph(std::istream& in) {
    std::string line;
    long long n = -1, mcount = -1;
    Graph g;
    long long seen = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> mcount) || kind != "graph" || n < 0 || mcount < 0)
                throw ParseError("graph: bad problem line");
            g = Graph(static_cast<int>(n));
        } else if (tag == "e") {
            if (n < 0) throw ParseError("graph: edge before problem line");
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError("graph: bad edge line");
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError("graph: vertex out of range");
            if (u == v) throw ParseError("graph: loop rejected");
            if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
                throw ParseError("graph: duplicate edge rejected");
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
            ++seen;
        } else {
            throw ParseError("graph: unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError("graph: missing problem line");
    if (seen != mcount) throw ParseError("graph: edge count mismatch");
    g.finalize();
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p graph " << g.n() << ' ' << g.edge_count() << '\n';
    for (int u = 1; u <= g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << "e " << u << ' ' << v << '\n';
}

template <typename T, typename Reader>
T read_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return reader(in);
}

inline BinaryMatrix read_matrix_file(const std::string& path) {
    auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".smat") return read_file<BinaryMatrix>(path, [](std::istream& in) { return read_smat(in); });
    if (ext == ".dmat") return read_file<BinaryMatrix>(path, [](std::istream& in) { return read_dmat(in); });
    throw ParseError("unknown matrix extension (want .smat or .dmat): " + path);
}

inline Graph read_graph_file(const std::string& path) {
    return read_file<Graph>(path, [](std::istream& in) { return read_graph(in); });
}

}  // namespace circone
