#pragma once

// Concave-round recognition through the circular-ones property of the
// augmented adjacency matrix, the certified NO pipeline (the forbidden-
// submatrix finder, the co-C_2k / odd-cycle dichotomy, deletion-minimization,
// and the full certificate pipeline with a pluggable proper-circular-arc hook).

#include <functional>
#include <set>

#include "circone/catalog.hpp"
#include "circone/circ_rc.hpp"
#include "circone/graph.hpp"

namespace circone {

inline bool neighborhoods_circular(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n()) return false;
    BinaryMatrix m = augmented_adjacency(g);
    return ones_circular_under(m, order);
}

// YES: a circular vertex enumeration with every closed neighborhood an interval.
inline std::optional<std::vector<int>> is_concave_round(const Graph& g) {
    if (g.n() == 0) return std::vector<int>{};
    auto order = circ1p_test(augmented_adjacency(g));
    if (!order) return std::nullopt;
    if (!neighborhoods_circular(g, *order)) throw Error("is_concave_round: invalid witness produced");
    return order;
}

inline bool concave_round_masked(const Graph& g, const std::vector<char>& alive) {
    std::vector<int> verts;
    for (int v = 1; v <= g.n(); ++v)
        if (alive[static_cast<size_t>(v)]) verts.push_back(v);
    Graph h = induced_subgraph(g, verts);
    return is_concave_round(h).has_value();
}

// Greedy vertex deletion (ascending label); the survivor set induces a
// vertex-minimal non-concave-round graph, hence a catalog member.
inline std::vector<int> minimal_forbidden_by_deletion(const Graph& g) {
    std::vector<char> alive(static_cast<size_t>(g.n()) + 1, 1);
    if (concave_round_masked(g, alive))
        throw PreconditionError("minimal_forbidden_by_deletion: graph is concave-round");
    for (int v = 1; v <= g.n(); ++v) {
        alive[static_cast<size_t>(v)] = 0;
        if (concave_round_masked(g, alive)) alive[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> out;
    for (int v = 1; v <= g.n(); ++v)
        if (alive[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

struct GraphCertificate {
    enum class Kind { CircularEnumeration, ForbiddenInduced, OddCycleComplement };
    Kind kind;
    std::vector<int> order;     // CircularEnumeration
    std::string name;           // ForbiddenInduced
    int param = 0;              // ForbiddenInduced, when the name is a family
    std::vector<int> vertices;  // ForbiddenInduced
    std::vector<int> cycle;     // OddCycleComplement
};

inline bool forbidden_catalog_name(const std::string& name, int param) {
    if (name == "net" || name == "tentStar" || name == "coH3" || name == "coBII1" ||
        name == "coBII2" || name == "coBIII1" || name == "coBIII2" || name == "coBIII3")
        return true;
    if (name == "CkStar") return param >= 4;
    if (name == "coC2k") return param >= 3;
    if (name == "coC2k1Star") return param >= 1;
    return false;
}

inline GraphCertificate forbidden_certificate(const Graph& g, const std::vector<int>& vertices) {
    auto id = identify_catalog(induced_subgraph(g, vertices));
    if (!id || !forbidden_catalog_name(id->name, id->k))
        throw CertificateError("minimal non-concave-round subgraph failed catalog identification");
    GraphCertificate cert;
    cert.kind = GraphCertificate::Kind::ForbiddenInduced;
    cert.name = id->name;
    cert.param = id->k;
    cert.vertices = vertices;
    return cert;
}

// From the forbidden-submatrix finder on M(G) to either a small minimal
// forbidden induced subgraph or a chordless odd cycle in the complement.
inline GraphCertificate forbidden_subgraph_or_odd_cycle(const Graph& g) {
    BinaryMatrix m = augmented_adjacency(g);
    if (circ1p_test(m)) throw PreconditionError("forbidden_subgraph_or_odd_cycle: graph is concave-round");
    ForbRowColCertificate d = find_forbrowcol_rows(m);
    int kp = d.embedding.row_map.size();
    int lp = d.embedding.col_map.size();
    auto xs = d.embedding.row_map.targets;
    auto ys = d.embedding.col_map.targets;  // last entry is z

    auto distinct = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };

    if (kp <= 6) {
        std::vector<int> s = xs;
        s.insert(s.end(), ys.begin(), ys.end());
        s = distinct(s);
        std::vector<int> inner = minimal_forbidden_by_deletion(induced_subgraph(g, s));
        std::vector<int> verts;
        for (int i : inner) verts.push_back(s[static_cast<size_t>(i) - 1]);
        return forbidden_certificate(g, verts);
    }

    // k' >= 7: the member is M_I*(k') or its complement
    std::vector<int> s;
    if (d.member.kind == RowColKind::MIStar) {
        s = {xs[0], xs[1], xs[3], ys[0], ys[2], ys[3]};
    } else if (d.member.kind == RowColKind::CoMIStar) {
        s = xs;
        for (int j = 0; j < lp - 1; ++j) s.push_back(ys[static_cast<size_t>(j)]);
    } else {
        throw Error("forbidden_subgraph_or_odd_cycle: unexpected member kind at k' >= 7");
    }
    s = distinct(s);
    std::vector<int> mapping;
    Graph gp = induced_subgraph(g, s, &mapping);
    Graph gpc = complement_graph(gp);
    if (is_bipartite(gpc)) return forbidden_certificate(g, s);  // a co-bipartite survivor here is co-C_2k'
    auto cyc = chordless_odd_cycle(gpc);
    if (!cyc) throw Error("forbidden_subgraph_or_odd_cycle: odd cycle expected");
    GraphCertificate cert;
    cert.kind = GraphCertificate::Kind::OddCycleComplement;
    for (int v : *cyc) cert.cycle.push_back(mapping[static_cast<size_t>(v) - 1]);
    return cert;
}

using PcaForbiddenHook = std::function<std::vector<int>(const Graph&)>;

GraphCertificate extract_forbidden_certificate(const Graph& g, const std::vector<int>& f,
                                             const std::vector<int>& c);  // extraction.hpp

// The full pipeline: forbidden_subgraph_or_odd_cycle, then (on the odd-cycle branch) a minimal
// proper-circular-arc obstruction from the hook; co-H2/co-H4 route through the
// constructive extraction. The default hook minimizes against the
// concave-round recognizer, which never produces co-H2/co-H4.
inline GraphCertificate find_forbidden_concave_round(const Graph& g, const PcaForbiddenHook& hook = {}) {
    GraphCertificate first = forbidden_subgraph_or_odd_cycle(g);
    if (first.kind == GraphCertificate::Kind::ForbiddenInduced) return first;
    std::vector<int> f = hook ? hook(g) : minimal_forbidden_by_deletion(g);
    auto id = identify_catalog(induced_subgraph(g, f));
    if (id && (id->name == "coH2" || id->name == "coH4"))
        return extract_forbidden_certificate(g, f, first.cycle);
    return forbidden_certificate(g, f);
}

inline bool verify_graph_certificate(const Graph& g, const GraphCertificate& cert) {
    switch (cert.kind) {
        case GraphCertificate::Kind::CircularEnumeration: {
            std::vector<int> sorted = cert.order;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < g.n(); ++i)
                if (sorted[static_cast<size_t>(i)] != i + 1) return false;
            return neighborhoods_circular(g, cert.order);
        }
        case GraphCertificate::Kind::ForbiddenInduced: {
            if (!forbidden_catalog_name(cert.name, cert.param)) return false;
            Graph want;
            try {
                want = catalog(cert.name, cert.param);
                Graph got = induced_subgraph(g, cert.vertices);
                return graphs_isomorphic(got, want);
            } catch (const Error&) {
                return false;
            }
        }
        case GraphCertificate::Kind::OddCycleComplement: {
            if (cert.cycle.size() < 3 || cert.cycle.size() % 2 == 0) return false;
            for (int v : cert.cycle)
                if (v < 1 || v > g.n()) return false;
            return is_chordless_cycle(complement_graph(g), cert.cycle);
        }
    }
    return false;
}

}  // namespace circone
