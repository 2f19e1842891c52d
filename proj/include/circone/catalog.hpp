#pragma once

// The named-graph catalog: loading of catalog.dat (env var CIRCONE_CATALOG
// overrides the compiled-in copy), constructors for every named entry and the
// parameterized families, small-graph isomorphism, and identify_catalog.

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "circone/graph.hpp"
#include "circone/catalog_data.inc"

namespace circone {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace detail {

inline std::string rstrip(std::string s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    return s;
}

inline std::map<std::string, Graph> parse_catalog(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("catalog: empty file");
    std::istringstream hdr(line);
    std::string tag, algo, hex;
    if (!(hdr >> tag >> algo >> hex) || tag != "checksum" || algo != "fnv1a64")
        throw ParseError("catalog: missing checksum header");
    std::string payload;
    std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    {
        std::istringstream body(rest);
        bool first = true;
        while (std::getline(body, line)) {
            if (!first) payload += '\n';
            payload += rstrip(line);
            first = false;
        }
    }
    char* end = nullptr;
    std::uint64_t want = std::strtoull(hex.c_str(), &end, 16);
    if (fnv1a64(payload) != want) throw ParseError("catalog: checksum mismatch");

    std::map<std::string, Graph> out;
    std::istringstream body(rest);
    std::string name;
    int n = 0, mexp = 0, mseen = 0;
    Graph g;
    auto flush = [&]() {
        if (name.empty()) return;
        if (mseen != mexp) throw ParseError("catalog: edge count mismatch in " + name);
        g.finalize();
        out.emplace(name, g);
        name.clear();
    };
    while (std::getline(body, line)) {
        line = rstrip(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string t;
        ls >> t;
        if (t == "graph") {
            flush();
            if (!(ls >> name >> n >> mexp)) throw ParseError("catalog: bad graph header");
            g = Graph(n);
            mseen = 0;
        } else if (t == "e") {
            int u, v;
            if (name.empty() || !(ls >> u >> v)) throw ParseError("catalog: bad edge line");
            g.add_edge(u, v);
            ++mseen;
        } else {
            throw ParseError("catalog: unknown line '" + line + "'");
        }
    }
    flush();
    for (const char* want_name : {"net", "tent", "H2", "H3", "H4", "BII1", "BII2", "BIII1", "BIII2", "BIII3"})
        if (!out.count(want_name)) throw ParseError(std::string("catalog: missing entry ") + want_name);
    return out;
}

}  // namespace detail

// Sporadic entries, loaded once. CIRCONE_CATALOG points at an alternative
// catalog.dat; otherwise the copy embedded at build time is used.
inline const std::map<std::string, Graph>& catalog_sporadics() {
    static const std::map<std::string, Graph> data = [] {
        if (const char* path = std::getenv("CIRCONE_CATALOG")) {
            std::ifstream in(path);
            if (!in) throw ParseError(std::string("cannot open CIRCONE_CATALOG=") + path);
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            return detail::parse_catalog(text);
        }
        return detail::parse_catalog(kCatalogDataDefault);
    }();
    return data;
}

inline Graph cycle_graph(int k) {
    if (k < 3) throw InvalidParameter("cycle needs k >= 3");
    Graph g(k);
    for (int i = 1; i <= k; ++i) g.add_edge(i, i % k + 1);
    g.finalize();
    return g;
}

// G*: G plus one isolated vertex (the new vertex gets the highest label).
inline Graph star_graph(const Graph& g) {
    Graph h(g.n() + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.finalize();
    return h;
}

inline Graph wheel_graph(int k) {
    if (k < 3) throw InvalidParameter("wheel needs k >= 3");
    Graph g(k + 1);
    for (int i = 1; i <= k; ++i) {
        g.add_edge(i, i % k + 1);
        g.add_edge(i, k + 1);
    }
    g.finalize();
    return g;
}

// Named catalog constructor. Parameterized names take k.
inline Graph catalog(const std::string& name, int k = 0) {
    const auto& spor = catalog_sporadics();
    auto it = spor.find(name);
    if (it != spor.end()) return it->second;
    if (name == "tentStar") return star_graph(spor.at("tent"));
    if (name.size() > 2 && name.compare(0, 2, "co") == 0) {
        return complement_graph(catalog(name.substr(2) == "C2k"      ? "Ck"
                                        : name.substr(2) == "C2k1Star" ? "CkStar"
                                                                       : name.substr(2),
                                        name.substr(2) == "C2k"        ? 2 * k
                                        : name.substr(2) == "C2k1Star" ? 2 * k + 1
                                                                       : k));
    }
    if (name == "Ck") return cycle_graph(k);
    if (name == "CkStar") {
        if (k < 3) throw InvalidParameter("CkStar needs k >= 3");
        return star_graph(cycle_graph(k));
    }
    if (name == "claw") return complement_graph(star_graph(cycle_graph(3)));
    if (name == "wheel") return wheel_graph(k);
    throw InvalidParameter("unknown catalog name: " + name);
}

// Backtracking isomorphism for the small graphs the catalog deals in.
inline bool graphs_isomorphic(const Graph& a, const Graph& b) {
    int n = a.n();
    if (n != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 1; v <= n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // order a's vertices: high degree first, preferring attachment to placed ones
    std::vector<int> order;
    std::vector<char> picked(static_cast<size_t>(n) + 1, 0);
    for (int step = 0; step < n; ++step) {
        int best = 0, best_key = -1;
        for (int v = 1; v <= n; ++v) {
            if (picked[static_cast<size_t>(v)]) continue;
            int attached = 0;
            for (int u : a.neighbors(v)) attached += picked[static_cast<size_t>(u)];
            int key = attached * (n + 1) + a.degree(v);
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        picked[static_cast<size_t>(best)] = 1;
        order.push_back(best);
    }
    std::vector<int> map_a(static_cast<size_t>(n) + 1, 0);
    std::vector<char> used_b(static_cast<size_t>(n) + 1, 0);
    std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int w = 1; w <= n; ++w) {
            if (used_b[static_cast<size_t>(w)] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (size_t j = 0; j < idx && ok; ++j)
                ok = a.adjacent(v, order[j]) == b.adjacent(w, map_a[static_cast<size_t>(order[j])]);
            if (!ok) continue;
            used_b[static_cast<size_t>(w)] = 1;
            map_a[static_cast<size_t>(v)] = w;
            if (rec(idx + 1)) return true;
            used_b[static_cast<size_t>(w)] = 0;
        }
        return false;
    };
    return rec(0);
}

// Finds host vertices (in pattern order) inducing `pattern` in `host`.
inline std::optional<std::vector<int>> find_induced_subgraph(const Graph& host, const Graph& pattern) {
    int np = pattern.n(), nh = host.n();
    if (np > nh) return std::nullopt;
    std::vector<int> order;
    {
        std::vector<char> picked(static_cast<size_t>(np) + 1, 0);
        for (int step = 0; step < np; ++step) {
            int best = 0, best_key = -1;
            for (int v = 1; v <= np; ++v) {
                if (picked[static_cast<size_t>(v)]) continue;
                int attached = 0;
                for (int u : pattern.neighbors(v)) attached += picked[static_cast<size_t>(u)];
                int key = attached * (np + 1) + pattern.degree(v);
                if (key > best_key) {
                    best_key = key;
                    best = v;
                }
            }
            picked[static_cast<size_t>(best)] = 1;
            order.push_back(best);
        }
    }
    std::vector<int> assign(static_cast<size_t>(np) + 1, 0);
    std::vector<char> used(static_cast<size_t>(nh) + 1, 0);
    std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int w = 1; w <= nh; ++w) {
            if (used[static_cast<size_t>(w)] || host.degree(w) < pattern.degree(v)) continue;
            bool ok = true;
            for (size_t j = 0; j < idx && ok; ++j)
                ok = pattern.adjacent(v, order[j]) == host.adjacent(w, assign[static_cast<size_t>(order[j])]);
            if (!ok) continue;
            used[static_cast<size_t>(w)] = 1;
            assign[static_cast<size_t>(v)] = w;
            if (rec(idx + 1)) return true;
            used[static_cast<size_t>(w)] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    std::vector<int> out;
    for (int v = 1; v <= np; ++v) out.push_back(assign[static_cast<size_t>(v)]);
    return out;
}

struct CatalogId {
    std::string name;
    int k = 0;  // parameter when the name is a family, else 0
};

// Names the unique catalog entry isomorphic to H, if any. The claw reports as
// coC2k1Star with k = 1 (the catalog's "claw" is an alias for it).
inline std::optional<CatalogId> identify_catalog(const Graph& h) {
    int n = h.n();
    if (n < 3) return std::nullopt;
    auto connected_2regular = [](const Graph& g) {
        for (int v = 1; v <= g.n(); ++v)
            if (g.degree(v) != 2) return false;
        // 2-regular and connected <=> one cycle through everything
        std::vector<char> seen(static_cast<size_t>(g.n()) + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++cnt;
            for (int v : g.neighbors(u))
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    stack.push_back(v);
                }
        }
        return cnt == g.n();
    };
    auto isolated_vertices = [](const Graph& g) {
        std::vector<int> out;
        for (int v = 1; v <= g.n(); ++v)
            if (g.degree(v) == 0) out.push_back(v);
        return out;
    };

    if (connected_2regular(h)) return CatalogId{"Ck", n};
    {
        auto iso = isolated_vertices(h);
        if (iso.size() == 1 && n >= 5) {
            std::vector<int> rest;
            for (int v = 1; v <= n; ++v)
                if (v != iso[0]) rest.push_back(v);
            Graph core = induced_subgraph(h, rest);
            if (connected_2regular(core) && n - 1 >= 4) return CatalogId{"CkStar", n - 1};
            if (n == 7 && graphs_isomorphic(core, catalog("tent"))) return CatalogId{"tentStar", 0};
        }
    }
    {
        Graph hc = complement_graph(h);
        if (n % 2 == 0 && n >= 6 && connected_2regular(hc)) return CatalogId{"coC2k", n / 2};
        auto iso = isolated_vertices(hc);
        if (iso.size() == 1 && n >= 4 && (n - 1) % 2 == 1) {
            std::vector<int> rest;
            for (int v = 1; v <= n; ++v)
                if (v != iso[0]) rest.push_back(v);
            if (connected_2regular(induced_subgraph(hc, rest))) return CatalogId{"coC2k1Star", (n - 2) / 2};
        }
    }
    // wheel: one universal vertex over a cycle
    for (int v = 1; v <= n && n >= 4; ++v) {
        if (h.degree(v) != n - 1) continue;
        std::vector<int> rest;
        for (int u = 1; u <= n; ++u)
            if (u != v) rest.push_back(u);
        if (connected_2regular(induced_subgraph(h, rest))) return CatalogId{"wheel", n - 1};
        break;
    }
    static const std::vector<std::string> sporadic_names = {
        "net", "tent", "H2", "H3", "H4", "coH2", "coH3", "coH4",
        "coBII1", "coBII2", "coBIII1", "coBIII2", "coBIII3"};
    for (const auto& name : sporadic_names) {
        Graph c = catalog(name);
        if (c.n() == n && c.edge_count() == h.edge_count() && graphs_isomorphic(h, c))
            return CatalogId{name, 0};
    }
    return std::nullopt;
}

}  // namespace circone
