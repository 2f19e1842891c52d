#pragma once

// JSON certificate schemas shared by the CLI and the verifier.
//
//   c1p             yes: column_order          no: Tucker family + maps
//   circ1-rows      yes: circular_col_order    no: ForbRow member + maps + c
//   circ1-rows-cols yes: both circular orders  no: ForbRowCol member + maps
//   concave-round   yes: circular_order        no: forbidden-induced | odd-cycle-complement

#include <json.hpp>

#include "circone/circ_rc.hpp"
#include "circone/concave_round.hpp"

namespace circone {

using json = nlohmann::ordered_json;

inline ForbRowKind forbrow_kind_from(const std::string& s) {
    if (s == "MI*") return ForbRowKind::MIStar;
    if (s == "MIV") return ForbRowKind::MIV;
    if (s == "coMIV") return ForbRowKind::CoMIV;
    if (s == "MV*") return ForbRowKind::MVStar;
    if (s == "coMV*") return ForbRowKind::CoMVStar;
    throw ParseError("unknown ForbRow member kind: " + s);
}

inline RowColKind rowcol_kind_from(const std::string& s) {
    if (s == "MI*") return RowColKind::MIStar;
    if (s == "coMI*") return RowColKind::CoMIStar;
    if (s == "masked") return RowColKind::Masked;
    if (s == "MV*") return RowColKind::MVStar;
    if (s == "coMV*") return RowColKind::CoMVStar;
    if (s == "MI*3T") return RowColKind::MIStar3T;
    if (s == "coMI*3T") return RowColKind::CoMIStar3T;
    throw ParseError("unknown ForbRowCol member kind: " + s);
}

inline json c1p_yes_json(const std::vector<int>& order) {
    return json{{"property", "c1p"}, {"verdict", "yes"}, {"column_order", order}};
}

inline json c1p_no_json(const TuckerWitness& w) {
    json j;
    j["property"] = "c1p";
    j["verdict"] = "no";
    j["family"] = family_name(w.family);
    j["k"] = w.k;
    j["row_map"] = w.embedding.row_map.targets;
    j["col_map"] = w.embedding.col_map.targets;
    return j;
}

inline json circ1_yes_json(const std::vector<int>& order) {
    return json{{"property", "circ1-rows"}, {"verdict", "yes"}, {"circular_col_order", order}};
}

inline json circ1_no_json(const ForbRowCertificate& cert) {
    json member;
    member["kind"] = forbrow_kind_name(cert.member.kind);
    if (cert.member.kind == ForbRowKind::MIStar) {
        member["k"] = cert.member.k;
        member["mask"] = cert.member.mask;
    }
    json j;
    j["property"] = "circ1-rows";
    j["verdict"] = "no";
    j["member"] = member;
    j["row_map"] = cert.embedding.row_map.targets;
    j["col_map"] = cert.embedding.col_map.targets;
    j["c"] = cert.c;
    return j;
}

inline json circ1rc_yes_json(const CircRcResult& r) {
    return json{{"property", "circ1-rows-cols"},
                {"verdict", "yes"},
                {"circular_row_order", r.circular_row_order},
                {"circular_col_order", r.circular_col_order}};
}

inline json circ1rc_no_json(const ForbRowColCertificate& cert) {
    json member;
    member["kind"] = rowcol_kind_name(cert.member.kind);
    if (cert.member.kind == RowColKind::MIStar || cert.member.kind == RowColKind::CoMIStar)
        member["k"] = cert.member.k;
    if (cert.member.kind == RowColKind::Masked) member["mask"] = cert.member.mask;
    json j;
    j["property"] = "circ1-rows-cols";
    j["verdict"] = "no";
    j["member"] = member;
    j["transposed"] = cert.member.transposed;
    j["row_map"] = cert.embedding.row_map.targets;
    j["col_map"] = cert.embedding.col_map.targets;
    return j;
}

inline json graph_yes_json(const std::vector<int>& order) {
    return json{{"property", "concave-round"}, {"verdict", "yes"}, {"circular_order", order}};
}

inline json graph_no_json(const GraphCertificate& cert) {
    json j;
    j["property"] = "concave-round";
    j["verdict"] = "no";
    if (cert.kind == GraphCertificate::Kind::ForbiddenInduced) {
        j["kind"] = "forbidden-induced";
        j["name"] = cert.name;
        json params = json::object();
        if (cert.name == "CkStar" || cert.name == "coC2k" || cert.name == "coC2k1Star" ||
            cert.name == "Ck" || cert.name == "wheel")
            params["k"] = cert.param;
        j["params"] = params;
        j["vertices"] = cert.vertices;
    } else {
        j["kind"] = "odd-cycle-complement";
        j["cycle"] = cert.cycle;
    }
    return j;
}

inline IndexMap map_from_json(const json& j) {
    std::vector<int> t;
    for (const auto& v : j) t.push_back(v.get<int>());
    return IndexMap(std::move(t));
}

// Re-checks any certificate JSON against a loaded instance. The instance is
// a matrix for the matrix properties, a graph for concave-round.
inline bool verify_certificate(const json& j, const BinaryMatrix* matrix, const Graph* graph) {
    try {
        std::string prop = j.at("property").get<std::string>();
        std::string verdict = j.at("verdict").get<std::string>();
        if (verdict != "yes" && verdict != "no") return false;
        if (prop == "c1p" || prop == "circ1-rows" || prop == "circ1-rows-cols") {
            if (!matrix) return false;
            const BinaryMatrix& m = *matrix;
            if (prop == "c1p") {
                if (verdict == "yes") {
                    auto order = j.at("column_order").get<std::vector<int>>();
                    std::vector<int> sorted = order;
                    std::sort(sorted.begin(), sorted.end());
                    for (int i = 0; i < m.cols(); ++i)
                        if (sorted[static_cast<size_t>(i)] != i + 1) return false;
                    return ones_consecutive_under(m, order);
                }
                TuckerWitness w;
                std::string fam = j.at("family").get<std::string>();
                if (fam == "MI") w.family = TuckerFamily::MI;
                else if (fam == "MII") w.family = TuckerFamily::MII;
                else if (fam == "MIII") w.family = TuckerFamily::MIII;
                else if (fam == "MIV") w.family = TuckerFamily::MIV;
                else if (fam == "MV") w.family = TuckerFamily::MV;
                else return false;
                w.k = j.at("k").get<int>();
                w.embedding = {map_from_json(j.at("row_map")), map_from_json(j.at("col_map"))};
                return submatrix(m, w.embedding) == tucker_matrix(w.family, w.k);
            }
            if (prop == "circ1-rows") {
                if (verdict == "yes") {
                    auto order = j.at("circular_col_order").get<std::vector<int>>();
                    std::vector<int> sorted = order;
                    std::sort(sorted.begin(), sorted.end());
                    for (int i = 0; i < m.cols(); ++i)
                        if (sorted[static_cast<size_t>(i)] != i + 1) return false;
                    return ones_circular_under(m, order);
                }
                ForbRowCertificate cert;
                const json& member = j.at("member");
                cert.member.kind = forbrow_kind_from(member.at("kind").get<std::string>());
                if (cert.member.kind == ForbRowKind::MIStar) {
                    cert.member.k = member.at("k").get<int>();
                    cert.member.mask = member.at("mask").get<std::string>();
                }
                cert.embedding = {map_from_json(j.at("row_map")), map_from_json(j.at("col_map"))};
                cert.c = j.at("c").get<std::string>();
                return verify_forbrow(m, cert);
            }
            // circ1-rows-cols
            if (verdict == "yes") {
                auto col_order = j.at("circular_col_order").get<std::vector<int>>();
                auto row_order = j.at("circular_row_order").get<std::vector<int>>();
                return ones_circular_under(m, col_order) && ones_circular_under(transpose(m), row_order);
            }
            ForbRowColCertificate cert;
            const json& member = j.at("member");
            cert.member.kind = rowcol_kind_from(member.at("kind").get<std::string>());
            if (cert.member.kind == RowColKind::MIStar || cert.member.kind == RowColKind::CoMIStar)
                cert.member.k = member.at("k").get<int>();
            if (cert.member.kind == RowColKind::Masked) cert.member.mask = member.at("mask").get<std::string>();
            cert.member.transposed = j.at("transposed").get<bool>();
            cert.embedding = {map_from_json(j.at("row_map")), map_from_json(j.at("col_map"))};
            return verify_forbrowcol(m, cert);
        }
        if (prop == "concave-round") {
            if (!graph) return false;
            const Graph& g = *graph;
            GraphCertificate cert;
            if (verdict == "yes") {
                cert.kind = GraphCertificate::Kind::CircularEnumeration;
                cert.order = j.at("circular_order").get<std::vector<int>>();
            } else {
                std::string kind = j.at("kind").get<std::string>();
                if (kind == "forbidden-induced") {
                    cert.kind = GraphCertificate::Kind::ForbiddenInduced;
                    cert.name = j.at("name").get<std::string>();
                    if (j.at("params").contains("k")) cert.param = j.at("params").at("k").get<int>();
                    cert.vertices = j.at("vertices").get<std::vector<int>>();
                } else if (kind == "odd-cycle-complement") {
                    cert.kind = GraphCertificate::Kind::OddCycleComplement;
                    cert.cycle = j.at("cycle").get<std::vector<int>>();
                } else {
                    return false;
                }
            }
            return verify_graph_certificate(g, cert);
        }
        return false;
    } catch (const json::exception&) {
        return false;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace circone
