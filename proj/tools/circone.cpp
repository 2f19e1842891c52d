// circone: certifying recognition of consecutive/circular-ones matrices and
// concave-round graphs. Each command prints one JSON object per input file.
// Exit codes: 0 property holds / certificate valid, 1 property fails /
// certificate emitted, 2 usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "circone/circone.hpp"
#include "circone/io.hpp"

namespace {

using circone::json;

struct Outcome {
    json out;
    int code = 0;
};

Outcome run_matrix_verb(const std::string& verb, const std::string& path) {
    circone::BinaryMatrix m = circone::read_matrix_file(path);
    if (verb == "c1p") {
        if (auto order = circone::c1p_test(m)) return {circone::c1p_yes_json(*order), 0};
        return {circone::c1p_no_json(circone::find_tucker_submatrix(m)), 1};
    }
    if (verb == "circ1") {
        if (auto order = circone::circ1p_test(m)) return {circone::circ1_yes_json(*order), 0};
        return {circone::circ1_no_json(circone::find_forbrow(m)), 1};
    }
    // circ1rc
    auto rc = circone::circ_rc_test(m);
    if (rc.ok) return {circone::circ1rc_yes_json(rc), 0};
    return {circone::circ1rc_no_json(circone::find_forbrowcol(m)), 1};
}

Outcome run_graph_verb(const std::string& verb, const std::string& path) {
    circone::Graph g = circone::read_graph_file(path);
    auto order = circone::is_concave_round(g);
    if (order) return {circone::graph_yes_json(*order), 0};
    if (verb == "recognize")
        return {json{{"property", "concave-round"}, {"verdict", "no"}}, 1};
    return {circone::graph_no_json(circone::find_forbidden_concave_round(g)), 1};
}

int run_files(const std::vector<std::string>& files, int jobs, bool pretty,
              const std::function<Outcome(const std::string&)>& fn) {
    std::vector<Outcome> results(files.size());
    std::vector<std::string> errors(files.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= files.size()) return;
            try {
                results[i] = fn(files[i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    int code = 0;
    for (size_t i = 0; i < files.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << files[i] << ": " << errors[i] << "\n";
            code = 2;
            continue;
        }
        json out = results[i].out;
        if (files.size() > 1) {
            json withfile;
            withfile["file"] = files[i];
            withfile.update(out);
            out = std::move(withfile);
        }
        std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
        code = std::max(code, results[i].code);
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifying recognition for consecutive/circular-ones matrices and concave-round graphs"};
    app.require_subcommand(1);
    bool pretty = false;
    int jobs = 1;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_option("--jobs", jobs, "parallelize over input files")->check(CLI::PositiveNumber);

    std::vector<std::string> files;
    std::string name;
    int param = 0;
    int enum_k = 0;
    std::string cert_path, instance_path;

    auto* c1p = app.add_subcommand("c1p", "consecutive-ones property for rows");
    auto* c1p_test_cmd = c1p->add_subcommand("test", "test and emit a witness or Tucker submatrix");
    c1p_test_cmd->add_option("files", files, "matrix files (.smat/.dmat)")->required();

    auto* circ1 = app.add_subcommand("circ1", "circular-ones property for rows");
    auto* circ1_certify = circ1->add_subcommand("certify", "certify with a circular order or ForbRow member");
    circ1_certify->add_option("files", files, "matrix files (.smat/.dmat)")->required();

    auto* circ1rc = app.add_subcommand("circ1rc", "circular-ones property for rows and columns");
    auto* circ1rc_certify = circ1rc->add_subcommand("certify", "certify with orders or a ForbRowCol member");
    circ1rc_certify->add_option("files", files, "matrix files (.smat/.dmat)")->required();

    auto* graph = app.add_subcommand("graph", "concave-round recognition");
    auto* graph_recognize = graph->add_subcommand("recognize", "test and emit a circular enumeration");
    graph_recognize->add_option("files", files, "graph files")->required();
    auto* graph_certify = graph->add_subcommand("certify", "certify with an enumeration or forbidden subgraph");
    graph_certify->add_option("files", files, "graph files")->required();

    auto* cat = app.add_subcommand("catalog", "named small graphs");
    auto* cat_emit = cat->add_subcommand("emit", "print a catalog graph in graph format");
    cat_emit->add_option("name", name, "catalog entry name")->required();
    cat_emit->add_option("k", param, "family parameter");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate forbidden families");
    auto* enum_forbrow = enumerate->add_subcommand("forbrow", "ForbRow members with k rows");
    enum_forbrow->add_option("k", enum_k, "row count")->required();

    auto* verify = app.add_subcommand("verify", "re-check a certificate against an instance");
    verify->add_option("cert", cert_path, "certificate JSON file")->required();
    verify->add_option("instance", instance_path, "matrix or graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c1p_test_cmd->parsed())
            return run_files(files, jobs, pretty, [](const std::string& p) { return run_matrix_verb("c1p", p); });
        if (circ1_certify->parsed())
            return run_files(files, jobs, pretty, [](const std::string& p) { return run_matrix_verb("circ1", p); });
        if (circ1rc_certify->parsed())
            return run_files(files, jobs, pretty, [](const std::string& p) { return run_matrix_verb("circ1rc", p); });
        if (graph_recognize->parsed())
            return run_files(files, jobs, pretty, [](const std::string& p) { return run_graph_verb("recognize", p); });
        if (graph_certify->parsed())
            return run_files(files, jobs, pretty, [](const std::string& p) { return run_graph_verb("certify", p); });
        if (cat_emit->parsed()) {
            circone::write_graph(std::cout, circone::catalog(name, param));
            return 0;
        }
        if (enum_forbrow->parsed()) {
            auto members = circone::forbrow_enumerate(enum_k);
            json out;
            out["property"] = "forbrow";
            out["k"] = enum_k;
            out["count"] = members.size();
            json arr = json::array();
            for (const auto& m : members) {
                json jm;
                jm["kind"] = circone::forbrow_kind_name(m.kind);
                if (m.kind == circone::ForbRowKind::MIStar) {
                    jm["k"] = m.k;
                    jm["mask"] = m.mask;
                }
                arr.push_back(jm);
            }
            out["members"] = arr;
            std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
            return 0;
        }
        if (verify->parsed()) {
            std::ifstream in(cert_path);
            if (!in) throw circone::ParseError("cannot open " + cert_path);
            json cert = json::parse(in);
            std::string prop = cert.at("property").get<std::string>();
            bool ok;
            if (prop == "concave-round") {
                circone::Graph g = circone::read_graph_file(instance_path);
                ok = circone::verify_certificate(cert, nullptr, &g);
            } else {
                circone::BinaryMatrix m = circone::read_matrix_file(instance_path);
                ok = circone::verify_certificate(cert, &m, nullptr);
            }
            json out{{"verify", ok ? "ok" : "failed"}};
            std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
            return ok ? 0 : 1;
        }
        std::cerr << "missing sub-command\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
