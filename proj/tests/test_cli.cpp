#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "circone/certificates.hpp"
#include "circone/io.hpp"

using namespace circone;

namespace {

struct RunResult {
    int code;
    std::string out;
};

std::string tmp_path(const std::string& name) {
    return std::string("cli_tmp_") + name;
}

RunResult run_cli(const std::string& args) {
    std::string out_file = tmp_path("stdout.txt");
    std::string cmd = std::string(CIRCONE_CLI_PATH) + " " + args + " > " + out_file + " 2> " +
                      tmp_path("stderr.txt");
    int rc = std::system(cmd.c_str());
    int code = rc == -1 ? -1 : WEXITSTATUS(rc);
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {code, ss.str()};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("cli certifies and verifies matrices end to end") {
    auto mi3s = star_extend(tucker_matrix(TuckerFamily::MI, 3));
    {
        std::ofstream out(tmp_path("mi_star_3.dmat"));
        write_dmat(out, mi3s);
    }
    auto r = run_cli("circ1 certify " + tmp_path("mi_star_3.dmat"));
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["property"] == "circ1-rows");
    CHECK(j["verdict"] == "no");
    CHECK(j["member"]["kind"] == "MI*");
    CHECK(j["member"]["k"] == 3);
    CHECK(j["member"]["mask"] == "000");

    write_file(tmp_path("cert.json"), r.out);
    auto v = run_cli("verify " + tmp_path("cert.json") + " " + tmp_path("mi_star_3.dmat"));
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["verify"] == "ok");

    // a mutated certificate is rejected with exit 1
    json bad = j;
    bad["member"]["mask"] = "111";
    write_file(tmp_path("bad.json"), bad.dump());
    auto vb = run_cli("verify " + tmp_path("bad.json") + " " + tmp_path("mi_star_3.dmat"));
    CHECK(vb.code == 1);

    // deterministic output
    auto r2 = run_cli("circ1 certify " + tmp_path("mi_star_3.dmat"));
    CHECK(r2.out == r.out);
}

TEST_CASE("cli yes-paths exit 0") {
    auto mi3 = tucker_matrix(TuckerFamily::MI, 3);
    {
        std::ofstream out(tmp_path("mi3.smat"));
        write_smat(out, mi3);
    }
    auto r = run_cli("circ1 certify " + tmp_path("mi3.smat"));
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["verdict"] == "yes");

    auto rc = run_cli("circ1rc certify " + tmp_path("mi3.smat"));
    CHECK(rc.code == 0);
    write_file(tmp_path("rc_yes.json"), rc.out);
    CHECK(run_cli("verify " + tmp_path("rc_yes.json") + " " + tmp_path("mi3.smat")).code == 0);

    auto c1 = run_cli("c1p test " + tmp_path("mi3.smat"));
    CHECK(c1.code == 1);
    CHECK(json::parse(c1.out)["family"] == "MI");
    write_file(tmp_path("c1p_no.json"), c1.out);
    CHECK(run_cli("verify " + tmp_path("c1p_no.json") + " " + tmp_path("mi3.smat")).code == 0);

    // a rows-and-columns failure certificate also round-trips through verify
    auto mi4st = transpose(star_extend(tucker_matrix(TuckerFamily::MI, 4)));
    {
        std::ofstream out(tmp_path("mi4st.dmat"));
        write_dmat(out, mi4st);
    }
    auto rcno = run_cli("circ1rc certify " + tmp_path("mi4st.dmat"));
    CHECK(rcno.code == 1);
    CHECK(json::parse(rcno.out)["transposed"] == true);
    write_file(tmp_path("rc_no.json"), rcno.out);
    CHECK(run_cli("verify " + tmp_path("rc_no.json") + " " + tmp_path("mi4st.dmat")).code == 0);
}

TEST_CASE("cli graph commands") {
    {
        std::ofstream out(tmp_path("c5.graph"));
        write_graph(out, cycle_graph(5));
    }
    auto r = run_cli("graph recognize " + tmp_path("c5.graph"));
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["verdict"] == "yes");

    auto emit = run_cli("catalog emit coC2k 3");
    CHECK(emit.code == 0);
    write_file(tmp_path("coc6.graph"), emit.out);
    auto cert = run_cli("graph certify " + tmp_path("coc6.graph"));
    CHECK(cert.code == 1);
    json j = json::parse(cert.out);
    CHECK(j["kind"] == "forbidden-induced");
    CHECK(j["name"] == "coC2k");
    CHECK(j["params"]["k"] == 3);
    write_file(tmp_path("gcert.json"), cert.out);
    auto v = run_cli("verify " + tmp_path("gcert.json") + " " + tmp_path("coc6.graph"));
    CHECK(v.code == 0);
}

TEST_CASE("cli graph certify yes-path and pretty output") {
    {
        std::ofstream out(tmp_path("k4.graph"));
        write_graph(out, Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    }
    auto r = run_cli("graph certify " + tmp_path("k4.graph"));
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "yes");
    CHECK(j["circular_order"].size() == 4);
    write_file(tmp_path("yes.json"), r.out);
    CHECK(run_cli("verify " + tmp_path("yes.json") + " " + tmp_path("k4.graph")).code == 0);

    auto pretty = run_cli("--pretty graph certify " + tmp_path("k4.graph"));
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find('\n') != std::string::npos);
    CHECK(json::parse(pretty.out) == j);
}

TEST_CASE("cli enumerate forbrow") {
    auto r = run_cli("enumerate forbrow 4");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 10);
    CHECK(j["members"].size() == 10);

    auto r3 = run_cli("enumerate forbrow 3");
    CHECK(json::parse(r3.out)["count"] == 2);
}

TEST_CASE("cli error paths exit 2") {
    CHECK(run_cli("circ1 certify does_not_exist.dmat").code == 2);
    write_file(tmp_path("garbage.dmat"), "not a matrix\n");
    CHECK(run_cli("circ1 certify " + tmp_path("garbage.dmat")).code == 2);
    CHECK(run_cli("bogus subcommand").code == 2);
    CHECK(run_cli("catalog emit NoSuchGraph").code == 2);
}

TEST_CASE("cli multi-file runs with jobs") {
    auto mi3 = tucker_matrix(TuckerFamily::MI, 3);
    auto mi4s = star_extend(tucker_matrix(TuckerFamily::MI, 4));
    {
        std::ofstream a(tmp_path("a.dmat")), b(tmp_path("b.dmat"));
        write_dmat(a, mi3);
        write_dmat(b, mi4s);
    }
    auto r = run_cli("--jobs 2 circ1 certify " + tmp_path("a.dmat") + " " + tmp_path("b.dmat"));
    CHECK(r.code == 1);  // max of per-file codes
    std::istringstream lines(r.out);
    std::string l1, l2;
    REQUIRE(std::getline(lines, l1));
    REQUIRE(std::getline(lines, l2));
    CHECK(json::parse(l1)["file"] == tmp_path("a.dmat"));
    CHECK(json::parse(l1)["verdict"] == "yes");
    CHECK(json::parse(l2)["verdict"] == "no");
}

TEST_CASE("cli env catalog override") {
    // a catalog file with a bad checksum must be rejected
    write_file(tmp_path("badcat.dat"), "checksum fnv1a64 0123456789abcdef\ngraph net 1 0\n");
    std::string cmd = std::string("CIRCONE_CATALOG=") + tmp_path("badcat.dat") + " " + CIRCONE_CLI_PATH +
                      " catalog emit net > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    // pointing at the shipped file works
    std::string cmd2 = std::string("CIRCONE_CATALOG=") + CIRCONE_DATA_DIR + "/catalog.dat " +
                       CIRCONE_CLI_PATH + " catalog emit net > /dev/null 2>&1";
    int rc2 = std::system(cmd2.c_str());
    CHECK(WEXITSTATUS(rc2) == 0);
}
