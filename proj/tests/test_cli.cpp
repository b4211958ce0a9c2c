#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(COMMLIE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("verify exits 0 on a passing section and output is stable") {
    auto a = run("verify-paper --section 4.2 --m 3 --format json");
    auto b = run("verify-paper --section 4.2 --m 3 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out); // byte-identical across runs

    auto parsed = nlohmann::ordered_json::parse(a.out);
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 6);
    // round-trip: parse -> dump -> parse gives the same document
    CHECK(nlohmann::ordered_json::parse(parsed.dump(2)) == parsed);
    bool found = false;
    for (const auto& r : parsed)
        if (r["check_id"] == "4.2/tspace-dim/m=3") {
            found = true;
            CHECK(r["computed"] == 12);
            CHECK(r["paper_value"] == 12);
            CHECK(r["provenance"] == "PAPER");
            CHECK(r["pass"] == true);
        }
    CHECK(found);
}

TEST_CASE("text and csv formats") {
    auto t = run("verify-paper --section app2");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("[PASS] app2/g2-table-cells  computed=144 expected=144 (PAPER)") !=
          std::string::npos);

    auto c = run("verify-paper --section app2 --format csv");
    CHECK(c.out.find("check_id,paper_value,computed,provenance,pass") != std::string::npos);
    CHECK(c.out.find("app2/g2-table-cells,144,144,PAPER,1") != std::string::npos);
}

TEST_CASE("subcommand outputs") {
    CHECK(run("tspace --algebra sl4 --point sl4-guralnick --m 4").out ==
          "tspace dim (m=4): 20\n");
    CHECK(run("tspace --algebra sp4 --point sp4-triple --m 6").out == "tspace dim (m=6): 21\n");
    CHECK(run("centralizer --algebra so20 --x so4s-x1").out == "centralizer dim: 70\n");
    CHECK(run("adding-diagonals --ambient E8 --sub E7 --m 3 --dim-cprime 147").out == "264\n");

    auto g = run("grading --algebra e7 --x e7-orbit-0200000 --h e7-h --format json");
    auto parsed = nlohmann::ordered_json::parse(g.out);
    CHECK(parsed["top_degree"] == 4);
}

TEST_CASE("dump surfaces") {
    auto roots = run("dump --dump-roots g2");
    auto parsed = nlohmann::ordered_json::parse(roots.out);
    CHECK(parsed["type"] == "G2");
    CHECK(parsed["roots"].size() == 12);

    auto point = run("dump --dump-point sl4-guralnick");
    auto tuple = nlohmann::ordered_json::parse(point.out);
    REQUIRE(tuple.size() == 4);
    REQUIRE(tuple[0].size() == 4);
    CHECK(tuple[0][0][2] == nlohmann::ordered_json::array({"1", "1"}));

    auto consts = run("dump --dump-constants g2");
    CHECK(consts.exit_code == 0);
    CHECK(consts.out.rfind("i,j,k,gamma\n", 0) == 0);
}

TEST_CASE("element file override") {
    // h over the A1 basis (x_a, x_-a, h): its centralizer is the Cartan line.
    std::string path = "/tmp/commlie_element_test.json";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("[\"0\", \"0\", \"1\"]", f);
        fclose(f);
    }
    auto r = run("centralizer --algebra a1 --element-file " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "centralizer dim: 1\n");
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("tspace --algebra sl4 --point no-such-label --m 4").exit_code == 2);
    CHECK(run("tspace --algebra sl4 --point sl4-guralnick --m 2").exit_code == 2);
    CHECK(run("verify-paper --format nope").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
}
