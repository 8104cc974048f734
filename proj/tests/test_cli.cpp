#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::path(TRIREP_TEST_WORKDIR) / "cli";

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = "cd '" + kWork.string() + "' && " + env + " '" TRIREP_BINARY "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write(const std::string& name, const std::string& text) {
    std::ofstream(kWork / name) << text;
}

std::string slurp(const std::string& name) {
    std::ifstream in(kWork / name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json json_file(const std::string& name) { return nlohmann::json::parse(slurp(name)); }

struct Setup {
    Setup() {
        fs::remove_all(kWork);
        fs::create_directories(kWork);
        write("g2.code", "field gf:2\nlength 3\n1 1 0\n0 1 1\n");
        write("q.code", "field q\nlength 3\n1/2 1 0\n0 1 -3\n");
        write("g4.code", "field gf:4\nlength 2\n1 1\n");
        write("bad.code", "field gf:3\nlength 2\n1 1\n1 z\n");
        write("k3.graph", "vertices 3\nedge 0 1 1\nedge 1 2 1\nedge 0 2 1\n");
        write("b3.complex", "t a0 a1 a2\nt b0 b1 b2\nt c0 c1 c2\n");
    }
};
const Setup setup_once;

}  // namespace

TEST_CASE("represent writes complex, metadata and manifest") {
    const auto r = run("represent g2.code --out r");
    CHECK(r.code == 0);
    CHECK(fs::exists(kWork / "r.complex"));
    const auto meta = json_file("r.json");
    CHECK(meta["n"] == 3);
    CHECK(meta.contains("e"));
    CHECK(meta.contains("S"));
    CHECK(meta.contains("mu"));
    const auto m = json_file("r.manifest.json");
    CHECK(m["status"] == "PASS");
    CHECK(m["subcommand"] == "represent");
    CHECK(m["outputs"].size() == 2);
    CHECK(m["inputs"][0]["sha256"].get<std::string>().size() == 64);
}

TEST_CASE("represent is byte-deterministic") {
    REQUIRE(run("represent g2.code --out d1").code == 0);
    REQUIRE(run("represent g2.code --out d2").code == 0);
    CHECK(slurp("d1.complex") == slurp("d2.complex"));
    CHECK(slurp("d1.json") == slurp("d2.json"));
    auto m1 = json_file("d1.manifest.json"), m2 = json_file("d2.manifest.json");
    CHECK(m1["checks"] == m2["checks"]);
    CHECK(m1["outputs"][0]["sha256"] == m2["outputs"][0]["sha256"]);
}

TEST_CASE("rational input is integerized and noted") {
    CHECK(run("represent q.code --out rq").code == 0);
    const auto notes = json_file("rq.manifest.json")["notes"];
    REQUIRE(notes.size() >= 1);
    CHECK(notes[0].get<std::string>().find("rescaled") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run("represent g4.code --out x").code == 2);
    const auto r = run("verify bad.code --manifest bad.manifest.json");
    CHECK(r.code == 2);
    CHECK(json_file("bad.manifest.json")["error"]["message"].get<std::string>().find("line 4") != std::string::npos);
    CHECK(run("verify missing.code").code == 2);
    CHECK(run("potts k3.graph --q 3 --via sideways").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("budgets exit with 3 and honour the environment") {
    CHECK(run("represent g2.code --out bud --budget-triangles 10").code == 3);
    CHECK(json_file("bud.manifest.json")["status"] == "ERROR");
    CHECK(run("represent g2.code --out bud2", "TRIREP_BUDGET_TRIANGLES=10").code == 3);
    CHECK(run("represent g2.code --out bud3 --budget-triangles 100000", "TRIREP_BUDGET_TRIANGLES=10").code == 0);
    CHECK(run("verify g2.code --budget-codewords 2").code == 3);
}

TEST_CASE("verify passes on a binary toy code") {
    const auto r = run("verify g2.code --lambda 1,2,1");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS multivariate-recovery") != std::string::npos);
}

TEST_CASE("verify reports failures with exit 1") {
    write("g5.code", "field gf:5\nlength 4\n1 2 3 4\n0 1 1 2\n");
    const auto r = run("verify g5.code");
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL minimal-reflection") != std::string::npos);
}

TEST_CASE("kernel, wenum and recover") {
    CHECK(run("wenum b3.complex --field gf:2 --out w0.json").code == 0);
    CHECK(slurp("w0.json") == "{\"vars\":1,\"terms\":[{\"exps\":[0],\"coeff\":1}]}\n");

    REQUIRE(run("represent g2.code --out k").code == 0);
    const auto e = json_file("k.json")["e"].get<std::size_t>();
    CHECK(run("kernel k.complex --field gf:2 --out k.kernel.json").code == 0);
    CHECK(json_file("k.kernel.json")["dimension"] == 2);
    CHECK(run("wenum k.complex --field gf:2 --out kw.json").code == 0);
    CHECK(run("recover kw.json --e " + std::to_string(e) + " --out rec.json").code == 0);
    CHECK(run("wenum g2.code --code --out cw.json").code == 0);
    CHECK(slurp("rec.json") == slurp("cw.json"));
}

TEST_CASE("potts compares both paths") {
    const auto r = run("potts k3.graph --q 3 --via both --out p.json");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    const auto j = json_file("p.json");
    CHECK(j["match"] == true);
    CHECK(j["direct"] == j["representation"]);
}

TEST_CASE("gadgets") {
    CHECK(run("gadget sphere --m 14 --field gf:3 --out s").code == 0);
    CHECK(json_file("s.json")["signs"]["plus"].size() == 7);
    CHECK(run("gadget tunnel --out t").code == 0);
    CHECK(run("gadget multisphere --n 1,2 --M 2 --field gf:5 --out ms").code == 0);
    CHECK(run("gadget sphere --m 10 --out s10").code == 2);
    CHECK(run("gadget cube --out c").code == 2);
}
