#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("graph emission is deterministic") {
    auto r1 = run_cli("graph --family A1 --n 3 --k 2 --l 1 --format dot");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("digraph crystal") != std::string::npos);
    // 6 vertices, 8 labeled arrows
    size_t arrows = 0;
    for (size_t p = r1.output.find("->"); p != std::string::npos;
         p = r1.output.find("->", p + 2))
        ++arrows;
    CHECK(arrows == 8);
    auto r2 = run_cli("graph --family A1 --n 3 --k 2 --l 1 --format dot");
    CHECK(r2.output == r1.output);

    auto rj = run_cli("graph --family C1 --n 2 --l 1 --format json");
    CHECK(rj.exit_code == 0);
    CHECK(rj.output.find("\"vertices\"") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify --family A2even --n 2 --l 1 --jmax 3").exit_code == 0);
    CHECK(run_cli("verify --family B1 --n 3 --l 1 --jmax 2").exit_code == 0);
    CHECK(run_cli("verify --family A2even --n 2 --l 1 --jmax 2 --kappa2").exit_code == 0);

    // A corrupted user schedule must fail with a witness and exit 1.
    const std::string sched = "/tmp/test_cli_bad_schedule.json";
    {
        std::ofstream f(sched);
        f << R"({"d":4,"period_in_j":1,"table":[[1,0,2,1]]})";
    }
    auto r = run_cli("verify --family A2even --n 2 --l 1 --jmax 1 --schedule " + sched);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("\"II\"") != std::string::npos);
    std::remove(sched.c_str());
}

TEST_CASE("demazure path sets") {
    auto r = run_cli(
        "demazure --family A1 --n 3 --k 2 --l 1 --variant intro --steps 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"count\": 5") != std::string::npos);
    CHECK(r.output.find("\"character\"") != std::string::npos);

    auto rt = run_cli(
        "demazure --family A2even --n 2 --l 1 --steps 4 --format text");
    CHECK(rt.exit_code == 0);
    CHECK(rt.output.find("count: 5") != std::string::npos);
}

TEST_CASE("oracle, perfect, invariance") {
    CHECK(run_cli("oracle --family A2even --n 2 --l 1 --steps 5").exit_code == 0);
    CHECK(run_cli("perfect --family C1 --n 2 --l 1").exit_code == 0);
    CHECK(run_cli("perfect --family B1 --n 3 --l 2").exit_code == 0);
    auto r = run_cli("invariance --family A2even --n 2 --l 1 --L 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"cardinality\": 5") != std::string::npos);
}

TEST_CASE("two-slot search experiment") {
    auto r = run_cli(
        "experiment kappa2 --family C1 --n 2 --l 1 --lambda 0,1,0 --dmax 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"kappa1\"") != std::string::npos);
    CHECK(r.output.find("\"found\": false") != std::string::npos);
    CHECK(r.output.find("\"found\": true") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("demazure --family A1 --n 3 --k 2 --l 1").exit_code == 2);  // no --steps
    CHECK(run_cli("verify --family Z9 --n 3 --l 1 --jmax 1").exit_code == 2);
    CHECK(run_cli("verify --family A2even --n 2 --l 1 --jmax 1 --lambda 1,2").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    ctx.applyCommandLine(argc > 1 ? 1 : argc, argv);
    if (argc > 1) g_binary = argv[1];
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-crystal-binary>\n");
        return 1;
    }
    return ctx.run();
}
