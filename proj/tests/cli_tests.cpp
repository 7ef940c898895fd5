// Exercises the command-line binary end to end: exit codes, golden output,
// determinism. Takes the path to the binary as argv[1].

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what, const RunResult& r) {
    if (ok) {
        std::printf("ok: %s\n", what.c_str());
    } else {
        ++g_failures;
        std::printf("FAIL: %s\n  exit=%d\n  output:\n%s\n", what.c_str(), r.exit_code,
                    r.output.c_str());
    }
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "cli_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

int count_lines(const std::string& s) {
    int lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-geodex>\n");
        return 2;
    }
    g_cli = argv[1];

    const std::string p4 = write_temp("p4.el", "4 3\n0 1\n1 2\n2 3\n");
    const std::string c5 = write_temp("c5.el", "# five cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    const std::string bad = write_temp("bad.el", "this is not a header\n");
    const std::string split = write_temp("split.el", "4 2\n0 1\n2 3\n");
    const std::string big = write_temp("big.el", [] {
        std::string s = "30 29\n";
        for (int v = 0; v + 1 < 30; ++v) s += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
        return s;
    }());

    {
        const auto r = run("con " + p4 + " --prism --no-timing");
        expect(r.exit_code == 0 && contains(r.output, "con=5"), "con of the P4 prism is 5", r);
    }
    {
        const auto r = run("con " + c5 + " --prism --solver both --no-timing");
        expect(r.exit_code == 0 && contains(r.output, "agree=1"),
               "both solvers agree on the Petersen instance", r);
    }
    {
        const auto r = run("con " + p4 + " --solver bnb --json --no-timing");
        bool ok = r.exit_code == 0;
        if (ok) {
            const auto j = nlohmann::json::parse(r.output, nullptr, false);
            ok = !j.is_discarded() && j["con"] == 3 && j["witness"].is_array();
        }
        expect(ok, "json output carries the solver result", r);
    }
    {
        const auto r = run("con " + bad);
        expect(r.exit_code == 2 && contains(r.output, ":1:"),
               "malformed header exits 2 and names the line", r);
    }
    {
        const auto r = run("con " + split);
        expect(r.exit_code == 3 && contains(r.output, "disconnected"),
               "disconnected input exits 3", r);
    }
    {
        const auto r = run("con " + big);
        expect(r.exit_code == 3, "oversized input exits 3", r);
    }
    {
        const std::string g6 = write_temp("p4.g6", "Ch\n");
        const auto r = run("con " + g6 + " --format graph6 --no-timing");
        expect(r.exit_code == 0 && contains(r.output, "con=3"), "graph6 ingestion", r);
    }
    {
        const auto r = run("prism " + c5);
        expect(r.exit_code == 0 &&
                   r.output ==
                       "10 15\n0 1\n0 4\n0 5\n1 2\n1 6\n2 3\n2 7\n3 4\n3 8\n4 9\n5 7\n5 8\n"
                       "6 8\n6 9\n7 9\n",
               "prism emits the Petersen edge list", r);
    }
    {
        const auto r = run("gen star 4");
        expect(r.exit_code == 0 && r.output == "5 4\n0 1\n0 2\n0 3\n0 4\n",
               "gen star 4 emits the 4-leaf star", r);
    }
    {
        const auto r = run("gen double_star 2 3");
        expect(r.exit_code == 0 && contains(r.output, "7 6\n0 1\n"), "gen double_star", r);
    }
    {
        const auto r = run("gen spider");
        expect(r.exit_code == 3, "gen with missing parameters exits 3", r);
    }
    {
        const auto r = run("enum 5");
        expect(r.exit_code == 0 && count_lines(r.output) == 3, "enum 5 emits three trees", r);
    }
    {
        const auto a = run("verify-trees 6 --no-timing");
        const auto b = run("verify-trees 6 --no-timing --jobs 4");
        expect(a.exit_code == 0 && contains(a.output, "trees=12 mismatches=0"),
               "verify-trees 6 is clean", a);
        expect(a.output == b.output, "verify-trees output is byte-identical across job counts", b);
    }
    {
        const auto r = run("verify-trees 2");
        expect(r.exit_code == 3, "verify-trees below the valid range exits 3", r);
    }
    {
        const auto r = run("verify-trees 10");
        expect(r.exit_code == 3 && contains(r.output, "--allow-slow"),
               "verify-trees above the default cap points at --allow-slow", r);
    }
    {
        const auto r = run("lemmas 5");
        expect(r.exit_code == 0 && contains(r.output, "failures=0") &&
                   contains(r.output, "distance3-pair"),
               "lemma suite is clean on small trees", r);
    }
    {
        const auto r = run("lemmas 9");
        expect(r.exit_code == 3, "lemmas above the valid range exits 3", r);
    }

    if (g_failures == 0) std::printf("cli_tests: all passed\n");
    return g_failures == 0 ? 0 : 1;
}
