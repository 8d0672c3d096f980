#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef DIGITOP_CLI
#error "DIGITOP_CLI must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(DIGITOP_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("digitop_cli_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kC4Check = R"({"domain": {"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]},
                           "f": [0,1,2,3], "g": [0,0,0,0]})";

// the eight-point nested-squares image
const char* kX8 = "8\n0 1\n1 2\n2 3\n3 0\n4 5\n5 6\n6 7\n7 4\n"
                  "3 6\n6 4\n4 1\n2 5\n7 0\n3 5\n2 4\n1 7\n3 7\n6 0\n";

} // namespace

TEST_CASE("homology subcommand") {
    TempFile c5("c5.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    auto res = run("homology --input " + c5.path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"betti\":1,\"q\":0") != std::string::npos);
    CHECK(res.out.find("\"betti\":1,\"q\":1") != std::string::npos);
    CHECK(res.out.find("\"betti\":0,\"q\":2") != std::string::npos);

    TempFile pt("pt.txt", "1\n");
    auto point = run("homology --input " + pt.path + " --max-q 1");
    CHECK(point.exit_code == 0);
    CHECK(point.out.find("\"betti\":1,\"q\":0") != std::string::npos);
    CHECK(point.out.find("\"betti\":0,\"q\":1") != std::string::npos);

    // two isolated points via graph6: H_0 has rank 2
    TempFile pair("pair.g6", "A?\n");
    auto two = run("homology --input " + pair.path);
    CHECK(two.exit_code == 0);
    CHECK(two.out.find("\"betti\":2,\"q\":0") != std::string::npos);

    // identical invocations produce byte-identical output
    auto again = run("homology --input " + c5.path);
    CHECK(again.out == res.out);

    auto missing = run("homology --input does_not_exist.txt");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("check subcommand verdicts and exit codes") {
    TempFile in("check.json", kC4Check);

    auto strong = run("check --mode strong --input " + in.path);
    CHECK(strong.exit_code == 0);
    CHECK(strong.out.find("\"verdict\":\"no\"") != std::string::npos);

    auto ordinary = run("check --mode homotopic --input " + in.path + " --witness");
    CHECK(ordinary.exit_code == 0);
    CHECK(ordinary.out.find("\"verdict\":\"yes\"") != std::string::npos);
    CHECK(ordinary.out.find("\"witness\"") != std::string::npos);
    CHECK(ordinary.out.find("\"stages\"") != std::string::npos);

    auto onestep = run("check --mode one-step --input " + in.path);
    CHECK(onestep.exit_code == 0);
    CHECK(onestep.out.find("\"verdict\":\"no\"") != std::string::npos);

    // f against itself is yes in every mode
    TempFile self("self.json", R"({"domain": {"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]},
                                   "f": [0,1,2,3], "g": [0,1,2,3]})");
    for (const char* mode : {"one-step", "one-step-strong", "homotopic", "strong"}) {
        auto r = run(std::string("check --mode ") + mode + " --input " + self.path);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("\"verdict\":\"yes\"") != std::string::npos);
    }

    // budget exhaustion: undecided, exit 3
    auto tight = run("check --mode homotopic --budget-maps 2 --input " + in.path);
    CHECK(tight.exit_code == 3);
    CHECK(tight.out.find("\"verdict\":\"undecided\"") != std::string::npos);

    // malformed input: exit 2
    TempFile bad("bad.json", "{not json");
    CHECK(run("check --mode strong --input " + bad.path).exit_code == 2);
    TempFile incomplete("incomplete.json", R"({"domain": {"n": 2, "edges": [[0,1]]}})");
    CHECK(run("check --mode strong --input " + incomplete.path).exit_code == 2);
}

TEST_CASE("reduce subcommand") {
    TempFile x8("x8.txt", kX8);
    auto res = run("reduce --input " + x8.path + " --basepoint 0");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"strongly_contractible\":true") != std::string::npos);
    CHECK(res.out.find("\"core\":{\"graph6\":\"@\",\"n\":1}") != std::string::npos);
    CHECK(res.out.find("\"ordering\"") != std::string::npos);
    CHECK(res.out.find("\"verdict\":\"no\"") != std::string::npos); // pointed at x_1

    TempFile k5("k5.txt", "5\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    auto kres = run("reduce --input " + k5.path);
    CHECK(kres.exit_code == 0);
    CHECK(kres.out.find("\"core\":{\"graph6\":\"@\",\"n\":1}") != std::string::npos);

    TempFile c6("c6.txt", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    auto cres = run("reduce --input " + c6.path);
    CHECK(cres.exit_code == 0);
    CHECK(cres.out.find("\"core\":{\"graph6\":\"EhEG\",\"n\":6}") != std::string::npos);
    CHECK(cres.out.find("\"strongly_contractible\":false") != std::string::npos);
}

TEST_CASE("census subcommand") {
    auto res = run("census --n 5 --with-reducible");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("n,total,d,c,undecided") == 0);
    CHECK(res.out.find("5,21,2,1,0") != std::string::npos);

    auto n2 = run("census --n 2");
    CHECK(n2.exit_code == 0);
    CHECK(n2.out.find("2,1,0,,0") != std::string::npos);

    auto json5 = run("census --n 5 --format json");
    CHECK(json5.out.find("\"d\":2") != std::string::npos);

    // ingestion path through a file, plus catalog output
    {
        auto gen = run("census --n 4 --out-catalog digitop_cli_cat.jsonl");
        CHECK(gen.exit_code == 0);
        std::ifstream cat("digitop_cli_cat.jsonl");
        std::string line;
        REQUIRE(std::getline(cat, line));
        CHECK(line.find("\"strongly_reducible\":false") != std::string::npos);
        std::remove("digitop_cli_cat.jsonl");
    }

    CHECK(run("census").exit_code == 2);              // neither --n nor --corpus
    CHECK(run("census --n 9").exit_code == 2);        // beyond the built-in range
}

TEST_CASE("corpus generation feeds the ingestion path") {
    std::string gen = std::string(DIGITOP_CORPUS_GEN) + " 5 digitop_cli_conn5.g6 2>/dev/null";
    REQUIRE(std::system(gen.c_str()) == 0);
    auto res = run("census --corpus digitop_cli_conn5.g6 --with-reducible");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("5,21,2,1,0") != std::string::npos);
    std::remove("digitop_cli_conn5.g6");
}

TEST_CASE("classify-cycle subcommand") {
    auto rot = run("classify-cycle --n 5 --map 2,3,4,0,1");
    CHECK(rot.exit_code == 0);
    CHECK(rot.out.find("\"class\":\"identity\"") != std::string::npos);
    CHECK(rot.out.find("\"d\":2") != std::string::npos);
    CHECK(rot.out.find("\"match\":false") == std::string::npos);

    auto flip = run("classify-cycle --n 6 --map 1,0,5,4,3,2");
    CHECK(flip.exit_code == 0);
    CHECK(flip.out.find("\"class\":\"flip\"") != std::string::npos);

    auto cst = run("classify-cycle --n 5 --map 0,0,0,0,0");
    CHECK(cst.exit_code == 0);
    CHECK(cst.out.find("\"class\":\"constant\"") != std::string::npos);

    // n = 4 is out of theorem scope
    CHECK(run("classify-cycle --n 4 --map 0,1,2,3").exit_code == 2);
    // discontinuous map
    CHECK(run("classify-cycle --n 5 --map 0,2,4,1,3").exit_code == 2);
}

TEST_CASE("verify-paper without corpus passes and skips the corpus items") {
    auto res = run("verify-paper");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("[SKIP] census-d-corpus8") != std::string::npos);
    CHECK(res.out.find("[SKIP] census-d-corpus9") != std::string::npos);
    CHECK(res.out.find("[FAIL]") == std::string::npos);
    CHECK(res.out.find("[PASS] census-d-builtin") != std::string::npos);
}
