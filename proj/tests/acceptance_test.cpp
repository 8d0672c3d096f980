// Acceptance suite: runs every verification criterion, including the
// corpus-backed census checks (the corpora are generated on first use),
// and prints one pass/fail line per criterion.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "digitop/catalog.hpp"
#include "digitop/graph6.hpp"
#include "digitop/verification.hpp"

using namespace digitop;

namespace {

std::string ensure_corpus(const std::string& dir, int n) {
    std::string path = dir + "/graphs" + std::to_string(n) + ".g6";
    if (std::ifstream(path).good())
        return path;
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write corpus " << path << "\n";
        return "";
    }
    for (const auto& img : detail::connected_graphs_unchecked(n))
        out << write_graph6(img) << "\n";
    return path;
}

} // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : ".";
    auto t0 = std::chrono::steady_clock::now();

    VerifyOptions opts;
    opts.jobs = 4;
    opts.corpus8 = ensure_corpus(dir, 8);
    opts.corpus9 = ensure_corpus(dir, 9);

    auto results = run_verification(opts);
    bool all_pass = true;
    for (const auto& r : results) {
        const char* status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        std::cout << "[" << status << "] " << r.id << ": " << r.detail << std::endl;
        if (r.skipped || !r.pass)
            all_pass = false;
    }

    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (all_pass ? "acceptance: all criteria passed"
                           : "acceptance: FAILURES above")
              << " (" << results.size() << " checks, " << dt << "s)" << std::endl;
    return all_pass ? 0 : 1;
}
