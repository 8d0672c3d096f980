// Writes one graph6 line per isomorphism class of connected graphs on n
// vertices, for feeding the census ingestion path at n = 8 or 9.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "digitop/catalog.hpp"
#include "digitop/graph6.hpp"

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: digitop-corpus-gen <n> <output.g6>\n";
        return 2;
    }
    int n = std::atoi(argv[1]);
    if (n < 1 || n > 10) {
        std::cerr << "n must be between 1 and 10\n";
        return 2;
    }
    std::ofstream out(argv[2]);
    if (!out) {
        std::cerr << "cannot open " << argv[2] << "\n";
        return 2;
    }
    long count = 0;
    for (const auto& img : digitop::detail::connected_graphs_unchecked(n)) {
        out << digitop::write_graph6(img) << "\n";
        ++count;
    }
    std::cerr << count << " connected graphs on " << n << " vertices\n";
    return 0;
}
