#include "digitop/graph6.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "digitop/errors.hpp"

namespace digitop {

namespace {

constexpr int kG6Offset = 63;

int check_byte(std::string_view line, std::size_t pos) {
    if (pos >= line.size())
        throw ParseError("graph6 line truncated at byte " + std::to_string(pos), pos);
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 byte out of range 63..126 at offset " + std::to_string(pos),
                         pos);
    return c - kG6Offset;
}

} // namespace

DigitalImage parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw ParseError("empty graph6 line", 0);

    std::size_t pos = 0;
    long long n;
    int first = check_byte(line, pos);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        // '~' escape: 18-bit or 36-bit vertex count
        if (line.size() >= 2 && line[1] == '~') {
            n = 0;
            for (std::size_t i = 2; i < 8; ++i)
                n = (n << 6) | check_byte(line, i);
            pos = 8;
        } else {
            n = 0;
            for (std::size_t i = 1; i < 4; ++i)
                n = (n << 6) | check_byte(line, i);
            pos = 4;
        }
    }
    if (n == 0)
        throw ParseError("graph6 encodes an empty image", 0);
    if (n > 100000)
        throw ParseError("graph6 vertex count implausibly large", 0);

    long long nbits = n * (n - 1) / 2;
    std::size_t expected = pos + static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != expected)
        throw ParseError("graph6 line has wrong length (expected " + std::to_string(expected) +
                             " bytes, got " + std::to_string(line.size()) + ")",
                         line.size());

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t byte_pos = pos + static_cast<std::size_t>(bit / 6);
            int group = check_byte(line, byte_pos);
            if ((group >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
        }
    // trailing padding bits must be zero
    for (long long b = nbits; b < ((nbits + 5) / 6) * 6; ++b) {
        std::size_t byte_pos = pos + static_cast<std::size_t>(b / 6);
        int group = check_byte(line, byte_pos);
        if ((group >> (5 - b % 6)) & 1)
            throw ParseError("graph6 trailing padding bits nonzero at offset " +
                                 std::to_string(byte_pos),
                             byte_pos);
    }
    return DigitalImage(static_cast<int>(n), edges);
}

std::string write_graph6(const DigitalImage& X) {
    int n = X.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    } else {
        throw std::invalid_argument("graph6 output limited to n <= 258047");
    }
    long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    std::string bits(static_cast<std::size_t>((nbits + 5) / 6), 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (X.adjacent(i, j))
                bits[static_cast<std::size_t>(bit / 6)] |=
                    static_cast<char>(1 << (5 - bit % 6));
    for (char& c : bits)
        c = static_cast<char>(c + kG6Offset);
    out += bits;
    return out;
}

DigitalImage parse_adjacency_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long line_no = 0;
    long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n))
                continue; // blank or comment-only line before the header
            if (n <= 0)
                throw ParseError("vertex count must be positive", 0, line_no);
            std::string rest;
            if (ls >> rest)
                throw ParseError("unexpected token after vertex count: " + rest, 0, line_no);
            continue;
        }
        long u, v;
        if (!(ls >> u))
            continue;
        if (!(ls >> v))
            throw ParseError("edge line with a single endpoint", 0, line_no);
        std::string rest;
        if (ls >> rest)
            throw ParseError("unexpected token after edge: " + rest, 0, line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range", 0, line_no);
        if (u == v)
            throw ParseError("self-loop rejected", 0, line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw ParseError("missing vertex count header line", 0, line_no);
    return DigitalImage(static_cast<int>(n), edges);
}

std::string write_adjacency_list(const DigitalImage& X) {
    std::ostringstream out;
    out << X.size() << "\n";
    for (auto [u, v] : X.edges())
        out << u << " " << v << "\n";
    return out.str();
}

DigitalImage read_image_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open image file: " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t i = 0;
    while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i])))
        ++i;
    if (i == content.size())
        throw ParseError("image file is empty: " + path);
    char c = content[i];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '#')
        return parse_adjacency_list(content);
    auto eol = content.find('\n', i);
    return parse_graph6(std::string_view(content).substr(i, eol == std::string::npos
                                                                ? std::string::npos
                                                                : eol - i));
}

} // namespace digitop
