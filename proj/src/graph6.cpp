#include "lexdom/graph6.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace lexdom {
namespace {

constexpr int kBias = 63;

int decode_char(char c) {
    const int value = static_cast<unsigned char>(c) - kBias;
    if (value < 0 || value > 63) throw std::invalid_argument("graph6: character outside 63..126");
    return value;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw std::invalid_argument("graph6: empty line");

    std::size_t pos = 0;
    long n = 0;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~') throw std::invalid_argument("graph6: order exceeds 64 vertices");
        if (line.size() < 4) throw std::invalid_argument("graph6: truncated order header");
        n = (static_cast<long>(decode_char(line[1])) << 12) | (decode_char(line[2]) << 6) | decode_char(line[3]);
        if (n < 63) throw std::invalid_argument("graph6: non-canonical long order header");
        pos = 4;
    } else {
        n = decode_char(line[0]);
        pos = 1;
    }
    if (n > kMaxVertices) throw std::invalid_argument("graph6: order exceeds 64 vertices");

    const long bit_count = n * (n - 1) / 2;
    const long char_count = (bit_count + 5) / 6;
    if (static_cast<long>(line.size() - pos) < char_count) throw std::invalid_argument("graph6: truncated bit stream");
    if (static_cast<long>(line.size() - pos) > char_count) throw std::invalid_argument("graph6: trailing characters");

    std::vector<Edge> edges;
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int word = decode_char(line[pos + k / 6]);
            if ((word >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    // Padding bits must be zero.
    for (; k < char_count * 6; ++k)
        if ((decode_char(line[pos + k / 6]) >> (5 - k % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int word = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + kBias));
                word = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file '" + path + "'");
    return read_graph6_stream(in);
}

}  // namespace lexdom
