#include "rcgraph/graph6.hpp"

namespace rcg {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_sextets(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            v <<= 1;
            if (i + j < bits.size() && bits[i + j])
                v |= 1;
        }
        out.push_back(static_cast<char>(v + 63));
    }
}

} // namespace

std::string g6_encode(const SmallGraph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw Graph6Error("graph too large for graph6 encoder");
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.has_edge(i, j));
    append_sextets(out, bits);
    return out;
}

SmallGraph g6_decode(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader)
        text.remove_prefix(kHeader.size());
    if (text.empty())
        throw Graph6Error("empty graph6 input");
    for (char ch : text)
        if (ch < 63 || ch > 126)
            throw Graph6Error("graph6 character out of range");

    std::size_t pos = 0;
    long long n;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw Graph6Error("graph6 orders above 258047 are not supported");
        if (text.size() < 4)
            throw Graph6Error("truncated graph6 order");
        n = (static_cast<long long>(text[1] - 63) << 12) |
            (static_cast<long long>(text[2] - 63) << 6) | (text[3] - 63);
        if (n <= 62)
            throw Graph6Error("non-minimal graph6 order encoding");
        pos = 4;
    }
    if (n < 1)
        throw Graph6Error("graph6 order must be at least 1");

    long long nbits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos < need)
        throw Graph6Error("truncated graph6 bit string");
    if (text.size() - pos > need)
        throw Graph6Error("trailing characters after graph6 bit string");

    SmallGraph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = text[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    for (; bit < static_cast<long long>(need) * 6; ++bit) {
        int byte = text[pos + bit / 6] - 63;
        if ((byte >> (5 - bit % 6)) & 1)
            throw Graph6Error("nonzero padding in graph6 bit string");
    }
    return g;
}

std::vector<SmallGraph> g6_decode_lines(std::string_view text) {
    std::vector<SmallGraph> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty())
            out.push_back(g6_decode(line));
        if (end == text.size())
            break;
        start = end + 1;
    }
    return out;
}

} // namespace rcg
