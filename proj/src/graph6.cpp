#include "graph6.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace atg {

namespace {

int checked_byte(const std::string& s, size_t pos) {
    int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw_parse("graph6: byte at offset " + std::to_string(pos) +
                    " out of range [63,126]");
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
    std::string s = raw;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (!s.empty() && s.compare(0, 10, ">>graph6<<") == 0) s.erase(0, 10);
    if (s.empty()) throw_parse("graph6: empty input");

    size_t pos = 0;
    std::int64_t n = 0;
    if (s[0] != '~') {
        n = checked_byte(s, 0);
        pos = 1;
    } else if (s.size() >= 2 && s[1] != '~') {
        if (s.size() < 4)
            throw_parse("graph6: truncated length header at offset " +
                        std::to_string(s.size()));
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | checked_byte(s, i);
        pos = 4;
    } else {
        if (s.size() < 8)
            throw_parse("graph6: truncated length header at offset " +
                        std::to_string(s.size()));
        n = 0;
        for (size_t i = 2; i <= 7; ++i) n = (n << 6) | checked_byte(s, i);
        pos = 8;
    }
    if (n > 100000)
        throw_parse("graph6: vertex count " + std::to_string(n) + " too large");

    std::int64_t nbits = n * (n - 1) / 2;
    std::int64_t nbytes = (nbits + 5) / 6;
    if (static_cast<std::int64_t>(s.size()) - static_cast<std::int64_t>(pos) <
        nbytes)
        throw_parse("graph6: body truncated at offset " + std::to_string(s.size()) +
                    " (need " + std::to_string(nbytes) + " data bytes)");
    if (static_cast<std::int64_t>(s.size()) - static_cast<std::int64_t>(pos) >
        nbytes)
        throw_parse("graph6: trailing garbage at offset " +
                    std::to_string(pos + nbytes));

    std::vector<std::pair<int, int>> edges;
    std::int64_t bit = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) cur = checked_byte(s, pos + bit / 6);
            if ((cur >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    std::int64_t n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw_invalid("graph6: vertex count too large to emit");
    }
    std::int64_t bit = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) cur |= 1 << (5 - bit % 6);
            if (bit % 6 == 5) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
            }
        }
    }
    if (bit % 6 != 0) out.push_back(static_cast<char>(cur + 63));
    return out;
}

}  // namespace atg
