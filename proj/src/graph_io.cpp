#include "toughham/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace toughham {

namespace {

constexpr int kBias = 63;

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6 text truncated", pos);
    auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", pos);
    return c - kBias;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 text", 0);
    std::size_t pos = 0;
    int n = 0;
    if (text[0] == '~') {
        if (text.size() > 1 && text[1] == '~') throw ParseError("graph6 order beyond 258047 unsupported", 1);
        for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(text, 1 + static_cast<std::size_t>(i));
        if (n < 63) throw ParseError("non-canonical graph6 length header", 0);
        pos = 4;
    } else {
        n = sextet(text, 0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw ParseError("graph order " + std::to_string(n) + " exceeds capacity " + std::to_string(kMaxVertices), 0);

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != pos + bytes) {
        std::size_t where = text.size() < pos + bytes ? text.size() : pos + bytes;
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                             std::to_string(bytes),
                         where);
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = sextet(text, pos + k / 6);
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
        }
    }
    if (bytes > 0) {
        int last = sextet(text, pos + bytes - 1);
        int pad = static_cast<int>(bytes * 6 - bits);
        if ((last & ((1 << pad) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", pos + bytes - 1);
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

namespace {

bool next_int(std::string_view line, std::size_t& pos, int& value) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) return false;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{}) return false;
    pos = static_cast<std::size_t>(ptr - line.data());
    return true;
}

bool rest_blank(std::string_view line, std::size_t pos) {
    for (; pos < line.size(); ++pos)
        if (line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') return false;
    return true;
}

}  // namespace

Graph decode_edge_list(std::string_view text) {
    int n = -1;
    std::vector<Edge> edges;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!rest_blank(line, 0)) {
            std::size_t pos = 0;
            if (n < 0) {
                while (pos < line.size() && line[pos] == ' ') ++pos;
                if (pos >= line.size() || line[pos] != 'n') throw ParseError("edge list must start with 'n <count>'", line_start);
                ++pos;
                if (!next_int(line, pos, n) || !rest_blank(line, pos) || n < 0)
                    throw ParseError("malformed vertex count line", line_start + pos);
                if (n > kMaxVertices)
                    throw ParseError("graph order " + std::to_string(n) + " exceeds capacity", line_start);
            } else {
                int u = 0;
                int v = 0;
                if (!next_int(line, pos, u) || !next_int(line, pos, v) || !rest_blank(line, pos))
                    throw ParseError("malformed edge line", line_start + pos);
                if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                    throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") invalid", line_start);
                edges.emplace_back(u, v);
            }
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    if (n < 0) throw ParseError("edge list missing 'n <count>' line", 0);
    return Graph(n, edges);
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<GraphRecord> read_graphs(std::istream& in, const std::string& source) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    std::vector<GraphRecord> out;
    std::size_t first = 0;
    while (first < lines.size() && rest_blank(lines[first], 0)) ++first;
    if (first == lines.size()) return out;

    std::string_view head = lines[first];
    std::size_t p = 0;
    while (p < head.size() && head[p] == ' ') ++p;
    if (p + 1 < head.size() && head[p] == 'n' && (head[p + 1] == ' ' || head[p + 1] == '\t')) {
        std::string text;
        for (const auto& l : lines) text += l + '\n';
        GraphRecord rec{source + ":" + std::to_string(first + 1), Graph{}, {}};
        try {
            rec.graph = decode_edge_list(text);
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        out.push_back(std::move(rec));
        return out;
    }

    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
        if (line.empty()) continue;
        if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
        GraphRecord rec{source + ":" + std::to_string(i + 1), Graph{}, {}};
        try {
            rec.graph = decode_graph6(line);
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace toughham
