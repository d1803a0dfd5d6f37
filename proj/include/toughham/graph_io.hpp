#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

/// Malformed graph text; `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    [[nodiscard]] std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Header-free graph6 (one graph, no trailing newline).
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// "n <count>" followed by one "u v" pair per line; '#' starts a comment.
Graph decode_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

struct GraphRecord {
    std::string id;  // "<source>:<line>"
    Graph graph;
    std::string error;  // non-empty when the record failed to parse

    [[nodiscard]] bool ok() const { return error.empty(); }
};

/// Reads every graph from a stream. A leading "n <count>" line selects edge-list
/// mode (the whole stream is one graph); otherwise each non-empty line is graph6.
/// Malformed records are returned with `error` set rather than thrown.
std::vector<GraphRecord> read_graphs(std::istream& in, const std::string& source);

}  // namespace toughham
