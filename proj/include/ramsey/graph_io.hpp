#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class WarningKind
{
    Unreciprocated, // u lists v but v does not list u
    DuplicateEntry,
    SelfLoop,
};

const char* to_string(WarningKind kind);

/// One reconciliation applied while parsing. Vertices are 0-indexed.
struct ParseWarning
{
    int u;
    int v;
    WarningKind kind;
    int line;

    friend bool operator==(const ParseWarning&, const ParseWarning&) = default;
};

struct ParseReport
{
    Graph graph;
    std::vector<ParseWarning> warnings;
};

/// Parses "<v>:<neighbors>" rows, 1-indexed, rows 1..n each present once.
///
/// An edge is kept when either endpoint lists it; every one-sided entry is
/// recorded as a warning. Blank lines and surrounding whitespace are
/// ignored. Throws ParseError naming the offending line.
ParseReport parse_adjacency_list(std::string_view text);

/// 1-indexed rows, neighbors ascending, rows joined by '\n' (no trailing newline).
std::string emit_adjacency_list(const Graph& g);

std::string encode_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
Graph decode_graph6(std::string_view text);

/// Human-readable form of a warning, 1-indexed, e.g. "line 3: 1->2 unreciprocated".
std::string describe(const ParseWarning& w);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Loads a graph by extension: ".g6" is graph6, anything else an adjacency list.
ParseReport load_graph(const std::filesystem::path& path);

/// Writes `<stem>.adj` and `<stem>.g6` next to each other.
void save_graph(const std::filesystem::path& stem, const Graph& g);

} // namespace ramsey
