#include "ramsey/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool parse_positive(std::string_view tok, int& out)
{
    if (tok.empty()) {
        return false;
    }
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc{} && ptr == end && out >= 1;
}

struct Row
{
    int line = 0;
    std::vector<int> entries; // 1-indexed, as written
};

} // namespace

const char* to_string(WarningKind kind)
{
    switch (kind) {
    case WarningKind::Unreciprocated:
        return "unreciprocated";
    case WarningKind::DuplicateEntry:
        return "duplicate entry";
    case WarningKind::SelfLoop:
        return "self-loop ignored";
    }
    return "unknown";
}

std::string describe(const ParseWarning& w)
{
    std::ostringstream os;
    os << "line " << w.line << ": " << (w.u + 1) << "->" << (w.v + 1) << " " << to_string(w.kind);
    return os.str();
}

ParseReport parse_adjacency_list(std::string_view text)
{
    std::vector<std::pair<int, Row>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(line_no, "expected '<vertex>:<neighbors>'");
        }
        int v = 0;
        if (!parse_positive(trim(line.substr(0, colon)), v)) {
            throw ParseError(line_no, "invalid vertex label '" + std::string(line.substr(0, colon)) + "'");
        }
        Row row;
        row.line = line_no;
        std::string_view rest = line.substr(colon + 1);
        while (true) {
            rest = trim(rest);
            if (rest.empty()) {
                break;
            }
            const auto sp = rest.find_first_of(" \t");
            const auto tok = rest.substr(0, sp);
            int w = 0;
            if (!parse_positive(tok, w)) {
                throw ParseError(line_no, "invalid neighbor '" + std::string(tok) + "'");
            }
            row.entries.push_back(w);
            if (sp == std::string_view::npos) {
                break;
            }
            rest = rest.substr(sp);
        }
        for (const auto& [label, other] : rows) {
            if (label == v) {
                throw ParseError(line_no, "duplicate row for vertex " + std::to_string(v) +
                                              " (first at line " + std::to_string(other.line) + ")");
            }
        }
        rows.emplace_back(v, std::move(row));
    }

    const int n = static_cast<int>(rows.size());
    if (n == 0) {
        throw ParseError(0, "no vertex rows");
    }
    if (n > kMaxVertices) {
        throw ParseError(0, "more than 64 vertices");
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 0; i < n; ++i) {
        if (rows[i].first != i + 1) {
            throw ParseError(rows[i].second.line, "vertex rows must be numbered 1.." + std::to_string(n) +
                                                      " contiguously; found " + std::to_string(rows[i].first));
        }
    }

    std::vector<ParseWarning> warnings;
    std::vector<VertexMask> listed(n, 0);
    for (int u = 0; u < n; ++u) {
        const Row& row = rows[u].second;
        for (int w1 : row.entries) {
            if (w1 > n) {
                throw ParseError(row.line, "neighbor " + std::to_string(w1) + " exceeds vertex count " +
                                               std::to_string(n));
            }
            const int w = w1 - 1;
            if (w == u) {
                warnings.push_back({u, w, WarningKind::SelfLoop, row.line});
                continue;
            }
            if (listed[u] & bit(w)) {
                warnings.push_back({u, w, WarningKind::DuplicateEntry, row.line});
                continue;
            }
            listed[u] |= bit(w);
        }
    }

    std::vector<VertexMask> adj(listed);
    for (int u = 0; u < n; ++u) {
        for_each_vertex(listed[u], [&](int w) {
            if (!(listed[w] & bit(u))) {
                warnings.push_back({u, w, WarningKind::Unreciprocated, rows[u].second.line});
                adj[w] |= bit(u);
            }
        });
    }
    std::stable_sort(warnings.begin(), warnings.end(), [](const ParseWarning& a, const ParseWarning& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    return {Graph::from_masks(n, adj), std::move(warnings)};
}

std::string emit_adjacency_list(const Graph& g)
{
    std::string out;
    for (int v = 0; v < g.order(); ++v) {
        if (v > 0) {
            out += '\n';
        }
        out += std::to_string(v + 1);
        out += ':';
        bool first = true;
        for_each_vertex(g.neighbors(v), [&](int w) {
            if (!first) {
                out += ' ';
            }
            out += std::to_string(w + 1);
            first = false;
        });
    }
    return out;
}

// graph6: N(n) followed by the upper triangle, column by column
// ((0,1),(0,2),(1,2),(0,3),...), packed six bits per byte, big-endian, +63.
std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out += static_cast<char>(((n >> shift) & 0x3F) + 63);
        }
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) {
        out += static_cast<char>((acc << (6 - nbits)) + 63);
    }
    return out;
}

Graph decode_graph6(std::string_view text)
{
    auto s = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) {
        s = s.substr(header.size());
    }
    if (s.empty()) {
        throw ParseError(0, "empty graph6 string");
    }
    for (char c : s) {
        if (c < 63 || c > 126) {
            throw ParseError(0, "invalid graph6 character (code " + std::to_string(static_cast<int>(c)) + ")");
        }
    }
    std::size_t idx = 0;
    int n = 0;
    if (s[0] != 126) {
        n = s[0] - 63;
        idx = 1;
    } else {
        if (s.size() < 4 || s[1] == 126) {
            throw ParseError(0, "graph6 order exceeds 64 vertices");
        }
        for (std::size_t k = 1; k <= 3; ++k) {
            n = (n << 6) | (s[k] - 63);
        }
        idx = 4;
    }
    if (n < 1 || n > kMaxVertices) {
        throw ParseError(0, "graph6 order " + std::to_string(n) + " not in 1..64");
    }
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (s.size() - idx != bytes) {
        throw ParseError(0, "graph6 body has " + std::to_string(s.size() - idx) + " bytes, expected " +
                                std::to_string(bytes));
    }
    std::vector<VertexMask> adj(n, 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = s[idx + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
    }
    if (bits % 6 != 0) {
        const int last = s.back() - 63;
        if (last & ((1 << (6 - bits % 6)) - 1)) {
            throw ParseError(0, "graph6 padding bits must be zero");
        }
    }
    return Graph::from_masks(n, adj);
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

ParseReport load_graph(const std::filesystem::path& path)
{
    const std::string text = read_text_file(path);
    if (path.extension() == ".g6") {
        return {decode_graph6(text), {}};
    }
    return parse_adjacency_list(text);
}

void save_graph(const std::filesystem::path& stem, const Graph& g)
{
    auto adj = stem;
    adj += ".adj";
    auto g6 = stem;
    g6 += ".g6";
    write_text_file(adj, emit_adjacency_list(g) + "\n");
    write_text_file(g6, encode_graph6(g) + "\n");
}

} // namespace ramsey
