#include "radmax/formats.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace radmax {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

[[noreturn]] void bad(const std::string& why) {
    throw std::invalid_argument("malformed graph input: " + why);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 258047: '~' then 18 bits in three 6-bit groups
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bits_in_group = 0;
    int group = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits_in_group == 6) {
                out.push_back(static_cast<char>(group + 63));
                bits_in_group = 0;
                group = 0;
            }
        }
    }
    if (bits_in_group > 0)
        out.push_back(static_cast<char>((group << (6 - bits_in_group)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    std::string_view s = trim(text);
    if (s.substr(0, kGraph6Header.size()) == kGraph6Header) s.remove_prefix(kGraph6Header.size());
    if (s.empty()) bad("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126) bad("graph6 byte out of range [63,126]");

    int n;
    if (s[0] != '~') {
        n = s[0] - 63;
        s.remove_prefix(1);
    } else {
        if (s.size() >= 2 && s[1] == '~') bad("graph6 orders beyond 258047 are not supported");
        if (s.size() < 4) bad("truncated graph6 order field");
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        s.remove_prefix(4);
    }
    if (n < 1) bad("graph6 order must be at least 1");
    if (n > kOrderCap)
        bad("graph6 order " + std::to_string(n) + " exceeds the configured cap " +
            std::to_string(kOrderCap));

    const long nbits = static_cast<long>(n) * (n - 1) / 2;
    const long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(s.size()) != nbytes)
        bad("graph6 payload has " + std::to_string(s.size()) + " bytes, expected " +
            std::to_string(nbytes));

    Graph g(n);
    long k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int byte = s[static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
        }
    }
    // padding bits must be zero
    for (; k < nbytes * 6; ++k) {
        const int byte = s[static_cast<std::size_t>(k / 6)] - 63;
        if ((byte >> (5 - k % 6)) & 1) bad("nonzero padding bits in graph6 payload");
    }
    return g;
}

std::string to_dot(const Graph& g, const std::map<std::string, int>* labels) {
    std::vector<std::string> name(static_cast<std::size_t>(g.order()));
    if (labels)
        for (const auto& [label, id] : *labels)
            if (id >= 0 && id < g.order()) name[static_cast<std::size_t>(id)] = label;
    std::ostringstream out;
    out << "graph radmax {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (!name[static_cast<std::size_t>(v)].empty())
            out << " [label=\"" << name[static_cast<std::size_t>(v)] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph from_dot(std::string_view text) {
    // tokenizer for the emitted subset: ints, --, braces, bracketed attrs
    std::string_view s = text;
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ';') {
            ++i;
        } else if (c == '[') { // skip attribute block
            while (i < s.size() && s[i] != ']') ++i;
            if (i == s.size()) bad("unterminated attribute block in DOT input");
            ++i;
        } else if (c == '{' || c == '}') {
            tokens.emplace_back(1, c);
            ++i;
        } else if (c == '-') {
            if (i + 1 < s.size() && s[i + 1] == '-') {
                tokens.emplace_back("--");
                i += 2;
            } else {
                bad("directed edges are not supported in DOT input");
            }
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            tokens.emplace_back(s.substr(i, j - i));
            i = j;
        } else {
            bad(std::string("unexpected character '") + c + "' in DOT input");
        }
    }

    std::size_t t = 0;
    auto next = [&]() -> const std::string& {
        if (t >= tokens.size()) bad("unexpected end of DOT input");
        return tokens[t++];
    };
    auto peek = [&]() -> const std::string* { return t < tokens.size() ? &tokens[t] : nullptr; };
    auto is_int = [](const std::string& tok) {
        if (tok.empty()) return false;
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    std::string head = next();
    if (head == "strict") head = next();
    if (head == "digraph") bad("digraph is not supported");
    if (head != "graph") bad("expected 'graph' at start of DOT input");
    std::string brace = next();
    if (brace != "{") brace = next(); // optional graph name
    if (brace != "{") bad("expected '{' in DOT input");

    int max_id = -1;
    std::vector<Edge> edges;
    while (true) {
        const std::string* p = peek();
        if (!p) bad("missing closing '}' in DOT input");
        if (*p == "}") break;
        const std::string tok = next();
        if (tok == "node" || tok == "edge" || tok == "graph") continue; // default-attr stmt
        if (!is_int(tok)) bad("DOT vertex ids must be nonnegative integers, got '" + tok + "'");
        int u = std::stoi(tok);
        max_id = std::max(max_id, u);
        while (peek() && *peek() == "--") { // chains: a -- b -- c
            next();
            const std::string tok2 = next();
            if (!is_int(tok2)) bad("DOT vertex ids must be nonnegative integers, got '" + tok2 + "'");
            const int v = std::stoi(tok2);
            max_id = std::max(max_id, v);
            edges.emplace_back(u, v);
            u = v;
        }
    }
    if (max_id < 0) bad("DOT input declares no vertices");
    return Graph::from_edges(max_id + 1, edges);
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        const std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        std::istringstream ls{std::string(sv)};
        if (n < 0) {
            if (!(ls >> n >> m) || n < 1 || m < 0) bad("edge list must start with 'n m'");
            continue;
        }
        long u, v;
        if (!(ls >> u >> v)) bad("edge list line is not a vertex pair: '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) bad("empty edge list input");
    if (static_cast<long>(edges.size()) != m)
        bad("edge list declares " + std::to_string(m) + " edges but contains " +
            std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

GraphFormat sniff_format(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) bad("empty input");
    if (std::isdigit(static_cast<unsigned char>(s.front()))) return GraphFormat::kEdgeList;
    if (s.substr(0, 5) == "graph" || s.substr(0, 6) == "strict") return GraphFormat::kDot;
    return GraphFormat::kGraph6; // valid graph6 never starts with a digit
}

Graph parse_graph(std::string_view text, GraphFormat fmt) {
    switch (fmt) {
    case GraphFormat::kGraph6: return from_graph6(text);
    case GraphFormat::kDot: return from_dot(text);
    case GraphFormat::kEdgeList: return from_edgelist(text);
    }
    bad("unknown graph format");
}

Graph parse_graph_auto(std::string_view text) { return parse_graph(text, sniff_format(text)); }

std::string format_graph(const Graph& g, GraphFormat fmt,
                         const std::map<std::string, int>* labels) {
    switch (fmt) {
    case GraphFormat::kGraph6: return to_graph6(g);
    case GraphFormat::kDot: return to_dot(g, labels);
    case GraphFormat::kEdgeList: return to_edgelist(g);
    }
    bad("unknown graph format");
}

} // namespace radmax
