#include "avo/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>

namespace avo {

namespace {

    constexpr int kG6Low = 63;   // '?'
    constexpr int kG6High = 126; // '~'

    std::string_view strip_line(std::string_view line)
    {
        constexpr std::string_view prefix = ">>graph6<<";
        if (line.substr(0, prefix.size()) == prefix)
            line.remove_prefix(prefix.size());
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
            line.remove_suffix(1);
        return line;
    }

} // namespace

Graph parse_graph6(std::string_view raw)
{
    std::string_view line = strip_line(raw);
    if (line.empty())
        throw parse_error("empty graph6 line", 0);
    for (std::size_t i = 0; i < line.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < kG6Low || c > kG6High)
            throw parse_error("invalid graph6 byte", i);
    }

    std::size_t pos = 0;
    auto take = [&]() -> std::uint64_t {
        if (pos >= line.size())
            throw parse_error("truncated graph6 header", line.size());
        return static_cast<unsigned char>(line[pos++]) - kG6Low;
    };

    std::uint64_t n;
    if (static_cast<unsigned char>(line[0]) != kG6High) {
        n = take();
    } else {
        ++pos;
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == kG6High) {
            ++pos;
            n = 0;
            for (int i = 0; i < 6; ++i)
                n = (n << 6) | take();
        } else {
            n = 0;
            for (int i = 0; i < 3; ++i)
                n = (n << 6) | take();
        }
    }
    if (n < 1)
        throw parse_error("graph6 vertex count must be at least 1", 0);
    if (n > 1000000)
        throw parse_error("graph6 vertex count out of supported range", 0);

    const std::uint64_t nbits = n * (n - 1) / 2;
    const std::uint64_t nbytes = (nbits + 5) / 6;
    if (line.size() - pos < nbytes)
        throw parse_error("truncated graph6 bit data", line.size());
    if (line.size() - pos > nbytes)
        throw parse_error("trailing bytes after graph6 bit data", pos + nbytes);

    std::vector<Edge> edges;
    std::uint64_t bit_index = 0;
    int acc = 0;
    int acc_left = 0;
    for (int v = 1; v < static_cast<int>(n); ++v) {
        for (int u = 0; u < v; ++u) {
            if (acc_left == 0) {
                acc = static_cast<int>(take());
                acc_left = 6;
            }
            if (acc & (1 << (acc_left - 1)))
                edges.push_back({u, v});
            --acc_left;
            ++bit_index;
        }
    }
    if (acc_left > 0 && (acc & ((1 << acc_left) - 1)) != 0)
        throw parse_error("nonzero graph6 padding bits", pos - 1);
    (void)bit_index;
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g)
{
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Low));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kG6High));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Low));
    } else {
        out.push_back(static_cast<char>(kG6High));
        out.push_back(static_cast<char>(kG6High));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Low));
    }
    int acc = 0;
    int nbits = 0;
    for (int v = 1; v < static_cast<int>(n); ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Low));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Low));
    return out;
}

namespace {

    struct LineScanner {
        std::string_view text;
        std::size_t pos = 0;
        std::size_t line_start = 0;

        std::optional<std::string_view> next()
        {
            while (pos < text.size()) {
                line_start = pos;
                std::size_t end = text.find('\n', pos);
                std::string_view line = (end == std::string_view::npos)
                    ? text.substr(pos)
                    : text.substr(pos, end - pos);
                pos = (end == std::string_view::npos) ? text.size() : end + 1;
                while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                    line.remove_suffix(1);
                if (!line.empty())
                    return line;
            }
            return std::nullopt;
        }
    };

    long parse_int_token(std::string_view tok, std::size_t offset, const char* what)
    {
        long value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw parse_error(std::string("invalid ") + what, offset);
        return value;
    }

    std::vector<std::string_view> split_ws(std::string_view line)
    {
        std::vector<std::string_view> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t')
                ++j;
            if (j > i)
                toks.push_back(line.substr(i, j - i));
            i = j;
        }
        return toks;
    }

} // namespace

Graph parse_dimacs(std::string_view text)
{
    LineScanner scan{text};
    std::optional<int> n;
    std::vector<Edge> edges;
    while (auto line = scan.next()) {
        auto toks = split_ws(*line);
        if (toks.empty() || toks[0] == "c")
            continue;
        if (toks[0] == "p") {
            if (n)
                throw parse_error("duplicate DIMACS problem line", scan.line_start);
            if (toks.size() != 4 || toks[1] != "edge")
                throw parse_error("malformed DIMACS problem line, expected \"p edge n m\"",
                    scan.line_start);
            long nv = parse_int_token(toks[2], scan.line_start, "vertex count");
            if (nv < 1)
                throw parse_error("DIMACS vertex count must be at least 1", scan.line_start);
            parse_int_token(toks[3], scan.line_start, "edge count");
            n = static_cast<int>(nv);
        } else if (toks[0] == "e") {
            if (!n)
                throw parse_error("DIMACS edge before problem line", scan.line_start);
            if (toks.size() != 3)
                throw parse_error("malformed DIMACS edge line", scan.line_start);
            long u = parse_int_token(toks[1], scan.line_start, "edge endpoint");
            long v = parse_int_token(toks[2], scan.line_start, "edge endpoint");
            if (u < 1 || v < 1 || u > *n || v > *n)
                throw parse_error("DIMACS edge endpoint out of range", scan.line_start);
            if (u == v)
                throw parse_error("DIMACS self-loop", scan.line_start);
            edges.push_back(make_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)));
        } else {
            throw parse_error("unrecognized DIMACS line", scan.line_start);
        }
    }
    if (!n)
        throw parse_error("missing DIMACS problem line", 0);
    return Graph(*n, std::move(edges));
}

Graph parse_edge_list(std::string_view text)
{
    LineScanner scan{text};
    auto header = scan.next();
    if (!header)
        throw parse_error("missing vertex count line", 0);
    auto head_toks = split_ws(*header);
    if (head_toks.size() != 1)
        throw parse_error("first line must contain only the vertex count", scan.line_start);
    long n = parse_int_token(head_toks[0], scan.line_start, "vertex count");
    if (n < 1)
        throw parse_error("vertex count must be at least 1", scan.line_start);

    std::vector<Edge> edges;
    while (auto line = scan.next()) {
        auto toks = split_ws(*line);
        if (toks.size() != 2)
            throw parse_error("expected \"u v\" edge line", scan.line_start);
        long u = parse_int_token(toks[0], scan.line_start, "edge endpoint");
        long v = parse_int_token(toks[1], scan.line_start, "edge endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("edge endpoint out of range", scan.line_start);
        if (u == v)
            throw parse_error("self-loop", scan.line_start);
        edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::vector<std::uint64_t> parse_weights(std::string_view text, int n)
{
    std::vector<std::uint64_t> weights(n, 1);
    std::vector<char> seen(n, 0);
    LineScanner scan{text};
    while (auto line = scan.next()) {
        auto toks = split_ws(*line);
        if (toks.size() != 2)
            throw parse_error("expected \"v w\" weight line", scan.line_start);
        long v = parse_int_token(toks[0], scan.line_start, "vertex id");
        if (v < 0 || v >= n)
            throw parse_error("weight vertex id out of range", scan.line_start);
        if (seen[v])
            throw parse_error("duplicate weight entry", scan.line_start);
        std::uint64_t w = 0;
        auto tok = toks[1];
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw parse_error("invalid weight value", scan.line_start);
        weights[v] = w;
        seen[v] = 1;
    }
    return weights;
}

WeightedGraph parse_json_graph(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    try {
        int n = doc.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& pair : doc.at("edges")) {
            if (!pair.is_array() || pair.size() != 2)
                throw error("each edge must be a pair [u, v]");
            edges.push_back(make_edge(pair[0].get<int>(), pair[1].get<int>()));
        }
        Graph g(n, std::move(edges));
        std::vector<std::uint64_t> weights(n, 1);
        if (doc.contains("weights"))
            weights = doc.at("weights").get<std::vector<std::uint64_t>>();
        return WeightedGraph(std::move(g), std::move(weights));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad graph JSON: ") + e.what(), 0);
    }
}

std::optional<GraphFormat> format_from_extension(std::string_view path)
{
    auto dot = path.rfind('.');
    if (dot == std::string_view::npos)
        return std::nullopt;
    std::string ext(path.substr(dot + 1));
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    if (ext == "g6" || ext == "graph6")
        return GraphFormat::graph6;
    if (ext == "col" || ext == "dimacs" || ext == "clq")
        return GraphFormat::dimacs;
    if (ext == "txt" || ext == "el" || ext == "edges")
        return GraphFormat::edge_list;
    if (ext == "json")
        return GraphFormat::json;
    return std::nullopt;
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
    switch (format) {
    case GraphFormat::graph6: {
        // first non-empty line
        LineScanner scan{text};
        auto line = scan.next();
        if (!line)
            throw parse_error("empty graph6 input", 0);
        return parse_graph6(*line);
    }
    case GraphFormat::dimacs:
        return parse_dimacs(text);
    case GraphFormat::edge_list:
        return parse_edge_list(text);
    case GraphFormat::json:
        return parse_json_graph(text).graph;
    }
    throw error("unknown graph format");
}

} // namespace avo
