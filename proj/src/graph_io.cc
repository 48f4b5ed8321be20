/* vim: set sw=4 sts=4 et : */

#include <polychi/graph_io.hh>

#include <charconv>
#include <fstream>
#include <sstream>

namespace polychi
{
    namespace
    {
        constexpr int bias = 63;
        constexpr std::string_view header = ">>graph6<<";

        auto sextet(std::string_view text, std::size_t pos, std::size_t base_offset) -> int
        {
            if (pos >= text.size())
                throw ParseError("truncated graph6 input", base_offset + pos);
            int c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw ParseError("graph6 byte " + std::to_string(c) + " out of range 63..126", base_offset + pos);
            return c - bias;
        }

        auto read_all(const std::filesystem::path & path) -> std::string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw std::runtime_error("cannot open " + path.string());
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }

    auto parse_graph6(std::string_view text) -> Graph
    {
        std::size_t skipped = 0;
        if (text.starts_with(header)) {
            text.remove_prefix(header.size());
            skipped = header.size();
        }
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        if (text.empty())
            throw ParseError("empty graph6 input", skipped);

        std::size_t pos = 0;
        long long n = 0;
        if (text[0] != 126) {
            n = sextet(text, 0, skipped);
            pos = 1;
        }
        else if (text.size() > 1 && text[1] == 126) {
            for (std::size_t i = 2 ; i < 8 ; ++i)
                n = (n << 6) | sextet(text, i, skipped);
            pos = 8;
        }
        else {
            for (std::size_t i = 1 ; i < 4 ; ++i)
                n = (n << 6) | sextet(text, i, skipped);
            pos = 4;
        }
        if (n > (1LL << 31) - 1)
            throw ParseError("graph6 vertex count " + std::to_string(n) + " too large", skipped);

        const long long bits = n * (n - 1) / 2;
        const long long need = (bits + 5) / 6;
        if (static_cast<long long>(text.size() - pos) < need)
            throw ParseError("truncated graph6 bit vector: expected " + std::to_string(need) + " bytes",
                    skipped + text.size());
        if (static_cast<long long>(text.size() - pos) > need)
            throw ParseError("trailing bytes after graph6 bit vector", skipped + pos + need);

        std::vector<Edge> edges;
        long long k = 0;
        for (int v = 1 ; v < n ; ++v)
            for (int u = 0 ; u < v ; ++u, ++k) {
                std::size_t at = pos + k / 6;
                int value = sextet(text, at, skipped);
                if ((value >> (5 - k % 6)) & 1)
                    edges.emplace_back(u, v);
            }
        // validate padding bytes are in range even when they carry no bits
        for (std::size_t at = pos ; at < text.size() ; ++at)
            sextet(text, at, skipped);

        return Graph(int(n), edges);
    }

    auto serialize_graph6(const Graph & g) -> std::string
    {
        const long long n = g.size();
        std::string out;
        if (n <= 62)
            out.push_back(char(n + bias));
        else if (n <= 258047) {
            out.push_back(char(126));
            for (int shift = 12 ; shift >= 0 ; shift -= 6)
                out.push_back(char(((n >> shift) & 63) + bias));
        }
        else {
            out.push_back(char(126));
            out.push_back(char(126));
            for (int shift = 30 ; shift >= 0 ; shift -= 6)
                out.push_back(char(((n >> shift) & 63) + bias));
        }

        int acc = 0, filled = 0;
        for (int v = 1 ; v < n ; ++v)
            for (int u = 0 ; u < v ; ++u) {
                acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(char(acc + bias));
                    acc = filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(char((acc << (6 - filled)) + bias));
        return out;
    }

    auto parse_edge_list(std::string_view text) -> Graph
    {
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t line_no = 0;
        int n = -1;
        std::vector<Edge> edges;

        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#') ; hash != std::string::npos)
                line.erase(hash);
            std::istringstream fields(line);
            std::string first;
            if (! (fields >> first))
                continue;

            if (n < 0) {
                long count = -1;
                if (first != "n" || ! (fields >> count) || count < 0)
                    throw ParseError("expected header line 'n <count>'", line_no);
                n = int(count);
                continue;
            }

            int u = 0, v = 0;
            auto [p, ec] = std::from_chars(first.data(), first.data() + first.size(), u);
            if (ec != std::errc() || p != first.data() + first.size() || ! (fields >> v))
                throw ParseError("expected edge 'u v'", line_no);
            std::string extra;
            if (fields >> extra)
                throw ParseError("unexpected trailing field '" + extra + "'", line_no);
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw ParseError("invalid edge " + std::to_string(u) + " " + std::to_string(v), line_no);
            edges.emplace_back(u, v);
        }
        if (n < 0)
            throw ParseError("empty edge list input", 0);
        return Graph(n, edges);
    }

    auto serialize_edge_list(const Graph & g) -> std::string
    {
        std::string out = "n " + std::to_string(g.size()) + "\n";
        for (auto [u, v] : g.edges())
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }

    auto read_graph_file(const std::filesystem::path & path) -> Graph
    {
        auto text = read_all(path);
        auto start = text.find_first_not_of(" \t\r\n");
        if (start != std::string::npos && text[start] == 'n' && start + 1 < text.size()
                && (text[start + 1] == ' ' || text[start + 1] == '\t'))
            return parse_edge_list(text);

        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (! line.empty() && line != "\r")
                return parse_graph6(line);
        throw ParseError("no graph in " + path.string(), 0);
    }

    auto read_graph6_file(const std::filesystem::path & path) -> std::vector<Graph>
    {
        auto text = read_all(path);
        std::istringstream in(text);
        std::string line;
        std::vector<Graph> result;
        while (std::getline(in, line)) {
            while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (! line.empty())
                result.push_back(parse_graph6(line));
        }
        return result;
    }
}
