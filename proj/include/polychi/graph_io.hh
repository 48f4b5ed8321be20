/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_GRAPH_IO_HH
#define POLYCHI_GUARD_GRAPH_IO_HH 1

#include <polychi/graph.hh>

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polychi
{
    /// A malformed graph6 or edge-list input. offset() is the byte offset of
    /// the first offending character (for edge lists, the line number).
    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & message, std::size_t offset) :
                std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
                _offset(offset)
            {
            }

            auto offset() const -> std::size_t { return _offset; }

        private:
            std::size_t _offset;
    };

    /// Decodes one graph6 string (short, 4-byte and 8-byte size forms). An
    /// optional ">>graph6<<" header and trailing newline are accepted.
    /// Padding bits in the last byte are ignored.
    auto parse_graph6(std::string_view text) -> Graph;

    /// Canonical graph6 encoding: zero padding, shortest size form.
    auto serialize_graph6(const Graph & g) -> std::string;

    /// Plain edge list: a first line "n <count>", then one "u v" pair per
    /// line with 0-based ids. Blank lines and '#' comments are skipped.
    auto parse_edge_list(std::string_view text) -> Graph;
    auto serialize_edge_list(const Graph & g) -> std::string;

    /// Reads a single graph, auto-detecting the edge-list format by its
    /// leading "n" line and otherwise expecting graph6.
    auto read_graph_file(const std::filesystem::path & path) -> Graph;

    /// Reads every graph6 line of a corpus file; blank lines are skipped.
    auto read_graph6_file(const std::filesystem::path & path) -> std::vector<Graph>;
}

#endif
