/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_SRC_TEXT_HH
#define POLYCHI_GUARD_SRC_TEXT_HH 1

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Small parsing helpers shared by the spec-string front ends.
namespace polychi
{
    inline auto split_kind(std::string_view spec) -> std::pair<std::string_view, std::string_view>
    {
        auto colon = spec.find(':');
        if (colon == std::string_view::npos)
            return { spec, {} };
        return { spec.substr(0, colon), spec.substr(colon + 1) };
    }

    inline auto split_list(std::string_view text, char sep = ',') -> std::vector<std::string_view>
    {
        std::vector<std::string_view> out;
        if (text.empty())
            return out;
        std::size_t start = 0;
        while (true) {
            auto at = text.find(sep, start);
            out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
            if (at == std::string_view::npos)
                break;
            start = at + 1;
        }
        return out;
    }

    template <typename T_>
    auto parse_number(std::string_view text) -> T_
    {
        T_ value{};
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || p != text.data() + text.size())
            throw std::invalid_argument("expected a number, got '" + std::string(text) + "'");
        return value;
    }

    inline auto parse_int(std::string_view text) -> int { return parse_number<int>(text); }
    inline auto parse_u64(std::string_view text) -> std::uint64_t { return parse_number<std::uint64_t>(text); }

    inline auto parse_double(std::string_view text) -> double
    {
        std::string copy(text);
        std::size_t used = 0;
        double value = std::stod(copy, &used);
        if (used != copy.size())
            throw std::invalid_argument("expected a number, got '" + copy + "'");
        return value;
    }

    inline auto parse_int_list(std::string_view text) -> std::vector<int>
    {
        std::vector<int> out;
        for (auto field : split_list(text))
            out.push_back(parse_int(field));
        return out;
    }
}

#endif
