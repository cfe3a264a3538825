#pragma once

// Line-oriented helpers shared by the '|'-delimited loaders.

#include <charconv>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace coincidence::text {

inline std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline bool skippable(std::string_view line) {
    line = trim(line);
    return line.empty() || line.front() == '#';
}

template <class T = std::uint64_t>
std::optional<T> parse_unsigned(std::string_view s) {
    s = trim(s);
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace coincidence::text
