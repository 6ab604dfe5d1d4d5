#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wicketlab/eisenstein.hpp"
#include "wicketlab/error.hpp"

namespace wicketlab {

// Set files: one integer, or one "a,b" Eisenstein pair, per line.
// Blank lines and '#' lines are skipped; duplicates are rejected.

namespace detail {

inline std::string_view trimmed(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r");
    return std::string_view(line).substr(first, last - first + 1);
}

inline bool parse_int(std::string_view text, std::int64_t& out) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) return false;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

template <class T, class Parse>
std::vector<T> read_lines(std::istream& in, Parse parse) {
    std::vector<T> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = trimmed(line);
        if (body.empty() || body.front() == '#') continue;
        out.push_back(parse(body, lineno));
    }
    auto sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParseError(0, "duplicate element in set");
    return out;
}

}  // namespace detail

inline std::vector<std::int64_t> read_int_set(std::istream& in) {
    return detail::read_lines<std::int64_t>(in, [](std::string_view body, std::size_t lineno) {
        std::int64_t v = 0;
        if (!detail::parse_int(body, v)) throw ParseError(lineno, "expected an integer, got '" + std::string(body) + "'");
        return v;
    });
}

inline std::vector<EisensteinPoint> read_point_set(std::istream& in) {
    return detail::read_lines<EisensteinPoint>(in, [](std::string_view body, std::size_t lineno) {
        const auto comma = body.find(',');
        EisensteinPoint p;
        if (comma == std::string_view::npos || !detail::parse_int(body.substr(0, comma), p.a) ||
            !detail::parse_int(body.substr(comma + 1), p.b))
            throw ParseError(lineno, "expected a pair 'a,b', got '" + std::string(body) + "'");
        return p;
    });
}

inline void write_int_set(std::ostream& out, const std::vector<std::int64_t>& set) {
    for (auto v : set) out << v << '\n';
}

inline void write_point_set(std::ostream& out, const std::vector<EisensteinPoint>& set) {
    for (const auto& p : set) out << p.to_string() << '\n';
}

}  // namespace wicketlab
