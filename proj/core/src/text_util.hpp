#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sbalg::detail {

struct Token {
    std::string text;
    std::size_t column = 0;  // 1-based
};

// Splits on whitespace after stripping a '#' comment.
inline std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#')
            break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
            ++i;
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

// Calls fn(line_number, tokens) for every non-blank line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        ++line_no;
        auto toks = tokenize(text.substr(pos, end - pos));
        if (!toks.empty())
            fn(line_no, toks);
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
}

}  // namespace sbalg::detail
