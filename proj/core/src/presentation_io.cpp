#include "sbalg/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "text_util.hpp"

namespace sbalg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message)
{
}

namespace {

LetterClass parse_class(const detail::Token& t, std::size_t line)
{
    if (t.text == "alpha")
        return LetterClass::Alpha;
    if (t.text == "beta")
        return LetterClass::Beta;
    throw ParseError(line, t.column, "letter class must be alpha or beta, got '" + t.text + "'");
}

}  // namespace

Presentation parse_presentation(std::string_view text)
{
    std::string name;
    std::vector<std::string> vertices;
    std::set<std::string, std::less<>> vertex_set;
    std::vector<Arrow> arrows;
    std::map<std::string, Arrow, std::less<>> arrow_map;
    std::vector<Relation> relations;
    std::size_t last_line = 0;

    // Reads a composition "y x" (leftmost applied last) and returns it in
    // application order after checking names and composability.
    auto read_path = [&](const std::vector<detail::Token>& toks, std::size_t lo, std::size_t hi,
                         std::size_t line) {
        if (lo >= hi)
            throw ParseError(line, lo < toks.size() ? toks[lo].column : toks.back().column + 1,
                             "expected a path of arrow names");
        PathWord w;
        for (std::size_t k = hi; k-- > lo;) {
            const auto it = arrow_map.find(toks[k].text);
            if (it == arrow_map.end())
                throw ParseError(line, toks[k].column, "unknown arrow '" + toks[k].text + "'");
            if (!w.empty() && arrow_map.at(w.back()).target != it->second.source)
                throw ParseError(line, toks[k].column,
                                 "path is not composable: '" + toks[k].text + "' does not start where '" +
                                     w.back() + "' ends");
            w.push_back(toks[k].text);
        }
        return w;
    };

    detail::for_each_line(text, [&](std::size_t line, const std::vector<detail::Token>& toks) {
        last_line = line;
        const auto& kw = toks[0].text;
        if (name.empty() && kw != "algebra")
            throw ParseError(line, toks[0].column, "file must start with 'algebra <name>'");
        if (kw == "algebra") {
            if (!name.empty())
                throw ParseError(line, toks[0].column, "duplicate 'algebra' line");
            if (toks.size() != 2)
                throw ParseError(line, toks[0].column, "expected 'algebra <name>'");
            name = toks[1].text;
        } else if (kw == "vertex") {
            if (toks.size() != 2)
                throw ParseError(line, toks[0].column, "expected 'vertex <name>'");
            if (!vertex_set.insert(toks[1].text).second)
                throw ParseError(line, toks[1].column, "duplicate vertex '" + toks[1].text + "'");
            vertices.push_back(toks[1].text);
        } else if (kw == "arrow") {
            if (toks.size() != 7 || toks[2].text != ":" || toks[5].text != "->")
                throw ParseError(line, toks[0].column,
                                 "expected 'arrow <name> : <alpha|beta> <source> -> <target>'");
            Arrow a{toks[1].text, toks[4].text, toks[6].text, parse_class(toks[3], line)};
            if (!vertex_set.count(a.source))
                throw ParseError(line, toks[4].column, "unknown vertex '" + a.source + "'");
            if (!vertex_set.count(a.target))
                throw ParseError(line, toks[6].column, "unknown vertex '" + a.target + "'");
            if (!arrow_map.emplace(a.name, a).second)
                throw ParseError(line, toks[1].column, "duplicate arrow '" + a.name + "'");
            arrows.push_back(std::move(a));
        } else if (kw == "rel") {
            if (toks.size() < 3)
                throw ParseError(line, toks[0].column, "expected 'rel zero <path>' or 'rel eq <path> = <path>'");
            if (toks[1].text == "zero") {
                relations.push_back(Relation::zero(read_path(toks, 2, toks.size(), line)));
            } else if (toks[1].text == "eq") {
                const auto eq = std::find_if(toks.begin() + 2, toks.end(),
                                             [](const detail::Token& t) { return t.text == "="; });
                if (eq == toks.end())
                    throw ParseError(line, toks.back().column, "equality relation needs '='");
                const auto mid = static_cast<std::size_t>(eq - toks.begin());
                auto l = read_path(toks, 2, mid, line);
                auto r = read_path(toks, mid + 1, toks.size(), line);
                const auto& lf = arrow_map.at(l.front());
                const auto& rf = arrow_map.at(r.front());
                if (lf.source != rf.source || arrow_map.at(l.back()).target != arrow_map.at(r.back()).target)
                    throw ParseError(line, toks[mid].column, "the two sides are not parallel paths");
                relations.push_back(Relation::equal(std::move(l), std::move(r)));
            } else {
                throw ParseError(line, toks[1].column, "relation kind must be 'zero' or 'eq'");
            }
        } else {
            throw ParseError(line, toks[0].column, "unknown directive '" + kw + "'");
        }
    });

    if (name.empty())
        throw ParseError(last_line + 1, 1, "missing 'algebra <name>' line");
    try {
        return Presentation(std::move(name), std::move(vertices), std::move(arrows), std::move(relations));
    } catch (const PresentationError& e) {
        throw ParseError(last_line, 1, e.what());
    }
}

std::string emit_presentation(const Presentation& p)
{
    std::ostringstream os;
    auto write_path = [&](const PathWord& w) {
        for (std::size_t k = w.size(); k-- > 0;)
            os << ' ' << w[k];
    };
    os << "algebra " << p.name() << '\n';
    for (const auto& v : p.vertices())
        os << "vertex " << v << '\n';
    for (const auto& a : p.arrows())
        os << "arrow " << a.name << " : " << letter_class_name(a.letter) << ' ' << a.source << " -> " << a.target
           << '\n';
    for (const auto& r : p.relations()) {
        if (r.kind == Relation::Kind::Zero) {
            os << "rel zero";
            write_path(r.left);
        } else {
            os << "rel eq";
            write_path(r.left);
            os << " =";
            write_path(r.right);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace sbalg
