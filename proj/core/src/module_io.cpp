#include "sbalg/module_io.hpp"

#include "text_util.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

namespace sbalg {

namespace {

std::optional<int> to_int(std::string_view s)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

AlgebraPtr family(const std::string& name, std::map<std::string, int> args)
{
    auto need = [&](const char* key) {
        const auto it = args.find(key);
        if (it == args.end())
            throw std::invalid_argument("algebra '" + name + "' needs " + key + "=");
        const int v = it->second;
        args.erase(it);
        return v;
    };
    AlgebraPtr alg;
    if (name == "lambda") {
        const int r = need("r");
        const int m = need("m");
        if (r < 1 || m < 0)
            throw std::invalid_argument("lambda needs r >= 1 and m >= 0");
        alg = lambda_algebra(r, m);
    } else if (name == "lambda1prime") {
        const int r = need("r");
        if (r < 1)
            throw std::invalid_argument("lambda1prime needs r >= 1");
        alg = lambda1prime_algebra(r);
    } else {
        throw std::invalid_argument("unknown algebra family '" + name + "'");
    }
    if (!args.empty())
        throw std::invalid_argument("unexpected parameter '" + args.begin()->first + "' for " + name);
    return alg;
}

}  // namespace

AlgebraPtr algebra_from_spec(std::string_view spec)
{
    const std::string s(spec);
    if (s.rfind("file:", 0) == 0) {
        std::ifstream in(s.substr(5));
        if (!in)
            throw std::invalid_argument("cannot read '" + s.substr(5) + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return make_algebra(parse_presentation(buf.str()));
    }
    static const std::regex lambda_name(R"(lambda_r(\d+)_m(\d+))");
    static const std::regex prime_name(R"(lambda1prime_r(\d+))");
    std::smatch mt;
    if (std::regex_match(s, mt, lambda_name))
        return family("lambda", {{"r", std::stoi(mt[1])}, {"m", std::stoi(mt[2])}});
    if (std::regex_match(s, mt, prime_name))
        return family("lambda1prime", {{"r", std::stoi(mt[1])}});

    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown algebra '" + s + "'");
    std::map<std::string, int> args;
    std::stringstream rest(s.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        const auto eq = item.find('=');
        const auto v = eq == std::string::npos ? std::nullopt : to_int(std::string_view(item).substr(eq + 1));
        if (!v)
            throw std::invalid_argument("bad algebra parameter '" + item + "'");
        args[item.substr(0, eq)] = *v;
    }
    return family(s.substr(0, colon), std::move(args));
}

template <Field K>
RepPtr<K> ModuleFile<K>::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return modules[i];
    return nullptr;
}

template <Field K>
ModuleFile<K> parse_modules(std::string_view text, AlgebraPtr algebra)
{
    using detail::Token;
    ModuleFile<K> out;
    out.algebra = algebra;
    const bool fixed = algebra != nullptr;

    struct Raw {
        std::size_t line = 0;
        std::vector<std::size_t> dims;
        std::map<std::size_t, Matrix<K>> mats;
    };
    std::optional<std::string> pending;  // module header without a body yet
    std::size_t pending_line = 0;
    std::optional<Raw> raw;

    auto fail = [](std::size_t line, std::size_t col, const std::string& msg) -> ParseError {
        return ParseError(line, col, msg);
    };
    auto finish = [&](RepPtr<K> m) {
        out.names.push_back(*pending);
        out.modules.push_back(std::move(m));
        pending.reset();
    };
    auto vertex = [&](const Token& t, std::size_t line) {
        const auto v = out.algebra->presentation().find_vertex(t.text);
        if (!v)
            throw fail(line, t.column, "unknown vertex '" + t.text + "'");
        return *v;
    };
    auto build = [&](std::size_t line, std::size_t col, auto&& fn) {
        try {
            finish(fn());
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw fail(line, col, e.what());
        }
    };

    detail::for_each_line(text, [&](std::size_t line, const std::vector<Token>& toks) {
        const auto& head = toks[0].text;
        if (raw) {
            const auto& p = out.algebra->presentation();
            if (head == "end") {
                std::vector<Matrix<K>> mats;
                for (std::size_t a = 0; a < p.arrow_count(); ++a) {
                    auto it = raw->mats.find(a);
                    mats.push_back(it != raw->mats.end() ? it->second
                                                          : Matrix<K>(raw->dims[p.target(a)], raw->dims[p.source(a)]));
                }
                const auto start = raw->line;
                auto dims = raw->dims;
                raw.reset();
                build(start, 1, [&] { return make_rep(Representation<K>(out.algebra, dims, mats)); });
            } else if (head == "dims") {
                if (!raw->mats.empty())
                    throw fail(line, toks[0].column, "dims must come before mat lines");
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    const auto eq = toks[i].text.find('=');
                    const auto n = eq == std::string::npos ? std::nullopt
                                                           : to_int(std::string_view(toks[i].text).substr(eq + 1));
                    if (!n || *n < 0)
                        throw fail(line, toks[i].column, "expected <vertex>=<dimension>");
                    const auto v = vertex({toks[i].text.substr(0, eq), toks[i].column}, line);
                    raw->dims[v] = static_cast<std::size_t>(*n);
                }
            } else if (head == "mat") {
                if (toks.size() < 4 || toks[3].text != ":")
                    throw fail(line, toks[0].column, "expected: mat <arrow> <rows>x<cols> : <entries>");
                const auto a = p.find_arrow(toks[1].text);
                if (!a)
                    throw fail(line, toks[1].column, "unknown arrow '" + toks[1].text + "'");
                const auto x = toks[2].text.find('x');
                const auto rows = x == std::string::npos ? std::nullopt
                                                         : to_int(std::string_view(toks[2].text).substr(0, x));
                const auto cols = x == std::string::npos ? std::nullopt
                                                         : to_int(std::string_view(toks[2].text).substr(x + 1));
                if (!rows || !cols || *rows < 0 || *cols < 0)
                    throw fail(line, toks[2].column, "bad shape '" + toks[2].text + "'");
                const auto nr = static_cast<std::size_t>(*rows), nc = static_cast<std::size_t>(*cols);
                if (nr != raw->dims[p.target(*a)] || nc != raw->dims[p.source(*a)])
                    throw fail(line, toks[2].column,
                               "shape " + toks[2].text + " does not match the dimensions at '" +
                                   p.arrows()[*a].source + "' and '" + p.arrows()[*a].target + "'");
                if (toks.size() - 4 != nr * nc)
                    throw fail(line, toks[0].column,
                               "expected " + std::to_string(nr * nc) + " entries, found " +
                                   std::to_string(toks.size() - 4));
                Matrix<K> mat(nr, nc);
                for (std::size_t k = 0; k < nr * nc; ++k) {
                    try {
                        mat(k / nc, k % nc) = FieldTraits<K>::parse(toks[4 + k].text);
                    } catch (const std::invalid_argument& e) {
                        throw fail(line, toks[4 + k].column, e.what());
                    }
                }
                if (!raw->mats.emplace(*a, std::move(mat)).second)
                    throw fail(line, toks[1].column, "arrow '" + toks[1].text + "' given twice");
            } else {
                throw fail(line, toks[0].column, "expected dims, mat or end inside raw");
            }
            return;
        }

        if (head == "module") {
            if (pending)
                throw fail(pending_line, 1, "module '" + *pending + "' has no body");
            if (toks.size() != 4 || toks[2].text != "over")
                throw fail(line, toks[0].column, "expected: module <name> over <algebra>");
            if (out.find(toks[1].text))
                throw fail(line, toks[1].column, "module '" + toks[1].text + "' defined twice");
            if (!fixed) {
                AlgebraPtr alg;
                try {
                    alg = algebra_from_spec(toks[3].text);
                } catch (const std::exception& e) {
                    throw fail(line, toks[3].column, e.what());
                }
                if (out.algebra && out.algebra != alg)
                    throw fail(line, toks[3].column, "all modules of a file must be over the same algebra");
                out.algebra = alg;
            }
            pending = toks[1].text;
            pending_line = line;
            return;
        }
        if (!pending)
            throw fail(line, toks[0].column, "'" + head + "' outside a module");
        if (head == "raw") {
            raw = Raw{line, std::vector<std::size_t>(out.algebra->vertex_count(), 0), {}};
        } else if (head == "proj") {
            if (toks.size() != 2)
                throw fail(line, toks[0].column, "expected: proj <vertex>");
            const auto v = vertex(toks[1], line);
            build(line, toks[1].column, [&] { return projective<K>(out.algebra, v); });
        } else if (head == "string") {
            if (toks.size() < 2)
                throw fail(line, toks[0].column, "expected: string <vertex> <letters>");
            vertex(toks[1], line);
            StringWord w{toks[1].text, {}};
            for (std::size_t i = 2; i < toks.size(); ++i) {
                const auto& t = toks[i].text;
                const auto caret = t.rfind('^');
                const auto e = caret == std::string::npos ? std::string() : t.substr(caret + 1);
                if (e != "+1" && e != "1" && e != "-1")
                    throw fail(line, toks[i].column, "expected <arrow>^+1 or <arrow>^-1, got '" + t + "'");
                const auto name = t.substr(0, caret);
                if (!out.algebra->presentation().find_arrow(name))
                    throw fail(line, toks[i].column, "unknown arrow '" + name + "'");
                w.letters.push_back({name, e == "-1"});
            }
            build(line, toks[1].column, [&] { return string_module<K>(out.algebra, w); });
        } else if (head == "sum") {
            std::vector<RepPtr<K>> parts;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                auto m = out.find(toks[i].text);
                if (!m)
                    throw fail(line, toks[i].column, "unknown module '" + toks[i].text + "'");
                parts.push_back(std::move(m));
            }
            build(line, toks[0].column, [&] {
                return parts.empty() ? make_rep(Representation<K>::zero(out.algebra))
                                     : direct_sum_module(out.algebra, parts);
            });
        } else {
            throw fail(line, toks[0].column, "unknown directive '" + head + "'");
        }
    });
    if (raw)
        throw fail(raw->line, 1, "raw block without end");
    if (pending)
        throw fail(pending_line, 1, "module '" + *pending + "' has no body");
    if (out.modules.empty())
        throw fail(1, 1, "no module in file");
    return out;
}

template <Field K>
std::string emit_module(std::string_view name, const Representation<K>& m)
{
    const auto& p = m.presentation();
    std::ostringstream out;
    out << "module " << name << " over " << p.name() << "\nraw\n";
    std::string dims;
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
        if (m.dim(v) > 0)
            dims += " " + p.vertices()[v] + "=" + std::to_string(m.dim(v));
    if (!dims.empty())
        out << "dims" << dims << '\n';
    for (std::size_t a = 0; a < p.arrow_count(); ++a) {
        const auto& mat = m.arrow(a);
        if (mat.rows() == 0 || mat.cols() == 0)
            continue;
        out << "mat " << p.arrows()[a].name << ' ' << mat.rows() << 'x' << mat.cols() << " :";
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j)
                out << ' ' << to_string(mat(i, j));
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

std::string emit_string_line(const StringWord& w)
{
    std::string s = "string " + w.base;
    for (const auto& l : w.letters)
        s += " " + l.arrow + (l.inverse ? "^-1" : "^+1");
    return s;
}

template struct ModuleFile<Rational>;
template struct ModuleFile<ModP>;
template ModuleFile<Rational> parse_modules<Rational>(std::string_view, AlgebraPtr);
template ModuleFile<ModP> parse_modules<ModP>(std::string_view, AlgebraPtr);
template std::string emit_module(std::string_view, const Representation<Rational>&);
template std::string emit_module(std::string_view, const Representation<ModP>&);

}  // namespace sbalg
