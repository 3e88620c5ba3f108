#include "sbalg/presentation.hpp"

#include <algorithm>
#include <set>

namespace sbalg {

std::string_view letter_class_name(LetterClass c)
{
    return c == LetterClass::Alpha ? "alpha" : "beta";
}

namespace {

bool valid_name(std::string_view s)
{
    if (s.empty())
        return false;
    for (char ch : s) {
        const auto u = static_cast<unsigned char>(ch);
        if (u <= ' ' || ch == '#' || ch == '=' || ch == ':' || ch == '^')
            return false;
    }
    return s != "->";
}

}  // namespace

Presentation::Presentation(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                           std::vector<Relation> relations)
    : name_(std::move(name)), vertices_(std::move(vertices)), arrows_(std::move(arrows)),
      relations_(std::move(relations))
{
    if (!valid_name(name_))
        throw PresentationError("invalid algebra name '" + name_ + "'");

    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!valid_name(vertices_[i]))
            throw PresentationError("invalid vertex name '" + vertices_[i] + "'");
        if (i > 0 && vertices_[i] == vertices_[i - 1])
            throw PresentationError("duplicate vertex '" + vertices_[i] + "'");
        vertex_ids_.emplace(vertices_[i], i);
    }

    std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) { return a.name < b.name; });
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const auto& a = arrows_[i];
        if (!valid_name(a.name))
            throw PresentationError("invalid arrow name '" + a.name + "'");
        if (i > 0 && a.name == arrows_[i - 1].name)
            throw PresentationError("duplicate arrow '" + a.name + "'");
        if (vertex_ids_.count(a.name))
            throw PresentationError("arrow '" + a.name + "' shares its name with a vertex");
        const auto s = find_vertex(a.source);
        const auto t = find_vertex(a.target);
        if (!s)
            throw PresentationError("arrow '" + a.name + "' has unknown source '" + a.source + "'");
        if (!t)
            throw PresentationError("arrow '" + a.name + "' has unknown target '" + a.target + "'");
        arrow_ids_.emplace(a.name, i);
        src_.push_back(*s);
        tgt_.push_back(*t);
        out_[*s].push_back(i);
        in_[*t].push_back(i);
    }

    for (auto& rel : relations_) {
        if (rel.left.empty())
            throw PresentationError("relation with empty path");
        const auto l = resolve(rel.left);
        for (std::size_t k = 1; k < l.size(); ++k)
            if (tgt_[l[k - 1]] != src_[l[k]])
                throw PresentationError("relation path is not composable at '" + rel.left[k] + "'");
        if (rel.kind == Relation::Kind::Zero) {
            if (!rel.right.empty())
                throw PresentationError("zero relation with a right-hand side");
            continue;
        }
        if (rel.right.empty())
            throw PresentationError("equality relation with empty right-hand side");
        const auto r = resolve(rel.right);
        for (std::size_t k = 1; k < r.size(); ++k)
            if (tgt_[r[k - 1]] != src_[r[k]])
                throw PresentationError("relation path is not composable at '" + rel.right[k] + "'");
        if (src_[l.front()] != src_[r.front()] || tgt_[l.back()] != tgt_[r.back()])
            throw PresentationError("equality relation between non-parallel paths");
        if (rel.right < rel.left)
            std::swap(rel.left, rel.right);
    }
    std::sort(relations_.begin(), relations_.end());
    relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
}

std::optional<std::size_t> Presentation::find_vertex(std::string_view v) const
{
    const auto it = vertex_ids_.find(v);
    if (it == vertex_ids_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Presentation::find_arrow(std::string_view a) const
{
    const auto it = arrow_ids_.find(a);
    if (it == arrow_ids_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Presentation::vertex_index(std::string_view v) const
{
    if (auto i = find_vertex(v))
        return *i;
    throw PresentationError("unknown vertex '" + std::string(v) + "' in " + name_);
}

std::size_t Presentation::arrow_index(std::string_view a) const
{
    if (auto i = find_arrow(a))
        return *i;
    throw PresentationError("unknown arrow '" + std::string(a) + "' in " + name_);
}

std::vector<std::size_t> Presentation::resolve(const PathWord& w) const
{
    std::vector<std::size_t> out;
    out.reserve(w.size());
    for (const auto& a : w)
        out.push_back(arrow_index(a));
    return out;
}

bool Presentation::is_special_biserial() const
{
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        int out_a = 0, out_b = 0, in_a = 0, in_b = 0;
        for (auto a : out_[v])
            (arrows_[a].letter == LetterClass::Alpha ? out_a : out_b)++;
        for (auto a : in_[v])
            (arrows_[a].letter == LetterClass::Alpha ? in_a : in_b)++;
        if (out_a > 1 || out_b > 1 || in_a > 1 || in_b > 1)
            return false;
    }
    std::set<PathWord> zeros;
    for (const auto& rel : relations_)
        if (rel.kind == Relation::Kind::Zero)
            zeros.insert(rel.left);
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        for (auto b : out_[tgt_[a]])
            if (arrows_[a].letter != arrows_[b].letter && !zeros.count({arrows_[a].name, arrows_[b].name}))
                return false;
    return true;
}

PresentationBuilder& PresentationBuilder::vertex(std::string v)
{
    vertices_.push_back(std::move(v));
    return *this;
}

PresentationBuilder& PresentationBuilder::arrow(std::string name, LetterClass c, std::string src, std::string tgt)
{
    arrows_.push_back({std::move(name), std::move(src), std::move(tgt), c});
    return *this;
}

PresentationBuilder& PresentationBuilder::zero(PathWord p)
{
    relations_.push_back(Relation::zero(std::move(p)));
    return *this;
}

PresentationBuilder& PresentationBuilder::equal(PathWord p, PathWord q)
{
    relations_.push_back(Relation::equal(std::move(p), std::move(q)));
    return *this;
}

Presentation PresentationBuilder::build() const
{
    return Presentation(name_, vertices_, arrows_, relations_);
}

Presentation full_subpresentation(const Presentation& p, const std::vector<std::string>& keep, std::string name)
{
    std::set<std::string, std::less<>> kept;
    for (const auto& v : keep) {
        p.vertex_index(v);
        kept.insert(v);
    }
    std::vector<Arrow> arrows;
    std::set<std::string, std::less<>> kept_arrows;
    for (const auto& a : p.arrows())
        if (kept.count(a.source) && kept.count(a.target)) {
            arrows.push_back(a);
            kept_arrows.insert(a.name);
        }
    auto survives = [&](const PathWord& w) {
        return std::all_of(w.begin(), w.end(), [&](const std::string& a) { return kept_arrows.count(a) > 0; });
    };
    std::vector<Relation> rels;
    for (const auto& rel : p.relations()) {
        const bool l = survives(rel.left);
        if (rel.kind == Relation::Kind::Zero) {
            if (l)
                rels.push_back(rel);
            continue;
        }
        const bool r = survives(rel.right);
        if (l && r)
            rels.push_back(rel);
        else if (l)
            rels.push_back(Relation::zero(rel.left));
        else if (r)
            rels.push_back(Relation::zero(rel.right));
    }
    return Presentation(std::move(name), std::vector<std::string>(kept.begin(), kept.end()), std::move(arrows),
                        std::move(rels));
}

Algebra::Algebra(Presentation p, std::size_t length_bound)
    : pres_(std::move(p)), basis_(build_path_basis(pres_, length_bound))
{
}

AlgebraPtr make_algebra(Presentation p, std::size_t length_bound)
{
    return std::make_shared<const Algebra>(std::move(p), length_bound);
}

}  // namespace sbalg
