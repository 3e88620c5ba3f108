#include "sbalg/presentation.hpp"

#include <algorithm>
#include <numeric>

namespace sbalg {

BoundExceeded::BoundExceeded(PathWord path, std::size_t bound)
    : std::runtime_error([&] {
          std::string s = "path of length " + std::to_string(path.size()) + " survives the length bound " +
                          std::to_string(bound) + " (algebra possibly infinite-dimensional):";
          for (const auto& a : path)
              s += " " + a;
          return s;
      }()),
      path_(std::move(path))
{
}

std::vector<std::size_t> PathBasis::classes_between(std::size_t x, std::size_t y) const
{
    std::vector<std::size_t> out;
    for (auto c : from_[x])
        if (classes_[c].target == y)
            out.push_back(c);
    return out;
}

std::size_t PathBasis::class_of(const std::vector<std::size_t>& path) const
{
    const auto it = lookup_.find(path);
    return it == lookup_.end() ? npos : it->second;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool path_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

}  // namespace

// Monomial paths avoiding every zero relation are enumerated first; each
// equality p = q then glues u p v with u q v, and a class containing a path
// that becomes monomially zero after such a substitution is zero.
PathBasis build_path_basis(const Presentation& p, std::size_t length_bound)
{
    if (length_bound < 1)
        throw std::invalid_argument("length bound must be at least 1");
    const std::size_t nv = p.vertex_count();
    const std::size_t na = p.arrow_count();

    std::vector<std::vector<std::size_t>> zero_words;
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> eqs;
    for (const auto& rel : p.relations()) {
        if (rel.kind == Relation::Kind::Zero)
            zero_words.push_back(p.resolve(rel.left));
        else
            eqs.emplace_back(p.resolve(rel.left), p.resolve(rel.right));
    }

    struct Path {
        std::size_t source, target;
        std::vector<std::size_t> arrows;
    };
    std::vector<Path> paths;
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t x = 0; x < nv; ++x)
        paths.push_back({x, x, {}});

    auto has_zero_suffix = [&](const std::vector<std::size_t>& w) {
        for (const auto& z : zero_words)
            if (z.size() <= w.size() && std::equal(z.rbegin(), z.rend(), w.rbegin()))
                return true;
        return false;
    };

    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (!paths[i].arrows.empty())
            index.emplace(paths[i].arrows, i);
        for (auto a : p.arrows_from(paths[i].target)) {
            auto w = paths[i].arrows;
            w.push_back(a);
            if (has_zero_suffix(w))
                continue;
            if (w.size() >= length_bound) {
                PathWord names;
                for (auto k : w)
                    names.push_back(p.arrows()[k].name);
                throw BoundExceeded(std::move(names), length_bound);
            }
            paths.push_back({paths[i].source, p.target(a), std::move(w)});
        }
    }

    UnionFind uf(paths.size());
    std::vector<bool> zero(paths.size(), false);
    for (std::size_t i = nv; i < paths.size(); ++i) {
        const auto& w = paths[i].arrows;
        for (const auto& [l, r] : eqs)
            for (int side = 0; side < 2; ++side) {
                const auto& from = side == 0 ? l : r;
                const auto& to = side == 0 ? r : l;
                if (from.size() > w.size())
                    continue;
                for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
                    if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
                        continue;
                    std::vector<std::size_t> v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
                    v.insert(v.end(), to.begin(), to.end());
                    v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + from.size()), w.end());
                    const auto it = index.find(v);
                    if (it == index.end())
                        zero[i] = true;
                    else
                        uf.unite(i, it->second);
                }
            }
    }

    std::vector<bool> root_zero(paths.size(), false);
    std::vector<std::size_t> best(paths.size(), PathBasis::npos);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto root = uf.find(i);
        if (zero[i])
            root_zero[root] = true;
        if (best[root] == PathBasis::npos || path_less(paths[i].arrows, paths[best[root]].arrows))
            best[root] = i;
    }

    // Order: by source vertex, then representative (shortest, then lexicographic).
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (uf.find(i) == i && !root_zero[i])
            reps.push_back(best[i]);
    std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) {
        if (paths[a].source != paths[b].source)
            return paths[a].source < paths[b].source;
        return path_less(paths[a].arrows, paths[b].arrows);
    });

    PathBasis basis;
    basis.from_.assign(nv, {});
    std::vector<std::size_t> class_of_root(paths.size(), PathBasis::npos);
    for (auto rep : reps) {
        class_of_root[uf.find(rep)] = basis.classes_.size();
        basis.from_[paths[rep].source].push_back(basis.classes_.size());
        basis.classes_.push_back({paths[rep].source, paths[rep].target, paths[rep].arrows});
    }
    for (std::size_t i = nv; i < paths.size(); ++i)
        basis.lookup_.emplace(paths[i].arrows, class_of_root[uf.find(i)]);

    const std::size_t nc = basis.classes_.size();
    basis.act_.assign(na * nc, PathBasis::npos);
    for (std::size_t c = 0; c < nc; ++c) {
        const auto& cls = basis.classes_[c];
        for (auto a : p.arrows_from(cls.target)) {
            auto w = cls.path;
            w.push_back(a);
            basis.act_[a * nc + c] = basis.class_of(w);
        }
    }
    return basis;
}

}  // namespace sbalg
