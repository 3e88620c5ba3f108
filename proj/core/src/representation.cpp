#include "sbalg/representation.hpp"

#include "sbalg/homology.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace sbalg {

std::string dims_to_string(const Presentation& p, const std::vector<std::size_t>& dims)
{
    std::string s = "{";
    bool first = true;
    for (std::size_t v = 0; v < dims.size(); ++v) {
        if (dims[v] == 0)
            continue;
        s += (first ? "" : ", ") + p.vertices()[v] + ":" + std::to_string(dims[v]);
        first = false;
    }
    return s + "}";
}

template <Field K>
Representation<K>::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix<K>> arrow_mats)
    : alg_(std::move(alg)), dims_(std::move(dims)), mats_(std::move(arrow_mats))
{
    if (!alg_)
        throw ModuleError("representation without an algebra");
    const auto& p = alg_->presentation();
    if (dims_.size() != p.vertex_count())
        throw ModuleError("expected " + std::to_string(p.vertex_count()) + " vertex dimensions, got " +
                          std::to_string(dims_.size()));
    if (mats_.size() != p.arrow_count())
        throw ModuleError("expected " + std::to_string(p.arrow_count()) + " arrow matrices, got " +
                          std::to_string(mats_.size()));
    for (auto d : dims_)
        total_ += d;
    for (std::size_t a = 0; a < mats_.size(); ++a) {
        const auto r = dims_[p.target(a)], c = dims_[p.source(a)];
        if (mats_[a].rows() != r || mats_[a].cols() != c)
            throw ModuleError("matrix of arrow '" + p.arrows()[a].name + "' is " + std::to_string(mats_[a].rows()) +
                              "x" + std::to_string(mats_[a].cols()) + ", expected " + std::to_string(r) + "x" +
                              std::to_string(c));
    }
    if (total_ == 0)
        return;
    for (const auto& rel : p.relations()) {
        const auto l = p.resolve(rel.left);
        const auto lm = path_matrix(l);
        if (rel.kind == Relation::Kind::Zero) {
            if (!lm.is_zero())
                throw ModuleError("zero relation violated on path " + [&] {
                    std::string s;
                    for (auto it = rel.left.rbegin(); it != rel.left.rend(); ++it)
                        s += (s.empty() ? "" : " ") + *it;
                    return s;
                }());
        } else if (lm != path_matrix(p.resolve(rel.right))) {
            throw ModuleError("equality relation violated between paths starting with '" + rel.left.front() +
                              "' and '" + rel.right.front() + "'");
        }
    }
}

template <Field K>
Representation<K> Representation<K>::zero(AlgebraPtr alg)
{
    const auto& p = alg->presentation();
    std::vector<Matrix<K>> mats(p.arrow_count());
    return Representation(std::move(alg), std::vector<std::size_t>(p.vertex_count(), 0), std::move(mats));
}

template <Field K>
Matrix<K> Representation<K>::path_matrix(std::span<const std::size_t> path) const
{
    const auto& p = presentation();
    if (path.empty())
        throw ModuleError("path_matrix of an empty path");
    Matrix<K> m = mats_[path[0]];
    for (std::size_t k = 1; k < path.size(); ++k) {
        if (p.target(path[k - 1]) != p.source(path[k]))
            throw ModuleError("path is not composable");
        m = mats_[path[k]] * m;
    }
    return m;
}

template <Field K>
MorphismCheck check_morphism(const ModuleMap<K>& f)
{
    const auto& m = *f.source;
    const auto& n = *f.target;
    const auto& p = m.presentation();
    if (!(m.algebra() == n.algebra() || p == n.presentation()))
        throw ModuleError("module map between modules over different algebras");
    if (f.mats.size() != p.vertex_count())
        throw ModuleError("module map has the wrong number of vertex matrices");
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
        if (f.mats[v].rows() != n.dim(v) || f.mats[v].cols() != m.dim(v))
            throw ModuleError("module map matrix at vertex '" + p.vertices()[v] + "' has the wrong shape");
    for (std::size_t a = 0; a < p.arrow_count(); ++a) {
        const auto x = p.source(a), y = p.target(a);
        if (m.dim(x) == 0 || n.dim(y) == 0)
            continue;
        if (f.mats[y] * m.arrow(a) != n.arrow(a) * f.mats[x])
            return {false, p.arrows()[a].name};
    }
    return {};
}

template <Field K>
ModuleMap<K> identity_map(const RepPtr<K>& m)
{
    ModuleMap<K> f{m, m, {}};
    for (auto d : m->dims())
        f.mats.push_back(Matrix<K>::identity(d));
    return f;
}

template <Field K>
ModuleMap<K> zero_map(const RepPtr<K>& source, const RepPtr<K>& target)
{
    ModuleMap<K> f{source, target, {}};
    for (std::size_t v = 0; v < source->dims().size(); ++v)
        f.mats.emplace_back(target->dim(v), source->dim(v));
    return f;
}

template <Field K>
ModuleMap<K> compose(const ModuleMap<K>& g, const ModuleMap<K>& f)
{
    ModuleMap<K> h{f.source, g.target, {}};
    for (std::size_t v = 0; v < f.mats.size(); ++v)
        h.mats.push_back(g.mats[v] * f.mats[v]);
    return h;
}

template <Field K>
bool is_isomorphism(const ModuleMap<K>& f)
{
    if (f.source->dims() != f.target->dims())
        return false;
    for (const auto& m : f.mats)
        if (rank(m) != m.rows())
            return false;
    return check_morphism(f).ok;
}

template <Field K>
std::optional<ModuleMap<K>> inverse_map(const ModuleMap<K>& f)
{
    ModuleMap<K> g{f.target, f.source, {}};
    for (const auto& m : f.mats) {
        auto inv = inverse(m);
        if (!inv)
            return std::nullopt;
        g.mats.push_back(std::move(*inv));
    }
    return g;
}

template <Field K>
ModuleMap<K> linear_combination(const std::vector<ModuleMap<K>>& maps, const std::vector<K>& coeffs,
                                const RepPtr<K>& source, const RepPtr<K>& target)
{
    auto out = zero_map(source, target);
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (is_zero(coeffs[i]))
            continue;
        for (std::size_t v = 0; v < out.mats.size(); ++v)
            out.mats[v] = out.mats[v] + maps[i].mats[v].scaled(coeffs[i]);
    }
    return out;
}

std::vector<std::string> walk_vertices(const Presentation& p, const StringWord& w)
{
    const auto base = p.find_vertex(w.base);
    if (!base)
        throw InvalidString("unknown base vertex '" + w.base + "'");
    std::vector<std::string> out{w.base};
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        const auto& l = w.letters[k];
        const auto a = p.find_arrow(l.arrow);
        if (!a)
            throw InvalidString("unknown arrow '" + l.arrow + "' in string");
        const auto& arr = p.arrows()[*a];
        const auto& from = l.inverse ? arr.target : arr.source;
        const auto& to = l.inverse ? arr.source : arr.target;
        if (from != out.back())
            throw InvalidString("letter " + std::to_string(k + 1) + " ('" + l.arrow + (l.inverse ? "^-1" : "^+1") +
                                "') is not composable: walk is at '" + out.back() + "'");
        if (k > 0 && w.letters[k - 1].arrow == l.arrow && w.letters[k - 1].inverse != l.inverse)
            throw InvalidString("letter " + std::to_string(k + 1) + " immediately backtracks along '" + l.arrow + "'");
        out.push_back(to);
    }
    return out;
}

template <Field K>
RepPtr<K> string_module(const AlgebraPtr& alg, const StringWord& w)
{
    const auto& p = alg->presentation();
    const auto verts = walk_vertices(p, w);
    const auto& basis = alg->basis();

    // Runs of consecutive letters of one direction must be nonzero paths.
    std::size_t k = 0;
    while (k < w.letters.size()) {
        std::size_t e = k;
        while (e < w.letters.size() && w.letters[e].inverse == w.letters[k].inverse)
            ++e;
        std::vector<std::size_t> run;
        for (std::size_t i = k; i < e; ++i)
            run.push_back(p.arrow_index(w.letters[i].arrow));
        if (w.letters[k].inverse)
            std::reverse(run.begin(), run.end());
        if (basis.class_of(run) == PathBasis::npos)
            throw InvalidString("letters " + std::to_string(k + 1) + ".." + std::to_string(e) +
                                " form a path that is zero in the algebra");
        k = e;
    }

    std::vector<std::size_t> dims(p.vertex_count(), 0);
    std::vector<std::size_t> local;
    std::vector<std::size_t> vidx;
    for (const auto& v : verts) {
        vidx.push_back(p.vertex_index(v));
        local.push_back(dims[vidx.back()]++);
    }
    std::vector<Matrix<K>> mats;
    for (std::size_t a = 0; a < p.arrow_count(); ++a)
        mats.emplace_back(dims[p.target(a)], dims[p.source(a)]);
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const auto a = p.arrow_index(w.letters[i].arrow);
        const auto s = w.letters[i].inverse ? i + 1 : i;
        const auto t = w.letters[i].inverse ? i : i + 1;
        mats[a](local[t], local[s]) = from_int<K>(1);
    }
    try {
        return make_rep(Representation<K>(alg, std::move(dims), std::move(mats)));
    } catch (const ModuleError& e) {
        throw InvalidString(std::string("string module violates the relations: ") + e.what());
    }
}

template <Field K>
RepPtr<K> projective(const AlgebraPtr& alg, std::size_t x)
{
    const auto& p = alg->presentation();
    const auto& basis = alg->basis();
    const auto& cls = basis.classes_from(x);
    std::vector<std::size_t> dims(p.vertex_count(), 0);
    std::vector<std::size_t> local(basis.dimension(), 0);
    for (auto c : cls)
        local[c] = dims[basis.at(c).target]++;
    std::vector<Matrix<K>> mats;
    for (std::size_t a = 0; a < p.arrow_count(); ++a)
        mats.emplace_back(dims[p.target(a)], dims[p.source(a)]);
    for (auto c : cls)
        for (auto a : p.arrows_from(basis.at(c).target)) {
            const auto d = basis.act(a, c);
            if (d != PathBasis::npos)
                mats[a](local[d], local[c]) = from_int<K>(1);
        }
    return make_rep(Representation<K>(alg, std::move(dims), std::move(mats)));
}

template <Field K>
RepPtr<K> projective(const AlgebraPtr& alg, std::string_view x)
{
    return projective<K>(alg, alg->presentation().vertex_index(x));
}

template <Field K>
RepPtr<K> simple(const AlgebraPtr& alg, std::string_view x)
{
    return string_module<K>(alg, StringWord{std::string(x), {}});
}

template <Field K>
ModuleMap<K> map_from_projective(const RepPtr<K>& px, std::size_t x, const RepPtr<K>& target, const Matrix<K>& m)
{
    const auto& alg = px->algebra();
    const auto& basis = alg->basis();
    const auto nv = alg->vertex_count();
    if (m.rows() != target->dim(x) || m.cols() != 1)
        throw ModuleError("generator vector has the wrong shape");
    ModuleMap<K> f = zero_map(px, target);
    std::vector<std::size_t> fill(nv, 0);
    for (auto c : basis.classes_from(x)) {
        const auto& cls = basis.at(c);
        const auto col = fill[cls.target]++;
        const Matrix<K> img = cls.path.empty() ? m : target->path_matrix(cls.path) * m;
        f.mats[cls.target].set_block(0, col, img);
    }
    return f;
}

template <Field K>
DirectSum<K> direct_sum(const AlgebraPtr& alg, const std::vector<RepPtr<K>>& parts)
{
    const auto& p = alg->presentation();
    const auto nv = p.vertex_count();
    for (const auto& m : parts)
        if (!(m->algebra() == alg || m->presentation() == p))
            throw ModuleError("direct sum of modules over different algebras");

    std::vector<std::size_t> dims(nv, 0);
    for (const auto& m : parts)
        for (std::size_t v = 0; v < nv; ++v)
            dims[v] += m->dim(v);
    std::vector<Matrix<K>> mats;
    for (std::size_t a = 0; a < p.arrow_count(); ++a) {
        std::vector<Matrix<K>> blocks;
        for (const auto& m : parts)
            blocks.push_back(m->arrow(a));
        mats.push_back(Matrix<K>::block_diagonal(blocks));
    }
    DirectSum<K> out;
    out.sum = make_rep(Representation<K>(alg, std::move(dims), std::move(mats)));
    std::vector<std::size_t> offset(nv, 0);
    for (const auto& m : parts) {
        ModuleMap<K> inj{m, out.sum, {}}, proj{out.sum, m, {}};
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix<K> i(out.sum->dim(v), m->dim(v));
            i.set_block(offset[v], 0, Matrix<K>::identity(m->dim(v)));
            proj.mats.push_back(i.transpose());
            inj.mats.push_back(std::move(i));
            offset[v] += m->dim(v);
        }
        out.injections.push_back(std::move(inj));
        out.projections.push_back(std::move(proj));
    }
    return out;
}

template <Field K>
RepPtr<K> direct_sum_module(const AlgebraPtr& alg, const std::vector<RepPtr<K>>& parts)
{
    if (parts.size() == 1)
        return parts[0];
    return direct_sum(alg, parts).sum;
}

template <Field K>
RepPtr<K> power(const RepPtr<K>& m, std::size_t n)
{
    return direct_sum_module(m->algebra(), std::vector<RepPtr<K>>(n, m));
}

template <Field K>
RepPtr<K> inflate(const RepPtr<K>& m, const AlgebraPtr& big)
{
    const auto& sp = m->presentation();
    const auto& bp = big->presentation();
    std::vector<std::size_t> dims(bp.vertex_count(), 0);
    for (std::size_t v = 0; v < sp.vertex_count(); ++v) {
        const auto bv = bp.find_vertex(sp.vertices()[v]);
        if (!bv)
            throw ModuleError("cannot inflate: vertex '" + sp.vertices()[v] + "' is missing from " + bp.name());
        dims[*bv] = m->dim(v);
    }
    std::vector<Matrix<K>> mats;
    for (std::size_t a = 0; a < bp.arrow_count(); ++a) {
        const auto& arr = bp.arrows()[a];
        const auto sa = sp.find_arrow(arr.name);
        if (sa) {
            const auto& small = sp.arrows()[*sa];
            if (small.source != arr.source || small.target != arr.target || small.letter != arr.letter)
                throw ModuleError("cannot inflate: arrow '" + arr.name + "' differs between the algebras");
            mats.push_back(m->arrow(*sa));
        } else {
            const auto s = sp.find_vertex(arr.source), t = sp.find_vertex(arr.target);
            if (s && t && m->dim(*s) > 0 && m->dim(*t) > 0)
                throw ModuleError("cannot inflate: arrow '" + arr.name + "' joins two vertices of " + sp.name());
            mats.emplace_back(dims[bp.target(a)], dims[bp.source(a)]);
        }
    }
    try {
        return make_rep(Representation<K>(big, std::move(dims), std::move(mats)));
    } catch (const ModuleError& e) {
        throw ModuleError(std::string("inflated module violates the relations of ") + bp.name() + ": " + e.what());
    }
}

template <Field K>
RepPtr<K> restrict_to(const RepPtr<K>& m, const AlgebraPtr& small, bool allow_truncation)
{
    const auto& bp = m->presentation();
    const auto& sp = small->presentation();
    std::vector<std::size_t> dims(sp.vertex_count(), 0);
    for (std::size_t v = 0; v < bp.vertex_count(); ++v) {
        const auto sv = sp.find_vertex(bp.vertices()[v]);
        if (sv)
            dims[*sv] = m->dim(v);
        else if (m->dim(v) > 0 && !allow_truncation)
            throw ModuleError("cannot restrict: module is nonzero at '" + bp.vertices()[v] + "'");
    }
    std::vector<Matrix<K>> mats;
    for (std::size_t a = 0; a < sp.arrow_count(); ++a) {
        const auto ba = bp.find_arrow(sp.arrows()[a].name);
        if (!ba)
            throw ModuleError("cannot restrict: arrow '" + sp.arrows()[a].name + "' is missing from " + bp.name());
        mats.push_back(m->arrow(*ba));
    }
    return make_rep(Representation<K>(small, std::move(dims), std::move(mats)));
}

template <Field K>
bool supported_on(const Representation<K>& m, const std::vector<std::string>& vertices)
{
    const std::set<std::string, std::less<>> allowed(vertices.begin(), vertices.end());
    const auto& p = m.presentation();
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
        if (m.dim(v) > 0 && !allowed.count(p.vertices()[v]))
            return false;
    return true;
}

template <Field K>
ModuleMap<K> change_basis(const RepPtr<K>& m, const std::vector<Matrix<K>>& b)
{
    const auto& p = m->presentation();
    std::vector<Matrix<K>> inv;
    for (std::size_t v = 0; v < b.size(); ++v) {
        auto i = inverse(b[v]);
        if (!i)
            throw ModuleError("basis change at '" + p.vertices()[v] + "' is not invertible");
        inv.push_back(std::move(*i));
    }
    std::vector<Matrix<K>> mats;
    for (std::size_t a = 0; a < p.arrow_count(); ++a)
        mats.push_back(inv[p.target(a)] * m->arrow(a) * b[p.source(a)]);
    auto nm = make_rep(Representation<K>(m->algebra(), m->dims(), std::move(mats)));
    return ModuleMap<K>{nm, m, b};
}

template <Field K>
RepPtr<K> random_module(const AlgebraPtr& alg, std::uint64_t seed, std::size_t budget)
{
    std::mt19937_64 rng(seed);
    const auto& p = alg->presentation();
    const auto& basis = alg->basis();
    const auto nv = p.vertex_count();
    if (budget == 0 || nv == 0)
        return make_rep(Representation<K>::zero(alg));

    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::bernoulli_distribution keep(0.5);

    // Top: projectives drawn until the budget would be exceeded.
    std::vector<std::size_t> tops;
    std::size_t total = 0;
    const std::size_t want = std::uniform_int_distribution<std::size_t>(1, budget)(rng);
    for (int attempt = 0; attempt < 64 && total < want; ++attempt) {
        const auto x = pick(rng);
        const auto d = basis.classes_from(x).size();
        if (total + d > budget)
            continue;
        tops.push_back(x);
        total += d;
    }
    if (tops.empty())
        return make_rep(Representation<K>::zero(alg));

    std::vector<RepPtr<K>> pparts;
    for (auto x : tops)
        pparts.push_back(projective<K>(alg, x));
    auto p0 = direct_sum_module(alg, pparts);

    // Relations: images of random elements of p0 at random vertices.
    std::vector<std::size_t> rel_vertices;
    const auto nrel = std::uniform_int_distribution<std::size_t>(0, tops.size() + 1)(rng);
    for (std::size_t i = 0; i < nrel; ++i) {
        const auto y = pick(rng);
        if (p0->dim(y) > 0)
            rel_vertices.push_back(y);
    }
    if (rel_vertices.empty())
        return p0;

    std::vector<RepPtr<K>> qparts;
    for (auto y : rel_vertices)
        qparts.push_back(projective<K>(alg, y));
    const auto ds = direct_sum(alg, qparts);
    auto f = zero_map(ds.sum, p0);
    for (std::size_t i = 0; i < rel_vertices.size(); ++i) {
        const auto y = rel_vertices[i];
        Matrix<K> vec(p0->dim(y), 1);
        for (std::size_t r = 0; r < vec.rows(); ++r)
            if (keep(rng))
                vec(r, 0) = from_int<K>(coeff(rng));
        const auto g = map_from_projective(qparts[i], y, p0, vec);
        const auto h = compose(g, ds.projections[i]);
        for (std::size_t v = 0; v < nv; ++v)
            f.mats[v] = f.mats[v] + h.mats[v];
    }
    return cokernel_of(f).module;
}

template <Field K>
std::string to_dot(const Representation<K>& m, const std::string& title)
{
    const auto& p = m.presentation();
    std::ostringstream os;
    os << "digraph \"" << title << "\" {\n  node [shape=plaintext];\n";
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
        for (std::size_t i = 0; i < m.dim(v); ++i)
            os << "  \"" << p.vertices()[v] << "_" << i << "\" [label=\"" << p.vertices()[v] << "\"];\n";
    for (std::size_t a = 0; a < p.arrow_count(); ++a) {
        const auto& arr = p.arrows()[a];
        const auto& mat = m.arrow(a);
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j) {
                if (is_zero(mat(i, j)))
                    continue;
                os << "  \"" << arr.source << "_" << j << "\" -> \"" << arr.target << "_" << i << "\" [style="
                   << (arr.letter == LetterClass::Alpha ? "solid" : "dashed");
                if (mat(i, j) != from_int<K>(1))
                    os << ", label=\"" << to_string(mat(i, j)) << "\"";
                os << "];\n";
            }
    }
    os << "}\n";
    return os.str();
}

#define SBALG_REP_INSTANTIATE(K)                                                                   \
    template class Representation<K>;                                                              \
    template MorphismCheck check_morphism(const ModuleMap<K>&);                                    \
    template ModuleMap<K> identity_map(const RepPtr<K>&);                                          \
    template ModuleMap<K> zero_map(const RepPtr<K>&, const RepPtr<K>&);                            \
    template ModuleMap<K> compose(const ModuleMap<K>&, const ModuleMap<K>&);                       \
    template bool is_isomorphism(const ModuleMap<K>&);                                             \
    template std::optional<ModuleMap<K>> inverse_map(const ModuleMap<K>&);                         \
    template ModuleMap<K> linear_combination(const std::vector<ModuleMap<K>>&, const std::vector<K>&, \
                                             const RepPtr<K>&, const RepPtr<K>&);                  \
    template RepPtr<K> string_module(const AlgebraPtr&, const StringWord&);                        \
    template RepPtr<K> projective(const AlgebraPtr&, std::size_t);                                 \
    template RepPtr<K> projective(const AlgebraPtr&, std::string_view);                            \
    template RepPtr<K> simple(const AlgebraPtr&, std::string_view);                                \
    template ModuleMap<K> map_from_projective(const RepPtr<K>&, std::size_t, const RepPtr<K>&,     \
                                              const Matrix<K>&);                                   \
    template DirectSum<K> direct_sum(const AlgebraPtr&, const std::vector<RepPtr<K>>&);            \
    template RepPtr<K> direct_sum_module(const AlgebraPtr&, const std::vector<RepPtr<K>>&);        \
    template RepPtr<K> power(const RepPtr<K>&, std::size_t);                                       \
    template RepPtr<K> inflate(const RepPtr<K>&, const AlgebraPtr&);                               \
    template RepPtr<K> restrict_to(const RepPtr<K>&, const AlgebraPtr&, bool);                     \
    template bool supported_on(const Representation<K>&, const std::vector<std::string>&);         \
    template ModuleMap<K> change_basis(const RepPtr<K>&, const std::vector<Matrix<K>>&);           \
    template RepPtr<K> random_module(const AlgebraPtr&, std::uint64_t, std::size_t);               \
    template std::string to_dot(const Representation<K>&, const std::string&);

SBALG_REP_INSTANTIATE(Rational)
SBALG_REP_INSTANTIATE(ModP)

}  // namespace sbalg
