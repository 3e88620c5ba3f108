#include "sbalg/decomp.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

namespace sbalg {

std::vector<std::string> path_order(const Presentation& p, const std::string& first)
{
    const auto n = p.vertex_count();
    if (n == 0)
        return {};
    std::vector<std::set<std::size_t>> adj(n);
    for (std::size_t a = 0; a < p.arrow_count(); ++a) {
        const auto s = p.source(a), t = p.target(a);
        if (s == t)
            throw PresentationError("not a path quiver: loop '" + p.arrows()[a].name + "'");
        if (!adj[s].insert(t).second)
            throw PresentationError("not a path quiver: several arrows join '" + p.vertices()[s] + "' and '" +
                                    p.vertices()[t] + "'");
        adj[t].insert(s);
    }
    if (p.arrow_count() != n - 1)
        throw PresentationError("not a path quiver: " + std::to_string(p.arrow_count()) + " arrows on " +
                                std::to_string(n) + " vertices");
    std::size_t start = n;
    if (!first.empty()) {
        start = p.vertex_index(first);
        if (adj[start].size() > 1)
            throw PresentationError("'" + first + "' is not an end of the path");
    } else {
        for (std::size_t v = 0; v < n && start == n; ++v)
            if (adj[v].size() <= 1)
                start = v;
    }
    if (start == n)
        throw PresentationError("not a path quiver: no end vertex");
    std::vector<std::string> out{p.vertices()[start]};
    std::size_t prev = n, cur = start;
    while (true) {
        if (adj[cur].size() > 2)
            throw PresentationError("not a path quiver: vertex '" + p.vertices()[cur] + "' has degree > 2");
        std::size_t next = n;
        for (auto w : adj[cur])
            if (w != prev)
                next = w;
        if (next == n)
            break;
        out.push_back(p.vertices()[next]);
        prev = cur;
        cur = next;
    }
    if (out.size() != n)
        throw PresentationError("not a path quiver: underlying graph is disconnected");
    return out;
}

namespace {

template <Field K>
struct Piece {
    std::size_t lo = 0;
    std::size_t hi = 0;
    long key = 0;
    bool alive = true;
    std::vector<Matrix<K>> vec;  // vec[t - lo]: column vector at path position t
};

template <Field K>
Matrix<K> unit(std::size_t n, std::size_t j)
{
    Matrix<K> e(n, 1);
    e(j, 0) = from_int<K>(1);
    return e;
}

// v_I += c v_J on the common support up to position k.
template <Field K>
void absorb(Piece<K>& target, const Piece<K>& source, const K& c, std::size_t k)
{
    for (std::size_t t = std::max(target.lo, source.lo); t <= k; ++t)
        target.vec[t - target.lo] = target.vec[t - target.lo] + source.vec[t - source.lo].scaled(c);
}

}  // namespace

// Birth keys: 0 at the first vertex, +k for intervals starting at position k
// after a forward arrow, -k after a backward arrow. A vector may absorb
// another one of smaller or equal key without breaking earlier arrows.
template <Field K>
IntervalDecomposition<K> interval_decompose(const RepPtr<K>& v, const std::string& first)
{
    const auto& p = v->presentation();
    IntervalDecomposition<K> out;
    out.order = path_order(p, first);
    const auto n = out.order.size();
    std::vector<std::size_t> vi;
    for (const auto& name : out.order)
        vi.push_back(p.vertex_index(name));

    std::vector<Piece<K>> pieces;
    auto alive_ids = [&] {
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (pieces[i].alive)
                ids.push_back(i);
        return ids;
    };
    if (n > 0)
        for (std::size_t j = 0; j < v->dim(vi[0]); ++j)
            pieces.push_back({0, 0, 0, true, {unit<K>(v->dim(vi[0]), j)}});

    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t arrow = p.arrow_count();
        for (auto a : p.arrows_from(vi[k]))
            if (p.target(a) == vi[k + 1])
                arrow = a;
        const bool forward = arrow != p.arrow_count();
        if (!forward)
            for (auto a : p.arrows_from(vi[k + 1]))
                if (p.target(a) == vi[k])
                    arrow = a;
        const auto& f = v->arrow(arrow);
        const auto dn = v->dim(vi[k + 1]);
        auto ids = alive_ids();

        if (forward) {
            std::stable_sort(ids.begin(), ids.end(), [&](auto a, auto b) { return pieces[a].key < pieces[b].key; });
            std::vector<std::size_t> accepted;
            Matrix<K> images(dn, 0);
            for (auto id : ids) {
                auto& piece = pieces[id];
                const auto w = f * piece.vec[k - piece.lo];
                const auto c = images.cols() > 0 ? solve(images, w) : (w.is_zero() ? std::optional{Matrix<K>(0, 1)}
                                                                                   : std::nullopt);
                if (!c) {
                    accepted.push_back(id);
                    images = Matrix<K>::hstack(images, w);
                    continue;
                }
                for (std::size_t j = 0; j < accepted.size(); ++j)
                    if (!is_zero((*c)(j, 0)))
                        absorb(piece, pieces[accepted[j]], K(-(*c)(j, 0)), k);
                piece.alive = false;
                piece.hi = k;
            }
            for (std::size_t j = 0; j < accepted.size(); ++j) {
                auto& piece = pieces[accepted[j]];
                piece.vec.push_back(images.column(j));
            }
            for (auto j : complement_indices(images))
                pieces.push_back({k + 1, 0, static_cast<long>(k + 1), true, {unit<K>(dn, j)}});
        } else {
            std::stable_sort(ids.begin(), ids.end(), [&](auto a, auto b) { return pieces[a].key > pieces[b].key; });
            const auto dk = v->dim(vi[k]);
            Matrix<K> basis(dk, 0);
            for (auto id : ids)
                basis = Matrix<K>::hstack(basis, pieces[id].vec[k - pieces[id].lo]);
            const auto img = column_space_basis(f);
            std::vector<bool> pivot(ids.size(), false);
            if (img.cols() > 0) {
                const auto coords = solve(basis, img);
                if (!coords)
                    throw std::logic_error("interval sweep lost a basis");
                const auto red = rref(coords->transpose());
                for (auto pc : red.pivots)
                    pivot[pc] = true;
                for (std::size_t row = 0; row < red.pivots.size(); ++row) {
                    auto& piece = pieces[ids[red.pivots[row]]];
                    for (std::size_t q = 0; q < ids.size(); ++q)
                        if (!pivot[q] && !is_zero(red.matrix(row, q)))
                            absorb(piece, pieces[ids[q]], red.matrix(row, q), k);
                }
            }
            for (std::size_t q = 0; q < ids.size(); ++q) {
                auto& piece = pieces[ids[q]];
                if (!pivot[q]) {
                    piece.alive = false;
                    piece.hi = k;
                    continue;
                }
                auto pre = solve(f, piece.vec[k - piece.lo]);
                if (!pre)
                    throw std::logic_error("interval sweep: vector left the image");
                piece.vec.push_back(std::move(*pre));
            }
            const auto ker = kernel_basis(f);
            for (std::size_t j = 0; j < ker.cols(); ++j)
                pieces.push_back({k + 1, 0, -static_cast<long>(k + 1), true, {ker.column(j)}});
        }
    }
    for (auto& piece : pieces)
        if (piece.alive)
            piece.hi = n - 1;

    out.basis.assign(p.vertex_count(), Matrix<K>());
    out.owner.assign(p.vertex_count(), {});
    for (std::size_t k = 0; k < n; ++k)
        out.basis[vi[k]] = Matrix<K>(v->dim(vi[k]), 0);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> mult;
    for (std::size_t id = 0; id < pieces.size(); ++id) {
        const auto& piece = pieces[id];
        out.pieces.emplace_back(piece.lo, piece.hi);
        ++mult[{piece.lo, piece.hi}];
        for (std::size_t t = piece.lo; t <= piece.hi; ++t) {
            out.basis[vi[t]] = Matrix<K>::hstack(out.basis[vi[t]], piece.vec[t - piece.lo]);
            out.owner[vi[t]].push_back(id);
        }
    }
    for (const auto& [range, count] : mult) {
        IntervalSummand s{range.first, range.second, count, {}};
        for (auto t = range.first; t <= range.second; ++t)
            s.vertices.push_back(out.order[t]);
        out.summands.push_back(std::move(s));
    }
    out.certificate = change_basis(v, out.basis);
    if (!verify_interval_decomposition(out, *v))
        throw CertificateFailure("interval decomposition failed its own verification");
    return out;
}

template <Field K>
bool verify_interval_decomposition(const IntervalDecomposition<K>& d, const Representation<K>& v)
{
    const auto& p = v.presentation();
    const auto& w = *d.certificate.source;
    std::size_t covered = 0;
    for (const auto& s : d.summands)
        covered += s.multiplicity * (s.hi - s.lo + 1);
    if (covered != v.total_dim())
        return false;
    if (!is_isomorphism(d.certificate) || d.certificate.target->dims() != v.dims())
        return false;
    for (std::size_t x = 0; x < p.vertex_count(); ++x)
        if (d.basis[x] != d.certificate.mats[x])
            return false;
    for (std::size_t a = 0; a < p.arrow_count(); ++a) {
        const auto& m = w.arrow(a);
        const auto& src = d.owner[p.source(a)];
        const auto& tgt = d.owner[p.target(a)];
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const K expect = from_int<K>(tgt[i] == src[j] ? 1 : 0);
                if (m(i, j) != expect)
                    return false;
            }
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

// Arrow between consecutive vertices of the U path and whether it points
// forward along d0, a1, a0, c1, c2, b1.
struct UEdge {
    const char* arrow;
    bool forward;
};
constexpr UEdge u_edges[5] = {
    {"alpha_a1", false}, {"beta_a1", true}, {"alpha_c1", false}, {"alpha_c2", false}, {"beta_c2", true},
};
constexpr std::size_t c2_pos = 4;

StringWord u_interval_word(std::size_t lo, std::size_t hi)
{
    const auto u = subquiver_u();
    StringWord w{u[lo], {}};
    for (auto k = lo; k < hi; ++k)
        w.letters.push_back({u_edges[k].arrow, !u_edges[k].forward});
    return w;
}

}  // namespace

std::vector<StringWord> xset_words()
{
    std::vector<StringWord> out;
    for (std::size_t hi : {std::size_t{5}, c2_pos})
        for (std::size_t lo = 0; lo <= c2_pos; ++lo)
            out.push_back(u_interval_word(lo, hi));
    return out;
}

int xset_index(std::size_t lo, std::size_t hi)
{
    if (lo > c2_pos || hi < c2_pos || hi > 5)
        return -1;
    return static_cast<int>((hi == 5 ? 0 : 5) + lo);
}

template <Field K>
std::vector<RepPtr<K>> xset(int r)
{
    const auto alg = lambda1prime_algebra(r);
    std::vector<RepPtr<K>> out;
    for (const auto& w : xset_words())
        out.push_back(string_module<K>(alg, w));
    return out;
}

template <Field K>
std::string map_checksum(const ModuleMap<K>& f)
{
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& m : f.mats) {
        feed(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
        feed(m.to_string());
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

template <Field K>
Matrix<K> vectorize(const ModuleMap<K>& f)
{
    std::size_t n = 0;
    for (const auto& m : f.mats)
        n += m.rows() * m.cols();
    Matrix<K> out(n, 1);
    std::size_t k = 0;
    for (const auto& m : f.mats)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                out(k++, 0) = m(i, j);
    return out;
}

// Map (+)_i parts_i -> target whose restriction to summand i is maps[i].
template <Field K>
ModuleMap<K> assemble(const DirectSum<K>& ds, const std::vector<ModuleMap<K>>& maps, const RepPtr<K>& target)
{
    auto out = zero_map(ds.sum, target);
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const auto g = compose(maps[i], ds.projections[i]);
        for (std::size_t v = 0; v < out.mats.size(); ++v)
            out.mats[v] = out.mats[v] + g.mats[v];
    }
    return out;
}

}  // namespace

template <Field K>
StripResult<K> strip_pc2(const RepPtr<K>& m)
{
    const auto& alg = m->algebra();
    const auto& p = alg->presentation();
    const auto c2 = p.vertex_index("c2");
    StripResult<K> res;

    std::vector<std::size_t> pivots;
    if (m->dim(c2) > 0) {
        const auto a3 = p.resolve({"alpha_c2", "alpha_c1", "alpha_a0"});
        const auto b2 = p.resolve({"beta_c2", "beta_b1"});
        pivots = rref(Matrix<K>::vstack(m->path_matrix(a3), m->path_matrix(b2))).pivots;
    }
    res.a = pivots.size();
    const auto pc2 = projective<K>(alg, c2);
    const auto pa = direct_sum(alg, std::vector<RepPtr<K>>(res.a, pc2));
    res.pc2_power = pa.sum;

    std::vector<ModuleMap<K>> gens;
    for (auto j : pivots)
        gens.push_back(map_from_projective(pc2, c2, m, unit<K>(m->dim(c2), j)));
    res.section = assemble(pa, gens, m);

    if (res.a == 0) {
        res.retraction = zero_map(m, pa.sum);
        res.complement = m;
        res.inclusion = identity_map(m);
    } else {
        // A retraction exists because P(c2) is injective; find one in Hom(M, P(c2)^a).
        const auto h = hom_basis(m, pa.sum);
        const auto target = vectorize(identity_map(pa.sum));
        Matrix<K> sys(target.rows(), 0);
        for (const auto& f : h.basis)
            sys = Matrix<K>::hstack(sys, vectorize(compose(f, res.section)));
        const auto coeff = h.dim() > 0 ? solve(sys, target) : std::nullopt;
        if (!coeff)
            throw CertificateFailure("no retraction onto the P(c2) summands");
        std::vector<K> cs;
        for (std::size_t k = 0; k < h.dim(); ++k)
            cs.push_back((*coeff)(k, 0));
        res.retraction = linear_combination(h.basis, cs, m, pa.sum);
        auto ker = kernel_of(res.retraction);
        res.complement = ker.module;
        res.inclusion = std::move(ker.inclusion);
    }

    const auto total = direct_sum(alg, std::vector<RepPtr<K>>{pa.sum, res.complement});
    res.certificate = assemble(total, {res.section, res.inclusion}, m);
    if (!is_isomorphism(res.certificate))
        throw CertificateFailure("P(c2) splitting is not an isomorphism");
    if (res.complement->dim(c2) > 0) {
        const auto& k = *res.complement;
        if (!k.path_matrix(p.resolve({"alpha_c2", "alpha_c1", "alpha_a0"})).is_zero() ||
            !k.path_matrix(p.resolve({"beta_c2", "beta_b1"})).is_zero())
            throw CertificateFailure("complement still has a P(c2) summand");
    }
    return res;
}

template <Field K>
std::string Lemma2Split<K>::to_json() const
{
    nlohmann::ordered_json j;
    j["x_multiplicity"] = x_multiplicity;
    j["a"] = a;
    const auto& p = input->presentation();
    nlohmann::ordered_json dims = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
        if (Mprime->dim(v) > 0)
            dims[p.vertices()[v]] = Mprime->dim(v);
    j["mprime_dims"] = dims;
    j["checksum"] = checksum;
    j["field"] = FieldTraits<K>::name();
    return j.dump();
}

template <Field K>
Lemma2Split<K> lemma2_split(const RepPtr<K>& m)
{
    const auto& alg = m->algebra();
    const auto& p = alg->presentation();
    const auto u = subquiver_u();
    std::vector<std::size_t> uidx;
    for (const auto& name : u)
        uidx.push_back(p.vertex_index(name));
    const auto c2 = uidx[c2_pos];

    Lemma2Split<K> res;
    res.input = m;
    auto strip = strip_pc2(m);
    res.a = strip.a;
    const auto& k = strip.complement;

    const auto ualg = make_algebra(full_subpresentation(p, u, p.name() + "_U"));
    const auto d = interval_decompose(restrict_to(k, ualg, true), "d0");

    // Basis change on the U vertices only.
    std::vector<Matrix<K>> basis;
    std::vector<std::vector<int>> piece_of(p.vertex_count());  // -1 outside U
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        basis.push_back(Matrix<K>::identity(k->dim(v)));
        piece_of[v].assign(k->dim(v), -1);
    }
    for (std::size_t t = 0; t < u.size(); ++t) {
        const auto uv = ualg->presentation().vertex_index(u[t]);
        basis[uidx[t]] = d.basis[uv];
        for (std::size_t j = 0; j < d.owner[uv].size(); ++j)
            piece_of[uidx[t]][j] = static_cast<int>(d.owner[uv][j]);
    }
    const auto cb = change_basis(k, basis);
    const auto& k2 = *cb.source;
    auto in_x = [&](std::size_t v, std::size_t j) {
        const int pc = piece_of[v][j];
        if (pc < 0)
            return false;
        const auto [lo, hi] = d.pieces[static_cast<std::size_t>(pc)];
        return lo <= c2_pos && c2_pos <= hi;
    };

    // X is a summand: no arrow links X coordinates with the rest.
    for (std::size_t a = 0; a < p.arrow_count(); ++a) {
        const auto s = p.source(a), t = p.target(a);
        const auto& mat = k2.arrow(a);
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j)
                if (in_x(t, i) != in_x(s, j) && !is_zero(mat(i, j)))
                    throw CertificateFailure("arrow '" + p.arrows()[a].name + "' mixes the X part with the rest");
    }

    auto x_cols = [&](std::size_t v) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < k2.dim(v); ++j)
            if (in_x(v, j))
                cols.push_back(j);
        return cols;
    };
    auto x_block = [&](const std::string& arrow) {
        const auto a = p.arrow_index(arrow);
        const auto rows = x_cols(p.target(a));
        const auto cols = x_cols(p.source(a));
        return k2.arrow(a).select_rows(rows).select_columns(cols);
    };
    for (const auto* arrow : {"alpha_c2", "alpha_c1", "alpha_a1", "beta_c2"}) {
        const auto b = x_block(arrow);
        if (rank(b) != b.rows())
            throw CertificateFailure(std::string("arrow ") + arrow + " is not surjective on the X part");
    }
    for (const auto* arrow : {"alpha_a0", "beta_b1", "beta_d0", "beta_a0", "beta_c1", "alpha_b1"}) {
        const auto a = p.arrow_index(arrow);
        if (!k2.arrow(a).select_columns(x_cols(p.source(a))).is_zero())
            throw CertificateFailure(std::string("arrow ") + arrow + " does not vanish on the X part");
    }

    // X pieces grouped by member of the ten, in order; remaining coordinates form M'.
    std::vector<std::vector<std::size_t>> member_pieces(10);
    for (std::size_t id = 0; id < d.pieces.size(); ++id) {
        const int idx = xset_index(d.pieces[id].first, d.pieces[id].second);
        if (idx >= 0)
            member_pieces[static_cast<std::size_t>(idx)].push_back(id);
    }
    const auto words = xset_words();
    std::vector<RepPtr<K>> parts;
    std::vector<std::size_t> part_piece;
    for (std::size_t i = 0; i < 10; ++i) {
        res.x_multiplicity[i] = member_pieces[i].size();
        if (member_pieces[i].empty())
            continue;
        const auto sm = string_module<K>(alg, words[i]);
        for (auto id : member_pieces[i]) {
            parts.push_back(sm);
            part_piece.push_back(id);
        }
    }
    res.X = direct_sum_module(alg, parts);
    if (parts.empty())
        res.X = make_rep(Representation<K>::zero(alg));

    std::vector<Matrix<K>> rest;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < k2.dim(v); ++j)
            if (!in_x(v, j))
                cols.push_back(j);
        rest.push_back(Matrix<K>::identity(k2.dim(v)).select_columns(cols));
    }
    auto mp = submodule_from_basis(cb.source, std::move(rest));
    res.Mprime = mp.module;
    if (res.Mprime->dim(c2) != 0)
        throw CertificateFailure("M' does not vanish at c2");

    // Certificate: X (+) P(c2)^a (+) M' -> M.
    const auto to_m = compose(strip.inclusion, cb);  // K2 -> M
    std::vector<RepPtr<K>> all = parts;
    all.push_back(strip.pc2_power);
    all.push_back(res.Mprime);
    const auto ds = direct_sum(alg, all);
    std::vector<ModuleMap<K>> maps;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        // Basis vector of the string at vertex v goes to the piece's column of K2.
        auto f = zero_map(parts[i], m);
        for (std::size_t v = 0; v < p.vertex_count(); ++v) {
            if (parts[i]->dim(v) == 0)
                continue;
            std::size_t col = k2.dim(v);
            for (std::size_t j = 0; j < k2.dim(v); ++j)
                if (piece_of[v][j] == static_cast<int>(part_piece[i]))
                    col = j;
            if (col == k2.dim(v))
                throw CertificateFailure("string and interval supports disagree");
            f.mats[v] = to_m.mats[v].column(col);
        }
        maps.push_back(std::move(f));
    }
    maps.push_back(strip.section);
    maps.push_back(compose(to_m, mp.inclusion));
    res.assembled = ds.sum;
    res.certificate = assemble(ds, maps, m);
    if (!is_isomorphism(res.certificate))
        throw CertificateFailure("assembled splitting is not an isomorphism");
    res.checksum = map_checksum(res.certificate);

    std::vector<std::string> lambda1;
    for (const auto& v : p.vertices())
        if (v != "c2")
            lambda1.push_back(v);
    if (!supported_on(*res.Mprime, lambda1))
        throw CertificateFailure("M' is not supported away from c2");
    return res;
}

#define SBALG_DECOMP_INSTANTIATE(K)                                                              \
    template IntervalDecomposition<K> interval_decompose(const RepPtr<K>&, const std::string&); \
    template bool verify_interval_decomposition(const IntervalDecomposition<K>&,                 \
                                                const Representation<K>&);                       \
    template std::vector<RepPtr<K>> xset<K>(int);                                                \
    template StripResult<K> strip_pc2(const RepPtr<K>&);                                         \
    template struct Lemma2Split<K>;                                                              \
    template Lemma2Split<K> lemma2_split(const RepPtr<K>&);                                      \
    template std::string map_checksum(const ModuleMap<K>&);

SBALG_DECOMP_INSTANTIATE(Rational)
SBALG_DECOMP_INSTANTIATE(ModP)

}  // namespace sbalg
