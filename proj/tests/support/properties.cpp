#include "properties.hpp"

#include "oracles.hpp"

#include "sbalg/module_io.hpp"
#include "sbalg/paperlab.hpp"

#include <sstream>

namespace sbalg::testing {

namespace {

constexpr std::size_t kBudget = 12;
constexpr std::size_t kCutoff = 10;

template <Field K>
std::string field_name()
{
    return FieldTraits<K>::name();
}

// Records the first failing case with a short description.
struct Tally {
    PropertyResult& r;
    void check(bool ok, std::size_t i, const std::string& what)
    {
        if (ok)
            return;
        if (r.failures++ == 0)
            r.first_failure = "case " + std::to_string(i) + ": " + what;
    }
};

template <Field K>
bool is_zero_map(const ModuleMap<K>& f)
{
    for (const auto& m : f.mats)
        if (!m.is_zero())
            return false;
    return true;
}

}  // namespace

std::string PropertyResult::summary() const
{
    std::ostringstream out;
    out << name << " [" << field << "] " << (cases - failures) << "/" << cases;
    if (skipped)
        out << " (" << skipped << " inconclusive)";
    if (failures)
        out << " first failure: " << first_failure;
    return out.str();
}

template <Field K>
PropertyResult cover_minimality(std::size_t cases, std::uint64_t seed)
{
    PropertyResult r{"cover minimality", field_name<K>()};
    Tally t{r};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
        const auto m = random_family_module<K>(rng, kBudget);
        const auto c = projective_cover(m);
        const auto top = top_dims(*m);
        t.check(top_dims(*c.cover) == top, i, "top of cover differs from top of M");
        std::size_t generators = 0;
        for (auto d : top)
            generators += d;
        t.check(c.generators.size() == generators, i, "generator count is not dim top M");
        bool onto = true;
        for (std::size_t v = 0; v < m->dims().size(); ++v)
            onto = onto && rank(c.cover_map.mats[v]) == m->dim(v);
        t.check(onto && check_morphism(c.cover_map).ok, i, "cover map not a surjective morphism");
        bool mono = true;
        for (std::size_t v = 0; v < m->dims().size(); ++v)
            mono = mono && rank(c.inclusion.mats[v]) == c.syzygy->dim(v);
        t.check(mono && check_morphism(c.inclusion).ok, i, "syzygy inclusion not injective");
        t.check(is_zero_map(compose(c.cover_map, c.inclusion)), i, "cover map does not kill the syzygy");
    }
    return r;
}

template <Field K>
PropertyResult syzygy_exactness(std::size_t cases, std::uint64_t seed)
{
    PropertyResult r{"syzygy exactness", field_name<K>()};
    Tally t{r};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
        const auto m = random_family_module<K>(rng, kBudget);
        const auto c = projective_cover(m);
        bool ok = true;
        for (std::size_t v = 0; v < m->dims().size(); ++v)
            ok = ok && m->dim(v) + c.syzygy->dim(v) == c.cover->dim(v);
        t.check(ok, i, "dims M != dims P - dims Omega");
        // The standalone syzygy agrees with the one in the cover data.
        t.check(syzygy(m)->dims() == c.syzygy->dims(), i, "syzygy() disagrees with projective_cover()");
    }
    return r;
}

template <Field K>
PropertyResult pd_additivity(std::size_t cases, std::uint64_t seed)
{
    PropertyResult r{"pd additivity", field_name<K>()};
    Tally t{r};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
        const auto alg = random_family_algebra(rng);
        const auto a = random_module_over<K>(alg, rng, kBudget / 2);
        const auto b = random_module_over<K>(alg, rng, kBudget / 2);
        const auto sum = scramble(direct_sum_module(alg, std::vector<RepPtr<K>>{a, b}), rng());
        const auto pa = pd_value(projdim(a, kCutoff));
        const auto pb = pd_value(projdim(b, kCutoff));
        const auto ps = pd_value(projdim(sum, kCutoff));
        using Kind = PdValue::Kind;
        if (pa.kind == Kind::Inconclusive || pb.kind == Kind::Inconclusive || ps.kind == Kind::Inconclusive) {
            ++r.skipped;
            continue;
        }
        t.check(ps == pd_max(pa, pb), i, "pd(A + B) != max(pd A, pd B) on " + alg->name());
    }
    return r;
}

template <Field K>
PropertyResult linear_algebra_laws(std::size_t cases, std::uint64_t seed)
{
    PropertyResult r{"rref/kernel laws", field_name<K>()};
    Tally t{r};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(0, 7);
    auto random_matrix = [&](std::size_t rows, std::size_t cols) {
        Matrix<K> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = FieldTraits<K>::random(rng);
        return m;
    };
    for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
        const auto rows = size(rng), cols = size(rng), inner = size(rng);
        // Product of two random factors, so low ranks are common.
        const auto a = random_matrix(rows, inner) * random_matrix(inner, cols);
        const auto rk = rank(a);
        const auto ker = kernel_basis(a);
        t.check(ker.cols() + rk == cols, i, "rank + nullity != cols");
        t.check((a * ker).is_zero(), i, "A * ker A != 0");
        t.check(rank(ker) == ker.cols(), i, "kernel basis not independent");
        t.check(rank(a.transpose()) == rk, i, "row rank != column rank");
        t.check(column_space_basis(a).cols() == rk, i, "column space basis has wrong size");
        const auto once = rref(a);
        t.check(rref(once.matrix).matrix == once.matrix, i, "rref not idempotent");
        t.check(once.rank() == rk, i, "rref pivot count != rank");
        const auto x = random_matrix(cols, 1);
        const auto y = solve(a, a * x);
        t.check(y && a * *y == a * x, i, "solve failed on a consistent system");
        const auto g = random_invertible<K>(rows, rng);
        const auto gi = inverse(g);
        t.check(gi && *gi * g == Matrix<K>::identity(rows), i, "inverse of unit-triangular product");
        t.check(rank(g * a) == rk, i, "rank not invariant under row operations");
    }
    return r;
}

template <Field K>
PropertyResult round_trip(std::size_t cases, std::uint64_t seed)
{
    PropertyResult r{"round-trip parsing", field_name<K>()};
    Tally t{r};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
        const auto m = random_family_module<K>(rng, kBudget);
        const auto& p = m->presentation();
        t.check(parse_presentation(emit_presentation(p)) == p, i, "presentation round trip on " + p.name());
        const auto text = emit_module("M", *m);
        const auto back = parse_modules<K>(text);
        t.check(*back.main() == *m, i, "module round trip:\n" + text);
        t.check(emit_module("M", *back.main()) == text, i, "emitted text not stable");
    }
    return r;
}

PropertyResult field_independence(std::size_t cases, std::uint64_t seed, std::uint32_t prime)
{
    PropertyResult r{"field independence", "q vs fp:" + std::to_string(prime)};
    Tally t{r};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
        const auto alg = random_family_algebra(rng);
        const auto state = rng;
        auto rq = state;
        const auto mq = random_string_sum<Rational>(alg, rq, kBudget);
        const auto pq = projdim(mq, kCutoff);
        ModulusScope scope(prime);
        auto rp = state;
        const auto mp = random_string_sum<ModP>(alg, rp, kBudget);
        const auto pp = projdim(mp, kCutoff);
        rng = rq;
        t.check(mq->dims() == mp->dims(), i, "inputs differ");
        t.check(pd_value(pq) == pd_value(pp), i,
                "verdicts " + pq.verdict_string() + " vs " + pp.verdict_string() + " on " + alg->name());
        t.check(pq.chain == pp.chain, i, "syzygy dimension chains differ on " + alg->name());
    }
    return r;
}

std::vector<PropertyResult> run_all_properties(std::size_t cases, std::uint64_t seed, std::uint32_t prime)
{
    std::vector<PropertyResult> out;
    auto per_field = [&]<class K>() {
        out.push_back(cover_minimality<K>(cases, seed));
        out.push_back(syzygy_exactness<K>(cases, seed + 1));
        out.push_back(pd_additivity<K>(cases, seed + 2));
        out.push_back(linear_algebra_laws<K>(cases, seed + 3));
        out.push_back(round_trip<K>(cases, seed + 4));
    };
    per_field.template operator()<Rational>();
    {
        ModulusScope scope(prime);
        per_field.template operator()<ModP>();
    }
    out.push_back(field_independence(cases, seed + 5, prime));
    return out;
}

#define SBALG_PROPERTY_INSTANTIATE(K)                                              \
    template PropertyResult cover_minimality<K>(std::size_t, std::uint64_t);       \
    template PropertyResult syzygy_exactness<K>(std::size_t, std::uint64_t);       \
    template PropertyResult pd_additivity<K>(std::size_t, std::uint64_t);          \
    template PropertyResult linear_algebra_laws<K>(std::size_t, std::uint64_t);    \
    template PropertyResult round_trip<K>(std::size_t, std::uint64_t);

SBALG_PROPERTY_INSTANTIATE(Rational)
SBALG_PROPERTY_INSTANTIATE(ModP)

}  // namespace sbalg::testing
