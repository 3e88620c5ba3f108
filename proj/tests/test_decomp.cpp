#include "support/oracles.hpp"

#include "sbalg/paperlab.hpp"

#include <gtest/gtest.h>

using namespace sbalg;

namespace {

template <class K>
class Decomp : public ::testing::Test {
protected:
    ModulusScope scope{101};
};

using Fields = ::testing::Types<Rational, ModP>;
TYPED_TEST_SUITE(Decomp, Fields);

AlgebraPtr u_algebra()
{
    return make_algebra(full_subpresentation(lambda1prime_presentation(1), subquiver_u(), "U"));
}

// Path quiver x0 - x1 - ... with random orientations and no relations.
AlgebraPtr random_zigzag(std::mt19937_64& rng, std::size_t n)
{
    PresentationBuilder b("zigzag");
    for (std::size_t i = 0; i < n; ++i)
        b.vertex("x" + std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto lo = "x" + std::to_string(i), hi = "x" + std::to_string(i + 1);
        const auto name = "e" + std::to_string(i);
        if (std::bernoulli_distribution(0.5)(rng))
            b.arrow(name, LetterClass::Alpha, lo, hi);
        else
            b.arrow(name, LetterClass::Alpha, hi, lo);
    }
    return make_algebra(b.build());
}

template <class K>
std::map<std::pair<std::size_t, std::size_t>, std::size_t> as_map(const IntervalDecomposition<K>& d)
{
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
    for (const auto& s : d.summands)
        out[{s.lo, s.hi}] += s.multiplicity;
    return out;
}

template <class K>
void expect_matches_rank_oracle(const RepPtr<K>& v)
{
    const auto d = interval_decompose(v);
    EXPECT_TRUE(verify_interval_decomposition(d, *v));
    EXPECT_TRUE(is_isomorphism(d.certificate));
    EXPECT_EQ(as_map(d), sbalg::testing::interval_multiplicities_by_ranks(*v, d.order));
    std::size_t total = 0;
    for (const auto& s : d.summands)
        total += s.multiplicity * (s.hi - s.lo + 1);
    EXPECT_EQ(total, v->total_dim());
}

}  // namespace

TEST(PathOrder, ListsUFromEndToEnd)
{
    const auto p = full_subpresentation(lambda1prime_presentation(1), subquiver_u(), "U");
    const auto order = path_order(p, "d0");
    EXPECT_EQ(order, subquiver_u());
    const auto reversed = path_order(p, "b1");
    EXPECT_EQ(std::vector<std::string>(reversed.rbegin(), reversed.rend()), order);
    EXPECT_THROW(path_order(lambda_presentation(1, 0)), PresentationError);
}

TYPED_TEST(Decomp, ZeroAndTrivialCases)
{
    const auto u = u_algebra();
    EXPECT_TRUE(interval_decompose(make_rep(Representation<TypeParam>::zero(u))).summands.empty());

    PresentationBuilder b("A2");
    b.vertex("x").vertex("y").arrow("alpha_x", LetterClass::Alpha, "x", "y");
    const auto a2 = make_algebra(b.build());
    const auto id = make_rep(Representation<TypeParam>(a2, {1, 1}, {Matrix<TypeParam>::identity(1)}));
    const auto d = interval_decompose(id);
    ASSERT_EQ(d.summands.size(), 1u);
    EXPECT_EQ(d.summands[0].lo, 0u);
    EXPECT_EQ(d.summands[0].hi, 1u);
    EXPECT_EQ(d.summands[0].multiplicity, 1u);
}

TYPED_TEST(Decomp, ProjectiveC2RestrictedToU)
{
    const auto lp = lambda1prime_algebra(1);
    const auto pc2 = projective<TypeParam>(lp, "c2");
    const auto on_u = restrict_to(pc2, u_algebra(), true);
    expect_matches_rank_oracle(on_u);
}

TYPED_TEST(Decomp, RandomRepresentationsOfU)
{
    const auto u = u_algebra();
    for (std::uint64_t s = 0; s < 60; ++s)
        expect_matches_rank_oracle(random_module<TypeParam>(u, s, 20));
}

TYPED_TEST(Decomp, RandomZigzags)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        const auto alg = random_zigzag(rng, std::uniform_int_distribution<std::size_t>(1, 7)(rng));
        expect_matches_rank_oracle(random_module<TypeParam>(alg, rng(), 18));
    }
}

TEST(Xset, WordsAndIndices)
{
    const auto words = xset_words();
    ASSERT_EQ(words.size(), 10u);
    const auto lp = lambda1prime_algebra(1);
    const auto c2 = lp->presentation().vertex_index("c2");
    for (const auto& m : xset<Rational>(1)) {
        EXPECT_EQ(m->dim(c2), 1u);
        EXPECT_EQ(hom_dim(*m, *m), 1u);  // bricks
    }
    int found = 0;
    for (std::size_t lo = 0; lo < 6; ++lo)
        for (std::size_t hi = lo; hi < 6; ++hi)
            if (xset_index(lo, hi) >= 0) {
                ++found;
                EXPECT_TRUE(lo <= 4 && hi >= 4) << lo << "," << hi;  // through c2
            }
    EXPECT_EQ(found, 10);
}

TYPED_TEST(Decomp, StripProjectiveC2)
{
    const auto lp = lambda1prime_algebra(1);
    const auto p = strip_pc2(projective<TypeParam>(lp, "c2"));
    EXPECT_EQ(p.a, 1u);
    EXPECT_TRUE(p.complement->is_zero());
    EXPECT_TRUE(is_isomorphism(p.certificate));

    const auto s = simple<TypeParam>(lp, "c2");
    const auto q = strip_pc2(s);
    EXPECT_EQ(q.a, 0u);
    EXPECT_EQ(q.complement->dims(), s->dims());
}

TYPED_TEST(Decomp, SplitOfInflatedLevelOneModule)
{
    const auto lp = lambda1prime_algebra(1);
    const auto m = inflate(random_module<TypeParam>(lambda_algebra(1, 1), 8, 20), lp);
    const auto split = lemma2_split(m);
    EXPECT_EQ(split.a, 0u);
    EXPECT_TRUE(split.X->is_zero());
    EXPECT_TRUE(certified_iso(split.Mprime, m).found());
}

TYPED_TEST(Decomp, SplitOfAllTenMembers)
{
    const auto lp = lambda1prime_algebra(1);
    const auto all = scramble(direct_sum_module(lp, xset<TypeParam>(1)), 77);
    const auto split = lemma2_split(all);
    EXPECT_EQ(split.a, 0u);
    EXPECT_TRUE(split.Mprime->is_zero());
    for (auto k : split.x_multiplicity)
        EXPECT_EQ(k, 1u);
    EXPECT_TRUE(is_isomorphism(split.certificate));
}

TYPED_TEST(Decomp, SplitMultiplicitiesAgreeWithPairingRanks)
{
    const auto lp = lambda1prime_algebra(1);
    const auto members = xset<TypeParam>(1);
    const auto pc2 = projective<TypeParam>(lp, "c2");
    const auto c2 = lp->presentation().vertex_index("c2");
    const auto level1 = lambda_vertices(1, 1);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto m = lemma2_sample<TypeParam>(lp, seed, 30);
        const auto split = lemma2_split(m);
        EXPECT_TRUE(is_isomorphism(split.certificate));
        EXPECT_TRUE(supported_on(*split.Mprime, level1)) << "seed " << seed;
        EXPECT_EQ(split.a, sbalg::testing::brick_multiplicity(pc2, m, c2)) << "seed " << seed;
        for (std::size_t i = 0; i < members.size(); ++i)
            EXPECT_EQ(split.x_multiplicity[i], sbalg::testing::brick_multiplicity(members[i], m, c2))
                << "seed " << seed << " member " << i;
    }
}

TYPED_TEST(Decomp, ChecksumsAreStable)
{
    const auto lp = lambda1prime_algebra(1);
    const auto m = lemma2_sample<TypeParam>(lp, 5, 30);
    EXPECT_EQ(lemma2_split(m).checksum, lemma2_split(m).checksum);
    EXPECT_EQ(lemma2_split(m).to_json(), lemma2_split(m).to_json());
    EXPECT_NE(map_checksum(identity_map(m)), map_checksum(zero_map(m, m)));
}
