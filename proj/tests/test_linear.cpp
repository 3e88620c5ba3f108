#include "support/properties.hpp"

#include "sbalg/matrix.hpp"

#include <gtest/gtest.h>

using namespace sbalg;

TEST(Rational, ParsesFractionsAndIntegers)
{
    EXPECT_EQ(FieldTraits<Rational>::parse("3/6"), Rational(1, 2));
    EXPECT_EQ(FieldTraits<Rational>::parse("-4"), Rational(-4));
    EXPECT_THROW(FieldTraits<Rational>::parse("x"), std::invalid_argument);
}

TEST(ModP, ArithmeticModulo101)
{
    ModulusScope scope(101);
    const ModP a(100), b(5);
    EXPECT_EQ((a + b).value(), 4u);
    EXPECT_EQ((b - a).value(), 6u);
    EXPECT_EQ((a * a).value(), 1u);
    EXPECT_EQ((b * b.inverse()).value(), 1u);
    EXPECT_EQ(ModP(-1).value(), 100u);
    EXPECT_EQ(FieldTraits<ModP>::parse("1/2").value(), 51u);
    EXPECT_EQ(FieldTraits<ModP>::name(), "fp:101");
}

TEST(ModP, ScopeRestoresModulus)
{
    const auto before = ModP::modulus();
    {
        ModulusScope scope(7);
        EXPECT_EQ(ModP(9).value(), 2u);
    }
    EXPECT_EQ(ModP::modulus(), before);
}

TEST(FieldSpec, ParsesNames)
{
    EXPECT_EQ(FieldSpec::parse("q"), FieldSpec::rationals());
    EXPECT_EQ(FieldSpec::parse("fp:101").prime, 101u);
    EXPECT_EQ(FieldSpec::parse("fp:101").name(), "fp:101");
    EXPECT_THROW(FieldSpec::parse("fp:100"), std::invalid_argument);
    EXPECT_THROW(FieldSpec::parse("reals"), std::invalid_argument);
}

TEST(FieldSpec, DispatchesOnKind)
{
    const auto name = with_field(FieldSpec::parse("fp:7"), []<class K>() { return FieldTraits<K>::name(); });
    EXPECT_EQ(name, "fp:7");
    EXPECT_EQ(with_field(FieldSpec::parse("q"), []<class K>() { return FieldTraits<K>::name(); }), "q");
}

template <class K>
class LinearAlgebra : public ::testing::Test {
protected:
    ModulusScope scope{101};
};

using Fields = ::testing::Types<Rational, ModP>;
TYPED_TEST_SUITE(LinearAlgebra, Fields);

TYPED_TEST(LinearAlgebra, RrefOfSmallCases)
{
    using M = Matrix<TypeParam>;
    const auto id = rref(M::identity(2));
    EXPECT_EQ(id.matrix, M::identity(2));
    EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));

    const auto zero = rref(M(3, 4));
    EXPECT_EQ(zero.matrix, M(3, 4));
    EXPECT_TRUE(zero.pivots.empty());

    const auto r1 = rref(M{{1, 2}, {2, 4}});
    EXPECT_EQ(r1.matrix, (M{{1, 2}, {0, 0}}));
    EXPECT_EQ(r1.pivots, (std::vector<std::size_t>{0}));
    EXPECT_EQ(r1.rank(), 1u);
}

TYPED_TEST(LinearAlgebra, KernelBasis)
{
    using M = Matrix<TypeParam>;
    EXPECT_EQ(kernel_basis(M::identity(3)).cols(), 0u);
    EXPECT_EQ(kernel_basis(M(3, 3)).cols(), 3u);
    const auto k = kernel_basis(M{{1, 2}, {2, 4}});
    ASSERT_EQ(k.cols(), 1u);
    // proportional to (-2, 1)
    EXPECT_EQ(k(0, 0), k(1, 0) * from_int<TypeParam>(-2));
    EXPECT_FALSE(is_zero(k(1, 0)));
}

TYPED_TEST(LinearAlgebra, Solve)
{
    using M = Matrix<TypeParam>;
    const M b{{3, 1}, {4, 1}};
    EXPECT_EQ(solve(M::identity(2), b), b);
    const auto z = solve(M(2, 2), M(2, 1));
    ASSERT_TRUE(z);
    EXPECT_TRUE(z->is_zero());
    EXPECT_FALSE(solve(M{{1}, {2}}, M{{1}, {1}}));
}

TYPED_TEST(LinearAlgebra, InverseAndSingular)
{
    using M = Matrix<TypeParam>;
    const M a{{2, 1}, {1, 1}};
    const auto inv = inverse(a);
    ASSERT_TRUE(inv);
    EXPECT_EQ(*inv, (M{{1, -1}, {-1, 2}}));
    EXPECT_FALSE(inverse(M{{1, 2}, {2, 4}}));
}

TYPED_TEST(LinearAlgebra, ComplementIndicesCompleteABasis)
{
    using M = Matrix<TypeParam>;
    const M basis{{1}, {1}, {0}};
    const auto idx = complement_indices(basis);
    ASSERT_EQ(idx.size(), 2u);
    auto full = basis;
    for (auto j : idx)
        full = M::hstack(full, M::identity(3).column(j));
    EXPECT_EQ(rank(full), 3u);
}

TYPED_TEST(LinearAlgebra, StackingAndBlocks)
{
    using M = Matrix<TypeParam>;
    const M a{{1, 2}}, b{{3, 4}};
    EXPECT_EQ(M::vstack(a, b), (M{{1, 2}, {3, 4}}));
    EXPECT_EQ(M::hstack(a, b), (M{{1, 2, 3, 4}}));
    EXPECT_EQ(M::vstack(a, b).block(1, 0, 1, 2), b);
    const std::vector<M> blocks{a.transpose(), b};
    const auto d = M::block_diagonal(blocks);
    EXPECT_EQ(d.rows(), 3u);
    EXPECT_EQ(d.cols(), 3u);
    EXPECT_EQ(d(2, 2), from_int<TypeParam>(4));
    EXPECT_TRUE(is_zero(d(0, 1)));
}

TYPED_TEST(LinearAlgebra, RandomizedLaws)
{
    const auto r = sbalg::testing::linear_algebra_laws<TypeParam>(200, 11);
    EXPECT_TRUE(r.ok()) << r.summary();
}
