#include "sbalg/module_io.hpp"
#include "sbalg/paperlab.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace sbalg;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

template <class K>
ModuleFile<K> data_file(const std::string& name)
{
    return parse_modules<K>(slurp(std::string(SBALG_DATA_DIR) + "/" + name));
}

std::string failures(const ClaimReport& rep)
{
    std::string out;
    for (const auto& e : rep.evidence)
        if (e.status != ClaimStatus::Pass)
            out += e.check + ": " + e.detail + "\n";
    return out;
}

struct ClaimCase {
    std::string claim;
    int r;
    std::string field;
};

class Claims : public ::testing::TestWithParam<ClaimCase> {};

}  // namespace

TEST_P(Claims, Pass)
{
    const auto& c = GetParam();
    FamilyConfig cfg;
    cfg.r = c.r;
    cfg.m_max = 3;
    cfg.t_max = 2;
    cfg.samples = 20;
    cfg.max_dim = 30;
    cfg.field = FieldSpec::parse(c.field);
    const auto rep = verify(c.claim, cfg);
    EXPECT_EQ(rep.status, ClaimStatus::Pass) << failures(rep);
    EXPECT_FALSE(rep.evidence.empty());
    EXPECT_EQ(rep.field, c.field);
}

std::vector<ClaimCase> all_claims()
{
    std::vector<ClaimCase> out;
    for (const auto& id : claim_ids())
        for (const auto* f : {"q", "fp:101"})
            for (int r : {1, 2})
                out.push_back({id, r, f});
    return out;
}

INSTANTIATE_TEST_SUITE_P(AllClaims, Claims, ::testing::ValuesIn(all_claims()),
                         [](const ::testing::TestParamInfo<ClaimCase>& info) {
                             auto name = info.param.claim + "_r" + std::to_string(info.param.r) + "_" +
                                         info.param.field;
                             for (auto& ch : name)
                                 if (!std::isalnum(static_cast<unsigned char>(ch)))
                                     ch = '_';
                             return name;
                         });

TEST(Verify, RejectsBadInput)
{
    FamilyConfig cfg;
    EXPECT_THROW(verify("no-such-claim", cfg), std::invalid_argument);
    cfg.r = 0;
    EXPECT_THROW(verify("prop-2", cfg), std::invalid_argument);
    cfg.r = 1;
    cfg.t_max = 0;
    EXPECT_THROW(verify("section-4", cfg), std::invalid_argument);
}

TEST(Verify, ReportsAreDeterministic)
{
    FamilyConfig cfg;
    cfg.seed = 42;
    cfg.samples = 15;
    for (const auto* id : {"lemma-2", "corollary-3", "section-4"}) {
        const auto a = verify(id, cfg), b = verify(id, cfg);
        EXPECT_EQ(a.to_json(cfg), b.to_json(cfg)) << id;
        EXPECT_EQ(a.digest(), b.digest()) << id;
        EXPECT_EQ(a.to_text(true), b.to_text(true)) << id;
    }
}

TEST(Verify, TinyCutoffIsInconclusiveNotFail)
{
    FamilyConfig cfg;
    cfg.cutoff = 1;
    cfg.m_max = 3;
    const auto rep = verify("prop-2", cfg);
    EXPECT_EQ(rep.status, ClaimStatus::Inconclusive) << rep.to_text(true);
}

TEST(Walks, LevelWalkLengths)
{
    EXPECT_TRUE(z_walk(0).letters.empty());
    EXPECT_EQ(z_walk(3, 1).length(), 4u);
    EXPECT_EQ(z_walk(3, 3).length(), 14u);  // three blocks of four letters, two glue letters
    EXPECT_EQ(z_walk(4, 1).length(), 3u);
    EXPECT_EQ(z_walk(5, 2).length(), 7u);
}

template <class K>
class Families : public ::testing::Test {
protected:
    ModulusScope scope{101};
};

using Fields = ::testing::Types<Rational, ModP>;
TYPED_TEST_SUITE(Families, Fields);

TYPED_TEST(Families, DataFilesMatchBuilders)
{
    for (int m = 0; m <= 5; ++m) {
        const auto file = data_file<TypeParam>("Z" + std::to_string(m) + ".mod");
        const auto built = build_Z<TypeParam>(1, m);
        const auto iso = certified_iso(file.main(), built);
        EXPECT_TRUE(iso.found()) << "Z" << m << ": " << iso.describe();
    }
    const auto t3 = data_file<TypeParam>("Z3_t3.mod");
    EXPECT_TRUE(certified_iso(t3.main(), build_Zt<TypeParam>(1, 3, 3)).found());
}

TYPED_TEST(Families, WalkAgreesWithBuilderAboveLevelTwo)
{
    for (int m = 3; m <= 5; ++m) {
        const auto alg = lambda_algebra(1, m);
        const auto from_walk = string_module<TypeParam>(alg, z_walk(m, 1));
        EXPECT_TRUE(certified_iso(from_walk, build_Z<TypeParam>(1, m)).found()) << m;
    }
}

TYPED_TEST(Families, ShiftedFamilyMaps)
{
    for (int m = 0; m <= 3; ++m)
        for (int t = 1; t <= 2; ++t) {
            const auto phi = build_phi<TypeParam>(1, m, t);
            ASSERT_TRUE(check_morphism(phi).ok) << m << "," << t;
            EXPECT_EQ(phi.source->dims(), build_Zt<TypeParam>(1, m, t)->dims());
            EXPECT_EQ(phi.target->dims(), build_Zt<TypeParam>(1, m, t + 1)->dims());
            const auto ker = kernel_of(phi).module;
            const auto u = build_U<TypeParam>(1, m, t);
            EXPECT_EQ(ker->dims(), u->dims()) << m << "," << t;
            if (m == 3)
                EXPECT_TRUE(ker->is_zero());
        }
}

TYPED_TEST(Families, LevelOneTruncationsHaveStablePd)
{
    for (int m = 0; m <= 2; ++m)
        for (int t = 1; t <= 3; ++t) {
            const auto pd = projdim(build_Zt<TypeParam>(1, m, t), 12);
            EXPECT_TRUE(pd.finite() && pd.value == 1 + m) << m << "," << t << " " << pd.verdict_string();
        }
}

TYPED_TEST(Families, TenMemberFileIsTheSum)
{
    const auto file = data_file<TypeParam>("xset.mod");
    ASSERT_EQ(file.names.size(), 11u);
    const auto members = xset<TypeParam>(1);
    for (std::size_t i = 0; i < members.size(); ++i)
        EXPECT_TRUE(certified_iso(file.modules[i], members[i]).found()) << file.names[i];
    const auto split = lemma2_split(file.find("all"));
    for (auto k : split.x_multiplicity)
        EXPECT_EQ(k, 1u);
}

TEST(Appendix, ShapesCoverEveryVertex)
{
    const auto shapes = appendix_shapes(1);
    const auto alg = lambda_algebra(1, 5);
    EXPECT_EQ(shapes.size(), alg->vertex_count());
    for (const auto& s : shapes) {
        ASSERT_FALSE(s.layers.empty()) << s.vertex;
        EXPECT_EQ(s.layers.front(), std::vector<std::string>{s.vertex});
    }
}

TEST(Samplers, Lemma2SamplesRespectDimension)
{
    const auto lp = lambda1prime_algebra(1);
    for (std::uint64_t s = 0; s < 40; ++s)
        EXPECT_LE(lemma2_sample<Rational>(lp, s, 25)->total_dim(), 25u);
}
