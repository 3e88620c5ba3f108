#include "sbalg/presentation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <set>
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

std::set<std::string> as_set(const std::vector<std::string>& v)
{
    return {v.begin(), v.end()};
}

// Vertices visited by a path given as arrow indices.
std::set<std::size_t> path_vertices(const Presentation& p, const PathClass& c)
{
    std::set<std::size_t> out{c.source};
    for (auto a : c.path)
        out.insert(p.target(a));
    return out;
}

}  // namespace

TEST(PresentationFile, MinimalFile)
{
    const auto p = parse_presentation("algebra A\nvertex x\n");
    EXPECT_EQ(p.name(), "A");
    EXPECT_EQ(p.vertex_count(), 1u);
    EXPECT_EQ(p.arrow_count(), 0u);
}

TEST(PresentationFile, CommentsAndBlankLinesIgnored)
{
    const auto p = parse_presentation("# c\n\nalgebra A\nvertex x   # trailing\nvertex y\narrow alpha_x : alpha x -> y\n");
    EXPECT_EQ(p.arrow_count(), 1u);
    EXPECT_EQ(p.arrows()[0].letter, LetterClass::Alpha);
}

TEST(PresentationFile, UnknownArrowReportsLineAndName)
{
    try {
        parse_presentation(slurp(SBALG_DATA_DIR "/bad.alg"));
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 6u);
        EXPECT_EQ(e.column(), 10u);
        EXPECT_NE(std::string(e.what()).find("gamma_y"), std::string::npos);
    }
}

TEST(PresentationFile, Malformed)
{
    EXPECT_THROW(parse_presentation("vertex x\n"), ParseError);  // no algebra line
    EXPECT_THROW(parse_presentation("algebra A\nvertex x\narrow f : gamma x -> x\n"), ParseError);
    EXPECT_THROW(parse_presentation("algebra A\nvertex x\narrow f : alpha x -> y\n"), ParseError);
    EXPECT_THROW(parse_presentation("algebra A\nvertex x\nvertex x\n"), ParseError);
    // not composable: f ends at y, f starts at x
    EXPECT_THROW(parse_presentation("algebra A\nvertex x\nvertex y\narrow f : alpha x -> y\nrel zero f f\n"),
                 ParseError);
}

TEST(PresentationFile, RoundTrips)
{
    for (const auto& p : {lambda_presentation(1, 0), lambda_presentation(2, 3), lambda1prime_presentation(2),
                          parse_presentation(slurp(SBALG_DATA_DIR "/square.alg"))}) {
        const auto text = emit_presentation(p);
        const auto back = parse_presentation(text);
        EXPECT_EQ(back, p) << text;
        EXPECT_EQ(emit_presentation(back), text);
    }
}

TEST(PresentationFile, EmissionSorted)
{
    const auto p = parse_presentation("algebra A\nvertex z\nvertex a\narrow g : beta z -> a\narrow f : alpha a -> z\n");
    const auto text = emit_presentation(p);
    EXPECT_LT(text.find("vertex a"), text.find("vertex z"));
    EXPECT_LT(text.find("arrow f"), text.find("arrow g"));
}

TEST(Lambda, LevelZeroVertices)
{
    const auto p = lambda_presentation(1, 0);
    EXPECT_EQ(as_set(p.vertices()),
              (std::set<std::string>{"a0", "b0", "c0", "bm1", "cm1", "u", "v", "w", "d0", "d1"}));
}

TEST(Lambda, VertexCountFormula)
{
    // a_0..a_m, b_-1..b_m, c_-1..c_min(m,2) (the c column stops at level 2),
    // u v w, d_0..d_r
    for (int r = 1; r <= 3; ++r)
        for (int m = 0; m <= 5; ++m)
            EXPECT_EQ(lambda_presentation(r, m).vertex_count(),
                      static_cast<std::size_t>((m + 1) + (m + 2) + (std::min(m, 2) + 2) + 3 + (r + 1)));
}

TEST(Lambda, RejectsBadParameters)
{
    EXPECT_THROW(lambda_presentation(0, 1), std::invalid_argument);
    EXPECT_THROW(lambda_presentation(1, -1), std::invalid_argument);
}

TEST(Lambda, FullSubquiverChain)
{
    for (int m = 0; m < 5; ++m) {
        const auto small = lambda_presentation(2, m), big = lambda_presentation(2, m + 1);
        const auto keep = as_set(small.vertices());
        for (const auto& a : big.arrows())
            if (keep.count(a.source) && keep.count(a.target))
                EXPECT_TRUE(std::find(small.arrows().begin(), small.arrows().end(), a) != small.arrows().end())
                    << a.name << " missing at level " << m;
        for (const auto& a : small.arrows())
            EXPECT_TRUE(std::find(big.arrows().begin(), big.arrows().end(), a) != big.arrows().end());
    }
}

TEST(Lambda, SpecialBiserialEverywhere)
{
    for (int r = 1; r <= 3; ++r) {
        for (int m = 0; m <= 5; ++m)
            EXPECT_TRUE(lambda_presentation(r, m).is_special_biserial()) << r << "," << m;
        EXPECT_TRUE(lambda1prime_presentation(r).is_special_biserial());
    }
}

TEST(Lambda, AtMostOneArrowOfEachClassLeaves)
{
    const auto p = lambda_presentation(2, 4);
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        int alphas = 0, betas = 0;
        for (auto a : p.arrows_from(v))
            (p.arrows()[a].letter == LetterClass::Alpha ? alphas : betas)++;
        EXPECT_LE(alphas, 1) << p.vertices()[v];
        EXPECT_LE(betas, 1) << p.vertices()[v];
    }
}

TEST(Lambda, FactorAlgebraChain)
{
    // Classes of the level-m algebra correspond to the classes of level m+1
    // whose paths stay among the old vertices.
    for (int m = 0; m < 5; ++m) {
        const auto small = lambda_algebra(1, m), big = lambda_algebra(1, m + 1);
        const auto& ps = small->presentation();
        const auto& pb = big->presentation();
        std::set<std::size_t> old;
        for (const auto& v : ps.vertices())
            old.insert(pb.vertex_index(v));
        for (std::size_t x = 0; x < ps.vertex_count(); ++x)
            for (std::size_t y = 0; y < ps.vertex_count(); ++y) {
                const auto bx = pb.vertex_index(ps.vertices()[x]), by = pb.vertex_index(ps.vertices()[y]);
                std::size_t inside = 0;
                for (auto c : big->basis().classes_between(bx, by)) {
                    const auto vs = path_vertices(pb, big->basis().at(c));
                    inside += std::includes(old.begin(), old.end(), vs.begin(), vs.end());
                }
                EXPECT_EQ(small->basis().classes_between(x, y).size(), inside)
                    << ps.vertices()[x] << " -> " << ps.vertices()[y] << " at level " << m;
            }
    }
}

TEST(LambdaPrime, DeletesTwoVertices)
{
    for (int r = 1; r <= 3; ++r) {
        auto expected = as_set(lambda_presentation(r, 2).vertices());
        expected.erase("a2");
        expected.erase("b2");
        const auto p = lambda1prime_presentation(r);
        EXPECT_EQ(as_set(p.vertices()), expected);
        EXPECT_TRUE(p.find_vertex("c2"));
    }
    // 16 vertices at level 2 for r = 1, minus two
    EXPECT_EQ(lambda1prime_presentation(1).vertex_count(), 14u);
}

TEST(SubquiverU, IsATypeAPathInsideLambdaPrime)
{
    const auto u = subquiver_u();
    EXPECT_EQ(as_set(u), (std::set<std::string>{"d0", "a1", "a0", "c1", "c2", "b1"}));
    const auto p = lambda1prime_presentation(1);
    const auto sub = full_subpresentation(p, u, "U");
    EXPECT_EQ(sub.vertex_count(), 6u);
    EXPECT_EQ(sub.arrow_count(), 5u);
    std::map<std::size_t, int> degree;
    for (std::size_t a = 0; a < sub.arrow_count(); ++a) {
        EXPECT_NE(sub.source(a), sub.target(a));
        ++degree[sub.source(a)];
        ++degree[sub.target(a)];
    }
    int ends = 0;
    for (const auto& [v, d] : degree) {
        EXPECT_LE(d, 2);
        ends += d == 1;
    }
    EXPECT_EQ(ends, 2);
}

TEST(PathBasis, TrivialCases)
{
    EXPECT_EQ(build_path_basis(parse_presentation("algebra A\nvertex x\n")).dimension(), 1u);
    const auto loop = parse_presentation("algebra L\nvertex x\narrow l : alpha x -> x\nrel zero l l\n");
    EXPECT_EQ(build_path_basis(loop).dimension(), 2u);
}

TEST(PathBasis, CommutativeSquareHasDimensionNine)
{
    const auto p = parse_presentation(slurp(SBALG_DATA_DIR "/square.alg"));
    const auto b = build_path_basis(p);
    // 4 idempotents, 4 arrows, one class for the two equal length-2 paths
    EXPECT_EQ(b.dimension(), 9u);
    EXPECT_EQ(b.classes_between(p.vertex_index("p"), p.vertex_index("t")).size(), 1u);
}

TEST(PathBasis, BoundExceededOnFreeLoop)
{
    const auto loop = parse_presentation("algebra L\nvertex x\narrow l : alpha x -> x\n");
    try {
        build_path_basis(loop, 5);
        FAIL() << "expected BoundExceeded";
    } catch (const BoundExceeded& e) {
        EXPECT_FALSE(e.path().empty());
    }
}

TEST(PathBasis, ProjectiveOfC1AtLevelFive)
{
    const auto alg = lambda_algebra(1, 5);
    const auto& p = alg->presentation();
    EXPECT_EQ(alg->basis().classes_from(p.vertex_index("c1")).size(), 6u);
    EXPECT_EQ(alg->basis().classes_from(p.vertex_index("a1")).size(), 4u);
    EXPECT_EQ(alg->basis().classes_from(p.vertex_index("b0")).size(), 3u);
}

TEST(PathBasis, DimensionIsSumOfProjectives)
{
    const auto alg = lambda_algebra(2, 3);
    std::size_t total = 0;
    for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
        const auto& from = alg->basis().classes_from(x);
        ASSERT_FALSE(from.empty());
        EXPECT_EQ(from.front(), alg->basis().identity(x));
        total += from.size();
    }
    EXPECT_EQ(total, alg->basis().dimension());
}

TEST(PathBasis, ActionAgreesWithClassOfExtendedPath)
{
    for (const auto& alg : {lambda_algebra(1, 4), lambda1prime_algebra(2)}) {
        const auto& b = alg->basis();
        const auto& p = alg->presentation();
        for (std::size_t c = 0; c < b.dimension(); ++c)
            for (std::size_t a = 0; a < p.arrow_count(); ++a) {
                if (p.source(a) != b.at(c).target)
                    continue;
                auto path = b.at(c).path;
                path.push_back(a);
                EXPECT_EQ(b.act(a, c), b.class_of(path));
                // associativity: (c a) a' against c (a a') for every second arrow
                for (auto a2 : p.arrows_from(p.target(a))) {
                    const auto left = b.act(a, c) == PathBasis::npos ? PathBasis::npos : b.act(a2, b.act(a, c));
                    auto longer = path;
                    longer.push_back(a2);
                    EXPECT_EQ(left, b.class_of(longer));
                }
            }
    }
}
