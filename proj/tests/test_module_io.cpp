#include "sbalg/module_io.hpp"
#include "sbalg/paperlab.hpp"

#include <gtest/gtest.h>

using namespace sbalg;

TEST(AlgebraSpec, AcceptedForms)
{
    EXPECT_EQ(algebra_from_spec("lambda:r=1,m=3")->name(), "lambda_r1_m3");
    EXPECT_EQ(algebra_from_spec("lambda_r2_m0")->name(), "lambda_r2_m0");
    EXPECT_EQ(algebra_from_spec("lambda1prime:r=1")->name(), "lambda1prime_r1");
    EXPECT_EQ(algebra_from_spec("lambda1prime_r2")->name(), "lambda1prime_r2");
    EXPECT_EQ(algebra_from_spec("file:" SBALG_DATA_DIR "/square.alg")->basis().dimension(), 9u);
    EXPECT_THROW(algebra_from_spec("lambda:r=0,m=1"), std::invalid_argument);
    EXPECT_THROW(algebra_from_spec("gamma"), std::invalid_argument);
    EXPECT_THROW(algebra_from_spec("file:" SBALG_DATA_DIR "/bad.alg"), ParseError);
}

TEST(ModuleFiles, Directives)
{
    const auto f = parse_modules<Rational>(R"(# comment
module s over lambda_r1_m1
string c1 alpha_c1^+1
module p over lambda_r1_m1
proj b1
module r over lambda_r1_m1
raw
  dims c1=1 a0=1
  mat alpha_c1 1x1 : 1/2
end
module all over lambda_r1_m1
sum s p r
)");
    ASSERT_EQ(f.names, (std::vector<std::string>{"s", "p", "r", "all"}));
    const auto& alg = f.algebra;
    EXPECT_EQ(f.find("s")->total_dim(), 2u);
    EXPECT_EQ(*f.find("p"), *projective<Rational>(alg, "b1"));
    EXPECT_EQ(f.find("r")->arrow(alg->presentation().arrow_index("alpha_c1"))(0, 0), Rational(1, 2));
    EXPECT_EQ(f.main()->total_dim(), 2 + f.find("p")->total_dim() + 2);
    EXPECT_TRUE(certified_iso(f.find("s"), f.find("r")).found());
    EXPECT_EQ(f.find("missing"), nullptr);
}

TEST(ModuleFiles, AlgebraOverride)
{
    const auto alg = lambda_algebra(2, 1);
    const auto f = parse_modules<Rational>("module x over lambda_r1_m1\nstring d2\n", alg);
    EXPECT_EQ(f.algebra, alg);
    EXPECT_EQ(f.main()->total_dim(), 1u);
}

TEST(ModuleFiles, ErrorsCarryLineNumbers)
{
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_modules<Rational>(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("module a over lambda_r1_m0\nstring nowhere\n"), 2u);
    EXPECT_EQ(line_of("module a over lambda_r1_m0\nstring a0 alpha_a0^+2\n"), 2u);
    EXPECT_EQ(line_of("module a over lambda_r1_m0\nstring a0 beta_a0^+1 alpha_u^+1 alpha_u^+1\n"), 2u);
    EXPECT_EQ(line_of("module a over lambda_r1_m0\nsum b\n"), 2u);
    EXPECT_EQ(line_of("string a0\n"), 1u);
    EXPECT_EQ(line_of("module a over lambda_r1_m0\nraw\ndims a0=1 u=1\nmat beta_a0 2x1 : 1 1\nend\n"), 4u);
    EXPECT_EQ(line_of("module a over lambda_r1_m0\nraw\ndims a0=1\n"), 2u);  // unterminated block
    EXPECT_EQ(line_of("module a over lambda_r1_m0\nproj a0\nstring u\n"), 3u);
    EXPECT_EQ(line_of("module a over nothing\nproj a0\n"), 1u);
    // raw data violating a zero relation: alpha_a0 then beta_c0 acts nonzero
    EXPECT_EQ(line_of("module a over lambda_r1_m0\nraw\ndims a0=1 c0=1 w=1\nmat alpha_a0 1x1 : 1\n"
                      "mat beta_c0 1x1 : 1\nend\n"),
              2u);
}

TEST(ModuleFiles, EmitRoundTripOverBothFields)
{
    const auto alg = lambda1prime_algebra(1);
    {
        const auto m = lemma2_sample<Rational>(alg, 3, 25);
        const auto back = parse_modules<Rational>(emit_module("M", *m));
        EXPECT_EQ(*back.main(), *m);
    }
    {
        ModulusScope scope(101);
        const auto m = lemma2_sample<ModP>(alg, 3, 25);
        const auto back = parse_modules<ModP>(emit_module("M", *m));
        EXPECT_EQ(*back.main(), *m);
    }
}

TEST(ModuleFiles, StringLineRoundTrip)
{
    const auto alg = lambda_algebra(1, 3);
    const auto w = z_walk(3, 2);
    const auto text = "module z over lambda_r1_m3\n" + emit_string_line(w) + "\n";
    const auto f = parse_modules<Rational>(text);
    EXPECT_EQ(*f.main(), *string_module<Rational>(alg, w));
}
