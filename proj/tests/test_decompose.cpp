#include <gtest/gtest.h>

#include <algorithm>

#include "slq/decompose.hpp"

using slq::Corep;
using T = slq::DecompositionTree;

namespace {

const Corep& V(int m) {
    static const Corep v[3] = {slq::build_V(0, 3), slq::build_V(1, 3), slq::build_V(2, 3)};
    return v[m];
}

bool has_leaf(const T& t, const std::string& label) {
    const auto l = t.leaves();
    return std::find(l.begin(), l.end(), label) != l.end();
}

} // namespace

TEST(Tree, TextAndLeaves) {
    const T t = T::extension(T::leaf(0, 0, 1),
                             T::extension(T::leaf(0, 2, 3),
                                          T::extension(T::direct_sum({T::leaf(1, 0, 2), T::leaf(0, 1, 2)}),
                                                       T::leaf(0, 0, 1))));
    EXPECT_EQ(t.to_text(), "V0 ⊘ V2 ⊘ (W1 ⊕ V1) ⊘ V0");
    EXPECT_EQ(t.dim, 9U);
    EXPECT_EQ(t.leaves(), (std::vector<std::string>{"V0", "V2", "W1", "V1", "V0"}));
    EXPECT_EQ(T::leaf(2, 1, 6).label, "W2⊗V1");
    const T nested = T::direct_sum({T::leaf(0, 0, 1), T::direct_sum({T::leaf(1, 0, 2), T::leaf(0, 1, 2)})});
    EXPECT_EQ(nested.children.size(), 3U);
    EXPECT_EQ(T::direct_sum({T::leaf(0, 1, 2)}).kind, T::Kind::irreducible);
    const T ext_in_sum = T::direct_sum({T::leaf(0, 2, 3), T::extension(T::leaf(0, 0, 1), T::leaf(0, 0, 1))});
    EXPECT_EQ(ext_in_sum.to_text(), "V2 ⊕ (V0 ⊘ V0)");
}

TEST(Decompose, Irreducibles) {
    for (int m = 0; m < 3; ++m) {
        const T t = slq::decompose_l3(V(m));
        EXPECT_EQ(t.kind, T::Kind::irreducible);
        EXPECT_EQ(t.label, "V" + std::to_string(m));
    }
    EXPECT_EQ(slq::decompose_l3(slq::build_irreducible(1, 2, 3)).label, "W1⊗V2");
}

TEST(Decompose, V1TimesV1Splits) {
    const T t = slq::decompose_l3(slq::tensor(V(1), V(1)));
    EXPECT_EQ(t, T::direct_sum({T::leaf(0, 0, 1), T::leaf(0, 2, 3)}));
    EXPECT_EQ(t.to_text(), "V0 ⊕ V2");
}

TEST(Decompose, V1TimesV2IsUniserial) {
    const Corep C = slq::tensor(V(1), V(2));
    const T t = slq::decompose_l3(C);
    EXPECT_EQ(t, T::extension(T::leaf(0, 1, 2), T::extension(T::leaf(1, 0, 2), T::leaf(0, 1, 2))));
    // simple socle and head, so the module is indecomposable
    EXPECT_EQ(slq::hom_space(V(1), C).size(), 1U);
    EXPECT_EQ(slq::hom_space(C, V(1)).size(), 1U);
    EXPECT_TRUE(slq::hom_space(slq::build_W(1, 3), C).empty());
    EXPECT_EQ(slq::decompose_l3(slq::tensor(V(2), V(1))), t);
}

TEST(Decompose, V2TimesV2SplitsOffV2) {
    const Corep C = slq::tensor(V(2), V(2));
    const T t = slq::decompose_l3(C);
    EXPECT_EQ(t.to_text(), "V2 ⊕ (V0 ⊘ W1⊗V1 ⊘ V0)");
    const auto in = slq::hom_space(V(2), C);
    const auto out = slq::hom_space(C, V(2));
    ASSERT_EQ(in.size(), 1U);
    ASSERT_EQ(out.size(), 1U);
    EXPECT_TRUE(slq::is_invertible(in[0] * out[0]));
}

TEST(Decompose, WSeriesClebschGordan) {
    for (int n = 0; n <= 3; ++n)
        for (int np = 0; n + np <= 4; ++np) {
            std::vector<T> parts;
            for (int k = std::abs(n - np); k <= n + np; k += 2)
                parts.push_back(T::leaf(k, 0, static_cast<std::size_t>(k + 1)));
            EXPECT_EQ(slq::decompose_l3(slq::tensor(slq::build_W(n, 3), slq::build_W(np, 3))),
                      T::direct_sum(std::move(parts)))
                << n << "," << np;
        }
}

TEST(Decompose, MixedWTimesV) {
    const T t = slq::decompose_l3(slq::tensor(slq::build_W(1, 3), V(1)));
    EXPECT_EQ(t.label, "W1⊗V1");
    EXPECT_EQ(t.dim, 4U);
}

TEST(Decompose, V1CubeHasW1OnlyAsSubquotient) {
    const Corep cube = slq::tensor(V(1), slq::tensor(V(1), V(1)));
    const T t = slq::decompose_l3(cube);
    EXPECT_EQ(t.dim, 8U);
    EXPECT_TRUE(has_leaf(t, "W1"));
    EXPECT_TRUE(slq::hom_space(slq::build_W(1, 3), cube).empty());
}

TEST(Decompose, OtherEllUnsupported) {
    EXPECT_THROW(slq::decompose_l3(slq::build_V(1, 5)), slq::unsupported);
    EXPECT_THROW(slq::decompose_l3(slq::build_Y(2, slq::AlgebraMode::quotient_f(3))), slq::unsupported);
}
