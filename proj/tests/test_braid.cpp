#include <gtest/gtest.h>

#include "oracles.hpp"
#include "slq/braid.hpp"
#include "slq/verify.hpp"

using slq::AlgebraMode;
using slq::Corep;
using slq::Cyclotomic;
using slq::Element;
using slq::Pairing;

namespace {

Element el(const char* text, int ell = 3) { return slq::parse_element(text, AlgebraMode::generic(ell)); }

oracle::WordCorep word_V(int m, int ell) { return oracle::corep_of_words(oracle::y_basis(m), ell); }
oracle::WordCorep word_W(int n, int ell) { return oracle::corep_of_words(oracle::w_basis(n, ell), ell); }

std::vector<std::pair<std::size_t, std::size_t>> differing(const slq::ScalarMatrix& x, const slq::ScalarMatrix& y) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (x(i, j) != y(i, j))
                out.emplace_back(i, j);
    return out;
}

} // namespace

TEST(Pairing, GeneratorValues) {
    const int ell = 3;
    const Cyclotomic s = slq::q_half_power(ell, 1), si = slq::q_half_power(ell, -1);
    EXPECT_EQ(slq::r_pair(el("a"), el("a")), si);
    EXPECT_EQ(slq::r_pair(el("d"), el("d")), si);
    EXPECT_EQ(slq::r_pair(el("a"), el("d")), s);
    EXPECT_EQ(slq::r_pair(el("d"), el("a")), s);
    EXPECT_EQ(slq::r_pair(el("b"), el("c")), si - s * s * s);
    EXPECT_TRUE(slq::r_pair(el("c"), el("b")).is_zero());
    EXPECT_TRUE(slq::r_pair(el("a"), el("b")).is_zero());
}

TEST(Pairing, CounitAndZeroExamples) {
    EXPECT_EQ(slq::r_pair(el("1"), el("a")), Cyclotomic(3, 1));
    EXPECT_EQ(slq::r_pair(el("a b c"), el("1")), Cyclotomic(3, 0));
    EXPECT_TRUE(slq::r_pair(el("1"), el("a^2 b c")).is_zero());
    EXPECT_EQ(slq::r_pair(el("1"), el("d a")), Cyclotomic(3, 1));
}

TEST(Pairing, PeelOrdersAgree) {
    for (int ell : {3, 5}) {
        Pairing first(ell, slq::PairingConvention::standard, slq::PeelOrder::first_slot);
        Pairing second(ell, slq::PairingConvention::standard, slq::PeelOrder::second_slot);
        for (const char* x : {"a^2", "a b", "b c", "a d", "c d^2"})
            for (const char* y : {"a^2", "d^2", "a c", "b d", "a^2 d"})
                EXPECT_EQ(first(el(x, ell), el(y, ell)), second(el(x, ell), el(y, ell))) << x << " | " << y;
    }
}

TEST(Pairing, MatchesWordOracle) {
    for (int ell : {3, 5})
        for (const char* x : {"a", "a b", "a^2 c", "b c d", "a d"})
            for (const char* y : {"a", "d^2", "a^2 d", "b c", "c a b"})
                EXPECT_TRUE(oracle::close(slq::r_pair(el(x, ell), el(y, ell)).evaluate(),
                                          oracle::r_pair(oracle::lin_of(el(x, ell)), oracle::lin_of(el(y, ell)), ell)))
                    << x << " | " << y << " at " << ell;
}

TEST(Pairing, RejectsQuotientElements) {
    Pairing R(3);
    const Element x = Element::one(AlgebraMode::quotient_f(3));
    EXPECT_THROW(R(x, x), slq::usage_error);
}

TEST(Braiding, MatchesWordOracle) {
    const int ell = 3;
    const Corep V1 = slq::build_V(1, ell), V2 = slq::build_V(2, ell), W1 = slq::build_W(1, ell);
    struct Case {
        const Corep* A;
        const Corep* B;
        oracle::WordCorep a;
        oracle::WordCorep b;
    };
    const std::vector<Case> cases{{&V1, &V1, word_V(1, ell), word_V(1, ell)},
                                  {&V1, &V2, word_V(1, ell), word_V(2, ell)},
                                  {&V2, &V1, word_V(2, ell), word_V(1, ell)},
                                  {&V2, &V2, word_V(2, ell), word_V(2, ell)},
                                  {&V1, &W1, word_V(1, ell), word_W(1, ell)},
                                  {&W1, &W1, word_W(1, ell), word_W(1, ell)}};
    for (const auto& c : cases)
        EXPECT_TRUE(oracle::same(oracle::braiding(c.a, c.b), slq::braiding_matrix(*c.A, *c.B).matrix))
            << c.A->name << "," << c.B->name;
    EXPECT_TRUE(oracle::same(oracle::braiding(word_V(1, 5), word_V(2, 5)),
                             slq::braiding_matrix(slq::build_V(1, 5), slq::build_V(2, 5)).matrix));
}

TEST(Braiding, ReferenceTablesThatMatch) {
    for (auto [l, r] : {std::pair{1, 1}, std::pair{1, 2}}) {
        const auto& t = slq::reference_braiding(l, r);
        EXPECT_EQ(slq::braiding_matrix(slq::build_V(l, 3), slq::build_V(r, 3)).matrix, slq::reference_matrix(t)) << t.id;
    }
}

TEST(Braiding, PrintedV2V1TableIsNotAComoduleMap) {
    const Corep V1 = slq::build_V(1, 3), V2 = slq::build_V(2, 3);
    const auto psi = slq::braiding_matrix(V2, V1).matrix;
    const auto printed = slq::reference_matrix(slq::reference_braiding(2, 1));
    using P = std::pair<std::size_t, std::size_t>;
    EXPECT_EQ(differing(psi, printed), (std::vector<P>{{2, 3}, {4, 4}}));
    EXPECT_TRUE(slq::is_intertwiner(slq::tensor(V2, V1), slq::tensor(V1, V2), psi));
    EXPECT_FALSE(slq::is_intertwiner(slq::tensor(V2, V1), slq::tensor(V1, V2), printed));
}

TEST(Braiding, ComoduleMapsAndInvertible) {
    Pairing R(3);
    const std::vector<Corep> cs{slq::build_V(0, 3), slq::build_V(1, 3), slq::build_V(2, 3), slq::build_W(1, 3)};
    for (const auto& A : cs)
        for (const auto& B : cs) {
            EXPECT_TRUE(slq::braiding_is_comodule_map(A, B, R)) << A.name << "," << B.name;
            EXPECT_TRUE(slq::is_invertible(slq::braiding_matrix(A, B, R).matrix));
        }
    Pairing R5(5);
    EXPECT_TRUE(slq::braiding_is_comodule_map(slq::build_V(3, 5), slq::build_V(2, 5), R5));
}

TEST(Braiding, MixedConventionBreaksComoduleProperty) {
    Pairing M(3, slq::PairingConvention::mixed);
    const Corep V1 = slq::build_V(1, 3), V2 = slq::build_V(2, 3);
    EXPECT_NE(slq::braiding_matrix(V2, V1, M).matrix, slq::braiding_matrix(V2, V1).matrix);
    EXPECT_FALSE(slq::braiding_is_comodule_map(V2, V1, M));
}

TEST(Braiding, Eigenstructure) {
    Pairing R(3);
    const auto rep = slq::eigenstructure_check_v1v1(3, R);
    EXPECT_TRUE(rep.fixed_vector);
    EXPECT_TRUE(rep.eigenspace_spans);
    EXPECT_TRUE(rep.eigenspace_exact);
}

TEST(Braiding, AntisymmetricEigenvalueAtEll5) {
    // −q^(3/2) in general, which is 1 only at ell = 3
    const int ell = 5;
    Pairing R(ell);
    const Corep V1 = slq::build_V(1, ell);
    const auto psi = slq::braiding_matrix(V1, V1, R).matrix;
    const Cyclotomic zero(ell), one(ell, 1), q = slq::q_power(ell, 1);
    const slq::ScalarVector v{zero, one, -q, zero};
    const Cyclotomic lambda = -slq::q_half_power(ell, 3);
    slq::ScalarVector expect = v;
    for (auto& x : expect)
        x = x * lambda;
    EXPECT_EQ(slq::apply_row(v, psi), expect);
    EXPECT_TRUE(slq::eigenstructure_check_v1v1(ell, R).eigenspace_exact);
}

TEST(Braiding, StatisticsSigns) {
    const Corep V0 = slq::build_V(0, 3), V1 = slq::build_V(1, 3), W1 = slq::build_W(1, 3), W2 = slq::build_W(2, 3);
    EXPECT_EQ(slq::statistics_sign(W1, W1), -1);
    EXPECT_EQ(slq::statistics_sign(V1, W1), -1);
    EXPECT_EQ(slq::statistics_sign(W1, V1), -1);
    EXPECT_EQ(slq::statistics_sign(W2, W1), 1);
    EXPECT_EQ(slq::statistics_sign(V0, V1), 1);
    EXPECT_FALSE(slq::statistics_sign(V1, V1).has_value());
}

TEST(Braiding, BraidRelationAndHexagon) {
    Pairing R(3);
    const Corep V1 = slq::build_V(1, 3), V2 = slq::build_V(2, 3), W1 = slq::build_W(1, 3);
    EXPECT_TRUE(slq::check_braid_relation(V1, V1, V1, R));
    EXPECT_TRUE(slq::check_braid_relation(V1, V2, W1, R));
    const auto hex = slq::check_hexagon(V1, V2, W1, R);
    EXPECT_TRUE(hex.left);
    EXPECT_TRUE(hex.right);
    EXPECT_TRUE(slq::check_hexagon(V1, V1, V1, R).ok());
}

TEST(Braiding, Naturality) {
    Pairing R(3);
    const Corep V0 = slq::build_V(0, 3), V1 = slq::build_V(1, 3), V11 = slq::tensor(V1, V1);
    const auto h = slq::hom_space(V0, V11);
    ASSERT_EQ(h.size(), 1U);
    EXPECT_TRUE(slq::check_naturality(h[0], V0, V11, V1, R).ok());
    EXPECT_TRUE(slq::check_naturality(h[0], V0, V11, slq::build_W(1, 3), R).ok());
}

TEST(Braiding, FlipMatrix) {
    const auto f = slq::flip_matrix(2, 3, 3);
    EXPECT_EQ(f(1, 2), Cyclotomic(3, 1));
    EXPECT_EQ(f * slq::flip_matrix(3, 2, 3), slq::identity_matrix(6, 3));
}
