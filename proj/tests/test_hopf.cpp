#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>
#include <utility>

#include "oracles.hpp"
#include "slq/hopf.hpp"
#include "slq/rewrite.hpp"

using slq::AlgebraMode;
using slq::Cyclotomic;
using slq::Element;
using slq::Gen;

namespace {

Element el(const char* text, AlgebraMode mode) { return slq::parse_element(text, mode); }

using PairLin = std::map<std::pair<std::string, std::string>, oracle::C>;

PairLin lin_of(const slq::Tensor2& t) {
    PairLin out;
    for (const auto& [key, c] : t.terms())
        out[{oracle::spell(key[0]), oracle::spell(key[1])}] += c.evaluate();
    return out;
}

// Δ(w) on the word level, both legs normalised by the oracle rewriter.
PairLin oracle_coproduct(const std::string& w, int ell) {
    PairLin out;
    oracle::for_each_coproduct_term(w, [&](const std::string& l, const std::string& r) {
        for (const auto& [lw, lc] : oracle::normal_form(l, ell))
            for (const auto& [rw, rc] : oracle::normal_form(r, ell))
                out[{lw, rw}] += lc * rc;
    });
    return out;
}

bool same(const PairLin& x, const PairLin& y) {
    PairLin diff = x;
    for (const auto& [k, c] : y)
        diff[k] -= c;
    for (const auto& [k, c] : diff)
        if (std::abs(c) > 1e-8)
            return false;
    return true;
}

slq::Tensor2 tensor(const Element& x, const Element& y) {
    slq::Tensor2 out(x.mode());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms())
            out.add_term({mx, my}, cx * cy);
    return out;
}

} // namespace

TEST(Coproduct, Generators) {
    const auto G = AlgebraMode::generic(3);
    const Element a = el("a", G), b = el("b", G), c = el("c", G), d = el("d", G);
    slq::Tensor2 expected = tensor(a, a);
    expected += tensor(b, c);
    EXPECT_EQ(slq::coproduct(a), expected);
    slq::Tensor2 one = tensor(Element::one(G), Element::one(G));
    EXPECT_EQ(slq::coproduct(Element::one(G)), one);
    slq::Tensor2 dd = tensor(c, b);
    dd += tensor(d, d);
    EXPECT_EQ(slq::coproduct(d), dd);
}

TEST(Coproduct, SquareOfA) {
    for (int ell : {3, 5, 7}) {
        const auto G = AlgebraMode::generic(ell);
        const Cyclotomic coeff = Cyclotomic(ell, 1) + slq::q_power(ell, -2);
        slq::Tensor2 expected = tensor(el("a^2", G), el("a^2", G));
        slq::Tensor2 middle = tensor(el("a b", G), el("a c", G));
        middle *= coeff;
        expected += middle;
        expected += tensor(el("b^2", G), el("c^2", G));
        EXPECT_EQ(slq::coproduct(el("a^2", G)), expected) << ell;
    }
}

TEST(Coproduct, MatchesWordLevelOracle) {
    for (int ell : {3, 5}) {
        const auto G = AlgebraMode::generic(ell);
        for (const auto& m : slq::basis_monomials(G, 4)) {
            const std::string w = oracle::spell(m);
            EXPECT_TRUE(same(lin_of(slq::coproduct(Element::monomial(G, m, Cyclotomic(ell, 1)))), oracle_coproduct(w, ell)))
                << w << " ell " << ell;
        }
    }
}

TEST(Coproduct, IsAnAlgebraMap) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> letter(0, 3), len(0, 4);
    for (auto mode : {AlgebraMode::generic(3), AlgebraMode::quotient_f(3), AlgebraMode::quotient_fhat(3)}) {
        for (int i = 0; i < 30; ++i) {
            std::string u, v;
            for (int k = len(rng); k > 0; --k)
                u += static_cast<char>('a' + letter(rng));
            for (int k = len(rng); k > 0; --k)
                v += static_cast<char>('a' + letter(rng));
            const Element x = slq::from_word(mode, slq::word_of_string(u));
            const Element y = slq::from_word(mode, slq::word_of_string(v));
            EXPECT_EQ(slq::coproduct(x * y), slq::coproduct(x) * slq::coproduct(y)) << u << "·" << v << " " << mode.name();
        }
    }
}

TEST(Counit, Examples) {
    const auto G = AlgebraMode::generic(3);
    EXPECT_TRUE(slq::counit(el("a b", G)).is_zero());
    EXPECT_EQ(slq::counit(el("a^2 d^0 + 2 d", G)), Cyclotomic(3, 3));
    EXPECT_EQ(slq::counit(el("a d", G)), Cyclotomic(3, 1));
}

TEST(Antipode, Examples) {
    const auto G = AlgebraMode::generic(3);
    EXPECT_EQ(slq::antipode(el("a", G)), el("d", G));
    EXPECT_EQ(slq::antipode(el("d", G)), el("a", G));
    EXPECT_EQ(slq::antipode(el("b", G)), el("-q^(-1) b", G));
    EXPECT_EQ(slq::antipode(el("c", G)), el("-q c", G));
    EXPECT_EQ(slq::antipode(el("a b", G)), el("-q^(-1) b d", G));
}

TEST(Antipode, IsAnAntiHomomorphism) {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> letter(0, 3), len(0, 4);
    for (auto mode : {AlgebraMode::generic(5), AlgebraMode::quotient_f(3), AlgebraMode::quotient_fhat(3)}) {
        for (int i = 0; i < 30; ++i) {
            std::string u, v;
            for (int k = len(rng); k > 0; --k)
                u += static_cast<char>('a' + letter(rng));
            for (int k = len(rng); k > 0; --k)
                v += static_cast<char>('a' + letter(rng));
            const Element x = slq::from_word(mode, slq::word_of_string(u));
            const Element y = slq::from_word(mode, slq::word_of_string(v));
            EXPECT_EQ(slq::antipode(x * y), slq::antipode(y) * slq::antipode(x)) << mode.name();
        }
    }
}

TEST(HopfAxioms, SmallExamples) {
    const auto G = AlgebraMode::generic(3);
    EXPECT_TRUE(slq::check_hopf_axioms(el("a", G)).all());
    EXPECT_TRUE(slq::check_hopf_axioms(el("a^2 b c", G)).all());
    EXPECT_TRUE(slq::check_hopf_axioms(el("a^2 b c - q d^3 + 1", G)).all());
}

TEST(HopfAxioms, AllLowDegreeMonomials) {
    for (int ell : {3, 5, 7}) {
        const auto G = AlgebraMode::generic(ell);
        for (const auto& m : slq::basis_monomials(G, 4))
            EXPECT_TRUE(slq::check_hopf_axioms(Element::monomial(G, m, Cyclotomic(ell, 1))).all())
                << slq::monomial_string(m) << " ell " << ell;
    }
}

TEST(HopfAxioms, QuotientBases) {
    for (auto mode : {AlgebraMode::quotient_f(3), AlgebraMode::quotient_fhat(3), AlgebraMode::quotient_f(5)}) {
        for (const auto& m : slq::basis_monomials(mode, 0))
            EXPECT_TRUE(slq::check_hopf_axioms(Element::monomial(mode, m, Cyclotomic(mode.ell, 1))).all())
                << slq::monomial_string(m) << " " << mode.name();
    }
}

TEST(Characters, Examples) {
    const auto F = AlgebraMode::quotient_f(3);
    const auto chi1 = slq::character(1, F);
    EXPECT_EQ(slq::evaluate_character(chi1, el("a", F)), slq::q_power(3, 1));
    EXPECT_EQ(slq::evaluate_character(chi1, el("d", F)), slq::q_power(3, -1));
    EXPECT_TRUE(slq::evaluate_character(chi1, el("b", F)).is_zero());
    EXPECT_TRUE(slq::evaluate_character(chi1, el("c", F)).is_zero());
    const auto chi3 = slq::character(3, F);
    for (const auto& m : slq::basis_monomials(F, 0)) {
        const Element x = Element::monomial(F, m, Cyclotomic(3, 1));
        EXPECT_EQ(slq::evaluate_character(chi3, x), slq::counit(x));
    }
    EXPECT_EQ(slq::convolve(chi1, slq::character(2, F)).index, 0);
    EXPECT_THROW(slq::character(1, AlgebraMode::generic(3)), slq::usage_error);
}

TEST(Characters, ConvolutionThroughCoproduct) {
    for (auto mode : {AlgebraMode::quotient_f(5), AlgebraMode::quotient_fhat(3)}) {
        for (int i = 0; i < mode.period(); ++i)
            for (int j = 0; j < mode.period(); ++j) {
                const auto x = slq::character(i, mode), y = slq::character(j, mode);
                const auto xy = slq::convolve(x, y);
                EXPECT_EQ(xy.index, (i + j) % mode.period());
                for (const char* e : {"a", "a^2 b c", "a b^2", "c d"}) {
                    const Element z = el(e, mode);
                    EXPECT_EQ(slq::convolution_value(x, y, z), slq::evaluate_character(xy, z)) << e;
                }
            }
    }
}

TEST(Characters, HatCharactersRestrict) {
    const int ell = 3;
    const auto Fh = AlgebraMode::quotient_fhat(ell);
    EXPECT_EQ(slq::character(1, Fh).value_on_a(), slq::q_half_power(ell, 1));
    int kernel = 0;
    for (int i = 0; i < 2 * ell; ++i) {
        const auto r = slq::restrict_character(slq::character(i, Fh));
        EXPECT_EQ(r.mode.kind, slq::ModeKind::quotient_f);
        EXPECT_EQ(r.index, i % ell);
        EXPECT_EQ(r.value_on_a(), slq::character(i, Fh).value_on_a() * slq::character(i, Fh).value_on_a());
        kernel += r.index == 0 ? 1 : 0;
    }
    EXPECT_EQ(kernel, 2);
}

TEST(Representation, GeneratorsMatchDefinition) {
    for (int ell : {3, 5}) {
        const auto r = slq::representation_generators(ell);
        const auto expected = oracle::rep_generators(ell);
        auto to_c = [](const slq::ScalarMatrix& m) {
            oracle::CMatrix out(m.rows(), std::vector<oracle::C>(m.cols()));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    out[i][j] = m(i, j).evaluate();
            return out;
        };
        EXPECT_TRUE(oracle::same(to_c(r.a), expected[0])) << ell;
        EXPECT_TRUE(oracle::same(to_c(r.b), expected[1])) << ell;
        EXPECT_TRUE(oracle::same(to_c(r.c), expected[2])) << ell;
    }
}

TEST(Representation, NilpotentAndFaithful) {
    const auto F = AlgebraMode::quotient_f(3);
    const auto r = slq::representation_generators(3);
    EXPECT_TRUE(slq::is_zero(slq::matrix_power(r.b, 3)));
    EXPECT_EQ(slq::matrix_representation_F(el("a", F)), r.a);
    std::vector<slq::ScalarVector> rows;
    for (const auto& m : slq::basis_monomials(F, 0)) {
        const auto img = slq::matrix_representation_F(Element::monomial(F, m, Cyclotomic(3, 1)));
        rows.emplace_back(img.data().begin(), img.data().end());
    }
    EXPECT_EQ(slq::rank(slq::from_rows(rows, 27 * 27, 3)), 27U);
}

TEST(Coinvariance, Examples) {
    const auto G = AlgebraMode::generic(3);
    const auto F = AlgebraMode::quotient_f(3), Fh = AlgebraMode::quotient_fhat(3);
    EXPECT_TRUE(slq::coinvariance_check(el("a^3", G), F));
    EXPECT_FALSE(slq::coinvariance_check(el("a", G), F));
    EXPECT_TRUE(slq::coinvariance_check(el("a^3 b^3", G), Fh));
    EXPECT_FALSE(slq::coinvariance_check(el("a^3", G), Fh));
    EXPECT_TRUE(slq::coinvariance_check(el("a^3 c^3 + d^6", G), Fh));
}
