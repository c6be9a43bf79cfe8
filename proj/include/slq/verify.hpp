#pragma once

// Verification suites.  Every claim belongs to exactly one numbered
// acceptance criterion (1–10); a suite is a fixed set of criteria.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/braid.hpp"
#include "slq/corep.hpp"
#include "slq/cyclo.hpp"
#include "slq/decompose.hpp"
#include "slq/hopf.hpp"
#include "slq/linalg.hpp"
#include "slq/rewrite.hpp"

namespace slq {

struct Claim {
    int criterion = 0;
    std::string id;
    std::string anchor;
    bool pass = false;
    std::vector<std::string> witness;
};

struct VerificationReport {
    std::string suite;
    std::vector<Claim> claims;

    bool ok() const {
        return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
    }
    bool criterion_ok(int k) const {
        return std::all_of(claims.begin(), claims.end(), [&](const Claim& c) { return c.criterion != k || c.pass; });
    }
};

struct VerifyOptions {
    std::vector<int> ells{3, 5};
    PairingConvention convention = PairingConvention::standard;
    std::uint64_t seed = 20240601;
    int confluence_words = 1000;
};

// ---------------------------------------------------------------------------
// Printed reference matrices at ℓ = 3, rows and columns in the ordering of
// braiding_matrix (rows u_i ⊗ u'_r, columns u'_s ⊗ u_j).

struct ReferenceTable {
    std::string id;
    int left_m;  // Ψ_{V_left, V_right}
    int right_m;
    std::vector<std::vector<std::string>> rows;
};

inline const std::vector<ReferenceTable>& reference_braidings() {
    static const std::vector<ReferenceTable> tables{
        {"braiding-V1-V1",
         1,
         1,
         {{"q^(-1/2)", "0", "0", "0"},
          {"0", "0", "q^(1/2)", "0"},
          {"0", "q^(1/2)", "1 + q^(-1/2)", "0"},
          {"0", "0", "0", "q^(-1/2)"}}},
        {"braiding-V2-V1",
         2,
         1,
         {{"q^2", "0", "0", "0", "0", "0"},
          {"0", "0", "0", "q", "0", "0"},
          {"0", "1", "0", "q^2 - q", "0", "0"},
          {"0", "0", "0", "0", "1", "0"},
          {"0", "0", "q", "0", "1 - q", "0"},
          {"0", "0", "0", "0", "0", "q^2"}}},
        {"braiding-V1-V2",
         1,
         2,
         {{"q^2", "0", "0", "0", "0", "0"},
          {"0", "0", "1", "0", "0", "0"},
          {"0", "0", "0", "0", "q", "0"},
          {"0", "q", "q - q^2", "0", "0", "0"},
          {"0", "0", "0", "1", "1 - q^2", "0"},
          {"0", "0", "0", "0", "0", "q^2"}}},
        {"braiding-V2-V2",
         2,
         2,
         {{"q", "0", "0", "0", "0", "0", "0", "0", "0"},
          {"0", "0", "0", "1", "0", "0", "0", "0", "0"},
          {"0", "0", "0", "0", "0", "0", "q", "0", "0"},
          {"0", "1", "0", "1 - q", "0", "0", "0", "0", "0"},
          {"0", "0", "0", "0", "1", "0", "1 - q^2", "0", "0"},
          {"0", "0", "0", "0", "0", "0", "0", "1", "0"},
          {"0", "0", "q^2", "0", "q - 1", "0", "-(q - 1)(q - 1)", "0", "0"},
          {"0", "0", "0", "0", "0", "1", "0", "1 - q", "0"},
          {"0", "0", "0", "0", "0", "0", "0", "0", "q^2"}}},
    };
    return tables;
}

inline ScalarMatrix reference_matrix(const ReferenceTable& t, int ell = 3) {
    const std::size_t n = t.rows.size();
    ScalarMatrix m = zero_matrix(n, n, ell);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = parse_scalar(t.rows[i][j], ell);
    return m;
}

inline const ReferenceTable& reference_braiding(int left_m, int right_m) {
    for (const auto& t : reference_braidings())
        if (t.left_m == left_m && t.right_m == right_m)
            return t;
    throw usage_error("no reference braiding for V" + std::to_string(left_m) + ", V" + std::to_string(right_m));
}

namespace detail {

inline bool has_ell(const VerifyOptions& o, int ell) {
    return std::find(o.ells.begin(), o.ells.end(), ell) != o.ells.end();
}

inline std::string cell(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

inline Claim make_claim(int criterion, std::string id, std::string anchor) {
    Claim c;
    c.criterion = criterion;
    c.id = "AC" + std::to_string(criterion) + "/" + std::move(id);
    c.anchor = std::move(anchor);
    c.pass = true;
    return c;
}

inline void fail(Claim& c, std::string why) {
    c.pass = false;
    c.witness.push_back(std::move(why));
}

inline std::string ells_text(const std::vector<int>& ells) {
    std::string s;
    for (int e : ells)
        s += (s.empty() ? "" : ",") + std::to_string(e);
    return s;
}

// ---------------------------------------------------------------------------
// 1, 2: reference braidings and eigenstructure

inline void braiding_tables(const VerifyOptions& o, std::vector<Claim>& out) {
    if (!has_ell(o, 3))
        return;
    Pairing R(3, o.convention);
    for (const auto& t : reference_braidings()) {
        Claim c = make_claim(1, t.id, "printed braiding Ψ(V" + std::to_string(t.left_m) + " ⊗ V" +
                                          std::to_string(t.right_m) + ") at ell 3, convention " +
                                          convention_name(o.convention));
        const Corep A = build_V(t.left_m, 3), B = build_V(t.right_m, 3);
        const ScalarMatrix computed = braiding_matrix(A, B, R).matrix;
        const ScalarMatrix printed = reference_matrix(t);
        std::size_t bad = 0;
        for (std::size_t i = 0; i < printed.rows(); ++i)
            for (std::size_t j = 0; j < printed.cols(); ++j)
                if (!(computed(i, j) == printed(i, j))) {
                    ++bad;
                    c.witness.push_back(cell(i, j) + " computed " + to_half_power_string(computed(i, j)) +
                                        ", printed " + to_half_power_string(printed(i, j)));
                }
        if (bad) {
            c.pass = false;
            bool printed_is_map = is_intertwiner(tensor(A, B), tensor(B, A), printed);
            bool computed_is_map = is_intertwiner(tensor(A, B), tensor(B, A), computed);
            c.witness.insert(c.witness.begin(),
                             std::to_string(bad) + " of " + std::to_string(printed.rows() * printed.cols()) +
                                 " entries differ; printed matrix is a comodule map: " +
                                 (printed_is_map ? "yes" : "no") +
                                 "; computed matrix is a comodule map: " + (computed_is_map ? "yes" : "no"));
        }
        out.push_back(std::move(c));
    }
}

inline void eigenstructure(const VerifyOptions& o, std::vector<Claim>& out) {
    if (!has_ell(o, 3))
        return;
    Pairing R(3, o.convention);
    EigenReport e = eigenstructure_check_v1v1(3, R);
    Claim c1 = make_claim(2, "fixed-vector", "a⊗c − q c⊗a is fixed by Ψ on V1⊗V1");
    if (!e.fixed_vector)
        fail(c1, "Ψ(a⊗c − q c⊗a) differs from a⊗c − q c⊗a");
    Claim c2 = make_claim(2, "eigenspace", "span{a⊗a, q a⊗c + c⊗a, c⊗c} is the q^(-1/2)-eigenspace of Ψ on V1⊗V1");
    if (!e.eigenspace_spans)
        fail(c2, "a listed vector is not a q^(-1/2)-eigenvector");
    if (!e.eigenspace_exact)
        fail(c2, "the q^(-1/2)-eigenspace is not exactly the listed span");
    out.push_back(std::move(c1));
    out.push_back(std::move(c2));
}

// 3: statistics
inline void statistics(const VerifyOptions& o, std::vector<Claim>& out) {
    for (int ell : o.ells) {
        Pairing R(ell, o.convention);
        std::vector<Corep> W;
        for (int n = 0; n <= 3; ++n)
            W.push_back(build_W(n, ell));
        Claim cw = make_claim(3, "WW-ell" + std::to_string(ell), "Ψ on W_n⊗W_n' is (−1)^(nn')·flip, n, n' ≤ 3");
        for (int n = 0; n <= 3; ++n)
            for (int np = 0; np <= 3; ++np) {
                auto s = statistics_sign(W[static_cast<std::size_t>(n)], W[static_cast<std::size_t>(np)], R);
                int expect = (n * np) % 2 ? -1 : 1;
                if (!s || *s != expect)
                    fail(cw, "W" + std::to_string(n) + "⊗W" + std::to_string(np) + ": " +
                                 (s ? "sign " + std::to_string(*s) : std::string("not a scalar flip")));
            }
        Claim cv = make_claim(3, "VW-ell" + std::to_string(ell), "Ψ on V_m⊗W_n is (−1)^(mn)·flip, m ≤ ℓ−1, n ≤ 3");
        for (int m = 0; m < ell; ++m) {
            Corep V = build_V(m, ell);
            for (int n = 0; n <= 3; ++n) {
                auto s = statistics_sign(V, W[static_cast<std::size_t>(n)], R);
                int expect = (m * n) % 2 ? -1 : 1;
                if (!s || *s != expect)
                    fail(cv, "V" + std::to_string(m) + "⊗W" + std::to_string(n) + ": " +
                                 (s ? "sign " + std::to_string(*s) : std::string("not a scalar flip")));
            }
        }
        out.push_back(std::move(cw));
        out.push_back(std::move(cv));
    }
}

// 4: braid relation and hexagons
inline void braid_relations(const VerifyOptions& o, std::vector<Claim>& out) {
    if (!has_ell(o, 3))
        return;
    Pairing R(3, o.convention);
    const std::vector<Corep> S{build_V(1, 3), build_V(2, 3), build_W(1, 3)};
    Claim cb = make_claim(4, "braid-relation", "braid relation on all triples from {V1, V2, W1}");
    Claim ch = make_claim(4, "hexagon", "both hexagon identities on all triples from {V1, V2, W1}");
    for (const auto& A : S)
        for (const auto& B : S)
            for (const auto& C : S) {
                const std::string name = "(" + A.name + "," + B.name + "," + C.name + ")";
                if (!check_braid_relation(A, B, C, R))
                    fail(cb, name);
                HexagonReport h = check_hexagon(A, B, C, R);
                if (!h.left)
                    fail(ch, name + " first hexagon");
                if (!h.right)
                    fail(ch, name + " second hexagon");
            }
    out.push_back(std::move(cb));
    out.push_back(std::move(ch));
}

// 5: decomposition table
inline DecompositionTree clebsch_gordan(int n, int np) {
    std::vector<DecompositionTree> parts;
    for (int k = std::abs(n - np); k <= n + np; k += 2)
        parts.push_back(DecompositionTree::leaf(k, 0, static_cast<std::size_t>(k + 1)));
    return DecompositionTree::direct_sum(std::move(parts));
}

inline void decomposition_table(const VerifyOptions& o, std::vector<Claim>& out) {
    if (!has_ell(o, 3))
        return;
    using T = DecompositionTree;
    const Corep V1 = build_V(1, 3), V2 = build_V(2, 3), W1 = build_W(1, 3);
    struct Row {
        std::string id;
        Corep C;
        T expected;
    };
    std::vector<Row> rows;
    rows.push_back({"V1xV1", tensor(V1, V1), T::direct_sum({T::leaf(0, 0, 1), T::leaf(0, 2, 3)})});
    rows.push_back(
        {"V1xV2", tensor(V1, V2), T::extension(T::leaf(0, 1, 2), T::extension(T::leaf(1, 0, 2), T::leaf(0, 1, 2)))});
    rows.push_back({"V2xV2", tensor(V2, V2),
                    T::extension(T::leaf(0, 0, 1),
                                 T::extension(T::leaf(0, 2, 3),
                                              T::extension(T::direct_sum({T::leaf(1, 0, 2), T::leaf(0, 1, 2)}),
                                                           T::leaf(0, 0, 1))))});
    for (auto& r : rows) {
        Claim c = make_claim(5, r.id, "decomposition of " + r.C.name + " = " + r.expected.to_text());
        T got = decompose_l3(r.C);
        if (!(got == r.expected))
            fail(c, "computed " + got.to_text());
        out.push_back(std::move(c));
    }
    Claim cg = make_claim(5, "W-series", "W_n⊗W_n' = W_|n−n'| ⊕ … ⊕ W_(n+n') for n + n' ≤ 4");
    for (int n = 0; n <= 4; ++n)
        for (int np = 0; n + np <= 4; ++np) {
            T expected = clebsch_gordan(n, np);
            T got = decompose_l3(tensor(build_W(n, 3), build_W(np, 3)));
            if (!(got == expected))
                fail(cg, "W" + std::to_string(n) + "⊗W" + std::to_string(np) + ": computed " + got.to_text() +
                             ", expected " + expected.to_text());
        }
    out.push_back(std::move(cg));

    for (int m : {1, 2}) {
        const Corep V = build_V(m, 3);
        const Corep cube = tensor(V, tensor(V, V));
        const std::string name = "(V" + std::to_string(m) + ")^3";
        Claim sub = make_claim(5, "V" + std::to_string(m) + "-cube-no-sub", "W1 is not a subcomodule of " + name);
        if (auto h = hom_space(W1, cube); !h.empty())
            fail(sub, "hom(W1, " + name + ") has dimension " + std::to_string(h.size()));
        out.push_back(std::move(sub));
        Claim quot = make_claim(5, "V" + std::to_string(m) + "-cube-subquotient",
                                "W1 occurs in " + name + " as a quotient of a subcomodule");
        T tree = decompose_l3(cube);
        auto leaves = tree.leaves();
        quot.witness.push_back("decomposition " + tree.to_text());
        quot.witness.push_back("dim hom(" + name + ", W1) = " + std::to_string(hom_space(cube, W1).size()));
        if (std::find(leaves.begin(), leaves.end(), "W1") == leaves.end()) {
            quot.pass = false;
            auto w = torus_weights(cube);
            bool odd = w && std::any_of(w->begin(), w->end(), [](int x) { return x % 2 != 0; });
            quot.witness.push_back(std::string("W1 is not a composition factor; ") +
                                   (odd ? "" : "all torus weights are even while W1 has weights ±3"));
        }
        out.push_back(std::move(quot));
    }
    Claim y = make_claim(5, "Y3-cube-sub", "W1 is a subcomodule of (Y3)^3");
    const Corep Y3 = build_Y(3, 3);
    const Corep Ycube = tensor(Y3, tensor(Y3, Y3));
    auto h = hom_space(W1, Ycube);
    if (h.empty())
        fail(y, "hom(W1, (Y3)^3) = 0");
    else if (rank(h.front()) != 2)
        fail(y, "intertwiner W1 → (Y3)^3 is not injective");
    else
        y.witness.push_back("dim hom(W1, (Y3)^3) = " + std::to_string(h.size()));
    out.push_back(std::move(y));
}

// 6: irreducibility certificates and subcomodule structure
inline void prop_certificates(const VerifyOptions& o, std::vector<Claim>& out) {
    for (int ell : o.ells) {
        Claim c = make_claim(6, "V-irreducible-ell" + std::to_string(ell),
                             "V_m has dim² independent matrix elements for m ≤ ℓ−1");
        for (int m = 0; m < ell; ++m) {
            auto cert = irreducibility_certificate(build_V(m, ell));
            if (!cert.independent)
                fail(c, "V" + std::to_string(m) + ": rank " + std::to_string(cert.rank) + " < " +
                            std::to_string(cert.entries));
        }
        out.push_back(std::move(c));
    }
    auto structure = [&](int ell, int m0, int m1, Claim& c) {
        const int m = m0 + ell * m1;
        const Corep Y = build_Y(m, ell);
        std::vector<std::size_t> idx;
        for (int h = 0; h <= m; ++h)
            if (h % ell <= m0)
                idx.push_back(static_cast<std::size_t>(h));
        Subspace S = span_of_basis_vectors(Y, idx);
        const std::string tag = "Y" + std::to_string(m) + " (ell " + std::to_string(ell) + ")";
        if (!subcomodule_check(Y, S)) {
            fail(c, tag + ": span of a^(m−h)c^h, h mod ℓ ≤ " + std::to_string(m0) + " is not a subcomodule");
            return;
        }
        const Corep sub = sub_corep(Y, S), quot = quotient_corep(Y, S);
        const Corep want_sub = build_irreducible(m1, m0, ell);
        const Corep want_quot = build_irreducible(m1 - 1, ell - 2 - m0, ell);
        if (!find_isomorphism(want_sub, sub))
            fail(c, tag + ": subcomodule not isomorphic to " + want_sub.name);
        if (!find_isomorphism(want_quot, quot))
            fail(c, tag + ": quotient not isomorphic to " + want_quot.name);
    };
    if (has_ell(o, 3)) {
        Claim y5 = make_claim(6, "Y5", "Y5 is irreducible and isomorphic to W1⊗V2 at ell 3");
        const Corep Y5 = build_Y(5, 3);
        auto cert = irreducibility_certificate(Y5);
        if (!cert.independent)
            fail(y5, "matrix-element rank " + std::to_string(cert.rank));
        auto iso = find_isomorphism(build_irreducible(1, 2, 3), Y5);
        if (!iso)
            fail(y5, "no invertible intertwiner W1⊗V2 → Y5");
        out.push_back(std::move(y5));
        Claim y3 = make_claim(6, "Y3", "Y3 ⊃ W1 with quotient V1 at ell 3");
        structure(3, 0, 1, y3);
        out.push_back(std::move(y3));
        Claim y4 = make_claim(6, "Y4", "Y4 ⊃ W1⊗V1 with quotient V0 at ell 3");
        structure(3, 1, 1, y4);
        out.push_back(std::move(y4));
    }
    if (has_ell(o, 5)) {
        Claim c = make_claim(6, "Y-structure-ell5",
                             "Y_(m0+5m1) ⊃ W_m1⊗V_m0 with quotient W_(m1−1)⊗V_(3−m0), m0 ≤ 3, m1 ∈ {1,2}");
        for (int m1 : {1, 2})
            for (int m0 = 0; m0 <= 3; ++m0)
                structure(5, m0, m1, c);
        out.push_back(std::move(c));
    }
}

// 7: q-binomial factorization
inline void qbinomial_factorization(const VerifyOptions& o, std::vector<Claim>& out) {
    for (int ell : o.ells) {
        Claim c = make_claim(7, "factorization-ell" + std::to_string(ell),
                             "(m choose r)_{q^-2} = (m0 choose r0)_{q^-2} · binom(m1, r1), 0 ≤ r ≤ m ≤ 3ℓ");
        std::size_t checked = 0, vanishing = 0;
        for (int m = 0; m <= 3 * ell; ++m)
            for (int r = 0; r <= m; ++r) {
                const int m0 = m % ell, m1 = m / ell, r0 = r % ell, r1 = r / ell;
                mpz_class classical = 0;
                if (r1 <= m1)
                    mpz_bin_uiui(classical.get_mpz_t(), static_cast<unsigned long>(m1), static_cast<unsigned long>(r1));
                Cyclotomic rhs = q_binomial(ell, m0, r0, -2) * Cyclotomic(ell, Rational(classical));
                Cyclotomic lhs = q_binomial(ell, m, r, -2);
                ++checked;
                if (!(lhs == rhs))
                    fail(c, "m=" + std::to_string(m) + ", r=" + std::to_string(r) + ": " + lhs.to_string() +
                                " vs " + rhs.to_string());
                if (r0 > m0) {
                    ++vanishing;
                    if (!lhs.is_zero())
                        fail(c, "m=" + std::to_string(m) + ", r=" + std::to_string(r) + " should vanish");
                }
            }
        c.witness.push_back(std::to_string(checked) + " pairs, " + std::to_string(vanishing) + " with r0 > m0");
        out.push_back(std::move(c));
    }
}

// 8: Hopf axioms and confluence
inline void hopf_axioms(const VerifyOptions& o, std::vector<Claim>& out) {
    for (int ell : o.ells) {
        const AlgebraMode mode = AlgebraMode::generic(ell);
        Claim c = make_claim(8, "hopf-ell" + std::to_string(ell),
                             "coassociativity, counit and antipode on every PBW monomial of degree ≤ 4");
        std::size_t n = 0;
        for (const auto& m : basis_monomials(mode, 4)) {
            ++n;
            HopfReport r = check_hopf_axioms(Element::monomial(mode, m, Cyclotomic(ell, 1)));
            if (!r.all())
                fail(c, monomial_string(m) + (r.coassociative ? "" : " coassociativity") +
                            (r.counit_left && r.counit_right ? "" : " counit") +
                            (r.antipode_left && r.antipode_right ? "" : " antipode"));
        }
        c.witness.push_back(std::to_string(n) + " monomials");
        out.push_back(std::move(c));

        Claim k = make_claim(8, "confluence-ell" + std::to_string(ell),
                             "random words of length ≤ 8 reach the same normal form under random reduction orders");
        std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(ell));
        std::uniform_int_distribution<int> len(0, 8), letter(0, 3);
        for (int trial = 0; trial < o.confluence_words; ++trial) {
            std::string w;
            for (int i = len(rng); i > 0; --i)
                w += static_cast<char>('a' + letter(rng));
            Element engine = from_word(mode, word_of_string(w));
            Element first = element_of_words(rewrite_random_order(w, ell, rng()), ell);
            Element second = element_of_words(rewrite_random_order(w, ell, rng()), ell);
            if (!(first == second) || !(first == engine)) {
                fail(k, "word " + w + ": " + to_string(first) + " | " + to_string(second) + " | " + to_string(engine));
                break;
            }
        }
        k.witness.push_back(std::to_string(o.confluence_words) + " words");
        out.push_back(std::move(k));
    }
}

// 9: the quotient A(F), its representation and characters
inline void finite_quotient(const VerifyOptions& o, std::vector<Claim>& out) {
    for (int ell : o.ells) {
        const AlgebraMode F = AlgebraMode::quotient_f(ell), Fh = AlgebraMode::quotient_fhat(ell);
        const std::string tag = "-ell" + std::to_string(ell);
        Claim dim = make_claim(9, "dimension" + tag, "A(F) is spanned by ℓ³ monomials a^p b^r c^s");
        const auto basis = basis_monomials(F, 0);
        if (basis.size() != static_cast<std::size_t>(ell * ell * ell))
            fail(dim, "basis has " + std::to_string(basis.size()) + " monomials");
        // closure: every generator times every basis monomial stays in the span
        for (const auto& m : basis)
            for (Gen g : all_generators) {
                const Element product = Element::monomial(F, m, Cyclotomic(ell, 1)) * generator(F, g);
                for (const auto& [r, c] : product.terms())
                    if (r.t < 0 || r.t >= ell || r.j >= ell || r.k >= ell)
                        fail(dim, "product leaves the basis: " + monomial_string(r));
            }
        if (basis_monomials(Fh, 0).size() != static_cast<std::size_t>(2 * ell * ell * ell))
            fail(dim, "A(Fhat) basis does not have 2ℓ³ monomials");
        out.push_back(std::move(dim));

        if (ell == 3) {
            Claim rep = make_claim(9, "representation" + tag, "ϱ respects all relations of A(F) and is faithful");
            const RepresentationF r = representation_generators(ell);
            const int n = static_cast<int>(r.a.rows());
            const ScalarMatrix I = identity_matrix(static_cast<std::size_t>(n), ell);
            const Cyclotomic q = q_power(ell, 1), qi = q_power(ell, -1);
            auto check = [&](bool ok, const std::string& what) {
                if (!ok)
                    fail(rep, what);
            };
            check(r.a * r.b == q * (r.b * r.a), "ab = q ba");
            check(r.a * r.c == q * (r.c * r.a), "ac = q ca");
            check(r.b * r.c == r.c * r.b, "bc = cb");
            check(r.b * r.d == q * (r.d * r.b), "bd = q db");
            check(r.c * r.d == q * (r.d * r.c), "cd = q dc");
            check(r.a * r.d - r.d * r.a == (q - qi) * (r.b * r.c), "ad − da = (q − q^-1) bc");
            check(r.a * r.d - q * (r.b * r.c) == I, "ad − q bc = 1");
            check(matrix_power(r.a, ell) == I && matrix_power(r.d, ell) == I, "a^ℓ = 1 = d^ℓ");
            check(is_zero(matrix_power(r.b, ell)) && is_zero(matrix_power(r.c, ell)), "b^ℓ = 0 = c^ℓ");
            for (const auto& m : basis)
                for (Gen g : all_generators) {
                    Element x = Element::monomial(F, m, Cyclotomic(ell, 1));
                    Element y = generator(F, g);
                    if (!(matrix_representation_F(x * y) == matrix_representation_F(x) * matrix_representation_F(y)))
                        fail(rep, "ϱ(xy) ≠ ϱ(x)ϱ(y) for x = " + monomial_string(m));
                }
            std::vector<ScalarVector> images;
            for (const auto& m : basis) {
                ScalarMatrix img = matrix_representation_F(Element::monomial(F, m, Cyclotomic(ell, 1)));
                images.emplace_back(img.data().begin(), img.data().end());
            }
            std::size_t rk = rank(from_rows(images, static_cast<std::size_t>(n * n), ell));
            rep.witness.push_back("image rank " + std::to_string(rk));
            if (rk != basis.size())
                fail(rep, "not faithful");
            out.push_back(std::move(rep));
        }

        Claim chars = make_claim(9, "characters" + tag,
                                 "characters of A(F) form Z_ℓ with χ_i(a) = q^i; those of A(Fhat) form Z_2ℓ, "
                                 "restricting onto Z_ℓ with kernel of order 2");
        auto group_check = [&](const AlgebraMode& mode, const std::vector<Monomial>& mb) {
            const int order = mode.period();
            std::vector<Cyclotomic> values;
            for (int i = 0; i < order; ++i) {
                Character chi = character(i, mode);
                values.push_back(chi.value_on_a());
                if (mode.kind == ModeKind::quotient_f && !(chi.value_on_a() == q_power(ell, i)))
                    fail(chars, "χ_" + std::to_string(i) + "(a) ≠ q^" + std::to_string(i));
                for (int j = 0; j < order; ++j) {
                    Character psi = character(j, mode);
                    Character prod = convolve(chi, psi);
                    for (const auto& m : mb) {
                        Element x = Element::monomial(mode, m, Cyclotomic(ell, 1));
                        if (!(convolution_value(chi, psi, x) == evaluate_character(prod, x))) {
                            fail(chars, "convolution of χ_" + std::to_string(i) + " and χ_" + std::to_string(j));
                            return;
                        }
                    }
                }
                for (const auto& m : mb)
                    for (Gen g : all_generators) {
                        Element x = Element::monomial(mode, m, Cyclotomic(ell, 1));
                        Element y = generator(mode, g);
                        if (!(evaluate_character(chi, x * y) ==
                              evaluate_character(chi, x) * evaluate_character(chi, y))) {
                            fail(chars, "χ_" + std::to_string(i) + " is not multiplicative on " + mode.name());
                            return;
                        }
                    }
            }
            for (std::size_t i = 0; i < values.size(); ++i)
                for (std::size_t j = i + 1; j < values.size(); ++j)
                    if (values[i] == values[j])
                        fail(chars, "characters coincide on " + mode.name());
            // χ_0 is the counit, and χ_1 generates
            for (const auto& m : mb) {
                Element x = Element::monomial(mode, m, Cyclotomic(ell, 1));
                if (!(evaluate_character(character(0, mode), x) == counit(x)))
                    fail(chars, "χ_0 ≠ ε on " + mode.name());
            }
        };
        group_check(F, basis);
        const auto hat_basis = basis_monomials(Fh, 0);
        group_check(Fh, hat_basis);
        std::vector<int> kernel_indices;
        std::vector<bool> hit(static_cast<std::size_t>(ell), false);
        for (int i = 0; i < 2 * ell; ++i) {
            Character chi = character(i, Fh);
            Character res = restrict_character(chi);
            hit[static_cast<std::size_t>(res.index)] = true;
            if (res.index == 0)
                kernel_indices.push_back(i);
            for (int j = 0; j < 2 * ell; ++j)
                if (!(restrict_character(convolve(chi, character(j, Fh))) ==
                      convolve(res, restrict_character(character(j, Fh)))))
                    fail(chars, "restriction is not a homomorphism");
        }
        if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
            fail(chars, "restriction is not surjective");
        if (kernel_indices.size() != 2)
            fail(chars, "restriction kernel has order " + std::to_string(kernel_indices.size()));
        else
            chars.witness.push_back("kernel {χ_" + std::to_string(kernel_indices[0]) + ", χ_" +
                                    std::to_string(kernel_indices[1]) + "}");
        out.push_back(std::move(chars));
    }
}

// 10: centrality and coinvariance of ℓ-th powers
inline void coinvariance(const VerifyOptions& o, std::vector<Claim>& out) {
    for (int ell : o.ells) {
        const AlgebraMode G = AlgebraMode::generic(ell);
        const std::string tag = "-ell" + std::to_string(ell);
        Claim central = make_claim(10, "central" + tag, "a^ℓ, b^ℓ, c^ℓ, d^ℓ are central");
        for (Gen g : all_generators)
            if (!is_central(from_word(G, {{g, ell}})))
                fail(central, std::string(1, static_cast<char>(g)) + "^ℓ");
        out.push_back(std::move(central));

        Claim coF = make_claim(10, "coinvariant-F" + tag, "monomials in ℓ-th powers are A(F)-coinvariant");
        Claim coFh = make_claim(10, "coinvariant-Fhat" + tag,
                                "even monomials in ℓ-th powers are A(Fhat)-coinvariant");
        std::size_t odd_rejected = 0, odd_total = 0;
        for (const auto& m : basis_monomials(G, 2)) {
            const Monomial big{m.t * ell, m.j * ell, m.k * ell};
            Element x = Element::monomial(G, big, Cyclotomic(ell, 1));
            if (!coinvariance_check(x, AlgebraMode::quotient_f(ell)))
                fail(coF, monomial_string(big));
            const bool even = m.degree() % 2 == 0;
            const bool hat = coinvariance_check(x, AlgebraMode::quotient_fhat(ell));
            if (even && !hat)
                fail(coFh, monomial_string(big));
            if (!even) {
                ++odd_total;
                odd_rejected += hat ? 0 : 1;
            }
        }
        coFh.witness.push_back(std::to_string(odd_rejected) + " of " + std::to_string(odd_total) +
                               " odd monomials are not A(Fhat)-coinvariant");
        out.push_back(std::move(coF));
        out.push_back(std::move(coFh));
    }
}

} // namespace detail

/// Criteria grouped by suite name.
inline std::vector<int> suite_criteria(std::string_view suite) {
    if (suite == "braid")
        return {1, 2, 3, 4};
    if (suite == "corep")
        return {5, 6};
    if (suite == "props")
        return {7};
    if (suite == "hopf")
        return {8, 9, 10};
    if (suite == "all")
        return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    throw usage_error("unknown suite '" + std::string(suite) + "' (expected hopf, props, corep, braid or all)");
}

inline std::vector<Claim> verify_criterion(int k, const VerifyOptions& o) {
    std::vector<Claim> out;
    switch (k) {
    case 1:
        detail::braiding_tables(o, out);
        break;
    case 2:
        detail::eigenstructure(o, out);
        break;
    case 3:
        detail::statistics(o, out);
        break;
    case 4:
        detail::braid_relations(o, out);
        break;
    case 5:
        detail::decomposition_table(o, out);
        break;
    case 6:
        detail::prop_certificates(o, out);
        break;
    case 7:
        detail::qbinomial_factorization(o, out);
        break;
    case 8:
        detail::hopf_axioms(o, out);
        break;
    case 9:
        detail::finite_quotient(o, out);
        break;
    case 10:
        detail::coinvariance(o, out);
        break;
    default:
        throw usage_error("no acceptance criterion " + std::to_string(k));
    }
    return out;
}

inline VerificationReport run_suite(std::string_view suite, const VerifyOptions& o = {}) {
    VerificationReport r;
    r.suite = std::string(suite);
    for (int k : suite_criteria(suite))
        for (auto& c : verify_criterion(k, o))
            r.claims.push_back(std::move(c));
    return r;
}

} // namespace slq
