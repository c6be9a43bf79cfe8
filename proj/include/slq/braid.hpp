#pragma once

// The pairing ℛ on the generic algebra and the braiding Ψ of comodules.
//
// ℛ is fixed on generators by a 4×4 table (values in q^{1/2} = s) and
// extended to normal monomials by peeling one generator at a time:
//   ℛ(xy ⊗ z) = Σ ℛ(x ⊗ z₁) ℛ(y ⊗ z₂)
//   ℛ(x ⊗ yz) = Σ ℛ(x₁ ⊗ z) ℛ(x₂ ⊗ y)      (standard)
//   ℛ(x ⊗ yz) = Σ ℛ(x₁ ⊗ y) ℛ(x₂ ⊗ z)      (mixed)
// and ℛ(1 ⊗ x) = ε(x) = ℛ(x ⊗ 1).
//
// Ψ(u_i ⊗ u'_r) = Σ ℛ(ρ'_rs ⊗ ρ_ij) u'_s ⊗ u_j.  As a matrix acting on row
// vectors, rows are indexed i·nB + r and columns s·nA + j.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/corep.hpp"
#include "slq/cyclo.hpp"
#include "slq/error.hpp"
#include "slq/hopf.hpp"
#include "slq/linalg.hpp"

namespace slq {

enum class PairingConvention { standard, mixed };

inline std::string convention_name(PairingConvention c) {
    return c == PairingConvention::standard ? "standard" : "mixed";
}

/// Which slot is expanded first when neither argument is a generator.
enum class PeelOrder { first_slot, second_slot };

/// ℛ(g ⊗ h) for generators g, h.
inline Cyclotomic generator_pairing(int ell, Gen g, Gen h) {
    if ((g == Gen::a && h == Gen::a) || (g == Gen::d && h == Gen::d))
        return q_half_power(ell, -1);
    if ((g == Gen::a && h == Gen::d) || (g == Gen::d && h == Gen::a))
        return q_half_power(ell, 1);
    if (g == Gen::b && h == Gen::c)
        return q_half_power(ell, -1) - q_half_power(ell, 3);
    return Cyclotomic(ell);
}

/// Memoized ℛ on the generic algebra.  One object per thread: the memo is
/// not synchronized.
class Pairing {
public:
    explicit Pairing(int ell, PairingConvention convention = PairingConvention::standard,
                     PeelOrder order = PeelOrder::first_slot)
        : mode_(AlgebraMode::generic(ell)), convention_(convention), order_(order) {}

    int ell() const noexcept { return mode_.ell; }
    PairingConvention convention() const noexcept { return convention_; }
    PeelOrder order() const noexcept { return order_; }
    std::size_t cache_size() const noexcept { return memo_.size(); }

    Cyclotomic operator()(const Element& x, const Element& y) {
        if (!(x.mode() == mode_) || !(y.mode() == mode_))
            throw usage_error("r_pair: both arguments must live in the generic algebra with ell " +
                              std::to_string(mode_.ell));
        Cyclotomic out(mode_.ell);
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms()) {
                const Cyclotomic& v = monomials(mx, my);
                if (!v.is_zero())
                    out += cx * cy * v;
            }
        return out;
    }

    const Cyclotomic& monomials(const Monomial& x, const Monomial& y) {
        auto key = std::pair{x, y};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Cyclotomic v = compute(x, y);
        return memo_.emplace(key, std::move(v)).first->second;
    }

private:
    struct KeyLess {
        bool operator()(const std::pair<Monomial, Monomial>& a, const std::pair<Monomial, Monomial>& b) const {
            MonomialLess less;
            if (less(a.first, b.first))
                return true;
            if (less(b.first, a.first))
                return false;
            return less(a.second, b.second);
        }
    };

    AlgebraMode mode_;
    PairingConvention convention_;
    PeelOrder order_;
    std::map<std::pair<Monomial, Monomial>, Cyclotomic, KeyLess> memo_;

    // m = g · rest with rest normal and the product exact (coefficient 1).
    static std::pair<Gen, Monomial> split_first(const Monomial& m) {
        if (m.t > 0)
            return {Gen::a, {m.t - 1, m.j, m.k}};
        if (m.j > 0)
            return {Gen::b, {m.t, m.j - 1, m.k}};
        if (m.k > 0)
            return {Gen::c, {m.t, m.j, m.k - 1}};
        return {Gen::d, {m.t + 1, m.j, m.k}};
    }

    static Monomial generator_monomial(Gen g) {
        switch (g) {
        case Gen::a:
            return {1, 0, 0};
        case Gen::b:
            return {0, 1, 0};
        case Gen::c:
            return {0, 0, 1};
        case Gen::d:
            return {-1, 0, 0};
        }
        return {};
    }

    static std::optional<Gen> as_generator(const Monomial& m) {
        if (m.degree() != 1)
            return std::nullopt;
        return split_first(m).first;
    }

    Cyclotomic compute(const Monomial& x, const Monomial& y) {
        const int ell = mode_.ell;
        if (x.is_one())
            return counit_monomial(mode_, y);
        if (y.is_one())
            return counit_monomial(mode_, x);
        auto gx = as_generator(x), gy = as_generator(y);
        if (gx && gy)
            return generator_pairing(ell, *gx, *gy);
        const bool peel_first = !gx && (gy || order_ == PeelOrder::first_slot);
        Cyclotomic out(ell);
        if (peel_first) {
            auto [g, rest] = split_first(x);
            const Monomial gm = generator_monomial(g);
            const Tensor2& dy = coproduct_monomial(mode_, y);
            for (const auto& [key, c] : dy.terms()) {
                const Cyclotomic& l = monomials(gm, key[0]);
                if (l.is_zero())
                    continue;
                out += c * l * monomials(rest, key[1]);
            }
            return out;
        }
        auto [h, rest] = split_first(y);
        const Monomial hm = generator_monomial(h);
        const Tensor2& dx = coproduct_monomial(mode_, x);
        for (const auto& [key, c] : dx.terms()) {
            if (convention_ == PairingConvention::standard) {
                const Cyclotomic& l = monomials(key[0], rest);
                if (l.is_zero())
                    continue;
                out += c * l * monomials(key[1], hm);
            } else {
                const Cyclotomic& l = monomials(key[0], hm);
                if (l.is_zero())
                    continue;
                out += c * l * monomials(key[1], rest);
            }
        }
        return out;
    }
};

inline Cyclotomic r_pair(const Element& x, const Element& y,
                         PairingConvention convention = PairingConvention::standard) {
    Pairing p(x.ell(), convention);
    return p(x, y);
}

struct BraidingMatrix {
    std::string left;  // A
    std::string right; // B
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    ScalarMatrix matrix;
};

/// Ψ_{A,B} : A⊗B → B⊗A.
inline BraidingMatrix braiding_matrix(const Corep& A, const Corep& B, Pairing& R) {
    if (!(A.mode == B.mode) || A.mode.is_quotient())
        throw usage_error("braiding_matrix: both comodules must be over the generic algebra");
    const std::size_t na = A.dim(), nb = B.dim(), n = na * nb;
    BraidingMatrix out{A.name, B.name, {}, {}, zero_matrix(n, n, A.ell())};
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t r = 0; r < nb; ++r)
            out.row_labels.push_back(A.labels[i] + " ⊗ " + B.labels[r]);
    for (std::size_t s = 0; s < nb; ++s)
        for (std::size_t j = 0; j < na; ++j)
            out.col_labels.push_back(B.labels[s] + " ⊗ " + A.labels[j]);
    for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t s = 0; s < nb; ++s) {
            if (B.rho(r, s).is_zero())
                continue;
            for (std::size_t i = 0; i < na; ++i)
                for (std::size_t j = 0; j < na; ++j) {
                    if (A.rho(i, j).is_zero())
                        continue;
                    out.matrix(i * nb + r, s * na + j) = R(B.rho(r, s), A.rho(i, j));
                }
        }
    return out;
}

inline BraidingMatrix braiding_matrix(const Corep& A, const Corep& B,
                                      PairingConvention convention = PairingConvention::standard) {
    Pairing R(A.ell(), convention);
    return braiding_matrix(A, B, R);
}

/// The flip A⊗B → B⊗A, u_i ⊗ u'_r ↦ u'_r ⊗ u_i.
inline ScalarMatrix flip_matrix(std::size_t na, std::size_t nb, int ell) {
    ScalarMatrix f = zero_matrix(na * nb, na * nb, ell);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t r = 0; r < nb; ++r)
            f(i * nb + r, r * na + i) = Cyclotomic(ell, 1);
    return f;
}

/// σ when Ψ_{A,B} = σ·flip with σ = ±1, nullopt otherwise.
inline std::optional<int> statistics_sign(const Corep& A, const Corep& B, Pairing& R) {
    ScalarMatrix psi = braiding_matrix(A, B, R).matrix;
    ScalarMatrix f = flip_matrix(A.dim(), B.dim(), A.ell());
    if (psi == f)
        return 1;
    if (psi == Cyclotomic(A.ell(), -1) * f)
        return -1;
    return std::nullopt;
}

inline std::optional<int> statistics_sign(const Corep& A, const Corep& B,
                                          PairingConvention convention = PairingConvention::standard) {
    Pairing R(A.ell(), convention);
    return statistics_sign(A, B, R);
}

/// Ψ_{A,B} is a comodule map A⊗B → B⊗A.
inline bool braiding_is_comodule_map(const Corep& A, const Corep& B, Pairing& R) {
    return is_intertwiner(tensor(A, B), tensor(B, A), braiding_matrix(A, B, R).matrix);
}

/// (Ψ_{B,C}⊗id)(id⊗Ψ_{A,C})(Ψ_{A,B}⊗id) = (id⊗Ψ_{A,B})(Ψ_{A,C}⊗id)(id⊗Ψ_{B,C}) on A⊗B⊗C.
inline bool check_braid_relation(const Corep& A, const Corep& B, const Corep& C, Pairing& R) {
    const int ell = A.ell();
    const ScalarMatrix ab = braiding_matrix(A, B, R).matrix;
    const ScalarMatrix ac = braiding_matrix(A, C, R).matrix;
    const ScalarMatrix bc = braiding_matrix(B, C, R).matrix;
    auto I = [&](const Corep& X) { return identity_matrix(X.dim(), ell); };
    ScalarMatrix lhs = kron(ab, I(C)) * kron(I(B), ac) * kron(bc, I(A));
    ScalarMatrix rhs = kron(I(A), bc) * kron(ac, I(B)) * kron(I(C), ab);
    return lhs == rhs;
}

struct HexagonReport {
    bool left = false;  // Ψ_{A⊗B,C} = (Ψ_{A,C}⊗id)∘(id⊗Ψ_{B,C})
    bool right = false; // Ψ_{A,B⊗C} = (id⊗Ψ_{A,C})∘(Ψ_{A,B}⊗id)

    bool ok() const noexcept { return left && right; }
};

/// Both hexagon identities, composing right to left as maps (row vectors
/// compose left to right as matrices).
inline HexagonReport check_hexagon(const Corep& A, const Corep& B, const Corep& C, Pairing& R) {
    const int ell = A.ell();
    auto I = [&](const Corep& X) { return identity_matrix(X.dim(), ell); };
    const ScalarMatrix ab = braiding_matrix(A, B, R).matrix;
    const ScalarMatrix ac = braiding_matrix(A, C, R).matrix;
    const ScalarMatrix bc = braiding_matrix(B, C, R).matrix;
    HexagonReport rep;
    rep.left = braiding_matrix(tensor(A, B), C, R).matrix == kron(I(A), bc) * kron(ac, I(B));
    rep.right = braiding_matrix(A, tensor(B, C), R).matrix == kron(ab, I(C)) * kron(I(B), ac);
    return rep;
}

struct NaturalityReport {
    bool first = false;  // (id_B⊗T)∘Ψ_{A,B} = Ψ_{A',B}∘(T⊗id_B)
    bool second = false; // (T⊗id_B)∘Ψ_{B,A} = Ψ_{B,A'}∘(id_B⊗T)

    bool ok() const noexcept { return first && second; }
};

/// Naturality of Ψ in either argument for an intertwiner T : A → A'.
inline NaturalityReport check_naturality(const ScalarMatrix& T, const Corep& A, const Corep& A2, const Corep& B,
                                         Pairing& R) {
    const int ell = A.ell();
    const ScalarMatrix IB = identity_matrix(B.dim(), ell);
    NaturalityReport rep;
    rep.first = braiding_matrix(A, B, R).matrix * kron(IB, T) == kron(T, IB) * braiding_matrix(A2, B, R).matrix;
    rep.second = braiding_matrix(B, A, R).matrix * kron(T, IB) == kron(IB, T) * braiding_matrix(B, A2, R).matrix;
    return rep;
}

struct EigenReport {
    bool fixed_vector = false;    // a⊗c − q c⊗a ↦ itself
    bool eigenspace_spans = false; // a⊗a, q a⊗c + c⊗a, c⊗c are q^{−1/2}-eigenvectors
    bool eigenspace_exact = false; // and the q^{−1/2}-eigenspace is exactly their span
    bool ok() const noexcept { return fixed_vector && eigenspace_spans && eigenspace_exact; }
};

/// The eigen-claims about Ψ on V1⊗V1 (basis a⊗a, a⊗c, c⊗a, c⊗c).
inline EigenReport eigenstructure_check_v1v1(int ell, Pairing& R) {
    const Corep V1 = build_V(1, ell);
    const ScalarMatrix psi = braiding_matrix(V1, V1, R).matrix;
    const Cyclotomic zero(ell), one(ell, 1), q = q_power(ell, 1);
    const Cyclotomic lambda = q_half_power(ell, -1);
    EigenReport rep;
    ScalarVector fixed{zero, one, -q, zero};
    rep.fixed_vector = apply_row(fixed, psi) == fixed;
    std::vector<ScalarVector> span{{one, zero, zero, zero}, {zero, q, one, zero}, {zero, zero, zero, one}};
    rep.eigenspace_spans = true;
    for (const auto& v : span) {
        ScalarVector expect = v;
        for (auto& x : expect)
            x = x * lambda;
        rep.eigenspace_spans = rep.eigenspace_spans && apply_row(v, psi) == expect;
    }
    ScalarMatrix shifted = psi - lambda * identity_matrix(4, ell);
    auto eig = left_kernel(shifted, ell);
    rep.eigenspace_exact =
        eig.size() == 3 && rank(from_rows(span, 4, ell)) == 3 && [&] {
            auto both = span;
            for (const auto& v : eig)
                both.push_back(v);
            return rank(from_rows(both, 4, ell)) == 3;
        }();
    return rep;
}

} // namespace slq
