#pragma once

// Corepresentations v_i ↦ Σ_j ρ_ij ⊗ v_j: builders for Y_m, V_m, W_n and
// tensor products, comodule-axiom checks, irreducibility certificates,
// intertwiner spaces, subcomodules and quotients.
//
// Vectors of a comodule are row vectors over its basis.  An intertwiner
// T : A → B is an nA×nB scalar matrix acting as v ↦ vT, characterised by
// ρ^A T = T ρ^B.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/cyclo.hpp"
#include "slq/detail/cursor.hpp"
#include "slq/error.hpp"
#include "slq/hopf.hpp"
#include "slq/linalg.hpp"

namespace slq {

using ElementMatrix = Matrix<Element>;

struct Corep {
    AlgebraMode mode;
    std::string name;
    std::vector<std::string> labels;
    ElementMatrix rho;

    std::size_t dim() const noexcept { return rho.rows(); }
    int ell() const noexcept { return mode.ell; }
};

namespace detail {

inline Corep corep_from_basis(const AlgebraMode& mode, std::string name, const std::vector<Monomial>& basis) {
    const std::size_t n = basis.size();
    std::map<Monomial, std::size_t, MonomialLess> index;
    for (std::size_t i = 0; i < n; ++i)
        index.emplace(basis[i], i);
    Corep out{mode, std::move(name), {}, ElementMatrix(n, n, Element(mode))};
    for (const auto& m : basis)
        out.labels.push_back(monomial_string(m));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [key, c] : coproduct_monomial(mode, basis[i]).terms()) {
            auto it = index.find(key[1]);
            if (it == index.end())
                throw usage_error("coproduct of " + monomial_string(basis[i]) + " leaves the span of the basis (" +
                                  monomial_string(key[1]) + ")");
            out.rho(i, it->second).add_term(key[0], c);
        }
    return out;
}

} // namespace detail

/// Y_m: span of a^{m−h} c^h, h = 0…m.  In a quotient c^ℓ = 0, so only
/// h < ℓ survive.
inline Corep build_Y(int m, const AlgebraMode& mode) {
    if (m < 0)
        throw usage_error("build_Y: m must be non-negative");
    if (mode.is_quotient() && m >= mode.period())
        throw usage_error("build_Y: degree exceeds the order of a in " + mode.name());
    std::vector<Monomial> basis;
    for (int h = 0; h <= m && !(mode.is_quotient() && h >= mode.ell); ++h)
        basis.push_back({m - h, 0, h});
    return detail::corep_from_basis(mode, "Y" + std::to_string(m), basis);
}

inline Corep build_Y(int m, int ell) { return build_Y(m, AlgebraMode::generic(ell)); }

/// V_m = Y_m for m < ℓ.
inline Corep build_V(int m, int ell) {
    if (m < 0 || m >= ell)
        throw usage_error("build_V: m must lie in 0…ℓ−1");
    Corep c = build_Y(m, ell);
    c.name = "V" + std::to_string(m);
    return c;
}

/// W_n: span of α^{n−i} γ^i with α = a^ℓ, γ = c^ℓ.
inline Corep build_W(int n, int ell) {
    if (n < 0)
        throw usage_error("build_W: n must be non-negative");
    std::vector<Monomial> basis;
    for (int i = 0; i <= n; ++i)
        basis.push_back({ell * (n - i), 0, ell * i});
    return detail::corep_from_basis(AlgebraMode::generic(ell), "W" + std::to_string(n), basis);
}

/// ρ_{(i,r),(j,s)} = ρ^A_ij ρ^B_rs; basis index i·nB + r.
inline Corep tensor(const Corep& A, const Corep& B) {
    if (!(A.mode == B.mode))
        throw usage_error("tensor: coreps over different algebras");
    const std::size_t na = A.dim(), nb = B.dim(), n = na * nb;
    Corep out{A.mode, A.name + "⊗" + B.name, {}, ElementMatrix(n, n, Element(A.mode))};
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t r = 0; r < nb; ++r)
            out.labels.push_back(A.labels[i] + " ⊗ " + B.labels[r]);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            if (A.rho(i, j).is_zero())
                continue;
            for (std::size_t r = 0; r < nb; ++r)
                for (std::size_t s = 0; s < nb; ++s)
                    out.rho(i * nb + r, j * nb + s) = A.rho(i, j) * B.rho(r, s);
        }
    return out;
}

inline Tensor2 outer(const Element& x, const Element& y) {
    Tensor2 t(x.mode());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms())
            t.add_term({mx, my}, cx * cy);
    return t;
}

struct CorepReport {
    bool coaction = true;
    bool counit = true;
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;

    bool ok() const noexcept { return coaction && counit; }
};

/// Δ(ρ_ij) = Σ_k ρ_ik ⊗ ρ_kj and ε(ρ_ij) = δ_ij, entry by entry.
inline CorepReport verify_corep(const Corep& C) {
    CorepReport r;
    const std::size_t n = C.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Element& x = C.rho(i, j);
            Cyclotomic eps = counit(x);
            bool counit_ok = i == j ? eps.is_one() : eps.is_zero();
            Tensor2 rhs(C.mode);
            for (std::size_t k = 0; k < n; ++k)
                rhs += outer(C.rho(i, k), C.rho(k, j));
            bool coaction_ok = coproduct(x) == rhs;
            if ((!counit_ok || !coaction_ok) && !r.first_failure)
                r.first_failure = std::pair{i, j};
            r.counit = r.counit && counit_ok;
            r.coaction = r.coaction && coaction_ok;
        }
    return r;
}

// ---------------------------------------------------------------------------
// Irreducibility certificates

struct IrreducibilityCertificate {
    bool independent = false;
    std::size_t rank = 0;
    std::size_t entries = 0;
    ScalarVector witness; // Σ witness_k · ρ_k = 0 over the flattened entries when !independent
};

/// Linear independence of the dim² matrix elements certifies irreducibility.
/// A relation among them is reported as "no certificate", not as reducibility.
inline IrreducibilityCertificate irreducibility_certificate(const Corep& C) {
    std::vector<Element> entries(C.rho.data().begin(), C.rho.data().end());
    IrreducibilityCertificate cert;
    cert.entries = entries.size();
    auto coords = pbw_coordinates(entries);
    if (coords.columns.empty()) {
        cert.rank = 0;
        cert.witness.assign(entries.size(), Cyclotomic(C.ell()));
        if (!cert.witness.empty())
            cert.witness[0] = Cyclotomic(C.ell(), 1);
        return cert;
    }
    cert.rank = rank(coords.matrix);
    cert.independent = cert.rank == entries.size();
    if (!cert.independent) {
        auto rel = left_kernel(coords.matrix, C.ell());
        cert.witness = rel.front();
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Torus weights

/// Weights under the torus projection b, c ↦ 0, a ↦ t, d ↦ t^{−1}, when ρ
/// becomes diagonal with entries t^w; nullopt otherwise.  In the quotient
/// modes the weights are residues modulo the order of a.
inline std::optional<std::vector<int>> torus_weights(const Corep& C) {
    const std::size_t n = C.dim();
    std::vector<int> w(n, 0);
    const int period = C.mode.period();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::map<int, Cyclotomic> proj;
            for (const auto& [m, c] : C.rho(i, j).terms())
                if (m.j == 0 && m.k == 0) {
                    int t = period ? ((m.t % period) + period) % period : m.t;
                    auto [it, inserted] = proj.try_emplace(t, c);
                    if (!inserted)
                        it->second += c;
                }
            std::erase_if(proj, [](const auto& kv) { return kv.second.is_zero(); });
            if (i != j) {
                if (!proj.empty())
                    return std::nullopt;
                continue;
            }
            if (proj.size() != 1 || !proj.begin()->second.is_one())
                return std::nullopt;
            w[i] = proj.begin()->first;
        }
    return w;
}

// ---------------------------------------------------------------------------
// Intertwiners

/// Basis of {T : ρ^A T = T ρ^B}.  Unknowns T_kl whose torus weights differ
/// are fixed to zero up front.
inline std::vector<ScalarMatrix> hom_space(const Corep& A, const Corep& B) {
    if (!(A.mode == B.mode))
        throw usage_error("hom_space: coreps over different algebras");
    const int ell = A.ell();
    const std::size_t na = A.dim(), nb = B.dim();
    auto wa = torus_weights(A), wb = torus_weights(B);
    const bool pruned = wa && wb;

    std::vector<std::ptrdiff_t> var(na * nb, -1);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
            if (!pruned || (*wa)[k] == (*wb)[l]) {
                var[k * nb + l] = static_cast<std::ptrdiff_t>(cells.size());
                cells.emplace_back(k, l);
            }
    if (cells.empty())
        return {};

    SparseEchelon system(cells.size(), ell);
    std::map<Monomial, SparseEchelon::Row, MonomialLess> rows;
    auto accumulate = [&](const Element& e, std::size_t unknown, bool negate) {
        for (const auto& [m, c] : e.terms()) {
            auto& row = rows[m];
            auto [it, inserted] = row.try_emplace(unknown, Cyclotomic(ell));
            if (negate)
                it->second -= c;
            else
                it->second += c;
        }
    };
    for (std::size_t i = 0; i < na && !system.full(); ++i)
        for (std::size_t l = 0; l < nb && !system.full(); ++l) {
            rows.clear();
            // (ρ^A T)_il − (T ρ^B)_il
            for (std::size_t k = 0; k < na; ++k)
                if (auto v = var[k * nb + l]; v >= 0 && !A.rho(i, k).is_zero())
                    accumulate(A.rho(i, k), static_cast<std::size_t>(v), false);
            for (std::size_t k = 0; k < nb; ++k)
                if (auto v = var[i * nb + k]; v >= 0 && !B.rho(k, l).is_zero())
                    accumulate(B.rho(k, l), static_cast<std::size_t>(v), true);
            for (auto& [m, row] : rows)
                if (system.add(std::move(row)) && system.full())
                    break;
        }
    std::vector<ScalarMatrix> out;
    for (const auto& v : system.kernel()) {
        ScalarMatrix T = zero_matrix(na, nb, ell);
        for (std::size_t u = 0; u < cells.size(); ++u)
            T(cells[u].first, cells[u].second) = v[u];
        out.push_back(std::move(T));
    }
    return out;
}

inline bool is_intertwiner(const Corep& A, const Corep& B, const ScalarMatrix& T) {
    const std::size_t na = A.dim(), nb = B.dim();
    if (T.rows() != na || T.cols() != nb)
        return false;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t l = 0; l < nb; ++l) {
            Element lhs(A.mode), rhs(A.mode);
            for (std::size_t k = 0; k < na; ++k)
                if (!T(k, l).is_zero())
                    lhs += A.rho(i, k) * T(k, l);
            for (std::size_t k = 0; k < nb; ++k)
                if (!T(i, k).is_zero())
                    rhs += B.rho(k, l) * T(i, k);
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

/// An invertible intertwiner A → B if the hom space contains one.
inline std::optional<ScalarMatrix> find_isomorphism(const Corep& A, const Corep& B) {
    if (A.dim() != B.dim())
        return std::nullopt;
    auto basis = hom_space(A, B);
    if (basis.empty())
        return std::nullopt;
    for (const auto& T : basis)
        if (is_invertible(T))
            return T;
    ScalarMatrix mix = zero_matrix(A.dim(), B.dim(), A.ell());
    for (std::size_t k = 0; k < basis.size(); ++k)
        mix = mix + Cyclotomic(A.ell(), static_cast<long>(2 * k + 1)) * basis[k];
    if (is_invertible(mix))
        return mix;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subspaces, subcomodules and quotients

/// Row vectors over the basis of a comodule.
struct Subspace {
    std::vector<ScalarVector> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

inline Subspace span_of_basis_vectors(const Corep& C, const std::vector<std::size_t>& indices) {
    Subspace s;
    for (auto i : indices) {
        if (i >= C.dim())
            throw usage_error("span_of_basis_vectors: index out of range");
        ScalarVector v(C.dim(), Cyclotomic(C.ell()));
        v[i] = Cyclotomic(C.ell(), 1);
        s.basis.push_back(std::move(v));
    }
    return s;
}

namespace detail {

inline ScalarMatrix rows_matrix(const std::vector<ScalarVector>& rows, std::size_t cols, int ell) {
    return from_rows(rows, cols, ell);
}

// Element-valued row vector v·ρ, as one scalar row vector per monomial.
inline std::map<Monomial, ScalarVector, MonomialLess> coaction_components(const Corep& C, const ScalarVector& v) {
    std::map<Monomial, ScalarVector, MonomialLess> out;
    const std::size_t n = C.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [m, c] : C.rho(i, j).terms()) {
                auto [it, inserted] = out.try_emplace(m, ScalarVector(n, Cyclotomic(C.ell())));
                it->second[j] += v[i] * c;
            }
    }
    return out;
}

} // namespace detail

/// True iff the coaction of every vector in S lands in A ⊗ S.
inline bool subcomodule_check(const Corep& C, const Subspace& S) {
    const std::size_t n = C.dim();
    const int ell = C.ell();
    if (S.basis.empty())
        return true;
    ScalarMatrix B = detail::rows_matrix(S.basis, n, ell);
    auto annihilator = kernel(B, ell); // x with B x = 0; rowspan(B) = {w : w·x = 0}
    for (const auto& v : S.basis)
        for (const auto& [m, w] : detail::coaction_components(C, v))
            for (const auto& x : annihilator) {
                Cyclotomic dot(ell);
                for (std::size_t i = 0; i < n; ++i)
                    dot += w[i] * x[i];
                if (!dot.is_zero())
                    return false;
            }
    return true;
}

/// ρ' = P ρ P^{−1}: the comodule in the basis given by the rows of P.
inline Corep change_basis(const Corep& C, const ScalarMatrix& P, std::string name) {
    const std::size_t n = C.dim();
    ScalarMatrix Pinv = inverse(P);
    ElementMatrix tmp(n, n, Element(C.mode));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (P(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!C.rho(k, j).is_zero())
                    tmp(i, j) += C.rho(k, j) * P(i, k);
        }
    Corep out{C.mode, std::move(name), {}, ElementMatrix(n, n, Element(C.mode))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (tmp(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!Pinv(k, j).is_zero())
                    out.rho(i, j) += tmp(i, k) * Pinv(k, j);
        }
    for (std::size_t i = 0; i < n; ++i)
        out.labels.push_back("f" + std::to_string(i));
    return out;
}

/// Rows of S followed by standard basis vectors completing it to a basis.
inline ScalarMatrix complete_basis(const Corep& C, const Subspace& S) {
    const std::size_t n = C.dim();
    const int ell = C.ell();
    std::vector<ScalarVector> rows = S.basis;
    std::size_t r = rows.empty() ? 0 : rank(detail::rows_matrix(rows, n, ell));
    if (r != rows.size())
        throw usage_error("subspace basis is not linearly independent");
    for (std::size_t i = 0; i < n && rows.size() < n; ++i) {
        ScalarVector e(n, Cyclotomic(ell));
        e[i] = Cyclotomic(ell, 1);
        rows.push_back(e);
        if (rank(detail::rows_matrix(rows, n, ell)) == rows.size())
            continue;
        rows.pop_back();
    }
    return detail::rows_matrix(rows, n, ell);
}

namespace detail {

inline Corep block(const Corep& C, std::size_t begin, std::size_t end, std::string name) {
    const std::size_t n = end - begin;
    Corep out{C.mode, std::move(name), {}, ElementMatrix(n, n, Element(C.mode))};
    for (std::size_t i = 0; i < n; ++i) {
        out.labels.push_back(C.labels[begin + i]);
        for (std::size_t j = 0; j < n; ++j)
            out.rho(i, j) = C.rho(begin + i, begin + j);
    }
    return out;
}

} // namespace detail

/// The subcomodule S as a comodule in its own right (basis = rows of S).
inline Corep sub_corep(const Corep& C, const Subspace& S, std::string name = {}) {
    if (!subcomodule_check(C, S))
        throw usage_error("sub_corep: subspace is not a subcomodule");
    Corep full = change_basis(C, complete_basis(C, S), C.name);
    return detail::block(full, 0, S.dim(), name.empty() ? C.name + "_sub" : std::move(name));
}

/// The induced comodule on C/S (basis = the completing standard vectors).
inline Corep quotient_corep(const Corep& C, const Subspace& S, std::string name = {}) {
    if (!subcomodule_check(C, S))
        throw usage_error("quotient_corep: subspace is not a subcomodule");
    Corep full = change_basis(C, complete_basis(C, S), C.name);
    return detail::block(full, S.dim(), C.dim(), name.empty() ? C.name + "_quot" : std::move(name));
}

/// Image of an intertwiner T : X → C as a subspace of C, keeping the rows of T
/// (which are weight vectors when T respects weights).
inline Subspace image_of(const ScalarMatrix& T) {
    Subspace s;
    const int ell = detail::ell_of(T);
    for (std::size_t i = 0; i < T.rows(); ++i) {
        ScalarVector row(T.row(i).begin(), T.row(i).end());
        s.basis.push_back(row);
        if (rank(detail::rows_matrix(s.basis, T.cols(), ell)) < s.basis.size())
            s.basis.pop_back();
    }
    return s;
}

/// {v : vT = 0}, split along weight spaces when weights are known so the
/// returned vectors are weight vectors.
inline Subspace kernel_of(const ScalarMatrix& T, const std::optional<std::vector<int>>& weights, int ell) {
    Subspace s;
    const std::size_t n = T.rows();
    if (!weights) {
        s.basis = left_kernel(T, ell);
        return s;
    }
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i)
        groups[(*weights)[i]].push_back(i);
    for (const auto& [w, idx] : groups) {
        ScalarMatrix sub = zero_matrix(idx.size(), T.cols(), ell);
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t c = 0; c < T.cols(); ++c)
                sub(a, c) = T(idx[a], c);
        for (const auto& v : left_kernel(sub, ell)) {
            ScalarVector full(n, Cyclotomic(ell));
            for (std::size_t a = 0; a < idx.size(); ++a)
                full[idx[a]] = v[a];
            s.basis.push_back(std::move(full));
        }
    }
    return s;
}

/// Tensor expression over the families, e.g. "V1*V2", "W1 ⊗ V1", "Y3^3".
inline Corep parse_corep_expr(std::string_view text, int ell) {
    detail::Cursor cur{text};
    auto factor = [&]() -> Corep {
        const char family = cur.peek();
        if (family != 'V' && family != 'W' && family != 'Y')
            cur.fail("expected V, W or Y");
        ++cur.pos;
        const std::size_t at = cur.pos;
        const long index = cur.small_int();
        if (index < 0)
            throw parse_error("negative index", at);
        const int i = static_cast<int>(index);
        if (family == 'V') {
            if (i >= ell)
                throw parse_error("V_m needs m ≤ ell − 1", at);
            return build_V(i, ell);
        }
        return family == 'W' ? build_W(i, ell) : build_Y(i, ell);
    };
    auto power = [&]() -> Corep {
        Corep base = factor();
        if (!cur.accept('^'))
            return base;
        const std::size_t at = cur.pos;
        const long e = cur.small_int();
        if (e < 1)
            throw parse_error("tensor power must be positive", at);
        const std::string name = base.name + "^" + std::to_string(e);
        Corep out = base;
        for (long k = 1; k < e; ++k)
            out = tensor(out, base);
        out.name = name;
        return out;
    };
    auto separator = [&] {
        if (cur.accept('*'))
            return true;
        static constexpr std::string_view otimes = "⊗";
        if (cur.text.substr(cur.pos, otimes.size()) == otimes) {
            cur.pos += otimes.size();
            return true;
        }
        return false;
    };
    Corep out = power();
    while (separator())
        out = tensor(out, power());
    if (!cur.at_end())
        cur.fail("unexpected character");
    return out;
}

} // namespace slq
