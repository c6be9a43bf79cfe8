#pragma once

// Decomposition of ℓ = 3 comodules into irreducibles W_n⊗V_m, recording
// non-split extensions.  Direct summands are split off first; whatever is
// left is peeled by its socle series.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "slq/corep.hpp"
#include "slq/error.hpp"
#include "slq/linalg.hpp"

namespace slq {

struct DecompositionTree {
    enum class Kind { irreducible, direct_sum, extension };

    Kind kind = Kind::irreducible;
    std::string label; // irreducible leaves only
    int n = 0;         // W grade of a leaf
    int m = 0;         // V grade of a leaf
    std::size_t dim = 0;
    std::vector<DecompositionTree> children; // extension: {sub, quotient}

    static DecompositionTree leaf(int n, int m, std::size_t dim) {
        DecompositionTree t;
        t.n = n;
        t.m = m;
        t.dim = dim;
        if (n == 0)
            t.label = "V" + std::to_string(m);
        else if (m == 0)
            t.label = "W" + std::to_string(n);
        else
            t.label = "W" + std::to_string(n) + "⊗V" + std::to_string(m);
        return t;
    }

    static DecompositionTree direct_sum(std::vector<DecompositionTree> parts) {
        std::vector<DecompositionTree> flat;
        for (auto& p : parts) {
            if (p.kind == Kind::direct_sum)
                for (auto& c : p.children)
                    flat.push_back(std::move(c));
            else
                flat.push_back(std::move(p));
        }
        if (flat.size() == 1)
            return std::move(flat.front());
        DecompositionTree t;
        t.kind = Kind::direct_sum;
        for (const auto& c : flat)
            t.dim += c.dim;
        t.children = std::move(flat);
        return t;
    }

    static DecompositionTree extension(DecompositionTree sub, DecompositionTree quotient) {
        DecompositionTree t;
        t.kind = Kind::extension;
        t.dim = sub.dim + quotient.dim;
        t.children.push_back(std::move(sub));
        t.children.push_back(std::move(quotient));
        return t;
    }

    /// Leaves in tree order.
    std::vector<std::string> leaves() const {
        if (kind == Kind::irreducible)
            return {label};
        std::vector<std::string> out;
        for (const auto& c : children)
            for (auto& l : c.leaves())
                out.push_back(std::move(l));
        return out;
    }

    /// "V0 ⊘ V2 ⊘ (W1 ⊕ V1) ⊘ V0"; ⊘ is right-nested, the left side is the subcomodule.
    std::string to_text() const {
        switch (kind) {
        case Kind::irreducible:
            return label;
        case Kind::direct_sum: {
            std::string out;
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i)
                    out += " ⊕ ";
                const auto& c = children[i];
                out += c.kind == Kind::extension ? "(" + c.to_text() + ")" : c.to_text();
            }
            return out;
        }
        case Kind::extension: {
            const auto& sub = children[0];
            const auto& quot = children[1];
            std::string left = sub.kind == Kind::irreducible ? sub.to_text() : "(" + sub.to_text() + ")";
            std::string right = quot.kind == Kind::direct_sum ? "(" + quot.to_text() + ")" : quot.to_text();
            return left + " ⊘ " + right;
        }
        }
        return {};
    }

    friend bool operator==(const DecompositionTree& x, const DecompositionTree& y) {
        return x.kind == y.kind && x.label == y.label && x.dim == y.dim && x.children == y.children;
    }
};

/// Irreducible W_n⊗V_m (plain V_m or W_n when the other grade is 0).
inline Corep build_irreducible(int n, int m, int ell) {
    if (n == 0)
        return build_V(m, ell);
    if (m == 0)
        return build_W(n, ell);
    Corep c = tensor(build_W(n, ell), build_V(m, ell));
    c.name = "W" + std::to_string(n) + "⊗V" + std::to_string(m);
    return c;
}

namespace detail {

struct Candidate {
    int n;
    int m;
    Corep corep;
    std::vector<int> weights;
};

inline int top_degree(const Corep& C) {
    int best = 0;
    for (const auto& e : C.rho.data())
        best = std::max(best, e.top_degree());
    return best;
}

inline bool weights_fit(std::vector<int> small, std::vector<int> big) {
    std::sort(small.begin(), small.end());
    std::sort(big.begin(), big.end());
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

class Decomposer {
public:
    explicit Decomposer(int ell) : ell_(ell) {}

    DecompositionTree run(const Corep& C) { return split(C); }

private:
    int ell_;
    std::vector<Candidate> cache_;
    std::size_t cached_dim_ = 0;

    // Candidates ordered by dimension, then higher W grade first.
    const std::vector<Candidate>& candidates(std::size_t max_dim) {
        if (max_dim <= cached_dim_)
            return cache_;
        std::vector<std::tuple<std::size_t, int, int>> keys;
        for (int n = 0; static_cast<std::size_t>(n + 1) <= max_dim; ++n)
            for (int m = 0; m < ell_; ++m) {
                std::size_t d = static_cast<std::size_t>((n + 1) * (m + 1));
                if (d <= max_dim)
                    keys.emplace_back(d, -n, m);
            }
        std::sort(keys.begin(), keys.end());
        std::vector<Candidate> next;
        for (auto [d, negn, m] : keys) {
            int n = -negn;
            auto it = std::find_if(cache_.begin(), cache_.end(),
                                   [&](const Candidate& c) { return c.n == n && c.m == m; });
            if (it != cache_.end()) {
                next.push_back(*it);
                continue;
            }
            Corep x = build_irreducible(n, m, ell_);
            auto w = torus_weights(x);
            next.push_back({n, m, std::move(x), w.value_or(std::vector<int>{})});
        }
        cache_ = std::move(next);
        cached_dim_ = max_dim;
        return cache_;
    }

    std::vector<const Candidate*> plausible(const Corep& C) {
        const auto weights = torus_weights(C);
        const int top = top_degree(C);
        std::vector<const Candidate*> out;
        for (const auto& cand : candidates(C.dim())) {
            if (cand.corep.dim() > C.dim())
                continue;
            if (cand.n * ell_ + cand.m > top)
                continue;
            if (weights && !weights_fit(cand.weights, *weights))
                continue;
            out.push_back(&cand);
        }
        return out;
    }

    DecompositionTree split(const Corep& C) {
        if (C.dim() == 0)
            throw usage_error("decompose: empty comodule");
        const auto cands = plausible(C);
        const auto weights = torus_weights(C);

        // Direct summands: ι : X → C, π : C → X with ιπ ≠ 0 give C = im ι ⊕ ker π.
        std::vector<std::pair<const Candidate*, std::vector<ScalarMatrix>>> socle_maps;
        for (const Candidate* cand : cands) {
            auto into = hom_space(cand->corep, C);
            if (into.empty())
                continue;
            if (cand->corep.dim() == C.dim()) {
                for (const auto& T : into)
                    if (is_invertible(T))
                        return DecompositionTree::leaf(cand->n, cand->m, C.dim());
            }
            auto out_of = hom_space(C, cand->corep);
            for (const auto& iota : into)
                for (const auto& pi : out_of) {
                    ScalarMatrix composite = iota * pi;
                    if (is_zero(composite))
                        continue;
                    Subspace complement = kernel_of(pi, weights, ell_);
                    Corep rest = sub_corep(C, complement, C.name + "'");
                    auto leaf = DecompositionTree::leaf(cand->n, cand->m, cand->corep.dim());
                    return DecompositionTree::direct_sum({std::move(leaf), split(rest)});
                }
            socle_maps.emplace_back(cand, std::move(into));
        }

        if (socle_maps.empty())
            throw unsupported("decompose: no irreducible W_n⊗V_m maps into " + C.name);

        // No direct summand: peel off the socle.
        Subspace socle;
        const std::size_t n = C.dim();
        for (const auto& [cand, maps] : socle_maps)
            for (const auto& T : maps)
                for (auto& row : image_of(T).basis) {
                    socle.basis.push_back(row);
                    if (rank(from_rows(socle.basis, n, ell_)) < socle.basis.size())
                        socle.basis.pop_back();
                }
        if (socle.dim() == n)
            throw unsupported("decompose: semisimple comodule without a splitting pair in " + C.name);
        Corep sub = sub_corep(C, socle, C.name + "_soc");
        Corep quot = quotient_corep(C, socle, C.name + "/soc");
        return DecompositionTree::extension(split(sub), split(quot));
    }
};

} // namespace detail

/// Decomposition tree of a comodule built from V_0, V_1, V_2 and W_n at ℓ = 3.
inline DecompositionTree decompose_l3(const Corep& C) {
    if (C.ell() != 3)
        throw unsupported("decompose_l3: automatic decomposition is only available for ell = 3");
    if (C.mode.is_quotient())
        throw unsupported("decompose_l3: expects a comodule over the generic algebra");
    detail::Decomposer d(3);
    return d.run(C);
}

} // namespace slq
