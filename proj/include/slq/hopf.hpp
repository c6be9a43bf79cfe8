#pragma once

// Coproduct, counit and antipode on every algebra mode, the axiom checker,
// characters of the finite quotients and the matrix representation of A(F).

#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/cyclo.hpp"
#include "slq/error.hpp"
#include "slq/linalg.hpp"

namespace slq {

template <std::size_t N>
struct TensorKeyLess {
    bool operator()(const std::array<Monomial, N>& x, const std::array<Monomial, N>& y) const noexcept {
        MonomialLess less;
        for (std::size_t i = 0; i < N; ++i) {
            if (less(x[i], y[i]))
                return true;
            if (less(y[i], x[i]))
                return false;
        }
        return false;
    }
};

/// Element of A^{⊗N} over the monomial basis; every leg is in normal form.
template <std::size_t N>
class Tensor {
public:
    using Key = std::array<Monomial, N>;
    using Map = std::map<Key, Cyclotomic, TensorKeyLess<N>>;

    Tensor() = default;
    explicit Tensor(AlgebraMode mode) : mode_(mode) {}

    const AlgebraMode& mode() const noexcept { return mode_; }
    const Map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add_term(const Key& key, const Cyclotomic& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Cyclotomic coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Cyclotomic(mode_.ell) : it->second;
    }

    Tensor& operator+=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    Tensor& operator*=(const Cyclotomic& s) {
        if (s.is_zero())
            terms_.clear();
        for (auto& [k, c] : terms_)
            c = c * s;
        return *this;
    }

    /// Legwise product (x1 ⊗ x2)(y1 ⊗ y2) = x1y1 ⊗ x2y2.
    friend Tensor operator*(const Tensor& x, const Tensor& y) {
        if (!(x.mode_ == y.mode_))
            throw usage_error("tensor product of elements from different modes");
        Tensor out(x.mode_);
        for (const auto& [kx, cx] : x.terms_)
            for (const auto& [ky, cy] : y.terms_) {
                std::array<const Terms*, N> legs{};
                for (std::size_t i = 0; i < N; ++i)
                    legs[i] = &multiply_monomials(x.mode_, kx[i], ky[i]);
                expand(out, legs, 0, Key{}, cx * cy);
            }
        return out;
    }

    friend bool operator==(const Tensor& x, const Tensor& y) {
        return x.mode_ == y.mode_ && x.terms_ == y.terms_;
    }

private:
    AlgebraMode mode_{};
    Map terms_;

    static void expand(Tensor& out, const std::array<const Terms*, N>& legs, std::size_t i, Key key,
                       const Cyclotomic& c) {
        if (i == N) {
            out.add_term(key, c);
            return;
        }
        for (const auto& [m, f] : *legs[i]) {
            key[i] = m;
            expand(out, legs, i + 1, key, c * f);
        }
    }
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

template <std::size_t N>
std::string to_string(const Tensor<N>& x, bool half_powers = false) {
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : x.terms()) {
        bool negative = false;
        std::string prefix = detail::coefficient_prefix(c, negative, half_powers);
        std::string body;
        for (std::size_t i = 0; i < N; ++i) {
            if (i)
                body += " ⊗ ";
            body += monomial_string(key[i]);
        }
        if (!prefix.empty())
            body = prefix + " " + body;
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Tensor<N>& x) {
    return os << to_string(x);
}

namespace detail {

struct ModeMonomialKey {
    ModeKind kind;
    int ell;
    Monomial m;
    friend bool operator==(const ModeMonomialKey&, const ModeMonomialKey&) = default;
};

struct ModeMonomialHash {
    std::size_t operator()(const ModeMonomialKey& k) const noexcept {
        return MonomialHash{}(k.m) * 31 + static_cast<std::size_t>(k.kind) * 7 + static_cast<std::size_t>(k.ell);
    }
};

/// Splits a normal monomial as prefix · g with prefix normal and prefix·g == m exactly.
inline std::pair<Monomial, Gen> split_last(const Monomial& m) {
    if (m.t < 0)
        return {{m.t + 1, m.j, m.k}, Gen::d};
    if (m.k > 0)
        return {{m.t, m.j, m.k - 1}, Gen::c};
    if (m.j > 0)
        return {{m.t, m.j - 1, m.k}, Gen::b};
    return {{m.t - 1, m.j, m.k}, Gen::a};
}

inline Tensor2 generator_coproduct(const AlgebraMode& mode, Gen g) {
    auto pair = [&](Gen x, Gen y) {
        Tensor2 t(mode);
        const Element ex = generator(mode, x), ey = generator(mode, y);
        for (const auto& [mx, cx] : ex.terms())
            for (const auto& [my, cy] : ey.terms())
                t.add_term({mx, my}, cx * cy);
        return t;
    };
    switch (g) {
    case Gen::a: {
        Tensor2 t = pair(Gen::a, Gen::a);
        return t += pair(Gen::b, Gen::c);
    }
    case Gen::b: {
        Tensor2 t = pair(Gen::a, Gen::b);
        return t += pair(Gen::b, Gen::d);
    }
    case Gen::c: {
        Tensor2 t = pair(Gen::c, Gen::a);
        return t += pair(Gen::d, Gen::c);
    }
    case Gen::d: {
        Tensor2 t = pair(Gen::c, Gen::b);
        return t += pair(Gen::d, Gen::d);
    }
    }
    return Tensor2(mode);
}

} // namespace detail

/// Δ of a normal monomial, built multiplicatively from the generators.
inline const Tensor2& coproduct_monomial(const AlgebraMode& mode, const Monomial& m) {
    thread_local std::unordered_map<detail::ModeMonomialKey, Tensor2, detail::ModeMonomialHash> memo;
    detail::ModeMonomialKey key{mode.kind, mode.ell, m};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Tensor2 result(mode);
    if (m.is_one()) {
        result.add_term({Monomial{}, Monomial{}}, Cyclotomic(mode.ell, 1));
    } else {
        auto [prefix, g] = detail::split_last(m);
        const Tensor2& head = coproduct_monomial(mode, prefix);
        result = head * detail::generator_coproduct(mode, g);
    }
    return memo.emplace(key, std::move(result)).first->second;
}

inline Tensor2 coproduct(const Element& x) {
    Tensor2 out(x.mode());
    for (const auto& [m, c] : x.terms()) {
        Tensor2 t = coproduct_monomial(x.mode(), m);
        out += t *= c;
    }
    return out;
}

inline Cyclotomic counit_monomial(const AlgebraMode& mode, const Monomial& m) {
    return Cyclotomic(mode.ell, (m.j == 0 && m.k == 0) ? 1 : 0);
}

inline Cyclotomic counit(const Element& x) {
    Cyclotomic out(x.ell());
    for (const auto& [m, c] : x.terms())
        if (m.j == 0 && m.k == 0)
            out += c;
    return out;
}

inline Element antipode_generator(const AlgebraMode& mode, Gen g) {
    switch (g) {
    case Gen::a:
        return generator(mode, Gen::d);
    case Gen::b:
        return generator(mode, Gen::b) * (-q_power(mode.ell, -1));
    case Gen::c:
        return generator(mode, Gen::c) * (-q_power(mode.ell, 1));
    case Gen::d:
        return generator(mode, Gen::a);
    }
    return Element(mode);
}

/// S of a normal monomial: S(prefix · g) = S(g) S(prefix).
inline const Element& antipode_monomial(const AlgebraMode& mode, const Monomial& m) {
    thread_local std::unordered_map<detail::ModeMonomialKey, Element, detail::ModeMonomialHash> memo;
    detail::ModeMonomialKey key{mode.kind, mode.ell, m};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Element result(mode);
    if (m.is_one()) {
        result = Element::one(mode);
    } else {
        auto [prefix, g] = detail::split_last(m);
        result = antipode_generator(mode, g) * antipode_monomial(mode, prefix);
    }
    return memo.emplace(key, std::move(result)).first->second;
}

inline Element antipode(const Element& x) {
    Element out(x.mode());
    for (const auto& [m, c] : x.terms())
        out += antipode_monomial(x.mode(), m) * c;
    return out;
}

/// (Δ ⊗ id) and (id ⊗ Δ) applied to a rank-2 tensor.
inline Tensor3 coproduct_left(const Tensor2& x) {
    Tensor3 out(x.mode());
    for (const auto& [key, c] : x.terms())
        for (const auto& [k2, f] : coproduct_monomial(x.mode(), key[0]).terms())
            out.add_term({k2[0], k2[1], key[1]}, c * f);
    return out;
}

inline Tensor3 coproduct_right(const Tensor2& x) {
    Tensor3 out(x.mode());
    for (const auto& [key, c] : x.terms())
        for (const auto& [k2, f] : coproduct_monomial(x.mode(), key[1]).terms())
            out.add_term({key[0], k2[0], k2[1]}, c * f);
    return out;
}

struct HopfReport {
    bool coassociative = false;
    bool counit_left = false;
    bool counit_right = false;
    bool antipode_left = false;
    bool antipode_right = false;

    bool all() const noexcept {
        return coassociative && counit_left && counit_right && antipode_left && antipode_right;
    }
};

/// Exact check of coassociativity, the counit laws and the antipode laws on x.
inline HopfReport check_hopf_axioms(const Element& x) {
    const AlgebraMode& mode = x.mode();
    HopfReport r;
    Tensor2 dx = coproduct(x);
    r.coassociative = coproduct_left(dx) == coproduct_right(dx);

    Element eps_left(mode), eps_right(mode), s_left(mode), s_right(mode);
    for (const auto& [key, c] : dx.terms()) {
        Element m0 = Element::monomial(mode, key[0], c);
        Element m1 = Element::monomial(mode, key[1], Cyclotomic(mode.ell, 1));
        eps_left += m1 * (c * counit_monomial(mode, key[0]));
        eps_right += m0 * counit_monomial(mode, key[1]);
        s_left += antipode_monomial(mode, key[0]) * m1 * c;
        s_right += m0 * antipode_monomial(mode, key[1]);
    }
    Element unit = Element::one(mode) * counit(x);
    r.counit_left = eps_left == x;
    r.counit_right = eps_right == x;
    r.antipode_left = s_left == unit;
    r.antipode_right = s_right == unit;
    return r;
}

// ---------------------------------------------------------------------------
// Characters of A(F) and A(F̂)

/// χ_i: ã ↦ q^i on A(F), â ↦ s^i on A(F̂) (s the square root of q); b, c ↦ 0.
struct Character {
    AlgebraMode mode;
    int index = 0;

    int order() const noexcept { return mode.period(); }

    Cyclotomic value_on_a() const {
        return mode.kind == ModeKind::quotient_f ? q_power(mode.ell, index) : q_half_power(mode.ell, index);
    }

    friend bool operator==(const Character& x, const Character& y) {
        return x.mode == y.mode && x.index == y.index;
    }
};

inline Character character(int i, const AlgebraMode& mode) {
    if (!mode.is_quotient())
        throw usage_error("characters are defined on the finite quotients only");
    const int n = mode.period();
    return {mode, ((i % n) + n) % n};
}

inline Cyclotomic evaluate_character(const Character& chi, const Element& x) {
    if (!(x.mode() == chi.mode))
        throw usage_error("character and element live in different modes");
    Cyclotomic out(x.ell());
    const Cyclotomic va = chi.value_on_a();
    for (const auto& [m, c] : x.terms())
        if (m.j == 0 && m.k == 0)
            out += c * va.pow(m.t);
    return out;
}

inline Character convolve(const Character& x, const Character& y) {
    if (!(x.mode == y.mode))
        throw usage_error("convolve: characters of different algebras");
    return character(x.index + y.index, x.mode);
}

/// (χ * χ′)(x) = Σ χ(x₁) χ′(x₂), evaluated through the coproduct.
inline Cyclotomic convolution_value(const Character& x, const Character& y, const Element& e) {
    Cyclotomic out(e.ell());
    const Tensor2 de = coproduct(e);
    for (const auto& [key, c] : de.terms()) {
        Cyclotomic l = evaluate_character(x, Element::monomial(e.mode(), key[0], Cyclotomic(e.ell(), 1)));
        if (l.is_zero())
            continue;
        out += c * l * evaluate_character(y, Element::monomial(e.mode(), key[1], Cyclotomic(e.ell(), 1)));
    }
    return out;
}

/// The surjection Z_{2ℓ} → Z_ℓ from characters of A(F̂) to characters of A(F):
/// χ̂_i ↦ the character with ã ↦ χ̂_i(â)², i.e. χ_{i mod ℓ}.  Its kernel is
/// {χ̂_0, χ̂_ℓ}, χ̂_ℓ being the sign character â ↦ −1.
inline Character restrict_character(const Character& chi) {
    if (chi.mode.kind != ModeKind::quotient_fhat)
        throw usage_error("restrict_character expects a character of A(Fhat)");
    return character(chi.index, AlgebraMode::quotient_f(chi.mode.ell));
}

// ---------------------------------------------------------------------------
// The faithful representation of A(F)

struct RepresentationF {
    int ell;
    ScalarMatrix a, b, c, d;
};

inline RepresentationF representation_generators(int ell) {
    const std::size_t n = static_cast<std::size_t>(ell);
    ScalarMatrix J = zero_matrix(n, n, ell), Q = zero_matrix(n, n, ell), N = zero_matrix(n, n, ell);
    const ScalarMatrix one = identity_matrix(n, ell);
    // 1-based in the definitions: J_{i,j} = 1 iff i = j+1 mod ℓ, Q_{i,i} = q^{−i}, N_{i,j} = 1 iff i = j+1.
    for (std::size_t i = 0; i < n; ++i) {
        J((i + 1) % n, i) = Cyclotomic(ell, 1);
        Q(i, i) = q_power(ell, -static_cast<long>(i + 1));
        if (i + 1 < n)
            N(i + 1, i) = Cyclotomic(ell, 1);
    }
    RepresentationF r{ell, kron(kron(J, one), one), kron(kron(Q, N), one), kron(kron(Q, one), N), {}};
    const ScalarMatrix id = identity_matrix(n * n * n, ell);
    r.d = inverse(r.a) * (id + q_power(ell, 1) * (r.b * r.c));
    return r;
}

inline ScalarMatrix matrix_power(const ScalarMatrix& m, int e) {
    ScalarMatrix out = identity_matrix(m.rows(), detail::ell_of(m));
    for (int i = 0; i < e; ++i)
        out = out * m;
    return out;
}

inline ScalarMatrix matrix_representation_F(const Element& x) {
    if (x.mode().kind != ModeKind::quotient_f)
        throw usage_error("matrix_representation_F expects an element of A(F)");
    const int ell = x.ell();
    const RepresentationF& r = [&]() -> const RepresentationF& {
        thread_local std::map<int, RepresentationF> cache;
        auto it = cache.find(ell);
        if (it == cache.end())
            it = cache.emplace(ell, representation_generators(ell)).first;
        return it->second;
    }();
    const std::size_t dim = r.a.rows();
    ScalarMatrix out = zero_matrix(dim, dim, ell);
    for (const auto& [m, c] : x.terms()) {
        ScalarMatrix term = matrix_power(r.a, m.t) * matrix_power(r.b, m.j) * matrix_power(r.c, m.k);
        out = out + c * term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coinvariance under a quotient

/// True iff (id ⊗ π)Δx = x ⊗ 1, π the projection onto the quotient mode.
inline bool coinvariance_check(const Element& x, const AlgebraMode& quotient) {
    if (!quotient.is_quotient() || quotient.ell != x.ell())
        throw usage_error("coinvariance_check needs a finite quotient with the same ell");
    using Key = std::array<Monomial, 2>;
    std::map<Key, Cyclotomic, TensorKeyLess<2>> acc;
    auto add = [&](const Key& k, const Cyclotomic& c) {
        auto [it, inserted] = acc.try_emplace(k, c);
        if (!inserted)
            it->second += c;
    };
    const Tensor2 dx = coproduct(x);
    for (const auto& [key, c] : dx.terms()) {
        const Element projected = from_word(quotient, word_of(key[1]));
        for (const auto& [m, f] : projected.terms())
            add({key[0], m}, c * f);
    }
    for (const auto& [m, c] : x.terms())
        add({m, Monomial{}}, -c);
    for (const auto& [k, c] : acc)
        if (!c.is_zero())
            return false;
    return true;
}

} // namespace slq
