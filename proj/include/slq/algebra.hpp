#pragma once

// The algebra A(SL_q(2)) at q = λ and its finite quotients A(F), A(F̂).
//
// Elements are kept in PBW normal form.  In the generic mode the basis is
// a^t b^j c^k (t ≥ 0) together with b^j c^k d^m (m ≥ 1); a monomial stores
// the a/d exponent on one signed axis t, so a and d never occur together.
// In the quotient modes a is invertible (a^ℓ = 1, resp. a^{2ℓ} = 1) and
// d = a^{-1}(1 + q bc), so only a^p b^r c^s with p < period, r, s < ℓ remain.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slq/cyclo.hpp"
#include "slq/detail/cursor.hpp"
#include "slq/error.hpp"
#include "slq/linalg.hpp"

namespace slq {

enum class ModeKind : std::uint8_t { generic, quotient_f, quotient_fhat };

struct AlgebraMode {
    ModeKind kind = ModeKind::generic;
    int ell = 3;

    static AlgebraMode generic(int ell) { return {ModeKind::generic, checked(ell)}; }
    static AlgebraMode quotient_f(int ell) { return {ModeKind::quotient_f, checked(ell)}; }
    static AlgebraMode quotient_fhat(int ell) { return {ModeKind::quotient_fhat, checked(ell)}; }

    bool is_quotient() const noexcept { return kind != ModeKind::generic; }

    /// Order of a in the quotient (0 in the generic mode).
    int period() const noexcept {
        switch (kind) {
        case ModeKind::quotient_f:
            return ell;
        case ModeKind::quotient_fhat:
            return 2 * ell;
        default:
            return 0;
        }
    }

    std::string name() const {
        switch (kind) {
        case ModeKind::quotient_f:
            return "F(" + std::to_string(ell) + ")";
        case ModeKind::quotient_fhat:
            return "Fhat(" + std::to_string(ell) + ")";
        default:
            return "generic(" + std::to_string(ell) + ")";
        }
    }

    friend bool operator==(const AlgebraMode&, const AlgebraMode&) = default;

private:
    static int checked(int ell) {
        (void)detail::field_data(ell);
        return ell;
    }
};

enum class Gen : char { a = 'a', b = 'b', c = 'c', d = 'd' };

inline constexpr std::array<Gen, 4> all_generators{Gen::a, Gen::b, Gen::c, Gen::d};

/// PBW basis word: a^t b^j c^k for t ≥ 0, b^j c^k d^{−t} for t < 0.
struct Monomial {
    int t = 0;
    int j = 0;
    int k = 0;

    int degree() const noexcept { return (t < 0 ? -t : t) + j + k; }
    int a_exp() const noexcept { return t > 0 ? t : 0; }
    int d_exp() const noexcept { return t < 0 ? -t : 0; }
    bool is_one() const noexcept { return t == 0 && j == 0 && k == 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Display/iteration order: total degree, then a-heavy before d-heavy.
struct MonomialLess {
    bool operator()(const Monomial& x, const Monomial& y) const noexcept {
        if (x.degree() != y.degree())
            return x.degree() < y.degree();
        if (x.t != y.t)
            return x.t > y.t;
        if (x.j != y.j)
            return x.j > y.j;
        return x.k < y.k;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = static_cast<std::uint32_t>(m.t);
        h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::uint32_t>(m.j);
        h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::uint32_t>(m.k);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

using Word = std::vector<std::pair<Gen, int>>;

/// The generator word spelling a monomial, e.g. a^2 b c → {(a,2),(b,1),(c,1)}.
inline Word word_of(const Monomial& m) {
    Word w;
    if (m.t > 0)
        w.emplace_back(Gen::a, m.t);
    if (m.j > 0)
        w.emplace_back(Gen::b, m.j);
    if (m.k > 0)
        w.emplace_back(Gen::c, m.k);
    if (m.t < 0)
        w.emplace_back(Gen::d, -m.t);
    return w;
}

inline std::string monomial_string(const Monomial& m) {
    if (m.is_one())
        return "1";
    std::string out;
    for (auto [g, e] : word_of(m)) {
        if (!out.empty())
            out += ' ';
        out += static_cast<char>(g);
        if (e != 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

using Term = std::pair<Monomial, Cyclotomic>;
using Terms = std::vector<Term>;

namespace detail {

// Drops or folds a monomial according to the quotient relations.
inline bool reduce_quotient(const AlgebraMode& mode, Monomial& m) {
    if (!mode.is_quotient())
        return true;
    if (m.j >= mode.ell || m.k >= mode.ell)
        return false;
    m.t %= mode.period();
    return true;
}

// m · g for a normal monomial m, as a list of normal terms.
inline Terms times_generator(const AlgebraMode& mode, const Monomial& m, Gen g) {
    const int ell = mode.ell;
    Terms out;
    auto push = [&](Monomial r, Cyclotomic c) {
        if (reduce_quotient(mode, r))
            out.emplace_back(r, std::move(c));
    };
    switch (g) {
    case Gen::a:
        if (m.t >= 0) {
            // b^j c^k a = q^{−(j+k)} a b^j c^k
            push({m.t + 1, m.j, m.k}, q_power(ell, -(m.j + m.k)));
        } else {
            // d^n a = d^{n−1}(1 + q^{−1} bc) and d^{n−1} bc = q^{−2(n−1)} bc d^{n−1}
            const int n = -m.t;
            push({m.t + 1, m.j, m.k}, Cyclotomic(ell, 1));
            push({m.t + 1, m.j + 1, m.k + 1}, q_power(ell, -1 - 2 * (n - 1)));
        }
        break;
    case Gen::b:
        push({m.t, m.j + 1, m.k}, m.t >= 0 ? Cyclotomic(ell, 1) : q_power(ell, m.t));
        break;
    case Gen::c:
        push({m.t, m.j, m.k + 1}, m.t >= 0 ? Cyclotomic(ell, 1) : q_power(ell, m.t));
        break;
    case Gen::d: {
        int t = m.t;
        if (t == 0 && mode.is_quotient())
            t = mode.period(); // a^period = 1, so d = a^{period−1}(1 + q bc)
        if (t <= 0) {
            push({t - 1, m.j, m.k}, Cyclotomic(ell, 1));
        } else {
            // a^i b^j c^k d = q^{j+k} a^{i−1}(1 + q bc) b^j c^k
            push({t - 1, m.j, m.k}, q_power(ell, m.j + m.k));
            push({t - 1, m.j + 1, m.k + 1}, q_power(ell, m.j + m.k + 1));
        }
        break;
    }
    }
    return out;
}

struct ProductKey {
    ModeKind kind;
    int ell;
    Monomial x;
    Monomial y;
    friend bool operator==(const ProductKey&, const ProductKey&) = default;
};

struct ProductKeyHash {
    std::size_t operator()(const ProductKey& key) const noexcept {
        MonomialHash h;
        std::size_t seed = static_cast<std::size_t>(key.kind) * 1315423911u + static_cast<std::size_t>(key.ell);
        seed ^= h(key.x) + 0x9E3779B9 + (seed << 6) + (seed >> 2);
        seed ^= h(key.y) + 0x9E3779B9 + (seed << 6) + (seed >> 2);
        return seed;
    }
};

} // namespace detail

/// Normal form of the product of two normal monomials.  Memoized per thread.
inline const Terms& multiply_monomials(const AlgebraMode& mode, const Monomial& x, const Monomial& y) {
    thread_local std::unordered_map<detail::ProductKey, Terms, detail::ProductKeyHash> memo;
    detail::ProductKey key{mode.kind, mode.ell, x, y};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    std::map<Monomial, Cyclotomic, MonomialLess> acc;
    acc.emplace(x, Cyclotomic(mode.ell, 1));
    for (auto [g, e] : word_of(y)) {
        for (int rep = 0; rep < e; ++rep) {
            std::map<Monomial, Cyclotomic, MonomialLess> next;
            for (const auto& [m, c] : acc)
                for (auto& [r, f] : detail::times_generator(mode, m, g)) {
                    auto [pos, inserted] = next.try_emplace(r, Cyclotomic(mode.ell));
                    pos->second += c * f;
                }
            acc.clear();
            for (auto& [m, c] : next)
                if (!c.is_zero())
                    acc.emplace(m, std::move(c));
        }
    }
    Terms out(acc.begin(), acc.end());
    return memo.emplace(key, std::move(out)).first->second;
}

/// Finite linear combination of normal monomials with coefficients in Q(λ).
/// Zero coefficients are never stored, so equal elements compare equal.
class Element {
public:
    using Map = std::map<Monomial, Cyclotomic, MonomialLess>;

    Element() = default;
    explicit Element(AlgebraMode mode) : mode_(mode) {}

    static Element scalar(AlgebraMode mode, const Cyclotomic& c) {
        Element e(mode);
        e.add_term({}, c);
        return e;
    }
    static Element one(AlgebraMode mode) { return scalar(mode, Cyclotomic(mode.ell, 1)); }

    /// A single normal monomial; it is reduced if the mode is a quotient.
    static Element monomial(AlgebraMode mode, Monomial m, const Cyclotomic& c) {
        Element e(mode);
        if (mode.is_quotient() && m.t < 0)
            throw usage_error("monomial: d is not a basis letter in quotient modes");
        if (detail::reduce_quotient(mode, m))
            e.add_term(m, c);
        return e;
    }

    const AlgebraMode& mode() const noexcept { return mode_; }
    int ell() const noexcept { return mode_.ell; }
    const Map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Cyclotomic coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Cyclotomic(mode_.ell) : it->second;
    }

    /// Highest total degree among the stored monomials (−1 for zero).
    int top_degree() const {
        int best = -1;
        for (const auto& [m, c] : terms_)
            best = std::max(best, m.degree());
        return best;
    }

    void add_term(const Monomial& m, const Cyclotomic& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        check(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        check(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    Element& operator*=(const Cyclotomic& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c = c * s;
        return *this;
    }

    friend Element operator+(Element x, const Element& y) { return x += y; }
    friend Element operator-(Element x, const Element& y) { return x -= y; }
    friend Element operator*(Element x, const Cyclotomic& s) { return x *= s; }
    friend Element operator*(const Cyclotomic& s, Element x) { return x *= s; }
    Element operator-() const { return *this * Cyclotomic(mode_.ell, -1); }

    friend Element operator*(const Element& x, const Element& y) {
        x.check(y);
        Element out(x.mode_);
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                Cyclotomic c = cx * cy;
                for (const auto& [r, f] : multiply_monomials(x.mode_, mx, my))
                    out.add_term(r, c * f);
            }
        return out;
    }

    friend bool operator==(const Element& x, const Element& y) {
        return x.mode_ == y.mode_ && x.terms_ == y.terms_;
    }

private:
    AlgebraMode mode_{};
    Map terms_;

    void check(const Element& o) const {
        if (!(mode_ == o.mode_))
            throw usage_error("algebra elements from different modes: " + mode_.name() + " vs " + o.mode_.name());
    }
};

inline Element multiply(const Element& x, const Element& y) { return x * y; }

/// Normal form of coefficient · g1^e1 g2^e2 … .
inline Element from_word(AlgebraMode mode, const Word& word, const Cyclotomic& coefficient) {
    Element acc = Element::scalar(mode, coefficient);
    for (auto [g, e] : word) {
        if (e < 0)
            throw usage_error("from_word: negative exponent");
        for (int rep = 0; rep < e; ++rep) {
            Element next(mode);
            for (const auto& [m, c] : acc.terms())
                for (auto& [r, f] : detail::times_generator(mode, m, g))
                    next.add_term(r, c * f);
            acc = std::move(next);
        }
    }
    return acc;
}

inline Element from_word(AlgebraMode mode, const Word& word) {
    return from_word(mode, word, Cyclotomic(mode.ell, 1));
}

inline Element generator(AlgebraMode mode, Gen g) { return from_word(mode, {{g, 1}}); }

/// Canonical projection onto a quotient: generic → F, generic → F̂, F̂ → F.
inline Element project(AlgebraMode target, const Element& x) {
    const AlgebraMode& source = x.mode();
    if (source.ell != target.ell)
        throw usage_error("project: ell mismatch");
    if (source == target)
        return x;
    const bool ok = (source.kind == ModeKind::generic && target.is_quotient()) ||
                    (source.kind == ModeKind::quotient_fhat && target.kind == ModeKind::quotient_f);
    if (!ok)
        throw usage_error("project: " + target.name() + " is not a quotient of " + source.name());
    Element out(target);
    for (const auto& [m, c] : x.terms())
        out += from_word(target, word_of(m), c);
    return out;
}

inline bool is_central(const Element& x) {
    for (Gen g : all_generators) {
        Element gen = generator(x.mode(), g);
        if (!(x * gen == gen * x))
            return false;
    }
    return true;
}

/// Coefficient matrix of a list of elements: one row per element, one column
/// per monomial occurring anywhere (in MonomialLess order).
struct PbwCoordinates {
    ScalarMatrix matrix;
    std::vector<Monomial> columns;
};

inline PbwCoordinates pbw_coordinates(std::span<const Element> elements) {
    if (elements.empty())
        return {};
    const AlgebraMode mode = elements.front().mode();
    std::map<Monomial, std::size_t, MonomialLess> index;
    for (const auto& e : elements) {
        if (!(e.mode() == mode))
            throw usage_error("pbw_coordinates: mixed modes");
        for (const auto& [m, c] : e.terms())
            index.emplace(m, 0);
    }
    std::vector<Monomial> columns;
    for (auto& [m, i] : index) {
        i = columns.size();
        columns.push_back(m);
    }
    ScalarMatrix mat = zero_matrix(elements.size(), columns.size(), mode.ell);
    for (std::size_t r = 0; r < elements.size(); ++r)
        for (const auto& [m, c] : elements[r].terms())
            mat(r, index[m]) = c;
    return {std::move(mat), std::move(columns)};
}

/// Every normal monomial of the mode with total degree ≤ max_degree (for the
/// quotient modes max_degree is ignored and the full finite basis returned).
inline std::vector<Monomial> basis_monomials(const AlgebraMode& mode, int max_degree) {
    std::vector<Monomial> out;
    if (mode.is_quotient()) {
        for (int p = 0; p < mode.period(); ++p)
            for (int r = 0; r < mode.ell; ++r)
                for (int s = 0; s < mode.ell; ++s)
                    out.push_back({p, r, s});
        return out;
    }
    for (int deg = 0; deg <= max_degree; ++deg)
        for (int t = -deg; t <= deg; ++t)
            for (int j = 0; j + (t < 0 ? -t : t) <= deg; ++j) {
                int k = deg - (t < 0 ? -t : t) - j;
                out.push_back({t, j, k});
            }
    return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace detail {

inline std::string coefficient_prefix(const Cyclotomic& c, bool& negative, bool half_powers) {
    negative = false;
    if (half_powers) {
        for (int sign : {1, -1}) {
            auto j = as_half_power(sign > 0 ? c : -c);
            if (j && *j % 2 != 0) {
                negative = sign < 0;
                return "q^(" + std::to_string(*j) + "/2)";
            }
        }
    }
    if (auto unit = c.as_signed_q_power()) {
        negative = unit->first < 0;
        Cyclotomic mag = negative ? -c : c;
        if (mag.is_one())
            return "";
        return mag.to_string();
    }
    if (c.is_rational()) {
        Rational v = c.constant();
        negative = v < 0;
        Rational mag = abs(v);
        return mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
    }
    return "(" + c.to_polynomial_string() + ")";
}

} // namespace detail

/// "1 + q^2 b c", "a^2 - (1 - q) b d", …  Parses back with parse_element.
inline std::string to_string(const Element& x, bool half_powers = false) {
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        bool negative = false;
        std::string prefix = detail::coefficient_prefix(c, negative, half_powers);
        std::string body;
        if (m.is_one())
            body = prefix.empty() ? "1" : prefix;
        else
            body = prefix.empty() ? monomial_string(m) : prefix + " " + monomial_string(m);
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

namespace detail {

// element := ['+'|'-'] term (('+'|'-') term)*
// term    := scalar-factor* generator-power*      (at least one of either)
// generator-power := ('a'|'b'|'c'|'d') ('^' integer)?
class ElementParser {
public:
    ElementParser(Cursor& cur, AlgebraMode mode) : cur_(cur), mode_(mode), scalars_(cur, mode.ell) {}

    Element parse() {
        Element acc(mode_);
        bool negative = cur_.accept('-');
        if (!negative)
            cur_.accept('+');
        Element t = parse_term();
        acc += negative ? -t : t;
        while (!cur_.at_end()) {
            char ch = cur_.peek();
            if (ch != '+' && ch != '-')
                cur_.fail("expected '+' or '-'");
            ++cur_.pos;
            Element u = parse_term();
            acc += ch == '-' ? -u : u;
        }
        return acc;
    }

private:
    Cursor& cur_;
    AlgebraMode mode_;
    ScalarParser scalars_;

    static bool is_gen(char ch) { return ch == 'a' || ch == 'b' || ch == 'c' || ch == 'd'; }

    Element parse_term() {
        Cyclotomic coeff(mode_.ell, 1);
        bool any = false;
        while (scalars_.starts_factor()) {
            coeff = coeff * scalars_.parse_factor();
            cur_.accept('*');
            any = true;
        }
        Word word;
        while (is_gen(cur_.peek())) {
            Gen g = static_cast<Gen>(cur_.peek());
            ++cur_.pos;
            int e = 1;
            if (cur_.accept('^')) {
                long v = cur_.small_int();
                if (v < 0)
                    cur_.fail("negative generator exponent");
                e = static_cast<int>(v);
            }
            word.emplace_back(g, e);
            cur_.accept('*');
            any = true;
        }
        if (!any)
            cur_.fail("expected a term");
        return from_word(mode_, word, coeff);
    }
};

} // namespace detail

/// Parses sums such as "2 a^2 b - (1/2) c d + q^(-1) b c" and returns the
/// normal form in the given mode.  Generators may appear in any order.
inline Element parse_element(std::string_view text, AlgebraMode mode) {
    detail::Cursor cur{text};
    if (cur.at_end())
        cur.fail("empty element");
    detail::ElementParser parser(cur, mode);
    return parser.parse();
}

} // namespace slq
