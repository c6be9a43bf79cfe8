#pragma once

// Exact arithmetic in the cyclotomic field Q(λ), λ = exp(2πi/ℓ), ℓ odd.
//
// A scalar is a polynomial in λ with rational coefficients reduced modulo the
// ℓ-th cyclotomic polynomial Φ_ℓ, so zero tests are exact and λ is primitive
// by construction.  The deformation parameter q of the quantum group is λ
// itself; half-integer powers of q live in the same field because ℓ is odd
// (s = −λ^((ℓ+1)/2) is a square root of q of order 2ℓ).

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "slq/detail/cursor.hpp"
#include "slq/error.hpp"

namespace slq {

using Rational = mpq_class;

namespace detail {

using Poly = std::vector<Rational>; // index = power of x

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Quotient and remainder of a by b over Q (b nonzero, trimmed).
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size())
        return {Poly{}, a};
    Poly quot(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0)
            continue;
        Rational f = a[i] / lead;
        std::size_t shift = i - (b.size() - 1);
        quot[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= f * b[j];
    }
    trim(a);
    trim(quot);
    return {quot, a};
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

inline Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

struct FieldData {
    int ell = 0;
    std::size_t degree = 0;
    std::vector<long> phi; // monic, size degree + 1
};

} // namespace detail

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed by dividing x^n − 1 by Φ_d for every proper divisor d of n.
inline std::vector<long> cyclotomic_polynomial(int n) {
    if (n < 1)
        throw usage_error("cyclotomic_polynomial: n must be positive");
    static std::mutex mutex;
    static std::map<int, std::vector<long>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    detail::Poly num(static_cast<std::size_t>(n) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        auto phi_d = cyclotomic_polynomial(d);
        detail::Poly den(phi_d.begin(), phi_d.end());
        auto [quot, rem] = detail::divmod(num, den);
        if (!rem.empty())
            throw std::logic_error("cyclotomic_polynomial: inexact division");
        num = quot;
    }
    std::vector<long> out;
    for (const auto& c : num) {
        if (c.get_den() != 1 || !c.get_num().fits_slong_p())
            throw std::logic_error("cyclotomic_polynomial: non-integral coefficient");
        out.push_back(c.get_num().get_si());
    }
    std::lock_guard lock(mutex);
    cache.emplace(n, out);
    return out;
}

namespace detail {

inline const FieldData& field_data(int ell) {
    if (ell < 3 || ell % 2 == 0)
        throw usage_error("ell must be odd and at least 3, got " + std::to_string(ell));
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<FieldData>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(ell); it != cache.end())
            return *it->second;
    }
    auto data = std::make_unique<FieldData>();
    data->ell = ell;
    data->phi = cyclotomic_polynomial(ell);
    data->degree = data->phi.size() - 1;
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(ell, std::move(data));
    return *it->second;
}

} // namespace detail

/// Element of Q(λ).  A default-constructed scalar is a zero that is not yet
/// attached to a field; it adopts the field of whatever it is combined with.
class Cyclotomic {
public:
    Cyclotomic() = default;

    explicit Cyclotomic(int ell, long value = 0) : f_(&detail::field_data(ell)), c_(f_->degree) {
        c_[0] = value;
    }

    Cyclotomic(int ell, const Rational& value) : f_(&detail::field_data(ell)), c_(f_->degree) {
        c_[0] = value;
        c_[0].canonicalize();
    }

    /// Reduces an arbitrary polynomial in λ (lowest power first) modulo Φ_ℓ.
    static Cyclotomic from_polynomial(int ell, std::vector<Rational> poly) {
        Cyclotomic out(ell);
        out.assign_reduced(std::move(poly));
        return out;
    }

    /// λ^k, k taken mod ℓ.
    static Cyclotomic lambda_power(int ell, long k) {
        long e = ((k % ell) + ell) % ell;
        std::vector<Rational> poly(static_cast<std::size_t>(e) + 1);
        poly[static_cast<std::size_t>(e)] = 1;
        return from_polynomial(ell, std::move(poly));
    }

    int ell() const noexcept { return f_ ? f_->ell : 0; }
    bool attached() const noexcept { return f_ != nullptr; }
    std::size_t degree() const noexcept { return f_ ? f_->degree : 0; }

    /// Coefficients of 1, λ, …, λ^(deg Φ − 1).  Empty for an unattached zero.
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0)
                return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0)
                return false;
        return true;
    }

    bool is_one() const { return !c_.empty() && c_[0] == 1 && is_rational(); }

    Rational constant() const { return c_.empty() ? Rational(0) : c_[0]; }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        adopt(o);
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }

    Cyclotomic& operator-=(const Cyclotomic& o) {
        adopt(o);
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }

    Cyclotomic& operator*=(const Cyclotomic& o) {
        *this = *this * o;
        return *this;
    }

    Cyclotomic& operator/=(const Cyclotomic& o) {
        *this = *this * o.inv();
        return *this;
    }

    Cyclotomic& operator*=(const Rational& r) {
        for (auto& c : c_)
            c *= r;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
    friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

    Cyclotomic operator-() const {
        Cyclotomic out = *this;
        for (auto& c : out.c_)
            c = -c;
        return out;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        const detail::FieldData* f = common_field(a, b);
        if (f == nullptr)
            return {};
        Cyclotomic out;
        out.f_ = f;
        if (a.c_.empty() || b.c_.empty()) {
            out.c_.assign(f->degree, Rational(0));
            return out;
        }
        const std::size_t n = f->degree;
        // Scalars with a single nonzero coefficient are common (powers of q).
        std::vector<Rational> prod(2 * n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b.c_[j] != 0)
                    prod[i + j] += a.c_[i] * b.c_[j];
        }
        out.assign_reduced(std::move(prod));
        return out;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_ℓ.
    Cyclotomic inv() const {
        if (is_zero())
            throw division_by_zero("inverse of zero cyclotomic scalar");
        if (is_rational()) {
            Cyclotomic out(ell());
            out.c_[0] = 1 / c_[0];
            return out;
        }
        detail::Poly r0(f_->phi.begin(), f_->phi.end());
        detail::Poly r1 = c_;
        detail::trim(r1);
        detail::Poly t0, t1{Rational(1)};
        while (!(r1.size() == 1)) {
            auto [quot, rem] = detail::divmod(r0, r1);
            detail::Poly t2 = detail::poly_sub(t0, detail::poly_mul(quot, t1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
            if (r1.empty())
                throw std::logic_error("inverse: nontrivial gcd with cyclotomic polynomial");
        }
        Rational scale = 1 / r1[0];
        for (auto& c : t1)
            c *= scale;
        return from_polynomial(ell(), std::move(t1));
    }

    Cyclotomic pow(long k) const {
        if (k < 0)
            return inv().pow(-k);
        Cyclotomic base = *this;
        Cyclotomic acc(ell(), 1);
        while (k > 0) {
            if (k & 1)
                acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.f_ && b.f_ && a.f_ != b.f_)
            return false;
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& x = i < a.c_.size() ? a.c_[i] : zero_rational();
            const Rational& y = i < b.c_.size() ? b.c_[i] : zero_rational();
            if (x != y)
                return false;
        }
        return true;
    }

    /// Numerical value under λ = exp(2πi/ℓ).  Display only.
    std::complex<double> evaluate() const {
        std::complex<double> acc = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / ell();
            acc += c_[i].get_d() * std::polar(1.0, angle);
        }
        return acc;
    }

    /// Reduced polynomial in q, lowest power first, e.g. "1 - q + (1/2)q^2".
    std::string to_polynomial_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0)
                continue;
            Rational mag = abs(c_[k]);
            bool neg = c_[k] < 0;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            bool integral = mag.get_den() == 1;
            if (k == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1)
                os << (integral ? mag.get_str() : "(" + mag.get_str() + ")");
            os << 'q';
            if (k > 1)
                os << '^' << k;
        }
        return first ? "0" : os.str();
    }

    /// If the scalar is ±λ^k, returns (sign, k) with 0 ≤ k < ℓ.
    std::optional<std::pair<int, int>> as_signed_q_power() const {
        if (!f_ || is_zero())
            return std::nullopt;
        for (int k = 0; k < ell(); ++k) {
            Cyclotomic p = lambda_power(ell(), k);
            if (p == *this)
                return std::pair{1, k};
            if (-p == *this)
                return std::pair{-1, k};
        }
        return std::nullopt;
    }

    /// Short form: units ±q^k print as powers with |k| ≤ (ℓ−1)/2, everything
    /// else as the reduced polynomial.  Round-trips through parse_scalar.
    std::string to_string() const {
        if (auto unit = as_signed_q_power()) {
            auto [sign, k] = *unit;
            if (2 * k > ell())
                k -= ell();
            std::string body = k == 0 ? "1" : (k == 1 ? "q" : (k < 0 ? "q^(" + std::to_string(k) + ")" : "q^" + std::to_string(k)));
            return (sign < 0 ? "-" : "") + body;
        }
        return to_polynomial_string();
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

private:
    const detail::FieldData* f_ = nullptr;
    std::vector<Rational> c_;

    static const Rational& zero_rational() {
        static const Rational z(0);
        return z;
    }

    static const detail::FieldData* common_field(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.f_ && b.f_ && a.f_ != b.f_)
            throw usage_error("cyclotomic scalars from different fields (ell " + std::to_string(a.ell()) +
                              " vs " + std::to_string(b.ell()) + ")");
        return a.f_ ? a.f_ : b.f_;
    }

    void adopt(const Cyclotomic& o) {
        const detail::FieldData* f = common_field(*this, o);
        if (f && !f_) {
            f_ = f;
            c_.assign(f->degree, Rational(0));
        }
    }

    void assign_reduced(std::vector<Rational> poly) {
        const std::size_t n = f_->degree;
        const auto& phi = f_->phi;
        for (std::size_t i = poly.size(); i-- > n;) {
            if (poly[i] == 0)
                continue;
            Rational lead = poly[i];
            std::size_t shift = i - n;
            for (std::size_t j = 0; j < n; ++j)
                if (phi[j] != 0)
                    poly[shift + j] -= lead * phi[j];
            poly[i] = 0;
        }
        poly.resize(n);
        c_ = std::move(poly);
    }
};

/// q^k with q = λ.
inline Cyclotomic q_power(int ell, long k) { return Cyclotomic::lambda_power(ell, k); }

/// s^j where s = −λ^((ℓ+1)/2) is the square root of q of order 2ℓ
/// (s = exp(iπ/ℓ)); q_half_power(ell, 2k) == q_power(ell, k).
inline Cyclotomic q_half_power(int ell, long j) {
    const long period = 2L * ell;
    long e = ((j % period) + period) % period;
    Cyclotomic p = Cyclotomic::lambda_power(ell, e * ((ell + 1) / 2));
    return (e % 2 == 1) ? -p : p;
}

/// If x == s^j for some j, the representative with −ℓ < j ≤ ℓ.
inline std::optional<long> as_half_power(const Cyclotomic& x) {
    if (!x.attached() || x.is_zero())
        return std::nullopt;
    const int ell = x.ell();
    for (long j = -ell + 1; j <= ell; ++j)
        if (q_half_power(ell, j) == x)
            return j;
    return std::nullopt;
}

/// Display form preferring half-integer exponents for odd powers of s:
/// ±1, then q^(j/2) for odd j, then ±q^k, then the reduced polynomial.
inline std::string to_half_power_string(const Cyclotomic& x) {
    if (!x.attached() || x.is_zero())
        return "0";
    if (x.is_rational())
        return x.to_polynomial_string();
    if (auto j = as_half_power(x); j && (*j % 2 != 0))
        return "q^(" + std::to_string(*j) + "/2)";
    return x.to_string();
}

/// Gaussian binomial (m choose r)_p with p = q^exponent, evaluated in Q(λ).
///
/// Uses the Pascal-type recurrence (m choose r)_p = (m−1 choose r−1)_p +
/// p^r (m−1 choose r)_p, so no q-factorial (which can vanish at a root of
/// unity) is ever divided by.  Returns 0 for r > m or r < 0.
inline Cyclotomic q_binomial(int ell, int m, int r, long exponent) {
    if (m < 0)
        throw usage_error("q_binomial: m must be non-negative");
    if (r < 0 || r > m)
        return Cyclotomic(ell);
    if (r == 0 || r == m)
        return Cyclotomic(ell, 1);
    const long e = ((exponent % ell) + ell) % ell;
    using Key = std::tuple<int, long, int, int>;
    static std::mutex mutex;
    static std::map<Key, Cyclotomic> memo;
    const Key key{ell, e, m, r};
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
    }
    // Fill row by row so recursion depth stays constant.
    std::vector<Cyclotomic> row{Cyclotomic(ell, 1)};
    for (int n = 1; n <= m; ++n) {
        std::vector<Cyclotomic> next(static_cast<std::size_t>(n) + 1, Cyclotomic(ell));
        next[0] = Cyclotomic(ell, 1);
        next[static_cast<std::size_t>(n)] = Cyclotomic(ell, 1);
        for (int k = 1; k < n; ++k)
            next[static_cast<std::size_t>(k)] =
                row[static_cast<std::size_t>(k) - 1] + q_power(ell, e * k) * row[static_cast<std::size_t>(k)];
        row = std::move(next);
    }
    std::lock_guard lock(mutex);
    memo.emplace(key, row[static_cast<std::size_t>(r)]);
    return row[static_cast<std::size_t>(r)];
}

namespace detail {

// scalar := term (('+'|'-') term)*
// term   := factor ('*'? factor)*
// factor := integer ('/' integer)? | '(' scalar ')' | 'q' ('^' exponent)?
// exponent := ['-'] integer | '(' ['-'] integer ('/' '2')? ')'
class ScalarParser {
public:
    ScalarParser(Cursor& cur, int ell) : cur_(cur), ell_(ell) {}

    Cyclotomic parse_sum() {
        Cyclotomic acc(ell_);
        bool neg = false;
        if (cur_.accept('-'))
            neg = true;
        else
            cur_.accept('+');
        Cyclotomic t = parse_product();
        acc += neg ? -t : t;
        while (true) {
            char ch = cur_.peek();
            if (ch != '+' && ch != '-')
                break;
            ++cur_.pos;
            Cyclotomic u = parse_product();
            acc += ch == '-' ? -u : u;
        }
        return acc;
    }

    bool starts_factor() {
        char ch = cur_.peek();
        return ch == '(' || ch == 'q' || std::isdigit(static_cast<unsigned char>(ch));
    }

    Cyclotomic parse_factor() {
        char ch = cur_.peek();
        if (ch == '(') {
            ++cur_.pos;
            Cyclotomic inner = parse_sum();
            cur_.expect(')');
            return inner;
        }
        if (ch == 'q') {
            ++cur_.pos;
            if (!cur_.accept('^'))
                return q_power(ell_, 1);
            if (cur_.accept('(')) {
                long num = cur_.small_int();
                long den = 1;
                if (cur_.accept('/'))
                    den = cur_.small_int();
                cur_.expect(')');
                if (den == 1)
                    return q_power(ell_, num);
                if (den == 2)
                    return q_half_power(ell_, num);
                cur_.fail("only integer and half-integer exponents of q are supported");
            }
            return q_power(ell_, cur_.small_int());
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Rational value(cur_.digits());
            if (cur_.peek() == '/') {
                ++cur_.pos;
                Rational den(cur_.digits());
                if (den == 0)
                    cur_.fail("zero denominator");
                value /= den;
            }
            return Cyclotomic(ell_, value);
        }
        cur_.fail("expected scalar factor");
    }

    Cyclotomic parse_product() {
        Cyclotomic acc = parse_factor();
        while (true) {
            if (cur_.accept('*')) {
                acc = acc * parse_factor();
                continue;
            }
            if (!starts_factor())
                break;
            acc = acc * parse_factor();
        }
        return acc;
    }

private:
    Cursor& cur_;
    int ell_;
};

} // namespace detail

/// Parses textual scalars such as "1 - q^2 + (1/2)q" or "q^(-1/2)".
inline Cyclotomic parse_scalar(std::string_view text, int ell) {
    detail::Cursor cur{text};
    detail::ScalarParser parser(cur, ell);
    Cyclotomic out = parser.parse_sum();
    if (!cur.at_end())
        cur.fail("unexpected trailing input");
    return out;
}

} // namespace slq
