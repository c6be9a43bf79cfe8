#pragma once

// Word-level rewriting with a caller-chosen redex at every step.  Used to
// check that the PBW normal form does not depend on the reduction order.
//
// Rules (q = λ), applied to any occurrence:
//   ba → q^{−1} ab     ca → q^{−1} ac     db → q^{−1} bd     dc → q^{−1} cd
//   cb → bc            ad → 1 + q bc      da → 1 + q^{−1} bc
//   a u d → q^{|u|}(u + q u bc)   for a nonempty word u in b, c
// The last rule is needed because a b d, say, is not otherwise reducible.

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/cyclo.hpp"
#include "slq/error.hpp"

namespace slq {

struct Redex {
    std::size_t begin = 0;
    std::size_t end = 0; // one past the rewritten span
};

/// All positions where a rule applies in the generic algebra.
inline std::vector<Redex> find_redexes(const std::string& w) {
    std::vector<Redex> out;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const char x = w[i], y = w[i + 1];
        const bool pair_rule = (x == 'b' && y == 'a') || (x == 'c' && y == 'a') || (x == 'd' && y == 'b') ||
                               (x == 'd' && y == 'c') || (x == 'c' && y == 'b') || (x == 'a' && y == 'd') ||
                               (x == 'd' && y == 'a');
        if (pair_rule)
            out.push_back({i, i + 2});
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] != 'a')
            continue;
        std::size_t k = i + 1;
        while (k < n && (w[k] == 'b' || w[k] == 'c'))
            ++k;
        if (k < n && k > i + 1 && w[k] == 'd')
            out.push_back({i, k + 1});
    }
    return out;
}

/// Rewrites the span of one redex, returning the weighted replacement words.
inline std::vector<std::pair<std::string, Cyclotomic>> apply_redex(const std::string& w, const Redex& r, int ell) {
    const std::string head = w.substr(0, r.begin), tail = w.substr(r.end);
    const std::string span = w.substr(r.begin, r.end - r.begin);
    const Cyclotomic one(ell, 1);
    std::vector<std::pair<std::string, Cyclotomic>> out;
    auto emit = [&](const std::string& mid, const Cyclotomic& c) { out.emplace_back(head + mid + tail, c); };
    if (span.size() == 2) {
        if (span == "ba")
            emit("ab", q_power(ell, -1));
        else if (span == "ca")
            emit("ac", q_power(ell, -1));
        else if (span == "db")
            emit("bd", q_power(ell, -1));
        else if (span == "dc")
            emit("cd", q_power(ell, -1));
        else if (span == "cb")
            emit("bc", one);
        else if (span == "ad") {
            emit("", one);
            emit("bc", q_power(ell, 1));
        } else if (span == "da") {
            emit("", one);
            emit("bc", q_power(ell, -1));
        } else
            throw usage_error("apply_redex: no rule for " + span);
        return out;
    }
    if (span.front() != 'a' || span.back() != 'd')
        throw usage_error("apply_redex: no rule for " + span);
    const std::string u = span.substr(1, span.size() - 2);
    const long len = static_cast<long>(u.size());
    emit(u, q_power(ell, len));
    emit(u + "bc", q_power(ell, len + 1));
    return out;
}

/// Reduces a linear combination of words to irreducible words, choosing the
/// redex with `choose(count)` at every step.
template <class Chooser>
std::map<std::string, Cyclotomic> rewrite_to_normal(std::map<std::string, Cyclotomic> pending, int ell,
                                                    Chooser&& choose) {
    std::map<std::string, Cyclotomic> done;
    auto add = [&](std::map<std::string, Cyclotomic>& into, const std::string& w, const Cyclotomic& c) {
        auto [it, inserted] = into.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                into.erase(it);
        }
    };
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string w = node.key();
        const Cyclotomic c = node.mapped();
        if (c.is_zero())
            continue;
        auto redexes = find_redexes(w);
        if (redexes.empty()) {
            add(done, w, c);
            continue;
        }
        const Redex r = redexes[choose(redexes.size())];
        for (const auto& [w2, f] : apply_redex(w, r, ell))
            add(pending, w2, c * f);
    }
    return done;
}

/// Normal form of a word under a seeded random reduction order.
inline std::map<std::string, Cyclotomic> rewrite_random_order(const std::string& word, int ell, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return rewrite_to_normal({{word, Cyclotomic(ell, 1)}}, ell, [&](std::size_t count) {
        return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
    });
}

/// Reads an irreducible word a^i b^j c^k or b^j c^k d^m as a monomial.
inline Monomial monomial_of_irreducible_word(const std::string& w) {
    Monomial m;
    std::size_t i = 0;
    while (i < w.size() && w[i] == 'a')
        ++m.t, ++i;
    while (i < w.size() && w[i] == 'b')
        ++m.j, ++i;
    while (i < w.size() && w[i] == 'c')
        ++m.k, ++i;
    int dcount = 0;
    while (i < w.size() && w[i] == 'd')
        ++dcount, ++i;
    if (i != w.size() || (m.t > 0 && dcount > 0))
        throw usage_error("word is not irreducible: " + w);
    if (dcount)
        m.t = -dcount;
    return m;
}

inline Element element_of_words(const std::map<std::string, Cyclotomic>& words, int ell) {
    Element out(AlgebraMode::generic(ell));
    for (const auto& [w, c] : words)
        out.add_term(monomial_of_irreducible_word(w), c);
    return out;
}

/// Word over {a,b,c,d} as a Word of single-letter powers.
inline Word word_of_string(const std::string& w) {
    Word out;
    for (char ch : w) {
        if (ch < 'a' || ch > 'd')
            throw usage_error("word_of_string: unexpected letter");
        out.emplace_back(static_cast<Gen>(ch), 1);
    }
    return out;
}

} // namespace slq
