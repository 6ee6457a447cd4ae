// SPDX-License-Identifier: Apache-2.0
#include "bredon/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bredon/error.hpp"

namespace bredon {

std::size_t BettiTable::total() const {
    std::size_t t = 0;
    for (const auto& [deg, r] : ranks) t += r;
    return t;
}

std::size_t elementary_symmetric(int m, int k) {
    if (k < 0 || k > m) return 0;
    // e[j] after processing 1..i
    std::vector<std::size_t> e(static_cast<std::size_t>(k) + 1, 0);
    e[0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = std::min(i, k); j >= 1; --j) e[static_cast<std::size_t>(j)] += static_cast<std::size_t>(i) * e[static_cast<std::size_t>(j) - 1];
    return e[static_cast<std::size_t>(k)];
}

BettiTable betti(int n, int q) {
    if (n < 1 || q < 1) fail(ErrorKind::Domain, "betti: need n >= 1 and q >= 1");
    BettiTable t;
    t.n = n;
    t.q = q;
    if (n == 1) {
        // A discrete space with q! points.
        std::size_t f = 1;
        for (int i = 2; i <= q; ++i) f *= static_cast<std::size_t>(i);
        t.ranks[0] = f;
        return t;
    }
    for (int k = 0; k <= q - 1; ++k) t.ranks[k * (n - 1)] = elementary_symmetric(q - 1, k);
    return t;
}

bool Monomial::admissible() const {
    for (std::size_t l = 0; l < factors.size(); ++l) {
        if (factors[l].second >= factors[l].first || factors[l].second < 1) return false;
        if (l > 0 && factors[l - 1].first >= factors[l].first) return false;
    }
    return true;
}

std::string Monomial::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (const auto& [i, j] : factors) os << "A(" << i << ',' << j << ')';
    return os.str();
}

namespace {

void enumerate(int q, int k, int next_i, Monomial& cur, std::vector<Monomial>& out) {
    if (static_cast<int>(cur.factors.size()) == k) {
        out.push_back(cur);
        return;
    }
    const int remaining = k - static_cast<int>(cur.factors.size());
    for (int i = next_i; i <= q - remaining + 1; ++i)
        for (int j = 1; j < i; ++j) {
            cur.factors.emplace_back(i, j);
            enumerate(q, k, i + 1, cur, out);
            cur.factors.pop_back();
        }
}

void check_ring_args(int n, int q) {
    if (n < 2) fail(ErrorKind::Domain, "cohomology ring generators need n >= 2");
    if (q < 1) fail(ErrorKind::Domain, "need q >= 1");
}

}  // namespace

std::vector<Monomial> admissible_basis(int n, int q, int k) {
    check_ring_args(n, q);
    if (k < 0 || k > q - 1) fail(ErrorKind::Domain, "admissible_basis: need 0 <= k <= q-1");
    std::vector<Monomial> out;
    Monomial cur;
    enumerate(q, k, 2, cur, out);
    return out;
}

RingElement RingElement::one(int n, int q) {
    RingElement r(n, q);
    r.add(Monomial{}, 1);
    return r;
}

RingElement RingElement::generator(int n, int q, int i, int j) {
    return straighten(Monomial{{{i, j}}}, n, q);
}

int RingElement::weight() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

void RingElement::add(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (a != 1) os << a << '*';
        os << m.str();
        first = false;
    }
    return os.str();
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    ensure(a.n_ == b.n_ && a.q_ == b.q_, "ring elements from different rings");
    RingElement r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, c);
    return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + Rational(-1) * b; }

RingElement operator*(const Rational& s, const RingElement& a) {
    RingElement r(a.n_, a.q_);
    for (const auto& [m, c] : a.terms_) r.add(m, s * c);
    return r;
}

namespace {

// Rewrites `word` (with coefficient `coeff`) into admissible monomials:
// sort with the graded sign, kill squares, and apply
// A(i,j)A(i,k) = A(k,j)(A(i,k) - A(i,j)) for j < k. Each application lowers
// one first index from i to k, so the recursion terminates.
void normalize(std::vector<std::pair<int, int>> word, Rational coeff, int swap_sign, RingElement& out) {
    for (std::size_t pass = 0; pass < word.size(); ++pass)
        for (std::size_t p = 0; p + 1 < word.size(); ++p) {
            if (word[p] == word[p + 1]) return;
            if (word[p + 1] < word[p]) {
                std::swap(word[p], word[p + 1]);
                coeff *= swap_sign;
            }
        }
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
        if (word[p] == word[p + 1]) return;
        if (word[p].first != word[p + 1].first) continue;
        const int i = word[p].first, j = word[p].second, k = word[p + 1].second;
        auto w1 = word;
        w1[p] = {k, j};
        w1[p + 1] = {i, k};
        auto w2 = word;
        w2[p] = {k, j};
        w2[p + 1] = {i, j};
        normalize(std::move(w1), coeff, swap_sign, out);
        normalize(std::move(w2), -coeff, swap_sign, out);
        return;
    }
    out.add(Monomial{std::move(word)}, coeff);
}

}  // namespace

RingElement straighten(const Monomial& product, int n, int q) {
    check_ring_args(n, q);
    for (const auto& [i, j] : product.factors)
        if (j < 1 || j >= i || i > q)
            fail(ErrorKind::Domain, "generator A(" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    // Generators have degree n-1; a transposition costs (-1)^{(n-1)^2}.
    const int swap_sign = ((n - 1) % 2 == 0) ? 1 : -1;
    RingElement out(n, q);
    normalize(product.factors, 1, swap_sign, out);
    return out;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
    if (a.n() != b.n() || a.q() != b.q()) fail(ErrorKind::Domain, "multiply: elements from different rings");
    RingElement r(a.n(), a.q());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial prod = ma;
            prod.factors.insert(prod.factors.end(), mb.factors.begin(), mb.factors.end());
            r = r + (ca * cb) * straighten(prod, a.n(), a.q());
        }
    return r;
}

}  // namespace bredon
