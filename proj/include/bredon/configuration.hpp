// SPDX-License-Identifier: Apache-2.0
//
// Rational cohomology of ordered configuration spaces Conf(R^n, q): Betti
// numbers from the Poincare series prod_{m=1}^{q-1} (1 + m t^{n-1}), the
// admissible monomial basis, and multiplication in the generators A(i,j)
// modulo the Arnold relations.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bredon/linalg.hpp"

namespace bredon {

struct BettiTable {
    int n = 0;
    int q = 0;
    std::map<int, std::size_t> ranks;  // topological degree -> rank, nonzero only

    std::size_t rank(int degree) const {
        auto it = ranks.find(degree);
        return it == ranks.end() ? 0 : it->second;
    }
    std::size_t total() const;
};

BettiTable betti(int n, int q);

/// e_k(1, 2, ..., m).
std::size_t elementary_symmetric(int m, int k);

/// A product A(i1,j1) ... A(ik,jk), 1 <= j < i <= q, kept in the given order.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    std::size_t degree() const noexcept { return factors.size(); }
    bool admissible() const;
    std::string str() const;  // "A(2,1)A(3,2)", "1" for the empty product

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

std::vector<Monomial> admissible_basis(int n, int q, int k);

class RingElement {
public:
    RingElement(int n, int q) : n_(n), q_(q) {}
    static RingElement one(int n, int q);
    static RingElement generator(int n, int q, int i, int j);

    int n() const noexcept { return n_; }
    int q() const noexcept { return q_; }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Weight of a homogeneous element (number of generator factors); -1 for zero.
    int weight() const;

    void add(const Monomial& m, const Rational& c);
    std::string str() const;

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const Rational& s, const RingElement& a);
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    int q_;
    std::map<Monomial, Rational> terms_;  // admissible monomials, nonzero coefficients
};

/// Normal form of a formal product of generators on the admissible basis.
RingElement straighten(const Monomial& product, int n, int q);
RingElement multiply(const RingElement& a, const RingElement& b);

}  // namespace bredon
