// SPDX-License-Identifier: Apache-2.0
//
// Helpers shared by the test binaries: brute-force oracles that do not go
// through the library's own solvers, and generators of random systems.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "bredon/coefficient_system.hpp"
#include "bredon/homalg.hpp"
#include "bredon/linalg.hpp"

namespace testing {

using namespace bredon;

// Every subset containing the identity that is closed under multiplication.
// Exponential; meant for |G| <= 12.
inline std::vector<std::vector<int>> subgroups_by_subset_closure(const FiniteGroup& g) {
    const int n = static_cast<int>(g.order());
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<bool> in(static_cast<std::size_t>(n), false);
        in[0] = true;
        for (int i = 1; i < n; ++i) in[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1u;
        bool closed = true;
        for (int a = 0; a < n && closed; ++a)
            for (int b = 0; b < n && closed; ++b)
                if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(b)] && !in[static_cast<std::size_t>(g.mul(a, b))])
                    closed = false;
        if (!closed) continue;
        std::vector<int> h;
        for (int i = 0; i < n; ++i)
            if (in[static_cast<std::size_t>(i)]) h.push_back(i);
        out.push_back(std::move(h));
    }
    return out;
}

inline std::size_t conjugacy_class_count(const FiniteGroup& g, const std::vector<std::vector<int>>& subs) {
    std::set<std::vector<int>> seen;
    std::size_t classes = 0;
    for (const auto& h : subs) {
        if (seen.count(h)) continue;
        ++classes;
        for (int x = 0; x < static_cast<int>(g.order()); ++x) {
            std::vector<int> c;
            for (int e : h) c.push_back(g.conj(x, e));
            std::sort(c.begin(), c.end());
            seen.insert(c);
        }
    }
    return classes;
}

// |N(H)| / |H| computed from the definition.
inline std::size_t weyl_order_oracle(const FiniteGroup& g, const std::vector<int>& h) {
    std::size_t normalizer = 0;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
        bool normalizes = true;
        for (int e : h)
            if (!std::binary_search(h.begin(), h.end(), g.conj(x, e))) normalizes = false;
        if (normalizes) ++normalizer;
    }
    return normalizer / h.size();
}

// dim Hom(m, n) by imposing naturality on every morphism of the category,
// assembled densely and reduced with rref.
inline std::size_t hom_dim_oracle(const CoefficientSystem& m, const CoefficientSystem& n) {
    const OrbitCategory& cat = *m.cat;
    std::vector<std::size_t> off{0};
    for (std::size_t x = 0; x < cat.object_count(); ++x) off.push_back(off.back() + n.dims[x] * m.dims[x]);
    const std::size_t unknowns = off.back();
    if (unknowns == 0) return 0;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t phi = 0; phi < cat.morphism_count(); ++phi) {
        const auto& mor = cat.morphism(static_cast<int>(phi));
        const auto x = static_cast<std::size_t>(mor.source), y = static_cast<std::size_t>(mor.target);
        for (std::size_t r = 0; r < n.dims[x]; ++r)
            for (std::size_t cp = 0; cp < m.dims[y]; ++cp) {
                std::vector<Rational> row(unknowns);
                for (std::size_t c = 0; c < m.dims[x]; ++c) row[off[x] + r * m.dims[x] + c] += m.mats[phi](c, cp);
                for (std::size_t s = 0; s < n.dims[y]; ++s) row[off[y] + s * m.dims[y] + cp] -= n.mats[phi](r, s);
                rows.push_back(std::move(row));
            }
    }
    Matrix a(rows.size(), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < unknowns; ++j) a(i, j) = rows[i][j];
    return unknowns - (rows.empty() ? 0 : rank(a));
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n);
        if (rank(m) == n) return m;
    }
}

// Objectwise change of basis; the result is isomorphic to m.
inline CoefficientSystem scramble(const CoefficientSystem& m, std::mt19937& rng) {
    const OrbitCategory& cat = *m.cat;
    std::vector<Matrix> p, pinv;
    for (auto d : m.dims) {
        p.push_back(random_invertible(rng, d));
        pinv.push_back(inverse(p.back()));
    }
    CoefficientSystem out = m;
    for (std::size_t phi = 0; phi < cat.morphism_count(); ++phi) {
        const auto& mor = cat.morphism(static_cast<int>(phi));
        out.mats[phi] = pinv[static_cast<std::size_t>(mor.source)] * m.mats[phi] * p[static_cast<std::size_t>(mor.target)];
    }
    return out;
}

inline WeylModule random_weyl_module(const OrbitCategory& cat, std::size_t cls, std::mt19937& rng) {
    WeylModule v = std::uniform_int_distribution<int>(0, 1)(rng) ? trivial_module(cat, cls, 1 + rng() % 2)
                                                                  : regular_module(cat, cls);
    Matrix p = random_invertible(rng, v.dim), pinv = inverse(p);
    for (auto& a : v.action) a = pinv * a * p;
    return v;
}

inline CoefficientSystem random_injective(const CategoryPtr& cat, std::mt19937& rng) {
    std::vector<std::pair<CoefficientSystem, std::size_t>> parts;
    const std::size_t summands = 1 + rng() % 2;
    for (std::size_t s = 0; s < summands; ++s) {
        const std::size_t cls = rng() % cat->object_count();
        parts.emplace_back(injective_IVH(cat, cls, random_weyl_module(*cat, cls, rng)), 1);
    }
    return scramble(direct_sum(parts), rng);
}

// Sums of constants, atoms and injectives, then sometimes replaced by the
// kernel or cokernel of a random map between two such sums so the result
// need not split.
inline CoefficientSystem random_system(const CategoryPtr& cat, std::mt19937& rng) {
    auto simple = [&]() {
        std::vector<std::pair<CoefficientSystem, std::size_t>> parts;
        const std::size_t k = 1 + rng() % 3;
        for (std::size_t s = 0; s < k; ++s) {
            switch (rng() % 3) {
                case 0: parts.emplace_back(constant_Q(cat), 1); break;
                case 1: parts.emplace_back(atom_1H(cat, rng() % cat->object_count()), 1); break;
                default: {
                    const std::size_t cls = rng() % cat->object_count();
                    parts.emplace_back(injective_IVH(cat, cls, trivial_module(*cat, cls)), 1);
                }
            }
        }
        return scramble(direct_sum(parts), rng);
    };
    CoefficientSystem a = simple();
    const unsigned mode = rng() % 3;
    if (mode == 0) return a;
    auto pa = std::make_shared<const CoefficientSystem>(a);
    auto pb = std::make_shared<const CoefficientSystem>(simple());
    const HomBasis hb = hom_basis(pa, pb);
    if (hb.dim() == 0) return a;
    NatTransformation f = zero_transformation(pa, pb);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (const auto& b : hb.basis) {
        const int c = coef(rng);
        for (std::size_t x = 0; x < f.comps.size(); ++x) {
            Matrix t = b.comps[x];
            t *= Rational(c);
            f.comps[x] = f.comps[x] + t;
        }
    }
    const KernelCokernel kc = kernel_cokernel(f);
    return mode == 1 ? *kc.ker : *kc.coker;
}

}  // namespace testing
