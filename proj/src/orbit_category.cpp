// SPDX-License-Identifier: Apache-2.0
#include "bredon/orbit_category.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bredon/error.hpp"

namespace bredon {

namespace {

int coset_rep_of(const FiniteGroup& g, const Subgroup& h, int x) {
    int best = g.mul(x, h.elements.front());
    for (int e : h.elements) best = std::min(best, g.mul(x, e));
    return best;
}

}  // namespace

OrbitCategory::OrbitCategory(std::shared_ptr<const SubgroupLattice> lattice) : lattice_(std::move(lattice)) {
    const FiniteGroup& g = lattice_->group();
    const std::size_t n = object_count();
    hom_.resize(n * n);
    identity_.assign(n, -1);

    for (std::size_t j = 0; j < n; ++j) {
        const CosetSpace cs = coset_space(g, lattice_->representative(j));
        for (std::size_t i = 0; i < n; ++i) {
            for (int p : fixed_points(cs.set, lattice_->representative(i))) {
                const int rep = cs.reps[static_cast<std::size_t>(p)];
                hom_[i * n + j].push_back(static_cast<int>(morphisms_.size()));
                morphisms_.push_back(Morphism{static_cast<int>(i), static_cast<int>(j), rep});
            }
        }
    }
    // Renumber so morphisms are grouped by (source, target) pair.
    std::vector<Morphism> ordered;
    ordered.reserve(morphisms_.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int& m : hom_[i * n + j]) {
                ordered.push_back(morphisms_[static_cast<std::size_t>(m)]);
                m = static_cast<int>(ordered.size()) - 1;
            }
    morphisms_ = std::move(ordered);

    for (std::size_t i = 0; i < n; ++i) {
        identity_[i] = find(i, i, 0);
        ensure(identity_[i] >= 0, "orbit category: missing identity");
        ensure(hom(i, i).size() == lattice_->weyl(i).order(), "orbit category: |End(G/H)| != |WH|");
        for (std::size_t j = 0; j < n; ++j)
            ensure(hom(i, j).empty() == !lattice_->subconjugate(i, j), "orbit category: Hom(i,j) disagrees with subconjugacy");
    }

    const std::size_t m = morphisms_.size();
    compose_.assign(m * m, -1);
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t h = 0; h < m; ++h) {
            const Morphism& mf = morphisms_[f];
            const Morphism& mh = morphisms_[h];
            if (mh.target != mf.source) continue;
            const auto src = static_cast<std::size_t>(mh.source), tgt = static_cast<std::size_t>(mf.target);
            const int rep = coset_rep_of(g, lattice_->representative(tgt), g.mul(mh.rep, mf.rep));
            const int c = find(src, tgt, rep);
            ensure(c >= 0, "orbit category: composite is not a morphism");
            compose_[f * m + h] = c;
        }

    for (std::size_t f = 0; f < m; ++f) {
        const auto& mf = morphisms_[f];
        ensure(compose(static_cast<int>(f), identity_[static_cast<std::size_t>(mf.source)]) == static_cast<int>(f) &&
                   compose(identity_[static_cast<std::size_t>(mf.target)], static_cast<int>(f)) == static_cast<int>(f),
               "orbit category: identity is not neutral");
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const int ab = compose_[a * m + b];
            if (ab < 0) continue;
            for (std::size_t c = 0; c < m; ++c) {
                const int bc = compose_[b * m + c];
                if (bc < 0) continue;
                ensure(compose_[static_cast<std::size_t>(ab) * m + c] == compose_[a * m + static_cast<std::size_t>(bc)],
                       "orbit category: composition is not associative");
            }
        }

    std::set<int> through_third;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                if (k == i || k == j || i == j) continue;
                for (int a : hom(i, k))
                    for (int b : hom(k, j)) through_third.insert(compose(b, a));
            }
    for (std::size_t f = 0; f < m; ++f) {
        const auto& mf = morphisms_[f];
        if (mf.source == mf.target) {
            if (static_cast<int>(f) != identity_[static_cast<std::size_t>(mf.source)]) generating_.push_back(static_cast<int>(f));
        } else if (!through_third.count(static_cast<int>(f))) {
            generating_.push_back(static_cast<int>(f));
        }
    }
}

int OrbitCategory::compose(int f, int g) const {
    const int c = compose_[static_cast<std::size_t>(f) * morphism_count() + static_cast<std::size_t>(g)];
    if (c < 0) fail(ErrorKind::Domain, "compose: morphisms are not composable");
    return c;
}

int OrbitCategory::find(std::size_t i, std::size_t j, int rep) const {
    for (int m : hom(i, j))
        if (morphisms_[static_cast<std::size_t>(m)].rep == rep) return m;
    return -1;
}

int OrbitCategory::inverse(int endo) const {
    const Morphism& e = morphism(endo);
    ensure(e.source == e.target, "inverse of a non-endomorphism");
    const auto obj = static_cast<std::size_t>(e.source);
    for (int x : hom(obj, obj))
        if (compose(x, endo) == identity_[obj]) return x;
    fail(ErrorKind::Internal, "endomorphism without inverse");
}

std::shared_ptr<const OrbitCategory> build_orbit_category(std::shared_ptr<const SubgroupLattice> lattice) {
    return std::make_shared<const OrbitCategory>(std::move(lattice));
}

std::string export_quiver_dot(const OrbitCategory& cat) {
    const auto& lat = cat.lattice();
    const auto& g = cat.group();
    std::ostringstream os;
    os << "digraph orbit_category {\n";
    os << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        os << "  n" << i << " [label=\"" << i << ": G/H, H " << lat.describe(i) << "\"];\n";
    }
    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        const std::size_t loops = lat.weyl(i).order() - 1;
        if (loops > 0) os << "  n" << i << " -> n" << i << " [label=\"" << loops << " loops (|WH|-1)\"];\n";
    }
    for (std::size_t i = 0; i < cat.object_count(); ++i)
        for (std::size_t j = 0; j < cat.object_count(); ++j) {
            if (i == j) continue;
            for (int m : cat.hom(i, j))
                os << "  n" << i << " -> n" << j << " [label=\"" << g.element(cat.morphism(m).rep).cycles() << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace bredon
