// SPDX-License-Identifier: Apache-2.0
//
// The reduced orbit category: one object G/H per conjugacy class of
// subgroups, morphisms G/H_i -> G/H_j given by xH_i |-> x g H_j for the
// H_i-fixed cosets gH_j.
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "bredon/group.hpp"

namespace bredon {

struct Morphism {
    int source;  // object (class) index
    int target;
    int rep;     // smallest element index of the coset g H_target
};

class OrbitCategory {
public:
    explicit OrbitCategory(std::shared_ptr<const SubgroupLattice> lattice);

    const SubgroupLattice& lattice() const noexcept { return *lattice_; }
    const FiniteGroup& group() const noexcept { return lattice_->group(); }
    std::size_t object_count() const noexcept { return lattice_->class_count(); }
    std::size_t morphism_count() const noexcept { return morphisms_.size(); }

    const Morphism& morphism(int m) const { return morphisms_[static_cast<std::size_t>(m)]; }
    const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }

    /// Global morphism indices of Hom(i, j), ordered by coset representative.
    const std::vector<int>& hom(std::size_t i, std::size_t j) const { return hom_[i * object_count() + j]; }
    int identity(std::size_t i) const { return identity_[i]; }

    /// f o g; requires target(g) == source(f).
    int compose(int f, int g) const;
    bool composable(int f, int g) const { return morphism(g).target == morphism(f).source; }
    /// Morphism in Hom(i, j) whose coset representative is `rep`, or -1.
    int find(std::size_t i, std::size_t j, int rep) const;

    /// Endomorphisms that are not composites through any other object,
    /// together with the cross morphisms that do not factor through a third
    /// object. Naturality on these implies naturality everywhere.
    const std::vector<int>& generating_morphisms() const noexcept { return generating_; }

    /// Inverse of an endomorphism (endomorphisms of an orbit are invertible).
    int inverse(int endo) const;

private:
    std::shared_ptr<const SubgroupLattice> lattice_;
    std::vector<Morphism> morphisms_;
    std::vector<std::vector<int>> hom_;
    std::vector<int> identity_;
    std::vector<int> compose_;  // morphism_count^2, -1 where not composable
    std::vector<int> generating_;
};

std::shared_ptr<const OrbitCategory> build_orbit_category(std::shared_ptr<const SubgroupLattice> lattice);

/// DOT digraph with one node per object, one edge per morphism between
/// distinct objects and a self-loop annotated with |WH| - 1 where nonzero.
std::string export_quiver_dot(const OrbitCategory& cat);

}  // namespace bredon
