// SPDX-License-Identifier: Apache-2.0
//
// Homology coefficient systems of equivariant configuration spaces
// Conf(V, q) for permutation representations V, and the E2-page of the
// universal coefficient spectral sequence.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bredon/coefficient_system.hpp"
#include "bredon/homalg.hpp"

namespace bredon {

/// V = sum of multiplicity * R[G/K] over the summands.
struct GRepresentation {
    std::vector<std::pair<std::size_t, std::size_t>> summands;  // (class of K, multiplicity)

    static GRepresentation regular(std::size_t copies = 1) { return GRepresentation{{{0, copies}}}; }
    std::size_t dimension(const SubgroupLattice& lat) const;
};

/// "regular", "regular:<s>" or "cosets:<class>x<mult>,<class>x<mult>,...".
GRepresentation parse_representation(const std::string& descriptor, const SubgroupLattice& lat);

/// dim V^H: each summand contributes multiplicity * (number of H-orbits on G/K).
std::size_t fixed_rep_dim(const SubgroupLattice& lat, const GRepresentation& v, std::size_t cls);

struct HypothesisViolation {
    std::size_t lower;  // class K
    std::size_t upper;  // class H, with K strictly below H
    std::size_t lower_dim;
    std::size_t upper_dim;
};

/// Empty when dim V^H < dim V^K for every K strictly below H and dim V^G >= 1.
/// A violation with lower == upper marks dim V^G == 0.
std::vector<HypothesisViolation> check_hypothesis(const SubgroupLattice& lat, const GRepresentation& v);

struct DecompositionRow {
    std::size_t constant = 0;          // copies of the constant system
    std::vector<std::size_t> atoms;    // per class, copies of 1_H
};

struct DecompositionTable {
    int q = 0;
    std::vector<std::size_t> fixed_dims;      // dim V^H per class
    std::map<int, DecompositionRow> rows;     // homological degree -> row
};

DecompositionTable decompose_homology(const SubgroupLattice& lat, const GRepresentation& v, int q);

/// The row at `degree` as a coefficient system; the zero system if absent.
CoefficientSystem realize_system(const CategoryPtr& cat, const DecompositionTable& table, int degree);

struct E2Page {
    std::map<std::pair<int, int>, std::size_t> ext;  // (p, q) -> dim Ext^q(H_p, M)
    std::map<std::pair<int, int>, std::size_t> hom;  // (p, q) -> dim Hom(H_p, I^q)
    std::size_t resolution_terms = 0;
};

E2Page e2_page(const CategoryPtr& cat, const DecompositionTable& table, const SystemPtr& m);

/// degree n -> dim Hom(H_n, constant Q), the Bredon cohomology with constant
/// coefficients (the constant system is injective, so the sequence collapses).
std::map<int, std::size_t> constant_Q_cohomology(const CategoryPtr& cat, const DecompositionTable& table);

}  // namespace bredon
