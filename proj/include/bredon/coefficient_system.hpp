// SPDX-License-Identifier: Apache-2.0
//
// Rational Bredon coefficient systems: contravariant functors from the
// reduced orbit category to finite-dimensional rational vector spaces.
//
// For a morphism phi: X -> Y the structure map M(phi): M(Y) -> M(X) is a
// dims(X) x dims(Y) matrix acting on column vectors, and
// M(psi o phi) = M(phi) * M(psi).
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bredon/linalg.hpp"
#include "bredon/orbit_category.hpp"

namespace bredon {

using CategoryPtr = std::shared_ptr<const OrbitCategory>;

struct CoefficientSystem {
    CategoryPtr cat;
    std::vector<std::size_t> dims;  // per object
    std::vector<Matrix> mats;       // per morphism

    std::size_t dim(std::size_t obj) const { return dims[obj]; }
    const Matrix& map(int m) const { return mats[static_cast<std::size_t>(m)]; }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    friend bool operator==(const CoefficientSystem& a, const CoefficientSystem& b) {
        return a.cat == b.cat && a.dims == b.dims && a.mats == b.mats;
    }
};

using SystemPtr = std::shared_ptr<const CoefficientSystem>;

/// f: source -> target, one target_dim x source_dim matrix per object.
struct NatTransformation {
    SystemPtr source;
    SystemPtr target;
    std::vector<Matrix> comps;

    const Matrix& at(std::size_t obj) const { return comps[obj]; }
};

/// A left Q(WH)-module. action[w] is the matrix of the Weyl element with
/// index w in lattice().weyl(cls); it must satisfy
/// action[w1 * w2] = action[w1] * action[w2].
struct WeylModule {
    int cls = 0;
    std::size_t dim = 0;
    std::vector<Matrix> action;
};

struct Violation {
    std::string what;
    int morphism = -1;
    int other = -1;
};

CoefficientSystem zero_system(CategoryPtr cat);
CoefficientSystem constant_Q(CategoryPtr cat);
CoefficientSystem atom_1H(CategoryPtr cat, std::size_t cls);
CoefficientSystem direct_sum(const std::vector<std::pair<CoefficientSystem, std::size_t>>& parts);
CoefficientSystem direct_sum(const CoefficientSystem& a, const CoefficientSystem& b);

/// The injective system I(V_H): G/K |-> Hom_{Q(WH)}(Q((G/K)^H), V_H).
CoefficientSystem injective_IVH(CategoryPtr cat, std::size_t cls, const WeylModule& v);

/// Checks identities map to identity and M(psi o phi) = M(phi) M(psi) on every
/// composable pair. Returns the first violation found.
std::optional<Violation> validate(const CoefficientSystem& m);
std::optional<Violation> validate(const NatTransformation& f);

WeylModule trivial_module(const OrbitCategory& cat, std::size_t cls, std::size_t dim = 1);
/// Q(WH) acting on itself by left multiplication.
WeylModule regular_module(const OrbitCategory& cat, std::size_t cls);
/// Checks shapes, invertibility and the homomorphism property.
std::optional<std::string> validate(const OrbitCategory& cat, const WeylModule& v);

/// Endomorphism of G/H corresponding to Weyl element w (same coset representative).
int weyl_endomorphism(const OrbitCategory& cat, std::size_t cls, std::size_t w);

NatTransformation identity_transformation(SystemPtr m);
NatTransformation zero_transformation(SystemPtr source, SystemPtr target);
/// g o f
NatTransformation compose(const NatTransformation& g, const NatTransformation& f);
bool is_injective(const NatTransformation& f);

namespace detail {

/// I(V_H) together with the chosen bases: at object k, basis[k] has one
/// column per basis vector, each a function hom(cls, k) -> V flattened
/// point-major (entry x * dim V + r).
struct InjectiveModel {
    CoefficientSystem system;
    std::vector<Matrix> basis;
    std::vector<Matrix> left_inv;
};

InjectiveModel injective_model(CategoryPtr cat, std::size_t cls, const WeylModule& v);

}  // namespace detail

}  // namespace bredon
