// SPDX-License-Identifier: Apache-2.0
//
// Hom-spaces, kernels and cokernels, injective envelopes, injective
// resolutions and Ext in the category of rational coefficient systems.
#pragma once

#include <cstddef>
#include <vector>

#include "bredon/coefficient_system.hpp"

namespace bredon {

struct HomBasis {
    std::vector<NatTransformation> basis;
    /// One column per basis element: its components flattened object by
    /// object, each row-major.
    Matrix coords;
    std::size_t dim() const noexcept { return basis.size(); }
};

/// Solves f_X M(phi) = N(phi) f_Y over all morphisms phi: X -> Y.
HomBasis hom_basis(const SystemPtr& m, const SystemPtr& n);

/// dim of N(G/H) intersected with the kernels of N(phi) for all
/// phi: G/K -> G/H with K strictly below H. No Weyl invariance is imposed,
/// so this can exceed dim Hom(1_H, N) when WH acts nontrivially.
std::size_t hom_1H_formula(const CoefficientSystem& n, std::size_t cls);

struct KernelCokernel {
    SystemPtr ker;
    SystemPtr coker;
    NatTransformation incl;  // ker -> source
    NatTransformation proj;  // target -> coker
};

KernelCokernel kernel_cokernel(const NatTransformation& f);

/// A summand I(V_h) of an envelope together with its Weyl module.
struct EnvelopeSummand {
    std::size_t cls;
    WeylModule module;
};

struct Envelope {
    SystemPtr system;
    NatTransformation eta;  // m -> system, objectwise injective
    std::vector<EnvelopeSummand> summands;
};

Envelope injective_envelope(const SystemPtr& m);

struct InjectiveResolution {
    std::vector<SystemPtr> terms;
    NatTransformation aug;                 // M -> I^0
    std::vector<NatTransformation> diffs;  // I^k -> I^{k+1}
    std::vector<std::vector<EnvelopeSummand>> summands;  // per term

    std::size_t length() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
};

/// Iterated envelope of the cokernel. Exactness is checked objectwise by
/// rank bookkeeping; throws ErrorKind::Internal if more than L terms appear,
/// L being the longest subgroup chain.
InjectiveResolution injective_resolution(const SystemPtr& m);

/// Dimensions of Hom(m, I^q) for every term of the resolution.
std::vector<std::size_t> hom_complex_dims(const SystemPtr& m, const InjectiveResolution& r);

/// Cohomology of Hom(m, I^*) for a resolution of the second argument.
std::vector<std::size_t> ext_dims(const SystemPtr& m, const InjectiveResolution& r);
std::vector<std::size_t> ext_dims(const SystemPtr& m, const SystemPtr& n);

struct ExtResult {
    std::vector<std::size_t> hom;  // dim Hom(m, I^q)
    std::vector<std::size_t> ext;  // dim Ext^q(m, n)
};

/// Both of the above from one pass over the Hom complex.
ExtResult ext_with_hom_dims(const SystemPtr& m, const InjectiveResolution& r);

}  // namespace bredon
