// SPDX-License-Identifier: Apache-2.0
#include "bredon/coefficient_system.hpp"

#include <algorithm>
#include <numeric>

#include "bredon/error.hpp"

namespace bredon {

std::size_t CoefficientSystem::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

namespace {

CoefficientSystem shaped(CategoryPtr cat, std::vector<std::size_t> dims) {
    CoefficientSystem m;
    m.dims = std::move(dims);
    m.mats.reserve(cat->morphism_count());
    for (const auto& mor : cat->morphisms())
        m.mats.emplace_back(m.dims[static_cast<std::size_t>(mor.source)], m.dims[static_cast<std::size_t>(mor.target)]);
    m.cat = std::move(cat);
    return m;
}

}  // namespace

CoefficientSystem zero_system(CategoryPtr cat) {
    const std::size_t n = cat->object_count();
    return shaped(std::move(cat), std::vector<std::size_t>(n, 0));
}

CoefficientSystem constant_Q(CategoryPtr cat) {
    const std::size_t n = cat->object_count();
    CoefficientSystem m = shaped(std::move(cat), std::vector<std::size_t>(n, 1));
    for (auto& mat : m.mats) mat(0, 0) = 1;
    return m;
}

CoefficientSystem atom_1H(CategoryPtr cat, std::size_t cls) {
    if (cls >= cat->object_count()) fail(ErrorKind::Domain, "atom: class index " + std::to_string(cls) + " out of range");
    std::vector<std::size_t> dims(cat->object_count(), 0);
    dims[cls] = 1;
    CoefficientSystem m = shaped(cat, std::move(dims));
    for (int e : cat->hom(cls, cls)) m.mats[static_cast<std::size_t>(e)](0, 0) = 1;
    return m;
}

CoefficientSystem direct_sum(const std::vector<std::pair<CoefficientSystem, std::size_t>>& parts) {
    if (parts.empty()) fail(ErrorKind::Domain, "direct_sum of an empty list has no category");
    const CategoryPtr cat = parts.front().first.cat;
    for (const auto& [sys, mult] : parts)
        if (sys.cat != cat) fail(ErrorKind::Domain, "direct_sum: systems over different categories");
    CoefficientSystem out;
    out.cat = cat;
    out.dims.assign(cat->object_count(), 0);
    for (const auto& [sys, mult] : parts)
        for (std::size_t i = 0; i < out.dims.size(); ++i) out.dims[i] += sys.dims[i] * mult;
    out.mats.reserve(cat->morphism_count());
    for (std::size_t m = 0; m < cat->morphism_count(); ++m) {
        std::vector<Matrix> blocks;
        for (const auto& [sys, mult] : parts)
            for (std::size_t k = 0; k < mult; ++k) blocks.push_back(sys.mats[m]);
        out.mats.push_back(Matrix::block_diag(blocks));
    }
    return out;
}

CoefficientSystem direct_sum(const CoefficientSystem& a, const CoefficientSystem& b) {
    return direct_sum({{a, 1}, {b, 1}});
}

int weyl_endomorphism(const OrbitCategory& cat, std::size_t cls, std::size_t w) {
    const int m = cat.find(cls, cls, cat.lattice().weyl(cls).coset_reps.at(w));
    ensure(m >= 0, "Weyl element without matching endomorphism");
    return m;
}

WeylModule trivial_module(const OrbitCategory& cat, std::size_t cls, std::size_t dim) {
    WeylModule v;
    v.cls = static_cast<int>(cls);
    v.dim = dim;
    v.action.assign(cat.lattice().weyl(cls).order(), Matrix::identity(dim));
    return v;
}

WeylModule regular_module(const OrbitCategory& cat, std::size_t cls) {
    const WeylGroup& w = cat.lattice().weyl(cls);
    WeylModule v;
    v.cls = static_cast<int>(cls);
    v.dim = w.order();
    for (std::size_t a = 0; a < w.order(); ++a) {
        Matrix m(w.order(), w.order());
        for (std::size_t b = 0; b < w.order(); ++b)
            m(static_cast<std::size_t>(w.mul(static_cast<int>(a), static_cast<int>(b))), b) = 1;
        v.action.push_back(std::move(m));
    }
    return v;
}

std::optional<std::string> validate(const OrbitCategory& cat, const WeylModule& v) {
    if (v.cls < 0 || static_cast<std::size_t>(v.cls) >= cat.object_count()) return "Weyl module class out of range";
    const WeylGroup& w = cat.lattice().weyl(static_cast<std::size_t>(v.cls));
    if (v.action.size() != w.order()) return "Weyl module needs one matrix per Weyl element";
    for (const auto& m : v.action)
        if (m.rows() != v.dim || m.cols() != v.dim) return "Weyl module matrix has wrong shape";
    if (!(v.action[0] == Matrix::identity(v.dim))) return "Weyl identity does not act as identity";
    for (std::size_t a = 0; a < w.order(); ++a)
        for (std::size_t b = 0; b < w.order(); ++b)
            if (!(v.action[static_cast<std::size_t>(w.mul(static_cast<int>(a), static_cast<int>(b)))] ==
                  v.action[a] * v.action[b]))
                return "Weyl module action is not a homomorphism";
    return std::nullopt;
}

namespace detail {

InjectiveModel injective_model(CategoryPtr cat, std::size_t cls, const WeylModule& v) {
    if (static_cast<std::size_t>(v.cls) != cls) fail(ErrorKind::Domain, "injective_IVH: module belongs to another class");
    if (auto err = validate(*cat, v)) fail(ErrorKind::Domain, "injective_IVH: " + *err);

    const std::size_t n = cat->object_count();
    const std::size_t dv = v.dim;
    const WeylGroup& weyl = cat->lattice().weyl(cls);
    std::vector<int> endos;
    for (std::size_t w = 0; w < weyl.order(); ++w) endos.push_back(weyl_endomorphism(*cat, cls, w));

    auto point_index = [&](std::size_t obj, int morphism) {
        const auto& pts = cat->hom(cls, obj);
        auto it = std::find(pts.begin(), pts.end(), morphism);
        ensure(it != pts.end(), "injective_IVH: morphism outside hom-set");
        return static_cast<std::size_t>(it - pts.begin());
    };

    InjectiveModel model;
    std::vector<std::size_t> dims(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& pts = cat->hom(cls, k);
        const std::size_t unknowns = pts.size() * dv;
        // F(phi o e_w) = rho(w) F(phi) for every point phi and Weyl element w.
        RowReducer red(unknowns);
        for (std::size_t w = 1; w < endos.size(); ++w)
            for (std::size_t x = 0; x < pts.size(); ++x) {
                const std::size_t y = point_index(k, cat->compose(pts[x], endos[w]));
                for (std::size_t r = 0; r < dv; ++r) {
                    std::vector<Rational> row(unknowns);
                    row[y * dv + r] += 1;
                    for (std::size_t s = 0; s < dv; ++s) row[x * dv + s] -= v.action[w](r, s);
                    red.add(std::move(row));
                }
            }
        Matrix b = red.nullspace();
        dims[k] = b.cols();
        model.left_inv.push_back(left_inverse(b));
        model.basis.push_back(std::move(b));
    }

    CoefficientSystem sys;
    sys.cat = cat;
    sys.dims = dims;
    for (const auto& mor : cat->morphisms()) {
        const auto src = static_cast<std::size_t>(mor.source), tgt = static_cast<std::size_t>(mor.target);
        const auto& src_pts = cat->hom(cls, src);
        const int psi = static_cast<int>(&mor - cat->morphisms().data());
        Matrix mat(dims[src], dims[tgt]);
        for (std::size_t b = 0; b < dims[tgt]; ++b) {
            // (F o fbar)(phi) = F(psi o phi)
            Matrix pulled(src_pts.size() * dv, 1);
            for (std::size_t x = 0; x < src_pts.size(); ++x) {
                const std::size_t y = point_index(tgt, cat->compose(psi, src_pts[x]));
                for (std::size_t r = 0; r < dv; ++r) pulled(x * dv + r, 0) = model.basis[tgt](y * dv + r, b);
            }
            Matrix c = coordinates(model.basis[src], model.left_inv[src], pulled);
            for (std::size_t a = 0; a < dims[src]; ++a) mat(a, b) = c(a, 0);
        }
        sys.mats.push_back(std::move(mat));
    }
    model.system = std::move(sys);
    return model;
}

}  // namespace detail

CoefficientSystem injective_IVH(CategoryPtr cat, std::size_t cls, const WeylModule& v) {
    return detail::injective_model(std::move(cat), cls, v).system;
}

std::optional<Violation> validate(const CoefficientSystem& m) {
    const OrbitCategory& cat = *m.cat;
    if (m.dims.size() != cat.object_count()) return Violation{"dims vector has wrong length"};
    if (m.mats.size() != cat.morphism_count()) return Violation{"one matrix per morphism required"};
    for (std::size_t f = 0; f < cat.morphism_count(); ++f) {
        const auto& mor = cat.morphism(static_cast<int>(f));
        const auto& mat = m.mats[f];
        if (mat.rows() != m.dims[static_cast<std::size_t>(mor.source)] || mat.cols() != m.dims[static_cast<std::size_t>(mor.target)])
            return Violation{"structure map has wrong shape", static_cast<int>(f)};
    }
    for (std::size_t i = 0; i < cat.object_count(); ++i)
        if (!(m.map(cat.identity(i)) == Matrix::identity(m.dims[i])))
            return Violation{"identity morphism does not map to the identity", cat.identity(i)};
    for (std::size_t f = 0; f < cat.morphism_count(); ++f)
        for (std::size_t g = 0; g < cat.morphism_count(); ++g) {
            if (!cat.composable(static_cast<int>(f), static_cast<int>(g))) continue;
            const int fg = cat.compose(static_cast<int>(f), static_cast<int>(g));
            if (!(m.map(fg) == m.mats[g] * m.mats[f]))
                return Violation{"M(f o g) != M(g) M(f)", static_cast<int>(f), static_cast<int>(g)};
        }
    return std::nullopt;
}

std::optional<Violation> validate(const NatTransformation& f) {
    const CoefficientSystem& src = *f.source;
    const CoefficientSystem& tgt = *f.target;
    if (src.cat != tgt.cat) return Violation{"source and target over different categories"};
    const OrbitCategory& cat = *src.cat;
    if (f.comps.size() != cat.object_count()) return Violation{"one component per object required"};
    for (std::size_t x = 0; x < cat.object_count(); ++x)
        if (f.comps[x].rows() != tgt.dims[x] || f.comps[x].cols() != src.dims[x]) return Violation{"component has wrong shape"};
    for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
        const auto& mor = cat.morphism(static_cast<int>(m));
        const auto x = static_cast<std::size_t>(mor.source), y = static_cast<std::size_t>(mor.target);
        if (!(f.comps[x] * src.mats[m] == tgt.mats[m] * f.comps[y])) return Violation{"naturality square fails", static_cast<int>(m)};
    }
    return std::nullopt;
}

NatTransformation identity_transformation(SystemPtr m) {
    NatTransformation f;
    for (auto d : m->dims) f.comps.push_back(Matrix::identity(d));
    f.source = m;
    f.target = std::move(m);
    return f;
}

NatTransformation zero_transformation(SystemPtr source, SystemPtr target) {
    if (source->cat != target->cat) fail(ErrorKind::Domain, "zero_transformation: different categories");
    NatTransformation f;
    for (std::size_t x = 0; x < source->dims.size(); ++x) f.comps.emplace_back(target->dims[x], source->dims[x]);
    f.source = std::move(source);
    f.target = std::move(target);
    return f;
}

NatTransformation compose(const NatTransformation& g, const NatTransformation& f) {
    ensure(f.target->dims == g.source->dims, "compose: transformations do not chain");
    NatTransformation out;
    out.source = f.source;
    out.target = g.target;
    for (std::size_t x = 0; x < f.comps.size(); ++x) out.comps.push_back(g.comps[x] * f.comps[x]);
    return out;
}

bool is_injective(const NatTransformation& f) {
    for (std::size_t x = 0; x < f.comps.size(); ++x)
        if (rank(f.comps[x]) != f.source->dims[x]) return false;
    return true;
}

}  // namespace bredon
