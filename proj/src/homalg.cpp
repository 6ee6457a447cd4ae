// SPDX-License-Identifier: Apache-2.0
#include "bredon/homalg.hpp"

#include <sstream>

#include "bredon/error.hpp"

namespace bredon {

namespace {

std::vector<std::size_t> hom_offsets(const CoefficientSystem& m, const CoefficientSystem& n) {
    std::vector<std::size_t> off(m.dims.size() + 1, 0);
    for (std::size_t x = 0; x < m.dims.size(); ++x) off[x + 1] = off[x] + n.dims[x] * m.dims[x];
    return off;
}

Matrix flatten(const std::vector<Matrix>& comps) {
    std::size_t total = 0;
    for (const auto& c : comps) total += c.rows() * c.cols();
    Matrix v(total, 1);
    std::size_t k = 0;
    for (const auto& c : comps)
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t s = 0; s < c.cols(); ++s) v(k++, 0) = c(r, s);
    return v;
}

// Morphisms into `cls` from every other object.
std::vector<int> morphisms_from_below(const OrbitCategory& cat, std::size_t cls) {
    std::vector<int> out;
    for (std::size_t k = 0; k < cat.object_count(); ++k) {
        if (k == cls) continue;
        for (int m : cat.hom(k, cls)) out.push_back(m);
    }
    return out;
}

Matrix stacked_maps(const CoefficientSystem& m, const std::vector<int>& morphisms, std::size_t cols) {
    Matrix out(0, cols);
    for (int f : morphisms) out = Matrix::vstack(out, m.map(f));
    return out;
}

std::string describe_failure(const char* what, const std::optional<Violation>& v) {
    std::ostringstream os;
    os << what << ": " << v->what;
    if (v->morphism >= 0) os << " (morphism " << v->morphism << ")";
    return os.str();
}

}  // namespace

HomBasis hom_basis(const SystemPtr& m, const SystemPtr& n) {
    if (m->cat != n->cat) fail(ErrorKind::Domain, "hom_basis: systems over different categories");
    const OrbitCategory& cat = *m->cat;
    const auto off = hom_offsets(*m, *n);
    const std::size_t unknowns = off.back();
    auto var = [&](std::size_t x, std::size_t r, std::size_t c) { return off[x] + r * m->dims[x] + c; };

    RowReducer red(unknowns);
    for (int phi : cat.generating_morphisms()) {
        const auto& mor = cat.morphism(phi);
        const auto x = static_cast<std::size_t>(mor.source), y = static_cast<std::size_t>(mor.target);
        const Matrix& mm = m->map(phi);
        const Matrix& nn = n->map(phi);
        // (f_X M(phi) - N(phi) f_Y)(r, c') = 0
        for (std::size_t r = 0; r < n->dims[x]; ++r)
            for (std::size_t cp = 0; cp < m->dims[y]; ++cp) {
                std::vector<Rational> row(unknowns);
                bool any = false;
                for (std::size_t c = 0; c < m->dims[x]; ++c)
                    if (sgn(mm(c, cp)) != 0) {
                        row[var(x, r, c)] += mm(c, cp);
                        any = true;
                    }
                for (std::size_t s = 0; s < n->dims[y]; ++s)
                    if (sgn(nn(r, s)) != 0) {
                        row[var(y, s, cp)] -= nn(r, s);
                        any = true;
                    }
                if (any) red.add(std::move(row));
            }
    }

    HomBasis hb;
    hb.coords = red.nullspace();
    for (std::size_t b = 0; b < hb.coords.cols(); ++b) {
        NatTransformation f;
        f.source = m;
        f.target = n;
        for (std::size_t x = 0; x < cat.object_count(); ++x) {
            Matrix c(n->dims[x], m->dims[x]);
            for (std::size_t r = 0; r < c.rows(); ++r)
                for (std::size_t s = 0; s < c.cols(); ++s) c(r, s) = hb.coords(var(x, r, s), b);
            f.comps.push_back(std::move(c));
        }
        hb.basis.push_back(std::move(f));
    }
    return hb;
}

std::size_t hom_1H_formula(const CoefficientSystem& n, std::size_t cls) {
    const auto below = morphisms_from_below(*n.cat, cls);
    const std::size_t d = n.dims[cls];
    if (below.empty() || d == 0) return d;
    return d - rank(stacked_maps(n, below, d));
}

KernelCokernel kernel_cokernel(const NatTransformation& f) {
    const CoefficientSystem& src = *f.source;
    const CoefficientSystem& tgt = *f.target;
    const OrbitCategory& cat = *src.cat;
    const std::size_t n = cat.object_count();

    std::vector<Matrix> kbasis, kinv, section, proj;
    for (std::size_t x = 0; x < n; ++x) {
        const Matrix& fx = f.comps[x];
        Matrix k = src.dims[x] ? nullspace(fx.rows() ? fx : Matrix(0, src.dims[x])) : Matrix(0, 0);
        kinv.push_back(left_inverse(k));
        kbasis.push_back(std::move(k));

        // Complement of the image: standard vectors off the RREF pivots.
        const std::size_t d = tgt.dims[x];
        Matrix image = column_space(fx);
        std::vector<bool> pivot(d, false);
        if (!fx.empty())
            for (auto p : rref(fx.transposed()).pivots) pivot[p] = true;
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < d; ++i)
            if (!pivot[i]) free.push_back(i);
        Matrix s(d, free.size());
        for (std::size_t j = 0; j < free.size(); ++j) s(free[j], j) = 1;
        Matrix t = inverse(Matrix::hstack(image, s));
        Matrix p(free.size(), d);
        for (std::size_t r = 0; r < free.size(); ++r)
            for (std::size_t c = 0; c < d; ++c) p(r, c) = t(image.cols() + r, c);
        section.push_back(std::move(s));
        proj.push_back(std::move(p));
    }

    auto ker = std::make_shared<CoefficientSystem>();
    auto coker = std::make_shared<CoefficientSystem>();
    ker->cat = coker->cat = src.cat;
    for (std::size_t x = 0; x < n; ++x) {
        ker->dims.push_back(kbasis[x].cols());
        coker->dims.push_back(section[x].cols());
    }
    for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
        const auto& mor = cat.morphism(static_cast<int>(m));
        const auto x = static_cast<std::size_t>(mor.source), y = static_cast<std::size_t>(mor.target);
        ker->mats.push_back(kinv[x] * src.mats[m] * kbasis[y]);
        coker->mats.push_back(proj[x] * tgt.mats[m] * section[y]);
    }

    KernelCokernel out;
    out.ker = ker;
    out.coker = coker;
    out.incl.source = ker;
    out.incl.target = f.source;
    out.incl.comps = std::move(kbasis);
    out.proj.source = f.target;
    out.proj.target = coker;
    out.proj.comps = std::move(proj);
    if (auto v = validate(*ker)) fail(ErrorKind::Internal, describe_failure("kernel", v));
    if (auto v = validate(*coker)) fail(ErrorKind::Internal, describe_failure("cokernel", v));
    return out;
}

Envelope injective_envelope(const SystemPtr& m) {
    const CategoryPtr cat = m->cat;
    const std::size_t n = cat->object_count();

    std::vector<detail::InjectiveModel> models;
    std::vector<Matrix> projections;  // equivariant retraction M(G/H) -> V_H
    Envelope env;

    for (std::size_t h = 0; h < n; ++h) {
        const std::size_t d = m->dims[h];
        if (d == 0) continue;
        const auto below = morphisms_from_below(*cat, h);
        Matrix v_basis = below.empty() ? Matrix::identity(d) : nullspace(stacked_maps(*m, below, d));
        const std::size_t dv = v_basis.cols();
        if (dv == 0) continue;
        const Matrix v_inv = left_inverse(v_basis);

        const WeylGroup& weyl = cat->lattice().weyl(h);
        WeylModule module;
        module.cls = static_cast<int>(h);
        module.dim = dv;
        for (std::size_t w = 0; w < weyl.order(); ++w) {
            const Matrix& act = m->map(weyl_endomorphism(*cat, h, w));
            Matrix rho = v_inv * act * v_basis;
            if (!(act * v_basis == v_basis * rho))
                fail(ErrorKind::Internal, "injective_envelope: V_H is not Weyl-stable at object " + std::to_string(h));
            module.action.push_back(std::move(rho));
        }

        Matrix pi(dv, d);
        for (std::size_t w = 0; w < weyl.order(); ++w)
            pi = pi + inverse(module.action[w]) * v_inv * m->map(weyl_endomorphism(*cat, h, w));
        pi *= Rational(1, static_cast<long>(weyl.order()));
        ensure(pi * v_basis == Matrix::identity(dv), "injective_envelope: averaged projection is not a retraction");

        models.push_back(detail::injective_model(cat, h, module));
        projections.push_back(std::move(pi));
        env.summands.push_back(EnvelopeSummand{h, std::move(module)});
    }

    if (models.empty()) {
        auto z = std::make_shared<const CoefficientSystem>(zero_system(cat));
        env.system = z;
        env.eta = zero_transformation(m, z);
        return env;
    }

    std::vector<std::pair<CoefficientSystem, std::size_t>> parts;
    for (const auto& md : models) parts.emplace_back(md.system, 1);
    env.system = std::make_shared<const CoefficientSystem>(direct_sum(parts));

    env.eta.source = m;
    env.eta.target = env.system;
    for (std::size_t k = 0; k < n; ++k) {
        Matrix comp(0, m->dims[k]);
        for (std::size_t s = 0; s < models.size(); ++s) {
            const std::size_t h = env.summands[s].cls;
            const auto& points = cat->hom(h, k);
            // F(x) = pi_h(M(phi_x) m) for each point x of (G/K)^H.
            Matrix values(0, m->dims[k]);
            for (int phi : points) values = Matrix::vstack(values, projections[s] * m->map(phi));
            const Matrix& basis = models[s].basis[k];
            Matrix c = models[s].left_inv[k] * values;
            if (!(basis * c == values))
                fail(ErrorKind::Internal, "injective_envelope: eta lands outside I(V_H) at object " + std::to_string(k));
            comp = Matrix::vstack(comp, c);
        }
        env.eta.comps.push_back(std::move(comp));
    }

    if (auto v = validate(env.eta)) fail(ErrorKind::Internal, describe_failure("injective_envelope: eta", v));
    if (!is_injective(env.eta)) fail(ErrorKind::Internal, "injective_envelope: eta is not objectwise injective");
    return env;
}

InjectiveResolution injective_resolution(const SystemPtr& m) {
    const CategoryPtr cat = m->cat;
    const std::size_t guard = cat->lattice().longest_chain();

    InjectiveResolution res;
    Envelope env = injective_envelope(m);
    res.terms.push_back(env.system);
    res.summands.push_back(env.summands);
    res.aug = env.eta;

    NatTransformation last = res.aug;
    while (true) {
        KernelCokernel kc = kernel_cokernel(last);
        if (kc.coker->is_zero()) break;
        if (res.terms.size() >= guard)
            fail(ErrorKind::Internal, "injective_resolution: more than " + std::to_string(guard) + " terms");
        Envelope next = injective_envelope(kc.coker);
        NatTransformation d = compose(next.eta, kc.proj);
        res.terms.push_back(next.system);
        res.summands.push_back(next.summands);
        res.diffs.push_back(d);
        last = std::move(d);
    }

    // Exactness: rank(prev) + rank(next) = dim at every object and stage.
    const std::size_t n = cat->object_count();
    if (!is_injective(res.aug)) fail(ErrorKind::Internal, "injective_resolution: augmentation not injective");
    for (std::size_t k = 0; k < res.terms.size(); ++k) {
        const NatTransformation& in = k == 0 ? res.aug : res.diffs[k - 1];
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t r_in = rank(in.comps[x]);
            const std::size_t r_out = k < res.diffs.size() ? rank(res.diffs[k].comps[x]) : 0;
            if (r_in + r_out != res.terms[k]->dims[x])
                fail(ErrorKind::Internal, "injective_resolution: not exact at term " + std::to_string(k) + ", object " +
                                              std::to_string(x));
            if (k < res.diffs.size() && !(res.diffs[k].comps[x] * in.comps[x]).is_zero())
                fail(ErrorKind::Internal, "injective_resolution: consecutive maps do not compose to zero");
        }
    }
    return res;
}

std::vector<std::size_t> hom_complex_dims(const SystemPtr& m, const InjectiveResolution& r) {
    std::vector<std::size_t> out;
    for (const auto& t : r.terms) out.push_back(hom_basis(m, t).dim());
    return out;
}

ExtResult ext_with_hom_dims(const SystemPtr& m, const InjectiveResolution& r) {
    std::vector<HomBasis> homs;
    for (const auto& t : r.terms) homs.push_back(hom_basis(m, t));

    std::vector<std::size_t> ranks;  // rank of Hom(m, I^q) -> Hom(m, I^{q+1})
    for (std::size_t q = 0; q + 1 < homs.size(); ++q) {
        const HomBasis& next = homs[q + 1];
        const Matrix inv = left_inverse(next.coords);
        Matrix d(next.dim(), homs[q].dim());
        for (std::size_t b = 0; b < homs[q].dim(); ++b) {
            Matrix c = coordinates(next.coords, inv, flatten(compose(r.diffs[q], homs[q].basis[b]).comps));
            for (std::size_t i = 0; i < next.dim(); ++i) d(i, b) = c(i, 0);
        }
        ranks.push_back(rank(d));
    }
    ExtResult out;
    for (std::size_t q = 0; q < homs.size(); ++q) {
        const std::size_t out_rank = q < ranks.size() ? ranks[q] : 0;
        const std::size_t in_rank = q > 0 ? ranks[q - 1] : 0;
        out.hom.push_back(homs[q].dim());
        out.ext.push_back(homs[q].dim() - out_rank - in_rank);
    }
    return out;
}

std::vector<std::size_t> ext_dims(const SystemPtr& m, const InjectiveResolution& r) {
    return ext_with_hom_dims(m, r).ext;
}

std::vector<std::size_t> ext_dims(const SystemPtr& m, const SystemPtr& n) {
    if (m->cat != n->cat) fail(ErrorKind::Domain, "ext_dims: systems over different categories");
    return ext_dims(m, injective_resolution(n));
}

}  // namespace bredon
