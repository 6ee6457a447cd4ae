// SPDX-License-Identifier: Apache-2.0
#include "bredon/pipeline.hpp"

#include <charconv>
#include <sstream>

#include "bredon/configuration.hpp"
#include "bredon/error.hpp"

namespace bredon {

std::size_t GRepresentation::dimension(const SubgroupLattice& lat) const {
    std::size_t d = 0;
    for (const auto& [cls, mult] : summands) d += mult * (lat.group().order() / lat.representative(cls).order());
    return d;
}

namespace {

std::size_t parse_size(std::string_view s, const std::string& descriptor) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        fail(ErrorKind::Parse, "bad representation descriptor: " + descriptor);
    return v;
}

}  // namespace

GRepresentation parse_representation(const std::string& d, const SubgroupLattice& lat) {
    GRepresentation v;
    std::string_view s(d);
    if (s == "regular") return GRepresentation::regular();
    if (s.starts_with("regular:")) {
        v = GRepresentation::regular(parse_size(s.substr(8), d));
    } else if (s.starts_with("cosets:")) {
        s.remove_prefix(7);
        while (!s.empty()) {
            auto comma = s.find(',');
            auto item = s.substr(0, comma);
            auto x = item.find('x');
            if (x == std::string_view::npos) fail(ErrorKind::Parse, "expected <class>x<mult> in " + d);
            v.summands.emplace_back(parse_size(item.substr(0, x), d), parse_size(item.substr(x + 1), d));
            if (comma == std::string_view::npos) break;
            s.remove_prefix(comma + 1);
        }
    } else {
        fail(ErrorKind::Parse, "unknown representation descriptor: " + d);
    }
    if (v.summands.empty()) fail(ErrorKind::Parse, "representation has no summands: " + d);
    for (const auto& [cls, mult] : v.summands) {
        if (cls >= lat.class_count()) fail(ErrorKind::Domain, "representation: class index out of range in " + d);
        if (mult == 0) fail(ErrorKind::Domain, "representation: multiplicities must be positive in " + d);
    }
    return v;
}

std::size_t fixed_rep_dim(const SubgroupLattice& lat, const GRepresentation& v, std::size_t cls) {
    const auto& g = lat.group();
    std::size_t d = 0;
    for (const auto& [k, mult] : v.summands) {
        const CosetSpace cs = coset_space(g, lat.representative(k));
        d += mult * orbit_count(cs.set, lat.representative(cls));
    }
    return d;
}

std::vector<HypothesisViolation> check_hypothesis(const SubgroupLattice& lat, const GRepresentation& v) {
    const std::size_t n = lat.class_count();
    std::vector<std::size_t> dims(n);
    for (std::size_t c = 0; c < n; ++c) dims[c] = fixed_rep_dim(lat, v, c);
    std::vector<HypothesisViolation> out;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t h = 0; h < n; ++h)
            if (k != h && lat.subconjugate(k, h) && dims[h] >= dims[k]) out.push_back({k, h, dims[k], dims[h]});
    if (dims[n - 1] < 1) out.push_back({n - 1, n - 1, dims[n - 1], dims[n - 1]});
    return out;
}

DecompositionTable decompose_homology(const SubgroupLattice& lat, const GRepresentation& v, int q) {
    if (q < 1) fail(ErrorKind::Domain, "decompose_homology: q must be at least 1");
    const std::size_t n = lat.class_count();
    const std::size_t top = n - 1;
    DecompositionTable t;
    t.q = q;
    for (std::size_t c = 0; c < n; ++c) t.fixed_dims.push_back(fixed_rep_dim(lat, v, c));

    if (q == 1) {
        // Conf(V,1) = V is contractible, and so is every fixed set.
        t.rows[0] = DecompositionRow{1, std::vector<std::size_t>(n, 0)};
        return t;
    }

    if (auto bad = check_hypothesis(lat, v); !bad.empty()) {
        std::ostringstream os;
        os << "fixed dimensions must drop strictly up the lattice and dim V^G must be positive; ";
        const auto& b = bad.front();
        if (b.lower == b.upper)
            os << "dim V^G = 0";
        else
            os << "class " << b.lower << " has dim " << b.lower_dim << " but class " << b.upper << " above it has dim "
               << b.upper_dim;
        if (bad.size() > 1) os << " (" << bad.size() - 1 << " more)";
        fail(ErrorKind::Hypothesis, os.str());
    }
    for (std::size_t c = 0; c < top; ++c)
        if (t.fixed_dims[c] <= 1) fail(ErrorKind::Domain, "unsupported: a proper subgroup class has a fixed line");

    std::size_t q_factorial = 1;
    for (int i = 2; i <= q; ++i) q_factorial *= static_cast<std::size_t>(i);

    DecompositionRow zero{1, std::vector<std::size_t>(n, 0)};
    if (t.fixed_dims[top] == 1) zero.atoms[top] = q_factorial - 1;
    t.rows[0] = zero;

    for (std::size_t c = 0; c < n; ++c) {
        const auto d = static_cast<int>(t.fixed_dims[c]);
        if (d < 2) continue;
        for (const auto& [deg, rank] : betti(d, q).ranks) {
            if (deg == 0) continue;
            auto [it, inserted] = t.rows.try_emplace(deg, DecompositionRow{0, std::vector<std::size_t>(n, 0)});
            it->second.atoms[c] += rank;
        }
    }
    return t;
}

CoefficientSystem realize_system(const CategoryPtr& cat, const DecompositionTable& table, int degree) {
    auto it = table.rows.find(degree);
    if (it == table.rows.end()) return zero_system(cat);
    const DecompositionRow& row = it->second;
    std::vector<std::pair<CoefficientSystem, std::size_t>> parts;
    if (row.constant) parts.emplace_back(constant_Q(cat), row.constant);
    for (std::size_t c = 0; c < row.atoms.size(); ++c)
        if (row.atoms[c]) parts.emplace_back(atom_1H(cat, c), row.atoms[c]);
    if (parts.empty()) return zero_system(cat);
    return direct_sum(parts);
}

E2Page e2_page(const CategoryPtr& cat, const DecompositionTable& table, const SystemPtr& m) {
    if (m->cat != cat) fail(ErrorKind::Domain, "e2_page: coefficient system over a different category");
    const InjectiveResolution res = injective_resolution(m);
    E2Page page;
    page.resolution_terms = res.terms.size();
    for (const auto& [p, row] : table.rows) {
        auto hp = std::make_shared<const CoefficientSystem>(realize_system(cat, table, p));
        const ExtResult r = ext_with_hom_dims(hp, res);
        for (std::size_t q = 0; q < r.ext.size(); ++q) {
            page.ext[{p, static_cast<int>(q)}] = r.ext[q];
            page.hom[{p, static_cast<int>(q)}] = r.hom[q];
        }
    }
    return page;
}

std::map<int, std::size_t> constant_Q_cohomology(const CategoryPtr& cat, const DecompositionTable& table) {
    auto q = std::make_shared<const CoefficientSystem>(constant_Q(cat));
    std::map<int, std::size_t> out;
    for (const auto& [deg, row] : table.rows) {
        auto hn = std::make_shared<const CoefficientSystem>(realize_system(cat, table, deg));
        out[deg] = hom_basis(hn, q).dim();
    }
    return out;
}

}  // namespace bredon
