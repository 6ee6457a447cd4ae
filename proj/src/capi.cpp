// SPDX-License-Identifier: Apache-2.0
#include "bredon/bredon.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "bredon/error.hpp"
#include "bredon/render.hpp"

struct bredon_group {
    std::shared_ptr<const bredon::SubgroupLattice> lattice;
    bredon::CategoryPtr cat;
};

struct bredon_coeffsys {
    bredon::SystemPtr sys;
};

struct bredon_resolution {
    bredon::InjectiveResolution res;
};

struct bredon_decomposition {
    bredon::CategoryPtr cat;
    bredon::DecompositionTable table;
};

namespace {

thread_local std::string last_error;

bredon_status status_of(bredon::ErrorKind k) {
    using bredon::ErrorKind;
    switch (k) {
        case ErrorKind::Parse: return BREDON_ERR_PARSE;
        case ErrorKind::Domain: return BREDON_ERR_DOMAIN;
        case ErrorKind::Hypothesis: return BREDON_ERR_HYPOTHESIS;
        case ErrorKind::CapExceeded: return BREDON_ERR_CAP;
        case ErrorKind::Io: return BREDON_ERR_IO;
        case ErrorKind::Internal: return BREDON_ERR_INTERNAL;
    }
    return BREDON_ERR_INTERNAL;
}

template <class F>
bredon_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return BREDON_OK;
    } catch (const bredon::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return BREDON_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BREDON_ERR_INTERNAL;
    }
}

bredon_status bad_argument(const char* what) {
    last_error = std::string("null argument: ") + what;
    return BREDON_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

bredon::Format to_format(bredon_format f) {
    switch (f) {
        case BREDON_FORMAT_TEXT: return bredon::Format::Text;
        case BREDON_FORMAT_JSON: return bredon::Format::Json;
        case BREDON_FORMAT_CSV: return bredon::Format::Csv;
        case BREDON_FORMAT_DOT: return bredon::Format::Dot;
    }
    bredon::fail(bredon::ErrorKind::Parse, "unknown format code");
}

bredon_coeffsys* wrap(bredon::CoefficientSystem m) {
    return new bredon_coeffsys{std::make_shared<const bredon::CoefficientSystem>(std::move(m))};
}

void same_category(const bredon::CategoryPtr& a, const bredon::CategoryPtr& b) {
    if (a != b) bredon::fail(bredon::ErrorKind::Domain, "arguments belong to different groups");
}

}  // namespace

extern "C" {

const char* bredon_version(void) { return "0.1.0"; }

const char* bredon_last_error(void) { return last_error.c_str(); }

const char* bredon_status_name(bredon_status s) {
    switch (s) {
        case BREDON_OK: return "ok";
        case BREDON_ERR_PARSE: return "parse error";
        case BREDON_ERR_DOMAIN: return "domain error";
        case BREDON_ERR_HYPOTHESIS: return "hypothesis violated";
        case BREDON_ERR_CAP: return "group order cap exceeded";
        case BREDON_ERR_INTERNAL: return "internal error";
        case BREDON_ERR_ARGUMENT: return "invalid argument";
        case BREDON_ERR_IO: return "i/o error";
    }
    return "unknown status";
}

void bredon_string_free(char* s) { std::free(s); }

bredon_status bredon_format_parse(const char* name, bredon_format* out) {
    if (!name) return bad_argument("name");
    if (!out) return bad_argument("out");
    return guarded([&] {
        switch (bredon::parse_format(name)) {
            case bredon::Format::Text: *out = BREDON_FORMAT_TEXT; break;
            case bredon::Format::Json: *out = BREDON_FORMAT_JSON; break;
            case bredon::Format::Csv: *out = BREDON_FORMAT_CSV; break;
            case bredon::Format::Dot: *out = BREDON_FORMAT_DOT; break;
        }
    });
}

bredon_status bredon_group_create(const char* descriptor, size_t cap, bredon_group** out) {
    if (!descriptor) return bad_argument("descriptor");
    if (!out) return bad_argument("out");
    *out = nullptr;
    return guarded([&] {
        auto g = bredon::make_named_group(descriptor, cap ? cap : bredon::kDefaultGroupCap);
        auto lat = bredon::build_lattice(std::move(g));
        auto cat = bredon::build_orbit_category(lat);
        *out = new bredon_group{lat, cat};
    });
}

void bredon_group_free(bredon_group* g) { delete g; }

size_t bredon_group_order(const bredon_group* g) { return g ? g->lattice->group().order() : 0; }
size_t bredon_group_class_count(const bredon_group* g) { return g ? g->lattice->class_count() : 0; }
size_t bredon_group_subgroup_count(const bredon_group* g) { return g ? g->lattice->subgroups().size() : 0; }
size_t bredon_group_morphism_count(const bredon_group* g) { return g ? g->cat->morphism_count() : 0; }

bredon_status bredon_group_hom_size(const bredon_group* g, size_t i, size_t j, size_t* out) {
    if (!g) return bad_argument("group");
    if (!out) return bad_argument("out");
    return guarded([&] {
        const std::size_t n = g->cat->object_count();
        if (i >= n || j >= n) bredon::fail(bredon::ErrorKind::Domain, "class index out of range");
        *out = g->cat->hom(i, j).size();
    });
}

bredon_status bredon_group_render_lattice(const bredon_group* g, bredon_format f, char** out) {
    if (!g) return bad_argument("group");
    if (!out) return bad_argument("out");
    return guarded([&] { *out = copy_string(bredon::render_lattice(*g->lattice, to_format(f))); });
}

bredon_status bredon_group_render_orbitcat(const bredon_group* g, bredon_format f, char** out) {
    if (!g) return bad_argument("group");
    if (!out) return bad_argument("out");
    return guarded([&] { *out = copy_string(bredon::render_orbit_category(*g->cat, to_format(f))); });
}

bredon_status bredon_coeffsys_create(const bredon_group* g, const char* descriptor, bredon_coeffsys** out) {
    if (!g) return bad_argument("group");
    if (!descriptor) return bad_argument("descriptor");
    if (!out) return bad_argument("out");
    *out = nullptr;
    return guarded([&] { *out = wrap(bredon::coefficient_system_from_descriptor(g->cat, descriptor)); });
}

bredon_status bredon_coeffsys_from_json(const bredon_group* g, const char* json, bredon_coeffsys** out) {
    if (!g) return bad_argument("group");
    if (!json) return bad_argument("json");
    if (!out) return bad_argument("out");
    *out = nullptr;
    return guarded([&] { *out = wrap(bredon::coefficient_system_from_json(g->cat, json)); });
}

bredon_status bredon_coeffsys_to_json(const bredon_coeffsys* m, char** out) {
    if (!m) return bad_argument("coeffsys");
    if (!out) return bad_argument("out");
    return guarded([&] { *out = copy_string(bredon::coefficient_system_to_json(*m->sys)); });
}

bredon_status bredon_coeffsys_dim(const bredon_coeffsys* m, size_t cls, size_t* out) {
    if (!m) return bad_argument("coeffsys");
    if (!out) return bad_argument("out");
    return guarded([&] {
        if (cls >= m->sys->dims.size()) bredon::fail(bredon::ErrorKind::Domain, "class index out of range");
        *out = m->sys->dims[cls];
    });
}

void bredon_coeffsys_free(bredon_coeffsys* m) { delete m; }

bredon_status bredon_hom_dim(const bredon_coeffsys* source, const bredon_coeffsys* target, size_t* out) {
    if (!source) return bad_argument("source");
    if (!target) return bad_argument("target");
    if (!out) return bad_argument("out");
    return guarded([&] {
        same_category(source->sys->cat, target->sys->cat);
        *out = bredon::hom_basis(source->sys, target->sys).dim();
    });
}

bredon_status bredon_hom_render(const bredon_coeffsys* source, const bredon_coeffsys* target, const char* source_name,
                                const char* target_name, bredon_format f, char** out) {
    if (!source) return bad_argument("source");
    if (!target) return bad_argument("target");
    if (!out) return bad_argument("out");
    return guarded([&] {
        same_category(source->sys->cat, target->sys->cat);
        const auto dim = bredon::hom_basis(source->sys, target->sys).dim();
        *out = copy_string(bredon::render_hom(source_name ? source_name : "M", target_name ? target_name : "N", dim,
                                              to_format(f)));
    });
}

bredon_status bredon_resolve(const bredon_coeffsys* m, bredon_resolution** out) {
    if (!m) return bad_argument("coeffsys");
    if (!out) return bad_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new bredon_resolution{bredon::injective_resolution(m->sys)}; });
}

void bredon_resolution_free(bredon_resolution* r) { delete r; }

size_t bredon_resolution_term_count(const bredon_resolution* r) { return r ? r->res.terms.size() : 0; }

bredon_status bredon_resolution_term(const bredon_resolution* r, size_t t, bredon_coeffsys** out) {
    if (!r) return bad_argument("resolution");
    if (!out) return bad_argument("out");
    *out = nullptr;
    return guarded([&] {
        if (t >= r->res.terms.size()) bredon::fail(bredon::ErrorKind::Domain, "resolution term out of range");
        *out = new bredon_coeffsys{r->res.terms[t]};
    });
}

bredon_status bredon_resolution_render(const bredon_resolution* r, bredon_format f, char** out) {
    if (!r) return bad_argument("resolution");
    if (!out) return bad_argument("out");
    return guarded([&] { *out = copy_string(bredon::render_resolution(r->res, to_format(f))); });
}

bredon_status bredon_ext_dims(const bredon_coeffsys* source, const bredon_coeffsys* target, size_t* dims, size_t* count) {
    if (!source) return bad_argument("source");
    if (!target) return bad_argument("target");
    if (!count) return bad_argument("count");
    if (!dims && *count > 0) return bad_argument("dims");
    return guarded([&] {
        same_category(source->sys->cat, target->sys->cat);
        const auto ext = bredon::ext_dims(source->sys, target->sys);
        for (std::size_t q = 0; q < ext.size() && q < *count; ++q) dims[q] = ext[q];
        *count = ext.size();
    });
}

bredon_status bredon_ext_render(const bredon_coeffsys* source, const bredon_coeffsys* target, const char* source_name,
                                const char* target_name, bredon_format f, char** out) {
    if (!source) return bad_argument("source");
    if (!target) return bad_argument("target");
    if (!out) return bad_argument("out");
    return guarded([&] {
        same_category(source->sys->cat, target->sys->cat);
        bredon::ExtReport rep;
        rep.source = source_name ? source_name : "M";
        rep.target = target_name ? target_name : "N";
        rep.dims = bredon::ext_with_hom_dims(source->sys, bredon::injective_resolution(target->sys));
        *out = copy_string(bredon::render_ext(rep, to_format(f)));
    });
}

bredon_status bredon_betti_render(int n, int q, bredon_format f, char** out) {
    if (!out) return bad_argument("out");
    return guarded([&] { *out = copy_string(bredon::render_betti(bredon::betti(n, q), to_format(f))); });
}

bredon_status bredon_decompose(const bredon_group* g, const char* representation, int q, bredon_decomposition** out) {
    if (!g) return bad_argument("group");
    if (!representation) return bad_argument("representation");
    if (!out) return bad_argument("out");
    *out = nullptr;
    return guarded([&] {
        const auto v = bredon::parse_representation(representation, *g->lattice);
        *out = new bredon_decomposition{g->cat, bredon::decompose_homology(*g->lattice, v, q)};
    });
}

void bredon_decomposition_free(bredon_decomposition* d) { delete d; }

bredon_status bredon_decomposition_render(const bredon_decomposition* d, bredon_format f, char** out) {
    if (!d) return bad_argument("decomposition");
    if (!out) return bad_argument("out");
    return guarded([&] { *out = copy_string(bredon::render_decomposition(d->table, to_format(f))); });
}

bredon_status bredon_decomposition_system(const bredon_decomposition* d, int degree, bredon_coeffsys** out) {
    if (!d) return bad_argument("decomposition");
    if (!out) return bad_argument("out");
    *out = nullptr;
    return guarded([&] { *out = wrap(bredon::realize_system(d->cat, d->table, degree)); });
}

bredon_status bredon_e2page_render(const bredon_decomposition* d, const bredon_coeffsys* m, bredon_format f, char** out) {
    if (!d) return bad_argument("decomposition");
    if (!m) return bad_argument("coeffsys");
    if (!out) return bad_argument("out");
    return guarded([&] {
        same_category(d->cat, m->sys->cat);
        const auto page = bredon::e2_page(d->cat, d->table, m->sys);
        *out = copy_string(bredon::render_e2_page(page, d->table, to_format(f)));
    });
}

bredon_status bredon_constq_render(const bredon_decomposition* d, bredon_format f, char** out) {
    if (!d) return bad_argument("decomposition");
    if (!out) return bad_argument("out");
    return guarded([&] {
        const auto dims = bredon::constant_Q_cohomology(d->cat, d->table);
        *out = copy_string(bredon::render_constant_Q(dims, d->table, to_format(f)));
    });
}

}  // extern "C"
