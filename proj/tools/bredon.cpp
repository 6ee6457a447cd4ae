// SPDX-License-Identifier: Apache-2.0
//
// bredon: command-line front end over the C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "bredon/bredon.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct Options {
    std::string group;
    int q = 0;
    int n = 0;
    std::string coeff = "constQ";
    std::string source = "constQ";
    std::string rep = "regular";
    std::string format = "text";
    std::string output;
};

// Unwinds with a status whose message is in bredon_last_error().
struct Failure {
    bredon_status status;
};

void check(bredon_status s) {
    if (s != BREDON_OK) throw Failure{s};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Group = std::unique_ptr<bredon_group, Deleter<bredon_group, bredon_group_free>>;
using System = std::unique_ptr<bredon_coeffsys, Deleter<bredon_coeffsys, bredon_coeffsys_free>>;
using Resolution = std::unique_ptr<bredon_resolution, Deleter<bredon_resolution, bredon_resolution_free>>;
using Decomposition = std::unique_ptr<bredon_decomposition, Deleter<bredon_decomposition, bredon_decomposition_free>>;
using Text = std::unique_ptr<char, Deleter<char, bredon_string_free>>;

std::size_t group_cap() {
    const char* env = std::getenv("BREDON_GROUP_CAP");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
        std::fprintf(stderr, "bredon: BREDON_GROUP_CAP must be a positive integer, got '%s'\n", env);
        std::exit(kExitParse);
    }
    return static_cast<std::size_t>(v);
}

Group open_group(const Options& o) {
    bredon_group* g = nullptr;
    check(bredon_group_create(o.group.c_str(), group_cap(), &g));
    return Group(g);
}

System open_system(const Group& g, const std::string& descriptor) {
    bredon_coeffsys* m = nullptr;
    check(bredon_coeffsys_create(g.get(), descriptor.c_str(), &m));
    return System(m);
}

Decomposition open_decomposition(const Group& g, const Options& o) {
    bredon_decomposition* d = nullptr;
    check(bredon_decompose(g.get(), o.rep.c_str(), o.q, &d));
    return Decomposition(d);
}

bredon_format output_format(const Options& o) {
    bredon_format f;
    check(bredon_format_parse(o.format.c_str(), &f));
    return f;
}

std::string run(const std::string& cmd, const Options& o) {
    const bredon_format f = output_format(o);
    char* out = nullptr;
    if (cmd == "betti") {
        check(bredon_betti_render(o.n, o.q, f, &out));
        return Text(out).get();
    }
    Group g = open_group(o);
    if (cmd == "lattice") {
        check(bredon_group_render_lattice(g.get(), f, &out));
    } else if (cmd == "orbitcat") {
        check(bredon_group_render_orbitcat(g.get(), f, &out));
    } else if (cmd == "decompose") {
        check(bredon_decomposition_render(open_decomposition(g, o).get(), f, &out));
    } else if (cmd == "resolve") {
        bredon_resolution* r = nullptr;
        check(bredon_resolve(open_system(g, o.coeff).get(), &r));
        Resolution res(r);
        check(bredon_resolution_render(res.get(), f, &out));
    } else if (cmd == "hom") {
        check(bredon_hom_render(open_system(g, o.source).get(), open_system(g, o.coeff).get(), o.source.c_str(),
                                o.coeff.c_str(), f, &out));
    } else if (cmd == "ext") {
        check(bredon_ext_render(open_system(g, o.source).get(), open_system(g, o.coeff).get(), o.source.c_str(),
                                o.coeff.c_str(), f, &out));
    } else if (cmd == "e2page") {
        check(bredon_e2page_render(open_decomposition(g, o).get(), open_system(g, o.coeff).get(), f, &out));
    } else if (cmd == "constq") {
        check(bredon_constq_render(open_decomposition(g, o).get(), f, &out));
    }
    return Text(out).get();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational Bredon coefficient systems over finite groups"};
    app.require_subcommand(1);
    Options o;

    auto group_opt = [&](CLI::App* sub) {
        sub->add_option("-g,--group", o.group, "group descriptor: C<n>, D<2n>, S<n>, A<n>, Q8, perm:<deg>:<cycles;...>")
            ->required();
    };
    auto common = [&](CLI::App* sub, const std::string& formats) {
        sub->add_option("-f,--format", o.format, "output format: " + formats);
        sub->add_option("-o,--output", o.output, "write to this file instead of standard output");
    };
    auto rep_opts = [&](CLI::App* sub) {
        sub->add_option("-q", o.q, "number of configuration points")->required();
        sub->add_option("-r,--representation", o.rep, "regular, regular:<s> or cosets:<class>x<mult>,...");
    };
    const std::string coeff_help = "coefficient system: constQ, zero, atom:<class> or json:<path>";

    auto* lattice = app.add_subcommand("lattice", "subgroup classes in canonical order");
    group_opt(lattice);
    common(lattice, "text|json");

    auto* orbitcat = app.add_subcommand("orbitcat", "reduced orbit category");
    group_opt(orbitcat);
    common(orbitcat, "text|json|dot");

    auto* betti = app.add_subcommand("betti", "Betti numbers of Conf(R^n, q)");
    betti->add_option("-n", o.n, "dimension of the ambient space")->required();
    betti->add_option("-q", o.q, "number of points")->required();
    common(betti, "text|json|csv");

    auto* decompose = app.add_subcommand("decompose", "homology coefficient systems of Conf(V, q)");
    group_opt(decompose);
    rep_opts(decompose);
    common(decompose, "text|json|csv");

    auto* resolve = app.add_subcommand("resolve", "injective resolution of a coefficient system");
    group_opt(resolve);
    resolve->add_option("-c,--coefficients", o.coeff, coeff_help);
    common(resolve, "text|json");

    auto* hom = app.add_subcommand("hom", "dim Hom(source, coefficients)");
    group_opt(hom);
    hom->add_option("--source", o.source, "source system, same syntax as -c");
    hom->add_option("-c,--coefficients", o.coeff, coeff_help);
    common(hom, "text|json");

    auto* ext = app.add_subcommand("ext", "dim Ext^q(source, coefficients)");
    group_opt(ext);
    ext->add_option("--source", o.source, "source system, same syntax as -c");
    ext->add_option("-c,--coefficients", o.coeff, coeff_help);
    common(ext, "text|json|csv");

    auto* e2page = app.add_subcommand("e2page", "E2 page Ext^q(H_p(Conf(V, q)), M)");
    group_opt(e2page);
    rep_opts(e2page);
    e2page->add_option("-c,--coefficients", o.coeff, coeff_help);
    common(e2page, "text|json|csv");

    auto* constq = app.add_subcommand("constq", "Bredon cohomology of Conf(V, q) with constant coefficients");
    group_opt(constq);
    rep_opts(constq);
    common(constq, "text|json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "bredon: %s (try --help)\n", e.what());
        return kExitParse;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    std::string text;
    try {
        text = run(cmd, o);
    } catch (const Failure& f) {
        std::fprintf(stderr, "bredon: %s: %s\n", bredon_status_name(f.status), bredon_last_error());
        return f.status == BREDON_ERR_PARSE ? kExitParse : kExitDomain;
    }

    if (o.output.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream out(o.output, std::ios::binary);
    out << text;
    if (!out) {
        std::fprintf(stderr, "bredon: cannot write %s\n", o.output.c_str());
        return kExitDomain;
    }
    return 0;
}
