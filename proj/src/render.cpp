// SPDX-License-Identifier: Apache-2.0
#include "bredon/render.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "bredon/error.hpp"

namespace bredon {

using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "dot") return Format::Dot;
    fail(ErrorKind::Parse, "unknown output format: " + name);
}

const char* format_name(Format f) {
    switch (f) {
        case Format::Text: return "text";
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Dot: return "dot";
    }
    return "?";
}

namespace {

[[noreturn]] void unsupported(const char* what, Format f) {
    fail(ErrorKind::Parse, std::string("format ") + format_name(f) + " is not available for " + what);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

// Length of the longest chain of strict subconjugacies ending at each class.
std::vector<std::size_t> levels(const SubgroupLattice& lat) {
    const std::size_t n = lat.class_count();
    std::vector<std::size_t> lvl(n, 0);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (lat.subconjugate(a, b)) lvl[b] = std::max(lvl[b], lvl[a] + 1);
    return lvl;
}

// Classes immediately below `b` in the subconjugacy order.
std::vector<std::size_t> covers(const SubgroupLattice& lat, std::size_t b) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < b; ++a) {
        if (!lat.subconjugate(a, b)) continue;
        bool direct = true;
        for (std::size_t c = a + 1; c < b && direct; ++c)
            if (lat.subconjugate(a, c) && lat.subconjugate(c, b)) direct = false;
        if (direct) out.push_back(a);
    }
    return out;
}

std::vector<std::string> generator_cycles(const SubgroupLattice& lat, std::size_t cls) {
    std::vector<std::string> out;
    for (int g : lat.generators(cls)) out.push_back(lat.group().element(g).cycles());
    return out;
}

}  // namespace

std::string render_lattice(const SubgroupLattice& lat, Format f) {
    const auto& g = lat.group();
    const auto lvl = levels(lat);
    if (f == Format::Json) {
        ordered_json j;
        j["schema"] = schema::kLattice;
        j["group"] = {{"name", g.name()}, {"order", g.order()}, {"degree", g.degree()}};
        j["subgroup_count"] = lat.subgroups().size();
        j["longest_chain"] = lat.longest_chain();
        ordered_json classes = ordered_json::array();
        for (std::size_t c = 0; c < lat.class_count(); ++c) {
            classes.push_back({{"index", c},
                               {"order", lat.representative(c).order()},
                               {"conjugates", lat.classes()[c].members.size()},
                               {"weyl_order", lat.weyl(c).order()},
                               {"level", lvl[c]},
                               {"generators", generator_cycles(lat, c)},
                               {"covers", covers(lat, c)}});
        }
        j["classes"] = classes;
        return dump(j);
    }
    if (f != Format::Text) unsupported("lattice", f);
    std::ostringstream os;
    os << "group " << g.name() << " of order " << g.order() << " on " << g.degree() << " points\n";
    os << lat.subgroups().size() << " subgroups in " << lat.class_count() << " conjugacy classes, longest chain "
       << lat.longest_chain() << "\n\n";
    os << "class  order  conj  |WH|  level  covers      generators\n";
    for (std::size_t c = 0; c < lat.class_count(); ++c) {
        std::string cov = "{" + join(covers(lat, c), ",") + "}";
        os << std::left << std::setw(7) << c << std::setw(7) << lat.representative(c).order() << std::setw(6)
           << lat.classes()[c].members.size() << std::setw(6) << lat.weyl(c).order() << std::setw(7) << lvl[c]
           << std::setw(12) << cov << "<" << join(generator_cycles(lat, c)) << ">\n";
    }
    return os.str();
}

std::string render_orbit_category(const OrbitCategory& cat, Format f) {
    const auto& lat = cat.lattice();
    const std::size_t n = cat.object_count();
    if (f == Format::Dot) return export_quiver_dot(cat);
    if (f == Format::Json) {
        ordered_json j;
        j["schema"] = schema::kOrbitCategory;
        j["group"] = cat.group().name();
        ordered_json objs = ordered_json::array();
        for (std::size_t c = 0; c < n; ++c)
            objs.push_back({{"index", c}, {"subgroup_order", lat.representative(c).order()}, {"weyl_order", lat.weyl(c).order()}});
        j["objects"] = objs;
        ordered_json hom = ordered_json::array();
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<std::size_t> row;
            for (std::size_t b = 0; b < n; ++b) row.push_back(cat.hom(a, b).size());
            hom.push_back(row);
        }
        j["hom_sizes"] = hom;
        ordered_json mors = ordered_json::array();
        for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
            const auto& mor = cat.morphism(static_cast<int>(m));
            mors.push_back({{"index", m},
                            {"source", mor.source},
                            {"target", mor.target},
                            {"representative", cat.group().element(mor.rep).cycles()}});
        }
        j["morphisms"] = mors;
        ordered_json comp = ordered_json::array();
        for (std::size_t a = 0; a < cat.morphism_count(); ++a)
            for (std::size_t b = 0; b < cat.morphism_count(); ++b)
                if (cat.composable(static_cast<int>(a), static_cast<int>(b)))
                    comp.push_back({a, b, cat.compose(static_cast<int>(a), static_cast<int>(b))});
        j["compose"] = comp;
        return dump(j);
    }
    if (f != Format::Text) unsupported("orbitcat", f);
    std::ostringstream os;
    os << "orbit category of " << cat.group().name() << ": " << n << " objects, " << cat.morphism_count()
       << " morphisms\n\n";
    for (std::size_t c = 0; c < n; ++c)
        os << "  " << c << ": G/H, H " << lat.describe(c) << ", |WH| = " << lat.weyl(c).order() << "\n";
    os << "\n|Hom(i,j)|, row i, column j\n    ";
    for (std::size_t b = 0; b < n; ++b) os << std::setw(4) << b;
    os << "\n";
    for (std::size_t a = 0; a < n; ++a) {
        os << std::setw(4) << a;
        for (std::size_t b = 0; b < n; ++b) os << std::setw(4) << cat.hom(a, b).size();
        os << "\n";
    }
    return os.str();
}

std::string coefficient_system_to_json(const CoefficientSystem& m) {
    ordered_json j;
    j["schema"] = schema::kCoefficientSystem;
    j["group"] = m.cat->group().name();
    j["objects"] = m.cat->object_count();
    j["morphisms"] = m.cat->morphism_count();
    j["dims"] = m.dims;
    ordered_json maps = ordered_json::array();
    for (std::size_t k = 0; k < m.mats.size(); ++k) {
        const Matrix& a = m.mats[k];
        if (a.rows() == 0 || a.cols() == 0) continue;
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < a.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_string(a(r, c)));
            rows.push_back(row);
        }
        maps.push_back({{"morphism", k}, {"matrix", rows}});
    }
    j["maps"] = maps;
    return dump(j);
}

namespace {

Rational parse_rational(const ordered_json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) fail(ErrorKind::Parse, "matrix entries must be strings like \"-3/4\" or integers");
    const auto s = v.get<std::string>();
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos)
        fail(ErrorKind::Parse, "bad rational entry: " + s);
    Rational q;
    if (q.set_str(s.front() == '+' ? s.substr(1) : s, 10) != 0) fail(ErrorKind::Parse, "bad rational entry: " + s);
    if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in " + s);
    q.canonicalize();
    return q;
}

ordered_json parse_document(const std::string& text, const char* expected_schema) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("schema") || j["schema"] != expected_schema)
        fail(ErrorKind::Parse, std::string("expected a document with schema ") + expected_schema);
    return j;
}

template <class T>
T field(const ordered_json& j, const char* key) {
    if (!j.contains(key)) fail(ErrorKind::Parse, std::string("missing field: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        fail(ErrorKind::Parse, std::string("field has the wrong type: ") + key);
    }
}

}  // namespace

CoefficientSystem coefficient_system_from_json(const CategoryPtr& cat, const std::string& text) {
    const auto j = parse_document(text, schema::kCoefficientSystem);
    CoefficientSystem m;
    m.cat = cat;
    m.dims = field<std::vector<std::size_t>>(j, "dims");
    if (m.dims.size() != cat->object_count())
        fail(ErrorKind::Domain, "coefficient system has " + std::to_string(m.dims.size()) + " objects, the category has " +
                                    std::to_string(cat->object_count()));
    if (j.contains("morphisms") && field<std::size_t>(j, "morphisms") != cat->morphism_count())
        fail(ErrorKind::Domain, "coefficient system was written for a category with a different morphism count");
    for (std::size_t k = 0; k < cat->morphism_count(); ++k) {
        const auto& mor = cat->morphism(static_cast<int>(k));
        m.mats.emplace_back(m.dims[static_cast<std::size_t>(mor.source)], m.dims[static_cast<std::size_t>(mor.target)]);
    }
    if (j.contains("maps")) {
        if (!j["maps"].is_array()) fail(ErrorKind::Parse, "maps must be an array");
        for (const auto& e : j["maps"]) {
            const auto k = field<std::size_t>(e, "morphism");
            if (k >= cat->morphism_count()) fail(ErrorKind::Domain, "morphism index out of range: " + std::to_string(k));
            Matrix& a = m.mats[k];
            const auto& rows = e.contains("matrix") ? e["matrix"] : ordered_json();
            if (!rows.is_array() || rows.size() != a.rows())
                fail(ErrorKind::Domain, "matrix for morphism " + std::to_string(k) + " has the wrong number of rows");
            for (std::size_t r = 0; r < a.rows(); ++r) {
                if (!rows[r].is_array() || rows[r].size() != a.cols())
                    fail(ErrorKind::Domain, "matrix for morphism " + std::to_string(k) + " has the wrong number of columns");
                for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = parse_rational(rows[r][c]);
            }
        }
    }
    if (auto v = validate(m)) fail(ErrorKind::Domain, "not a coefficient system: " + v->what);
    return m;
}

CoefficientSystem coefficient_system_from_descriptor(const CategoryPtr& cat, const std::string& d) {
    if (d == "constQ") return constant_Q(cat);
    if (d == "zero") return zero_system(cat);
    if (d.rfind("atom:", 0) == 0) {
        const std::string idx = d.substr(5);
        std::size_t cls = 0;
        auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), cls);
        if (idx.empty() || ec != std::errc{} || ptr != idx.data() + idx.size())
            fail(ErrorKind::Parse, "bad coefficient descriptor: " + d);
        if (cls >= cat->object_count())
            fail(ErrorKind::Domain, "class index " + idx + " out of range; the group has " +
                                        std::to_string(cat->object_count()) + " classes");
        return atom_1H(cat, cls);
    }
    if (d.rfind("json:", 0) == 0) {
        const std::string path = d.substr(5);
        std::ifstream in(path);
        if (!in) fail(ErrorKind::Io, "cannot read " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return coefficient_system_from_json(cat, buf.str());
    }
    fail(ErrorKind::Parse, "unknown coefficient descriptor: " + d + " (expected constQ, zero, atom:<class> or json:<path>)");
}

std::string render_coefficient_system(const CoefficientSystem& m, Format f) {
    if (f == Format::Json) return coefficient_system_to_json(m);
    if (f != Format::Text) unsupported("coefficient systems", f);
    std::ostringstream os;
    os << "dims [" << join(m.dims) << "], total " << m.total_dim() << "\n";
    return os.str();
}

std::string render_resolution(const InjectiveResolution& r, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        j["schema"] = schema::kResolution;
        j["length"] = r.length();
        ordered_json terms = ordered_json::array();
        for (std::size_t t = 0; t < r.terms.size(); ++t) {
            ordered_json sums = ordered_json::array();
            for (const auto& s : r.summands[t]) sums.push_back({{"class", s.cls}, {"module_dim", s.module.dim}});
            terms.push_back({{"degree", t}, {"dims", r.terms[t]->dims}, {"summands", sums}});
        }
        j["terms"] = terms;
        return dump(j);
    }
    if (f != Format::Text) unsupported("resolve", f);
    std::ostringstream os;
    os << "injective resolution with " << r.terms.size() << " term" << (r.terms.size() == 1 ? "" : "s") << "\n";
    for (std::size_t t = 0; t < r.terms.size(); ++t) {
        os << "I^" << t << ": dims [" << join(r.terms[t]->dims) << "] =";
        bool first = true;
        for (const auto& s : r.summands[t]) {
            os << (first ? " " : " + ") << "I(V_" << s.cls << ", dim " << s.module.dim << ")";
            first = false;
        }
        if (first) os << " 0";
        os << "\n";
    }
    return os.str();
}

std::string render_hom(const std::string& source, const std::string& target, std::size_t dim, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        j["schema"] = schema::kHom;
        j["source"] = source;
        j["target"] = target;
        j["dim"] = dim;
        return dump(j);
    }
    if (f != Format::Text) unsupported("hom", f);
    return "dim Hom(" + source + ", " + target + ") = " + std::to_string(dim) + "\n";
}

std::string render_ext(const ExtReport& e, Format f) {
    const std::size_t n = e.dims.ext.size();
    if (f == Format::Json) {
        ordered_json j;
        j["schema"] = schema::kExt;
        j["source"] = e.source;
        j["target"] = e.target;
        j["hom_complex"] = e.dims.hom;
        j["ext"] = e.dims.ext;
        return dump(j);
    }
    if (f == Format::Csv) {
        std::ostringstream os;
        os << "q,hom_complex,ext\n";
        for (std::size_t q = 0; q < n; ++q) os << q << ',' << e.dims.hom[q] << ',' << e.dims.ext[q] << "\n";
        return os.str();
    }
    if (f != Format::Text) unsupported("ext", f);
    std::ostringstream os;
    os << "Ext^q(" << e.source << ", " << e.target << ")\n";
    os << "q  dim Hom(" << e.source << ", I^q)  dim Ext^q\n";
    for (std::size_t q = 0; q < n; ++q) os << std::left << std::setw(3) << q << std::setw(18) << e.dims.hom[q] << e.dims.ext[q] << "\n";
    return os.str();
}

std::string render_betti(const BettiTable& b, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        j["schema"] = schema::kBetti;
        j["n"] = b.n;
        j["q"] = b.q;
        ordered_json ranks = ordered_json::array();
        for (const auto& [deg, r] : b.ranks) ranks.push_back({{"degree", deg}, {"rank", r}});
        j["ranks"] = ranks;
        j["total"] = b.total();
        return dump(j);
    }
    std::ostringstream os;
    if (f == Format::Csv) {
        os << "degree,rank\n";
        for (const auto& [deg, r] : b.ranks) os << deg << ',' << r << "\n";
        return os.str();
    }
    if (f != Format::Text) unsupported("betti", f);
    os << "H^*(Conf(R^" << b.n << ", " << b.q << "); Q)\n";
    for (const auto& [deg, r] : b.ranks) os << "  degree " << deg << ": " << r << "\n";
    os << "  total: " << b.total() << "\n";
    return os.str();
}

std::string decomposition_row_string(const DecompositionRow& row) {
    std::vector<std::string> parts;
    if (row.constant) parts.push_back(row.constant == 1 ? "Q" : std::to_string(row.constant) + "*Q");
    for (std::size_t c = 0; c < row.atoms.size(); ++c) {
        if (!row.atoms[c]) continue;
        parts.push_back((row.atoms[c] == 1 ? std::string() : std::to_string(row.atoms[c]) + "*") + "1_" + std::to_string(c));
    }
    if (parts.empty()) return "0";
    return join(parts, " + ");
}

std::string render_decomposition(const DecompositionTable& t, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        j["schema"] = schema::kDecomposition;
        j["q"] = t.q;
        j["fixed_dims"] = t.fixed_dims;
        ordered_json rows = ordered_json::array();
        for (const auto& [deg, row] : t.rows) rows.push_back({{"degree", deg}, {"constant", row.constant}, {"atoms", row.atoms}});
        j["rows"] = rows;
        return dump(j);
    }
    std::ostringstream os;
    if (f == Format::Csv) {
        os << "degree,constant";
        for (std::size_t c = 0; c < t.fixed_dims.size(); ++c) os << ",1_" << c;
        os << "\n";
        for (const auto& [deg, row] : t.rows) {
            os << deg << ',' << row.constant;
            for (auto a : row.atoms) os << ',' << a;
            os << "\n";
        }
        return os.str();
    }
    if (f != Format::Text) unsupported("decompose", f);
    os << "q = " << t.q << ", dim V^H per class: [" << join(t.fixed_dims) << "]\n";
    for (const auto& [deg, row] : t.rows) os << "H_" << deg << " = " << decomposition_row_string(row) << "\n";
    return os.str();
}

DecompositionTable decomposition_from_json(const std::string& text) {
    const auto j = parse_document(text, schema::kDecomposition);
    DecompositionTable t;
    t.q = field<int>(j, "q");
    t.fixed_dims = field<std::vector<std::size_t>>(j, "fixed_dims");
    if (!j.contains("rows") || !j["rows"].is_array()) fail(ErrorKind::Parse, "rows must be an array");
    for (const auto& r : j["rows"]) {
        DecompositionRow row;
        row.constant = field<std::size_t>(r, "constant");
        row.atoms = field<std::vector<std::size_t>>(r, "atoms");
        if (row.atoms.size() != t.fixed_dims.size()) fail(ErrorKind::Parse, "row has the wrong number of classes");
        if (!t.rows.emplace(field<int>(r, "degree"), row).second) fail(ErrorKind::Parse, "repeated degree in rows");
    }
    return t;
}

namespace {

// Rows q descending, columns p ascending, zero cells left blank.
void grid(std::ostringstream& os, const char* corner, const std::map<std::pair<int, int>, std::size_t>& cells,
          const std::vector<int>& ps, std::size_t qs, bool csv) {
    auto cell = [&](int p, int q) -> std::string {
        auto it = cells.find({p, q});
        return it == cells.end() || it->second == 0 ? std::string() : std::to_string(it->second);
    };
    if (csv) {
        os << corner;
        for (int p : ps) os << ',' << p;
        os << "\n";
        for (std::size_t k = qs; k-- > 0;) {
            os << k;
            for (int p : ps) os << ',' << cell(p, static_cast<int>(k));
            os << "\n";
        }
        return;
    }
    os << std::right << std::setw(6) << corner;
    for (int p : ps) os << std::setw(5) << p;
    os << "\n";
    for (std::size_t k = qs; k-- > 0;) {
        os << std::setw(6) << k;
        for (int p : ps) os << std::setw(5) << cell(p, static_cast<int>(k));
        os << "\n";
    }
}

}  // namespace

std::string render_e2_page(const E2Page& page, const DecompositionTable& t, Format f) {
    std::vector<int> ps;
    for (const auto& [p, row] : t.rows) ps.push_back(p);
    if (f == Format::Json) {
        ordered_json j;
        j["schema"] = schema::kE2Page;
        j["q"] = t.q;
        j["resolution_terms"] = page.resolution_terms;
        ordered_json cells = ordered_json::array();
        for (const auto& [pq, h] : page.hom) {
            auto it = page.ext.find(pq);
            cells.push_back({{"p", pq.first}, {"q", pq.second}, {"hom_complex", h}, {"ext", it == page.ext.end() ? 0 : it->second}});
        }
        j["cells"] = cells;
        return dump(j);
    }
    if (f != Format::Text && f != Format::Csv) unsupported("e2page", f);
    const bool csv = f == Format::Csv;
    std::ostringstream os;
    if (!csv) os << "dim Hom(H_p, I^q)\n";
    grid(os, csv ? "hom q\\p" : "q\\p", page.hom, ps, page.resolution_terms, csv);
    os << "\n";
    if (!csv) os << "dim Ext^q(H_p, M)\n";
    grid(os, csv ? "ext q\\p" : "q\\p", page.ext, ps, page.resolution_terms, csv);
    return os.str();
}

std::string render_constant_Q(const std::map<int, std::size_t>& dims, const DecompositionTable& t, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        j["schema"] = schema::kConstQ;
        j["q"] = t.q;
        ordered_json rows = ordered_json::array();
        for (const auto& [deg, d] : dims) rows.push_back({{"degree", deg}, {"dim", d}});
        j["degrees"] = rows;
        return dump(j);
    }
    std::ostringstream os;
    if (f == Format::Csv) {
        os << "degree,dim\n";
        for (const auto& [deg, d] : dims) os << deg << ',' << d << "\n";
        return os.str();
    }
    if (f != Format::Text) unsupported("constq", f);
    os << "H^n_G(Conf(V, " << t.q << "); Q)\n";
    for (const auto& [deg, d] : dims) os << "  degree " << deg << ": " << d << "\n";
    return os.str();
}

}  // namespace bredon
