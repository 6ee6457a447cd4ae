// SPDX-License-Identifier: Apache-2.0
#include "bredon/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "bredon/error.hpp"

namespace bredon {

// ---------------------------------------------------------------- Permutation

Permutation Permutation::identity(std::size_t degree) {
    Permutation p;
    p.images.resize(degree);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
    Permutation p = identity(degree);
    std::vector<bool> seen(degree, false);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos == text.size() || text.substr(pos) == "()") return p;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(') fail(ErrorKind::Parse, "expected '(' in cycle notation: " + std::string(text));
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            int v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
            if (ec != std::errc{}) fail(ErrorKind::Parse, "bad point in cycle notation: " + std::string(text));
            pos = static_cast<std::size_t>(ptr - text.data());
            if (v < 0 || static_cast<std::size_t>(v) >= degree)
                fail(ErrorKind::Parse, "point " + std::to_string(v) + " out of range for degree " + std::to_string(degree));
            if (seen[static_cast<std::size_t>(v)])
                fail(ErrorKind::Parse, "point " + std::to_string(v) + " repeated in cycle notation");
            seen[static_cast<std::size_t>(v)] = true;
            cycle.push_back(v);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            p.images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] != static_cast<int>(i)) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) p.images[static_cast<std::size_t>(images[i])] = static_cast<int>(i);
    return p;
}

std::string Permutation::cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i] || images[i] == static_cast<int>(i)) continue;
        os << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            os << j;
            first = false;
            j = static_cast<std::size_t>(images[j]);
        }
        os << ')';
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    ensure(a.degree() == b.degree(), "composing permutations of different degree");
    Permutation p;
    p.images.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) p.images[i] = a.images[static_cast<std::size_t>(b.images[i])];
    return p;
}

// ---------------------------------------------------------------- FiniteGroup

namespace {

bool is_bijection(const Permutation& p) {
    std::vector<bool> hit(p.degree(), false);
    for (int v : p.images) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.degree() || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t cap, std::string name)
    : degree_(degree), name_(std::move(name)), generators_(std::move(generators)) {
    if (degree == 0) fail(ErrorKind::Domain, "permutation degree must be positive");
    for (const auto& g : generators_)
        if (g.degree() != degree || !is_bijection(g)) fail(ErrorKind::Parse, "generator is not a permutation of degree " + std::to_string(degree));
    // G-sets are specified by generator images, so keep at least one.
    if (generators_.empty()) generators_.push_back(Permutation::identity(degree));

    std::set<Permutation> seen{Permutation::identity(degree)};
    std::deque<Permutation> queue{Permutation::identity(degree)};
    while (!queue.empty()) {
        Permutation x = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : generators_) {
            Permutation y = s * x;
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    fail(ErrorKind::CapExceeded, "group order exceeds cap of " + std::to_string(cap));
                queue.push_back(std::move(y));
            }
        }
    }
    elements_.assign(seen.begin(), seen.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<int>(i));

    const std::size_t n = elements_.size();
    mult_.resize(n * n);
    inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            int ab = index_of(elements_[a] * elements_[b]);
            mult_[a * n + b] = ab;
            if (ab == 0) inverse_[a] = static_cast<int>(b);
        }
    }
}

int FiniteGroup::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) fail(ErrorKind::Domain, "permutation " + p.cycles() + " is not a group element");
    return it->second;
}

std::vector<int> FiniteGroup::generator_indices() const {
    std::vector<int> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) out.push_back(index_of(g));
    return out;
}

namespace {

std::size_t parse_count(std::string_view s, std::string_view descriptor) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        fail(ErrorKind::Parse, "unknown group descriptor: " + std::string(descriptor));
    return v;
}

Permutation cycle_perm(std::size_t degree, const std::vector<int>& cycle) {
    Permutation p = Permutation::identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        p.images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    return p;
}

Permutation full_cycle(std::size_t n) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    return cycle_perm(n, c);
}

}  // namespace

FiniteGroup make_named_group(std::string_view d, std::size_t cap) {
    const std::string name(d);
    if (d.empty()) fail(ErrorKind::Parse, "empty group descriptor");
    if (d.starts_with("perm:")) {
        auto rest = d.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) fail(ErrorKind::Parse, "expected perm:<degree>:<cycles;...>");
        std::size_t degree = parse_count(rest.substr(0, colon), d);
        if (degree == 0) fail(ErrorKind::Parse, "perm degree must be positive");
        std::vector<Permutation> gens;
        auto list = rest.substr(colon + 1);
        std::size_t start = 0;
        while (start <= list.size()) {
            auto semi = list.find(';', start);
            auto piece = list.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
            if (!piece.empty()) gens.push_back(Permutation::from_cycles(degree, piece));
            if (semi == std::string_view::npos) break;
            start = semi + 1;
        }
        return FiniteGroup(degree, std::move(gens), cap, name);
    }
    if (d == "Q8") {
        return FiniteGroup(8,
                           {Permutation::from_cycles(8, "(0 1 3 6)(2 5 7 4)"),
                            Permutation::from_cycles(8, "(0 2 3 7)(1 4 6 5)")},
                           cap, name);
    }
    const char kind = d.front();
    const std::size_t n = parse_count(d.substr(1), d);
    switch (kind) {
        case 'C':
            if (n == 0) fail(ErrorKind::Parse, "C0 is not a group");
            return FiniteGroup(n, {full_cycle(n)}, cap, name);
        case 'D': {
            if (n < 2 || n % 2 != 0) fail(ErrorKind::Parse, "dihedral descriptor needs an even order >= 2: " + name);
            const std::size_t m = n / 2;
            if (m == 1) return FiniteGroup(2, {full_cycle(2)}, cap, name);
            if (m == 2)
                return FiniteGroup(4, {Permutation::from_cycles(4, "(0 1)(2 3)"), Permutation::from_cycles(4, "(0 2)(1 3)")},
                                   cap, name);
            Permutation reflect = Permutation::identity(m);
            for (std::size_t i = 0; i < m; ++i) reflect.images[i] = static_cast<int>((m - i) % m);
            return FiniteGroup(m, {full_cycle(m), reflect}, cap, name);
        }
        case 'S': {
            if (n == 0) fail(ErrorKind::Parse, "S0 is not supported");
            if (n == 1) return FiniteGroup(1, {}, cap, name);
            return FiniteGroup(n, {cycle_perm(n, {0, 1}), full_cycle(n)}, cap, name);
        }
        case 'A': {
            if (n == 0) fail(ErrorKind::Parse, "A0 is not supported");
            std::vector<Permutation> gens;
            for (std::size_t k = 2; k < n; ++k) gens.push_back(cycle_perm(n, {0, 1, static_cast<int>(k)}));
            return FiniteGroup(n, std::move(gens), cap, name);
        }
        default:
            fail(ErrorKind::Parse, "unknown group descriptor: " + name);
    }
}

// ---------------------------------------------------------------- Subgroups

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(), elements.end());
}

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<int> members{0};
    in[0] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (int s : gens) {
            int y = g.mul(s, members[i]);
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = true;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return Subgroup{std::move(members)};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
    if (elements.empty()) return false;
    std::vector<bool> in(g.order(), false);
    for (int e : elements) {
        if (e < 0 || static_cast<std::size_t>(e) >= g.order()) return false;
        in[static_cast<std::size_t>(e)] = true;
    }
    if (!in[0]) return false;
    for (int a : elements) {
        if (!in[static_cast<std::size_t>(g.inv(a))]) return false;
        for (int b : elements)
            if (!in[static_cast<std::size_t>(g.mul(a, b))]) return false;
    }
    return true;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x) {
    Subgroup out;
    out.elements.reserve(h.order());
    for (int e : h.elements) out.elements.push_back(g.conj(x, e));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

namespace {

int coset_rep(const FiniteGroup& g, const Subgroup& h, int x) {
    int best = g.mul(x, h.elements.front());
    for (int e : h.elements) best = std::min(best, g.mul(x, e));
    return best;
}

}  // namespace

SubgroupLattice::SubgroupLattice(std::shared_ptr<const FiniteGroup> grp) : group_(std::move(grp)) {
    const FiniteGroup& g = *group_;
    const std::size_t n = g.order();

    // Layered closure: every subgroup is a join of cyclic subgroups.
    std::map<std::vector<int>, int> known;
    std::vector<Subgroup> found;
    std::vector<int> cyclic_gen;  // generator of each cyclic subgroup
    auto add = [&](Subgroup s) -> bool {
        auto [it, inserted] = known.emplace(s.elements, static_cast<int>(found.size()));
        if (inserted) found.push_back(std::move(s));
        return inserted;
    };
    for (std::size_t x = 0; x < n; ++x) {
        if (add(generate_subgroup(g, {static_cast<int>(x)}))) cyclic_gen.push_back(static_cast<int>(x));
    }
    std::vector<int> frontier(found.size());
    std::iota(frontier.begin(), frontier.end(), 0);
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int hi : frontier) {
            for (int c : cyclic_gen) {
                const Subgroup& h = found[static_cast<std::size_t>(hi)];
                if (h.contains(c)) continue;
                std::vector<int> gens = h.elements;
                gens.push_back(c);
                if (add(generate_subgroup(g, gens))) next.push_back(static_cast<int>(found.size()) - 1);
            }
        }
        frontier = std::move(next);
    }

    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    subgroups_ = std::move(found);
    std::map<std::vector<int>, int> where;
    for (std::size_t i = 0; i < subgroups_.size(); ++i) where.emplace(subgroups_[i].elements, static_cast<int>(i));

    // Conjugacy classes. Iterating in (order, lex) order means the first
    // unassigned subgroup met is the lex-minimal member of its class.
    class_of_.assign(subgroups_.size(), -1);
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
        if (class_of_[i] >= 0) continue;
        std::set<int> members;
        for (std::size_t x = 0; x < n; ++x)
            members.insert(where.at(conjugate(g, subgroups_[i], static_cast<int>(x)).elements));
        const int cls = static_cast<int>(classes_.size());
        SubgroupClass sc;
        sc.members.push_back(static_cast<int>(i));
        for (int m : members) {
            class_of_[static_cast<std::size_t>(m)] = cls;
            if (m != static_cast<int>(i)) sc.members.push_back(m);
        }
        classes_.push_back(std::move(sc));
    }

    const std::size_t k = classes_.size();
    below_.assign(k * k, false);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const Subgroup& rb = representative(b);
            for (int m : classes_[a].members)
                if (subgroups_[static_cast<std::size_t>(m)].is_subset_of(rb)) {
                    below_[a * k + b] = true;
                    break;
                }
        }

    normalizers_.reserve(subgroups_.size());
    for (const auto& h : subgroups_) {
        std::vector<int> norm;
        for (std::size_t x = 0; x < n; ++x) {
            bool ok = std::all_of(h.elements.begin(), h.elements.end(),
                                  [&](int e) { return h.contains(g.conj(static_cast<int>(x), e)); });
            if (ok) norm.push_back(static_cast<int>(x));
        }
        normalizers_.push_back(Subgroup{std::move(norm)});
    }

    weyl_.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        const auto hi = static_cast<std::size_t>(classes_[c].representative());
        const Subgroup& h = subgroups_[hi];
        WeylGroup w;
        std::set<int> reps;
        for (int x : normalizers_[hi].elements) reps.insert(coset_rep(g, h, x));
        w.coset_reps.assign(reps.begin(), reps.end());
        const std::size_t m = w.coset_reps.size();
        ensure(m * h.order() == normalizers_[hi].order(), "Weyl group order mismatch");
        w.mult.resize(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                int r = coset_rep(g, h, g.mul(w.coset_reps[i], w.coset_reps[j]));
                auto it = std::lower_bound(w.coset_reps.begin(), w.coset_reps.end(), r);
                w.mult[i * m + j] = static_cast<int>(it - w.coset_reps.begin());
            }
        weyl_.push_back(std::move(w));
    }
}

std::optional<int> SubgroupLattice::find_class(const Subgroup& h) const {
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
        if (subgroups_[i] == h) return class_of_[i];
    return std::nullopt;
}

int SubgroupLattice::find_subgroup(const Subgroup& h) const {
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
        if (subgroups_[i] == h) return static_cast<int>(i);
    fail(ErrorKind::Domain, "not a subgroup of the group");
}

std::size_t SubgroupLattice::longest_chain() const {
    const std::size_t k = classes_.size();
    std::vector<std::size_t> chain(k, 1);
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (subconjugate(a, b)) chain[b] = std::max(chain[b], chain[a] + 1);
    return k ? chain[k - 1] : 0;
}

std::vector<int> SubgroupLattice::generators(std::size_t cls) const {
    const Subgroup& h = representative(cls);
    std::vector<int> gens;
    Subgroup span{{0}};
    for (int e : h.elements) {
        if (span.contains(e)) continue;
        gens.push_back(e);
        span = generate_subgroup(*group_, gens);
    }
    return gens;
}

std::string SubgroupLattice::describe(std::size_t cls) const {
    const auto gens = generators(cls);
    std::ostringstream os;
    os << "order " << representative(cls).order() << " <";
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << group_->element(gens[i]).cycles();
    os << '>';
    return os.str();
}

std::shared_ptr<const SubgroupLattice> build_lattice(FiniteGroup g) {
    return std::make_shared<const SubgroupLattice>(std::make_shared<const FiniteGroup>(std::move(g)));
}

// ---------------------------------------------------------------- G-sets

GSet::GSet(const FiniteGroup& g, std::vector<Permutation> generator_action, std::string label)
    : size_(0), label_(std::move(label)), gen_action_(std::move(generator_action)) {
    if (gen_action_.empty() || gen_action_.size() != g.generators().size())
        fail(ErrorKind::Domain, "G-set needs one permutation per group generator");
    size_ = gen_action_.empty() ? 0 : gen_action_.front().degree();
    for (const auto& p : gen_action_)
        if (p.degree() != size_ || !is_bijection(p)) fail(ErrorKind::Domain, "G-set generator action is not a permutation");

    const auto gens = g.generator_indices();
    std::vector<std::optional<Permutation>> action(g.order());
    action[0] = Permutation::identity(size_);
    std::vector<int> order{0};
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int x = order[i];
        for (std::size_t s = 0; s < gens.size(); ++s) {
            const int y = g.mul(gens[s], x);
            Permutation py = gen_action_[s] * *action[static_cast<std::size_t>(x)];
            auto& slot = action[static_cast<std::size_t>(y)];
            if (!slot) {
                slot = std::move(py);
                order.push_back(y);
            } else if (*slot != py) {
                fail(ErrorKind::Domain, "generator images do not define a group action");
            }
        }
    }
    table_.resize(g.order() * size_);
    for (std::size_t e = 0; e < g.order(); ++e)
        for (std::size_t x = 0; x < size_; ++x) table_[e * size_ + x] = action[e]->images[x];
}

CosetSpace coset_space(const FiniteGroup& g, const Subgroup& h) {
    if (!is_subgroup(g, h.elements)) fail(ErrorKind::Domain, "coset_space: not a subgroup");
    std::set<int> rep_set;
    for (std::size_t x = 0; x < g.order(); ++x) rep_set.insert(coset_rep(g, h, static_cast<int>(x)));
    std::vector<int> reps(rep_set.begin(), rep_set.end());
    auto index_of_rep = [&](int r) {
        return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), r) - reps.begin());
    };
    std::vector<Permutation> action;
    for (int s : g.generator_indices()) {
        Permutation p;
        p.images.resize(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) p.images[i] = index_of_rep(coset_rep(g, h, g.mul(s, reps[i])));
        action.push_back(std::move(p));
    }
    return CosetSpace{GSet(g, std::move(action), "G/H"), std::move(reps)};
}

std::vector<int> fixed_points(const GSet& x, const Subgroup& h) {
    std::vector<int> out;
    for (std::size_t p = 0; p < x.size(); ++p) {
        bool fixed = std::all_of(h.elements.begin(), h.elements.end(),
                                 [&](int e) { return x.act(e, static_cast<int>(p)) == static_cast<int>(p); });
        if (fixed) out.push_back(static_cast<int>(p));
    }
    return out;
}

std::size_t orbit_count(const GSet& x, const Subgroup& h) {
    std::vector<int> parent(x.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    std::size_t orbits = x.size();
    for (int e : h.elements)
        for (std::size_t p = 0; p < x.size(); ++p) {
            int a = find(static_cast<int>(p)), b = find(x.act(e, static_cast<int>(p)));
            if (a != b) {
                parent[static_cast<std::size_t>(a)] = b;
                --orbits;
            }
        }
    return orbits;
}

}  // namespace bredon
