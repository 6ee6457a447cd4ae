// SPDX-License-Identifier: Apache-2.0
//
// Finite permutation groups, their subgroup lattice up to conjugacy, and
// finite G-sets.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bredon {

inline constexpr std::size_t kDefaultGroupCap = 2000;

/// A bijection of {0..degree-1}, stored as its image sequence.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(std::size_t degree);
    /// Parses cycle notation such as "(0 1 2)(3 4)" or "(0,1)".
    static Permutation from_cycles(std::size_t degree, std::string_view cycles);

    std::size_t degree() const noexcept { return images.size(); }
    bool is_identity() const;
    Permutation inverse() const;
    std::string cycles() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// (a * b)(x) = a(b(x)): apply b first.
Permutation operator*(const Permutation& a, const Permutation& b);

class FiniteGroup {
public:
    /// Closes the generators under composition. Elements are sorted
    /// lexicographically by image sequence, so index 0 is the identity.
    FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
                std::size_t cap = kDefaultGroupCap, std::string name = {});

    std::size_t degree() const noexcept { return degree_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::string& name() const noexcept { return name_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const Permutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

    int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
    int index_of(const Permutation& p) const;
    std::vector<int> generator_indices() const;

private:
    std::size_t degree_;
    std::string name_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::map<Permutation, int> index_;
    std::vector<int> mult_;
    std::vector<int> inverse_;
};

/// Builds "C<n>", "D<2n>", "S<n>", "A<n>", "Q8" or "perm:<degree>:<cycles;...>".
FiniteGroup make_named_group(std::string_view descriptor, std::size_t cap = kDefaultGroupCap);

/// Sorted element indices into the parent group.
struct Subgroup {
    std::vector<int> elements;

    std::size_t order() const noexcept { return elements.size(); }
    bool contains(int g) const;
    bool is_subset_of(const Subgroup& other) const;

    friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// Closure of a set of element indices under multiplication.
Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x);  // x H x^-1

/// N_G(H)/H as cosets nH, each named by its smallest element index.
struct WeylGroup {
    std::vector<int> coset_reps;   // sorted ascending; rep 0 is the identity
    std::vector<int> mult;         // mult[i*n+j] = index of coset rep_i rep_j H
    std::size_t order() const noexcept { return coset_reps.size(); }
    int mul(int a, int b) const { return mult[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
};

struct SubgroupClass {
    std::vector<int> members;  // subgroup indices; members[0] is the representative
    int representative() const { return members.front(); }
};

class SubgroupLattice {
public:
    explicit SubgroupLattice(std::shared_ptr<const FiniteGroup> g);

    const FiniteGroup& group() const noexcept { return *group_; }
    const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
    const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }
    std::size_t class_count() const noexcept { return classes_.size(); }

    const Subgroup& representative(std::size_t cls) const {
        return subgroups_[static_cast<std::size_t>(classes_[cls].representative())];
    }
    int class_of(std::size_t subgroup) const { return class_of_[subgroup]; }
    std::optional<int> find_class(const Subgroup& h) const;
    int find_subgroup(const Subgroup& h) const;

    /// Some conjugate of rep(a) is contained in rep(b). Reflexive.
    bool subconjugate(std::size_t a, std::size_t b) const { return below_[a * class_count() + b]; }
    const Subgroup& normalizer(std::size_t subgroup) const { return normalizers_[subgroup]; }
    const WeylGroup& weyl(std::size_t cls) const { return weyl_[cls]; }

    /// Number of subgroups in the longest chain e < H1 < ... < G.
    std::size_t longest_chain() const;
    /// Greedy generating set of the representative, in element order.
    std::vector<int> generators(std::size_t cls) const;
    /// Short human-readable name: order plus a generating set in cycle notation.
    std::string describe(std::size_t cls) const;

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<Subgroup> subgroups_;
    std::vector<int> class_of_;
    std::vector<SubgroupClass> classes_;
    std::vector<bool> below_;
    std::vector<Subgroup> normalizers_;
    std::vector<WeylGroup> weyl_;
};

std::shared_ptr<const SubgroupLattice> build_lattice(FiniteGroup g);

/// A finite set with a G-action. The action is given on generators and is
/// extended to every group element at construction (which also checks that
/// it is a genuine action).
class GSet {
public:
    GSet(const FiniteGroup& g, std::vector<Permutation> generator_action, std::string label = {});

    std::size_t size() const noexcept { return size_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<Permutation>& generator_action() const noexcept { return gen_action_; }
    /// Image of point x under group element g.
    int act(int g, int x) const { return table_[static_cast<std::size_t>(g) * size_ + static_cast<std::size_t>(x)]; }

private:
    std::size_t size_;
    std::string label_;
    std::vector<Permutation> gen_action_;
    std::vector<int> table_;
};

struct CosetSpace {
    GSet set;
    std::vector<int> reps;  // smallest element index of each coset, ascending
};

/// G/H with left translation; coset i is reps[i] H.
CosetSpace coset_space(const FiniteGroup& g, const Subgroup& h);

std::vector<int> fixed_points(const GSet& x, const Subgroup& h);
std::size_t orbit_count(const GSet& x, const Subgroup& h);

}  // namespace bredon
