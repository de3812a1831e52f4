#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equilift/common.hpp"

namespace equilift::grp {

/// Elements are dense indices into the Cayley table.
using Elt = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its full multiplication table. The identity and
/// inverse map are located once at construction; every constructor validates
/// closure, associativity, identity and inverses, so a FiniteGroup in hand is
/// always an actual group.
class FiniteGroup {
public:
    /// table[a][b] = a*b. Optional element names; auto-generated when empty.
    static FiniteGroup from_table(std::vector<std::vector<Elt>> table,
                                  std::vector<std::string> names = {},
                                  std::string display = "");

    /// Parses constructor strings: "Z<n>", "S<n>" (n <= 4), "Q8", "V4", and
    /// 'x'-separated products such as "Z2xZ4" or "S3xZ2".
    static FiniteGroup named(const std::string& spec);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n);  // n <= 4 by design
    static FiniteGroup klein_four();
    static FiniteGroup quaternion8();
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

    int order() const { return static_cast<int>(table_.size()); }
    Elt identity() const { return identity_; }
    Elt mul(Elt a, Elt b) const { return table_[a][b]; }
    Elt inv(Elt a) const { return inverse_[a]; }
    /// a b a^{-1}
    Elt conj(Elt a, Elt b) const { return mul(mul(a, b), inv(a)); }
    int element_order(Elt a) const;

    const std::string& name(Elt a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    /// Resolves an element by name; returns nullopt when unknown.
    std::optional<Elt> element_by_name(const std::string& name) const;
    const std::string& display_name() const { return display_; }

    const std::vector<std::vector<Elt>>& table() const { return table_; }

    bool is_abelian() const;
    std::vector<Elt> center() const;
    bool contains_subgroup(const std::vector<Elt>& elems) const;
    /// Smallest subgroup containing `gens` (always contains the identity),
    /// returned sorted.
    std::vector<Elt> subgroup_closure(std::vector<Elt> gens) const;
    /// Every subgroup, each sorted, the list ordered by (size, lexicographic).
    std::vector<std::vector<Elt>> subgroups() const;
    /// A small generating set found greedily; empty for the trivial group.
    std::vector<Elt> generating_set() const;

    /// Structural equality: same table and same names.
    bool operator==(const FiniteGroup& o) const {
        return table_ == o.table_ && names_ == o.names_;
    }

    /// Default-constructed value is an empty placeholder; every factory
    /// returns a fully validated group.
    FiniteGroup() = default;

private:
    std::vector<std::vector<Elt>> table_;
    std::vector<Elt> inverse_;
    std::vector<std::string> names_;
    Elt identity_ = 0;
    std::string display_;
};

/// Wraps a group value in the shared handle used by the chart/cocycle layer.
inline GroupPtr share(FiniteGroup g) {
    return std::make_shared<const FiniteGroup>(std::move(g));
}

/// Group homomorphism recorded as the image of every source element.
/// `make` rejects maps that fail f(ab) = f(a)f(b) or miss f(e) = e.
struct Hom {
    GroupPtr source;
    GroupPtr target;
    std::vector<Elt> map;

    static Hom make(GroupPtr source, GroupPtr target, std::vector<Elt> map);

    Elt operator()(Elt a) const { return map[a]; }
    bool is_injective() const;
    bool is_surjective() const;
    /// Sorted image subgroup.
    std::vector<Elt> image() const;
    /// Sorted kernel subgroup.
    std::vector<Elt> kernel() const;
    static Hom compose(const Hom& g, const Hom& f);  // g after f
    static Hom identity(GroupPtr g);
};

/// A left action of `group` on {0,...,carrier_size-1}. `make` rejects tables
/// where the identity moves points or where g.(h.x) != (gh).x.
struct GAction {
    GroupPtr group;
    int carrier_size = 0;
    std::vector<std::vector<int>> act;  // act[g][x]

    static GAction make(GroupPtr group, int carrier_size,
                        std::vector<std::vector<int>> act);

    int operator()(Elt g, int x) const { return act[g][x]; }
    bool is_free() const;
    /// Orbit id per carrier point, numbered by first appearance.
    std::vector<int> orbits() const;
    int orbit_count() const;
};

/// A right action on {0..carrier_size-1}: act[a][x] = x.a with
/// (x.b).a = x.(ba). Same validation rigor as GAction.
struct RightAction {
    GroupPtr group;
    int carrier_size = 0;
    std::vector<std::vector<int>> act;

    static RightAction make(GroupPtr group, int carrier_size,
                            std::vector<std::vector<int>> act);

    int operator()(int x, Elt a) const { return act[a][x]; }
    bool is_free() const;
    std::vector<int> orbits() const;
    int orbit_count() const;
};

/// Elements of g commuting with everything in `elems` (sorted subgroup).
std::vector<Elt> centralizer(const FiniteGroup& g, const std::vector<Elt>& elems);

/// Aut(G) as an abstract group plus the permutation each element stands for.
/// `inner` lists the indices realized by conjugation; `outer_classes` are the
/// cosets of the inner subgroup (each a sorted index list, the identity coset
/// first).
struct AutomorphismGroup {
    FiniteGroup group;                        // abstract Aut(G)
    std::vector<std::vector<Elt>> perms;      // perms[i][x] = image of x
    std::vector<int> inner;                   // sorted indices into perms
    std::vector<std::vector<int>> outer_classes;
};

AutomorphismGroup automorphism_group(const FiniteGroup& g,
                                     int workers = 1);

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<Elt>> conjugacy_classes(const FiniteGroup& g);

/// A table isomorphism a -> b when one exists (image of each a-element).
std::optional<std::vector<Elt>> isomorphism(const FiniteGroup& a,
                                            const FiniteGroup& b);

/// The sorted subgroup `elems` of g re-indexed as a standalone group.
/// `embedding` maps the new group's elements back into g.
struct SubgroupGroup {
    FiniteGroup group;
    std::vector<Elt> embedding;       // new index -> element of g
    std::vector<int> index_in_sub;    // g element -> new index or -1
};
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const std::vector<Elt>& elems,
                                std::string display = "");

}  // namespace equilift::grp
