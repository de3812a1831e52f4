#pragma once

#include <string>
#include <vector>

#include "equilift/common.hpp"

namespace equilift::fincat {

/// A finite category with dense integer ids for objects and morphisms.
/// The composition table is total on composable pairs and -1 elsewhere;
/// construction validates identities, typing and associativity.
class FiniteCategory {
public:
    static FiniteCategory make(int objects,
                               std::vector<int> src, std::vector<int> tgt,
                               std::vector<int> identities,
                               std::vector<std::vector<int>> compose);

    /// The category of a preorder: objects 0..n-1, one morphism a -> b per
    /// related pair. `leq` lists generating relations; the reflexive and
    /// transitive closure is taken. Morphism ids run in (src, tgt) lex order.
    static FiniteCategory poset(int n, const std::vector<std::pair<int, int>>& leq);

    int objects() const { return objects_; }
    int morphisms() const { return static_cast<int>(src_.size()); }
    int src(int f) const { return src_[f]; }
    int tgt(int f) const { return tgt_[f]; }
    int identity(int x) const { return identity_[x]; }
    bool composable(int g, int f) const { return tgt_[f] == src_[g]; }
    /// g after f; both must be composable.
    /// g after f; -1 when tgt(f) != src(g).
    int compose(int g, int f) const;
    std::vector<int> morphisms_into(int x) const;

    bool operator==(const FiniteCategory& o) const {
        return objects_ == o.objects_ && src_ == o.src_ && tgt_ == o.tgt_ &&
               identity_ == o.identity_ && compose_ == o.compose_;
    }

private:
    int objects_ = 0;
    std::vector<int> src_, tgt_, identity_;
    std::vector<std::vector<int>> compose_;
};

/// A sieve on `base`: a set of morphisms into `base` closed under
/// precomposition with arbitrary morphisms.
struct Sieve {
    int base = -1;
    std::vector<char> member;  // indexed by morphism id

    std::vector<int> members() const;
    bool contains(int f) const { return member[f] != 0; }
    bool operator==(const Sieve& o) const { return base == o.base && member == o.member; }
    bool operator<(const Sieve& o) const {
        if (base != o.base) return base < o.base;
        return member < o.member;
    }
};

/// True when `s.member` only marks morphisms into `s.base` and the set is
/// closed under precomposition.
bool is_sieve(const FiniteCategory& cat, const Sieve& s);

/// Smallest sieve on `base` containing `gens` (each must land in `base`).
Sieve sieve_generated(const FiniteCategory& cat, int base, const std::vector<int>& gens);

/// All morphisms into `base`.
Sieve maximal_sieve(const FiniteCategory& cat, int base);

/// f^*(r) = { g with codomain src(f) | f o g in r } for f landing in r.base.
Sieve pullback_sieve(const FiniteCategory& cat, const Sieve& r, int f);

/// Every sieve on `base`, sorted. Throws unsupported_error when the object
/// receives more than `limit` morphisms (the enumeration is exponential).
std::vector<Sieve> all_sieves_on(const FiniteCategory& cat, int base, int limit = 22);

/// Covering data: `covers[x]` lists the sieves declared to cover object x.
struct Topology {
    std::vector<std::vector<Sieve>> covers;

    bool covers_with(int x, const Sieve& s) const;
    /// Structural validation against a category (bases match, sieves valid).
    void validate(const FiniteCategory& cat) const;
};

/// One violated axiom instance. `axiom` is "maximality", "stability" or
/// "local-character"; `morphism` is the offending arrow for stability and -1
/// otherwise.
struct SiteIssue {
    std::string axiom;
    int object = -1;
    std::vector<int> sieve;  // members of the sieve involved
    int morphism = -1;
    std::string detail;
};

/// Checks the three covering-family axioms; empty result = genuine topology.
std::vector<SiteIssue> check_topology(const FiniteCategory& cat, const Topology& j);

/// A presheaf of finite sets: a set {0..sizes[x]-1} per object and, for every
/// morphism f: a -> b, a restriction map P(b) -> P(a). Construction validates
/// functoriality.
struct SetPresheaf {
    std::vector<int> sizes;
    std::vector<std::vector<int>> restrict_along;  // [f][elt of P(tgt f)] -> P(src f)

    static SetPresheaf make(const FiniteCategory& cat, std::vector<int> sizes,
                            std::vector<std::vector<int>> restrict_along);
    /// Hom(-, z) with elements indexed by morphism-id order.
    static SetPresheaf representable(const FiniteCategory& cat, int z);
    static SetPresheaf constant(const FiniteCategory& cat, int k);

    int restrict_elt(int f, int v) const { return restrict_along[f][v]; }
};

/// One sheaf-condition failure for a covering sieve. `kind` is "existence"
/// (a matching family with no amalgamation; `family` gives the element chosen
/// per sieve member, aligned with the sorted member list) or "uniqueness"
/// (two sections with equal restrictions; they sit in `sections`).
struct SheafIssue {
    int object = -1;
    std::vector<int> sieve;
    std::string kind;
    std::vector<int> family;
    std::pair<int, int> sections{-1, -1};
    std::string detail;
};

/// Tests the sheaf condition for `p` against every covering sieve of `j`.
std::vector<SheafIssue> check_sheaf(const FiniteCategory& cat, const Topology& j,
                                    const SetPresheaf& p);

}  // namespace equilift::fincat
