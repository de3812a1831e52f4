#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "equilift/grp.hpp"
#include "equilift/parallel.hpp"

namespace equilift::cech {

using grp::Elt;
using grp::GroupPtr;

class Nerve;
using NervePtr = std::shared_ptr<const Nerve>;

/// The combinatorial record of a cover: chart indices, unordered pairs with
/// nonempty double overlap, and 3-sets with nonempty triple overlap. Pairs
/// are stored (i<j) sorted; triples (i<j<k) sorted; every 2-subset of a
/// triple must be a pair. A spanning forest of the pair graph is precomputed
/// for gauge fixing.
class Nerve {
public:
    static NervePtr make(int charts,
                         std::vector<std::pair<int, int>> pairs,
                         std::vector<std::array<int, 3>> triples);

    /// n charts in a cycle (0-1, 1-2, ..., (n-1)-0), no triples. n >= 3.
    static NervePtr cycle(int n);
    /// n charts in a path (tree), no triples. n >= 1.
    static NervePtr path(int n);
    /// complete pair graph on n charts; optionally all 3-sets as triples.
    static NervePtr complete(int n, bool with_triples);

    int charts() const { return charts_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<std::array<int, 3>>& triples() const { return triples_; }

    /// Index into pairs() for {i,j} in either order; -1 when absent.
    int pair_index(int i, int j) const;
    bool has_pair(int i, int j) const { return pair_index(i, j) >= 0; }

    int components() const { return components_; }
    int component_of(int chart) const { return component_[chart]; }
    /// Pair indices of a spanning forest (BFS from the smallest chart of
    /// each component) and its complement.
    const std::vector<int>& tree_pairs() const { return tree_pairs_; }
    const std::vector<int>& cotree_pairs() const { return cotree_pairs_; }
    /// Parent chart along the forest (-1 at roots), for transition transport.
    const std::vector<int>& tree_parent() const { return parent_; }
    /// Charts in forest-discovery order (roots first per component).
    const std::vector<int>& bfs_order() const { return order_; }

    /// 4-sets whose four 3-subsets are all triples of the nerve (the
    /// combinatorial support of the degree-2 coboundary condition).
    std::vector<std::array<int, 4>> four_cliques() const;

    bool operator==(const Nerve& o) const {
        return charts_ == o.charts_ && pairs_ == o.pairs_ && triples_ == o.triples_;
    }

private:
    Nerve() = default;
    int charts_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::array<int, 3>> triples_;
    std::vector<std::vector<int>> pair_index_;
    std::vector<int> component_;
    int components_ = 0;
    std::vector<int> tree_pairs_, cotree_pairs_, parent_, order_;
};

/// One structure-group element per overlap, with g_ii = e and g_ji = g_ij^-1
/// implied. No triple condition; this is raw comparison data.
struct Chain1 {
    NervePtr nerve;
    GroupPtr group;
    std::vector<Elt> values;  // aligned with nerve->pairs()

    static Chain1 make(NervePtr nerve, GroupPtr group, std::vector<Elt> values);

    /// Transition from chart j's trivialization into chart i's: satisfies
    /// the composition rule g(i,j)*g(j,k) = g(i,k) exactly when the chain is
    /// a cocycle. g(i,i) = e; i!=j requires {i,j} to be a pair.
    Elt g(int i, int j) const;

    bool operator==(const Chain1& o) const {
        return *nerve == *o.nerve && *group == *o.group && values == o.values;
    }
};

/// Verdict of the composition-rule check, with every failing triple and its
/// defect g(k,i)*g(i,j)*g(j,k).
struct CocycleCheck {
    bool ok = true;
    std::vector<std::array<int, 3>> failing;
    std::vector<Elt> defects;
};

CocycleCheck is_cocycle(const Chain1& h);

/// A Chain1 whose composition rule holds on every triple. `make` throws an
/// input error naming the first failing triple.
struct Cocycle1 {
    Chain1 chain;

    static Cocycle1 make(Chain1 chain);

    Elt g(int i, int j) const { return chain.g(i, j); }
    const NervePtr& nerve() const { return chain.nerve; }
    const GroupPtr& group() const { return chain.group; }

    bool operator==(const Cocycle1& o) const { return chain == o.chain; }
};

/// Degree-2 data over an abelian band: one element per triple, alternating
/// under orientation, with vanishing coboundary on every 4-clique.
struct Cocycle2 {
    NervePtr nerve;
    grp::FiniteGroup band;     // abelian
    std::vector<Elt> values;   // aligned with nerve->triples()

    static Cocycle2 make(NervePtr nerve, grp::FiniteGroup band, std::vector<Elt> values);

    /// Oriented accessor: value for the sorted triple, inverted for odd
    /// permutations of it.
    Elt c(int i, int j, int k) const;

    bool operator==(const Cocycle2& o) const {
        return *nerve == *o.nerve && band == o.band && values == o.values;
    }
};

/// The degree-2 defect of a chain, landing in a designated abelian subgroup
/// (the band) of the chain's group. `band` keeps the subgroup embedding.
struct TwoCocycle {
    Cocycle2 cocycle;
    grp::SubgroupGroup band;
};

/// c_ijk = h(k,i)*h(i,j)*h(j,k) per triple; every defect must lie in
/// `band_elems` (an abelian subgroup of h.group), else an input error names
/// the offending triple.
TwoCocycle two_cocycle_of_chain(const Chain1& h, const std::vector<Elt>& band_elems);

/// Gauge witness lambda with b_ij = lambda_i * a_ij * lambda_j^-1, if the two
/// cocycles are cohomologous. Deterministic: smallest witness in chart order.
std::optional<std::vector<Elt>> cohomologous1(const Cocycle1& a, const Cocycle1& b);

/// All gauge transformations of c: lambda with c_ij = lambda_i c_ij lambda_j^-1.
std::vector<std::vector<Elt>> gauge_group(const Cocycle1& c);

/// Product of transitions along a closed chart walk (consecutive entries
/// must be pairs; the walk closes from back() to front()).
Elt holonomy(const Cocycle1& c, const std::vector<int>& cycle);

/// Subgroup of H generated by the holonomies of the fundamental cycles based
/// at `base`'s component root (tree-path conjugated). Sorted element list.
std::vector<Elt> holonomy_group(const Cocycle1& c, int base);

struct H1Classes {
    int count = 0;
    std::vector<Cocycle1> reps;  // lexicographic representative per class
};

/// All Cocycle1 on the nerve modulo gauge, via spanning-forest gauge fixing:
/// forest transitions pinned to e, remaining values enumerated, residual
/// per-component conjugation quotiented out.
H1Classes h1_classes(NervePtr n, GroupPtr h, const ExecPolicy& pol = {});

/// The glued realization of a cocycle: one fiber of points per chart and per
/// pair; a pair's fiber attaches into its two charts (identity into the
/// second, left multiplication by g_ij into the first). The right H-action
/// is free; attachment components count the glued regions.
struct TotalSpace {
    NervePtr nerve;
    GroupPtr group;
    int regions = 0;  // charts + pairs, charts first
    int points = 0;   // regions * |H|
    // per pair p={i<j}: image point of (p,y) in chart i resp. chart j
    std::vector<std::vector<int>> attach_first, attach_second;
    grp::RightAction action;

    int point_id(int region, Elt y) const;
    int region_of(int point) const;
    Elt fiber_coord(int point) const;
    /// Chart labels of a region (one label for chart regions, two for pairs).
    std::vector<int> region_charts(int region) const;
    /// Connected components of the attachment graph.
    int gluing_orbit_count() const;
};

TotalSpace glue(const Cocycle1& c);

/// Reads the transitions back off the attachment tables; inverse of glue.
Cocycle1 extract_transitions(const TotalSpace& ts);

struct H2Classes {
    int count = 0;
    std::vector<Cocycle2> reps;
};

/// Degree-2 classification over an abelian band: cocycles modulo defects of
/// band-valued chains. Throws unsupported_error for nonabelian bands.
H2Classes h2_classes(NervePtr n, const grp::FiniteGroup& band, const ExecPolicy& pol = {});

/// Pair-cochain mu with band values making h' = h*mu a cocycle, if one
/// exists (direct search; the witness multiplies on the right per pair).
std::optional<std::vector<Elt>> band_correction(const Chain1& h,
                                                const std::vector<Elt>& band_elems);

/// mu with defect(mu) = c, values in c's band; empty when c is not a
/// coboundary.
std::optional<std::vector<Elt>> two_coboundary_witness(const Cocycle2& c);

}  // namespace equilift::cech
