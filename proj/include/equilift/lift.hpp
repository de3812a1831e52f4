#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equilift/cech.hpp"
#include "equilift/ext.hpp"
#include "equilift/grp.hpp"
#include "equilift/parallel.hpp"

namespace equilift::lift {

using cech::Cocycle1;
using cech::NervePtr;
using grp::Elt;
using grp::GroupPtr;

/// A finite group acting on a nerve by chart permutations that preserve the
/// overlap structure (pairs and triples).
struct GSpace {
    NervePtr nerve;
    GroupPtr group;                       // the acting group
    std::vector<std::vector<int>> sigma;  // sigma[g][chart]

    /// Validates that every row is a structure-preserving permutation, that
    /// the identity acts trivially, and that sigma[g][sigma[h][i]] =
    /// sigma[gh][i].
    static GSpace make(NervePtr nerve, GroupPtr group,
                       std::vector<std::vector<int>> sigma);

    /// Extends generator images to the whole group by left-to-right word
    /// propagation; rejects images that conflict on any relation or
    /// generators that fail to generate.
    static GSpace from_generators(NervePtr nerve, GroupPtr group,
                                  const std::vector<Elt>& gens,
                                  const std::vector<std::vector<int>>& images);

    int chart(Elt g, int i) const { return sigma[g][i]; }
};

/// A bundle cocycle together with a group action on its base nerve: the
/// input to every lifting question.
struct EquivariantInstance {
    GSpace space;
    Cocycle1 bundle;

    static EquivariantInstance make(GSpace space, Cocycle1 bundle);
};

/// A bundle map over the base motion of `g`: carries the fiber over chart i
/// to the fiber over sigma_g(i) via left multiplication by lambda_i, subject
/// to g_{sigma(i) sigma(j)} = lambda_i g_ij lambda_j^-1.
struct Lift {
    Elt g = 0;
    std::vector<Elt> lambda;

    bool operator==(const Lift& o) const { return g == o.g && lambda == o.lambda; }
    bool operator<(const Lift& o) const {
        return g != o.g ? g < o.g : lambda < o.lambda;
    }
};

/// All lifts over a fixed group element, sorted by lambda. Empty when the
/// pulled-back cocycle is not gauge-equivalent to the original.
std::vector<Lift> lifts_of(const EquivariantInstance& inst, Elt g);

struct C1Report {
    bool ok = true;
    std::vector<Elt> failing;  // group elements that admit no lift
};

/// Whether every group element lifts.
C1Report check_c1(const EquivariantInstance& inst, const ExecPolicy& pol = {});

/// The group of all lifts under (g,l)*(g',l') = (gg', i -> l_{sigma_{g'}(i)}
/// * l'_i), with its projection to the base group and the kernel of gauge
/// transformations (lifts of the identity). When some elements do not lift,
/// the group collects the lifts of the liftable subgroup and c1.ok is false.
struct LiftGroup {
    std::vector<Lift> elements;   // grouped by g ascending, then lambda
    grp::FiniteGroup group;       // abstract multiplication table
    std::vector<Elt> projection;  // per element: its g
    std::vector<int> kernel;      // element indices over the identity
    C1Report c1;

    int index_of(const Lift& l) const;
};

/// The composition law (g,l)*(g',l') = (gg', i -> l_{sigma_{g'}(i)} * l'_i);
/// exposed so the abstract table can be checked against it.
Lift compose_lifts(const EquivariantInstance& inst, const Lift& a, const Lift& b);

LiftGroup aut_group(const EquivariantInstance& inst, const ExecPolicy& pol = {});

/// The lifting problem packaged as a group extension
/// 1 -> gauge -> lifts -> G -> 1: split exactly when a lifting action
/// exists.
struct Obstruction {
    LiftGroup lifts;
    ext::Extension extension;
    bool split = false;
    ext::FactorSet factor_set;  // from the canonical normalized section
};

/// Requires every element to lift; otherwise an input error names a failing
/// element.
Obstruction obstruction(const EquivariantInstance& inst, const ExecPolicy& pol = {});

struct LiftingClasses {
    int count = 0;
    // One homomorphic family per class: reps[k][g] is the lift over g.
    std::vector<std::vector<Lift>> reps;
};

/// All lifting actions (homomorphic sections of the projection), classified
/// modulo conjugation by gauge transformations. Requires a split
/// obstruction. The class count is cross-checked internally against the
/// degree-1 classification of the induced action.
LiftingClasses enumerate_liftings(const EquivariantInstance& inst,
                                  const ExecPolicy& pol = {});

/// The quotient of G x H identifying (g l, h) with (g, phi(l) h) for l in a
/// subgroup L of G: carries a left G-action and a commuting free right
/// H-action, and projects G-equivariantly onto the cosets G/L.
struct HomogeneousBundle {
    GroupPtr G, H;
    grp::SubgroupGroup L;        // the subgroup, with its embedding into G
    std::vector<Elt> phi;        // per L element (subgroup-local index): image in H
    int points = 0;              // |G| * |H| / |L|
    std::vector<Elt> coset_reps; // smallest element per coset of L
    std::vector<int> coset_of;   // per G element: coset index
    // Points are numbered coset-major: point = coset * |H| + y, standing
    // for the class of (coset_rep, y).
    std::vector<std::vector<int>> g_action;  // [g][point]
    std::vector<std::vector<int>> h_action;  // [h][point], right action
    int orbit_of(Elt g, Elt h) const;        // class of the raw pair (g, h)
};

/// Builds the quotient model. `l_elems` must be a subgroup of g; `phi_map`
/// gives the H-image of each element of l_elems (in that order) and must be
/// a homomorphism.
HomogeneousBundle homogeneous_bundle(GroupPtr g, const std::vector<Elt>& l_elems,
                                     GroupPtr h, const std::vector<Elt>& phi_map);

/// The same bundle re-expressed on the coset nerve (one chart per coset,
/// every two charts overlapping) with the natural G-action. Transitions are
/// solved per pair-orbit by intertwiner search; when no intertwiner exists
/// the realization reports failure instead of guessing.
struct HomogeneousRealization {
    HomogeneousBundle bundle;
    bool realized = false;
    std::string detail;  // failure witness when not realized
    std::optional<EquivariantInstance> instance;
    // The canonical lifting action on the realization: lifts[g] covers g.
    std::vector<Lift> canonical_lifts;
};

HomogeneousRealization realize_homogeneous(GroupPtr g, const std::vector<Elt>& l_elems,
                                           GroupPtr h, const std::vector<Elt>& phi_map);

/// Fiber translations [g, h] -> [g, a h] that are (G,H)-equivariant; equals
/// the centralizer of phi(L) in H. The certificate enumerates every
/// projection-preserving bijection commuting with both actions by orbit
/// propagation and confirms none falls outside the family.
struct EquivariantAutomorphisms {
    std::vector<Elt> elements;  // sorted H elements
    bool certificate_checked = false;
    bool certificate_ok = false;
};

EquivariantAutomorphisms equivariant_automorphisms(const HomogeneousBundle& hb);

/// Attempted identification of the gauge kernel with H for homogeneous-style
/// instances (transitive chart action, abelian H, central kernel): sends the
/// gauge transformation (e, lambda) to lambda_0.
struct GaugeIsoReport {
    bool ok = false;
    std::string detail;          // which precondition failed, or "ok"
    std::vector<Elt> iso;        // per kernel element: its H image
};

GaugeIsoReport gauge_iso_check(const EquivariantInstance& inst);

/// Glues a bundle from two charts with one overlap and a fixed-chart group
/// action: lambda over chart 0 from rho0, over chart 1 from rho1, transition
/// c. Succeeds exactly when rho1(x) * c = c * rho0(x) for every x; on
/// failure the smallest violating x is reported.
struct ClutchResult {
    std::optional<EquivariantInstance> instance;
    std::vector<Lift> section;  // per group element, the designated lift
    Elt failing = -1;
};

ClutchResult clutch_two_cover(GroupPtr gamma, const grp::Hom& rho0,
                              const grp::Hom& rho1, Elt c);

}  // namespace equilift::lift
