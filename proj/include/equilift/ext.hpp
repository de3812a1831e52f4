#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equilift/grp.hpp"
#include "equilift/parallel.hpp"

namespace equilift::ext {

using grp::Elt;
using grp::GroupPtr;

/// Raw data of a would-be short exact sequence 1 -> L -> M -> N -> 1.
/// Unvalidated; run check_exact or Extension::make.
struct ExtensionData {
    GroupPtr L, M, N;
    grp::Hom incl;  // L -> M
    grp::Hom proj;  // M -> N
};

/// One failed exactness condition, with a witness element where that makes
/// sense (an unhit target element, a kernel element outside the image, ...).
struct ExactnessIssue {
    std::string condition;  // "injectivity"|"surjectivity"|"exactness"|"normality"
    std::vector<Elt> witness;
    std::string detail;
};

std::vector<ExactnessIssue> check_exact(const ExtensionData& d);

/// A validated short exact sequence. Construction runs check_exact and
/// refuses on the first failure.
class Extension {
public:
    static Extension make(ExtensionData d);

    const GroupPtr& L() const { return d_.L; }
    const GroupPtr& M() const { return d_.M; }
    const GroupPtr& N() const { return d_.N; }
    const grp::Hom& incl() const { return d_.incl; }
    const grp::Hom& proj() const { return d_.proj; }
    const ExtensionData& data() const { return d_; }

    /// Preimage of m under incl, or -1 when m is outside the kernel copy.
    Elt in_kernel(Elt m) const { return l_of_m_[m]; }

private:
    explicit Extension(ExtensionData d);
    ExtensionData d_;
    std::vector<Elt> l_of_m_;
};

/// 1 -> L -> L x N -> N -> 1 with the factor embedding and projection.
Extension direct_product_extension(const grp::FiniteGroup& l, const grp::FiniteGroup& n);

/// Set-theoretic right inverse of proj. Normalized means map(e) = e.
struct Section {
    std::vector<Elt> map;  // per N element, a preimage in M
    bool normalized = false;

    static Section make(const Extension& e, std::vector<Elt> map);
};

/// The section picking the smallest preimage of each element (identity for
/// the identity); always normalized.
Section canonical_section(const Extension& e);

/// Every normalized section, in lexicographic map order.
std::vector<Section> normalized_sections(const Extension& e);

/// Whether the section is multiplicative (and hence a splitting).
bool is_homomorphic(const Extension& e, const Section& s);

/// c(n1,n2) = s(n1) s(n2) s(n1 n2)^-1 pulled back to L, together with the
/// section it came from. The values measure how far s is from multiplicative;
/// any valid section is accepted, normalized or not.
struct FactorSet {
    std::vector<std::vector<Elt>> c;  // [n1][n2] -> element of L
    std::vector<Elt> section;         // the defining section map
};

FactorSet factor_set(const Extension& e, const Section& s);

/// The action of N on L by conjugation through the section: n . l =
/// incl^-1( s(n) incl(l) s(n)^-1 ). Always by automorphisms.
grp::GAction induced_action(const Extension& e, const Section& s);

/// b: N -> L with c(n1,n2) = b(n1) * (n1.b(n2)) * b(n1 n2)^-1 (action through
/// the factor set's own section), or empty if none exists. Exhaustive scan
/// with prefix pruning; the lexicographically smallest witness is returned.
std::optional<std::vector<Elt>> is_coboundary(const Extension& e, const FactorSet& c);

/// All subgroups K of M with K meeting the kernel copy trivially and
/// K * incl(L) = M, in sorted order.
std::vector<std::vector<Elt>> complements(const Extension& e);

/// The splitting homomorphism N -> M whose image is the complement k.
std::vector<Elt> splitting_from_complement(const Extension& e, const std::vector<Elt>& k);

/// All homomorphic sections N -> M (one per complement), sorted.
std::vector<std::vector<Elt>> splittings(const Extension& e);

struct SplittingClasses {
    std::vector<std::vector<Elt>> reps;    // lex-smallest splitting per orbit
    std::vector<std::vector<int>> orbits;  // indices into splittings(e), per class
};

/// Splittings grouped under conjugation by kernel elements. Throws when the
/// extension does not split at all.
SplittingClasses splitting_classes(const Extension& e);

struct H1Result {
    int count = 0;
    std::vector<std::vector<Elt>> reps;  // crossed homomorphisms N -> L
};

/// Degree-1 classes for an action of n on l by automorphisms: maps
/// z with z(n1 n2) = z(n1) * (n1.z(n2)), modulo z ~ b^-1 * z * (n.b).
H1Result h1(const grp::FiniteGroup& n, const grp::FiniteGroup& l,
            const grp::GAction& act, const ExecPolicy& pol = {});

/// The conjugation action of N on the kernel modulo inner automorphisms;
/// independent of the section choice.
struct OuterAction {
    grp::AutomorphismGroup aut;   // automorphisms of L
    std::vector<int> class_of;    // per N element: index into aut.outer_classes
    bool homomorphic = false;     // multiplication respected on class level
};

OuterAction outer_action(const Extension& e);

/// b(n) = s2(n) s1(n)^-1 pulled back to L; relates the factor sets of two
/// sections by c2(n1,n2) = b(n1) * (n1.b(n2)) * c1(n1,n2) * b(n1 n2)^-1
/// (action through s1).
std::vector<Elt> section_difference(const Extension& e, const Section& s1, const Section& s2);

}  // namespace equilift::ext
