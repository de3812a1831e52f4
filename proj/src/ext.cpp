#include "equilift/ext.hpp"

#include <algorithm>
#include <map>

#include "equilift/common.hpp"

namespace equilift::ext {

namespace {

void check_wiring(const ExtensionData& d) {
    if (!d.L || !d.M || !d.N) throw input_error("extension data is missing a group");
    if (!d.incl.source || !(*d.incl.source == *d.L) || !d.incl.target ||
        !(*d.incl.target == *d.M))
        throw input_error("inclusion endpoints do not match L -> M");
    if (!d.proj.source || !(*d.proj.source == *d.M) || !d.proj.target ||
        !(*d.proj.target == *d.N))
        throw input_error("projection endpoints do not match M -> N");
    if (static_cast<int>(d.incl.map.size()) != d.L->order() ||
        static_cast<int>(d.proj.map.size()) != d.M->order())
        throw input_error("homomorphism table size mismatch");
}

}  // namespace

std::vector<ExactnessIssue> check_exact(const ExtensionData& d) {
    check_wiring(d);
    const grp::FiniteGroup& l = *d.L;
    const grp::FiniteGroup& m = *d.M;
    const grp::FiniteGroup& n = *d.N;
    std::vector<ExactnessIssue> issues;

    for (Elt a = 0; a < l.order(); ++a)
        for (Elt b = a + 1; b < l.order(); ++b)
            if (d.incl.map[a] == d.incl.map[b]) {
                issues.push_back({"injectivity",
                                  {a, b},
                                  "kernel elements " + l.name(a) + " and " + l.name(b) +
                                      " share the image " + m.name(d.incl.map[a])});
            }

    std::vector<char> hit(n.order(), 0);
    for (Elt x = 0; x < m.order(); ++x) hit[d.proj.map[x]] = 1;
    for (Elt y = 0; y < n.order(); ++y)
        if (!hit[y])
            issues.push_back({"surjectivity",
                              {y},
                              "quotient element " + n.name(y) + " has no preimage"});

    std::vector<char> in_image(m.order(), 0);
    for (Elt a = 0; a < l.order(); ++a) in_image[d.incl.map[a]] = 1;
    for (Elt a = 0; a < l.order(); ++a) {
        const Elt x = d.incl.map[a];
        if (d.proj.map[x] != n.identity())
            issues.push_back({"exactness",
                              {x},
                              "image element " + m.name(x) + " maps to " +
                                  n.name(d.proj.map[x]) + ", not the identity"});
    }
    for (Elt x = 0; x < m.order(); ++x)
        if (d.proj.map[x] == n.identity() && !in_image[x])
            issues.push_back({"exactness",
                              {x},
                              "kernel element " + m.name(x) + " is not in the image of L"});

    for (Elt x = 0; x < m.order(); ++x)
        for (Elt a = 0; a < l.order(); ++a) {
            const Elt cx = m.conj(x, d.incl.map[a]);
            if (!in_image[cx]) {
                issues.push_back({"normality",
                                  {x, d.incl.map[a]},
                                  m.name(x) + " conjugates image element " +
                                      m.name(d.incl.map[a]) + " out of the image"});
            }
        }
    return issues;
}

Extension::Extension(ExtensionData d) : d_(std::move(d)) {
    l_of_m_.assign(d_.M->order(), -1);
    for (Elt a = 0; a < d_.L->order(); ++a) l_of_m_[d_.incl.map[a]] = a;
}

Extension Extension::make(ExtensionData d) {
    auto issues = check_exact(d);
    if (!issues.empty())
        throw input_error("not a short exact sequence: " + issues.front().detail);
    return Extension(std::move(d));
}

Extension direct_product_extension(const grp::FiniteGroup& l, const grp::FiniteGroup& n) {
    auto lp = grp::share(l);
    auto np = grp::share(n);
    auto mp = grp::share(grp::FiniteGroup::product(l, n));
    std::vector<Elt> incl(l.order()), proj(mp->order());
    for (Elt a = 0; a < l.order(); ++a) incl[a] = a * n.order() + n.identity();
    for (Elt x = 0; x < mp->order(); ++x) proj[x] = x % n.order();
    ExtensionData d{lp, mp, np, grp::Hom::make(lp, mp, std::move(incl)),
                    grp::Hom::make(mp, np, std::move(proj))};
    return Extension::make(std::move(d));
}

Section Section::make(const Extension& e, std::vector<Elt> map) {
    const grp::FiniteGroup& m = *e.M();
    const grp::FiniteGroup& n = *e.N();
    if (static_cast<int>(map.size()) != n.order())
        throw input_error("section table must assign every quotient element");
    for (Elt y = 0; y < n.order(); ++y) {
        if (map[y] < 0 || map[y] >= m.order())
            throw input_error("section value out of range");
        if (e.proj().map[map[y]] != y)
            throw input_error("section of " + n.name(y) + " projects to " +
                              n.name(e.proj().map[map[y]]) + " instead");
    }
    Section s;
    s.normalized = (map[n.identity()] == m.identity());
    s.map = std::move(map);
    return s;
}

Section canonical_section(const Extension& e) {
    const grp::FiniteGroup& m = *e.M();
    const grp::FiniteGroup& n = *e.N();
    std::vector<Elt> map(n.order(), -1);
    map[n.identity()] = m.identity();
    for (Elt x = 0; x < m.order(); ++x) {
        Elt& slot = map[e.proj().map[x]];
        if (slot < 0) slot = x;
    }
    return Section::make(e, std::move(map));
}

std::vector<Section> normalized_sections(const Extension& e) {
    const grp::FiniteGroup& m = *e.M();
    const grp::FiniteGroup& n = *e.N();
    std::vector<std::vector<Elt>> pre(n.order());
    for (Elt x = 0; x < m.order(); ++x) pre[e.proj().map[x]].push_back(x);
    long total = 1;
    for (Elt y = 0; y < n.order(); ++y) {
        if (y == n.identity()) continue;
        total *= static_cast<long>(pre[y].size());
        if (total > 200000)
            throw unsupported_error("too many sections to enumerate");
    }
    std::vector<Section> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<Elt> map(n.order());
    map[n.identity()] = m.identity();
    // Odometer over non-identity slots in element order, most significant
    // first, so the emitted maps are in lexicographic order.
    std::vector<Elt> slots;
    for (Elt y = 0; y < n.order(); ++y)
        if (y != n.identity()) slots.push_back(y);
    std::vector<size_t> digit(slots.size(), 0);
    for (long c = 0; c < total; ++c) {
        for (size_t i = 0; i < slots.size(); ++i) map[slots[i]] = pre[slots[i]][digit[i]];
        out.push_back(Section::make(e, map));
        for (int i = static_cast<int>(slots.size()) - 1; i >= 0; --i) {
            if (++digit[i] < pre[slots[i]].size()) break;
            digit[i] = 0;
        }
    }
    return out;
}

bool is_homomorphic(const Extension& e, const Section& s) {
    const grp::FiniteGroup& m = *e.M();
    const grp::FiniteGroup& n = *e.N();
    for (Elt a = 0; a < n.order(); ++a)
        for (Elt b = 0; b < n.order(); ++b)
            if (m.mul(s.map[a], s.map[b]) != s.map[n.mul(a, b)]) return false;
    return true;
}

namespace {

// n . l through the section, as an L-element.
Elt conj_through(const Extension& e, const std::vector<Elt>& s, Elt n_elt, Elt l_elt) {
    const grp::FiniteGroup& m = *e.M();
    const Elt image = m.conj(s[n_elt], e.incl().map[l_elt]);
    const Elt back = e.in_kernel(image);
    if (back < 0)
        throw internal_error("conjugation left the kernel image; extension data corrupt");
    return back;
}

}  // namespace

FactorSet factor_set(const Extension& e, const Section& s) {
    const grp::FiniteGroup& m = *e.M();
    const grp::FiniteGroup& n = *e.N();
    const grp::FiniteGroup& l = *e.L();
    FactorSet fs;
    fs.section = s.map;
    fs.c.assign(n.order(), std::vector<Elt>(n.order()));
    for (Elt a = 0; a < n.order(); ++a)
        for (Elt b = 0; b < n.order(); ++b) {
            const Elt prod = m.mul(m.mul(s.map[a], s.map[b]), m.inv(s.map[n.mul(a, b)]));
            const Elt back = e.in_kernel(prod);
            if (back < 0)
                throw internal_error("factor-set value escaped the kernel image");
            fs.c[a][b] = back;
        }
    // The twisted associativity identity is forced by construction; verify.
    for (Elt a = 0; a < n.order(); ++a)
        for (Elt b = 0; b < n.order(); ++b)
            for (Elt c = 0; c < n.order(); ++c) {
                const Elt lhs = l.mul(conj_through(e, s.map, a, fs.c[b][c]),
                                      fs.c[a][n.mul(b, c)]);
                const Elt rhs = l.mul(fs.c[a][b], fs.c[n.mul(a, b)][c]);
                if (lhs != rhs)
                    throw internal_error("factor set failed its defining identity");
            }
    return fs;
}

grp::GAction induced_action(const Extension& e, const Section& s) {
    const grp::FiniteGroup& n = *e.N();
    const grp::FiniteGroup& l = *e.L();
    std::vector<std::vector<int>> act(n.order(), std::vector<int>(l.order()));
    for (Elt y = 0; y < n.order(); ++y)
        for (Elt a = 0; a < l.order(); ++a) act[y][a] = conj_through(e, s.map, y, a);
    return grp::GAction::make(e.N(), l.order(), std::move(act));
}

std::optional<std::vector<Elt>> is_coboundary(const Extension& e, const FactorSet& c) {
    const grp::FiniteGroup& n = *e.N();
    const grp::FiniteGroup& l = *e.L();
    // Search in element order with prefix pruning: a constraint (a, b) is
    // checkable once b(a), b(b) and b(ab) are all assigned. For a factor set
    // from a normalized section, b(e) = e is forced by the (e,e) equation.
    std::vector<Elt> bvals(n.order(), -1);
    std::vector<Elt> order;
    for (Elt y = 0; y < n.order(); ++y) order.push_back(y);

    auto consistent = [&](int depth) {
        const Elt just = order[depth];
        for (Elt a = 0; a < n.order(); ++a)
            for (Elt b = 0; b < n.order(); ++b) {
                const Elt ab = n.mul(a, b);
                if (bvals[a] < 0 || bvals[b] < 0 || bvals[ab] < 0) continue;
                if (a != just && b != just && ab != just) continue;
                const Elt want = l.mul(l.mul(bvals[a], conj_through(e, c.section, a, bvals[b])),
                                       l.inv(bvals[ab]));
                if (c.c[a][b] != want) return false;
            }
        return true;
    };

    std::optional<std::vector<Elt>> found;
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == static_cast<int>(order.size())) {
            found = bvals;
            return true;
        }
        for (Elt v = 0; v < l.order(); ++v) {
            bvals[order[depth]] = v;
            if (consistent(depth) && self(self, depth + 1)) return true;
        }
        bvals[order[depth]] = -1;
        return false;
    };
    rec(rec, 0);
    return found;
}

std::vector<std::vector<Elt>> complements(const Extension& e) {
    const grp::FiniteGroup& m = *e.M();
    std::vector<std::vector<Elt>> out;
    for (const auto& k : m.subgroups()) {
        if (static_cast<int>(k.size()) != e.N()->order()) continue;
        bool trivial_meet = true;
        for (Elt x : k)
            if (x != m.identity() && e.in_kernel(x) >= 0) {
                trivial_meet = false;
                break;
            }
        if (trivial_meet) out.push_back(k);
    }
    return out;  // subgroups() is already sorted
}

std::vector<Elt> splitting_from_complement(const Extension& e, const std::vector<Elt>& k) {
    const grp::FiniteGroup& m = *e.M();
    const grp::FiniteGroup& n = *e.N();
    if (!m.contains_subgroup(k)) throw input_error("complement list is not a subgroup");
    std::vector<Elt> s(n.order(), -1);
    for (Elt x : k) {
        Elt& slot = s[e.proj().map[x]];
        if (slot >= 0)
            throw input_error("subgroup is not a complement: projection not injective on it");
        slot = x;
    }
    for (Elt y = 0; y < n.order(); ++y)
        if (s[y] < 0)
            throw input_error("subgroup is not a complement: projection misses " + n.name(y));
    return s;
}

std::vector<std::vector<Elt>> splittings(const Extension& e) {
    std::vector<std::vector<Elt>> out;
    for (const auto& k : complements(e)) out.push_back(splitting_from_complement(e, k));
    std::sort(out.begin(), out.end());
    return out;
}

SplittingClasses splitting_classes(const Extension& e) {
    auto all = splittings(e);
    if (all.empty()) throw input_error("extension does not split");
    const grp::FiniteGroup& m = *e.M();
    const grp::FiniteGroup& l = *e.L();
    std::map<std::vector<Elt>, int> index;
    for (size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);

    SplittingClasses out;
    std::vector<char> seen(all.size(), 0);
    for (size_t i = 0; i < all.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        for (Elt a = 0; a < l.order(); ++a) {
            std::vector<Elt> twisted(all[i].size());
            for (size_t y = 0; y < all[i].size(); ++y)
                twisted[y] = m.conj(e.incl().map[a], all[i][y]);
            auto it = index.find(twisted);
            if (it == index.end())
                throw internal_error("conjugate of a splitting is not a splitting");
            if (!seen[it->second]) {
                seen[it->second] = 1;
                orbit.push_back(it->second);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(orbit);
        out.reps.push_back(all[orbit.front()]);
    }
    return out;
}

H1Result h1(const grp::FiniteGroup& n, const grp::FiniteGroup& l,
            const grp::GAction& act, const ExecPolicy& pol) {
    if (!act.group || !(*act.group == n))
        throw input_error("action group does not match the quotient group");
    if (act.carrier_size != l.order())
        throw input_error("action carrier does not match the coefficient group");
    for (Elt y = 0; y < n.order(); ++y)
        for (Elt a = 0; a < l.order(); ++a)
            for (Elt b = 0; b < l.order(); ++b)
                if (act(y, l.mul(a, b)) != l.mul(act(y, a), act(y, b)))
                    throw input_error("action of " + n.name(y) +
                                      " is not an automorphism of the coefficients");

    std::vector<Elt> free_slots;
    for (Elt y = 0; y < n.order(); ++y)
        if (y != n.identity()) free_slots.push_back(y);
    long total = 1;
    for (size_t i = 0; i < free_slots.size(); ++i) {
        total *= l.order();
        if (total > 2000000) throw unsupported_error("coefficient search space too large");
    }

    auto chunks = map_indexed<std::vector<std::vector<Elt>>>(
        static_cast<int>(total), pol, [&](int code) {
            std::vector<std::vector<Elt>> hit;
            std::vector<Elt> z(n.order());
            z[n.identity()] = l.identity();
            int c = code;
            for (size_t i = 0; i < free_slots.size(); ++i) {
                z[free_slots[i]] = c % l.order();
                c /= l.order();
            }
            for (Elt a = 0; a < n.order(); ++a)
                for (Elt b = 0; b < n.order(); ++b)
                    if (z[n.mul(a, b)] != l.mul(z[a], act(a, z[b]))) return hit;
            hit.push_back(std::move(z));
            return hit;
        });
    std::vector<std::vector<Elt>> crossed;
    for (auto& ch : chunks)
        for (auto& z : ch) crossed.push_back(std::move(z));
    std::sort(crossed.begin(), crossed.end());

    std::map<std::vector<Elt>, int> index;
    for (size_t i = 0; i < crossed.size(); ++i) index[crossed[i]] = static_cast<int>(i);
    H1Result out;
    std::vector<char> seen(crossed.size(), 0);
    for (size_t i = 0; i < crossed.size(); ++i) {
        if (seen[i]) continue;
        out.reps.push_back(crossed[i]);
        for (Elt b = 0; b < l.order(); ++b) {
            std::vector<Elt> tw(crossed[i].size());
            for (Elt y = 0; y < n.order(); ++y)
                tw[y] = l.mul(l.mul(l.inv(b), crossed[i][y]), act(y, b));
            auto it = index.find(tw);
            if (it == index.end())
                throw internal_error("twist of a crossed homomorphism is not one");
            seen[it->second] = 1;
        }
    }
    out.count = static_cast<int>(out.reps.size());
    return out;
}

OuterAction outer_action(const Extension& e) {
    const grp::FiniteGroup& l = *e.L();
    const grp::FiniteGroup& n = *e.N();
    OuterAction out{grp::automorphism_group(l), {}, true};
    const auto s = canonical_section(e);

    std::map<std::vector<Elt>, int> perm_index;
    for (size_t i = 0; i < out.aut.perms.size(); ++i)
        perm_index[out.aut.perms[i]] = static_cast<int>(i);
    auto class_containing = [&](int perm) {
        for (size_t c = 0; c < out.aut.outer_classes.size(); ++c)
            for (int p : out.aut.outer_classes[c])
                if (p == perm) return static_cast<int>(c);
        throw internal_error("automorphism missing from its own coset decomposition");
    };

    std::vector<int> perm_of(n.order());
    out.class_of.resize(n.order());
    for (Elt y = 0; y < n.order(); ++y) {
        std::vector<Elt> p(l.order());
        for (Elt a = 0; a < l.order(); ++a) p[a] = conj_through(e, s.map, y, a);
        auto it = perm_index.find(p);
        if (it == perm_index.end())
            throw internal_error("conjugation is not an automorphism of the kernel");
        perm_of[y] = it->second;
        out.class_of[y] = class_containing(it->second);
    }
    for (Elt a = 0; a < n.order(); ++a)
        for (Elt b = 0; b < n.order(); ++b) {
            std::vector<Elt> comp(l.order());
            for (Elt x = 0; x < l.order(); ++x)
                comp[x] = out.aut.perms[perm_of[a]][out.aut.perms[perm_of[b]][x]];
            if (class_containing(perm_index.at(comp)) != out.class_of[n.mul(a, b)])
                out.homomorphic = false;
        }
    return out;
}

std::vector<Elt> section_difference(const Extension& e, const Section& s1, const Section& s2) {
    const grp::FiniteGroup& m = *e.M();
    const grp::FiniteGroup& n = *e.N();
    std::vector<Elt> b(n.order());
    for (Elt y = 0; y < n.order(); ++y) {
        const Elt diff = m.mul(s2.map[y], m.inv(s1.map[y]));
        const Elt back = e.in_kernel(diff);
        if (back < 0)
            throw internal_error("two sections of the same element differ outside the kernel");
        b[y] = back;
    }
    return b;
}

}  // namespace equilift::ext
