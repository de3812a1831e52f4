#include "equilift/fincat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace equilift::fincat {

FiniteCategory FiniteCategory::make(int objects,
                                    std::vector<int> src, std::vector<int> tgt,
                                    std::vector<int> identities,
                                    std::vector<std::vector<int>> compose) {
    if (objects < 0) throw input_error("negative object count");
    const int m = static_cast<int>(src.size());
    if (static_cast<int>(tgt.size()) != m)
        throw input_error("src/tgt length mismatch");
    for (int f = 0; f < m; ++f)
        if (src[f] < 0 || src[f] >= objects || tgt[f] < 0 || tgt[f] >= objects)
            throw input_error("morphism endpoint out of range");
    if (static_cast<int>(identities.size()) != objects)
        throw input_error("one identity per object required");
    for (int x = 0; x < objects; ++x) {
        const int e = identities[x];
        if (e < 0 || e >= m || src[e] != x || tgt[e] != x)
            throw input_error("identity morphism mistyped");
    }
    if (static_cast<int>(compose.size()) != m)
        throw input_error("composition table has wrong height");
    for (int g = 0; g < m; ++g) {
        if (static_cast<int>(compose[g].size()) != m)
            throw input_error("composition table row has wrong length");
        for (int f = 0; f < m; ++f) {
            const bool composable = tgt[f] == src[g];
            const int c = compose[g][f];
            if (!composable) {
                if (c != -1) throw input_error("composite defined for non-composable pair");
                continue;
            }
            if (c < 0 || c >= m)
                throw input_error("composite missing for composable pair");
            if (src[c] != src[f] || tgt[c] != tgt[g])
                throw input_error("composite mistyped");
        }
    }
    for (int f = 0; f < m; ++f) {
        if (compose[f][identities[src[f]]] != f || compose[identities[tgt[f]]][f] != f)
            throw input_error("identity laws fail");
    }
    for (int h = 0; h < m; ++h)
        for (int g = 0; g < m; ++g) {
            if (tgt[g] != src[h]) continue;
            for (int f = 0; f < m; ++f) {
                if (tgt[f] != src[g]) continue;
                if (compose[compose[h][g]][f] != compose[h][compose[g][f]])
                    throw input_error("composition is not associative");
            }
        }
    FiniteCategory c;
    c.objects_ = objects;
    c.src_ = std::move(src);
    c.tgt_ = std::move(tgt);
    c.identity_ = std::move(identities);
    c.compose_ = std::move(compose);
    return c;
}

FiniteCategory FiniteCategory::poset(int n, const std::vector<std::pair<int, int>>& leq) {
    if (n < 0) throw input_error("negative object count");
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) rel[i][i] = 1;
    for (auto [a, b] : leq) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw input_error("relation endpoint out of range");
        rel[a][b] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rel[i][j] && rel[j][i])
                throw input_error("relation is not antisymmetric: " + std::to_string(i) +
                                  " and " + std::to_string(j) + " are mutually related");
    std::vector<int> src, tgt;
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (rel[a][b]) {
                index[a][b] = static_cast<int>(src.size());
                src.push_back(a);
                tgt.push_back(b);
            }
    const int m = static_cast<int>(src.size());
    std::vector<int> identities(n);
    for (int x = 0; x < n; ++x) identities[x] = index[x][x];
    std::vector<std::vector<int>> compose(m, std::vector<int>(m, -1));
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f)
            if (tgt[f] == src[g]) compose[g][f] = index[src[f]][tgt[g]];
    return make(n, std::move(src), std::move(tgt), std::move(identities),
                std::move(compose));
}

int FiniteCategory::compose(int g, int f) const {
    if (!composable(g, f)) return -1;
    return compose_[g][f];
}

std::vector<int> FiniteCategory::morphisms_into(int x) const {
    std::vector<int> out;
    for (int f = 0; f < morphisms(); ++f)
        if (tgt_[f] == x) out.push_back(f);
    return out;
}

std::vector<int> Sieve::members() const {
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(member.size()); ++f)
        if (member[f]) out.push_back(f);
    return out;
}

bool is_sieve(const FiniteCategory& cat, const Sieve& s) {
    if (s.base < 0 || s.base >= cat.objects()) return false;
    if (static_cast<int>(s.member.size()) != cat.morphisms()) return false;
    for (int f = 0; f < cat.morphisms(); ++f) {
        if (!s.member[f]) continue;
        if (cat.tgt(f) != s.base) return false;
        for (int g = 0; g < cat.morphisms(); ++g)
            if (cat.composable(f, g) && !s.member[cat.compose(f, g)]) return false;
    }
    return true;
}

Sieve sieve_generated(const FiniteCategory& cat, int base, const std::vector<int>& gens) {
    if (base < 0 || base >= cat.objects()) throw input_error("sieve base out of range");
    Sieve s;
    s.base = base;
    s.member.assign(cat.morphisms(), 0);
    for (int f : gens) {
        if (f < 0 || f >= cat.morphisms() || cat.tgt(f) != base)
            throw input_error("sieve generator does not land in the base object");
        s.member[f] = 1;
        for (int g = 0; g < cat.morphisms(); ++g)
            if (cat.composable(f, g)) s.member[cat.compose(f, g)] = 1;
    }
    return s;
}

Sieve maximal_sieve(const FiniteCategory& cat, int base) {
    if (base < 0 || base >= cat.objects()) throw input_error("sieve base out of range");
    Sieve s;
    s.base = base;
    s.member.assign(cat.morphisms(), 0);
    for (int f = 0; f < cat.morphisms(); ++f)
        if (cat.tgt(f) == base) s.member[f] = 1;
    return s;
}

Sieve pullback_sieve(const FiniteCategory& cat, const Sieve& r, int f) {
    if (f < 0 || f >= cat.morphisms() || cat.tgt(f) != r.base)
        throw input_error("pullback morphism does not land in the sieve's base");
    Sieve s;
    s.base = cat.src(f);
    s.member.assign(cat.morphisms(), 0);
    for (int g = 0; g < cat.morphisms(); ++g)
        if (cat.tgt(g) == s.base && r.member[cat.compose(f, g)]) s.member[g] = 1;
    return s;
}

std::vector<Sieve> all_sieves_on(const FiniteCategory& cat, int base, int limit) {
    const std::vector<int> into = cat.morphisms_into(base);
    if (static_cast<int>(into.size()) > limit) {
        std::ostringstream os;
        os << "object " << base << " receives " << into.size()
           << " morphisms; sieve enumeration capped at " << limit;
        throw unsupported_error(os.str());
    }
    std::vector<Sieve> out;
    const std::size_t k = into.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Sieve s;
        s.base = base;
        s.member.assign(cat.morphisms(), 0);
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) s.member[into[i]] = 1;
        if (is_sieve(cat, s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Topology::covers_with(int x, const Sieve& s) const {
    const auto& list = covers[x];
    return std::find(list.begin(), list.end(), s) != list.end();
}

void Topology::validate(const FiniteCategory& cat) const {
    if (static_cast<int>(covers.size()) != cat.objects())
        throw input_error("topology must list covers for every object");
    for (int x = 0; x < cat.objects(); ++x)
        for (const Sieve& s : covers[x]) {
            if (s.base != x) throw input_error("covering sieve listed under wrong object");
            if (!is_sieve(cat, s)) throw input_error("covering family is not a sieve");
        }
}

std::vector<SiteIssue> check_topology(const FiniteCategory& cat, const Topology& j) {
    j.validate(cat);
    std::vector<SiteIssue> issues;
    // maximality: the sieve of all morphisms into x must cover x
    for (int x = 0; x < cat.objects(); ++x) {
        const Sieve max = maximal_sieve(cat, x);
        if (!j.covers_with(x, max)) {
            SiteIssue is;
            is.axiom = "maximality";
            is.object = x;
            is.sieve = max.members();
            is.detail = "maximal sieve is not listed as covering";
            issues.push_back(std::move(is));
        }
    }
    // stability: pullback of a covering sieve along any morphism covers
    for (int x = 0; x < cat.objects(); ++x)
        for (const Sieve& r : j.covers[x])
            for (int f = 0; f < cat.morphisms(); ++f) {
                if (cat.tgt(f) != x) continue;
                const Sieve pulled = pullback_sieve(cat, r, f);
                if (!j.covers_with(cat.src(f), pulled)) {
                    SiteIssue is;
                    is.axiom = "stability";
                    is.object = x;
                    is.sieve = r.members();
                    is.morphism = f;
                    std::ostringstream os;
                    os << "pullback along morphism " << f << " (from object "
                       << cat.src(f) << ") is not a covering sieve";
                    is.detail = os.str();
                    issues.push_back(std::move(is));
                }
            }
    // local character: a sieve that some covering sieve certifies locally
    // must itself cover
    for (int x = 0; x < cat.objects(); ++x) {
        for (const Sieve& s : all_sieves_on(cat, x)) {
            if (j.covers_with(x, s)) continue;
            for (const Sieve& r : j.covers[x]) {
                bool locally = true;
                for (int f : r.members())
                    if (!j.covers_with(cat.src(f), pullback_sieve(cat, s, f))) {
                        locally = false;
                        break;
                    }
                if (locally) {
                    SiteIssue is;
                    is.axiom = "local-character";
                    is.object = x;
                    is.sieve = s.members();
                    std::ostringstream os;
                    os << "sieve is covering locally on a listed cover of object "
                       << x << " but is not itself listed";
                    is.detail = os.str();
                    issues.push_back(std::move(is));
                    break;
                }
            }
        }
    }
    return issues;
}

SetPresheaf SetPresheaf::make(const FiniteCategory& cat, std::vector<int> sizes,
                              std::vector<std::vector<int>> restrict_along) {
    if (static_cast<int>(sizes.size()) != cat.objects())
        throw input_error("presheaf must size every object");
    for (int v : sizes)
        if (v < 0) throw input_error("negative presheaf fiber size");
    if (static_cast<int>(restrict_along.size()) != cat.morphisms())
        throw input_error("presheaf must restrict along every morphism");
    for (int f = 0; f < cat.morphisms(); ++f) {
        const auto& row = restrict_along[f];
        if (static_cast<int>(row.size()) != sizes[cat.tgt(f)])
            throw input_error("restriction map has wrong domain size");
        for (int v : row)
            if (v < 0 || v >= sizes[cat.src(f)])
                throw input_error("restriction value out of range");
    }
    for (int x = 0; x < cat.objects(); ++x) {
        const auto& row = restrict_along[cat.identity(x)];
        for (int v = 0; v < sizes[x]; ++v)
            if (row[v] != v) throw input_error("identity must restrict trivially");
    }
    for (int g = 0; g < cat.morphisms(); ++g)
        for (int f = 0; f < cat.morphisms(); ++f) {
            if (!cat.composable(g, f)) continue;
            const int gf = cat.compose(g, f);
            for (int v = 0; v < sizes[cat.tgt(g)]; ++v)
                if (restrict_along[gf][v] != restrict_along[f][restrict_along[g][v]])
                    throw input_error("restriction maps are not functorial");
        }
    SetPresheaf p;
    p.sizes = std::move(sizes);
    p.restrict_along = std::move(restrict_along);
    return p;
}

SetPresheaf SetPresheaf::representable(const FiniteCategory& cat, int z) {
    if (z < 0 || z >= cat.objects()) throw input_error("representing object out of range");
    // elements of P(x) = morphisms x -> z, listed in morphism-id order
    std::vector<std::vector<int>> elems(cat.objects());
    for (int f = 0; f < cat.morphisms(); ++f)
        if (cat.tgt(f) == z) elems[cat.src(f)].push_back(f);
    std::vector<int> pos(cat.morphisms(), -1);
    for (int x = 0; x < cat.objects(); ++x)
        for (int i = 0; i < static_cast<int>(elems[x].size()); ++i)
            pos[elems[x][i]] = i;
    std::vector<int> sizes(cat.objects());
    for (int x = 0; x < cat.objects(); ++x) sizes[x] = static_cast<int>(elems[x].size());
    std::vector<std::vector<int>> restr(cat.morphisms());
    for (int g = 0; g < cat.morphisms(); ++g) {
        const int a = cat.src(g), b = cat.tgt(g);
        restr[g].resize(sizes[b]);
        for (int i = 0; i < sizes[b]; ++i) {
            const int h = elems[b][i];           // h : b -> z
            restr[g][i] = pos[cat.compose(h, g)];  // h o g : a -> z
        }
    }
    return make(cat, std::move(sizes), std::move(restr));
}

SetPresheaf SetPresheaf::constant(const FiniteCategory& cat, int k) {
    if (k < 0) throw input_error("negative constant presheaf size");
    std::vector<int> sizes(cat.objects(), k);
    std::vector<int> id(k);
    for (int i = 0; i < k; ++i) id[i] = i;
    std::vector<std::vector<int>> restr(cat.morphisms(), id);
    return make(cat, std::move(sizes), std::move(restr));
}

namespace {

// Enumerates matching families for sieve r by backtracking over its members
// in sorted order; calls sink(family). A family is compatible when for every
// member f and every arrow g into src(f), the element at f o g equals the
// restriction of the element at f along g.
void for_each_matching_family(const FiniteCategory& cat, const SetPresheaf& p,
                              const Sieve& r,
                              const std::function<void(const std::vector<int>&)>& sink) {
    const std::vector<int> mem = r.members();
    const int k = static_cast<int>(mem.size());
    std::vector<int> slot(cat.morphisms(), -1);
    for (int i = 0; i < k; ++i) slot[mem[i]] = i;
    std::vector<int> fam(k, -1);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            sink(fam);
            return;
        }
        const int f = mem[i];
        for (int v = 0; v < p.sizes[cat.src(f)]; ++v) {
            fam[i] = v;
            bool ok = true;
            // constraints with f on the left: fam[f o g] = P(g)(fam[f])
            for (int g = 0; g < cat.morphisms() && ok; ++g) {
                if (!cat.composable(f, g)) continue;
                const int jslot = slot[cat.compose(f, g)];  // in sieve by closure
                if (jslot <= i && fam[jslot] != p.restrict_elt(g, v)) ok = false;
            }
            // constraints with f on the right: fam[f] = P(g)(fam[fp]) when fp o g = f
            for (int jprev = 0; jprev < i && ok; ++jprev) {
                const int fp = mem[jprev];
                for (int g = 0; g < cat.morphisms() && ok; ++g)
                    if (cat.composable(fp, g) && cat.compose(fp, g) == f &&
                        p.restrict_elt(g, fam[jprev]) != v)
                        ok = false;
            }
            if (ok) self(self, i + 1);
        }
        fam[i] = -1;
    };
    rec(rec, 0);
}

}  // namespace

std::vector<SheafIssue> check_sheaf(const FiniteCategory& cat, const Topology& j,
                                    const SetPresheaf& p) {
    j.validate(cat);
    std::vector<SheafIssue> issues;
    for (int x = 0; x < cat.objects(); ++x) {
        for (const Sieve& r : j.covers[x]) {
            const std::vector<int> mem = r.members();
            // uniqueness: two sections of P(x) agreeing on the whole sieve
            for (int s = 0; s < p.sizes[x]; ++s)
                for (int t = s + 1; t < p.sizes[x]; ++t) {
                    bool agree = true;
                    for (int f : mem)
                        if (p.restrict_elt(f, s) != p.restrict_elt(f, t)) {
                            agree = false;
                            break;
                        }
                    if (agree) {
                        SheafIssue is;
                        is.object = x;
                        is.sieve = mem;
                        is.kind = "uniqueness";
                        is.sections = {s, t};
                        std::ostringstream os;
                        os << "sections " << s << " and " << t << " of object " << x
                           << " restrict identically over the sieve";
                        is.detail = os.str();
                        issues.push_back(std::move(is));
                    }
                }
            // existence: a matching family with no amalgamation
            for_each_matching_family(cat, p, r, [&](const std::vector<int>& fam) {
                for (int s = 0; s < p.sizes[x]; ++s) {
                    bool glues = true;
                    for (int i = 0; i < static_cast<int>(mem.size()); ++i)
                        if (p.restrict_elt(mem[i], s) != fam[i]) {
                            glues = false;
                            break;
                        }
                    if (glues) return;
                }
                SheafIssue is;
                is.object = x;
                is.sieve = mem;
                is.kind = "existence";
                is.family = fam;
                std::ostringstream os;
                os << "matching family over object " << x << " has no amalgamation";
                is.detail = os.str();
                issues.push_back(std::move(is));
            });
        }
    }
    return issues;
}

}  // namespace equilift::fincat
