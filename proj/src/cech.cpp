#include "equilift/cech.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace equilift::cech {

namespace {

std::string triple_str(int i, int j, int k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

// Odometer over `digits` slots with `radix` values each; calls body(values)
// for every combination in ascending lexicographic order. Returns false if
// the body ever returns false (early stop).
bool enumerate_tuples(int digits, int radix,
                      const std::function<bool(const std::vector<int>&)>& body) {
    std::vector<int> v(digits, 0);
    while (true) {
        if (!body(v)) return false;
        int pos = digits - 1;
        while (pos >= 0 && v[pos] == radix - 1) v[pos--] = 0;
        if (pos < 0) return true;
        ++v[pos];
    }
}

constexpr long kEnumerationCap = 2000000;

long checked_pow(int radix, int digits) {
    long total = 1;
    for (int i = 0; i < digits; ++i) {
        total *= radix;
        if (total > kEnumerationCap)
            throw unsupported_error("search space exceeds the enumeration cap");
    }
    return total;
}

}  // namespace

NervePtr Nerve::make(int charts, std::vector<std::pair<int, int>> pairs,
                     std::vector<std::array<int, 3>> triples) {
    if (charts < 0) throw input_error("negative chart count");
    for (auto& [a, b] : pairs) {
        if (a == b) throw input_error("pair with repeated chart");
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= charts) throw input_error("pair chart out of range");
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw input_error("duplicate pair");
    for (auto& t : triples) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) throw input_error("triple with repeated chart");
        if (t[0] < 0 || t[2] >= charts) throw input_error("triple chart out of range");
    }
    std::sort(triples.begin(), triples.end());
    if (std::adjacent_find(triples.begin(), triples.end()) != triples.end())
        throw input_error("duplicate triple");

    auto n = std::shared_ptr<Nerve>(new Nerve());
    n->charts_ = charts;
    n->pairs_ = std::move(pairs);
    n->triples_ = std::move(triples);
    n->pair_index_.assign(charts, std::vector<int>(charts, -1));
    for (int p = 0; p < static_cast<int>(n->pairs_.size()); ++p) {
        auto [a, b] = n->pairs_[p];
        n->pair_index_[a][b] = p;
        n->pair_index_[b][a] = p;
    }
    for (const auto& t : n->triples_)
        for (int u = 0; u < 3; ++u)
            for (int v = u + 1; v < 3; ++v)
                if (n->pair_index_[t[u]][t[v]] < 0)
                    throw input_error("triple " + triple_str(t[0], t[1], t[2]) +
                                      " has a 2-subset that is not a pair");
    // spanning forest by BFS from the smallest chart of each component
    n->component_.assign(charts, -1);
    n->parent_.assign(charts, -1);
    std::vector<char> pair_in_tree(n->pairs_.size(), 0);
    for (int start = 0; start < charts; ++start) {
        if (n->component_[start] >= 0) continue;
        const int comp = n->components_++;
        std::vector<int> queue = {start};
        n->component_[start] = comp;
        n->order_.push_back(start);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v = 0; v < charts; ++v) {
                const int p = n->pair_index_[u][v];
                if (p < 0 || n->component_[v] >= 0) continue;
                n->component_[v] = comp;
                n->parent_[v] = u;
                pair_in_tree[p] = 1;
                n->order_.push_back(v);
                queue.push_back(v);
            }
        }
    }
    for (int p = 0; p < static_cast<int>(n->pairs_.size()); ++p)
        (pair_in_tree[p] ? n->tree_pairs_ : n->cotree_pairs_).push_back(p);
    return n;
}

NervePtr Nerve::cycle(int n) {
    if (n < 3) throw input_error("cycle nerve needs at least 3 charts");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
    pairs.push_back({0, n - 1});
    return make(n, std::move(pairs), {});
}

NervePtr Nerve::path(int n) {
    if (n < 1) throw input_error("path nerve needs at least 1 chart");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
    return make(n, std::move(pairs), {});
}

NervePtr Nerve::complete(int n, bool with_triples) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    if (with_triples)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) triples.push_back({i, j, k});
    return make(n, std::move(pairs), std::move(triples));
}

int Nerve::pair_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= charts_ || j >= charts_ || i == j) return -1;
    return pair_index_[i][j];
}

std::vector<std::array<int, 4>> Nerve::four_cliques() const {
    std::set<std::array<int, 3>> tri(triples_.begin(), triples_.end());
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < charts_; ++a)
        for (int b = a + 1; b < charts_; ++b)
            for (int c = b + 1; c < charts_; ++c)
                for (int d = c + 1; d < charts_; ++d)
                    if (tri.count({a, b, c}) && tri.count({a, b, d}) &&
                        tri.count({a, c, d}) && tri.count({b, c, d}))
                        out.push_back({a, b, c, d});
    return out;
}

Chain1 Chain1::make(NervePtr nerve, GroupPtr group, std::vector<Elt> values) {
    if (!nerve || !group) throw input_error("chain needs a nerve and a group");
    if (values.size() != nerve->pairs().size())
        throw input_error("chain needs one value per pair");
    for (Elt v : values)
        if (v < 0 || v >= group->order()) throw input_error("chain value out of range");
    return Chain1{std::move(nerve), std::move(group), std::move(values)};
}

Elt Chain1::g(int i, int j) const {
    if (i == j) return group->identity();
    const int p = nerve->pair_index(i, j);
    if (p < 0) throw input_error("charts do not overlap");
    const Elt v = values[p];
    return i < j ? v : group->inv(v);
}

CocycleCheck is_cocycle(const Chain1& h) {
    CocycleCheck out;
    for (const auto& t : h.nerve->triples()) {
        const Elt defect =
            h.group->mul(h.group->mul(h.g(t[2], t[0]), h.g(t[0], t[1])), h.g(t[1], t[2]));
        if (defect != h.group->identity()) {
            out.ok = false;
            out.failing.push_back(t);
            out.defects.push_back(defect);
        }
    }
    return out;
}

Cocycle1 Cocycle1::make(Chain1 chain) {
    const CocycleCheck check = is_cocycle(chain);
    if (!check.ok) {
        const auto& t = check.failing.front();
        throw input_error("composition rule fails on triple " +
                          triple_str(t[0], t[1], t[2]) + " with defect " +
                          chain.group->name(check.defects.front()));
    }
    return Cocycle1{std::move(chain)};
}

Cocycle2 Cocycle2::make(NervePtr nerve, grp::FiniteGroup band, std::vector<Elt> values) {
    if (!nerve) throw input_error("degree-2 data needs a nerve");
    if (!band.is_abelian()) throw input_error("band must be abelian");
    if (values.size() != nerve->triples().size())
        throw input_error("one value per triple required");
    for (Elt v : values)
        if (v < 0 || v >= band.order()) throw input_error("value out of range");
    Cocycle2 c{std::move(nerve), std::move(band), std::move(values)};
    for (const auto& q : c.nerve->four_cliques()) {
        // alternating sum over the four faces, multiplicative notation
        const Elt d = c.band.mul(
            c.band.mul(c.c(q[1], q[2], q[3]), c.band.inv(c.c(q[0], q[2], q[3]))),
            c.band.mul(c.c(q[0], q[1], q[3]), c.band.inv(c.c(q[0], q[1], q[2]))));
        if (d != c.band.identity()) {
            std::ostringstream os;
            os << "degree-2 coboundary does not vanish on clique (" << q[0] << ","
               << q[1] << "," << q[2] << "," << q[3] << ")";
            throw input_error(os.str());
        }
    }
    return c;
}

Elt Cocycle2::c(int i, int j, int k) const {
    std::array<int, 3> t = {i, j, k};
    // parity of the permutation sorting t
    int swaps = 0;
    if (t[0] > t[1]) { std::swap(t[0], t[1]); ++swaps; }
    if (t[1] > t[2]) { std::swap(t[1], t[2]); ++swaps; }
    if (t[0] > t[1]) { std::swap(t[0], t[1]); ++swaps; }
    const auto& list = nerve->triples();
    const auto it = std::lower_bound(list.begin(), list.end(), t);
    if (it == list.end() || *it != t) throw input_error("not a triple of the nerve");
    const Elt v = values[static_cast<int>(it - list.begin())];
    return swaps % 2 == 0 ? v : band.inv(v);
}

TwoCocycle two_cocycle_of_chain(const Chain1& h, const std::vector<Elt>& band_elems) {
    const grp::FiniteGroup& g = *h.group;
    if (!g.contains_subgroup(band_elems))
        throw input_error("band element list is not a subgroup");
    grp::SubgroupGroup band = grp::subgroup_as_group(g, band_elems);
    if (!band.group.is_abelian()) throw input_error("band must be abelian");
    std::vector<Elt> values;
    values.reserve(h.nerve->triples().size());
    for (const auto& t : h.nerve->triples()) {
        const Elt d = g.mul(g.mul(h.g(t[2], t[0]), h.g(t[0], t[1])), h.g(t[1], t[2]));
        const int idx = band.index_in_sub[d];
        if (idx < 0)
            throw input_error("band mismatch: defect " + g.name(d) + " on triple " +
                              triple_str(t[0], t[1], t[2]) + " lies outside the band");
        values.push_back(idx);
    }
    Cocycle2 c = Cocycle2::make(h.nerve, band.group, std::move(values));
    return TwoCocycle{std::move(c), std::move(band)};
}

namespace {

// Propagates a candidate gauge along the spanning forest from per-component
// root values, then verifies every pair. Used by cohomologous1 / gauge_group.
bool gauge_from_roots(const Cocycle1& a, const Cocycle1& b,
                      const std::vector<Elt>& root_value, std::vector<Elt>& lambda) {
    const Nerve& n = *a.nerve();
    const grp::FiniteGroup& h = *a.group();
    lambda.assign(n.charts(), -1);
    for (int chart : n.bfs_order()) {
        const int p = n.tree_parent()[chart];
        if (p < 0) {
            lambda[chart] = root_value[n.component_of(chart)];
        } else {
            // b_pc = l_p a_pc l_c^-1  =>  l_c = b_pc^-1 l_p a_pc
            lambda[chart] =
                h.mul(h.mul(h.inv(b.g(p, chart)), lambda[p]), a.g(p, chart));
        }
    }
    for (const auto& [i, j] : n.pairs())
        if (b.g(i, j) != h.mul(h.mul(lambda[i], a.g(i, j)), h.inv(lambda[j])))
            return false;
    return true;
}

}  // namespace

namespace {

// Smallest root value for `comp` whose forest propagation turns a into b on
// that component, or -1. `lambda` receives the component's gauge values.
Elt solve_component(const Cocycle1& a, const Cocycle1& b, int comp,
                    std::vector<Elt>& lambda) {
    const Nerve& n = *a.nerve();
    const grp::FiniteGroup& h = *a.group();
    for (Elt r = 0; r < h.order(); ++r) {
        for (int chart : n.bfs_order()) {
            if (n.component_of(chart) != comp) continue;
            const int par = n.tree_parent()[chart];
            // b_pc = l_p a_pc l_c^-1  =>  l_c = b_pc^-1 l_p a_pc
            lambda[chart] = par < 0 ? r
                                    : h.mul(h.mul(h.inv(b.g(par, chart)), lambda[par]),
                                            a.g(par, chart));
        }
        bool ok = true;
        for (const auto& [i, j] : n.pairs()) {
            if (n.component_of(i) != comp) continue;
            if (b.g(i, j) != h.mul(h.mul(lambda[i], a.g(i, j)), h.inv(lambda[j]))) {
                ok = false;
                break;
            }
        }
        if (ok) return r;
    }
    return -1;
}

}  // namespace

std::optional<std::vector<Elt>> cohomologous1(const Cocycle1& a, const Cocycle1& b) {
    if (!(*a.nerve() == *b.nerve())) throw input_error("cocycles live on different nerves");
    if (!(*a.group() == *b.group())) throw input_error("cocycles have different groups");
    const Nerve& n = *a.nerve();
    std::vector<Elt> lambda(n.charts(), -1);
    for (int comp = 0; comp < n.components(); ++comp)
        if (solve_component(a, b, comp, lambda) < 0) return std::nullopt;
    return lambda;
}

std::vector<std::vector<Elt>> gauge_group(const Cocycle1& c) {
    const Nerve& n = *c.nerve();
    const grp::FiniteGroup& h = *c.group();
    // per component: all root values whose propagation fixes the component
    std::vector<std::vector<Elt>> comp_roots(n.components());
    for (int comp = 0; comp < n.components(); ++comp) {
        for (Elt r = 0; r < h.order(); ++r) {
            std::vector<Elt> l(n.charts(), -1);
            bool ok = true;
            for (int chart : n.bfs_order()) {
                if (n.component_of(chart) != comp) continue;
                const int par = n.tree_parent()[chart];
                l[chart] = par < 0 ? r
                                   : h.mul(h.mul(h.inv(c.g(par, chart)), l[par]),
                                           c.g(par, chart));
            }
            for (const auto& [i, j] : n.pairs()) {
                if (n.component_of(i) != comp) continue;
                if (c.g(i, j) != h.mul(h.mul(l[i], c.g(i, j)), h.inv(l[j]))) {
                    ok = false;
                    break;
                }
            }
            if (ok) comp_roots[comp].push_back(r);
        }
    }
    // cartesian product of the per-component solutions
    std::vector<std::vector<Elt>> out;
    std::vector<int> pick(n.components(), 0);
    while (true) {
        std::vector<Elt> roots(n.components());
        for (int comp = 0; comp < n.components(); ++comp)
            roots[comp] = comp_roots[comp][pick[comp]];
        std::vector<Elt> lam;
        if (!gauge_from_roots(c, c, roots, lam))
            throw internal_error("gauge propagation disagreed with itself");
        out.push_back(std::move(lam));
        int pos = n.components() - 1;
        while (pos >= 0 &&
               pick[pos] == static_cast<int>(comp_roots[pos].size()) - 1)
            pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Elt holonomy(const Cocycle1& c, const std::vector<int>& cycle) {
    if (cycle.empty()) throw input_error("empty cycle");
    const grp::FiniteGroup& h = *c.group();
    Elt acc = h.identity();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int from = cycle[i];
        const int to = cycle[(i + 1) % cycle.size()];
        acc = h.mul(acc, c.g(from, to));
    }
    return acc;
}

std::vector<Elt> holonomy_group(const Cocycle1& c, int base) {
    const Nerve& n = *c.nerve();
    const grp::FiniteGroup& h = *c.group();
    if (base < 0 || base >= n.charts()) throw input_error("base chart out of range");
    const int comp = n.component_of(base);
    // transport from the component root to each chart along the forest
    std::vector<Elt> transport(n.charts(), -1);
    for (int chart : n.bfs_order()) {
        if (n.component_of(chart) != comp) continue;
        const int par = n.tree_parent()[chart];
        transport[chart] = par < 0 ? h.identity()
                                   : h.mul(transport[par], c.g(par, chart));
    }
    std::vector<Elt> gens;
    for (int p : n.cotree_pairs()) {
        const auto& [u, v] = n.pairs()[p];
        if (n.component_of(u) != comp) continue;
        gens.push_back(h.mul(h.mul(transport[u], c.g(u, v)), h.inv(transport[v])));
    }
    return h.subgroup_closure(gens);
}

H1Classes h1_classes(NervePtr nptr, GroupPtr hptr, const ExecPolicy& pol) {
    const Nerve& n = *nptr;
    const grp::FiniteGroup& h = *hptr;
    const auto& cotree = n.cotree_pairs();
    const int f = static_cast<int>(cotree.size());
    const long total = checked_pow(h.order(), f);

    // gauge-fixed enumeration: forest transitions = e, free values on the
    // complement, triple conditions checked on the assembled chain
    const auto decode = [&](long code) {
        std::vector<Elt> vals(n.pairs().size(), h.identity());
        for (int d = f - 1; d >= 0; --d) {
            vals[cotree[d]] = static_cast<Elt>(code % h.order());
            code /= h.order();
        }
        return vals;
    };
    std::vector<char> good =
        map_indexed<char>(static_cast<std::size_t>(total), pol, [&](std::size_t code) {
            Chain1 ch{nptr, hptr, decode(static_cast<long>(code))};
            return static_cast<char>(is_cocycle(ch).ok);
        });

    // residual gauge after forest fixing: one constant per component,
    // conjugating every free value
    std::set<std::vector<Elt>> canon_set;
    std::vector<std::vector<Elt>> reps_vals;
    for (long code = 0; code < total; ++code) {
        if (!good[static_cast<std::size_t>(code)]) continue;
        const std::vector<Elt> vals = decode(code);
        std::vector<Elt> best;
        std::vector<int> pick(n.components(), 0);
        while (true) {
            std::vector<Elt> conj(vals);
            for (int d = 0; d < f; ++d) {
                const auto& [i, j] = n.pairs()[cotree[d]];
                const Elt lam = static_cast<Elt>(pick[n.component_of(i)]);
                conj[cotree[d]] = h.conj(lam, vals[cotree[d]]);
            }
            if (best.empty() || conj < best) best = std::move(conj);
            int pos = n.components() - 1;
            while (pos >= 0 && pick[pos] == h.order() - 1) pick[pos--] = 0;
            if (pos < 0) break;
            ++pick[pos];
        }
        if (canon_set.insert(best).second) reps_vals.push_back(std::move(best));
    }
    std::sort(reps_vals.begin(), reps_vals.end());
    H1Classes out;
    out.count = static_cast<int>(reps_vals.size());
    for (auto& v : reps_vals)
        out.reps.push_back(Cocycle1::make(Chain1::make(nptr, hptr, std::move(v))));
    return out;
}

int TotalSpace::point_id(int region, Elt y) const {
    return region * group->order() + y;
}

int TotalSpace::region_of(int point) const { return point / group->order(); }

Elt TotalSpace::fiber_coord(int point) const { return point % group->order(); }

std::vector<int> TotalSpace::region_charts(int region) const {
    if (region < nerve->charts()) return {region};
    const auto& [i, j] = nerve->pairs()[region - nerve->charts()];
    return {i, j};
}

int TotalSpace::gluing_orbit_count() const {
    std::vector<int> parent(points);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    const int np = static_cast<int>(nerve->pairs().size());
    for (int p = 0; p < np; ++p)
        for (Elt y = 0; y < group->order(); ++y) {
            const int self = point_id(nerve->charts() + p, y);
            unite(self, attach_first[p][y]);
            unite(self, attach_second[p][y]);
        }
    int roots = 0;
    for (int x = 0; x < points; ++x)
        if (find(x) == x) ++roots;
    return roots;
}

TotalSpace glue(const Cocycle1& c) {
    TotalSpace ts;
    ts.nerve = c.nerve();
    ts.group = c.group();
    const grp::FiniteGroup& h = *ts.group;
    const int np = static_cast<int>(ts.nerve->pairs().size());
    ts.regions = ts.nerve->charts() + np;
    ts.points = ts.regions * h.order();
    ts.attach_first.assign(np, std::vector<int>(h.order()));
    ts.attach_second.assign(np, std::vector<int>(h.order()));
    for (int p = 0; p < np; ++p) {
        const auto& [i, j] = ts.nerve->pairs()[p];
        for (Elt y = 0; y < h.order(); ++y) {
            ts.attach_first[p][y] = ts.point_id(i, h.mul(c.g(i, j), y));
            ts.attach_second[p][y] = ts.point_id(j, y);
        }
    }
    std::vector<std::vector<int>> act(h.order(), std::vector<int>(ts.points));
    for (Elt a = 0; a < h.order(); ++a)
        for (int pt = 0; pt < ts.points; ++pt)
            act[a][pt] = ts.point_id(ts.region_of(pt), h.mul(ts.fiber_coord(pt), a));
    ts.action = grp::RightAction::make(ts.group, ts.points, std::move(act));
    if (!ts.action.is_free())
        throw internal_error("glued action lost freeness");
    return ts;
}

Cocycle1 extract_transitions(const TotalSpace& ts) {
    const grp::FiniteGroup& h = *ts.group;
    const int np = static_cast<int>(ts.nerve->pairs().size());
    std::vector<Elt> values(np);
    for (int p = 0; p < np; ++p) {
        const auto& [i, j] = ts.nerve->pairs()[p];
        const Elt ai = ts.fiber_coord(ts.attach_first[p][h.identity()]);
        const Elt aj = ts.fiber_coord(ts.attach_second[p][h.identity()]);
        if (ts.region_of(ts.attach_first[p][h.identity()]) != i ||
            ts.region_of(ts.attach_second[p][h.identity()]) != j)
            throw input_error("attachment lands in the wrong chart region");
        const Elt gij = h.mul(ai, h.inv(aj));
        // the comparison must be the same H-equivariant shift on every fiber point
        for (Elt y = 0; y < h.order(); ++y) {
            if (ts.fiber_coord(ts.attach_first[p][y]) !=
                h.mul(gij, ts.fiber_coord(ts.attach_second[p][y])))
                throw input_error("attachments are not H-equivariant");
        }
        values[p] = gij;
    }
    return Cocycle1::make(Chain1::make(ts.nerve, ts.group, std::move(values)));
}

H2Classes h2_classes(NervePtr nptr, const grp::FiniteGroup& band, const ExecPolicy& pol) {
    if (!band.is_abelian())
        throw unsupported_error("degree-2 classification needs an abelian band");
    const Nerve& n = *nptr;
    const int t = static_cast<int>(n.triples().size());
    const int np = static_cast<int>(n.pairs().size());
    (void)pol;  // search spaces in scope are small; kept for interface parity

    // all valid degree-2 cocycles
    std::vector<std::vector<Elt>> zs;
    checked_pow(band.order(), t);
    enumerate_tuples(t, band.order(), [&](const std::vector<int>& v) {
        std::vector<Elt> vals(v.begin(), v.end());
        try {
            Cocycle2::make(nptr, band, vals);
        } catch (const input_error&) {
            return true;
        }
        zs.push_back(std::move(vals));
        return true;
    });

    // coboundaries: defect vectors of band-valued pair cochains
    std::set<std::vector<Elt>> deltas;
    checked_pow(band.order(), np);
    enumerate_tuples(np, band.order(), [&](const std::vector<int>& mu) {
        auto mu_at = [&](int i, int j) -> Elt {
            const int p = n.pair_index(i, j);
            return i < j ? mu[p] : band.inv(mu[p]);
        };
        std::vector<Elt> d(t);
        for (int ti = 0; ti < t; ++ti) {
            const auto& tr = n.triples()[ti];
            d[ti] = band.mul(band.mul(mu_at(tr[2], tr[0]), mu_at(tr[0], tr[1])),
                             mu_at(tr[1], tr[2]));
        }
        deltas.insert(std::move(d));
        return true;
    });

    if (!zs.empty() && zs.size() % deltas.size() != 0)
        throw internal_error("coboundary group does not divide the cocycle group");

    std::set<std::vector<Elt>> canon_set;
    std::vector<std::vector<Elt>> reps_vals;
    for (const auto& z : zs) {
        std::vector<Elt> best;
        for (const auto& d : deltas) {
            std::vector<Elt> w(t);
            for (int ti = 0; ti < t; ++ti) w[ti] = band.mul(z[ti], d[ti]);
            if (best.empty() || w < best) best = std::move(w);
        }
        if (t == 0) best = {};
        if (canon_set.insert(best).second) reps_vals.push_back(best);
    }
    if (t == 0 && reps_vals.empty()) reps_vals.push_back({});
    std::sort(reps_vals.begin(), reps_vals.end());
    H2Classes out;
    out.count = static_cast<int>(reps_vals.size());
    for (auto& v : reps_vals) out.reps.push_back(Cocycle2::make(nptr, band, v));
    return out;
}

std::optional<std::vector<Elt>> band_correction(const Chain1& h,
                                                const std::vector<Elt>& band_elems) {
    const grp::FiniteGroup& g = *h.group;
    if (!g.contains_subgroup(band_elems))
        throw input_error("band element list is not a subgroup");
    for (Elt a : band_elems)
        for (Elt b : band_elems)
            if (g.mul(a, b) != g.mul(b, a))
                throw input_error("band must be abelian");
    std::vector<Elt> sorted_band = band_elems;
    std::sort(sorted_band.begin(), sorted_band.end());
    const int np = static_cast<int>(h.nerve->pairs().size());
    checked_pow(static_cast<int>(sorted_band.size()), np);
    std::optional<std::vector<Elt>> found;
    enumerate_tuples(np, static_cast<int>(sorted_band.size()),
                     [&](const std::vector<int>& pick) {
                         std::vector<Elt> vals(np);
                         std::vector<Elt> mu(np);
                         for (int p = 0; p < np; ++p) {
                             mu[p] = sorted_band[pick[p]];
                             vals[p] = g.mul(h.values[p], mu[p]);
                         }
                         Chain1 corrected{h.nerve, h.group, std::move(vals)};
                         if (is_cocycle(corrected).ok) {
                             found = std::move(mu);
                             return false;
                         }
                         return true;
                     });
    return found;
}

std::optional<std::vector<Elt>> two_coboundary_witness(const Cocycle2& c) {
    const Nerve& n = *c.nerve;
    const grp::FiniteGroup& band = c.band;
    const int np = static_cast<int>(n.pairs().size());
    const int t = static_cast<int>(n.triples().size());
    checked_pow(band.order(), np);
    std::optional<std::vector<Elt>> found;
    enumerate_tuples(np, band.order(), [&](const std::vector<int>& mu) {
        auto mu_at = [&](int i, int j) -> Elt {
            const int p = n.pair_index(i, j);
            return i < j ? mu[p] : band.inv(mu[p]);
        };
        for (int ti = 0; ti < t; ++ti) {
            const auto& tr = n.triples()[ti];
            const Elt d = band.mul(band.mul(mu_at(tr[2], tr[0]), mu_at(tr[0], tr[1])),
                                   mu_at(tr[1], tr[2]));
            if (d != c.values[ti]) return true;
        }
        found = std::vector<Elt>(mu.begin(), mu.end());
        return false;
    });
    return found;
}

}  // namespace equilift::cech
