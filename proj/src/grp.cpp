#include "equilift/grp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "equilift/parallel.hpp"

namespace equilift::grp {

namespace {

std::string default_display(int n) {
    std::ostringstream os;
    os << "table(" << n << ")";
    return os.str();
}

// Cycle notation over 1-based symbols, "e" for the identity.
std::string perm_cycle_name(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::ostringstream os;
    std::vector<char> seen(n, 0);
    bool moved = false;
    for (int start = 0; start < n; ++start) {
        if (seen[start] || p[start] == start) continue;
        moved = true;
        os << '(';
        int x = start;
        while (!seen[x]) {
            seen[x] = 1;
            os << (x + 1);
            x = p[x];
        }
        os << ')';
    }
    return moved ? os.str() : "e";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Elt>> table,
                                    std::vector<std::string> names,
                                    std::string display) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw input_error("group table is empty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw input_error("group table is not square");
        for (Elt v : row)
            if (v < 0 || v >= n) throw input_error("group table entry out of range");
    }
    // identity
    Elt e = -1;
    for (Elt cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (Elt x = 0; x < n && ok; ++x)
            ok = table[cand][x] == x && table[x][cand] == x;
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw input_error("group table has no identity");
    // inverses
    std::vector<Elt> inv(n, -1);
    for (Elt a = 0; a < n; ++a) {
        for (Elt b = 0; b < n; ++b) {
            if (table[a][b] == e && table[b][a] == e) { inv[a] = b; break; }
        }
        if (inv[a] < 0) throw input_error("group table element without inverse");
    }
    // associativity
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            for (Elt c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw input_error("group table is not associative");
    if (names.empty()) {
        names.resize(n);
        for (int i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
        names[e] = "e";
    } else {
        if (static_cast<int>(names.size()) != n)
            throw input_error("element name list has wrong length");
        std::set<std::string> uniq(names.begin(), names.end());
        if (static_cast<int>(uniq.size()) != n)
            throw input_error("element names are not unique");
    }
    FiniteGroup g;
    g.table_ = std::move(table);
    g.inverse_ = std::move(inv);
    g.names_ = std::move(names);
    g.identity_ = e;
    g.display_ = display.empty() ? default_display(n) : std::move(display);
    return g;
}

FiniteGroup FiniteGroup::trivial() {
    FiniteGroup g = cyclic(1);
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw input_error("cyclic group order must be >= 1");
    std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        names[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return from_table(std::move(table), std::move(names), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 4)
        throw input_error("symmetric groups are provided for 1 <= n <= 4");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < m; ++i) index[perms[i]] = i;
    std::vector<std::vector<Elt>> table(m, std::vector<Elt>(m));
    std::vector<std::string> names(m);
    for (int a = 0; a < m; ++a) {
        names[a] = perm_cycle_name(perms[a]);
        for (int b = 0; b < m; ++b) {
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
            table[a][b] = index.at(c);
        }
    }
    return from_table(std::move(table), std::move(names), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::klein_four() {
    FiniteGroup g = product(cyclic(2), cyclic(2));
    g.display_ = "V4";
    return g;
}

FiniteGroup FiniteGroup::quaternion8() {
    // order: 1, -1, i, -i, j, -j, k, -k
    struct Q { int sign; int axis; };  // axis: 0 = 1, 1 = i, 2 = j, 3 = k
    auto decode = [](int idx) { return Q{idx % 2 == 0 ? +1 : -1, idx / 2}; };
    auto encode = [](Q q) { return q.axis * 2 + (q.sign > 0 ? 0 : 1); };
    auto mul = [](Q a, Q b) {
        static const int axis[4][4] = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {
            {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
        return Q{a.sign * b.sign * sign[a.axis][b.axis], axis[a.axis][b.axis]};
    };
    std::vector<std::vector<Elt>> table(8, std::vector<Elt>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            table[a][b] = encode(mul(decode(a), decode(b)));
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return from_table(std::move(table), std::move(names), "Q8");
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
    std::vector<std::string> names(n);
    for (int x = 0; x < n; ++x) {
        const int xa = x / nb, xb = x % nb;
        names[x] = "(" + a.name(xa) + "," + b.name(xb) + ")";
        for (int y = 0; y < n; ++y) {
            const int ya = y / nb, yb = y % nb;
            table[x][y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
        }
    }
    return from_table(std::move(table), std::move(names),
                      a.display_name() + "x" + b.display_name());
}

FiniteGroup FiniteGroup::named(const std::string& spec) {
    std::vector<std::string> factors;
    std::string cur;
    for (char ch : spec) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == 'x') {
            factors.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    factors.push_back(cur);
    auto parse_one = [&spec](const std::string& f) -> FiniteGroup {
        auto digits = [](const std::string& s) {
            return !s.empty() &&
                   std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
        };
        if (f == "Q8") return quaternion8();
        if (f == "V4") return klein_four();
        if (f.size() >= 2 && f[0] == 'Z' && digits(f.substr(1)))
            return cyclic(std::stoi(f.substr(1)));
        if (f.size() >= 2 && f[0] == 'S' && digits(f.substr(1)))
            return symmetric(std::stoi(f.substr(1)));
        throw input_error("unknown group name '" + f + "' in '" + spec + "'");
    };
    FiniteGroup g = parse_one(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
        g = product(g, parse_one(factors[i]));
    return g;
}

int FiniteGroup::element_order(Elt a) const {
    int k = 1;
    Elt x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::optional<Elt> FiniteGroup::element_by_name(const std::string& name) const {
    for (int i = 0; i < order(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
    const int n = order();
    for (Elt a = 0; a < n; ++a)
        for (Elt b = a + 1; b < n; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::vector<Elt> FiniteGroup::center() const {
    std::vector<Elt> all(order());
    std::iota(all.begin(), all.end(), 0);
    return centralizer(*this, all);
}

bool FiniteGroup::contains_subgroup(const std::vector<Elt>& elems) const {
    if (elems.empty()) return false;
    std::set<Elt> s(elems.begin(), elems.end());
    for (Elt v : elems)
        if (v < 0 || v >= order()) return false;
    if (!s.count(identity_)) return false;
    for (Elt a : s)
        for (Elt b : s)
            if (!s.count(mul(a, b))) return false;
    return true;
}

std::vector<Elt> FiniteGroup::subgroup_closure(std::vector<Elt> gens) const {
    std::set<Elt> s = {identity_};
    for (Elt g : gens) {
        if (g < 0 || g >= order()) throw input_error("generator out of range");
        s.insert(g);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Elt> cur(s.begin(), s.end());
        for (Elt a : cur)
            for (Elt b : cur)
                if (s.insert(mul(a, b)).second) grew = true;
    }
    return {s.begin(), s.end()};
}

std::vector<std::vector<Elt>> FiniteGroup::subgroups() const {
    std::set<std::vector<Elt>> found;
    found.insert({identity_});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Elt>> cur(found.begin(), found.end());
        for (const auto& sub : cur) {
            for (Elt x = 0; x < order(); ++x) {
                if (std::binary_search(sub.begin(), sub.end(), x)) continue;
                std::vector<Elt> gens = sub;
                gens.push_back(x);
                if (found.insert(subgroup_closure(std::move(gens))).second) grew = true;
            }
        }
    }
    std::vector<std::vector<Elt>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<Elt> FiniteGroup::generating_set() const {
    std::vector<Elt> gens;
    std::vector<Elt> closure = subgroup_closure({});
    while (static_cast<int>(closure.size()) < order()) {
        for (Elt x = 0; x < order(); ++x) {
            if (!std::binary_search(closure.begin(), closure.end(), x)) {
                gens.push_back(x);
                closure = subgroup_closure(gens);
                break;
            }
        }
    }
    return gens;
}

Hom Hom::make(GroupPtr source, GroupPtr target, std::vector<Elt> map) {
    if (!source || !target) throw input_error("hom with missing group");
    if (static_cast<int>(map.size()) != source->order())
        throw input_error("hom map has wrong length");
    for (Elt v : map)
        if (v < 0 || v >= target->order()) throw input_error("hom image out of range");
    for (Elt a = 0; a < source->order(); ++a)
        for (Elt b = 0; b < source->order(); ++b)
            if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
                throw input_error("map is not a homomorphism");
    Hom h;
    h.source = std::move(source);
    h.target = std::move(target);
    h.map = std::move(map);
    return h;
}

bool Hom::is_injective() const {
    std::set<Elt> img(map.begin(), map.end());
    return img.size() == map.size();
}

bool Hom::is_surjective() const {
    std::set<Elt> img(map.begin(), map.end());
    return static_cast<int>(img.size()) == target->order();
}

std::vector<Elt> Hom::image() const {
    std::set<Elt> img(map.begin(), map.end());
    return {img.begin(), img.end()};
}

std::vector<Elt> Hom::kernel() const {
    std::vector<Elt> ker;
    for (Elt a = 0; a < source->order(); ++a)
        if (map[a] == target->identity()) ker.push_back(a);
    return ker;
}

Hom Hom::compose(const Hom& g, const Hom& f) {
    if (f.target.get() != g.source.get() && !(*f.target == *g.source))
        throw input_error("hom composition with mismatched groups");
    std::vector<Elt> m(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) m[i] = g.map[f.map[i]];
    return make(f.source, g.target, std::move(m));
}

Hom Hom::identity(GroupPtr g) {
    std::vector<Elt> m(g->order());
    std::iota(m.begin(), m.end(), 0);
    return make(g, g, std::move(m));
}

GAction GAction::make(GroupPtr group, int carrier_size,
                      std::vector<std::vector<int>> act) {
    if (!group) throw input_error("action with missing group");
    if (static_cast<int>(act.size()) != group->order())
        throw input_error("action table has wrong number of rows");
    for (const auto& row : act) {
        if (static_cast<int>(row.size()) != carrier_size)
            throw input_error("action row has wrong length");
        for (int v : row)
            if (v < 0 || v >= carrier_size) throw input_error("action value out of range");
    }
    const Elt e = group->identity();
    for (int x = 0; x < carrier_size; ++x)
        if (act[e][x] != x) throw input_error("identity must act trivially");
    for (Elt g = 0; g < group->order(); ++g)
        for (Elt h = 0; h < group->order(); ++h) {
            const Elt gh = group->mul(g, h);
            for (int x = 0; x < carrier_size; ++x)
                if (act[g][act[h][x]] != act[gh][x])
                    throw input_error("action is not compatible with the group law");
        }
    GAction a;
    a.group = std::move(group);
    a.carrier_size = carrier_size;
    a.act = std::move(act);
    return a;
}

bool GAction::is_free() const {
    for (Elt g = 0; g < group->order(); ++g) {
        if (g == group->identity()) continue;
        for (int x = 0; x < carrier_size; ++x)
            if (act[g][x] == x) return false;
    }
    return true;
}

std::vector<int> GAction::orbits() const {
    std::vector<int> orbit(carrier_size, -1);
    int next = 0;
    for (int x = 0; x < carrier_size; ++x) {
        if (orbit[x] >= 0) continue;
        // BFS over the orbit of x
        std::vector<int> stack = {x};
        orbit[x] = next;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            for (Elt g = 0; g < group->order(); ++g) {
                int z = act[g][y];
                if (orbit[z] < 0) {
                    orbit[z] = next;
                    stack.push_back(z);
                }
            }
        }
        ++next;
    }
    return orbit;
}

int GAction::orbit_count() const {
    auto o = orbits();
    return o.empty() ? 0 : 1 + *std::max_element(o.begin(), o.end());
}

RightAction RightAction::make(GroupPtr group, int carrier_size,
                              std::vector<std::vector<int>> act) {
    if (!group) throw input_error("action with missing group");
    if (static_cast<int>(act.size()) != group->order())
        throw input_error("action table has wrong number of rows");
    for (const auto& row : act) {
        if (static_cast<int>(row.size()) != carrier_size)
            throw input_error("action row has wrong length");
        for (int v : row)
            if (v < 0 || v >= carrier_size) throw input_error("action value out of range");
    }
    const Elt e = group->identity();
    for (int x = 0; x < carrier_size; ++x)
        if (act[e][x] != x) throw input_error("identity must act trivially");
    for (Elt a = 0; a < group->order(); ++a)
        for (Elt b = 0; b < group->order(); ++b) {
            const Elt ba = group->mul(b, a);
            for (int x = 0; x < carrier_size; ++x)
                if (act[a][act[b][x]] != act[ba][x])
                    throw input_error("table is not a right action");
        }
    RightAction r;
    r.group = std::move(group);
    r.carrier_size = carrier_size;
    r.act = std::move(act);
    return r;
}

bool RightAction::is_free() const {
    for (Elt a = 0; a < group->order(); ++a) {
        if (a == group->identity()) continue;
        for (int x = 0; x < carrier_size; ++x)
            if (act[a][x] == x) return false;
    }
    return true;
}

std::vector<int> RightAction::orbits() const {
    std::vector<int> orbit(carrier_size, -1);
    int next = 0;
    for (int x = 0; x < carrier_size; ++x) {
        if (orbit[x] >= 0) continue;
        std::vector<int> stack = {x};
        orbit[x] = next;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            for (Elt a = 0; a < group->order(); ++a) {
                int z = act[a][y];
                if (orbit[z] < 0) {
                    orbit[z] = next;
                    stack.push_back(z);
                }
            }
        }
        ++next;
    }
    return orbit;
}

int RightAction::orbit_count() const {
    auto o = orbits();
    return o.empty() ? 0 : 1 + *std::max_element(o.begin(), o.end());
}

std::vector<Elt> centralizer(const FiniteGroup& g, const std::vector<Elt>& elems) {
    std::vector<Elt> out;
    for (Elt a = 0; a < g.order(); ++a) {
        bool ok = true;
        for (Elt s : elems) {
            if (s < 0 || s >= g.order()) throw input_error("centralizer input out of range");
            if (g.mul(a, s) != g.mul(s, a)) { ok = false; break; }
        }
        if (ok) out.push_back(a);
    }
    return out;
}

namespace {

// Closes a partial assignment of generator images under products. Returns
// nullopt on conflict; otherwise the (possibly incomplete) image array with
// -1 for elements not yet reached.
std::optional<std::vector<Elt>> propagate_images(const FiniteGroup& src,
                                                 const FiniteGroup& dst,
                                                 const std::vector<Elt>& gens,
                                                 const std::vector<Elt>& images,
                                                 std::size_t count) {
    std::vector<Elt> img(src.order(), -1);
    img[src.identity()] = dst.identity();
    for (std::size_t i = 0; i < count; ++i) {
        if (img[gens[i]] >= 0 && img[gens[i]] != images[i]) return std::nullopt;
        img[gens[i]] = images[i];
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (Elt a = 0; a < src.order(); ++a) {
            if (img[a] < 0) continue;
            for (Elt b = 0; b < src.order(); ++b) {
                if (img[b] < 0) continue;
                const Elt ab = src.mul(a, b);
                const Elt want = dst.mul(img[a], img[b]);
                if (img[ab] < 0) {
                    img[ab] = want;
                    grew = true;
                } else if (img[ab] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return img;
}

// All bijective homomorphisms src -> dst, lexicographically sorted. The
// backtracking assigns generator images one at a time and prunes any prefix
// whose product closure already contradicts the two tables.
std::vector<std::vector<Elt>> all_isomorphisms(const FiniteGroup& src,
                                               const FiniteGroup& dst,
                                               bool first_only,
                                               int workers) {
    std::vector<std::vector<Elt>> result;
    if (src.order() != dst.order()) return result;
    const std::vector<Elt> gens = src.generating_set();
    if (gens.empty()) {
        result.push_back({dst.identity()});
        return result;
    }
    // candidate images per generator, filtered by element order
    std::vector<std::vector<Elt>> cands(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const int ord = src.element_order(gens[i]);
        for (Elt y = 0; y < dst.order(); ++y)
            if (dst.element_order(y) == ord) cands[i].push_back(y);
        if (cands[i].empty()) return result;
    }
    auto search_from = [&](Elt first_image, std::vector<std::vector<Elt>>& local) {
        std::vector<Elt> images(gens.size(), -1);
        images[0] = first_image;
        auto rec = [&](auto&& self, std::size_t depth) -> bool {
            if (depth == gens.size()) {
                auto img = propagate_images(src, dst, gens, images, depth);
                if (!img) return false;
                // gens generate src, so the closure filled every slot
                std::set<Elt> uniq(img->begin(), img->end());
                if (static_cast<int>(uniq.size()) != src.order()) return false;
                local.push_back(std::move(*img));
                return first_only;
            }
            for (Elt y : cands[depth]) {
                images[depth] = y;
                if (!propagate_images(src, dst, gens, images, depth + 1)) continue;
                if (self(self, depth + 1)) return true;
            }
            return false;
        };
        if (propagate_images(src, dst, gens, images, 1)) rec(rec, 1);
    };
    if (first_only || workers <= 1) {
        std::vector<std::vector<Elt>> local;
        for (Elt y : cands[0]) {
            search_from(y, local);
            if (first_only && !local.empty()) break;
        }
        result = std::move(local);
    } else {
        std::vector<std::vector<std::vector<Elt>>> buckets(cands[0].size());
        for_chunks(cands[0].size(), ExecPolicy::make(workers),
                   [&](std::size_t lo, std::size_t hi) {
                       for (std::size_t i = lo; i < hi; ++i)
                           search_from(cands[0][i], buckets[i]);
                   });
        for (auto& b : buckets)
            for (auto& m : b) result.push_back(std::move(m));
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

}  // namespace

AutomorphismGroup automorphism_group(const FiniteGroup& g, int workers) {
    AutomorphismGroup out;
    out.perms = all_isomorphisms(g, g, /*first_only=*/false, workers);
    const int m = static_cast<int>(out.perms.size());
    if (m == 0) throw internal_error("automorphism scan lost the identity");
    std::map<std::vector<Elt>, int> index;
    for (int i = 0; i < m; ++i) index[out.perms[i]] = i;
    std::vector<std::vector<Elt>> table(m, std::vector<Elt>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<Elt> c(g.order());
            for (Elt x = 0; x < g.order(); ++x) c[x] = out.perms[a][out.perms[b][x]];
            auto it = index.find(c);
            if (it == index.end())
                throw internal_error("automorphism set not closed under composition");
            table[a][b] = it->second;
        }
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) names[i] = "a" + std::to_string(i);
    out.group = FiniteGroup::from_table(std::move(table), std::move(names),
                                        "Aut(" + g.display_name() + ")");
    // inner automorphisms
    std::set<int> inner;
    for (Elt a = 0; a < g.order(); ++a) {
        std::vector<Elt> conj(g.order());
        for (Elt x = 0; x < g.order(); ++x) conj[x] = g.conj(a, x);
        auto it = index.find(conj);
        if (it == index.end()) throw internal_error("conjugation is not in the scan result");
        inner.insert(it->second);
    }
    out.inner.assign(inner.begin(), inner.end());
    // cosets of the inner subgroup
    std::vector<int> seen(m, 0);
    for (int a = 0; a < m; ++a) {
        if (seen[a]) continue;
        std::vector<int> coset;
        for (int i : out.inner) {
            const int c = out.group.mul(a, i);
            coset.push_back(c);
            seen[c] = 1;
        }
        std::sort(coset.begin(), coset.end());
        out.outer_classes.push_back(std::move(coset));
    }
    std::sort(out.outer_classes.begin(), out.outer_classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::vector<std::vector<Elt>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<std::vector<Elt>> classes;
    std::vector<char> seen(g.order(), 0);
    for (Elt x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::set<Elt> cls;
        for (Elt a = 0; a < g.order(); ++a) cls.insert(g.conj(a, x));
        for (Elt y : cls) seen[y] = 1;
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

std::optional<std::vector<Elt>> isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return std::nullopt;
    // cheap invariant: multiset of element orders
    std::vector<int> oa(a.order()), ob(b.order());
    for (Elt x = 0; x < a.order(); ++x) oa[x] = a.element_order(x);
    for (Elt x = 0; x < b.order(); ++x) ob[x] = b.element_order(x);
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return std::nullopt;
    auto found = all_isomorphisms(a, b, /*first_only=*/true, 1);
    if (found.empty()) return std::nullopt;
    return found.front();
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const std::vector<Elt>& elems,
                                std::string display) {
    if (!g.contains_subgroup(elems))
        throw input_error("element list is not a subgroup");
    std::vector<Elt> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const int k = static_cast<int>(sorted.size());
    SubgroupGroup out;
    out.embedding = sorted;
    out.index_in_sub.assign(g.order(), -1);
    for (int i = 0; i < k; ++i) out.index_in_sub[sorted[i]] = i;
    std::vector<std::vector<Elt>> table(k, std::vector<Elt>(k));
    std::vector<std::string> names(k);
    for (int i = 0; i < k; ++i) {
        names[i] = g.name(sorted[i]);
        for (int j = 0; j < k; ++j) {
            const int prod = out.index_in_sub[g.mul(sorted[i], sorted[j])];
            if (prod < 0) throw internal_error("subgroup closure check missed a product");
            table[i][j] = prod;
        }
    }
    if (display.empty())
        display = "sub" + std::to_string(k) + "(" + g.display_name() + ")";
    out.group = FiniteGroup::from_table(std::move(table), std::move(names),
                                        std::move(display));
    return out;
}

}  // namespace equilift::grp
