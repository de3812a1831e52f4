#include "equilift/instance.hpp"

#include <algorithm>
#include <fstream>

namespace equilift::instance {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const std::string& ctx) {
    if (!j.is_object() || !j.contains(key))
        throw input_error(ctx + ": missing field '" + key + "'");
    return j[key];
}

int as_int(const json& j, const std::string& ctx) {
    if (!j.is_number_integer())
        throw input_error(ctx + ": expected an integer");
    return j.get<int>();
}

std::vector<int> as_int_list(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw input_error(ctx + ": expected a list");
    std::vector<int> out;
    for (const auto& v : j) out.push_back(as_int(v, ctx));
    return out;
}

std::vector<std::vector<int>> as_int_table(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw input_error(ctx + ": expected a list of lists");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) out.push_back(as_int_list(row, ctx));
    return out;
}

}  // namespace

const GroupPtr& GroupRegistry::get(const std::string& id) const {
    auto it = by_id.find(id);
    if (it == by_id.end())
        throw input_error("unknown group id '" + id + "'");
    return it->second;
}

Elt element_from_json(const grp::FiniteGroup& g, const json& j,
                      const std::string& context) {
    if (j.is_string()) {
        auto e = g.element_by_name(j.get<std::string>());
        if (!e)
            throw input_error(context + ": no element named '" +
                              j.get<std::string>() + "' in " + g.display_name());
        return *e;
    }
    if (j.is_number_integer()) {
        const int v = j.get<int>();
        if (v < 0 || v >= g.order())
            throw input_error(context + ": element index " + std::to_string(v) +
                              " out of range");
        return static_cast<Elt>(v);
    }
    throw input_error(context + ": expected an element name or index");
}

namespace {

std::vector<Elt> elements_from_json(const grp::FiniteGroup& g, const json& j,
                                    const std::string& ctx) {
    if (!j.is_array()) throw input_error(ctx + ": expected a list of elements");
    std::vector<Elt> out;
    for (const auto& v : j) out.push_back(element_from_json(g, v, ctx));
    return out;
}

GroupRegistry parse_groups(const json& j) {
    GroupRegistry reg;
    if (!j.is_object()) throw input_error("groups: expected an object");
    for (const auto& [id, spec] : j.items()) {
        const std::string ctx = "groups." + id;
        if (spec.is_string()) {
            reg.by_id[id] = grp::share(grp::FiniteGroup::named(spec.get<std::string>()));
            reg.named_spec[id] = spec.get<std::string>();
        } else if (spec.is_object() && spec.contains("name")) {
            const std::string name = need(spec, "name", ctx).get<std::string>();
            reg.by_id[id] = grp::share(grp::FiniteGroup::named(name));
            reg.named_spec[id] = name;
        } else if (spec.is_object() && spec.contains("table")) {
            std::vector<std::vector<Elt>> table =
                as_int_table(need(spec, "table", ctx), ctx + ".table");
            std::vector<std::string> names;
            if (spec.contains("names"))
                for (const auto& n : spec["names"]) names.push_back(n.get<std::string>());
            std::string display = spec.value("display", std::string{});
            reg.by_id[id] = grp::share(grp::FiniteGroup::from_table(
                std::move(table), std::move(names), std::move(display)));
        } else {
            throw input_error(ctx + ": expected a constructor name or a table");
        }
    }
    return reg;
}

SiteBlock parse_site(const json& j) {
    SiteBlock out;
    const json& cj = need(j, "category", "site");
    if (cj.contains("poset")) {
        const json& pj = cj["poset"];
        const int n = as_int(need(pj, "objects", "site.category.poset"),
                             "site.category.poset.objects");
        std::vector<std::pair<int, int>> leq;
        for (const auto& rel : need(pj, "relations", "site.category.poset")) {
            auto pr = as_int_list(rel, "site.category.poset.relations");
            if (pr.size() != 2)
                throw input_error("site.category.poset.relations: entries are pairs");
            leq.emplace_back(pr[0], pr[1]);
        }
        out.category = fincat::FiniteCategory::poset(n, leq);
    } else {
        const std::string ctx = "site.category";
        out.category = fincat::FiniteCategory::make(
            as_int(need(cj, "objects", ctx), ctx + ".objects"),
            as_int_list(need(cj, "src", ctx), ctx + ".src"),
            as_int_list(need(cj, "tgt", ctx), ctx + ".tgt"),
            as_int_list(need(cj, "identities", ctx), ctx + ".identities"),
            as_int_table(need(cj, "compose", ctx), ctx + ".compose"));
    }
    const fincat::FiniteCategory& cat = out.category;

    const json& tj = need(j, "topology", "site");
    out.topology.covers.resize(cat.objects());
    if (tj.is_string() && tj.get<std::string>() == "coarsest") {
        for (int x = 0; x < cat.objects(); ++x)
            out.topology.covers[x].push_back(fincat::maximal_sieve(cat, x));
    } else if (tj.is_string() && tj.get<std::string>() == "all-sieves") {
        for (int x = 0; x < cat.objects(); ++x)
            out.topology.covers[x] = fincat::all_sieves_on(cat, x);
    } else if (tj.is_object() && tj.contains("covers")) {
        for (const auto& [key, lists] : tj["covers"].items()) {
            int x = -1;
            try {
                x = std::stoi(key);
            } catch (const std::exception&) {
                throw input_error("site.topology.covers: object keys are object ids");
            }
            if (x < 0 || x >= cat.objects())
                throw input_error("site.topology.covers: object " + key +
                                  " out of range");
            for (const auto& gens : lists)
                out.topology.covers[x].push_back(fincat::sieve_generated(
                    cat, x, as_int_list(gens, "site.topology.covers")));
        }
    } else {
        throw input_error("site.topology: expected 'coarsest', 'all-sieves' or covers");
    }
    out.topology.validate(cat);

    if (j.contains("presheaf")) {
        const json& pj = j["presheaf"];
        if (pj.contains("representable")) {
            out.presheaf = fincat::SetPresheaf::representable(
                cat, as_int(pj["representable"], "site.presheaf.representable"));
        } else if (pj.contains("constant")) {
            out.presheaf = fincat::SetPresheaf::constant(
                cat, as_int(pj["constant"], "site.presheaf.constant"));
        } else {
            out.presheaf = fincat::SetPresheaf::make(
                cat, as_int_list(need(pj, "sizes", "site.presheaf"), "site.presheaf.sizes"),
                as_int_table(need(pj, "restrict", "site.presheaf"),
                             "site.presheaf.restrict"));
        }
    }
    return out;
}

cech::NervePtr parse_nerve(const json& j) {
    if (j.contains("cycle")) return cech::Nerve::cycle(as_int(j["cycle"], "nerve.cycle"));
    if (j.contains("path")) return cech::Nerve::path(as_int(j["path"], "nerve.path"));
    if (j.contains("complete"))
        return cech::Nerve::complete(as_int(j["complete"], "nerve.complete"),
                                     j.value("triples", false));
    const int charts = as_int(need(j, "charts", "nerve"), "nerve.charts");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : need(j, "pairs", "nerve")) {
        auto pr = as_int_list(p, "nerve.pairs");
        if (pr.size() != 2) throw input_error("nerve.pairs: entries are pairs");
        pairs.emplace_back(pr[0], pr[1]);
    }
    std::vector<std::array<int, 3>> triples;
    if (j.contains("triples") && j["triples"].is_array())
        for (const auto& t : j["triples"]) {
            auto tr = as_int_list(t, "nerve.triples");
            if (tr.size() != 3) throw input_error("nerve.triples: entries are triples");
            triples.push_back({tr[0], tr[1], tr[2]});
        }
    return cech::Nerve::make(charts, pairs, triples);
}

std::vector<Elt> parse_pair_values(const cech::Nerve& nerve, const grp::FiniteGroup& h,
                                   const json& j, const std::string& ctx) {
    std::vector<Elt> values(nerve.pairs().size(), -1);
    if (j.is_array()) {
        if (j.size() != nerve.pairs().size())
            throw input_error(ctx + ": expected one value per overlap");
        for (size_t k = 0; k < j.size(); ++k)
            values[k] = element_from_json(h, j[k], ctx);
        return values;
    }
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            const auto comma = key.find(',');
            if (comma == std::string::npos)
                throw input_error(ctx + ": keys look like \"i,j\"");
            int a = -1, b = -1;
            try {
                a = std::stoi(key.substr(0, comma));
                b = std::stoi(key.substr(comma + 1));
            } catch (const std::exception&) {
                throw input_error(ctx + ": keys look like \"i,j\"");
            }
            const int idx = nerve.pair_index(a, b);
            if (idx < 0)
                throw input_error(ctx + ": charts " + key + " do not overlap");
            Elt v = element_from_json(h, val, ctx);
            const auto& [i, jj] = nerve.pairs()[idx];
            if (a != i || b != jj) v = h.inv(v);  // value given in reverse orientation
            if (values[idx] >= 0)
                throw input_error(ctx + ": overlap " + key + " assigned twice");
            values[idx] = v;
        }
        for (size_t k = 0; k < values.size(); ++k)
            if (values[k] < 0)
                throw input_error(ctx + ": overlap (" +
                                  std::to_string(nerve.pairs()[k].first) + "," +
                                  std::to_string(nerve.pairs()[k].second) +
                                  ") has no value");
        return values;
    }
    throw input_error(ctx + ": expected a list or an \"i,j\"-keyed object");
}

ClassifyBlock parse_classify(const json& j, const GroupRegistry& reg) {
    ClassifyBlock out;
    out.nerve = parse_nerve(need(j, "nerve", "classify"));
    out.group_id = need(j, "group", "classify").get<std::string>();
    out.group = reg.get(out.group_id);
    return out;
}

LiftBlock parse_lift(const json& j, const GroupRegistry& reg) {
    cech::NervePtr nerve = parse_nerve(need(j, "nerve", "lift"));

    const json& bj = need(j, "bundle", "lift");
    const std::string hid = need(bj, "group", "lift.bundle").get<std::string>();
    GroupPtr h = reg.get(hid);
    auto values = parse_pair_values(*nerve, *h, need(bj, "values", "lift.bundle"),
                                    "lift.bundle.values");
    auto bundle = cech::Cocycle1::make(cech::Chain1::make(nerve, h, std::move(values)));

    const json& aj = need(j, "action", "lift");
    const std::string gid = need(aj, "group", "lift.action").get<std::string>();
    GroupPtr g = reg.get(gid);
    lift::GSpace space;
    if (aj.contains("sigma")) {
        space = lift::GSpace::make(nerve, g,
                                   as_int_table(aj["sigma"], "lift.action.sigma"));
    } else if (aj.contains("generators")) {
        std::vector<Elt> gens;
        std::vector<std::vector<int>> images;
        for (const auto& gj : aj["generators"]) {
            gens.push_back(element_from_json(*g, need(gj, "element", "lift.action.generators"),
                                             "lift.action.generators.element"));
            images.push_back(as_int_list(need(gj, "image", "lift.action.generators"),
                                         "lift.action.generators.image"));
        }
        space = lift::GSpace::from_generators(nerve, g, gens, images);
    } else {
        throw input_error("lift.action: expected 'sigma' rows or 'generators'");
    }

    LiftBlock out{lift::EquivariantInstance::make(std::move(space), std::move(bundle)),
                  hid, gid};
    return out;
}

ExtensionBlock parse_extension(const json& j, const GroupRegistry& reg) {
    const std::string lid = need(j, "kernel", "extension").get<std::string>();
    const std::string mid = need(j, "total", "extension").get<std::string>();
    const std::string nid = need(j, "quotient", "extension").get<std::string>();
    ext::ExtensionData d;
    d.L = reg.get(lid);
    d.M = reg.get(mid);
    d.N = reg.get(nid);
    d.incl = grp::Hom::make(d.L, d.M,
                            elements_from_json(*d.M, need(j, "incl", "extension"),
                                               "extension.incl"));
    d.proj = grp::Hom::make(d.M, d.N,
                            elements_from_json(*d.N, need(j, "proj", "extension"),
                                               "extension.proj"));
    return ExtensionBlock{ext::Extension::make(std::move(d)), lid, mid, nid};
}

HomogeneousBlock parse_homogeneous(const json& j, const GroupRegistry& reg) {
    HomogeneousBlock out;
    out.group_id = need(j, "group", "homogeneous").get<std::string>();
    out.fiber_group_id = need(j, "fiber_group", "homogeneous").get<std::string>();
    out.group = reg.get(out.group_id);
    out.fiber_group = reg.get(out.fiber_group_id);
    auto sub = elements_from_json(*out.group, need(j, "subgroup", "homogeneous"),
                                  "homogeneous.subgroup");
    auto phi = elements_from_json(*out.fiber_group, need(j, "phi", "homogeneous"),
                                  "homogeneous.phi");
    if (sub.size() != phi.size())
        throw input_error("homogeneous: phi must list one image per subgroup element");
    // Store aligned and sorted by subgroup element index.
    std::vector<size_t> order(sub.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return sub[a] < sub[b]; });
    for (size_t k = 0; k + 1 < order.size(); ++k)
        if (sub[order[k]] == sub[order[k + 1]])
            throw input_error("homogeneous.subgroup: duplicate element");
    for (size_t k : order) {
        out.subgroup.push_back(sub[k]);
        out.phi.push_back(phi[k]);
    }
    return out;
}

ClutchBlock parse_clutch(const json& j, const GroupRegistry& reg) {
    ClutchBlock out;
    out.group_id = need(j, "group", "clutch").get<std::string>();
    out.fiber_group_id = need(j, "fiber_group", "clutch").get<std::string>();
    out.group = reg.get(out.group_id);
    out.fiber_group = reg.get(out.fiber_group_id);
    out.rho0 = grp::Hom::make(out.group, out.fiber_group,
                              elements_from_json(*out.fiber_group,
                                                 need(j, "rho0", "clutch"), "clutch.rho0"));
    out.rho1 = grp::Hom::make(out.group, out.fiber_group,
                              elements_from_json(*out.fiber_group,
                                                 need(j, "rho1", "clutch"), "clutch.rho1"));
    out.c = element_from_json(*out.fiber_group, need(j, "c", "clutch"), "clutch.c");
    return out;
}

}  // namespace

InstanceFile parse(const json& j) {
    if (!j.is_object()) throw input_error("instance: expected a JSON object");
    InstanceFile f;
    f.version = as_int(need(j, "version", "instance"), "version");
    if (f.version != 1)
        throw input_error("instance: unknown version " + std::to_string(f.version));
    if (j.contains("groups")) f.groups = parse_groups(j["groups"]);
    if (j.contains("site")) f.site = parse_site(j["site"]);
    if (j.contains("classify")) f.classify = parse_classify(j["classify"], f.groups);
    if (j.contains("lift")) f.lift = parse_lift(j["lift"], f.groups);
    if (j.contains("extension")) f.extension = parse_extension(j["extension"], f.groups);
    if (j.contains("homogeneous"))
        f.homogeneous = parse_homogeneous(j["homogeneous"], f.groups);
    if (j.contains("clutch")) f.clutch = parse_clutch(j["clutch"], f.groups);
    return f;
}

InstanceFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open instance file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON syntax error: ") + e.what());
    }
    return parse(j);
}

cech::NervePtr nerve_from_json(const json& j) { return parse_nerve(j); }

json nerve_to_json(const cech::Nerve& n) {
    json out;
    out["charts"] = n.charts();
    json pairs = json::array();
    for (const auto& [i, j2] : n.pairs()) pairs.push_back(json::array({i, j2}));
    out["pairs"] = pairs;
    json triples = json::array();
    for (const auto& t : n.triples()) triples.push_back(json::array({t[0], t[1], t[2]}));
    out["triples"] = triples;
    return out;
}

namespace {

json group_to_json(const GroupRegistry& reg, const std::string& id) {
    auto it = reg.named_spec.find(id);
    if (it != reg.named_spec.end()) return json{{"name", it->second}};
    const grp::FiniteGroup& g = *reg.by_id.at(id);
    json out;
    out["table"] = g.table();
    out["names"] = g.names();
    if (!g.display_name().empty()) out["display"] = g.display_name();
    return out;
}

json names_of(const grp::FiniteGroup& g, const std::vector<Elt>& elems) {
    json out = json::array();
    for (Elt e : elems) out.push_back(g.name(e));
    return out;
}

json category_to_json(const fincat::FiniteCategory& c) {
    json out;
    out["objects"] = c.objects();
    std::vector<int> src, tgt, idents;
    for (int f = 0; f < c.morphisms(); ++f) {
        src.push_back(c.src(f));
        tgt.push_back(c.tgt(f));
    }
    for (int x = 0; x < c.objects(); ++x) idents.push_back(c.identity(x));
    out["src"] = src;
    out["tgt"] = tgt;
    out["identities"] = idents;
    std::vector<std::vector<int>> compose(c.morphisms(), std::vector<int>(c.morphisms()));
    for (int g = 0; g < c.morphisms(); ++g)
        for (int f = 0; f < c.morphisms(); ++f) compose[g][f] = c.compose(g, f);
    out["compose"] = compose;
    return out;
}

}  // namespace

json to_json(const InstanceFile& f) {
    json out;
    out["version"] = f.version;
    if (!f.groups.by_id.empty()) {
        json groups = json::object();
        for (const auto& [id, g] : f.groups.by_id) groups[id] = group_to_json(f.groups, id);
        out["groups"] = groups;
    }
    if (f.site) {
        json site;
        site["category"] = category_to_json(f.site->category);
        json covers = json::object();
        for (int x = 0; x < f.site->category.objects(); ++x) {
            if (f.site->topology.covers[x].empty()) continue;
            json lists = json::array();
            for (const auto& s : f.site->topology.covers[x]) lists.push_back(s.members());
            covers[std::to_string(x)] = lists;
        }
        site["topology"] = json{{"covers", covers}};
        if (f.site->presheaf) {
            json pj;
            pj["sizes"] = f.site->presheaf->sizes;
            pj["restrict"] = f.site->presheaf->restrict_along;
            site["presheaf"] = pj;
        }
        out["site"] = site;
    }
    if (f.classify) {
        json cj;
        cj["nerve"] = nerve_to_json(*f.classify->nerve);
        cj["group"] = f.classify->group_id;
        out["classify"] = cj;
    }
    if (f.lift) {
        const auto& inst = f.lift->inst;
        json lj;
        lj["nerve"] = nerve_to_json(*inst.space.nerve);
        json bundle;
        bundle["group"] = f.lift->bundle_group_id;
        json values = json::object();
        const auto& h = *inst.bundle.group();
        for (const auto& [i, j2] : inst.space.nerve->pairs())
            values[std::to_string(i) + "," + std::to_string(j2)] =
                h.name(inst.bundle.g(i, j2));
        bundle["values"] = values;
        lj["bundle"] = bundle;
        json action;
        action["group"] = f.lift->action_group_id;
        action["sigma"] = inst.space.sigma;
        lj["action"] = action;
        out["lift"] = lj;
    }
    if (f.extension) {
        const auto& e = f.extension->extension;
        json ej;
        ej["kernel"] = f.extension->kernel_id;
        ej["total"] = f.extension->total_id;
        ej["quotient"] = f.extension->quotient_id;
        ej["incl"] = names_of(*e.M(), e.incl().map);
        ej["proj"] = names_of(*e.N(), e.proj().map);
        out["extension"] = ej;
    }
    if (f.homogeneous) {
        json hj;
        hj["group"] = f.homogeneous->group_id;
        hj["fiber_group"] = f.homogeneous->fiber_group_id;
        hj["subgroup"] = names_of(*f.homogeneous->group, f.homogeneous->subgroup);
        hj["phi"] = names_of(*f.homogeneous->fiber_group, f.homogeneous->phi);
        out["homogeneous"] = hj;
    }
    if (f.clutch) {
        json cj;
        cj["group"] = f.clutch->group_id;
        cj["fiber_group"] = f.clutch->fiber_group_id;
        cj["rho0"] = names_of(*f.clutch->fiber_group, f.clutch->rho0.map);
        cj["rho1"] = names_of(*f.clutch->fiber_group, f.clutch->rho1.map);
        cj["c"] = f.clutch->fiber_group->name(f.clutch->c);
        out["clutch"] = cj;
    }
    return out;
}

}  // namespace equilift::instance
