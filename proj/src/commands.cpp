#include "equilift/commands.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "equilift/cech.hpp"
#include "equilift/ext.hpp"
#include "equilift/fincat.hpp"
#include "equilift/grp.hpp"

namespace equilift::commands {

using grp::Elt;
using nlohmann::json;

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string int_list(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

std::string name_list(const grp::FiniteGroup& g, const std::vector<Elt>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << g.name(v[i]);
    os << "]";
    return os.str();
}

json name_array(const grp::FiniteGroup& g, const std::vector<Elt>& v) {
    json a = json::array();
    for (Elt e : v) a.push_back(g.name(e));
    return a;
}

json group_info(const grp::FiniteGroup& g) {
    return json{{"display", g.display_name()}, {"order", g.order()}};
}

std::string group_line(const std::string& label, const grp::FiniteGroup& g) {
    return label + ": " + g.display_name() + " (order " + std::to_string(g.order()) + ")";
}

std::string pair_key(int i, int j) {
    return std::to_string(i) + "," + std::to_string(j);
}

/// Pair values of a degree-1 representative, keyed "i,j" with named entries.
json cocycle1_json(const cech::Cocycle1& c) {
    json o = json::object();
    const auto& pairs = c.nerve()->pairs();
    for (std::size_t p = 0; p < pairs.size(); ++p)
        o[pair_key(pairs[p].first, pairs[p].second)] = c.group()->name(c.chain.values[p]);
    return o;
}

std::string cocycle1_text(const cech::Cocycle1& c) {
    return name_list(*c.group(), c.chain.values);
}

json family_json(const grp::FiniteGroup& g, const grp::FiniteGroup& h,
                 const std::vector<lift::Lift>& fam) {
    json a = json::array();
    for (const auto& l : fam)
        a.push_back(json{{"g", g.name(l.g)}, {"lambda", name_array(h, l.lambda)}});
    return a;
}

std::string family_text(const grp::FiniteGroup& g, const grp::FiniteGroup& h,
                        const std::vector<lift::Lift>& fam) {
    std::ostringstream os;
    for (std::size_t k = 0; k < fam.size(); ++k) {
        if (k) os << "; ";
        os << g.name(fam[k].g) << "=" << name_list(h, fam[k].lambda);
    }
    return os.str();
}

Report start(const std::string& command) {
    Report r;
    r.doc["report_version"] = 1;
    r.doc["command"] = command;
    r.lines.push_back("command: " + command);
    return r;
}

}  // namespace

std::string Report::text() const {
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

Report cmd_check_site(const instance::InstanceFile& f) {
    if (!f.site) throw input_error("instance has no \"site\" block");
    const auto& cat = f.site->category;
    const auto& top = f.site->topology;

    Report r = start("check-site");
    r.lines.push_back("objects: " + std::to_string(cat.objects()));
    r.lines.push_back("morphisms: " + std::to_string(cat.morphisms()));
    int total_covers = 0;
    for (const auto& cs : top.covers) total_covers += static_cast<int>(cs.size());
    r.lines.push_back("covering sieves: " + std::to_string(total_covers));
    r.doc["objects"] = cat.objects();
    r.doc["morphisms"] = cat.morphisms();
    r.doc["covering_sieves"] = total_covers;

    const auto issues = fincat::check_topology(cat, top);
    r.lines.push_back("topology: " + std::string(issues.empty() ? "pass" : "fail"));
    json jt;
    jt["ok"] = issues.empty();
    jt["issues"] = json::array();
    for (const auto& is : issues) {
        std::ostringstream os;
        os << "  " << is.axiom << " at object " << is.object;
        if (is.morphism >= 0) os << " under morphism " << is.morphism;
        os << ", sieve " << int_list(is.sieve) << ": " << is.detail;
        r.lines.push_back(os.str());
        json ji{{"axiom", is.axiom}, {"object", is.object},
                {"sieve", is.sieve}, {"detail", is.detail}};
        if (is.morphism >= 0) ji["morphism"] = is.morphism;
        jt["issues"].push_back(ji);
    }
    r.doc["topology"] = jt;

    if (f.site->presheaf) {
        const auto& p = *f.site->presheaf;
        r.lines.push_back("presheaf sizes: " + int_list(p.sizes));
        const auto sheaf_issues = fincat::check_sheaf(cat, top, p);
        r.lines.push_back("sheaf: " + std::string(sheaf_issues.empty() ? "pass" : "fail"));
        json js;
        js["sizes"] = p.sizes;
        js["ok"] = sheaf_issues.empty();
        js["issues"] = json::array();
        for (const auto& is : sheaf_issues) {
            std::ostringstream os;
            os << "  " << is.kind << " at object " << is.object << ", sieve "
               << int_list(is.sieve) << ": " << is.detail;
            r.lines.push_back(os.str());
            json ji{{"kind", is.kind}, {"object", is.object},
                    {"sieve", is.sieve}, {"detail", is.detail}};
            if (is.kind == "existence") ji["family"] = is.family;
            if (is.kind == "uniqueness")
                ji["sections"] = json::array({is.sections.first, is.sections.second});
            js["issues"].push_back(ji);
        }
        r.doc["sheaf"] = js;
    }
    return r;
}

Report cmd_classify(const instance::InstanceFile& f, int degree, const ExecPolicy& pol) {
    if (!f.classify) throw input_error("instance has no \"classify\" block");
    if (degree != 1 && degree != 2) throw input_error("degree must be 1 or 2");
    const auto& b = *f.classify;
    const auto& g = *b.group;
    const auto& nerve = *b.nerve;

    Report r = start("classify");
    r.lines.push_back("charts: " + std::to_string(nerve.charts()));
    r.lines.push_back("pairs: " + std::to_string(nerve.pairs().size()));
    r.lines.push_back("triples: " + std::to_string(nerve.triples().size()));
    r.lines.push_back(group_line("group", g));
    r.lines.push_back("degree: " + std::to_string(degree));
    r.doc["nerve"] = instance::nerve_to_json(nerve);
    r.doc["group"] = group_info(g);
    r.doc["degree"] = degree;

    if (degree == 1) {
        std::ostringstream po;
        po << "pair order: [";
        for (std::size_t p = 0; p < nerve.pairs().size(); ++p) {
            if (p) po << ", ";
            po << "(" << nerve.pairs()[p].first << "," << nerve.pairs()[p].second << ")";
        }
        po << "]";
        r.lines.push_back(po.str());

        const auto cls = cech::h1_classes(b.nerve, b.group, pol);
        r.lines.push_back("classes: " + std::to_string(cls.count));
        json reps = json::array();
        for (std::size_t k = 0; k < cls.reps.size(); ++k) {
            r.lines.push_back("  class " + std::to_string(k) + ": " +
                              cocycle1_text(cls.reps[k]));
            reps.push_back(cocycle1_json(cls.reps[k]));
        }
        r.doc["classes"] = json{{"count", cls.count}, {"reps", reps}};
    } else {
        std::ostringstream to;
        to << "triple order: [";
        for (std::size_t t = 0; t < nerve.triples().size(); ++t) {
            if (t) to << ", ";
            const auto& tr = nerve.triples()[t];
            to << "(" << tr[0] << "," << tr[1] << "," << tr[2] << ")";
        }
        to << "]";
        r.lines.push_back(to.str());

        const auto cls = cech::h2_classes(b.nerve, g, pol);
        r.lines.push_back("classes: " + std::to_string(cls.count));
        json reps = json::array();
        for (std::size_t k = 0; k < cls.reps.size(); ++k) {
            r.lines.push_back("  class " + std::to_string(k) + ": " +
                              name_list(g, cls.reps[k].values));
            json o = json::object();
            for (std::size_t t = 0; t < nerve.triples().size(); ++t) {
                const auto& tr = nerve.triples()[t];
                o[pair_key(tr[0], tr[1]) + "," + std::to_string(tr[2])] =
                    g.name(cls.reps[k].values[t]);
            }
            reps.push_back(o);
        }
        r.doc["classes"] = json{{"count", cls.count}, {"reps", reps}};
    }
    return r;
}

std::vector<std::vector<lift::Lift>> homomorphic_families(
    const lift::EquivariantInstance& inst) {
    const auto& g = *inst.space.group;
    const int n = g.order();
    const std::vector<Elt> gens = g.generating_set();

    std::vector<std::vector<lift::Lift>> candidates;
    candidates.reserve(gens.size());
    for (Elt x : gens) candidates.push_back(lift::lifts_of(inst, x));

    const lift::Lift identity_lift{
        g.identity(), std::vector<Elt>(static_cast<std::size_t>(inst.bundle.nerve()->charts()),
                                       inst.bundle.group()->identity())};

    std::vector<std::vector<lift::Lift>> out;
    std::vector<lift::Lift> pick(gens.size());

    std::function<void(std::size_t)> assign = [&](std::size_t k) {
        if (k < gens.size()) {
            for (const auto& l : candidates[k]) {
                pick[k] = l;
                assign(k + 1);
            }
            return;
        }
        // Extend the generator assignment to all of G by word closure; any
        // conflict between two words for the same element kills the branch.
        std::vector<char> have(static_cast<std::size_t>(n), 0);
        std::vector<lift::Lift> fam(static_cast<std::size_t>(n));
        fam[g.identity()] = identity_lift;
        have[g.identity()] = 1;
        std::vector<Elt> frontier{g.identity()};
        while (!frontier.empty()) {
            std::vector<Elt> next;
            for (Elt a : frontier) {
                for (std::size_t t = 0; t < gens.size(); ++t) {
                    const Elt ax = g.mul(a, gens[t]);
                    lift::Lift l = lift::compose_lifts(inst, fam[a], pick[t]);
                    if (!have[ax]) {
                        have[ax] = 1;
                        fam[ax] = std::move(l);
                        next.push_back(ax);
                    } else if (!(fam[ax] == l)) {
                        return;
                    }
                }
            }
            frontier = std::move(next);
        }
        // The closure reached every element (the set generates); the family
        // counts only if it is multiplicative on every pair, not just on the
        // words used to build it.
        for (Elt a = 0; a < n; ++a)
            for (Elt b = 0; b < n; ++b)
                if (!(lift::compose_lifts(inst, fam[a], fam[b]) == fam[g.mul(a, b)]))
                    return;
        out.push_back(fam);
    };
    assign(0);
    std::sort(out.begin(), out.end());
    return out;
}

Report cmd_lift(const instance::InstanceFile& f, const ExecPolicy& pol) {
    if (!f.lift) throw input_error("instance has no \"lift\" block");
    const auto& inst = f.lift->inst;
    const auto& g = *inst.space.group;
    const auto& h = *inst.bundle.group();

    Report r = start("lift");
    r.lines.push_back("charts: " + std::to_string(inst.bundle.nerve()->charts()));
    r.lines.push_back(group_line("acting group", g));
    r.lines.push_back(group_line("bundle group", h));
    r.doc["nerve"] = instance::nerve_to_json(*inst.bundle.nerve());
    r.doc["acting_group"] = group_info(g);
    r.doc["bundle_group"] = group_info(h);

    const auto lg = lift::aut_group(inst, pol);
    r.lines.push_back("every element lifts: " + yes_no(lg.c1.ok));
    if (!lg.c1.ok)
        r.lines.push_back("  no lift over: " + name_list(g, lg.c1.failing));
    r.lines.push_back("lift group order: " + std::to_string(lg.elements.size()));
    r.lines.push_back("gauge order: " + std::to_string(lg.kernel.size()));
    r.doc["c1"] = json{{"ok", lg.c1.ok}, {"failing", name_array(g, lg.c1.failing)}};
    r.doc["lift_group_order"] = lg.elements.size();
    r.doc["gauge_order"] = lg.kernel.size();

    const auto families = homomorphic_families(inst);

    bool split = false;
    std::size_t splitting_count = 0;
    if (lg.c1.ok) {
        const auto ob = lift::obstruction(inst, pol);
        split = ob.split;
        r.lines.push_back("split: " + yes_no(split));
        const auto cob = ext::is_coboundary(ob.extension, ob.factor_set);
        r.lines.push_back("factor set is a coboundary: " + yes_no(cob.has_value()));
        r.doc["split"] = split;
        r.doc["factor_set_coboundary"] = cob.has_value();
        splitting_count = ext::splittings(ob.extension).size();
        r.lines.push_back("splitting sections: " + std::to_string(splitting_count));
        r.doc["splitting_sections"] = splitting_count;

        if (split) {
            const auto cls = lift::enumerate_liftings(inst, pol);
            r.lines.push_back("lifting classes: " + std::to_string(cls.count));
            json reps = json::array();
            for (std::size_t k = 0; k < cls.reps.size(); ++k) {
                r.lines.push_back("  class " + std::to_string(k) + ": " +
                                  family_text(g, h, cls.reps[k]));
                reps.push_back(family_json(g, h, cls.reps[k]));
            }
            r.doc["classes"] = json{{"count", cls.count}, {"reps", reps}};

            const auto sc = ext::splitting_classes(ob.extension);
            const auto act = ext::induced_action(
                ob.extension, ext::Section::make(ob.extension, sc.reps.front()));
            const auto h1r = ext::h1(*ob.extension.N(), *ob.extension.L(), act, pol);
            const bool cross = h1r.count == cls.count;
            r.lines.push_back("h1 count: " + std::to_string(h1r.count));
            r.lines.push_back("cross-check (classes == h1): " + yes_no(cross));
            r.doc["h1_count"] = h1r.count;
            r.doc["cross_check"] = cross;
        }
    }

    const bool agrees = lg.c1.ok
                            ? families.size() == splitting_count &&
                                  (families.empty() ? !split : split)
                            : families.empty();
    r.lines.push_back("homomorphic families: " + std::to_string(families.size()));
    r.lines.push_back("direct search agrees: " + yes_no(agrees));
    r.doc["homomorphic_families"] = families.size();
    r.doc["direct_agrees"] = agrees;
    return r;
}

Report cmd_homogeneous(const instance::InstanceFile& f) {
    if (!f.homogeneous) throw input_error("instance has no \"homogeneous\" block");
    const auto& b = *f.homogeneous;
    const auto& g = *b.group;
    const auto& h = *b.fiber_group;

    Report r = start("homogeneous");
    r.lines.push_back(group_line("group", g));
    r.lines.push_back("subgroup: " + name_list(g, b.subgroup));
    r.lines.push_back(group_line("fiber group", h));
    r.lines.push_back("fiber images: " + name_list(h, b.phi));
    r.doc["group"] = group_info(g);
    r.doc["subgroup"] = name_array(g, b.subgroup);
    r.doc["fiber_group"] = group_info(h);
    r.doc["fiber_images"] = name_array(h, b.phi);

    const auto hb = lift::homogeneous_bundle(b.group, b.subgroup, b.fiber_group, b.phi);
    r.lines.push_back("cosets: " + std::to_string(hb.coset_reps.size()));
    r.lines.push_back("points: " + std::to_string(hb.points));
    r.lines.push_back("coset representatives: " + name_list(g, hb.coset_reps));
    r.doc["cosets"] = hb.coset_reps.size();
    r.doc["points"] = hb.points;
    r.doc["coset_representatives"] = name_array(g, hb.coset_reps);

    const auto hr = lift::realize_homogeneous(b.group, b.subgroup, b.fiber_group, b.phi);
    r.lines.push_back("realized: " + yes_no(hr.realized));
    r.doc["realized"] = hr.realized;
    if (!hr.realized) {
        r.lines.push_back("  detail: " + hr.detail);
        r.doc["detail"] = hr.detail;
    } else {
        const auto& inst = *hr.instance;
        const auto& pairs = inst.bundle.nerve()->pairs();
        json jt = json::object();
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto [i, j] = pairs[p];
            const Elt v = inst.bundle.chain.values[p];
            r.lines.push_back("  transition (" + std::to_string(i) + "," +
                              std::to_string(j) + "): " + h.name(v));
            jt[pair_key(i, j)] = h.name(v);
        }
        r.doc["transitions"] = jt;
        r.lines.push_back("canonical lifts: " + std::to_string(hr.canonical_lifts.size()));
        r.doc["canonical_lifts"] = hr.canonical_lifts.size();
    }

    const auto ea = lift::equivariant_automorphisms(hb);
    r.lines.push_back("equivariant automorphisms: " + std::to_string(ea.elements.size()));
    r.lines.push_back("  elements: " + name_list(h, ea.elements));
    r.lines.push_back("certificate: " +
                      std::string(ea.certificate_checked && ea.certificate_ok
                                      ? "pass" : "fail"));
    r.doc["equivariant_automorphisms"] =
        json{{"count", ea.elements.size()}, {"elements", name_array(h, ea.elements)},
             {"certificate_checked", ea.certificate_checked},
             {"certificate_ok", ea.certificate_ok}};

    if (hr.realized) {
        const auto gi = lift::gauge_iso_check(*hr.instance);
        if (gi.ok) {
            r.lines.push_back("gauge-fiber identification: ok");
            r.lines.push_back("  iso: " + name_list(h, gi.iso));
        } else {
            r.lines.push_back("gauge-fiber identification: not applicable (" +
                              gi.detail + ")");
        }
        json jg{{"ok", gi.ok}, {"detail", gi.detail}};
        if (gi.ok) jg["iso"] = name_array(h, gi.iso);
        r.doc["gauge_fiber_identification"] = jg;
    }
    return r;
}

Report cmd_clutch(const instance::InstanceFile& f, const ExecPolicy& pol) {
    if (!f.clutch) throw input_error("instance has no \"clutch\" block");
    const auto& b = *f.clutch;
    const auto& g = *b.group;
    const auto& h = *b.fiber_group;

    Report r = start("clutch");
    r.lines.push_back(group_line("group", g));
    r.lines.push_back(group_line("fiber group", h));
    r.lines.push_back("clutching value: " + h.name(b.c));
    r.doc["group"] = group_info(g);
    r.doc["fiber_group"] = group_info(h);
    r.doc["clutching_value"] = h.name(b.c);

    const auto cr = lift::clutch_two_cover(b.group, b.rho0, b.rho1, b.c);
    const bool accepted = cr.failing < 0;
    r.lines.push_back("accepted: " + yes_no(accepted));
    r.doc["accepted"] = accepted;
    if (!accepted) {
        r.lines.push_back("  failing element: " + g.name(cr.failing) +
                          " (the two fiber actions are not conjugate by the "
                          "clutching value there)");
        r.doc["failing"] = g.name(cr.failing);
        return r;
    }

    const auto& inst = *cr.instance;
    r.lines.push_back("transition (0,1): " + h.name(inst.bundle.g(0, 1)));
    r.doc["transition"] = h.name(inst.bundle.g(0, 1));

    bool section_hom = true;
    for (Elt x = 0; x < g.order() && section_hom; ++x)
        for (Elt y = 0; y < g.order() && section_hom; ++y)
            section_hom = lift::compose_lifts(inst, cr.section[x], cr.section[y]) ==
                          cr.section[g.mul(x, y)];
    r.lines.push_back("glued section is a lifting action: " + yes_no(section_hom));
    r.doc["section_homomorphic"] = section_hom;

    const auto c1 = lift::check_c1(inst, pol);
    r.lines.push_back("every element lifts: " + yes_no(c1.ok));
    r.doc["c1"] = json{{"ok", c1.ok}, {"failing", name_array(g, c1.failing)}};
    if (c1.ok) {
        const auto ob = lift::obstruction(inst, pol);
        r.lines.push_back("split: " + yes_no(ob.split));
        r.doc["split"] = ob.split;
        if (ob.split) {
            const auto cls = lift::enumerate_liftings(inst, pol);
            r.lines.push_back("lifting classes: " + std::to_string(cls.count));
            r.doc["lifting_classes"] = cls.count;
        }
    }
    return r;
}

}  // namespace equilift::commands
