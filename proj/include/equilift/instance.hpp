#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equilift/ext.hpp"
#include "equilift/fincat.hpp"
#include "equilift/lift.hpp"
#include "json.hpp"

namespace equilift::instance {

using grp::Elt;
using grp::GroupPtr;

/// Groups declared by an instance file, keyed by their file-local id. A
/// group declared by constructor name remembers it so serialization can
/// emit the name instead of the full table.
struct GroupRegistry {
    std::map<std::string, GroupPtr> by_id;
    std::map<std::string, std::string> named_spec;  // id -> constructor string

    const GroupPtr& get(const std::string& id) const;
};

struct SiteBlock {
    fincat::FiniteCategory category;
    fincat::Topology topology;
    std::optional<fincat::SetPresheaf> presheaf;
};

struct ClassifyBlock {
    cech::NervePtr nerve;
    GroupPtr group;
    std::string group_id;
};

struct LiftBlock {
    lift::EquivariantInstance inst;
    std::string bundle_group_id, action_group_id;
};

struct ExtensionBlock {
    ext::Extension extension;
    std::string kernel_id, total_id, quotient_id;
};

struct HomogeneousBlock {
    GroupPtr group, fiber_group;
    std::string group_id, fiber_group_id;
    std::vector<Elt> subgroup;  // sorted element indices in `group`
    std::vector<Elt> phi;       // aligned with `subgroup`
};

struct ClutchBlock {
    GroupPtr group, fiber_group;
    std::string group_id, fiber_group_id;
    grp::Hom rho0, rho1;
    Elt c = 0;
};

/// One parsed instance file: shared group table plus one block per concern.
/// Loading validates every structural invariant of the referenced types, so
/// a held InstanceFile is fully checked.
struct InstanceFile {
    int version = 1;
    GroupRegistry groups;
    std::optional<SiteBlock> site;
    std::optional<ClassifyBlock> classify;
    std::optional<LiftBlock> lift;
    std::optional<ExtensionBlock> extension;
    std::optional<HomogeneousBlock> homogeneous;
    std::optional<ClutchBlock> clutch;
};

/// Parses and validates. Throws input_error with a field path on malformed
/// data; propagates unsupported_error untouched.
InstanceFile parse(const nlohmann::json& j);

/// Reads `path`, parses and validates. JSON syntax errors surface as
/// input_error carrying the parser's position message.
InstanceFile load(const std::string& path);

/// Serializes so that parse(to_json(f)) reproduces an equivalent file.
/// Element references are emitted as names, structures in explicit form.
nlohmann::json to_json(const InstanceFile& f);

/// Nerve loader shared by the classify and lift blocks: either shorthand
/// ({"cycle": n}, {"path": n}, {"complete": n, "triples": bool}) or explicit
/// {"charts", "pairs", "triples"}.
cech::NervePtr nerve_from_json(const nlohmann::json& j);
nlohmann::json nerve_to_json(const cech::Nerve& n);

/// Element lookup: accepts a name (string) or an index (integer).
Elt element_from_json(const grp::FiniteGroup& g, const nlohmann::json& j,
                      const std::string& context);

}  // namespace equilift::instance
