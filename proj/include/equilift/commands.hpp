#pragma once

#include <string>
#include <vector>

#include "equilift/instance.hpp"
#include "equilift/lift.hpp"
#include "equilift/parallel.hpp"
#include "json.hpp"

namespace equilift::commands {

/// A finished command result in both renderings. The text form is one line
/// per entry of `lines`; the JSON form carries the same facts structurally,
/// always with {"report_version": 1, "command": <name>} at the top level.
/// Every field is computed deterministically, so renderings are byte-for-byte
/// reproducible across worker counts.
struct Report {
    std::vector<std::string> lines;
    nlohmann::json doc;

    /// Lines joined with a trailing newline each.
    std::string text() const;
};

/// Validates the covering topology of the site block and, when a presheaf is
/// present, tests its sheaf condition. Issues are reported as verdicts with
/// witnesses, not as errors.
Report cmd_check_site(const instance::InstanceFile& f);

/// Classifies cocycles on the classify block's nerve up to gauge. Degree 1
/// works over any group; degree 2 requires an abelian band and propagates
/// the engine's unsupported verdict otherwise.
Report cmd_classify(const instance::InstanceFile& f, int degree,
                    const ExecPolicy& pol = {});

/// Full lifting analysis of the lift block: elementwise liftability (failures
/// are verdicts with witnesses), the group of lifts, the splitting verdict of
/// the associated extension, lifting-action classes with their degree-1
/// cross-check, and an independent direct search for homomorphic families.
Report cmd_lift(const instance::InstanceFile& f, const ExecPolicy& pol = {});

/// Builds the homogeneous block's quotient bundle, realizes it on the coset
/// nerve, lists the equivariant fiber translations with their certificate,
/// and attempts the gauge-fiber identification.
Report cmd_homogeneous(const instance::InstanceFile& f);

/// Glues the clutch block's two-chart bundle; on acceptance reports the
/// transition, elementwise liftability, and the splitting verdict.
Report cmd_clutch(const instance::InstanceFile& f, const ExecPolicy& pol = {});

/// Direct search for homomorphic lifting families: assigns a lift to each
/// member of a generating set, extends by word closure, and keeps the
/// assignments whose extension is multiplicative on every pair. Families are
/// indexed by group element and returned sorted; the result is empty exactly
/// when no lifting action exists. Independent of the extension machinery, so
/// the two routes can be compared.
std::vector<std::vector<lift::Lift>> homomorphic_families(
    const lift::EquivariantInstance& inst);

}  // namespace equilift::commands
