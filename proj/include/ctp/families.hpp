#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctp/delta.hpp"

namespace ctp {

/// The named parameterizations. G/MG, A/MA, R18a/MR18a, R18b/MR18b and
/// R19/MR19 share a delta map and differ only in feasible region; R23 has a
/// single region. TP and Pareto are the degenerate quadratic (delta3 = 0)
/// and baseline (delta = (1,0)) cases, registered so comparison tables need
/// no separate code path.
enum class FamilyId {
    G, MG, A, MA, R18a, MR18a, R18b, MR18b, R19, MR19, R23, TP, Pareto
};

using FamilyParams = std::vector<double>;

/// Linear inequality system A*theta >= b over the family's lambda
/// coordinates, plus the coordinate bounding box used for sampling.
struct ParamRegion {
    std::vector<std::vector<double>> normals;  // rows of A
    std::vector<double> bounds;                // entries of b
    std::vector<std::pair<double, double>> box;

    /// All inequalities hold within tolerance (boundary counts as inside).
    bool contains(std::span<const double> theta, double tol = 1e-12) const;

    /// Sum of constraint violations, zero iff contains() at tol 0.
    double violation(std::span<const double> theta) const;
};

struct FamilyInfo {
    FamilyId id;
    std::string_view name;   // stable lowercase id used by the CLI and JSON
    std::string_view label;  // display label for tables
    std::size_t dimension;   // 0, 1 or 2 lambda parameters
    ParamRegion region;
    FamilyParams identity;   // point mapping to delta = (1,0)
};

const FamilyInfo& family_info(FamilyId family);
std::span<const FamilyId> all_families();
std::span<const FamilyId> original_set();  // comparison set of unmodified models
std::span<const FamilyId> modified_set();  // comparison set of corrected models

std::optional<FamilyId> parse_family(std::string_view name);
std::string_view family_name(FamilyId family);
std::string_view family_label(FamilyId family);

/// Exact affine (bilinear for R23) map from family parameters into
/// delta-space. Throws std::invalid_argument on dimension mismatch.
DeltaCoefficients to_delta(FamilyId family, const FamilyParams& params);

/// Inverse map result; `unique` is false when the preimage is not unique
/// (R23 at lambda = 0, where eta drops out and 0 is returned canonically).
struct InverseResult {
    FamilyParams params;
    bool unique = true;
};

/// Exact inverse of to_delta where one exists: everywhere for 2-parameter
/// families, only on the image curve for 1-parameter families. Returns
/// nullopt when delta is off the family's image.
std::optional<InverseResult> from_delta(FamilyId family, const DeltaCoefficients& delta);

/// True iff params satisfies every region inequality within 1e-12.
bool region_contains(FamilyId family, const FamilyParams& params);

/// n points of the feasible region, by rejection sampling of the bounding
/// box against the inequality system; deterministic per seed.
std::vector<FamilyParams> region_sample(FamilyId family, std::size_t n, std::uint64_t seed);

}  // namespace ctp
