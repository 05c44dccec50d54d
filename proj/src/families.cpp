#include "ctp/families.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ctp {

namespace {

constexpr double kImageTol = 1e-12;

ParamRegion interval(double lo, double hi) {
    ParamRegion r;
    r.normals = {{1.0}, {-1.0}};
    r.bounds = {lo, -hi};
    r.box = {{lo, hi}};
    return r;
}

ParamRegion box2(double lo1, double hi1, double lo2, double hi2) {
    ParamRegion r;
    r.normals = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
    r.bounds = {lo1, -hi1, lo2, -hi2};
    r.box = {{lo1, hi1}, {lo2, hi2}};
    return r;
}

// box plus a two-sided constraint on lambda1 + lambda2
ParamRegion box2_with_sum(double lo1, double hi1, double lo2, double hi2,
                          double sum_lo, double sum_hi) {
    ParamRegion r = box2(lo1, hi1, lo2, hi2);
    r.normals.push_back({1.0, 1.0});
    r.bounds.push_back(sum_lo);
    r.normals.push_back({-1.0, -1.0});
    r.bounds.push_back(-sum_hi);
    return r;
}

const std::array<FamilyInfo, 13>& registry() {
    static const std::array<FamilyInfo, 13> families = {{
        {FamilyId::G, "g", "CTP_G", 2, box2(0, 1, -1, 1), {1.0, 1.0}},
        {FamilyId::MG, "mg", "CTP_MG", 2, box2_with_sum(0, 3, 0, 3, 0, 3), {1.0, 1.0}},
        {FamilyId::A, "a", "CTP_A", 1, interval(-1, 1), {0.0}},
        {FamilyId::MA, "ma", "CTP_MA", 1, interval(-1, 3), {0.0}},
        {FamilyId::R18a, "r18a", "CTP_R18a", 2, box2_with_sum(-1, 1, -1, 1, -2, 1), {0.0, 0.0}},
        {FamilyId::MR18a, "mr18a", "CTP_MR18a", 2, box2_with_sum(-1, 2, -1, 2, -2, 1), {0.0, 0.0}},
        {FamilyId::R18b, "r18b", "CTP_R18b", 2, box2(-1, 1, 0, 1), {0.0, 0.0}},
        {FamilyId::MR18b, "mr18b", "CTP_MR18b", 2, box2_with_sum(-2, 1, -2, 1, -1, 2), {0.0, 0.0}},
        {FamilyId::R19, "r19", "CTP_R19", 1, interval(-1, 1), {0.0}},
        {FamilyId::MR19, "mr19", "CTP_MR19", 1, interval(-2, 1), {0.0}},
        {FamilyId::R23, "r23", "CTP_R23", 2, box2(-1, 1, 0, 2), {0.0, 1.0}},
        {FamilyId::TP, "tp", "TP", 1, interval(-1, 1), {0.0}},
        {FamilyId::Pareto, "pareto", "Pareto", 0, ParamRegion{}, {}},
    }};
    return families;
}

void check_dimension(const FamilyInfo& info, const FamilyParams& params) {
    if (params.size() != info.dimension) {
        throw std::invalid_argument(std::string("family ") + std::string(info.name) +
                                    " expects " + std::to_string(info.dimension) +
                                    " parameter(s), got " + std::to_string(params.size()));
    }
}

std::optional<InverseResult> curve_inverse(double lambda, double expected_d2, double actual_d2) {
    if (std::abs(actual_d2 - expected_d2) > kImageTol) return std::nullopt;
    return InverseResult{{lambda}, true};
}

}  // namespace

bool ParamRegion::contains(std::span<const double> theta, double tol) const {
    for (std::size_t i = 0; i < normals.size(); ++i) {
        double dot = 0.0;
        for (std::size_t j = 0; j < normals[i].size(); ++j) dot += normals[i][j] * theta[j];
        if (dot < bounds[i] - tol) return false;
    }
    return true;
}

double ParamRegion::violation(std::span<const double> theta) const {
    double total = 0.0;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        double dot = 0.0;
        for (std::size_t j = 0; j < normals[i].size(); ++j) dot += normals[i][j] * theta[j];
        if (dot < bounds[i]) total += bounds[i] - dot;
    }
    return total;
}

const FamilyInfo& family_info(FamilyId family) {
    return registry()[static_cast<std::size_t>(family)];
}

std::span<const FamilyId> all_families() {
    static const std::array<FamilyId, 13> ids = {
        FamilyId::G, FamilyId::MG, FamilyId::A, FamilyId::MA, FamilyId::R18a,
        FamilyId::MR18a, FamilyId::R18b, FamilyId::MR18b, FamilyId::R19,
        FamilyId::MR19, FamilyId::R23, FamilyId::TP, FamilyId::Pareto};
    return ids;
}

std::span<const FamilyId> original_set() {
    static const std::array<FamilyId, 8> ids = {
        FamilyId::G, FamilyId::A, FamilyId::R18a, FamilyId::R18b,
        FamilyId::R19, FamilyId::R23, FamilyId::TP, FamilyId::Pareto};
    return ids;
}

std::span<const FamilyId> modified_set() {
    static const std::array<FamilyId, 8> ids = {
        FamilyId::MG, FamilyId::MA, FamilyId::MR18a, FamilyId::MR18b,
        FamilyId::MR19, FamilyId::R23, FamilyId::TP, FamilyId::Pareto};
    return ids;
}

std::optional<FamilyId> parse_family(std::string_view name) {
    for (const FamilyInfo& info : registry()) {
        if (info.name == name) return info.id;
    }
    return std::nullopt;
}

std::string_view family_name(FamilyId family) { return family_info(family).name; }

std::string_view family_label(FamilyId family) { return family_info(family).label; }

DeltaCoefficients to_delta(FamilyId family, const FamilyParams& params) {
    check_dimension(family_info(family), params);
    switch (family) {
        case FamilyId::G:
        case FamilyId::MG:
            return {params[0], params[1] - params[0]};
        case FamilyId::A:
        case FamilyId::MA:
            return {1.0 + params[0], -2.0 * params[0]};
        case FamilyId::R18a:
        case FamilyId::MR18a:
            return {1.0 + params[0], params[1] - params[0]};
        case FamilyId::R18b:
        case FamilyId::MR18b:
            return {1.0 + params[0] + params[1], -params[0] - 2.0 * params[1]};
        case FamilyId::R19:
        case FamilyId::MR19:
            return {1.0 - params[0], 3.0 * params[0]};
        case FamilyId::R23:
            return {1.0 + params[0] - params[0] * params[1],
                    2.0 * params[0] * params[1] - params[0]};
        case FamilyId::TP:
            return {1.0 + params[0], -params[0]};
        case FamilyId::Pareto:
            return {1.0, 0.0};
    }
    throw std::logic_error("to_delta: unknown family");
}

std::optional<InverseResult> from_delta(FamilyId family, const DeltaCoefficients& delta) {
    const double d1 = delta.delta1;
    const double d2 = delta.delta2;
    switch (family) {
        case FamilyId::G:
        case FamilyId::MG:
            return InverseResult{{d1, d1 + d2}, true};
        case FamilyId::R18a:
        case FamilyId::MR18a:
            return InverseResult{{d1 - 1.0, d1 + d2 - 1.0}, true};
        case FamilyId::R18b:
        case FamilyId::MR18b: {
            const double d3 = delta.delta3();
            return InverseResult{{d1 - 1.0 - d3, d3}, true};
        }
        case FamilyId::R23: {
            const double lambda = 2.0 * d1 + d2 - 2.0;
            const double lambda_eta = d1 + d2 - 1.0;
            if (std::abs(lambda) <= kImageTol) {
                // eta drops out of the map at lambda = 0; the preimage
                // exists only for delta = (1,0) and eta is unidentifiable
                if (std::abs(lambda_eta) > kImageTol) return std::nullopt;
                return InverseResult{{0.0, 0.0}, false};
            }
            return InverseResult{{lambda, lambda_eta / lambda}, true};
        }
        case FamilyId::A:
        case FamilyId::MA:
            return curve_inverse(d1 - 1.0, -2.0 * (d1 - 1.0), d2);
        case FamilyId::R19:
        case FamilyId::MR19:
            return curve_inverse(1.0 - d1, 3.0 * (1.0 - d1), d2);
        case FamilyId::TP:
            return curve_inverse(d1 - 1.0, -(d1 - 1.0), d2);
        case FamilyId::Pareto:
            if (std::abs(d1 - 1.0) > kImageTol || std::abs(d2) > kImageTol) return std::nullopt;
            return InverseResult{{}, true};
    }
    throw std::logic_error("from_delta: unknown family");
}

bool region_contains(FamilyId family, const FamilyParams& params) {
    const FamilyInfo& info = family_info(family);
    check_dimension(info, params);
    return info.region.contains(params);
}

std::vector<FamilyParams> region_sample(FamilyId family, std::size_t n, std::uint64_t seed) {
    const FamilyInfo& info = family_info(family);
    std::vector<FamilyParams> points;
    points.reserve(n);
    if (info.dimension == 0) {
        points.assign(n, FamilyParams{});
        return points;
    }
    std::mt19937_64 eng(seed);
    auto draw01 = [&eng]() { return std::ldexp(static_cast<double>(eng() >> 11), -53); };
    while (points.size() < n) {
        FamilyParams candidate(info.dimension);
        for (std::size_t j = 0; j < info.dimension; ++j) {
            const auto [lo, hi] = info.region.box[j];
            candidate[j] = lo + (hi - lo) * draw01();
        }
        if (info.region.contains(candidate)) points.push_back(std::move(candidate));
    }
    return points;
}

}  // namespace ctp
