#pragma once

#include <vector>

namespace ctp {

/// The 72 peak flood exceedances (m^3/s) of the Wheaton River recorded
/// between 1958 and 1984, from Choulakian & Stephens (2001). Also shipped
/// as data/wheaton_river.csv; a checksum test keeps the two in sync.
const std::vector<double>& wheaton_river();

}  // namespace ctp
