#pragma once

#include <string_view>
#include <vector>

#include "pldual/report.hpp"

namespace pldual {

enum class Suite { identities, variational, spectra, duality, all };

Suite parse_suite(std::string_view name);

// Runs the verification checks of a suite; each outcome carries the measured
// value and the tolerance it was held to.
std::vector<CheckOutcome> run_suite(Suite suite);

}  // namespace pldual
