#pragma once

// JSON documents written by the command-line tool. Output is deterministic:
// object keys are sorted and arrays keep their computed order.

#include <cstdint>
#include <string>
#include <vector>

#include "biq/biquotient.hpp"
#include "biq/lefschetz.hpp"

namespace biq {

std::string presentation_json(const GradedAlgebraPresentation& pres);

/// Euler characteristic of a degree-indexed Betti list.
long long euler_characteristic(const std::vector<std::size_t>& betti);

std::string betti_json(const GradedAlgebraPresentation& pres, const std::vector<std::size_t>& betti);

std::string verdict_json(const HlpVerdict& verdict, const VariableContext& ctx,
                         const std::vector<std::size_t>& betti, std::int64_t runtime_ms);

}  // namespace biq
