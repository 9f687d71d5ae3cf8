#pragma once

#include <cstdint>
#include <vector>

#include "sgholder/model.hpp"

namespace sgholder {

// Test function number `index` of the ensemble `seed`: i.i.d. standard
// complex normal coefficients in the spectral basis (modes with
// |k|_inf <= bandwidth on lattice models, bandwidth 0 meaning the model's
// own), kernel coefficients zeroed, then normalized to sup norm 1.
// Coefficients are drawn from RandomStream(seed, index) in spectral order.
Function random_test_function(const SemigroupModel& m, std::uint64_t seed, std::uint64_t index, int bandwidth = 0);

std::vector<Function> random_test_functions(const SemigroupModel& m, std::uint64_t seed, std::size_t count,
                                            int bandwidth = 0);

}  // namespace sgholder
