#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rrfilt/ideal.hpp"

namespace rrfilt {

/// Reconstructs a normalized ideal from its canonical rendering
/// (min, conductor, window members): the set is members ∪ [conductor, oo).
NormalizedIdeal ideal_from_rendering(SemigroupPtr s, std::int64_t min, std::int64_t conductor,
                                     const std::vector<std::int64_t>& members);

/// Batch front end. Commands: info, colon, rr, closure, indices, series,
/// verdict, hilbert, oracle-check. Returns the process exit code:
/// 0 success, 1 oracle disagreement, 2 validation error, 3 internal guard.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rrfilt
