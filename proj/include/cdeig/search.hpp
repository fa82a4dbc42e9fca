#pragma once

#include <cstdint>
#include <string>

#include "cdeig/spectrum.hpp"

namespace cdeig {

/// Empirical exploration of open questions, emitting deterministic CSV.
///
///  - "eig1-dims": samples elements from several constructed families and
///    tallies the observed dimension of the 1-eigenspace.
///    Columns: dim_eig1,count (rows ascending by dimension).
///  - "zd-spectra": samples constructed zero-divisor families and tallies the
///    distinct spectra, values rounded to the cluster tolerance.
///    Columns: spectrum,count where spectrum is "v:m;v:m;..." ascending,
///    rows sorted by the spectrum string.
///
/// Levels 4 through 8; throws std::invalid_argument otherwise.
std::string run_search(const std::string& question, int level, int samples, uint64_t seed,
                       double cluster_tol = kClusterTol);

}  // namespace cdeig
