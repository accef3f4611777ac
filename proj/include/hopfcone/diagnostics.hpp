#pragma once

#include <cstdint>

namespace hopfcone {

// Clamped inverse cosine. Arguments outside [-1, 1] by more than kClampWarn
// are counted (and reported on stderr) as suspected logic errors rather than
// roundoff.
inline constexpr double kClampWarn = 1e-9;

double clamped_acos(double c);
double clamped_asin(double s);

/// Number of clamps beyond kClampWarn since process start.
std::uint64_t clamp_warning_count();

/// Silence the stderr line for clamp warnings (the counter still runs).
void set_clamp_warnings_quiet(bool quiet);

}  // namespace hopfcone
