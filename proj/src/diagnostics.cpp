#include "hopfcone/diagnostics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>

namespace hopfcone {
namespace {

std::atomic<std::uint64_t> g_clamp_warnings{0};
std::atomic<bool> g_quiet{false};

double clamp_unit(double c, const char* who) {
  const double excess = std::abs(c) - 1.0;
  if (excess > kClampWarn) {
    g_clamp_warnings.fetch_add(1, std::memory_order_relaxed);
    if (!g_quiet.load(std::memory_order_relaxed)) {
      std::fprintf(stderr, "hopfcone: warning: %s argument %.17g clamped to [-1, 1]\n", who, c);
    }
  }
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace

double clamped_acos(double c) { return std::acos(clamp_unit(c, "acos")); }

double clamped_asin(double s) { return std::asin(clamp_unit(s, "asin")); }

std::uint64_t clamp_warning_count() { return g_clamp_warnings.load(std::memory_order_relaxed); }

void set_clamp_warnings_quiet(bool quiet) { g_quiet.store(quiet, std::memory_order_relaxed); }

}  // namespace hopfcone
