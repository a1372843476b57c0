#pragma once

#include <string>

namespace isobound {

/// Significant digits used for every number written to a report artifact.
inline constexpr int kArtifactDigits = 12;

/// Formats `value` with `digits` significant digits ("%.*g"). Non-finite
/// values print as "nan", "inf" or "-inf".
std::string format_real(double value, int digits = kArtifactDigits);

/// Rounds `value` to `digits` significant digits. The result prints back
/// (shortest round-trip) as the same digits that format_real produces.
double round_significant(double value, int digits = kArtifactDigits);

}  // namespace isobound
