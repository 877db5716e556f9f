#pragma once

namespace chevcert {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kCertificateSchemaVersion = 1;
// Bump when the irregular-index algorithm changes; cache records are keyed by it.
inline constexpr int kIrregularAlgoVersion = 1;

}  // namespace chevcert
