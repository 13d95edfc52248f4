#pragma once

namespace ballot {

/// Selects the OpenMP kernel or its single-threaded reference.
enum class Exec { Serial, Parallel };

}  // namespace ballot
