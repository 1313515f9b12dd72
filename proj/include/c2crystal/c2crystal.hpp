#pragma once

// Umbrella header for the C2 crystal library.

#include "tableau.hpp"    // IWYU pragma: export
#include "signature.hpp"  // IWYU pragma: export
#include "operators.hpp"  // IWYU pragma: export
#include "crystal.hpp"    // IWYU pragma: export
#include "relations.hpp"  // IWYU pragma: export
#include "audit.hpp"      // IWYU pragma: export
