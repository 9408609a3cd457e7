#pragma once

// Exact computation of homology modules of finitely presented groups over
// multivariate Laurent polynomial rings, with torsion/rank/freeness tests
// chained into certified co-rank bounds.

#include "abelianize.hpp"    // IWYU pragma: export
#include "certificate.hpp"   // IWYU pragma: export
#include "demos.hpp"         // IWYU pragma: export
#include "dsl.hpp"           // IWYU pragma: export
#include "errors.hpp"        // IWYU pragma: export
#include "fox.hpp"           // IWYU pragma: export
#include "gcd.hpp"           // IWYU pragma: export
#include "groebner.hpp"      // IWYU pragma: export
#include "int_matrix.hpp"    // IWYU pragma: export
#include "json_io.hpp"       // IWYU pragma: export
#include "laurent.hpp"       // IWYU pragma: export
#include "laurent_text.hpp"  // IWYU pragma: export
#include "matrix.hpp"        // IWYU pragma: export
#include "module_ops.hpp"    // IWYU pragma: export
#include "numeric.hpp"       // IWYU pragma: export
#include "obstruction.hpp"   // IWYU pragma: export
#include "pipeline.hpp"      // IWYU pragma: export
#include "presentation.hpp"  // IWYU pragma: export
#include "rng.hpp"           // IWYU pragma: export
#include "word.hpp"          // IWYU pragma: export
