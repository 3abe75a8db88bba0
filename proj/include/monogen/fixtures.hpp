#pragma once
// Bundled example algebras, frames, and component functions. These back the
// self-test subcommand and the test suites.

#include <string>
#include <vector>

#include "monogen/monogenic.hpp"

namespace monogen::fixtures {

struct Fixture {
    std::string name;
    Algebra algebra;
    VariableFrame frame;
    MonogenicFunction fn_poly;  // cubic polynomial components
    MonogenicFunction fn_mixed; // polynomial plus exponential components
};

// The complex field itself: m = n = 1, frame {1, i}.
Fixture complex_field();

// Dual numbers: one idempotent, one square-zero nilpotent.
Fixture dual_numbers();

// m = 1, n = 3 with I_2 I_2 = I_3; the smallest nontrivial radical chain.
Fixture chain3();

// Semi-simple two-component algebra, frame {1, i I_1, i I_2}.
Fixture bicomplex();

// m = 2, n = 4, distinct u_s and trivial nilpotent products.
Fixture prop2_pair();

// m = 2, n = 5 with a depth-three chain attached to the first idempotent.
Fixture chain5();

std::vector<Fixture> all_fixtures();

// Frame {1, I_2, I_3} over chain3: handy for resolvent spot checks, not
// surjective in the f_1 direction.
VariableFrame chain3_basis_frame(const Algebra& chain3_algebra);

// Deliberately broken specs for validator tests.
Algebra broken_assoc_nilpotent();   // fails (I_2 I_2) I_3 = I_2 (I_2 I_3)
Algebra broken_assoc_idempotent();  // fails (I_1 I_3) I_4 = I_1 (I_3 I_4)
Algebra prop2_contradiction();      // distinct u_s yet a nonzero nilpotent product

} // namespace monogen::fixtures
