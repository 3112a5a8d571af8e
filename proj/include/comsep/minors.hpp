#pragma once

#include "comsep/sign_system.hpp"

namespace comsep {

/// L/F: covectors vanishing on F, restricted to E \ F.
SignSystem contraction(const SignSystem& m, ElementSet f);
/// L \ F: every covector restricted to E \ F.
SignSystem deletion(const SignSystem& m, ElementSet f);
SignSystem reorient_system(const SignSystem& m, ElementSet s);

/// Covectors with sign `side` at `element`, with that element deleted.
/// Preserves (FS) and (SE); the result usually lacks the zero vector.
SignSystem open_halfspace(const SignSystem& m, std::size_t element, Sign side);

/// True iff the deletion of E \ A realizes all 3^|A| sign patterns.
bool is_shattered(const SignSystem& m, ElementSet a);

/// Largest shattered subset size. Throws Error on the empty system.
std::size_t rank(const SignSystem& m);

/// The directed circuit C_n on e1..en: the zero vector plus every sign
/// vector carrying at least one + and one -. C_1 is the loop system {(0)}.
SignSystem directed_circuit(std::size_t n);

}  // namespace comsep
