#pragma once

#include <cstddef>

#include "liedeform/lie_algebra.hpp"

namespace liedeform::algebras {

/// <x, y | [x, y] = x>
LieAlgebra r2();
/// <e1, e2, e3 | [e1, e2] = e2, [e1, e3] = e3>
LieAlgebra r31();
/// Heisenberg algebra of dimension 2n+1 on (e1..e2n, z), [e_i, e_{n+i}] = z.
LieAlgebra heisenberg(std::size_t n);
/// Free 2-step nilpotent algebra of rank 3 on (x1, x2, x3, x12, x13, x23).
LieAlgebra free2step3();
/// <e1..e4 | [e1, e3] = e3, [e2, e4] = e4>
LieAlgebra ex4dim();
/// <e1..en | [e1, e_i] = e_i (i >= 4), [e2, e3] = e3>; n >= 4.
LieAlgebra exndim(std::size_t n = 5);
/// Split sl2 on (e, h, f): [h, e] = 2e, [h, f] = -2f, [e, f] = h.
LieAlgebra sl2();
LieAlgebra abelian(std::size_t n);

}  // namespace liedeform::algebras
