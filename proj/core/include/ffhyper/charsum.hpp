#pragma once

#include <cstdint>

#include "ffhyper/cyclotomic.hpp"
#include "ffhyper/field.hpp"

namespace ffhyper {

// Brute-force character sums: the independent ground truth the rest of the
// library is checked against. These loop over field elements directly and
// share nothing with the hypergeometric evaluators beyond field/character
// primitives.

/// sum over y in F_q of phi(y) phi(1 - 2y + x y^2), as a plain integer.
int64_t phi_quadratic_sum(const FieldCtx& ctx, FqElem x);

/// sum_chi {phi chi^2 | chi} {phi chi | chi} chi(x/4); x must be nonzero.
CycRat sum_A(const FieldCtx& ctx, FqElem x);

/// sum_chi {phi chi^2 | chi} {phi chi | chi^2} chi(x-1); x must differ from 1.
CycRat sum_B(const FieldCtx& ctx, FqElem x);

/// f(u) = p/(p-1) * sum_A(u) over a prime field; u must be nonzero.
CycRat f_u(const FieldCtx& ctx, FqElem u);

}  // namespace ffhyper
