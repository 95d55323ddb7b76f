#pragma once

#include "khof/diagram.hpp"
#include "khof/polynomial.hpp"

namespace khof {

/// Kauffman bracket in A, normalized so the unknot has bracket 1.
LaurentPoly kauffman_bracket(const OrientedPDDiagram& d);

/// Jones polynomial in q = t^{1/2}: V = (-A)^{-3w} <d> with t = A^{-4}.
LaurentPoly jones(const OrientedPDDiagram& d);

/// t^{-1} V(L+) - t V(L-) == (t^{1/2} - t^{-1/2}) V(L0).
bool skein_check(const OrientedPDDiagram& lplus, const OrientedPDDiagram& lminus,
                 const OrientedPDDiagram& lzero);
bool skein_check(const LaurentPoly& vplus, const LaurentPoly& vminus, const LaurentPoly& vzero);

/// (-1)^v (2i)^{u-1} (u + 2v).
GaussianInt vuv_closed_form(int u, int v);

}  // namespace khof
