#pragma once

#include "gf3field/gf.hpp"
#include "permcore/bsgs.hpp"

namespace ree {

// Companion constructions used by the oracles and the classifier.  All of
// these act by Mobius transformations x -> (ax + b)/(cx + d) on the
// projective line: points 0 .. q-1 are the field elements (by index) and
// point q is infinity.

// PSL(2, q) over a gf3 field, on q + 1 points, generated by x -> x + 1 and
// x -> -1/x.
permcore::StabChain build_psl2(const gf3::Field& F);

// PSL(2, 8) on 9 points (GF(8) handled locally: characteristic 2 is outside
// gf3's remit).  Generators: x -> x + 1 and x -> 1/x.
permcore::StabChain build_psl28();

// PGammaL(2, 8) = PSL(2, 8) : C_3, adjoining the Frobenius x -> x^2; order
// 1512 on the same 9 points.
permcore::StabChain build_pgammal28();

// C_2 x PSL(2, 27) on 30 points: PSL(2, 27) in its Mobius action on
// {0, ..., 27} plus a commuting central involution z = (28 29).  An element
// lies in the PSL factor iff it fixes point 28.
permcore::StabChain build_c2_x_psl2_27();

// The central involution z of build_c2_x_psl2_27().
permcore::Perm c2_x_psl2_27_central_involution();

}  // namespace ree
