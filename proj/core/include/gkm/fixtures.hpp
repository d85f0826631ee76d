#pragma once

#include "gkm/moment_graph.hpp"

namespace gkm {
namespace fixtures {

// Single fixed point, rank 1, no edges.
MomentGraph point();

// Fixed points p0..pn of n-dimensional projective space under the diagonal
// torus, with the linear action weights a0..an.  Edge between pi and pj
// carries aj - ai as the tangent character at pi.  The default covector gives
// pi the filtration position i.
MomentGraph projective_space(int n);
MomentGraph projective_space(int n, Covector lambda);

// Full flags in 3-space: vertices are the permutations of 123 in one-line
// notation, joined when they differ by transposing two values a < b, with
// character ea - eb stored as the tangent at the longer permutation.  The
// default covector orders the vertices by inversion count.
MomentGraph flag_s3();
MomentGraph flag_s3(Covector lambda);

// Three fixed points of a weighted plane with an order-two stabilizer along
// two of the invariant curves, so two characters carry content 2.  With
// consistent_scale the top vertex gets scale 1/2, which makes every local
// index polynomial; without it the index at level 3 is not one.
MomentGraph weighted_p2(bool consistent_scale = false);

// Product graph on vertex pairs, id joined with "x".  Variable names are
// suffixed with _1 and _2 when the two factors share any name.
MomentGraph product_graph(const MomentGraph& a, const MomentGraph& b);

} // namespace fixtures
} // namespace gkm
