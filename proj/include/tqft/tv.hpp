#pragma once

#include "tqft/fsymbols.hpp"
#include "tqft/scalar.hpp"
#include "tqft/triangulation.hpp"

namespace tqft {

struct TVOptions {
    long long node_cap = 100000000;
    // Worker threads; 0 picks the hardware concurrency, 1 runs serially.
    int threads = 0;
};

struct TVResult {
    cplx value;
    long long nodes = 0;
    long long colorings = 0;
    // Colors of the first enumerated edge; each is summed independently and the
    // partial sums are added in color order.
    int shards = 0;
};

// Tetrahedral symbol of a positively oriented tetrahedron whose oriented edges
// i->j (i<j) carry labels x_ij.
cplx tetrahedral_symbol(const FSymbolSet& fs, int x01, int x02, int x03, int x12, int x13, int x23);

TVResult tv_state_sum(const FSymbolSet& fs, const Triangulation& tri, const TVOptions& opt = TVOptions());
cplx tv_invariant(const FSymbolSet& fs, const Triangulation& tri, const TVOptions& opt = TVOptions());

} // namespace tqft
