// Reading the partition labels of a path's polytope. A zigzag is a window
// where a stable section of one simple root at level k hands over to a
// stable section of the other simple root at level -k; counting zigzags per
// level yields one partition, and a minimum-placement rule decides whether
// the opposite partition gains an extra part.
#pragma once

#include "affmv/mvpoly.hpp"

#include <utility>
#include <vector>

namespace affmv {

struct Zigzag {
    Rat s, v;  // the window [s, v]
    Rat t, u;  // witnessing overlap: [s,u] stable at k, [t,v] stable at -k
    int index = 0;
    Int level = 0;

    bool operator==(const Zigzag& z) const {
        return s == z.s && v == z.v && t == z.t && u == z.u && index == z.index &&
               level == z.level;
    }
};

// All alpha_i-zigzags of p, every level, sorted by (level, start). Distinct
// windows at the same level are counted separately even when they overlap;
// duplicate windows from different witnesses are reported once.
std::vector<Zigzag> find_zigzags(const RootDatum& rd, const Path& p, int i);

// Zigzag multiplicity m_{i,k}: the number of alpha_i-zigzags at level k.
Int zigzag_count(const RootDatum& rd, const Path& p, int i, const Int& k);

// Partitions (left, right) of a path with exactly one vanishing epsilon.
// Throws HypothesisNotMet when the epsilon pattern is different.
std::pair<Partition, Partition> read_partitions(const RootDatum& rd, const Path& p);

// Full pipeline: reduce to the delta-top representative, then read the
// partitions there; the reduction preserves them. Returns (left, right).
// Throws DeltaTopAmbiguous if the reduced path has both epsilons positive.
std::pair<Partition, Partition> decorate(const RootDatum& rd, const Path& p);

}  // namespace affmv
