// One inductive step of the germ retraction in the tree model: a folded
// path pairs the straightened path of a word with rational wall
// coefficients, one per stable section against the pushed simple root.
// Folding reflects the sections whose cumulative coefficient on their
// wall survives and then the prefix before the first minimum; generic
// coefficients recover the straightened path of the extended word.
#pragma once

#include "affmv/upsilon.hpp"

#include <random>
#include <utility>

namespace affmv {

// w(alpha_i) as a real root, positive whenever word + [i] is reduced.
RealRoot pushed_root(const RootDatum& rd, const std::vector<int>& word, int i);

// A stable section of the base path against the pushed root, carrying
// the coefficient attached to its wall.
struct Marker {
    Rat t0, t1;
    Int level;  // measured against the pushed root, i.e. against -root
    Rat coeff;

    bool operator==(const Marker& o) const {
        return t0 == o.t0 && t1 == o.t1 && level == o.level && coeff == o.coeff;
    }
};

// State between the steps for w and w*s_i: the straightened base path,
// the wall direction -w(alpha_i) the next fold reflects across, and the
// marked stable sections in time order.
struct FoldedPath {
    Path base;
    RealRoot root;
    std::vector<Marker> markers;
};

// Straightens p along the word and marks every stable section against
// the pushed root with the matching coefficient. Throws NonReducedWord
// unless word + [i] is reduced, CoefficientMismatch unless coeffs has
// one entry per stable section.
FoldedPath build_folded(const RootDatum& rd, const Path& p, const std::vector<int>& word, int i,
                        const std::vector<Rat>& coeffs);

// Same with all coefficients zero, sized to the stable sections.
FoldedPath build_folded(const RootDatum& rd, const Path& p, const std::vector<int>& word, int i);

// True when every partial sum of coefficients sharing a wall level,
// accumulated from t = 1 backwards, is nonzero.
bool genericity(const FoldedPath& eta);

// Processes markers from t = 1 backwards: a marked section reflects in
// its level's wall when its cumulative wall coefficient is nonzero and
// it does not start before the first minimum; afterwards the prefix up
// to the first minimum reflects wholesale, unless every coefficient of
// a nonempty marker list vanishes (then the base is returned as is).
Path fold_plus(const FoldedPath& eta);

// fold_plus of build_folded together with the genericity flag. When the
// flag is true the result equals upsilon_prime(p, word + [i]).
std::pair<Path, bool> retract_step(const RootDatum& rd, const Path& p,
                                   const std::vector<int>& word, int i,
                                   const std::vector<Rat>& coeffs);

enum class LineKind { FreeLine, PuncturedLine };

// Coordinates attached to a path: one per wall departure counted by
// ddim at the identity germ, in time order. Departures the level
// profile bounces off need a nonvanishing coordinate (punctured line);
// transversal ones are free.
struct ParameterSpace {
    size_t count = 0;
    std::vector<LineKind> kinds;
};

// Enumerates the departures against every negative real root with
// delta-coefficient down to -root_cutoff; count always agrees with
// ddim(rd, p, {}, root_cutoff).
ParameterSpace parameter_space(const RootDatum& rd, const Path& p, long root_cutoff);

// Draws marker coefficients until genericity holds, falling back to
// strictly positive values (always generic) after 64 rejections.
std::vector<Rat> sample_generic_coeffs(const FoldedPath& eta, std::mt19937_64& rng);

}  // namespace affmv
