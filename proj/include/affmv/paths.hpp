// Piecewise-linear paths in Y with exact rational breakpoints, the root
// operators raising and lowering them, level sections, flips across stable
// pieces, and the dual-dimension statistic counting walls left positively
// by the reversed path.
#pragma once

#include "affmv/rootdata.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affmv {

// A path is a concatenation of straight segments (direction, duration) with
// durations summing to 1. Normal form: positive durations, adjacent
// directions distinct. The shape is the dominant representative of the
// directions' orbit; root operators preserve it.
struct Path {
    Vec start;
    std::vector<std::pair<Vec, Rat>> segments;
    Vec shape;

    Vec end() const;
    Vec content() const { return end() - start; }

    bool operator==(const Path& o) const {
        return start == o.start && segments == o.segments && shape == o.shape;
    }
    bool operator!=(const Path& o) const { return !(*this == o); }
    bool operator<(const Path& o) const {
        if (start != o.start) return start < o.start;
        if (segments != o.segments) return segments < o.segments;
        return shape < o.shape;
    }
};

// Merges adjacent segments with equal directions and drops zero durations;
// asserts the durations sum to 1.
Path normalized(Path p);

// Breakpoint view: times t[0] = 0 < ... < t[n] = 1 and points x[i] = p(t[i]).
struct Knots {
    std::vector<Rat> t;
    std::vector<Vec> x;
};
Knots knots_of(const Path& p);
Path path_of_knots(const Knots& k, const Vec& shape);
// Ensures u is among the knot times, interpolating a point if needed.
size_t insert_knot(Knots& k, const Rat& u);

// The straight path t -> t*lambda. Throws NotDominant unless lambda pairs
// nonnegatively with every simple root.
Path straight_path(const RootDatum& rd, const Vec& lambda);

// Point and one-sided derivatives at time u; at u = 0 and u = 1 both sides
// return the single defined derivative.
struct SamplePoint {
    Vec point;
    Vec left_deriv;
    Vec right_deriv;
};
SamplePoint sample(const Path& p, const Rat& u);

// Every segment direction must lie in the Weyl orbit of the shape.
bool is_lambda_path(const RootDatum& rd, const Path& p);

enum class SectionKind { Zero, Stable, DirectedUp, DirectedDown };

struct Section {
    Rat t0, t1;
    SectionKind kind;
    Int level;  // level m at the start of the section
};

struct SectionPartition {
    RealRoot root;
    std::vector<Section> sections;  // tiles [0,1] in order
};

// Canonical scan partition of [0,1] for a positive real root: zero stretches,
// first-return stable pieces at the current level, and directed pieces moving
// to the next level up or down. Throws NonIntegralLevel when the path fails
// the structure the scan needs (non-integral endpoint levels, descending
// excursions that return without reaching the next level down).
SectionPartition sections(const Path& p, const RealRoot& alpha);

// All maximal intervals whose endpoints sit at an integer level m and whose
// interior is strictly above m, over every achievable m. Unlike the scan
// partition this sees stables nested inside excursions; two of them may share
// an endpoint when the contact between them is a single point.
std::vector<Section> bare_stables(const Path& p, const RealRoot& alpha);

enum class OpDir { Raise, Lower };

struct OpCount {
    bool is_max = false;
    int power = 1;
};
inline OpCount op_max() { return OpCount{true, 0}; }
inline OpCount op_power(int k) { return OpCount{false, k}; }

// Root operator for an arbitrary positive real root. Raise is undefined when
// the minimum level is 0; Lower is undefined when the endpoint sits at the
// minimum. With op_max the result is always defined (possibly the input).
std::optional<Path> root_operator_real(const RootDatum& rd, const Path& p, const RealRoot& alpha,
                                       OpDir dir, OpCount count);

// Simple-root wrapper.
std::optional<Path> root_operator(const RootDatum& rd, const Path& p, int i, OpDir dir,
                                  OpCount count);

// Number of times Raise applies: minus the minimum of alpha along the path.
Int epsilon(const Path& p, const RealRoot& alpha);
// Number of times Lower applies: alpha at the endpoint minus the minimum.
Int phi(const Path& p, const RealRoot& alpha);

// Minimum of alpha along the path with first and last times attaining it.
struct LevelMin {
    Rat value;
    Rat first_time;
    Rat last_time;
};
LevelMin min_level(const Path& p, const Form& alpha);

// The path with every stable piece of the canonical partition reflected onto
// the other side of its level: x -> x + (m - alpha(x)) * alpha_vee.
Path flip(const Path& p, const RealRoot& alpha);

// Sum over negative real roots beta of the number of walls {beta + k = 0}
// left positively by the reverse path with respect to the chamber germ moved
// by the product of the word. Enumerates beta with delta-coefficient down to
// -root_cutoff and rechecks at root_cutoff + 1; throws CutoffTooSmall if the
// count still grows.
Int ddim(const RootDatum& rd, const Path& p, const std::vector<int>& word, long root_cutoff);

// Raises the path greedily to a highest element and compares against the
// straight path of the given shape. Throws DepthExceeded if more than depth
// raising steps are needed.
bool is_ls_member(const RootDatum& rd, const Path& p, const Vec& lambda, int depth);

// All paths reachable from the straight path of shape lambda by at most
// depth lowering operators, deduplicated, in generation order.
std::vector<Path> crystal_generate(const RootDatum& rd, const Vec& lambda, int depth);

// Applies "f_{i}^{k}" factors given right to left, e.g. {{1,3},{0,2}} means
// apply f_0^2 first, then f_1^3. Returns none if any step is undefined.
std::optional<Path> apply_lowering_word(const RootDatum& rd, const Path& p,
                                        const std::vector<std::pair<int, int>>& factors);

// Canonical text key for dedup containers.
std::string path_key(const Path& p);

}  // namespace affmv
