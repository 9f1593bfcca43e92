// Affine MV polytopes for the rank-two affine datum. A polytope is stored as
// a pair of Lusztig data (left and right boundary chains) plus a base vertex,
// in the lattice spanned by (alpha_0, alpha_1). Vertex chains, the defining
// inequalities, active-diagonal cuts, a brute-force enumeration oracle,
// crystal operators, top/delta-top classification, and reconstruction of the
// polytope attached to a path all live here.
#pragma once

#include "affmv/upsilon.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace affmv {

// Coordinates (c0, c1) in the basis (alpha_0, alpha_1). Pairings with the
// fundamental weights read off the coordinates: (v, omega_0) = c0 and
// (v, omega_1) = c1. The normalized symmetric form has (v, alpha_1)/2 =
// c1 - c0, and delta = alpha_0 + alpha_1 = (1, 1).
struct LatticePoint {
    Int c0{0}, c1{0};

    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
        return {a.c0 + b.c0, a.c1 + b.c1};
    }
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
        return {a.c0 - b.c0, a.c1 - b.c1};
    }
    friend LatticePoint operator*(const Int& n, const LatticePoint& v) {
        return {n * v.c0, n * v.c1};
    }
    bool operator==(const LatticePoint& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
    bool operator<(const LatticePoint& o) const {
        return c0 != o.c0 ? c0 < o.c0 : c1 < o.c1;
    }
    std::string str() const;
};

inline Int pair_omega0(const LatticePoint& v) { return v.c0; }
inline Int pair_omega1(const LatticePoint& v) { return v.c1; }
// (v, alpha_1)/2 in the normalized form; the partition-removal and largest
// part bounds of the validator are stated through this pairing.
inline Int pair_alpha1_half(const LatticePoint& v) { return v.c1 - v.c0; }

inline Int ht(const LatticePoint& v) { return v.c0 + v.c1; }

// Edge directions of the boundary ladders. Index k >= 1.
inline LatticePoint alpha1_ladder(int k) { return {Int(k - 1), Int(k)}; }
inline LatticePoint alpha0_ladder(int k) { return {Int(k), Int(k - 1)}; }

// Weakly decreasing list of positive integers.
struct Partition {
    std::vector<Int> parts;

    static Partition of(std::vector<Int> p);  // sorts, drops zeros
    Int size() const;
    Int first() const { return parts.empty() ? Int(0) : parts.front(); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    // Exponential form, largest part first: (9,2,1^2). Empty partition: ().
    std::string exp_str() const;
    static Partition from_exp_str(const std::string& s);  // round-trip parser
    // Multiset insertion and removal; remove returns false if absent.
    Partition with_part(const Int& s) const;
    bool remove_part(const Int& s, Partition& out) const;
};

// Sparse k >= 1 -> positive multiplicity. Zero entries are never stored.
using SupportMap = std::map<int, Int>;

Int map_entry(const SupportMap& m, int k);
void map_set(SupportMap& m, int k, const Int& v);
int max_index(const SupportMap& m);

// One boundary chain: bottom ladder multiplicities, the partition stacked
// along the delta direction, and the top ladder multiplicities.
struct LusztigDatum {
    SupportMap bottom;
    Partition partition;
    SupportMap top;

    bool operator==(const LusztigDatum& o) const {
        return bottom == o.bottom && partition == o.partition && top == o.top;
    }
    bool operator!=(const LusztigDatum& o) const { return !(*this == o); }
};

// side = 1 is the right chain (bottom edges along alpha_1 + (k-1) delta, top
// edges along alpha_0 + (k-1) delta); side = 0 is the mirrored left chain.
LatticePoint datum_content(const LusztigDatum& d, int side);

struct MVPolytope {
    LusztigDatum left, right;
    LatticePoint base;

    bool operator==(const MVPolytope& o) const {
        return left == o.left && right == o.right && base == o.base;
    }
    bool operator!=(const MVPolytope& o) const { return !(*this == o); }
};

MVPolytope point_polytope(const LatticePoint& base = {});

// Weight defect mu^0 - mu_0, computed along the right chain.
LatticePoint weight(const MVPolytope& P);

// epsilon_1 = first right bottom entry, epsilon_0 = first left bottom entry.
Int epsilon(const MVPolytope& P, int i);

// All four vertex chains, each evaluated for k = 0..K where K exceeds every
// support index by at least two, so the last two entries of each chain are
// equal and witness the stabilized limit.
struct PolytopeVertices {
    int K = 0;
    std::vector<LatticePoint> right_bottom;  // mu_0 .. mu_K
    std::vector<LatticePoint> left_bottom;   // mubar_0 .. mubar_K
    std::vector<LatticePoint> right_top;     // mu^0 .. mu^K
    std::vector<LatticePoint> left_top;      // mubar^0 .. mubar^K

    const LatticePoint& mu_inf() const { return right_bottom.back(); }
    const LatticePoint& mubar_inf() const { return left_bottom.back(); }
    const LatticePoint& mu_top_inf() const { return right_top.back(); }
    const LatticePoint& mubar_top_inf() const { return left_top.back(); }
};

// Throws ClosureViolation if the two routes to the top vertex disagree.
PolytopeVertices vertices(const MVPolytope& P);

struct ValidationReport {
    bool closed = false;
    bool cond_i = false;    // bottom inequalities with one equality per k
    bool cond_ii = false;   // top inequalities with one equality per k
    bool cond_iii = false;  // parallel diagonals or one-part removal
    bool cond_iv = false;   // largest parts bounded by the diagonal gap
    std::vector<int> failures_i, failures_ii;
    bool parallel = false;
    Int removal = 0;  // (mu_inf - mubar_inf, alpha_1)/2

    bool ok() const { return closed && cond_i && cond_ii && cond_iii && cond_iv; }
    std::string str() const;
};

ValidationReport validate(const MVPolytope& P);

// Splits P along an active diagonal into (P_low, P_high). family selects the
// bottom inequalities (condition (i)) or the top ones (condition (ii)); k = 0
// selects the limit diagonal of that family: [mubar_inf, mu_inf] below, and
// [mubar^inf, mu^inf] above (P_high of the latter is the top part, P_high of
// the former the delta-top part). For finite k, when both inequalities of the
// chosen family are equalities the omega_0-equality diagonal is used.
// Throws DiagonalNotActive when no equality holds at the requested k.
std::pair<MVPolytope, MVPolytope> cut_at_active_diagonal(const MVPolytope& P,
                                                         int k,
                                                         const std::string& family);

// Every valid polytope of the given weight based at the origin, by brute
// force over datum pairs with ladder indices <= support_bound (0 picks the
// content-complete default) and filtered through validate(). Re-runs itself
// with the bound widened by one and throws BoundTooSmall on a count mismatch.
std::vector<MVPolytope> enumerate_mv(const LatticePoint& wt, int support_bound = 0);

// Lowering operator: adds 1 to the first bottom entry of the side named by i
// and recompletes the opposite chain as the unique valid datum of the new
// weight. Throws CompletionNotFound / CompletionNotUnique.
MVPolytope crystal_f(const MVPolytope& P, int i);

enum class PolyClass { Top, DeltaTop, General };

const char* to_string(PolyClass c);

// Top: bottom support in the first entry of one side only and both
// partitions empty. DeltaTop: same bottom condition, partitions free.
PolyClass classify(const MVPolytope& P);

// Alternating maximal raising word (with exponents) followed by h lowerings
// at i0 that carry a path to the delta-top representative of its polytope.
struct GenpolReduction {
    std::vector<std::pair<int, Int>> e_word;  // applied first to last
    Int h = 0;
    int i0 = 1;
    Path reduced;
};

GenpolReduction genpol_reduce(const RootDatum& rd, const Path& p);

// Bottom data from both retractions, partitions from the decorated reduced
// path, and the unique enumeration match. Throws NoMatch / MultipleMatches.
MVPolytope reconstruct_from_path(const RootDatum& rd, const Path& p);

// Bridge from a Y-space defect (a coroot-lattice vector) to the polytope
// lattice, sending alpha_i-vee to alpha_i.
LatticePoint lattice_of_defect(const RootDatum& rd, const Vec& defect);

}  // namespace affmv
