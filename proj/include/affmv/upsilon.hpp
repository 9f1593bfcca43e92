// Iterated maximal lowerings along a word, the associated straightened
// paths, and the extraction of polytope bottom vertices from a path.
//
// For a word i_1..i_n, Theta_0 = pi and Theta_k = Lower^max at index i_k of
// Theta_{k-1}. With w = s_{i_1}...s_{i_n}, upsilon(pi, word) = w(Theta_n)
// and upsilon_prime translates it so the endpoint returns to pi(1). The
// start points of the upsilon_prime paths along alternating words walk
// through the bottom vertices of the polytope attached to the path.
#pragma once

#include "affmv/paths.hpp"

namespace affmv {

// True when the word is reduced: strictly alternating letters in the
// affine datum, length equal to the group length otherwise.
bool is_reduced_word(const RootDatum& rd, const std::vector<int>& word);

// [Theta_0, ..., Theta_n]. No reducedness requirement; repeated letters
// make the extra steps identities.
std::vector<Path> theta_sequence(const RootDatum& rd, const Path& p, const std::vector<int>& word);

// w applied linearly to Theta_n. Throws NonReducedWord.
Path upsilon(const RootDatum& rd, const Path& p, const std::vector<int>& word);

// upsilon translated so that the endpoint equals p(1).
Path upsilon_prime(const RootDatum& rd, const Path& p, const std::vector<int>& word);

// Bottom vertices harvested along the alternating word starting at side.
// vertices[k] is the start point of the k-step upsilon_prime path; the
// walk is vertices[k] - vertices[k-1] = -a_k * beta_k_vee where a_k =
// edge_multiplicities[k-1] and beta_k_vee is the coroot of the k-th root
// of the side's ladder (alpha_side + (k-1) delta for odd k pattern).
// Lists are trimmed after the last nonzero multiplicity.
struct BottomData {
    int side = 0;
    std::vector<Vec> vertices;
    std::vector<Int> edge_multiplicities;
};

// Runs the number of steps forced by the defect of p (guaranteeing two
// trailing zero multiplicities) and throws StabilizationCapExceeded when
// cap is smaller than that, or when the tail fails to stabilize.
BottomData bottom_vertices(const RootDatum& rd, const Path& p, int first_index, int cap);

// m = min of the level of w(alpha_i) along upsilon_prime(p, word), returned
// together with a flag verifying two independent identities: the closed
// formula m = w(alpha)(mu - upsilon(p,word)(1)) - eps_{alpha_i}(Theta_n),
// and the reflection property that upsilon_prime(p, word + [i]) agrees with
// the reflection of upsilon_prime(p, word) in the wall {w(alpha) = m} at
// all breakpoints up to the first time the minimum is reached.
std::pair<Int, bool> min_level_and_reflection_check(const RootDatum& rd, const Path& p,
                                                    const std::vector<int>& word, int i);

}  // namespace affmv
