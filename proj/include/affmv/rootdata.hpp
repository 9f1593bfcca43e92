// Root data for the rank-two cases the library works over: the affine
// sl2 datum (two simple roots alpha_0, alpha_1, a three-dimensional Y with
// basis alpha_0_vee, alpha_1_vee, d) and the finite rank-two data A2, B2
// used for word-independence checks. All coordinates are exact rationals.
#pragma once

#include "affmv/errors.hpp"
#include "affmv/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace affmv {

struct RootDatum {
    bool affine = false;
    std::string label;
    size_t rank = 0;   // number of simple roots
    size_t dimY = 0;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = alpha_j(alpha_i_vee)
    std::vector<Vec> simple_coroots;
    std::vector<Form> simple_roots;
    Form rho;    // rho(alpha_i_vee) = 1 for all i; rho(d) = 0 in the affine case
    Form delta;  // affine only: the null root alpha_0 + alpha_1
    Vec center;  // affine only: alpha_0_vee + alpha_1_vee
    Vec d;       // affine only: the scaling basis vector

    Vec simple_reflect(size_t i, const Vec& v) const {
        Vec w = v;
        Rat a = simple_roots[i](v);
        Vec step = simple_coroots[i];
        step *= a;
        w -= step;
        return w;
    }

    Form simple_reflect_form(size_t i, const Form& f) const {
        Form g = f;
        Rat a = f(simple_coroots[i]);
        Form step = simple_roots[i];
        step *= a;
        g -= step;
        return g;
    }
};

// The affine sl2 datum. Coordinates (a, b, c) on Y mean
// a*alpha_0_vee + b*alpha_1_vee + c*d with alpha_0(d) = 1, alpha_1(d) = 0.
RootDatum build_affine_sl2();

// Finite rank-two data for word-independence tests; type is "A2" or "B2".
RootDatum build_finite_rank2(const std::string& type);

inline Rat pair(const Form& f, const Vec& v) { return f(v); }

// Positive or negative real root of the affine datum: sign * alpha_i + k * delta.
// Its coroot is sign * alpha_i_vee + k * (alpha_0_vee + alpha_1_vee).
struct RealRoot {
    int i = 0;         // classical index, 0 or 1
    bool plus = true;  // sign of the classical part
    long k = 0;        // delta coefficient
    Form alpha;
    Vec coroot;

    bool positive() const { return k > 0 || (k == 0 && plus); }
    std::string str() const;
};

RealRoot real_root(const RootDatum& rd, int i, bool plus, long k);
inline RealRoot simple_real_root(const RootDatum& rd, int i) { return real_root(rd, i, true, 0); }

// Reflection in the affine wall {x : alpha(x) + k = 0}.
Vec affine_reflection(const RealRoot& alpha, const Rat& k, const Vec& x);

// Applies simple reflections left to right: word {i1,...,in} sends v to
// s_{in}( ... s_{i1}(v) ... ).
Vec weyl_act(const RootDatum& rd, const std::vector<int>& word, const Vec& v);
Form weyl_act(const RootDatum& rd, const std::vector<int>& word, const Form& f);

// Action of the product s_{i1}*...*s_{in} read as composition of maps,
// i.e. s_{i1} applied last.
Vec weyl_act_product(const RootDatum& rd, const std::vector<int>& word, const Vec& v);
Form weyl_act_product(const RootDatum& rd, const std::vector<int>& word, const Form& f);

// Returns the dominant representative v+ of the orbit of v together with a
// word such that weyl_act(word, v+) == v. Throws NotInTitsConeInterior when
// the orbit has no dominant member (affine datum, nonpositive level).
std::pair<Vec, std::vector<int>> dominant_representative(const RootDatum& rd, const Vec& v);

// A dominant vector of the affine datum whose pairings with both simple
// roots equal 2*depth + 4, large enough that operator strings of total
// length at most depth act faithfully on the straight path to it.
Vec deep_dominant(const RootDatum& rd, int depth);

// Full Weyl group of a finite rank-two datum, with reduced-word enumeration.
struct WeylGroupTable {
    const RootDatum* rd = nullptr;
    // Element j acts on Y by the matrix with columns images[j][0..dimY-1].
    std::vector<std::vector<Vec>> images;
    std::vector<int> lengths;
    std::vector<std::vector<int>> right_mult;  // right_mult[j][i] = index of w_j * s_i

    static WeylGroupTable build(const RootDatum& rd);

    size_t size() const { return images.size(); }
    int identity() const { return 0; }
    // Element of the product s_{i1}*...*s_{in}.
    int element_of_word(const std::vector<int>& word) const;
    // All reduced words of element j, each in product order.
    std::vector<std::vector<int>> reduced_words(int j) const;
};

}  // namespace affmv
