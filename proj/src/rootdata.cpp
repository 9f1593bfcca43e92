#include "affmv/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace affmv {

RootDatum build_affine_sl2() {
    RootDatum rd;
    rd.affine = true;
    rd.label = "affine_sl2";
    rd.rank = 2;
    rd.dimY = 3;
    rd.cartan = {{2, -2}, {-2, 2}};
    // Basis of Y: alpha_0_vee, alpha_1_vee, d.
    rd.simple_coroots = {Vec{Rat(1), Rat(0), Rat(0)}, Vec{Rat(0), Rat(1), Rat(0)}};
    // alpha_0 = 2 e0* - 2 e1* + e2*, alpha_1 = -2 e0* + 2 e1*.
    rd.simple_roots = {Form{Rat(2), Rat(-2), Rat(1)}, Form{Rat(-2), Rat(2), Rat(0)}};
    rd.rho = Form{Rat(1), Rat(1), Rat(0)};
    rd.delta = rd.simple_roots[0] + rd.simple_roots[1];
    rd.center = rd.simple_coroots[0] + rd.simple_coroots[1];
    rd.d = Vec{Rat(0), Rat(0), Rat(1)};

    assert(rd.delta(rd.simple_coroots[0]) == 0);
    assert(rd.delta(rd.simple_coroots[1]) == 0);
    assert(rd.delta(rd.d) == 1);
    assert(rd.simple_roots[0](rd.d) == 1);
    assert(rd.simple_roots[1](rd.d) == 0);
    return rd;
}

RootDatum build_finite_rank2(const std::string& type) {
    RootDatum rd;
    rd.affine = false;
    rd.label = type;
    rd.rank = 2;
    rd.dimY = 2;
    if (type == "A2") {
        rd.cartan = {{2, -1}, {-1, 2}};
    } else if (type == "B2") {
        // alpha_1(alpha_0_vee) = -2, alpha_0(alpha_1_vee) = -1.
        rd.cartan = {{2, -2}, {-1, 2}};
    } else {
        throw ParseError("unknown finite rank-two type " + type);
    }
    rd.simple_coroots = {Vec{Rat(1), Rat(0)}, Vec{Rat(0), Rat(1)}};
    // alpha_j(e_i) = cartan[i][j], so alpha_j has coefficients (cartan[0][j], cartan[1][j]).
    rd.simple_roots = {Form{Rat(rd.cartan[0][0]), Rat(rd.cartan[1][0])},
                       Form{Rat(rd.cartan[0][1]), Rat(rd.cartan[1][1])}};
    rd.rho = Form{Rat(1), Rat(1)};
    return rd;
}

std::string RealRoot::str() const {
    std::string s = plus ? "+" : "-";
    s += "a" + std::to_string(i);
    if (k != 0) s += (k > 0 ? "+" : "") + std::to_string(k) + "d";
    return s;
}

RealRoot real_root(const RootDatum& rd, int i, bool plus, long k) {
    assert(rd.affine || k == 0);
    assert(i >= 0 && size_t(i) < rd.rank);
    RealRoot r;
    r.i = i;
    r.plus = plus;
    r.k = k;
    Form a = rd.simple_roots[i];
    Vec av = rd.simple_coroots[i];
    if (!plus) {
        a = -a;
        av = -av;
    }
    if (k != 0) {
        a += Rat(k) * rd.delta;
        av += Rat(k) * rd.center;
    }
    r.alpha = a;
    r.coroot = av;
    assert(r.alpha(r.coroot) == 2);
    return r;
}

Vec affine_reflection(const RealRoot& alpha, const Rat& k, const Vec& x) {
    Rat level = alpha.alpha(x) + k;
    Vec step = alpha.coroot;
    step *= level;
    return x - step;
}

Vec weyl_act(const RootDatum& rd, const std::vector<int>& word, const Vec& v) {
    Vec w = v;
    for (int i : word) w = rd.simple_reflect(static_cast<size_t>(i), w);
    return w;
}

Form weyl_act(const RootDatum& rd, const std::vector<int>& word, const Form& f) {
    Form g = f;
    for (int i : word) g = rd.simple_reflect_form(static_cast<size_t>(i), g);
    return g;
}

Vec weyl_act_product(const RootDatum& rd, const std::vector<int>& word, const Vec& v) {
    std::vector<int> rev(word.rbegin(), word.rend());
    return weyl_act(rd, rev, v);
}

Form weyl_act_product(const RootDatum& rd, const std::vector<int>& word, const Form& f) {
    std::vector<int> rev(word.rbegin(), word.rend());
    return weyl_act(rd, rev, f);
}

std::pair<Vec, std::vector<int>> dominant_representative(const RootDatum& rd, const Vec& v) {
    if (rd.affine) {
        Rat level = rd.delta(v);
        if (level < 0)
            throw NotInTitsConeInterior("vector has negative level " + rat_to_string(level));
        if (level == 0) {
            bool fixed = true;
            for (size_t i = 0; i < rd.rank; ++i)
                if (rd.simple_roots[i](v) != 0) fixed = false;
            if (fixed) return {v, {}};
            throw NotInTitsConeInterior("level-zero vector that is not Weyl fixed");
        }
    }
    Vec w = v;
    std::vector<int> steps;
    const size_t cap = 10'000'000;
    for (size_t iter = 0;; ++iter) {
        bool dominant = true;
        for (size_t i = 0; i < rd.rank; ++i) {
            if (rd.simple_roots[i](w) < 0) {
                w = rd.simple_reflect(i, w);
                steps.push_back(static_cast<int>(i));
                dominant = false;
                break;
            }
        }
        if (dominant) break;
        if (iter > cap) throw std::logic_error("dominant_representative failed to terminate");
    }
    // w = s_{steps.back()} ... s_{steps[0]} v, so v = weyl_act(reverse(steps), w).
    std::reverse(steps.begin(), steps.end());
    return {w, steps};
}

Vec deep_dominant(const RootDatum& rd, int depth) {
    assert(rd.affine);
    assert(depth >= 0);
    Vec v(rd.dimY);
    v[1] = Rat(depth + 2);
    v[2] = Rat(4 * depth + 8);
    assert(rd.simple_roots[0](v) == Rat(2 * depth + 4));
    assert(rd.simple_roots[1](v) == Rat(2 * depth + 4));
    return v;
}

WeylGroupTable WeylGroupTable::build(const RootDatum& rd) {
    assert(!rd.affine);
    WeylGroupTable t;
    t.rd = &rd;

    auto act_basis = [&rd](const std::vector<Vec>& mat, size_t i) {
        // Right multiplication by s_i: new matrix columns are images of s_i(e_j)?
        // We store the element by the images of the basis vectors; composing with
        // s_i on the right means first reflecting the input, i.e. column j of the
        // product is mat applied to s_i(e_j).
        std::vector<Vec> out(mat.size());
        for (size_t j = 0; j < mat.size(); ++j) {
            Vec ej(rd.dimY);
            ej[j] = 1;
            Vec sij = rd.simple_reflect(i, ej);
            Vec img(rd.dimY);
            for (size_t k = 0; k < rd.dimY; ++k) {
                Vec col = mat[k];
                col *= sij[k];
                img += col;
            }
            out[j] = img;
        }
        return out;
    };

    std::vector<Vec> id(rd.dimY);
    for (size_t j = 0; j < rd.dimY; ++j) {
        id[j] = Vec(rd.dimY);
        id[j][j] = 1;
    }
    std::map<std::vector<Vec>, int> index;
    t.images.push_back(id);
    t.lengths.push_back(0);
    index[id] = 0;
    for (size_t head = 0; head < t.images.size(); ++head) {
        t.right_mult.emplace_back(rd.rank, -1);
        for (size_t i = 0; i < rd.rank; ++i) {
            auto next = act_basis(t.images[head], i);
            auto it = index.find(next);
            if (it == index.end()) {
                int idx = static_cast<int>(t.images.size());
                index[next] = idx;
                t.images.push_back(next);
                t.lengths.push_back(t.lengths[head] + 1);
                t.right_mult[head][i] = idx;
            } else {
                t.right_mult[head][i] = it->second;
            }
        }
        assert(t.images.size() < 10000);
    }
    return t;
}

int WeylGroupTable::element_of_word(const std::vector<int>& word) const {
    // Product s_{i1}*...*s_{in} built by right multiplication in order.
    int e = identity();
    for (int i : word) e = right_mult[static_cast<size_t>(e)][static_cast<size_t>(i)];
    return e;
}

std::vector<std::vector<int>> WeylGroupTable::reduced_words(int j) const {
    if (lengths[static_cast<size_t>(j)] == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < rd->rank; ++i) {
        int prev = right_mult[static_cast<size_t>(j)][i];
        if (lengths[static_cast<size_t>(prev)] == lengths[static_cast<size_t>(j)] - 1) {
            // j = prev * s_i, so every reduced word of prev extends by i.
            for (auto w : reduced_words(prev)) {
                w.push_back(static_cast<int>(i));
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

}  // namespace affmv
