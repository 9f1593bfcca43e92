#include "affmv/upsilon.hpp"

#include <algorithm>
#include <cassert>

namespace affmv {

namespace {

// The product s_{i_1}...s_{i_n} applied pointwise to a path.
Path act_linear(const RootDatum& rd, const std::vector<int>& word, const Path& p) {
    Path q = p;
    q.start = weyl_act_product(rd, word, p.start);
    for (auto& [dir, dur] : q.segments) {
        (void)dur;
        dir = weyl_act_product(rd, word, dir);
    }
    return normalized(std::move(q));
}

}  // namespace

bool is_reduced_word(const RootDatum& rd, const std::vector<int>& word) {
    for (int i : word)
        if (i < 0 || size_t(i) >= rd.rank) return false;
    if (rd.affine) {
        for (size_t j = 0; j + 1 < word.size(); ++j)
            if (word[j] == word[j + 1]) return false;
        return true;
    }
    WeylGroupTable tab = WeylGroupTable::build(rd);
    return tab.lengths[tab.element_of_word(word)] == static_cast<int>(word.size());
}

std::vector<Path> theta_sequence(const RootDatum& rd, const Path& p, const std::vector<int>& word) {
    assert(p.start.is_zero());
    std::vector<Path> out;
    out.reserve(word.size() + 1);
    out.push_back(p);
    for (int i : word) {
        auto next = root_operator(rd, out.back(), i, OpDir::Lower, op_max());
        assert(next.has_value());
        out.push_back(std::move(*next));
    }
    return out;
}

Path upsilon(const RootDatum& rd, const Path& p, const std::vector<int>& word) {
    if (!is_reduced_word(rd, word))
        throw NonReducedWord("word of length " + std::to_string(word.size()) + " is not reduced");
    return act_linear(rd, word, theta_sequence(rd, p, word).back());
}

Path upsilon_prime(const RootDatum& rd, const Path& p, const std::vector<int>& word) {
    Path u = upsilon(rd, p, word);
    u.start += p.end() - u.end();
    return u;
}

BottomData bottom_vertices(const RootDatum& rd, const Path& p, int first_index, int cap) {
    assert(rd.affine);
    assert(first_index == 0 || first_index == 1);
    assert(p.start.is_zero());
    Vec mu = p.end();
    Rat defect = rd.rho(p.shape - mu);
    assert(is_integer(defect) && defect >= 0);
    // Nonzero multiplicities live at ladder index k with k-1 and k bounded
    // by the two defect coordinates, hence k <= floor((H+1)/2) for H the
    // rho-pairing; two more steps make the stabilization visible.
    long needed = rat_floor((defect + 1) / 2).convert_to<long>() + 2;
    if (needed > cap)
        throw StabilizationCapExceeded("needs " + std::to_string(needed) + " steps, cap " +
                                       std::to_string(cap));

    BottomData out;
    out.side = first_index;
    out.vertices.push_back(Vec(rd.dimY));
    std::vector<Int> mult;
    std::vector<int> word;
    Path theta = p;
    for (long k = 1; k <= needed; ++k) {
        int i = (k % 2 == 1) ? first_index : 1 - first_index;
        Int a = epsilon(theta, simple_real_root(rd, i));
        Vec beta_vee = weyl_act_product(rd, word, rd.simple_coroots[i]);
        theta = *root_operator(rd, theta, i, OpDir::Lower, op_max());
        word.push_back(i);
        Vec vertex = mu - weyl_act_product(rd, word, theta.end());
        assert(vertex == out.vertices.back() - Rat(a) * beta_vee);
        out.vertices.push_back(vertex);
        mult.push_back(a);
    }
    size_t n = mult.size();
    if (mult[n - 1] != 0 || mult[n - 2] != 0)
        throw StabilizationCapExceeded("tail not stabilized after " + std::to_string(needed) +
                                       " steps");
    while (!mult.empty() && mult.back() == 0) {
        mult.pop_back();
        out.vertices.pop_back();
    }
    out.edge_multiplicities = std::move(mult);
    return out;
}

std::pair<Int, bool> min_level_and_reflection_check(const RootDatum& rd, const Path& p,
                                                    const std::vector<int>& word, int i) {
    std::vector<int> ext = word;
    ext.push_back(i);
    Path base = upsilon_prime(rd, p, word);
    Path next = upsilon_prime(rd, p, ext);
    Form beta = weyl_act_product(rd, word, rd.simple_roots[i]);
    Vec beta_vee = weyl_act_product(rd, word, rd.simple_coroots[i]);

    LevelMin lm = min_level(base, beta);
    assert(is_integer(lm.value));
    Int m = rat_num(lm.value);

    Path ups = upsilon(rd, p, word);
    Path theta = theta_sequence(rd, p, word).back();
    Rat closed = beta(p.end() - ups.end()) - Rat(epsilon(theta, simple_real_root(rd, i)));
    bool ok = (Rat(m) == closed);

    // Breakpoints of both paths up to the first minimum time, plus that
    // time itself; the reflected base path must match there.
    std::vector<Rat> ts;
    for (const Knots& k : {knots_of(base), knots_of(next)})
        for (const Rat& t : k.t)
            if (t <= lm.first_time) ts.push_back(t);
    ts.push_back(lm.first_time);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (const Rat& t : ts) {
        Vec x = sample(base, t).point;
        Vec reflected = x + (Rat(m) - beta(x)) * beta_vee;
        if (sample(next, t).point != reflected) {
            ok = false;
            break;
        }
    }
    return {m, ok};
}

}  // namespace affmv
