#include "affmv/treefold.hpp"

#include "affmv/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace affmv {

namespace {

RealRoot negated(const RootDatum& rd, const RealRoot& r) {
    return real_root(rd, r.i, !r.plus, -r.k);
}

}  // namespace

RealRoot pushed_root(const RootDatum& rd, const std::vector<int>& word, int i) {
    assert(rd.affine);
    assert(i >= 0 && size_t(i) < rd.rank);
    Form f = weyl_act_product(rd, word, rd.simple_roots[i]);
    // With f = x*alpha_0 + y*alpha_1, the delta-coefficient is x and the
    // classical part is (y - x)*alpha_1.
    Rat x = f(rd.d);
    Rat y = x + f(rd.simple_coroots[1]) / 2;
    assert(y - x == 1 || y - x == -1);
    RealRoot out = real_root(rd, 1, y - x == 1, rat_num(x).convert_to<long>());
    assert(out.alpha == f);
    return out;
}

FoldedPath build_folded(const RootDatum& rd, const Path& p, const std::vector<int>& word, int i) {
    std::vector<int> extended = word;
    extended.push_back(i);
    if (!is_reduced_word(rd, extended))
        throw NonReducedWord("fold index must extend the word reducedly");

    FoldedPath eta;
    eta.base = upsilon_prime(rd, p, word);
    RealRoot wal = pushed_root(rd, word, i);
    assert(wal.positive());
    eta.root = negated(rd, wal);
    for (const Section& s : sections(eta.base, wal).sections)
        if (s.kind == SectionKind::Stable) eta.markers.push_back(Marker{s.t0, s.t1, s.level, Rat(0)});
    return eta;
}

FoldedPath build_folded(const RootDatum& rd, const Path& p, const std::vector<int>& word, int i,
                        const std::vector<Rat>& coeffs) {
    FoldedPath eta = build_folded(rd, p, word, i);
    if (coeffs.size() != eta.markers.size())
        throw CoefficientMismatch("expected " + std::to_string(eta.markers.size()) +
                                  " coefficients, got " + std::to_string(coeffs.size()));
    for (size_t j = 0; j < coeffs.size(); ++j) eta.markers[j].coeff = coeffs[j];
    return eta;
}

bool genericity(const FoldedPath& eta) {
    std::map<Int, Rat> cum;
    for (size_t j = eta.markers.size(); j-- > 0;) {
        Rat& c = cum[eta.markers[j].level];
        c += eta.markers[j].coeff;
        if (c == 0) return false;
    }
    return true;
}

Path fold_plus(const FoldedPath& eta) {
    Form beta = -eta.root.alpha;
    Vec beta_vee = -eta.root.coroot;
    LevelMin lm = min_level(eta.base, beta);
    const Rat& q = lm.first_time;

    Knots out = knots_of(eta.base);
    for (const Marker& mk : eta.markers) {
        insert_knot(out, mk.t0);
        insert_knot(out, mk.t1);
    }
    insert_knot(out, q);

    std::map<Int, Rat> cum;
    std::vector<char> reflect(eta.markers.size(), 0);
    for (size_t j = eta.markers.size(); j-- > 0;) {
        const Marker& mk = eta.markers[j];
        Rat& c = cum[mk.level];
        c += mk.coeff;
        if (mk.t0 >= q && c != 0) reflect[j] = 1;
    }
    for (size_t j = 0; j < eta.markers.size(); ++j) {
        if (!reflect[j]) continue;
        const Marker& mk = eta.markers[j];
        for (size_t a = 0; a < out.t.size(); ++a) {
            if (out.t[a] <= mk.t0 || out.t[a] >= mk.t1) continue;
            out.x[a] = out.x[a] + (Rat(mk.level) - beta(out.x[a])) * beta_vee;
        }
    }

    // The prefix reflects once any wall is actually entered; with markers
    // present but all coefficients zero nothing moved, so the base stands.
    bool entered = eta.markers.empty();
    for (const Marker& mk : eta.markers)
        if (mk.coeff != 0) entered = true;
    if (entered) {
        for (size_t a = 0; a < out.t.size(); ++a) {
            if (out.t[a] > q) continue;
            out.x[a] = out.x[a] + (lm.value - beta(out.x[a])) * beta_vee;
        }
    }
    return path_of_knots(out, eta.base.shape);
}

std::pair<Path, bool> retract_step(const RootDatum& rd, const Path& p,
                                   const std::vector<int>& word, int i,
                                   const std::vector<Rat>& coeffs) {
    FoldedPath eta = build_folded(rd, p, word, i, coeffs);
    return {fold_plus(eta), genericity(eta)};
}

ParameterSpace parameter_space(const RootDatum& rd, const Path& p, long root_cutoff) {
    assert(rd.affine);
    Knots kn = knots_of(p);
    size_t n = kn.t.size();
    Form delta = rd.simple_roots[0] + rd.simple_roots[1];

    std::vector<std::pair<Rat, LineKind>> events;
    for (int eps : {1, -1}) {
        for (long m = 0; m <= root_cutoff; ++m) {
            if (eps == 1 && m == 0) continue;  // alpha_1 itself is positive
            Form beta = Rat(eps) * rd.simple_roots[1] - Rat(m) * delta;
            std::vector<Rat> v(n);
            for (size_t j = 0; j < n; ++j) v[j] = beta(kn.x[j]);
            for (size_t j = 0; j + 1 < n; ++j) {
                if (v[j + 1] <= v[j]) continue;
                for (Int lev = rat_floor(v[j]) + 1; Rat(lev) <= v[j + 1]; ++lev) {
                    Rat time = kn.t[j] +
                               (Rat(lev) - v[j]) / (v[j + 1] - v[j]) * (kn.t[j + 1] - kn.t[j]);
                    LineKind kind = LineKind::FreeLine;
                    if (Rat(lev) == v[j + 1]) {
                        size_t nx = j + 1;
                        while (nx + 1 < n && v[nx + 1] == v[nx]) ++nx;
                        if (nx + 1 == n || v[nx + 1] < v[nx]) kind = LineKind::PuncturedLine;
                    }
                    events.emplace_back(time, kind);
                }
            }
        }
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    ParameterSpace ps;
    ps.count = events.size();
    ps.kinds.reserve(events.size());
    for (const auto& e : events) ps.kinds.push_back(e.second);
    assert(Int(static_cast<long>(ps.count)) == ddim(rd, p, {}, root_cutoff));
    return ps;
}

std::vector<Rat> sample_generic_coeffs(const FoldedPath& eta, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);

    FoldedPath trial = eta;
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (Marker& mk : trial.markers) {
            int a = num(rng);
            if (a == 0) a = 1;
            mk.coeff = Rat(a) / den(rng);
        }
        if (!genericity(trial)) continue;
        std::vector<Rat> out;
        out.reserve(trial.markers.size());
        for (const Marker& mk : trial.markers) out.push_back(mk.coeff);
        return out;
    }
    std::vector<Rat> out(eta.markers.size());
    for (size_t j = 0; j < out.size(); ++j) out[j] = Rat(1 + int(j % 9));
    return out;
}

}  // namespace affmv
