#include "affmv/decorations.hpp"

#include "affmv/errors.hpp"

#include <algorithm>
#include <cassert>

namespace affmv {

namespace {

// Minimum of alpha over [a, b]; attained at a knot of the refined profile.
Rat min_on_interval(const Path& p, const Form& alpha, const Rat& a, const Rat& b) {
    Knots k = knots_of(p);
    insert_knot(k, a);
    insert_knot(k, b);
    bool first = true;
    Rat m = 0;
    for (size_t j = 0; j < k.t.size(); ++j) {
        if (k.t[j] < a || k.t[j] > b) continue;
        Rat v = alpha(k.x[j]);
        if (first || v < m) {
            m = v;
            first = false;
        }
    }
    assert(!first);
    return m;
}

// Maximal time intervals on which alpha sits at its global minimum. Between
// two consecutive knots the path is linear, so a run is flat and its
// endpoints are knots.
std::vector<std::pair<Rat, Rat>> min_runs(const Path& p, const Form& alpha, Rat& minval) {
    Knots kn = knots_of(p);
    minval = alpha(kn.x[0]);
    for (const Vec& x : kn.x) minval = std::min(minval, alpha(x));
    std::vector<std::pair<Rat, Rat>> runs;
    for (size_t a = 0; a < kn.t.size();) {
        if (alpha(kn.x[a]) != minval) {
            ++a;
            continue;
        }
        size_t b = a;
        while (b + 1 < kn.t.size() && alpha(kn.x[b + 1]) == minval) ++b;
        runs.emplace_back(kn.t[a], kn.t[b]);
        a = b + 1;
    }
    return runs;
}

}  // namespace

std::vector<Zigzag> find_zigzags(const RootDatum& rd, const Path& p, int i) {
    assert(i == 0 || i == 1);
    RealRoot ri = simple_real_root(rd, i);
    RealRoot rj = simple_real_root(rd, 1 - i);
    std::vector<Zigzag> out;
    for (const Section& s : bare_stables(p, ri))
        for (const Section& t : bare_stables(p, rj)) {
            if (t.level != -s.level) continue;
            if (!(s.t0 <= t.t0 && t.t0 <= s.t1 && s.t1 <= t.t1)) continue;
            if (min_on_interval(p, ri.alpha, s.t0, t.t1) < Rat(s.level)) continue;
            if (min_on_interval(p, rj.alpha, s.t0, t.t1) < Rat(t.level)) continue;
            out.push_back({s.t0, t.t1, t.t0, s.t1, i, s.level});
        }
    std::sort(out.begin(), out.end(), [](const Zigzag& a, const Zigzag& b) {
        if (a.level != b.level) return a.level < b.level;
        if (a.s != b.s) return a.s < b.s;
        if (a.v != b.v) return a.v < b.v;
        if (a.t != b.t) return a.t < b.t;
        return a.u < b.u;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Zigzag& a, const Zigzag& b) {
                              return a.level == b.level && a.s == b.s && a.v == b.v;
                          }),
              out.end());
    return out;
}

Int zigzag_count(const RootDatum& rd, const Path& p, int i, const Int& k) {
    Int n = 0;
    for (const Zigzag& z : find_zigzags(rd, p, i))
        if (z.level == k) ++n;
    return n;
}

std::pair<Partition, Partition> read_partitions(const RootDatum& rd, const Path& p) {
    RealRoot r0 = simple_real_root(rd, 0);
    RealRoot r1 = simple_real_root(rd, 1);
    Int e0 = epsilon(p, r0);
    Int e1 = epsilon(p, r1);
    if (e0 > 0 && e1 > 0)
        throw HypothesisNotMet("both raising directions available: epsilon_0 = " + e0.str() +
                               ", epsilon_1 = " + e1.str());
    if (e0 == 0 && e1 == 0) return {Partition{}, Partition{}};
    int j = e1 > 0 ? 1 : 0;
    const Int N = j == 1 ? e1 : e0;
    const RealRoot& rj = j == 1 ? r1 : r0;
    const RealRoot& ropp = j == 1 ? r0 : r1;

    std::vector<Int> parts;
    for (const Zigzag& z : find_zigzags(rd, p, 1 - j))
        if (z.level >= 1)
            parts.push_back(z.level);
    Partition base = Partition::of(std::move(parts));

    // The opposite partition gains a part of size N exactly when the path
    // reaches the minimum of alpha_j inside a bare stable of the other root
    // at level N. A path can revisit its minimum after leaving such a stable
    // interval, in which case the descent that matters is the final one, so
    // the test is on the last minimizing run only.
    Rat minval;
    auto runs = min_runs(p, rj.alpha, minval);
    assert(minval == -Rat(N));
    assert(!runs.empty());
    const auto& [a, b] = runs.back();
    bool extra = false;
    for (const Section& s : bare_stables(p, ropp))
        if (s.level == N && a <= s.t1 && s.t0 <= b) {
            extra = true;
            break;
        }
    Partition other = extra ? base.with_part(N) : base;

    if (j == 1) return {other, base};  // (left, right) = (lambdabar, lambda)
    return {base, other};
}

std::pair<Partition, Partition> decorate(const RootDatum& rd, const Path& p) {
    GenpolReduction G = genpol_reduce(rd, p);
    Int e0 = epsilon(G.reduced, simple_real_root(rd, 0));
    Int e1 = epsilon(G.reduced, simple_real_root(rd, 1));
    if (e0 > 0 && e1 > 0)
        throw DeltaTopAmbiguous("reduced path raises in both directions: epsilon_0 = " +
                                e0.str() + ", epsilon_1 = " + e1.str());
    return read_partitions(rd, G.reduced);
}

}  // namespace affmv
