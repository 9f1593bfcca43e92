#include "affmv/paths.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace affmv {

Vec Path::end() const {
    Vec e = start;
    for (const auto& [dir, dur] : segments) {
        Vec step = dir;
        step *= dur;
        e += step;
    }
    return e;
}

Path normalized(Path p) {
    std::vector<std::pair<Vec, Rat>> out;
    Rat total = 0;
    for (auto& [dir, dur] : p.segments) {
        assert(dur >= 0);
        if (dur == 0) continue;
        total += dur;
        if (!out.empty() && out.back().first == dir)
            out.back().second += dur;
        else
            out.emplace_back(dir, dur);
    }
    assert(total == 1);
    p.segments = std::move(out);
    return p;
}

Knots knots_of(const Path& p) {
    Knots k;
    k.t.push_back(Rat(0));
    k.x.push_back(p.start);
    Rat t = 0;
    Vec x = p.start;
    for (const auto& [dir, dur] : p.segments) {
        t += dur;
        Vec step = dir;
        step *= dur;
        x += step;
        k.t.push_back(t);
        k.x.push_back(x);
    }
    assert(k.t.back() == 1);
    return k;
}

Path path_of_knots(const Knots& k, const Vec& shape) {
    assert(k.t.size() >= 2);
    Path p;
    p.start = k.x.front();
    p.shape = shape;
    for (size_t i = 0; i + 1 < k.t.size(); ++i) {
        Rat dt = k.t[i + 1] - k.t[i];
        assert(dt > 0);
        Vec dir = k.x[i + 1] - k.x[i];
        dir *= Rat(1) / dt;
        p.segments.emplace_back(dir, dt);
    }
    return normalized(std::move(p));
}

size_t insert_knot(Knots& k, const Rat& u) {
    auto it = std::lower_bound(k.t.begin(), k.t.end(), u);
    size_t i = static_cast<size_t>(it - k.t.begin());
    if (it != k.t.end() && *it == u) return i;
    assert(i > 0 && i < k.t.size());
    Rat lam = (u - k.t[i - 1]) / (k.t[i] - k.t[i - 1]);
    Vec x = k.x[i - 1] + lam * (k.x[i] - k.x[i - 1]);
    k.t.insert(k.t.begin() + static_cast<long>(i), u);
    k.x.insert(k.x.begin() + static_cast<long>(i), x);
    return i;
}

Path straight_path(const RootDatum& rd, const Vec& lambda) {
    for (size_t i = 0; i < rd.rank; ++i)
        if (rd.simple_roots[i](lambda) < 0)
            throw NotDominant("straight path requires a dominant endpoint");
    Path p;
    p.start = Vec(rd.dimY);
    p.segments.emplace_back(lambda, Rat(1));
    p.shape = lambda;
    return p;
}

SamplePoint sample(const Path& p, const Rat& u) {
    assert(u >= 0 && u <= 1);
    Knots k = knots_of(p);
    SamplePoint s;
    size_t i = 0;
    while (i + 1 < k.t.size() && k.t[i + 1] < u) ++i;
    // Segment i covers [t[i], t[i+1]] with u inside or at its right end.
    auto seg_dir = [&](size_t j) {
        Vec d = k.x[j + 1] - k.x[j];
        d *= Rat(1) / (k.t[j + 1] - k.t[j]);
        return d;
    };
    Rat lam = (u - k.t[i]) / (k.t[i + 1] - k.t[i]);
    s.point = k.x[i] + lam * (k.x[i + 1] - k.x[i]);
    if (u == 0) {
        s.left_deriv = s.right_deriv = seg_dir(0);
    } else if (u == 1) {
        s.left_deriv = s.right_deriv = seg_dir(k.t.size() - 2);
    } else if (u == k.t[i + 1]) {
        s.left_deriv = seg_dir(i);
        s.right_deriv = seg_dir(i + 1);
    } else {
        s.left_deriv = s.right_deriv = seg_dir(i);
    }
    return s;
}

bool is_lambda_path(const RootDatum& rd, const Path& p) {
    for (const auto& [dir, dur] : p.segments) {
        (void)dur;
        if (dir.is_zero()) {
            if (!p.shape.is_zero()) return false;
            continue;
        }
        try {
            auto [dom, word] = dominant_representative(rd, dir);
            (void)word;
            if (dom != p.shape) return false;
        } catch (const NotInTitsConeInterior&) {
            return false;
        }
    }
    return true;
}

namespace {

struct Profile {
    Knots k;
    std::vector<Rat> v;
};

Profile profile_of(const Path& p, const Form& alpha) {
    Profile pr;
    pr.k = knots_of(p);
    for (const auto& x : pr.k.x) pr.v.push_back(alpha(x));
    return pr;
}

// Inserts a knot at every time where alpha crosses an integer level, so that
// afterwards every integer-level attainment happens at a knot.
Profile refined_profile(const Path& p, const Form& alpha) {
    Profile pr = profile_of(p, alpha);
    std::vector<Rat> cuts;
    for (size_t i = 0; i + 1 < pr.k.t.size(); ++i) {
        Rat lo = std::min(pr.v[i], pr.v[i + 1]);
        Rat hi = std::max(pr.v[i], pr.v[i + 1]);
        for (Int lvl = rat_floor(lo) + 1; Rat(lvl) < hi; ++lvl) {
            if (Rat(lvl) <= lo) continue;
            // strictly between the endpoint values: a genuine crossing
            Rat lam = (Rat(lvl) - pr.v[i]) / (pr.v[i + 1] - pr.v[i]);
            cuts.push_back(pr.k.t[i] + lam * (pr.k.t[i + 1] - pr.k.t[i]));
        }
    }
    for (const Rat& c : cuts) insert_knot(pr.k, c);
    pr.v.clear();
    for (const auto& x : pr.k.x) pr.v.push_back(alpha(x));
    return pr;
}

Rat min_of(const std::vector<Rat>& v) {
    Rat m = v[0];
    for (const auto& a : v) m = std::min(m, a);
    return m;
}

}  // namespace

LevelMin min_level(const Path& p, const Form& alpha) {
    Profile pr = profile_of(p, alpha);
    LevelMin out;
    out.value = min_of(pr.v);
    bool first_set = false;
    for (size_t i = 0; i < pr.v.size(); ++i) {
        if (pr.v[i] == out.value) {
            if (!first_set) {
                out.first_time = pr.k.t[i];
                first_set = true;
            }
            out.last_time = pr.k.t[i];
        }
    }
    assert(first_set);
    return out;
}

SectionPartition sections(const Path& p, const RealRoot& alpha) {
    assert(alpha.positive());
    Profile pr = refined_profile(p, alpha.alpha);
    const auto& t = pr.k.t;
    const auto& v = pr.v;
    const size_t n = t.size();

    if (!is_integer(v[0]))
        throw NonIntegralLevel("path starts at level " + rat_to_string(v[0]) + " for root " +
                               alpha.str());
    SectionPartition out;
    out.root = alpha;
    size_t i = 0;
    Rat level = v[0];
    while (t[i] < 1) {
        // Maximal flat stretch at the current level.
        size_t j = i;
        while (j + 1 < n && v[j + 1] == level) ++j;
        if (j > i) {
            out.sections.push_back({t[i], t[j], SectionKind::Zero, rat_num(level)});
            i = j;
            if (t[i] == 1) break;
        }
        // Next segment moves off the level.
        assert(i + 1 < n && v[i + 1] != level);
        bool rising = v[i + 1] > level;
        if (rising) {
            // First return to the level, if any.
            size_t r = i + 1;
            while (r < n && v[r] != level) ++r;
            if (r < n) {
                out.sections.push_back({t[i], t[r], SectionKind::Stable, rat_num(level)});
                i = r;
                continue;
            }
            // Never returns: directed up to the first hit of level + 1.
            size_t u = i + 1;
            while (u < n && v[u] != level + 1) ++u;
            if (u == n)
                throw NonIntegralLevel("path ends at level " + rat_to_string(v[n - 1]) +
                                       " strictly between integers for root " + alpha.str());
            out.sections.push_back({t[i], t[u], SectionKind::DirectedUp, rat_num(level)});
            i = u;
            level += 1;
        } else {
            // Descending: must reach level - 1 before any return to the level.
            size_t u = i + 1;
            while (u < n && v[u] != level - 1 && v[u] != level) ++u;
            if (u == n)
                throw NonIntegralLevel("path ends at level " + rat_to_string(v[n - 1]) +
                                       " strictly between integers for root " + alpha.str());
            if (v[u] == level)
                throw NonIntegralLevel("descending excursion returns to level " +
                                       rat_to_string(level) + " before reaching the level below");
            out.sections.push_back({t[i], t[u], SectionKind::DirectedDown, rat_num(level)});
            i = u;
            level -= 1;
        }
    }
    assert(!out.sections.empty());
    assert(out.sections.front().t0 == 0 && out.sections.back().t1 == 1);
    return out;
}

std::vector<Section> bare_stables(const Path& p, const RealRoot& alpha) {
    assert(alpha.positive());
    Profile pr = refined_profile(p, alpha.alpha);
    const auto& t = pr.k.t;
    const auto& v = pr.v;
    const size_t n = t.size();
    std::vector<Section> out;
    Int lo = rat_floor(min_of(pr.v));
    Rat hi = *std::max_element(pr.v.begin(), pr.v.end());
    for (Int m = lo; Rat(m) <= hi; ++m) {
        // Contact runs: maximal index ranges with v == m.
        std::vector<std::pair<size_t, size_t>> contacts;
        for (size_t i = 0; i < n;) {
            if (v[i] == Rat(m)) {
                size_t j = i;
                while (j + 1 < n && v[j + 1] == Rat(m)) ++j;
                contacts.emplace_back(i, j);
                i = j + 1;
            } else {
                ++i;
            }
        }
        for (size_t c = 0; c + 1 < contacts.size(); ++c) {
            size_t a = contacts[c].second;      // gap start knot
            size_t b = contacts[c + 1].first;   // gap end knot
            assert(a + 1 < b);
            bool above = true;
            for (size_t k = a + 1; k < b; ++k)
                if (v[k] <= Rat(m)) above = false;
            if (above) out.push_back({t[a], t[b], SectionKind::Stable, m});
        }
    }
    std::sort(out.begin(), out.end(), [](const Section& x, const Section& y) {
        if (x.t0 != y.t0) return x.t0 < y.t0;
        if (x.t1 != y.t1) return x.t1 < y.t1;
        return x.level < y.level;
    });
    return out;
}

namespace {

// Applies the lowering operator n times in a single pass. Iterating the
// one-step rule shows the n-fold image only depends on the zone boundaries
// x_j = last attainment of level Q+j-1 and y_j = first attainment of Q+j
// after x_j (so x_1 <= y_1 <= x_2 <= ... <= y_n). Knots up to x_1 stay put,
// each [x_j, y_j] reflects to level 2Q - v, and each gap [y_j, x_{j+1}]
// translates by -j alpha_vee. n < 0 means "to depletion"; returns nullopt
// when fewer than n steps exist.
std::optional<Path> lower_block(const Path& p, const RealRoot& alpha, Int n) {
    Profile pr = refined_profile(p, alpha.alpha);
    Rat Q = min_of(pr.v);
    if (!is_integer(Q))
        throw NonIntegralLevel("minimum level " + rat_to_string(Q) + " for root " + alpha.str());
    Rat avail = pr.v.back() - Q;
    assert(is_integer(avail));
    if (n < 0) n = rat_num(avail);
    if (n == 0) return p;
    if (Rat(n) > avail) return std::nullopt;

    const size_t N = pr.v.size();
    std::vector<size_t> bnd;
    size_t xj = N - 1;
    while (pr.v[xj] != Q) --xj;
    bnd.push_back(xj);
    for (Int j = 1; j <= n; ++j) {
        Rat target = Q + Rat(j);
        size_t yj = xj;
        while (pr.v[yj] != target) {
            ++yj;
            assert(yj < N);
        }
        bnd.push_back(yj);
        if (j < n) {
            xj = N - 1;
            while (pr.v[xj] != target) --xj;
            assert(xj >= yj);
            bnd.push_back(xj);
        }
    }

    Knots out = pr.k;
    size_t z = 0;
    for (size_t i = 0; i < N; ++i) {
        while (z < bnd.size() && bnd[z] < i) ++z;
        if (z == 0) continue;
        if (z % 2 == 1)
            out.x[i] = pr.k.x[i] - (pr.v[i] - Q) * alpha.coroot;
        else
            out.x[i] = pr.k.x[i] - Rat(Int(z / 2)) * alpha.coroot;
    }
    return path_of_knots(out, p.shape);
}

// Mirror image of lower_block: y_j = first attainment of Q+j-1, x_j = last
// attainment of Q+j before y_j, time-ordered x_n <= y_n <= ... <= x_1 <= y_1.
// Knots up to x_n stay put, each [x_j, y_j] reflects to level 2Q + 2n - v,
// and each gap [y_{j+1}, x_j] translates by +(n-j) alpha_vee.
std::optional<Path> raise_block(const Path& p, const RealRoot& alpha, Int n) {
    Profile pr = refined_profile(p, alpha.alpha);
    Rat Q = min_of(pr.v);
    if (!is_integer(Q))
        throw NonIntegralLevel("minimum level " + rat_to_string(Q) + " for root " + alpha.str());
    Rat avail = pr.v.front() - Q;
    assert(is_integer(avail));
    if (n < 0) n = rat_num(avail);
    if (n == 0) return p;
    if (Rat(n) > avail) return std::nullopt;

    const size_t N = pr.v.size();
    std::vector<std::pair<size_t, size_t>> pairs;  // (x_j, y_j), j = 1..n
    for (Int j = 1; j <= n; ++j) {
        Rat low = Q + Rat(j - 1);
        size_t yj = 0;
        while (pr.v[yj] != low) {
            ++yj;
            assert(yj < N);
        }
        Rat high = Q + Rat(j);
        size_t xj = yj;
        while (pr.v[xj] != high) {
            assert(xj > 0);
            --xj;
        }
        pairs.emplace_back(xj, yj);
    }
    std::vector<size_t> bnd;
    for (size_t j = pairs.size(); j-- > 0;) {
        bnd.push_back(pairs[j].first);
        bnd.push_back(pairs[j].second);
    }

    Knots out = pr.k;
    size_t z = 0;
    for (size_t i = 0; i < N; ++i) {
        while (z < bnd.size() && bnd[z] < i) ++z;
        if (z == 0) continue;
        if (z % 2 == 1)
            out.x[i] = pr.k.x[i] + (Rat(n) - (pr.v[i] - Q)) * alpha.coroot;
        else
            out.x[i] = pr.k.x[i] + Rat(Int(z / 2)) * alpha.coroot;
    }
    return path_of_knots(out, p.shape);
}

}  // namespace

std::optional<Path> root_operator_real(const RootDatum& rd, const Path& p, const RealRoot& alpha,
                                       OpDir dir, OpCount count) {
    (void)rd;
    Int n = -1;
    if (!count.is_max) {
        assert(count.power >= 0);
        if (count.power == 0) return p;
        n = count.power;
    }
    return dir == OpDir::Raise ? raise_block(p, alpha, n) : lower_block(p, alpha, n);
}

std::optional<Path> root_operator(const RootDatum& rd, const Path& p, int i, OpDir dir,
                                  OpCount count) {
    return root_operator_real(rd, p, simple_real_root(rd, i), dir, count);
}

Int epsilon(const Path& p, const RealRoot& alpha) {
    Profile pr = profile_of(p, alpha.alpha);
    Rat Q = min_of(pr.v) - pr.v.front();
    if (!is_integer(Q)) throw NonIntegralLevel("relative minimum " + rat_to_string(Q));
    return -rat_num(Q);
}

Int phi(const Path& p, const RealRoot& alpha) {
    Profile pr = profile_of(p, alpha.alpha);
    Rat f = pr.v.back() - min_of(pr.v);
    if (!is_integer(f)) throw NonIntegralLevel("relative reach " + rat_to_string(f));
    return rat_num(f);
}

Path flip(const Path& p, const RealRoot& alpha) {
    SectionPartition part = sections(p, alpha);
    Profile pr = refined_profile(p, alpha.alpha);
    Knots out = pr.k;
    for (const Section& s : part.sections) {
        if (s.kind != SectionKind::Stable) continue;
        for (size_t i = 0; i < out.t.size(); ++i) {
            if (out.t[i] <= s.t0 || out.t[i] >= s.t1) continue;
            Rat a = alpha.alpha(out.x[i]);
            out.x[i] = out.x[i] + (Rat(s.level) - a) * alpha.coroot;
        }
    }
    return path_of_knots(out, p.shape);
}

namespace {

// Writes f as x*alpha_0 + y*alpha_1; requires the affine datum.
std::pair<Rat, Rat> root_plane_coords(const RootDatum& rd, const Form& f) {
    Rat x = f(rd.d);
    Rat y = x - f(rd.simple_coroots[0]) / 2;
    return {x, y};
}

bool is_positive_real_root_form(const RootDatum& rd, const Form& f) {
    auto [x, y] = root_plane_coords(rd, f);
    assert(is_integer(x) && is_integer(y));
    Rat diff = x - y;
    assert(diff == 1 || diff == -1);
    return x + y > 0;
}

Int count_walls(const RootDatum& rd, const Path& p, const std::vector<int>& word, long cutoff) {
    Knots k = knots_of(p);
    Int total = 0;
    for (int eps : {1, -1}) {
        for (long m = 0; m <= cutoff; ++m) {
            if (eps == 1 && m == 0) continue;  // that form is the positive root alpha_1
            Form beta = Rat(eps) * rd.simple_roots[1] - Rat(m) * rd.delta;
            Form winv_beta = weyl_act(rd, word, beta);
            bool upstairs = is_positive_real_root_form(rd, winv_beta);
            // Each wall departure is one event; the same wall counts again if
            // the reverse path leaves it at a second time. w^{-1} beta
            // positive: events where beta decreases; negative: increases.
            Int events = 0;
            for (size_t i = 0; i + 1 < k.t.size(); ++i) {
                Rat v0 = beta(k.x[i]), v1 = beta(k.x[i + 1]);
                if (v0 == v1) continue;
                if (upstairs && v1 < v0) {
                    // values on (t_i, t_{i+1}] fill [v1, v0)
                    for (Int lvl = rat_ceil(v1); Rat(lvl) < v0; ++lvl) ++events;
                } else if (!upstairs && v1 > v0) {
                    // values on (t_i, t_{i+1}] fill (v0, v1]
                    for (Int lvl = rat_floor(v0) + 1; Rat(lvl) <= v1; ++lvl) ++events;
                }
            }
            total += events;
        }
    }
    return total;
}

}  // namespace

Int ddim(const RootDatum& rd, const Path& p, const std::vector<int>& word, long root_cutoff) {
    assert(rd.affine);
    assert(root_cutoff >= 1);
    Int a = count_walls(rd, p, word, root_cutoff);
    Int b = count_walls(rd, p, word, root_cutoff + 1);
    if (a != b)
        throw CutoffTooSmall("wall count still grows past delta-coefficient " +
                             std::to_string(root_cutoff));
    return a;
}

bool is_ls_member(const RootDatum& rd, const Path& p, const Vec& lambda, int depth) {
    if (!p.start.is_zero()) return false;
    if (p.shape != lambda) return false;
    if (!is_lambda_path(rd, p)) return false;
    try {
        Path cur = p;
        int steps = 0;
        for (;;) {
            Int e0 = epsilon(cur, simple_real_root(rd, 0));
            Int e1 = epsilon(cur, simple_real_root(rd, 1));
            if (e0 == 0 && e1 == 0) break;
            int i = e0 > 0 ? 0 : 1;
            auto nxt = root_operator(rd, cur, i, OpDir::Raise, op_power(1));
            assert(nxt.has_value());
            cur = *nxt;
            if (++steps > depth) throw DepthExceeded("needed more than " + std::to_string(depth) +
                                                     " raising steps");
        }
        return cur == straight_path(rd, lambda);
    } catch (const NonIntegralLevel&) {
        return false;
    }
}

std::vector<Path> crystal_generate(const RootDatum& rd, const Vec& lambda, int depth) {
    std::vector<Path> out;
    std::map<std::string, bool> seen;
    Path start = straight_path(rd, lambda);
    out.push_back(start);
    seen[path_key(start)] = true;
    std::vector<Path> layer{start};
    for (int d = 0; d < depth; ++d) {
        std::vector<Path> next;
        for (const Path& p : layer) {
            for (int i : {0, 1}) {
                auto f = root_operator(rd, p, i, OpDir::Lower, op_power(1));
                if (!f) continue;
                std::string key = path_key(*f);
                if (seen.contains(key)) continue;
                seen[key] = true;
                next.push_back(*f);
                out.push_back(*f);
            }
        }
        layer = std::move(next);
    }
    return out;
}

std::optional<Path> apply_lowering_word(const RootDatum& rd, const Path& p,
                                        const std::vector<std::pair<int, int>>& factors) {
    Path cur = p;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        auto nxt = root_operator(rd, cur, it->first, OpDir::Lower, op_power(it->second));
        if (!nxt) return std::nullopt;
        cur = *nxt;
    }
    return cur;
}

std::string path_key(const Path& p) {
    std::string s = p.start.str() + "|";
    for (const auto& [dir, dur] : p.segments) s += dir.str() + "*" + rat_to_string(dur) + ";";
    s += "|" + p.shape.str();
    return s;
}

}  // namespace affmv
