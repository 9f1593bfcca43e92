#include "affmv/mvpoly.hpp"

#include "affmv/decorations.hpp"
#include "affmv/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace affmv {

std::string LatticePoint::str() const {
    return "(" + c0.str() + "," + c1.str() + ")";
}

Partition Partition::of(std::vector<Int> p) {
    std::sort(p.begin(), p.end(), std::greater<Int>());
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (const Int& x : p) assert(x > 0);
    return Partition{std::move(p)};
}

Int Partition::size() const {
    Int s = 0;
    for (const Int& x : parts) s += x;
    return s;
}

std::string Partition::exp_str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j + 1 < parts.size() && parts[j + 1] == parts[i]) ++j;
        if (i) out += ",";
        out += parts[i].str();
        if (j > i) out += "^" + std::to_string(j - i + 1);
        i = j + 1;
    }
    return out + ")";
}

Partition Partition::from_exp_str(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("partition literal must be parenthesized: " + s);
    std::string body = s.substr(1, s.size() - 2);
    std::vector<Int> parts;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        size_t caret = tok.find('^');
        try {
            Int part(caret == std::string::npos ? tok : tok.substr(0, caret));
            long rep = caret == std::string::npos ? 1 : std::stol(tok.substr(caret + 1));
            if (part <= 0 || rep <= 0) throw ParseError("bad partition entry: " + tok);
            for (long r = 0; r < rep; ++r) parts.push_back(part);
        } catch (const std::exception&) {
            throw ParseError("bad partition entry: " + tok);
        }
        pos = comma == std::string::npos ? body.size() : comma + 1;
    }
    Partition out = of(parts);
    if (out.parts != parts) throw ParseError("partition parts must be weakly decreasing: " + s);
    return out;
}

Partition Partition::with_part(const Int& s) const {
    assert(s > 0);
    std::vector<Int> p = parts;
    p.push_back(s);
    return of(std::move(p));
}

bool Partition::remove_part(const Int& s, Partition& out) const {
    auto it = std::find(parts.begin(), parts.end(), s);
    if (it == parts.end()) return false;
    std::vector<Int> p = parts;
    p.erase(p.begin() + (it - parts.begin()));
    out = Partition{std::move(p)};
    return true;
}

Int map_entry(const SupportMap& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? Int(0) : it->second;
}

void map_set(SupportMap& m, int k, const Int& v) {
    assert(v >= 0);
    if (v == 0)
        m.erase(k);
    else
        m[k] = v;
}

int max_index(const SupportMap& m) { return m.empty() ? 0 : m.rbegin()->first; }

LatticePoint datum_content(const LusztigDatum& d, int side) {
    assert(side == 0 || side == 1);
    LatticePoint c;
    for (const auto& [k, v] : d.bottom)
        c = c + v * (side == 1 ? alpha1_ladder(k) : alpha0_ladder(k));
    c = c + d.partition.size() * LatticePoint{1, 1};
    for (const auto& [k, v] : d.top)
        c = c + v * (side == 1 ? alpha0_ladder(k) : alpha1_ladder(k));
    return c;
}

MVPolytope point_polytope(const LatticePoint& base) {
    return MVPolytope{LusztigDatum{}, LusztigDatum{}, base};
}

LatticePoint weight(const MVPolytope& P) { return datum_content(P.right, 1); }

Int epsilon(const MVPolytope& P, int i) {
    assert(i == 0 || i == 1);
    return map_entry((i == 1 ? P.right : P.left).bottom, 1);
}

PolytopeVertices vertices(const MVPolytope& P) {
    PolytopeVertices V;
    int K = std::max(std::max(max_index(P.right.bottom), max_index(P.left.bottom)),
                     std::max(max_index(P.right.top), max_index(P.left.top))) +
            2;
    V.K = K;
    V.right_bottom.push_back(P.base);
    V.left_bottom.push_back(P.base);
    for (int k = 1; k <= K; ++k) {
        V.right_bottom.push_back(V.right_bottom.back() +
                                 map_entry(P.right.bottom, k) * alpha1_ladder(k));
        V.left_bottom.push_back(V.left_bottom.back() +
                                map_entry(P.left.bottom, k) * alpha0_ladder(k));
    }
    LatticePoint delta{1, 1};
    // Top chains are built upward from their limits, then stored 0..K.
    std::vector<LatticePoint> rt(K + 1), lt(K + 1);
    rt[K] = V.mu_inf() + P.right.partition.size() * delta;
    lt[K] = V.mubar_inf() + P.left.partition.size() * delta;
    for (int k = K; k >= 1; --k) {
        rt[k - 1] = rt[k] + map_entry(P.right.top, k) * alpha0_ladder(k);
        lt[k - 1] = lt[k] + map_entry(P.left.top, k) * alpha1_ladder(k);
    }
    if (rt[0] != lt[0])
        throw ClosureViolation("top vertex differs along the two chains: " + rt[0].str() +
                               " vs " + lt[0].str());
    V.right_top = std::move(rt);
    V.left_top = std::move(lt);
    return V;
}

std::string ValidationReport::str() const {
    auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
    std::string s = std::string("closure ") + mark(closed) + ", (i) " + mark(cond_i) +
                    ", (ii) " + mark(cond_ii) + ", (iii) " + mark(cond_iii) + ", (iv) " +
                    mark(cond_iv);
    s += parallel ? ", parallel diagonals" : (", removal size " + removal.str());
    return s;
}

ValidationReport validate(const MVPolytope& P) {
    ValidationReport R;
    PolytopeVertices V;
    try {
        V = vertices(P);
    } catch (const ClosureViolation&) {
        return R;
    }
    R.closed = true;

    R.cond_i = true;
    R.cond_ii = true;
    for (int k = 2; k <= V.K; ++k) {
        Int b1 = pair_omega1(V.left_bottom[k] - V.right_bottom[k - 1]);
        Int b2 = pair_omega0(V.right_bottom[k] - V.left_bottom[k - 1]);
        if (!(b1 <= 0 && b2 <= 0 && (b1 == 0 || b2 == 0))) {
            R.cond_i = false;
            R.failures_i.push_back(k);
        }
        Int t1 = pair_omega0(V.left_top[k] - V.right_top[k - 1]);
        Int t2 = pair_omega1(V.right_top[k] - V.left_top[k - 1]);
        if (!(t1 >= 0 && t2 >= 0 && (t1 == 0 || t2 == 0))) {
            R.cond_ii = false;
            R.failures_ii.push_back(k);
        }
    }

    LatticePoint dbot = V.mu_inf() - V.mubar_inf();
    LatticePoint dtop = V.mu_top_inf() - V.mubar_top_inf();
    R.parallel = dbot.c0 * dtop.c1 - dbot.c1 * dtop.c0 == 0;
    R.removal = pair_alpha1_half(dbot);
    if (R.parallel) {
        R.cond_iii = P.right.partition == P.left.partition;
    } else {
        Partition reduced;
        R.cond_iii = (R.removal > 0) &&
                     ((P.right.partition.remove_part(R.removal, reduced) &&
                       reduced == P.left.partition) ||
                      (P.left.partition.remove_part(R.removal, reduced) &&
                       reduced == P.right.partition));
    }
    R.cond_iv = P.right.partition.first() <= R.removal &&
                P.left.partition.first() <= R.removal;
    return R;
}

namespace {

SupportMap map_below(const SupportMap& m, int upto) {
    SupportMap out;
    for (const auto& [k, v] : m)
        if (k <= upto) out[k] = v;
    return out;
}

SupportMap map_from(const SupportMap& m, int from) {
    SupportMap out;
    for (const auto& [k, v] : m)
        if (k >= from) out[k] = v;
    return out;
}

SupportMap map_with_first(SupportMap m, const Int& c) {
    assert(m.find(1) == m.end());
    map_set(m, 1, c);
    return m;
}

// Chains stabilize at index K, so clamp reads beyond the stored range.
const LatticePoint& chain_at(const std::vector<LatticePoint>& chain, int k) {
    size_t i = std::min<size_t>(k < 0 ? 0 : size_t(k), chain.size() - 1);
    return chain[i];
}

}  // namespace

std::pair<MVPolytope, MVPolytope> cut_at_active_diagonal(const MVPolytope& P, int k,
                                                         const std::string& family) {
    if (family != "bottom" && family != "top")
        throw DiagonalNotActive("unknown diagonal family: " + family);
    if (k != 0 && k < 2)
        throw DiagonalNotActive("diagonals are indexed by k = 0 or k >= 2, got " +
                                std::to_string(k));
    PolytopeVertices V = vertices(P);
    MVPolytope low, high;
    low.base = P.base;

    if (family == "bottom") {
        if (k == 0) {
            LatticePoint d = V.mu_inf() - V.mubar_inf();
            if (d.c0 == 0 && d.c1 >= 0) {  // diagonal along alpha_1
                Int s = d.c1;
                low.right = {P.right.bottom, {}, {}};
                low.left = {P.left.bottom, {}, map_with_first({}, s)};
                high.base = V.mubar_inf();
                high.right = {map_with_first({}, s), P.right.partition, P.right.top};
                high.left = {{}, P.left.partition, P.left.top};
            } else if (d.c1 == 0 && d.c0 < 0) {  // diagonal along -alpha_0
                Int s = -d.c0;
                low.right = {P.right.bottom, {}, map_with_first({}, s)};
                low.left = {P.left.bottom, {}, {}};
                high.base = V.mu_inf();
                high.right = {{}, P.right.partition, P.right.top};
                high.left = {map_with_first({}, s), P.left.partition, P.left.top};
            } else {
                throw DiagonalNotActive("bottom limit diagonal " + d.str() +
                                        " is not a root direction");
            }
        } else {
            Int eq0 = pair_omega0(chain_at(V.right_bottom, k) - chain_at(V.left_bottom, k - 1));
            Int eq1 = pair_omega1(chain_at(V.left_bottom, k) - chain_at(V.right_bottom, k - 1));
            if (eq0 == 0) {
                Int c = pair_omega1(chain_at(V.right_bottom, k) - chain_at(V.left_bottom, k - 1));
                low.right = {map_below(P.right.bottom, k), {}, {}};
                low.left = {map_below(P.left.bottom, k - 1), {}, map_with_first({}, c)};
                high.base = chain_at(V.left_bottom, k - 1);
                high.right = {map_with_first(map_from(P.right.bottom, k + 1), c),
                              P.right.partition, P.right.top};
                high.left = {map_from(P.left.bottom, k), P.left.partition, P.left.top};
            } else if (eq1 == 0) {
                Int c = pair_omega0(chain_at(V.left_bottom, k) - chain_at(V.right_bottom, k - 1));
                low.right = {map_below(P.right.bottom, k - 1), {}, map_with_first({}, c)};
                low.left = {map_below(P.left.bottom, k), {}, {}};
                high.base = chain_at(V.right_bottom, k - 1);
                high.right = {map_from(P.right.bottom, k), P.right.partition, P.right.top};
                high.left = {map_with_first(map_from(P.left.bottom, k + 1), c),
                             P.left.partition, P.left.top};
            } else {
                throw DiagonalNotActive("no bottom equality at k = " + std::to_string(k));
            }
        }
    } else {
        if (k == 0) {
            LatticePoint d = V.mu_top_inf() - V.mubar_top_inf();
            if (d.c0 == 0 && d.c1 >= 0) {
                Int c = d.c1;
                low.right = {P.right.bottom, P.right.partition, {}};
                low.left = {P.left.bottom, P.left.partition, map_with_first({}, c)};
                high.base = V.mubar_top_inf();
                high.right = {map_with_first({}, c), {}, P.right.top};
                high.left = {{}, {}, P.left.top};
            } else if (d.c1 == 0 && d.c0 < 0) {
                Int c = -d.c0;
                low.right = {P.right.bottom, P.right.partition, map_with_first({}, c)};
                low.left = {P.left.bottom, P.left.partition, {}};
                high.base = V.mu_top_inf();
                high.right = {{}, {}, P.right.top};
                high.left = {map_with_first({}, c), {}, P.left.top};
            } else {
                throw DiagonalNotActive("top limit diagonal " + d.str() +
                                        " is not a root direction");
            }
        } else {
            Int eq0 = pair_omega0(chain_at(V.left_top, k) - chain_at(V.right_top, k - 1));
            Int eq1 = pair_omega1(chain_at(V.right_top, k) - chain_at(V.left_top, k - 1));
            if (eq0 == 0) {
                Int c = pair_omega1(chain_at(V.right_top, k - 1) - chain_at(V.left_top, k));
                high.base = chain_at(V.left_top, k);
                high.right = {map_with_first({}, c), {}, map_below(P.right.top, k - 1)};
                high.left = {{}, {}, map_below(P.left.top, k)};
                low.right = {P.right.bottom, P.right.partition, map_from(P.right.top, k)};
                low.left = {P.left.bottom, P.left.partition,
                            map_with_first(map_from(P.left.top, k + 1), c)};
            } else if (eq1 == 0) {
                Int c = pair_omega0(chain_at(V.left_top, k - 1) - chain_at(V.right_top, k));
                high.base = chain_at(V.right_top, k);
                high.right = {{}, {}, map_below(P.right.top, k)};
                high.left = {map_with_first({}, c), {}, map_below(P.left.top, k - 1)};
                low.right = {P.right.bottom, P.right.partition,
                             map_with_first(map_from(P.right.top, k + 1), c)};
                low.left = {P.left.bottom, P.left.partition, map_from(P.left.top, k)};
            } else {
                throw DiagonalNotActive("no top equality at k = " + std::to_string(k));
            }
        }
    }

    assert(validate(low).ok());
    assert(validate(high).ok());
    return {low, high};
}

namespace {

// All maps with sum of m_k * edge(k) componentwise at most cap, indices <= kmax.
std::vector<std::pair<SupportMap, LatticePoint>> ladder_maps(const LatticePoint& cap,
                                                             int kmax,
                                                             bool alpha1_family) {
    std::vector<std::pair<SupportMap, LatticePoint>> out;
    SupportMap acc;
    std::function<void(int, LatticePoint)> rec = [&](int k, LatticePoint rem) {
        if (k == 0) {
            out.emplace_back(acc, cap - rem);
            return;
        }
        LatticePoint e = alpha1_family ? alpha1_ladder(k) : alpha0_ladder(k);
        Int top = -1;
        if (e.c0 > 0) top = rem.c0 / e.c0;
        if (e.c1 > 0) {
            Int b = rem.c1 / e.c1;
            top = top < 0 ? b : std::min(top, b);
        }
        for (Int m = 0; m <= top; ++m) {
            if (m > 0) map_set(acc, k, m);
            rec(k - 1, rem - m * e);
            map_set(acc, k, 0);
        }
    };
    rec(kmax, cap);
    return out;
}

std::vector<Partition> partitions_of(const Int& d) {
    std::vector<Partition> out;
    std::vector<Int> acc;
    std::function<void(Int, Int)> rec = [&](Int rem, Int maxpart) {
        if (rem == 0) {
            out.push_back(Partition{acc});
            return;
        }
        for (Int p = std::min(rem, maxpart); p >= 1; --p) {
            acc.push_back(p);
            rec(rem - p, p);
            acc.pop_back();
        }
    };
    rec(d, d);
    return out;
}

// Every datum of the given side whose content equals w, indices <= kmax.
std::vector<LusztigDatum> side_data(const LatticePoint& w, int kmax, int side) {
    std::vector<LusztigDatum> out;
    if (w.c0 < 0 || w.c1 < 0) return out;
    auto bottoms = ladder_maps(w, kmax, side == 1);
    auto tops = ladder_maps(w, kmax, side != 1);
    std::map<LatticePoint, std::vector<const SupportMap*>> tops_by_content;
    for (const auto& [m, c] : tops) tops_by_content[c].push_back(&m);
    std::map<Int, std::vector<Partition>> parts_cache;
    for (const auto& [b, cb] : bottoms) {
        LatticePoint rem = w - cb;
        Int dmax = std::min(rem.c0, rem.c1);
        for (Int d = 0; d <= dmax; ++d) {
            auto it = tops_by_content.find(rem - d * LatticePoint{1, 1});
            if (it == tops_by_content.end()) continue;
            auto pit = parts_cache.find(d);
            if (pit == parts_cache.end()) pit = parts_cache.emplace(d, partitions_of(d)).first;
            for (const SupportMap* t : it->second)
                for (const Partition& lam : pit->second) out.push_back({b, lam, *t});
        }
    }
    return out;
}

int default_support_bound(const LatticePoint& w) {
    Int h = ht(w);
    Int k = (h + 1) / 2;
    return k < 1 ? 1 : int(k);
}

std::vector<MVPolytope> enumerate_at(const LatticePoint& w, int kmax) {
    std::vector<MVPolytope> out;
    auto rights = side_data(w, kmax, 1);
    auto lefts = side_data(w, kmax, 0);
    for (const auto& r : rights)
        for (const auto& l : lefts) {
            MVPolytope P{l, r, {}};
            if (validate(P).ok()) out.push_back(P);
        }
    return out;
}

}  // namespace

std::vector<MVPolytope> enumerate_mv(const LatticePoint& wt, int support_bound) {
    if (wt.c0 < 0 || wt.c1 < 0) return {};
    int kmax = support_bound > 0 ? support_bound : default_support_bound(wt);
    std::vector<MVPolytope> res = enumerate_at(wt, kmax);
    std::vector<MVPolytope> wide = enumerate_at(wt, kmax + 1);
    if (res.size() != wide.size())
        throw BoundTooSmall("support bound " + std::to_string(kmax) + " missed " +
                            std::to_string(wide.size() - res.size()) + " polytopes at weight " +
                            wt.str());
    std::set<std::pair<SupportMap, std::pair<std::vector<Int>, SupportMap>>> seen_r, seen_l;
    for (const MVPolytope& P : res) {
        bool fresh_r =
            seen_r.insert({P.right.bottom, {P.right.partition.parts, P.right.top}}).second;
        bool fresh_l =
            seen_l.insert({P.left.bottom, {P.left.partition.parts, P.left.top}}).second;
        assert(fresh_r && fresh_l);
        (void)fresh_r;
        (void)fresh_l;
    }
    return res;
}

MVPolytope crystal_f(const MVPolytope& P, int i) {
    assert(i == 0 || i == 1);
    MVPolytope Q = P;
    LusztigDatum& fixed = i == 1 ? Q.right : Q.left;
    map_set(fixed.bottom, 1, map_entry(fixed.bottom, 1) + 1);
    LatticePoint nw = weight(P) + (i == 1 ? LatticePoint{0, 1} : LatticePoint{1, 0});
    std::vector<MVPolytope> found;
    for (const LusztigDatum& cand : side_data(nw, default_support_bound(nw), 1 - i)) {
        MVPolytope C = Q;
        (i == 1 ? C.left : C.right) = cand;
        if (validate(C).ok()) found.push_back(C);
    }
    if (found.empty())
        throw CompletionNotFound("no valid completion after adding 1 to side " +
                                 std::to_string(i) + " at weight " + nw.str());
    if (found.size() > 1)
        throw CompletionNotUnique(std::to_string(found.size()) +
                                  " completions after adding 1 to side " + std::to_string(i) +
                                  " at weight " + nw.str());
    assert(epsilon(found.front(), i) == epsilon(P, i) + 1);
    return found.front();
}

const char* to_string(PolyClass c) {
    switch (c) {
        case PolyClass::Top: return "Top";
        case PolyClass::DeltaTop: return "DeltaTop";
        default: return "General";
    }
}

PolyClass classify(const MVPolytope& P) {
    // "except a_1 or abar_1" is read exclusively: a valid polytope cannot
    // carry both first entries (the k = 2 inequalities force one to vanish).
    bool first_only = max_index(P.right.bottom) <= 1 && max_index(P.left.bottom) <= 1 &&
                      (map_entry(P.right.bottom, 1) == 0 || map_entry(P.left.bottom, 1) == 0);
    if (!first_only) return PolyClass::General;
    if (P.right.partition.parts.empty() && P.left.partition.parts.empty())
        return PolyClass::Top;
    return PolyClass::DeltaTop;
}

LatticePoint lattice_of_defect(const RootDatum& rd, const Vec& defect) {
    assert(defect.dim() == rd.dimY);
    for (size_t j = rd.rank; j < rd.dimY; ++j) assert(defect[j] == 0);
    assert(is_integer(defect[0]) && is_integer(defect[1]));
    return {rat_num(defect[0]), rat_num(defect[1])};
}

namespace {

struct PathBottomData {
    SupportMap right, left;
};

SupportMap mult_map(const std::vector<Int>& mults) {
    SupportMap m;
    for (size_t j = 0; j < mults.size(); ++j) map_set(m, int(j) + 1, mults[j]);
    return m;
}

PathBottomData path_bottom(const RootDatum& rd, const Path& p) {
    constexpr int cap = 256;
    return {mult_map(bottom_vertices(rd, p, 1, cap).edge_multiplicities),
            mult_map(bottom_vertices(rd, p, 0, cap).edge_multiplicities)};
}

LatticePoint bottom_gap(const PathBottomData& B) {
    LatticePoint d;
    for (const auto& [k, v] : B.right) d = d + v * alpha1_ladder(k);
    for (const auto& [k, v] : B.left) d = d - v * alpha0_ladder(k);
    return d;
}

// Purity of the gap mu_inf - mubar_inf: (side, size) with size >= 0.
std::pair<int, Int> purity(const LatticePoint& d) {
    if (d.c0 == 0 && d.c1 >= 0) return {1, d.c1};
    if (d.c1 == 0 && d.c0 < 0) return {0, -d.c0};
    throw ReductionFailed("bottom gap " + d.str() + " is not a root direction");
}

bool is_single_first(const PathBottomData& B, int side, const Int& value) {
    const SupportMap& main = side == 1 ? B.right : B.left;
    const SupportMap& other = side == 1 ? B.left : B.right;
    return other.empty() && max_index(main) <= 1 && map_entry(main, 1) == value;
}

}  // namespace

GenpolReduction genpol_reduce(const RootDatum& rd, const Path& p) {
    assert(p.start.is_zero());
    GenpolReduction G;
    auto [i0, s] = purity(bottom_gap(path_bottom(rd, p)));
    G.i0 = i0;
    Path cur = p;
    bool candidate_tried = false;
    for (int iter = 0; iter < 1000; ++iter) {
        PathBottomData B = path_bottom(rd, cur);
        const Int t = map_entry(i0 == 1 ? B.right : B.left, 1);
        bool shaped = is_single_first(B, i0, t);
        if (shaped && !candidate_tried && t <= s) {
            candidate_tried = true;
            Int h = s - t;
            std::optional<Path> red = cur;
            if (h > 0) red = root_operator(rd, cur, i0, OpDir::Lower, op_power(int(h)));
            if (red && is_single_first(path_bottom(rd, *red), i0, s)) {
                G.h = h;
                G.reduced = *red;
                return G;
            }
        }
        Int e0 = epsilon(cur, simple_real_root(rd, 0));
        Int e1 = epsilon(cur, simple_real_root(rd, 1));
        if (e0 == 0 && e1 == 0)
            throw ReductionFailed("nothing left to raise at iteration " +
                                  std::to_string(iter));
        int j = e1 > 0 ? 1 : 0;
        G.e_word.emplace_back(j, j == 1 ? e1 : e0);
        cur = *root_operator(rd, cur, j, OpDir::Raise, op_max());
        candidate_tried = false;
    }
    throw ReductionFailed("raising word did not terminate");
}

MVPolytope reconstruct_from_path(const RootDatum& rd, const Path& p) {
    assert(p.start.is_zero());
    PathBottomData B = path_bottom(rd, p);
    auto [lbar, lam] = decorate(rd, p);
    LatticePoint nu = lattice_of_defect(rd, p.shape - p.end());
    int kmax = default_support_bound(nu);

    LusztigDatum right_known{B.right, lam, {}};
    LusztigDatum left_known{B.left, lbar, {}};
    LatticePoint rrest = nu - datum_content(right_known, 1);
    LatticePoint lrest = nu - datum_content(left_known, 0);
    std::vector<MVPolytope> found;
    if (rrest.c0 >= 0 && rrest.c1 >= 0 && lrest.c0 >= 0 && lrest.c1 >= 0) {
        for (const auto& [rt, rc] : ladder_maps(rrest, kmax, false)) {
            if (rc != rrest) continue;
            for (const auto& [lt, lc] : ladder_maps(lrest, kmax, true)) {
                if (lc != lrest) continue;
                MVPolytope P{{B.left, lbar, lt}, {B.right, lam, rt}, {}};
                if (validate(P).ok()) found.push_back(P);
            }
        }
    }
    if (found.empty())
        throw NoMatch("no valid polytope with the retracted bottom data and partitions (" +
                      lbar.exp_str() + ", " + lam.exp_str() + ") at weight " + nu.str());
    if (found.size() > 1)
        throw MultipleMatches(std::to_string(found.size()) + " polytopes at weight " +
                              nu.str());
    const MVPolytope& P = found.front();
    assert(weight(P) == nu);
    assert(epsilon(P, 1) == epsilon(p, simple_real_root(rd, 1)));
    assert(epsilon(P, 0) == epsilon(p, simple_real_root(rd, 0)));
    return P;
}

}  // namespace affmv
