#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affmv/errors.hpp"
#include "affmv/treefold.hpp"

#include <random>
#include <string>

using namespace affmv;

namespace {

Vec v3(const Rat& a, const Rat& b, const Rat& c) { return Vec{a, b, c}; }

Path lower(const RootDatum& rd, const Path& p, std::vector<std::pair<int, int>> factors) {
    auto q = apply_lowering_word(rd, p, factors);
    REQUIRE(q.has_value());
    return *q;
}

std::vector<Rat> rats(std::vector<int> xs) {
    std::vector<Rat> out;
    for (int x : xs) out.push_back(Rat(x));
    return out;
}

Rat height_to(const Vec& lambda, const Vec& mu) {
    Vec diff = lambda - mu;
    return diff[0] + diff[1];
}

std::string kind_string(const ParameterSpace& ps) {
    std::string s;
    for (LineKind k : ps.kinds) s += (k == LineKind::FreeLine) ? 'F' : 'P';
    return s;
}

}  // namespace

TEST_CASE("pushed roots follow the alternating ladders") {
    RootDatum rd = build_affine_sl2();
    CHECK(pushed_root(rd, {}, 0).alpha == rd.simple_roots[0]);
    CHECK(pushed_root(rd, {}, 1).alpha == rd.simple_roots[1]);
    CHECK(pushed_root(rd, {0}, 1).alpha == rd.simple_roots[1] + Rat(2) * rd.simple_roots[0]);
    CHECK(pushed_root(rd, {1}, 0).alpha == rd.simple_roots[0] + Rat(2) * rd.simple_roots[1]);
    CHECK(pushed_root(rd, {0, 1}, 0).positive());
    CHECK(pushed_root(rd, {1, 0, 1}, 0).positive());
    CHECK(pushed_root(rd, {0, 1, 0}, 1).k == 4);
    CHECK(pushed_root(rd, {1, 0, 1}, 0).k == 3);
}

TEST_CASE("build_folded validates words and coefficient counts") {
    RootDatum rd = build_affine_sl2();
    Path st = straight_path(rd, v3(0, 0, 3));

    // A straight dominant path has no stable sections on either side.
    FoldedPath e0 = build_folded(rd, st, {}, 0, {});
    CHECK(e0.markers.empty());
    CHECK(e0.base == st);
    CHECK(!e0.root.positive());
    CHECK(e0.root.alpha == -rd.simple_roots[0]);
    CHECK(genericity(e0));

    CHECK_THROWS_AS(build_folded(rd, st, {0}, 0, {}), NonReducedWord);
    Path p1 = lower(rd, st, {{1, 3}, {0, 3}, {1, 2}, {0, 2}, {1, 1}, {0, 1}});
    CHECK_THROWS_AS(build_folded(rd, p1, {}, 0, rats({1})), CoefficientMismatch);
}

TEST_CASE("worked example markers on both sides") {
    RootDatum rd = build_affine_sl2();
    Path st = straight_path(rd, v3(0, 0, 3));
    Path p1 = lower(rd, st, {{1, 3}, {0, 3}, {1, 2}, {0, 2}, {1, 1}, {0, 1}});

    FoldedPath e0 = build_folded(rd, p1, {}, 0, rats({1, 1, 1}));
    REQUIRE(e0.markers.size() == 3);
    CHECK(e0.markers[0].t0 == Rat(1, 21));
    CHECK(e0.markers[0].t1 == Rat(1, 15));
    CHECK(e0.markers[0].level == 1);
    CHECK(e0.markers[1].t0 == Rat(2, 15));
    CHECK(e0.markers[1].t1 == Rat(2, 9));
    CHECK(e0.markers[1].level == 2);
    CHECK(e0.markers[2].t0 == Rat(1, 3));
    CHECK(e0.markers[2].t1 == Rat(1));
    CHECK(e0.markers[2].level == 3);
    LevelMin lm0 = min_level(p1, -e0.root.alpha);
    CHECK(lm0.value == 0);
    CHECK(lm0.first_time == 0);

    FoldedPath e1 = build_folded(rd, p1, {}, 1, rats({1, 1}));
    REQUIRE(e1.markers.size() == 2);
    CHECK(e1.markers[0].t0 == Rat(1, 18));
    CHECK(e1.markers[0].t1 == Rat(1, 12));
    CHECK(e1.markers[0].level == -1);
    CHECK(e1.markers[1].t0 == Rat(1, 6));
    CHECK(e1.markers[1].t1 == Rat(1, 3));
    CHECK(e1.markers[1].level == -2);
    LevelMin lm1 = min_level(p1, -e1.root.alpha);
    CHECK(lm1.value == -3);
    CHECK(lm1.first_time == Rat(1, 2));
}

TEST_CASE("all-zero coefficients keep the base path") {
    RootDatum rd = build_affine_sl2();
    Path st = straight_path(rd, v3(0, 0, 3));
    Path p1 = lower(rd, st, {{1, 3}, {0, 3}, {1, 2}, {0, 2}, {1, 1}, {0, 1}});

    auto [res, gen] = retract_step(rd, p1, {}, 0, rats({0, 0, 0}));
    CHECK(!gen);
    CHECK(res == p1);
}

TEST_CASE("prefix-only folds match the one-step straightening") {
    RootDatum rd = build_affine_sl2();
    Path st = straight_path(rd, v3(0, 0, 3));
    Path p1 = lower(rd, st, {{1, 3}, {0, 3}, {1, 2}, {0, 2}, {1, 1}, {0, 1}});

    // Both markers sit before the first minimum, so only the prefix moves.
    auto [res, gen] = retract_step(rd, p1, {}, 1, rats({1, 1}));
    CHECK(gen);
    CHECK(res == upsilon_prime(rd, p1, {1}));

    // Straight dominant input: nothing to fold at all.
    auto [rs, gs] = retract_step(rd, st, {}, 0, {});
    CHECK(gs);
    CHECK(rs == upsilon_prime(rd, st, {0}));
    CHECK(rs == st);
}

TEST_CASE("one stable section flips and the prefix reflects") {
    RootDatum rd = build_affine_sl2();
    Path st = straight_path(rd, deep_dominant(rd, 6));
    Path p = lower(rd, st, {{0, 1}, {1, 1}, {0, 1}});

    FoldedPath e = build_folded(rd, p, {}, 0, rats({1}));
    REQUIRE(e.markers.size() == 1);
    CHECK(e.markers[0].t0 == Rat(1, 80));
    CHECK(e.markers[0].t1 == Rat(1, 16));
    CHECK(e.markers[0].level == -1);
    LevelMin lm = min_level(p, -e.root.alpha);
    CHECK(lm.value == -1);
    CHECK(lm.first_time == Rat(1, 80));

    Path res = fold_plus(e);
    CHECK(res == upsilon_prime(rd, p, {0}));
    Knots kn = knots_of(res);
    REQUIRE(kn.t.size() == 4);
    CHECK(kn.x[0] == v3(-1, 0, 0));
    CHECK(kn.t[1] == Rat(1, 80));
    CHECK(kn.x[1] == v3(Rat(-6, 5), Rat(-1, 2), Rat(2, 5)));
    CHECK(kn.t[2] == Rat(1, 48));
    CHECK(kn.x[2] == v3(-2, Rat(-5, 6), Rat(2, 3)));
    CHECK(kn.x[3] == v3(-2, 7, 32));
}

TEST_CASE("non-generic coefficients fold differently but stay admissible") {
    RootDatum rd = build_affine_sl2();
    Vec lam = deep_dominant(rd, 6);
    Path st = straight_path(rd, lam);
    Path p = lower(rd, st, {{1, 1}, {0, 1}, {1, 1}, {0, 1}});

    FoldedPath e = build_folded(rd, p, {}, 0, {Rat(1), Rat(-1)});
    REQUIRE(e.markers.size() == 2);
    CHECK(e.markers[0].t0 == Rat(1, 144));
    CHECK(e.markers[0].t1 == Rat(1, 80));
    CHECK(e.markers[0].level == 1);
    CHECK(e.markers[1].t0 == Rat(1, 80));
    CHECK(e.markers[1].t1 == Rat(1, 16));
    CHECK(e.markers[1].level == 1);
    CHECK(!genericity(e));

    auto [res, gen] = retract_step(rd, p, {}, 0, {Rat(1), Rat(-1)});
    CHECK(!gen);
    CHECK(res != upsilon_prime(rd, p, {0}));
    CHECK(is_lambda_path(rd, res));
    CHECK(res.end() == p.end());

    Knots kn = knots_of(res);
    REQUIRE(kn.t.size() == 4);
    CHECK(kn.x[0] == v3(0, 0, 0));
    CHECK(kn.t[1] == Rat(1, 112));
    CHECK(kn.x[1] == v3(Rat(-6, 7), Rat(-19, 14), Rat(2, 7)));
    CHECK(kn.t[2] == Rat(1, 48));
    CHECK(kn.x[2] == v3(-2, Rat(-11, 6), Rat(2, 3)));
    CHECK(kn.x[3] == v3(-2, 6, 32));

    // The degenerate image stays within the Hecke budget at the identity
    // germ, strictly below it here.
    CHECK(height_to(lam, p.end()) == 4);
    CHECK(ddim(rd, res, {}, 12) == 3);
}

TEST_CASE("genericity is the backwards prefix-sum condition per wall") {
    RootDatum rd = build_affine_sl2();
    Path st = straight_path(rd, v3(0, 0, 3));
    Path p1 = lower(rd, st, {{1, 3}, {0, 3}, {1, 2}, {0, 2}, {1, 1}, {0, 1}});

    // Levels 1, 2, 3 are distinct walls, so signs may mix freely.
    CHECK(genericity(build_folded(rd, p1, {}, 0, rats({1, -1, 1}))));
    CHECK(genericity(build_folded(rd, p1, {}, 0, {Rat(1, 2), Rat(3), Rat(7, 4)})));
    CHECK(!genericity(build_folded(rd, p1, {}, 0, rats({1, 0, 1}))));

    Path q = lower(rd, straight_path(rd, deep_dominant(rd, 6)),
                   {{1, 1}, {0, 1}, {1, 1}, {0, 1}});
    // Two markers on the same wall cancel in either order.
    CHECK(!genericity(build_folded(rd, q, {}, 0, rats({1, -1}))));
    CHECK(!genericity(build_folded(rd, q, {}, 0, rats({-1, 1}))));
    CHECK(genericity(build_folded(rd, q, {}, 0, rats({1, 1}))));

    // A single nonzero coefficient is generic.
    Path one = lower(rd, straight_path(rd, deep_dominant(rd, 6)), {{0, 1}, {1, 1}, {0, 1}});
    CHECK(genericity(build_folded(rd, one, {}, 0, rats({5}))));
}

TEST_CASE("generic draws reproduce the straightening at every step") {
    RootDatum rd = build_affine_sl2();
    Vec lam = deep_dominant(rd, 4);
    std::mt19937_64 rng(2026);
    std::vector<std::vector<int>> words = {{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}, {1, 0, 1}};

    for (const Path& p : crystal_generate(rd, lam, 3)) {
        for (const auto& w : words) {
            for (int i = 0; i < 2; ++i) {
                if (!w.empty() && w.back() == i) continue;
                FoldedPath shape = build_folded(rd, p, w, i);
                std::vector<int> wi = w;
                wi.push_back(i);
                Path want = upsilon_prime(rd, p, wi);
                for (int trial = 0; trial < 3; ++trial) {
                    std::vector<Rat> cs = sample_generic_coeffs(shape, rng);
                    auto [res, gen] = retract_step(rd, p, w, i, cs);
                    CHECK(gen);
                    CHECK(res == want);
                    CHECK(res.end() == p.end());
                    CHECK(is_lambda_path(rd, res));
                }
            }
        }
    }
}

TEST_CASE("parameters of one step never leak into the next") {
    RootDatum rd = build_affine_sl2();
    Path st = straight_path(rd, v3(0, 0, 3));
    Path p1 = lower(rd, st, {{1, 3}, {0, 3}, {1, 2}, {0, 2}, {1, 1}, {0, 1}});

    auto a = retract_step(rd, p1, {}, 0, rats({1, 1, 1}));
    auto b = retract_step(rd, p1, {}, 0, {Rat(2), Rat(-1, 3), Rat(5)});
    CHECK(a.second);
    CHECK(b.second);
    CHECK(a.first == b.first);

    // The next step's base is the shared straightening, independent of
    // which generic coefficients produced it.
    FoldedPath e2 = build_folded(rd, p1, {0}, 1);
    CHECK(e2.base == a.first);
}

TEST_CASE("degenerate folds respect the Hecke budget at the identity germ") {
    RootDatum rd = build_affine_sl2();
    Vec lam = deep_dominant(rd, 4);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> cdist(-2, 2);
    std::vector<std::vector<int>> words = {{}, {0}, {1}, {0, 1}, {1, 0}};

    long checked = 0;
    for (const Path& p : crystal_generate(rd, lam, 3)) {
        Rat budget = height_to(lam, p.end());
        for (const auto& w : words) {
            for (int i = 0; i < 2; ++i) {
                if (!w.empty() && w.back() == i) continue;
                FoldedPath shape = build_folded(rd, p, w, i);
                std::vector<Rat> cs(shape.markers.size());
                for (int trial = 0; trial < 2; ++trial) {
                    for (auto& c : cs) c = Rat(cdist(rng));
                    auto [res, gen] = retract_step(rd, p, w, i, cs);
                    (void)gen;
                    CHECK(is_lambda_path(rd, res));
                    CHECK(Rat(ddim(rd, res, {}, 12)) <= budget);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("parameter spaces count the identity-germ wall departures") {
    RootDatum rd = build_affine_sl2();
    Path st = straight_path(rd, v3(0, 0, 3));
    CHECK(parameter_space(rd, st, 8).count == 0);

    Path f0 = lower(rd, st, {{0, 1}});
    ParameterSpace ps = parameter_space(rd, f0, 8);
    CHECK(ps.count == 1);
    CHECK(kind_string(ps) == "P");

    Path p1 = lower(rd, st, {{1, 3}, {0, 3}, {1, 2}, {0, 2}, {1, 1}, {0, 1}});
    ParameterSpace ps1 = parameter_space(rd, p1, 12);
    CHECK(ps1.count == 12);
    CHECK(kind_string(ps1) == "PPFFPPPFFPFP");
    // p1 is a crystal member, so the count saturates the height budget.
    CHECK(Rat(12) == height_to(st.shape, p1.end()));

    Path p2 = lower(rd, st, {{1, 3}, {0, 3}, {1, 2}, {0, 2}, {1, 2}, {0, 2}});
    ParameterSpace ps2 = parameter_space(rd, p2, 12);
    CHECK(ps2.count == 14);
    CHECK(kind_string(ps2) == "FFFPPPPPPFFPFP");

    Vec lam = deep_dominant(rd, 4);
    for (const Path& p : crystal_generate(rd, lam, 3)) {
        ParameterSpace q = parameter_space(rd, p, 10);
        CHECK(Int(static_cast<long>(q.count)) == ddim(rd, p, {}, 10));
        CHECK(q.kinds.size() == q.count);
    }
}
