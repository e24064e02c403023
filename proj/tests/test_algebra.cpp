#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dunkl/grid.hpp"
#include "dunkl/root_system.hpp"
#include "dunkl/special.hpp"

using namespace dunkl;

TEST_CASE("preset constants") {
    RootSystem r0 = rank1(0.0);
    CHECK(r0.group().size() == 2);
    CHECK(r0.gamma() == doctest::Approx(0.0));
    CHECK(r0.homogeneous_dim() == doctest::Approx(1.0));

    RootSystem r1 = rank1(1.0);
    CHECK(r1.gamma() == doctest::Approx(1.0));
    CHECK(r1.homogeneous_dim() == doctest::Approx(3.0));

    RootSystem p = product_z2({0.5, 0.5});
    CHECK(p.group().size() == 4);
    CHECK(p.gamma() == doctest::Approx(1.0));
    CHECK(p.homogeneous_dim() == doctest::Approx(4.0));
    CHECK(p.is_product());

    RootSystem d3 = dihedral(3, 1.0);
    CHECK(d3.group().size() == 6);
    CHECK(d3.positive_roots().size() == 3);
    CHECK_FALSE(d3.is_product());

    RootSystem bb = b2(0.5, 1.0);
    CHECK(bb.group().size() == 8);
    CHECK(bb.gamma() == doctest::Approx(2.0 * 0.5 + 2.0 * 1.0));
}

TEST_CASE("root normalization and rescaling of custom input") {
    // user supplies unnormalized roots; they are rescaled to |alpha|^2 = 2
    RootSystem cs = custom_system(1, {{3.0}}, {0.7});
    CHECK(norm2sq(cs.roots()[0]) == doctest::Approx(2.0));
    CHECK(cs.input_scales()[0] == doctest::Approx(std::sqrt(2.0) / 3.0));
    CHECK(cs.gamma() == doctest::Approx(0.7));
}

TEST_CASE("invalid input is rejected") {
    CHECK_THROWS_AS(custom_system(2, {{1.0, 0.0}, {0.9238795, 0.3826834}}, {1.0, 1.0}),
                    Error);  // 22.5-degree pair: closure generates a large set
    CHECK_THROWS_AS(custom_system(1, {{1.0}}, {-0.5}), Error);
    CHECK_THROWS_AS(custom_system(1, {{0.0}}, {0.5}), Error);
}

TEST_CASE("group explosion cap") {
    bool threw = false;
    try {
        dihedral(2048, 0.5);
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == "GroupExplosion");
    }
    CHECK(threw);
}

TEST_CASE("weight examples") {
    RootSystem r1 = rank1(1.0);
    CHECK(r1.weight({1.0}) == doctest::Approx(2.0));  // |sqrt2|*|−sqrt2|
    RootSystem r0 = rank1(0.0);
    CHECK(r0.weight({3.7}) == doctest::Approx(1.0));
    RootSystem rh = rank1(0.5);
    CHECK(rh.weight({2.0}) == doctest::Approx(std::sqrt(8.0)));
    CHECK(rh.weight({0.0}) == doctest::Approx(0.0));
}

TEST_CASE("weight is exactly G-invariant") {
    RootSystem bb = b2(0.5, 1.25);
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        Vec x = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
        double w = bb.weight(x);
        for (const Mat& g : bb.group())
            CHECK(bb.weight(g.apply(x)) == doctest::Approx(w).epsilon(1e-12));
    }
}

TEST_CASE("orbit distance") {
    RootSystem r1 = rank1(1.0);
    CHECK(r1.orbit_distance({1.0}, {-1.0}) == doctest::Approx(0.0));
    CHECK(r1.orbit_distance({1.0}, {3.0}) == doctest::Approx(2.0));
    RootSystem r0 = custom_system(1, {{1.0}}, {0.0});
    // k = 0 still reflects; plain Euclidean needs the trivial group, checked
    // via a 2-D system with a single root pair
    RootSystem one = custom_system(2, {{1.0, 0.0}}, {0.5});
    Vec x = {0.3, 0.9}, y = {0.1, -0.4};
    double direct = norm2(sub(x, y));
    Vec yr = {-0.1, -0.4};
    double refl = norm2(sub(x, yr));
    CHECK(one.orbit_distance(x, y) == doctest::Approx(std::min(direct, refl)));
    (void)r0;
}

TEST_CASE("orbit distance is symmetric, G-bi-invariant, triangle on orbits") {
    RootSystem bb = b2(0.6, 0.9);
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        Vec x = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
        Vec y = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
        Vec z = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
        double dxy = bb.orbit_distance(x, y);
        CHECK(bb.orbit_distance(y, x) == doctest::Approx(dxy).epsilon(1e-12));
        for (const Mat& g : bb.group())
            CHECK(bb.orbit_distance(g.apply(x), y) == doctest::Approx(dxy).epsilon(1e-10));
        CHECK(dxy <= bb.orbit_distance(x, z) + bb.orbit_distance(z, y) + 1e-12);
    }
}

TEST_CASE("ball volume closed forms") {
    RootSystem r0 = rank1(0.0);
    CHECK(r0.ball_volume({0.7}, 1.0) == doctest::Approx(2.0).epsilon(1e-8));
    RootSystem r1 = rank1(1.0);
    CHECK(r1.ball_volume({0.0}, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-8));
    // scaling law vol(t x, t r) = t^N vol(x, r) with N = 3
    CHECK(r1.ball_volume({0.0}, 2.0) == doctest::Approx(32.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("volume scaling and doubling sweeps") {
    for (auto rs_case : {0, 1, 2}) {
        std::shared_ptr<RootSystem> rs;
        if (rs_case == 0) rs = std::make_shared<RootSystem>(rank1(0.8));
        if (rs_case == 1) rs = std::make_shared<RootSystem>(product_z2({0.5, 1.0}));
        if (rs_case == 2) rs = std::make_shared<RootSystem>(dihedral(3, 0.4));
        double Nh = rs->homogeneous_dim();
        Rng rng(17 + rs_case);
        for (int t = 0; t < 4; ++t) {
            Vec x(rs->dim());
            for (auto& c : x) c = rng.uniform(-1.5, 1.5);
            double r = rng.uniform(0.3, 1.0);
            double lam = rng.uniform(1.2, 2.5);
            double v1 = rs->ball_volume(x, r);
            double v2 = rs->ball_volume(scaled(x, lam), lam * r);
            CHECK(v2 / v1 == doctest::Approx(std::pow(lam, Nh)).epsilon(1e-5));
            // doubling with C = 2^N (1 + 5%)
            double vd = rs->ball_volume(x, 2.0 * r);
            CHECK(vd <= std::pow(2.0, Nh) * 1.05 * v1);
            // orbit count sandwich w(B) <= w(O(B)) <= |G| w(B) via estimate
            double est = rs->ball_volume_estimate(x, r);
            CHECK(est > 0.0);
            CHECK(v1 > 0.0);
        }
    }
}

TEST_CASE("growth sandwich with one fitted constant") {
    RootSystem rs = rank1(1.0);
    double N = 1.0, Nh = rs.homogeneous_dim();
    Rng rng(23);
    double C = 0.0;
    for (int t = 0; t < 16; ++t) {
        Vec x = {rng.uniform(-2, 2)};
        double r = rng.uniform(0.05, 0.5);
        double R = r * rng.uniform(1.0, 20.0);
        double ratio = rs.ball_volume(x, R) / rs.ball_volume(x, r);
        double lo = std::pow(R / r, N), hi = std::pow(R / r, Nh);
        C = std::max({C, lo / ratio, ratio / hi});
    }
    C = std::max(C, 1.0);
    CHECK(C < 50.0);  // a single finite constant covers the sweep
}

TEST_CASE("grid closure and reflection indexability") {
    auto rs = std::make_shared<RootSystem>(product_z2({0.5, 1.0}));
    GridPtr g = make_grid(rs, 16, 2.0);
    CHECK(g->size() == 256);
    for (size_t gi = 0; gi < rs->group().size(); ++gi) {
        for (size_t f = 0; f < g->size(); ++f) {
            Vec img = rs->group()[gi].apply(g->point(f));
            Vec back = g->point(g->reflect_index(f, gi));
            for (int a = 0; a < 2; ++a) CHECK(img[a] == doctest::Approx(back[a]));
        }
    }
}

TEST_CASE("grid quadrature matches semi-infinite oracle for k=0.5") {
    // int e^{-x^2/2} 2^{1/2}|x| dx = c_k for rank1(k=1/2): 2^{1.5} Gamma(1)
    auto rs = std::make_shared<RootSystem>(rank1(0.5));
    double ck = std::pow(2.0, 1.5) * gamma_fn(1.0);
    for (int n : {256, 512}) {
        GridPtr g = make_grid(rs, n, 10.0);
        GridFunction f = sample(g, [](const Vec& x) { return std::exp(-0.5 * x[0] * x[0]); });
        CHECK(f.integral() == doctest::Approx(ck).epsilon(2e-9));
    }
    // odd point count (node on the hyperplane): weight there must vanish
    GridPtr go = make_grid(rs, 257, 10.0);
    size_t center = 128;
    CHECK(go->point(center)[0] == doctest::Approx(0.0));
    CHECK(go->quad_weight(center) == doctest::Approx(0.0));
    GridFunction fo = sample(go, [](const Vec& x) { return std::exp(-0.5 * x[0] * x[0]); });
    CHECK(fo.integral() == doctest::Approx(ck).epsilon(1e-7));
}

TEST_CASE("quad weights are nonnegative and integrate gaussians to ball volumes") {
    auto rs = std::make_shared<RootSystem>(product_z2({0.5, 0.75}));
    GridPtr g = make_grid(rs, 256, 9.0);
    for (size_t f = 0; f < g->size(); ++f) CHECK(g->quad_weight(f) >= 0.0);
    // grid integral of exp(-|x|^2/2) against dw vs product of 1-D oracles
    GridFunction f = sample(g, [](const Vec& x) {
        return std::exp(-0.5 * (x[0] * x[0] + x[1] * x[1]));
    });
    double o1 = 2.0 * semi_infinite_quad(
                          [](double x) {
                              return std::exp(-0.5 * x * x) * std::pow(2.0, 0.5) * std::abs(x);
                          },
                          Decay::Gaussian, 1e-12);
    double o2 = 2.0 * semi_infinite_quad(
                          [](double x) {
                              return std::exp(-0.5 * x * x) *
                                     std::pow(2.0, 0.75) * std::pow(std::abs(x), 1.5);
                          },
                          Decay::Gaussian, 1e-12);
    CHECK(f.integral() == doctest::Approx(o1 * o2).epsilon(1e-6));
}
