#include <gtest/gtest.h>

#include <cmath>
#include <utility>
#include <random>

#include "fejer/means.hpp"

using namespace fejer;

namespace {

const double e = std::exp(1.0);

double m(MeanKind k, double a, double b, double p = 0.0) { return mean(k, a, b, p).value; }

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& err) {
        return err.code();
    }
    ADD_FAILURE() << "no fejer::Error thrown";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Means, ClosedForms) {
    EXPECT_EQ(m(MeanKind::Power, 1, 7, 2), 5.0);
    EXPECT_NEAR(m(MeanKind::Logarithmic, 1, e), e - 1, 1e-12);
    EXPECT_NEAR(m(MeanKind::Identric, 1, e), std::exp(1 / (e - 1)), 1e-12);
    EXPECT_NEAR(m(MeanKind::Identric, 1, e), 1.789572, 1e-6);
    EXPECT_EQ(m(MeanKind::Arithmetic, 2, 8), 5.0);
    EXPECT_DOUBLE_EQ(m(MeanKind::Geometric, 2, 8), 4.0);
    EXPECT_EQ(m(MeanKind::Harmonic, 2, 8), 3.2);
    for (double a : {0.3, 1.0, 5.0})
        for (double b : {0.7, 2.0, 9.0}) EXPECT_NEAR(m(MeanKind::PLog, a, b, 1), (a + b) / 2, 1e-12 * b);
}

TEST(Means, EqualArguments) {
    for (MeanKind k : {MeanKind::Arithmetic, MeanKind::Geometric, MeanKind::Harmonic, MeanKind::Logarithmic,
                       MeanKind::Identric, MeanKind::Power, MeanKind::PLog})
        EXPECT_EQ(m(k, 3, 3, 2), 3.0) << describe(k, 2);
}

TEST(Means, Limits) {
    const double a = 1.5, b = 4.0;
    for (double p : {1e-6, -1e-6}) {
        const double g = m(MeanKind::Geometric, a, b);
        const double i = m(MeanKind::Identric, a, b);
        EXPECT_NEAR(m(MeanKind::Power, a, b, p), g, 1e-5 * g);
        EXPECT_NEAR(m(MeanKind::PLog, a, b, p), i, 1e-5 * i);
        const double l = m(MeanKind::Logarithmic, a, b);
        EXPECT_NEAR(m(MeanKind::PLog, a, b, -1 + p), l, 1e-5 * l);
    }
    EXPECT_EQ(m(MeanKind::Power, a, b, 0), m(MeanKind::Geometric, a, b));
    EXPECT_EQ(m(MeanKind::PLog, a, b, 0), m(MeanKind::Identric, a, b));
    EXPECT_EQ(m(MeanKind::PLog, a, b, -1), m(MeanKind::Logarithmic, a, b));
}

TEST(Means, OrderingOnRandomPairs) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.01, 100.0);
    for (int i = 0; i < 10000; ++i) {
        const double a = u(rng), b = u(rng);
        const double h = m(MeanKind::Harmonic, a, b), g = m(MeanKind::Geometric, a, b);
        const double l = m(MeanKind::Logarithmic, a, b), id = m(MeanKind::Identric, a, b);
        const double ar = m(MeanKind::Arithmetic, a, b);
        const double s = 1e-12 * ar;
        EXPECT_LE(h, g + s);
        EXPECT_LE(g, l + s);
        EXPECT_LE(l, id + s);
        EXPECT_LE(id, ar + s);
    }
}

TEST(Means, PowerMonotoneInP) {
    for (double b : {1.1, 2.0, 10.0}) {
        double prev = 0.0;
        for (double p : {-2.0, -1.0, 0.0, 1.0, 2.0, 3.0}) {
            const double v = m(MeanKind::Power, 1.0, b, p);
            EXPECT_GE(v, prev);
            prev = v;
        }
    }
}

TEST(Means, NearlyEqualArgumentsStayAccurate) {
    const double a = 1.0, b = 1.0 + 1e-9;
    EXPECT_NEAR(m(MeanKind::Logarithmic, a, b), 1.0 + 5e-10, 1e-15);
    EXPECT_NEAR(m(MeanKind::Identric, a, b), 1.0 + 5e-10, 1e-15);
}

TEST(Means, Errors) {
    EXPECT_EQ(code_of([] { mean(MeanKind::Arithmetic, 0.0, 1.0); }), ErrorCode::NonpositiveInput);
    EXPECT_EQ(code_of([] { mean(MeanKind::Logarithmic, 1.0, -2.0); }), ErrorCode::NonpositiveInput);
    EXPECT_EQ(code_of([] { al_gap_check(0.5, 1, 2, 1.5); }), ErrorCode::ParameterOutOfRange);
    EXPECT_EQ(code_of([] { al_gap_check(-1.0, 1, 2, 1.5); }), ErrorCode::ParameterOutOfRange);
    EXPECT_EQ(code_of([] { harmonic_log_gap_check(-1, 2, 1); }), ErrorCode::NonpositiveInput);
    EXPECT_EQ(code_of([] { young_ratio_bounds(0.0, 2.0, Lambda(0.5)); }), ErrorCode::NonpositiveInput);
}

TEST(GapChecks, PowerLogarithmic) {
    const OrderedPair g = al_gap_check(2, 1, 2, 1.5);
    // A_2^2 = 2.5, L_2^2 = 7/3; on [1, 1.5]: 1.625 and 2.375/1.5.
    EXPECT_NEAR(g.first, 2.5 - 7.0 / 3.0, 1e-9);
    EXPECT_NEAR(g.second, 0.5 * (1.625 - 2.375 / 1.5), 1e-9);
    EXPECT_NEAR(g.second, 0.0208333, 1e-7);
    const OrderedPair lo = al_gap_check(2, 1, 2, 1);
    EXPECT_NEAR(lo.first, 1.0 / 6.0, 1e-12);
    EXPECT_EQ(lo.second, 0.0);
    const OrderedPair hi = al_gap_check(2, 1, 2, 2);
    EXPECT_NEAR(hi.first, 1.0 / 6.0, 1e-12);
    EXPECT_EQ(hi.first, hi.second);
    for (double p : {-3.0, -0.5, 1.0, 1.5, 4.0}) {
        const OrderedPair q = al_gap_check(p, 0.5, 3, 1.7);
        EXPECT_GE(q.first, q.second - 1e-12);
        EXPECT_GE(q.second, -1e-12);
    }
}

TEST(GapChecks, HarmonicLogarithmic) {
    const OrderedPair end = harmonic_log_gap_check(1, 2, 2);
    EXPECT_EQ(end.first, end.second);
    const double x = (1 + e) / 2;
    const OrderedPair g = harmonic_log_gap_check(1, e, x);
    EXPECT_NEAR(g.first, (e - 1) * ((1 + e) / (2 * e) - 1 / (e - 1)), 1e-12);
    const double hx = 2 * x / (1 + x), lx = (x - 1) / std::log(x);
    EXPECT_NEAR(g.second, (x - 1) * (1 / hx - 1 / lx), 1e-12);
    EXPECT_GE(g.first, g.second);
    EXPECT_GE(g.second, 0.0);
    const OrderedPair z = harmonic_log_gap_check(2, 2, 2);
    EXPECT_EQ(z.first, 0.0);
    EXPECT_EQ(z.second, 0.0);
}

TEST(GapChecks, IdentricRatio) {
    const double ratio = ((1 + e) / 2) / std::exp(1 / (e - 1));
    EXPECT_NEAR(ratio, 1.038874, 1e-6);
    const OrderedPair g = identric_ratio_check(1, e, 1);
    EXPECT_NEAR(g.first, std::pow(ratio, e - 1), 1e-12);
    EXPECT_EQ(g.second, 1.0);
    const OrderedPair mid = identric_ratio_check(1, e, 2);
    EXPECT_GE(mid.first, mid.second);
    EXPECT_GE(mid.second, 1.0);
    const OrderedPair same = identric_ratio_check(3, 3, 3);
    EXPECT_EQ(same.first, 1.0);
    EXPECT_EQ(same.second, 1.0);
}

TEST(Young, Golden) {
    const Enclosure r = young_ratio_bounds(1, 4, Lambda(0.5));
    EXPECT_DOUBLE_EQ(r.lower(), std::exp(9.0 / 128.0));
    EXPECT_DOUBLE_EQ(r.upper(), std::exp(9.0 / 8.0));
    EXPECT_NEAR(r.lower(), 1.072843, 1e-6);
    EXPECT_NEAR(r.upper(), 3.080217, 1e-6);
    EXPECT_EQ(young_ratio(1, 4, Lambda(0.5)), 1.25);
    EXPECT_TRUE(enclosure_contains(r, 1.25, 0.0));

    const Enclosure d = young_difference_bounds(1, 4, Lambda(0.5));
    EXPECT_NEAR(d.lower(), 0.240227, 1e-6);
    EXPECT_NEAR(d.upper(), 0.960906, 1e-6);
    EXPECT_EQ(young_difference(1, 4, Lambda(0.5)), 0.5);
    EXPECT_TRUE(enclosure_contains(d, 0.5, 0.0));
}

TEST(Young, TrivialCases) {
    const Enclosure same = young_ratio_bounds(3, 3, Lambda(0.7));
    EXPECT_EQ(same.lower(), 1.0);
    EXPECT_EQ(same.upper(), 1.0);
    EXPECT_EQ(young_difference_bounds(3, 3, Lambda(0.7)).upper(), 0.0);
    EXPECT_EQ(young_ratio_bounds(1, 4, Lambda(0.0)).upper(), 1.0);
    EXPECT_EQ(young_ratio(1, 4, Lambda(0.0)), 1.0);
    const Enclosure one = young_difference_bounds(1, 4, Lambda(1.0));
    EXPECT_EQ(one.lower(), 0.0);
    EXPECT_EQ(one.upper(), 0.0);
}

TEST(Young, Symmetry) {
    for (double lam : {0.0, 0.1, 0.125, 0.3, 0.5, 0.7, 0.75, 0.9, 1.0}) {
        for (auto [a, b] : {std::pair{0.3, 7.0}, std::pair{2.0, 2.5}}) {
            const Enclosure x = young_ratio_bounds(a, b, Lambda(lam));
            const Enclosure y = young_ratio_bounds(b, a, Lambda(1 - lam));
            EXPECT_EQ(x.lower(), y.lower()) << lam;
            EXPECT_EQ(x.upper(), y.upper()) << lam;
            const Enclosure u = young_difference_bounds(a, b, Lambda(lam));
            const Enclosure v = young_difference_bounds(b, a, Lambda(1 - lam));
            EXPECT_EQ(u.lower(), v.lower()) << lam;
            EXPECT_EQ(u.upper(), v.upper()) << lam;
        }
    }
}

TEST(Young, GridContainment) {
    long violations = 0;
    for (int i = 0; i < 50; ++i) {
        const double a = 0.1 * std::pow(100.0, i / 49.0);
        for (int j = 0; j < 50; ++j) {
            const double b = 0.1 * std::pow(100.0, j / 49.0);
            for (int k = 0; k <= 10; ++k) {
                const Lambda lam(k / 10.0);
                const Enclosure r = young_ratio_bounds(a, b, lam);
                const Enclosure d = young_difference_bounds(a, b, lam);
                if (r.lower() < 1.0 || d.lower() < 0.0) ++violations;
                if (!enclosure_contains(r, young_ratio(a, b, lam), 1e-12 * r.upper())) ++violations;
                if (!enclosure_contains(d, young_difference(a, b, lam), 1e-12 * std::max(a, b))) ++violations;
            }
        }
    }
    EXPECT_EQ(violations, 0);
}
