#include "lpkern/biorthogonal.hpp"
#include "lpkern/generator.hpp"
#include "lpkern/io.hpp"
#include "lpkern/verification.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace lpkern;
using lpkern_test::family;
using lpkern_test::vec;

TEST_CASE("biorthogonal functionals for span{(1,0),(1,1)}") {
    const auto sp = SpaceDescriptor::lp(Exponent(2, 1), 2);
    const auto y = family(sp, {vec({{0, 1}}), vec({{0, 1}, {1, 1}})});
    const auto sys = markushevich(y);
    REQUIRE(sys.vectors.size() == 2);
    REQUIRE(sys.functionals.size() == 2);
    CHECK(sys.functionals.vectors[0] == vec({{0, 1}, {1, -1}}));
    CHECK(sys.functionals.vectors[1] == vec({{1, 1}}));
    CHECK(sys.functionals.space == sp.dual());
}

TEST_CASE("dependent members are skipped; basis keeps the earliest ids") {
    const auto sp = SpaceDescriptor::lp(Exponent(2, 1), 4);
    const auto y = family(sp, {vec({{0, 1}}), vec({{0, 2}}), vec({{1, 1}})});
    const auto sys = markushevich(y);
    REQUIRE(sys.vectors.size() == 2);
    CHECK(sys.vectors.ids == std::vector<VectorId>{0, 2});
    CHECK(pairing(sys.vectors.vectors[0], sys.functionals.vectors[0]) == Rational(1));
}

TEST_CASE("zero subspace is rejected") {
    const auto sp = SpaceDescriptor::lp(Exponent(2, 1), 4);
    CHECK_THROWS_AS(markushevich(VectorFamily<Rational>(sp)), std::invalid_argument);
}

TEST_CASE("random systems: exact delta_jk, functionals live in span of duals") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 200; ++i) {
        GenConfig cfg;
        cfg.space = SpaceDescriptor::lp(Exponent(2, 1), 6 + rng() % 24);
        cfg.n_vectors = 1 + rng() % 10;
        cfg.support_param = 1 + rng() % 4;
        cfg.seed = rng();
        const auto y = generate_family(cfg).without_zeros();
        if (y.empty()) continue;
        const auto sys = markushevich(y);
        const std::size_t m = sys.vectors.size();
        CHECK(m == rank(y));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                CHECK(pairing(sys.vectors.vectors[j], sys.functionals.vectors[k]) ==
                      Rational(j == k ? 1 : 0));
        // every original member pairs consistently with its expansion
        for (const auto& v : y.vectors) {
            SparseVector<Rational> rebuilt;
            for (std::size_t k = 0; k < m; ++k)
                rebuilt = rebuilt.axpy(pairing(v, sys.functionals.vectors[k]),
                                       sys.vectors.vectors[k]);
            CHECK(rebuilt == v);
        }
    }
}

TEST_CASE("float-mode system matches the oracle within 1e-10") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 50; ++i) {
        GenConfig cfg;
        cfg.space = SpaceDescriptor::lp(Exponent(2, 1), 6 + rng() % 16);
        cfg.n_vectors = 1 + rng() % 6;
        cfg.support_param = 1 + rng() % 3;
        cfg.seed = rng();
        const auto y = generate_family(cfg).without_zeros();
        if (y.empty()) continue;
        const auto sys = markushevich_f(to_float_family(y));
        const std::size_t m = sys.vectors.size();
        CHECK(m == rank(y));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                double dot = 0;
                for (const auto& [lab, val] : sys.functionals.vectors[k].entries)
                    if (const double* c = sys.vectors.vectors[j].at(lab)) dot += *c * val;
                CHECK(std::abs(dot - (j == k ? 1.0 : 0.0)) < 1e-10);
            }
    }
}

TEST_CASE("incidence count finds the pairing witnesses") {
    const auto sp = SpaceDescriptor::lp(Exponent(2, 1), 4);
    const auto y = family(sp, {vec({{0, 1}}), vec({{1, 1}}), vec({{2, 1}})});
    const auto sys = markushevich(y);
    const auto ic = incidence_count(sys, vec({{0, 2}, {2, -1}}));
    CHECK(ic.count == 2);
    CHECK(ic.witnesses == std::vector<VectorId>{0, 2});
    CHECK(incidence_count(sys, vec({{3, 1}})).count == 0);
}
