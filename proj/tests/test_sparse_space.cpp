#include "lpkern/sparse_space.hpp"
#include "lpkern/generator.hpp"
#include "lpkern/verification.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace lpkern;
using lpkern_test::family;
using lpkern_test::vec;

TEST_CASE("norms: 3-4-5 triple, l1 sum, c0 max") {
    const auto x = vec({{0, 3}, {1, 4}});
    CHECK(norm_pow_int(x, 2) == Rational(25));
    CHECK(exact_root(norm_pow_int(x, 2), 2) == Rational(5));
    CHECK(norm_pow_int(x, 1) == Rational(7));
    CHECK(max_abs(x) == Rational(4));
    CHECK(norm_value(x, SpaceDescriptor::lp(Exponent(2, 1), 4)) == doctest::Approx(5.0));
    CHECK(norm_value(x, SpaceDescriptor::c0(4)) == doctest::Approx(4.0));
    CHECK(norm_pow_int(SparseVector<Rational>{}, 2) == Rational(0));
}

TEST_CASE("norm_upper is exact for rational norms and an upper bound otherwise") {
    const auto sp2 = SpaceDescriptor::lp(Exponent(2, 1), 4);
    CHECK(norm_upper(vec({{0, 3}, {1, 4}}), sp2) == Rational(5));
    const auto d = vec({{0, 1}, {1, 1}});  // norm sqrt(2)
    const Rational nu = norm_upper(d, sp2);
    CHECK(nu * nu > Rational(2));
    CHECK(nu * nu < Rational(2) * Rational((Int(1) << 62) + 100, Int(1) << 62));
    // non-integer p path
    const auto sp32 = SpaceDescriptor::lp(Exponent(3, 2), 4);
    const Rational nu32 = norm_upper(d, sp32);
    const double expect = std::pow(2.0, 2.0 / 3.0);
    CHECK(to_double(nu32) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("pairing") {
    const auto sp = SpaceDescriptor::lp(Exponent(2, 1), 8);
    CHECK(pairing(unit_vector<Rational>(3, sp), unit_vector<Rational>(3, sp)) == Rational(1));
    CHECK(pairing(unit_vector<Rational>(3, sp), unit_vector<Rational>(5, sp)) == Rational(0));
    const auto x = vec({{0, 1}, {1, 2}});
    const auto f = vec({{1, 3}, {2, 5}});
    CHECK(pairing(x, f) == Rational(6));
}

TEST_CASE("unit vectors") {
    const auto sp = SpaceDescriptor::lp(Exponent(3, 1), 4);
    const auto e = unit_vector<Rational>(1, sp);
    CHECK(e.entries == std::vector<std::pair<Label, Rational>>{{1, Rational(1)}});
    CHECK(norm_pow_int(e, 3) == Rational(1));
    CHECK(max_abs(e) == Rational(1));
    CHECK_THROWS_AS(unit_vector<Rational>(4, sp), std::out_of_range);
}

TEST_CASE("canonical form drops explicit zeros and merges duplicates") {
    const auto a = SparseVector<Rational>::from_entries({{2, Rational(1)}, {5, Rational(0)}});
    const auto b = SparseVector<Rational>::from_entries({{2, Rational(1)}});
    CHECK(a == b);
    const auto c = SparseVector<Rational>::from_entries({{2, Rational(1)}, {2, Rational(-1)}});
    CHECK(c.is_zero());
}

TEST_CASE("annihilator of span{(1,1,0)} in l2^3") {
    const auto sp = SpaceDescriptor::lp(Exponent(2, 1), 3);
    const auto y = family(sp, {vec({{0, 1}, {1, 1}})});
    const auto ann = annihilator(y);
    REQUIRE(ann.size() == 2);
    CHECK(ann.vectors[0] == vec({{0, 1}, {1, -1}}));
    CHECK(ann.vectors[1] == vec({{2, 1}}));
    CHECK(ann.space == sp.dual());
}

TEST_CASE("annihilator of the full space is empty; of the zero space is everything") {
    const auto sp = SpaceDescriptor::lp(Exponent(2, 1), 2);
    const auto full = family(sp, {vec({{0, 1}}), vec({{1, 1}})});
    CHECK(annihilator(full).empty());
    const auto ann = annihilator(VectorFamily<Rational>(sp));
    REQUIRE(ann.size() == 2);
    CHECK(ann.vectors[0] == vec({{0, 1}}));
    CHECK(ann.vectors[1] == vec({{1, 1}}));
}

TEST_CASE("pre_annihilator of {e*_0} in the dual of l2^2") {
    const auto dual = SpaceDescriptor::lp(Exponent(2, 1), 2).dual();
    const auto z = family(dual, {vec({{0, 1}})});
    const auto pre = pre_annihilator(z);
    REQUIRE(pre.size() == 1);
    CHECK(pre.vectors[0] == vec({{1, 1}}));
}

TEST_CASE("(Y^perp)_perp recovers span Y on random instances") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        GenConfig cfg;
        cfg.space = SpaceDescriptor::lp(Exponent(2, 1), 4 + rng() % 16);
        cfg.n_vectors = 1 + rng() % 10;
        cfg.support_param = 1 + rng() % 4;
        cfg.seed = rng();
        const auto y = generate_family(cfg);
        const auto back = pre_annihilator(annihilator(y));
        CHECK(subspace_equal(rref_basis(back), rref_basis(y)));
    }
}

TEST_CASE("rank-nullity: dim span Y + dim Y^perp = universe") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        GenConfig cfg;
        cfg.space = SpaceDescriptor::lp(Exponent(2, 1), 3 + rng() % 18);
        cfg.n_vectors = 1 + rng() % 12;
        cfg.support_param = 1 + rng() % 3;
        cfg.seed = rng();
        const auto y = generate_family(cfg);
        CHECK(rank(y) + annihilator(y).size() == cfg.space.universe_size);
    }
}

TEST_CASE("Hoelder bound, exact in the rational model") {
    std::mt19937_64 rng(17);
    GenConfig cfg;
    cfg.space = SpaceDescriptor::lp(Exponent(2, 1), 32);
    cfg.n_vectors = 2;
    cfg.support_param = 4;
    for (int i = 0; i < 10000; ++i) {
        cfg.seed = rng();
        const auto fam = generate_family(cfg);
        const auto& x = fam.vectors[0];
        const auto& f = fam.vectors[1];
        const Rational lhs = pairing(x, f);
        // p = q = 2: <x,f>^2 <= ||x||_2^2 ||f||_2^2
        CHECK(lhs * lhs <= norm_pow_int(x, 2) * norm_pow_int(f, 2));
        // p = 1, q = inf: |<x,f>| <= ||x||_1 ||f||_inf
        CHECK(rat_abs(lhs) <= norm_pow_int(x, 1) * max_abs(f));
    }
}
