#include "lpkern/verification.hpp"
#include "lpkern/generator.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace lpkern;
using lpkern_test::family;
using lpkern_test::vec;

TEST_CASE("rref basis is canonical: scaling and shuffling do not matter") {
    const auto sp = SpaceDescriptor::lp(Exponent(2, 1), 4);
    const auto a = family(sp, {vec({{0, 1}, {1, 1}}), vec({{1, 1}, {2, 1}})});
    const auto b = family(sp, {vec({{1, 3}, {2, 3}}), vec({{0, -2}, {2, 2}})});
    CHECK(subspace_equal(rref_basis(a), rref_basis(b)));
    const auto c = family(sp, {vec({{0, 1}})});
    CHECK_FALSE(subspace_equal(rref_basis(a), rref_basis(c)));
}

TEST_CASE("subspace_equal rejects mismatched ambient spaces") {
    const auto a = rref_basis(family(SpaceDescriptor::lp(Exponent(2, 1), 4), {vec({{0, 1}})}));
    const auto b = rref_basis(family(SpaceDescriptor::lp(Exponent(2, 1), 5), {vec({{0, 1}})}));
    CHECK_THROWS_AS(subspace_equal(a, b), std::invalid_argument);
}

TEST_CASE("kernel and column space of an explicit operator") {
    const auto sp = SpaceDescriptor::lp(Exponent(2, 1), 3);
    // T e_0 = e_0, T e_1 = e_0, T e_2 = 0  =>  ker = span{e_0 - e_1, e_2}
    LinearOperator<Rational> t{sp, sp, {}};
    t.set_column(0, vec({{0, 1}}));
    t.set_column(1, vec({{0, 1}}));
    const auto ker = kernel_basis(t);
    CHECK(ker.dim() == 2);
    CHECK(subspace_equal(ker, rref_basis(family(sp, {vec({{0, 1}, {1, -1}}), vec({{2, 1}})}))));
    const auto col = column_space_basis(t);
    CHECK(col.dim() == 1);
    CHECK(rank(t) == 1);
    CHECK(rank(t) + ker.dim() == sp.universe_size);
}

TEST_CASE("rank-nullity holds for random operators") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 100; ++i) {
        GenConfig cfg;
        cfg.space = SpaceDescriptor::lp(Exponent(2, 1), 4 + rng() % 12);
        cfg.n_vectors = 1 + rng() % 8;
        cfg.support_param = 1 + rng() % 3;
        cfg.seed = rng();
        const auto cols = generate_family(cfg);
        LinearOperator<Rational> t{cfg.space, cfg.space, {}};
        for (std::size_t j = 0; j < cols.size() && j < cfg.space.universe_size; ++j)
            t.set_column(static_cast<Label>(j), cols.vectors[j]);
        CHECK(rank(t) + kernel_basis(t).dim() == cfg.space.universe_size);
    }
}

TEST_CASE("float subspace equality tolerates rounding but not different spans") {
    std::vector<SparseVector<double>> a{
        SparseVector<double>::from_entries({{0, 1.0}, {1, 1.0}})};
    std::vector<SparseVector<double>> b{
        SparseVector<double>::from_entries({{0, 0.5 + 1e-13}, {1, 0.5}})};
    CHECK(subspace_equal_f(a, b, 1e-9));
    std::vector<SparseVector<double>> c{SparseVector<double>::from_entries({{0, 1.0}})};
    CHECK_FALSE(subspace_equal_f(a, c, 1e-9));
}

TEST_CASE("duality chain passes on kernel operators, 1 < p < inf") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 60; ++i) {
        GenConfig cfg;
        cfg.space = SpaceDescriptor::lp(Exponent(2, 1), 6 + rng() % 14);
        cfg.n_vectors = 1 + rng() % 5;
        cfg.support_param = 1 + rng() % 3;
        cfg.seed = rng();
        const auto y = generate_family(cfg).without_zeros();
        if (y.empty()) continue;
        const auto t = kernel_operator_via_quotient(y, cfg.space);
        const auto rep = check_duality_chain(t);
        CHECK_MESSAGE(rep.ok(), rep.to_json());
    }
}

TEST_CASE("duality chain refuses non-reflexive models") {
    const auto sp = SpaceDescriptor::lp(Exponent(1, 1), 4);
    LinearOperator<Rational> t{sp, sp, {}};
    t.set_column(0, vec({{0, 1}}));
    const auto rep = check_duality_chain(t);
    CHECK_FALSE(rep.ok());
    CHECK(rep.failures.front().identity == "precondition");
}

TEST_CASE("roundtrip check passes on random families and reports the partition") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 40; ++i) {
        GenConfig cfg;
        cfg.space = SpaceDescriptor::lp(Exponent(2, 1), 64 + rng() % 64);
        cfg.n_vectors = 1 + rng() % 12;
        cfg.support_param = 1 + rng() % 4;
        cfg.seed = rng();
        const auto d = generate_family(cfg).without_zeros();
        if (d.empty()) continue;
        const auto rep = check_lemma25_roundtrip(d);
        CHECK_MESSAGE(rep.ok(), rep.to_json());
        CHECK(rep.notes.find("\"n_groups\"") != std::string::npos);
    }
}

TEST_CASE("check report serializes failures") {
    CheckReport rep;
    rep.check = "demo";
    rep.instances = 2;
    rep.failures.push_back({"identity-i", "vector 3"});
    const std::string j = rep.to_json();
    CHECK(j.find("\"check\":\"demo\"") != std::string::npos);
    CHECK(j.find("identity-i") != std::string::npos);
    CHECK_FALSE(rep.ok());
}
