#include "lpkern/operator_builder.hpp"

#include "lpkern/biorthogonal.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lpkern {

Label InjectionMap::at(VectorId vid, std::uint32_t n) const {
    for (const auto& [v, g, lab] : entries)
        if (v == vid && g == n) return lab;
    throw std::out_of_range("injection map: no label for (vid, group)");
}

bool InjectionMap::injective() const {
    std::set<Label> seen;
    for (const auto& [v, g, lab] : entries)
        if (!seen.insert(lab).second) return false;
    return true;
}

InjectionMap InjectionMap::tail_allocator(const DisjointPartition& part,
                                          const SpaceDescriptor& domain) {
    std::size_t needed = 0;
    for (const auto& g : part.groups) needed += g.size();
    if (needed > domain.universe_size)
        throw std::invalid_argument("tail_allocator: universe too small for injection");
    InjectionMap theta;
    Label next = domain.universe_size;
    for (std::size_t n = 0; n < part.groups.size(); ++n)
        for (VectorId vid : part.groups[n])
            theta.entries.emplace_back(vid, static_cast<std::uint32_t>(n + 1), --next);
    return theta;
}

DenseImageResult dense_image_operator(const VectorFamily<Rational>& fam,
                                      const DisjointPartition& part,
                                      const InjectionMap& theta) {
    if (!theta.injective()) throw std::invalid_argument("dense_image_operator: theta not injective");
    for (const auto& [v, g, lab] : theta.entries)
        if (!fam.space.contains(lab))
            throw std::invalid_argument("dense_image_operator: theta label outside universe");

    const auto vector_by_id = [&fam](VectorId id) -> const SparseVector<Rational>& {
        const auto it = std::lower_bound(fam.ids.begin(), fam.ids.end(), id);
        if (it == fam.ids.end() || *it != id)
            throw std::invalid_argument("dense_image_operator: partition id not in family");
        return fam.vectors[static_cast<std::size_t>(it - fam.ids.begin())];
    };

    DenseImageResult out;
    out.op.domain = fam.space;
    out.op.codomain = fam.space;
    for (std::size_t n0 = 0; n0 < part.groups.size(); ++n0) {
        const auto n = static_cast<std::uint32_t>(n0 + 1);
        for (VectorId vid : part.groups[n0]) {
            const auto& d = vector_by_id(vid);
            if (d.is_zero()) continue;
            const Rational nu = norm_upper(d, fam.space);
            const bool exact =
                fam.space.kind == SpaceKind::C0 || fam.space.p.is_one() ||
                (fam.space.p.is_integer() &&
                 pow_int(nu, static_cast<unsigned>(fam.space.p.num)) ==
                     norm_pow_int(d, static_cast<unsigned>(fam.space.p.num)));
            out.normalizers_exact = out.normalizers_exact && exact;
            const Rational weight = Rational(1, Int(1) << n) / nu;
            out.columns.emplace_back(theta.at(vid, n), vid, n, nu);
            out.op.cols.emplace_back(theta.at(vid, n), d.scaled(weight));
        }
    }
    std::sort(out.op.cols.begin(), out.op.cols.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::sort(out.columns.begin(), out.columns.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    return out;
}

namespace {

Rational rational_norm_pow(const SparseVector<Rational>& x, const SpaceDescriptor& sp) {
    if (sp.kind == SpaceKind::C0) return max_abs(x);
    return norm_pow_int(x, static_cast<unsigned>(sp.p.num));
}

bool exact_norms_available(const SpaceDescriptor& sp) {
    return sp.kind == SpaceKind::C0 || sp.p.is_integer();
}

SparseVector<Rational> random_sparse(std::mt19937_64& rng, std::uint64_t universe,
                                     std::size_t max_support) {
    std::vector<std::pair<Label, Rational>> entries;
    const std::size_t k = 1 + rng() % max_support;
    for (std::size_t i = 0; i < k; ++i) {
        const Label lab = rng() % universe;
        const std::int64_t num = static_cast<std::int64_t>(rng() % 16) - 8;
        const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 8);
        entries.emplace_back(lab, Rational(num, den));
    }
    return SparseVector<Rational>::from_entries(std::move(entries));
}

}  // namespace

NormCheckReport operator_norm_bound_check(const DenseImageResult& built,
                                          std::uint64_t trials, std::uint64_t seed) {
    const auto& T = built.op;
    NormCheckReport rep;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    const bool exact = exact_norms_available(T.domain);

    for (std::uint64_t t = 0; t < trials; ++t) {
        // contraction on a random vector
        const auto x = random_sparse(rng, T.domain.universe_size, 8);
        const auto tx = T.apply(x);
        if (exact) {
            if (rational_norm_pow(tx, T.domain) > rational_norm_pow(x, T.domain))
                rep.violations.push_back("contraction failed at trial " + std::to_string(t));
        } else {
            if (norm_value(tx, T.domain) > norm_value(x, T.domain) * (1.0 + 1e-12))
                rep.violations.push_back("contraction failed at trial " + std::to_string(t));
        }

        // block near-isometry on a random group
        if (built.columns.empty()) continue;
        const auto& [lab0, vid0, n, nu0] = built.columns[rng() % built.columns.size()];
        std::vector<std::pair<Label, Rational>> entries;
        for (const auto& [lab, vid, g, nu] : built.columns)
            if (g == n) {
                const std::int64_t num = static_cast<std::int64_t>(rng() % 16) - 8;
                if (num != 0) entries.emplace_back(lab, Rational(num, 1 + static_cast<std::int64_t>(rng() % 8)));
            }
        const auto xb = SparseVector<Rational>::from_entries(std::move(entries));
        if (xb.is_zero()) continue;
        const auto txb = T.apply(xb);
        if (exact) {
            const unsigned p = T.domain.kind == SpaceKind::C0
                                   ? 1u
                                   : static_cast<unsigned>(T.domain.p.num);
            const Rational lhs = rational_norm_pow(txb, T.domain);
            const Rational scale = T.domain.kind == SpaceKind::C0
                                       ? Rational(1, Int(1) << n)
                                       : Rational(1, Int(1) << (n * p));
            const Rational rhs = scale * rational_norm_pow(xb, T.domain);
            const Rational slack(1, Int(1) << 48);
            const bool upper_ok = lhs <= rhs;
            const bool lower_ok = lhs >= rhs * (Rational(1) - slack);
            const bool equal_ok = !built.normalizers_exact || lhs == rhs;
            if (!upper_ok || !lower_ok || !equal_ok)
                rep.violations.push_back("block isometry failed at trial " + std::to_string(t));
        } else {
            const double lhs = norm_value(txb, T.domain);
            const double rhs = std::pow(0.5, double(n)) * norm_value(xb, T.domain);
            if (std::abs(lhs - rhs) > 1e-9 * (rhs > 0 ? rhs : 1.0))
                rep.violations.push_back("block isometry failed at trial " + std::to_string(t));
        }
    }
    return rep;
}

LinearOperator<Rational> kernel_operator_via_duality(const VectorFamily<Rational>& y) {
    if (y.space.kind != SpaceKind::Lp || y.space.p.is_one())
        throw std::invalid_argument(
            "kernel_operator_via_duality: use quotient construction for p = 1 and c0");

    const VectorFamily<Rational> z = annihilator(y);
    if (z.empty()) {
        // Y is the whole space; the zero operator has kernel everything.
        return LinearOperator<Rational>{y.space, y.space, {}};
    }
    const auto sys = markushevich(z);
    const VectorFamily<Rational>& d = sys.vectors;
    const SupportFamily sf = SupportFamily::of(d);
    const auto comp = components_equivrel(sf);
    const auto part = disjoint_partition(sf, comp);
    const auto theta = InjectionMap::tail_allocator(part, d.space);
    const auto s = dense_image_operator(d, part, theta);
    return adjoint(s.op);
}

LinearOperator<Rational> kernel_operator_via_quotient(const VectorFamily<Rational>& y,
                                                      const SpaceDescriptor& x) {
    for (const auto& v : y.vectors)
        if (!v.is_zero() && !x.contains(v.max_label()))
            throw std::out_of_range("kernel_operator_via_quotient: Y outside ambient universe");

    const std::vector<Label> cols = occupied_labels(y);
    const RrefResult r = rref_dense(to_dense(y, cols));

    LinearOperator<Rational> t{x, x, {}};
    std::size_t pi = 0;
    std::vector<bool> is_pivot(cols.size(), false);
    std::vector<std::size_t> pivot_row(cols.size(), 0);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        is_pivot[r.pivots[i]] = true;
        pivot_row[r.pivots[i]] = i;
    }
    std::size_t ci = 0;
    for (Label g = 0; g < x.universe_size; ++g) {
        if (ci < cols.size() && cols[ci] == g) {
            const std::size_t c = ci++;
            if (is_pivot[c]) {
                // q(e_g) = e_g - row: supported on the non-pivot columns of the row
                SparseVector<Rational> col;
                const auto& row = r.rows[pivot_row[c]];
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (j != c && row[j] != 0) col.entries.emplace_back(cols[j], -row[j]);
                if (!col.is_zero()) t.set_column(g, std::move(col));
                continue;
            }
        }
        t.set_column(g, unit_vector<Rational>(g, x));
    }
    return t;
}

LpSumDecomposition lp_sum_decomposition(const VectorFamily<Rational>& y,
                                        const ComponentDecomposition& comp) {
    if (y.space.kind != SpaceKind::Lp)
        throw std::invalid_argument("lp_sum_decomposition: requires an lp model");
    const auto pos_of = [&y](VectorId id) {
        const auto it = std::lower_bound(y.ids.begin(), y.ids.end(), id);
        if (it == y.ids.end() || *it != id)
            throw std::invalid_argument("lp_sum_decomposition: component id not in family");
        return static_cast<std::size_t>(it - y.ids.begin());
    };
    LpSumDecomposition dec;
    std::set<Label> used;
    for (const auto& [cid, members] : comp.components) {
        VectorFamily<Rational> block(y.space);
        std::vector<Label> supp;
        for (VectorId vid : members) {
            const auto& v = y.vectors[pos_of(vid)];
            block.push_back(vid, v);
            for (const auto& [lab, val] : v.entries) supp.push_back(lab);
        }
        std::sort(supp.begin(), supp.end());
        supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
        for (Label lab : supp)
            if (!used.insert(lab).second)
                throw std::invalid_argument("lp_sum_decomposition: blocks with overlapping supports");
        dec.blocks.push_back(std::move(block));
        dec.block_supports.push_back(std::move(supp));
    }
    return dec;
}

bool lp_sum_isometry_exact(const LpSumDecomposition& dec,
                           const std::vector<SparseVector<Rational>>& block_vectors,
                           unsigned p) {
    if (block_vectors.size() != dec.blocks.size())
        throw std::invalid_argument("lp_sum_isometry_exact: one vector per block required");
    SparseVector<Rational> total;
    Rational sum(0);
    for (std::size_t i = 0; i < block_vectors.size(); ++i) {
        for (const auto& [lab, val] : block_vectors[i].entries)
            if (!std::binary_search(dec.block_supports[i].begin(), dec.block_supports[i].end(), lab))
                throw std::invalid_argument("lp_sum_isometry_exact: vector leaves its block support");
        total = total.axpy(Rational(1), block_vectors[i]);
        sum += norm_pow_int(block_vectors[i], p);
    }
    return norm_pow_int(total, p) == sum;
}

namespace {

nlohmann::json space_to_json(const SpaceDescriptor& sp) {
    return {{"space", sp.kind == SpaceKind::Lp ? "lp" : "c0"},
            {"p", {sp.p.num, sp.p.den}},
            {"universe_size", sp.universe_size}};
}

SpaceDescriptor space_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("space").get<std::string>();
    const std::uint64_t n = j.at("universe_size").get<std::uint64_t>();
    if (kind == "c0") return SpaceDescriptor::c0(n);
    const auto& p = j.at("p");
    return SpaceDescriptor::lp(Exponent(p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()), n);
}

nlohmann::json int_to_json(const Int& v) {
    if (v <= Int(9007199254740992LL) && v >= Int(-9007199254740992LL))
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}

}  // namespace

std::string operator_to_json(const LinearOperator<Rational>& t) {
    nlohmann::json triplets = nlohmann::json::array();
    std::vector<std::tuple<Label, Label, Rational>> trips;
    for (const auto& [c, col] : t.cols)
        for (const auto& [r, val] : col.entries) trips.emplace_back(r, c, val);
    std::sort(trips.begin(), trips.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b));
    });
    for (const auto& [r, c, val] : trips)
        triplets.push_back({r, c, int_to_json(boost::multiprecision::numerator(val)),
                            int_to_json(boost::multiprecision::denominator(val))});
    const nlohmann::json j{{"domain", space_to_json(t.domain)},
                           {"codomain", space_to_json(t.codomain)},
                           {"triplets", triplets}};
    return j.dump();
}

LinearOperator<Rational> operator_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    LinearOperator<Rational> t{space_from_json(j.at("domain")), space_from_json(j.at("codomain")), {}};
    std::vector<std::tuple<Label, Label, Rational>> trips;  // (col, row, val)
    for (const auto& e : j.at("triplets"))
        trips.emplace_back(e.at(1).get<Label>(), e.at(0).get<Label>(),
                           make_rational(int_from_json(e.at(2)), int_from_json(e.at(3))));
    std::sort(trips.begin(), trips.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b));
    });
    for (const auto& [c, r, val] : trips) {
        if (val == 0) continue;
        if (t.cols.empty() || t.cols.back().first != c)
            t.cols.emplace_back(c, SparseVector<Rational>{});
        t.cols.back().second.entries.emplace_back(r, val);
    }
    return t;
}

}  // namespace lpkern
