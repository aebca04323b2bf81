#include "lpkern/verification.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace lpkern {

namespace {

VectorFamily<Rational> family_from_rows(const RationalMatrix& rows,
                                        const std::vector<Label>& cols,
                                        const SpaceDescriptor& space) {
    std::vector<SparseVector<Rational>> vecs;
    vecs.reserve(rows.size());
    for (const auto& r : rows) vecs.push_back(from_dense(r, cols));
    std::sort(vecs.begin(), vecs.end(), [](const auto& a, const auto& b) {
        return a.entries.front().first < b.entries.front().first;
    });
    VectorFamily<Rational> out(space);
    for (std::size_t i = 0; i < vecs.size(); ++i)
        out.push_back(static_cast<VectorId>(i), std::move(vecs[i]));
    return out;
}

}  // namespace

SubspaceBasis rref_basis(const VectorFamily<Rational>& fam) {
    const std::vector<Label> cols = occupied_labels(fam);
    const RrefResult r = rref_dense(to_dense(fam, cols));
    return SubspaceBasis{fam.space, family_from_rows(r.rows, cols, fam.space)};
}

SubspaceBasis kernel_basis(const LinearOperator<Rational>& t) {
    // dense system over the nonzero columns; absent columns contribute units
    std::vector<Label> cvars;
    cvars.reserve(t.cols.size());
    for (const auto& [c, col] : t.cols) cvars.push_back(c);
    std::vector<Label> rlabels;
    for (const auto& [c, col] : t.cols)
        for (const auto& [r, val] : col.entries) rlabels.push_back(r);
    std::sort(rlabels.begin(), rlabels.end());
    rlabels.erase(std::unique(rlabels.begin(), rlabels.end()), rlabels.end());

    RationalMatrix m(rlabels.size(), std::vector<Rational>(cvars.size(), Rational(0)));
    for (std::size_t j = 0; j < cvars.size(); ++j)
        for (const auto& [r, val] : t.cols[j].second.entries) {
            const auto it = std::lower_bound(rlabels.begin(), rlabels.end(), r);
            m[static_cast<std::size_t>(it - rlabels.begin())][j] = val;
        }
    const RationalMatrix null_rows = null_space_dense(m, cvars.size());
    const RrefResult canon = rref_dense(null_rows);

    std::vector<SparseVector<Rational>> vecs;
    for (const auto& r : canon.rows) vecs.push_back(from_dense(r, cvars));
    std::size_t ci = 0;
    for (Label g = 0; g < t.domain.universe_size; ++g) {
        if (ci < cvars.size() && cvars[ci] == g) {
            ++ci;
            continue;
        }
        vecs.push_back(unit_vector<Rational>(g, t.domain));
    }
    std::sort(vecs.begin(), vecs.end(), [](const auto& a, const auto& b) {
        return a.entries.front().first < b.entries.front().first;
    });
    VectorFamily<Rational> out(t.domain);
    for (std::size_t i = 0; i < vecs.size(); ++i)
        out.push_back(static_cast<VectorId>(i), std::move(vecs[i]));
    return SubspaceBasis{t.domain, std::move(out)};
}

SubspaceBasis column_space_basis(const LinearOperator<Rational>& t) {
    VectorFamily<Rational> cols(t.codomain);
    for (std::size_t i = 0; i < t.cols.size(); ++i)
        cols.push_back(static_cast<VectorId>(i), t.cols[i].second);
    if (cols.empty()) return SubspaceBasis{t.codomain, VectorFamily<Rational>(t.codomain)};
    return rref_basis(cols);
}

std::size_t rank(const LinearOperator<Rational>& t) { return column_space_basis(t).dim(); }

std::size_t rank(const VectorFamily<Rational>& fam) {
    const std::vector<Label> cols = occupied_labels(fam);
    return rref_dense(to_dense(fam, cols)).rank();
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient.universe_size != b.ambient.universe_size)
        throw std::invalid_argument("subspace_equal: ambient mismatch");
    return a.basis.vectors == b.basis.vectors;
}

bool subspace_equal_f(const std::vector<SparseVector<double>>& a,
                      const std::vector<SparseVector<double>>& b, double tol) {
    // orthonormalize one side, test residuals of the other, both directions
    const auto contained = [tol](const std::vector<SparseVector<double>>& span,
                                 const std::vector<SparseVector<double>>& probes) {
        std::vector<SparseVector<double>> ortho;
        for (const auto& v : span) {
            SparseVector<double> w = v;
            for (const auto& u : ortho) w = w.axpy(-pairing(w, u), u);
            const double n = std::sqrt(pairing(w, w));
            if (n > 1e-13) ortho.push_back(w.scaled(1.0 / n));
        }
        for (const auto& v : probes) {
            const double vn = std::sqrt(pairing(v, v));
            if (vn == 0.0) continue;
            SparseVector<double> w = v;
            for (const auto& u : ortho) w = w.axpy(-pairing(w, u), u);
            if (std::sqrt(pairing(w, w)) > tol * vn) return false;
        }
        return true;
    };
    return contained(a, b) && contained(b, a);
}

std::string CheckReport::to_json() const {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures) fails.push_back({{"identity", f.identity}, {"witness", f.witness}});
    nlohmann::json j{{"check", check}, {"instances", instances}, {"failures", fails}};
    if (!notes.empty()) j["notes"] = nlohmann::json::parse(notes);
    return j.dump();
}

CheckReport check_duality_chain(const LinearOperator<Rational>& t) {
    CheckReport rep;
    rep.check = "duality_chain";
    rep.instances = 1;
    if (t.domain.kind != SpaceKind::Lp || t.domain.p.is_one()) {
        rep.failures.push_back({"precondition", "duality chain requires lp with 1 < p < infinity"});
        return rep;
    }
    const SubspaceBasis ker = kernel_basis(t);
    const LinearOperator<Rational> tstar = adjoint(t);
    // row space of T = column space of T*
    VectorFamily<Rational> rows(t.domain.dual());
    for (std::size_t i = 0; i < tstar.cols.size(); ++i)
        rows.push_back(static_cast<VectorId>(i), tstar.cols[i].second);

    const SubspaceBasis row_space =
        rows.empty() ? SubspaceBasis{t.domain.dual(), VectorFamily<Rational>(t.domain.dual())}
                     : rref_basis(rows);

    // (i) ker T = (row space)_perp
    const SubspaceBasis pre = rref_basis(pre_annihilator(
        rows.empty() ? VectorFamily<Rational>(t.domain.dual()) : rows));
    if (!subspace_equal(ker, pre))
        rep.failures.push_back({"ker T = T*[X*]_perp", "canonical bases differ"});

    // (ii) (ker T)^perp = row space
    const SubspaceBasis ann = rref_basis(annihilator(ker.basis));
    if (!subspace_equal(ann, row_space))
        rep.failures.push_back({"(ker T)^perp = row space of T", "canonical bases differ"});

    // (iii) ((ker T)^perp)_perp = ker T
    const SubspaceBasis back = rref_basis(pre_annihilator(ann.basis));
    if (!subspace_equal(back, ker))
        rep.failures.push_back({"((ker T)^perp)_perp = ker T", "canonical bases differ"});
    return rep;
}

CheckReport check_lemma25_roundtrip(const VectorFamily<Rational>& d) {
    CheckReport rep;
    rep.check = "lemma25_roundtrip";
    rep.instances = 1;
    const SupportFamily sf = SupportFamily::of(d);

    const auto comp_a = components_equivrel(sf);
    const auto comp_b = components_graph(sf);
    if (!(comp_a == comp_b))
        rep.failures.push_back({"cross-proof agreement", "component maps differ"});

    const auto part = disjoint_partition(sf, comp_a);
    // soundness: pairwise disjoint supports within each group
    const auto pos_of = [&sf](VectorId id) {
        return static_cast<std::size_t>(
            std::lower_bound(sf.ids.begin(), sf.ids.end(), id) - sf.ids.begin());
    };
    for (std::size_t n = 0; n < part.groups.size(); ++n) {
        std::map<Label, VectorId> seen;
        for (VectorId vid : part.groups[n])
            for (Label g : sf.supports[pos_of(vid)])
                if (const auto [it, inserted] = seen.emplace(g, vid); !inserted)
                    rep.failures.push_back(
                        {"group disjointness",
                         "group " + std::to_string(n + 1) + ": ids " + std::to_string(it->second) +
                             "," + std::to_string(vid) + " share coordinate " + std::to_string(g)});
    }
    // completeness: groups cover every id exactly once
    std::vector<VectorId> covered;
    for (const auto& g : part.groups) covered.insert(covered.end(), g.begin(), g.end());
    std::sort(covered.begin(), covered.end());
    if (covered != sf.ids)
        rep.failures.push_back({"group completeness", "union of groups differs from family ids"});
    if (part.groups.size() != comp_a.max_component_size())
        rep.failures.push_back({"group count", "group count != max component size"});

    const auto theta = InjectionMap::tail_allocator(part, d.space);
    const auto built = dense_image_operator(d, part, theta);
    if (rank(built.op) != rank(d))
        rep.failures.push_back({"dense image rank", "rank T != dim span D"});
    if (!subspace_equal(column_space_basis(built.op), rref_basis(d)))
        rep.failures.push_back({"dense image span", "column space of T != span D"});

    rep.notes = partition_report(sf, comp_a, part);
    return rep;
}

}  // namespace lpkern
