#include "lpkern/support_graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lpkern {

std::span<const VectorId> IncidenceIndex::at(Label g) const {
    const auto it = std::lower_bound(coords.begin(), coords.end(), g);
    if (it == coords.end() || *it != g) return {};
    return group(static_cast<std::size_t>(it - coords.begin()));
}

IncidenceIndex build_incidence(const SupportFamily& fam) {
    std::vector<std::pair<Label, VectorId>> pairs;
    std::size_t total = 0;
    for (const auto& s : fam.supports) total += s.size();
    pairs.reserve(total);
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (Label g : fam.supports[i]) pairs.emplace_back(g, fam.ids[i]);
    std::sort(pairs.begin(), pairs.end());

    IncidenceIndex idx;
    idx.vids.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i == 0 || pairs[i].first != pairs[i - 1].first) {
            idx.coords.push_back(pairs[i].first);
            idx.offsets.push_back(i);
        }
        idx.vids.push_back(pairs[i].second);
    }
    idx.offsets.push_back(pairs.size());
    return idx;
}

std::size_t ComponentDecomposition::max_component_size() const {
    std::size_t m = 0;
    for (const auto& [id, members] : components) m = std::max(m, members.size());
    return m;
}

namespace {

void reject_zero_members(const SupportFamily& fam) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (fam.supports[i].empty())
            throw std::invalid_argument("zero member: vector id " +
                                        std::to_string(fam.ids[i]));
}

/// Assemble the canonical decomposition from a per-member root position.
ComponentDecomposition finalize(const SupportFamily& fam,
                                const std::vector<std::size_t>& root_of) {
    const std::size_t n = fam.size();
    // canonical component id = min member id; ids ascend with position, so the
    // first position seen per root carries it
    std::vector<VectorId> comp_id(n);
    std::vector<std::size_t> min_pos(n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (min_pos[root_of[i]] == n) min_pos[root_of[i]] = i;
    std::map<VectorId, std::vector<VectorId>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        comp_id[i] = fam.ids[min_pos[root_of[i]]];
        groups[comp_id[i]].push_back(fam.ids[i]);
    }
    ComponentDecomposition out;
    out.member_ids = fam.ids;
    out.component_of = std::move(comp_id);
    out.components.reserve(groups.size());
    for (auto& [id, members] : groups) {
        std::sort(members.begin(), members.end());
        out.components.emplace_back(id, std::move(members));
    }
    return out;
}

struct DisjointSet {
    std::vector<std::size_t> parent, size;
    explicit DisjointSet(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

}  // namespace

ComponentDecomposition components_equivrel(const SupportFamily& fam) {
    reject_zero_members(fam);
    const std::size_t n = fam.size();
    // position lookup: ids are strictly increasing
    const auto pos_of = [&fam](VectorId id) {
        return static_cast<std::size_t>(
            std::lower_bound(fam.ids.begin(), fam.ids.end(), id) - fam.ids.begin());
    };
    const IncidenceIndex idx = build_incidence(fam);
    DisjointSet dsu(n);
    for (std::size_t c = 0; c < idx.coord_count(); ++c) {
        const auto grp = idx.group(c);
        const std::size_t first = pos_of(grp.front());
        for (std::size_t k = 1; k < grp.size(); ++k) dsu.unite(first, pos_of(grp[k]));
    }
    std::vector<std::size_t> root_of(n);
    for (std::size_t i = 0; i < n; ++i) root_of[i] = dsu.find(i);
    return finalize(fam, root_of);
}

ComponentDecomposition components_graph(const SupportFamily& fam) {
    reject_zero_members(fam);
    const std::size_t n = fam.size();
    const auto pos_of = [&fam](VectorId id) {
        return static_cast<std::size_t>(
            std::lower_bound(fam.ids.begin(), fam.ids.end(), id) - fam.ids.begin());
    };
    const IncidenceIndex idx = build_incidence(fam);
    std::vector<std::size_t> root_of(n, n);
    std::vector<bool> coord_done(idx.coord_count(), false);
    std::vector<std::size_t> queue;
    for (std::size_t start = 0; start < n; ++start) {
        if (root_of[start] != n) continue;
        root_of[start] = start;
        queue.assign(1, start);
        while (!queue.empty()) {
            const std::size_t v = queue.back();
            queue.pop_back();
            for (Label g : fam.supports[v]) {
                const auto it = std::lower_bound(idx.coords.begin(), idx.coords.end(), g);
                const std::size_t ci = static_cast<std::size_t>(it - idx.coords.begin());
                if (coord_done[ci]) continue;
                coord_done[ci] = true;
                for (VectorId wid : idx.group(ci)) {
                    const std::size_t w = pos_of(wid);
                    if (root_of[w] == n) {
                        root_of[w] = start;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    return finalize(fam, root_of);
}

DisjointPartition disjoint_partition(const SupportFamily& fam,
                                     const ComponentDecomposition& comp) {
    if (comp.member_ids != fam.ids)
        throw std::invalid_argument("disjoint_partition: decomposition does not match family");
    DisjointPartition part;
    part.groups.resize(comp.max_component_size());
    for (const auto& [id, members] : comp.components)
        for (std::size_t k = 0; k < members.size(); ++k)
            part.groups[k].push_back(members[k]);
    for (auto& g : part.groups) std::sort(g.begin(), g.end());
    return part;
}

std::string partition_report(const SupportFamily& fam,
                             const ComponentDecomposition& comp,
                             const DisjointPartition& part) {
    std::map<std::size_t, std::size_t> hist;
    for (const auto& [id, members] : comp.components) ++hist[members.size()];
    nlohmann::json histogram = nlohmann::json::array();
    for (const auto& [size, count] : hist) histogram.push_back({size, count});
    const nlohmann::json j{{"n_vectors", fam.size()},
                           {"n_components", comp.components.size()},
                           {"max_component", comp.max_component_size()},
                           {"n_groups", part.groups.size()},
                           {"component_size_histogram", histogram}};
    return j.dump();
}

std::uint64_t partition_hash(const DisjointPartition& part) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(part.groups.size());
    for (const auto& g : part.groups) {
        mix(g.size());
        for (VectorId v : g) mix(v);
    }
    return h;
}

}  // namespace lpkern
