#include "lpkern/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lpkern {

void GenConfig::validate() const {
    if (space.universe_size == 0) throw std::invalid_argument("gen: empty universe");
    if (dist == SupportDist::Fixed && support_param > space.universe_size)
        throw std::invalid_argument("gen: fixed support size exceeds universe");
    if (support_param == 0) throw std::invalid_argument("gen: support parameter must be positive");
    if (num_lo > num_hi || (num_lo == 0 && num_hi == 0))
        throw std::invalid_argument("gen: empty numerator range");
    if (den_max < 1) throw std::invalid_argument("gen: denominator bound must be >= 1");
}

namespace {

std::size_t draw_support_size(std::mt19937_64& rng, const GenConfig& cfg) {
    if (cfg.dist == SupportDist::Fixed) return cfg.support_param;
    // geometric with mean support_param, integer-threshold Bernoulli trials
    const std::uint64_t threshold = UINT64_MAX / cfg.support_param;
    std::size_t size = 1;
    while (rng() >= threshold && size < cfg.space.universe_size) ++size;
    return size;
}

std::vector<Label> draw_support(std::mt19937_64& rng, const GenConfig& cfg) {
    const std::size_t k = draw_support_size(rng, cfg);
    std::vector<Label> labels;
    labels.reserve(k);
    while (labels.size() < k) {
        const Label lab = rng() % cfg.space.universe_size;
        if (std::find(labels.begin(), labels.end(), lab) == labels.end())
            labels.push_back(lab);
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

Rational draw_value(std::mt19937_64& rng, const GenConfig& cfg) {
    const auto span = static_cast<std::uint64_t>(cfg.num_hi - cfg.num_lo) + 1;
    std::int64_t num = 0;
    do {
        num = cfg.num_lo + static_cast<std::int64_t>(rng() % span);
    } while (num == 0);
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(cfg.den_max));
    return Rational(num, den);
}

}  // namespace

VectorFamily<Rational> generate_family(const GenConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    VectorFamily<Rational> fam(cfg.space);
    for (std::uint64_t i = 0; i < cfg.n_vectors; ++i) {
        SparseVector<Rational> v;
        for (Label lab : draw_support(rng, cfg)) v.entries.emplace_back(lab, draw_value(rng, cfg));
        fam.push_back(static_cast<VectorId>(i), std::move(v));
    }
    return fam;
}

SupportFamily generate_supports(const GenConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    SupportFamily sf;
    sf.ids.reserve(cfg.n_vectors);
    sf.supports.reserve(cfg.n_vectors);
    for (std::uint64_t i = 0; i < cfg.n_vectors; ++i) {
        sf.supports.push_back(draw_support(rng, cfg));
        // consume the value stream so supports match generate_family
        for (std::size_t j = 0; j < sf.supports.back().size(); ++j) draw_value(rng, cfg);
        sf.ids.push_back(static_cast<VectorId>(i));
    }
    return sf;
}

}  // namespace lpkern
