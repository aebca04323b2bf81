#include "lpkern/biorthogonal.hpp"
#include "lpkern/generator.hpp"
#include "lpkern/io.hpp"
#include "lpkern/operator_builder.hpp"
#include "lpkern/support_graph.hpp"
#include "lpkern/verification.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace lpkern;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::string space = "lp";
    std::string p = "2/1";
    std::string mode = "oracle";
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "jsonl";
    unsigned threads = 1;
};

Exponent parse_exponent(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Exponent(std::stoll(text), 1);
    return Exponent(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

SpaceDescriptor parse_space(const GlobalOpts& g, std::uint64_t universe) {
    if (g.space == "c0") return SpaceDescriptor::c0(universe);
    if (g.space != "lp") throw std::invalid_argument("--space must be lp or c0");
    return SpaceDescriptor::lp(parse_exponent(g.p), universe);
}

void emit(const GlobalOpts& g, const json& payload, const std::string& summary) {
    if (!g.out.empty()) {
        std::ofstream os(g.out);
        if (!os) throw std::invalid_argument("cannot open output file: " + g.out);
        os << payload.dump() << '\n';
    } else {
        std::cout << payload.dump() << '\n';
    }
    std::cerr << summary << '\n';
}

VectorFamily<Rational> load_family(const std::string& path, const GlobalOpts& g,
                                   std::uint64_t csv_universe) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open family file: " + path);
    if (g.format == "csv") return read_family_csv(is, parse_space(g, csv_universe));
    return read_family_jsonl(is);
}

void reject_zero_lines(const VectorFamily<Rational>& fam) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (fam.vectors[i].is_zero())
            throw std::invalid_argument("zero vector at file line " + std::to_string(i + 2) +
                                        " (id " + std::to_string(fam.ids[i]) + ")");
}

GenConfig parse_support_dist(GenConfig cfg, const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::uint64_t param = colon == std::string::npos ? 4 : std::stoull(text.substr(colon + 1));
    cfg.support_param = param;
    if (kind == "fixed")
        cfg.dist = SupportDist::Fixed;
    else if (kind == "geom" || kind == "geometric")
        cfg.dist = SupportDist::Geometric;
    else
        throw std::invalid_argument("--support must be fixed:K or geom:MEAN");
    return cfg;
}

json groups_to_json(const DisjointPartition& part) {
    json groups = json::array();
    for (const auto& g : part.groups) groups.push_back(g);
    return groups;
}

// ---- verify suites ---------------------------------------------------------

GenConfig random_family_config(std::mt19937_64& rng, const SpaceDescriptor& space,
                               std::uint64_t n, std::uint64_t max_support) {
    GenConfig cfg;
    cfg.space = space;
    cfg.n_vectors = n;
    cfg.dist = SupportDist::Fixed;
    cfg.support_param = 1 + rng() % max_support;
    cfg.seed = rng();
    return cfg;
}

SpaceDescriptor random_reflexive_space(std::mt19937_64& rng, std::uint64_t universe) {
    switch (rng() % 3) {
        case 0: return SpaceDescriptor::lp(Exponent(3, 2), universe);
        case 1: return SpaceDescriptor::lp(Exponent(2, 1), universe);
        default: return SpaceDescriptor::lp(Exponent(3, 1), universe);
    }
}

json run_suite_duality(std::uint64_t instances, std::uint64_t seed, bool& ok) {
    std::mt19937_64 rng(seed ^ 0xd00d);
    json failures = json::array();
    for (std::uint64_t i = 0; i < instances; ++i) {
        const std::uint64_t universe = 2 + rng() % 19;  // dimension <= 20
        const auto space = random_reflexive_space(rng, universe);
        const auto fam = generate_family(
            random_family_config(rng, space, 1 + rng() % universe, std::min<std::uint64_t>(universe, 5)));
        // random operator: columns of a family, domain = codomain
        LinearOperator<Rational> t{space, space, {}};
        for (std::size_t c = 0; c < fam.size(); ++c)
            if (!fam.vectors[c].is_zero() && static_cast<Label>(c) < universe)
                t.set_column(static_cast<Label>(c), fam.vectors[c]);
        const CheckReport rep = check_duality_chain(t);
        for (const auto& f : rep.failures)
            failures.push_back({{"seed", i}, {"identity", f.identity}, {"witness", f.witness}});
    }
    ok = failures.empty();
    return {{"check", "duality"}, {"instances", instances}, {"failures", failures}};
}

json run_suite_lemma25(std::uint64_t instances, std::uint64_t seed, bool& ok) {
    std::mt19937_64 rng(seed ^ 0x25);
    json failures = json::array();
    for (std::uint64_t i = 0; i < instances; ++i) {
        const std::uint64_t universe = 8 + rng() % 120;
        const auto space = SpaceDescriptor::lp(Exponent(2, 1), universe);
        // the injection tail needs one fresh label per vector
        const std::uint64_t n = 1 + rng() % std::min<std::uint64_t>(40, universe / 2);
        const auto fam = generate_family(random_family_config(rng, space, n, 4));
        const CheckReport rep = check_lemma25_roundtrip(fam);
        for (const auto& f : rep.failures)
            failures.push_back({{"seed", i}, {"identity", f.identity}, {"witness", f.witness}});
    }
    ok = failures.empty();
    return {{"check", "lemma25"}, {"instances", instances}, {"failures", failures}};
}

json run_suite_biorthogonal(std::uint64_t instances, std::uint64_t seed, double tol, bool& ok) {
    std::mt19937_64 rng(seed ^ 0xb10);
    json failures = json::array();
    for (std::uint64_t i = 0; i < instances; ++i) {
        const std::uint64_t universe = 4 + rng() % 37;
        const auto space = SpaceDescriptor::lp(Exponent(2, 1), universe);
        const auto fam = generate_family(
            random_family_config(rng, space, 1 + rng() % 30, 6));
        if (rank(fam) == 0) continue;
        const auto sys = markushevich(fam);
        const std::size_t k = sys.vectors.size();
        bool bad = false;
        for (std::size_t a = 0; a < k && !bad; ++a)
            for (std::size_t b = 0; b < k && !bad; ++b)
                bad = pairing(sys.vectors.vectors[a], sys.functionals.vectors[b]) !=
                      Rational(a == b ? 1 : 0);
        if (k != rank(fam)) bad = true;
        // float-mode agreement
        const auto fsys = markushevich_f(to_float_family(fam));
        for (std::size_t a = 0; a < fsys.vectors.size() && !bad; ++a)
            for (std::size_t b = 0; b < fsys.vectors.size() && !bad; ++b) {
                const double v = pairing(fsys.vectors.vectors[a], fsys.functionals.vectors[b]);
                bad = std::abs(v - (a == b ? 1.0 : 0.0)) > tol;
            }
        if (bad) failures.push_back({{"seed", i}, {"identity", "biorthogonality"}, {"witness", ""}});
    }
    ok = failures.empty();
    return {{"check", "biorthogonal"}, {"instances", instances}, {"failures", failures}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-scale constructions on sparse lp/c0 models"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--space", g.space, "space kind: lp or c0");
    app.add_option("--p", g.p, "exponent p as NUM/DEN");
    app.add_option("--mode", g.mode, "oracle (exact) or float");
    app.add_option("--tol", g.tol, "float-mode tolerance");
    app.add_option("--seed", g.seed, "rng seed");
    app.add_option("--out", g.out, "write primary JSON output here instead of stdout");
    app.add_option("--format", g.format, "family ingestion format: jsonl or csv");
    app.add_option("--threads", g.threads, "cap on internal parallelism");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random family file");
    std::uint64_t gen_n = 10, gen_universe = 100;
    std::string gen_support = "fixed:4";
    std::int64_t num_lo = -8, num_hi = 8, den_max = 8;
    gen->add_option("--n", gen_n, "number of vectors");
    gen->add_option("--universe", gen_universe, "universe size");
    gen->add_option("--support", gen_support, "fixed:K or geom:MEAN");
    gen->add_option("--num-lo", num_lo);
    gen->add_option("--num-hi", num_hi);
    gen->add_option("--den-max", den_max);

    // partition
    auto* partition = app.add_subcommand("partition", "disjoint-support partition of a family");
    std::string part_in, part_algo = "equivrel";
    partition->add_option("file", part_in, "family file")->required();
    partition->add_option("--algo", part_algo, "equivrel | graph | both");

    // build
    auto* build = app.add_subcommand("build", "construct an operator with certificate");
    std::string build_in, build_mode;
    build->add_option("file", build_in, "family file")->required();
    build->add_option("--construction", build_mode, "dense-image | kernel-duality | kernel-quotient")
        ->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::uint64_t instances = 100;
    std::string v_operator, v_family;
    verify->add_option("suite", suite, "duality | lemma25 | biorthogonal | all | kernel")->required();
    verify->add_option("--instances", instances, "number of random instances");
    verify->add_option("--operator", v_operator, "operator JSON file (suite=kernel)");
    verify->add_option("--family", v_family, "family file (suite=kernel)");

    // bench
    auto* bench = app.add_subcommand("bench", "time the partition engine");
    std::uint64_t bench_n = 1000, bench_universe = 100000;
    std::string bench_support = "geom:8", bench_algo = "equivrel";
    bench->add_option("--n", bench_n, "number of vectors");
    bench->add_option("--universe", bench_universe, "universe size");
    bench->add_option("--support", bench_support, "fixed:K or geom:MEAN");
    bench->add_option("--algo", bench_algo, "equivrel | graph");

    try {
        app.parse(argc, argv);

        if (*gen) {
            GenConfig cfg;
            cfg.space = parse_space(g, gen_universe);
            cfg.n_vectors = gen_n;
            cfg.num_lo = num_lo;
            cfg.num_hi = num_hi;
            cfg.den_max = den_max;
            cfg.seed = g.seed;
            cfg = parse_support_dist(cfg, gen_support);
            const auto fam = generate_family(cfg);
            std::ostringstream buf;
            if (g.mode == "float")
                write_family_jsonl(buf, to_float_family(fam));
            else
                write_family_jsonl(buf, fam);
            if (!g.out.empty()) {
                std::ofstream os(g.out);
                if (!os) throw std::invalid_argument("cannot open output file: " + g.out);
                os << buf.str();
            } else {
                std::cout << buf.str();
            }
            std::cerr << "generated " << gen_n << " vectors over universe " << gen_universe << '\n';
            return kExitOk;
        }

        if (*partition) {
            const auto fam = load_family(part_in, g, 0);
            reject_zero_lines(fam);
            const SupportFamily sf = SupportFamily::of(fam);
            ComponentDecomposition comp;
            bool agree = true;
            if (part_algo == "equivrel") {
                comp = components_equivrel(sf);
            } else if (part_algo == "graph") {
                comp = components_graph(sf);
            } else if (part_algo == "both") {
                comp = components_equivrel(sf);
                agree = comp == components_graph(sf);
            } else {
                throw std::invalid_argument("--algo must be equivrel, graph, or both");
            }
            const auto part = disjoint_partition(sf, comp);
            json payload{{"report", json::parse(partition_report(sf, comp, part))},
                         {"groups", groups_to_json(part)}};
            if (part_algo == "both") payload["algorithms_agree"] = agree;
            emit(g, payload, "partitioned " + std::to_string(sf.size()) + " vectors into " +
                                 std::to_string(part.groups.size()) + " groups" +
                                 (part_algo == "both"
                                      ? std::string("; algorithms agree: ") + (agree ? "true" : "false")
                                      : ""));
            return agree ? kExitOk : kExitVerifyFailure;
        }

        if (*build) {
            const auto fam = load_family(build_in, g, 0);
            json payload;
            bool certified = false;
            if (build_mode == "dense-image") {
                const auto nz = fam.without_zeros();
                const SupportFamily sf = SupportFamily::of(nz);
                const auto comp = components_equivrel(sf);
                const auto part = disjoint_partition(sf, comp);
                const auto theta = InjectionMap::tail_allocator(part, fam.space);
                const auto built = dense_image_operator(nz, part, theta);
                const std::size_t r = rank(built.op), d = rank(nz);
                certified = r == d && subspace_equal(column_space_basis(built.op), rref_basis(nz));
                payload = {{"operator", json::parse(operator_to_json(built.op))},
                           {"certificate",
                            {{"construction", "dense-image"},
                             {"rank", r},
                             {"dim_span", d},
                             {"rank_equals_dim_span", r == d},
                             {"column_space_is_span", certified},
                             {"normalizers_exact", built.normalizers_exact}}}};
            } else if (build_mode == "kernel-duality" || build_mode == "kernel-quotient") {
                const LinearOperator<Rational> t =
                    build_mode == "kernel-duality" ? kernel_operator_via_duality(fam)
                                                   : kernel_operator_via_quotient(fam, fam.space);
                certified = subspace_equal(kernel_basis(t), rref_basis(fam));
                payload = {{"operator", json::parse(operator_to_json(t))},
                           {"certificate",
                            {{"construction", build_mode},
                             {"kernel_equals_span", certified},
                             {"kernel_dim", kernel_basis(t).dim()}}}};
            } else {
                throw std::invalid_argument(
                    "--construction must be dense-image, kernel-duality, or kernel-quotient");
            }
            emit(g, payload, std::string("certificate: ") + (certified ? "exact" : "FAILED"));
            return certified ? kExitOk : kExitVerifyFailure;
        }

        if (*verify) {
            if (suite == "kernel") {
                if (v_operator.empty() || v_family.empty())
                    throw std::invalid_argument("verify kernel needs --operator and --family");
                std::ifstream ois(v_operator);
                if (!ois) throw std::invalid_argument("cannot open operator file: " + v_operator);
                std::stringstream buf;
                buf << ois.rdbuf();
                const auto t = operator_from_json(buf.str());
                const auto fam = load_family(v_family, g, 0);
                const bool okk = subspace_equal(kernel_basis(t), rref_basis(fam));
                json payload{{"check", "kernel"},
                             {"instances", 1},
                             {"failures", json::array()}};
                if (!okk)
                    payload["failures"].push_back(
                        {{"identity", "ker T = span Y"},
                         {"witness", {{"kernel_dim", kernel_basis(t).dim()},
                                      {"span_dim", rref_basis(fam).dim()}}}});
                emit(g, payload, okk ? "kernel certificate: exact" : "kernel certificate: FAILED");
                return okk ? kExitOk : kExitVerifyFailure;
            }
            bool all_ok = true;
            json reports = json::array();
            if (suite == "duality" || suite == "all") {
                bool okk = true;
                reports.push_back(run_suite_duality(instances, g.seed, okk));
                all_ok = all_ok && okk;
            }
            if (suite == "lemma25" || suite == "all") {
                bool okk = true;
                reports.push_back(run_suite_lemma25(instances, g.seed, okk));
                all_ok = all_ok && okk;
            }
            if (suite == "biorthogonal" || suite == "all") {
                bool okk = true;
                reports.push_back(run_suite_biorthogonal(instances, g.seed, 1e-10, okk));
                all_ok = all_ok && okk;
            }
            if (reports.empty()) throw std::invalid_argument("unknown suite: " + suite);
            emit(g, json{{"suites", reports}},
                 std::string("verify ") + suite + ": " + (all_ok ? "all passed" : "FAILURES"));
            return all_ok ? kExitOk : kExitVerifyFailure;
        }

        if (*bench) {
            GenConfig cfg;
            cfg.space = parse_space(g, bench_universe);
            cfg.n_vectors = bench_n;
            cfg.seed = g.seed;
            cfg = parse_support_dist(cfg, bench_support);
            using clock = std::chrono::steady_clock;
            const auto t0 = clock::now();
            const auto sf = generate_supports(cfg);
            const auto t1 = clock::now();
            const auto idx = build_incidence(sf);
            const auto t2 = clock::now();
            const auto comp = bench_algo == "graph" ? components_graph(sf) : components_equivrel(sf);
            const auto t3 = clock::now();
            const auto part = disjoint_partition(sf, comp);
            const auto t4 = clock::now();
            const auto ms = [](auto a, auto b) {
                return std::chrono::duration<double, std::milli>(b - a).count();
            };
            const double partition_ms = ms(t1, t4);
            char hashbuf[19];
            std::snprintf(hashbuf, sizeof hashbuf, "0x%016llx",
                          static_cast<unsigned long long>(partition_hash(part)));
            json payload{{"n_vectors", bench_n},
                         {"universe_size", bench_universe},
                         {"n_groups", part.groups.size()},
                         {"n_components", comp.components.size()},
                         {"wall_ms",
                          {{"generate", ms(t0, t1)},
                           {"incidence", ms(t1, t2)},
                           {"components", ms(t2, t3)},
                           {"partition", ms(t3, t4)},
                           {"total_partition", partition_ms}}},
                         {"throughput_vectors_per_s",
                          partition_ms > 0 ? 1000.0 * double(bench_n) / partition_ms : 0.0},
                         {"partition_hash", hashbuf}};
            emit(g, payload,
                 "partitioned " + std::to_string(bench_n) + " vectors in " +
                     std::to_string(partition_ms) + " ms");
            return kExitOk;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return kExitOk;  // --help
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
