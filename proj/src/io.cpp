#include "lpkern/io.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lpkern {

namespace {

nlohmann::json space_header(const SpaceDescriptor& sp) {
    return {{"space", sp.kind == SpaceKind::Lp ? "lp" : "c0"},
            {"p", {sp.p.num, sp.p.den}},
            {"universe_size", sp.universe_size}};
}

SpaceDescriptor parse_space_header(const std::string& line) {
    const nlohmann::json j = nlohmann::json::parse(line);
    const std::string kind = j.at("space").get<std::string>();
    const std::uint64_t n = j.at("universe_size").get<std::uint64_t>();
    if (kind == "c0") return SpaceDescriptor::c0(n);
    if (kind != "lp") throw std::invalid_argument("family header: unknown space kind");
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

void write_family_jsonl(std::ostream& os, const VectorFamily<Rational>& fam) {
    os << space_header(fam.space).dump() << '\n';
    for (std::size_t i = 0; i < fam.size(); ++i) {
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& [lab, val] : fam.vectors[i].entries)
            coords.push_back({lab, int_to_json(boost::multiprecision::numerator(val)),
                              int_to_json(boost::multiprecision::denominator(val))});
        os << nlohmann::json{{"id", fam.ids[i]}, {"coords", coords}}.dump() << '\n';
    }
}

void write_family_jsonl(std::ostream& os, const VectorFamily<double>& fam) {
    os << space_header(fam.space).dump() << '\n';
    for (std::size_t i = 0; i < fam.size(); ++i) {
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& [lab, val] : fam.vectors[i].entries) coords.push_back({lab, val});
        os << nlohmann::json{{"id", fam.ids[i]}, {"coords", coords}}.dump() << '\n';
    }
}

VectorFamily<Rational> read_family_jsonl(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("family file: missing header");
    VectorFamily<Rational> fam(parse_space_header(line));
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const std::exception&) {
            throw std::invalid_argument("family file: bad JSON on line " + std::to_string(lineno));
        }
        std::vector<std::pair<Label, Rational>> entries;
        for (const auto& c : j.at("coords")) {
            const Label lab = c.at(0).get<Label>();
            if (c.size() == 3)
                entries.emplace_back(lab,
                                     make_rational(int_from_json(c.at(1)), int_from_json(c.at(2))));
            else
                entries.emplace_back(lab, Rational(c.at(1).get<double>()));
        }
        fam.push_back(j.at("id").get<VectorId>(),
                      SparseVector<Rational>::from_entries(std::move(entries)));
    }
    return fam;
}

VectorFamily<Rational> read_family_csv(std::istream& is, const SpaceDescriptor& space) {
    VectorFamily<Rational> fam(space);
    std::string line;
    std::size_t lineno = 0;
    VectorId cur_id = 0;
    bool have_cur = false;
    std::vector<std::pair<Label, Rational>> entries;
    const auto flush = [&] {
        if (!have_cur) return;
        fam.push_back(cur_id, SparseVector<Rational>::from_entries(std::move(entries)));
        entries.clear();
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line == "id,label,num,den") continue;
        std::istringstream ss(line);
        std::string tok;
        std::uint64_t fields[4];
        std::int64_t sfields[4];
        for (int f = 0; f < 4; ++f) {
            if (!std::getline(ss, tok, ','))
                throw std::invalid_argument("csv: short row on line " + std::to_string(lineno));
            sfields[f] = std::stoll(tok);
            fields[f] = static_cast<std::uint64_t>(sfields[f]);
        }
        const auto id = static_cast<VectorId>(fields[0]);
        if (!have_cur || id != cur_id) {
            flush();
            cur_id = id;
            have_cur = true;
        }
        entries.emplace_back(static_cast<Label>(fields[1]), make_rational(Int(sfields[2]), Int(sfields[3])));
    }
    flush();
    return fam;
}

VectorFamily<double> to_float_family(const VectorFamily<Rational>& fam) {
    VectorFamily<double> out(fam.space);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        std::vector<std::pair<Label, double>> entries;
        for (const auto& [lab, val] : fam.vectors[i].entries)
            entries.emplace_back(lab, to_double(val));
        out.push_back(fam.ids[i], SparseVector<double>::from_entries(std::move(entries)));
    }
    return out;
}

}  // namespace lpkern
