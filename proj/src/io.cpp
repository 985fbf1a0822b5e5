#include "nilclean/io.hpp"

#include <iomanip>
#include <ostream>

namespace nilclean {

Json ring_to_json(const RingTable& r) {
    const std::size_t n = r.order();
    Json add = Json::array(), mul = Json::array();
    for (std::size_t a = 0; a < n; ++a) {
        Json add_row = Json::array(), mul_row = Json::array();
        for (std::size_t b = 0; b < n; ++b) {
            add_row.push_back(r.add_table()[a * n + b].index);
            mul_row.push_back(r.mul_table()[a * n + b].index);
        }
        add.push_back(std::move(add_row));
        mul.push_back(std::move(mul_row));
    }
    return Json{{"order", n},          {"zero", r.zero().index}, {"one", r.one().index},
                {"add", std::move(add)}, {"mul", std::move(mul)},  {"label", r.label()}};
}

namespace {

bool is_natural(const Json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::vector<ElementId> read_table(const Json& j, const char* key, std::size_t n) {
    if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != n)
        throw MalformedTable(std::string("'") + key + "' must be an array of " +
                             std::to_string(n) + " rows");
    std::vector<ElementId> out;
    out.reserve(n * n);
    for (const Json& row : j.at(key)) {
        if (!row.is_array() || row.size() != n)
            throw MalformedTable(std::string("every '") + key + "' row must have " +
                                 std::to_string(n) + " entries");
        for (const Json& v : row) {
            if (!is_natural(v)) throw MalformedTable("table entries must be natural numbers");
            out.emplace_back(v.get<std::uint32_t>());
        }
    }
    return out;
}

std::size_t read_index(const Json& j, const char* key) {
    if (!j.contains(key) || !is_natural(j.at(key)))
        throw MalformedTable(std::string("'") + key + "' must be a natural number");
    return j.at(key).get<std::size_t>();
}

}  // namespace

RingTable ring_from_json(const Json& j, const BuildOptions& opts) {
    if (!j.is_object()) throw MalformedTable("ring JSON must be an object");
    const std::size_t n = read_index(j, "order");
    if (n == 0) throw MalformedTable("'order' must be positive");
    if (n > opts.order_cap) throw OrderCapExceeded(n, opts.order_cap);
    const auto zero = static_cast<std::uint32_t>(read_index(j, "zero"));
    const auto one = static_cast<std::uint32_t>(read_index(j, "one"));
    std::string label = j.value("label", std::string("ring"));
    RingTable ring(n, read_table(j, "add", n), read_table(j, "mul", n), ElementId(zero),
                   ElementId(one), std::move(label));
    require_valid(ring);
    return ring;
}

Json report_to_json(const CharacterizationReport& rep) {
    Json predicates = Json::object();
    for (const auto& [id, res] : rep.predicates) {
        predicates[to_string(id)] = {
            {"holds", res.holds},
            {"witness", res.witness ? Json(res.witness->index) : Json(nullptr)}};
    }
    auto names = [](const std::vector<CharacterizationId>& ids) {
        Json arr = Json::array();
        for (auto id : ids) arr.push_back(to_string(id));
        return arr;
    };
    auto word = [](const EquivalenceVerdict& v) { return v.consistent ? "consistent" : "inconsistent"; };
    return Json{
        {"ring", rep.ring},
        {"order", rep.order},
        {"classes", {{"S2NC", rep.strongly_2_nil_clean}, {"ZNC", rep.zhou_nil_clean}}},
        {"predicates", std::move(predicates)},
        {"equivalences", {{"S2NC", word(rep.s2nc)}, {"ZNC", word(rep.znc)}}},
        {"disagreements", {{"S2NC", names(rep.s2nc.disagreeing)}, {"ZNC", names(rep.znc.disagreeing)}}},
        {"separations", rep.separations},
    };
}

CharacterizationReport report_from_json(const Json& j) {
    CharacterizationReport rep;
    rep.ring = j.at("ring").get<std::string>();
    rep.order = j.at("order").get<std::size_t>();
    rep.strongly_2_nil_clean = j.at("classes").at("S2NC").get<bool>();
    rep.zhou_nil_clean = j.at("classes").at("ZNC").get<bool>();
    for (const auto& [name, value] : j.at("predicates").items()) {
        PredicateResult res;
        res.holds = value.at("holds").get<bool>();
        if (!value.at("witness").is_null()) res.witness = ElementId(value.at("witness").get<std::uint32_t>());
        rep.predicates[parse_characterization_id(name)] = res;
    }
    auto verdict = [&](const char* cls) {
        EquivalenceVerdict v;
        v.consistent = j.at("equivalences").at(cls).get<std::string>() == "consistent";
        for (const Json& name : j.at("disagreements").at(cls))
            v.disagreeing.push_back(parse_characterization_id(name.get<std::string>()));
        return v;
    };
    rep.s2nc = verdict("S2NC");
    rep.znc = verdict("ZNC");
    rep.separations = j.at("separations").get<std::map<std::string, bool>>();
    return rep;
}

Json witness_to_json(const RingTable& r, ElementId target, const Shape& shape,
                     const std::optional<DecompositionWitness>& w) {
    Json out{{"ring", r.label()}, {"element", target.index}, {"shape", to_string(shape)}};
    if (!w) {
        out["witness"] = nullptr;
        return out;
    }
    Json parts = Json::array();
    for (std::size_t i = 0; i < w->parts.size(); ++i)
        parts.push_back({{"kind", long_name(shape.parts[i])}, {"element", w->parts[i].index}});
    out["witness"] = {{"parts", std::move(parts)}, {"nilpotent", w->nilpotent.index}};
    return out;
}

namespace {

void print_group(std::ostream& os, const CharacterizationReport& rep, const char* title,
                 std::initializer_list<CharacterizationId> ids) {
    os << "  " << title << '\n';
    for (CharacterizationId id : ids) {
        const PredicateResult& res = rep.predicates.at(id);
        os << "    " << std::left << std::setw(16) << to_string(id) << (res.holds ? "true" : "false");
        if (res.witness) os << "   witness " << res.witness->index;
        os << '\n';
    }
}

void print_disagreements(std::ostream& os, const EquivalenceVerdict& v) {
    for (CharacterizationId id : v.disagreeing) os << "  disagrees with its class: " << to_string(id) << '\n';
}

}  // namespace

void print_report(std::ostream& os, const CharacterizationReport& rep) {
    using C = CharacterizationId;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    os << "ring " << rep.ring << " (order " << rep.order << ")\n";

    os << "strongly 2-nil-clean: " << yes(rep.strongly_2_nil_clean) << "  ["
       << (rep.s2nc.consistent ? "consistent" : "INCONSISTENT") << "]\n";
    print_group(os, rep, "all elements", {C::S2ncDef, C::S2ncA3, C::S2ncTripNil});
    print_group(os, rep, "square elements", {C::S2ncSq1E, C::S2ncSq2E, C::S2ncSq3E, C::S2ncSqEInv});
    print_group(os, rep, "not equivalent", {C::S2ncSq4E});
    print_disagreements(os, rep.s2nc);

    os << "Zhou nil-clean: " << yes(rep.zhou_nil_clean) << "  ["
       << (rep.znc.consistent ? "consistent" : "INCONSISTENT") << "]\n";
    print_group(os, rep, "all elements", {C::ZncDef, C::ZncA5, C::Znc5PNil});
    print_group(os, rep, "square elements",
                {C::ZncSq1T, C::ZncSq2T, C::ZncSqTInv, C::Znc7InvSq4E});
    print_group(os, rep, "not equivalent", {C::ZncSq5P});
    print_disagreements(os, rep.znc);

    os << "separations:";
    bool any = false;
    for (const auto& [name, strict] : rep.separations)
        if (strict) {
            os << ' ' << name;
            any = true;
        }
    os << (any ? "\n" : " none\n");
}

}  // namespace nilclean
