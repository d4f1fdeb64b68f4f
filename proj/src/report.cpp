#include "sidonkit/report.hpp"

#include <sstream>

#ifndef SIDONKIT_VERSION
#define SIDONKIT_VERSION "0.0.0"
#endif

namespace sidonkit {

std::string version() { return SIDONKIT_VERSION; }

Json envelope(const std::string& command, Json inputs, const std::optional<std::uint64_t>& seed, Json result)
{
    Json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    j["version"] = version();
    j["result"] = std::move(result);
    return j;
}

Json element_list(const FiniteGroup& g, const std::vector<Element>& members)
{
    Json idx = Json::array(), text = Json::array();
    for (auto a : members) {
        idx.push_back(a);
        text.push_back(g.render(a));
    }
    return Json{{"indices", idx}, {"rendered", text}};
}

Json to_json(const FiniteGroup& g, const VerifyReport& r)
{
    Json j;
    j["property"] = property_name(r.property);
    j["k"] = r.k;
    j["holds"] = r.holds;
    j["multiplicity"] = r.multiplicity;
    if (r.property == Property::SkPrime) j["cyclic"] = r.cyclic;
    Json w = nullptr;
    if (r.witness_words) {
        const auto& [u, v] = *r.witness_words;
        w = Json{{"words", Json::array({u, v})},
                 {"rendered", Json::array({element_list(g, u)["rendered"], element_list(g, v)["rendered"]})}};
    } else if (r.witness_cycle) {
        w = Json{{"cycle", *r.witness_cycle}, {"rendered", element_list(g, *r.witness_cycle)["rendered"]}};
    }
    j["witness"] = w;
    return j;
}

Json to_json(const SearchResult& r)
{
    Json j;
    j["value"] = r.value;
    j["witness"] = element_list(r.witness.group(), r.witness.members());
    j["nodes"] = r.nodes;
    j["exact"] = r.exact;
    j["budget_exhausted"] = r.budget_exhausted;
    return j;
}

Json to_json(const BoundReport& r)
{
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json inputs(e.inputs);
        entries.push_back(Json{{"name", e.name},
                               {"value", e.applicable ? Json(e.value) : Json(nullptr)},
                               {"applicable", e.applicable},
                               {"bounds", e.bounds},
                               {"inputs", inputs}});
    }
    return Json{{"order", r.order}, {"k", r.k}, {"g", r.g}, {"entries", entries}};
}

Json to_json(const PairSet& p)
{
    Json pairs = Json::array();
    for (auto a : p.base) {
        const auto b = p.factor.mul(a, p.pi);
        pairs.push_back(Json{{"index", pair_element(p.factor, a, b)},
                             {"alpha", p.factor.render(a)},
                             {"alpha_pi", p.factor.render(b)}});
    }
    return Json{{"group", p.group.label()},
                {"pi", p.factor.render(p.pi)},
                {"size", p.base.size()},
                {"claimed_g", p.claimed_g},
                {"recipe_g", p.recipe_g},
                {"members", pairs}};
}

Json to_json(const HypergraphProfile& p)
{
    Json edges = Json::object(), forms = Json::object(), f = Json::object();
    for (const auto& [r, c] : p.edge_counts) edges[std::to_string(r)] = c;
    for (const auto& [r, c] : p.form_counts) forms[std::to_string(r)] = c;
    // only the neighbourhood of k* to keep reports readable
    const std::uint32_t lo = p.k_star > 3 ? p.k_star - 3 : 1;
    for (std::uint32_t k = lo; k <= std::min(p.vertex_count, p.k_star + 3); ++k) f[std::to_string(k)] = to_string(p.f[k]);
    return Json{{"vertex_count", p.vertex_count},
                {"edge_counts", edges},
                {"form_counts", forms},
                {"f", f},
                {"k_star", p.k_star},
                {"f_k_star", to_string(p.f.at(p.k_star))},
                {"gain", to_string(p.gain)},
                {"target", p.target}};
}

Json to_json(const DegreeProfile& p)
{
    return Json{{"min_out", p.min_out},
                {"min_in", p.min_in},
                {"max_out", p.max_out},
                {"max_in", p.max_in},
                {"min_semidegree", p.min_semidegree()}};
}

Json path_json(const Path& p)
{
    Json j = Json::array();
    for (auto v : p) j.push_back(v + 1);
    return j;
}

VerifyReport verify_report_from_json(const Json& j)
{
    VerifyReport r;
    const auto prop = j.at("property").get<std::string>();
    if (prop == "Sk") r.property = Property::Sk;
    else if (prop == "SkPrime") r.property = Property::SkPrime;
    else throw std::invalid_argument("unknown property " + prop);
    r.k = j.at("k").get<unsigned>();
    r.holds = j.at("holds").get<bool>();
    r.multiplicity = j.at("multiplicity").get<std::uint64_t>();
    if (j.contains("cyclic")) r.cyclic = j.at("cyclic").get<bool>();
    const auto& w = j.at("witness");
    if (!w.is_null()) {
        if (w.contains("words")) {
            auto words = w.at("words").get<std::vector<Word>>();
            if (words.size() != 2) throw std::invalid_argument("witness needs two words");
            r.witness_words = std::make_pair(words[0], words[1]);
        } else {
            r.witness_cycle = w.at("cycle").get<Word>();
        }
    }
    return r;
}

std::string recheck_report(const Json& report)
{
    const auto command = report.at("command").get<std::string>();
    const auto& in = report.at("inputs");
    const auto group = build_group(in.at("group").get<std::string>());
    if (command == "verify") {
        const auto stored = verify_report_from_json(report.at("result"));
        ElementSet a(group, in.at("set").get<std::vector<Element>>());
        for (const auto* w : {stored.witness_words ? &stored.witness_words->first : nullptr,
                              stored.witness_words ? &stored.witness_words->second : nullptr,
                              stored.witness_cycle ? &*stored.witness_cycle : nullptr})
            if (w)
                for (auto x : *w)
                    if (!a.contains(x)) return "witness uses an element outside the set";
        if (!witness_is_valid(group, stored)) return "witness does not re-verify";
        auto again = stored.property == Property::Sk ? check_sk(a, stored.k)
                                                     : check_sk_prime(a, stored.k, stored.cyclic);
        const auto g = in.value("g", std::uint64_t{1});
        if (stored.property == Property::Sk && g > 1) again.holds = again.multiplicity <= g;
        if (again.holds != stored.holds) return "holds flag changed on re-run";
        if (again.multiplicity != stored.multiplicity) return "multiplicity changed on re-run";
        return {};
    }
    if (command == "search") {
        const auto& res = report.at("result");
        ElementSet a(group, res.at("witness").at("indices").get<std::vector<Element>>());
        if (a.size() != res.at("value").get<std::uint64_t>()) return "value differs from witness size";
        const auto k = in.at("k").get<unsigned>();
        if (in.at("prop").get<std::string>() == "skprime") {
            if (!check_sk_prime(a, k, in.value("cyclic", true)).holds) return "witness is not an S_k' set";
        } else if (sk_multiplicity(a, k) > in.value("g", std::uint64_t{1})) {
            return "witness exceeds the multiplicity bound";
        }
        return {};
    }
    return "no recheck defined for command " + command;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
    return out + "\n";
}

} // namespace sidonkit
