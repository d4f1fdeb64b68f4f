#include "sidonkit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sidonkit/bounds.hpp"
#include "sidonkit/construct.hpp"
#include "sidonkit/digraph.hpp"
#include "sidonkit/group_catalogue.hpp"
#include "sidonkit/report.hpp"
#include "sidonkit/sidon.hpp"

namespace sidonkit {

namespace {

namespace fs = std::filesystem;

struct Outcome {
    Json inputs = Json::object();
    std::optional<std::uint64_t> seed;
    Json result = Json::object();
    std::string text;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    int code = kExitOk;
};

struct Settings {
    std::string format = "json";
    std::string output;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::uint64_t> max_words;

    std::uint64_t nodes() const { return max_nodes.value_or(default_max_nodes()); }
    std::uint64_t words() const { return max_words.value_or(default_max_words()); }
    std::uint64_t seed_or_default() const { return seed.value_or(1); }
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// one element per line; blank lines and '#' comments skipped
std::string set_file_to_literal(const std::string& path)
{
    std::istringstream in(read_file(path));
    std::string line, joined;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        const auto e = line.find_last_not_of(" \t\r");
        if (!joined.empty()) joined += ',';
        joined += line.substr(b, e - b + 1);
    }
    return joined;
}

ElementSet load_set(const FiniteGroup& g, const std::string& literal, const std::string& file)
{
    if (!literal.empty() && !file.empty()) throw std::invalid_argument("give either --set or --set-file, not both");
    if (!file.empty()) return parse_element_set(g, set_file_to_literal(file));
    return parse_element_set(g, literal);
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& s)
{
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected two comma-separated integers, got '" + s + "'");
    return {std::stoull(s.substr(0, comma)), std::stoull(s.substr(comma + 1))};
}

std::vector<Vertex> parse_path(const std::string& s)
{
    std::vector<Vertex> p;
    for (const auto& tok : split_element_list(s)) {
        const auto v = std::stoull(tok);
        if (v == 0) throw std::invalid_argument("vertices are 1-indexed");
        p.push_back(static_cast<Vertex>(v - 1));
    }
    return p;
}

// "1/10", "0.1" or "1"
Rational parse_rational(const std::string& s)
{
    if (auto slash = s.find('/'); slash != std::string::npos)
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    if (auto dot = s.find('.'); dot != std::string::npos) {
        const auto frac = s.substr(dot + 1);
        const auto whole = s.substr(0, dot);
        return Rational(BigInt((whole.empty() ? "0" : whole) + frac), power(BigInt(10), static_cast<unsigned>(frac.size())));
    }
    return Rational(BigInt(s));
}

// "1>2>3<1": '>' steps along an arc, '<' against one
ClosedWalk parse_walk(const std::string& s)
{
    ClosedWalk w;
    std::vector<Vertex> vs;
    std::vector<bool> dirs;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("malformed walk '" + s + "'");
        const auto v = std::stoull(cur);
        if (v == 0) throw std::invalid_argument("vertices are 1-indexed");
        vs.push_back(static_cast<Vertex>(v - 1));
        cur.clear();
    };
    for (char c : s) {
        if (c == '>' || c == '<') {
            flush();
            dirs.push_back(c == '>');
        } else if (c != ' ') {
            cur += c;
        }
    }
    flush();
    if (vs.size() < 2 || vs.front() != vs.back()) throw std::invalid_argument("walk must return to its first vertex");
    vs.pop_back();
    w.vertices = std::move(vs);
    w.forward = std::move(dirs);
    return w;
}

Json perm_list(const std::vector<Permutation>& perms)
{
    Json j = Json::array();
    for (const auto& p : perms) j.push_back(p.to_cycles());
    return j;
}

std::string set_summary(const FiniteGroup& g, const std::vector<Element>& members)
{
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) s += (i ? ", " : "") + g.render(members[i]);
    return s + "}";
}

std::vector<std::vector<std::string>> element_rows(const FiniteGroup& g, const std::vector<Element>& members)
{
    std::vector<std::vector<std::string>> rows;
    for (auto a : members) rows.push_back({std::to_string(a), g.render(a)});
    return rows;
}

std::string digraph_text(const Digraph& d)
{
    std::ostringstream ss;
    write_digraph(d, ss);
    return ss.str();
}

std::string emit(const std::string& command, const Settings& s, const Outcome& o)
{
    if (s.format == "json") return envelope(command, o.inputs, o.seed, o.result).dump(2) + "\n";
    if (s.format == "text") return o.text.empty() ? o.result.dump(2) + "\n" : o.text;
    std::string out = "# command: " + command + "\n# version: " + version() + "\n# seed: " +
                      (o.seed ? std::to_string(*o.seed) : "none") + "\n# inputs: " + o.inputs.dump() + "\n";
    if (o.csv_header.empty()) {
        out += csv_row({"key", "value"});
        for (const auto& [k, v] : o.result.items()) out += csv_row({k, v.is_string() ? v.get<std::string>() : v.dump()});
        return out;
    }
    out += csv_row(o.csv_header);
    for (const auto& r : o.csv_rows) out += csv_row(r);
    return out;
}

bool is_table_file(const fs::path& p) { return p.extension() == ".tbl"; }

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Sidon-type sets in finite groups and C_{l,l}-free digraphs", "sidonkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", version());

    Settings st;
    app.add_option("--format", st.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", st.output, "write the report here instead of stdout");
    app.add_option("--seed", st.seed, "seed for randomized commands");
    app.add_option("--max-nodes", st.max_nodes, "search node budget");
    app.add_option("--max-words", st.max_words, "verifier word budget");

    // shared option storage; each leaf binds what it needs
    std::string group_spec, set_lit, set_file, a_lit, b_lit, prop = "sk", graph_file, named, kind = "second";
    std::string glm_lm, kmm_text, eps_text = "1/10", walk_text, add_arc, p_text, q_text, dir, specs, perms_text;
    unsigned k = 2;
    std::uint64_t g_mult = 1, stop_at = 0, max_tries = 1000, max_attempts = 1000;
    std::uint32_t n = 0, point = 1, t = 0, v = 0, q = 0, rowsum = 0, l = 0, m = 0, r = 0, h = 0, size_m = 0, degree = 0;
    bool full = false, alternating = false, noncyclic = false, with_bounds = false, bounds_only = false,
         labels = false, direct = false, no_identity = false;

    std::vector<std::pair<CLI::App*, std::function<Outcome()>>> leaves;
    std::map<CLI::App*, std::string> names;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& full_name) {
        auto* sub = parent->add_subcommand(name, help);
        names[sub] = full_name;
        return sub;
    };
    auto bind = [&](CLI::App* sub, std::function<Outcome()> fn) { leaves.emplace_back(sub, std::move(fn)); };
    auto need_group = [](CLI::App* sub, std::string& spec) { sub->add_option("--group", spec, "group spec")->required(); };

    // ---- group ----
    auto* grp = app.add_subcommand("group", "inspect a group");
    grp->require_subcommand(1);
    {
        auto* s = leaf(grp, "info", "order, class count, involutions, axiom check", "group info");
        need_group(s, group_spec);
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            const auto ax = check_group_axioms(g);
            o.inputs = {{"group", group_spec}};
            o.result = {{"label", g.label()},
                        {"order", g.order()},
                        {"abelian", is_abelian(g)},
                        {"involutions", count_involutions(g)},
                        {"classes", conjugacy_classes(g).size()},
                        {"axioms_ok", ax.ok()},
                        {"axioms_exhaustive", ax.exhaustive}};
            o.text = g.label() + ": order " + std::to_string(g.order()) + ", " +
                     (o.result["abelian"].get<bool>() ? "abelian" : "nonabelian") + ", " +
                     o.result["classes"].dump() + " classes, " + o.result["involutions"].dump() + " involutions\n";
            return o;
        });
    }
    {
        auto* s = leaf(grp, "elements", "list elements with their indices", "group elements");
        need_group(s, group_spec);
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            std::vector<Element> all(g.order());
            for (Element a = 0; a < g.order(); ++a) all[a] = a;
            o.inputs = {{"group", group_spec}};
            o.result = element_list(g, all);
            o.csv_header = {"index", "element"};
            o.csv_rows = element_rows(g, all);
            for (const auto& row : o.csv_rows) o.text += row[0] + " " + row[1] + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(grp, "multiply", "product a*b (a after b)", "group multiply");
        need_group(s, group_spec);
        s->add_option("--a", a_lit)->required();
        s->add_option("--b", b_lit)->required();
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            const auto x = g.parse_element(a_lit), y = g.parse_element(b_lit), z = g.multiply(x, y);
            o.inputs = {{"group", group_spec}, {"a", a_lit}, {"b", b_lit}};
            o.result = {{"index", z}, {"rendered", g.render(z)}};
            o.text = g.render(z) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(grp, "inverse", "inverse of a", "group inverse");
        need_group(s, group_spec);
        s->add_option("--a", a_lit)->required();
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            const auto z = g.inverse(g.parse_element(a_lit));
            o.inputs = {{"group", group_spec}, {"a", a_lit}};
            o.result = {{"index", z}, {"rendered", g.render(z)}};
            o.text = g.render(z) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(grp, "order", "order of a", "group order");
        need_group(s, group_spec);
        s->add_option("--a", a_lit)->required();
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            const auto ord = element_order(g, g.parse_element(a_lit));
            o.inputs = {{"group", group_spec}, {"a", a_lit}};
            o.result = {{"order", ord}};
            o.text = std::to_string(ord) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(grp, "class", "conjugacy class of a", "group class");
        need_group(s, group_spec);
        s->add_option("--a", a_lit)->required();
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            const auto c = conjugacy_class(g, g.parse_element(a_lit));
            o.inputs = {{"group", group_spec}, {"a", a_lit}};
            o.result = element_list(g, c.members());
            o.result["size"] = c.size();
            o.csv_header = {"index", "element"};
            o.csv_rows = element_rows(g, c.members());
            o.text = set_summary(g, c.members()) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(grp, "stabilizer", "permutations of {1..n} fixing a point", "group stabilizer");
        s->add_option("--n", n)->required();
        s->add_option("--point", point, "1-indexed point");
        s->add_flag("--alternating", alternating);
        bind(s, [&] {
            Outcome o;
            if (point == 0) throw std::invalid_argument("points are 1-indexed");
            const auto set = point_stabilizer_subset(n, alternating, point - 1);
            o.inputs = {{"n", n}, {"point", point}, {"alternating", alternating}};
            o.result = element_list(set.group(), set.members());
            o.result["size"] = set.size();
            o.csv_header = {"index", "element"};
            o.csv_rows = element_rows(set.group(), set.members());
            o.text = set_summary(set.group(), set.members()) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(grp, "os-params", "prime p and m with (p-1)k = n for an os group", "group os-params");
        s->add_option("--n", n)->required();
        s->add_option("--k", k);
        bind(s, [&] {
            Outcome o;
            o.inputs = {{"n", n}, {"k", k}};
            if (const auto p = find_os_parameters(n, k)) {
                o.result = {{"found", true}, {"p", p->p}, {"m", p->m}, {"spec", "os:" + std::to_string(p->p) + "," + std::to_string(k)}};
                o.text = "os:" + std::to_string(p->p) + "," + std::to_string(k) + "\n";
            } else {
                o.result = {{"found", false}};
                o.text = "none\n";
            }
            return o;
        });
    }
    {
        auto* s = leaf(grp, "catalogue", "write multiplication tables of all groups of order <= 16", "group catalogue");
        s->add_option("--dir", dir)->required();
        bind(s, [&] {
            Outcome o;
            fs::create_directories(dir);
            Json files = Json::array();
            for (const auto& e : small_group_catalogue()) {
                const auto path = (fs::path(dir) / (e.name + ".tbl")).string();
                write_group_table(e.group, path);
                files.push_back(e.name);
                o.csv_rows.push_back({e.name, std::to_string(e.group.order())});
            }
            o.inputs = {{"dir", dir}};
            o.result = {{"written", files}, {"count", files.size()}};
            o.csv_header = {"name", "order"};
            o.text = std::to_string(files.size()) + " tables written to " + dir + "\n";
            return o;
        });
    }

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "check the S_k, S_k[g] or S_k' property of a set");
    names[ver] = "verify";
    ver->add_option("--group", group_spec, "group spec");
    ver->add_option("--set", set_lit, "comma-separated elements");
    ver->add_option("--set-file", set_file, "one element per line");
    ver->add_option("--degree", degree, "treat --set as permutations of {1..degree} without building S_n");
    ver->add_option("--prop", prop)->check(CLI::IsMember({"sk", "skprime"}));
    ver->add_option("--k", k);
    ver->add_option("--g", g_mult, "allowed representations per element (sk only)");
    ver->add_flag("--noncyclic", noncyclic, "S_k' with only i <= k-1 adjacency");
    bind(ver, [&] {
        Outcome o;
        if (degree > 0) {
            if (prop != "sk") throw std::invalid_argument("--degree works with --prop sk only");
            std::vector<Permutation> perms;
            const auto text = set_file.empty() ? set_lit : set_file_to_literal(set_file);
            for (const auto& tok : split_element_list(text)) perms.push_back(Permutation::parse(tok, degree));
            std::sort(perms.begin(), perms.end());
            perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
            auto rep = check_sk(perms, k, st.words());
            if (g_mult > 1) {
                rep.holds = rep.multiplicity <= g_mult;
                if (rep.holds) rep.witness_words.reset();
            }
            o.inputs = {{"degree", degree}, {"set", perm_list(perms)}, {"prop", prop}, {"k", k}, {"g", g_mult}};
            o.result = {{"property", property_name(rep.property)}, {"k", rep.k}, {"holds", rep.holds},
                        {"multiplicity", rep.multiplicity}, {"size", perms.size()}};
            Json w = nullptr;
            if (rep.witness_words) w = Json{{"words", Json::array({rep.witness_words->first, rep.witness_words->second})}};
            o.result["witness"] = w;
            o.text = std::string(rep.holds ? "holds" : "fails") + " (multiplicity " + std::to_string(rep.multiplicity) + ")\n";
            o.code = rep.holds ? kExitOk : kExitViolation;
            return o;
        }
        if (group_spec.empty()) throw std::invalid_argument("verify needs --group (or --degree)");
        const auto g = build_group(group_spec);
        const auto a = load_set(g, set_lit, set_file);
        VerifyReport rep;
        if (prop == "sk") {
            rep = check_sk(a, k, st.words());
            if (g_mult > 1) {
                rep.holds = rep.multiplicity <= g_mult;
                if (rep.holds) rep.witness_words.reset();
            }
        } else {
            rep = check_sk_prime(a, k, !noncyclic, st.words());
        }
        o.inputs = {{"group", group_spec}, {"set", a.members()}, {"prop", prop}, {"k", k}, {"g", g_mult},
                    {"cyclic", !noncyclic}};
        o.result = to_json(g, rep);
        o.result["size"] = a.size();
        o.text = std::string(rep.holds ? "holds" : "fails") + " (multiplicity " + std::to_string(rep.multiplicity) + ")\n";
        if (!rep.holds && o.result["witness"].contains("rendered")) o.text += "witness: " + o.result["witness"]["rendered"].dump() + "\n";
        o.code = rep.holds ? kExitOk : kExitViolation;
        return o;
    });

    // ---- search ----
    auto* sea = app.add_subcommand("search", "largest S_k, S_k[g] or S_k' set by branch and bound");
    names[sea] = "search";
    need_group(sea, group_spec);
    sea->add_option("--prop", prop)->check(CLI::IsMember({"sk", "skprime"}));
    sea->add_option("--k", k);
    sea->add_option("--g", g_mult);
    sea->add_option("--stop-at", stop_at, "stop once a set of this size is found");
    sea->add_flag("--noncyclic", noncyclic);
    sea->add_flag("--no-identity", no_identity, "only sets avoiding the identity");
    sea->add_flag("--bounds", with_bounds, "also report the upper bounds");
    sea->add_flag("--bounds-only", bounds_only, "report upper bounds without searching");
    bind(sea, [&] {
        Outcome o;
        const auto g = build_group(group_spec);
        o.inputs = {{"group", group_spec}, {"prop", prop}, {"k", k}, {"g", g_mult}, {"cyclic", !noncyclic},
                    {"stop_at", stop_at}, {"no_identity", no_identity}, {"max_nodes", st.nodes()}};
        std::string text;
        if (with_bounds || bounds_only) {
            const auto br = upper_bound_report(g, k, g_mult);
            o.result["bounds"] = to_json(br);
            o.csv_header = {"bound", "value", "applicable", "bounds"};
            for (const auto& e : br.entries) {
                o.csv_rows.push_back({e.name, e.applicable ? std::to_string(e.value) : "", e.applicable ? "1" : "0", e.bounds});
                if (e.applicable) text += e.name + " <= " + std::to_string(e.value) + " (" + e.bounds + ")\n";
            }
        }
        if (!bounds_only) {
            SearchOptions opts;
            opts.max_nodes = st.nodes();
            opts.stop_at = stop_at;
            opts.exclude_identity = no_identity;
            const auto res = prop == "sk" ? max_sk(g, k, g_mult, opts) : max_sk_prime(g, k, !noncyclic, opts);
            o.result["search"] = to_json(res);
            o.result["value"] = res.value;
            o.result["witness"] = o.result["search"]["witness"];
            text = std::to_string(res.value) + (res.exact ? "" : " (lower bound)") + " " +
                   set_summary(g, res.witness.members()) + "\n" + text;
            if (o.csv_header.empty()) {
                o.csv_header = {"index", "element"};
                o.csv_rows = element_rows(g, res.witness.members());
            }
            if (res.budget_exhausted) o.code = kExitBudget;
        }
        o.text = text;
        return o;
    });

    // ---- construct ----
    auto* con = app.add_subcommand("construct", "explicit and randomized constructions");
    con->require_subcommand(1);
    auto pair_outcome = [](const PairSet& ps, Outcome& o, std::uint64_t max_words) {
        const auto measured = sk_multiplicity(ps.members, 2, max_words);
        o.result = to_json(ps);
        o.result["measured_g"] = measured;
        o.result["claim_holds"] = measured <= ps.claimed_g;
        o.csv_header = {"index", "alpha", "alpha_pi"};
        for (auto a : ps.base) {
            const auto b = ps.factor.mul(a, ps.pi);
            o.csv_rows.push_back({std::to_string(pair_element(ps.factor, a, b)), ps.factor.render(a), ps.factor.render(b)});
        }
        o.text = std::to_string(ps.base.size()) + " pairs in " + ps.group.label() + ", claimed g " +
                 std::to_string(ps.claimed_g) + ", measured g " + std::to_string(measured) + "\n";
        if (measured > ps.claimed_g) o.code = kExitViolation;
    };
    {
        auto* s = leaf(con, "sn-cross", "{(alpha, alpha pi)} in S_n x S_n or A_n x A_n", "construct sn-cross");
        s->add_option("--n", n)->required();
        s->add_flag("--full", full, "all of S_n instead of the stabilizer of 1");
        s->add_flag("--alternating", alternating);
        bind(s, [&] {
            Outcome o;
            const auto ps = sn_cross(n, full, alternating);
            pair_outcome(ps, o, st.words());
            o.inputs = {{"n", n}, {"full", full}, {"alternating", alternating}};
            return o;
        });
    }
    {
        auto* s = leaf(con, "recipe", "{(alpha, alpha pi) : alpha in base}", "construct recipe");
        need_group(s, group_spec);
        s->add_option("--pi", a_lit)->required();
        s->add_option("--base", set_lit);
        s->add_option("--base-file", set_file);
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            const auto ps = conjugacy_recipe(g, g.parse_element(a_lit), load_set(g, set_lit, set_file));
            pair_outcome(ps, o, st.words());
            o.inputs = {{"group", group_spec}, {"pi", a_lit}, {"base", ps.base}};
            return o;
        });
    }
    {
        auto* s = leaf(con, "class", "recipe over the conjugacy class of a", "construct class");
        need_group(s, group_spec);
        s->add_option("--a", a_lit)->required();
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            const auto ps = class_recipe(g, g.parse_element(a_lit));
            pair_outcome(ps, o, st.words());
            o.inputs = {{"group", group_spec}, {"a", a_lit}};
            return o;
        });
    }
    {
        auto* s = leaf(con, "permanent-lift", "permutations pi with pi(x) in xA", "construct permanent-lift");
        need_group(s, group_spec);
        s->add_option("--set", set_lit);
        s->add_option("--set-file", set_file);
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            const auto a = load_set(g, set_lit, set_file);
            const auto mat = cayley_matrix(a);
            const auto perm = ryser_permanent(mat);
            const auto lifted = permanent_lift(a);
            const auto rep = check_sk(std::span<const Permutation>(lifted), 2, st.words());
            const auto ef = ef_bound(g.size(), static_cast<std::uint32_t>(a.size()));
            o.inputs = {{"group", group_spec}, {"set", a.members()}};
            o.result = {{"permanent", to_string(perm)},
                        {"count", lifted.size()},
                        {"ef_bound", to_string(ef)},
                        {"meets_ef_bound", Rational(perm) >= ef},
                        {"s2_holds", rep.holds},
                        {"degree", g.size()},
                        {"permutations", perm_list(lifted)}};
            o.csv_header = {"permutation"};
            for (const auto& p : lifted) o.csv_rows.push_back({p.to_cycles()});
            o.text = std::to_string(lifted.size()) + " permutations of degree " + std::to_string(g.size()) +
                     ", permanent " + to_string(perm) + ", S_2 " + (rep.holds ? "holds" : "fails") + "\n";
            if (!rep.holds) o.code = kExitViolation;
            return o;
        });
    }
    {
        auto* s = leaf(con, "hamilton-lift", "respected Hamilton cycles of a random orientation", "construct hamilton-lift");
        s->add_option("--graph", graph_file, "edge list file");
        s->add_option("--named", named)->check(CLI::IsMember({"petersen", "dodecahedron"}));
        s->add_option("--k", k);
        bind(s, [&] {
            Outcome o;
            if (graph_file.empty() == named.empty()) throw std::invalid_argument("give exactly one of --graph or --named");
            const auto graph = !named.empty() ? (named == "petersen" ? petersen_graph() : dodecahedron_graph())
                                              : read_edge_list(graph_file);
            o.seed = st.seed_or_default();
            const auto res = hamilton_lift(graph, k, *o.seed, st.nodes());
            const auto rep = check_sk(std::span<const Permutation>(res.permutations), k, st.words());
            o.inputs = {{"graph", named.empty() ? graph_file : named}, {"k", k}};
            o.result = {{"hamilton_cycles", res.hamilton_cycles},
                        {"count", res.permutations.size()},
                        {"sk_holds", rep.holds},
                        {"permutations", perm_list(res.permutations)}};
            o.csv_header = {"permutation"};
            for (const auto& p : res.permutations) o.csv_rows.push_back({p.to_cycles()});
            o.text = std::to_string(res.permutations.size()) + " of " + std::to_string(res.hamilton_cycles) +
                     " Hamilton cycles respected\n";
            if (!rep.holds) o.code = kExitViolation;
            return o;
        });
    }
    {
        auto* s = leaf(con, "probabilistic", "random deletion on the violation hypergraph", "construct probabilistic");
        s->add_option("--group", group_spec);
        s->add_option("--kind", kind)->check(CLI::IsMember({"first", "second"}));
        s->add_option("--base", set_lit);
        s->add_option("--base-file", set_file);
        s->add_option("--anticommuting", n, "use the cycle base of A:n (first kind)");
        s->add_option("--attempts", max_attempts);
        bind(s, [&] {
            Outcome o;
            std::optional<ElementSet> base;
            FiniteGroup g;
            if (n > 0) {
                base = anticommuting_base(n);
                g = base->group();
                group_spec = "A:" + std::to_string(n);
            } else {
                if (group_spec.empty()) throw std::invalid_argument("probabilistic needs --group or --anticommuting");
                g = build_group(group_spec);
                if (!set_lit.empty() || !set_file.empty()) base = load_set(g, set_lit, set_file);
            }
            const auto sk = kind == "first" ? SidonKind::First : SidonKind::Second;
            o.seed = st.seed_or_default();
            const auto res = probabilistic_sidon(g, sk, base, *o.seed, max_attempts);
            const bool ok = sk == SidonKind::First ? check_sk(res.set, 2, st.words()).holds
                                                   : check_sk_prime(res.set, 2, true, st.words()).holds;
            o.inputs = {{"group", group_spec}, {"kind", kind}};
            if (base) o.inputs["base"] = base->members();
            o.result = element_list(g, res.set.members());
            o.result["size"] = res.set.size();
            o.result["profile"] = to_json(res.profile);
            o.result["attempts"] = res.attempts;
            o.result["budget_exhausted"] = res.budget_exhausted;
            o.result["verified"] = ok;
            o.csv_header = {"index", "element"};
            o.csv_rows = element_rows(g, res.set.members());
            o.text = std::to_string(res.set.size()) + " elements (target " + std::to_string(res.profile.target) +
                     ", k* " + std::to_string(res.profile.k_star) + ") " + set_summary(g, res.set.members()) + "\n";
            if (!ok) o.code = kExitViolation;
            else if (res.budget_exhausted) o.code = kExitBudget;
            return o;
        });
    }
    {
        auto* s = leaf(con, "anticommuting", "one generator per cyclic subgroup of long cycles in A:n", "construct anticommuting");
        s->add_option("--n", n)->required();
        bind(s, [&] {
            Outcome o;
            const auto b = anticommuting_base(n);
            o.inputs = {{"n", n}};
            o.result = element_list(b.group(), b.members());
            o.result["size"] = b.size();
            o.csv_header = {"index", "element"};
            o.csv_rows = element_rows(b.group(), b.members());
            o.text = std::to_string(b.size()) + " " + set_summary(b.group(), b.members()) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(con, "hash-family", "cyclic shifts of [v-2] modulo t-1", "construct hash-family");
        s->add_option("--t", t)->required();
        s->add_option("--v", v)->required();
        bind(s, [&] {
            Outcome o;
            const auto fam = hash_shift_family(t, v);
            o.inputs = {{"t", t}, {"v", v}};
            o.result = {{"family", fam}, {"size", fam.size()}};
            o.csv_header = {"set"};
            for (const auto& f : fam) {
                std::string cell;
                for (auto x : f) cell += (cell.empty() ? "" : " ") + std::to_string(x);
                o.csv_rows.push_back({cell});
                o.text += "{" + cell + "}\n";
            }
            return o;
        });
    }
    {
        auto* s = leaf(con, "hash-bound", "C(t,2) q^(n - (v-2)n/(t-1))", "construct hash-bound");
        s->add_option("--t", t)->required();
        s->add_option("--v", v)->required();
        s->add_option("--q", q)->required();
        s->add_option("--n", n)->required();
        bind(s, [&] {
            Outcome o;
            const auto b = hash_code_bound(t, v, q, n);
            o.inputs = {{"t", t}, {"v", v}, {"q", q}, {"n", n}};
            o.result = {{"bound", to_string(b)}};
            o.text = to_string(b) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(con, "ef-bound", "rowsum^n n! / n^n", "construct ef-bound");
        s->add_option("--n", n)->required();
        s->add_option("--rowsum", rowsum)->required();
        bind(s, [&] {
            Outcome o;
            const auto b = ef_bound(n, rowsum);
            o.inputs = {{"n", n}, {"rowsum", rowsum}};
            o.result = {{"bound", to_string(b)}, {"floor", to_string(floor(b))}};
            o.text = to_string(b) + "\n";
            return o;
        });
    }

    // ---- digraph ----
    auto* dig = app.add_subcommand("digraph", "build and test digraphs");
    dig->require_subcommand(1);
    auto add_graph_source = [&](CLI::App* s) {
        s->add_option("--graph", graph_file, "digraph file: n, then 'u v' arcs (1-indexed)");
        s->add_option("--glm", glm_lm, "l,m");
        s->add_option("--group", group_spec, "Cayley digraph of --set in this group");
        s->add_option("--set", set_lit);
        s->add_option("--set-file", set_file);
    };
    auto load_digraph = [&](Json& inputs) {
        const int sources = !graph_file.empty() + !glm_lm.empty() + !group_spec.empty();
        if (sources != 1) throw std::invalid_argument("give exactly one of --graph, --glm or --group");
        if (!graph_file.empty()) {
            inputs["graph"] = graph_file;
            return read_digraph(graph_file);
        }
        if (!glm_lm.empty()) {
            const auto [ll, mm] = parse_pair(glm_lm);
            inputs["glm"] = {ll, mm};
            return glm(ll, mm);
        }
        const auto g = build_group(group_spec);
        const auto a = load_set(g, set_lit, set_file);
        inputs["group"] = group_spec;
        inputs["set"] = a.members();
        return cayley_digraph(a);
    };
    {
        auto* s = leaf(dig, "glm", "the layered C_{l,l}-free digraph G_{l,m}", "digraph glm");
        s->add_option("--l", l)->required();
        s->add_option("--m", m)->required();
        s->add_flag("--labels", labels, "print vertex labels instead of arcs");
        bind(s, [&] {
            Outcome o;
            const auto d = glm(l, m);
            o.inputs = {{"l", l}, {"m", m}};
            o.result = {{"vertices", d.size()}, {"arcs", d.arc_count()}, {"degrees", to_json(degree_profile(d))}};
            std::ostringstream ss;
            if (labels) write_labels(d, ss);
            else write_digraph(d, ss);
            o.text = ss.str();
            return o;
        });
    }
    {
        auto* s = leaf(dig, "cayley", "Cayley digraph: alpha -> beta when alpha^-1 beta in A", "digraph cayley");
        need_group(s, group_spec);
        s->add_option("--set", set_lit);
        s->add_option("--set-file", set_file);
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            const auto a = load_set(g, set_lit, set_file);
            const auto d = cayley_digraph(a);
            o.inputs = {{"group", group_spec}, {"set", a.members()}};
            o.result = {{"vertices", d.size()}, {"arcs", d.arc_count()}, {"degrees", to_json(degree_profile(d))}};
            o.text = digraph_text(d);
            return o;
        });
    }
    {
        auto* s = leaf(dig, "girth", "girth of the bipartite Cayley graph", "digraph girth");
        need_group(s, group_spec);
        s->add_option("--set", set_lit);
        s->add_option("--set-file", set_file);
        bind(s, [&] {
            Outcome o;
            const auto g = build_group(group_spec);
            const auto a = load_set(g, set_lit, set_file);
            const auto gi = graph_girth(bipartite_cayley(a));
            o.inputs = {{"group", group_spec}, {"set", a.members()}};
            o.result = {{"girth", gi ? Json(*gi) : Json(nullptr)}};
            o.text = (gi ? std::to_string(*gi) : std::string("infinite")) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(dig, "fk", "two distinct directed k-walks with the same ends", "digraph fk");
        add_graph_source(s);
        s->add_option("--k", k);
        bind(s, [&] {
            Outcome o;
            const auto d = load_digraph(o.inputs);
            o.inputs["k"] = k;
            const auto res = is_fk_free(d, k);
            o.result = {{"free", res.free}, {"max_walks", to_string(res.max_walks)}};
            o.result["witness"] = res.witness ? Json::array({path_json(res.witness->first), path_json(res.witness->second)}) : Json(nullptr);
            o.text = std::string(res.free ? "F_k-free" : "contains F_k") + "\n";
            if (!res.free) o.code = kExitViolation;
            return o;
        });
    }
    {
        auto* s = leaf(dig, "cll", "two internally disjoint directed l-paths with common ends", "digraph cll");
        add_graph_source(s);
        s->add_option("--l", l)->required();
        s->add_option("--add-arc", add_arc, "u,v (1-indexed) added before the search");
        bind(s, [&] {
            Outcome o;
            auto d = load_digraph(o.inputs);
            o.inputs["l"] = l;
            if (!add_arc.empty()) {
                const auto [u, w] = parse_pair(add_arc);
                if (u == 0 || w == 0) throw std::invalid_argument("vertices are 1-indexed");
                d.add_arc(static_cast<Vertex>(u - 1), static_cast<Vertex>(w - 1));
                o.inputs["add_arc"] = {u, w};
            }
            const auto res = find_cll(d, l, st.nodes());
            o.result = {{"found", res.witness.has_value()}, {"exact", res.exact}, {"paths", res.paths}};
            o.result["witness"] = res.witness ? Json::array({path_json(res.witness->first), path_json(res.witness->second)}) : Json(nullptr);
            o.text = res.witness ? "C_{l,l}: " + o.result["witness"].dump() + "\n" : std::string(res.exact ? "none\n" : "none found (budget)\n");
            if (res.witness) o.code = kExitViolation;
            else if (!res.exact) o.code = kExitBudget;
            return o;
        });
    }
    {
        auto* s = leaf(dig, "degrees", "in/out degree extremes", "digraph degrees");
        add_graph_source(s);
        bind(s, [&] {
            Outcome o;
            const auto d = load_digraph(o.inputs);
            const auto p = degree_profile(d);
            o.result = to_json(p);
            o.result["vertices"] = d.size();
            o.result["arcs"] = d.arc_count();
            o.text = "out " + std::to_string(p.min_out) + ".." + std::to_string(p.max_out) + ", in " +
                     std::to_string(p.min_in) + ".." + std::to_string(p.max_in) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(dig, "layer", "random layering without short nonzero-type closed walks", "digraph layer");
        add_graph_source(s);
        s->add_option("--depth", h, "forbid nonzero-type closed walks of length < 2*depth")->required();
        s->add_option("--eps", eps_text);
        s->add_option("--tries", max_tries);
        bind(s, [&] {
            Outcome o;
            const auto d = load_digraph(o.inputs);
            o.inputs["depth"] = h;
            o.inputs["eps"] = eps_text;
            o.seed = st.seed_or_default();
            const auto res = layered_subgraph(d, h, parse_rational(eps_text), *o.seed, max_tries);
            o.result = {{"success", res.success}, {"tries", res.tries}, {"arcs", res.graph.arc_count()},
                        {"classes", res.classes}, {"degrees", to_json(degree_profile(res.graph))}};
            o.text = digraph_text(res.graph);
            if (!res.success) o.code = kExitBudget;
            return o;
        });
    }
    {
        auto* s = leaf(dig, "induce", "random induced subgraph keeping most of the semidegree", "digraph induce");
        add_graph_source(s);
        s->add_option("--m", size_m)->required();
        s->add_option("--eps", eps_text);
        s->add_option("--tries", max_tries);
        bind(s, [&] {
            Outcome o;
            const auto d = load_digraph(o.inputs);
            o.inputs["m"] = size_m;
            o.inputs["eps"] = eps_text;
            o.seed = st.seed_or_default();
            const auto res = random_induced_subgraph(d, size_m, parse_rational(eps_text), *o.seed, max_tries);
            Json kept = Json::array();
            for (auto x : res.kept) kept.push_back(x + 1);
            o.result = {{"success", res.success}, {"tries", res.tries}, {"kept", kept},
                        {"degrees", to_json(degree_profile(res.graph))}};
            o.text = digraph_text(res.graph);
            if (!res.success) o.code = kExitBudget;
            return o;
        });
    }
    {
        auto* s = leaf(dig, "walk-type", "net forward steps of a closed walk, e.g. 1>2>3<1", "digraph walk-type");
        add_graph_source(s);
        s->add_option("--walk", walk_text)->required();
        bind(s, [&] {
            Outcome o;
            const auto d = load_digraph(o.inputs);
            o.inputs["walk"] = walk_text;
            const auto ty = walk_type(d, parse_walk(walk_text));
            o.result = {{"type", ty}};
            o.text = std::to_string(ty) + "\n";
            return o;
        });
    }

    // ---- count ----
    auto* cnt = app.add_subcommand("count", "exact counts");
    cnt->require_subcommand(1);
    {
        auto* s = leaf(cnt, "hamilton", "directed Hamilton cycles up to rotation", "count hamilton");
        s->add_option("--graph", graph_file);
        s->add_option("--glm", glm_lm, "l,m");
        bind(s, [&] {
            Outcome o;
            if (graph_file.empty() == glm_lm.empty()) throw std::invalid_argument("give exactly one of --graph or --glm");
            Digraph d;
            if (!glm_lm.empty()) {
                const auto [ll, mm] = parse_pair(glm_lm);
                d = glm(ll, mm);
                o.inputs["glm"] = {ll, mm};
            } else {
                d = read_digraph(graph_file);
                o.inputs["graph"] = graph_file;
            }
            const auto c = count_hamilton_cycles(d, st.nodes());
            o.result = {{"count", to_string(c)}};
            o.text = to_string(c) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(cnt, "eulerian", "Eulerian circuits by the BEST theorem", "count eulerian");
        s->add_option("--graph", graph_file);
        s->add_option("--kmm", m, "bidirected K_{m,m}");
        s->add_flag("--direct", direct, "also enumerate circuits directly");
        bind(s, [&] {
            Outcome o;
            if (graph_file.empty() == (m == 0)) throw std::invalid_argument("give exactly one of --graph or --kmm");
            const auto d = m ? bidirected_complete_bipartite(m) : read_digraph(graph_file);
            if (m) o.inputs["kmm"] = m;
            else o.inputs["graph"] = graph_file;
            o.inputs["direct"] = direct;
            const auto b = best_eulerian_count(d);
            o.result = {{"circuits", to_string(b.circuits)},
                        {"arborescences", to_string(b.arborescences)},
                        {"factorial_product", to_string(b.factorial_product)}};
            o.text = to_string(b.circuits) + "\n";
            if (direct) {
                const auto c = count_eulerian_circuits_direct(d);
                o.result["direct"] = to_string(c);
                if (c != b.circuits) {
                    o.code = kExitViolation;
                    o.text += "direct enumeration disagrees: " + to_string(c) + "\n";
                }
            }
            return o;
        });
    }
    {
        auto* s = leaf(cnt, "transition", "transition vectors of bidirected K_{m,m}", "count transition");
        s->add_option("--m", m)->required();
        bind(s, [&] {
            Outcome o;
            o.inputs = {{"m", m}};
            const auto c = transition_vector_count(m);
            o.result = {{"count", to_string(c)}};
            if (m <= 3) {
                const auto all = enumerate_transition_vectors(m);
                Json list = Json::array();
                o.csv_header = {"f", "g"};
                for (const auto& tv : all) {
                    list.push_back(Json{{"f", tv.f}, {"g", tv.g}});
                    std::string fs_, gs_;
                    for (auto x : tv.f) fs_ += std::to_string(x);
                    for (auto x : tv.g) gs_ += std::to_string(x);
                    o.csv_rows.push_back({fs_, gs_});
                }
                o.result["enumerated"] = all.size();
                o.result["vectors"] = list;
            }
            o.text = to_string(c) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(cnt, "formula", "closed form for Hamilton cycles of G_{r,m}", "count formula");
        s->add_option("--r", r)->required();
        s->add_option("--m", m)->required();
        bind(s, [&] {
            Outcome o;
            o.inputs = {{"r", r}, {"m", m}};
            const auto c = glm_hamilton_formula(r, m);
            o.result = {{"count", to_string(c)}};
            o.text = to_string(c) + "\n";
            return o;
        });
    }
    {
        auto* s = leaf(cnt, "two-part", "cycles made of one segment of P and one of Q", "count two-part");
        s->add_option("--p", p_text, "comma-separated 1-indexed vertices")->required();
        s->add_option("--q", q_text)->required();
        s->add_option("--l", l)->required();
        bind(s, [&] {
            Outcome o;
            const auto pp = parse_path(p_text), qq = parse_path(q_text);
            o.inputs = {{"p", path_json(pp)}, {"q", path_json(qq)}, {"l", l}};
            const auto cycles = two_part_cycles(pp, qq, l);
            Json list = Json::array();
            std::size_t nonzero = 0;
            o.csv_header = {"cycle", "type"};
            for (const auto& c : cycles) {
                list.push_back(Json{{"cycle", path_json(c.cycle)}, {"type", c.type}});
                nonzero += c.type != 0;
                std::string cell;
                for (auto x : c.cycle) cell += (cell.empty() ? "" : " ") + std::to_string(x + 1);
                o.csv_rows.push_back({cell, std::to_string(c.type)});
            }
            o.result = {{"cycles", list}, {"count", cycles.size()}, {"nonzero_type", nonzero}};
            o.text = std::to_string(cycles.size()) + " cycles, " + std::to_string(nonzero) + " of nonzero type\n";
            return o;
        });
    }
    {
        auto* s = leaf(cnt, "sigma", "size of the path family over (2r+1) parts", "count sigma");
        s->add_option("--n", n)->required();
        s->add_option("--r", r)->required();
        bind(s, [&] {
            Outcome o;
            const SigmaFamily fam(n, r);
            o.inputs = {{"n", n}, {"r", r}};
            o.result = {{"count", to_string(fam.size())}, {"part_size", fam.part_size()}};
            o.text = to_string(fam.size()) + "\n";
            return o;
        });
    }

    // ---- table ----
    auto* tab = app.add_subcommand("table", "M_k and upper bounds over a corpus of groups");
    names[tab] = "table";
    tab->add_option("--corpus", dir, "directory of .tbl tables and .spec files");
    tab->add_option("--specs", specs, "';'-separated group specs");
    tab->add_option("--k", k);
    bind(tab, [&] {
        Outcome o;
        struct Row {
            std::string name;
            std::uint64_t order;
            std::optional<FiniteGroup> group;
            std::string warning;
        };
        std::vector<Row> rows;
        auto add_spec = [&](const std::string& name, const std::string& spec) {
            try {
                auto g = build_group(spec);
                rows.push_back({name, g.order(), g, ""});
            } catch (const std::exception& e) {
                rows.push_back({name, 0, std::nullopt, e.what()});
            }
        };
        if (!dir.empty()) {
            if (!fs::is_directory(dir)) throw std::invalid_argument("corpus directory not found: " + dir);
            std::vector<fs::path> files;
            for (const auto& e : fs::directory_iterator(dir))
                if (e.is_regular_file()) files.push_back(e.path());
            std::sort(files.begin(), files.end());
            for (const auto& p : files) {
                if (is_table_file(p)) {
                    add_spec(p.stem().string(), "table:" + p.string());
                } else if (p.extension() == ".spec") {
                    std::string spec;
                    try {
                        spec = set_file_to_literal(p.string());
                    } catch (const std::exception& e) {
                        rows.push_back({p.stem().string(), 0, std::nullopt, e.what()});
                        continue;
                    }
                    add_spec(p.stem().string(), spec);
                }
            }
        }
        if (!specs.empty()) {
            std::string cur;
            std::istringstream in(specs);
            while (std::getline(in, cur, ';'))
                if (!cur.empty()) add_spec(cur, cur);
        }
        std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
            if (a.group.has_value() != b.group.has_value()) return a.group.has_value();
            return a.order < b.order;
        });
        o.inputs = {{"corpus", dir}, {"specs", specs}, {"k", k}};
        // one column per bound, in report order
        std::vector<std::string> bound_names;
        std::vector<BoundReport> reports;
        std::vector<SearchResult> found;
        SearchOptions opts;
        opts.max_nodes = st.nodes();
        for (const auto& row : rows) {
            if (!row.group) continue;
            reports.push_back(upper_bound_report(*row.group, k));
            found.push_back(max_sk(*row.group, k, 1, opts));
            for (const auto& e : reports.back().entries)
                if (std::find(bound_names.begin(), bound_names.end(), e.name) == bound_names.end())
                    bound_names.push_back(e.name);
        }
        o.csv_header = {"name", "order", "M_k", "exact"};
        for (const auto& b : bound_names) o.csv_header.push_back(b);
        o.csv_header.push_back("involutions");
        o.csv_header.push_back("warning");
        Json list = Json::array();
        std::size_t gi = 0;
        for (const auto& row : rows) {
            std::vector<std::string> cells;
            if (!row.group) {
                cells = {row.name, "", "", ""};
                cells.resize(o.csv_header.size() - 1);
                cells.push_back("skipped: " + row.warning);
                list.push_back(Json{{"name", row.name}, {"warning", row.warning}});
                o.csv_rows.push_back(cells);
                continue;
            }
            const auto& br = reports[gi];
            const auto& res = found[gi];
            ++gi;
            const auto inv = count_involutions(*row.group);
            cells = {row.name, std::to_string(row.order), std::to_string(res.value), res.exact ? "1" : "0"};
            Json bounds = Json::object();
            for (const auto& b : bound_names) {
                const auto* e = br.find(b);
                cells.push_back(e && e->applicable ? std::to_string(e->value) : "");
                if (e && e->applicable) bounds[b] = e->value;
            }
            cells.push_back(std::to_string(inv));
            cells.push_back("");
            o.csv_rows.push_back(cells);
            list.push_back(Json{{"name", row.name}, {"order", row.order}, {"M_k", res.value}, {"exact", res.exact},
                                {"bounds", bounds}, {"involutions", inv}});
            if (!res.exact) o.code = kExitBudget;
        }
        o.result = {{"rows", list}};
        std::ostringstream ss;
        for (const auto& c : o.csv_rows) {
            for (std::size_t i = 0; i < c.size(); ++i) ss << (i ? " " : "") << (c[i].empty() ? "-" : c[i]);
            ss << "\n";
        }
        o.text = ss.str();
        return o;
    });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    for (const auto& [sub, fn] : leaves) {
        if (!sub->parsed()) continue;
        // a leaf verb whose own subcommands were used is not the target
        if (!sub->get_subcommands().empty()) continue;
        Outcome o;
        try {
            o = fn();
        } catch (const CapExceeded& e) {
            err << "sidonkit: budget exceeded: " << e.what() << "\n";
            return kExitBudget;
        } catch (const std::exception& e) {
            err << "sidonkit: " << e.what() << "\n";
            return kExitUsage;
        }
        const auto text = emit(names.at(sub), st, o);
        if (st.output.empty()) {
            out << text;
        } else {
            std::ofstream f(st.output);
            if (!f) {
                err << "sidonkit: cannot write " << st.output << "\n";
                return kExitUsage;
            }
            f << text;
        }
        return o.code;
    }
    err << "sidonkit: no command given\n";
    return kExitUsage;
}

} // namespace sidonkit
