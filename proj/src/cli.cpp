#include "semihilb/cli.hpp"

#include "semihilb/error.hpp"
#include "semihilb/filtration.hpp"
#include "semihilb/structure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace semihilb::cli {

namespace {

[[noreturn]] void usage_error(const std::string& msg) {
    throw Error(ErrorCode::UsageError, msg);
}

Int parse_int(const std::string& text, const std::string& what) {
    Int v = 0;
    const auto* end = text.data() + text.size();
    auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || p != end) usage_error(what + ": '" + text + "' is not an integer");
    return v;
}

std::pair<Int, Int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Int v = parse_int(text, "--e-range");
        return {v, v};
    }
    return {parse_int(text.substr(0, dots), "--e-range"), parse_int(text.substr(dots + 2), "--e-range")};
}

const std::set<std::string> verbs{"info", "apery", "hilbert", "strata", "check", "residue-table", "construct-sp", "search"};
const std::set<std::string> targets{"thm-e3", "thm-e4", "apj1", "lemma-r0", "c3", "ap24", "symmetric", "delta", "corpus"};

Json flags(const std::vector<NamedFlag>& fs) {
    Json o = Json::object();
    for (const auto& f : fs) o[f.name] = f.value;
    return o;
}

Json verdict_json(Verdict v) {
    return std::string(to_string(v));
}

Json theorem_json(const TheoremCheck& c) {
    Json o;
    o["verdict"] = verdict_json(c.verdict);
    o["reason"] = c.reason;
    o["conditions"] = flags(c.conditions);
    o["witnesses"] = c.witnesses;
    o["pattern"] = c.pattern;
    o["level"] = c.level;
    o["notes"] = flags(c.notes);
    return o;
}

Json c3_json(const std::vector<C3Pattern>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back({{"n_i", p.n_i}, {"n_j", p.n_j}, {"c2_matches", p.c2_matches}});
    return a;
}

Json ap24_json(const std::vector<Ap24Match>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) {
        Json o;
        o["tag"] = std::string(1, m.tag);
        o["witnesses"] = m.witnesses;
        o["partner"] = m.partner ? Json(m.partner) : Json(nullptr);
        o["contained"] = m.contained;
        o["equal"] = m.equal;
        a.push_back(std::move(o));
    }
    return a;
}

Json apj1_json(const ApJ1Report& r) {
    Json o;
    o["verdict"] = verdict_json(r.verdict);
    o["reason"] = r.reason;
    o["ell"] = r.ell;
    o["d"] = r.d;
    o["witness"] = r.witness ? Json::array({r.witness->first, r.witness->second}) : Json(nullptr);
    o["checks"] = flags(r.checks);
    return o;
}

Json lemma_r0_json(const LemmaR0Report& r) {
    Json o;
    o["verdict"] = verdict_json(r.verdict);
    o["reason"] = r.reason;
    o["r0"] = r.r0;
    o["d"] = r.d;
    o["n_i"] = r.n_i ? Json(*r.n_i) : Json(nullptr);
    o["checks"] = flags(r.checks);
    return o;
}

Json classification_json(const ClassificationReport& c) {
    Json o;
    o["symmetric"] = c.symmetric;
    o["c3"] = c.c3 ? c3_json(*c.c3) : Json(nullptr);
    o["ap24"] = c.ap24 ? ap24_json(*c.ap24) : Json(nullptr);
    o["thm_e3"] = theorem_json(c.thm_e3);
    o["thm_e4"] = theorem_json(c.thm_e4);
    o["apj1"] = apj1_json(c.apj1);
    o["lemma_r0"] = lemma_r0_json(c.lemma_r0);
    return o;
}

Json level_map(const std::map<int, std::vector<Int>>& m, int top) {
    Json o = Json::object();
    for (const auto& [k, v] : m)
        if (k <= top) o[std::to_string(k)] = v;
    return o;
}

// Hilbert values 0..top, or up to stabilization when top is unset.
std::vector<Int> hilbert_values(const HilbertProfile& h, std::optional<int> top) {
    if (!top) return h.values;
    std::vector<Int> out;
    for (int n = 0; n <= *top; ++n) out.push_back(h.at(n));
    return out;
}

void level_warning(Report& rep, const Analysis& a, std::optional<int> max_level) {
    if (max_level && *max_level < a.tables().r_stop)
        rep.warnings.push_back("levels above " + std::to_string(*max_level) + " omitted; the filtration stabilizes at level " +
                               std::to_string(a.tables().r_stop));
}

NumericalSemigroup semigroup_of(const Command& c) {
    return NumericalSemigroup::build(*c.gens);
}

Json strata_json(const AperyStratification& st) {
    Json a = Json::array();
    for (const auto& level : st.strata) a.push_back(level);
    return a;
}

Report info(const Command& c) {
    Analysis a(semigroup_of(c));
    const auto& s = a.semigroup();
    const int top = c.max_level.value_or(a.tables().r_stop);
    Report rep;
    auto& o = rep.payload;
    o["generators"] = s.generators();
    o["e"] = s.multiplicity();
    o["v"] = s.embedding_dimension();
    o["frobenius"] = s.frobenius();
    o["genus"] = s.genus();
    o["apery"] = s.apery();
    o["ap_strata"] = strata_json(a.apery_strata());
    o["h_r_prime"] = a.apery_strata().h_r_prime;
    o["hilbert"] = hilbert_values(a.hilbert(), c.max_level);
    o["stable_at"] = a.hilbert().stable_at;
    o["r_stop"] = a.tables().r_stop;
    o["d_sets"] = level_map(a.tables().D, top);
    o["c_sets"] = level_map(a.tables().C, top);
    o["k0"] = a.tables().k0 ? Json(*a.tables().k0) : Json(nullptr);
    o["decreasing_levels"] = a.hilbert().decreasing_levels;
    o["tangent_cone_cm"] = is_tangent_cone_cm(a);
    o["classification"] = classification_json(classify(a));
    level_warning(rep, a, c.max_level);
    return rep;
}

Report apery(const Command& c) {
    const auto s = semigroup_of(c);
    const auto st = apery_strata(s);
    Report rep;
    auto& o = rep.payload;
    o["generators"] = s.generators();
    o["e"] = s.multiplicity();
    o["apery"] = s.apery();
    o["ap_strata"] = strata_json(st);
    o["h_r_prime"] = st.h_r_prime;
    o["d"] = st.d;
    return rep;
}

Report hilbert(const Command& c) {
    Analysis a(semigroup_of(c));
    Report rep;
    auto& o = rep.payload;
    o["generators"] = a.semigroup().generators();
    o["hilbert"] = hilbert_values(a.hilbert(), c.max_level);
    o["stable_at"] = a.hilbert().stable_at;
    o["decreasing_levels"] = a.hilbert().decreasing_levels;
    if (c.max_level && *c.max_level < a.hilbert().stable_at)
        rep.warnings.push_back("values above level " + std::to_string(*c.max_level) + " omitted; H stabilizes at level " +
                               std::to_string(a.hilbert().stable_at));
    return rep;
}

Report strata(const Command& c) {
    Analysis a(semigroup_of(c));
    const auto& t = a.tables();
    const int top = c.max_level.value_or(t.r_stop);
    Report rep;
    auto& o = rep.payload;
    o["generators"] = a.semigroup().generators();
    o["e"] = a.multiplicity();
    o["r_stop"] = t.r_stop;
    o["k0"] = t.k0 ? Json(*t.k0) : Json(nullptr);
    o["d_sets"] = level_map(t.D, top);
    o["c_sets"] = level_map(t.C, top);
    Json split = Json::array();
    for (const auto& [kt, v] : t.D_split)
        if (kt.first <= top) split.push_back({{"k", kt.first}, {"t", kt.second}, {"elements", v}});
    o["d_split"] = std::move(split);
    level_warning(rep, a, c.max_level);
    return rep;
}

void applicability(Report& rep, Verdict v) {
    if (v == Verdict::NotApplicable) rep.exit_code = exit_not_applicable;
}

Json counts_json(const std::map<std::string, std::array<int, 3>>& m) {
    Json o;
    for (const auto& [name, n] : m)
        o[name] = {{"NotApplicable", n[0]}, {"Consistent", n[1]}, {"Violated", n[2]}};
    return o;
}

Report corpus(const Command& c) {
    auto instances = random_semigroups(c.seed, 500, 3, 40);
    for (auto& s : decreasing_corpus(c.seed, 100)) instances.push_back(std::move(s));
    for (auto& s : random_symmetric(c.seed, 100, 5, 40, 4)) instances.push_back(std::move(s));

    int delta_failures = 0, decreasing = 0, symmetric = 0, guard_failures = 0;
    std::map<std::string, std::array<int, 3>> verdicts{
        {"thm_e3", {}}, {"thm_e4", {}}, {"apj1", {}}, {"lemma_r0", {}}};
    for (const auto& s : instances) {
        Analysis a(s);
        try {
            audit_delta(a);
        } catch (const Error&) {
            ++delta_failures;
        }
        const bool dec = a.hilbert().decreasing();
        const bool sym = is_symmetric(s);
        decreasing += dec;
        symmetric += sym;
        if (sym && dec && s.embedding_dimension() >= s.multiplicity() - 4) ++guard_failures;
        const auto cl = classify(a);
        ++verdicts["thm_e3"][static_cast<std::size_t>(cl.thm_e3.verdict)];
        ++verdicts["thm_e4"][static_cast<std::size_t>(cl.thm_e4.verdict)];
        ++verdicts["apj1"][static_cast<std::size_t>(cl.apj1.verdict)];
        ++verdicts["lemma_r0"][static_cast<std::size_t>(cl.lemma_r0.verdict)];
    }
    Report rep;
    auto& o = rep.payload;
    o["seed"] = c.seed;
    o["instances"] = instances.size();
    o["decreasing"] = decreasing;
    o["symmetric"] = symmetric;
    o["delta_failures"] = delta_failures;
    o["gorenstein_guard_failures"] = guard_failures;
    o["verdicts"] = counts_json(verdicts);
    return rep;
}

Report check(const Command& c) {
    if (c.target == "corpus") return corpus(c);
    Analysis a(semigroup_of(c));
    Report rep;
    auto& o = rep.payload;
    o["generators"] = a.semigroup().generators();
    o["check"] = c.target;
    if (c.target == "thm-e3" || c.target == "thm-e4") {
        const auto r = c.target == "thm-e3" ? check_thm_e3(a) : check_thm_e4(a);
        o["result"] = theorem_json(r);
        applicability(rep, r.verdict);
    } else if (c.target == "apj1") {
        const auto r = check_apj1(a);
        o["result"] = apj1_json(r);
        applicability(rep, r.verdict);
    } else if (c.target == "lemma-r0") {
        const auto r = check_lemma_r0(a);
        o["result"] = lemma_r0_json(r);
        applicability(rep, r.verdict);
    } else if (c.target == "c3" || c.target == "ap24") {
        const std::size_t need = c.target == "c3" ? 3 : 4;
        const auto size = a.apery_strata().size_of(2);
        o["ap2_size"] = size;
        if (size != need) {
            o["result"] = nullptr;
            rep.exit_code = exit_not_applicable;
        } else {
            o["result"] = c.target == "c3" ? c3_json(classify_c3(a)) : ap24_json(match_ap24_case(a));
        }
    } else if (c.target == "symmetric") {
        o["result"] = {{"symmetric", is_symmetric(a.semigroup())}, {"symmetric_apery", is_symmetric_apery(a.semigroup())}};
    } else {
        const auto d = audit_delta(a);
        Json levels = Json::array();
        for (const auto& l : d.levels)
            levels.push_back({{"k", l.k}, {"delta_h", l.delta_h}, {"c", l.c_size}, {"d", l.d_size}, {"ok", l.ok}});
        o["result"] = {{"levels", std::move(levels)}, {"all_ok", d.all_ok()}};
    }
    return rep;
}

Report residue(const Command& c) {
    Report rep;
    auto& o = rep.payload;
    o["e"] = *c.e;
    Json rows = Json::array();
    std::vector<Int> ok;
    for (const auto& r : residue_table(*c.e)) {
        rows.push_back({{"h", r.h}, {"base_classes", r.base_classes}, {"extra_classes", r.extra_classes},
                        {"admissible", r.admissible}});
        if (r.admissible) ok.push_back(r.h);
    }
    o["rows"] = std::move(rows);
    o["admissible"] = ok;
    return rep;
}

Report sp(const Command& c) {
    const auto& g = *c.gens;
    if (g.size() != 6) usage_error("construct-sp expects p,k,k',alpha,beta,gamma");
    const SpParameters p{static_cast<int>(g[0]), static_cast<int>(g[1]), static_cast<int>(g[2]),
                         static_cast<int>(g[3]), static_cast<int>(g[4]), static_cast<int>(g[5])};
    const auto s = construct_sp(p);
    Analysis a(s);
    Report rep;
    auto& o = rep.payload;
    o["parameters"] = {{"p", p.p}, {"k", p.k}, {"k_prime", p.k_prime}, {"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}};
    o["printed"] = sp_generators(p);
    o["generators"] = s.generators();
    o["e"] = s.multiplicity();
    o["v"] = s.embedding_dimension();
    o["frobenius"] = s.frobenius();
    o["hilbert"] = a.hilbert().values;
    o["stable_at"] = a.hilbert().stable_at;
    o["decreasing_levels"] = a.hilbert().decreasing_levels;
    o["symmetric"] = is_symmetric(s);
    return rep;
}

Report search(const Command& c) {
    SearchConfig cfg;
    cfg.e_lo = c.e_range->first;
    cfg.e_hi = c.e_range->second;
    cfg.v_offset = *c.v_offset;
    cfg.gen_bound = c.gen_bound.value_or(0);
    cfg.workers = c.workers;
    validate(cfg);
    const auto hits = search_decreasing(cfg);
    Report rep;
    auto& o = rep.payload;
    o["e_range"] = {cfg.e_lo, cfg.e_hi};
    o["v_offset"] = cfg.v_offset;
    o["gen_bound"] = c.gen_bound ? Json(*c.gen_bound) : Json(nullptr);
    o["gen_bound_factor"] = cfg.gen_bound_factor;
    o["count"] = hits.size();
    Json list = Json::array();
    for (const auto& s : hits) {
        Analysis a(s);
        list.push_back({{"generators", s.generators()},
                        {"e", s.multiplicity()},
                        {"v", s.embedding_dimension()},
                        {"hilbert", a.hilbert().values},
                        {"stable_at", a.hilbert().stable_at},
                        {"decreasing_levels", a.hilbert().decreasing_levels}});
    }
    o["hits"] = std::move(list);
    rep.csv = search_csv(hits);
    return rep;
}

// Text rendering ---------------------------------------------------------

bool is_int_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_number(); });
}

std::string joined(const Json& arr) {
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ',';
        out += arr[i].dump();
    }
    return out;
}

std::string scalar(const Json& j) {
    if (j.is_null()) return "-";
    if (j.is_string()) return j.get<std::string>().empty() ? "-" : j.get<std::string>();
    if (is_int_array(j)) return j.empty() ? "{}" : joined(j);
    return j.dump();
}

void text_value(std::ostringstream& out, const std::string& key, const Json& j, const Json& parent, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (key == "hilbert" && is_int_array(j)) {
        const bool stable = parent.contains("stable_at") && static_cast<int>(j.size()) - 1 >= parent["stable_at"].get<int>();
        out << pad << key << ": [" << joined(j) << (stable ? "->" : "") << "]\n";
    } else if (j.is_object() && j.empty()) {
        out << pad << key << ": -\n";
    } else if (j.is_object()) {
        out << pad << key << ":\n";
        for (const auto& [k, v] : j.items()) text_value(out, k, v, j, indent + 2);
    } else if (j.is_array() && !is_int_array(j)) {
        out << pad << key << ":" << (j.empty() ? " none" : "") << "\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (j[i].is_object()) {
                out << pad << "  [" << i << "]\n";
                for (const auto& [k, v] : j[i].items()) text_value(out, k, v, j[i], indent + 4);
            } else {
                out << pad << "  [" << i << "] " << scalar(j[i]) << "\n";
            }
        }
    } else {
        out << pad << key << ": " << scalar(j) << "\n";
    }
}

} // namespace

std::string usage() {
    return "usage: semihilb <verb> [args] [options]\n"
           "  info <gens>               full report: Apery strata, Hilbert function, D/C tables, classification\n"
           "  apery <gens>              Apery set and its order strata\n"
           "  hilbert <gens>            Hilbert function of the tangent cone\n"
           "  strata <gens>             D_k, C_k and D_k^t tables\n"
           "  check <what> <gens>       thm-e3 | thm-e4 | apj1 | lemma-r0 | c3 | ap24 | symmetric | delta\n"
           "  check corpus              verdict statistics over a seeded random corpus\n"
           "  residue-table <e>         admissible residue rows for multiplicity e\n"
           "  construct-sp <p,k,k',alpha,beta,gamma>\n"
           "  search --e-range lo..hi --v-offset 3|4\n"
           "options:\n"
           "  --format text|json|csv    csv only for search (default text)\n"
           "  --max-level N             truncate level tables and Hilbert values at N\n"
           "  --e-range lo..hi          multiplicity range for search\n"
           "  --v-offset N              search for v = e - N\n"
           "  --gen-bound N             largest generator considered by search (default 20e)\n"
           "  --workers N               search threads (default 1)\n"
           "  --seed N                  corpus seed (default " +
           std::to_string(default_seed) + ")\n"
           "exit status: 0 ok, 1 input error, 2 hypotheses not applicable\n";
}

Command parse(const std::vector<std::string>& args) {
    CLI::App app{"semihilb"};
    app.set_help_flag();
    std::vector<std::string> pos;
    std::string format = "text", range;
    Command c;
    int max_level = 0, v_offset = 0;
    Int gen_bound = 0;
    app.add_option("args", pos);
    auto* o_format = app.add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    auto* o_max = app.add_option("--max-level", max_level)->check(CLI::Range(0, 1 << 20));
    auto* o_range = app.add_option("--e-range", range);
    auto* o_voff = app.add_option("--v-offset", v_offset);
    auto* o_bound = app.add_option("--gen-bound", gen_bound)->check(CLI::PositiveNumber);
    app.add_option("--workers", c.workers)->check(CLI::Range(1, 1024));
    app.add_option("--seed", c.seed);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        usage_error(e.what());
    }
    (void)o_format;

    if (pos.empty()) usage_error("missing verb");
    c.verb = pos[0];
    if (!verbs.count(c.verb)) usage_error("unknown verb '" + c.verb + "'");
    c.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    if (c.format == Format::Csv && c.verb != "search") usage_error("--format csv is only valid for search");
    if (*o_max) c.max_level = max_level;
    if (*o_range) c.e_range = parse_range(range);
    if (*o_voff) c.v_offset = v_offset;
    if (*o_bound) c.gen_bound = gen_bound;

    std::size_t want = 2;
    if (c.verb == "check") {
        if (pos.size() < 2) usage_error("check needs one of thm-e3, thm-e4, apj1, lemma-r0, c3, ap24, symmetric, delta, corpus");
        c.target = pos[1];
        if (!targets.count(c.target)) usage_error("unknown check '" + c.target + "'");
        want = c.target == "corpus" ? 2 : 3;
        if (pos.size() >= 3) c.gens = parse_generators(pos[2]);
    } else if (c.verb == "search") {
        want = 1;
        if (!c.e_range) usage_error("search requires --e-range");
        if (!c.v_offset) usage_error("search requires --v-offset");
    } else if (c.verb == "residue-table") {
        if (pos.size() >= 2) c.e = parse_int(pos[1], "residue-table");
    } else if (pos.size() >= 2) {
        c.gens = parse_generators(pos[1]);
    }
    if (pos.size() < want) usage_error(c.verb + " needs " + (c.verb == "residue-table" ? "a multiplicity" : "a comma-separated integer list"));
    if (pos.size() > want) usage_error("unexpected argument '" + pos[want] + "'");
    return c;
}

Report execute(const Command& c) {
    if (c.verb == "info") return info(c);
    if (c.verb == "apery") return apery(c);
    if (c.verb == "hilbert") return hilbert(c);
    if (c.verb == "strata") return strata(c);
    if (c.verb == "check") return check(c);
    if (c.verb == "residue-table") return residue(c);
    if (c.verb == "construct-sp") return sp(c);
    if (c.verb == "search") return search(c);
    usage_error("unknown verb '" + c.verb + "'");
}

std::string render(const Report& r, Format f) {
    if (f == Format::Json) return r.payload.dump(2) + "\n";
    if (f == Format::Csv) return r.csv;
    std::ostringstream out;
    for (const auto& [k, v] : r.payload.items()) text_value(out, k, v, r.payload, 0);
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || std::find(args.begin(), args.end(), "--help") != args.end() ||
        std::find(args.begin(), args.end(), "-h") != args.end()) {
        (args.empty() ? err : out) << usage();
        return args.empty() ? exit_input : exit_ok;
    }
    try {
        const auto cmd = parse(args);
        const auto rep = execute(cmd);
        out << render(rep, cmd.format);
        for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
        return rep.exit_code;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_input;
    }
}

} // namespace semihilb::cli
