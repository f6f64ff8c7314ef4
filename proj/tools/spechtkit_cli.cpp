#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spechtkit/abacus.hpp"
#include "spechtkit/classify.hpp"
#include "spechtkit/restriction.hpp"
#include "spechtkit/rouquier.hpp"
#include "spechtkit/specht_hom.hpp"
#include "spechtkit/verify.hpp"

using namespace spechtkit;
using json = nlohmann::ordered_json;

namespace {

// Accepts "8,6,2,1,1", "(8,6,2,1,1)", "14,5,2^3,1^5" and "" or "()" for the empty partition.
Partition parse_partition(std::string text)
{
    std::string clean;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != ' ')
            clean += ch;
    std::vector<int> parts;
    std::stringstream ss(clean);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        try {
            auto caret = item.find('^');
            int value = std::stoi(item.substr(0, caret));
            int times = caret == std::string::npos ? 1 : std::stoi(item.substr(caret + 1));
            parts.insert(parts.end(), times, value);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::ParseError, "bad partition " + text);
        }
    }
    return make_partition(parts);
}

Node parse_node(const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorCode::ParseError, "node must be row,col");
    try {
        return {std::stoi(text.substr(text.find_first_not_of("( "))), std::stoi(text.substr(comma + 1))};
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "bad node " + text);
    }
}

Word parse_word(const std::string& text)
{
    Word w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            w.push_back(std::stoi(item));
    return w;
}

json parts(const Partition& l)
{
    return l.parts();
}

json node(const Node& n)
{
    return json::array({n.row, n.col});
}

json hom_json(const HomExpr& e)
{
    json terms = json::array();
    for (const auto& [t, c] : e.terms())
        terms.push_back({{"tableau", to_string(t)}, {"coefficient", signed_residue(c, e.p())}});
    return {{"p", e.p()}, {"expression", to_string(e)}, {"terms", terms}};
}

json classify_json(const Partition& l, int p)
{
    CoreWeight cw = p_core_weight(l, p);
    json j{{"partition", parts(l)},
           {"p", p},
           {"self_conjugate", is_self_conjugate(l)},
           {"restricted", is_restricted(l, p)},
           {"regular", is_regular(l, p)},
           {"core", parts(cw.core)},
           {"weight", cw.weight},
           {"jm", is_jm(l, p)},
           {"jm_abacus", is_jm_abacus(l, p)},
           {"quotient_separated", is_quotient_separated(l, p)},
           {"rouquier", is_rouquier(l, p)}};
    if (p % 2 == 1) {
        auto info = r_info(l, p);
        j["r_partition"] = info ? json{{"distinguished", node(info->distinguished)},
                                       {"type_one", info->type_one},
                                       {"type_two", info->type_two}}
                                : json(nullptr);
        j["two_factor_set"] = in_two_factor_set(l, p);
        j["alt_irreducible"] = alt_irreducible(l, p);
    }
    return j;
}

json abacus_json(const Partition& l, int p)
{
    Abacus a = Abacus::of(l, p);
    OrderedQuotient oq = ordered_quotient(a);
    json quo = json::array(), oparts = json::array();
    for (const auto& x : runner_quotients(a))
        quo.push_back(parts(x));
    for (const auto& x : oq.parts)
        oparts.push_back(parts(x));
    int first_row = 0;
    auto grid = render_grid(a, &first_row);
    return {{"partition", parts(l)},
            {"p", p},
            {"core", parts(core_of(a).read())},
            {"weight", oq.weight},
            {"q", oq.q},
            {"pi", cycle_notation(oq.pi)},
            {"runner_quotients", quo},
            {"ordered_quotient", oparts},
            {"quotient_separated", is_quotient_separated(a)},
            {"rouquier", is_rouquier(l, p)},
            {"first_row", first_row},
            {"grid", grid}};
}

json restrict_json(const Partition& l, int p, const Word& word)
{
    Partition rest = restrictise(l, p);
    json residues = json::array();
    for (int i = 0; i < p; ++i) {
        json r{{"residue", i}, {"removable", rem_count(l, p, i)}, {"normal", nor_count(rest, p, i)}};
        if (p % 2 == 1)
            r["later_addable"] = later_addable_criterion(l, p, i);
        r["signature"] = signature(rest, p, i).str();
        residues.push_back(r);
    }
    json j{{"partition", parts(l)}, {"p", p}, {"restrictisation", parts(rest)}, {"residues", residues}};
    if (!word.empty()) {
        RemovalResult all = remove_all(l, p, word), normal = remove_normal(rest, p, word);
        j["word"] = word;
        j["remove_all"] = {{"result", parts(all.result)}, {"counts", all.counts}};
        j["remove_normal"] = {{"result", parts(normal.result)}, {"counts", normal.counts}};
        if (p % 2 == 1)
            j["lightning"] = lightning(l, p, word);
    }
    return j;
}

json rouquier_json(const Partition& l, int p)
{
    WeylOracle oracle = WeylOracle::from_environment();
    DecompositionRow row = rouquier_row(l, p, oracle);
    json entries = json::array();
    for (const auto& [mu, v] : row)
        entries.push_back({{"mu", parts(mu)}, {"value", v ? json(*v) : json(nullptr)}});
    auto sum = row_sum(row);
    return {{"partition", parts(l)}, {"p", p}, {"row", entries}, {"length", sum ? json(*sum) : json(nullptr)}};
}

json section7_json(const verify::Section7Report& r)
{
    json checks = json::array();
    long long failures = 0;
    for (const auto& c : r.checks) {
        const char* v = c.verdict == verify::Verdict::Pass ? "pass"
                        : c.verdict == verify::Verdict::Fail ? "fail"
                                                             : "skipped";
        failures += c.verdict == verify::Verdict::Fail;
        checks.push_back({{"check", c.proposition}, {"partition", parts(c.lambda)}, {"verdict", v}, {"detail", c.detail}});
    }
    return {{"p", r.p}, {"max_n", r.max_n}, {"examined", r.examined}, {"standing", r.standing},
            {"failures", failures}, {"checks", checks}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Partition, abacus and Specht homomorphism toolkit"};
    app.require_subcommand(1);
    int p = 3;
    std::string lam_text, word_text, from_text, to_text, outer_text, inner_text;

    auto* classify = app.add_subcommand("classify", "JM, R-partition and block data");
    classify->add_option("partition", lam_text)->required();
    classify->add_option("--p", p, "prime");

    auto* abacus = app.add_subcommand("abacus", "abacus displays");
    abacus->require_subcommand(1);
    auto* show = abacus->add_subcommand("show", "abacus, quotients and q-vector");
    show->add_option("partition", lam_text)->required();
    show->add_option("--p", p, "prime");

    auto* restrict_cmd = app.add_subcommand("restrict", "restrictisation, signatures and removals");
    restrict_cmd->add_option("partition", lam_text)->required();
    restrict_cmd->add_option("--p", p, "prime");
    restrict_cmd->add_option("--word", word_text, "residues, comma separated");

    auto* mull = app.add_subcommand("mullineux", "Mullineux image of a restricted partition");
    mull->add_option("partition", lam_text)->required();
    mull->add_option("--p", p, "prime");

    auto* rouq = app.add_subcommand("rouquier", "Rouquier block data");
    rouq->require_subcommand(1);
    auto* row = rouq->add_subcommand("row", "decomposition row of a Rouquier partition");
    row->add_option("partition", lam_text)->required();
    row->add_option("--p", p, "prime");

    auto* hom = app.add_subcommand("hom", "homomorphisms between Specht modules");
    hom->require_subcommand(1);
    auto* magic = hom->add_subcommand("magic", "restrictisation homomorphism");
    magic->add_option("partition", lam_text)->required();
    magic->add_option("--p", p, "prime");
    auto* cp = hom->add_subcommand("cp", "one-node Carter-Payne homomorphism");
    cp->add_option("partition", lam_text)->required();
    cp->add_option("--p", p, "prime");
    cp->add_option("--from", from_text, "removable node row,col")->required();
    cp->add_option("--to", to_text, "addable node row,col")->required();
    bool composed = false;
    cp->add_flag("--compose", composed, "compose with the restrictisation homomorphism");
    auto* comp = hom->add_subcommand("compose", "outer tableau after inner tableau, semistandardized");
    comp->add_option("outer", outer_text)->required();
    comp->add_option("inner", inner_text)->required();
    comp->add_option("--p", p, "prime");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    verify::SweepSpec spec;
    std::string filter = "all", json_out;
    ver->add_option("--suite", spec.suite, "suite name")->required();
    ver->add_option("--p", spec.p, "prime");
    ver->add_option("--max-n", spec.max_n, "largest size")->check(CLI::NonNegativeNumber);
    ver->add_option("--jobs", spec.jobs, "worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--filter", filter, "all, self_conjugate or p_restricted");
    ver->add_option("--json", json_out, "write the report here as well");
    bool details = false;
    ver->add_flag("--details", details, "case_analysis only: list every spot check");

    CLI11_PARSE(app, argc, argv);

    try {
        json out;
        int code = 0;
        if (classify->parsed()) {
            out = classify_json(parse_partition(lam_text), p);
        } else if (show->parsed()) {
            out = abacus_json(parse_partition(lam_text), p);
        } else if (restrict_cmd->parsed()) {
            out = restrict_json(parse_partition(lam_text), p, parse_word(word_text));
        } else if (mull->parsed()) {
            Partition l = parse_partition(lam_text);
            out = {{"partition", parts(l)}, {"p", p}, {"mullineux", parts(mullineux(l, p))}};
        } else if (row->parsed()) {
            out = rouquier_json(parse_partition(lam_text), p);
        } else if (magic->parsed()) {
            Partition l = parse_partition(lam_text);
            out = {{"partition", parts(l)},
                   {"restrictisation", parts(restrictise(l, p))},
                   {"magic", to_string(magic_tableau(l, p))},
                   {"re", to_string(re_tableau(l, p))},
                   {"homomorphism", hom_json(restrictisation_hom(l, p))}};
        } else if (cp->parsed()) {
            Partition l = parse_partition(lam_text);
            Node from = parse_node(from_text), to = parse_node(to_text);
            out = {{"partition", parts(l)},
                   {"target", parts(move_node(l, from, to))},
                   {"homomorphism", hom_json(carter_payne_hom(l, p, from, to))}};
            if (composed) {
                ComposedResult r = composed_nonvanishing(l, p, from, to);
                out["composed"] = hom_json(r.expr);
                out["v"] = to_string(r.v);
                out["v_coefficient"] = signed_residue(r.v_coefficient, p);
            }
        } else if (comp->parsed()) {
            HomExpr e = compose(Tableau::parse(outer_text), Tableau::parse(inner_text), p);
            out = hom_json(semistandardize(e));
        } else if (ver->parsed()) {
            spec.filter = verify::parse_filter(filter);
            std::string text;
            if (spec.suite == "case_analysis" && details) {
                auto r = verify::section7_spotcheck(spec.p, spec.max_n, spec.jobs);
                json j = section7_json(r);
                code = j["failures"].get<long long>() ? 1 : 0;
                text = j.dump(2);
            } else {
                auto r = verify::run_suite(spec);
                code = r.ok() ? 0 : 1;
                text = verify::report_json(r);
            }
            if (!json_out.empty()) {
                std::ofstream f(json_out);
                f << text << '\n';
            }
            std::cout << text << '\n';
            return code;
        }
        std::cout << out.dump(2) << '\n';
        return code;
    } catch (const Error& e) {
        json err{{"error", error_name(e.code())}, {"message", e.what()}};
        std::cout << err.dump(2) << '\n';
        return 2;
    }
}
