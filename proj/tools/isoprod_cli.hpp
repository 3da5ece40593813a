#pragma once

// Command-line front end. Every command builds one output record
//
//     { "command": ..., "inputs": {...}, "results": {...}, "caveats": [...] }
//
// with all integers as decimal strings, then prints it either as JSON or as
// an indented text rendering of the same record. The renderer only formats;
// every number comes from a library call.

#include "isoprod.hpp"
#include "isoprod/acceptance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace isoprod::cli {

using json = nlohmann::json;
using Big = BigInt;

enum exit_code : int { ok = 0, usage = 1, domain = 2 };

/// Raised for malformed user input; maps to exit code 1.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kPerBundleCaveat =
    "eps = eps* is read per bundle from the existence of a weakly submaximal elliptic curve";
inline constexpr const char* kDisplayFloorCaveat =
    "no weakly submaximal elliptic curve: eps lies in (0, sqrt(L^2)]; the lower end 4/3 is a "
    "display floor, not a proven bound for this bundle";

// --- conversions -----------------------------------------------------------

template <exact_integer Int>
json to_json(const Int& x) {
    return to_decimal(x);
}

template <exact_integer Int>
json to_json(const Pair<Int>& p) {
    return json::array({to_decimal(p.x), to_decimal(p.y)});
}

template <exact_integer Int>
json to_json(const NSClass<Int>& l) {
    return json::array({to_decimal(l.a1), to_decimal(l.a2), to_decimal(l.a3)});
}

template <exact_integer Int>
json to_json(const PPClass<Int>& p) {
    return json::array({to_decimal(p.A()), to_decimal(p.B()), to_decimal(p.C())});
}

inline Big parse_big(const std::string& text, const std::string& what) {
    try {
        return parse_integer<Big>(text);
    } catch (const std::invalid_argument& e) {
        throw usage_error(what + ": " + e.what());
    }
}

inline Checked64 to_checked(const Big& x, const std::string& what) {
    try {
        return Checked64(to_ll(x));
    } catch (const std::overflow_error&) {
        throw precondition_error(error_kind::invalid_argument, what + " is too large for a scan");
    }
}

inline std::vector<Big> parse_class(const std::string& text) {
    std::vector<Big> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(parse_big(item, "--class"));
    if (out.size() != 3 || text.empty() || text.back() == ',')
        throw usage_error("--class expects three comma-separated integers, got '" + text + "'");
    return out;
}

// --- commands ----------------------------------------------------------------

inline json record(const std::string& command, json inputs) {
    return json{{"command", command}, {"inputs", std::move(inputs)}, {"results", json::object()},
                {"caveats", json::array()}};
}

inline json cmd_eps(const std::string& d_text, const std::string& class_text, const std::string& basis) {
    SurfaceContext<Big> ctx(parse_big(d_text, "--d"));
    auto c = parse_class(class_text);
    NSClass<Big> l = basis == "delta" ? from_delta_basis(ctx, c[0], c[1], c[2]) : NSClass<Big>{c[0], c[1], c[2]};
    json rec = record("eps", {{"d", to_json(ctx.d())},
                              {"class", json::array({to_decimal(c[0]), to_decimal(c[1]), to_decimal(c[2])})},
                              {"basis", basis}});
    auto rep = seshadri_report(ctx, l);
    json& res = rec["results"];
    res["class_nabla"] = to_json(l);
    res["eps_star"] = to_json(rep.eps_star);
    res["eps_star_witness"] = to_json(rep.eps_star_witness);
    res["L_squared"] = to_json(rep.L_squared);
    res["sqrt_L_squared_is_integer"] = rep.sqrt_is_integer;
    res["has_weakly_submaximal"] = rep.has_submaximal;
    if (rep.eps_is_exact()) {
        res["eps"] = std::get<Fraction<Big>>(rep.eps).str();
        res["witness_pair"] = to_json(*rep.witness_pair);
    } else {
        const auto& iv = std::get<EpsInterval<Big>>(rep.eps);
        res["eps_interval"] = {{"lower", iv.lower.str()}, {"upper", "sqrt(" + to_decimal(iv.upper_square) + ")"}};
        rec["caveats"].push_back(kDisplayFloorCaveat);
    }
    if (rep.per_bundle_assumption) rec["caveats"].push_back(kPerBundleCaveat);
    return rec;
}

inline json cmd_survey(const std::string& d_text, const std::string& bound_text) {
    SurfaceContext<Big> ctx(parse_big(d_text, "--d"));
    Big bound = parse_big(bound_text, "--bound");
    if (bound < 0) throw precondition_error(error_kind::invalid_argument, "--bound must be >= 0");
    json rec = record("survey", {{"d", to_json(ctx.d())}, {"bound", to_json(bound)}});
    auto s = survey(ctx, bound);
    json& res = rec["results"];
    res["ample_classes"] = std::to_string(s.ample_classes);
    res["with_weakly_submaximal"] = std::to_string(s.with_submaximal);
    res["without_weakly_submaximal"] = std::to_string(s.without_submaximal);
    json hist = json::array();
    for (const auto& [value, count] : s.eps_star_histogram)
        hist.push_back({{"eps_star", to_decimal(value)}, {"count", std::to_string(count)}});
    res["eps_star_histogram"] = hist;
    json none = json::array();
    for (const auto& l : s.no_submaximal) none.push_back(to_json(l));
    res["classes_without_weakly_submaximal"] = none;
    return rec;
}

inline json cmd_pp(const std::string& d_text) {
    Big d = parse_big(d_text, "--d");
    json rec = record("pp", {{"d", to_json(d)}});
    json rows = json::array();
    for (const auto& p : enumerate_pp_forms(d)) {
        rows.push_back({{"form", to_json(p)},
                        {"kind", to_string(classify(p))},
                        {"eps", seshadri_of_pp(p).str()}});
    }
    rec["results"]["classes"] = rows;
    rec["results"]["irreducible_exists"] = exists_irreducible(d);
    return rec;
}

inline json cmd_kani(const std::string& limit_text) {
    Big limit_big = parse_big(limit_text, "--limit");
    Checked64 limit = to_checked(limit_big, "--limit");
    json rec = record("kani", {{"limit", to_json(limit_big)}});
    auto list = kani_list(limit);
    json values = json::array();
    for (const auto& v : list.values) values.push_back(to_decimal(v));
    rec["results"]["values"] = values;
    rec["results"]["count"] = std::to_string(list.values.size());
    rec["caveats"].push_back(list.caveat);
    return rec;
}

inline json cmd_idoneal(const std::string& limit_text) {
    Big limit_big = parse_big(limit_text, "--limit");
    Checked64 limit = to_checked(limit_big, "--limit");
    json rec = record("idoneal", {{"limit", to_json(limit_big)}});
    if (limit < Checked64(1)) throw precondition_error(error_kind::invalid_argument, "--limit must be >= 1");
    auto values = idoneal_numbers(limit);
    json arr = json::array();
    for (const auto& v : values) arr.push_back(to_decimal(v));
    rec["results"]["values"] = arr;
    rec["results"]["count"] = std::to_string(values.size());
    rec["caveats"].push_back("completeness is claimed only up to the scan limit");
    return rec;
}

inline json cmd_counterexample(const std::string& d_text) {
    SurfaceContext<Big> ctx(parse_big(d_text, "--d"));
    json rec = record("counterexample", {{"d", to_json(ctx.d())}});
    auto l = counterexample_bundle(ctx);
    auto cert = no_submaximal_certificate(ctx.d());
    auto star = eps_star(ctx, l);
    Big sq = self_intersection(ctx, l);
    json& res = rec["results"];
    res["bundle"] = to_json(l);
    res["ample"] = is_ample(ctx, l);
    res["L_squared"] = to_json(sq);
    res["L_squared_is_square"] = is_perfect_square(sq);
    res["isqrt_L_squared"] = to_json(isqrt(sq));
    res["eps_star"] = to_json(star.value);
    res["eps_star_witness"] = to_json(star.witness);
    res["has_weakly_submaximal"] = star.value * star.value <= sq;
    json pairs = json::array();
    for (const auto& p : cert.exceptional) pairs.push_back(to_json(p));
    res["form_certificate"] = {{"form", json::array({"2", "1", to_decimal(ctx.d())})},
                               {"shift", to_json(cert.shift)},
                               {"pairs_checked", std::to_string(cert.pairs_checked)},
                               {"exceptional_pairs", pairs},
                               {"holds", cert.holds}};
    rec["caveats"].push_back(
        "the bundle forces a non-integer Seshadri constant on X; its own constant need not be one");
    return rec;
}

inline json cmd_verify(const std::string& suite) {
    json rec = record("verify", {{"suite", suite}});
    auto criteria = acceptance::all_criteria();
    json rows = json::array();
    bool all = true;
    bool matched = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (suite != "all" && suite != std::to_string(i + 1)) continue;
        matched = true;
        auto r = criteria[i]();
        all = all && r.passed;
        rows.push_back({{"id", std::to_string(r.id)}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    if (!matched) throw usage_error("--suite must be 'all' or 1..8, got '" + suite + "'");
    rec["results"]["criteria"] = rows;
    rec["results"]["all_passed"] = all;
    return rec;
}

// --- rendering ---------------------------------------------------------------

namespace detail {
inline bool is_scalar_array(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (!e.is_primitive()) return false;
    return true;
}

inline std::string scalar(const json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

inline std::string inline_value(const json& j) {
    if (!j.is_array()) return scalar(j);
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + inline_value(j[i]);
    return s + ")";
}

inline bool is_flat(const json& j) {
    if (j.is_primitive()) return true;
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (!is_flat(e)) return false;
    return true;
}

inline void render(const json& j, std::ostream& out, int indent) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : j.items()) {
        if (is_flat(value) && !(value.is_array() && !is_scalar_array(value) && value.size() > 4)) {
            out << pad << key << " = " << inline_value(value) << '\n';
        } else if (value.is_object()) {
            out << pad << key << ":\n";
            render(value, out, indent + 2);
        } else {
            out << pad << key << ": " << value.size() << " entries\n";
            for (const auto& row : value) {
                if (row.is_object()) {
                    std::string line;
                    for (const auto& [k, v] : row.items()) line += (line.empty() ? "" : "  ") + k + "=" + inline_value(v);
                    out << pad << "  " << line << '\n';
                } else {
                    out << pad << "  " << inline_value(row) << '\n';
                }
            }
        }
    }
}
}  // namespace detail

inline std::string render_text(const json& rec) {
    std::ostringstream out;
    out << rec.at("command").get<std::string>() << '\n';
    out << "inputs:\n";
    detail::render(rec.at("inputs"), out, 2);
    out << "results:\n";
    detail::render(rec.at("results"), out, 2);
    if (!rec.at("caveats").empty()) {
        out << "caveats:\n";
        for (const auto& c : rec.at("caveats")) out << "  - " << c.get<std::string>() << '\n';
    }
    return out.str();
}

inline std::string render_json(const json& rec) { return rec.dump(2) + "\n"; }

// --- entry point ---------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Seshadri constants and principal polarizations on products of isogenous elliptic curves"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string d = "1", cls, basis = "nabla", bound = "3", limit = "500", suite = "all";
    auto add_d = [&](CLI::App* sub) { sub->add_option("--d", d, "minimal isogeny degree")->required(); };

    auto* eps = app.add_subcommand("eps", "eps*, L^2 and eps for one class");
    add_d(eps);
    eps->add_option("--class", cls, "a1,a2,a3")->required();
    eps->add_option("--basis", basis, "nabla (F1,F2,nabla) or delta (F1,F2,Delta)")
        ->check(CLI::IsMember({"nabla", "delta"}));

    auto* sv = app.add_subcommand("survey", "scan ample classes with |a_i| <= bound");
    add_d(sv);
    sv->add_option("--bound", bound, "coefficient bound");

    auto* pp = app.add_subcommand("pp", "principal polarization classes");
    add_d(pp);

    auto* kani = app.add_subcommand("kani", "d without irreducible principal polarization");
    kani->add_option("--limit", limit, "scan limit");

    auto* ido = app.add_subcommand("idoneal", "idoneal numbers by Grube's criterion");
    ido->add_option("--limit", limit, "scan limit");

    auto* ce = app.add_subcommand("counterexample", "bundle without weakly submaximal curve (d >= 3)");
    add_d(ce);

    auto* ver = app.add_subcommand("verify", "run the acceptance suites");
    ver->add_option("--suite", suite, "all or 1..8");

    for (auto* sub : {eps, sv, pp, kani, ido, ce, ver}) sub->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int rc = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return rc == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        json rec;
        if (eps->parsed()) rec = cmd_eps(d, cls, basis);
        else if (sv->parsed()) rec = cmd_survey(d, bound);
        else if (pp->parsed()) rec = cmd_pp(d);
        else if (kani->parsed()) rec = cmd_kani(limit);
        else if (ido->parsed()) rec = cmd_idoneal(limit);
        else if (ce->parsed()) rec = cmd_counterexample(d);
        else rec = cmd_verify(suite);
        out << (as_json ? render_json(rec) : render_text(rec));
        if (ver->parsed() && !rec["results"]["all_passed"].get<bool>()) return exit_code::domain;
        return exit_code::ok;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::domain;
    }
}

}  // namespace isoprod::cli
