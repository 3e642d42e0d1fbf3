#include "hqm/cli.hpp"

#include "hqm/bo.hpp"
#include "hqm/characters.hpp"
#include "hqm/covercount.hpp"
#include "hqm/json_io.hpp"
#include "hqm/phipoly.hpp"
#include "hqm/quasimod.hpp"
#include "hqm/selftest.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hqm {

namespace {

constexpr int kDefaultDmax = 39; // trunc24 = 960

struct Emitted {
    Json doc;
    int code = kExitOk;
};

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size())
            throw std::invalid_argument(std::string("malformed ") + what + ": " + text);
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument(std::string("empty ") + what);
    return out;
}

std::string markdown_table(const Json& doc)
{
    std::ostringstream s;
    if (doc.contains("checks")) {
        s << "| # | check | result | ms |\n|---|---|---|---|\n";
        for (const auto& c : doc["checks"])
            s << "| " << c["id"].get<int>() << " | " << c["name"].get<std::string>() << " | "
              << (c["pass"].get<bool>() ? "PASS" : "FAIL") << " | " << c["ms"].get<long>() << " |\n";
    } else if (doc.contains("coefficients") && doc["coefficients"].is_array()) {
        s << "| d | coefficient |\n|---|---|\n";
        long d = doc.value("first_degree", 0L);
        for (const auto& c : doc["coefficients"])
            s << "| " << d++ << " | " << c.get<std::string>() << " |\n";
    } else if (doc.contains("monomials")) {
        s << "| exponents | coefficient |\n|---|---|\n";
        for (const auto& m : doc["monomials"])
            s << "| " << m[0].dump() << " | " << m[1].get<std::string>() << " |\n";
    } else if (doc.contains("terms")) {
        s << "| exponent/24 | coefficient |\n|---|---|\n";
        for (const auto& t : doc["terms"])
            s << "| " << t[0].get<long>() << " | " << t[1].get<std::string>() << " |\n";
    } else {
        s << "```json\n" << doc.dump(2) << "\n```\n";
    }
    return s.str();
}

Json series_coefficients(const QSeries& s, long from)
{
    Json a = Json::array();
    for (long d = from; d < s.known_q_orders(); ++d)
        a.push_back(s.coeff_q(d).str());
    return a;
}

Emitted cmd_counts(int m, long g, int dmax, bool disconnected)
{
    CountSeries c;
    if (g == 1 && !disconnected)
        c = CountSeries{m, 1, 0, true, F1_series(dmax)};
    else
        c = disconnected ? disconnected_F(m, g, dmax) : connected_F(m, g, dmax);
    Json j = count_series_to_json(c);
    j["first_degree"] = 1;
    j["coefficients"] = series_coefficients(c.series, 1);
    return {j};
}

Emitted cmd_phi(int m, const std::string& method)
{
    if (method == "symbolic")
        return {ypoly_to_json(build_phi_symbolic(m))};
    const InterpolatedPhi ip = build_phi_interpolate_escalating(m);
    Json j = ypoly_to_json(ip.phi);
    j["degree_bound"] = ip.degree_bound;
    return {j};
}

Emitted cmd_character(const std::string& lambda_text, int m, const std::string& route)
{
    const Partition lambda(parse_int_list(lambda_text, "partition"));
    if (m < 2)
        throw std::invalid_argument("m must be >= 2");
    Rational f;
    if (route == "mn")
        f = f_mn(lambda, m);
    else if (route == "residue")
        f = lambda.size() < m ? Rational() : f_residue(lambda, m);
    else
        f = f_phi(lambda, m, phi_cached(m));
    return {Json(f.str())};
}

Emitted cmd_oracle(int m, int d, int b, bool connected)
{
    const Rational r = connected ? brute_connected_count(m, d, b) : brute_hom_count(m, d, b);
    return {Json(r.str())};
}

Emitted cmd_fit(int m, long g, int dmax, std::optional<int> wmax, int margin, bool single_weight)
{
    if (g < 2)
        throw std::invalid_argument("fit: g must be >= 2");
    const CountSeries c = connected_F(m, g, dmax);
    const int w0 = wmax ? *wmax : m * c.b.value_or(0) + 2;
    const FitResult r = wmax || single_weight ? fit_qm(c.series, w0, margin, single_weight)
                                              : fit_with_escalation(c.series, w0, w0 + 8, margin);
    Json j{{"m", m}, {"g", g}, {"b", c.b ? Json(*c.b) : Json(nullptr)}, {"dmax", dmax}};
    j.update(fit_to_json(r));
    return {j};
}

Emitted cmd_bo(const std::string& k_text, int dmax, int margin)
{
    MultiIndex k = parse_int_list(k_text, "multi-index");
    const int w = expected_weight(k);
    const QSeries f = eta_series(trunc24_for(dmax)) * v_taylor(k, dmax);
    Json j{{"K", k}, {"expected_weight", w}, {"eta_A", qseries_to_json(f)}};
    if (w % 2) {
        j["vanishes"] = f.is_zero();
        return {j, f.is_zero() ? kExitOk : kExitMismatch};
    }
    j["fit"] = fit_to_json(fit_qm(f, w, margin));
    return {j};
}

Emitted cmd_bo_ztest(int m, int b, int dmax)
{
    const QSeries op = etaZ_via_operator(m, b, dmax, phi_cached(m));
    const QSeries direct = etaZ_direct(m, b, dmax);
    Json j{{"m", m}, {"b", b}, {"dmax", dmax}};
    if (auto e = first_mismatch(op, direct)) {
        const long q = *e / QSeries::kDenomExp;
        j["result"] = "FAIL";
        j["first_divergent_q"] = q;
        j["operator"] = op.coeff_q(q).str();
        j["direct"] = direct.coeff_q(q).str();
        return {j, kExitMismatch};
    }
    j["result"] = "PASS";
    j["coefficients"] = series_coefficients(direct, 0);
    return {j};
}

Emitted cmd_selftest(std::optional<int> only, std::ostream& err)
{
    std::vector<CheckResult> results;
    if (only)
        results.push_back(run_check(*only));
    else
        for (int id = 1; id <= kCheckCount; ++id) {
            results.push_back(run_check(id));
            err << format_check(results.back()) << '\n';
        }
    Json checks = Json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        checks.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"ms", r.ms}, {"detail", r.detail}});
    }
    return {Json{{"pass", all}, {"checks", checks}}, all ? kExitOk : kExitMismatch};
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts of m-simple covers of an elliptic curve and their quasimodular fits", "hqm"};
    app.require_subcommand(1);
    bool markdown = false;
    std::string output;
    app.add_flag("--markdown", markdown, "Render tables instead of JSON");
    app.add_option("--output", output, "Write the document to this file");

    int m = 2, dmax = kDefaultDmax, d = 0, b = 0, k = 4, margin = 8;
    long g = 2;
    bool disconnected = false, connected = false, single_weight = false;
    std::string method = "symbolic", route = "mn", lambda, multi;
    std::optional<int> wmax, only;

    auto* counts = app.add_subcommand("counts", "Counting function F_g^(m) as a q-series");
    counts->add_option("--m", m, "Ramification index")->default_val(2);
    counts->add_option("--g", g, "Genus")->required();
    counts->add_option("--dmax", dmax, "Highest degree")->default_val(kDefaultDmax);
    counts->add_flag("--disconnected", disconnected, "Include disconnected covers");

    auto* phi = app.add_subcommand("phi", "Character polynomial phi_m");
    phi->add_option("--m", m, "Cycle length")->required();
    phi->add_option("--method", method, "symbolic or interpolate")
        ->check(CLI::IsMember({"symbolic", "interpolate"}))
        ->default_val("symbolic");

    auto* character = app.add_subcommand("character", "Modified character f_lambda on an m-cycle");
    character->add_option("--lambda", lambda, "Parts, e.g. 3,1")->required();
    character->add_option("--m", m, "Cycle length")->required();
    character->add_option("--route", route, "mn, residue or phi")
        ->check(CLI::IsMember({"mn", "residue", "phi"}))
        ->default_val("mn");

    auto* oracle = app.add_subcommand("oracle", "Brute-force monodromy count divided by d!");
    oracle->add_option("--m", m, "Cycle length")->required();
    oracle->add_option("--d", d, "Degree")->required();
    oracle->add_option("--b", b, "Branch points")->required();
    oracle->add_flag("--connected", connected, "Transitive tuples only");

    auto* fit = app.add_subcommand("fit", "Fit F_g^(m) in Q[E2, E4, E6]");
    fit->add_option("--m", m, "Ramification index")->default_val(2);
    fit->add_option("--g", g, "Genus")->required();
    fit->add_option("--dmax", dmax, "Highest degree")->default_val(kDefaultDmax);
    fit->add_option("--wmax", wmax, "Weight bound (default m*b+2, escalating by 2)");
    fit->add_option("--margin", margin, "Surplus verification coefficients")->default_val(8);
    fit->add_flag("--single-weight", single_weight, "Restrict to monomials of weight exactly wmax");

    auto* eis = app.add_subcommand("eisenstein", "Eisenstein series E_k");
    eis->add_option("--k", k, "Weight: 2, 4 or 6")->default_val(4);
    eis->add_option("--dmax", dmax, "Highest degree")->default_val(kDefaultDmax);

    auto* bo = app.add_subcommand("bo", "eta A_K and its quasimodular fit");
    bo->add_option("--K", multi, "k_2,k_3,...")->required();
    bo->add_option("--dmax", dmax, "Highest degree")->default_val(30);
    bo->add_option("--margin", margin, "Surplus verification coefficients")->default_val(8);

    auto* ztest = app.add_subcommand("bo-ztest", "Operator route against character sums");
    ztest->add_option("--m", m, "Ramification index")->required();
    ztest->add_option("--b", b, "Branch points")->required();
    ztest->add_option("--dmax", dmax, "Highest degree")->default_val(15);

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
    selftest->add_option("--only", only, "Run a single check")->check(CLI::Range(1, kCheckCount));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    Emitted result;
    try {
        if (dmax < 0)
            throw std::invalid_argument("dmax must be nonnegative");
        if (*counts)
            result = cmd_counts(m, g, dmax, disconnected);
        else if (*phi)
            result = cmd_phi(m, method);
        else if (*character)
            result = cmd_character(lambda, m, route);
        else if (*oracle)
            result = cmd_oracle(m, d, b, connected);
        else if (*fit)
            result = cmd_fit(m, g, dmax, wmax, margin, single_weight);
        else if (*eis)
            result = {qseries_to_json(eisenstein(k, dmax))};
        else if (*bo)
            result = cmd_bo(multi, dmax, margin);
        else if (*ztest)
            result = cmd_bo_ztest(m, b, dmax);
        else if (*selftest)
            result = cmd_selftest(only, err);
    } catch (const FitFailure& e) {
        err << "fit failure at q^" << e.q_order() << ": " << e.what() << '\n';
        return kExitMismatch;
    } catch (const Underdetermined& e) {
        err << "underdetermined (need dmax >= " << e.required_dmax() << "): " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const std::string text = markdown ? markdown_table(result.doc) : result.doc.dump() + "\n";
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream f(output);
        if (!(f << text)) {
            err << "error: cannot write " << output << '\n';
            return kExitUsage;
        }
    }
    return result.code;
}

} // namespace hqm
