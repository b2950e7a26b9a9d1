#include "parabolic/cli.hpp"

#include "parabolic/expr.hpp"
#include "parabolic/report.hpp"
#include "parabolic/twists.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace parabolic {

namespace {

struct Options {
    int degree = kDefaultDegree;
    std::string b = "2";
    std::string format = "text";
    std::string out;
    bool timing = false;

    std::string check;
    std::string xi = "formal";
    std::string zeta = "formal";
    std::string checks = "expansion";
    std::string eta = "1";
    std::string rep = "fund";
    std::string expr;
};

/// Bad flag values surface as usage errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational flag_rational(const std::string& flag, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const ParseError&) {
        throw UsageError(flag + ": expected a rational p/q, got '" + text + "'");
    }
}

ParamValue flag_param(const std::string& flag, const std::string& text)
{
    if (text == "formal")
        return std::nullopt;
    return flag_rational(flag, text);
}

/// Collects reports, stamping each batch with its wall time when timing is on.
class Session {
public:
    explicit Session(bool timing) : timing_(timing) {}

    void run(const std::function<std::vector<Report>()>& f)
    {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<Report> batch = f();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        for (auto& r : batch) {
            r.millis = timing_ ? ms.count() : 0;
            reports_.push_back(std::move(r));
        }
    }

    const std::vector<Report>& reports() const { return reports_; }

    bool all_pass() const
    {
        return std::all_of(reports_.begin(), reports_.end(), [](const Report& r) { return r.pass; });
    }

private:
    bool timing_;
    std::vector<Report> reports_;
};

template <std::size_t Legs>
Report symbolic(std::string name, const CheckResult<Legs>& c, int degree)
{
    Report r;
    r.name = std::move(name);
    r.pass = c.holds;
    r.degree = degree;
    r.residual = summarize(c);
    return r;
}

Report exact(std::string name, const MatrixCheck& c)
{
    Report r;
    r.name = std::move(name);
    r.pass = c.holds;
    r.residual = summarize(c);
    return r;
}

std::vector<Report> coproduct_reports(const std::string& prefix, const std::vector<CoproductEntry>& rows, int degree)
{
    std::vector<Report> out;
    for (const auto& e : rows) {
        Report r;
        r.name = prefix + e.generator;
        r.pass = e.ok();
        r.degree = degree;
        r.details["closed_form_match"] = e.match.holds;
        r.details["closed_form_required"] = e.closed_form_required;
        if (!e.match.holds)
            r.details["closed_form_residual"] = leading_residual(e.match.residual);
        if (e.definitional)
            r.details["definitional"] = e.definitional->holds;
        if (e.amended)
            r.details["amended_closed_form_match"] = e.amended->holds;
        if (e.closed_form_required && !e.match.holds)
            r.residual = summarize(e.match);
        else if (e.definitional && !e.definitional->holds)
            r.residual = summarize(*e.definitional);
        out.push_back(std::move(r));
    }
    return out;
}

void verify(Session& s, const Options& o, const Rational& b)
{
    const int d = o.degree;
    const std::string& c = o.check;
    if (c == "cocycle") {
        s.run([&] {
            Report r = symbolic("cocycle", cocycle_check(parabolic_twist(d, b)), d);
            r.details["b"] = to_string(b);
            return std::vector<Report>{r};
        });
        s.run([&] {
            Report r = exact("cocycle.fundamental", cocycle_check_fundamental(b));
            r.details["b"] = to_string(b);
            return std::vector<Report>{r};
        });
    } else if (c == "counit") {
        s.run([&] {
            Report r;
            r.name = "counit";
            r.degree = d;
            r.pass = counit_check(parabolic_twist(d, b));
            r.details["b"] = to_string(b);
            return std::vector<Report>{r};
        });
    } else if (c == "verma") {
        s.run([&] {
            const VermaResult v = verma_check(d);
            Report nested;
            nested.name = "verma.nested";
            nested.pass = v.nested_13 && v.nested_32;
            nested.details = {{"E13_E13_E32", v.nested_13}, {"E32_E32_E13", v.nested_32}};
            return std::vector<Report>{nested, symbolic("verma.log", v.log_identity, d)};
        });
        s.run([&] { return std::vector<Report>{exact("verma.fundamental", verma_check_rep(fundamental()))}; });
    } else if (c == "coproducts") {
        s.run([&] { return coproduct_reports("coproduct.peripheric.", peripheric_coproducts(d), d); });
        s.run([&] { return coproduct_reports("coproduct.parabolic.", parabolic_coproducts(d), d); });
    } else if (c == "factorized") {
        s.run([&] {
            const FactorizedResult f = factorized_drinfeld_check(d);
            return std::vector<Report>{symbolic("factorized.left", f.left, d), symbolic("factorized.right", f.right, d),
                                       symbolic("factorized.group_like", f.group_like, d)};
        });
    } else if (c == "constraints") {
        s.run([&] {
            const ConstraintResult k = constraint_check(TwistSpec{TwistKind::Parabolic, std::nullopt, std::nullopt, b}, d);
            Report r = symbolic("constraints", k.cocycle, d);
            r.pass = k.ok();
            r.details = {{"b", to_string(k.b)},
                         {"beta", to_string(k.beta)},
                         {"h1", to_string(k.h1)},
                         {"h2", to_string(k.h2)},
                         {"h1_plus_b_h2_is_H23p", k.sum_ok},
                         {"h2_is_H13p", k.h2_ok},
                         {"beta_plus_b_is_1", k.beta_ok},
                         {"h1_acts_on_E13", k.h1_acts_on_e13},
                         {"cocycle", k.cocycle.holds}};
            return std::vector<Report>{r};
        });
    } else if (c == "composition") {
        s.run([&] {
            const CompositionResult k = composition_check(d, b);
            return std::vector<Report>{symbolic("composition.four_factor", k.four_factor, d),
                                       symbolic("composition.dr_times_p", k.dr_times_p, d)};
        });
    }
}

nlohmann::json rmatrix(Session& s, const Options& o)
{
    const ParamValue xi = flag_param("--xi", o.xi);
    const ParamValue zeta = flag_param("--zeta", o.zeta);
    const Rational eta = flag_rational("--eta", o.eta);

    std::vector<std::string> checks;
    std::stringstream list(o.checks);
    for (std::string item; std::getline(list, item, ',');)
        if (!item.empty())
            checks.push_back(item);
    for (const auto& c : checks)
        if (c != "expansion" && c != "qybe" && c != "triangular" && c != "semiclassical")
            throw UsageError("--check: unknown check '" + c + "'");

    PolyMatrix R;
    s.run([&] {
        R = r_matrix_fundamental(xi, zeta);
        return std::vector<Report>{};
    });

    for (const auto& c : checks) {
        if (c == "expansion") {
            s.run([&] {
                const ExpansionResult e = expansion_check(R, xi, zeta);
                Report r;
                r.name = "rmatrix.expansion";
                r.pass = e.holds();
                r.details["monomials_compared"] = e.monomials_compared;
                nlohmann::json mism = nlohmann::json::array();
                for (const auto& m : e.mismatches)
                    mism.push_back({{"xi", m.params.xi}, {"zeta", m.params.zeta},
                                    {"leading", leading_entry(m.computed - m.expected)}});
                r.details["mismatches"] = mism;
                if (!e.mismatches.empty()) {
                    PolyMatrix diff = R - substitute(reference_r_matrix(), xi, zeta);
                    r.residual = summarize(diff);
                }
                return std::vector<Report>{r};
            });
        } else if (c == "qybe") {
            s.run([&] { return std::vector<Report>{exact("rmatrix.qybe", qybe_check(R))}; });
        } else if (c == "triangular") {
            s.run([&] { return std::vector<Report>{exact("rmatrix.triangular", triangularity_check(R))}; });
        } else {
            s.run([&] {
                const SemiclassicalResult sc = semiclassical_check(eta);
                Report r;
                r.name = "rmatrix.semiclassical";
                r.pass = sc.ok();
                r.residual = summarize(PolyMatrix(sc.first_order - sc.classical));
                r.details = {{"eta", to_string(eta)},
                             {"order_zero_identity", sc.order_zero_identity},
                             {"first_order_equals_r", sc.matches},
                             {"first_order_equals_minus_r", sc.matches_negated}};
                return std::vector<Report>{r};
            });
        }
    }
    return to_json(R);
}

nlohmann::json eval(Session& s, const Options& o, int& legs)
{
    const Expr e = parse(o.expr);
    nlohmann::json value;
    s.run([&] {
        Report r;
        r.name = "eval";
        r.pass = true;
        if (o.rep == "fund") {
            const MatrixValue v = evaluate_matrix(e);
            legs = v.legs;
            value = to_json(v.matrix);
        } else {
            const SymbolicValue v = evaluate_symbolic(e, o.degree);
            legs = int(v.index()) + 1;
            value = to_string(v);
            r.degree = o.degree;
        }
        r.details["expr"] = print(e);
        r.details["rep"] = o.rep;
        return std::vector<Report>{r};
    });
    return value;
}

std::string render(const Options& o, const Session& s, const nlohmann::json& extra)
{
    if (o.format == "json") {
        nlohmann::json doc = extra;
        doc["reports"] = nlohmann::json::array();
        for (const auto& r : s.reports())
            doc["reports"].push_back(to_json(r));
        return doc.dump(2) + "\n";
    }
    std::string out;
    for (const auto& r : s.reports())
        out += to_text(r) + "\n";
    if (extra.contains("matrix")) {
        out += "R =\n";
        for (const auto& row : extra["matrix"]) {
            std::string line;
            for (const auto& cell : row)
                line += (line.empty() ? "  [" : ", ") + cell.get<std::string>();
            out += line + "]\n";
        }
    }
    if (extra.contains("value")) {
        const auto& v = extra["value"];
        if (v.is_string()) {
            out += v.get<std::string>() + "\n";
        } else {
            for (const auto& row : v) {
                std::string line;
                for (const auto& cell : row)
                    line += (line.empty() ? "  [" : ", ") + cell.get<std::string>();
                out += line + "]\n";
            }
        }
    }
    return out;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact verification of the elementary parabolic twist of sl(3).", "ptwist"};
    app.require_subcommand(1);
    app.add_option("--degree", o.degree, "Truncation degree of symbolic checks")->check(CLI::Range(1, 24));
    app.add_option("--b", o.b, "Parameter b of the composite twist");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", o.out, "Write the output to this file");
    app.add_flag("--timing", o.timing, "Record wall time per check");

    auto* verify_cmd = app.add_subcommand("verify", "Run one family of identity checks")->fallthrough();
    verify_cmd->add_option("check", o.check)
        ->required()
        ->check(CLI::IsMember({"cocycle", "counit", "verma", "coproducts", "factorized", "constraints", "composition"}));

    auto* rmatrix_cmd = app.add_subcommand("rmatrix", "Fundamental R-matrix and its checks")->fallthrough();
    rmatrix_cmd->add_option("--xi", o.xi, "Rational value or 'formal'");
    rmatrix_cmd->add_option("--zeta", o.zeta, "Rational value or 'formal'");
    rmatrix_cmd->add_option("--check", o.checks, "Comma-separated: expansion,qybe,triangular,semiclassical");
    rmatrix_cmd->add_option("--eta", o.eta, "Ray zeta = eta xi for the semiclassical check");

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an algebra expression")->fallthrough();
    eval_cmd->add_option("--rep", o.rep, "fund (exact 3x3 matrices) or universal (PBW series)")
        ->check(CLI::IsMember({"fund", "universal"}));
    eval_cmd->add_option("--expr", o.expr)->required();

    auto* limits_cmd = app.add_subcommand("limits", "Limits of the twist at zeta = 0 and xi = 0")->fallthrough();

    std::vector<std::string> argv_store{"ptwist"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    Session session(o.timing);
    nlohmann::json extra = nlohmann::json::object();
    try {
        const Rational b = flag_rational("--b", o.b);
        if (verify_cmd->parsed()) {
            verify(session, o, b);
        } else if (rmatrix_cmd->parsed()) {
            extra["matrix"] = rmatrix(session, o);
        } else if (eval_cmd->parsed()) {
            int legs = 1;
            extra["value"] = eval(session, o, legs);
            extra["legs"] = legs;
        } else if (limits_cmd->parsed()) {
            session.run([&] {
                const LimitResult l = limits_check(o.degree);
                return std::vector<Report>{symbolic("limits.zeta_to_zero", l.zeta_to_zero, o.degree),
                                           symbolic("limits.xi_to_zero", l.xi_to_zero, o.degree)};
            });
        }
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const AlgebraError& e) {
        err << "error: " << e.what() << "\n";
        return kExitAlgebraError;
    }

    const std::string text = render(o, session, extra);
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            err << "cannot write " << o.out << "\n";
            return kExitUsage;
        }
        f << text;
    }
    return session.all_pass() ? kExitPass : kExitCheckFailed;
}

} // namespace parabolic
