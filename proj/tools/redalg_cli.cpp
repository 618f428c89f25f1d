// Command-line front end: parse expressions, rewrite to normal form, and
// run the verification suites.  Exit codes: 0 all checks passed, 1 a
// verification failed, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "redalg/drsl2.hpp"
#include "redalg/expr.hpp"
#include "redalg/ore.hpp"
#include "redalg/presentation_io.hpp"
#include "redalg/report.hpp"
#include "redalg/rewrite.hpp"
#include "redalg/weylmod.hpp"

using namespace redalg;
using nlohmann::ordered_json;

namespace {

constexpr const char* kWeightConventionNote =
    "h-weights are (-2, 0, +2) for (z-, t, z+): [h, z-] = -2 z-; the "
    "lowering generator's weight is negative so that moving f(h) across a "
    "word of weight m sends h to h - m";

ordered_json element_json(const NCElement& e) {
    ordered_json terms = ordered_json::array();
    for (const auto& [w, c] : e.terms()) {
        ordered_json term;
        term["coeff"] = {{"num", c.num().str()}, {"den", c.den().str()}};
        ordered_json word = ordered_json::array();
        for (const Generator& g : w) word.push_back(g.name);
        term["word"] = std::move(word);
        terms.push_back(std::move(term));
    }
    return terms;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RatFunc pure_coefficient(const NCElement& e, const std::string& what) {
    if (e.is_zero()) return RatFunc();
    if (e.term_count() == 1 && e.terms().begin()->first.empty())
        return e.terms().begin()->second;
    throw std::invalid_argument(what + " must be a pure coefficient");
}

// Options shared by the commands that work on a presentation.
struct PresentationOpts {
    std::string path;

    Presentation load_or_default() const {
        if (path.empty()) return build_drsl2().presentation;
        return read_presentation(read_file(path));
    }
};

int report_exit(const Report& rep, bool json) {
    if (json)
        std::cout << to_json_string(rep) << "\n";
    else
        std::cout << render_text(rep);
    return rep.ok() ? 0 : 1;
}

void append(Report& into, const Report& from) {
    for (const auto& c : from.checks) into.checks.push_back(c);
    for (const auto& [k, v] : from.meta) into.meta[k] = v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact rewriting engine for the diagonal reduction algebra of "
        "sl(2)"};
    app.require_subcommand(1);
    int exit_code = 0;

    // normalize ------------------------------------------------------------
    struct {
        std::string expr;
        bool json = false;
        std::size_t max_steps = kDefaultMaxSteps;
        PresentationOpts pres;
    } norm;
    auto* cmd_norm =
        app.add_subcommand("normalize", "rewrite an expression to its "
                                        "ordered normal form");
    cmd_norm->add_option("expr", norm.expr, "expression to normalize")
        ->required();
    cmd_norm->add_flag("--json", norm.json, "emit JSON");
    cmd_norm->add_option("--max-steps", norm.max_steps,
                         "rewriting step guard");
    cmd_norm->add_option("--presentation", norm.pres.path,
                         "presentation file to use instead of the built-in");
    cmd_norm->callback([&]() {
        Presentation p = norm.pres.load_or_default();
        NCElement e = parse_element(norm.expr, p.generators());
        NCElement nf = normal_form(p, e, norm.max_steps);
        if (norm.json) {
            ordered_json out;
            out["input"] = norm.expr;
            out["normal_form"] = render(nf);
            out["terms"] = element_json(nf);
            out["meta"] = {{"weight_convention", kWeightConventionNote}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << render(nf) << "\n";
        }
    });

    // commutator -----------------------------------------------------------
    struct {
        std::string lhs, rhs;
        bool json = false;
        std::size_t max_steps = kDefaultMaxSteps;
        PresentationOpts pres;
    } comm;
    auto* cmd_comm = app.add_subcommand(
        "commutator", "normal form of a*b - b*a for two expressions");
    cmd_comm->add_option("a", comm.lhs, "left expression")->required();
    cmd_comm->add_option("b", comm.rhs, "right expression")->required();
    cmd_comm->add_flag("--json", comm.json, "emit JSON");
    cmd_comm->add_option("--max-steps", comm.max_steps,
                         "rewriting step guard");
    cmd_comm->add_option("--presentation", comm.pres.path,
                         "presentation file to use instead of the built-in");
    cmd_comm->callback([&]() {
        Presentation p = comm.pres.load_or_default();
        NCElement a = parse_element(comm.lhs, p.generators());
        NCElement b = parse_element(comm.rhs, p.generators());
        NCElement nf = normal_form(p, a * b - b * a, comm.max_steps);
        if (comm.json) {
            ordered_json out;
            out["input"] = {{"a", comm.lhs}, {"b", comm.rhs}};
            out["normal_form"] = render(nf);
            out["terms"] = element_json(nf);
            out["meta"] = {{"weight_convention", kWeightConventionNote}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << render(nf) << "\n";
        }
    });

    // center-check ----------------------------------------------------------
    struct {
        bool json = false;
        std::size_t max_steps = kDefaultMaxSteps;
    } center;
    auto* cmd_center = app.add_subcommand(
        "center-check",
        "verify that both central elements commute with every generator");
    cmd_center->add_flag("--json", center.json, "emit JSON");
    cmd_center->add_option("--max-steps", center.max_steps,
                           "rewriting step guard");
    cmd_center->callback([&]() {
        DRsl2 alg = build_drsl2();
        Report rep;
        rep.title = "centrality of the two central elements";
        const NCElement c1 = casimir1(alg);
        const NCElement c2 = casimir2(alg);
        const NCElement fh = NCElement::scalar(
            RatFunc(Poly::variable(Var::h) + Poly(5),
                    Poly::variable(Var::h) + Poly(1)));
        auto check = [&](const std::string& name, const NCElement& a,
                         const NCElement& b) {
            NCElement nf =
                normal_form(alg.presentation, a * b - b * a, center.max_steps);
            rep.add(name, nf.is_zero(), render(nf));
        };
        check("[C1, z-] = 0", c1, NCElement::from_generator(alg.zm));
        check("[C1, t] = 0", c1, NCElement::from_generator(alg.t));
        check("[C1, z+] = 0", c1, NCElement::from_generator(alg.zp));
        check("[C2, z-] = 0", c2, NCElement::from_generator(alg.zm));
        check("[C2, t] = 0", c2, NCElement::from_generator(alg.t));
        check("[C2, z+] = 0", c2, NCElement::from_generator(alg.zp));
        check("[C1, f(h)] = 0 for a generic coefficient", c1, fh);
        check("[C2, f(h)] = 0 for a generic coefficient", c2, fh);
        check("[C1, C2] = 0", c1, c2);
        exit_code = report_exit(rep, center.json);
    });

    // confluence-check -------------------------------------------------------
    struct {
        bool json = false;
        std::size_t max_steps = kDefaultMaxSteps;
        PresentationOpts pres;
    } confl;
    auto* cmd_confl = app.add_subcommand(
        "confluence-check",
        "resolve every decreasing triple both ways and compare");
    cmd_confl->add_flag("--json", confl.json, "emit JSON");
    cmd_confl->add_option("--max-steps", confl.max_steps,
                          "rewriting step guard");
    cmd_confl->add_option("--presentation", confl.pres.path,
                          "presentation file to use instead of the built-in");
    cmd_confl->callback([&]() {
        Presentation p = confl.pres.load_or_default();
        ConfluenceReport cr = check_confluence(p, confl.max_steps);
        Report rep;
        rep.title = "confluence of the ordering relations";
        for (const TripleResolution& t : cr.triples) {
            std::string name = "triple " + t.triple[0] + " " + t.triple[1] +
                               " " + t.triple[2] + " resolves";
            rep.add(name, t.equal,
                    "both orders -> " + render(t.nf_left) +
                        (t.equal ? "" : "  vs  " + render(t.nf_right)));
        }
        rep.meta["weight_convention"] = kWeightConventionNote;
        rep.meta["relations"] = write_presentation(p);
        exit_code = report_exit(rep, confl.json);
    });

    // pbw-count ---------------------------------------------------------------
    struct {
        bool json = false;
        std::size_t max_deg = 4;
        PresentationOpts pres;
    } pbw;
    auto* cmd_pbw = app.add_subcommand(
        "pbw-count", "count ordered basis words up to a length bound");
    cmd_pbw->add_flag("--json", pbw.json, "emit JSON");
    cmd_pbw->add_option("--max-deg", pbw.max_deg, "maximum word length");
    cmd_pbw->add_option("--presentation", pbw.pres.path,
                        "presentation file to use instead of the built-in");
    cmd_pbw->callback([&]() {
        Presentation p = pbw.pres.load_or_default();
        std::vector<Word> basis = enumerate_basis(p, pbw.max_deg);
        std::vector<std::size_t> per_length(pbw.max_deg + 1, 0);
        for (const Word& w : basis) ++per_length[w.size()];
        if (pbw.json) {
            ordered_json out;
            out["max_deg"] = pbw.max_deg;
            out["per_length"] = per_length;
            out["total"] = basis.size();
            std::cout << out.dump(2) << "\n";
        } else {
            for (std::size_t l = 0; l < per_length.size(); ++l)
                std::cout << "length " << l << ": " << per_length[l] << "\n";
            std::cout << "total: " << basis.size() << "\n";
        }
    });

    // module-check -------------------------------------------------------------
    struct {
        bool json = false;
        std::uint64_t seed = 0;
        std::size_t trials = 100;
        std::size_t max_deg = 3;
    } modc;
    auto* cmd_mod = app.add_subcommand(
        "module-check",
        "verify the relations and central scalars on the power-basis module");
    cmd_mod->add_flag("--json", modc.json, "emit JSON");
    cmd_mod->add_option("--seed", modc.seed, "random seed");
    cmd_mod->add_option("--trials", modc.trials, "number of random elements");
    cmd_mod->add_option("--max-deg", modc.max_deg, "maximum word length");
    cmd_mod->callback([&]() {
        DRsl2 alg = build_drsl2();
        ActionCoeffs cf = power_basis_action();
        Report rep;
        rep.title = "module checks on the power-basis family";
        for (const RewriteRule& r : alg.presentation.rules()) {
            NCElement lhs =
                NCElement::from_word({r.lhs_first, r.lhs_second});
            bool ok = oracle_check_relation(cf, lhs, r.rhs);
            rep.add("relation " + r.lhs_first.name + " " + r.lhs_second.name +
                        " holds on the module",
                    ok);
        }
        try {
            CasimirScalars cs = casimir_scalars(cf, alg);
            rep.add("C1 acts by nu", cs.c1 == RatFunc::variable(Var::nu),
                    "acts by " + cs.c1.str());
            rep.add("C2 acts by a j-independent scalar", true,
                    "acts by " + cs.c2.str());
            rep.add("C2 scalar is -zeta",
                    cs.c2 == -RatFunc::variable(Var::zeta), cs.c2.str());
        } catch (const std::runtime_error& e) {
            rep.add("central elements act by scalars", false, e.what());
        }
        append(rep, oracle_agreement_probe(cf, alg, modc.seed, modc.trials,
                                           modc.max_deg));
        append(rep, verify_weyl_pair(cf, alg));
        rep.meta["weight_convention"] = kWeightConventionNote;
        exit_code = report_exit(rep, modc.json);
    });

    // prop2-solve -------------------------------------------------------------
    struct {
        bool json = false;
        std::string alpha0 = "M";
        std::string gamma_norm;
    } solve;
    auto* cmd_solve = app.add_subcommand(
        "prop2-solve",
        "closed-form solution of the module-coefficient recurrences");
    cmd_solve->add_flag("--json", solve.json, "emit JSON");
    cmd_solve->add_option("--alpha0", solve.alpha0,
                          "value of alpha at index 0 (pure coefficient)");
    cmd_solve->add_option(
        "--gamma-norm", solve.gamma_norm,
        "value of gamma-tilde at index 0 (default: the power-basis value)");
    cmd_solve->callback([&]() {
        RatFunc alpha0 =
            pure_coefficient(parse_element(solve.alpha0), "--alpha0");
        RatFunc nu = RatFunc::variable(Var::nu);
        RatFunc zeta = RatFunc::variable(Var::zeta);
        RatFunc gamma_norm;
        if (solve.gamma_norm.empty()) {
            const RatFunc quarter{Rational(1, 4)};
            RatFunc a0p2 = alpha0 + RatFunc(2);
            gamma_norm = -(alpha0 * (alpha0 + RatFunc(4)) * quarter +
                           nu.pow(2) * quarter / a0p2.pow(2) + zeta);
        } else {
            gamma_norm = pure_coefficient(parse_element(solve.gamma_norm),
                                          "--gamma-norm");
        }
        ActionCoeffs cf = solve_recurrences(alpha0, nu, gamma_norm);

        Report rep;
        rep.title = "recurrence solution for the module coefficients";
        RatFunc two{Rational(2)};
        bool r_alpha =
            shift_var(cf.alpha, Var::j, Rational(-1)) + two == cf.alpha;
        rep.add("alpha(j) = alpha(j-1) + 2", r_alpha);
        bool r_beta = (cf.alpha + two) * cf.beta ==
                      cf.alpha * shift_var(cf.beta, Var::j, Rational(-1));
        rep.add("(alpha(j)+2) beta(j) = alpha(j) beta(j-1)", r_beta);
        RatFunc gt = (cf.alpha + RatFunc(3)) / (cf.alpha + two) * cf.gamma;
        RatFunc increment = (cf.alpha + RatFunc(1)) / cf.alpha *
                            (cf.alpha - cf.beta.pow(2) / cf.alpha);
        bool r_gamma =
            shift_var(gt, Var::j, Rational(-1)) == gt + increment;
        rep.add("gamma-tilde(j-1) = gamma-tilde(j) + increment", r_gamma);

        RatFunc y = RatFunc::variable(Var::h);
        RatFunc lhs = RatFunc(4) * (y + RatFunc(1)) /
                      (y.pow(2) * (y + two).pow(2));
        RatFunc rhs = y.pow(2).inv() - (y + two).pow(2).inv();
        rep.add("4(y+1)/(y^2 (y+2)^2) = 1/y^2 - 1/(y+2)^2", lhs == rhs);

        rep.meta["alpha"] = cf.alpha.str();
        rep.meta["beta"] = cf.beta.str();
        rep.meta["gamma"] = cf.gamma.str();
        exit_code = report_exit(rep, solve.json);
    });

    // ore ---------------------------------------------------------------------
    struct {
        std::string expr;
        int k = 0;
        bool json = false;
        PresentationOpts pres;
    } ore;
    auto* cmd_ore = app.add_subcommand(
        "ore", "common-multiple witness for the denominator h + k");
    cmd_ore->add_option("expr", ore.expr, "element a")->required();
    cmd_ore->add_option("--k", ore.k, "offset of the denominator h + k");
    cmd_ore->add_flag("--json", ore.json, "emit JSON");
    cmd_ore->add_option("--presentation", ore.pres.path,
                        "presentation file to use instead of the built-in");
    cmd_ore->callback([&]() {
        Presentation p = ore.pres.load_or_default();
        NCElement a = parse_element(ore.expr, p.generators());
        Denominator s{ore.k};
        OreWitness w = ore_right(a, s);
        NCElement residual = a * NCElement::scalar(w.s_tilde) -
                             w.a_tilde.scaled(s.as_ratfunc());
        Report rep;
        rep.title = "right common multiple past h + k";
        rep.add("a * s_tilde = s * a_tilde exactly", residual.is_zero(),
                render(residual));
        auto vanishing = ore_vanishing(a, s);
        rep.add("torsion witness",
                vanishing.has_value() == a.is_zero(),
                vanishing ? "s * a = 0, witness s_tilde = " +
                                vanishing->s_tilde.str()
                          : "not applicable (s * a is nonzero)");
        rep.meta["s_tilde"] = w.s_tilde.str();
        rep.meta["a_tilde"] = render(w.a_tilde);
        exit_code = report_exit(rep, ore.json);
    });

    // zero-divisor-probe --------------------------------------------------------
    struct {
        bool json = false;
        std::uint64_t seed = 0;
        std::size_t trials = 200;
        std::size_t max_deg = 3;
    } zd;
    auto* cmd_zd = app.add_subcommand(
        "zero-divisor-probe",
        "probe random products for an unexpected zero");
    cmd_zd->add_flag("--json", zd.json, "emit JSON");
    cmd_zd->add_option("--seed", zd.seed, "random seed");
    cmd_zd->add_option("--trials", zd.trials, "number of random pairs");
    cmd_zd->add_option("--max-deg", zd.max_deg, "maximum word length");
    cmd_zd->callback([&]() {
        DRsl2 alg = build_drsl2();
        ZeroDivisorReport zr =
            zero_divisor_probe(alg, zd.seed, zd.trials, zd.max_deg);
        Report rep;
        rep.title = "zero-divisor probe";
        rep.add("no vanishing product found", !zr.found,
                zr.found ? zr.witness_a + "  *  " + zr.witness_b
                         : "trials=" + std::to_string(zr.trials) +
                               " seed=" + std::to_string(zr.seed) +
                               " max_deg=" + std::to_string(zr.max_degree));
        exit_code = report_exit(rep, zd.json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
