#include "qinv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "qinv/cabling.hpp"
#include "qinv/errors.hpp"
#include "qinv/fourman.hpp"
#include "qinv/rtw.hpp"
#include "qinv/selftest.hpp"
#include "qinv/skein.hpp"

namespace qinv
{

namespace
{

struct RunConfig
{
    std::vector<std::string> files;
    int level = -1;
    std::vector<int> levels{1, 2, 3};
    std::vector<int> colors;
    std::string mode = "exact";
    double tolerance = 1e-9;
    std::size_t max_crossings = kDefaultMaxCrossings;
    int max_color = CableOptions{}.max_color;
};

/// Input problem tied to a file.
struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

Diagram load_file(const std::string& path)
{
    if (!std::filesystem::is_regular_file(path))
        throw InputError(path + ": cannot open file");
    try {
        return Diagram::load(path);
    } catch (const SyntaxError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw InputError(path + ": " + e.what());
    }
}

RootContext context(const RunConfig& cfg, int level)
{
    return RootContext(level, parse_mode(cfg.mode), cfg.tolerance);
}

InvariantOptions invariant_options(const RunConfig& cfg)
{
    InvariantOptions o;
    o.max_crossings = cfg.max_crossings;
    return o;
}

void print_scalar(std::ostream& out, const std::string& command, const RootScalar& v)
{
    if (v.is_exact())
        out << "exact: " << v.exact_string() << "\n";
    out << "RESULT " << command << " " << v.to_string() << "\n";
}

void print_inertia(std::ostream& out, const Inertia& in)
{
    out << "b+=" << in.b_plus << " b-=" << in.b_minus << " nu=" << in.nullity;
}

int cmd_bracket(const RunConfig& cfg, std::ostream& out)
{
    const Diagram d = load_file(cfg.files.at(0));
    const auto b = bracket(d, cfg.max_crossings);
    out << "crossings: " << d.crossing_count() << "  writhe: " << d.writhe() << "\n";
    out << "RESULT bracket " << b << "\n";
    return kExitOk;
}

int cmd_jones(const RunConfig& cfg, std::ostream& out)
{
    const Diagram d = load_file(cfg.files.at(0));
    const auto v = jones(d, cfg.max_crossings);
    out << "in A: " << v << "\n";
    out << "RESULT jones " << v.to_t_string() << "\n";
    return kExitOk;
}

int cmd_skein(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.files.size() == 3) {
        const auto c = check_skein(load_file(cfg.files[0]), load_file(cfg.files[1]), load_file(cfg.files[2]));
        out << "site: crossing " << c.site << "\n";
        out << "alpha=" << c.alpha << " beta=" << c.beta << " gamma=" << c.gamma << "\n";
        out << "RESULT skein-check " << c.residual << "\n";
        return kExitOk;
    }
    if (cfg.files.size() != 1)
        throw InputError("skein-check takes one file, or three files (plus, minus, smoothed)");
    const Diagram d = load_file(cfg.files[0]);
    LaurentPoly worst;
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
        const auto t = skein_triple_at(d, i);
        const auto c = check_skein(t.plus, t.minus, t.zero);
        out << "crossing " << i << ": residual " << c.residual << "\n";
        if (worst.is_zero())
            worst = c.residual;
    }
    out << "RESULT skein-check " << worst << "\n";
    return kExitOk;
}

int cmd_colored(const RunConfig& cfg, std::ostream& out)
{
    const Diagram d = load_file(cfg.files.at(0));
    CableOptions o;
    o.max_color = cfg.max_color;
    o.max_crossings = cfg.max_crossings;
    if (cfg.level >= 0) {
        const auto v = colored_bracket(d, cfg.colors, context(cfg, cfg.level), o);
        print_scalar(out, "colored", v);
        return kExitOk;
    }
    const auto v = colored_bracket(d, cfg.colors, o);
    out << "numerator: " << v.numerator << "\n";
    out << "denominator: " << v.denominator << "\n";
    if (auto r = v.reduced())
        out << "RESULT colored " << *r << "\n";
    else
        out << "RESULT colored (" << v.numerator << ")/(" << v.denominator << ")\n";
    return kExitOk;
}

int cmd_rtw(const RunConfig& cfg, std::ostream& out)
{
    const Diagram d = load_file(cfg.files.at(0));
    std::vector<std::size_t> surgery;
    for (std::size_t i = 0; i < d.component_count(); ++i)
        if (!d.components()[i].barred)
            surgery.push_back(i);
    print_inertia(out, signature_nullity(linking_matrix(d).submatrix(surgery)));
    out << "\n";
    print_scalar(out, "rtw", rtw_invariant(d, context(cfg, cfg.level), invariant_options(cfg)));
    return kExitOk;
}

int cmd_broda(const RunConfig& cfg, std::ostream& out)
{
    const Diagram d = load_file(cfg.files.at(0));
    const auto v = broda_invariant(d, context(cfg, cfg.level), invariant_options(cfg));
    print_inertia(out, signature_nullity(linking_matrix(d)));
    out << "\n";
    if (v.principal_branch)
        out << "note: no exact square root; principal branch in floating point\n";
    print_scalar(out, "broda", v.value);
    return kExitOk;
}

int cmd_check_equiv(const RunConfig& cfg, std::ostream& out)
{
    const Diagram a = load_file(cfg.files.at(0));
    const Diagram b = load_file(cfg.files.at(1));
    const bool four = a.has_dotted() || b.has_dotted();
    const Mode mode = parse_mode(cfg.mode);
    const auto report = four ? fourman_equiv_check(a, b, cfg.levels, mode, cfg.tolerance, invariant_options(cfg))
                             : kirby_equiv_check(a, b, cfg.levels, mode, cfg.tolerance, invariant_options(cfg));
    out << "invariant: " << (four ? "broda" : "rtw") << "\n";
    for (const auto& r : report.rows)
        out << "level " << r.level << ": " << r.first << " vs " << r.second << (r.exact ? " exact " : " float ")
            << (r.equal ? "equal" : "different") << "\n";
    out << "RESULT check-equiv " << (report.equivalent() ? "equivalent" : "different") << "\n";
    return kExitOk;
}

int cmd_siglk(const RunConfig& cfg, std::ostream& out)
{
    const Diagram d = load_file(cfg.files.at(0));
    const auto m = linking_matrix(d);
    const auto in = signature_nullity(m);
    out << m.to_string() << "\n";
    out << "RESULT siglk ";
    print_inertia(out, in);
    out << "\n";
    return kExitOk;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out)
{
    const auto& suites = selftest_suites();
    for (const auto& name : cfg.files)
        if (std::none_of(suites.begin(), suites.end(), [&](const Suite& s) { return s.name == name; })) {
            std::string names;
            for (const auto& s : suites)
                names += " " + s.name;
            throw InputError("unknown suite " + name + "; available:" + names);
        }
    bool all = true;
    for (const auto& s : suites) {
        if (!cfg.files.empty() && std::find(cfg.files.begin(), cfg.files.end(), s.name) == cfg.files.end())
            continue;
        SuiteResult r;
        try {
            r = s.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        out << (r.passed ? "PASS " : "FAIL ") << s.name << ": " << r.detail << "\n";
        all = all && r.passed;
    }
    out << "RESULT selftest " << (all ? "pass" : "fail") << "\n";
    return all ? kExitOk : kExitComputation;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quantum invariants of links, 3-manifolds and 4-manifolds", "qinv"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_file = [&](CLI::App* sub, int count) {
        sub->add_option("files", cfg.files, "diagram file(s)")->required()->expected(count);
    };
    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--max-crossings", cfg.max_crossings, "crossing cap for state sums")
            ->check(CLI::PositiveNumber);
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--tol", cfg.tolerance, "float comparison tolerance")->check(CLI::PositiveNumber);
    };

    auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket");
    add_file(bracket_cmd, 1);
    add_caps(bracket_cmd);
    auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial in t");
    add_file(jones_cmd, 1);
    add_caps(jones_cmd);
    auto* skein_cmd = app.add_subcommand("skein-check", "skein residual: one file (every crossing) or plus minus zero");
    skein_cmd->add_option("files", cfg.files, "diagram file(s)")->required()->expected(1, 3);
    auto* colored_cmd = app.add_subcommand("colored", "colored bracket");
    add_file(colored_cmd, 1);
    colored_cmd->add_option("--colors", cfg.colors, "one color per component")->delimiter(',')->required();
    colored_cmd->add_option("--level", cfg.level, "evaluate at this level")->check(CLI::NonNegativeNumber);
    colored_cmd->add_option("--max-color", cfg.max_color, "largest allowed color")->check(CLI::NonNegativeNumber);
    add_mode(colored_cmd);
    add_caps(colored_cmd);
    auto* rtw_cmd = app.add_subcommand("rtw", "3-manifold invariant of a surgery presentation");
    add_file(rtw_cmd, 1);
    rtw_cmd->add_option("--level", cfg.level, "level k")->required()->check(CLI::NonNegativeNumber);
    add_mode(rtw_cmd);
    add_caps(rtw_cmd);
    auto* broda_cmd = app.add_subcommand("broda", "4-manifold invariant of a special link");
    add_file(broda_cmd, 1);
    broda_cmd->add_option("--level", cfg.level, "level k")->required()->check(CLI::NonNegativeNumber);
    add_mode(broda_cmd);
    add_caps(broda_cmd);
    auto* equiv_cmd = app.add_subcommand("check-equiv", "compare two presentations level by level");
    add_file(equiv_cmd, 2);
    equiv_cmd->add_option("--levels", cfg.levels, "levels to compare")->delimiter(',');
    add_mode(equiv_cmd);
    add_caps(equiv_cmd);
    auto* siglk_cmd = app.add_subcommand("siglk", "linking matrix and its inertia");
    add_file(siglk_cmd, 1);
    auto* selftest_cmd = app.add_subcommand("selftest", "built-in oracle and invariance suites");
    selftest_cmd->add_option("files", cfg.files, "suite names (default: all)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "bracket")
            return cmd_bracket(cfg, out);
        if (name == "jones")
            return cmd_jones(cfg, out);
        if (name == "skein-check")
            return cmd_skein(cfg, out);
        if (name == "colored")
            return cmd_colored(cfg, out);
        if (name == "rtw")
            return cmd_rtw(cfg, out);
        if (name == "broda")
            return cmd_broda(cfg, out);
        if (name == "check-equiv")
            return cmd_check_equiv(cfg, out);
        if (name == "siglk")
            return cmd_siglk(cfg, out);
        return cmd_selftest(cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SiteMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ColorOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << "\n";
        return kExitComputation;
    }
}

} // namespace qinv
