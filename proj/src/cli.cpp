#include <tdeg/cli.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <tdeg/config.hpp>
#include <tdeg/degrees.hpp>
#include <tdeg/errors.hpp>
#include <tdeg/json_io.hpp>
#include <tdeg/pohozaev.hpp>

namespace tdeg::cli
{

namespace
{

enum class Format { Table, Json };

struct Options {
    std::string input;
    Format format = Format::Table;
    std::optional<int> truncation;

    int component = 1;
    std::optional<int> bound;
    int gamma1 = 0;
    int gamma2 = 0;
    std::string point;
    int alpha = 0;
    std::optional<int> n1;
    std::optional<int> n2;
};

std::string read_all(std::istream &is)
{
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

ProblemConfig load(const Options &opt, std::istream &in)
{
    std::string text;
    std::string source = "<stdin>";
    if (opt.input.empty()) {
        text = read_all(in);
    } else {
        std::ifstream f(opt.input, std::ios::binary);
        if (!f) {
            throw ConfigError(opt.input + ": cannot open input file");
        }
        text = read_all(f);
        source = opt.input;
    }
    auto config = parse_config(text, source);
    if (opt.truncation) {
        config = config.with_truncation(*opt.truncation);
    }
    return config;
}

void print_warnings(const std::vector<std::string> &warnings, std::ostream &out)
{
    for (const auto &w : warnings) {
        out << "WARN: " << w << '\n';
    }
}

std::string interval_text(const IntervalIndex &idx)
{
    if (std::holds_alternative<Critical>(idx)) {
        return "critical";
    }
    return "j=" + std::to_string(std::get<int>(idx));
}

json interval_json(const IntervalIndex &idx)
{
    if (std::holds_alternative<Critical>(idx)) {
        return "critical";
    }
    return std::get<int>(idx);
}

void emit_table(const std::string &title, const DegreeTable &table, Format format, std::ostream &out)
{
    if (format == Format::Json) {
        out << to_json(table).dump(2) << '\n';
        return;
    }
    print_warnings(table.warnings, out);
    out << "# " << title << ", interval unit " << to_string(table.interval_unit) << '\n';
    out << "j | interval | degree\n";
    for (int j = 0; j <= table.truncation_degree(); ++j) {
        out << j << " | " << interval_label(table.interval_unit, j) << " | " << table.degree_at(j) << '\n';
    }
    const auto top = table.series.top_nonzero();
    out << "top nonzero: " << (top ? "j=" + std::to_string(*top) : std::string("none")) << '\n';
}

int cmd_mean_field(const Options &opt, const ProblemConfig &config, std::ostream &out)
{
    if (opt.component != 1 && opt.component != 2) {
        throw DomainError("--component must be 1 or 2");
    }
    std::vector<int> weights;
    for (const auto &p : config.points()) {
        const int a = opt.component == 1 ? p.alpha1 : p.alpha2;
        if (a > 0) {
            weights.push_back(a);
        }
    }
    emit_table("mean field g(x), S0 = S" + std::to_string(opt.component),
               mean_field_gf(config.chi(), weights, config.truncation()), opt.format, out);
    return exit_ok;
}

int cmd_no_singularity(const Options &opt, const ProblemConfig &config, std::ostream &out)
{
    auto table = toda_gf_no_singularity(config.chi(), config.cartan(), config.truncation());
    if (!config.points().empty()) {
        table.warnings.push_back("no-singularity ignores the " + std::to_string(config.points().size())
                                 + " configured point(s)");
    }
    emit_table("toda g_1(x), no singular sources", table, opt.format, out);
    return exit_ok;
}

int cmd_gap_check(const Options &opt, const ProblemConfig &config, std::ostream &out)
{
    const auto report = gap_check(config);
    if (opt.format == Format::Json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        print_warnings(report.warnings, out);
        out << "j | residual\n";
        for (std::size_t j = 0; j < report.residuals.size(); ++j) {
            out << j << " | " << report.residuals[j] << '\n';
        }
        if (const auto bad = report.first_failure()) {
            out << "gap-check: FAILED at j=" << *bad << '\n';
        } else {
            out << "gap-check: ok\n";
        }
    }
    return report.ok() ? exit_ok : exit_gap_failure;
}

int cmd_masses(const Options &opt, const ProblemConfig &config, std::ostream &out)
{
    SingularWeights w{opt.gamma1, opt.gamma2};
    if (!opt.point.empty()) {
        const auto *p = config.find(opt.point);
        if (p == nullptr) {
            throw ConfigError("--point: no point labelled '" + opt.point + "'");
        }
        w = {p->alpha1, p->alpha2};
    }
    const Coupling k(config.cartan());
    const auto masses = enumerate_local_masses(k, w);
    if (opt.format == Format::Json) {
        out << to_json(masses).dump(2) << '\n';
        return exit_ok;
    }
    out << "# local masses, " << to_string(config.cartan().kind()) << ", gamma = (" << w.gamma1 << ", " << w.gamma2
        << ")" << (w.is_regular() ? "" : ", necessary conditions only") << '\n';
    out << "sigma1 | sigma2 | concentration\n";
    for (const auto &m : masses) {
        out << m.sigma1 << " | " << m.sigma2 << " | " << to_string(concentration_filter(k, w, m)) << '\n';
    }
    return exit_ok;
}

void print_list(std::ostream &out, const std::vector<int> &v)
{
    out << '{';
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? ", " : "") << v[i];
    }
    out << '}';
}

int cmd_classify(const Options &opt, const ProblemConfig &config, std::ostream &out)
{
    const auto r = classify_blowup_scenarios(config.cartan().k21(), opt.alpha);
    if (opt.format == Format::Json) {
        out << to_json(r).dump(2) << '\n';
        return exit_ok;
    }
    out << "K21 = " << r.k21 << ", alpha = " << r.alpha << '\n';
    out << "admissible sigma: ";
    print_list(out, r.admissible_sigma);
    out << "\nsigma within alpha bound: ";
    print_list(out, r.sigma_within_alpha_bound);
    out << "\ncluster sizes: ";
    print_list(out, r.admissible_cluster_sizes);
    out << "\nblow-up at origin: " << (r.blow_up_at_origin_allowed ? "allowed" : "excluded") << '\n';
    out << "blow-up at e: " << (r.blow_up_at_e_allowed ? "allowed" : "excluded") << '\n';
    return exit_ok;
}

int cmd_rho(const Options &opt, const ProblemConfig &config, std::ostream &out)
{
    int sum1 = 0;
    int sum2 = 0;
    for (const auto &p : config.points()) {
        sum1 += p.alpha1;
        sum2 += p.alpha2;
    }
    const int n1 = opt.n1.value_or(sum1);
    const int n2 = opt.n2.value_or(sum2);
    const auto rho = rho_from_ramification(config.cartan(), n1, n2);
    const auto j1 = rho_interval_index(rho.rho1_over_4pi);
    const auto j2 = rho_interval_index(rho.rho2_over_4pi);
    if (opt.format == Format::Json) {
        json j = {{"n1", n1},
                  {"n2", n2},
                  {"rho1_over_4pi", format_rational(rho.rho1_over_4pi)},
                  {"rho2_over_4pi", format_rational(rho.rho2_over_4pi)},
                  {"rho1_interval", interval_json(j1)},
                  {"rho2_interval", interval_json(j2)}};
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "rho1 = 4pi * " << format_rational(rho.rho1_over_4pi) << ", interval " << interval_text(j1)
        << "; rho2 = 4pi * " << format_rational(rho.rho2_over_4pi) << ", interval " << interval_text(j2) << '\n';
    return exit_ok;
}

int cmd_critical_set(const Options &opt, const ProblemConfig &config, std::ostream &out)
{
    const int bound = opt.bound.value_or(config.truncation());
    const auto values = critical_set(config, opt.component, bound);
    if (opt.format == Format::Json) {
        out << json{{"component", opt.component}, {"bound", bound}, {"multiples", values}}.dump(2) << '\n';
        return exit_ok;
    }
    out << "k | a_k | critical rho\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out << k + 1 << " | " << values[k] << " | 8pi * " << values[k] << '\n';
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Degree generating functions and blow-up local masses for rank-2 Toda systems", "tdeg"};
    app.require_subcommand(1);

    Options opt;
    const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}};
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--input", opt.input, "Problem JSON file (default: standard input)");
        sub->add_option("--format", opt.format, "Output format")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--truncation", opt.truncation, "Override the truncation degree")
            ->check(CLI::Range(0, max_truncation));
    };

    auto *mean_field = app.add_subcommand("mean-field", "Mean field degrees d_j, rho in (8 a_j pi, 8 a_(j+1) pi)");
    mean_field->add_option("--component", opt.component, "Which weight column forms S0 (1 or 2)");
    auto *shadow = app.add_subcommand("shadow", "Shadow system degrees d_j^S");
    auto *toda = app.add_subcommand("toda", "Toda degrees d_(1,j), rho1 in (4pi, 8pi)");
    auto *toda_tilde = app.add_subcommand("toda-tilde", "Toda degrees d_(j,1), rho2 in (4pi, 8pi)");
    auto *no_sing = app.add_subcommand("no-singularity", "Toda degrees d_(1,j) without singular sources");
    auto *gap = app.add_subcommand("gap-check", "Check d_(1,j) - d_(0,j) = -d_j^S coefficientwise");
    auto *masses = app.add_subcommand("masses", "Even local masses satisfying the Pohozaev identity");
    masses->add_option("--gamma1", opt.gamma1, "gamma_1 of the point")->check(CLI::NonNegativeNumber);
    masses->add_option("--gamma2", opt.gamma2, "gamma_2 of the point")->check(CLI::NonNegativeNumber);
    masses->add_option("--point", opt.point, "Take gamma from the weights of this configured point");
    auto *classify = app.add_subcommand("classify", "Blow-up scenarios near a collapsing singularity");
    classify->add_option("--alpha", opt.alpha, "alpha_(Q0,2), 1 or 2")->required();
    auto *rho = app.add_subcommand("rho", "rho_i from ramification totals N1, N2");
    rho->add_option("--n1", opt.n1, "N1 (default: sum of alpha1)");
    rho->add_option("--n2", opt.n2, "N2 (default: sum of alpha2)");
    auto *crit = app.add_subcommand("critical-set", "Critical multiples a_k up to a bound");
    crit->add_option("--component", opt.component, "Which weight column (1 or 2)");
    crit->add_option("--bound", opt.bound, "Largest multiple (default: truncation)");

    for (auto *sub : {mean_field, shadow, toda, toda_tilde, no_sing, gap, masses, classify, rho, crit}) {
        add_common(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        const auto config = load(opt, in);
        if (mean_field->parsed()) {
            return cmd_mean_field(opt, config, out);
        }
        if (shadow->parsed()) {
            emit_table("shadow g_s(x)", shadow_gf(config), opt.format, out);
            return exit_ok;
        }
        if (toda->parsed()) {
            emit_table("toda g_1(x), rho1 in (4pi, 8pi)", toda_gf_rho1_first_interval(config), opt.format, out);
            return exit_ok;
        }
        if (toda_tilde->parsed()) {
            emit_table("toda tilde g_1(x), rho2 in (4pi, 8pi)", toda_gf_rho2_first_interval(config), opt.format,
                       out);
            return exit_ok;
        }
        if (no_sing->parsed()) {
            return cmd_no_singularity(opt, config, out);
        }
        if (gap->parsed()) {
            return cmd_gap_check(opt, config, out);
        }
        if (masses->parsed()) {
            return cmd_masses(opt, config, out);
        }
        if (classify->parsed()) {
            return cmd_classify(opt, config, out);
        }
        if (rho->parsed()) {
            return cmd_rho(opt, config, out);
        }
        return cmd_critical_set(opt, config, out);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_invalid;
}

} // namespace tdeg::cli
