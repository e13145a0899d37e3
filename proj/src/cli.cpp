#include "vstrata/cli.hpp"

#include "vstrata/certificate.hpp"
#include "vstrata/construct.hpp"
#include "vstrata/errors.hpp"
#include "vstrata/sampling.hpp"
#include "vstrata/sylvester.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace vstrata::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* command_name(Command c)
{
    switch (c) {
    case Command::stratify: return "stratify";
    case Command::construct: return "construct";
    case Command::certify: return "certify";
    case Command::terracini: return "terracini";
    case Command::h1: return "h1";
    case Command::sylvester: return "sylvester";
    case Command::gamma: return "gamma";
    }
    return "stratify";
}

Json dispatch(const RunConfig& cfg)
{
    const RankMode mode = cfg.exact_only ? RankMode::exact : RankMode::modular_prefilter;
    Sampler sampler(cfg.seed, cfg.bound);
    Json report;
    switch (cfg.command) {
    case Command::stratify:
        report = report_to_json(stratification_report(cfg.m, cfg.d, cfg.t));
        break;
    case Command::construct: {
        Construction c;
        if (cfg.variant == "stratum") {
            if (!cfg.label) throw InputError("construct: --label is required");
            StratumPointOptions opts;
            opts.non_collinear = cfg.non_collinear;
            opts.mode = mode;
            c = construct_stratum_point(cfg.m, cfg.d, *cfg.label, sampler, opts);
        } else if (cfg.variant == "e2plus") {
            c = construct_e2plus(cfg.m, cfg.d, cfg.t1, cfg.s1, sampler);
        } else if (cfg.variant == "f2") {
            c = construct_f2(cfg.m, cfg.d, cfg.t, sampler);
        } else if (cfg.variant == "conic") {
            if (cfg.m != 2) throw InputError("construct --variant conic lives in the plane: m must be 2");
            if (!cfg.a_parts || !cfg.b_parts) throw InputError("construct --variant conic needs --a and --b");
            c = construct_conic_double(cfg.d, *cfg.a_parts, *cfg.b_parts, sampler);
        } else {
            throw InputError("unknown construct variant '" + cfg.variant + "'");
        }
        report = construction_to_json(c);
        report["variant"] = cfg.variant;
        break;
    }
    case Command::certify: {
        const Form p = form_from_json(parse_json_text(read_file(cfg.point_path), cfg.point_path));
        const SchemeSpec z = parse_scheme(read_file(cfg.scheme_path));
        CertifyOptions opts;
        opts.mode = mode;
        report = Json{{"certificate", certificate_to_json(certify_border_rank(p, z, p.d(), opts))}};
        break;
    }
    case Command::terracini:
        report = terracini_to_json(terracini_dim(cfg.m, cfg.d, cfg.kind, cfg.t, sampler));
        break;
    case Command::h1: {
        const SchemeSpec z = parse_scheme(read_file(cfg.scheme_path));
        const std::size_t deg = scheme_degree(z);
        const std::size_t r = rank(conditions_matrix(z, cfg.d), mode);
        report = Json{{"h1", deg - r}, {"degree", deg}, {"conditions_rank", r}, {"d", cfg.d}};
        break;
    }
    case Command::sylvester: {
        const Form f = form_from_json(parse_json_text(read_file(cfg.form_path), cfg.form_path));
        report = sylvester_to_json(sylvester_binary(f));
        break;
    }
    case Command::gamma:
        report = gamma_to_json(gamma_dims(cfg.m, cfg.d, cfg.t, sampler));
        break;
    }
    report["command"] = command_name(cfg.command);
    report["seed"] = cfg.seed;
    report["bound"] = cfg.bound;
    return report;
}

bool every_claim_passed(const Json& j)
{
    if (j.is_object()) {
        if (j.contains("passed") && j["passed"].is_boolean() && !j["passed"].get<bool>()) return false;
        for (const auto& [key, value] : j.items()) {
            if (!every_claim_passed(value)) return false;
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (!every_claim_passed(v)) return false;
        }
    }
    return true;
}

std::string scalar_text(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void table_lines(const Json& j, const std::string& indent, std::ostringstream& out)
{
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            table_lines(value, indent + "  ", out);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << indent << key << ":\n";
            for (const auto& row : value) {
                out << indent << "  -";
                for (const auto& [k, v] : row.items()) out << ' ' << k << '=' << (v.is_primitive() ? scalar_text(v) : v.dump());
                out << '\n';
            }
        } else {
            out << indent << key << ": " << (value.is_primitive() ? scalar_text(value) : value.dump()) << '\n';
        }
    }
}

StratumLabel label_option(const std::string& text)
{
    return StratumLabel::parse(text);
}

} // namespace

SchemeSpec parse_scheme(const std::string& json_text)
{
    return scheme_from_json(parse_json_text(json_text, "scheme"));
}

std::string emit_report(const Json& report, Format format)
{
    if (format == Format::json) return report.dump(2) + "\n";
    if (!report.is_object()) return scalar_text(report) + "\n";
    std::ostringstream out;
    table_lines(report, "", out);
    return out.str();
}

RunResult run(const RunConfig& config)
{
    RunResult result;
    try {
        result.report = dispatch(config);
        if (!every_claim_passed(result.report)) {
            result.exit_code = refused;
            result.message = "a certificate claim did not pass";
        }
    } catch (const CertificateRefused& e) {
        result.exit_code = refused;
        result.message = e.what();
    } catch (const ResampleExhausted& e) {
        result.exit_code = refused;
        result.message = e.what();
    } catch (const InputError& e) {
        result.exit_code = malformed;
        result.message = e.what();
    } catch (const UnsupportedComponent& e) {
        result.exit_code = malformed;
        result.message = e.what();
    } catch (const InternalInconsistency& e) {
        result.exit_code = internal;
        result.message = std::string("internal inconsistency: ") + e.what();
    } catch (const ModularDenominatorError& e) {
        result.exit_code = internal;
        result.message = e.what();
    }
    if (result.exit_code != ok) {
        result.report = Json{{"command", command_name(config.command)}, {"error", result.message},
                             {"exit_code", result.exit_code}, {"seed", config.seed}};
    }
    return result;
}

int main_entry(int argc, char** argv)
{
    CLI::App app{"vstrata: secant varieties of Veronese varieties, strata and certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "json";
    std::string fastpath = "on";
    std::string out_path;
    std::string label_text;
    std::string a_text;
    std::string b_text;
    std::string kind_text = "secant";

    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--bound", cfg.bound, "sample integers from [-B, B]")->capture_default_str();
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    app.add_option("--out", out_path, "write the report to this file");
    app.add_option("--modular-fastpath", fastpath, "on or off (off: exact ranks only)")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();

    auto* stratify = app.add_subcommand("stratify", "strata of sigma_t for partitions of t");
    stratify->add_option("m", cfg.m)->required();
    stratify->add_option("d", cfg.d)->required();
    stratify->add_option("t", cfg.t)->required();

    auto* construct = app.add_subcommand("construct", "build and certify a point");
    construct->add_option("m", cfg.m)->required();
    construct->add_option("d", cfg.d)->required();
    construct->add_option("--variant", cfg.variant, "stratum, e2plus, f2 or conic")
        ->check(CLI::IsMember({"stratum", "e2plus", "f2", "conic"}))
        ->capture_default_str();
    construct->add_option("--label", label_text, "stratum label, e.g. 2,1,1");
    construct->add_flag("--non-collinear", cfg.non_collinear, "put parts >= 3 on conics");
    construct->add_option("--t1", cfg.t1, "e2plus: degree of the jet");
    construct->add_option("--s1", cfg.s1, "e2plus: number of extra points");
    construct->add_option("--t", cfg.t, "f2: total degree");
    construct->add_option("--a", a_text, "conic: parts of A");
    construct->add_option("--b", b_text, "conic: parts of B");

    auto* certify = app.add_subcommand("certify", "certify the border rank of a form against a scheme");
    certify->add_option("--point", cfg.point_path, "form JSON")->required();
    certify->add_option("--scheme", cfg.scheme_path, "scheme JSON")->required();

    auto* terracini = app.add_subcommand("terracini", "join dimension by interpolation");
    terracini->add_option("m", cfg.m)->required();
    terracini->add_option("d", cfg.d)->required();
    terracini->add_option("--kind", kind_text, "secant, tau or osculating2")
        ->check(CLI::IsMember({"secant", "tau", "osculating2"}))
        ->capture_default_str();
    terracini->add_option("--t", cfg.t, "number of points")->required();

    auto* h1cmd = app.add_subcommand("h1", "h1 of the ideal sheaf of a scheme in degree d");
    h1cmd->add_option("--scheme", cfg.scheme_path, "scheme JSON")->required();
    h1cmd->add_option("d", cfg.d)->required();

    auto* sylvester = app.add_subcommand("sylvester", "Waring rank of a binary form");
    sylvester->add_option("--form", cfg.form_path, "form JSON")->required();

    auto* gamma = app.add_subcommand("gamma", "codimension 1 and 2 loci of sigma_t");
    gamma->add_option("m", cfg.m)->required();
    gamma->add_option("d", cfg.d)->required();
    gamma->add_option("t", cfg.t)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : malformed;
    }

    if (stratify->parsed()) cfg.command = Command::stratify;
    if (construct->parsed()) cfg.command = Command::construct;
    if (certify->parsed()) cfg.command = Command::certify;
    if (terracini->parsed()) cfg.command = Command::terracini;
    if (h1cmd->parsed()) cfg.command = Command::h1;
    if (sylvester->parsed()) cfg.command = Command::sylvester;
    if (gamma->parsed()) cfg.command = Command::gamma;
    cfg.format = format == "table" ? Format::table : Format::json;
    cfg.exact_only = fastpath == "off";
    if (!out_path.empty()) cfg.out_path = out_path;

    try {
        if (!label_text.empty()) cfg.label = label_option(label_text);
        if (!a_text.empty()) cfg.a_parts = label_option(a_text);
        if (!b_text.empty()) cfg.b_parts = label_option(b_text);
        cfg.kind = parse_join_kind(kind_text);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return malformed;
    }

    const RunResult result = run(cfg);
    const std::string text = emit_report(result.report, cfg.format);
    if (cfg.out_path) {
        std::ofstream out(*cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << *cfg.out_path << "'\n";
            return malformed;
        }
        out << text;
    } else {
        std::cout << text;
    }
    if (result.exit_code != ok) std::cerr << "error: " << result.message << '\n';
    return result.exit_code;
}

} // namespace vstrata::cli
