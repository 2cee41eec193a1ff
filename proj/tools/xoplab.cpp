#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "xoplab/io.hpp"
#include "xoplab/rootfind.hpp"
#include "xoplab/verify.hpp"
#include "xoplab/xop_det.hpp"
#include "xoplab/xop_direct.hpp"

namespace {

using namespace xoplab;

struct PolyArgs {
    std::string family;
    int m = 1;
    int n = 0;
    std::string alpha = "0";
    std::string beta = "0";
    std::string partition;
    std::string method;
};

void add_poly_flags(CLI::App* cmd, PolyArgs& args, bool with_method) {
    cmd->add_option("--family", args.family,
                    "laguerre|jacobi|hermite|genhermite|expsum|binomsum|"
                    "lag1|lag2|lag3|xjacobi|hermite11|xhermite")
        ->required();
    cmd->add_option("--m", args.m, "number of missing degrees");
    cmd->add_option("--n", args.n, "polynomial degree");
    cmd->add_option("--alpha", args.alpha, "rational parameter, e.g. 7/3");
    cmd->add_option("--beta", args.beta, "rational parameter");
    cmd->add_option("--partition", args.partition, "comma list, e.g. 2,1");
    if (with_method)
        cmd->add_option("--method", args.method,
                        "product|integral|wronskian|closed_form|det");
}

bool is_exceptional(const std::string& family) {
    return parse_xop_family(family).has_value();
}

XopSpec spec_from_args(const PolyArgs& args) {
    auto family = parse_xop_family(args.family);
    if (!family) throw std::invalid_argument("unknown exceptional family: " + args.family);
    XopSpec s;
    s.family = *family;
    s.m = args.m;
    s.n = args.n;
    s.alpha = parse_rational(args.alpha);
    s.beta = parse_rational(args.beta);
    if (s.family == XopFamily::Hermite11) {
        s.lambda = Partition({1, 1});
        s.m = 2;
    } else if (s.family == XopFamily::HermiteGeneral) {
        if (args.partition.empty())
            throw std::invalid_argument("xhermite requires --partition");
        s.lambda = Partition::parse(args.partition);
        s.m = s.lambda.length();
    }
    if (auto err = validate(s)) throw std::invalid_argument(*err);
    return s;
}

// Exact construction for every family; the determinantal route is handled
// separately since it produces complex-float coefficients.
PolyQ exact_polynomial(const PolyArgs& args) {
    const std::string& f = args.family;
    if (f == "laguerre") return laguerre(args.n, parse_rational(args.alpha));
    if (f == "jacobi")
        return jacobi(args.n, parse_rational(args.alpha), parse_rational(args.beta));
    if (f == "hermite") return hermite(args.n);
    if (f == "genhermite") {
        if (args.partition.empty())
            throw std::invalid_argument("genhermite requires --partition");
        return generalized_hermite(Partition::parse(args.partition));
    }
    if (f == "expsum") return exp_partial_sum(args.n);
    if (f == "binomsum") return r_partial_sum(args.n, parse_rational(args.beta));
    XopSpec s = spec_from_args(args);
    Method method = methods_for(s.family)[0];
    if (!args.method.empty()) {
        auto parsed = parse_method(args.method);
        if (!parsed) throw std::invalid_argument("unknown method: " + args.method);
        method = *parsed;
    }
    return xop_direct(s, method);
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::vector<std::string> poly_fraction_strings(const PolyQ& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.to_fraction_string());
    return out;
}

int cmd_eval(const PolyArgs& args, const std::vector<std::string>& at, bool coeffs,
             const std::string& format, const std::string& out_path) {
    const bool det_route = args.method == "det";
    PolyQ exact;
    PolyC approx;
    if (det_route) {
        approx = det_xop(spec_from_args(args));
    } else {
        exact = exact_polynomial(args);
    }

    nlohmann::ordered_json j;
    std::ostringstream text;
    std::ostringstream csv;
    if (coeffs || at.empty()) {
        if (det_route) {
            text << format_poly_text(approx) << "\n";
            auto arr = nlohmann::ordered_json::array();
            for (const auto& c : approx.coeffs())
                arr.push_back({c.real(), c.imag()});
            j["coeffs"] = std::move(arr);
            for (std::size_t i = 0; i < approx.coeffs().size(); ++i)
                csv << (i ? "," : "") << format_double(approx.coeff(i).real());
            csv << "\n";
        } else {
            text << format_poly_text(exact) << "\n";
            j["coeffs"] = poly_fraction_strings(exact);
            csv << format_poly_csv(exact) << "\n";
        }
    }
    auto values = nlohmann::ordered_json::array();
    for (const std::string& point : at) {
        if (!det_route && point.find(',') == std::string::npos &&
            point.find('i') == std::string::npos) {
            Rational z = parse_rational(point);
            Rational v = exact(z);
            text << v.to_string() << "\n";
            csv << point << "," << v.to_fraction_string() << "\n";
            values.push_back({{"at", z.to_fraction_string()}, {"value", v.to_fraction_string()}});
        } else {
            Complex z = parse_complex(point);
            Complex v = det_route ? evaluate_checked(approx, z)
                                  : evaluate_checked(to_complex(exact), z);
            text << format_double(v.real());
            if (v.imag() != 0.0) text << (v.imag() < 0 ? " - " : " + ")
                                       << format_double(std::abs(v.imag())) << "i";
            text << "\n";
            csv << point << "," << format_double(v.real()) << ","
                << format_double(v.imag()) << "\n";
            values.push_back({{"at", point}, {"value", {v.real(), v.imag()}}});
        }
    }
    if (!values.empty()) j["values"] = std::move(values);

    if (format == "json")
        emit(out_path, j.dump(2) + "\n");
    else if (format == "csv")
        emit(out_path, csv.str());
    else
        emit(out_path, text.str());
    return 0;
}

int cmd_zeros(const PolyArgs& args, double tol, bool gap_report,
              const std::string& format, const std::string& out_path) {
    PolyQ p = exact_polynomial(args);
    if (p.degree() < 1)
        throw std::invalid_argument("zeros: polynomial has degree " +
                                    std::to_string(p.degree()));
    std::string source = args.family;
    NodeSet ns = zeros(p, tol, source);

    std::ostringstream csv;
    csv << "re,im,source\n";
    for (const auto& z : ns.points)
        csv << format_double(z.real()) << "," << format_double(z.imag()) << "," << source
            << "\n";
    if (gap_report) {
        NodeSet nonzero;
        for (const auto& z : ns.points)
            if (std::abs(z) > 1e-9) nonzero.points.push_back(z);
        csv << "# min nonzero-zero gap," << format_double(nonzero.min_pairwise_gap())
            << ",\n";
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["source"] = source;
        j["tol"] = tol;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& z : ns.points) arr.push_back({z.real(), z.imag()});
        j["zeros"] = std::move(arr);
        if (gap_report) {
            NodeSet nonzero;
            for (const auto& z : ns.points)
                if (std::abs(z) > 1e-9) nonzero.points.push_back(z);
            j["min_nonzero_gap"] = nonzero.min_pairwise_gap();
        }
        emit(out_path, j.dump(2) + "\n");
    } else if (format == "text") {
        std::ostringstream text;
        for (const auto& z : ns.points) {
            text << format_double(z.real());
            if (z.imag() != 0.0)
                text << (z.imag() < 0 ? " - " : " + ") << format_double(std::abs(z.imag()))
                     << "i";
            text << "\n";
        }
        emit(out_path, text.str());
    } else {
        emit(out_path, csv.str());
    }
    return 0;
}

int cmd_compare(const PolyArgs& args, std::vector<std::string> method_names,
                const std::string& format, const std::string& out_path) {
    XopSpec s = spec_from_args(args);
    if (method_names.empty()) {
        for (Method m : methods_for(s.family)) method_names.push_back(to_string(m));
        method_names.push_back("det");
        if (s.family == XopFamily::HermiteGeneral) method_names.pop_back();
    }
    if (method_names.size() < 2)
        throw std::invalid_argument("compare needs at least two methods");

    struct Row {
        std::string method;
        bool exact;
        PolyQ q;
        PolyC c;
    };
    std::vector<Row> rows;
    for (const auto& name : method_names) {
        Row r;
        r.method = name;
        if (name == "det") {
            r.exact = false;
            r.c = det_xop(s);
        } else {
            auto parsed = parse_method(name);
            if (!parsed) throw std::invalid_argument("unknown method: " + name);
            r.exact = true;
            r.q = xop_direct(s, *parsed);
        }
        rows.push_back(std::move(r));
    }

    // Deviation of every method against the first.
    const Row& ref = rows.front();
    std::ostringstream text;
    nlohmann::ordered_json j;
    j["spec"] = s.describe();
    auto jrows = nlohmann::ordered_json::array();
    text << s.describe() << "\n";
    bool all_agree = true;
    for (const auto& r : rows) {
        double dev = 0.0;
        bool exact_match = false;
        if (r.exact && ref.exact) {
            exact_match = r.q == ref.q;
            dev = exact_match ? 0.0 : 1.0;
        } else if (ref.exact) {
            dev = coefficientwise_relative_error(r.c, ref.q);
        } else if (r.exact) {
            dev = coefficientwise_relative_error(ref.c, r.q);
        }
        if (&r != &ref) all_agree = all_agree && (exact_match || dev <= 1e-8);
        std::string poly = r.exact ? format_poly_text(r.q) : format_poly_text(r.c);
        text << "  " << r.method << ": " << poly;
        if (&r != &ref)
            text << "   [" << (r.exact && ref.exact ? (exact_match ? "exact match" : "MISMATCH")
                                                     : "rel dev " + format_double(dev))
                 << "]";
        text << "\n";
        nlohmann::ordered_json jr;
        jr["method"] = r.method;
        if (r.exact) jr["coeffs"] = poly_fraction_strings(r.q);
        else {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& c : r.c.coeffs()) arr.push_back({c.real(), c.imag()});
            jr["coeffs"] = std::move(arr);
        }
        if (&r != &ref) jr["deviation_vs_first"] = dev;
        jrows.push_back(std::move(jr));
    }
    j["methods"] = std::move(jrows);
    j["agree"] = all_agree;
    text << (all_agree ? "AGREE" : "DISAGREE") << "\n";

    if (format == "json") emit(out_path, j.dump(2) + "\n");
    else emit(out_path, text.str());
    return all_agree ? 0 : 1;
}

int cmd_table(PolyArgs args, int n_min, int n_max, const std::string& format,
              const std::string& out_path) {
    std::ostringstream csv, text;
    csv << "n,degree,coeffs\n";
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (int n = n_min; n <= n_max; ++n) {
        args.n = n;
        PolyQ p;
        try {
            p = exact_polynomial(args);
        } catch (const std::invalid_argument&) {
            continue;  // degrees missing from the family
        }
        csv << n << "," << p.degree() << "," << csv_field(format_poly_csv(p)) << "\n";
        text << "n=" << n << ": " << format_poly_text(p) << "\n";
        jrows.push_back({{"n", n}, {"coeffs", poly_fraction_strings(p)}});
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["family"] = args.family;
        j["rows"] = std::move(jrows);
        emit(out_path, j.dump(2) + "\n");
    } else if (format == "csv") {
        emit(out_path, csv.str());
    } else {
        emit(out_path, text.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exceptional orthogonal polynomial laboratory"};
    app.require_subcommand(1);

    PolyArgs eval_args, zeros_args, compare_args, table_args;
    std::vector<std::string> eval_at, compare_methods;
    bool eval_coeffs = false, zeros_gap = false;
    double zeros_tol = 1e-13;
    std::string eval_format = "text", zeros_format = "csv", compare_format = "text",
                table_format = "csv", verify_format;
    std::string eval_out, zeros_out, compare_out, table_out, verify_out;
    int table_n_min = 0, table_n_max = 8;

    auto* eval = app.add_subcommand("eval", "evaluate a polynomial / print coefficients");
    add_poly_flags(eval, eval_args, true);
    eval->add_option("--at", eval_at, "evaluation points (rational, decimal, or re,im)");
    eval->add_flag("--coeffs", eval_coeffs, "print the coefficient form");
    eval->add_option("--format", eval_format, "text|json|csv");
    eval->add_option("--out", eval_out, "output file");

    auto* zeros_cmd = app.add_subcommand("zeros", "emit zeros as plot data");
    add_poly_flags(zeros_cmd, zeros_args, true);
    zeros_cmd->add_option("--tol", zeros_tol, "root tolerance");
    zeros_cmd->add_flag("--gap-report", zeros_gap, "append min nonzero-zero gap");
    zeros_cmd->add_option("--format", zeros_format, "csv|json|text");
    zeros_cmd->add_option("--out", zeros_out, "output file");

    RunConfig cfg = RunConfig::defaults();
    std::vector<std::string> cfg_alphas, cfg_betas, cfg_x_betas;
    auto* verify = app.add_subcommand("verify", "run the verification grid");
    verify->add_option("--m-max", cfg.m_max, "largest m");
    verify->add_option("--n-max", cfg.n_max, "largest degree (<= 30)");
    verify->add_option("--alpha", cfg_alphas, "classical identity alphas");
    verify->add_option("--beta", cfg_betas, "classical identity betas");
    verify->add_option("--x-beta", cfg_x_betas, "exceptional Jacobi betas");
    verify->add_option("--tol", cfg.root_tol, "root tolerance");
    verify->add_option("--agree-tol", cfg.agree_tol, "determinantal agreement tolerance");
    verify->add_option("--jobs", cfg.jobs, "parallel workers");
    verify->add_option("--seed", cfg.seed, "permutation-test seed");
    verify->add_flag("--timings", cfg.timings, "include wall times in json/csv");
    verify->add_option("--format", verify_format, "text|json|csv");
    verify->add_option("--out", verify_out, "output file");

    auto* compare = app.add_subcommand("compare", "evaluate two or more methods side by side");
    add_poly_flags(compare, compare_args, false);
    compare->add_option("--method", compare_methods, "methods to compare (repeatable)");
    compare->add_option("--format", compare_format, "text|json");
    compare->add_option("--out", compare_out, "output file");

    auto* table = app.add_subcommand("table", "coefficient tables over a degree range");
    add_poly_flags(table, table_args, true);
    table->add_option("--n-min", table_n_min, "first degree");
    table->add_option("--n-max", table_n_max, "last degree");
    table->add_option("--format", table_format, "csv|json|text");
    table->add_option("--out", table_out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed())
            return cmd_eval(eval_args, eval_at, eval_coeffs, eval_format, eval_out);
        if (zeros_cmd->parsed())
            return cmd_zeros(zeros_args, zeros_tol, zeros_gap, zeros_format, zeros_out);
        if (verify->parsed()) {
            if (!cfg_alphas.empty()) {
                cfg.alphas.clear();
                for (const auto& s : cfg_alphas) cfg.alphas.push_back(parse_rational(s));
            }
            if (!cfg_betas.empty()) {
                cfg.betas.clear();
                for (const auto& s : cfg_betas) cfg.betas.push_back(parse_rational(s));
            }
            if (!cfg_x_betas.empty()) {
                cfg.x_betas.clear();
                for (const auto& s : cfg_x_betas) cfg.x_betas.push_back(parse_rational(s));
            }
            if (!verify_format.empty()) cfg.format = verify_format;
            cfg.out = verify_out;
            VerificationReport report = run_verification(cfg);
            std::string rendered = cfg.format == "json"  ? report_to_json(report, cfg)
                                   : cfg.format == "csv" ? report_to_csv(report, cfg)
                                                         : report_to_text(report, cfg);
            emit(cfg.out, rendered);
            return report.all_passed() ? 0 : 1;
        }
        if (compare->parsed())
            return cmd_compare(compare_args, compare_methods, compare_format, compare_out);
        if (table->parsed())
            return cmd_table(table_args, table_n_min, table_n_max, table_format, table_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
