#include "CLI11.hpp"

#include "stirgamma/bernoulli.hpp"
#include "stirgamma/constants.hpp"
#include "stirgamma/gamma.hpp"
#include "stirgamma/stirling_series.hpp"
#include "stirgamma/text_format.hpp"
#include "stirgamma/verify.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace stirgamma;

constexpr int kSeriesCap = 30;

enum class OutputFormat { plain, csv };

// Either stdout or a --output file; rows always end in a bare LF.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::invalid_argument("cannot open output file: " + path);
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

    void line(const std::string& text) { stream() << text << "\n"; }

    void row(OutputFormat format, const std::vector<std::string>& fields) {
        std::string out;
        const char* sep = format == OutputFormat::csv ? "," : "  ";
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += sep;
            out += fields[i];
        }
        line(out);
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string fmt_float(OutputFormat format, double x) {
    return format == OutputFormat::csv ? format_double(x) : format_double_display(x);
}

std::string fmt_cplx(OutputFormat format, std::complex<double> z) {
    return format == OutputFormat::csv ? format_complex(z) : format_complex_display(z);
}

TruncationPolicy policy_from(const std::string& terms) {
    if (terms == "auto") return TruncationPolicy::smallest(kSeriesCap);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(terms, &used);
        if (used != terms.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("--terms expects an integer or \"auto\"");
    }
    return TruncationPolicy::fixed(n, kSeriesCap);  // rejects n outside [0, cap]
}

EvalConfig config_from(const std::string& terms, double shift_threshold) {
    EvalConfig config = EvalConfig::make_default();
    config.policy = policy_from(terms);
    config.shift_threshold = shift_threshold;
    return config;
}

void cmd_bernoulli(unsigned max, OutputFormat format, Sink& sink) {
    BernoulliTable table = build_table(max);
    sink.row(format, {"j", "c", "B"});
    for (unsigned j = 0; j <= max; ++j) {
        sink.row(format, {std::to_string(j), table.c(j).to_string(),
                          table.bernoulli(j).to_string()});
    }
}

void cmd_coeffs(unsigned max, OutputFormat format, Sink& sink) {
    StirlingSeries series = build_series(build_table(2 * max), static_cast<int>(max));
    sink.row(format, {"n", "a"});
    for (int n = 1; n <= static_cast<int>(max); ++n) {
        sink.row(format, {std::to_string(n), series.coefficient_exact(n).to_string()});
    }
}

void cmd_eval(const std::string& z_text, const std::string& terms, double shift_threshold,
              OutputFormat format, Sink& sink) {
    auto z = parse_complex(z_text);
    if (!z) throw std::invalid_argument("--z expects \"RE\" or \"RE,IM\"");
    if (z->real() <= 0.0)
        throw std::domain_error("outside supported domain: Re z must be positive");

    EvalConfig config = config_from(terms, shift_threshold);
    EvalResult lg = log_gamma(*z, config);
    // exp saturates to inf past double range; the log row stays informative.
    std::complex<double> gamma_value = std::exp(lg.value);

    if (format == OutputFormat::csv) {
        sink.row(format, {"z", "log_gamma", "gamma", "error_estimate", "terms_used",
                          "shift_applied"});
        sink.row(format, {format_complex(*z), format_complex(lg.value),
                          format_complex(gamma_value), format_double(lg.error_estimate),
                          std::to_string(lg.terms_used), std::to_string(lg.shift_applied)});
    } else {
        sink.line("z              = " + fmt_cplx(format, *z));
        sink.line("log_gamma      = " + fmt_cplx(format, lg.value));
        sink.line("gamma          = " + fmt_cplx(format, gamma_value));
        sink.line("error_estimate = " + fmt_float(format, lg.error_estimate));
        sink.line("terms_used     = " + std::to_string(lg.terms_used));
        sink.line("shift_applied  = " + std::to_string(lg.shift_applied));
    }
}

void cmd_cestimate(std::vector<unsigned> n_values, int terms, OutputFormat format, Sink& sink) {
    if (n_values.empty()) throw std::invalid_argument("--n expects at least one value");
    for (unsigned n : n_values) {
        if (n < 1) throw std::invalid_argument("--n values must be >= 1");
    }
    if (terms < 0 || terms > kSeriesCap)
        throw std::invalid_argument("--terms must lie in [0, " + std::to_string(kSeriesCap) + "]");

    StirlingSeries series = EvalConfig::make_default().series;
    auto rows = convergence_study(n_values, static_cast<unsigned>(terms), series);
    sink.row(format, {"n", "C_estimate", "deviation"});
    for (const auto& row : rows) {
        sink.row(format, {std::to_string(row.n), fmt_float(format, row.c_estimate),
                          fmt_float(format, row.deviation)});
    }
}

void cmd_error_profile(double z, int max_terms, Sink& sink) {
    if (max_terms < 0 || max_terms > kSeriesCap)
        throw std::invalid_argument("--max-terms must lie in [0, " + std::to_string(kSeriesCap) +
                                    "]");
    const double two_z = 2.0 * z;
    if (z <= 0.0 || two_z != std::floor(two_z))
        throw std::domain_error(
            "error-profile needs a positive integer or half-integer z, where an exact "
            "reference value of Gamma is available");
    if (z > 170.0) throw std::domain_error("exact reference exceeds double range for z > 170");

    const auto two_z_int = static_cast<long>(two_z);
    double reference_gamma;
    if (two_z_int % 2 == 0) {
        reference_gamma = integer_exact(static_cast<int>(two_z_int / 2)).to_double();
    } else {
        const auto n = static_cast<unsigned>((two_z_int - 1) / 2);
        reference_gamma =
            (half_integer_exact(n).r * sqrt_pi_decimal(35).to_rational()).to_double();
    }
    const double reference_log = std::log(reference_gamma);

    StirlingSeries series = EvalConfig::make_default().series;
    sink.row(OutputFormat::csv, {"terms", "abs_error", "first_omitted_term_estimate"});
    for (int n = 0; n <= max_terms; ++n) {
        const double value = eval_log_gamma_raw(series, {z, 0.0}, n).real();
        sink.row(OutputFormat::csv,
                 {std::to_string(n), format_double(std::fabs(value - reference_log)),
                  format_double(error_estimate(series, {z, 0.0}, n))});
    }
}

void cmd_table(double from, double to, double step, const std::string& terms,
               double shift_threshold, OutputFormat format, Sink& sink) {
    if (step <= 0.0) throw std::invalid_argument("--step must be positive");
    if (to < from) throw std::invalid_argument("--to must not be below --from");
    if (from <= 0.0) throw std::domain_error("outside supported domain: grid must have Re z > 0");

    EvalConfig config = config_from(terms, shift_threshold);
    sink.row(format, {"z", "log_gamma", "gamma", "error_estimate", "terms_used",
                      "shift_applied"});
    const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9));
    for (long i = 0; i <= count; ++i) {
        const double z = from + static_cast<double>(i) * step;
        EvalResult lg = log_gamma({z, 0.0}, config);
        sink.row(format, {fmt_float(format, z), fmt_float(format, lg.value.real()),
                          fmt_float(format, std::exp(lg.value.real())),
                          fmt_float(format, lg.error_estimate),
                          std::to_string(lg.terms_used), std::to_string(lg.shift_applied)});
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"log-gamma and gamma via the Stirling asymptotic series, with exact "
                 "rational coefficient generation"};
    app.require_subcommand(1);

    std::string format_name = "plain";
    std::string output_path;
    std::string terms = "auto";
    double shift_threshold = 8.0;

    auto add_common = [&](CLI::App* sub, bool with_eval_options) {
        sub->add_option("--format", format_name, "plain or csv")
            ->check(CLI::IsMember({"plain", "csv"}));
        sub->add_option("--output", output_path, "write to a file instead of stdout");
        if (with_eval_options) {
            sub->add_option("--terms", terms, "term count, or \"auto\" for smallest-term");
            sub->add_option("--shift-threshold", shift_threshold,
                            "minimum Re z before the series is applied");
        }
    };

    unsigned bernoulli_max = 0;
    auto* sub_bernoulli = app.add_subcommand("bernoulli", "exact c_j and B_j table");
    sub_bernoulli->add_option("--max", bernoulli_max, "largest index j")
        ->required()
        ->check(CLI::Range(0, 300));
    add_common(sub_bernoulli, false);

    unsigned coeffs_max = 0;
    auto* sub_coeffs = app.add_subcommand("coeffs", "exact series coefficients a_n");
    sub_coeffs->add_option("--max", coeffs_max, "largest term index n")
        ->required()
        ->check(CLI::Range(0, 150));
    add_common(sub_coeffs, false);

    std::string eval_z;
    auto* sub_eval = app.add_subcommand("eval", "evaluate log gamma and gamma at one point");
    sub_eval->add_option("--z", eval_z, "argument, \"RE\" or \"RE,IM\"")->required();
    add_common(sub_eval, true);

    std::vector<unsigned> cest_n;
    int cest_terms = 0;
    auto* sub_cest = app.add_subcommand("cestimate",
                                        "recover the series constant from exact half-integer values");
    sub_cest->add_option("--n", cest_n, "half-integer indices, repeatable or comma list")
        ->required()
        ->delimiter(',');
    sub_cest->add_option("--terms", cest_terms, "correction terms to apply");
    add_common(sub_cest, false);

    double profile_z = 0.0;
    int profile_max_terms = 0;
    auto* sub_profile = app.add_subcommand("error-profile",
                                           "truncation error against an exact reference (CSV)");
    sub_profile->add_option("--z", profile_z, "positive integer or half-integer")->required();
    sub_profile->add_option("--max-terms", profile_max_terms, "largest term count")->required();
    sub_profile->add_option("--output", output_path, "write to a file instead of stdout");

    double table_from = 0.0, table_to = 0.0, table_step = 0.0;
    auto* sub_table = app.add_subcommand("table", "gamma over a real grid");
    sub_table->add_option("--from", table_from, "grid start")->required();
    sub_table->add_option("--to", table_to, "grid end")->required();
    sub_table->add_option("--step", table_step, "grid spacing")->required();
    add_common(sub_table, true);

    try {
        app.parse(argc, argv);

        const OutputFormat format =
            format_name == "csv" ? OutputFormat::csv : OutputFormat::plain;
        Sink sink(output_path);

        if (*sub_bernoulli) {
            cmd_bernoulli(bernoulli_max, format, sink);
        } else if (*sub_coeffs) {
            cmd_coeffs(coeffs_max, format, sink);
        } else if (*sub_eval) {
            cmd_eval(eval_z, terms, shift_threshold, format, sink);
        } else if (*sub_cest) {
            cmd_cestimate(cest_n, cest_terms, format, sink);
        } else if (*sub_profile) {
            cmd_error_profile(profile_z, profile_max_terms, sink);
        } else if (*sub_table) {
            cmd_table(table_from, table_to, table_step, terms, shift_threshold, format, sink);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
