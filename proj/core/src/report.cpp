#include "coincidence/report.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <ostream>

namespace coincidence {

std::string format_sig(double value, int significant) {
    if (value == 0.0 || !std::isfinite(value)) return fmt::format("{}", value);
    return fmt::format("{:.{}g}", value, significant);
}

std::string format_full(double value) { return fmt::format("{}", value); }

void render_grid(std::ostream& out, const PValueGrid& grid, OutputFormat format) {
    if (format == OutputFormat::delimited) {
        out << "# freq|set|ratio|anchor_mode|anchor|tombs|ossuaries|nu|nu_exact|p_anchor|p_anchor_exact|pi|pi_exact|p_value\n";
        for (const auto& r : grid.rows) {
            fmt::print(out, "freq|{}|{}|{}|{}|{}|{}|{}|{}|{}|{}|{}|{}|{}\n", r.variant, ratio_name(r.ratio),
                       anchor_mode_name(r.anchor_mode), r.anchor_label, r.tombs, r.ossuaries,
                       format_full(to_double(r.nu)), to_string(r.nu), format_full(to_double(r.p_anchor)),
                       to_string(r.p_anchor), format_full(to_double(r.pi)), to_string(r.pi), format_full(r.p_value));
        }
        return;
    }
    fmt::print(out, "{:<8} {:<10} {:<22} {:>6} {:>8} {:>10} {:>8}\n", "S", "m/f ratio", "anchor", "N", "nu", "pi",
               "p-value");
    for (const auto& r : grid.rows) {
        fmt::print(out, "{:<8} {:<10} {:<22} {:>6} {:>8} {:>10} {:>8}\n", r.variant, ratio_name(r.ratio),
                   r.anchor_label, r.tombs, format_sig(to_double(r.nu), 4), format_sig(to_double(r.pi)),
                   format_sig(r.p_value));
    }
}

void render_posteriors(std::ostream& out, std::span<const PosteriorResult> results, OutputFormat format) {
    if (format == OutputFormat::delimited) {
        out << "# bayes|scenario|prior_odds|null_likelihood|alt_likelihood|likelihood_ratio|rendition_factor|"
               "posterior_odds|posterior_exact|posterior\n";
        for (const auto& r : results) {
            fmt::print(out, "bayes|{}|{}|{}|{}|{}|{}|{}|{}|{}\n", r.scenario, to_string(r.prior_odds),
                       to_string(r.null_likelihood), to_string(r.alt_likelihood), r.likelihood_ratio.to_string(),
                       to_string(r.rendition_factor), r.odds_infinite ? "inf" : to_string(r.odds),
                       to_string(r.posterior), format_full(r.posterior_value()));
        }
        return;
    }
    for (const auto& r : results) {
        auto both = [](const Rational& q) {
            std::string exact = to_string(q);
            if (exact.size() > 40) exact = "exact rational, " + std::to_string(exact.size()) + " chars";
            return fmt::format("{} ({})", format_sig(to_double(q)), exact);
        };
        fmt::print(out, "scenario: {}\n", r.scenario);
        fmt::print(out, "  prior odds        {}\n", both(r.prior_odds));
        fmt::print(out, "  null likelihood   {}\n", both(r.null_likelihood));
        fmt::print(out, "  alt likelihood    {}\n", both(r.alt_likelihood));
        fmt::print(out, "  likelihood ratio  {}\n", r.likelihood_ratio.infinite ? "inf" : both(r.likelihood_ratio.value));
        fmt::print(out, "  rendition factor  {}\n", both(r.rendition_factor));
        fmt::print(out, "  posterior odds    {}\n", r.odds_infinite ? "inf" : both(r.odds));
        fmt::print(out, "  posterior         {} ({}%)\n\n", both(r.posterior), format_sig(100.0 * r.posterior_value()));
    }
}

void render_rr_demo(std::ostream& out, std::span<const RrDemoRow> rows, OutputFormat format) {
    auto exact = [](const std::optional<Rational>& q) { return q ? to_string(*q) : std::string("not-relevant"); };
    if (format == OutputFormat::delimited) {
        out << "# rr|space|observed|rr|p_value_exact|p_value\n";
        for (const auto& r : rows)
            fmt::print(out, "rr|{}|{}|{}|{}|{}\n", r.label, r.observed, exact(r.rr), exact(r.p_value),
                       r.p_value ? format_full(to_double(*r.p_value)) : "nan");
        return;
    }
    fmt::print(out, "{:<12} {:<10} {:>8} {:>14}\n", "space", "observed", "RR", "p-value");
    for (const auto& r : rows)
        fmt::print(out, "{:<12} {:<10} {:>8} {:>14}\n", r.label, r.observed, exact(r.rr),
                   r.p_value ? fmt::format("{} ({})", exact(r.p_value), format_sig(to_double(*r.p_value)))
                             : "not relevant");
}

void render_checks(std::ostream& out, std::span<const CheckRow> rows, OutputFormat format) {
    if (format == OutputFormat::delimited) {
        out << "# check|target|label|point|standard_error|trials|seed|exact|exact_rational|verdict\n";
        for (const auto& r : rows)
            fmt::print(out, "check|{}|{}|{}|{}|{}|{}|{}|{}|{}\n", r.target, r.label, format_full(r.estimate.point),
                       format_full(r.estimate.standard_error), r.estimate.trials, r.estimate.seed,
                       format_full(r.exact), r.exact_rational ? to_string(*r.exact_rational) : "",
                       r.pass ? "PASS" : "FAIL");
        return;
    }
    for (const auto& r : rows) {
        fmt::print(out, "{} {:<6} {:<44} estimate {:<10} se {:<10} exact {:<10} (z = {})\n", r.pass ? "PASS" : "FAIL",
                   r.target, r.label, format_sig(r.estimate.point, 5), format_sig(r.estimate.standard_error, 3),
                   format_sig(r.exact, 5),
                   r.estimate.standard_error > 0
                       ? format_sig((r.estimate.point - r.exact) / r.estimate.standard_error, 3)
                       : std::string("n/a"));
    }
}

}  // namespace coincidence
