#pragma once

// Rendering of results as aligned text tables or '|'-delimited rows. Text
// mode rounds probabilities to three significant figures; delimited mode
// prints full precision plus the exact rational wherever one exists, and
// never includes timestamps, so identical inputs give identical bytes.

#include "coincidence/bayesian.hpp"
#include "coincidence/frequentist.hpp"
#include "coincidence/montecarlo.hpp"
#include "coincidence/rr_demo.hpp"
#include "coincidence/scenario_config.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace coincidence {

std::string format_sig(double value, int significant = 3);
// Shortest round-trip representation.
std::string format_full(double value);

void render_grid(std::ostream& out, const PValueGrid& grid, OutputFormat format);
void render_posteriors(std::ostream& out, std::span<const PosteriorResult> results, OutputFormat format);

struct RrDemoRow {
    std::string label;
    std::string observed;
    std::optional<Rational> rr;
    std::optional<Rational> p_value;
};
void render_rr_demo(std::ostream& out, std::span<const RrDemoRow> rows, OutputFormat format);

struct CheckRow {
    std::string target;
    std::string label;
    SimEstimate estimate;
    double exact = 0.0;
    std::optional<Rational> exact_rational;
    bool pass = false;
};
void render_checks(std::ostream& out, std::span<const CheckRow> rows, OutputFormat format);

}  // namespace coincidence
