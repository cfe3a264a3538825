#pragma once

// Name-frequency tables (the null population measure) and the single-name /
// target-set probability queries built on them.

#include "coincidence/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coincidence {

enum class Gender { male, female };

inline constexpr Gender kGenders[] = {Gender::male, Gender::female};

char gender_code(Gender g);
std::string_view gender_name(Gender g);
// "m" / "f" (also "male" / "female").
std::optional<Gender> parse_gender(std::string_view text);

struct Rendition {
    std::string id;
    std::uint64_t count = 0;

    friend bool operator==(const Rendition&, const Rendition&) = default;
};

struct NameRecord {
    std::string name;
    Gender gender = Gender::male;
    std::uint64_t count = 0;
    std::vector<Rendition> renditions;

    friend bool operator==(const NameRecord&, const NameRecord&) = default;
};

// Thrown by the text loaders; carries the 1-based line that failed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Immutable after construction. Totals are whole-population totals and may
// exceed the sum of the listed records.
class Onomasticon {
public:
    // Validates: totals positive, counts within totals, renditions within
    // their record, names unique per gender. Throws std::invalid_argument.
    Onomasticon(std::uint64_t male_total, std::uint64_t female_total, std::vector<NameRecord> records);

    std::uint64_t total(Gender g) const { return g == Gender::male ? male_total_ : female_total_; }
    std::uint64_t male_total() const { return male_total_; }
    std::uint64_t female_total() const { return female_total_; }

    std::span<const NameRecord> records() const { return records_; }
    const NameRecord* find(std::string_view name, Gender g) const;

    // Missing names have count 0.
    std::uint64_t count(std::string_view name, Gender g) const;

    // count / total(g): the gender-conditional name probability.
    Rational conditional_probability(std::string_view name, Gender g) const;

    friend bool operator==(const Onomasticon&, const Onomasticon&) = default;

private:
    std::uint64_t male_total_;
    std::uint64_t female_total_;
    std::vector<NameRecord> records_;
    std::map<std::pair<Gender, std::string>, std::size_t, std::less<>> index_;
};

// Text format:
//   totals|<male_total>|<female_total>
//   <name>|<m|f>|<count>[|<rendition>:<count>;<rendition>:<count>...]
// '#' starts a comment line; blank lines are ignored.
Onomasticon load_onomasticon(std::istream& in);
Onomasticon load_onomasticon_file(const std::string& path);
void write_onomasticon(std::ostream& out, const Onomasticon& o);

// Gender share of a random draw: 1/2 each, or proportional to the totals.
enum class RatioKind { equal, empirical };

std::string_view ratio_name(RatioKind r);
std::optional<RatioKind> parse_ratio(std::string_view text);

Rational gender_share(const Onomasticon& o, RatioKind ratio, Gender g);

// genderShare(ratio) * count / genderTotal; 0 for unknown names.
Rational name_probability(const Onomasticon& o, std::string_view name, Gender g, RatioKind ratio);

struct GenderedName {
    std::string name;
    Gender gender = Gender::male;

    friend auto operator<=>(const GenderedName&, const GenderedName&) = default;
};

// The set S of names that make a tomb interesting, plus how many companion
// names from S are needed.
struct TargetSetSpec {
    std::string label;
    std::vector<GenderedName> names;
    unsigned overlap_threshold = 3;
};

// Probability that a single mixed-gender draw lands in S. Duplicate entries
// in S are counted once.
Rational target_set_nu(const Onomasticon& o, const TargetSetSpec& s, RatioKind ratio);

}  // namespace coincidence
