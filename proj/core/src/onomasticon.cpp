#include "coincidence/onomasticon.hpp"

#include "text.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>

namespace coincidence {

using text::parse_unsigned;
using text::split;
using text::trim;

char gender_code(Gender g) { return g == Gender::male ? 'm' : 'f'; }

std::string_view gender_name(Gender g) { return g == Gender::male ? "male" : "female"; }

std::optional<Gender> parse_gender(std::string_view text) {
    text = trim(text);
    if (text == "m" || text == "male") return Gender::male;
    if (text == "f" || text == "female") return Gender::female;
    return std::nullopt;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Onomasticon::Onomasticon(std::uint64_t male_total, std::uint64_t female_total, std::vector<NameRecord> records)
    : male_total_(male_total), female_total_(female_total), records_(std::move(records)) {
    if (male_total_ == 0 || female_total_ == 0) throw std::invalid_argument("onomasticon totals must be positive");

    std::uint64_t listed[2] = {0, 0};
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& r = records_[i];
        if (r.name.empty()) throw std::invalid_argument("empty name in onomasticon");
        std::uint64_t rendition_sum = 0;
        for (const auto& rend : r.renditions) rendition_sum += rend.count;
        if (rendition_sum > r.count)
            throw std::invalid_argument("renditions of '" + r.name + "' sum to " + std::to_string(rendition_sum) +
                                        ", more than its count " + std::to_string(r.count));
        if (!index_.emplace(std::pair{r.gender, r.name}, i).second)
            throw std::invalid_argument("duplicate name '" + r.name + "' for gender " +
                                        std::string(gender_name(r.gender)));
        listed[r.gender == Gender::male ? 0 : 1] += r.count;
    }
    if (listed[0] > male_total_) throw std::invalid_argument("listed male counts exceed male total");
    if (listed[1] > female_total_) throw std::invalid_argument("listed female counts exceed female total");
}

const NameRecord* Onomasticon::find(std::string_view name, Gender g) const {
    auto it = index_.find(std::pair{g, std::string(name)});
    return it == index_.end() ? nullptr : &records_[it->second];
}

std::uint64_t Onomasticon::count(std::string_view name, Gender g) const {
    const auto* r = find(name, g);
    return r ? r->count : 0;
}

Rational Onomasticon::conditional_probability(std::string_view name, Gender g) const {
    Rational p(Integer(static_cast<unsigned long>(count(name, g))), Integer(static_cast<unsigned long>(total(g))));
    p.canonicalize();
    return p;
}

Onomasticon load_onomasticon(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> totals;
    std::vector<NameRecord> records;
    std::set<std::pair<Gender, std::string>> seen;

    while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto fields = split(line, '|');

        if (!totals) {
            if (fields.size() != 3 || fields[0] != "totals")
                throw ParseError(line_no, "expected header 'totals|<male_total>|<female_total>'");
            auto m = parse_unsigned(fields[1]);
            auto f = parse_unsigned(fields[2]);
            if (!m || !f) throw ParseError(line_no, "totals must be nonnegative integers");
            if (*m == 0 || *f == 0) throw ParseError(line_no, "totals must be positive");
            totals = std::pair{*m, *f};
            continue;
        }

        if (fields.size() != 3 && fields.size() != 4)
            throw ParseError(line_no, "expected '<name>|<m|f>|<count>[|renditions]'");
        NameRecord rec;
        rec.name = std::string(fields[0]);
        if (rec.name.empty()) throw ParseError(line_no, "empty name");
        auto g = parse_gender(fields[1]);
        if (!g) throw ParseError(line_no, "gender must be 'm' or 'f'");
        rec.gender = *g;
        auto c = parse_unsigned(fields[2]);
        if (!c) throw ParseError(line_no, "count must be a nonnegative integer, got '" + std::string(fields[2]) + "'");
        rec.count = *c;

        if (fields.size() == 4 && !fields[3].empty()) {
            std::uint64_t sum = 0;
            for (auto item : split(fields[3], ';')) {
                item = trim(item);
                if (item.empty()) continue;
                auto colon = item.find(':');
                if (colon == std::string_view::npos) throw ParseError(line_no, "rendition must be '<id>:<count>'");
                auto rc = parse_unsigned(item.substr(colon + 1));
                auto id = trim(item.substr(0, colon));
                if (!rc || id.empty()) throw ParseError(line_no, "bad rendition '" + std::string(item) + "'");
                rec.renditions.push_back({std::string(id), *rc});
                sum += *rc;
            }
            if (sum > rec.count) throw ParseError(line_no, "rendition counts exceed the name's count");
        }
        if (!seen.emplace(rec.gender, rec.name).second)
            throw ParseError(line_no, "duplicate name '" + rec.name + "'");
        records.push_back(std::move(rec));
    }
    if (!totals) throw ParseError(line_no, "missing 'totals' header");
    try {
        return Onomasticon(totals->first, totals->second, std::move(records));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

Onomasticon load_onomasticon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open onomasticon '" + path + "'");
    return load_onomasticon(in);
}

void write_onomasticon(std::ostream& out, const Onomasticon& o) {
    out << "totals|" << o.male_total() << '|' << o.female_total() << '\n';
    for (const auto& r : o.records()) {
        out << r.name << '|' << gender_code(r.gender) << '|' << r.count;
        if (!r.renditions.empty()) {
            out << '|';
            for (std::size_t i = 0; i < r.renditions.size(); ++i) {
                if (i) out << ';';
                out << r.renditions[i].id << ':' << r.renditions[i].count;
            }
        }
        out << '\n';
    }
}

std::string_view ratio_name(RatioKind r) { return r == RatioKind::equal ? "equal" : "empirical"; }

std::optional<RatioKind> parse_ratio(std::string_view text) {
    text = trim(text);
    if (text == "equal") return RatioKind::equal;
    if (text == "empirical" || text == "unequal" || text == "not_equal") return RatioKind::empirical;
    return std::nullopt;
}

Rational gender_share(const Onomasticon& o, RatioKind ratio, Gender g) {
    if (ratio == RatioKind::equal) return Rational(1, 2);
    Rational share(Integer(static_cast<unsigned long>(o.total(g))),
                   Integer(static_cast<unsigned long>(o.male_total() + o.female_total())));
    share.canonicalize();
    return share;
}

Rational name_probability(const Onomasticon& o, std::string_view name, Gender g, RatioKind ratio) {
    return gender_share(o, ratio, g) * o.conditional_probability(name, g);
}

Rational target_set_nu(const Onomasticon& o, const TargetSetSpec& s, RatioKind ratio) {
    std::set<GenderedName> unique(s.names.begin(), s.names.end());
    Integer sums[2] = {0, 0};
    for (const auto& n : unique) sums[n.gender == Gender::male ? 0 : 1] += static_cast<unsigned long>(o.count(n.name, n.gender));

    Rational nu = 0;
    for (Gender g : kGenders) {
        Rational frac(sums[g == Gender::male ? 0 : 1], Integer(static_cast<unsigned long>(o.total(g))));
        frac.canonicalize();
        nu += gender_share(o, ratio, g) * frac;
    }
    return nu;
}

}  // namespace coincidence
