#include "qrl/report.hpp"

#include "qrl/error.hpp"

#include <istream>
#include <sstream>

namespace qrl {

using nlohmann::json;

namespace {

json tally_json(const std::map<OutcomeKey, u64>& tally)
{
    json out = json::array();
    for (const auto& [key, count] : tally)
        out.push_back({{"symbol", key.first}, {"class", key.second}, {"count", count}});
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

struct CsvWriter {
    std::ostringstream out;

    void row(std::initializer_list<std::string> fields)
    {
        bool first = true;
        for (const std::string& f : fields) {
            if (!first)
                out << ',';
            out << csv_field(f);
            first = false;
        }
        out << '\n';
    }
};

std::string coords_string(const std::optional<std::pair<i64, i64>>& c)
{
    if (!c)
        return "";
    return "(" + std::to_string(c->first) + "," + std::to_string(c->second) + ")";
}

std::string family_name(ClassFamily family)
{
    return family == ClassFamily::Minus4 ? "minus4" : "plus4";
}

std::string example_name(WorkedExample which)
{
    return which == WorkedExample::Example1 ? "example1" : "example2";
}

std::string signed_string(int s)
{
    return s > 0 ? "+1" : s < 0 ? "-1" : "+-i";
}

} // namespace

json to_json(const VerificationReport& report)
{
    json params = json::object();
    for (const auto& [k, v] : report.proposition.params)
        params[k] = v;

    json mismatches = json::array();
    for (const MismatchRecord& m : report.mismatches) {
        json rec{{"prime", m.prime},
                 {"symbol", m.symbol},
                 {"class", m.prime_class.to_string()},
                 {"form", m.form ? json(m.form->to_string()) : json(nullptr)},
                 {"coords", m.coords ? json::array({m.coords->first, m.coords->second})
                                     : json(nullptr)},
                 {"detail", m.detail}};
        mismatches.push_back(std::move(rec));
    }
    json anomalies = json::array();
    for (const Anomaly& a : report.anomalies)
        anomalies.push_back({{"prime", a.prime}, {"description", a.description}});

    json checks = json::object();
    for (const auto& [name, c] : report.cross_checks)
        checks[name] = {{"checked", c.checked}, {"failed", c.failed}};

    json facts = json::object();
    for (const auto& [k, v] : report.facts)
        facts[k] = v;

    return json{{"proposition", report.proposition.name()},
                {"params", params},
                {"range", report.range_max},
                {"tested", report.tested},
                {"by_class", tally_json(report.by_class)},
                {"mismatches", mismatches},
                {"anomalies", anomalies},
                {"cross_checks", checks},
                {"complement",
                 {{"tested", report.complement_tested},
                  {"by_class", tally_json(report.complement_by_class)}}},
                {"facts", facts},
                {"verified", report.verified()}};
}

std::string to_csv(const VerificationReport& report)
{
    CsvWriter w;
    w.row({"kind", "key", "symbol", "class", "prime", "count", "detail"});
    w.row({"summary", "proposition", "", "", "", "", report.proposition.name()});
    for (const auto& [k, v] : report.proposition.params)
        w.row({"param", k, "", "", "", std::to_string(v), ""});
    w.row({"summary", "range", "", "", "", std::to_string(report.range_max), ""});
    w.row({"summary", "tested", "", "", "", std::to_string(report.tested), ""});
    w.row({"summary", "complement_tested", "", "", "", std::to_string(report.complement_tested), ""});
    for (const auto& [key, count] : report.by_class)
        w.row({"by_class", "", key.first, key.second, "", std::to_string(count), ""});
    for (const auto& [key, count] : report.complement_by_class)
        w.row({"complement", "", key.first, key.second, "", std::to_string(count), ""});
    for (const auto& [name, c] : report.cross_checks) {
        w.row({"cross_check", name, "", "", "", std::to_string(c.checked), "checked"});
        w.row({"cross_check", name, "", "", "", std::to_string(c.failed), "failed"});
    }
    for (const auto& [k, v] : report.facts)
        w.row({"fact", k, "", "", "", "", v});
    for (const MismatchRecord& m : report.mismatches)
        w.row({"mismatch", m.form ? m.form->to_string() : "", m.symbol, m.prime_class.to_string(),
               std::to_string(m.prime), coords_string(m.coords), m.detail});
    for (const Anomaly& a : report.anomalies)
        w.row({"anomaly", "", "", "", std::to_string(a.prime), "", a.description});
    return w.out.str();
}

std::string to_text(const VerificationReport& report)
{
    std::ostringstream out;
    out << "proposition: " << report.proposition.name();
    for (const auto& [k, v] : report.proposition.params)
        out << ' ' << k << '=' << v;
    out << "\nrange: primes <= " << report.range_max << '\n';
    for (const auto& [k, v] : report.facts)
        out << k << ": " << v << '\n';
    out << "tested: " << report.tested << '\n';
    for (const auto& [key, count] : report.by_class)
        out << "  symbol " << key.first << ", class " << key.second << ": " << count << '\n';
    if (report.complement_tested > 0) {
        out << "outside hypothesis (full correspondence): " << report.complement_tested << '\n';
        for (const auto& [key, count] : report.complement_by_class)
            out << "  symbol " << key.first << ", class " << key.second << ": " << count << '\n';
    }
    for (const auto& [name, c] : report.cross_checks)
        out << "cross-check " << name << ": " << c.checked - c.failed << '/' << c.checked
            << " agree\n";
    out << "mismatches: " << report.mismatches.size() << '\n';
    for (const MismatchRecord& m : report.mismatches)
        out << "  " << m.prime << " symbol " << m.symbol << " class " << m.prime_class.to_string()
            << (m.coords ? " at " + coords_string(m.coords) : std::string()) << ": " << m.detail
            << '\n';
    out << "anomalies: " << report.anomalies.size() << '\n';
    for (const Anomaly& a : report.anomalies)
        out << "  " << a.prime << ": " << a.description << '\n';
    out << (report.verified() ? "VERIFIED" : "FAILED") << '\n';
    return out.str();
}

json to_json(const std::vector<ClassTableRow>& rows, ClassFamily family)
{
    json out = json::array();
    for (const ClassTableRow& r : rows)
        out.push_back({{"b", r.b},
                       {"m", r.m},
                       {"disc", r.disc},
                       {"h", r.class_number ? json(*r.class_number) : json(nullptr)},
                       {"note", r.note}});
    return json{{"table", "class"}, {"family", family_name(family)}, {"rows", out}};
}

std::string to_csv(const std::vector<ClassTableRow>& rows)
{
    CsvWriter w;
    w.row({"b", "m", "disc", "h", "note"});
    for (const ClassTableRow& r : rows)
        w.row({std::to_string(r.b), std::to_string(r.m), std::to_string(r.disc),
               r.class_number ? std::to_string(*r.class_number) : "", r.note});
    return w.out.str();
}

std::string to_text(const std::vector<ClassTableRow>& rows, ClassFamily family)
{
    std::ostringstream out;
    out << "m = 27b^2 " << (family == ClassFamily::Minus4 ? "- 4" : "+ 4") << "\n";
    out << "b\t-m\th\n";
    for (const ClassTableRow& r : rows) {
        out << r.b << '\t' << r.disc << '\t';
        if (r.class_number)
            out << *r.class_number;
        else
            out << "-\t(" << r.note << ')';
        out << '\n';
    }
    return out.str();
}

json to_json(const ExampleTable& table)
{
    json rows = json::array();
    for (const ExampleTableRow& r : table.rows)
        rows.push_back({{"prime", r.prime},
                        {"form_name", r.form_name},
                        {"form", r.form ? json(r.form->to_string()) : json(nullptr)},
                        {"coords", r.coords ? json::array({r.coords->first, r.coords->second})
                                            : json(nullptr)},
                        {"symbol", r.symbol},
                        {"expected", r.expected},
                        {"matches", r.matches()}});
    return json{{"table", example_name(table.which)},
                {"p", table.p},
                {"q", table.q},
                {"s", table.sign},
                {"unit", table.unit},
                {"rows", rows},
                {"verified", table.verified()}};
}

std::string to_csv(const ExampleTable& table)
{
    CsvWriter w;
    w.row({"prime", "form_name", "form", "coords", "symbol", "expected", "matches"});
    for (const ExampleTableRow& r : table.rows)
        w.row({std::to_string(r.prime), r.form_name, r.form ? r.form->to_string() : "",
               coords_string(r.coords), signed_string(r.symbol), signed_string(r.expected),
               r.matches() ? "yes" : "no"});
    return w.out.str();
}

std::string to_text(const ExampleTable& table)
{
    std::ostringstream out;
    out << example_name(table.which) << ": p = " << table.p << ", q = " << table.q
        << ", eps = " << table.unit << ", s = " << signed_string(table.sign) << '\n';
    out << "l\tform\tcoords\t(s eps/l)_4\texpected\n";
    for (const ExampleTableRow& r : table.rows)
        out << r.prime << '\t' << (r.form ? r.form_name : "none") << '\t'
            << coords_string(r.coords) << '\t' << signed_string(r.symbol) << '\t'
            << signed_string(r.expected) << (r.matches() ? "" : "\tMISMATCH") << '\n';
    out << (table.verified() ? "VERIFIED" : "FAILED") << '\n';
    return out.str();
}

std::vector<GoldenEntry> parse_golden(std::istream& in)
{
    std::vector<GoldenEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string prime_str, symbol_str, extra;
        if (!(fields >> prime_str))
            continue;
        if (!(fields >> symbol_str) || (fields >> extra))
            throw Error(ErrorKind::InvalidArgument,
                        "golden line " + std::to_string(line_no) + ": expected '<prime> <+1|-1>'");
        GoldenEntry e;
        try {
            std::size_t used = 0;
            e.prime = std::stoull(prime_str, &used);
            if (used != prime_str.size())
                throw std::invalid_argument(prime_str);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument,
                        "golden line " + std::to_string(line_no) + ": bad prime '" + prime_str + "'");
        }
        if (symbol_str == "+1" || symbol_str == "1")
            e.symbol = 1;
        else if (symbol_str == "-1")
            e.symbol = -1;
        else
            throw Error(ErrorKind::InvalidArgument,
                        "golden line " + std::to_string(line_no) + ": bad symbol '" + symbol_str + "'");
        entries.push_back(e);
    }
    return entries;
}

} // namespace qrl
