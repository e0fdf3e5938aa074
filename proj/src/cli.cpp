#include "qrl/cli.hpp"

#include "qrl/error.hpp"
#include "qrl/harness.hpp"
#include "qrl/pell.hpp"
#include "qrl/qforms.hpp"
#include "qrl/report.hpp"
#include "qrl/symbols.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

namespace qrl {

using nlohmann::json;

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

OutputFormat parse_format(const std::string& s)
{
    if (s == "text")
        return OutputFormat::Text;
    if (s == "json")
        return OutputFormat::Json;
    if (s == "csv")
        return OutputFormat::Csv;
    throw Error(ErrorKind::InvalidArgument, "unknown output format '" + s + "'");
}

int parse_threads(const std::string& s)
{
    if (s == "auto")
        return 0;
    try {
        std::size_t used = 0;
        const int n = std::stoi(s, &used);
        if (used == s.size() && n >= 1)
            return n;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, "threads must be 'auto' or a positive integer");
}

template <class T>
T parse_number(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used == value.size())
            return static_cast<T>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, key + ": '" + value + "' is not an integer");
}

void validate(const RunConfig& c)
{
    if (c.sweep_max < 2)
        throw Error(ErrorKind::InvalidArgument, "sweep_max must be >= 2");
    if (c.bruteforce_cap < 0)
        throw Error(ErrorKind::InvalidArgument, "bruteforce_cap must be >= 0");
}

/// What a command produced, renderable in each output format.
struct Document {
    json data;
    std::string text;
    std::string csv;
    int exit_code = 0;
};

std::string kv_csv(const json& flat)
{
    std::ostringstream out;
    out << "key,value\n";
    for (const auto& [k, v] : flat.items())
        out << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return out.str();
}

std::string root_label(const RootOfUnityValue& v)
{
    const int s = v.real_sign();
    if (s != 0)
        return s > 0 ? "+1" : "-1";
    return "zeta_" + std::to_string(v.order) + "^" + std::to_string(v.exponent);
}

Document unit_command(i64 d)
{
    const QuadraticUnit eps = fundamental_unit(d);
    std::optional<int> s;
    try {
        s = normalize_sign(eps.value);
    } catch (const Error&) {
    }
    Document doc;
    doc.data = {{"d", d},
                {"unit", eps.value.to_string()},
                {"t", eps.t().get_str()},
                {"u", eps.u().get_str()},
                {"norm", eps.norm},
                {"s", s ? json(*s) : json(nullptr)}};
    std::ostringstream text;
    text << "d = " << d << "\neps = " << eps.value.to_string() << "\n(t, u) = (" << eps.t().get_str()
         << ", " << eps.u().get_str() << "), eps = (t + u*sqrt(d))/2\nnorm = "
         << (eps.norm > 0 ? "+1" : "-1") << '\n';
    if (s)
        text << "s = " << (*s > 0 ? "+1" : "-1") << '\n';
    doc.text = text.str();
    doc.csv = kv_csv(doc.data);
    return doc;
}

Document classgroup_command(i64 disc)
{
    const ClassGroup group = enumerate_classes(disc);
    std::optional<std::vector<i64>> structure;
    if (group.class_number() <= 10'000)
        structure = group_structure(group);

    Document doc;
    json forms = json::array();
    std::ostringstream text, csv;
    text << "D = " << disc << "\nh = " << group.class_number() << '\n';
    csv << "a,b,c,order\n";
    for (const FormClass& f : group.classes()) {
        const i64 ord = order_of(f, group.class_number());
        forms.push_back({{"form", f.rep().to_string()}, {"order", ord}});
        text << "  " << f.rep().to_string() << "  order " << ord << '\n';
        csv << f.rep().a << ',' << f.rep().b << ',' << f.rep().c << ',' << ord << '\n';
    }
    if (structure) {
        text << "structure = [";
        for (std::size_t i = 0; i < structure->size(); ++i)
            text << (i ? "," : "") << (*structure)[i];
        text << "]\n";
    }
    doc.data = {{"disc", disc},
                {"h", group.class_number()},
                {"forms", forms},
                {"structure", structure ? json(*structure) : json(nullptr)}};
    doc.text = text.str();
    doc.csv = csv.str();
    return doc;
}

Document prime_class_command(u64 l, i64 disc)
{
    const FormClass cls = prime_to_class(l, disc);
    const auto rep = represents(cls.rep(), static_cast<i64>(l));
    const i64 ord = order_of(cls);
    Document doc;
    doc.data = {{"prime", l},
                {"disc", disc},
                {"class", cls.rep().to_string()},
                {"principal", cls.is_principal()},
                {"order", ord},
                {"coords", rep ? json::array({rep->first, rep->second}) : json(nullptr)}};
    std::ostringstream text;
    text << l << " lies in the class of " << cls.rep().to_string() << " (order " << ord << ")";
    if (rep)
        text << ", " << l << " = f(" << rep->first << ", " << rep->second << ")";
    text << '\n';
    doc.text = text.str();
    doc.csv = kv_csv(doc.data);
    return doc;
}

Document symbol_command(i64 d, u64 l, int h, int sign)
{
    const QuadraticUnit eps = fundamental_unit(d);
    const SymbolValue sv = unit_symbol(eps, l, h, sign);
    Document doc;
    doc.data = {{"d", d},
                {"prime", l},
                {"order", h},
                {"sign", sign},
                {"subject", sv.subject},
                {"root_used", sv.root_used},
                {"exponent", sv.value.exponent},
                {"value", root_label(sv.value)},
                {"is_power", sv.is_power()},
                {"zeta", canonical_root_of_unity(l, h)}};
    std::ostringstream text;
    text << "((" << sv.subject << ") / " << l << ")_" << h << " = " << root_label(sv.value)
         << "  [sqrt(" << d << ") -> " << sv.root_used << ", zeta = " << canonical_root_of_unity(l, h)
         << " mod " << l << "]\n";
    doc.text = text.str();
    doc.csv = kv_csv(doc.data);
    return doc;
}

Document report_document(const VerificationReport& report)
{
    return {to_json(report), to_text(report), to_csv(report), report.verified() ? 0 : 1};
}

Document table_document(const ExampleTable& table)
{
    return {to_json(table), to_text(table), to_csv(table), table.verified() ? 0 : 1};
}

std::vector<GoldenEntry> read_golden(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot open golden file '" + path + "'");
    return parse_golden(in);
}

std::vector<i64> parse_b_list(const std::string& list)
{
    std::vector<i64> out;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ','))
        if (!trim(item).empty())
            out.push_back(parse_number<i64>("--b", trim(item)));
    if (out.empty())
        throw Error(ErrorKind::InvalidArgument, "--b needs at least one value");
    return out;
}

} // namespace

RunConfig load_config(std::istream& in, RunConfig base)
{
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::InvalidArgument,
                        "config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "sweep_max")
            base.sweep_max = parse_number<u64>(key, value);
        else if (key == "bruteforce_cap")
            base.bruteforce_cap = parse_number<i64>(key, value);
        else if (key == "threads")
            base.threads = parse_threads(value);
        else if (key == "output_format")
            base.output_format = parse_format(value);
        else if (key == "output_path")
            base.output_path = value;
        else
            throw Error(ErrorKind::InvalidArgument, "unknown config key '" + key + "'");
    }
    validate(base);
    return base;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Power residue symbols of quadratic units versus form class groups"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, threads_str, format_str, output_path;
    u64 sweep_max = 0;
    i64 bruteforce_cap = 0;
    auto* opt_config = app.add_option("--config", config_path, "key = value configuration file");
    auto* opt_sweep = app.add_option("--sweep-max", sweep_max, "largest prime in a sweep");
    auto* opt_cap = app.add_option("--bruteforce-cap", bruteforce_cap,
                                   "largest target for representation cross-checks");
    auto* opt_threads = app.add_option("--threads", threads_str, "worker threads or 'auto'");
    auto* opt_format = app.add_option("--format", format_str, "text, json or csv")
                           ->check(CLI::IsMember({"text", "json", "csv"}));
    auto* opt_output = app.add_option("--output", output_path, "write the result to a file");

    std::function<Document(const RunConfig&)> action;

    auto* unit = app.add_subcommand("unit", "fundamental unit of Q(sqrt d)");
    i64 unit_d = 0;
    unit->add_option("d", unit_d)->required();
    unit->callback([&] { action = [&](const RunConfig&) { return unit_command(unit_d); }; });

    auto* classgroup = app.add_subcommand("classgroup", "reduced forms of discriminant D");
    i64 cg_disc = 0;
    classgroup->add_option("D", cg_disc)->required()->allow_extra_args(false);
    classgroup->callback(
        [&] { action = [&](const RunConfig&) { return classgroup_command(cg_disc); }; });

    auto* prime_class = app.add_subcommand("prime-class", "form class of a split prime");
    u64 pc_prime = 0;
    i64 pc_disc = 0;
    prime_class->add_option("l", pc_prime)->required();
    prime_class->add_option("D", pc_disc)->required();
    prime_class->callback(
        [&] { action = [&](const RunConfig&) { return prime_class_command(pc_prime, pc_disc); }; });

    auto* symbol = app.add_subcommand("symbol", "h-th power residue symbol of a fundamental unit");
    i64 sym_d = 0;
    u64 sym_prime = 0;
    int sym_order = 0, sym_sign = 1;
    symbol->add_option("--d", sym_d)->required();
    symbol->add_option("--prime", sym_prime)->required();
    symbol->add_option("--order", sym_order)->required()->check(CLI::IsMember({2, 3, 4}));
    symbol->add_option("--sign", sym_sign)->check(CLI::IsMember({-1, 1}));
    symbol->callback([&] {
        action = [&](const RunConfig&) { return symbol_command(sym_d, sym_prime, sym_order, sym_sign); };
    });

    auto sweep_options = [](const RunConfig& c) {
        SweepOptions o;
        o.range_max = c.sweep_max;
        o.bruteforce_cap = c.bruteforce_cap;
        o.threads = c.threads;
        return o;
    };

    auto* verify = app.add_subcommand("verify", "sweep a proposition over primes");
    verify->require_subcommand(1);
    u64 v_p = 0, v_q = 0;
    i64 v_m = 0;
    std::string v_golden;
    bool v_invert = false;

    auto* dirichlet = verify->add_subcommand("dirichlet", "quadratic character of eps_p");
    dirichlet->add_option("--p", v_p)->required();
    dirichlet->callback([&] {
        action = [&](const RunConfig& c) { return report_document(verify_dirichlet(v_p, sweep_options(c))); };
    });

    auto* scholz = verify->add_subcommand("scholz", "Scholz's identity for eps_p");
    scholz->add_option("--p", v_p)->required();
    scholz->callback([&] {
        action = [&](const RunConfig& c) { return report_document(verify_scholz(v_p, sweep_options(c))); };
    });

    auto* kronecker = verify->add_subcommand("kronecker", "cubic character of eps_m");
    kronecker->add_option("--m", v_m)->required()->check(CLI::IsMember({69, 93}));
    kronecker->callback([&] {
        action = [&](const RunConfig& c) { return report_document(verify_kronecker(v_m, sweep_options(c))); };
    });

    auto* quartic = verify->add_subcommand("quartic", "quartic character of s*eps_pq");
    quartic->add_option("--p", v_p)->required();
    quartic->add_option("--q", v_q)->required();
    quartic->add_option("--golden", v_golden, "expected symbol values, '<prime> <+1|-1>' lines");
    quartic->add_flag("--invert-sign", v_invert, "negative control: use -s");
    quartic->callback([&] {
        action = [&](const RunConfig& c) {
            QuarticOptions q;
            q.invert_sign = v_invert;
            if (!v_golden.empty())
                q.golden = read_golden(v_golden);
            return report_document(verify_quartic(v_p, v_q, sweep_options(c), q));
        };
    });

    auto* table = app.add_subcommand("table", "reproduce the worked tables");
    table->require_subcommand(1);
    std::string t_family, t_b, t_golden;
    auto* table_class = table->add_subcommand("class", "class numbers of Q(sqrt -m)");
    table_class->add_option("--family", t_family)->required()->check(CLI::IsMember({"minus4", "plus4"}));
    table_class->add_option("--b", t_b, "comma-separated odd b values")->required();
    table_class->callback([&] {
        action = [&](const RunConfig&) {
            const ClassFamily family = t_family == "minus4" ? ClassFamily::Minus4 : ClassFamily::Plus4;
            const auto rows = class_table(family, parse_b_list(t_b));
            return Document{to_json(rows, family), to_text(rows, family), to_csv(rows), 0};
        };
    });
    for (auto [name, which] : {std::pair{"example1", WorkedExample::Example1},
                               std::pair{"example2", WorkedExample::Example2}}) {
        auto* sub = table->add_subcommand(name, std::string("recompute ") + name);
        sub->add_option("--golden", t_golden, "expected symbol values");
        sub->callback([&, which] {
            action = [&, which](const RunConfig&) {
                std::vector<GoldenEntry> golden;
                if (!t_golden.empty())
                    golden = read_golden(t_golden);
                return table_document(example_table_for(which, golden));
            };
        });
    }

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        RunConfig config;
        if (opt_config->count() > 0) {
            std::ifstream in(config_path);
            if (!in)
                throw Error(ErrorKind::InvalidArgument, "cannot open config '" + config_path + "'");
            config = load_config(in, config);
        }
        if (opt_sweep->count() > 0)
            config.sweep_max = sweep_max;
        if (opt_cap->count() > 0)
            config.bruteforce_cap = bruteforce_cap;
        if (opt_threads->count() > 0)
            config.threads = parse_threads(threads_str);
        if (opt_format->count() > 0)
            config.output_format = parse_format(format_str);
        if (opt_output->count() > 0)
            config.output_path = output_path;
        validate(config);

        const Document doc = action(config);
        std::string rendered;
        switch (config.output_format) {
        case OutputFormat::Text: rendered = doc.text; break;
        case OutputFormat::Json: rendered = doc.data.dump(2) + "\n"; break;
        case OutputFormat::Csv: rendered = doc.csv; break;
        }
        if (config.output_path) {
            std::ofstream file(*config.output_path);
            if (!file)
                throw Error(ErrorKind::InvalidArgument,
                            "cannot write '" + *config.output_path + "'");
            file << rendered;
            out << "wrote " << *config.output_path << '\n';
        } else {
            out << rendered;
        }
        return doc.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace qrl
