#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>

#include <nlohmann/json.hpp>

#include "nearind/closed_forms.hpp"
#include "nearind/extremal.hpp"
#include "nearind/family.hpp"
#include "nearind/good_graphs.hpp"
#include "nearind/graph6.hpp"
#include "nearind/sigma.hpp"

namespace nearind::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    // graph input
    std::vector<std::string> graph6;
    std::string family;
    std::string file;
    // computation
    int k = 1;
    std::optional<int> n;
    std::optional<int> max_n;
    int path_max = 40;
    std::string filter = "all";
    std::string format = "table";
    int jobs = 1;
    std::string suite;
};

struct NamedGraph {
    std::string label;
    Graph graph;
};

std::vector<NamedGraph> read_graph6_lines(std::istream& in, const std::string& source) {
    std::vector<NamedGraph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            Graph g = parse_graph6(line);
            out.push_back({emit_graph6(g), std::move(g)});
        } catch (const Graph6Error& e) {
            throw UsageError(source + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<NamedGraph> collect_inputs(const Options& opt, std::istream& in) {
    const int sources = (opt.graph6.empty() ? 0 : 1) + (opt.family.empty() ? 0 : 1) + (opt.file.empty() ? 0 : 1);
    if (sources > 1) throw UsageError("give exactly one of --graph6, --family, --file");
    std::vector<NamedGraph> out;
    if (!opt.graph6.empty()) {
        for (const auto& text : opt.graph6) {
            Graph g = parse_graph6(text);
            out.push_back({emit_graph6(g), std::move(g)});
        }
    } else if (!opt.family.empty()) {
        const FamilySpec spec = parse_family(opt.family);
        out.push_back({to_string(spec), construct(spec)});
    } else if (!opt.file.empty()) {
        std::ifstream f(opt.file);
        if (!f) throw UsageError("cannot open " + opt.file);
        out = read_graph6_lines(f, opt.file);
    } else {
        out = read_graph6_lines(in, "<stdin>");
    }
    if (out.empty()) throw UsageError("no input graphs");
    return out;
}

GraphFilter parse_filter(const std::string& text) {
    if (text == "all") return GraphFilter::all();
    if (text == "connected") return GraphFilter::connected();
    if (text.rfind("size:", 0) == 0) {
        try {
            return GraphFilter::with_size(std::stoi(text.substr(5)));
        } catch (const std::exception&) {
        }
    }
    throw UsageError("filter must be all, connected or size:<m>");
}

Count sigma_k(const Graph& g, int k, std::optional<int> max_n) {
    if (k == 0) return sigma0(g);
    if (k == 1) return sigma1(g);
    return sigma_k_brute(g, k, max_n.value_or(kBruteForceMaxOrder));
}

int cmd_compute(const Options& opt, std::istream& in, std::ostream& out) {
    if (opt.k < 0) throw UsageError("--k must be non-negative");
    const auto inputs = collect_inputs(opt, in);
    std::vector<Count> values;
    for (const auto& item : inputs) values.push_back(sigma_k(item.graph, opt.k, opt.max_n));

    if (opt.format == "json") {
        nlohmann::json j{{"k", opt.k}, {"results", nlohmann::json::array()}};
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            j["results"].push_back({{"input", inputs[i].label},
                                    {"graph6", emit_graph6(inputs[i].graph)},
                                    {"n", inputs[i].graph.order()},
                                    {"m", inputs[i].graph.size()},
                                    {"sigma", values[i].to_string()}});
        }
        out << j.dump(2) << '\n';
    } else if (opt.format == "tsv") {
        out << "graph6\tn\tm\tk\tsigma\n";
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            out << emit_graph6(inputs[i].graph) << '\t' << inputs[i].graph.order() << '\t' << inputs[i].graph.size()
                << '\t' << opt.k << '\t' << values[i] << '\n';
        }
    } else if (inputs.size() == 1) {
        out << values.front() << '\n';
    } else {
        for (std::size_t i = 0; i < inputs.size(); ++i) out << inputs[i].label << '\t' << values[i] << '\n';
    }
    return kOk;
}

}  // namespace

int emit_report(const Report& report, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << nlohmann::json(report).dump(2) << '\n';
        return report.passed() ? kOk : kViolation;
    }
    for (const auto& c : report.checks) {
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  " << c.detail << '\n';
        for (const auto& ce : c.counterexamples) out << "      counterexample: " << ce << '\n';
        if (c.data.contains("maximizers")) {
            out << "      maximizers:";
            for (const auto& g6 : c.data["maximizers"]) out << ' ' << g6.get<std::string>();
            out << '\n';
        }
    }
    return report.passed() ? kOk : kViolation;
}

namespace {

int cmd_verify(const Options& opt, std::ostream& out) {
    Report report;
    if (opt.suite == "closed-forms") {
        report.checks.push_back(verify_closed_forms(opt.max_n.value_or(12), opt.path_max));
    } else if (opt.suite == "min-bound") {
        report.checks.push_back(verify_min_bound(opt.max_n.value_or(7), opt.jobs));
    } else if (opt.suite == "max-bound") {
        const int lo = opt.n.value_or(kMaxBoundMinOrder);
        const int hi = opt.n.value_or(opt.max_n.value_or(kMaxBoundMaxOrder));
        for (int n = lo; n <= hi; ++n) report.checks.push_back(verify_max_bound(n, opt.jobs));
    } else if (opt.suite == "h-family") {
        const int max_order = opt.max_n.value_or(7);
        const auto result = verify_good_family_characterization(max_order, opt.jobs);
        CheckResult c{"h-family", result.equal, "", {}, {}};
        for (const auto& code : result.generated_only) c.counterexamples.push_back(code.graph6());
        for (const auto& code : result.good_only) c.counterexamples.push_back(code.graph6());
        c.detail = std::to_string(result.good_count) + " good graphs of order <= " + std::to_string(max_order);
        c.data = {{"max_order", max_order}, {"good_graphs", result.good_count}};
        report.checks.push_back(std::move(c));
    } else if (opt.suite == "recursion") {
        report.checks.push_back(verify_recursion(opt.max_n.value_or(7), opt.jobs));
    } else {
        throw UsageError("unknown suite '" + opt.suite + "'");
    }
    return emit_report(report, opt.format, out);
}

int cmd_table(const Options& opt, std::ostream& out) {
    if (!opt.n || *opt.n < 0) throw UsageError("table needs --n >= 0");
    const auto dist = sigma1_distribution(*opt.n, parse_filter(opt.filter), opt.jobs);
    const auto rows = dist.by_value();
    if (opt.format == "json") {
        out << distribution_json(dist, rows).dump(2) << '\n';
    } else if (opt.format == "tsv") {
        write_tsv(out, rows);
    } else {
        out << std::left << std::setw(14) << "graph6" << std::setw(6) << "m" << "sigma1" << '\n';
        for (const auto& r : rows) out << std::setw(14) << r.code.graph6() << std::setw(6) << r.size << r.sigma1 << '\n';
        out << rows.size() << " graph(s), max sigma1 = " << dist.max_value() << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Count and verify k-nearly independent vertex subsets"};
    app.name(args.empty() ? "nearind" : args.front());
    app.require_subcommand(1);

    const std::vector<std::string> formats{"table", "json", "tsv"};

    auto* compute = app.add_subcommand("compute", "Print sigma_k for each input graph");
    compute->add_option("--graph6", opt.graph6, "graph6 string (repeatable)");
    compute->add_option("--family", opt.family, "family spec name:param[:param], e.g. broom:7:3");
    compute->add_option("--file", opt.file, "file of newline-separated graph6 strings");
    compute->add_option("--k", opt.k, "number of induced edges")->capture_default_str();
    compute->add_option("--max-n", opt.max_n, "order cap for subset enumeration (k >= 2)");
    compute->add_option("--format", opt.format)->check(CLI::IsMember(formats))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", opt.suite, "closed-forms | min-bound | max-bound | h-family | recursion")
        ->required()
        ->check(CLI::IsMember({"closed-forms", "min-bound", "max-bound", "h-family", "recursion"}));
    verify->add_option("--n", opt.n, "single order (max-bound)");
    verify->add_option("--max-n", opt.max_n, "largest order to check");
    verify->add_option("--path-max", opt.path_max, "largest path for the path identity")->capture_default_str();
    verify->add_option("--format", opt.format)->check(CLI::IsMember(formats))->capture_default_str();
    verify->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto* table = app.add_subcommand("table", "sigma_1 over all graphs of order n");
    table->add_option("--n", opt.n, "order")->required();
    table->add_option("--filter", opt.filter, "all | connected | size:<m>")->capture_default_str();
    table->add_option("--format", opt.format)->check(CLI::IsMember(formats))->capture_default_str();
    table->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(opt, in, out);
        if (verify->parsed()) return cmd_verify(opt, out);
        if (table->parsed()) return cmd_table(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {  // GraphError, Graph6Error
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CountOverflow& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace nearind::cli
