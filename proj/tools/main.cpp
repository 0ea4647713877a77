// zagreb: degree-based index computation, lower-bound evaluation, and
// exhaustive small-graph verification.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zagreb/bounds.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/rational.hpp"
#include "zagreb/verify.hpp"

using nlohmann::ordered_json;
using namespace zagreb;

namespace {

enum ExitCode {
    kOk = 0,
    kPropertyFailure = 1,
    kInputError = 2,
    kDomainError = 3,
    kCapacityError = 4,
};

std::string approx6(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", to_double(r));
    return buf;
}

std::string approx6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input: " + path);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "graph6") {
        // first non-empty line
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return parse_graph6(line);
        throw ParseError("empty graph6 input");
    }
    return parse_edge_list(text);
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw ParseError("cannot open output: " + output_path);
    out << text;
    if (!out) throw ParseError("write failed: " + output_path);
}

// A report is a list of rows; each row is an ordered list of (key, value).
// That one shape renders to json, csv and aligned text identically.
using Row = std::vector<std::pair<std::string, std::string>>;

std::string render_rows(const std::vector<Row>& rows, const std::string& fmt) {
    if (rows.empty()) return "";
    if (fmt == "json") {
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json o;
            for (const auto& [k, v] : r) o[k] = v;
            arr.push_back(o);
        }
        return arr.dump(2) + "\n";
    }
    if (fmt == "csv") {
        std::ostringstream out;
        for (std::size_t i = 0; i < rows[0].size(); ++i)
            out << (i ? "," : "") << rows[0][i].first;
        out << "\n";
        for (const Row& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                std::string v = r[i].second;
                bool quote = v.find(',') != std::string::npos ||
                             v.find('"') != std::string::npos;
                if (quote) {
                    std::string q = "\"";
                    for (char c : v) q += c == '"' ? std::string("\"\"")
                                                   : std::string(1, c);
                    q += '"';
                    v = q;
                }
                out << (i ? "," : "") << v;
            }
            out << "\n";
        }
        return out.str();
    }
    // aligned text
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const Row& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max({width[i], r[i].first.size(), r[i].second.size()});
    std::ostringstream out;
    for (std::size_t i = 0; i < rows[0].size(); ++i) {
        out << rows[0][i].first
            << std::string(width[i] - rows[0][i].first.size() + 2, ' ');
    }
    out << "\n";
    for (const Row& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            out << r[i].second << std::string(width[i] - r[i].second.size() + 2, ' ');
        out << "\n";
    }
    return out.str();
}

std::string format_alpha(double a) {
    if (a == static_cast<long>(a)) return std::to_string(static_cast<long>(a));
    return format_double(a);
}

// --- compute ------------------------------------------------------------

int cmd_compute(const std::string& input, const std::string& format,
                const std::vector<double>& alphas, const std::string& out_fmt,
                const std::string& output) {
    Graph g = load_graph(input, format);
    DegreeSequence ds(g);
    std::vector<Row> rows;
    auto add = [&](const std::string& name, const std::string& exact,
                   const std::string& approx) {
        rows.push_back({{"quantity", name}, {"value", exact}, {"approx", approx}});
    };
    add("n", std::to_string(g.order()), std::to_string(g.order()));
    add("m", std::to_string(g.size()), std::to_string(g.size()));
    {
        std::string seq;
        for (int d : ds.values()) seq += (seq.empty() ? "" : " ") + std::to_string(d);
        add("degree_sequence", seq, seq);
    }
    auto add_rat = [&](const std::string& name, const Rational& r) {
        add(name, to_fraction_string(r), approx6(r));
    };
    for (double a : alphas) {
        std::string name = "Z_" + format_alpha(a);
        if (a == static_cast<long>(a)) {
            add_rat(name, zagreb_exact(ds, static_cast<long>(a)));
        } else {
            double v = zagreb_real(ds, a);
            add(name, format_double(v), approx6(v));
        }
    }
    add_rat("M1", zagreb_exact(ds, 2));
    add_rat("M2", second_zagreb(g));
    add_rat("F", zagreb_exact(ds, 3));
    add_rat("ID", zagreb_exact(ds, -1));
    add_rat("mM1", zagreb_exact(ds, -2));
    add_rat("M1_coindex", zagreb_coindex_exact(g, 2));
    add_rat("M2_coindex", second_zagreb_coindex(g));
    add_rat("F_coindex", zagreb_coindex_exact(g, 3));
    SpectralResult sr = spectral_radius(g);
    add("lambda1", format_double(sr.lambda1), approx6(sr.lambda1));
    emit(render_rows(rows, out_fmt), output);
    return kOk;
}

// --- bounds -------------------------------------------------------------

Row bound_row(const std::string& id, const BoundSpec& spec, const Rational& val,
              const Rational& truth) {
    std::string removed;
    for (std::size_t i = 0; i < spec.removed.size(); ++i)
        removed += (i ? "," : "") + std::to_string(spec.removed[i]);
    Rational slack = truth - val;
    return {{"bound", id},
            {"alpha", std::to_string(spec.alpha)},
            {"removed", removed},
            {"pair", std::to_string(spec.j) + "," + std::to_string(spec.k)},
            {"value", to_fraction_string(val)},
            {"value_approx", approx6(val)},
            {"index", to_fraction_string(truth)},
            {"slack", to_fraction_string(slack)},
            {"equality", slack == 0 ? "true" : "false"}};
}

int cmd_bounds(const std::string& input, const std::string& format, double alpha_d,
               const std::string& selection, const std::string& out_fmt,
               const std::string& output) {
    Graph g = load_graph(input, format);
    DegreeSequence ds(g);
    int n = ds.n();
    if (alpha_d != static_cast<long>(alpha_d))
        throw ParseError("--alpha must be an integer for bound evaluation");
    long alpha = static_cast<long>(alpha_d);
    std::vector<Row> rows;

    auto all = [&](const std::function<void(const BoundSpec&)>& fn) {
        std::vector<std::vector<int>> removals = {{}};
        for (int l = 1; l <= n; ++l) removals.push_back({l});
        for (int l = 1; l <= n; ++l)
            for (int m2 = l + 1; m2 <= n; ++m2) removals.push_back({l, m2});
        for (const auto& rem : removals)
            for (int j = 1; j <= n; ++j) {
                if (std::count(rem.begin(), rem.end(), j)) continue;
                for (int k = j + 1; k <= n; ++k) {
                    if (std::count(rem.begin(), rem.end(), k)) continue;
                    BoundSpec spec{alpha, rem, j, k};
                    if (spec_admissible(ds, spec)) fn(spec);
                }
            }
    };

    if (selection == "all-pairs") {
        Rational truth = zagreb_exact(ds, 2 * alpha);
        all([&](const BoundSpec& spec) {
            rows.push_back(bound_row("pair", spec, zagreb_lower_bound(ds, spec),
                                     truth));
        });
    } else if (selection == "best") {
        Rational truth = zagreb_exact(ds, 2 * alpha);
        std::optional<BoundSpec> best;
        Rational best_val;
        all([&](const BoundSpec& spec) {
            Rational v = zagreb_lower_bound(ds, spec);
            // ties broken by the lexicographically smallest position tuple,
            // which is the visit order here
            if (!best || v > best_val) {
                best = spec;
                best_val = v;
            }
        });
        if (!best) throw DomainError("no admissible bound for this graph");
        rows.push_back(bound_row("best", *best, best_val, truth));
    } else {
        std::istringstream in(selection);
        std::string id;
        while (std::getline(in, id, ',')) {
            const auto& cors = corollary_ids();
            if (std::count(cors.begin(), cors.end(), id)) {
                BoundSpec spec = named_spec(id, n);
                validate_spec(ds, spec);
                rows.push_back(bound_row(id, spec, zagreb_lower_bound(ds, spec),
                                         zagreb_exact(ds, 2 * spec.alpha)));
            } else {
                ExactVal v = baseline_bound(ds, id, alpha);
                Rational truth = zagreb_exact(ds, bounded_index_alpha(id, alpha));
                Rational slack_num = truth - v.a;  // exact only when rational
                rows.push_back(
                    {{"bound", id},
                     {"alpha", std::to_string(alpha)},
                     {"removed", ""},
                     {"pair", ""},
                     {"value", to_string(v)},
                     {"value_approx", approx6(v.approx())},
                     {"index", to_fraction_string(truth)},
                     {"slack", v.is_rational() ? to_fraction_string(slack_num)
                                               : approx6(to_double(truth) -
                                                         v.approx())},
                     {"equality", v.eq(truth) ? "true" : "false"}});
            }
        }
    }
    emit(render_rows(rows, out_fmt), output);
    return kOk;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const CorpusSpec& corpus, const std::string& properties,
               const std::string& out_fmt, const std::string& output) {
    validate_corpus(corpus);
    std::vector<std::string> names;
    {
        std::istringstream in(properties);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) names.push_back(tok);
    }
    if (names.empty())
        names = {"P1", "P2", "P3", "P4", "P5", "P6", "P7"};

    std::vector<VerificationReport> reports;
    for (const std::string& name : names) {
        if (name == "spectral")
            reports.push_back(check_spectral(corpus));
        else
            reports.push_back(run_property(parse_property(name), corpus));
    }
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass();

    std::string text;
    if (out_fmt == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports)
            arr.push_back(ordered_json::parse(report_to_json(r)));
        text = arr.dump(2) + "\n";
    } else {
        for (const auto& r : reports) text += report_to_text(r);
    }
    emit(text, output);
    return all_pass ? kOk : kPropertyFailure;
}

// --- table1 ---------------------------------------------------------------

int cmd_table1(const std::string& out_fmt, const std::string& output) {
    VerificationReport rep = reproduce_table1();
    emit(out_fmt == "json" ? report_to_json(rep) + "\n" : report_to_text(rep),
         output);
    return rep.pass() ? kOk : kPropertyFailure;
}

// --- enumerate --------------------------------------------------------------

int cmd_enumerate(const CorpusSpec& corpus, const std::string& output) {
    validate_corpus(corpus);
    std::ostringstream out;
    for_each_graph(corpus, [&](const Graph& g) { out << encode_graph6(g) << "\n"; });
    emit(out.str(), output);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-based topological indices: computation, lower bounds, "
                 "and exhaustive small-graph verification"};
    app.require_subcommand(1);

    std::string input = "-", format = "edgelist";
    std::string out_fmt = "text", output;
    auto add_io = [&](CLI::App* sub, bool with_input) {
        if (with_input) {
            sub->add_option("--input", input, "input path ('-' for stdin)");
            sub->add_option("--format", format)
                ->check(CLI::IsMember({"edgelist", "graph6"}));
        }
        sub->add_option("--out", out_fmt)
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output", output, "write to file instead of stdout");
    };

    CorpusSpec corpus;
    auto add_corpus = [&](CLI::App* sub) {
        sub->add_option("--nmin", corpus.n_min);
        sub->add_option("--nmax", corpus.n_max);
        sub->add_flag("--connected,!--no-connected", corpus.connected_only);
        sub->add_flag("--dedup,!--no-dedup", corpus.dedup_isomorphic);
        sub->add_flag("--min-degree,!--no-min-degree",
                      corpus.min_degree_positive,
                      "require minimum degree >= 1");
    };

    auto* compute = app.add_subcommand("compute", "indices of one graph");
    std::vector<double> alphas;
    compute->add_option("--alpha", alphas, "additional Z_alpha exponents");
    add_io(compute, true);

    auto* bounds = app.add_subcommand("bounds", "lower bounds on one graph");
    double bounds_alpha = 1.0;
    std::string selection;
    {
        std::string default_ids;
        for (const std::string& id : corollary_ids())
            default_ids += (default_ids.empty() ? "" : ",") + id;
        selection = default_ids;
    }
    bounds->add_option("--alpha", bounds_alpha);
    bounds->add_option("--bounds", selection,
                       "comma-separated ids, 'all-pairs', or 'best'");
    add_io(bounds, true);

    auto* verify = app.add_subcommand("verify", "run verification properties");
    std::string properties;
    verify->add_option("--properties", properties,
                       "comma-separated: P1..P7, spectral (default: all P)");
    add_corpus(verify);
    add_io(verify, false);

    auto* table1 = app.add_subcommand("table1", "reproduce the benchmark table");
    add_io(table1, false);

    auto* enumerate = app.add_subcommand("enumerate", "emit corpus as graph6");
    add_corpus(enumerate);
    enumerate->add_option("--output", output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return cmd_compute(input, format, alphas, out_fmt, output);
        if (bounds->parsed())
            return cmd_bounds(input, format, bounds_alpha, selection, out_fmt,
                              output);
        if (verify->parsed())
            return cmd_verify(corpus, properties, out_fmt, output);
        if (table1->parsed()) return cmd_table1(out_fmt, output);
        if (enumerate->parsed()) return cmd_enumerate(corpus, output);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
