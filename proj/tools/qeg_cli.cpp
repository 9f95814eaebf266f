// Command-line interface: compute single values, emit tables over parameter
// grids, and run the verification suites. Machine-readable output (JSON or
// CSV) is deterministic and byte-stable for fixed inputs.

#include <qeg/engine.hpp>
#include <qeg/powerseries.hpp>
#include <qeg/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using qeg::ArgSpec;
using qeg::Rational;
using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kFamilies = {
    "cos_genocchi",   "euler_hq_poly", "euler_hq_special", "euler_q",
    "euler_q_poly",   "genocchi_hq_poly", "genocchi_q_poly"};

bool family_has_h(const std::string& f) {
    return f == "euler_hq_poly" || f == "genocchi_hq_poly" || f == "cos_genocchi";
}
bool family_has_w(const std::string& f) { return f != "cos_genocchi"; }
bool family_has_x(const std::string& f) { return f != "euler_q" && f != "cos_genocchi"; }

struct Record {
    std::string family;
    long long n = 0;
    long long r = 1;
    std::optional<long long> h;
    std::optional<Rational> w;
    Rational q;
    std::optional<ArgSpec> x;  // absent for families without an argument
    Rational value;
};

Rational evaluate(const Record& rec) {
    const std::string& f = rec.family;
    if (f == "euler_q") return qeg::euler_q(rec.n, rec.r, *rec.w, rec.q);
    if (f == "euler_q_poly") return qeg::euler_q_poly(rec.n, rec.r, *rec.w, *rec.x);
    if (f == "genocchi_q_poly") return qeg::genocchi_q_poly(rec.n, rec.r, *rec.w, *rec.x);
    if (f == "euler_hq_poly") return qeg::euler_hq_poly(rec.n, rec.r, *rec.h, *rec.w, *rec.x);
    if (f == "euler_hq_special") return qeg::euler_hq_special(rec.n, rec.r, *rec.w, *rec.x);
    if (f == "genocchi_hq_poly")
        return qeg::genocchi_hq_poly(rec.n, rec.r, *rec.h, *rec.w, *rec.x);
    if (f == "cos_genocchi")
        return qeg::cos_generating_coeffs(*rec.h, rec.r, rec.q,
                                          rec.n)[static_cast<size_t>(rec.n)];
    throw CLI::ValidationError("--family", "unknown family '" + f + "'");
}

std::string emit_json(const std::vector<Record>& records, std::optional<unsigned> decimal) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) {
        ordered_json o;
        o["family"] = rec.family;
        o["n"] = rec.n;
        o["r"] = rec.r;
        if (rec.h) o["h"] = *rec.h;
        if (rec.w) o["w"] = rec.w->str();
        o["q"] = rec.q.str();
        if (rec.x) {
            o["x"] = rec.x->x().str();
            if (rec.x->d != 1) {
                o["u"] = rec.x->u.str();
                o["d"] = rec.x->d;
                o["s"] = rec.x->s;
            }
        }
        o["value"] = rec.value.str();
        if (decimal) o["decimal_approx"] = rec.value.decimal_str(*decimal);
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string emit_csv(const std::vector<Record>& records, std::optional<unsigned> decimal) {
    std::ostringstream out;
    out << "family,n,r,h,w,q,x,u,d,s,value";
    if (decimal) out << ",decimal_approx";
    out << "\n";
    for (const auto& rec : records) {
        out << rec.family << ',' << rec.n << ',' << rec.r << ',';
        if (rec.h) out << *rec.h;
        out << ',';
        if (rec.w) out << rec.w->str();
        out << ',' << rec.q.str() << ',';
        if (rec.x) out << rec.x->x().str();
        out << ',';
        if (rec.x && rec.x->d != 1)
            out << rec.x->u.str() << ',' << rec.x->d << ',' << rec.x->s;
        else
            out << ",,";
        out << ',' << rec.value.str();
        if (decimal) out << ',' << rec.value.decimal_str(*decimal);
        out << "\n";
    }
    return out.str();
}

// 0 on byte-identical golden, 1 on mismatch.
int check_golden(const std::string& produced, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "qeg: cannot open golden file '" << path << "'\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() != produced) {
        std::cerr << "qeg: output differs from golden file '" << path << "'\n";
        return 1;
    }
    return 0;
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items,
                                          const std::string& flag) {
    std::vector<Rational> out;
    for (const auto& s : items) {
        try {
            out.push_back(Rational::parse(s));
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError(flag, "'" + s + "' is not a rational a/b");
        }
    }
    return out;
}

struct ComputeOptions {
    std::string family;
    long long n = 0;
    long long r = 1;
    std::optional<long long> h;
    std::string w_text, q_text, u_text;
    std::optional<long long> d, s;
    long long x = 0;
    std::string format = "json";
    std::optional<unsigned> decimal;
    std::string golden;
};

// Resolve the argument encoding shared by compute and table: either --q with
// an integer --x, or an explicit root --u --d --s.
ArgSpec resolve_argspec(const ComputeOptions& opt) {
    if (!opt.u_text.empty()) {
        if (!opt.d || !opt.s)
            throw CLI::ValidationError("--u", "fractional arguments need --u, --d and --s");
        return ArgSpec(*opt.s, *opt.d, Rational::parse(opt.u_text));
    }
    if (opt.q_text.empty())
        throw CLI::ValidationError("--q", "either --q or --u/--d/--s is required");
    return ArgSpec::integer(opt.x, Rational::parse(opt.q_text));
}

int run_records(std::vector<Record>& records, const std::string& format,
                std::optional<unsigned> decimal, const std::string& golden) {
    for (auto& rec : records) rec.value = evaluate(rec);  // fail before emitting anything
    const std::string text =
        format == "csv" ? emit_csv(records, decimal) : emit_json(records, decimal);
    std::cout << text;
    if (!golden.empty()) return check_golden(text, golden);
    return 0;
}

int cmd_compute(const ComputeOptions& opt) {
    Record rec;
    rec.family = opt.family;
    rec.n = opt.n;
    rec.r = opt.r;
    if (family_has_h(opt.family)) {
        if (!opt.h) throw CLI::ValidationError("--h", "family '" + opt.family + "' needs --h");
        rec.h = opt.h;
    }
    if (family_has_w(opt.family)) {
        if (opt.w_text.empty())
            throw CLI::ValidationError("--w", "family '" + opt.family + "' needs --w");
        rec.w = Rational::parse(opt.w_text);
    }
    if (family_has_x(opt.family)) {
        rec.x = resolve_argspec(opt);
        rec.q = rec.x->q();
    } else {
        if (!opt.u_text.empty())
            throw CLI::ValidationError("--u", "family '" + opt.family + "' takes no argument x");
        if (opt.q_text.empty()) throw CLI::ValidationError("--q", "--q is required");
        if (opt.x != 0)
            throw CLI::ValidationError("--x", "family '" + opt.family + "' takes no argument x");
        rec.q = Rational::parse(opt.q_text);
    }
    std::vector<Record> records = {rec};
    return run_records(records, opt.format, opt.decimal, opt.golden);
}

struct TableOptions {
    std::vector<std::string> families;
    long long n_max = 0;
    std::vector<long long> rs = {1};
    std::vector<long long> hs;
    std::vector<std::string> w_texts;
    std::vector<std::string> q_texts;
    std::vector<long long> xs = {0};
    std::string format = "json";
    std::optional<unsigned> decimal;
    std::string golden;
};

int cmd_table(const TableOptions& opt) {
    std::vector<Record> records;
    for (const auto& family : opt.families)
        if (std::find(kFamilies.begin(), kFamilies.end(), family) == kFamilies.end())
            throw CLI::ValidationError("--family", "unknown family '" + family + "'");

    const std::vector<Rational> ws = parse_rational_list(opt.w_texts, "--w");
    const std::vector<Rational> qs = parse_rational_list(opt.q_texts, "--q");
    if (qs.empty()) throw CLI::ValidationError("--q", "at least one q is required");

    for (const auto& family : opt.families) {
        if (family_has_h(family) && opt.hs.empty())
            throw CLI::ValidationError("--h", "family '" + family + "' needs --h");
        if (family_has_w(family) && ws.empty())
            throw CLI::ValidationError("--w", "family '" + family + "' needs --w");
        const std::vector<long long> hs = family_has_h(family) ? opt.hs
                                                               : std::vector<long long>{0};
        const std::vector<Rational> wlist =
            family_has_w(family) ? ws : std::vector<Rational>{Rational(0)};
        const std::vector<long long> xlist =
            family_has_x(family) ? opt.xs : std::vector<long long>{0};
        for (long long n = 0; n <= opt.n_max; ++n)
            for (long long r : opt.rs)
                for (long long h : hs)
                    for (const Rational& w : wlist)
                        for (const Rational& q : qs)
                            for (long long x : xlist) {
                                Record rec;
                                rec.family = family;
                                rec.n = n;
                                rec.r = r;
                                if (family_has_h(family)) rec.h = h;
                                if (family_has_w(family)) rec.w = w;
                                rec.q = q;
                                if (family_has_x(family)) rec.x = ArgSpec::integer(x, q);
                                records.push_back(std::move(rec));
                            }
    }
    std::stable_sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
        const auto key = [](const Record& rec) {
            return std::tuple(rec.family, rec.n, rec.r,
                              rec.h.value_or(std::numeric_limits<long long>::min()));
        };
        return key(a) < key(b);
    });
    return run_records(records, opt.format, opt.decimal, opt.golden);
}

int cmd_verify(const std::string& suite, const std::string& grid_name) {
    const qeg::verify::Grid grid =
        grid_name == "full" ? qeg::verify::Grid::full : qeg::verify::Grid::small;

    std::vector<qeg::verify::SuiteResult> results;
    if (suite == "all") {
        results = qeg::verify::run_all(grid);
    } else if (suite == "distribution") {
        results = {qeg::verify::run_distribution(grid)};
    } else if (suite == "special") {
        results = {qeg::verify::run_special(grid)};
    } else if (suite == "cos_formula") {
        results = {qeg::verify::run_cos_formula(grid)};
    } else if (suite == "witt") {
        results = {qeg::verify::run_witt(grid)};
    } else if (suite == "series") {
        results = {qeg::verify::run_series(grid)};
    } else {
        throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");
    }

    std::ostringstream out;
    long long failures = 0;
    for (const auto& s : results) {
        for (const auto& c : s.cases) {
            if (c.passed)
                out << "PASS " << s.suite << " " << c.name << "\n";
            else if (c.flagged)
                out << "FLAGGED " << s.suite << " " << c.name << ": " << c.detail << "\n";
            else
                out << "FAIL " << s.suite << " " << c.name << ": " << c.detail << "\n";
        }
        for (const auto& note : s.notes) out << "note: " << note << "\n";
        failures += s.failures();
        out << "suite " << s.suite << ": " << (s.cases.size() - static_cast<size_t>(s.failures()))
            << "/" << s.cases.size() << " cases passed\n";
    }
    std::cout << out.str();
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-extensions of w-Euler and w-Genocchi numbers and polynomials"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print help and exit");  // frees -h/--h for the weight exponent

    ComputeOptions copt;
    TableOptions topt;
    std::string suite = "all";
    std::string grid = "small";

    auto* compute = app.add_subcommand("compute", "Compute a single value");
    compute->set_help_flag("--help", "Print help and exit");
    compute->add_option("--family", copt.family, "Value family")
        ->required()
        ->check(CLI::IsMember(kFamilies));
    compute->add_option("--n", copt.n, "Index n (the Genocchi index m for those families)")
        ->required();
    compute->add_option("--r", copt.r, "Order r")->required();
    auto* h_opt = compute->add_option("--h", copt.h, "Weight exponent h");
    (void)h_opt;
    compute->add_option("--w", copt.w_text, "Twist w as a/b");
    auto* q_opt = compute->add_option("--q", copt.q_text, "Base q as a/b");
    auto* u_opt = compute->add_option("--u", copt.u_text, "Declared root u = q^{1/d} as a/b");
    compute->add_option("--d", copt.d, "Denominator d of the argument x = s/d");
    compute->add_option("--s", copt.s, "Numerator s of the argument x = s/d");
    auto* x_opt = compute->add_option("--x", copt.x, "Integer argument x (default 0)");
    q_opt->excludes(u_opt);
    x_opt->excludes(u_opt);
    compute->add_option("--format", copt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    compute->add_option("--decimal", copt.decimal,
                        "Add an approximate decimal column with this many digits");
    compute->add_option("--golden", copt.golden, "Compare output bytes against this file");

    auto* table = app.add_subcommand("table", "Emit a value table over a parameter grid");
    table->set_help_flag("--help", "Print help and exit");
    table->add_option("--family", topt.families, "Families (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    table->add_option("--n-max", topt.n_max, "Rows n = 0..n-max")->required();
    table->add_option("--r", topt.rs, "Orders r")->delimiter(',');
    table->add_option("--h", topt.hs, "Weight exponents h")->delimiter(',');
    table->add_option("--w", topt.w_texts, "Twists w")->delimiter(',');
    table->add_option("--q", topt.q_texts, "Bases q")->delimiter(',');
    table->add_option("--x", topt.xs, "Integer arguments x")->delimiter(',');
    table->add_option("--format", topt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--decimal", topt.decimal,
                      "Add an approximate decimal column with this many digits");
    table->add_option("--golden", topt.golden, "Compare output bytes against this file");

    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    verify->add_option("suite", suite, "Suite to run")
        ->check(CLI::IsMember({"distribution", "witt", "cos_formula", "series", "special",
                               "all"}));
    verify->add_option("--grid", grid, "Grid size")->check(CLI::IsMember({"small", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(copt);
        if (table->parsed()) return cmd_table(topt);
        return cmd_verify(suite, grid);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "qeg: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "qeg: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qeg: " << e.what() << "\n";
        return 2;
    }
}
