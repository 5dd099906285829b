#include "cutjoin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "cutjoin/hurwitz.hpp"
#include "cutjoin/verify.hpp"
#include "cutjoin/wop.hpp"
#include "cutjoin/xmatrix.hpp"

namespace cutjoin::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in integer list");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

json monomial_to_json(const PMonomial& m) {
    json arr = json::array();
    for (const auto& [k, e] : m.exponents()) arr.push_back({k, e});
    return arr;
}

json xmonomial_to_json(const XMonomial& m) {
    json arr = json::array();
    for (const auto& [key, e] : m.exponents()) arr.push_back({{key.first, key.second}, e});
    return arr;
}

void emit_ppolynomial(const PPolynomial& f, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json doc;
        doc["terms"] = json::array();
        for (const auto& [m, c] : f.terms())
            doc["terms"].push_back({{"coeff", rat_to_string(c)}, {"monomial", monomial_to_json(m)}});
        out << doc.dump() << "\n";
    } else if (format == "csv") {
        out << "coeff,monomial\n";
        for (const auto& [m, c] : f.terms())
            out << rat_to_string(c) << "," << m.to_string() << "\n";
    } else {
        out << format_ppolynomial(f) << "\n";
    }
}

void emit_xpolynomial(const XPolynomial& f, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json doc;
        doc["N"] = f.truncation();
        doc["terms"] = json::array();
        for (const auto& [m, c] : f.terms())
            doc["terms"].push_back({{"coeff", rat_to_string(c)}, {"monomial", xmonomial_to_json(m)}});
        out << doc.dump() << "\n";
    } else if (format == "csv") {
        out << "coeff,monomial\n";
        for (const auto& [m, c] : f.terms())
            out << rat_to_string(c) << "," << m.to_string() << "\n";
    } else {
        out << f.to_string() << "\n";
    }
}

int cmd_apply(const std::string& op, int d, const std::string& beta_csv,
              const std::string& poly_text, int N, const std::string& format,
              std::ostream& out) {
    const PPolynomial f = parse_ppolynomial(poly_text);
    if (op == "wmatrix") {
        const XPolynomial image = apply_w_truncated(d, p_to_x_subst(f, N));
        emit_xpolynomial(image, format, out);
        return 0;
    }
    OperatorSpec spec;
    if (op == "cutjoin") {
        spec = OperatorSpec::cut_and_join();
    } else if (op == "delta") {
        spec = OperatorSpec::delta(d);
    } else if (op == "group") {
        spec = OperatorSpec::group_route(d);
    } else if (op == "beta") {
        if (beta_csv.empty()) throw std::invalid_argument("--op beta requires --beta");
        const std::vector<int> cycle = parse_int_list(beta_csv);
        spec = OperatorSpec::delta_beta(
            Permutation::from_cycles(static_cast<int>(cycle.size()), {cycle}));
    } else {
        throw std::invalid_argument("unknown operator: " + op);
    }
    emit_ppolynomial(apply_operator(spec, f), format, out);
    return 0;
}

int cmd_hurwitz(int n, int d, int k, const std::string& format, std::ostream& out) {
    if (n < 1 || d < 2 || k < 0)
        throw std::invalid_argument("hurwitz needs n >= 1, d >= 2, k >= 0");
    const MonodromyTally tally = dcycle_monodromy_tally(n, d, k);
    struct Row {
        Partition alpha;
        Int h, hhat;
    };
    std::vector<Row> rows;
    for (const auto& alpha : partitions_of(n)) {
        auto it = tally.find(alpha);
        if (it == tally.end())
            rows.push_back({alpha, 0, 0});
        else
            rows.push_back({alpha, it->second.first, it->second.second});
    }
    if (format == "json") {
        json doc = json::array();
        for (const auto& r : rows)
            doc.push_back({{"n", n},
                           {"d", d},
                           {"k", k},
                           {"alpha", r.alpha.exponent_notation()},
                           {"h", r.h.str()},
                           {"hhat", r.hhat.str()}});
        out << doc.dump() << "\n";
    } else if (format == "csv") {
        out << "n,d,k,alpha,h,hhat\n";
        for (const auto& r : rows)
            out << n << "," << d << "," << k << ",(" << r.alpha.exponent_notation() << "),"
                << r.h.str() << "," << r.hhat.str() << "\n";
    } else {
        for (const auto& r : rows)
            out << "n=" << n << " d=" << d << " k=" << k << " alpha=("
                << r.alpha.exponent_notation() << ") h=" << r.h.str()
                << " hhat=" << r.hhat.str() << "\n";
    }
    return 0;
}

int cmd_series(int d, int k_max, int w_max, const std::string& format, std::ostream& out) {
    const ZSeries s = build_hhat_series(d, w_max, k_max);
    if (format == "json") {
        json doc;
        doc["terms"] = json::array();
        for (const auto& [k, f] : s.levels())
            for (const auto& [m, c] : f.terms())
                doc["terms"].push_back(
                    {{"coeff", rat_to_string(c)}, {"monomial", monomial_to_json(m)}, {"z", k}});
        out << doc.dump() << "\n";
    } else if (format == "csv") {
        out << "z,monomial,coeff\n";
        for (const auto& [k, f] : s.levels())
            for (const auto& [m, c] : f.terms())
                out << k << "," << m.to_string() << "," << rat_to_string(c) << "\n";
    } else {
        for (const auto& [k, f] : s.levels())
            for (const auto& [m, c] : f.terms())
                out << "z^" << k << " " << m.to_string() << ": " << rat_to_string(c) << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& perm_csv, const std::string& tuple_csv,
                 const std::string& format, std::ostream& out) {
    const Permutation alpha = Permutation::from_images(parse_int_list(perm_csv));
    const std::vector<int> pts = parse_int_list(tuple_csv);
    const CycleTuple tuple(pts, alpha.degree());
    const TupleClassification cls = classify_tuple(alpha, tuple);
    if (format == "json") {
        json doc;
        doc["tau"] = cls.type_tau.images();
        doc["tau_cycles"] = cls.type_tau.cycle_notation();
        doc["distances"] = cls.distances;
        out << doc.dump() << "\n";
    } else {
        out << "tau=" << cls.type_tau.cycle_notation() << " distances=(";
        for (std::size_t i = 0; i < cls.distances.size(); ++i)
            out << (i ? "," : "") << cls.distances[i];
        out << ")\n";
    }
    return 0;
}

struct Bounds {
    int n_max = -1, d_max = -1, k_max = -1, w_max = -1, N = -1, threads = 0;
    int pick(int flag, int fallback) const { return flag >= 0 ? flag : fallback; }
};

int cmd_verify(const std::string& suite, const Bounds& b, std::ostream& out) {
    SuiteResult result;
    if (suite == "theorem-w") {
        result = suite_theorem_w(b.pick(b.n_max, 8), b.pick(b.d_max, 4), b.pick(b.w_max, 10),
                                 b.threads);
    } else if (suite == "beta") {
        result = suite_beta(b.pick(b.d_max, 4), b.pick(b.w_max, 8), b.threads);
    } else if (suite == "commute") {
        result = suite_commute(b.pick(b.d_max, 4), b.pick(b.w_max, 8), b.threads);
    } else if (suite == "xmatrix") {
        result = suite_xmatrix(b.pick(b.w_max, 4), b.pick(b.N, 4), b.pick(b.d_max, 3),
                               b.pick(b.n_max, 4), 3, b.threads);
    } else if (suite == "pde") {
        result = suite_pde(b.pick(b.d_max, 3), b.pick(b.w_max, 6), b.pick(b.k_max, 3),
                           b.threads);
    } else if (suite == "recursion") {
        result = suite_recursion(b.pick(b.n_max, 6), b.pick(b.d_max, 3), b.pick(b.k_max, 3),
                                 b.threads);
    } else if (suite == "all") {
        result = suite_all(b.threads);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    for (const auto& c : result.checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
    }
    out << (result.pass() ? "OK" : "FAILED") << " (" << result.checks.size() << " checks)\n";
    return result.pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact W-operators, cut-and-join calculus and Hurwitz numbers "
                 "on the power-sum ring"};
    app.require_subcommand(1);

    std::string op = "delta", beta_csv, poly_text, format = "text";
    std::string suite = "all", perm_csv, tuple_csv;
    int d = 2, n = 1, k = 0, k_max = 3, w_max = 6, N = 2;
    Bounds bounds;

    auto* apply = app.add_subcommand("apply", "Apply an operator to a polynomial");
    apply->add_option("--op", op, "cutjoin|delta|beta|group|wmatrix")->required();
    apply->add_option("--d", d, "cycle length d");
    apply->add_option("--beta", beta_csv, "d-cycle as comma list, e.g. 3,1,2");
    apply->add_option("--poly", poly_text, "polynomial, e.g. \"p1^3+1/2*p2\"")->required();
    apply->add_option("--N", N, "matrix truncation (wmatrix only)");
    apply->add_option("--format", format, "json|csv|text");

    auto* hurwitz = app.add_subcommand("hurwitz", "Tabulate h and hhat for all types of n");
    hurwitz->add_option("--n", n, "degree")->required();
    hurwitz->add_option("--d", d, "cycle length")->required();
    hurwitz->add_option("--k", k, "number of d-cycle branch points")->required();
    hurwitz->add_option("--format", format, "json|csv|text");

    auto* series = app.add_subcommand("series", "Print the truncated W-flow series");
    series->add_option("--d", d, "cycle length")->required();
    series->add_option("--k-max", k_max, "z-order truncation");
    series->add_option("--w-max", w_max, "weight truncation");
    series->add_option("--format", format, "json|csv|text");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite,
                       "theorem-w|beta|commute|xmatrix|pde|recursion|all")->required();
    verify->add_option("--n-max", bounds.n_max, "degree bound");
    verify->add_option("--d-max", bounds.d_max, "cycle length bound");
    verify->add_option("--k-max", bounds.k_max, "z-order bound");
    verify->add_option("--w-max", bounds.w_max, "weight bound");
    verify->add_option("--N", bounds.N, "matrix truncation bound");
    verify->add_option("--threads", bounds.threads, "worker count (0 = all cores)");

    auto* classify = app.add_subcommand("classify", "Classify (permutation, tuple)");
    classify->add_option("--perm", perm_csv, "permutation images as comma list")->required();
    classify->add_option("--tuple", tuple_csv, "tuple [j_d,...,j_1] as comma list")->required();
    classify->add_option("--format", format, "json|text");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (apply->parsed()) return cmd_apply(op, d, beta_csv, poly_text, N, format, out);
        if (hurwitz->parsed()) return cmd_hurwitz(n, d, k, format, out);
        if (series->parsed()) return cmd_series(d, k_max, w_max, format, out);
        if (verify->parsed()) return cmd_verify(suite, bounds, out);
        if (classify->parsed()) return cmd_classify(perm_csv, tuple_csv, format, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace cutjoin::cli
