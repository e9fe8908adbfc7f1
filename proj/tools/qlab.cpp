#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qlab/dsl.hpp"
#include "qlab/identities.hpp"
#include "qlab/partitions.hpp"
#include "qlab/serialize.hpp"

namespace {

using namespace qlab;

constexpr long long kDefaultOrder = 200;

QSeries eval_expression(const std::string& expr, long long order,
                        dsl::EvalCache* cache) {
    dsl::ExprPtr e = dsl::parse(expr);
    for (long long margin : {32LL, 128LL, 512LL, 2048LL}) {
        try {
            QSeries r = dsl::eval(e, order, margin, cache);
            if (r.prec() > order)
                return r;
        } catch (const InsufficientPrecision&) {
        } catch (const ZeroSeries&) {
        }
    }
    return dsl::eval(e, order, 8192, cache);
}

void print_series(const QSeries& s, long long order, bool as_json, bool as_bfile,
                  std::ostream& os) {
    if (as_json) {
        os << series_to_json(truncate(s, order + 1), 2) << "\n";
        return;
    }
    if (as_bfile) {
        for (long long e = s.min_exp(); e <= order; ++e)
            os << e << " " << s.coeff(e).str() << "\n";
        return;
    }
    os << "# " << truncate(s, order + 1).to_string() << "\n";
    for (long long e = s.min_exp(); e <= order; ++e)
        os << e << "\t" << s.coeff(e).str() << "\n";
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text << "\n";
}

std::string describe(const VerificationReport& r) {
    std::string line = (r.pass ? "PASS " : "FAIL ") + r.id + " (order " +
                       std::to_string(r.order) + ")";
    if (!r.error.empty())
        return "FAIL " + r.id + " (order " + std::to_string(r.order) +
               "): evaluation error: " + r.error;
    if (r.first_mismatch)
        line += ": first mismatch at q^" + std::to_string(r.first_mismatch->exponent) +
                ": lhs=" + r.first_mismatch->lhs.str() +
                ", rhs=" + r.first_mismatch->rhs.str();
    return line;
}

std::vector<IdentitySpec> load_catalog(const std::string& path) {
    if (path.empty())
        return builtin_catalog();
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open catalog file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    return catalog_from_json(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlab: exact q-series laboratory for M2-rank difference identities"};
    app.require_subcommand(1);

    // expand
    auto* expand = app.add_subcommand("expand", "expand a DSL expression");
    std::string ex_expr;
    long long ex_order = kDefaultOrder;
    bool ex_json = false, ex_bfile = false;
    expand->add_option("--expr", ex_expr, "expression")->required();
    expand->add_option("--order", ex_order, "truncation order");
    expand->add_flag("--json", ex_json, "JSON series encoding");
    expand->add_flag("--bfile", ex_bfile, "b-file output (n a(n) lines)");

    // dissect
    auto* dis = app.add_subcommand("dissect", "dissect an expression along a progression");
    std::string di_expr;
    long long di_mod = 0, di_res = 0, di_order = kDefaultOrder;
    bool di_json = false, di_bfile = false;
    dis->add_option("--expr", di_expr, "expression")->required();
    dis->add_option("--mod", di_mod, "modulus l")->required();
    dis->add_option("--residue", di_res, "residue d")->required();
    dis->add_option("--order", di_order, "truncation order of the dissected series");
    dis->add_flag("--json", di_json, "JSON series encoding");
    dis->add_flag("--bfile", di_bfile, "b-file output");

    // verify
    auto* ver = app.add_subcommand("verify", "verify one identity");
    std::string v_id, v_lhs, v_rhs, v_catalog;
    long long v_order = kDefaultOrder;
    ver->add_option("--id", v_id, "catalog identity key");
    ver->add_option("--lhs", v_lhs, "ad-hoc left side");
    ver->add_option("--rhs", v_rhs, "ad-hoc right side");
    ver->add_option("--order", v_order, "comparison order");
    ver->add_option("--catalog", v_catalog, "catalog JSON file (default: built-in)");

    // verify-all
    auto* vall = app.add_subcommand("verify-all", "verify the whole catalog");
    long long a_order = kDefaultOrder;
    int a_jobs = 1;
    std::string a_report, a_catalog;
    vall->add_option("--order", a_order, "comparison order");
    vall->add_option("--jobs", a_jobs, "parallel workers");
    vall->add_option("--report", a_report, "write JSON report here");
    vall->add_option("--catalog", a_catalog, "catalog JSON file (default: built-in)");

    // table (analytic route)
    auto* tab = app.add_subcommand("table", "N2(s,l,n) residue table via rank_gf");
    long long t_ell = 0, t_nmax = 0;
    bool t_json = false;
    tab->add_option("--ell", t_ell, "modulus l")->required();
    tab->add_option("--nmax", t_nmax, "largest weight n")->required();
    tab->add_flag("--json", t_json, "JSON output");

    // bruteforce
    auto* brute = app.add_subcommand("bruteforce", "N2(s,l,n) residue table by enumeration");
    long long b_nmax = 0, b_ell = 3;
    bool b_json = false;
    brute->add_option("--nmax", b_nmax, "largest weight n")->required();
    brute->add_option("--ell", b_ell, "modulus l");
    brute->add_flag("--json", b_json, "JSON output");

    // catalog export
    auto* cat = app.add_subcommand("catalog", "export the built-in catalog as JSON");
    std::string c_out;
    cat->add_option("--out", c_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*expand) {
            QSeries s = eval_expression(ex_expr, ex_order, nullptr);
            print_series(s, ex_order, ex_json, ex_bfile, std::cout);
            return 0;
        }
        if (*dis) {
            QSeries s = eval_expression("dissect((" + di_expr + "), " +
                                            std::to_string(di_mod) + ", " +
                                            std::to_string(di_res) + ")",
                                        di_order, nullptr);
            print_series(s, di_order, di_json, di_bfile, std::cout);
            return 0;
        }
        if (*ver) {
            VerifyEngine engine(load_catalog(v_catalog));
            VerificationReport r;
            if (!v_id.empty()) {
                r = engine.verify(v_id, v_order);
            } else if (!v_lhs.empty() && !v_rhs.empty()) {
                r = engine.verify(IdentitySpec{"adhoc", v_lhs, v_rhs, 1, ""}, v_order);
            } else {
                std::cerr << "verify: need --id or both --lhs and --rhs\n";
                return 2;
            }
            std::cout << describe(r) << "\n";
            return r.pass ? 0 : 1;
        }
        if (*vall) {
            VerifyEngine engine(load_catalog(a_catalog));
            auto reports = engine.verify_all(a_order, a_jobs);
            size_t failed = 0;
            for (const auto& r : reports) {
                std::cout << describe(r) << "\n";
                if (!r.pass)
                    ++failed;
            }
            std::cout << reports.size() - failed << "/" << reports.size()
                      << " identities passed at order " << a_order << "\n";
            if (!a_report.empty())
                write_or_print(reports_to_json(reports, a_order), a_report);
            return failed == 0 ? 0 : 1;
        }
        if (*tab || *brute) {
            bool analytic = static_cast<bool>(*tab);
            long long ell = analytic ? t_ell : b_ell;
            long long nmax = analytic ? t_nmax : b_nmax;
            bool as_json = analytic ? t_json : b_json;
            std::vector<std::vector<Coefficient>> counts(
                static_cast<size_t>(nmax + 1));
            if (analytic) {
                std::vector<QSeries> gfs;
                for (long long s = 0; s < ell; ++s)
                    gfs.push_back(rank_gf(s, ell, nmax + 1));
                for (long long n = 0; n <= nmax; ++n)
                    for (long long s = 0; s < ell; ++s)
                        counts[static_cast<size_t>(n)].push_back(gfs[static_cast<size_t>(s)].coeff(n));
            } else {
                ResidueTable table = residue_counts(ell, nmax);
                for (long long n = 0; n <= nmax; ++n)
                    for (long long s = 0; s < ell; ++s)
                        counts[static_cast<size_t>(n)].push_back(
                            table.counts[static_cast<size_t>(n)][static_cast<size_t>(s)]);
            }
            if (as_json) {
                std::string out = "{\"ell\":" + std::to_string(ell) +
                                  ",\"nmax\":" + std::to_string(nmax) + ",\"counts\":[";
                for (long long n = 0; n <= nmax; ++n) {
                    out += (n ? ",[" : "[");
                    for (long long s = 0; s < ell; ++s)
                        out += (s ? "," : "") +
                               counts[static_cast<size_t>(n)][static_cast<size_t>(s)].str();
                    out += "]";
                }
                out += "]}";
                std::cout << out << "\n";
            } else {
                std::cout << "n\ts\tcount\n";
                for (long long n = 0; n <= nmax; ++n)
                    for (long long s = 0; s < ell; ++s)
                        std::cout << n << "\t" << s << "\t"
                                  << counts[static_cast<size_t>(n)][static_cast<size_t>(s)].str()
                                  << "\n";
            }
            return 0;
        }
        if (*cat) {
            write_or_print(catalog_to_json(builtin_catalog()), c_out);
            return 0;
        }
    } catch (const dsl::ParseError& e) {
        std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
        if (!e.expected.empty())
            std::cerr << "expected: " << e.expected << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
