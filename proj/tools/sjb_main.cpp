#include "golden_fixtures.hpp"

#include "sjb/boolean_fast.hpp"
#include "sjb/boolean_sjb.hpp"
#include "sjb/btk.hpp"
#include "sjb/parallel.hpp"
#include "sjb/render.hpp"
#include "sjb/serialize.hpp"
#include "sjb/sl2.hpp"
#include "sjb/terwilliger.hpp"
#include "sjb/yjm.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <limits>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

// boolean_n is INT_MIN when --boolean was not given.
sjb::PosetSpec spec_from_options(int boolean_n, const std::vector<int>& bounds) {
    const bool have_boolean = boolean_n != std::numeric_limits<int>::min();
    if (have_boolean && !bounds.empty())
        throw std::invalid_argument("give either --boolean or --bounds, not both");
    if (have_boolean)
        return sjb::PosetSpec::boolean(boolean_n);
    if (!bounds.empty())
        return sjb::PosetSpec(bounds);
    throw std::invalid_argument("one of --boolean or --bounds is required");
}

sjb::SymmetricJordanBasis construct_basis(const sjb::PosetSpec& spec) {
    return spec.is_boolean() ? sjb::sjb_boolean(spec.n()) : sjb::sjb_product(spec);
}

void print_unified_diff(const std::string& name, std::string_view expected,
                        const std::string& actual) {
    std::cout << "--- expected/" << name << "\n+++ actual/" << name << "\n";
    std::istringstream se{std::string(expected)}, sa{actual};
    std::string le, la;
    int line = 0;
    while (true) {
        bool he = static_cast<bool>(std::getline(se, le));
        bool ha = static_cast<bool>(std::getline(sa, la));
        ++line;
        if (!he && !ha)
            break;
        if (he && ha && le == la)
            continue;
        std::cout << "@@ line " << line << " @@\n";
        if (he)
            std::cout << "-" << le << "\n";
        if (ha)
            std::cout << "+" << la << "\n";
    }
}

int run_construct(int boolean_n, const std::vector<int>& bounds, const std::string& format) {
    sjb::PosetSpec spec = spec_from_options(boolean_n, bounds);
    auto basis = construct_basis(spec);
    if (format == "json")
        std::cout << sjb::sjb_to_json(basis);
    else
        std::cout << sjb::render_sjb(basis);
    return kExitOk;
}

int run_verify(int boolean_n, const std::vector<int>& bounds, const std::string& input,
               const std::string& format) {
    sjb::VerificationReport rep;
    std::string subject;

    if (!input.empty()) {
        std::ifstream in(input);
        if (!in)
            throw std::invalid_argument("cannot open input file: " + input);
        std::stringstream buf;
        buf << in.rdbuf();
        auto basis = sjb::sjb_from_json(buf.str());
        subject = basis.spec.name() + " (from " + input + ")";
        rep.merge(sjb::verify_sjb(basis.spec, basis));
        if (basis.spec.is_boolean()) {
            rep.merge(sjb::verify_orthogonality(basis));
            rep.merge(sjb::verify_norm_profiles(basis));
            rep.merge(sjb::verify_down_action(basis));
        } else {
            rep.add("orthogonality", true, "skipped: Boolean-only check");
            rep.add("norm-profiles", true, "skipped: Boolean-only check");
        }
    } else {
        sjb::PosetSpec spec = spec_from_options(boolean_n, bounds);
        subject = spec.name();
        if (spec.is_boolean()) {
            const int n = spec.n();
            auto chains = sjb::fastb::build_chains(n);
            rep.merge(sjb::fastb::verify_jordan(n, chains));
            rep.add("integrality", true, "coefficients are machine integers by construction");
            rep.merge(sjb::fastb::verify_orthogonality(n, chains));
            rep.add("independence", true, "implied by orthogonality of nonzero vectors");
            rep.merge(sjb::fastb::verify_norm_ratios(n, chains));
            rep.merge(sjb::fastb::verify_down_action(n, chains));
            rep.merge(sjb::verify_sl2(n, n <= 8 ? std::nullopt
                                                : std::make_optional<std::size_t>(1000)));
        } else {
            auto basis = sjb::sjb_product(spec);
            rep.merge(sjb::verify_sjb(spec, basis));
            rep.add("orthogonality", true, "skipped: Boolean-only check");
            rep.add("norm-profiles", true, "skipped: Boolean-only check");
        }
    }

    if (format == "text") {
        std::cout << "verify " << subject << "\n";
        for (const auto& c : rep.checks)
            std::cout << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.name
                      << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    } else {
        std::cout << sjb::report_to_json(subject, rep);
    }
    return rep.all_pass() ? kExitOk : kExitVerificationFailed;
}

int run_blocks(int n, int i, int j, int t, bool all, bool check, const std::string& mode,
               double tolerance) {
    std::vector<sjb::TerwilligerElement> triples;
    if (all) {
        triples = sjb::valid_triples(n);
    } else {
        sjb::TerwilligerElement e{n, i, j, t};
        if (!e.valid())
            throw std::invalid_argument("invalid (i,j,t) for n");
        triples.push_back(e);
    }

    if (mode == "float") {
        auto nm = sjb::build_numeric_n(n);
        double unit_err = sjb::unitarity_error(nm);
        bool ok = unit_err < tolerance;
        std::cout << "unitarity max |N^T N - I| = " << unit_err << "\n";
        for (const auto& e : triples) {
            auto res = sjb::offblock_check(nm, e.i, e.j, e.t);
            bool triple_ok = res.off_max < tolerance;
            ok = ok && triple_ok;
            std::cout << "(i=" << e.i << ",j=" << e.j << ",t=" << e.t
                      << ") off-block max = " << res.off_max
                      << ", on-block deviation = " << res.on_dev_max
                      << (triple_ok ? "" : "  [FAIL]") << "\n";
        }
        return ok ? kExitOk : kExitVerificationFailed;
    }

    bool ok = true;
    std::size_t verified = 0;
    if (check) {
        auto nmatrix = sjb::build_n_matrix(sjb::sjb_boolean(n));
        for (const auto& e : triples) {
            auto conj = sjb::phi_blocks_conjugation(nmatrix, e.i, e.j, e.t);
            bool match = conj.report.all_pass() &&
                         conj.image == sjb::phi_blocks_formula(n, e.i, e.j, e.t);
            ok = ok && match;
            if (match) {
                ++verified;
            } else {
                std::cerr << "mismatch at (i=" << e.i << ",j=" << e.j << ",t=" << e.t
                          << "): " << conj.report.first_failure() << "\n";
            }
        }
    }
    if (!all)
        for (const auto& e : triples)
            std::cout << sjb::blocks_to_json(sjb::phi_blocks_formula(n, e.i, e.j, e.t));
    if (check)
        std::cout << (all ? std::to_string(verified) + " triples verified\n"
                          : "conjugation matches formula\n");
    return ok ? kExitOk : kExitVerificationFailed;
}

int run_gz(int n, const std::string& format) {
    auto basis = sjb::sjb_boolean(n);
    auto gz = sjb::verify_gz(basis);
    if (format == "text") {
        std::cout << "GZ weights for O(" << n << ")\n";
        for (const auto& cw : gz.table) {
            std::cout << "  k=" << cw.k << " b=" << cw.b << " weight=(";
            for (std::size_t i = 0; i < cw.weights.size(); ++i)
                std::cout << (i ? "," : "") << cw.weights[i];
            std::cout << ")\n";
        }
        for (const auto& c : gz.report.checks)
            std::cout << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.name << "\n";
    } else {
        std::cout << sjb::gz_to_json(n, gz);
    }
    return gz.report.all_pass() ? kExitOk : kExitVerificationFailed;
}

int run_dims(int n, const std::string& format) {
    auto dims = sjb::dims_table(n);
    if (format == "text") {
        std::cout << "n = " << n << "\np =";
        for (long p : dims.p)
            std::cout << " " << p;
        std::cout << "\nq =";
        for (const auto& q : dims.q)
            std::cout << " " << q.get_str();
        std::cout << "\nsum p_k^2 = " << dims.sum_p_sq.get_str()
                  << "  C(n+3,3) = " << dims.binom_n3_3.get_str()
                  << "\nsum p_k q_k = " << dims.sum_pq.get_str()
                  << "  2^n = " << dims.two_n.get_str() << "\nidentities "
                  << (dims.identities_hold() ? "hold" : "FAIL") << "\n";
    } else {
        std::cout << sjb::dims_to_json(dims);
    }
    return dims.identities_hold() ? kExitOk : kExitVerificationFailed;
}

int run_golden(bool list, const std::string& expected_dir) {
    if (list) {
        for (const auto& f : sjb_cli::kGoldenFixtures)
            std::cout << f.name << "\n";
        return kExitOk;
    }
    bool ok = true;
    for (const auto& f : sjb_cli::kGoldenFixtures) {
        std::string actual;
        if (f.name == "m222") {
            actual = sjb::render_sjb(sjb::sjb_m2(2, 2));
        } else {
            int n = f.name[1] - '0';
            actual = sjb::render_sjb(sjb::sjb_boolean(n));
        }
        std::string expected{f.expected};
        if (!expected_dir.empty()) {
            std::ifstream in(expected_dir + "/" + std::string(f.name) + ".txt");
            if (!in)
                throw std::invalid_argument("missing fixture file for " + std::string(f.name));
            std::stringstream buf;
            buf << in.rdbuf();
            expected = buf.str();
        }
        if (actual == expected) {
            std::cout << "PASS " << f.name << "\n";
        } else {
            ok = false;
            std::cout << "FAIL " << f.name << "\n";
            print_unified_diff(std::string(f.name), expected, actual);
        }
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric Jordan bases of chain products and the explicit block "
                 "diagonalization of the Terwilliger algebra of B(n)"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: SJB_THREADS or all cores)");

    // construct
    auto* construct = app.add_subcommand("construct", "construct an SJB and print it");
    int c_boolean = std::numeric_limits<int>::min();
    std::vector<int> c_bounds;
    std::string c_format = "text";
    construct->add_option("--boolean", c_boolean, "build O(n) for B(n)");
    construct->add_option("--bounds", c_bounds, "bounds k_1,..,k_n of M(n,k)")->delimiter(',');
    construct->add_option("--format", c_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "construct and verify an SJB");
    int v_boolean = std::numeric_limits<int>::min();
    std::vector<int> v_bounds;
    std::string v_input, v_format = "json";
    verify->add_option("--boolean", v_boolean, "verify O(n)");
    verify->add_option("--bounds", v_bounds, "bounds of M(n,k)")->delimiter(',');
    verify->add_option("--input", v_input, "verify a basis from a JSON file");
    verify->add_option("--format", v_format, "json or text")
        ->check(CLI::IsMember({"text", "json"}));

    // blocks
    auto* blocks = app.add_subcommand("blocks", "block images of M^t_{i,j} under Phi");
    int b_n = 0, b_i = -1, b_j = -1, b_t = -1;
    bool b_all = false, b_check = false;
    std::string b_mode = "exact";
    double b_tol = 1e-10;
    blocks->add_option("--n", b_n, "n of B(n)")->required();
    blocks->add_option("--i", b_i, "row size i");
    blocks->add_option("--j", b_j, "column size j");
    blocks->add_option("--t", b_t, "intersection size t");
    blocks->add_flag("--all", b_all, "all valid (i,j,t)");
    blocks->add_flag("--check", b_check, "verify conjugation route against the formula");
    blocks->add_option("--mode", b_mode, "exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    blocks->add_option("--tolerance", b_tol, "numeric tolerance (float mode)");

    // gz
    auto* gz = app.add_subcommand("gz", "Young-Jucys-Murphy weight table of O(n)");
    int g_n = 0;
    std::string g_format = "json";
    gz->add_option("--n", g_n, "n of B(n)")->required();
    gz->add_option("--format", g_format, "json or text")
        ->check(CLI::IsMember({"text", "json"}));

    // dims
    auto* dims = app.add_subcommand("dims", "block order and multiplicity identities");
    int d_n = 0;
    std::string d_format = "text";
    dims->add_option("--n", d_n, "n of B(n)")->required();
    dims->add_option("--format", d_format, "json or text")
        ->check(CLI::IsMember({"text", "json"}));

    // golden
    auto* golden = app.add_subcommand("golden", "diff constructed bases against the embedded fixtures");
    bool gold_list = false;
    std::string gold_dir;
    golden->add_flag("--list", gold_list, "list fixture names");
    golden->add_option("--expected-dir", gold_dir,
                       "read expected renderings from DIR/<name>.txt instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (threads > 0)
        setenv("SJB_THREADS", std::to_string(threads).c_str(), 1);

    try {
        if (app.got_subcommand(construct))
            return run_construct(c_boolean, c_bounds, c_format);
        if (app.got_subcommand(verify))
            return run_verify(v_boolean, v_bounds, v_input, v_format);
        if (app.got_subcommand(blocks))
            return run_blocks(b_n, b_i, b_j, b_t, b_all, b_check, b_mode, b_tol);
        if (app.got_subcommand(gz))
            return run_gz(g_n, g_format);
        if (app.got_subcommand(dims))
            return run_dims(d_n, d_format);
        if (app.got_subcommand(golden))
            return run_golden(gold_list, gold_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
