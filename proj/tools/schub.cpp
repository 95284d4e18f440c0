#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schubert/chevalley.hpp"
#include "schubert/giambelli.hpp"
#include "schubert/kostant.hpp"
#include "schubert/pieri.hpp"
#include "schubert/structure.hpp"
#include "schubert/verify.hpp"

namespace {

using namespace schubert;

std::string format_class(const QuantumClass& cls, const FlagShape& shape,
                         const std::string& format) {
    if (format == "latex") return to_latex(cls, shape) + "\n";
    if (format == "table") return to_table(cls, shape);
    return to_plain(cls, shape) + "\n";
}

std::vector<int> parse_steps(const std::string& text) {
    std::vector<int> steps;
    std::string norm = text;
    for (char& c : norm)
        if (c == ',') c = ' ';
    std::istringstream in(norm);
    int v;
    while (in >> v) steps.push_back(v);
    return steps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant quantum Schubert calculus on type A flag varieties"};
    app.require_subcommand(1);
    std::string format = "plain";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: plain, latex or table")
            ->check(CLI::IsMember({"plain", "latex", "table"}));
    };

    // pieri --n 6 --flag 2,4 --i 2 --p 3 --u "[3715246]"
    auto* pieri = app.add_subcommand("pieri", "Equivariant quantum Pieri product on a flag variety");
    add_format(pieri);
    int pi_n = 0, pi_i = 0, pi_p = 0;
    std::string pi_flag, pi_u;
    pieri->add_option("--n", pi_n, "Rank n (ambient n+1)")->required();
    pieri->add_option("--flag", pi_flag, "Flag steps n_1,...,n_k")->required();
    pieri->add_option("--i", pi_i, "Step index i (1-based)")->required();
    pieri->add_option("--p", pi_p, "Special class parameter p")->required();
    pieri->add_option("--u", pi_u, "Schubert index u, one-line or cycles")->required();

    // grassmann --m 3 --nplus1 7 --p 2 --nu "(4,2,1)"
    auto* grass = app.add_subcommand("grassmann", "Equivariant quantum Pieri product on Gr(m,n+1)");
    add_format(grass);
    int gr_m = 0, gr_np1 = 0, gr_p = 0;
    std::string gr_nu;
    grass->add_option("--m", gr_m, "Subspace dimension m")->required();
    grass->add_option("--nplus1", gr_np1, "Ambient dimension n+1")->required();
    grass->add_option("--p", gr_p, "Special class 1^p")->required();
    grass->add_option("--nu", gr_nu, "Partition nu, e.g. (4,2,1)")->required();

    // chevalley --n 2 --i 1 --u "[213]"
    auto* chev = app.add_subcommand("chevalley", "Equivariant quantum divisor product on G/B");
    add_format(chev);
    int ch_n = 0, ch_i = 0;
    std::string ch_u;
    chev->add_option("--n", ch_n, "Rank n")->required();
    chev->add_option("--i", ch_i, "Simple reflection index")->required();
    chev->add_option("--u", ch_u, "Schubert index u")->required();

    // classical --n 6 --flag 2,4 --u ... --v ...
    auto* cls = app.add_subcommand("classical", "Classical equivariant product by GKM localization");
    add_format(cls);
    int cl_n = 0;
    std::string cl_flag, cl_u, cl_v;
    cls->add_option("--n", cl_n, "Rank n")->required();
    cls->add_option("--flag", cl_flag, "Flag steps n_1,...,n_k")->required();
    cls->add_option("--u", cl_u, "First factor")->required();
    cls->add_option("--v", cl_v, "Second factor")->required();

    // giambelli --m 2 --nplus1 4 --lambda "(2,1)"
    auto* gia = app.add_subcommand("giambelli", "Evaluate the Giambelli determinant of sigma^lambda");
    add_format(gia);
    int gi_m = 0, gi_np1 = 0;
    std::string gi_lam;
    gia->add_option("--m", gi_m, "Subspace dimension m")->required();
    gia->add_option("--nplus1", gi_np1, "Ambient dimension n+1")->required();
    gia->add_option("--lambda", gi_lam, "Partition lambda")->required();

    // lift --n 3 --flag 2 --lambda 0,1,0
    auto* lift = app.add_subcommand("lift", "Peterson-Woodward lifting report");
    int lf_n = 0;
    std::string lf_flag, lf_lam;
    lift->add_option("--n", lf_n, "Rank n")->required();
    lift->add_option("--flag", lf_flag, "Flag steps n_1,...,n_k")->required();
    lift->add_option("--lambda", lf_lam,
                     "Quantum degree: k step coordinates, or n coroot coordinates")
        ->required();

    // verify --suite <name> --max-n <N>
    auto* ver = app.add_subcommand("verify", "Run a named verification suite");
    std::string suite;
    int max_n = 0;
    unsigned jobs = 1;
    ver->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    ver->add_option("--max-n", max_n, "Cap the sweep at ambient size n+1 <= N");
    ver->add_option("--jobs", jobs, "Worker pool size for sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*pieri) {
            FlagShape shape(pi_n, parse_steps(pi_flag));
            WeylElement u = WeylElement::from_perm(parse_permutation(pi_u, pi_n + 1));
            std::cout << format_class(eq_quantum_pieri(shape, pi_i, pi_p, u), shape, format);
        } else if (*grass) {
            FlagShape shape = FlagShape::grassmannian(gr_m, gr_np1);
            std::vector<int> parts = parse_steps(gr_nu.substr(1, gr_nu.size() - 2));
            Partition nu(std::move(parts), gr_m, gr_np1);
            std::cout << format_class(grassmann_pieri(gr_m, gr_np1 - 1, gr_p, nu), shape, format);
        } else if (*chev) {
            RootSystem rs = RootSystem::type_a(ch_n);
            FlagShape shape = FlagShape::full(ch_n);
            WeylElement u = WeylElement::from_perm(parse_permutation(ch_u, ch_n + 1));
            std::cout << format_class(quantum_chevalley_gb(rs, ch_i, u), shape, format);
        } else if (*cls) {
            RootSystem rs = RootSystem::type_a(cl_n);
            FlagShape shape(cl_n, parse_steps(cl_flag));
            WeylElement u = WeylElement::from_perm(parse_permutation(cl_u, cl_n + 1));
            WeylElement v = WeylElement::from_perm(parse_permutation(cl_v, cl_n + 1));
            std::cout << format_class(
                classical_product_oracle(rs, shape.parabolic(), u, v, shape.k(), nullptr), shape,
                format);
        } else if (*gia) {
            FlagShape shape = FlagShape::grassmannian(gi_m, gi_np1);
            std::vector<int> parts = parse_steps(gi_lam.substr(1, gi_lam.size() - 2));
            Partition lam(std::move(parts), gi_m, gi_np1);
            std::cout << format_class(giambelli_class(gi_m, gi_np1 - 1, lam), shape, format);
        } else if (*lift) {
            RootSystem rs = RootSystem::type_a(lf_n);
            FlagShape shape(lf_n, parse_steps(lf_flag));
            std::vector<int> lam = parse_steps(lf_lam);
            QDeg lam_p;
            if (static_cast<int>(lam.size()) == shape.k()) {
                lam_p.assign(lam.begin(), lam.end());
            } else if (static_cast<int>(lam.size()) == lf_n) {
                for (int s : shape.steps) lam_p.push_back(lam[s - 1]);
            } else {
                throw std::invalid_argument("--lambda needs k or n coordinates");
            }
            LiftResult res = pw_lift(rs, shape.parabolic(), lam_p);
            std::cout << "lambda_P =";
            for (int d : lam_p) std::cout << ' ' << d;
            std::cout << "\nlambda_B =";
            for (int d : res.lambda_b) std::cout << ' ' << d;
            std::cout << "\ndelta_P' = {";
            for (size_t j = 0; j < res.delta_p_prime.size(); ++j)
                std::cout << (j ? "," : "") << res.delta_p_prime[j];
            std::cout << "}\nomega_P*omega_P' = " << rs.to_string(res.omega_factor)
                      << "  (length " << res.omega_factor.length() << ")\n"
                      << "q-degree = " << gp_qdegree(shape, lam_p) << "\n";
        } else if (*ver) {
            VerifyOptions opts;
            opts.max_ambient = max_n;
            opts.jobs = jobs;
            return run_suite(suite, std::cout, opts) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
