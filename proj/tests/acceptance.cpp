// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "glaisher/glaisher.hpp"

using namespace glaisher;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<std::string()> check;  // empty string = pass, else reason
};

std::string fmt(double v) { return format_double(v); }

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> grid;
    const double step = (std::log(hi) - std::log(lo)) / (n - 1);
    for (int i = 0; i < n; ++i) grid.push_back(std::exp(std::log(lo) + i * step));
    grid.back() = hi;
    return grid;
}

struct ProcessResult {
    int code;
    std::string out;
};

ProcessResult run_binary(const std::string& args) {
    const std::string command = std::string(GLAISHER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buffer[4096];
    std::size_t n;
    while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string oracle_construction() {
    const OracleConstruction o = construct_oracle();
    std::ostringstream why;
    if (o.agreement() > 1e-11) why << "paths disagree by " << fmt(o.agreement()) << "; ";
    if (std::fabs(o.sequence_path - kLnAOracle) > 1e-11) why << "sequence path " << fmt(o.sequence_path) << "; ";
    if (std::fabs(o.quadrature_path - kLnAOracle) > 1e-11) why << "quadrature path " << fmt(o.quadrature_path);
    return why.str();
}

std::string four_way_agreement() {
    std::vector<double> values;
    std::ostringstream why;
    for (Method m : kIntegralMethods) {
        const ConstantEstimate e = estimate(m, 1e-9);
        values.push_back(e.ln_A);
        if (std::fabs(e.ln_A - kLnAOracle) > 4e-9) why << to_string(m) << " off by " << fmt(e.ln_A - kLnAOracle) << "; ";
    }
    for (double a : values) {
        for (double b : values) {
            if (std::fabs(a - b) > 4e-9) {
                why << "pairwise spread " << fmt(std::fabs(a - b));
                return why.str();
            }
        }
    }
    return why.str();
}

std::string half_integral_identity() {
    const double r = identity_residual_eq4(1e-10);
    return std::fabs(r) <= 1e-9 ? "" : "residual " + fmt(r);
}

std::string binet_identity() {
    double worst = 0.0;
    for (double x : {0.25, 0.5, 1.0, 2.0, 5.0}) {
        const double theta = binet_theta(x, 1e-10).value;
        const double stirling = x * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi * x);
        worst = std::max(worst, std::fabs(log_gamma_plus_one(x) - (stirling + theta)));
    }
    std::string why;
    if (worst > 1e-9) why += "max residual " + fmt(worst) + "; ";
    const double half = binet_theta(0.5, 1e-10).value;
    if (std::fabs(half - 0.1534264098) > 1e-8) why += "theta(0.5) = " + fmt(half);
    return why;
}

std::string malmsten_formula() {
    double worst = 0.0;
    for (double z : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
        worst = std::max(worst, std::fabs(malmsten_log_gamma(z, 1e-10).value - log_gamma_plus_one(z)));
    }
    return worst <= 1e-9 ? "" : "max residual " + fmt(worst);
}

std::string form_equivalence() {
    double worst = 0.0;
    for (double t : log_grid(1e-3, 50.0, 1000)) {
        const double b12 = binet_integrand(t, BinetForm::form12);
        const double b13 = binet_integrand(t, BinetForm::form13);
        const double m18 = malmsten_integrand(t, MalmstenForm::form18);
        const double m19 = malmsten_integrand(t, MalmstenForm::form19);
        worst = std::max({worst, std::fabs(b12 - b13) / std::fabs(b13), std::fabs(m18 - m19) / std::fabs(m19)});
    }
    std::string why;
    if (worst > 1e-12) why += "max relative gap " + fmt(worst) + "; ";
    for (BinetForm f : {BinetForm::form12, BinetForm::form13}) {
        if (std::fabs(binet_integrand(1e-9, f) - 1.0 / 24.0) > 1e-10) why += "binet limit; ";
    }
    for (MalmstenForm f : {MalmstenForm::form18, MalmstenForm::form19}) {
        if (std::fabs(malmsten_integrand(1e-9, f) + 1.0 / 24.0) > 1e-10) why += "malmsten limit; ";
    }
    return why;
}

std::string convergence_claim() {
    const double Ts[] = {25.0, 50.0, 100.0, 200.0};
    const auto binet = sweep_truncation(Method::binet, Ts, 1e-10);
    std::string why;
    const double at100 = binet[2].abs_error;
    if (at100 < 3.3e-3 / 2.0 || at100 > 3.3e-3 * 2.0) why += "binet T=100 error " + fmt(at100) + "; ";
    double sxy = 0.0, sxx = 0.0;
    for (const ConvergenceRecord& r : binet) {
        sxy += r.abs_error / r.truncation_T;
        sxx += 1.0 / (r.truncation_T * r.truncation_T);
    }
    const double slope = sxy / sxx;
    if (std::fabs(slope - 1.0 / 3.0) > 0.25 / 3.0) why += "1/T coefficient " + fmt(slope) + "; ";

    const double forty[] = {40.0};
    const double m40 = sweep_truncation(Method::malmsten, forty, 1e-10)[0].abs_error;
    const double b40 = sweep_truncation(Method::binet, forty, 1e-10)[0].abs_error;
    if (m40 > 1e-12) why += "malmsten T=40 error " + fmt(m40) + "; ";
    if (m40 * 1e6 > b40) why += "gap at T=40 below six orders";
    return why;
}

std::string quadrature_suite() {
    std::string why;
    const auto honest = [&](const char* name, const QuadratureResult& r, double exact, double tol) {
        const double err = std::fabs(r.value - exact);
        if (!r.converged || err > tol) why += std::string(name) + " error " + fmt(err) + "; ";
        if (err > 10.0 * r.total_error() + 4e-16 * std::fabs(exact)) why += std::string(name) + " estimate dishonest; ";
    };
    honest("x^2", integrate_finite([](double x) { return x * x; }, 0.0, 1.0, 1e-12), 1.0 / 3.0, 1e-12);
    honest("ln x",
           integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0, 1e-10, EndpointFlag::log_singular_at_a),
           -1.0, 1e-10);
    IntegrandSpec expo;
    expo.eval = [](double t) { return std::exp(-t); };
    expo.limit_at_zero = ZeroLimit::finite(1.0);
    expo.tail_class = TailClass::exponential(1.0);
    expo.tail_bound = [](double T) { return std::exp(-T); };
    honest("exp(-t)", integrate_semi_infinite(expo, 1e-12), 1.0, 1e-12);
    honest("classical", integrate_semi_infinite(make_integrand_spec(IntegrandId::classical), 1e-11),
           -0.08271057185022546, 1e-11);
    honest("binet", integrate_semi_infinite(make_integrand_spec(IntegrandId::binet_form13), 1e-11),
           0.19510718545735218, 1e-11);
    honest("malmsten", integrate_semi_infinite(make_integrand_spec(IntegrandId::malmsten_form19), 1e-11),
           -0.04285374065029094, 1e-11);
    return why;
}

std::string cli_contract() {
    std::string why;
    const ProcessResult compare = run_binary("compare --tol 1e-9 --format json");
    if (compare.code != 0) why += "compare exit " + std::to_string(compare.code) + "; ";
    const ProcessResult convergence = run_binary("convergence");
    if (convergence.out.substr(0, convergence.out.find('\n')) != kConvergenceCsvHeader) why += "convergence header; ";
    if (run_binary("convergence").out != convergence.out) why += "convergence csv not reproducible; ";
    if (run_binary("compare --tol 1e-9 --format json").out != compare.out) why += "compare json not reproducible; ";
    const ProcessResult csv = run_binary("compare --tol 1e-9 --format csv");
    if (run_binary("compare --tol 1e-9 --format csv").out != csv.out) why += "compare csv not reproducible; ";

    // Spread from the machine-readable rows.
    std::istringstream rows(csv.out);
    std::string line;
    std::getline(rows, line);
    double lo = INFINITY, hi = -INFINITY;
    int count = 0;
    while (std::getline(rows, line)) {
        const auto first = line.find(',');
        const double v = std::stod(line.substr(first + 1, line.find(',', first + 1) - first - 1));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        ++count;
    }
    if (count != 4 || hi - lo > 4e-9) why += "spread " + fmt(hi - lo);
    return why;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "oracle construction: sequence and quadrature paths agree", oracle_construction},
        {2, "four-way agreement at tol 1e-9", four_way_agreement},
        {3, "half-interval log-gamma identity residual", half_integral_identity},
        {4, "Binet identity and theta(0.5)", binet_identity},
        {5, "Malmsten formula against log-gamma", malmsten_formula},
        {6, "integrand form equivalence and zero limits", form_equivalence},
        {7, "Malmsten tail converges much faster than Binet", convergence_claim},
        {8, "quadrature engine suite and estimate honesty", quadrature_suite},
        {9, "CLI contract", cli_contract},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string reason;
        try {
            reason = c.check();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        if (reason.empty()) {
            std::cout << "PASS " << c.id << ": " << c.title << '\n';
        } else {
            ++failures;
            std::cout << "FAIL " << c.id << ": " << c.title << " (" << reason << ")\n";
        }
    }
    return failures == 0 ? 0 : 1;
}
