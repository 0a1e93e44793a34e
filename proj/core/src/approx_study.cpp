#include "chebfilter/approx_study.hpp"

#include <cmath>
#include <sstream>

#include "chebfilter/bernstein.hpp"
#include "chebfilter/chebyshev.hpp"
#include "chebfilter/csv.hpp"
#include "chebfilter/error.hpp"
#include "chebfilter/interpolation.hpp"

namespace chebfilter {

double max_grid_error(const ScalarFn& f, const ScalarFn& approx, std::size_t grid_size) {
    if (grid_size < 2) throw Error("max_grid_error: grid_size must be >= 2");
    double worst = 0.0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double x =
            -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        worst = std::max(worst, std::abs(f(x) - approx(x)));
    }
    return worst;
}

std::optional<double> coefficient_decay_rate(const FilterCoefficients& coeffs) {
    if (coeffs.basis != Basis::Chebyshev) {
        throw Error("coefficient_decay_rate: expects a Chebyshev series");
    }
    if (coeffs.order < 8) throw Error("coefficient_decay_rate: order must be >= 8");

    std::vector<double> logk;
    std::vector<double> logw;
    for (std::size_t k = 2; k < coeffs.weights.size(); ++k) {
        const double mag = std::abs(coeffs.weights[k]);
        if (mag < 1e-14) continue;
        logk.push_back(std::log(static_cast<double>(k)));
        logw.push_back(std::log(mag));
    }
    if (logk.size() < 5) return std::nullopt;

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < logk.size(); ++i) {
        mx += logk[i];
        my += logw[i];
    }
    mx /= static_cast<double>(logk.size());
    my /= static_cast<double>(logk.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < logk.size(); ++i) {
        sxy += (logk[i] - mx) * (logw[i] - my);
        sxx += (logk[i] - mx) * (logk[i] - mx);
    }
    if (sxx == 0.0) return std::nullopt;
    return sxy / sxx;
}

std::vector<ErrorStudyRow> run_error_study(const ScalarFn& target,
                                           const std::vector<std::string>& bases,
                                           const std::vector<std::size_t>& orders,
                                           std::size_t grid_size) {
    std::vector<ErrorStudyRow> rows;
    for (const std::string& basis : bases) {
        for (std::size_t order : orders) {
            ErrorStudyRow row;
            row.basis = basis;
            row.order = order;
            if (basis == "chebyshev") {
                const FilterCoefficients c = cheb_interpolate(target, order);
                row.max_error = max_grid_error(
                    target, [&](double x) { return evaluate(c, x); }, grid_size);
                row.node_scheme = "chebyshev";
            } else if (basis == "lagrange") {
                const std::vector<double> nodes = equispaced_nodes(order);
                std::vector<double> values(nodes.size());
                for (std::size_t j = 0; j < nodes.size(); ++j) values[j] = target(nodes[j]);
                const BarycentricInterpolant p(nodes, values);
                row.max_error = max_grid_error(target, p, grid_size);
                row.node_scheme = "equispaced";
            } else if (basis == "monomial") {
                const FilterCoefficients c =
                    vandermonde_interpolate(target, equispaced_nodes(order));
                row.max_error = max_grid_error(
                    target, [&](double x) { return evaluate(c, x); }, grid_size);
                row.node_scheme = "equispaced";
            } else if (basis == "bernstein") {
                const FilterCoefficients c = bernstein_approximate(target, order);
                row.max_error = max_grid_error(
                    target, [&](double x) { return evaluate(c, x); }, grid_size);
                row.node_scheme = "equispaced";
            } else {
                throw Error("error study: unknown basis '" + basis + "'");
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string error_study_csv(const std::vector<ErrorStudyRow>& rows) {
    std::ostringstream out;
    out << "basis,K,max_error,node_scheme\n";
    for (const ErrorStudyRow& r : rows) {
        out << r.basis << ',' << r.order << ',' << format_number(r.max_error) << ','
            << r.node_scheme << '\n';
    }
    return out.str();
}

ScalarFn make_named_function(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (name == "runge") {
        return [](double x) { return 1.0 / (1.0 + 25.0 * x * x); };
    }
    if (name == "step") {
        double tau = 0.0;
        if (!arg.empty()) tau = std::stod(arg);
        return [tau](double x) { return x <= tau ? 1.0 : 0.0; };
    }
    if (name == "exp_decay") {
        double a = 1.0;
        if (!arg.empty()) a = std::stod(arg);
        return [a](double x) { return std::exp(-a * (x + 1.0)); };
    }
    if (name == "poly") {
        std::vector<double> coeffs;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) coeffs.push_back(std::stod(tok));
        }
        if (coeffs.empty()) throw Error("function spec: poly needs coefficients, e.g. poly:1,0,2");
        const FilterCoefficients c(Basis::Monomial, std::move(coeffs));
        return [c](double x) { return evaluate(c, x); };
    }
    throw Error("function spec: unknown function '" + spec + "'");
}

}  // namespace chebfilter
