#include "hwcl/cocycle.hpp"

#include <algorithm>
#include <cmath>

#include "hwcl/errors.hpp"

namespace hwcl {

DiagonalElement DiagonalElement::constant(double theta, long long k) {
    return DiagonalElement(std::vector<double>(static_cast<std::size_t>(k), theta));
}

DiagonalElement DiagonalElement::alternating(double theta, long long k) {
    std::vector<double> phases(static_cast<std::size_t>(k));
    for (long long j = 1; j <= k; ++j)
        phases[static_cast<std::size_t>(j - 1)] = (j % 2 == 0) ? theta : -theta;
    return DiagonalElement(std::move(phases));
}

std::complex<double> DiagonalElement::u(long long j) const {
    const double t = phase(j);
    return {std::cos(t), std::sin(t)};
}

DiagonalElement DiagonalElement::composed(const DiagonalElement& other) const {
    std::vector<double> phases(static_cast<std::size_t>(std::max(support(), other.support())));
    for (long long j = 1; j <= static_cast<long long>(phases.size()); ++j)
        phases[static_cast<std::size_t>(j - 1)] = phase(j) + other.phase(j);
    return DiagonalElement(std::move(phases));
}

Eigen::MatrixXcd DiagonalElement::matrix(int n) const {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 1; j <= n; ++j) g(j - 1, j - 1) = u(j);
    return g;
}

std::complex<double> CocycleWitness::coefficient(long long k) const {
    switch (rule) {
    case CoefficientRule::InverseSqrt: return 1.0 / std::sqrt(static_cast<double>(k));
    case CoefficientRule::Inverse: return 1.0 / static_cast<double>(k);
    case CoefficientRule::Alternating: return (k % 2 == 0) ? 1.0 : -1.0;
    case CoefficientRule::Custom:
        if (k < 1 || k > static_cast<long long>(custom.size()))
            throw std::out_of_range("CocycleWitness: custom coefficient index out of range");
        return custom[static_cast<std::size_t>(k - 1)];
    }
    throw std::logic_error("CocycleWitness: unreachable rule");
}

double CocycleWitness::coefficient_sq(long long k) const {
    switch (rule) {
    case CoefficientRule::InverseSqrt: return 1.0 / static_cast<double>(k);
    case CoefficientRule::Inverse: return 1.0 / (static_cast<double>(k) * static_cast<double>(k));
    case CoefficientRule::Alternating: return 1.0;
    case CoefficientRule::Custom: return std::norm(coefficient(k));
    }
    throw std::logic_error("CocycleWitness: unreachable rule");
}

namespace {

double phase_angle(const Partition& plus, const Partition& minus, const DiagonalElement& g,
                   long long k) {
    double angle = 0.0;
    for (std::size_t i = 0; i < plus.length(); ++i)
        angle += static_cast<double>(plus.parts()[i]) * g.phase(k + static_cast<long long>(i) + 1);
    for (std::size_t i = 0; i < minus.length(); ++i)
        angle -= static_cast<double>(minus.parts()[i]) * g.phase(k + static_cast<long long>(i) + 2);
    return angle;
}

// |e^{i angle} - 1|^2 = 4 sin^2(angle / 2)
double phase_defect_sq(double angle) {
    const double s = std::sin(angle / 2.0);
    return 4.0 * s * s;
}

} // namespace

std::complex<double> diagonal_phase(const FiniteWeight& lam, const DiagonalElement& g, long long k) {
    if (k < 1) throw std::out_of_range("diagonal_phase: k must be >= 1");
    const auto [plus, minus] = split_signs(lam);
    const double angle = phase_angle(plus, minus, g, k);
    return {std::cos(angle), std::sin(angle)};
}

double witness_norm_sq(const CocycleWitness& w, const DiagonalElement& g) {
    if (w.weight.size_abs() < 1)
        throw std::invalid_argument("witness_norm: weight must satisfy |lambda| >= 1");
    const auto [plus, minus] = split_signs(w.weight);
    double total = 0.0;
    // phase is 1 once every touched index k+1, ... lies beyond the support
    for (long long k = g.support() - 1; k >= 1; --k)
        total += w.coefficient_sq(k) * phase_defect_sq(phase_angle(plus, minus, g, k));
    return total;
}

double witness_norm(const CocycleWitness& w, const DiagonalElement& g) {
    return std::sqrt(witness_norm_sq(w, g));
}

const char* trend_name(Trend t) {
    return t == Trend::Divergent ? "divergent-trend" : "bounded-trend";
}

namespace {

DiagonalElement pattern_element(PhasePattern pattern, double theta, long long k) {
    return pattern == PhasePattern::Constant ? DiagonalElement::constant(theta, k)
                                             : DiagonalElement::alternating(theta, k);
}

// Magnitude of the bulk angle: the angle picked up at shifts far inside
// the support, where every touched coordinate carries the full pattern.
double bulk_angle(const Partition& plus, const Partition& minus, PhasePattern pattern,
                  double theta) {
    if (pattern == PhasePattern::Constant)
        return theta * static_cast<double>(plus.size() - minus.size());
    double alt = 0.0;
    for (std::size_t i = 0; i < plus.length(); ++i)
        alt += ((i + 1) % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(plus.parts()[i]);
    for (std::size_t i = 0; i < minus.length(); ++i)
        alt += ((i + 1) % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(minus.parts()[i]);
    return theta * alt;
}

double fit_slope(const std::vector<long long>& ks, const std::vector<double>& ys,
                 long long k_min) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < k_min) continue;
        const double x = std::log(static_cast<double>(ks[i]));
        sx += x;
        sy += ys[i];
        sxx += x * x;
        sxy += x * ys[i];
        ++m;
    }
    if (m < 2) return 0.0;
    const double denom = m * sxx - sx * sx;
    return denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
}

} // namespace

GrowthReport growth_curve(const CocycleWitness& w, double theta, PhasePattern pattern,
                          std::vector<long long> ks) {
    if (ks.empty()) throw std::invalid_argument("growth_curve: need at least one k");
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (ks[i] < 2 || (i > 0 && ks[i] <= ks[i - 1]))
            throw std::invalid_argument("growth_curve: ks must be increasing and >= 2");

    const auto [plus, minus] = split_signs(w.weight);
    const double bulk = phase_defect_sq(bulk_angle(plus, minus, pattern, theta));
    if (bulk < 1e-12)
        throw numeric_error(
            "growth_curve: degenerate phase pattern, the bulk phase is identically 1 "
            "(balanced weights need --pattern alternating)");

    GrowthReport report;
    report.ks = std::move(ks);

    // widest index offset the witness touches at a given shift
    const long long span = std::max<long long>(static_cast<long long>(plus.length()),
                                               static_cast<long long>(minus.length()) + 1);

    // running sum A_m = sum_{n<=m} |a_n|^2 for the bulk closed form
    double coeff_partial = 0.0;
    long long coeff_upto = 0;

    for (const long long k : report.ks) {
        const DiagonalElement g = pattern_element(pattern, theta, k);
        const double sq = witness_norm_sq(w, g);
        report.norms_sq.push_back(sq);
        report.norms.push_back(std::sqrt(sq));

        // analytic reference: constant bulk term plus explicit boundary
        const long long bulk_max = k - span;
        while (coeff_upto < bulk_max) coeff_partial += w.coefficient_sq(++coeff_upto);
        double ref = (bulk_max >= 1) ? bulk * coeff_partial : 0.0;
        for (long long n = std::max<long long>(1, bulk_max + 1); n <= k - 1; ++n)
            ref += w.coefficient_sq(n) * phase_defect_sq(phase_angle(plus, minus, g, n));
        report.reference.push_back(ref);
    }

    const long long last_decade = report.ks.back() / 10;
    report.slope = fit_slope(report.ks, report.norms_sq, last_decade);
    report.slope_reference = fit_slope(report.ks, report.reference, last_decade);
    const double margin = std::max(0.5 * report.slope_reference, 0.01);
    report.verdict = report.slope >= margin ? Trend::Divergent : Trend::Bounded;
    return report;
}

Eigen::VectorXcd coboundary(const Eigen::VectorXcd& v, const RepHandle& pi,
                            const Eigen::MatrixXcd& g) {
    const Eigen::MatrixXcd rep = pi(g);
    if (rep.cols() != v.size())
        throw std::invalid_argument("coboundary: representation/vector dimension mismatch");
    return rep * v - v;
}

double verify_cocycle(const CocycleHandle& beta, const RepHandle& pi,
                      const std::vector<std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>>& samples) {
    double worst = 0.0;
    for (const auto& [g, h] : samples) {
        const Eigen::VectorXcd lhs = beta(g * h);
        const Eigen::VectorXcd bg = beta(g);
        const Eigen::VectorXcd bh = beta(h);
        const Eigen::MatrixXcd rep = pi(g);
        if (rep.cols() != bh.size() || rep.rows() != lhs.size() || bg.size() != lhs.size())
            throw std::invalid_argument("verify_cocycle: inconsistent cocycle dimensions");
        worst = std::max(worst, (lhs - (bg + rep * bh)).norm());
    }
    return worst;
}

DecompositionReport conditional_decompose(const ConditionalData& data, double tol) {
    const std::size_t count = data.v.size();
    if (data.fixed_projectors.size() != count)
        throw std::invalid_argument("conditional_decompose: need one projector per vector");
    for (std::size_t n = 0; n < count; ++n) {
        const Eigen::Index dim = data.v[0].size();
        if (data.v[n].size() != dim || data.fixed_projectors[n].rows() != dim ||
            data.fixed_projectors[n].cols() != dim)
            throw std::invalid_argument(
                "conditional_decompose: vectors and projectors must share one dimension");
    }

    for (std::size_t n = 0; n < count; ++n) {
        const double defect = (data.fixed_projectors[n] * data.v[n]).norm();
        if (defect > tol)
            throw numeric_error("conditional_decompose: v_" + std::to_string(n + 1) +
                                " is not orthogonal to its fixed subspace (defect " +
                                std::to_string(defect) + ")");
    }
    for (std::size_t m = 0; m < count; ++m)
        for (std::size_t n = m + 1; n < count; ++n) {
            const Eigen::VectorXcd diff = data.v[n] - data.v[m];
            const double defect = (diff - data.fixed_projectors[m] * diff).norm();
            if (defect > tol)
                throw numeric_error("conditional_decompose: compatibility violated at (m,n) = (" +
                                    std::to_string(m + 1) + "," + std::to_string(n + 1) +
                                    "), defect " + std::to_string(defect));
        }

    DecompositionReport report;
    for (std::size_t k = 0; k < count; ++k)
        report.w.push_back(k == 0 ? data.v[0] : Eigen::VectorXcd(data.v[k] - data.v[k - 1]));
    for (std::size_t j = 0; j < count; ++j)
        for (std::size_t k = j + 1; k < count; ++k)
            report.max_cross_inner =
                std::max(report.max_cross_inner, std::abs(report.w[j].dot(report.w[k])));
    return report;
}

const char* tail_verdict_name(TailVerdict v) {
    switch (v) {
    case TailVerdict::SquareSummable: return "square-summable";
    case TailVerdict::Divergent: return "divergent";
    case TailVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

TailReport coboundary_criterion(const std::function<double(long long)>& w_norm,
                                long long horizon, double tol) {
    if (horizon < 4) throw std::invalid_argument("coboundary_criterion: horizon too small");
    TailReport report;
    const long long half = horizon / 2;
    const long long quarter = horizon / 4;
    double s = 0.0, s_quarter = 0.0, s_half = 0.0;
    long long next_sample = 1;
    for (long long k = 1; k <= horizon; ++k) {
        const double nk = w_norm(k);
        s += nk * nk;
        if (k == quarter) s_quarter = s;
        if (k == half) s_half = s;
        if (k == next_sample || k == horizon) {
            report.partials.emplace_back(k, s);
            next_sample *= 2;
        }
    }
    report.total = s;
    report.tail = s - s_half;
    const double previous = s_half - s_quarter;
    if (report.tail < tol)
        report.verdict = TailVerdict::SquareSummable;
    else if (report.tail >= 10.0 * tol && report.tail >= 0.5 * previous)
        report.verdict = TailVerdict::Divergent;
    else
        report.verdict = TailVerdict::Inconclusive;
    return report;
}

ConjugationReport conjugation_cocycle_class(const std::function<std::complex<double>(long long)>& a,
                                            long long horizon, bool same_representation,
                                            double tol) {
    ConjugationReport report;
    if (same_representation) {
        std::complex<double> sum = 0.0;
        const long long half = horizon / 2;
        for (long long n = half + 1; n <= horizon; ++n) sum += a(n);
        report.constant = sum / static_cast<double>(horizon - half);
    }
    const std::complex<double> c = report.constant;
    report.tail = coboundary_criterion([&a, c](long long k) { return std::abs(a(k) - c); },
                                       horizon, tol);
    report.verdict = report.tail.verdict;
    return report;
}

Eigen::VectorXcd matrix_model_cocycle(const CocycleWitness& w, int ambient, int truncation,
                                      const Eigen::MatrixXcd& g, const TensorCaps& caps) {
    const auto [plus, minus] = split_signs(w.weight);
    if (!minus.empty())
        throw std::invalid_argument("matrix_model_cocycle: weight must be pure nonnegative");
    if (truncation < 1)
        throw std::invalid_argument("matrix_model_cocycle: truncation must be >= 1");
    if (g.rows() != ambient || g.cols() != ambient)
        throw std::invalid_argument("matrix_model_cocycle: group element has wrong dimension");

    const int m = static_cast<int>(plus.size());
    long long dim = 1;
    for (int t = 0; t < m; ++t) {
        if (dim > caps.max_dim / ambient)
            throw cap_exceeded("matrix_model_cocycle: tensor dimension exceeds the cap");
        dim *= ambient;
    }

    Eigen::VectorXcd beta = Eigen::VectorXcd::Zero(dim);
    for (int k = 1; k <= truncation; ++k) {
        const Eigen::VectorXcd e = basis_vector(k, plus, ambient).dense();
        beta += w.coefficient(k) * (apply_tensor_power(g, e, m) - e);
    }
    return beta;
}

} // namespace hwcl
