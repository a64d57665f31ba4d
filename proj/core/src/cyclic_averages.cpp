#include "polydual/cyclic_averages.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "polydual/errors.hpp"
#include "summation.hpp"

namespace polydual {

namespace {

using PascalTable = std::array<std::array<std::uint64_t, kMaxBinomialRow + 1>, kMaxBinomialRow + 1>;

constexpr PascalTable make_pascal() {
    PascalTable t{};
    for (int n = 0; n <= kMaxBinomialRow; ++n) {
        t[n][0] = 1;
        for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
}

constexpr PascalTable kPascal = make_pascal();

void require_supported_n(int n) {
    if (n < 3) {
        throw InvalidArgumentError("cyclic averages need n >= 3", {{"n", static_cast<double>(n)}});
    }
    if (n - 1 > kMaxBinomialRow) {
        throw InvalidArgumentError("n exceeds the exact binomial table",
                                   {{"n", static_cast<double>(n)},
                                    {"max_n", static_cast<double>(kMaxBinomialRow + 1)}});
    }
}

double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// C(m,2k) * C(2k,k) as a double; each factor is exact in uint64.
double central_weight(int m, int k) {
    return static_cast<double>(kPascal[m][2 * k]) * static_cast<double>(kPascal[2 * k][k]);
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (n < 0 || n > kMaxBinomialRow) {
        throw InvalidArgumentError("binomial row out of range", {{"n", static_cast<double>(n)}});
    }
    if (k < 0 || k > n) return 0;
    return kPascal[n][k];
}

double power_average(const DistanceSpec& d, int m) {
    if (d.n() == 0 || m < 1) {
        throw InvalidArgumentError("power_average needs a nonempty list and m >= 1");
    }
    detail::CompensatedSum sum;
    for (double di : d.values()) sum.add(ipow(di * di, m));
    return sum.value() / static_cast<double>(d.n());
}

CyclicAverages averages_from_distances(const DistanceSpec& d) {
    const int n = static_cast<int>(d.n());
    if (n < 3) {
        throw InvalidArgumentError("cyclic averages need n >= 3", {{"n", static_cast<double>(n)}});
    }
    std::vector<double> squares;
    squares.reserve(d.n());
    for (double di : d.values()) squares.push_back(di * di);
    std::vector<double> powers = squares;

    CyclicAverages out{n, {}};
    out.values.reserve(static_cast<std::size_t>(n - 1));
    for (int m = 1; m <= n - 1; ++m) {
        detail::CompensatedSum sum;
        for (double p : powers) sum.add(p);
        out.values.push_back(sum.value() / static_cast<double>(n));
        for (std::size_t i = 0; i < powers.size(); ++i) powers[i] *= squares[i];
    }
    return out;
}

CyclicAverages averages_from_RL(int n, double R, double L) {
    require_supported_n(n);
    if (!(R >= 0.0) || !(L >= 0.0) || !std::isfinite(R) || !std::isfinite(L)) {
        throw InvalidArgumentError("R and L must be finite and nonnegative", {{"R", R}, {"L", L}});
    }
    const double sum_sq = R * R + L * L;
    const double prod_sq = (R * L) * (R * L);

    CyclicAverages out{n, {}};
    out.values.reserve(static_cast<std::size_t>(n - 1));
    for (int m = 1; m <= n - 1; ++m) {
        detail::CompensatedSum sum;
        for (int k = 0; k <= m / 2; ++k) {
            sum.add(central_weight(m, k) * ipow(prod_sq, k) * ipow(sum_sq, m - 2 * k));
        }
        out.values.push_back(sum.value());
    }
    return out;
}

ConsistencyReport check_consistency(const CyclicAverages& avgs, double tol) {
    require_supported_n(avgs.n);
    if (avgs.values.size() != static_cast<std::size_t>(avgs.n - 1)) {
        throw InvalidArgumentError("cyclic averages must have n-1 entries",
                                   {{"n", static_cast<double>(avgs.n)},
                                    {"entries", static_cast<double>(avgs.values.size())}});
    }
    const double s2 = avgs.s2();
    const double s4 = avgs.s4();
    // Half the moment gap is R^2 L^2.
    const double gap = s4 - s2 * s2;

    ConsistencyReport report;
    report.moment_gap = gap;
    report.moment_ok = s4 >= s2 * s2 * (1.0 - tol);
    report.pass = report.moment_ok;

    for (int m = 3; m <= avgs.n - 1; ++m) {
        detail::CompensatedSum sum;
        for (int k = 0; k <= m / 2; ++k) {
            sum.add(central_weight(m, k) * std::ldexp(ipow(gap, k), -k) * ipow(s2, m - 2 * k));
        }
        ConsistencyTerm term;
        term.m = m;
        term.actual = avgs.at(m);
        term.expected = sum.value();
        term.residual = term.actual - term.expected;
        term.pass = std::abs(term.residual) <=
                    tol * std::max(std::abs(term.actual), std::abs(term.expected));
        report.pass = report.pass && term.pass;
        report.terms.push_back(term);
    }
    return report;
}

}  // namespace polydual
