#include "wcount/bounds.hpp"

#include "wcount/errors.hpp"
#include "wcount/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace wcount {

namespace {

void require_field_order(std::uint64_t q, const char* op) {
    if (!is_prime_power(q)) throw NotAPrimePower(std::string(op) + ": q = " + std::to_string(q) + " is not a prime power");
}

BigInt power(std::uint64_t base, std::uint64_t exponent) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) r *= base;
    return r;
}

}  // namespace

BigInt upper_prop2(std::uint64_t k, std::uint64_t q) {
    if (k < 1) throw OutOfRange("upper_prop2: k must be >= 1");
    require_field_order(q, "upper_prop2");
    return (power(q, k) - 1) / (q - 1);
}

BigInt prop4_formula(std::uint64_t k, std::uint64_t q) {
    if (k < 2) throw OutOfRange("prop4_formula: k must be >= 2");
    const BigInt scale = power(2, k - 2);
    return scale * q + scale + 1;
}

BigInt lower_prop4(std::uint64_t k, std::uint64_t q) {
    if (k < 2) throw OutOfRange("lower_prop4: k must be >= 2");
    require_field_order(q, "lower_prop4");
    BigInt best = k;
    if (k == 2) best = std::max(best, BigInt(q + 1));
    if (k >= 3) best = std::max(best, prop4_formula(k, q));
    return best;
}

BigInt lower_best(std::uint64_t k, std::uint64_t q) {
    if (k < 1) throw OutOfRange("lower_best: k must be >= 1");
    require_field_order(q, "lower_best");
    return k == 1 ? BigInt(1) : lower_prop4(k, q);
}

BigInt delsarte_size(std::uint64_t n, std::uint64_t s, std::uint64_t q) {
    if (s > n) throw PreconditionViolated("delsarte_size: need s <= n");
    if (q < 2) throw OutOfRange("delsarte_size: q must be >= 2");
    BigInt total = 0, binom = 1, scale = 1;
    for (std::uint64_t j = 0; j <= s; ++j) {
        total += binom * scale;
        binom = binom * (n - j) / (j + 1);
        scale *= (q - 1);
    }
    return total;
}

std::uint64_t delsarte_min_s(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
    if (k < 1 || k > n) throw PreconditionViolated("delsarte_min_s: need 1 <= k <= n");
    const BigInt target = power(q, k);
    BigInt total = 0, binom = 1, scale = 1;
    for (std::uint64_t s = 0; s <= n; ++s) {
        total += binom * scale;
        if (total >= target) return s;
        binom = binom * (n - s) / (s + 1);
        scale *= (q - 1);
    }
    throw Infeasible("delsarte_min_s: no s <= n reaches q^k");
}

BigInt delsarte_L_upper(std::uint64_t n, std::uint64_t /*k*/, std::uint64_t q, std::uint64_t s_observed) {
    if (s_observed > n) throw PreconditionViolated("delsarte_L_upper: need s <= n");
    return (delsarte_size(n, s_observed, q) - 1) / (q - 1);
}

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::upper_prop2: return "upper_prop2";
        case BoundKind::lower_prop3: return "lower_prop3";
        case BoundKind::lower_prop4: return "lower_prop4";
        case BoundKind::delsarte_min_s: return "delsarte_min_s";
        case BoundKind::delsarte_L_upper: return "delsarte_L_upper";
        case BoundKind::lemma3_length: return "lemma3_length";
    }
    return "unknown";
}

std::vector<BoundReport> bound_reports(std::uint64_t k, std::uint64_t q, std::optional<std::uint64_t> n) {
    std::vector<BoundReport> out;
    const BigInt upper = upper_prop2(k, q);
    out.push_back({BoundKind::upper_prop2, upper, std::nullopt, k, q});
    out.push_back({BoundKind::lower_prop3, BigInt(k), std::nullopt, k, q});
    if (k >= 2) out.push_back({BoundKind::lower_prop4, lower_prop4(k, q), std::nullopt, k, q});
    if (n) {
        out.push_back({BoundKind::lemma3_length, BigInt(*n), n, k, q});
        if (k <= *n) {
            out.push_back({BoundKind::delsarte_min_s, BigInt(delsarte_min_s(*n, k, q)), n, k, q});
            // L(n,k,q) <= min(n, upper), so that s gives a valid cap on L(k,q).
            const std::uint64_t s = upper < *n ? upper.convert_to<std::uint64_t>() : *n;
            out.push_back({BoundKind::delsarte_L_upper, delsarte_L_upper(*n, k, q, s), n, k, q});
        }
    }
    return out;
}

double entropy(std::uint64_t q, double y) {
    if (q < 2) throw DomainError("entropy: q must be >= 2");
    if (!(y >= 0.0 && y <= 1.0)) throw DomainError("entropy: argument outside [0, 1]");
    const double lnq = std::log(static_cast<double>(q));
    const double lnq1 = std::log(static_cast<double>(q - 1));
    if (y == 0.0) return 0.0;
    if (y == 1.0) return lnq1 / lnq;
    return (y * lnq1 - y * std::log(y) - (1.0 - y) * std::log1p(-y)) / lnq;
}

double t_fixed_point(std::uint64_t q) {
    if (q < 2) throw DomainError("t_fixed_point: q must be >= 2");
    auto f = [q](double x) { return entropy(q, x) - x; };
    // H is concave with infinite slope at 0, so H(x) - x changes sign once on (0, 1].
    constexpr int kGrid = 10000;
    const double eps = 1e-12;
    int changes = 0;
    double lo = 0, hi = 0;
    double prev_x = eps, prev = f(eps);
    for (int i = 1; i <= kGrid; ++i) {
        const double x = i == kGrid ? 1.0 : eps + (1.0 - eps) * i / kGrid;
        const double cur = f(x);
        if ((prev > 0) != (cur > 0)) {
            ++changes;
            lo = prev_x;
            hi = x;
        }
        prev_x = x;
        prev = cur;
    }
    if (changes != 1) throw NoRoot("t_fixed_point: expected one sign change, found " + std::to_string(changes));
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (f(mid) > 0 ? lo : hi) = mid;
    }
    const double t = std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
    if (std::abs(f(t)) > 1e-12) throw NoRoot("t_fixed_point: bisection did not converge");
    return t;
}

double entropy_inverse(std::uint64_t q, double z) {
    if (q < 2) throw DomainError("entropy_inverse: q must be >= 2");
    if (!(z >= 0.0 && z <= 1.0)) throw DomainError("entropy_inverse: argument outside [0, 1]");
    const double top = static_cast<double>(q - 1) / static_cast<double>(q);
    if (z == 0.0) return 0.0;
    if (z == 1.0) return top;
    double lo = 0.0, hi = top;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (entropy(q, mid) < z ? lo : hi) = mid;
    }
    return std::abs(entropy(q, lo) - z) <= std::abs(entropy(q, hi) - z) ? lo : hi;
}

std::string CurvePolyline::to_csv() const {
    std::ostringstream os;
    os << "segment_label,R,L\n";
    char buf[64];
    for (const auto& seg : segments) {
        for (const auto& p : seg.points) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", p.R, p.L);
            os << seg.label << ',' << buf << '\n';
        }
    }
    return os.str();
}

CurvePolyline domain_boundary(std::uint64_t q, std::size_t points_per_segment) {
    if (points_per_segment < 2) throw PreconditionViolated("domain_boundary: need at least 2 points per segment");
    CurvePolyline poly;
    poly.q = q;
    poly.t = t_fixed_point(q);
    const double t = poly.t;
    const double top = static_cast<double>(q - 1) / static_cast<double>(q);
    const std::size_t m = points_per_segment;
    auto lerp = [m](double a, double b, std::size_t i) { return i + 1 == m ? b : a + (b - a) * static_cast<double>(i) / (m - 1); };

    CurveSegment diagonal{"diagonal", {}}, horizontal{"horizontal", {}}, vertical{"vertical", {}},
        inverse{"entropy_inverse", {}};
    for (std::size_t i = 0; i < m; ++i) {
        const double r = lerp(0.0, t, i);
        diagonal.points.push_back({r, r});
        horizontal.points.push_back({lerp(t, 1.0, i), t});
        vertical.points.push_back({1.0, lerp(t, top, i)});
        const double r4 = lerp(1.0, 0.0, i);
        inverse.points.push_back({r4, entropy_inverse(q, r4)});
    }
    poly.segments = {std::move(diagonal), std::move(horizontal), std::move(vertical), std::move(inverse)};
    return poly;
}

std::pair<double, double> lambda_interval(std::uint64_t q) {
    if (q < 2) throw DomainError("lambda_interval: q must be >= 2");
    if (q == 2) return {1.0, 1.0};
    return {std::log(2.0) / std::log(static_cast<double>(q)), 1.0};
}

}  // namespace wcount
