#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wcount {

using BigInt = boost::multiprecision::cpp_int;

// Exact combinatorial bounds on the number of distinct nonzero weights.

/// (q^k - 1)/(q - 1): no code of dimension k has more distinct nonzero weights.
BigInt upper_prop2(std::uint64_t k, std::uint64_t q);

/// Best of the stacked constructive lower bounds on L(k,q) for k >= 2: k itself, q+1 when
/// k = 2, and 2^(k-2) q + 2^(k-2) + 1 when k >= 3. Throws OutOfRange for k < 2.
BigInt lower_prop4(std::uint64_t k, std::uint64_t q);

/// The closed form 2^(k-2) q + 2^(k-2) + 1 alone; k >= 2.
BigInt prop4_formula(std::uint64_t k, std::uint64_t q);

/// Valid lower bound on L(k,q) for every k >= 1.
BigInt lower_best(std::uint64_t k, std::uint64_t q);

/// sum_{j=0}^{s} C(n, j) (q-1)^j, the size limit for codes with s distances.
BigInt delsarte_size(std::uint64_t n, std::uint64_t s, std::uint64_t q);

/// Smallest s with delsarte_size(n, s, q) >= q^k. Requires 1 <= k <= n.
std::uint64_t delsarte_min_s(std::uint64_t n, std::uint64_t k, std::uint64_t q);

/// (delsarte_size(n, s, q) - 1) / (q - 1), rounded down.
BigInt delsarte_L_upper(std::uint64_t n, std::uint64_t k, std::uint64_t q, std::uint64_t s_observed);

enum class BoundKind { upper_prop2, lower_prop3, lower_prop4, delsarte_min_s, delsarte_L_upper, lemma3_length };

std::string to_string(BoundKind kind);

struct BoundReport {
    BoundKind kind;
    BigInt value;
    std::optional<std::uint64_t> n;
    std::uint64_t k;
    std::uint64_t q;
};

/// Every bound that applies to (k, q), plus the length-dependent ones when n is given.
std::vector<BoundReport> bound_reports(std::uint64_t k, std::uint64_t q, std::optional<std::uint64_t> n = std::nullopt);

// Entropy and the asymptotic domain boundary.

/// q-ary entropy, continuously extended to H(0) = 0 and H(1) = log_q(q-1). Throws DomainError outside [0,1].
double entropy(std::uint64_t q, double y);

/// The nonzero solution of H_q(x) = x, by bisection.
double t_fixed_point(std::uint64_t q);

/// The y in [0, (q-1)/q] with H_q(y) = z; z in [0,1].
double entropy_inverse(std::uint64_t q, double z);

struct CurvePoint {
    double R;
    double L;
};

struct CurveSegment {
    std::string label;
    std::vector<CurvePoint> points;
};

/// Outer boundary of the achievable (R, L) region, traced counterclockwise in four segments.
struct CurvePolyline {
    std::uint64_t q = 0;
    double t = 0;
    std::vector<CurveSegment> segments;

    /// "segment_label,R,L" header and one row per point.
    std::string to_csv() const;
};

CurvePolyline domain_boundary(std::uint64_t q, std::size_t points_per_segment);

/// (log_q 2, 1), exactly (1, 1) for q = 2.
std::pair<double, double> lambda_interval(std::uint64_t q);

}  // namespace wcount
