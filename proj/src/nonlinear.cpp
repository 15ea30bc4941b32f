#include "wcount/nonlinear.hpp"

#include "wcount/errors.hpp"
#include "wcount/field.hpp"
#include "wcount/primes.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace wcount {

UnrestrictedCode::UnrestrictedCode(std::uint32_t alphabet_size, std::vector<std::vector<std::uint32_t>> words)
    : q_(alphabet_size), n_(0), words_(std::move(words)) {
    if (q_ < 2) throw PreconditionViolated("UnrestrictedCode: alphabet size must be >= 2");
    if (words_.size() < 2) throw PreconditionViolated("UnrestrictedCode: need at least two words");
    n_ = words_.front().size();
    for (const auto& w : words_) {
        if (w.size() != n_) throw PreconditionViolated("UnrestrictedCode: words of unequal length");
        for (auto s : w)
            if (s >= q_) throw OutOfRange("UnrestrictedCode: symbol outside the alphabet");
    }
    auto sorted = words_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionViolated("UnrestrictedCode: duplicate word");
}

std::size_t hamming_distance(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
    return d;
}

std::set<std::size_t> distance_spectrum(const UnrestrictedCode& code) {
    std::set<std::size_t> out;
    const auto& w = code.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) out.insert(hamming_distance(w[i], w[j]));
    return out;
}

StepCode::StepCode(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
    if (weights_.empty() || weights_.front() != 0) throw PreconditionViolated("StepCode: weights must start at 0");
    for (std::size_t i = 1; i < weights_.size(); ++i)
        if (weights_[i] <= weights_[i - 1]) throw PreconditionViolated("StepCode: weights must strictly increase");
}

StepCode sidon_chain(std::size_t M, SidonStrategy strategy) {
    if (M < 2) throw PreconditionViolated("sidon_chain: M must be >= 2");
    std::vector<std::uint64_t> w{0};
    if (strategy == SidonStrategy::doubling) {
        if (M > 63) throw OutOfRange("sidon_chain: doubling strategy overflows beyond M = 63");
        for (std::size_t i = 1; i < M; ++i) w.push_back((std::uint64_t{1} << i) - 1);
        return StepCode(std::move(w));
    }
    std::vector<bool> used;  // used[d]: difference d already present
    auto mark = [&](std::uint64_t d) {
        if (d >= used.size()) used.resize(2 * d + 1, false);
        used[d] = true;
    };
    auto is_used = [&](std::uint64_t d) { return d < used.size() && used[d]; };
    while (w.size() < M) {
        for (std::uint64_t cand = w.back() + 1;; ++cand) {
            std::vector<std::uint64_t> diffs;
            bool ok = true;
            for (auto x : w) {
                const std::uint64_t d = cand - x;
                if (is_used(d)) {
                    ok = false;
                    break;
                }
                diffs.push_back(d);
            }
            // Differences of cand against distinct earlier weights are distinct among themselves.
            if (!ok) continue;
            for (auto d : diffs) mark(d);
            w.push_back(cand);
            break;
        }
    }
    return StepCode(std::move(w));
}

UnrestrictedCode step_to_code(const StepCode& sc, std::uint32_t q) {
    if (q < 2) throw PreconditionViolated("step_to_code: q must be >= 2");
    const std::uint64_t n = sc.weights().back();
    std::vector<std::vector<std::uint32_t>> words;
    for (auto w : sc.weights()) {
        std::vector<std::uint32_t> word(n, 0);
        std::fill(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(w), 1u);
        words.push_back(std::move(word));
    }
    return UnrestrictedCode(q, std::move(words));
}

std::uint64_t n_upper(std::uint64_t M) {
    if (M < 2) throw PreconditionViolated("n_upper: M must be >= 2");
    return M * (M - 1) / 2;
}

bool is_perfect_difference_set(const DifferenceSet& ds) {
    const std::uint64_t v = ds.modulus;
    if (v == 0) return false;
    std::vector<std::uint64_t> r = ds.residues;
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) return false;
    if (!r.empty() && r.back() >= v) return false;
    std::vector<std::uint32_t> count(v, 0);
    for (auto a : r)
        for (auto b : r)
            if (a != b) ++count[(a + v - b) % v];
    for (std::uint64_t d = 1; d < v; ++d)
        if (count[d] != 1) return false;
    return true;
}

namespace {

// GF(s^3) as triples over GF(s) modulo a monic cubic.
class CubicExtension {
  public:
    using Elem = std::array<FieldElement, 3>;

    explicit CubicExtension(FieldPtr base) : f_(std::move(base)) {
        const std::uint32_t s = f_->order();
        for (std::uint64_t m = 0; m < std::uint64_t{s} * s * s; ++m) {
            Elem c{FieldElement{static_cast<std::uint32_t>(m % s)}, FieldElement{static_cast<std::uint32_t>(m / s % s)},
                   FieldElement{static_cast<std::uint32_t>(m / s / s)}};
            if (!has_root(c)) {
                low_ = c;
                return;
            }
        }
        throw Error("no irreducible cubic found (unreachable)");
    }

    Elem one() const { return {f_->one(), f_->zero(), f_->zero()}; }

    Elem mul(const Elem& a, const Elem& b) const {
        std::array<FieldElement, 5> prod{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) prod[i + j] = f_->add(prod[i + j], f_->mul(a[i], b[j]));
        // X^3 = -(c0 + c1 X + c2 X^2)
        for (int d = 4; d >= 3; --d) {
            const FieldElement lead = prod[d];
            if (lead.value == 0) continue;
            prod[d] = f_->zero();
            for (int i = 0; i < 3; ++i) prod[d - 3 + i] = f_->sub(prod[d - 3 + i], f_->mul(lead, low_[i]));
        }
        return {prod[0], prod[1], prod[2]};
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem primitive() const {
        const std::uint64_t s = f_->order();
        const std::uint64_t order = s * s * s - 1;
        const auto divisors = prime_divisors(order);
        for (std::uint64_t m = 2; m <= order; ++m) {
            Elem a{FieldElement{static_cast<std::uint32_t>(m % s)}, FieldElement{static_cast<std::uint32_t>(m / s % s)},
                   FieldElement{static_cast<std::uint32_t>(m / s / s)}};
            bool ok = true;
            for (auto r : divisors) {
                if (pow(a, order / r) == one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) return a;
        }
        throw Error("no primitive element of GF(s^3) found (unreachable)");
    }

  private:
    bool has_root(const Elem& c) const {
        for (std::uint32_t x = 0; x < f_->order(); ++x) {
            const FieldElement xe{x};
            FieldElement val = f_->pow(xe, 3);
            val = f_->add(val, f_->mul(c[2], f_->mul(xe, xe)));
            val = f_->add(val, f_->mul(c[1], xe));
            val = f_->add(val, c[0]);
            if (val.value == 0) return true;
        }
        return false;
    }

    FieldPtr f_;
    Elem low_{};
};

}  // namespace

DifferenceSet singer_difference_set(std::uint64_t s) {
    if (!is_prime_power(s)) throw NotAPrimePower("singer_difference_set: " + std::to_string(s) + " is not a prime power");
    if (s > 101) throw ResourceLimit("singer_difference_set: s^3 exceeds 2^20");
    const CubicExtension ext(make_field(s));
    const std::uint64_t v = s * s + s + 1;
    const auto alpha = ext.primitive();
    DifferenceSet ds{v, {}};
    auto x = ext.one();
    for (std::uint64_t i = 0; i < v; ++i) {
        if (x[2].value == 0) ds.residues.push_back(i);
        x = ext.mul(x, alpha);
    }
    if (ds.residues.size() != s + 1 || !is_perfect_difference_set(ds))
        throw Error("singer_difference_set: construction failed validation for s = " + std::to_string(s));
    return ds;
}

DifferenceSet search_difference_set(std::uint64_t v, std::size_t size) {
    if (v > 200) throw ResourceLimit("search_difference_set: v > 200");
    if (v == 0 || size == 0 || size > v) return {v, {}};
    std::vector<std::uint64_t> chosen{0};
    std::vector<std::uint32_t> used(v, 0);
    // Depth-first over increasing residues; a candidate must create only unseen differences.
    auto fits = [&](std::uint64_t c) {
        for (auto a : chosen) {
            const std::uint64_t d1 = (c + v - a) % v, d2 = (a + v - c) % v;
            if (used[d1] || used[d2] || d1 == d2) return false;
        }
        return true;
    };
    auto apply = [&](std::uint64_t c, int delta) {
        for (auto a : chosen) {
            used[(c + v - a) % v] += delta;
            used[(a + v - c) % v] += delta;
        }
    };
    std::vector<std::uint64_t> next_candidate{1};
    while (!chosen.empty()) {
        if (chosen.size() == size) {
            DifferenceSet ds{v, chosen};
            if (is_perfect_difference_set(ds)) return ds;
        }
        std::uint64_t& cand = next_candidate.back();
        bool advanced = false;
        if (chosen.size() < size) {
            for (; cand < v; ++cand) {
                if (!fits(cand)) continue;
                const std::uint64_t c = cand++;
                apply(c, +1);
                chosen.push_back(c);
                next_candidate.push_back(c + 1);
                advanced = true;
                break;
            }
        }
        if (advanced) continue;
        next_candidate.pop_back();
        const std::uint64_t last = chosen.back();
        chosen.pop_back();
        if (!chosen.empty()) apply(last, -1);
    }
    return {v, {}};
}

UnrestrictedCode singer_code(std::uint64_t s, std::uint32_t q) {
    const DifferenceSet ds = singer_difference_set(s);
    std::vector<std::vector<std::uint32_t>> words;
    for (auto r : ds.residues) {
        std::vector<std::uint32_t> word(ds.modulus, 0);
        std::fill(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(r), 1u);
        words.push_back(std::move(word));
    }
    return UnrestrictedCode(q, std::move(words));
}

std::uint64_t n0_upper(std::uint64_t M, std::uint32_t /*q*/) {
    if (M < 2) throw PreconditionViolated("n0_upper: M must be >= 2");
    if (is_prime_power(M - 1)) return 2 * n_upper(M) + 1;
    return 2 * n_upper(pp(M - 1) + 1) + 1;
}

}  // namespace wcount
