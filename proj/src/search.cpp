#include "wcount/search.hpp"

#include "wcount/errors.hpp"
#include "wcount/primes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <thread>

namespace wcount {

namespace {

bool lex_less(const LinearCode& a, const LinearCode& b) {
    const auto ca = a.columns(), cb = b.columns();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end(), [](const Column& x, const Column& y) {
        if (x.entries != y.entries) return x.entries < y.entries;
        return x.multiplicity < y.multiplicity;
    });
}

// q^k when it fits below `cap`, otherwise nullopt.
std::optional<std::uint64_t> checked_power(std::uint64_t q, std::uint64_t k, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (r > cap / q) return std::nullopt;
        r *= q;
    }
    return r;
}

std::vector<FieldElement> decode_column(std::uint64_t index, std::uint64_t k, std::uint64_t q) {
    std::vector<FieldElement> c(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        c[i] = {static_cast<std::uint32_t>(index % q)};
        index /= q;
    }
    return c;
}

unsigned resolve_threads(unsigned requested) {
    return requested ? requested : std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

LinearCode random_full_rank_code(std::uint64_t n, std::uint64_t k, std::uint64_t q, std::uint64_t seed,
                                 std::uint64_t trial) {
    if (k < 1 || k > n) throw PreconditionViolated("random code: need 1 <= k <= n");
    auto field = make_field(q);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    const auto space = checked_power(q, k, std::uint64_t{1} << 22);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Column> cols;
        if (space) {
            std::vector<std::uint64_t> counts(*space, 0);
            std::uniform_int_distribution<std::uint64_t> pick(0, *space - 1);
            for (std::uint64_t i = 0; i < n; ++i) ++counts[pick(rng)];
            for (std::uint64_t idx = 0; idx < *space; ++idx)
                if (counts[idx]) cols.push_back({decode_column(idx, k, q), counts[idx]});
        } else {
            std::uniform_int_distribution<std::uint32_t> symbol(0, static_cast<std::uint32_t>(q - 1));
            std::map<std::vector<FieldElement>, std::uint64_t> counts;
            std::vector<FieldElement> c(k);
            for (std::uint64_t i = 0; i < n; ++i) {
                for (auto& x : c) x = {symbol(rng)};
                ++counts[c];
            }
            for (auto& [entries, m] : counts) cols.push_back({entries, m});
        }
        LinearCode code(field, k, std::move(cols));
        if (rank(code) == k) return code;
    }
    throw Infeasible("random code: no full-rank sample in 100000 attempts");
}

SearchReport random_linear_search(std::uint64_t n, std::uint64_t k, std::uint64_t q, std::uint64_t trials,
                                  std::uint64_t seed, const SearchOptions& options) {
    if (k < 1 || k > n) throw PreconditionViolated("random_linear_search: need 1 <= k <= n");
    if (trials < 1) throw PreconditionViolated("random_linear_search: need at least one trial");
    make_field(q);
    const std::uint64_t points = projective_point_count(k, q);
    if (points > options.enumeration_budget)
        throw ResourceLimit("random_linear_search: " + std::to_string(points) + " projective points exceed budget");

    SpectrumOptions spec_opts{options.enumeration_budget, 1, true};
    struct Best {
        std::uint64_t count = 0;
        std::optional<LinearCode> code;
    };
    auto improves = [](const Best& b, std::uint64_t count, const LinearCode& code) {
        if (!b.code) return true;
        if (count != b.count) return count > b.count;
        return lex_less(code, *b.code);
    };
    const unsigned nthreads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads), trials));
    std::vector<Best> local(nthreads);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::uint64_t i = t; i < trials; i += nthreads) {
                        LinearCode code = random_full_rank_code(n, k, q, seed, i);
                        const std::uint64_t count = num_distinct_weights(code, spec_opts);
                        if (improves(local[t], count, code)) local[t] = {count, std::move(code)};
                    }
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    Best best;
    for (auto& b : local)
        if (b.code && improves(best, b.count, *b.code)) best = std::move(b);

    SearchReport report;
    report.kind = "random_linear";
    report.n = n;
    report.k = k;
    report.q = q;
    report.trials = trials;
    report.seed = seed;
    report.best_count = best.count;
    report.linear_witness = std::move(best.code);
    return report;
}

BigInt gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
    if (k > n) return 0;
    BigInt num = 1, den = 1, qn = 1, qk = 1;
    for (std::uint64_t i = 0; i < n; ++i) qn *= q;
    BigInt qi = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num *= (qn - qi);  // q^n - q^i
        qi *= q;
    }
    for (std::uint64_t i = 0; i < k; ++i) qk *= q;
    qi = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        den *= (qk - qi);
        qi *= q;
    }
    return num / den;
}

SearchReport exhaustive_L(std::uint64_t n, std::uint64_t k, std::uint64_t q, const SearchOptions& options) {
    if (k < 1 || k > n) throw PreconditionViolated("exhaustive_L: need 1 <= k <= n");
    auto field = make_field(q);
    const Field& f = *field;
    const BigInt subspaces = gaussian_binomial(n, k, q);
    if (subspaces > options.exhaustive_budget)
        throw ResourceLimit("exhaustive_L: " + subspaces.str() + " subspaces exceed budget " +
                            std::to_string(options.exhaustive_budget));

    std::vector<std::vector<FieldElement>> messages;
    for_each_projective_message(f, k, [&](std::span<const FieldElement> u) { messages.emplace_back(u.begin(), u.end()); });
    const std::uint64_t cap = std::min<std::uint64_t>(n, messages.size());

    // nonzero[m * space + c]: message m has a nonzero inner product with column index c.
    const auto space_opt = checked_power(q, k, std::uint64_t{1} << 26);
    if (!space_opt) throw ResourceLimit("exhaustive_L: q^k too large for the inner-product table");
    const std::uint64_t space = *space_opt;
    if (messages.size() * space > (std::uint64_t{1} << 26))
        throw ResourceLimit("exhaustive_L: inner-product table too large");
    std::vector<std::uint8_t> nonzero(messages.size() * space);
    for (std::size_t m = 0; m < messages.size(); ++m) {
        for (std::uint64_t c = 0; c < space; ++c) {
            const auto col = decode_column(c, k, q);
            FieldElement dot{0};
            for (std::size_t i = 0; i < k; ++i) dot = f.add(dot, f.mul(messages[m][i], col[i]));
            nonzero[m * space + c] = dot.value != 0;
        }
    }

    std::uint64_t best = 0, visited = 0;
    std::vector<std::uint64_t> best_cols;
    std::vector<std::uint64_t> col_index(n);
    std::vector<std::uint8_t> seen(n + 1);
    std::vector<std::uint64_t> row_weight(k);
    for (std::uint64_t i = 0; i < k; ++i) row_weight[i] = *checked_power(q, i, space);

    std::vector<std::uint64_t> pivots(k);
    for (std::uint64_t i = 0; i < k; ++i) pivots[i] = i;
    bool done = false;
    while (!done) {
        // Free positions: (row i, column j) with j > pivot_i and j not a pivot.
        std::vector<std::pair<std::uint64_t, std::uint64_t>> free;
        std::vector<bool> is_pivot(n, false);
        for (auto p : pivots) is_pivot[p] = true;
        for (std::uint64_t i = 0; i < k; ++i)
            for (std::uint64_t j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free.emplace_back(i, j);
        std::vector<std::uint32_t> values(free.size(), 0);
        while (true) {
            std::fill(col_index.begin(), col_index.end(), 0);
            for (std::uint64_t i = 0; i < k; ++i) col_index[pivots[i]] += row_weight[i];
            for (std::size_t t = 0; t < free.size(); ++t)
                col_index[free[t].second] += values[t] * row_weight[free[t].first];
            ++visited;
            std::fill(seen.begin(), seen.end(), 0);
            std::uint64_t distinct = 0;
            for (std::size_t m = 0; m < messages.size(); ++m) {
                const std::uint8_t* row = &nonzero[m * space];
                std::uint64_t w = 0;
                for (std::uint64_t j = 0; j < n; ++j) w += row[col_index[j]];
                if (w && !seen[w]) {
                    seen[w] = 1;
                    ++distinct;
                }
            }
            if (distinct > best) {
                best = distinct;
                best_cols = col_index;
            }
            if (best == cap) break;
            std::size_t pos = 0;
            while (pos < values.size() && ++values[pos] == q) values[pos++] = 0;
            if (pos == values.size()) break;
        }
        if (best == cap) break;
        // Next pivot combination in lexicographic order.
        std::int64_t i = static_cast<std::int64_t>(k) - 1;
        while (i >= 0 && pivots[i] == n - k + static_cast<std::uint64_t>(i)) --i;
        if (i < 0) {
            done = true;
        } else {
            ++pivots[i];
            for (std::uint64_t j = static_cast<std::uint64_t>(i) + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        }
    }

    std::vector<Column> cols;
    for (auto c : best_cols) cols.push_back({decode_column(c, k, q), 1});
    SearchReport report;
    report.kind = "exhaustive_L";
    report.n = n;
    report.k = k;
    report.q = q;
    report.trials = visited;
    report.best_count = best;
    report.linear_witness = LinearCode(field, k, std::move(cols));
    return report;
}

std::uint64_t smallest_n0_linear(std::uint64_t k, std::uint64_t q, std::uint64_t target, const SearchOptions& options) {
    if (k < 1) throw PreconditionViolated("smallest_n0_linear: k must be >= 1");
    if (target < 1 || BigInt(target) > upper_prop2(k, q))
        throw PreconditionViolated("smallest_n0_linear: target outside [1, (q^k-1)/(q-1)]");
    for (std::uint64_t n = std::max(target, k);; ++n)
        if (exhaustive_L(n, k, q, options).best_count >= target) return n;
}

namespace {

class NonlinearSearch {
  public:
    NonlinearSearch(std::uint64_t n, std::uint64_t M, std::uint64_t q, std::uint64_t words, std::uint64_t budget)
        : n_(n), M_(M), q_(q), words_(words), budget_(budget), cap_(std::min<std::uint64_t>(n, M * (M - 1) / 2)),
          counts_(n + 1, 0) {}

    void run() {
        chosen_.push_back(0);
        extend(1);
    }

    std::uint64_t best() const { return best_; }
    const std::vector<std::uint64_t>& best_words() const { return best_words_; }
    std::uint64_t nodes() const { return nodes_; }

  private:
    std::uint64_t distance(std::uint64_t a, std::uint64_t b) const {
        if (q_ == 2) return static_cast<std::uint64_t>(std::popcount(a ^ b));
        std::uint64_t d = 0;
        for (std::uint64_t i = 0; i < n_; ++i) {
            d += (a % q_) != (b % q_);
            a /= q_;
            b /= q_;
        }
        return d;
    }

    void extend(std::uint64_t start) {
        const std::uint64_t depth = chosen_.size();
        if (depth == M_) {
            if (distinct_ > best_) {
                best_ = distinct_;
                best_words_ = chosen_;
            }
            return;
        }
        const std::uint64_t remaining = M_ * (M_ - 1) / 2 - depth * (depth - 1) / 2;
        if (std::min(cap_, distinct_ + remaining) <= best_) return;
        for (std::uint64_t w = start; w + (M_ - depth) <= words_; ++w) {
            if (++nodes_ > budget_)
                throw ResourceLimit("exhaustive_N: search nodes exceed budget " + std::to_string(budget_));
            for (auto c : chosen_)
                if (counts_[distance(c, w)]++ == 0) ++distinct_;
            chosen_.push_back(w);
            extend(w + 1);
            chosen_.pop_back();
            for (auto c : chosen_)
                if (--counts_[distance(c, w)] == 0) --distinct_;
            if (best_ == cap_) return;
        }
    }

    std::uint64_t n_, M_, q_, words_, budget_, cap_;
    std::vector<std::uint64_t> counts_;
    std::vector<std::uint64_t> chosen_;
    std::vector<std::uint64_t> best_words_;
    std::uint64_t distinct_ = 0, best_ = 0, nodes_ = 0;
};

}  // namespace

SearchReport exhaustive_N(std::uint64_t n, std::uint64_t M, std::uint64_t q, const SearchOptions& options) {
    if (M < 2) throw PreconditionViolated("exhaustive_N: M must be >= 2");
    if (q < 2) throw PreconditionViolated("exhaustive_N: q must be >= 2");
    if (n < 1) throw PreconditionViolated("exhaustive_N: n must be >= 1");
    const auto words = checked_power(q, n, std::uint64_t{1} << 26);
    if (!words) throw ResourceLimit("exhaustive_N: q^n exceeds 2^26 words");
    if (M > *words) throw PreconditionViolated("exhaustive_N: M exceeds q^n");

    NonlinearSearch search(n, M, q, *words, options.exhaustive_budget);
    search.run();

    std::vector<std::vector<std::uint32_t>> words_out;
    for (auto w : search.best_words()) {
        std::vector<std::uint32_t> word(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            word[i] = static_cast<std::uint32_t>(w % q);
            w /= q;
        }
        words_out.push_back(std::move(word));
    }
    SearchReport report;
    report.kind = "exhaustive_N";
    report.n = n;
    report.k = M;
    report.q = q;
    report.trials = search.nodes();
    report.best_count = search.best();
    report.nonlinear_witness = UnrestrictedCode(static_cast<std::uint32_t>(q), std::move(words_out));
    return report;
}

std::uint64_t smallest_N0(std::uint64_t M, std::uint64_t q, const SearchOptions& options) {
    const std::uint64_t target = n_upper(M);
    const std::uint64_t limit = n0_upper(M, static_cast<std::uint32_t>(q));
    for (std::uint64_t n = target; n <= limit; ++n)
        if (exhaustive_N(n, M, q, options).best_count == target) return n;
    throw Infeasible("smallest_N0: no length up to the Singer bound reaches C(M,2) distances");
}

bool MonotonicityAudit::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.holds; });
}

std::uint64_t MonotonicityAudit::value(std::uint64_t n, std::uint64_t k, std::uint64_t q) const {
    for (const auto& c : cells)
        if (c.n == n && c.k == k && c.q == q) return c.value;
    throw OutOfRange("monotonicity audit: cell (" + std::to_string(n) + "," + std::to_string(k) + "," +
                     std::to_string(q) + ") not on the grid");
}

MonotonicityAudit monotonicity_audit(const SearchOptions& options) {
    constexpr std::uint64_t kMaxN = 6, kMaxK = 3;
    const std::uint64_t qs[] = {2, 3, 4};
    MonotonicityAudit audit;
    for (auto q : qs)
        for (std::uint64_t k = 1; k <= kMaxK; ++k)
            for (std::uint64_t n = k; n <= kMaxN; ++n)
                audit.cells.push_back({n, k, q, exhaustive_L(n, k, q, options).best_count});

    auto cell = [](std::uint64_t n, std::uint64_t k, std::uint64_t q) {
        return "L(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(q) + ")";
    };
    for (const auto& c : audit.cells) {
        const std::string here = cell(c.n, c.k, c.q);
        if (c.n + 1 <= kMaxN)
            audit.checks.push_back({here + " <= " + cell(c.n + 1, c.k, c.q), c.value <= audit.value(c.n + 1, c.k, c.q)});
        if (c.k + 1 <= std::min(kMaxK, c.n))
            audit.checks.push_back({here + " <= " + cell(c.n, c.k + 1, c.q), c.value <= audit.value(c.n, c.k + 1, c.q)});
        if (c.q == 2)
            audit.checks.push_back({here + " <= " + cell(c.n, c.k, 4), c.value <= audit.value(c.n, c.k, 4)});
        audit.checks.push_back({here + " <= (q^k-1)/(q-1)", BigInt(c.value) <= upper_prop2(c.k, c.q)});
        audit.checks.push_back({here + " <= n", c.value <= c.n});
        BigInt qk = 1;
        for (std::uint64_t i = 0; i < c.k; ++i) qk *= c.q;
        audit.checks.push_back({"q^k <= delsarte_size(n, " + here + ", q)", qk <= delsarte_size(c.n, c.value, c.q)});
    }
    return audit;
}

std::vector<TableRow> run_table(TablePreset preset, TableScale scale, std::uint64_t trials, std::uint64_t seed,
                                const SearchOptions& options) {
    struct Entry {
        std::uint64_t k, q, value;
    };
    static const std::vector<Entry> kTable1 = {{3, 3, 11},   {4, 5, 29},    {4, 8, 41},     {6, 9, 177},
                                               {6, 13, 241}, {10, 16, 4609}, {10, 25, 6913}, {12, 29, 31745},
                                               {12, 49, 52225}, {12, 121, 125953}};
    static const std::vector<Entry> kTable2 = {{3, 3, 13}, {3, 4, 21}, {3, 5, 31}, {3, 7, 57},  {3, 8, 73},  {3, 9, 91},
                                               {3, 11, 133}, {4, 3, 40}, {4, 4, 85}, {4, 5, 156}, {5, 3, 121}, {5, 4, 341}};
    const auto& entries = preset == TablePreset::table1 ? kTable1 : kTable2;
    const std::uint64_t n = scale == TableScale::desk ? 10'000 : 6'000'000;

    std::vector<TableRow> rows;
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        const auto& e = entries[idx];
        TableRow row{e.k, e.q, n, e.value, preset == TablePreset::table2, upper_prop2(e.k, e.q), trials, 0, false, {}};
        const std::uint64_t points = projective_point_count(e.k, e.q);
        const auto space = checked_power(e.q, e.k, std::uint64_t{1} << 62);
        const std::uint64_t columns = space ? std::min(n, *space) : n;
        if (scale == TableScale::desk && e.q > 13) {
            row.skipped = true;
            row.reason = "q > 13 at desk scale";
        } else if (scale == TableScale::desk && static_cast<double>(points) * static_cast<double>(columns) > 5e7) {
            row.skipped = true;
            row.reason = "enumeration work above desk limit";
        } else if (points > options.enumeration_budget) {
            row.skipped = true;
            row.reason = "projective points exceed enumeration budget";
        }
        if (!row.skipped) row.best_count = random_linear_search(n, e.k, e.q, trials, seed + idx, options).best_count;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace wcount
