#include "wcount/code.hpp"

#include "wcount/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>

namespace wcount {

LinearCode::LinearCode(FieldPtr field, std::size_t dimension, std::vector<Column> columns)
    : field_(std::move(field)), dimension_(dimension) {
    if (!field_) throw PreconditionViolated("LinearCode: null field");
    if (dimension_ == 0) throw PreconditionViolated("LinearCode: dimension must be >= 1");
    std::map<std::vector<FieldElement>, std::uint64_t> merged;
    for (auto& c : columns) {
        if (c.entries.size() != dimension_)
            throw DimensionMismatch("LinearCode: column has " + std::to_string(c.entries.size()) +
                                    " entries, expected " + std::to_string(dimension_));
        for (auto x : c.entries)
            if (x.value >= field_->order()) throw OutOfRange("LinearCode: entry outside the field");
        if (c.multiplicity == 0) throw PreconditionViolated("LinearCode: zero multiplicity");
        auto& m = merged[std::move(c.entries)];
        if (m > std::numeric_limits<std::uint64_t>::max() - c.multiplicity)
            throw OutOfRange("LinearCode: length overflow");
        m += c.multiplicity;
    }
    columns_.reserve(merged.size());
    for (auto& [entries, mult] : merged) {
        if (length_ > std::numeric_limits<std::uint64_t>::max() - mult) throw OutOfRange("LinearCode: length overflow");
        length_ += mult;
        columns_.push_back({entries, mult});
    }
    if (length_ == 0) throw PreconditionViolated("LinearCode: length must be >= 1");
}

LinearCode LinearCode::from_rows(FieldPtr field, const std::vector<std::vector<FieldElement>>& rows) {
    if (rows.empty()) throw PreconditionViolated("from_rows: no rows");
    const std::size_t n = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != n) throw DimensionMismatch("from_rows: ragged generator matrix");
    std::vector<Column> cols;
    cols.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Column c{std::vector<FieldElement>(rows.size()), 1};
        for (std::size_t i = 0; i < rows.size(); ++i) c.entries[i] = rows[i][j];
        cols.push_back(std::move(c));
    }
    return LinearCode(std::move(field), rows.size(), std::move(cols));
}

std::uint64_t LinearCode::multiplicity_of(std::span<const FieldElement> column) const {
    auto it = std::lower_bound(columns_.begin(), columns_.end(), column, [](const Column& c, auto key) {
        return std::lexicographical_compare(c.entries.begin(), c.entries.end(), key.begin(), key.end());
    });
    if (it != columns_.end() && std::equal(it->entries.begin(), it->entries.end(), column.begin(), column.end()))
        return it->multiplicity;
    return 0;
}

WeightSpectrum::WeightSpectrum(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
    std::sort(weights_.begin(), weights_.end());
    weights_.erase(std::unique(weights_.begin(), weights_.end()), weights_.end());
    if (!weights_.empty() && weights_.front() == 0) weights_.erase(weights_.begin());
}

bool WeightSpectrum::contains(std::uint64_t w) const { return std::binary_search(weights_.begin(), weights_.end(), w); }

std::uint64_t weight_of_message(const LinearCode& code, std::span<const FieldElement> message) {
    if (message.size() != code.dimension())
        throw DimensionMismatch("weight_of_message: message has " + std::to_string(message.size()) +
                                " entries, code dimension is " + std::to_string(code.dimension()));
    const Field& f = code.field();
    for (auto x : message)
        if (x.value >= f.order()) throw OutOfRange("weight_of_message: entry outside the field");
    std::uint64_t w = 0;
    for (const auto& c : code.columns()) {
        FieldElement dot = f.zero();
        for (std::size_t i = 0; i < c.entries.size(); ++i) dot = f.add(dot, f.mul(message[i], c.entries[i]));
        if (dot.value != 0) w += c.multiplicity;
    }
    return w;
}

std::uint64_t projective_point_count(std::uint64_t k, std::uint64_t q) {
    // 1 + q + ... + q^(k-1)
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0, term = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (total > kMax - term) return kMax;
        total += term;
        if (i + 1 < k) {
            if (term > kMax / q) return kMax;
            term *= q;
        }
    }
    return total;
}

namespace {

// A row block of the generator matrix together with the nonzero columns restricted to it.
struct Block {
    std::size_t rows = 0;
    std::vector<FieldElement> entries;  // column-major, `rows` entries per column
    std::vector<std::uint64_t> mults;
};

class WeightCollector {
  public:
    void add(std::uint64_t w) {
        buf_.push_back(w);
        if (buf_.size() >= (std::size_t{1} << 16)) compact();
    }
    std::vector<std::uint64_t> take() {
        compact();
        return std::move(buf_);
    }
    std::size_t compact() {
        std::sort(buf_.begin(), buf_.end());
        buf_.erase(std::unique(buf_.begin(), buf_.end()), buf_.end());
        return buf_.size();
    }

  private:
    std::vector<std::uint64_t> buf_;
};

// Message with first nonzero entry 1 at position `index` of the lexicographic enumeration.
std::vector<FieldElement> decode_projective(std::uint64_t index, std::size_t d, std::uint32_t q) {
    std::vector<FieldElement> u(d);
    for (std::size_t lead = d; lead-- > 0;) {
        std::uint64_t group = 1;
        for (std::size_t i = lead + 1; i < d; ++i) group *= q;
        if (index < group) {
            u[lead] = {1};
            for (std::size_t pos = d; pos-- > lead + 1;) {
                u[pos] = {static_cast<std::uint32_t>(index % q)};
                index /= q;
            }
            return u;
        }
        index -= group;
    }
    return u;
}

// Advances u to the next projective message; false after the last one.
bool next_projective(std::vector<FieldElement>& u, std::uint32_t q) {
    const std::size_t d = u.size();
    std::size_t lead = 0;
    while (u[lead].value == 0) ++lead;
    for (std::size_t pos = d; pos-- > lead + 1;) {
        if (++u[pos].value < q) return true;
        u[pos].value = 0;
    }
    if (lead == 0) return false;
    u[lead].value = 0;
    u[lead - 1].value = 1;
    return true;
}

std::vector<std::uint64_t> enumerate_range(const Field& f, const Block& b, std::uint64_t begin, std::uint64_t end) {
    WeightCollector out;
    const std::size_t d = b.rows;
    const std::size_t ncols = b.mults.size();
    auto u = decode_projective(begin, d, f.order());
    if (f.order() == 2 && d <= 64) {
        std::vector<std::uint64_t> masks(ncols, 0);
        for (std::size_t c = 0; c < ncols; ++c)
            for (std::size_t i = 0; i < d; ++i)
                if (b.entries[c * d + i].value) masks[c] |= std::uint64_t{1} << i;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::uint64_t um = 0;
            for (std::size_t i = 0; i < d; ++i)
                if (u[i].value) um |= std::uint64_t{1} << i;
            std::uint64_t w = 0;
            for (std::size_t c = 0; c < ncols; ++c)
                if (std::popcount(um & masks[c]) & 1) w += b.mults[c];
            out.add(w);
            next_projective(u, 2);
        }
        return out.take();
    }
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t w = 0;
        const FieldElement* col = b.entries.data();
        for (std::size_t c = 0; c < ncols; ++c, col += d) {
            FieldElement dot{0};
            for (std::size_t i = 0; i < d; ++i)
                if (u[i].value) dot = f.add(dot, f.mul(u[i], col[i]));
            if (dot.value) w += b.mults[c];
        }
        out.add(w);
        next_projective(u, f.order());
    }
    return out.take();
}

std::vector<std::uint64_t> enumerate_block(const Field& f, const Block& b, std::uint64_t points, unsigned threads) {
    if (b.rows == 1) {
        // Every nonzero column has a nonzero entry in the only row.
        return {std::accumulate(b.mults.begin(), b.mults.end(), std::uint64_t{0})};
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (points < (std::uint64_t{1} << 15) || threads == 1) return enumerate_range(f, b, 0, points);
    const std::uint64_t chunk = (points + threads - 1) / threads;
    std::vector<std::vector<std::uint64_t>> parts(threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = std::min(points, t * chunk), hi = std::min(points, lo + chunk);
            pool.emplace_back([&, t, lo, hi] { parts[t] = enumerate_range(f, b, lo, hi); });
        }
    }
    std::vector<std::uint64_t> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

// Weights of nonzero messages of a direct sum: sums over nonempty sets of summands.
std::vector<std::uint64_t> combine_sumset(const std::vector<std::vector<std::uint64_t>>& parts, std::uint64_t n) {
    if (n + 1 <= (std::uint64_t{1} << 27)) {
        const std::size_t words = static_cast<std::size_t>(n / 64 + 1);
        std::vector<std::uint64_t> acc(words, 0), next(words);
        auto set = [](std::vector<std::uint64_t>& bits, std::uint64_t w) { bits[w / 64] |= std::uint64_t{1} << (w % 64); };
        bool first = true;
        for (const auto& part : parts) {
            if (first) {
                for (auto w : part) set(acc, w);
                first = false;
                continue;
            }
            next = acc;
            for (auto w : part) {
                set(next, w);
                const std::size_t ws = static_cast<std::size_t>(w / 64), bs = static_cast<std::size_t>(w % 64);
                for (std::size_t i = words; i-- > ws;) {
                    std::uint64_t v = acc[i - ws] << bs;
                    if (bs && i - ws > 0) v |= acc[i - ws - 1] >> (64 - bs);
                    next[i] |= v;
                }
            }
            acc.swap(next);
        }
        std::vector<std::uint64_t> out;
        for (std::size_t i = 0; i < words; ++i)
            for (std::uint64_t bits = acc[i]; bits; bits &= bits - 1)
                out.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
        return out;
    }
    std::set<std::uint64_t> acc(parts.front().begin(), parts.front().end());
    for (std::size_t p = 1; p < parts.size(); ++p) {
        std::set<std::uint64_t> next = acc;
        for (auto w : parts[p]) {
            next.insert(w);
            for (auto a : acc) next.insert(a + w);
        }
        acc.swap(next);
    }
    return {acc.begin(), acc.end()};
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

WeightSpectrum weight_spectrum(const LinearCode& code, const SpectrumOptions& options) {
    const Field& f = code.field();
    const std::size_t k = code.dimension();

    std::vector<const Column*> nonzero;
    for (const auto& c : code.columns())
        if (std::any_of(c.entries.begin(), c.entries.end(), [](FieldElement x) { return x.value != 0; }))
            nonzero.push_back(&c);

    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    if (options.decompose) {
        for (const Column* c : nonzero) {
            std::size_t first = k;
            for (std::size_t i = 0; i < k; ++i) {
                if (c->entries[i].value == 0) continue;
                if (first == k)
                    first = i;
                else
                    parent[find_root(parent, i)] = find_root(parent, first);
            }
        }
    } else {
        std::fill(parent.begin(), parent.end(), 0);
    }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < k; ++i) groups[find_root(parent, i)].push_back(i);

    std::vector<Block> blocks;
    std::uint64_t total_points = 0;
    for (const auto& [root, rows] : groups) {
        Block b;
        b.rows = rows.size();
        for (const Column* c : nonzero) {
            bool touches = false;
            for (auto r : rows) touches = touches || c->entries[r].value != 0;
            if (!touches) continue;
            for (auto r : rows) b.entries.push_back(c->entries[r]);
            b.mults.push_back(c->multiplicity);
        }
        if (b.rows > 1) {
            const std::uint64_t pts = projective_point_count(b.rows, f.order());
            total_points = pts > std::numeric_limits<std::uint64_t>::max() - total_points
                               ? std::numeric_limits<std::uint64_t>::max()
                               : total_points + pts;
        }
        blocks.push_back(std::move(b));
    }
    if (total_points > options.budget)
        throw ResourceLimit("weight_spectrum: " + std::to_string(total_points) + " projective points exceed budget " +
                            std::to_string(options.budget));

    std::vector<std::vector<std::uint64_t>> parts;
    for (const auto& b : blocks) {
        if (b.mults.empty()) {
            parts.push_back({0});
            continue;
        }
        parts.push_back(enumerate_block(f, b, projective_point_count(b.rows, f.order()), options.threads));
    }
    if (parts.size() == 1) return WeightSpectrum(std::move(parts.front()));
    return WeightSpectrum(combine_sumset(parts, code.length()));
}

std::size_t num_distinct_weights(const LinearCode& code, const SpectrumOptions& options) {
    return weight_spectrum(code, options).size();
}

LinearCode extend_with_zero_columns(const LinearCode& code, std::uint64_t t) {
    if (t == 0) throw PreconditionViolated("extend_with_zero_columns: t must be >= 1");
    std::vector<Column> cols(code.columns().begin(), code.columns().end());
    cols.push_back({std::vector<FieldElement>(code.dimension(), FieldElement{0}), t});
    return LinearCode(code.field_ptr(), code.dimension(), std::move(cols));
}

std::size_t rank(const LinearCode& code) {
    const Field& f = code.field();
    const std::size_t k = code.dimension();
    const auto cols = code.columns();
    // Rows of the k x d matrix.
    std::vector<std::vector<FieldElement>> m(k, std::vector<FieldElement>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) m[i][j] = cols[j].entries[i];
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols.size() && r < k; ++col) {
        std::size_t piv = r;
        while (piv < k && m[piv][col].value == 0) ++piv;
        if (piv == k) continue;
        std::swap(m[r], m[piv]);
        const FieldElement scale = f.inv(m[r][col]);
        for (auto& x : m[r]) x = f.mul(x, scale);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r || m[i][col].value == 0) continue;
            const FieldElement factor = m[i][col];
            for (std::size_t j = col; j < cols.size(); ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        ++r;
    }
    return r;
}

}  // namespace wcount
