#include "frieze/frieze_view.hpp"

#include <stdexcept>

namespace frieze {

FriezeView::FriezeView(QuiddityData q) : q_(std::move(q)) {
    diagonals_.resize(static_cast<size_t>(q_.n()));
}

FriezeView::Key FriezeView::reduce(long long i, long long j) const {
    long long n = q_.n();
    long long shift = floor_div(i - 1, n);
    return {i - shift * n, j - i};
}

Int FriezeView::entry(long long i, long long j) const {
    long long r = j - i;
    if (r < -2) throw std::domain_error("frieze entry requires j - i >= -2");
    if (r == -2) return zero_;
    if (r == -1) return one_;
    Key key = reduce(i, j);
    auto& diag = diagonals_[static_cast<size_t>(key.i0 - 1)];
    if (static_cast<long long>(diag.size()) <= key.r) {
        size_t old = diag.size();
        diag.resize(static_cast<size_t>(key.r) + 1);
        for (size_t t = old; t < diag.size(); ++t) {
            long long row = static_cast<long long>(t);
            const Int& prev1 = row >= 1 ? diag[t - 1] : one_;
            const Int& prev2 = row >= 2 ? diag[t - 2] : (row == 1 ? one_ : zero_);
            diag[t] = q_.at(key.i0 + row) * prev1 - prev2;
        }
    }
    return diag[static_cast<size_t>(key.r)];
}

void FriezeView::set_cached_entry(long long i, long long j, Int value) {
    entry(i, j);   // materialize
    Key key = reduce(i, j);
    diagonals_[static_cast<size_t>(key.i0 - 1)][static_cast<size_t>(key.r)] = std::move(value);
}

Int entry(const QuiddityData& q, long long i, long long j) {
    return FriezeView(q).entry(i, j);
}

Int entry_determinant(const QuiddityData& q, long long i, long long j) {
    if (j < i) throw std::domain_error("entry_determinant requires j >= i");
    long long size = j - i + 1;
    std::vector<std::vector<Int>> m(static_cast<size_t>(size),
                                    std::vector<Int>(static_cast<size_t>(size), 0));
    for (long long row = 0; row < size; ++row) {
        m[row][row] = q.at(i + row);
        if (row + 1 < size) {
            m[row][row + 1] = 1;
            m[row + 1][row] = 1;
        }
    }
    // Bareiss fraction-free elimination; all divisions are exact.
    Int denom = 1;
    long long sign = 1;
    for (long long col = 0; col < size - 1; ++col) {
        if (m[col][col] == 0) {
            long long pivot = -1;
            for (long long row = col + 1; row < size; ++row) {
                if (m[row][col] != 0) { pivot = row; break; }
            }
            if (pivot < 0) return 0;
            std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(pivot)]);
            sign = -sign;
        }
        for (long long row = col + 1; row < size; ++row) {
            for (long long c2 = col + 1; c2 < size; ++c2) {
                m[row][c2] = (m[row][c2] * m[col][col] - m[row][col] * m[col][c2]) / denom;
            }
            m[row][col] = 0;
        }
        denom = m[col][col];
    }
    return sign * m[size - 1][size - 1];
}

std::vector<Int> row_window(const QuiddityData& q, long long r, long long i_start,
                            long long width) {
    if (width < 1) throw std::domain_error("row window width must be positive");
    FriezeView view(q);
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(width));
    for (long long i = i_start; i < i_start + width; ++i) out.push_back(view.entry(i, i + r));
    return out;
}

ValidationReport validate_to_depth(const QuiddityData& q, long long depth) {
    if (depth < 1) throw std::domain_error("depth must be positive");
    FriezeView view(q);
    ValidationReport report;
    report.depth_checked = depth;
    for (long long r = 0; r <= depth; ++r) {
        for (long long i = 1; i <= q.n(); ++i) {
            if (view.entry(i, i + r) < 1) {
                report.valid = false;
                report.first_violation = EntryIndex{i, i + r};
                return report;
            }
        }
    }
    return report;
}

bool verify_unimodular(const FriezeView& view, long long depth) {
    if (depth < 1) throw std::domain_error("depth must be positive");
    for (long long r = -1; r <= depth; ++r) {
        for (long long i = 1; i <= view.n(); ++i) {
            long long j = i + r;
            Int det = view.entry(i, j) * view.entry(i + 1, j + 1) -
                      view.entry(i + 1, j) * view.entry(i, j + 1);
            if (det != 1) return false;
        }
    }
    return true;
}

bool verify_unimodular(const QuiddityData& q, long long depth) {
    FriezeView view(q);
    return verify_unimodular(view, depth);
}

namespace {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int result = 1;
    for (long long t = 1; t <= k; ++t) {
        result *= n - k + t;
        result /= t;
    }
    return result;
}

} // namespace

Int complete_entry(const Int& a, long long i, long long j) {
    if (a < 2) throw std::domain_error("complete frieze requires a >= 2");
    if (j - i < -2) throw std::domain_error("frieze entry requires j - i >= -2");
    long long len = j - i + 1;
    Int sum = 0;
    for (long long k = 0; 2 * k <= len; ++k) {
        Int term = binomial(len - k, k);
        Int power = 1;
        for (long long e = 0; e < len - 2 * k; ++e) power *= a;
        term *= power;
        if (k % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

bool check_diagonal_sum(const QuiddityData& q, long long k, long long depth) {
    if (depth < 1) throw std::domain_error("depth must be positive");
    FriezeView view(q);
    for (long long j = k - 1; j <= k + depth; ++j) {
        if (q.at(k - 1) * view.entry(k, j) != view.entry(k - 1, j) + view.entry(k + 1, j)) {
            return false;
        }
    }
    return true;
}

ArithmeticReport check_arithmetic(const QuiddityData& q, long long r, long long probes) {
    if (r < 1) throw std::domain_error("arithmetic parameter r must be positive");
    if (probes < 2) throw std::domain_error("need at least two probes");
    FriezeView view(q);
    ArithmeticReport report;
    report.n = q.n();
    report.r = r;
    report.observed.assign(static_cast<size_t>(q.n()), {});
    for (long long i = 1; i <= q.n(); ++i) {
        auto& row = report.observed[static_cast<size_t>(i - 1)];
        row.reserve(static_cast<size_t>(r));
        for (long long k = 1; k <= r; ++k) {
            long long base = i + k - 3;
            row.push_back(view.entry(i, base + r) - view.entry(i, base));
        }
    }
    for (long long i = 1; i <= q.n() && report.pass; ++i) {
        for (long long k = 1; k <= r && report.pass; ++k) {
            long long base = i + k - 3;
            const Int& d = report.observed[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)];
            for (long long l = 0; l <= probes; ++l) {
                if (view.entry(i, base + (l + 1) * r) - view.entry(i, base + l * r) != d) {
                    report.pass = false;
                    report.first_violation = {{i, k, l}};
                    break;
                }
            }
        }
    }
    return report;
}

} // namespace frieze
