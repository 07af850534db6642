#include "frieze/ops.hpp"

#include <stdexcept>

namespace frieze {

WindowRow glue_window(const WindowRow& w, long long k) {
    if (!w.contains(k) || !w.contains(k + 1)) {
        throw std::domain_error("glue needs both a_k and a_{k+1} inside the window");
    }
    WindowRow out;
    out.offset = w.offset;
    out.values.reserve(w.values.size() + 1);
    for (long long t = w.offset; t < w.offset + w.size(); ++t) {
        if (t == k) {
            out.values.push_back(w.at(t) + 1);
            out.values.push_back(1);
        } else if (t == k + 1) {
            out.values.push_back(w.at(t) + 1);
        } else {
            out.values.push_back(w.at(t));
        }
    }
    return out;
}

WindowRow cut_window(const WindowRow& w, long long k) {
    if (!w.contains(k)) throw std::domain_error("cut index outside the window");
    if (w.at(k) != 1) throw std::invalid_argument("cut requires a_k = 1");
    if (!w.contains(k - 1) || !w.contains(k + 1)) {
        throw std::domain_error("cut needs both neighbors inside the window");
    }
    if (w.at(k - 1) < 2 || w.at(k + 1) < 2) {
        throw invalid_frieze_error("cut would produce a non-positive row entry");
    }
    WindowRow out;
    out.offset = w.offset;
    out.values.reserve(w.values.size() - 1);
    for (long long t = w.offset; t < w.offset + w.size(); ++t) {
        if (t == k) continue;
        if (t == k - 1 || t == k + 1) {
            out.values.push_back(w.at(t) - 1);
        } else {
            out.values.push_back(w.at(t));
        }
    }
    return out;
}

QuiddityData n_glue(const QuiddityData& q, long long k) {
    long long n = q.n();
    if (k < 1 || k > n) throw std::domain_error("glue position must lie in 1..n");
    if (n == 1) return QuiddityData({q.at(1) + 2, 1});
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(n) + 1);
    if (k < n) {
        for (long long t = 1; t < k; ++t) out.push_back(q.at(t));
        out.push_back(q.at(k) + 1);
        out.push_back(1);
        out.push_back(q.at(k + 1) + 1);
        for (long long t = k + 2; t <= n; ++t) out.push_back(q.at(t));
    } else {
        // k = n: the incremented right neighbor a_{k+1} wraps onto a_1.
        out.push_back(q.at(1) + 1);
        for (long long t = 2; t < n; ++t) out.push_back(q.at(t));
        out.push_back(q.at(n) + 1);
        out.push_back(1);
    }
    return QuiddityData(std::move(out));
}

QuiddityData n_cut(const QuiddityData& q, long long k) {
    long long n = q.n();
    if (k < 1 || k > n) throw std::domain_error("cut position must lie in 1..n");
    if (q.at(k) != 1) throw std::invalid_argument("cut requires a_k = 1");
    if (n < 2) throw std::domain_error("cut requires period at least 2");
    if (n == 2) {
        Int a = q.at(k + 1) - 2;
        if (a < 1) throw invalid_frieze_error("cut would produce a non-positive quiddity entry");
        return QuiddityData({a});
    }
    if (q.at(k - 1) < 2 || q.at(k + 1) < 2) {
        throw invalid_frieze_error("cut would produce a non-positive quiddity entry");
    }
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(n) - 1);
    if (k == 1) {
        out.push_back(q.at(2) - 1);
        for (long long t = 3; t < n; ++t) out.push_back(q.at(t));
        out.push_back(q.at(n) - 1);
    } else if (k == n) {
        out.push_back(q.at(1) - 1);
        for (long long t = 2; t < n - 1; ++t) out.push_back(q.at(t));
        out.push_back(q.at(n - 1) - 1);
    } else {
        for (long long t = 1; t <= k - 2; ++t) out.push_back(q.at(t));
        out.push_back(q.at(k - 1) - 1);
        out.push_back(q.at(k + 1) - 1);
        for (long long t = k + 2; t <= n; ++t) out.push_back(q.at(t));
    }
    return QuiddityData(std::move(out));
}

namespace {

// i_x in the transfer maps: i minus the number of period markers at
// residue x passed, i.e. i - t for x + (t-1)p < i <= x + tp.
long long shifted_index(long long i, long long x, long long p) {
    return i - ceil_div(i - x, p);
}

} // namespace

Int glued_entry(const QuiddityData& q, long long k, long long i, long long j) {
    long long n = q.n();
    if (k < 1 || k > n) throw std::domain_error("glue position must lie in 1..n");
    if (j - i < 0) throw std::domain_error("glued entry transfer requires j >= i");
    long long p = n + 1;
    bool i_hit = (i - (k + 2)) % p == 0;
    bool j_hit = (j - k) % p == 0;
    long long i2 = shifted_index(i, k + 2, p);
    long long j2 = shifted_index(j, k, p);
    FriezeView view(q);
    if (!i_hit && !j_hit) return view.entry(i2, j2);
    if (!i_hit && j_hit) return view.entry(i2, j2 - 1) + view.entry(i2, j2);
    if (i_hit && !j_hit) return view.entry(i2 - 1, j2) + view.entry(i2, j2);
    return view.entry(i2 - 1, j2 - 1) + view.entry(i2, j2) + view.entry(i2 - 1, j2) +
           view.entry(i2, j2 - 1);
}

} // namespace frieze
