#include "frieze/quiddity.hpp"

#include <algorithm>
#include <stdexcept>

namespace frieze {

Int parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    for (size_t t = start; t < s.size(); ++t) {
        if (s[t] < '0' || s[t] > '9') throw std::invalid_argument("bad integer literal: " + s);
    }
    return Int(s);
}

QuiddityData::QuiddityData(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::domain_error("quiddity sequence must be non-empty");
    for (const Int& a : entries_) {
        if (a < 1) throw std::domain_error("quiddity entries must be positive");
    }
}

const Int& QuiddityData::at(long long t) const {
    long long n = this->n();
    long long idx = t - floor_div(t - 1, n) * n;   // 1..n
    return entries_[static_cast<size_t>(idx - 1)];
}

bool QuiddityData::neighbor_rule_ok() const {
    long long n = this->n();
    for (long long t = 1; t <= n; ++t) {
        if (at(t) == 1 && (at(t - 1) < 2 || at(t + 1) < 2)) return false;
    }
    return true;
}

std::vector<Int> QuiddityData::canonical_rotation() const {
    size_t n = entries_.size();
    std::vector<Int> best = entries_;
    std::vector<Int> rot = entries_;
    for (size_t s = 1; s < n; ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

long long QuiddityData::minimal_period() const {
    long long n = this->n();
    for (long long p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (long long t = 1; t <= n && ok; ++t) ok = at(t) == at(t + p);
        if (ok) return p;
    }
    return n;
}

bool QuiddityData::equivalent(const QuiddityData& other) const {
    return n() == other.n() && canonical_rotation() == other.canonical_rotation();
}

} // namespace frieze
