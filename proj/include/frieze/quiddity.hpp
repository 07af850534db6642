#pragma once

#include "frieze/bigint.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace frieze {

// Thrown when an operation would produce or presuppose a row that cannot
// belong to a frieze of positive integers (e.g. cutting next to an entry 1).
class invalid_frieze_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a query exceeds a configured size bound.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One period (a_1,...,a_n) of an n-periodic quiddity row. Entries are
// positive and unbounded; indices are 1-based and extend cyclically to all
// of Z. Construction only enforces positivity: sequences such as (1,1,3)
// that break the no-adjacent-ones rule are representable so that validation
// can locate the offending frieze entry instead of rejecting the input
// outright. Use neighbor_rule_ok() for the stronger structural check.
class QuiddityData {
public:
    explicit QuiddityData(std::vector<Int> entries);

    long long n() const { return static_cast<long long>(entries_.size()); }
    const std::vector<Int>& entries() const { return entries_; }

    // a_t for any integer t, extended n-periodically.
    const Int& at(long long t) const;

    // True iff every entry 1 has both cyclic neighbors > 1.
    bool neighbor_rule_ok() const;

    // Lexicographically least cyclic rotation; canonical representative for
    // equality and hashing of cyclic-equivalence classes.
    std::vector<Int> canonical_rotation() const;

    // Smallest p dividing n with a_{i+p} = a_i for all i.
    long long minimal_period() const;

    bool equivalent(const QuiddityData& other) const;

    bool operator==(const QuiddityData& other) const { return entries_ == other.entries_; }

private:
    std::vector<Int> entries_;
};

} // namespace frieze
