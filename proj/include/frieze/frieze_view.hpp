#pragma once

#include "frieze/bigint.hpp"
#include "frieze/quiddity.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace frieze {

// Index pair (i, j) of a frieze entry m_{ij}; meaningful for j - i >= -2.
struct EntryIndex {
    long long i = 0;
    long long j = 0;
    bool operator==(const EntryIndex&) const = default;
};

struct ValidationReport {
    bool valid = true;
    std::optional<EntryIndex> first_violation;
    long long depth_checked = 0;
    // Positivity is an infinite condition; a clean report up to some depth is
    // evidence, not a certificate.
    bool finite_depth_only = true;
};

struct ArithmeticReport {
    bool pass = true;
    long long n = 0;
    long long r = 0;
    // observed[i-1][k-1] = m_{i,(i+k-3)+r} - m_{i,i+k-3}
    std::vector<std::vector<Int>> observed;
    // Earliest (i, k, l) with a probe mismatch, if any.
    std::optional<std::array<long long, 3>> first_violation;
    bool finite_probes_only = true;
};

// Lazy accessor for the entries m_{ij} (j - i >= -2) of the periodic
// infinite frieze generated by a quiddity sequence, via the continuant
// recurrence m_{ij} = a_j * m_{i,j-1} - m_{i,j-2} seeded with
// m_{i,i-2} = 0, m_{i,i-1} = 1.
//
// Entries are memoized per SE-diagonal keyed by (i reduced mod n, j - i),
// so periodic translates share cache lines. A FriezeView is not internally
// synchronized: confine an instance to one thread, and clone it (cheap,
// value semantics) to fan work out across threads.
class FriezeView {
public:
    explicit FriezeView(QuiddityData q);

    const QuiddityData& quiddity() const { return q_; }
    long long n() const { return q_.n(); }

    // m_{ij}; throws std::domain_error for j - i < -2. Returned by value:
    // the memo grows on demand, so references into it would not survive
    // later lookups.
    Int entry(long long i, long long j) const;

    // Fault-injection hook used by consistency checks in tests: overwrites
    // the memoized value of m_{ij} (and hence of all its periodic copies).
    void set_cached_entry(long long i, long long j, Int value);

private:
    struct Key {
        long long i0;   // reduced to 1..n
        long long r;    // j - i
    };
    Key reduce(long long i, long long j) const;

    QuiddityData q_;
    // diagonals_[i0-1][r] = m_{i0, i0+r}, r >= 0.
    mutable std::vector<std::vector<Int>> diagonals_;
    Int zero_{0};
    Int one_{1};
};

// m_{ij} for the quiddity row q; convenience wrapper over a scratch view.
Int entry(const QuiddityData& q, long long i, long long j);

// m_{ij} as the determinant of the (j-i+1)-sized tridiagonal matrix with
// diagonal a_i,...,a_j and unit off-diagonals, evaluated by fraction-free
// (Bareiss) elimination. Deliberately shares no code with the recurrence:
// the two routes cross-check each other. Requires j >= i.
Int entry_determinant(const QuiddityData& q, long long i, long long j);

// [m_{i,i+r} for i = i_start .. i_start+width-1].
std::vector<Int> row_window(const QuiddityData& q, long long r, long long i_start,
                            long long width);

// Checks m_{ij} >= 1 for 0 <= j-i <= depth, i in one period; reports the
// first non-positive entry in row-major scan order.
ValidationReport validate_to_depth(const QuiddityData& q, long long depth);

// Diamond rule m_{ij} m_{i+1,j+1} - m_{i+1,j} m_{i,j+1} = 1 for all diamonds
// with -1 <= j-i <= depth, i in one period, evaluated over the view's cache
// (so injected faults are detected).
bool verify_unimodular(const FriezeView& view, long long depth);
bool verify_unimodular(const QuiddityData& q, long long depth);

// Closed form for the constant quiddity row (a), a >= 2:
//   m_{ij} = sum_k (-1)^k C(j-i+1-k, k) a^{j-i+1-2k}.
Int complete_entry(const Int& a, long long i, long long j);

// a_{k-1} * m_{kj} = m_{k-1,j} + m_{k+1,j} for k-1 <= j <= k+depth.
bool check_diagonal_sum(const QuiddityData& q, long long k, long long depth);

// Measures d_{ik} = m_{i,(i+k-3)+r} - m_{i,i+k-3} for i in 1..n, k in 1..r,
// then probes m_{i,(i+k-3)+(l+1)r} - m_{i,(i+k-3)+lr} = d_{ik} for
// l = 0..probes.
ArithmeticReport check_arithmetic(const QuiddityData& q, long long r, long long probes);

} // namespace frieze
