#pragma once

#include "frieze/frieze_view.hpp"
#include "frieze/quiddity.hpp"

namespace frieze {

// Finite window of a (not necessarily periodic) quiddity row. values[t]
// holds the row entry at ambient index offset + t. Gluing and cutting act
// on arbitrary infinite rows; a window is their finite realization.
struct WindowRow {
    std::vector<Int> values;
    long long offset = 0;

    long long size() const { return static_cast<long long>(values.size()); }
    bool contains(long long k) const { return k >= offset && k < offset + size(); }
    const Int& at(long long k) const { return values.at(static_cast<size_t>(k - offset)); }
    bool operator==(const WindowRow&) const = default;
};

// Replaces (..., a_k, a_{k+1}, ...) by (..., a_k+1, 1, a_{k+1}+1, ...).
// Both k and k+1 must lie inside the window.
WindowRow glue_window(const WindowRow& w, long long k);

// Inverse of glue_window at an entry a_k = 1: replaces
// (..., a_{k-1}, 1, a_{k+1}, ...) by (..., a_{k-1}-1, a_{k+1}-1, ...).
WindowRow cut_window(const WindowRow& w, long long k);

// Periodicity-preserving gluing above the pair (a_k, a_{k+1}), indices
// cyclic: yields a quiddity sequence of length n+1 ((a_1+2, 1) when n = 1).
QuiddityData n_glue(const QuiddityData& q, long long k);

// Periodicity-preserving cutting above a_k = 1: yields length n-1
// ((a_{k+1}-2) when n = 2). Throws invalid_frieze_error if a decremented
// entry would drop below 1.
QuiddityData n_cut(const QuiddityData& q, long long k);

// Entry of the glued frieze computed from entries of the original frieze by
// the four-case transfer map (indices reduced modulo n+1 against the two
// inserted diagonals). Agrees with entry(n_glue(q, k), i, j) for j >= i.
Int glued_entry(const QuiddityData& q, long long k, long long i, long long j);

} // namespace frieze
