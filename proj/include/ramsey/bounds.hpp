#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ramsey {

/// Best known bounds on R(p,q). `known` is false for pairs absent from the
/// embedded table; lower/upper are then meaningless.
struct RamseyValue
{
    int p = 0;
    int q = 0;
    bool known = false;
    int lower = 0;
    int upper = 0;
    std::string source;

    bool exact() const noexcept { return known && lower == upper; }
};

/// Admissible vertex degrees of an r(p,q,n) graph.
struct DegreeRange
{
    int lo = 0;
    int hi = 0;

    bool feasible() const noexcept { return lo <= hi; }
    bool contains(int d) const noexcept { return lo <= d && d <= hi; }

    friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
};

/// Table lookup, symmetric in (p,q), with R(m,2) = m. Requires p,q >= 2.
RamseyValue known_ramsey(int p, int q);

/// All table rows with p <= q (excluding the R(m,2) identity).
std::vector<RamseyValue> ramsey_table();

/// Every vertex of an r(p,q,n) graph has degree in
/// [n - R(p,q-1), R(p-1,q) - 1]. Both values must be known exactly
/// (R(m,1) = 1 is used for the degenerate orders); throws
/// UnsupportedInstance naming the missing value otherwise.
DegreeRange degree_range(int p, int q, int n);

/// A printed degree-range row with the value the formula gives for it.
struct PrintedDegreeRange
{
    int p, q, n;
    DegreeRange printed;
    DegreeRange computed;
    std::string note;

    bool agrees() const { return printed == computed; }
};

/// The published degree-range rows, recomputed. The (4,6,36) row is printed
/// as [11,24]; the formula gives [36-25, 18-1] = [11,17].
std::vector<PrintedDegreeRange> printed_degree_ranges();

/// The printed row for (p,q,n), if there is one.
std::optional<PrintedDegreeRange> printed_degree_range(int p, int q, int n);

/// k * 2^(k/2) / (e * sqrt(2)), a strict lower bound on R(k,k). Requires k >= 2.
double erdos_diagonal_lower(int k);

} // namespace ramsey
