#include "ramsey/bounds.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

struct Row
{
    int p, q, lower, upper;
    const char* source;
};

constexpr std::array<Row, 15> kTable{{
    {3, 3, 6, 6, "Greenwood and Gleason 1955"},
    {3, 4, 9, 9, "Greenwood and Gleason 1955"},
    {3, 5, 14, 14, "Greenwood and Gleason 1955"},
    {3, 6, 18, 18, "Graver and Yackel 1968"},
    {3, 7, 23, 23, "Kalbfleisch 1966"},
    {3, 8, 28, 28, "McKay and Min 1992"},
    {3, 9, 36, 36, "Grinstead and Roberts 1982"},
    {3, 10, 40, 42, "Exoo 1989; Goedgebeur and Radziszowski 2012"},
    {3, 11, 46, 50, "Goedgebeur and Radziszowski 2012"},
    {4, 4, 18, 18, "Greenwood and Gleason 1955"},
    {4, 5, 25, 25, "McKay and Radziszowski 1992"},
    {4, 6, 36, 41, "Exoo 2012"},
    {4, 8, 59, 84, "Exoo 2015"},
    {5, 5, 43, 49, "McKay and Radziszowski 1995"},
    {5, 10, 149, 442, "Exoo 2015"},
}};

struct PrintedRow
{
    int p, q, n, lo, hi;
};

constexpr std::array<PrintedRow, 3> kPrintedDegrees{{
    {3, 10, 40, 4, 9},
    {5, 5, 43, 18, 24},
    {4, 6, 36, 11, 24},
}};

RamseyValue lookup(int p, int q)
{
    RamseyValue v;
    v.p = p;
    v.q = q;
    if (p == 2 || q == 2) {
        v.known = true;
        v.lower = v.upper = (p == 2) ? q : p;
        v.source = "R(m,2) = m";
        return v;
    }
    const int a = std::min(p, q);
    const int b = std::max(p, q);
    for (const Row& r : kTable) {
        if (r.p == a && r.q == b) {
            v.known = true;
            v.lower = r.lower;
            v.upper = r.upper;
            v.source = r.source;
            return v;
        }
    }
    return v;
}

// Exact R(p,q) including R(m,1) = 1, or nullopt.
std::optional<int> exact_value(int p, int q)
{
    if (p < 1 || q < 1) {
        return std::nullopt;
    }
    if (p == 1 || q == 1) {
        return 1;
    }
    const auto v = lookup(p, q);
    if (v.exact()) {
        return v.lower;
    }
    return std::nullopt;
}

} // namespace

RamseyValue known_ramsey(int p, int q)
{
    if (p < 2 || q < 2) {
        throw std::invalid_argument("Ramsey orders must be >= 2");
    }
    return lookup(p, q);
}

std::vector<RamseyValue> ramsey_table()
{
    std::vector<RamseyValue> out;
    for (const Row& r : kTable) {
        out.push_back(lookup(r.p, r.q));
    }
    return out;
}

DegreeRange degree_range(int p, int q, int n)
{
    if (p < 2 || q < 2 || n < 1) {
        throw std::invalid_argument("degree_range needs p,q >= 2 and n >= 1");
    }
    const auto low_source = exact_value(p, q - 1);
    const auto high_source = exact_value(p - 1, q);
    std::string missing;
    if (!low_source) {
        missing += "R(" + std::to_string(p) + "," + std::to_string(q - 1) + ")";
    }
    if (!high_source) {
        missing += (missing.empty() ? "" : ", ") + std::string("R(") + std::to_string(p - 1) + "," +
                   std::to_string(q) + ")";
    }
    if (!missing.empty()) {
        throw UnsupportedInstance("degree range needs exact value(s): " + missing);
    }
    return {n - *low_source, *high_source - 1};
}

std::vector<PrintedDegreeRange> printed_degree_ranges()
{
    std::vector<PrintedDegreeRange> out;
    for (const auto& r : kPrintedDegrees) {
        PrintedDegreeRange row{r.p, r.q, r.n, {r.lo, r.hi}, degree_range(r.p, r.q, r.n), {}};
        if (!row.agrees()) {
            row.note = "printed [" + std::to_string(r.lo) + "," + std::to_string(r.hi) +
                       "] disagrees with the degree formula, which gives [" + std::to_string(row.computed.lo) +
                       "," + std::to_string(row.computed.hi) + "]";
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::optional<PrintedDegreeRange> printed_degree_range(int p, int q, int n)
{
    for (auto& row : printed_degree_ranges()) {
        if (row.p == p && row.q == q && row.n == n) {
            return row;
        }
    }
    return std::nullopt;
}

double erdos_diagonal_lower(int k)
{
    if (k < 2) {
        throw std::invalid_argument("diagonal bound needs k >= 2");
    }
    return k * std::pow(2.0, k / 2.0) / (std::numbers::e * std::numbers::sqrt2);
}

} // namespace ramsey
