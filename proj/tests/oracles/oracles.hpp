#pragma once

// Independent reference implementations used to cross-check the library.
// Nothing here calls into the code under test beyond plain data types.

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sesqui/exact/series.hpp"

namespace oracle {

// Dense-ish series: (a, b, k) -> coefficient, k < order.
struct NaiveSeries {
    int order = 1;
    std::map<std::tuple<std::int64_t, std::int64_t, int>, mpq_class> c;

    void add(std::int64_t a, std::int64_t b, int k, const mpq_class& v);
};

NaiveSeries from_library(const sesqui::TruncatedSeries& f);
bool same(const NaiveSeries& f, const sesqui::TruncatedSeries& g);

NaiveSeries one(int order);
NaiveSeries mul(const NaiveSeries& f, const NaiveSeries& g);
NaiveSeries add(const NaiveSeries& f, const NaiveSeries& g);
NaiveSeries scale(const NaiveSeries& f, const mpq_class& s);
// Repeated multiplication; negative n through sum_j (-g)^j.
NaiveSeries power(const NaiveSeries& f, long n);
// Term-by-term sum_{j=1}^{K-1} (-1)^{j+1} g^j / j.
NaiveSeries log(const NaiveSeries& f);
NaiveSeries exp(const NaiveSeries& g);

struct NaiveWall {
    std::int64_t da, db; // ray direction
    NaiveSeries label;
};

// Substitution z^m -> label^{-m_a d_b + m_b d_a} z^m, monomial by monomial.
NaiveSeries theta(const NaiveWall& w, const NaiveSeries& f);
// Walls sorted by atan2 angle in [0, 2pi), first crossed applied first.
std::pair<NaiveSeries, NaiveSeries> monodromy(std::vector<NaiveWall> walls, int order);

// sum_i min(a1 p_i, a2 q_i) >= min(a1 p, a2 q) on the grid 1 <= a1, a2 <= n.
bool lemma_f_grid(std::pair<std::int64_t, std::int64_t> target,
                  const std::vector<std::pair<std::int64_t, std::int64_t>>& parts, int n);

// i with x in [b_{i+1}, b_i), b_0 = inf, b_1 = 7, b_{i+1} = 7 - 1/b_i.
int shift_index_by_intervals(const mpq_class& x);

// Squares cut greedily from a 1 x (p/q) rectangle.
std::vector<mpq_class> square_cut_weights(std::int64_t p, std::int64_t q);

// Nonincreasing positive tuples with sum 3d - 1 and square sum d^2 + 1,
// found without pruning (small d only).
std::vector<std::vector<std::int64_t>> exceptional_tuples_bruteforce(std::int64_t d);

std::int64_t fib(int i);

} // namespace oracle
