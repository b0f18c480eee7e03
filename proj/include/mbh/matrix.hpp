#pragma once

#include <utility>
#include <vector>

#include "mbh/errors.hpp"
#include "mbh/int_util.hpp"
#include "mbh/poly.hpp"
#include "mbh/rat.hpp"

namespace mbh {

template <class C>
struct EDiv; // exact division in the coefficient domain

template <>
struct EDiv<Int> {
    static Int div(const Int& a, const Int& b) { return divexact_checked(a, b); }
};

template <>
struct EDiv<Rat> {
    static Rat div(const Rat& a, const Rat& b) { return a / b; }
};

template <>
struct EDiv<TPoly> {
    static TPoly div(const TPoly& a, const TPoly& b) { return poly_exact_div(a, b); }
};

template <class C>
class Mat {
  public:
    Mat() : n_(0) {}
    explicit Mat(long n) : n_(n), a_(static_cast<size_t>(n * n)) {
        if (n < 0) throw BadArgument("negative matrix size");
    }

    long size() const { return n_; }
    C& at(long i, long j) { return a_[static_cast<size_t>(i * n_ + j)]; }
    const C& at(long i, long j) const { return a_[static_cast<size_t>(i * n_ + j)]; }

    void swap_rows(long i, long j) {
        for (long c = 0; c < n_; ++c) std::swap(at(i, c), at(j, c));
    }

  private:
    long n_;
    std::vector<C> a_;
};

/* n x n matrix with entries seq[k + i + j]; needs k + 2n - 1 <= seq size */
template <class C>
Mat<C> hankel_matrix(const std::vector<C>& seq, long k, long n) {
    if (k < 0 || n < 0) throw BadArgument("negative offset or size");
    if (n > 0 && static_cast<size_t>(k + 2 * n - 1) > seq.size())
        throw BadArgument("sequence too short for requested matrix");
    Mat<C> m(n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = seq[static_cast<size_t>(k + i + j)];
    return m;
}

namespace detail {

/* One elimination step of fraction-free Gaussian elimination: every 2x2
   cross product is exactly divisible by the previous pivot. The update of
   the rows below the pivot row is independent per row, which is where the
   parallel variant splits the work. */
template <class C, bool Parallel>
void bareiss_step(Mat<C>& m, long k, const C& prev) {
    long n = m.size();
    const C pivot = m.at(k, k);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel && n - k > 2)
#endif
    for (long i = k + 1; i < n; ++i) {
        for (long j = k + 1; j < n; ++j)
            m.at(i, j) = EDiv<C>::div(pivot * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
        m.at(i, k) = C();
    }
}

template <class C, bool Parallel>
C det_bareiss_impl(Mat<C> m) {
    long n = m.size();
    if (n == 0) return C(1);
    C prev(1);
    int sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (is_zero(m.at(k, k))) {
            long p = -1;
            for (long i = k + 1; i < n; ++i)
                if (!is_zero(m.at(i, k))) { p = i; break; }
            if (p < 0) return C(); // whole column zero: singular
            m.swap_rows(k, p);
            sign = -sign;
        }
        bareiss_step<C, Parallel>(m, k, prev);
        prev = m.at(k, k);
    }
    C d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

/* No pivoting: after step k the (k,k) entry is the leading principal minor
   of size k+1, so one elimination yields the determinants of all prefixes.
   A zero pivot aborts with the first singular prefix size recorded so the
   caller can recompute the remaining sizes with pivoting. */
template <class C, bool Parallel>
std::vector<C> minors_impl(Mat<C> m) {
    long n = m.size();
    std::vector<C> out;
    if (n == 0) return out;
    C prev(1);
    for (long k = 0; k < n; ++k) {
        if (k > 0) {
            bareiss_step<C, Parallel>(m, k - 1, prev);
            prev = m.at(k - 1, k - 1);
        }
        if (is_zero(m.at(k, k)) && k + 1 < n) throw ZeroPivot(k + 1);
        out.push_back(m.at(k, k));
    }
    return out;
}

} // namespace detail

template <class C>
C det_bareiss_serial(Mat<C> m) {
    return detail::det_bareiss_impl<C, false>(std::move(m));
}

template <class C>
C det_bareiss(Mat<C> m) {
    return detail::det_bareiss_impl<C, true>(std::move(m));
}

/* dets of the leading principal 1x1..nxn prefixes; throws ZeroPivot (with
   .step = first singular prefix size) when the no-pivot sweep breaks down */
template <class C>
std::vector<C> leading_principal_minors(Mat<C> m) {
    return detail::minors_impl<C, true>(std::move(m));
}

/* cofactor expansion along the first row, for cross-checking the kernels */
template <class C>
C naive_det(const Mat<C>& m) {
    long n = m.size();
    if (n > 6) throw TooLarge("cofactor determinant capped at size 6");
    std::vector<long> cols(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) cols[static_cast<size_t>(j)] = j;

    struct Rec {
        const Mat<C>& m;
        C run(long row, std::vector<long>& cols) {
            if (cols.empty()) return C(1);
            C acc;
            for (size_t idx = 0; idx < cols.size(); ++idx) {
                long j = cols[idx];
                if (is_zero(m.at(row, j))) continue;
                std::vector<long> rest;
                for (size_t q = 0; q < cols.size(); ++q)
                    if (q != idx) rest.push_back(cols[q]);
                C sub = m.at(row, j) * run(row + 1, rest);
                if (idx % 2 == 0) acc += sub;
                else acc -= sub;
            }
            return acc;
        }
    } rec{m};
    return rec.run(0, cols);
}

} // namespace mbh
