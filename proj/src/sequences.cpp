#include "mbh/sequences.hpp"

#include "mbh/errors.hpp"

namespace mbh {

Family family_from_string(const std::string& s) {
    if (s == "mid") return Family::Mid;
    if (s == "a") return Family::A;
    if (s == "b") return Family::B;
    if (s == "c") return Family::C;
    throw BadArgument("unknown family '" + s + "' (expected mid, a, b or c)");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Mid: return "mid";
        case Family::A: return "a";
        case Family::B: return "b";
        case Family::C: return "c";
    }
    return "?";
}

namespace {
const TPoly kZero{};
const TPoly kOne{1};
const TPoly kT = TPoly::monomial(Rat(1), 1);
const TPoly kOneMinusT = kOne - kT;
const TPoly kTMinusOne = kT - kOne;
} // namespace

WeightSpec weights_for(Family f) {
    switch (f) {
        case Family::Mid:
            return {[](long k) { return k == 0 ? kOne : kZero; },
                    [](long) { return kOne; }};
        case Family::A:
            return {[](long k) { return k == 0 ? kOne : kZero; },
                    [](long) { return kT; }};
        case Family::B:
            return {[](long k) { return k == 0 ? kOne : kZero; },
                    [](long k) { return k % 2 == 0 ? kT : kOne; }};
        case Family::C:
            return {[](long k) {
                        if (k == 0) return kOne;
                        return k % 2 == 0 ? kOneMinusT : kTMinusOne;
                    },
                    [](long) { return kT; }};
    }
    throw BadArgument("bad family");
}

Int middle_binom(long n) { return binom(n, floor_div(n, 2)); }

Int shifted_middle(long n, long r) {
    if (n < 0) throw BadArgument("negative index");
    return binom(n, floor_div(n - r, 2));
}

std::vector<TPoly> moment_table(Family f, long nmax) {
    if (nmax < 0) throw BadArgument("negative moment count");
    WeightSpec w = weights_for(f);
    std::vector<TPoly> s, t;
    for (long k = 0; k <= nmax; ++k) {
        s.push_back(w.s(k));
        t.push_back(w.t(k));
    }
    // row[k] = weighted paths of the current length from height 0 to height k
    std::vector<TPoly> row(static_cast<size_t>(nmax) + 1), next(row.size());
    row[0] = kOne;
    std::vector<TPoly> out;
    out.push_back(row[0]);
    for (long n = 1; n <= nmax; ++n) {
        long hmax = std::min(n, nmax);
        for (long k = 0; k <= hmax; ++k) {
            TPoly v;
            if (k >= 1) v += row[static_cast<size_t>(k - 1)];
            v += s[static_cast<size_t>(k)] * row[static_cast<size_t>(k)];
            if (k + 1 < static_cast<long>(row.size()))
                v += t[static_cast<size_t>(k)] * row[static_cast<size_t>(k + 1)];
            next[static_cast<size_t>(k)] = std::move(v);
        }
        for (long k = hmax + 1; k < static_cast<long>(next.size()); ++k)
            next[static_cast<size_t>(k)] = TPoly();
        row.swap(next);
        out.push_back(row[0]);
    }
    return out;
}

TPoly moment(Family f, long n) { return moment_table(f, n).back(); }

namespace {
void brute_rec(const WeightSpec& w, long steps_left, long height, const TPoly& weight,
               TPoly& acc) {
    if (steps_left == 0) {
        if (height == 0) acc += weight;
        return;
    }
    if (height > steps_left) return; // cannot return to 0
    brute_rec(w, steps_left - 1, height + 1, weight, acc); // up
    TPoly sw = w.s(height);
    if (!sw.is_zero()) brute_rec(w, steps_left - 1, height, weight * sw, acc);
    if (height > 0) {
        TPoly tw = w.t(height - 1);
        if (!tw.is_zero()) brute_rec(w, steps_left - 1, height - 1, weight * tw, acc);
    }
}
} // namespace

TPoly brute_paths(Family f, long n) {
    if (n < 0) throw BadArgument("negative length");
    if (n > 18) throw TooLarge("exhaustive path enumeration capped at length 18");
    WeightSpec w = weights_for(f);
    TPoly acc;
    brute_rec(w, n, 0, kOne, acc);
    return acc;
}

/* explicit coefficient sums; agreement with the weighted path DP is one of
   the registered invariant checks and pins the down-step weight conventions */
TPoly a_poly(long n) {
    if (n < 0) throw BadArgument("negative index");
    TPoly out;
    for (long j = 0; j <= n / 2; ++j) {
        Int c = binom(n, j) - binom(n, j - 1);
        if (!is_zero(c)) out = out + TPoly::monomial(Rat(c), j);
    }
    return out;
}

TPoly b_poly(long n) {
    if (n < 0) throw BadArgument("negative index");
    TPoly out;
    for (long j = 0; j <= n; ++j) {
        Int c = binom(n / 2, j) * binom((n + 1) / 2, j);
        if (!is_zero(c)) out = out + TPoly::monomial(Rat(c), j);
    }
    return out;
}

TPoly c_poly(long n) { return moment(Family::C, n); }

} // namespace mbh
