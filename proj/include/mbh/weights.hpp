#pragma once

#include <functional>
#include <string>

#include "mbh/poly.hpp"

namespace mbh {

/* The four weight schemes: the plain middle-binomial one and its three
   one-parameter extensions. */
enum class Family { Mid, A, B, C };

Family family_from_string(const std::string& s);
const char* family_name(Family f);

/* Step weights for paths with up/level/down steps staying at height >= 0.
   s(k) weights a level step at height k; t(k) weights a down step that ENDS
   at height k. Up steps always weigh 1. Moments of the scheme are the
   weighted counts of paths from height 0 back to height 0. */
struct WeightSpec {
    std::function<TPoly(long)> s;
    std::function<TPoly(long)> t;
};

WeightSpec weights_for(Family f);

} // namespace mbh
