#include "mbh/series.hpp"

namespace mbh {

// Instantiate the two rings used throughout so other units link fast.
template class Series<Rat>;
template class Series<TPoly>;

template Series<Rat> ser_div_exact(const Series<Rat>&, const Series<Rat>&);
template Series<TPoly> ser_div_exact(const Series<TPoly>&, const Series<TPoly>&);
template Series<Rat> ser_sqrt(const Series<Rat>&);
template Series<TPoly> ser_sqrt(const Series<TPoly>&);
template Series<Rat> ser_from_rational(const Poly<Rat>&, const Poly<Rat>&, long);
template Series<TPoly> ser_from_rational(const Poly<TPoly>&, const Poly<TPoly>&, long);

} // namespace mbh
