#include "orbitkit/exact_linalg.hpp"

namespace orbitkit {

template class Echelon<Rational>;
template class Echelon<ScalarQ>;

}  // namespace orbitkit
