#pragma once

#include <complex>

namespace deltacomb {

using Complex = std::complex<double>;

}
