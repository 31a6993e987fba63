#include "rotodec/constants.hpp"

#include <cmath>

#include "rotodec/errors.hpp"

namespace rotodec
{
double thermal_photon_wavenumber(double temperature)
{
    if (!(temperature > 0) || !std::isfinite(temperature))
        throw DomainError("temperature must be positive and finite");
    return constants::k_B * temperature / (constants::hbar * constants::c);
}

} // namespace rotodec
