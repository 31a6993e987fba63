#pragma once

namespace rotodec
{
//---------------------------------------------------------------------------//
/*!
 * SI values of the physical constants used by every rate formula.
 *
 * CODATA 2018. hbar, c and k_B are exact in the 2019 SI (hbar = h/2π with
 * h = 6.62607015e-34 J s exact, truncated here to 10 digits); epsilon_0 is
 * the CODATA 2018 recommended value (relative uncertainty 1.5e-10).
 */
struct PhysicalConstants
{
    double hbar;      //!< J s
    double c;         //!< m / s
    double k_B;       //!< J / K
    double epsilon_0; //!< F / m
};

inline constexpr PhysicalConstants codata2018{
    1.054571817e-34,
    299792458.0,
    1.380649e-23,
    8.8541878128e-12,
};

namespace constants
{
inline constexpr double hbar = codata2018.hbar;
inline constexpr double c = codata2018.c;
inline constexpr double k_B = codata2018.k_B;
inline constexpr double epsilon_0 = codata2018.epsilon_0;
inline constexpr double pi = 3.141592653589793238462643383279502884;
} // namespace constants

//! Thermal photon wavenumber k_th = k_B T / (hbar c) in 1/m.
//! Throws DomainError unless T > 0.
double thermal_photon_wavenumber(double temperature);

} // namespace rotodec
