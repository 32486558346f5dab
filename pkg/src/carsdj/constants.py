"""Physical constants for the angstrom / amu / cm^-1 / femtosecond unit system.

All energies in the package are wavenumbers (cm^-1), lengths are angstroms,
masses are atomic mass units and times are femtoseconds.  Every unit
conversion lives here so the rest of the code can stay free of stray
factors of h and c.
"""

import math

# SI definitions (exact) and CODATA 2018 atomic mass unit.
PLANCK_J_S = 6.62607015e-34
SPEED_OF_LIGHT_CM_S = 2.99792458e10
AMU_KG = 1.66053906660e-27

# Speed of light in cm/fs: multiplies a wavenumber to give a frequency in
# cycles per femtosecond.
C_CM_PER_FS = SPEED_OF_LIGHT_CM_S * 1e-15

# Angular frequency (rad/fs) of a 1 cm^-1 quantum.
TWO_PI_C = 2.0 * math.pi * C_CM_PER_FS

# hbar^2 / (amu * angstrom^2), expressed in cm^-1.  This is the only place
# the SI values enter; equals h / (4 pi^2 * amu * 1e-20 m^2 * c).
HBARSQ_CM1_AMU_ANG2 = PLANCK_J_S / (
    4.0 * math.pi**2 * AMU_KG * 1e-20 * SPEED_OF_LIGHT_CM_S
)

# Gaussian pulse bookkeeping: intensity FWHM = SIGMA_TO_FWHM * sigma_t.
SIGMA_TO_FWHM = 2.0 * math.sqrt(math.log(2.0))
