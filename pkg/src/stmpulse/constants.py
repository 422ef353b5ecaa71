"""Physical constants and unit conversions.

Internal units: energy in eV, time in fs, length in Angstrom, charge in
units of the elementary charge e (electrons carry charge -1).
"""

HBAR_EV_FS = 0.6582119569      # reduced Planck constant, eV fs
H_EV_FS = 4.135667696          # Planck constant, eV fs
KB_EV_K = 8.617333262e-5       # Boltzmann constant, eV/K

E_PER_FS_TO_NA = 1.602176634e5   # 1 e/fs = 160217.6634 nA
V_PER_NM_TO_EV_PER_ANG = 0.1     # field (V/nm) -> potential slope (eV/Ang per e)
ANG_PER_FS_TO_M_PER_S = 1.0e5    # 1 Ang/fs = 1e5 m/s
