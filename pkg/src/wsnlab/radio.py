"""First-order radio model: distance-squared transmit cost, fixed receive cost."""

DEFAULT_E_ELEC = 5e-8   # electronics energy, J/bit
DEFAULT_E_AMP = 1e-10   # amplifier energy, J/bit/m^2


def tx_energy(bits: float, distance_m: float, *,
              e_elec: float = DEFAULT_E_ELEC, e_amp: float = DEFAULT_E_AMP) -> float:
    """Energy to transmit `bits` over `distance_m`: e_elec*k + e_amp*k*d^2."""
    if bits <= 0:
        raise ValueError("bits must be positive")
    if distance_m < 0:
        raise ValueError("distance must be non-negative")
    return e_elec * bits + e_amp * bits * distance_m * distance_m


def rx_energy(bits: float, *, e_elec: float = DEFAULT_E_ELEC) -> float:
    """Energy to receive `bits`, independent of distance: e_elec*k."""
    if bits <= 0:
        raise ValueError("bits must be positive")
    return e_elec * bits
