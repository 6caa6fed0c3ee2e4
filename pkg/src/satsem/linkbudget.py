"""Two-leg satellite relay link budget: slant range, FSPL, rain attenuation, SNR.

All powers are in dBm and all gains in dBi throughout the package. The
end-to-end SNR combines both legs of the relay (ground -> satellite ->
ground): path loss and rain attenuation are summed over the uplink and
downlink, the relay itself is represented by a single equivalent gain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EARTH_RADIUS_M = 6_371_000.0
BOLTZMANN_J_PER_K = 1.380649e-23

# Elevation angles below this are outside the intended operating envelope;
# the horizon itself (0 deg) is excluded because the slant-range geometry
# degenerates there.
DEFAULT_MIN_ELEVATION_DEG = 5.0


@dataclass(frozen=True)
class LinkGeometry:
    """Ground-terminal-to-satellite geometry on a spherical Earth."""

    altitude_m: float
    elevation_deg: float
    earth_radius_m: float = EARTH_RADIUS_M

    def __post_init__(self):
        if not self.altitude_m > 0:
            raise ValueError(f"altitude_m must be > 0, got {self.altitude_m}")
        if not 0 < self.elevation_deg <= 90:
            raise ValueError(
                f"elevation_deg must be in (0, 90], got {self.elevation_deg}"
            )
        if not self.earth_radius_m > 0:
            raise ValueError("earth_radius_m must be > 0")


@dataclass(frozen=True)
class RfParams:
    """RF chain parameters for the relay link.

    pt_dbm: transmit power. gt_dbi / gr_dbi: ground antenna gains.
    gs_dbi: equivalent gain of the relay satellite (treated as a single
    opaque gain; any on-board losses are assumed folded into it).
    """

    pt_dbm: float = 25.0
    gt_dbi: float = 40.0
    gr_dbi: float = 40.0
    gs_dbi: float = 85.0
    carrier_hz: float = 2.0e9
    temp_k: float = 290.0
    bandwidth_hz: float = 20.0e6
    boltzmann_j_per_k: float = BOLTZMANN_J_PER_K

    def __post_init__(self):
        for name in ("pt_dbm", "gt_dbi", "gr_dbi", "gs_dbi"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not self.carrier_hz > 0:
            raise ValueError("carrier_hz must be > 0")
        if not self.temp_k > 0:
            raise ValueError("temp_k must be > 0")
        if not self.bandwidth_hz > 0:
            raise ValueError("bandwidth_hz must be > 0")


@dataclass(frozen=True)
class WeatherState:
    """Rain state on one leg: specific attenuation and effective rain path."""

    gamma_r_db_per_km: float = 0.0
    effective_path_km: float = 0.0

    def __post_init__(self):
        if self.gamma_r_db_per_km < 0:
            raise ValueError("gamma_r_db_per_km must be >= 0")
        if self.effective_path_km < 0:
            raise ValueError("effective_path_km must be >= 0")


CLEAR_WEATHER = WeatherState(0.0, 0.0)


@dataclass(frozen=True)
class LinkBudget:
    """Per-leg losses plus the resulting end-to-end SNR (all in dB/dBm)."""

    fspl_up_db: float
    fspl_down_db: float
    ra_up_db: float
    ra_down_db: float
    noise_dbm: float
    snr_db: float


def slant_range(geometry: LinkGeometry) -> float:
    """Spherical-Earth slant range in meters.

    d = sqrt((Re + h)^2 - Re^2 cos^2(eps)) - Re sin(eps); equals the
    altitude at zenith and approaches sqrt((Re+h)^2 - Re^2) at the horizon.
    """
    re = geometry.earth_radius_m
    h = geometry.altitude_m
    eps = math.radians(geometry.elevation_deg)
    return math.sqrt((re + h) ** 2 - (re * math.cos(eps)) ** 2) - re * math.sin(eps)


def fspl_db(distance_m: float, carrier_hz: float) -> float:
    """Free-space path loss: 20 log10(d) + 20 log10(f) - 147.56."""
    if not distance_m > 0:
        raise ValueError("distance_m must be > 0")
    if not carrier_hz > 0:
        raise ValueError("carrier_hz must be > 0")
    return 20.0 * math.log10(distance_m) + 20.0 * math.log10(carrier_hz) - 147.56


def rain_attenuation_db(weather: WeatherState) -> float:
    """Rain attenuation of one leg: gamma_R * L_e."""
    return weather.gamma_r_db_per_km * weather.effective_path_km


def specific_attenuation_db_per_km(
    rain_rate_mm_per_h: float, kappa: float = 0.0001, alpha: float = 1.0
) -> float:
    """Power-law specific attenuation gamma_R = kappa * R^alpha.

    Coefficient defaults are placeholders for S-band (attenuation is
    negligible there); pass frequency-appropriate (kappa, alpha) for
    rain-driven scenarios.
    """
    if rain_rate_mm_per_h < 0:
        raise ValueError("rain_rate_mm_per_h must be >= 0")
    return kappa * rain_rate_mm_per_h**alpha


def noise_power_dbm(rf: RfParams) -> float:
    """Thermal noise power 10 log10(k * T * B), expressed in dBm."""
    watts = rf.boltzmann_j_per_k * rf.temp_k * rf.bandwidth_hz
    return 10.0 * math.log10(watts) + 30.0


def snr_db(rf: RfParams, fspl_all_db: float, ra_all_db: float) -> float:
    """End-to-end SNR: Pt + Gt + Gs + Gr - RA_all - FSPL_all - N."""
    n = noise_power_dbm(rf)
    return rf.pt_dbm + rf.gt_dbi + rf.gs_dbi + rf.gr_dbi - ra_all_db - fspl_all_db - n


def compute_link_budget(
    geometry_up: LinkGeometry,
    geometry_down: LinkGeometry,
    rf: RfParams,
    weather_up: WeatherState = CLEAR_WEATHER,
    weather_down: WeatherState = CLEAR_WEATHER,
) -> LinkBudget:
    """Full budget for the relay link; leg losses are summed (FSPL_all, RA_all)."""
    fspl_up = fspl_db(slant_range(geometry_up), rf.carrier_hz)
    fspl_down = fspl_db(slant_range(geometry_down), rf.carrier_hz)
    ra_up = rain_attenuation_db(weather_up)
    ra_down = rain_attenuation_db(weather_down)
    return LinkBudget(
        fspl_up_db=fspl_up,
        fspl_down_db=fspl_down,
        ra_up_db=ra_up,
        ra_down_db=ra_down,
        noise_dbm=noise_power_dbm(rf),
        snr_db=snr_db(rf, fspl_up + fspl_down, ra_up + ra_down),
    )
