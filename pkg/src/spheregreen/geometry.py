"""Points on the R-radius hypersphere, geodesic separations and measure weights.

Standard hyperspherical coordinates use a radial angle ``theta`` measured
from the pole x_0 = R, intermediate angles ``mids = [theta_2, ..., theta_{d-1}]``
and an azimuth ``phi``. The embedding is

    x_0 = R cos(theta)
    x_1 = R sin(theta) cos(theta_{d-1})
    x_2 = R sin(theta) sin(theta_{d-1}) cos(theta_{d-2})
    ...
    x_{d-1} = R sin(theta) sin(theta_{d-1}) ... sin(theta_2) cos(phi)
    x_d     = R sin(theta) sin(theta_{d-1}) ... sin(theta_2) sin(phi)
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ArgumentError, DomainError

CLAMP_TOL = 1e-9


def _wrap_phi(phi: float) -> float:
    """Map an azimuth to [-pi, pi)."""
    return (phi + math.pi) % (2.0 * math.pi) - math.pi


def _check_angle(name: str, value: float, hi: float) -> float:
    value = float(value)
    if not (math.isfinite(value) and 0.0 <= value <= hi):
        raise DomainError(f"{name}={value} must lie in [0, {hi:g}]")
    return value


def _check_radius(R: float) -> float:
    R = float(R)
    if not (math.isfinite(R) and R > 0):
        raise DomainError(f"radius R={R} must be positive and finite")
    return R


@dataclass(frozen=True)
class SpherePoint:
    """A point of S_R^d in standard hyperspherical coordinates.

    The azimuth is wrapped into [-pi, pi); the polar angles are validated
    to lie in [0, pi].
    """

    R: float
    theta: float
    mids: tuple = field(default_factory=tuple)
    phi: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "R", _check_radius(self.R))
        object.__setattr__(self, "theta", _check_angle("theta", self.theta, math.pi))
        mids = tuple(_check_angle(f"theta_{i + 2}", t, math.pi) for i, t in enumerate(self.mids))
        object.__setattr__(self, "mids", mids)
        if not math.isfinite(self.phi):
            raise DomainError(f"phi={self.phi} must be finite")
        object.__setattr__(self, "phi", _wrap_phi(float(self.phi)))

    @property
    def d(self) -> int:
        return 2 + len(self.mids)

    def unit_vector(self) -> np.ndarray:
        """Embedding of the point scaled to the unit sphere, shape (d+1,)."""
        out = np.empty(self.d + 1)
        out[0] = math.cos(self.theta)
        run = math.sin(self.theta)
        for i, t in enumerate(reversed(self.mids), start=1):
            out[i] = run * math.cos(t)
            run *= math.sin(t)
        out[-2] = run * math.cos(self.phi)
        out[-1] = run * math.sin(self.phi)
        return out

    def embed(self) -> np.ndarray:
        """Cartesian coordinates in R^{d+1}."""
        return self.R * self.unit_vector()

    def to_dict(self) -> dict:
        return {"R": self.R, "theta": self.theta, "mids": list(self.mids), "phi": self.phi}

    @classmethod
    def from_dict(cls, data: dict) -> "SpherePoint":
        try:
            return cls(R=data["R"], theta=data["theta"], mids=tuple(data.get("mids", ())),
                       phi=data.get("phi", 0.0))
        except KeyError as exc:
            raise ArgumentError(f"SpherePoint JSON is missing field {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "SpherePoint":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class HopfPoint:
    """A point of S_R^3 in Hopf coordinates (vartheta, phi1, phi2)."""

    R: float
    vartheta: float
    phi1: float = 0.0
    phi2: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "R", _check_radius(self.R))
        object.__setattr__(self, "vartheta", _check_angle("vartheta", self.vartheta, math.pi / 2))
        for name in ("phi1", "phi2"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name}={v} must be finite")
            object.__setattr__(self, name, _wrap_phi(float(v)))

    def embed(self) -> np.ndarray:
        c, s = math.cos(self.vartheta), math.sin(self.vartheta)
        return self.R * np.array([c * math.cos(self.phi1), c * math.sin(self.phi1),
                                  s * math.cos(self.phi2), s * math.sin(self.phi2)])

    def to_dict(self) -> dict:
        return {"R": self.R, "vartheta": self.vartheta, "phi1": self.phi1, "phi2": self.phi2}

    @classmethod
    def from_dict(cls, data: dict) -> "HopfPoint":
        try:
            return cls(R=data["R"], vartheta=data["vartheta"], phi1=data.get("phi1", 0.0),
                       phi2=data.get("phi2", 0.0))
        except KeyError as exc:
            raise ArgumentError(f"HopfPoint JSON is missing field {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "HopfPoint":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class GeodesicSeparation:
    """Separation of two points: cos(gamma), geodesic angle and arc length."""

    cos_gamma: float
    Theta: float
    distance: float


def clamp_unit(c: float, what: str = "inner product") -> float:
    """Clamp a cosine into [-1, 1], refusing overshoots larger than 1e-9."""
    if c > 1.0 or c < -1.0:
        excess = abs(c) - 1.0
        if excess > CLAMP_TOL:
            raise DomainError(f"{what} {c!r} exceeds [-1, 1] by {excess:.3g} (> {CLAMP_TOL:g})")
        return math.copysign(1.0, c)
    return c


def _same_space(p, q) -> None:
    if type(p) is not type(q):
        raise ArgumentError("points use different coordinate systems")
    if getattr(p, "d", None) != getattr(q, "d", None):
        raise ArgumentError(f"dimension mismatch: d={p.d} vs d={q.d}")
    if not math.isclose(p.R, q.R, rel_tol=1e-12):
        raise ArgumentError(f"radius mismatch: R={p.R} vs R={q.R}")


def ab_from_angles(theta: float, theta_p: float, mids: Sequence[float],
                   mids_p: Sequence[float]) -> tuple[float, float]:
    """A_d and B_d with cos(Theta) = B_d cos(phi - phi') + A_d.

    Angles are given as ``mids = [theta_2, ..., theta_{d-1}]``.
    """
    if len(mids) != len(mids_p):
        raise ArgumentError("intermediate angle lists differ in length")
    a = math.cos(theta) * math.cos(theta_p)
    run = math.sin(theta) * math.sin(theta_p)
    # Walk from the outermost intermediate angle theta_{d-1} inwards.
    for t, tp in zip(reversed(mids), reversed(mids_p)):
        a += run * math.cos(t) * math.cos(tp)
        run *= math.sin(t) * math.sin(tp)
    return a, run


def ab_general(p: SpherePoint, q: SpherePoint) -> tuple[float, float]:
    """Coefficients (A_d, B_d) such that the separation cosine is B_d cos(psi) + A_d."""
    _same_space(p, q)
    return ab_from_angles(p.theta, q.theta, p.mids, q.mids)


def separation_cos_gamma(p: SpherePoint, q: SpherePoint) -> float:
    """cos(gamma) of the unit position vectors, clamped to [-1, 1]."""
    a, b = ab_general(p, q)
    return clamp_unit(a + b * math.cos(p.phi - q.phi))


def geodesic_distance(p: SpherePoint, q: SpherePoint) -> GeodesicSeparation:
    """Great-circle separation of two points of the same hypersphere."""
    c = separation_cos_gamma(p, q)
    big = math.acos(c)
    return GeodesicSeparation(cos_gamma=c, Theta=big, distance=p.R * big)


def hopf_cos_distance(p: HopfPoint, q: HopfPoint) -> float:
    """Cosine of the geodesic angle between two Hopf-coordinate points."""
    if not math.isclose(p.R, q.R, rel_tol=1e-12):
        raise ArgumentError(f"radius mismatch: R={p.R} vs R={q.R}")
    c = (math.cos(p.vartheta) * math.cos(q.vartheta) * math.cos(p.phi1 - q.phi1)
         + math.sin(p.vartheta) * math.sin(q.vartheta) * math.cos(p.phi2 - q.phi2))
    return clamp_unit(c)


def volume_weight(p: SpherePoint) -> float:
    """Density of the Riemannian measure with respect to d(theta) d(theta_{d-1}) ... d(phi)."""
    w = p.R ** p.d * math.sin(p.theta) ** (p.d - 1)
    for i, t in enumerate(p.mids, start=1):       # theta_2 carries power 1
        w *= math.sin(t) ** i
    return w


def hypersphere_area(d: int, R: float = 1.0) -> float:
    """Surface measure of S_R^d, 2 pi^{(d+1)/2} R^d / Gamma((d+1)/2)."""
    return 2.0 * math.pi ** ((d + 1) / 2.0) * R ** d / math.gamma((d + 1) / 2.0)


def angular_area(d: int) -> float:
    """Measure of the (d-1)-sphere of directions, 2 pi^{d/2} / Gamma(d/2)."""
    return 2.0 * math.pi ** (d / 2.0) / math.gamma(d / 2.0)
