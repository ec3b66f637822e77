"""Achievable rate triples and swept rate regions.

Four transmission schemes are evaluated, all under a weak-secrecy constraint
at receiver 1 for user 2's message:

- key_splitting: layered common/private coding at user 2, artificial noise
  at user 1, with the shared key split between the two layers (fraction eta
  on the common layer).
- rate_splitting: key_splitting with the whole key on the common layer
  (eta = 1).
- key_as_wiretap: no common layer, no noise layer; the key enlarges the
  wiretap code (eta = 0 specialization with full power splits).
- one_time_pad: the key directly encrypts min(rk, capacity) bits; the cross
  link is treated as noise.

Each scheme maps parameters to caps (r1_cap, r2_cap, sum_cap); a missing sum
face is +inf. sweep_region evaluates a scheme over a parameter grid and
returns the down-closed convex hull of every induced rate polygon.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .channel import ChannelParams, DomainError, SchemeParams
from .geometry import Region, hull, pareto_filter

SCHEMES = ("key_splitting", "rate_splitting", "key_as_wiretap", "one_time_pad")


@dataclass(frozen=True)
class RateConstraints:
    """Caps defining one rate polygon {R1 <= r1, R2 <= r2, R1+R2 <= sum}."""

    r1_cap: float
    r2_cap: float
    sum_cap: float = math.inf


@dataclass(frozen=True)
class GridSpec:
    """Point counts per swept parameter axis (axes span [0, 1] uniformly).

    include_gdof_split forces one extra lambda2 sample putting the private
    layer exactly at the cross-link noise floor (p2_private = 1/h21^2),
    which is where the private layer stops hurting receiver 1's decoding.
    no_an pins lambda1 = 1 (no artificial noise); full_power pins
    beta1 = beta2 = 1.
    """

    n_lambda1: int = 33
    n_lambda2: int = 33
    n_beta1: int = 33
    n_beta2: int = 33
    n_eta: int = 21
    include_gdof_split: bool = True
    no_an: bool = False
    full_power: bool = False


def _c(x):
    """Gaussian capacity term in bits, 0.5*log2(1+x), elementwise."""
    return 0.5 * np.log2(1.0 + x)


def _key_splitting_caps(ch, lam1, lam2, b1, b2, eta):
    """Vectorized caps of the key-splitting scheme (broadcastable inputs)."""
    g11, g22, g21 = ch.h11**2, ch.h22**2, ch.h21**2
    p1m = lam1 * b1 * ch.p1
    p1a = (1.0 - lam1) * b1 * ch.p1
    p2p = lam2 * b2 * ch.p2
    p2c = (1.0 - lam2) * b2 * ch.p2
    n1 = 1.0 + g11 * p1a + g21 * p2p
    r1 = _c(g11 * p1m / n1)
    leak = _c(g21 * p2p / (1.0 + g11 * p1a))
    term_c = np.minimum(np.minimum(_c(g21 * p2c / n1),
                                   _c(g22 * p2c / (1.0 + g22 * p2p))),
                        eta * ch.rk)
    cap_priv = _c(g22 * p2p)
    term_p = np.maximum(0.0, np.minimum(cap_priv,
                                        cap_priv - leak + (1.0 - eta) * ch.rk))
    r2 = term_c + term_p
    rsum = _c((g11 * p1m + g21 * p2c) / n1) + term_p
    return r1, r2, rsum


def _wiretap_caps(ch, b1, b2):
    """Vectorized caps of the key-as-wiretap scheme."""
    g11, g22, g21 = ch.h11**2, ch.h22**2, ch.h21**2
    q1 = b1 * ch.p1
    q2 = b2 * ch.p2
    r1 = _c(g11 * q1 / (1.0 + g21 * q2))
    cap2 = _c(g22 * q2)
    leak = _c(g21 * q2)
    r2 = np.maximum(0.0, np.minimum(cap2, cap2 - leak + ch.rk))
    return r1, r2


def _otp_caps(ch, b1, b2):
    """Vectorized caps of the one-time-pad scheme."""
    g11, g22, g21 = ch.h11**2, ch.h22**2, ch.h21**2
    q1 = b1 * ch.p1
    q2 = b2 * ch.p2
    r1 = _c(g11 * q1 / (1.0 + g21 * q2))
    r2 = np.minimum(ch.rk, _c(g22 * q2))
    return r1, r2


def key_splitting_point(ch: ChannelParams, sp: SchemeParams) -> RateConstraints:
    """Caps of the key-splitting scheme at one parameter point."""
    r1, r2, rsum = _key_splitting_caps(ch, sp.lambda1, sp.lambda2,
                                       sp.beta1, sp.beta2, sp.eta)
    return RateConstraints(float(r1), float(r2), float(rsum))


def rate_splitting_point(ch: ChannelParams, sp: SchemeParams) -> RateConstraints:
    """Key-splitting caps with the whole key on the common layer."""
    return key_splitting_point(ch, replace(sp, eta=1.0))


def _check_fraction(name, v):
    if not isinstance(v, (int, float)) or not 0.0 <= v <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {v!r}")


def key_as_wiretap_point(ch: ChannelParams, beta1: float = 1.0,
                         beta2: float = 1.0) -> RateConstraints:
    """Caps when the key only enlarges the wiretap code (no layering)."""
    _check_fraction("beta1", beta1)
    _check_fraction("beta2", beta2)
    r1, r2 = _wiretap_caps(ch, beta1, beta2)
    return RateConstraints(float(r1), float(r2), math.inf)


def one_time_pad_point(ch: ChannelParams, beta1: float = 1.0,
                       beta2: float = 1.0) -> RateConstraints:
    """Caps when the key is spent as a one-time pad."""
    _check_fraction("beta1", beta1)
    _check_fraction("beta2", beta2)
    r1, r2 = _otp_caps(ch, beta1, beta2)
    return RateConstraints(float(r1), float(r2), math.inf)


def gdof_split_lambda2(ch: ChannelParams) -> float:
    """lambda2 (at beta2 = 1) putting the private power at min(p2, 1/h21^2)."""
    g21 = ch.h21**2
    if g21 * ch.p2 <= 0.0:
        return 1.0
    return min(1.0, 1.0 / (g21 * ch.p2))


def polygon_points(r1_cap, r2_cap, sum_cap) -> np.ndarray:
    """Corner candidates of {R1<=a, R2<=b, R1+R2<=c} in the first quadrant.

    Accepts broadcast arrays; +inf sum caps are handled. Returns (4n, 2).
    """
    a, b, c = np.broadcast_arrays(np.atleast_1d(np.asarray(r1_cap, dtype=float)),
                                  np.asarray(r2_cap, dtype=float),
                                  np.asarray(sum_cap, dtype=float))
    a, b, c = a.ravel(), b.ravel(), c.ravel()
    ax = np.minimum(a, c)
    by = np.minimum(b, c)
    zeros = np.zeros_like(ax)
    with np.errstate(invalid="ignore"):
        v3y = np.clip(c - ax, 0.0, by)
        v4x = np.clip(c - by, 0.0, ax)
    return np.vstack([
        np.column_stack([ax, zeros]),
        np.column_stack([zeros, by]),
        np.column_stack([ax, v3y]),
        np.column_stack([v4x, by]),
    ])


def point_region(rc: RateConstraints) -> Region:
    """Down-closed polygon achieved at a single parameter point."""
    return hull(polygon_points(rc.r1_cap, rc.r2_cap, rc.sum_cap))


def _axis(n: int, pinned: bool) -> np.ndarray:
    if pinned:
        return np.array([1.0])
    return np.linspace(0.0, 1.0, n)


def _sweep_axes(ch, scheme, grid):
    lam1 = _axis(grid.n_lambda1, grid.no_an)
    lam2 = np.linspace(0.0, 1.0, grid.n_lambda2)
    if grid.include_gdof_split:
        lam2 = np.unique(np.concatenate([lam2, [gdof_split_lambda2(ch)]]))
    b1 = _axis(grid.n_beta1, grid.full_power)
    b2 = _axis(grid.n_beta2, grid.full_power)
    if scheme == "key_splitting":
        eta = np.linspace(0.0, 1.0, grid.n_eta)
    else:
        eta = np.array([1.0])
    return lam1, lam2, b1, b2, eta


def _warn_coarse(scheme, grid):
    swept = []
    if scheme in ("key_splitting", "rate_splitting"):
        if not grid.no_an:
            swept.append(("lambda1", grid.n_lambda1))
        swept.append(("lambda2", grid.n_lambda2))
    if not grid.full_power:
        swept.append(("beta1", grid.n_beta1))
        swept.append(("beta2", grid.n_beta2))
    if scheme == "key_splitting":
        swept.append(("eta", grid.n_eta))
    for name, n in swept:
        if n < 2:
            warnings.warn(f"swept axis {name} has fewer than 2 points; "
                          "the region will be badly undersampled", stacklevel=3)


def sweep_region(ch: ChannelParams, scheme: str,
                 grid: GridSpec | None = None) -> Region:
    """Down-closed hull of a scheme's rate polygons over a parameter grid.

    The grid is the full cartesian product of the scheme's free parameter
    axes; pinned axes (no_an, full_power, eta for schemes that fix it)
    contribute a single point. Deterministic for identical inputs.
    """
    if scheme not in SCHEMES:
        raise DomainError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    grid = grid or GridSpec()
    _warn_coarse(scheme, grid)
    lam1, lam2, b1, b2, eta = _sweep_axes(ch, scheme, grid)

    survivors = []
    if scheme in ("key_splitting", "rate_splitting"):
        l1 = lam1[:, None, None, None]
        l2 = lam2[None, :, None, None]
        bb1 = b1[None, None, :, None]
        bb2 = b2[None, None, None, :]
        for e in eta:
            r1, r2, rsum = _key_splitting_caps(ch, l1, l2, bb1, bb2, float(e))
            survivors.append(pareto_filter(polygon_points(r1, r2, rsum)))
    else:
        bb1 = b1[:, None]
        bb2 = b2[None, :]
        if scheme == "key_as_wiretap":
            r1, r2 = _wiretap_caps(ch, bb1, bb2)
        else:
            r1, r2 = _otp_caps(ch, bb1, bb2)
        survivors.append(pareto_filter(polygon_points(r1, r2, math.inf)))
    return hull(np.vstack(survivors))


def max_sum_rate(ch: ChannelParams, scheme: str,
                 grid: GridSpec | None = None) -> float:
    """Largest R1 + R2 the scheme achieves on the grid."""
    if scheme not in SCHEMES:
        raise DomainError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    grid = grid or GridSpec()
    lam1, lam2, b1, b2, eta = _sweep_axes(ch, scheme, grid)
    best = 0.0
    if scheme in ("key_splitting", "rate_splitting"):
        l1 = lam1[:, None, None, None]
        l2 = lam2[None, :, None, None]
        bb1 = b1[None, None, :, None]
        bb2 = b2[None, None, None, :]
        for e in eta:
            r1, r2, rsum = _key_splitting_caps(ch, l1, l2, bb1, bb2, float(e))
            best = max(best, float(np.minimum(rsum, r1 + r2).max()))
    else:
        bb1 = b1[:, None]
        bb2 = b2[None, :]
        if scheme == "key_as_wiretap":
            r1, r2 = _wiretap_caps(ch, bb1, bb2)
        else:
            r1, r2 = _otp_caps(ch, bb1, bb2)
        best = float((r1 + r2).max())
    return best
