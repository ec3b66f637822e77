"""Outer bounds on the secrecy rate region.

Three bound families are combined:

- point-to-point caps on each link,
- a keyed R2 bound from giving receiver 1 user 2's signal minus what the
  cross link already reveals (valid in every regime),
- a keyed sum bound from letting receiver 1 decode the interference,
  applicable only while the cross link is weaker than user 2's direct link
  (snr2 > inr1). Its R2 component is exposed separately but is only valid
  as part of the sum; it is not an R2 face on its own (artificial noise
  can push R2 past it at small key rates).

An optional no-secrecy sum bound (classical one-sided-interference genie
argument, not part of the keyed-bound family) can be stacked on top; it is
off by default and marked external wherever it is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelParams, snr_inr
from .geometry import Region, intersect_halfplanes


@dataclass(frozen=True)
class OuterBounds:
    """Bound values in bits/use; None marks an inapplicable bound."""

    r1_p2p: float
    r2_p2p: float
    r2_keyed: float
    r2_sum_part: float | None
    sum_keyed: float | None
    sum_nonsecrecy: float | None = None


def _c(x):
    return 0.5 * np.log2(1.0 + x)


def sum_rate_outer(ch: ChannelParams):
    """Keyed sum-rate outer bound, or None when inr1 >= snr2.

    Composed as the R1 point-to-point cap plus the interference-decoding
    R2 component; in symmetric channels this collapses to
    log2(1+snr) - 0.5*log2(1+inr) + rk.
    """
    snr1, snr2, inr1 = snr_inr(ch)
    if not snr2 > inr1:
        return None
    return float((_c(snr1) + _c(snr2)) - _c(inr1) + ch.rk)


def r2_sum_component(ch: ChannelParams):
    """R2 component of the keyed sum bound, or None when inr1 >= snr2.

    Only meaningful inside the sum composition; not a standalone R2 bound.
    """
    snr1, snr2, inr1 = snr_inr(ch)
    if not snr2 > inr1:
        return None
    return float(_c(snr2) - _c(inr1) + ch.rk)


def r2_outer_high(ch: ChannelParams) -> float:
    """Keyed R2 outer bound; tight at high interference, valid everywhere."""
    snr1, snr2, inr1 = snr_inr(ch)
    return float(_c(snr2 - snr2 * inr1 / (1.0 + snr1 + inr1)) + ch.rk)


def nonsecrecy_sum_bound(ch: ChannelParams) -> float:
    """Sum capacity bound of the channel without any secrecy constraint.

    External reference bound (genie-aided, no key involved); off by default
    in composite regions and excluded from containment invariants.
    """
    snr1, snr2, inr1 = snr_inr(ch)
    extra = 0.5 * np.log2((1.0 + snr2) / (1.0 + inr1))
    return float(_c(snr1 + inr1) + max(0.0, float(extra)))


def evaluate_outer_bounds(ch: ChannelParams,
                          include_nonsecrecy: bool = False) -> OuterBounds:
    """All bound values for one channel; inapplicable entries are None."""
    snr1, snr2, _ = snr_inr(ch)
    return OuterBounds(
        r1_p2p=float(_c(snr1)),
        r2_p2p=float(_c(snr2)),
        r2_keyed=r2_outer_high(ch),
        r2_sum_part=r2_sum_component(ch),
        sum_keyed=sum_rate_outer(ch),
        sum_nonsecrecy=nonsecrecy_sum_bound(ch) if include_nonsecrecy else None,
    )


def composite_outer_region(ch: ChannelParams,
                           include_nonsecrecy: bool = False) -> Region:
    """Intersection of every applicable outer bound as a rate region.

    Faces: R1 <= r1_p2p, R2 <= min(r2_keyed, r2_p2p), and the keyed sum
    bound when applicable. The no-secrecy sum face is stacked on only when
    include_nonsecrecy is set.
    """
    ob = evaluate_outer_bounds(ch, include_nonsecrecy)
    planes = [
        (1.0, 0.0, ob.r1_p2p),
        (0.0, 1.0, min(ob.r2_keyed, ob.r2_p2p)),
    ]
    if ob.sum_keyed is not None:
        planes.append((1.0, 1.0, ob.sum_keyed))
    if ob.sum_nonsecrecy is not None:
        planes.append((1.0, 1.0, ob.sum_nonsecrecy))
    return intersect_halfplanes(planes)


def outer_max_sum(ch: ChannelParams, include_nonsecrecy: bool = False) -> float:
    """Largest R1 + R2 allowed by the composite outer region."""
    return composite_outer_region(ch, include_nonsecrecy).max_sum
