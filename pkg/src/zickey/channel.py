"""Parameter types for the two-user Gaussian one-sided interference channel.

Receiver 1 sees both transmitters (Y1 = h11*X1 + h21*X2 + Z1), receiver 2
only its own (Y2 = h22*X2 + Z2), with unit noise. Transmitter/receiver pair 2
holds a shared secret key of rate rk, and user 2's message must stay
confidential from receiver 1. All rates are bits per channel use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class DomainError(ValueError):
    """A parameter left its admissible domain."""


@dataclass(frozen=True)
class ChannelParams:
    """Channel gains, per-user power budgets and the shared-key rate."""

    h11: float
    h22: float
    h21: float
    p1: float
    p2: float
    rk: float = 0.0

    def __post_init__(self):
        for name in ("h11", "h22", "h21", "p1", "p2", "rk"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise DomainError(f"{name} must be a finite number, got {v!r}")
        if self.p1 < 0 or self.p2 < 0:
            raise DomainError("power budgets must be nonnegative")
        if self.rk < 0:
            raise DomainError("key rate must be nonnegative")


@dataclass(frozen=True)
class SchemeParams:
    """Free parameters of the layered coding schemes, each in [0, 1].

    lambda1: fraction of user 1's spent power carrying its message; the rest
             is transmitted as artificial noise.
    lambda2: fraction of user 2's spent power on the private layer; the rest
             carries the common (decodable at receiver 1) layer.
    beta1, beta2: fraction of each power budget actually spent.
    eta: fraction of the key protecting the common layer; 1 - eta protects
         the private layer inside the wiretap code.
    """

    lambda1: float = 1.0
    lambda2: float = 1.0
    beta1: float = 1.0
    beta2: float = 1.0
    eta: float = 1.0

    def __post_init__(self):
        for name in ("lambda1", "lambda2", "beta1", "beta2", "eta"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not 0.0 <= v <= 1.0:
                raise DomainError(f"{name} must lie in [0, 1], got {v!r}")


def snr_inr(ch: ChannelParams):
    """Received powers (snr1, snr2, inr1) for unit noise variance."""
    return ch.h11**2 * ch.p1, ch.h22**2 * ch.p2, ch.h21**2 * ch.p2


def classify_regime(ch: ChannelParams) -> str:
    """'weak_moderate' when the cross link is at most as strong as user 2's
    direct link (ties included), 'high' otherwise."""
    _, snr2, inr1 = snr_inr(ch)
    return "weak_moderate" if inr1 <= snr2 else "high"


def split_powers(ch: ChannelParams, sp: SchemeParams):
    """Transmit powers (p1_message, p1_noise, p2_private, p2_common)."""
    p1m = sp.lambda1 * sp.beta1 * ch.p1
    p1a = (1.0 - sp.lambda1) * sp.beta1 * ch.p1
    p2p = sp.lambda2 * sp.beta2 * ch.p2
    p2c = (1.0 - sp.lambda2) * sp.beta2 * ch.p2
    return p1m, p1a, p2p, p2c


def db_to_linear(value_db: float) -> float:
    """Convert a power-like quantity from dB to linear scale."""
    return 10.0 ** (value_db / 10.0)
