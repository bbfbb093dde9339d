"""Closed-form performance numbers and parameter sweeps.

All quantities are exact: rationals via fractions.Fraction, counts as
arbitrary-precision ints (the MaN subpacketization overflows 64 bits
already at modest q). Decimal rendering happens only at the output
boundary, at 12 significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb

from crosscache.constructions import affine_parameters
from crosscache.fields import is_prime_power
from crosscache.system import SystemConfig


@dataclass(frozen=True)
class SchemeMetrics:
    """Performance of one (design, z, t) instance of the proposed scheme."""

    n_users: int
    subpacketization: int
    rate: Fraction
    per_user_rate: Fraction
    gain: int
    cache_fraction: Fraction
    access_fraction: Fraction
    n_caches: int
    caches_per_user: int


@dataclass(frozen=True)
class ManMetrics:
    """The dedicated-cache MaN baseline at the same cache count and M/N."""

    n_users: int
    cache_fraction: Fraction
    rate: Fraction
    per_user_rate: Fraction
    gain: int
    subpacketization: int


def scheme_metrics(config: SystemConfig) -> SchemeMetrics:
    """Exact rate, gain, and per-user rate for a configured instance.

    Rate is mu_z * C(b_r, t+1)^z * C(r, z) / v: one group per choice of z
    classes and t+1 blocks each, mu_z transmissions per group, v subfiles
    per file. Each transmission serves (t+1)^z users.
    """
    d, z, t = config.design, config.z, config.t
    rate = Fraction(config.mu_z * comb(d.b_r, t + 1) ** z * comb(d.r, z), d.v)
    n_users = config.n_users
    return SchemeMetrics(
        n_users=n_users,
        subpacketization=d.v,
        rate=rate,
        per_user_rate=rate / n_users,
        gain=(t + 1) ** z,
        cache_fraction=config.cache_fraction,
        access_fraction=config.access_fraction,
        n_caches=d.b,
        caches_per_user=t * z,
    )


def affine_scheme_metrics(q: int, m: int, t: int) -> SchemeMetrics:
    """scheme_metrics from the affine closed forms alone (z = 2, any prime power q).

    Lets sweeps cover large q without building field tables or the design;
    agrees exactly with scheme_metrics(configure(affine_resolvable(q, m), 2, t)).
    """
    p = affine_parameters(q, m)
    if not 1 <= t <= p.b_r:
        raise ValueError(f"t must be in 1..{p.b_r}, got {t}")
    z = 2
    rate = Fraction(p.mu2 * comb(p.b_r, t + 1) ** z * comb(p.r, z), p.v)
    n_users = comb(p.r, z) * comb(p.b_r, t) ** z
    access = Fraction(2 * q * t - t * t, q * q)
    return SchemeMetrics(
        n_users=n_users,
        subpacketization=p.v,
        rate=rate,
        per_user_rate=rate / n_users,
        gain=(t + 1) ** z,
        cache_fraction=Fraction(1, q),
        access_fraction=access,
        n_caches=p.b,
        caches_per_user=t * z,
    )


def man_metrics(q: int, m: int) -> ManMetrics:
    """MaN baseline with one dedicated cache per user, K = b and M/N = 1/q."""
    if not is_prime_power(q):
        raise ValueError(f"q = {q} is not a prime power")
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    n_users = q * (q ** m - 1) // (q - 1)
    shared = (q ** m - 1) // (q - 1)  # = K * M/N, integral by construction
    rate = Fraction((q ** m - 1) * (q - 1), q ** m + q - 2)
    return ManMetrics(
        n_users=n_users,
        cache_fraction=Fraction(1, q),
        rate=rate,
        per_user_rate=rate / n_users,
        gain=shared + 1,
        subpacketization=comb(n_users, shared),
    )


@dataclass(frozen=True)
class SweepRow:
    q: int
    m: int
    z: int
    t: int
    scheme: SchemeMetrics | None
    man: ManMetrics | None
    error: str | None = None


def sweep(qs: list[int], m: int, ts: list[int], z: int = 2) -> list[SweepRow]:
    """One row per (q, t) point, in given order; inadmissible points become error rows."""
    rows = []
    for q in qs:
        for t in ts:
            try:
                if z != 2:
                    raise ValueError("affine sweeps are defined for z = 2")
                row = SweepRow(q=q, m=m, z=z, t=t,
                               scheme=affine_scheme_metrics(q, m, t),
                               man=man_metrics(q, m))
            except (ValueError, ArithmeticError) as exc:
                row = SweepRow(q=q, m=m, z=z, t=t, scheme=None, man=None, error=str(exc))
            rows.append(row)
    return rows


def decimal_str(x: Fraction, digits: int = 12) -> str:
    """Decimal rendering of an exact rational at `digits` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


SWEEP_CSV_HEADER = ("q,m,z,t,M_over_N,Mprime_over_N,K,F,R,R_per_K,g,"
                    "man_K,man_R,man_R_per_K,man_g,man_F")


def sweep_to_csv(rows: list[SweepRow]) -> str:
    """Fixed-header CSV of the valid rows (error rows carry no numbers to emit)."""
    lines = [SWEEP_CSV_HEADER]
    for row in rows:
        if row.error is not None:
            continue
        s, b = row.scheme, row.man
        lines.append(",".join([
            str(row.q), str(row.m), str(row.z), str(row.t),
            decimal_str(s.cache_fraction), decimal_str(s.access_fraction),
            str(s.n_users), str(s.subpacketization),
            decimal_str(s.rate), decimal_str(s.per_user_rate), str(s.gain),
            str(b.n_users), decimal_str(b.rate), decimal_str(b.per_user_rate),
            str(b.gain), str(b.subpacketization),
        ]))
    return "\n".join(lines) + "\n"


def sweep_to_text(rows: list[SweepRow]) -> str:
    """key=value form showing both the exact rational and its decimal value."""
    out = []
    for row in rows:
        head = f"q={row.q} m={row.m} z={row.z} t={row.t}"
        if row.error is not None:
            out.append(f"{head} error={row.error}")
            continue
        s, b = row.scheme, row.man
        out.append(" ".join([
            head,
            f"M/N={_rat(s.cache_fraction)}",
            f"M'/N={_rat(s.access_fraction)}",
            f"K={s.n_users}", f"F={s.subpacketization}",
            f"R={_rat(s.rate)}", f"R/K={_rat(s.per_user_rate)}", f"g={s.gain}",
            f"man_K={b.n_users}", f"man_R={_rat(b.rate)}",
            f"man_R/K={_rat(b.per_user_rate)}", f"man_g={b.gain}",
            f"man_F={b.subpacketization}",
        ]))
    return "\n".join(out) + "\n"


def _rat(x: Fraction) -> str:
    exact = str(x)
    return exact if x.denominator == 1 else f"{exact}({decimal_str(x)})"
