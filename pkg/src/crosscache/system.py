"""Caching problem instantiation: users, placement, accessible memory.

Given a cross resolvable design and scheme parameters (z, t), there is one
user per choice of z parallel classes and t blocks from each chosen class,
so K = C(r,z) * C(b_r,t)^z users sharing b caches. Placement is symmetric
batch prefetching: cache j stores, for every file, exactly the subfiles
indexed by block j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from crosscache.designs import ResolvableDesign, cross_intersection, validate


class ConfigError(ValueError):
    """Scheme parameters incompatible with the design."""


@dataclass(frozen=True)
class User:
    """A user identified by its z chosen classes and t chosen blocks per class."""

    class_ids: tuple[int, ...]
    block_ids: tuple[tuple[int, ...], ...]

    def cache_ids(self, design: ResolvableDesign) -> tuple[int, ...]:
        """Global ids of the tz caches this user reads."""
        return tuple(design.cache_id(c, b)
                     for c, blocks in zip(self.class_ids, self.block_ids)
                     for b in blocks)

    def label(self) -> str:
        caches = ",".join(f"C{c},{b}" for c, blocks in zip(self.class_ids, self.block_ids)
                          for b in blocks)
        return f"U{{{caches}}}"


@dataclass(frozen=True)
class SystemConfig:
    """A validated (design, z, t) triple plus the cross intersection numbers it uses."""

    design: ResolvableDesign
    z: int
    t: int
    mu: tuple[int, ...]  # mu[s-2] = mu_s for s = 2..z

    @property
    def mu_z(self) -> int:
        return self.mu[self.z - 2]

    @property
    def n_users(self) -> int:
        d = self.design
        return comb(d.r, self.z) * comb(d.b_r, self.t) ** self.z

    @property
    def n_caches(self) -> int:
        return self.design.b

    @property
    def caches_per_user(self) -> int:
        return self.t * self.z

    @property
    def subpacketization(self) -> int:
        return self.design.v

    @property
    def cache_fraction(self) -> Fraction:
        """M/N: fraction of each file stored at each cache."""
        return Fraction(self.design.k, self.design.v)

    @property
    def access_fraction(self) -> Fraction:
        """M'/N: fraction of each file a user sees through its tz caches."""
        return memory_fraction(self)


def configure(design: ResolvableDesign, z: int, t: int) -> SystemConfig:
    """Validate a scheme instance and precompute the mu_s values it needs."""
    violations = validate(design)
    if violations:
        raise ConfigError("design invalid: " + "; ".join(violations))
    if not 2 <= z <= design.r:
        raise ConfigError(f"z must be in 2..{design.r}, got {z}")
    if not 1 <= t <= design.b_r:
        raise ConfigError(f"t must be in 1..{design.b_r}, got {t}")
    mu = []
    for s in range(2, z + 1):
        value = cross_intersection(design, s)
        if value is None:
            raise ConfigError(
                f"mu_{s} does not exist for this design; the scheme needs mu_s for every s in 2..z={z}")
        mu.append(value)
    return SystemConfig(design=design, z=z, t=t, mu=tuple(mu))


def enumerate_users(config: SystemConfig) -> list[User]:
    """All K users in canonical order; position (1-based) is the user id.

    Order is lexicographic over the chosen class combination and then over
    the per-class block combinations, last class varying fastest.
    """
    d = config.design
    users = []
    block_choices = list(itertools.combinations(range(1, d.b_r + 1), config.t))
    for class_ids in itertools.combinations(range(1, d.r + 1), config.z):
        for blocks in itertools.product(block_choices, repeat=config.z):
            users.append(User(class_ids=class_ids, block_ids=blocks))
    return users


def user_ids(config: SystemConfig) -> dict[User, int]:
    """Map each canonical user to its 1-based id."""
    return {user: i for i, user in enumerate(enumerate_users(config), start=1)}


@dataclass(frozen=True)
class CachePlacement:
    """Subfile indices stored per cache (identical for every file)."""

    n_files: int
    contents: tuple[frozenset[int], ...]

    def cache(self, cache_id: int) -> frozenset[int]:
        return self.contents[cache_id - 1]


def place(config: SystemConfig, n_files: int) -> CachePlacement:
    """Symmetric batch prefetching: cache j holds block j's subfile indices."""
    if n_files < 1:
        raise ConfigError(f"need at least one file, got {n_files}")
    return CachePlacement(n_files=n_files, contents=config.design.all_blocks())


def _check_member(config: SystemConfig, user: User) -> None:
    d = config.design
    ok = (len(user.class_ids) == config.z
          and all(1 <= c <= d.r for c in user.class_ids)
          and tuple(sorted(set(user.class_ids))) == user.class_ids
          and len(user.block_ids) == config.z
          and all(len(bs) == config.t
                  and tuple(sorted(set(bs))) == bs
                  and all(1 <= b <= d.b_r for b in bs)
                  for bs in user.block_ids))
    if not ok:
        raise ConfigError(f"user {user} does not belong to this configuration")


def accessible_set(config: SystemConfig, user: User) -> frozenset[int]:
    """Union of the user's tz blocks: every subfile index it can read."""
    _check_member(config, user)
    d = config.design
    acc: set[int] = set()
    for c, blocks in zip(user.class_ids, user.block_ids):
        for b in blocks:
            acc |= d.block(c, b)
    return frozenset(acc)


def memory_fraction(config: SystemConfig) -> Fraction:
    """M'/N by inclusion-exclusion over one user's tz blocks, as an exact rational.

    Equals zt*(M/N) + sum over s=2..z of (-1)^(s+1) t^s C(z,s) mu_s / v;
    identical for every user, and always equal to |accessible_set|/v.
    """
    d, z, t = config.design, config.z, config.t
    total = Fraction(z * t * d.k, d.v)
    for s in range(2, z + 1):
        term = Fraction(t ** s * comb(z, s) * config.mu[s - 2], d.v)
        total += term if s % 2 else -term
    return total
