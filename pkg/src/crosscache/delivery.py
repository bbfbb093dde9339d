"""XOR multicast delivery: group enumeration and the transmission schedule.

Delivery walks every choice of z parallel classes and, within them, every
choice of t+1 blocks per class. Each such group induces (t+1)^z member
users (those whose blocks are t-subsets of the chosen t+1 per class). A
member m misses exactly the mu_z subfile indices in f_m, the intersection
of the per-class blocks it did not choose, and every other member of the
group holds all of f_m; XORing the s-th missing subfile of each member's
demanded file therefore serves all (t+1)^z members at once, mu_z
transmissions per group.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import NamedTuple

from crosscache.rng import SplitMix64
from crosscache.system import SystemConfig, User, enumerate_users


class DeliveryError(ValueError):
    """Invalid demands or a user/group mismatch."""


@dataclass(frozen=True)
class Group:
    """A choice of z classes and t+1 blocks from each; its id is the enumeration position."""

    group_id: int
    class_ids: tuple[int, ...]
    per_class_blocks: tuple[tuple[int, ...], ...]


class Term(NamedTuple):
    """One XOR operand: subfile `subfile` of file `file_id`, missing at `user_id`."""

    user_id: int
    file_id: int
    subfile: int


@dataclass(frozen=True)
class Transmission:
    group_id: int
    s: int
    terms: tuple[Term, ...]


@dataclass(frozen=True)
class DemandVector:
    """File requested per user, indexed by canonical user id."""

    n_files: int
    demands: tuple[int, ...]

    def __post_init__(self):
        if self.n_files < 1:
            raise DeliveryError(f"need at least one file, got {self.n_files}")
        bad = [d for d in self.demands if not 1 <= d <= self.n_files]
        if bad:
            raise DeliveryError(f"demands outside 1..{self.n_files}: {sorted(set(bad))[:5]}")

    def __getitem__(self, user_id: int) -> int:
        return self.demands[user_id - 1]

    @classmethod
    def sequential(cls, n_users: int, n_files: int | None = None) -> "DemandVector":
        """Distinct demands: user i requests file i (needs N >= K)."""
        n = n_users if n_files is None else n_files
        if n < n_users:
            raise DeliveryError(f"sequential distinct demands need N >= K = {n_users}, got {n}")
        return cls(n_files=n, demands=tuple(range(1, n_users + 1)))

    @classmethod
    def random(cls, n_users: int, n_files: int, seed: int) -> "DemandVector":
        rng = SplitMix64(seed)
        return cls(n_files=n_files,
                   demands=tuple(rng.randbelow(n_files) + 1 for _ in range(n_users)))


def enumerate_groups(config: SystemConfig) -> list[Group]:
    """All C(r,z)*C(b_r,t+1)^z groups in canonical order (empty when t = b_r)."""
    d = config.design
    groups = []
    block_choices = list(itertools.combinations(range(1, d.b_r + 1), config.t + 1))
    gid = 0
    for class_ids in itertools.combinations(range(1, d.r + 1), config.z):
        for blocks in itertools.product(block_choices, repeat=config.z):
            gid += 1
            groups.append(Group(group_id=gid, class_ids=class_ids, per_class_blocks=blocks))
    return groups


def group_members(config: SystemConfig, group: Group) -> list[User]:
    """The (t+1)^z member users, in canonical (lexicographic) order."""
    per_class_subsets = [list(itertools.combinations(blocks, config.t))
                         for blocks in group.per_class_blocks]
    return [User(class_ids=group.class_ids, block_ids=combo)
            for combo in itertools.product(*per_class_subsets)]


def f_set(config: SystemConfig, group: Group, user: User) -> tuple[int, ...]:
    """The mu_z subfile indices the member lacks, sorted ascending.

    Intersection over the group's classes of the one block per class the
    user did not pick; ascending order fixes which element pairs with which
    transmission index s.
    """
    if user.class_ids != group.class_ids:
        raise DeliveryError("user is not a member of this group (different classes)")
    blocks = []
    d = config.design
    for c, chosen, mine in zip(group.class_ids, group.per_class_blocks, user.block_ids):
        leftover = set(chosen) - set(mine)
        if len(leftover) != 1 or not set(mine) <= set(chosen):
            raise DeliveryError("user is not a member of this group (blocks not a t-subset)")
        blocks.append(d.block(c, leftover.pop()))
    return tuple(sorted(frozenset.intersection(*blocks)))


def generate_transmissions(config: SystemConfig, demands: DemandVector) -> list[Transmission]:
    """The full XOR schedule: mu_z transmissions per group, in group order."""
    users = enumerate_users(config)
    if len(demands.demands) != len(users):
        raise DeliveryError(
            f"demand vector has {len(demands.demands)} entries, expected K = {len(users)}")
    ids = {user: i for i, user in enumerate(users, start=1)}

    mu_z = config.mu_z
    schedule = []
    for group in enumerate_groups(config):
        member_sets = [(ids[m], f_set(config, group, m)) for m in group_members(config, group)]
        for s in range(1, mu_z + 1):
            terms = tuple(Term(uid, demands[uid], fs[s - 1]) for uid, fs in member_sets)
            schedule.append(Transmission(group_id=group.group_id, s=s, terms=terms))
    return schedule


def schedule_to_jsonl(schedule: list[Transmission]) -> str:
    """One JSON record per transmission: group id, s, and [user, file, subfile] terms."""
    lines = [json.dumps({"group": tx.group_id, "s": tx.s,
                         "terms": [[t.user_id, t.file_id, t.subfile] for t in tx.terms]},
                        separators=(",", ":"))
             for tx in schedule]
    return "\n".join(lines) + ("\n" if lines else "")


def schedule_to_csv(schedule: list[Transmission]) -> str:
    """Flat CSV, one row per XOR term."""
    lines = ["group,s,user,file,subfile"]
    for tx in schedule:
        lines.extend(f"{tx.group_id},{tx.s},{t.user_id},{t.file_id},{t.subfile}" for t in tx.terms)
    return "\n".join(lines) + "\n"
