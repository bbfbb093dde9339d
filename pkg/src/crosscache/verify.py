"""Executable correctness checks: symbolic decoding and byte-level XOR simulation.

Symbolic mode tracks subfile indices only; byte mode generates real seeded
payloads, XORs them exactly as the server would, and checks every user can
reproduce its demanded file bit for bit from its caches plus the broadcast.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from crosscache import xorops
from crosscache.delivery import (
    DemandVector,
    Transmission,
    enumerate_groups,
    f_set,
    generate_transmissions,
    group_members,
)
from crosscache.rng import SplitMix64
from crosscache.system import (
    CachePlacement,
    SystemConfig,
    User,
    accessible_set,
    enumerate_users,
    place,
)


class VerificationError(RuntimeError):
    """A schedule or size contract was violated (not a mere decode failure)."""


@dataclass(frozen=True)
class FileStore:
    """N files of v subfiles each, as one flat seeded byte buffer."""

    n_files: int
    v: int
    subfile_len: int
    seed: int
    data: bytes

    @classmethod
    def generate(cls, seed: int, n_files: int, v: int, subfile_len: int = 64) -> "FileStore":
        if subfile_len < 1:
            raise ValueError("subfile length must be >= 1")
        rng = SplitMix64(seed)
        data = rng.randbytes(n_files * v * subfile_len)
        return cls(n_files=n_files, v=v, subfile_len=subfile_len, seed=seed, data=data)

    def offset(self, file_id: int, subfile: int) -> int:
        return ((file_id - 1) * self.v + (subfile - 1)) * self.subfile_len

    def subfile(self, file_id: int, subfile: int) -> bytes:
        off = self.offset(file_id, subfile)
        return self.data[off:off + self.subfile_len]

    def file(self, file_id: int) -> bytes:
        off = self.offset(file_id, 1)
        return self.data[off:off + self.v * self.subfile_len]


@dataclass(frozen=True)
class TransmissionUse:
    group_id: int
    s: int
    subfile: int


@dataclass(frozen=True)
class UserReport:
    user_id: int
    demand: int
    accessible: frozenset[int]
    recovered: frozenset[int]
    missing: frozenset[int]
    uses: tuple[TransmissionUse, ...]
    ok: bool
    notes: tuple[str, ...]


@dataclass(frozen=True)
class DecodeReport:
    mode: str
    seed: int
    subfile_len: int
    n_users: int
    n_transmissions: int
    passed: bool
    users: tuple[UserReport, ...]
    failures: tuple[str, ...]

    def render_text(self) -> str:
        decoded = sum(1 for u in self.users if u.ok)
        lines = [
            f"mode={self.mode} seed={self.seed} subfile_len={self.subfile_len}",
            f"transmissions={self.n_transmissions}",
            f"{decoded}/{self.n_users} users decoded",
        ]
        for failure in self.failures:
            lines.append(f"FAIL {failure}")
        for u in self.users:
            if not u.ok:
                lines.append(f"FAIL user {u.user_id}: missing={sorted(u.missing)} notes={list(u.notes)}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"


def _server_payload(store: FileStore, tx: Transmission) -> bytes:
    buf = bytearray(store.subfile_len)
    offsets = [store.offset(t.file_id, t.subfile) for t in tx.terms]
    xorops.xor_accumulate(buf, store.data, offsets, store.subfile_len)
    return bytes(buf)


def _decode_one(config: SystemConfig, user: User, user_id: int, demand: int,
                relevant: list[Transmission], store: FileStore | None,
                payloads: dict[int, bytes] | None) -> UserReport:
    accessible = accessible_set(config, user)
    recovered: set[int] = set()
    uses: list[TransmissionUse] = []
    notes: list[str] = []

    for tx in relevant:
        own = [t for t in tx.terms if t.user_id == user_id]
        if len(own) != 1:
            raise VerificationError(
                f"user {user_id} appears {len(own)} times in transmission "
                f"(group {tx.group_id}, s={tx.s})")
        mine = own[0]
        side = [t for t in tx.terms if t.user_id != user_id]
        unavailable = [t for t in side if t.subfile not in accessible]
        if unavailable:
            raise VerificationError(
                f"schedule bug: transmission (group {tx.group_id}, s={tx.s}) needs subfiles "
                f"{[t.subfile for t in unavailable]} that user {user_id} cannot access")
        if store is not None:
            payload = payloads[id(tx)] if payloads is not None else _server_payload(store, tx)
            buf = bytearray(payload)
            offsets = [store.offset(t.file_id, t.subfile) for t in side]
            xorops.xor_accumulate(buf, store.data, offsets, store.subfile_len)
            if bytes(buf) != store.subfile(demand, mine.subfile):
                notes.append(f"payload mismatch for subfile {mine.subfile} "
                             f"(group {tx.group_id}, s={tx.s})")
        recovered.add(mine.subfile)
        uses.append(TransmissionUse(tx.group_id, tx.s, mine.subfile))

    all_points = config.design.points()
    missing = frozenset(all_points - accessible - recovered)
    ok = not missing and not notes
    return UserReport(user_id=user_id, demand=demand, accessible=accessible,
                      recovered=frozenset(recovered), missing=missing,
                      uses=tuple(uses), ok=ok, notes=tuple(notes))


def decode_user(config: SystemConfig, user: User, demands: DemandVector,
                schedule: list[Transmission], placement: CachePlacement | None = None,
                store: FileStore | None = None) -> UserReport:
    """Decode one user against a schedule; byte-exact when a FileStore is given.

    The placement argument is accepted for symmetry with verify_scheme; under
    symmetric batch prefetching the cache contents are fully determined by
    the design, which is re-derived here.
    """
    ids = {u: i for i, u in enumerate(enumerate_users(config), start=1)}
    if user not in ids:
        raise VerificationError("user does not belong to this configuration")
    uid = ids[user]
    relevant = [tx for tx in schedule if any(t.user_id == uid for t in tx.terms)]
    return _decode_one(config, user, uid, demands[uid], relevant, store, None)


def _lemma_failures(config: SystemConfig) -> list[str]:
    """Check the group-level set identities the schedule's correctness rests on.

    For every group and member m: f_m has exactly mu_z elements, is disjoint
    from m's accessible set, and equals the intersection of every other
    member's accessible set.
    """
    failures: list[str] = []
    mu_z = config.mu_z
    for group in enumerate_groups(config):
        members = group_members(config, group)
        access = [accessible_set(config, m) for m in members]
        n = len(members)
        # prefix/suffix intersections give each member's "all others" intersection
        prefix = [None] * (n + 1)
        suffix = [None] * (n + 1)
        prefix[0] = config.design.points()
        suffix[n] = config.design.points()
        for i in range(n):
            prefix[i + 1] = prefix[i] & access[i]
            suffix[n - 1 - i] = suffix[n - i] & access[n - 1 - i]
        for i, member in enumerate(members):
            f = frozenset(f_set(config, group, member))
            if len(f) != mu_z:
                failures.append(f"group {group.group_id}: |f| = {len(f)} != mu_z = {mu_z}")
            if f & access[i]:
                failures.append(f"group {group.group_id}: f not disjoint "
                                f"from member {i + 1}'s accessible set")
            others = prefix[i] & suffix[i + 1]
            if f != others:
                failures.append(f"group {group.group_id}: f differs from the intersection "
                                f"of the other members' accessible sets (member {i + 1})")
    return failures


def verify_scheme(config: SystemConfig, demands: DemandVector, mode: str = "bytes",
                  seed: int = 0, subfile_len: int = 64,
                  check_lemmas: bool = True) -> DecodeReport:
    """Run placement, delivery, and per-user decoding for the whole system."""
    if mode not in ("symbolic", "bytes"):
        raise ValueError(f"mode must be 'symbolic' or 'bytes', got {mode!r}")
    users = enumerate_users(config)
    place(config, demands.n_files)  # validates n_files
    schedule = generate_transmissions(config, demands)

    failures = _lemma_failures(config) if check_lemmas else []

    store = None
    payloads: dict[int, bytes] | None = None
    if mode == "bytes":
        store = FileStore.generate(seed, demands.n_files, config.design.v, subfile_len)
        payloads = {id(tx): _server_payload(store, tx) for tx in schedule}

    relevant: dict[int, list[Transmission]] = {i: [] for i in range(1, len(users) + 1)}
    for tx in schedule:
        for term in tx.terms:
            if not relevant[term.user_id] or relevant[term.user_id][-1] is not tx:
                relevant[term.user_id].append(tx)

    reports = []
    for uid, user in enumerate(users, start=1):
        reports.append(_decode_one(config, user, uid, demands[uid],
                                   relevant[uid], store, payloads))

    passed = not failures and all(r.ok for r in reports)
    return DecodeReport(mode=mode, seed=seed,
                        subfile_len=subfile_len if mode == "bytes" else 0,
                        n_users=len(users), n_transmissions=len(schedule),
                        passed=passed, users=tuple(reports), failures=tuple(failures))


def brute_force_oracle(config: SystemConfig, demands: DemandVector, *,
                       max_users: int = 200, max_points: int = 64) -> dict[int, frozenset[int]]:
    """Recompute every user's decodable index set by raw set algebra on the design.

    Independent of the delivery module: for each user it unions, over all
    per-class choices of one unchosen block, the intersections of those
    blocks, and confirms the union is exactly the complement of the user's
    accessible set. Intended as a cross-check for decode_user on small
    configurations; the limits exist because the enumeration is exponential
    in z, and can be raised explicitly where a larger sweep is wanted.
    """
    d = config.design
    if config.n_users > max_users:
        raise VerificationError(
            f"oracle size guard: K = {config.n_users} > {max_users} users")
    if d.v > max_points:
        raise VerificationError(f"oracle size guard: v = {d.v} > {max_points} points")
    users = enumerate_users(config)
    if len(demands.demands) != len(users):
        raise VerificationError(
            f"demand vector has {len(demands.demands)} entries, expected {len(users)}")

    expected: dict[int, frozenset[int]] = {}
    for uid, user in enumerate(users, start=1):
        all_block_ids = range(1, d.b_r + 1)
        complements = [[b for b in all_block_ids if b not in set(chosen)]
                       for chosen in user.block_ids]
        covered: set[int] = set()
        for choice in product(*complements):
            inter = frozenset.intersection(
                *(d.block(c, b) for c, b in zip(user.class_ids, choice)))
            covered |= inter
        direct_access = set()
        for c, blocks in zip(user.class_ids, user.block_ids):
            for b in blocks:
                direct_access |= d.block(c, b)
        if covered != d.points() - direct_access:
            raise VerificationError(
                f"oracle mismatch for user {uid}: coverage does not equal the "
                f"complement of its accessible set")
        expected[uid] = frozenset(covered)
    return expected
