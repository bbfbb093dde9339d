"""Small finite fields as explicit operation tables.

Prime fields use modular arithmetic; prime-power fields use polynomial
arithmetic over GF(p) modulo a fixed irreducible polynomial, with element
labels packing the coefficient vector in base p (so for p=2 the label is
the usual polynomial bitmask). Field axioms are verified exhaustively at
construction, which is why support is capped at q <= 32.
"""

from __future__ import annotations

from dataclasses import dataclass


class FieldError(ValueError):
    """Unsupported field order or broken arithmetic tables."""


# Irreducible polynomial per supported prime power q = p^s, as little-endian
# coefficient tuples (constant term first, leading coefficient last).
IRREDUCIBLE_POLYS: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),           # x^2 + x + 1        over GF(2)
    8: (1, 1, 0, 1),        # x^3 + x + 1        over GF(2)
    9: (1, 0, 1),           # x^2 + 1            over GF(3)
    16: (1, 1, 0, 0, 1),    # x^4 + x + 1        over GF(2)
    25: (2, 0, 1),          # x^2 + 2            over GF(5)
    27: (1, 2, 0, 1),       # x^3 + 2x + 1       over GF(3)
    32: (1, 0, 1, 0, 0, 1), # x^5 + x^2 + 1      over GF(2)
}

MAX_FIELD_ORDER = 32


@dataclass(frozen=True)
class FieldTable:
    """Addition/multiplication tables for GF(q); labels 0..q-1, 0 and 1 the identities."""

    q: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    def dot(self, xs, ys) -> int:
        """Inner product of two equal-length label vectors."""
        acc = 0
        for x, y in zip(xs, ys, strict=True):
            acc = self.add[acc][self.mul[x][y]]
        return acc


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, s) with q = p^s and p prime, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q and p < q:
            break
        if q % p:
            continue
        n, s = q, 0
        while n % p == 0:
            n //= p
            s += 1
        return (p, s) if n == 1 else None
    return (q, 1)  # q itself prime


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


def build_field(q: int) -> FieldTable:
    """Construct and exhaustively verify the GF(q) tables (q a prime power <= 32)."""
    factored = prime_power(q)
    if factored is None:
        raise FieldError(f"q = {q} is not a prime power")
    if q > MAX_FIELD_ORDER:
        raise FieldError(f"q = {q} exceeds supported field order {MAX_FIELD_ORDER}")
    p, s = factored

    if s == 1:
        add = tuple(tuple((a + b) % q for b in range(q)) for a in range(q))
        mul = tuple(tuple((a * b) % q for b in range(q)) for a in range(q))
    else:
        modulus = IRREDUCIBLE_POLYS[q]
        add, mul = _extension_tables(p, s, modulus)

    table = FieldTable(q=q, add=add, mul=mul)
    _check_axioms(table)
    return table


def _digits(label: int, p: int, s: int) -> list[int]:
    out = []
    for _ in range(s):
        out.append(label % p)
        label //= p
    return out


def _label(digits: list[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _poly_mul_mod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    s = len(modulus) - 1
    prod = [0] * (2 * s - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce modulo the (monic) irreducible polynomial
    inv_lead = pow(modulus[-1], -1, p)
    for deg in range(len(prod) - 1, s - 1, -1):
        coeff = prod[deg]
        if coeff:
            factor = (coeff * inv_lead) % p
            for j, mj in enumerate(modulus):
                prod[deg - s + j] = (prod[deg - s + j] - factor * mj) % p
    return prod[:s]


def _extension_tables(p: int, s: int, modulus: tuple[int, ...]):
    q = p ** s
    add_rows = []
    mul_rows = []
    for a in range(q):
        da = _digits(a, p, s)
        add_rows.append(tuple(_label([(x + y) % p for x, y in zip(da, _digits(b, p, s))], p)
                              for b in range(q)))
        mul_rows.append(tuple(_label(_poly_mul_mod(da, _digits(b, p, s), modulus, p), p)
                              for b in range(q)))
    return tuple(add_rows), tuple(mul_rows)


def _check_axioms(t: FieldTable) -> None:
    q, add, mul = t.q, t.add, t.mul
    elems = range(q)
    for a in elems:
        if add[a][0] != a or mul[a][1] != a:
            raise FieldError("identity axiom failed")
        if mul[a][0] != 0:
            raise FieldError("zero absorption failed")
        if not any(add[a][b] == 0 for b in elems):
            raise FieldError("additive inverse missing")
        if a != 0 and not any(mul[a][b] == 1 for b in elems):
            raise FieldError(f"multiplicative inverse missing for {a}")
        for b in elems:
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise FieldError("commutativity failed")
    for a in elems:
        for b in elems:
            for c in elems:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise FieldError("additive associativity failed")
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise FieldError("multiplicative associativity failed")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise FieldError("distributivity failed")
