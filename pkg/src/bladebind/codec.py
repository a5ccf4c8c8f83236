"""Role/filler record codecs.

Two interchangeable codings of the same record abstraction:

* GA codec: binding is the signed blade product, chunking is sparse
  coefficient addition, clean-up ranks fillers by the reversion
  similarity after projecting the unbound result onto the filler
  support (first k positions).
* Classic codec: binding is XOR, chunking is a per-position majority
  vote with seeded tie flips, clean-up is nearest Hamming distance.

Symbol tables draw roles over all nonzero n-bit strings and fillers
over nonzero k-bit prefixes (remaining positions zero), so unbinding
noise lands outside the filler subspace with high probability.

All randomized operations take an explicit seed and are pure functions
of it.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

import numpy as np

from .blades import (
    BladeIndex,
    _check_dims,
    blade_inverse,
    format_blade,
    parse_blade,
    product_sign,
)
from .multivector import Multivector, similarity

__all__ = [
    "SymbolTable",
    "EncodedRecord",
    "CleanupMemory",
    "GaDecodeResult",
    "ClassicDecodeResult",
    "gen_symbols",
    "ga_encode",
    "ga_decode",
    "classic_bind",
    "majority_chunk",
    "classic_encode",
    "classic_decode",
    "hamming",
]

# Bounded retry budget per symbol draw; exhausting it means the space of
# admissible strings is too crowded for the requested table.
MAX_DRAW_TRIES = 1000

GA = "ga"
CLASSIC = "classic"


# --- symbol tables ------------------------------------------------------------


@dataclass(frozen=True)
class SymbolTable:
    """Named role and filler blades sharing one dimension.

    k is the filler support width: every filler is zero beyond position
    k.  Roles use all n positions.  Names are unique across the whole
    table and no two symbols share a bit string.  Treat the mappings as
    read-only.
    """

    n: int
    k: int
    roles: dict
    fillers: dict

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"filler bits k={self.k} outside 1..{self.n}")
        overlap = self.roles.keys() & self.fillers.keys()
        if overlap:
            raise ValueError(f"names used as both role and filler: {sorted(overlap)}")
        low = (1 << (self.n - self.k)) - 1
        seen: dict[int, str] = {}
        for kind, mapping in (("role", self.roles), ("filler", self.fillers)):
            for name, blade in mapping.items():
                if not isinstance(name, str) or not name:
                    raise ValueError(f"{kind} name must be a nonempty string: {name!r}")
                if blade.n != self.n:
                    raise ValueError(
                        f"{kind} {name!r} has dimension {blade.n}, table has {self.n}"
                    )
                if blade.is_scalar:
                    raise ValueError(f"{kind} {name!r} is the all-zero string")
                if kind == "filler" and blade.value & low:
                    raise ValueError(
                        f"filler {name!r} has bits beyond position {self.k}"
                    )
                if blade.value in seen:
                    raise ValueError(
                        f"{kind} {name!r} collides with {seen[blade.value]!r}"
                    )
                seen[blade.value] = name

    # - serialization -

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "roles": {name: format_blade(b) for name, b in self.roles.items()},
            "fillers": {name: format_blade(b) for name, b in self.fillers.items()},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SymbolTable":
        try:
            n = int(obj["n"])
            k = int(obj["k"])
            roles = {name: parse_blade(lit, n) for name, lit in obj["roles"].items()}
            fillers = {
                name: parse_blade(lit, n) for name, lit in obj["fillers"].items()
            }
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed symbol table: {exc}") from exc
        return cls(n=n, k=k, roles=roles, fillers=fillers)

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "SymbolTable":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def gen_symbols(seed: int, n: int, k: int, role_names, filler_names) -> SymbolTable:
    """Seeded random symbol table; deterministic for a given seed.

    Roles are uniform over nonzero n-bit strings; fillers are uniform
    over nonzero k-bit prefixes, zero-padded to n.  Collisions are
    redrawn; running out of retries signals the dimension is too small
    for the requested number of symbols.
    """
    if not 1 <= k <= n:
        raise ValueError(f"filler bits k={k} outside 1..{n}")
    role_names = list(role_names)
    filler_names = list(filler_names)
    names = role_names + filler_names
    if len(set(names)) != len(names):
        raise ValueError("duplicate symbol name")
    if len(filler_names) > (1 << k) - 1 or len(names) > (1 << n) - 1:
        raise ValueError(f"n={n}, k={k} cannot host {len(names)} distinct symbols")

    rng = random.Random(seed)
    used: set[int] = set()

    def draw(bits: int, shift: int) -> int:
        for _ in range(MAX_DRAW_TRIES):
            v = rng.getrandbits(bits) << shift
            if v and v not in used:
                used.add(v)
                return v
        raise ValueError(
            f"could not draw {len(names)} distinct symbols at n={n}, k={k}; "
            "dimension too small"
        )

    roles = {name: BladeIndex(n, draw(n, 0)) for name in role_names}
    fillers = {name: BladeIndex(n, draw(k, n - k)) for name in filler_names}
    return SymbolTable(n=n, k=k, roles=roles, fillers=fillers)


# --- records -----------------------------------------------------------------


@dataclass(frozen=True)
class EncodedRecord:
    """A chunked record: a sparse multivector (GA) or one bit string (classic)."""

    codec: str
    payload: Multivector | None = None
    bits: BladeIndex | None = None

    def __post_init__(self):
        if self.codec == GA:
            if not isinstance(self.payload, Multivector) or self.bits is not None:
                raise ValueError("ga record needs a payload multivector and no bits")
        elif self.codec == CLASSIC:
            if not isinstance(self.bits, BladeIndex) or self.payload is not None:
                raise ValueError("classic record needs bits and no payload")
        else:
            raise ValueError(f"unknown codec {self.codec!r}")

    @property
    def n(self) -> int:
        return self.payload.n if self.codec == GA else self.bits.n

    def to_json(self) -> dict:
        if self.codec == GA:
            return {"codec": GA, "n": self.n, "terms": self.payload.to_pairs()}
        return {"codec": CLASSIC, "n": self.n, "bits": format_blade(self.bits)}

    @classmethod
    def from_json(cls, obj: dict) -> "EncodedRecord":
        try:
            codec = obj["codec"]
            n = int(obj["n"])
            if codec == GA:
                return cls(GA, payload=Multivector.from_pairs(obj["terms"], n))
            if codec == CLASSIC:
                return cls(CLASSIC, bits=parse_blade(obj["bits"], n))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed record: {exc}") from exc
        raise ValueError(f"unknown codec {codec!r}")

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "EncodedRecord":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


@dataclass(frozen=True)
class CleanupMemory:
    """Stored reference symbols a noisy decode is matched against.

    metric "similarity" ranks by the reversion inner product (GA path,
    entries must respect the filler support given by filler_bits);
    metric "hamming" ranks by bit distance (classic path).
    """

    entries: tuple
    metric: str
    filler_bits: int | None = None

    def __post_init__(self):
        if self.metric not in ("similarity", "hamming"):
            raise ValueError(f"unknown clean-up metric {self.metric!r}")
        if self.entries:
            n = self.entries[0][1].n
            for _, blade in self.entries:
                if blade.n != n:
                    raise ValueError("clean-up entries span different dimensions")
            if self.metric == "similarity":
                if self.filler_bits is None:
                    raise ValueError("similarity memory needs filler_bits")
                low = (1 << (n - self.filler_bits)) - 1
                for name, blade in self.entries:
                    if blade.value & low:
                        raise ValueError(
                            f"entry {name!r} has bits beyond position {self.filler_bits}"
                        )

    @classmethod
    def from_table(cls, table: SymbolTable, metric: str) -> "CleanupMemory":
        return cls(
            entries=tuple(table.fillers.items()),
            metric=metric,
            filler_bits=table.k if metric == "similarity" else None,
        )


# --- GA codec ------------------------------------------------------------------


def ga_encode(table: SymbolTable, pairs, weights=None) -> EncodedRecord:
    """Record = sum of weighted signed role*filler blade products.

    Terms landing on the same blade add; with clashing weights they can
    cancel destructively, which is reported faithfully rather than
    repaired (small dimensions make such collisions likely).
    """
    pairs = list(pairs)
    if weights is None:
        weights = [1.0] * len(pairs)
    weights = [float(w) for w in weights]
    if len(weights) != len(pairs):
        raise ValueError(f"{len(pairs)} pairs but {len(weights)} weights")
    acc: dict[BladeIndex, float] = {}
    for (role_name, filler_name), w in zip(pairs, weights):
        role = _resolve(table.roles, role_name, "role")
        filler = _resolve(table.fillers, filler_name, "filler")
        idx = role ^ filler
        acc[idx] = acc.get(idx, 0.0) + w * product_sign(role, filler)
    return EncodedRecord(GA, payload=Multivector(table.n, acc))


@dataclass(frozen=True)
class GaDecodeResult:
    filler: str
    blade: BladeIndex
    score: float
    raw: Multivector
    ambiguous: bool

    @property
    def residual_terms(self) -> int:
        """Terms of the raw unbind besides the winning filler's blade."""
        return len(self.raw) - (1 if self.raw.coeff(self.blade) != 0.0 else 0)


def ga_decode(record: EncodedRecord, table: SymbolTable, role_name: str) -> GaDecodeResult:
    """Unbind a role and clean the result against the table's fillers.

    raw = inverse(role) * payload, so a weight-w pair contributes
    exactly w times its filler blade; the winner is the filler of
    largest absolute similarity against the support-projected raw, with
    the signed score reported (binding is projective, a global sign
    carries no information).  Exact score ties go to the
    lexicographically smallest blade and are flagged ambiguous.
    """
    if record.codec != GA:
        raise ValueError(f"ga_decode on a {record.codec!r} record")
    if record.n != table.n:
        raise ValueError(f"record dimension {record.n} != table dimension {table.n}")
    role = _resolve(table.roles, role_name, "role")
    memory = CleanupMemory.from_table(table, "similarity")
    if not memory.entries:
        raise ValueError("clean-up memory is empty")
    raw = Multivector.from_blade(blade_inverse(role)).gp(record.payload)
    projected = raw.project_to_support(table.k)

    best_abs = -1.0
    candidates: list[tuple[BladeIndex, str, float]] = []
    for name, blade in memory.entries:
        s = similarity(Multivector.from_blade(blade), projected)
        if abs(s) > best_abs:
            best_abs = abs(s)
            candidates = [(blade, name, s)]
        elif abs(s) == best_abs:
            candidates.append((blade, name, s))
    blade, name, score = min(candidates, key=lambda c: c[0].value)
    return GaDecodeResult(
        filler=name,
        blade=blade,
        score=score,
        raw=raw,
        ambiguous=len(candidates) > 1,
    )


def _resolve(mapping: dict, name: str, kind: str) -> BladeIndex:
    try:
        return mapping[name]
    except KeyError:
        raise ValueError(f"unknown {kind} {name!r}") from None


# --- classic codec ---------------------------------------------------------------


def classic_bind(x: BladeIndex, y: BladeIndex) -> BladeIndex:
    """XOR binding; its own inverse, so binding twice with x recovers y."""
    _check_dims(x, y)
    return x ^ y


def majority_chunk(items, seed: int) -> BladeIndex:
    """Per-position majority vote; exact ties resolved by a seeded coin."""
    items = list(items)
    if not items:
        raise ValueError("majority vote over an empty list")
    n = items[0].n
    for b in items:
        if b.n != n:
            raise ValueError(f"mixed dimensions in majority vote: {b.n} vs {n}")
    rows = np.stack([_bit_array(b) for b in items])
    twice = 2 * rows.sum(axis=0, dtype=np.int64)
    out = (twice > len(items)).astype(np.uint8)
    ties = np.nonzero(twice == len(items))[0]
    if ties.size:
        rng = random.Random(seed)
        for pos in ties:
            out[pos] = rng.getrandbits(1)
    return _from_bit_array(out, n)


def classic_encode(table: SymbolTable, pairs, seed: int = 0) -> EncodedRecord:
    """Bind each pair by XOR and chunk by majority vote."""
    bound = []
    for role_name, filler_name in pairs:
        role = _resolve(table.roles, role_name, "role")
        filler = _resolve(table.fillers, filler_name, "filler")
        bound.append(classic_bind(role, filler))
    return EncodedRecord(CLASSIC, bits=majority_chunk(bound, seed))


@dataclass(frozen=True)
class ClassicDecodeResult:
    filler: str
    blade: BladeIndex
    distance: int
    ambiguous: bool


def classic_decode(
    record_bits: BladeIndex, role: BladeIndex, memory: CleanupMemory
) -> ClassicDecodeResult:
    """XOR the role back out and return the nearest memory entry.

    Ties go to the lexicographically smallest blade and are flagged.
    """
    if memory.metric != "hamming":
        raise ValueError(f"classic_decode needs a hamming memory, got {memory.metric!r}")
    if not memory.entries:
        raise ValueError("clean-up memory is empty")
    unbound = record_bits ^ role
    best = None
    ambiguous = False
    for name, blade in memory.entries:
        d = hamming(unbound, blade)
        if best is None or d < best[0] or (d == best[0] and blade.value < best[2].value):
            ambiguous = best is not None and d == best[0]
            best = (d, name, blade)
        elif d == best[0]:
            ambiguous = True
    return ClassicDecodeResult(
        filler=best[1], blade=best[2], distance=best[0], ambiguous=ambiguous
    )


def hamming(a: BladeIndex, b: BladeIndex) -> int:
    """Number of differing positions."""
    _check_dims(a, b)
    return (a.value ^ b.value).bit_count()


# --- bit-array helpers (classic chunking) -------------------------------------------


def _bit_array(b: BladeIndex) -> np.ndarray:
    nbytes = (b.n + 7) // 8
    raw = np.frombuffer(b.value.to_bytes(nbytes, "big"), dtype=np.uint8)
    return np.unpackbits(raw)[8 * nbytes - b.n :]


def _from_bit_array(bits: np.ndarray, n: int) -> BladeIndex:
    pad = (-n) % 8
    if pad:
        bits = np.concatenate([np.zeros(pad, dtype=np.uint8), bits])
    return BladeIndex(n, int.from_bytes(np.packbits(bits).tobytes(), "big"))
