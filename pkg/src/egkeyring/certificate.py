"""JSON certificates for extracted keyrings and heavy cycles."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GraphInputError
from .graph import Graph
from .keyring import Keyring, Verdict, verify_keyring
from .lemma import HeavyCycleWitness

FIELDS = ("kind", "k", "r", "center", "cycle", "leaves", "n", "e", "edge_digest", "verified")
KINDS = ("keyring", "heavy-cycle", "none")

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def edge_digest(G: Graph) -> str:
    """FNV-1a 64 over the numerically sorted ``"u v\\n"`` lines, as 16 hex digits."""
    blob = "".join(f"{u} {v}\n" for u, v in G.edges).encode("ascii")
    return f"{fnv1a64(blob):016x}"


@dataclass(frozen=True)
class Certificate:
    kind: str
    k: int
    r: int | None
    center: int | None
    cycle: tuple[int, ...]
    leaves: tuple[int, ...]
    n: int
    e: int
    edge_digest: str
    verified: bool

    def to_dict(self) -> dict:
        d = {name: getattr(self, name) for name in FIELDS}
        d["cycle"] = list(self.cycle)
        d["leaves"] = list(self.leaves)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        if not isinstance(d, dict) or set(d) != set(FIELDS):
            raise GraphInputError(f"certificate must have exactly the fields {FIELDS}")
        if d["kind"] not in KINDS:
            raise GraphInputError(f"unknown certificate kind {d['kind']!r}")
        for name in ("cycle", "leaves"):
            if not isinstance(d[name], list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in d[name]
            ):
                raise GraphInputError(f"certificate field {name!r} must be a list of integers")
        for name in ("k", "n", "e"):
            if not isinstance(d[name], int) or isinstance(d[name], bool):
                raise GraphInputError(f"certificate field {name!r} must be an integer")
        for name in ("r", "center"):
            if d[name] is not None and (not isinstance(d[name], int) or isinstance(d[name], bool)):
                raise GraphInputError(f"certificate field {name!r} must be an integer or null")
        if not isinstance(d["edge_digest"], str) or not isinstance(d["verified"], bool):
            raise GraphInputError("malformed edge_digest or verified field")
        return cls(d["kind"], d["k"], d["r"], d["center"], tuple(d["cycle"]),
                   tuple(d["leaves"]), d["n"], d["e"], d["edge_digest"], d["verified"])

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphInputError(f"certificate is not valid JSON: {exc}") from None
        return cls.from_dict(data)


def keyring_certificate(G: Graph, K: Keyring, k: int, r: int) -> Certificate:
    ok = bool(verify_keyring(G, K, k, r))
    return Certificate("keyring", k, r, K.center, tuple(K.cycle), tuple(K.leaves),
                       G.n, G.e, edge_digest(G), ok)


def witness_certificate(G: Graph, w: HeavyCycleWitness) -> Certificate:
    return Certificate("heavy-cycle", w.k, None, w.center, tuple(w.cycle), (),
                       G.n, G.e, edge_digest(G), w.is_valid(G))


def none_certificate(G: Graph, k: int, r: int | None) -> Certificate:
    return Certificate("none", k, r, None, (), (), G.n, G.e, edge_digest(G), False)


def verify_certificate(G: Graph, cert: Certificate) -> Verdict:
    """Re-check a certificate against the graph it claims to describe."""
    if (cert.n, cert.e, cert.edge_digest) != (G.n, G.e, edge_digest(G)):
        return Verdict(False, "graph fingerprint does not match")
    if cert.kind == "keyring":
        if cert.center is None or cert.r is None:
            return Verdict(False, "keyring certificate without center or r")
        return verify_keyring(G, Keyring(cert.center, cert.cycle, cert.leaves), cert.k, cert.r)
    if cert.kind == "heavy-cycle":
        if cert.center is None:
            return Verdict(False, "heavy-cycle certificate without center")
        problems = HeavyCycleWitness(cert.cycle, cert.center, cert.k).problems(G)
        return Verdict(not problems, "; ".join(problems))
    return Verdict(False, "certificate of kind 'none' certifies nothing")
