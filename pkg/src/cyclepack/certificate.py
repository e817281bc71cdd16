"""Packing certificates and their independent verification.

Nothing here depends on how a certificate was produced; the verifier only
reads the host graph's adjacency.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class PackingCertificate:
    k: int
    r: int
    cycles: tuple[tuple[int, ...], ...]

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "r": self.r, "cycles": [list(c) for c in self.cycles]})

    @classmethod
    def from_json(cls, text: str) -> "PackingCertificate":
        data = json.loads(text)
        return cls(int(data["k"]), int(data["r"]), tuple(tuple(int(v) for v in c) for c in data["cycles"]))


def certificate_problems(g: Graph, cert: PackingCertificate) -> list[str]:
    problems = []
    used: set[int] = set()
    for i, cyc in enumerate(cert.cycles):
        if len(cyc) < max(cert.r, 3):
            problems.append(f"cycle {i} has {len(cyc)} vertices, fewer than r={cert.r}")
        if len(set(cyc)) != len(cyc):
            problems.append(f"cycle {i} repeats a vertex")
        for j in range(len(cyc)):
            a, b = cyc[j - 1], cyc[j]
            if a not in g.adj or b not in g.adj[a]:
                problems.append(f"cycle {i} uses missing edge {a}-{b}")
                break
        if used & set(cyc):
            problems.append(f"cycle {i} shares vertices with an earlier cycle")
        used |= set(cyc)
    if len(cert.cycles) < cert.k:
        problems.append(f"{len(cert.cycles)} cycles, fewer than k={cert.k}")
    return problems


def verify_certificate(g: Graph, cert: PackingCertificate) -> bool:
    """True iff the certificate lists at least k disjoint cycles of g, each of order at least r."""
    return not certificate_problems(g, cert)
