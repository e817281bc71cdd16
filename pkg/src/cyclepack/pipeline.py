"""Minimalize, pack the minor, lift the packing back, verify."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .certificate import PackingCertificate, certificate_problems
from .engine import EngineError, PackConfig, PackResult, pack
from .graph import Graph
from .minimalize import MinimalizeResult, lift_packing, minimalize


@dataclass
class SolveResult:
    run: PackResult
    # certificate in the input graph (lifted when a minor was packed)
    certificate: Optional[PackingCertificate]
    reduction: Optional[MinimalizeResult]

    @property
    def success(self) -> bool:
        return self.certificate is not None


def solve(g: Graph, cfg: PackConfig, use_minor: bool = True) -> SolveResult:
    reduction = minimalize(g) if use_minor else None
    host = reduction.minor if reduction else g
    run = pack(host, cfg)
    cert = run.certificate
    if cert is not None and reduction is not None:
        lifted = lift_packing(g, reduction.history, cert.cycles)
        cert = PackingCertificate(cert.k, cert.r, tuple(tuple(c) for c in lifted))
    if cert is not None:
        problems = certificate_problems(g, cert)
        if problems:
            raise EngineError("internal error, produced certificate is invalid: " + "; ".join(problems))
    return SolveResult(run, cert, reduction)
