"""Deterministic JSON reports and certificates, and their re-verification.

Every document carries ``"schema": "layerline/1"`` and a ``kind``.  A
document records the parameters it was computed from, so :func:`verify`
rebuilds it from scratch, demands an identical rebuild, and additionally runs
an independent check of the claimed object (isomorphism, regular group,
Hamiltonian cycle, fixed vertex, generators).
"""

from __future__ import annotations

import json
import random
from collections.abc import Callable
from math import factorial
from typing import Any

from . import __version__
from .automorphisms import automorphism_group
from .cayley import (
    IsoCertificate,
    alternating_a4_construction,
    cayley_graph,
    is_cayley,
    predicted_line_cayley_status,
    recognize_lb1,
    semidirect_affine_construction,
)
from .errors import SearchBudgetExceeded
from .graph import Graph, bipartition, diameter, is_connected
from .graph_io import render_label, to_graph6
from .hamilton import euler_circuit, validate_cycle
from .layers import LayerParams, SubsetVertex, build_b, build_line_b, counts, middle_binomial_mod4
from .perms import Permutation, apply_to_mask, closure, fixed_vertex_for_involution, is_automorphism
from .regular import is_regular_group
from .spectral import line_b1_spectrum_report

__all__ = [
    "SCHEMA",
    "dumps",
    "graph_descriptor",
    "build_graph",
    "props_report",
    "aut_report",
    "cayley_check_report",
    "cayley_build_report",
    "spectrum_report",
    "hamilton_report",
    "binomial_report",
    "fixed_vertex_report",
    "random_involution",
    "verify",
    "VerificationError",
]

SCHEMA = "layerline/1"


class VerificationError(Exception):
    """A stored document does not match what the library recomputes."""


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _doc(kind: str, **body: Any) -> dict[str, Any]:
    return {"schema": SCHEMA, "kind": kind, "generator": f"layerline {__version__}", **body}


def graph_descriptor(family: str, **params: int) -> dict[str, Any]:
    desc: dict[str, Any] = {"family": family, **params}
    desc["graph6"] = to_graph6(build_graph(desc))
    return desc


def build_graph(desc: dict[str, Any]) -> Graph:
    family = desc["family"]
    if family == "B":
        return build_b(desc["n"], desc["k"])
    if family == "LB":
        return build_line_b(desc["n"], desc["k"])[0]
    if family == "semidirect":
        return cayley_graph(*semidirect_affine_construction(desc["q"]))
    if family == "A4":
        return cayley_graph(*alternating_a4_construction())
    raise VerificationError(f"unknown graph family {family!r}")


def predicted_aut_order(n: int, k: int) -> int:
    return 2 * factorial(n) if n == 2 * k + 1 else factorial(n)


def props_report(n: int, k: int) -> dict[str, Any]:
    g = build_b(n, k)
    degs = g.degrees()
    try:
        bipartite = True
        bipartition(g)
    except Exception:
        bipartite = False
    return _doc(
        "props",
        params={"n": n, "k": k},
        order=g.order,
        size=g.size,
        degrees={str(d): degs.count(d) for d in sorted(set(degs))},
        bipartite=bipartite,
        connected=is_connected(g),
        diameter=diameter(g),
        regular=g.is_regular(),
        counts=vars(counts(n, k)),
    )


def aut_report(n: int, k: int, line: bool = False, budget: int | None = None) -> dict[str, Any]:
    LayerParams(n, k)
    desc = graph_descriptor("LB" if line else "B", n=n, k=k)
    g = build_graph(desc)
    aut = automorphism_group(g, budget=budget)
    predicted = predicted_aut_order(n, k)
    return _doc(
        "automorphism-group",
        graph=desc,
        order=aut.order,
        predicted_order=predicted,
        matches_prediction=aut.order == predicted,
        base=aut.base,
        generators=[p.cycle_notation(offset=0) for p in aut.generators],
        points="vertex indices from 0",
    )


def _group_elements(perms) -> list[str]:
    return [p.cycle_notation(offset=0) for p in perms]


def cayley_check_report(n: int, k: int, budget: int | None = None) -> dict[str, Any]:
    LayerParams(n, k)
    predicted, why = predicted_line_cayley_status(n, k)
    desc = {"family": "LB", "n": n, "k": k}
    g = build_graph(desc)
    verdict = is_cayley(g, budget=budget)
    cert = None
    if verdict.certificate is not None:
        desc = graph_descriptor("LB", n=n, k=k)
        cert = _doc(
            "regular-subgroup",
            graph=desc,
            order=verdict.certificate.order,
            elements=_group_elements(verdict.certificate.elements),
            points="vertex indices from 0",
            verified=True,
        )
    consistent = not (
        (predicted == "cayley" and verdict.verdict == "no")
        or (predicted == "non-cayley" and verdict.verdict == "yes")
    )
    return _doc(
        "cayley-check",
        params={"n": n, "k": k},
        vertices=g.order,
        verdict=verdict.verdict,
        reason=verdict.reason,
        predicted=predicted,
        predicted_reason=why,
        consistent_with_prediction=consistent,
        certificate=cert,
    )


def cayley_build_report(q: int) -> dict[str, Any]:
    target = graph_descriptor("semidirect", q=q)
    g = build_graph(target)
    found = recognize_lb1(g)
    if found is None:
        return _doc("iso", target=target, recognized=False, verified=False)
    n, cert = found
    return _doc(
        "iso",
        source=graph_descriptor("LB", n=n, k=1),
        target=target,
        recognized=True,
        mapping=list(cert.mapping),
        verified=cert.verify(),
    )


def spectrum_report(n: int) -> dict[str, Any]:
    LayerParams(n, 1)
    rep = line_b1_spectrum_report(n)
    return _doc("spectrum", **rep.as_dict(), exact=rep.exact)


def hamilton_report(n: int, k: int) -> dict[str, Any]:
    LayerParams(n, k)
    if n % 2 == 0 or k % 2 == 0:
        return _doc(
            "hamilton",
            params={"n": n, "k": k},
            status="conjectured, not certified",
            reason="B(n,k) is Eulerian only for odd n and odd k",
        )
    g = build_b(n, k)
    circuit = euler_circuit(g)
    lg, _ = build_line_b(n, k)
    ok = validate_cycle(lg, circuit)
    return _doc(
        "hamilton",
        params={"n": n, "k": k},
        status="certified" if ok else "invalid",
        length=len(circuit),
        expected_length=counts(n, k).edges,
        cycle=[render_label(lg.labels[v]) for v in circuit],
        verified=ok,
    )


def binomial_report(k: int) -> dict[str, Any]:
    r = middle_binomial_mod4(k)
    return _doc(
        "binomial-mod4",
        k=k,
        binomial=str(r.binomial),
        residue_mod_4=r.residue,
        is_multiple_of_4=r.is_multiple_of_4,
        k_is_power_of_two=r.excluded_by_hypothesis,
    )


def random_involution(n: int, rng: random.Random) -> Permutation:
    """Uniform number of transpositions in 1..n//2, then a random matching."""
    a = rng.randint(1, n // 2)
    pts = list(range(n))
    rng.shuffle(pts)
    images = list(range(n))
    for i in range(a):
        x, y = pts[2 * i], pts[2 * i + 1]
        images[x], images[y] = y, x
    return Permutation(tuple(images))


def _fixed_vertex_entry(theta: Permutation, p: LayerParams) -> dict[str, Any]:
    lower, upper = fixed_vertex_for_involution(theta, p)
    fixed = apply_to_mask(theta, lower.mask) == lower.mask and apply_to_mask(theta, upper.mask) == upper.mask
    return {"theta": theta.cycle_notation(), "vertex": [str(lower), str(upper)], "fixed": fixed}


def fixed_vertex_report(n: int, k: int, theta: str | None = None,
                        samples: int = 0, seed: int = 0) -> dict[str, Any]:
    p = LayerParams(n, k)
    entries = []
    if theta is not None:
        entries.append(_fixed_vertex_entry(Permutation.from_cycles(theta, n), p))
    if samples:
        rng = random.Random(seed)
        entries.extend(_fixed_vertex_entry(random_involution(n, rng), p) for _ in range(samples))
    return _doc(
        "fixed-vertex",
        params={"n": n, "k": k},
        seed=seed if samples else None,
        samples=samples,
        theta=theta,
        results=entries,
        all_fixed=all(e["fixed"] for e in entries),
    )


def _parse_perm(text: str, n: int) -> Permutation:
    return Permutation.from_cycles(text, n, offset=0)


def _check_graph(desc: dict[str, Any]) -> Graph:
    g = build_graph(desc)
    if to_graph6(g) != desc["graph6"]:
        raise VerificationError(f"rebuilt {desc['family']} graph differs from stored graph6")
    return g


def _verify_regular(doc: dict[str, Any]) -> None:
    g = _check_graph(doc["graph"])
    perms = [_parse_perm(s, g.order) for s in doc["elements"]]
    if not all(is_automorphism(g, p) for p in perms):
        raise VerificationError("a subgroup element is not an automorphism")
    if not is_regular_group(perms, g.order) or len(doc["elements"]) != doc["order"]:
        raise VerificationError("stored group does not act regularly")
    members = {p.images for p in perms}
    if any((a * b).images not in members for a in perms for b in perms):
        raise VerificationError("stored elements are not closed under composition")


def _verify_extra(doc: dict[str, Any]) -> None:
    kind = doc["kind"]
    if kind == "automorphism-group":
        g = _check_graph(doc["graph"])
        gens = [_parse_perm(s, g.order) for s in doc["generators"]]
        if not all(is_automorphism(g, p) for p in gens):
            raise VerificationError("a generator is not an automorphism")
        if gens and doc["order"] <= 100_000 and len(closure(gens)) != doc["order"]:
            raise VerificationError("generators do not generate a group of the stored order")
        if not doc["matches_prediction"]:
            raise VerificationError("automorphism group order differs from n! / 2 n!")
    elif kind == "cayley-check":
        if doc["certificate"] is not None:
            _verify_regular(doc["certificate"])
        if not doc["consistent_with_prediction"]:
            raise VerificationError("Cayley verdict contradicts the proved status")
    elif kind == "regular-subgroup":
        _verify_regular(doc)
    elif kind == "iso":
        if not doc.get("recognized"):
            raise VerificationError("graph was not recognized")
        cert = IsoCertificate(_check_graph(doc["source"]), _check_graph(doc["target"]), tuple(doc["mapping"]))
        if not cert.verify():
            raise VerificationError("stored mapping is not an isomorphism")
    elif kind == "hamilton" and "cycle" in doc:
        n, k = doc["params"]["n"], doc["params"]["k"]
        lg, _ = build_line_b(n, k)
        index = {render_label(lab): i for i, lab in enumerate(lg.labels)}
        if not validate_cycle(lg, [index[s] for s in doc["cycle"]]):
            raise VerificationError("stored cycle is not Hamiltonian")
    elif kind == "fixed-vertex":
        n, k = doc["params"]["n"], doc["params"]["k"]
        b = build_b(n, k)
        index = {str(lab): i for i, lab in enumerate(b.labels)}
        for e in doc["results"]:
            theta = Permutation.from_cycles(e["theta"], n)
            lower, upper = (SubsetVertex.of(_elements(s), n) for s in e["vertex"])
            if not b.has_edge(index[str(lower)], index[str(upper)]):
                raise VerificationError(f"{e['vertex']} is not a line-graph vertex")
            if apply_to_mask(theta, lower.mask) != lower.mask or apply_to_mask(theta, upper.mask) != upper.mask:
                raise VerificationError(f"{e['theta']} moves {e['vertex']}")
    elif kind == "spectrum":
        if not doc["exact"]:
            raise VerificationError("spectrum is not exactly the predicted set")


def _elements(text: str) -> list[int]:
    body = text.strip().strip("{}")
    return [int(x) for x in body.split(",") if x]


_REBUILDERS: dict[str, Callable[[dict[str, Any]], dict[str, Any]]] = {
    "props": lambda d: props_report(d["params"]["n"], d["params"]["k"]),
    "automorphism-group": lambda d: aut_report(d["graph"]["n"], d["graph"]["k"], d["graph"]["family"] == "LB"),
    "cayley-check": lambda d: cayley_check_report(d["params"]["n"], d["params"]["k"]),
    "iso": lambda d: cayley_build_report(d["target"]["q"]),
    "spectrum": lambda d: spectrum_report(d["n"]),
    "hamilton": lambda d: hamilton_report(d["params"]["n"], d["params"]["k"]),
    "binomial-mod4": lambda d: binomial_report(d["k"]),
    "fixed-vertex": lambda d: fixed_vertex_report(
        d["params"]["n"], d["params"]["k"], d["theta"], d["samples"], d["seed"] or 0
    ),
}


def verify(doc: dict[str, Any]) -> list[str]:
    """Re-derive ``doc`` and run its independent checks.

    Returns a list of human-readable confirmations; raises
    :class:`VerificationError` on any mismatch.
    """
    if doc.get("schema") != SCHEMA:
        raise VerificationError(f"unsupported schema {doc.get('schema')!r}")
    kind = doc.get("kind")
    if kind == "regular-subgroup":
        _verify_regular(doc)
        return ["regular subgroup re-verified"]
    if kind not in _REBUILDERS:
        raise VerificationError(f"unknown document kind {kind!r}")
    try:
        rebuilt = _REBUILDERS[kind](doc)
    except SearchBudgetExceeded:
        raise
    stored = {k: v for k, v in doc.items() if k != "generator"}
    fresh = {k: v for k, v in rebuilt.items() if k != "generator"}
    if dumps(stored) != dumps(fresh):
        raise VerificationError(f"{kind} document differs from a fresh computation")
    _verify_extra(doc)
    return [f"{kind} rebuilt identically", f"{kind} independent checks passed"]
