"""Harnesses for the two open questions.

Question A follows the roots of f_{G_n} for repeated Barycentric refinements
G_n, computed on f-vectors through the refinement operator. Question B counts
Dehn-Sommerville graphs, either exhaustively over all graphs on n <= 7
vertices up to isomorphism, or by seeded Erdos-Renyi sampling.

Sampling protocol: trial i draws G(n, p) from the Philox stream
``rng_for(seed, stream=i + 1)``; pairs (a, b), a < b, are visited in
lexicographic order and kept when their uniform draw is < p. Results are
merged in trial order, so worker count never changes the output.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import networkx as nx

from .complex import Graph, clique_f_vector
from .errors import CapExceededError, InvalidInputError
from .generators import random_sphere, rng_for
from .poly import FPolynomial, ds_symmetric
from .refinement import apply, operator_matrix
from .roots import RootSet, root_intervals, root_pairing_check, roots
from .svg import root_plot

# beyond this the coefficients no longer fit a double
COEFFICIENT_CAP = 10**300
EXHAUSTIVE_MAX_N = 7
SAMPLING_MAX_N = 16


@dataclass
class ExperimentRecord:
    kind: str
    seed: int | None
    parameters: dict
    trials: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {"kind": self.kind, "seed": self.seed, "parameters": self.parameters,
             "trials": self.trials, "summary": self.summary},
            sort_keys=True, indent=2,
        ) + "\n"


def _num(x: float) -> str:
    return repr(float(x))


# ---------------------------------------------------------------- question A

@dataclass(frozen=True)
class RefinementStep:
    index: int
    f_vector: tuple[int, ...]
    roots: RootSet

    @property
    def all_real(self) -> bool:
        return self.roots.all_real()


def refinement_root_sequence(f: Sequence[int], refinements: int) -> tuple[list[RefinementStep], str | None]:
    """Roots of f, A f, A^2 f, ...; stops early (keeping results) when a cap is hit."""
    f = tuple(int(x) for x in f)
    if not f:
        raise InvalidInputError("f-vector must be non-empty")
    op = operator_matrix(len(f) - 1)
    steps: list[RefinementStep] = []
    for i in range(refinements + 1):
        if max(f) > COEFFICIENT_CAP:
            return steps, f"refinement {i}: coefficients exceed {COEFFICIENT_CAP:.0e}"
        steps.append(RefinementStep(i, f, roots(FPolynomial.from_f_vector(f))))
        f = apply(op, f)
    return steps, None


def first_real_refinement(f: Sequence[int], limit: int = 10) -> int | None:
    """Smallest n such that all roots of the n-th refinement are real."""
    steps, _ = refinement_root_sequence(f, limit)
    return next((s.index for s in steps if s.all_real), None)


def roots_experiment(f: Sequence[int] | None = None, *, dim: int = 2, steps: int = 0,
                     refinements: int = 3, seed: int = 0) -> ExperimentRecord:
    if f is None:
        g = random_sphere(dim, steps, seed)
        f = clique_f_vector(g)
        source = {"random_sphere": {"d": dim, "steps": steps}}
    else:
        source = {"f_vector": list(f)}
    seq, note = refinement_root_sequence(f, refinements)
    rec = ExperimentRecord("roots", seed, {**source, "refinements": refinements})
    for s in seq:
        rec.trials.append({
            "refinement": s.index,
            "f_vector": list(s.f_vector),
            "roots": s.roots.to_json(),
            "real": list(s.roots.real_flags()),
            "all_real": s.all_real,
            "in_open_unit_interval": root_intervals(s.roots)["in_open_unit_interval"],
            "paired": root_pairing_check(s.roots),
            "max_residual": s.roots.residual_bound,
        })
    rec.summary = {
        "first_all_real": next((s.index for s in seq if s.all_real), None),
        "completed": len(seq),
        "cap_note": note,
    }
    return rec


def roots_csv(rec: ExperimentRecord) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["refinement", "f_vector", "root_index", "re", "im", "real", "residual"])
    for t in rec.trials:
        fv = " ".join(str(x) for x in t["f_vector"])
        for k, z in enumerate(t["roots"]):
            w.writerow([t["refinement"], fv, k, _num(z["re"]), _num(z["im"]),
                        int(t["real"][k]), _num(t["max_residual"])])
    return buf.getvalue()


def roots_svg(rec: ExperimentRecord) -> str:
    series = [
        (f"G{t['refinement']}", [complex(z["re"], z["im"]) for z in t["roots"]])
        for t in rec.trials
    ]
    return root_plot(series, title="roots under Barycentric refinement")


# ---------------------------------------------------------------- question B

def graph_is_ds(g: Graph) -> tuple[bool, tuple[int, ...]]:
    f = clique_f_vector(g)
    return ds_symmetric(FPolynomial.from_f_vector(f)), f


def exhaustive_search(n: int, connected: bool = False) -> ExperimentRecord:
    """All graphs on n vertices up to isomorphism (networkx graph atlas)."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise InvalidInputError(f"exhaustive mode needs 1 <= n <= {EXHAUSTIVE_MAX_N}")
    rec = ExperimentRecord("search-exhaustive", None, {"n": n, "connected": connected})
    total = 0
    for index, h in enumerate(nx.graph_atlas_g()):
        if h.number_of_nodes() != n or (connected and not nx.is_connected(h)):
            continue
        total += 1
        g = Graph.from_networkx(h)
        ok, f = graph_is_ds(g)
        if ok:
            rec.trials.append({"atlas_index": index, "edges": [list(e) for e in g.sorted_edges()],
                               "f_vector": list(f)})
    rec.summary = {"graphs": total, "hits": len(rec.trials)}
    return rec


def sample_graph(n: int, p: float, seed: int, trial: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    draws = rng_for(seed, stream=trial + 1).random(len(pairs))
    return Graph(range(n), (e for e, u in zip(pairs, draws) if u < p))


def _trial(args) -> dict:
    n, p, seed, i = args
    g = sample_graph(n, p, seed, i)
    ok, f = graph_is_ds(g)
    return {"trial": i, "edges": len(g.edges), "f_vector": list(f), "ds": ok}


def sampling_search(n: int, p: float, trials: int, seed: int, jobs: int = 1,
                    cap: int = SAMPLING_MAX_N) -> ExperimentRecord:
    if n > cap:
        raise CapExceededError(f"n = {n} exceeds the sampling cap {cap}", required=n, cap=cap)
    if n < 1 or not 0 <= p <= 1 or trials < 0:
        raise InvalidInputError("sampling needs n >= 1, 0 <= p <= 1 and trials >= 0")
    work = [(n, p, seed, i) for i in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_trial, work, chunksize=max(1, trials // (4 * jobs))))
    else:
        results = [_trial(w) for w in work]
    rec = ExperimentRecord("search-sampling", seed, {"n": n, "p": p, "trials": trials})
    rec.trials = results
    hits = [r for r in results if r["ds"]]
    rec.summary = {
        "hits": len(hits),
        "rate": str(Fraction(len(hits), trials)) if trials else "0",
        "hit_f_vectors": sorted({tuple(r["f_vector"]) for r in hits}),
    }
    return rec


def search_csv(rec: ExperimentRecord) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if rec.kind == "search-exhaustive":
        w.writerow(["atlas_index", "f_vector", "edges"])
        for t in rec.trials:
            w.writerow([t["atlas_index"], " ".join(map(str, t["f_vector"])),
                        " ".join(f"{a}-{b}" for a, b in t["edges"])])
    else:
        w.writerow(["trial", "edges", "f_vector", "ds"])
        for t in rec.trials:
            w.writerow([t["trial"], t["edges"], " ".join(map(str, t["f_vector"])), int(t["ds"])])
    return buf.getvalue()
