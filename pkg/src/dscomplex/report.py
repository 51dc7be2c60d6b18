"""Aggregate analysis of a complex or graph."""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass
from fractions import Fraction

from .classes import in_class_xd
from .complex import Graph, SimplicialComplex, euler_characteristic, whitney
from .curvature import ds_flat
from .errors import InconsistencyError
from .poly import FPolynomial, ds_sign, ds_symmetric, evaluate, f_function, h_vector
from .roots import pairing_report, roots


@dataclass
class AnalysisReport:
    f_vector: list[int]
    f_function: list[str]
    h_vector: list[str] | None
    dimension: int
    euler_characteristic: int
    ds_symmetric: bool
    ds_sign: int | None
    ds_flat: bool | None
    in_class_xd: dict | None
    roots: list[dict]
    root_pairing: dict | None

    def to_json(self) -> dict:
        return asdict(self)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["field", "value"])
        for k, v in self.to_json().items():
            if isinstance(v, list):
                v = " ".join(
                    f"{x['re']!r}{x['im']:+}i" if isinstance(x, dict) else str(x) for x in v
                )
            elif isinstance(v, dict):
                v = " ".join(f"{a}={b}" for a, b in v.items())
            w.writerow([k, "" if v is None else v])
        return buf.getvalue()


def _whitney_graph(obj: SimplicialComplex | Graph) -> Graph | None:
    """The graph whose Whitney complex is obj, if there is one."""
    if isinstance(obj, Graph):
        return obj
    g = obj.skeleton_graph()
    return g if whitney(g) == obj else None


def analyze(obj: SimplicialComplex | Graph) -> AnalysisReport:
    c = whitney(obj) if isinstance(obj, Graph) else obj
    f = f_function(c)
    d = c.dimension
    chi = euler_characteristic(c)
    # the same number through the f-function: chi = 1 - f(-1)
    if chi != 1 - evaluate(f, Fraction(-1)):
        raise InconsistencyError("Euler characteristic disagrees with 1 - f(-1)")
    h = [str(x) for x in h_vector(f, d)]
    g = _whitney_graph(obj)
    xd = in_class_xd(g, d).to_json() if g is not None else None
    flat = ds_flat(g) if g is not None else None
    if f.degree >= 1:
        rs = roots(f)
        root_list = [{"re": z.real, "im": z.imag, "residual": r}
                     for z, r in zip(rs.roots, rs.residuals)]
        pairing = pairing_report(rs, d)
    else:
        root_list, pairing = [], None
    return AnalysisReport(
        f_vector=list(c.f_vector),
        f_function=f.to_json(),
        h_vector=h,
        dimension=d,
        euler_characteristic=chi,
        ds_symmetric=ds_symmetric(f, d),
        ds_sign=ds_sign(f),
        ds_flat=flat,
        in_class_xd=xd,
        roots=root_list,
        root_pairing=pairing,
    )


def f_function_of(obj) -> FPolynomial:
    return f_function(whitney(obj) if isinstance(obj, Graph) else obj)
