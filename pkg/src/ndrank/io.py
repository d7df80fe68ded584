"""File formats.

Point sets are CSV: optional ``#`` comment lines carrying metadata, a header
row ``f1,...,fk``, then one objective vector per row in plain decimal.

Instances are JSON documents::

    {"format": "ndrank-instance", "format_version": 1, "family": "tsp",
     "params": {"n_cities": 30, "k": 10, "tsp_pc": 0.2}, "seed": 7,
     "distances": [[[...], ...], ...]}

JSP instances carry ``params`` ``n_jobs``/``k``/``jsp_pc`` and per-job lists
``proc_time``, ``due_date`` and 1-based ``customer`` instead of ``distances``.
The generator seed is stored, so an instance can be regenerated or checked.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Mapping, TextIO

import numpy as np

from .problems import JspInstance, Problem, TspInstance

FORMAT = "ndrank-instance"
FORMAT_VERSION = 1


class ParseError(ValueError):
    pass


def fmt(x: float) -> str:
    """Shortest round-tripping decimal for ``x``."""
    x = float(x)
    return str(int(x)) if x.is_integer() and abs(x) < 1e15 else repr(x)


def write_comments(out: TextIO, meta: Mapping[str, object]) -> None:
    for key, value in meta.items():
        out.write(f"# {key}={value}\n")


def write_points(out: TextIO, points, meta: Mapping[str, object] | None = None) -> None:
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if meta:
        write_comments(out, meta)
    out.write(",".join(f"f{i + 1}" for i in range(points.shape[1])) + "\n")
    for row in points:
        out.write(",".join(fmt(x) for x in row) + "\n")


def parse_points(text: str) -> np.ndarray:
    """Parse a point-set CSV; raises :class:`ParseError` naming the bad line."""
    rows: list[list[float]] = []
    k = None
    header_seen = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        try:
            values = [float(f) for f in fields]
        except ValueError:
            if rows or header_seen:
                raise ParseError(f"line {lineno}: non-numeric value in {line!r}") from None
            header_seen = True
            k = len(fields)
            continue
        if k is None:
            k = len(values)
        if len(values) != k:
            raise ParseError(f"line {lineno}: expected {k} values, got {len(values)}")
        if not all(np.isfinite(values)):
            raise ParseError(f"line {lineno}: non-finite value")
        rows.append(values)
    if not rows:
        raise ParseError("no points found")
    return np.array(rows)


def read_points(path) -> np.ndarray:
    return parse_points(Path(path).read_text())


def instance_to_dict(inst: Problem) -> dict:
    doc: dict = {"format": FORMAT, "format_version": FORMAT_VERSION, "family": inst.family}
    if isinstance(inst, TspInstance):
        doc["params"] = {"n_cities": inst.n_cities, "k": inst.k, "tsp_pc": inst.tsp_pc}
        doc["seed"] = inst.seed
        doc["distances"] = inst.matrices.tolist()
    else:
        doc["params"] = {"n_jobs": inst.n_jobs, "k": inst.k, "jsp_pc": inst.jsp_pc}
        doc["seed"] = inst.seed
        doc["proc_time"] = inst.proc_time.tolist()
        doc["due_date"] = inst.due_date.tolist()
        doc["customer"] = inst.customer.tolist()
    return doc


def instance_from_dict(doc: Mapping) -> Problem:
    if doc.get("format") != FORMAT:
        raise ParseError(f"not an instance document (format={doc.get('format')!r})")
    if doc.get("format_version") != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {doc.get('format_version')!r}")
    p = doc["params"]
    if doc["family"] == "tsp":
        m = np.array(doc["distances"], dtype=float)
        if m.shape != (p["k"], p["n_cities"], p["n_cities"]):
            raise ParseError(f"distance array has shape {m.shape}")
        m.setflags(write=False)
        return TspInstance(p["n_cities"], p["k"], float(p["tsp_pc"]), int(doc["seed"]), m)
    if doc["family"] == "jsp":
        arrays = [np.array(doc[key], dtype=dt) for key, dt in (("proc_time", np.int64), ("due_date", float), ("customer", np.int64))]
        for a in arrays:
            if a.shape != (p["n_jobs"],):
                raise ParseError("per-job arrays must have n_jobs entries")
            a.setflags(write=False)
        if arrays[2].min() < 1 or arrays[2].max() > p["k"]:
            raise ParseError("customer ids must lie in 1..k")
        return JspInstance(p["n_jobs"], p["k"], float(p["jsp_pc"]), int(doc["seed"]), *arrays)
    raise ParseError(f"unknown family {doc['family']!r}")


_NUMERIC_LIST = re.compile(r"\[\s*([-+0-9.eE,\s]*?)\s*\]")


def dumps_instance(inst: Problem) -> str:
    text = json.dumps(instance_to_dict(inst), indent=2)
    # keep innermost numeric lists on one line
    return _NUMERIC_LIST.sub(lambda m: "[" + ", ".join(s.strip() for s in m.group(1).split(",")) + "]", text) + "\n"


def loads_instance(text: str) -> Problem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid instance file: {e}") from None
    return instance_from_dict(doc)


def write_instance(path, inst: Problem) -> None:
    Path(path).write_text(dumps_instance(inst))


def read_instance(path) -> Problem:
    return loads_instance(Path(path).read_text())


def write_genomes(out: TextIO, genomes) -> None:
    for g in genomes:
        out.write(" ".join(str(int(x)) for x in g) + "\n")
