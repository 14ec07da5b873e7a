"""File formats: JSON for monoids, unary algebras and constellations, TSV tables and
DOT Hasse diagrams."""

import json
from pathlib import Path
from typing import Any

import networkx as nx
import numpy as np

from .constellation import UNDEFINED, CompletionElement, Constellation
from .families import BinaryRelation, BlockPartition, PartialTransformation, Transformation
from .monoid import (
    FiniteSemigroup,
    UnaryAlgebra,
    UnaryKind,
    _frozen,
    build_table_monoid,
    build_table_semigroup,
    make_unary,
)


def dumps(data: dict[str, Any]) -> str:
    """Deterministic JSON text with a trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(data: dict[str, Any], path: Path) -> None:
    path.write_text(dumps(data), encoding="utf-8")


def read_json(path: Path) -> dict[str, Any]:
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object")
    return data


def is_constellation_data(data: dict[str, Any]) -> bool:
    return "product" in data and "dmap" in data


def encode_element(x: Any) -> Any:
    """JSON form of a concrete element; ``None`` (an adjoined zero) stays ``null``."""
    if x is None:
        return None
    if isinstance(x, CompletionElement):
        return {"type": "pair", "e": x.e, "s": x.s}
    if isinstance(x, Transformation):
        return {"type": "transformation", "img": list(x.img)}
    if isinstance(x, PartialTransformation):
        return {"type": "partial", "img": list(x.img)}
    if isinstance(x, BinaryRelation):
        return {"type": "relation", "rows": list(x.rows)}
    if isinstance(x, BlockPartition):
        return {"type": "partition", "block": list(x.block)}
    raise TypeError(f"cannot encode element of type {type(x).__name__}")


def decode_element(data: Any) -> Any:
    if data is None:
        return None
    kind = data.get("type")
    if kind == "pair":
        return CompletionElement(int(data["e"]), int(data["s"]))
    if kind == "transformation":
        return Transformation(tuple(data["img"]))
    if kind == "partial":
        return PartialTransformation(tuple(data["img"]))
    if kind == "relation":
        return BinaryRelation(tuple(data["rows"]))
    if kind == "partition":
        return BlockPartition(tuple(data["block"]))
    raise ValueError(f"unknown element type {kind!r}")


def monoid_to_dict(obj: FiniteSemigroup | UnaryAlgebra) -> dict[str, Any]:
    """``to_dict`` plus the concrete elements, when the monoid carries them."""
    data = obj.to_dict()
    base = obj.base if isinstance(obj, UnaryAlgebra) else obj
    data["elements"] = (
        [encode_element(x) for x in base.elements] if base.elements is not None else None
    )
    return data


def monoid_from_dict(
    data: dict[str, Any], validate: bool = True
) -> FiniteSemigroup | UnaryAlgebra:
    """Inverse of ``monoid_to_dict``: a monoid when ``one`` is set, with the unary map
    attached when ``unary`` is present. Its laws are checked unless ``validate`` is off,
    which is how a law checker reads a possibly broken algebra."""
    if "mul" not in data:
        raise ValueError("monoid JSON needs a 'mul' table")
    labels = data.get("labels")
    elements = None
    if data.get("elements") is not None:
        elements = [decode_element(x) for x in data["elements"]]
    base: FiniteSemigroup
    if data.get("one") is not None:
        base = build_table_monoid(
            data["mul"],
            one=data["one"],
            zero=data.get("zero"),
            labels=labels,
            elements=elements,
        )
    else:
        base = build_table_semigroup(data["mul"], labels=labels, elements=elements)
    unary = data.get("unary")
    if unary is None:
        return base
    if validate:
        return make_unary(base, unary["map"], unary["kind"])
    u = np.asarray(unary["map"], dtype=np.int64)
    if u.shape != (base.size,) or u.min() < 0 or u.max() >= base.size:
        raise ValueError(f"unary map must have {base.size} entries in range")
    return UnaryAlgebra(base=base, unary=_frozen(u), kind=UnaryKind(unary["kind"]))


def load_monoid(path: Path) -> FiniteSemigroup | UnaryAlgebra:
    return monoid_from_dict(read_json(path))


def dump_monoid(obj: FiniteSemigroup | UnaryAlgebra, path: Path) -> None:
    write_json(monoid_to_dict(obj), path)


def constellation_from_dict(data: dict[str, Any]) -> Constellation:
    n = int(data["size"])
    product = np.full((n, n), UNDEFINED, dtype=np.int64)
    for x, y, z in data["product"]:
        product[x, y] = z
    elements = None
    if data.get("elements") is not None:
        elements = tuple(CompletionElement(c["e"], c["s"]) for c in data["elements"])
    labels = tuple(data["labels"]) if data.get("labels") is not None else None
    return Constellation(
        product=_frozen(product),
        dmap=_frozen(np.asarray(data["dmap"], dtype=np.int64)),
        labels=labels,
        elements=elements,
    )


def load_constellation(path: Path) -> Constellation:
    return constellation_from_dict(read_json(path))


def dump_constellation(p: Constellation, path: Path) -> None:
    write_json(p.to_dict(), path)


def table_tsv(table: np.ndarray, labels: tuple[str, ...]) -> str:
    """Cayley table with a header row of labels; undefined products print as ``-``."""
    lines = ["\t".join(["", *labels])]
    for x, row in enumerate(table):
        cells = ["-" if v == UNDEFINED else labels[v] for v in row]
        lines.append("\t".join([labels[x], *cells]))
    return "\n".join(lines) + "\n"


def hasse_dot(le: np.ndarray, labels: tuple[str, ...], name: str = "order") -> str:
    """Hasse diagram of a partial order (``le[x, y]`` iff x ≤ y) as DOT, arrows upwards."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(labels)))
    graph.add_edges_from((int(x), int(y)) for x, y in np.argwhere(le) if x != y)
    if not nx.is_directed_acyclic_graph(graph):
        raise ValueError("relation is not antisymmetric")
    cover = nx.transitive_reduction(graph)
    lines = [f'digraph "{name}" {{']
    for x in range(len(labels)):
        lines.append(f'  {x} [label="{labels[x]}"];')
    for x, y in sorted(cover.edges()):
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
