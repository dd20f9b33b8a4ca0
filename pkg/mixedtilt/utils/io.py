"""
JSON documents for geometries, classes, lattices, bounds, candidate lists
and conjecture coefficients

All rationals travel as strings "p" or "p/q". Output is canonical: sorted
keys and reduced fractions, so identical inputs give identical bytes.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Union

from ..core.chern import ChowClass, ContractedClass
from ..core.constants import (
    COEFFS_SOURCE_CONJECTURE, COMPONENT_NAMES, KIND_GENERIC, KIND_PROJECTIVE_BUNDLE,
)
from ..core.exceptions import DataError, ValidationError
from ..core.geometry import FibredGeometry, new_generic, new_projective_bundle
from ..core.logger import logger
from ..core.rationals import format_rational
from ..core.validators import Validator
from ..stability.pbundle import ConjectureCoefficients
from ..stability.slopes import SubobjectLattice
from ..stability.walls import EnumerationBounds

PathLike = Union[str, Path]


def load_json(filepath: PathLike, name: str = "document") -> Any:
    """
    Read a JSON file

    Raises:
        DataError: missing or unreadable file, bad encoding or invalid JSON
    """
    try:
        path = Validator.validate_file_exists(filepath, name)
    except ValidationError as e:
        raise DataError(str(e)) from e
    try:
        with open(path, 'r', encoding='utf-8') as f:
            doc = json.load(f)
    except json.JSONDecodeError as e:
        raise DataError(f"{name} {filepath} is not valid JSON: {e}") from e
    except UnicodeDecodeError as e:
        raise DataError(f"{name} {filepath} is not UTF-8 text: {e}") from e
    except OSError as e:
        raise DataError(f"cannot read {name} {filepath}: {e}") from e
    logger.debug(f"Loaded {name} from {filepath}")
    return doc


def dump_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def _rational(doc: Dict[str, Any], key: str, where: str) -> Fraction:
    if key not in doc:
        raise DataError(f"{where} is missing {key!r}")
    value = doc[key]
    if isinstance(value, float):
        raise DataError(f"{where}.{key} must be an exact rational string, got float {value}")
    return Validator.validate_rational(value, f"{where}.{key}")


def _require_mapping(doc: Any, where: str) -> Dict[str, Any]:
    if not isinstance(doc, dict):
        raise DataError(f"{where} must be a JSON object, got {type(doc).__name__}")
    return doc


# ============================================================================
# GEOMETRY
# ============================================================================

def geometry_from_dict(doc: Any) -> FibredGeometry:
    doc = _require_mapping(doc, "geometry")
    kind = doc.get("kind")
    genus = doc.get("genus")
    if isinstance(genus, bool) or not isinstance(genus, int):
        raise DataError(f"geometry.genus must be an integer, got {genus!r}")
    if kind == KIND_PROJECTIVE_BUNDLE:
        deg_e = doc.get("deg_e")
        if isinstance(deg_e, str):
            deg_e = Validator.validate_rational(deg_e, "geometry.deg_e")
            if deg_e.denominator != 1:
                raise DataError(f"geometry.deg_e must be an integer, got {deg_e}")
            deg_e = int(deg_e)
        if isinstance(deg_e, bool) or not isinstance(deg_e, int):
            raise DataError(f"geometry.deg_e must be an integer, got {deg_e!r}")
        return new_projective_bundle(genus, deg_e)
    if kind == KIND_GENERIC:
        return new_generic(genus, _rational(doc, "h3", "geometry"), _rational(doc, "h2f", "geometry"))
    raise DataError(f"geometry.kind must be {KIND_PROJECTIVE_BUNDLE!r} or {KIND_GENERIC!r}, got {kind!r}")


def geometry_to_dict(geom: FibredGeometry) -> Dict[str, Any]:
    if geom.is_projective_bundle:
        return {"kind": KIND_PROJECTIVE_BUNDLE, "genus": geom.base_genus, "deg_e": geom.deg_e}
    return {
        "kind": KIND_GENERIC, "genus": geom.base_genus,
        "h3": format_rational(geom.h3), "h2f": format_rational(geom.h2f),
    }


# ============================================================================
# CLASSES
# ============================================================================

def class_from_dict(doc: Any, where: str = "class") -> ContractedClass:
    doc = _require_mapping(doc, where)
    return ContractedClass(*(_rational(doc, name, where) for name in COMPONENT_NAMES))


def class_to_dict(v: ContractedClass) -> Dict[str, str]:
    return {name: format_rational(value) for name, value in zip(COMPONENT_NAMES, v.components())}


def is_chow_document(doc: Any) -> bool:
    return isinstance(doc, dict) and "c1" in doc and "c2" in doc


def _pair(doc: Dict[str, Any], key: str, where: str):
    value = doc.get(key)
    if not isinstance(value, list) or len(value) != 2:
        raise DataError(f"{where}.{key} must be a list of two rationals")
    return tuple(_rational({"v": item}, "v", f"{where}.{key}") for item in value)


def chow_from_dict(doc: Any, where: str = "class") -> ChowClass:
    doc = _require_mapping(doc, where)
    c1_h, c1_f = _pair(doc, "c1", where)
    c2_h2, c2_hf = _pair(doc, "c2", where)
    return ChowClass(_rational(doc, "ch0", where), c1_h, c1_f, c2_h2, c2_hf, _rational(doc, "ch3", where))


def chow_to_dict(V: ChowClass) -> Dict[str, Any]:
    return {
        "ch0": format_rational(V.ch0),
        "c1": [format_rational(V.c1_h), format_rational(V.c1_f)],
        "c2": [format_rational(V.c2_h2), format_rational(V.c2_hf)],
        "ch3": format_rational(V.ch3),
    }


def candidates_from_doc(doc: Any) -> List[ContractedClass]:
    """A JSON list of classes, or {"candidates": [...]}"""
    if isinstance(doc, dict):
        doc = doc.get("candidates")
    if not isinstance(doc, list):
        raise DataError("candidates must be a list of classes")
    return [class_from_dict(item, f"candidates[{i}]") for i, item in enumerate(doc)]


# ============================================================================
# LATTICES, BOUNDS, COEFFICIENTS
# ============================================================================

def lattice_from_dict(doc: Any) -> SubobjectLattice:
    doc = _require_mapping(doc, "lattice")
    nodes_doc = _require_mapping(doc.get("nodes"), "lattice.nodes")
    edges_doc = doc.get("edges", [])
    if not isinstance(edges_doc, list) or not all(
            isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e) for e in edges_doc):
        raise DataError("lattice.edges must be a list of [sub, super] id pairs")
    root = doc.get("root")
    if not isinstance(root, str):
        raise DataError("lattice.root must be a node id")
    nodes = {node_id: class_from_dict(node_doc, f"lattice.nodes.{node_id}")
             for node_id, node_doc in nodes_doc.items()}
    return SubobjectLattice(nodes=nodes, edges=tuple(tuple(e) for e in edges_doc), root=root)


def lattice_to_dict(lat: SubobjectLattice) -> Dict[str, Any]:
    return {
        "root": lat.root,
        "nodes": {node_id: class_to_dict(v) for node_id, v in lat.nodes.items()},
        "edges": [list(e) for e in lat.edges],
    }


def bounds_from_dict(doc: Any) -> EnumerationBounds:
    """
    {"max_abs": "2"} or a list of six rationals or a mapping by component
    name; optional "lattice" (default true) and "grid".
    """
    doc = _require_mapping(doc, "bounds")
    raw = doc.get("max_abs")
    if isinstance(raw, list):
        if len(raw) != 6:
            raise DataError("bounds.max_abs list needs 6 entries")
        max_abs = tuple(_rational({"v": x}, "v", "bounds.max_abs") for x in raw)
    elif isinstance(raw, dict):
        max_abs = tuple(_rational(raw, name, "bounds.max_abs") for name in COMPONENT_NAMES)
    else:
        max_abs = (_rational(doc, "max_abs", "bounds"),) * 6
    lattice = doc.get("lattice", True)
    grid = doc.get("grid", 6)
    if not isinstance(lattice, bool) or isinstance(grid, bool) or not isinstance(grid, int):
        raise DataError("bounds.lattice must be a boolean and bounds.grid an integer")
    return EnumerationBounds(max_abs, lattice, grid)


def conjecture_coeffs_from_dict(doc: Any) -> ConjectureCoefficients:
    doc = _require_mapping(doc, "conjecture coefficients")
    return ConjectureCoefficients(
        *(_rational(doc, name, "conjecture coefficients") for name in ("a1", "b1", "a2", "b2", "c")),
        source=doc.get("source", COEFFS_SOURCE_CONJECTURE),
    )
