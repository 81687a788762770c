"""Scenario files: a JSON description of (algebra, Hopf algebra, action).

All scalars are strings like "3", "-1" or "2/7" and are parsed exactly.  The
Hopf algebra is either the builtin "kac-paljutkin", a group given by its
multiplication table (a group algebra), or inline structure constants.  Every
scenario is fully validated on load: Hopf axioms, existence of a two-sided
integral with nonzero counit (semisimplicity), and the module-algebra axioms
of the action.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .hopf import (HopfData, check_hopf_axioms, group_algebra, integral,
                   kac_paljutkin, NoIntegralError, NotSemisimpleError)
from .qalgebra import (HActionOnA, SkewPolyAlgebra, check_module_algebra,
                       InvalidAlgebraError)
from .rationals import ONE, ZERO, Rat, rat


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    pass


@dataclass
class Scenario:
    name: str
    action: HActionOnA
    q: Rat | None = None           # scenario parameter, echoed in reports
    weight_max: int | None = None
    index_max: int | None = None
    m_max: int | None = None


def builtin_scenario(q=Rat(2), **params) -> Scenario:
    from .kacqp import kacqp_action
    return Scenario("kac-paljutkin-qplane", kacqp_action(q), q=Rat(q), **params)


def _scalar(v, where):
    try:
        return rat(v)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: bad scalar {v!r}") from exc


def _matrix(rows, n, where):
    if not isinstance(rows, list) or len(rows) != n \
            or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ParseError(f"{where}: expected a {n}x{n} matrix")
    return tuple(tuple(_scalar(x, where) for x in r) for r in rows)


def _parse_algebra(node):
    if not isinstance(node, dict):
        raise ParseError("algebra: expected an object")
    gens = node.get("generators")
    if not isinstance(gens, list) or not gens \
            or any(not isinstance(g, str) for g in gens):
        raise ParseError("algebra.generators: expected a list of names")
    n = len(gens)
    qmat = [[ZERO] * n for _ in range(n)]
    coeffs = node.get("q", {})
    if not isinstance(coeffs, dict):
        raise ParseError("algebra.q: expected an object keyed 'i,j'")
    for key, val in coeffs.items():
        try:
            i, j = (int(t) for t in key.split(","))
        except ValueError as exc:
            raise ParseError(f"algebra.q: bad key {key!r}") from exc
        if not (0 <= i < j < n):
            raise ParseError(f"algebra.q: key {key!r} needs 0 <= i < j < n")
        qmat[i][j] = _scalar(val, f"algebra.q[{key}]")
    for i in range(n):
        for j in range(i + 1, n):
            if not qmat[i][j]:
                raise ParseError(f"algebra.q: missing or zero entry {i},{j}")
    try:
        return SkewPolyAlgebra(tuple(gens), tuple(tuple(r) for r in qmat))
    except InvalidAlgebraError as exc:
        raise ParseError(f"algebra: {exc}") from exc


def _coeff_dict(vec, dim, where):
    if not isinstance(vec, list) or len(vec) != dim:
        raise ParseError(f"{where}: expected a coefficient vector of length {dim}")
    out = {}
    for k, v in enumerate(vec):
        c = _scalar(v, where)
        if c:
            out[k] = c
    return out


def _parse_inline_hopf(node):
    dim = node.get("dim")
    labels = node.get("labels")
    if not isinstance(dim, int) or dim <= 0:
        raise ParseError("hopf.dim: expected a positive integer")
    if not isinstance(labels, list) or len(labels) != dim:
        raise ParseError("hopf.labels: expected dim names")
    mult_node = node.get("mult")
    if not isinstance(mult_node, list) or len(mult_node) != dim \
            or any(not isinstance(r, list) or len(r) != dim for r in mult_node):
        raise ParseError("hopf.mult: expected a dim x dim table")
    mult = tuple(tuple(_coeff_dict(mult_node[i][j], dim, f"hopf.mult[{i}][{j}]")
                       for j in range(dim)) for i in range(dim))
    unit = _coeff_dict(node.get("unit"), dim, "hopf.unit")
    comult_node = node.get("comult")
    if not isinstance(comult_node, list) or len(comult_node) != dim:
        raise ParseError("hopf.comult: expected dim tensor matrices")
    comult = []
    for k in range(dim):
        m = _matrix(comult_node[k], dim, f"hopf.comult[{k}]")
        comult.append({(i, j): m[i][j] for i in range(dim)
                       for j in range(dim) if m[i][j]})
    counit = tuple(_scalar(v, "hopf.counit")
                   for v in _expect_vec(node.get("counit"), dim, "hopf.counit"))
    anti_node = node.get("antipode")
    if not isinstance(anti_node, list) or len(anti_node) != dim:
        raise ParseError("hopf.antipode: expected dim columns")
    antipode = tuple(_coeff_dict(anti_node[k], dim, f"hopf.antipode[{k}]")
                     for k in range(dim))
    return HopfData(dim, tuple(labels), mult, unit, tuple(comult),
                    counit, antipode)


def _expect_vec(v, dim, where):
    if not isinstance(v, list) or len(v) != dim:
        raise ParseError(f"{where}: expected a vector of length {dim}")
    return v


def _parse_hopf(node):
    if node == "kac-paljutkin":
        return kac_paljutkin()
    if isinstance(node, dict) and "group" in node:
        table = node["group"]
        if not isinstance(table, list):
            raise ParseError("hopf.group: expected a multiplication table")
        return group_algebra(tuple(tuple(r) for r in table))
    if isinstance(node, dict):
        return _parse_inline_hopf(node)
    raise ParseError("hopf: expected 'kac-paljutkin', a group table, or "
                     "inline structure constants")


def parse_scenario(data: dict, name="scenario") -> Scenario:
    if not isinstance(data, dict):
        raise ParseError("scenario: expected a JSON object")
    algebra = _parse_algebra(data.get("algebra"))
    hopf = _parse_hopf(data.get("hopf"))
    action_node = data.get("action")
    if not isinstance(action_node, dict):
        raise ParseError("action: expected an object keyed by H basis label")
    n = algebra.n
    mats = []
    for k, lab in enumerate(hopf.labels):
        if lab not in action_node:
            raise ParseError(f"action: missing matrix for H basis element {lab!r}")
        mats.append(_matrix(action_node[lab], n, f"action[{lab}]"))
    extra = set(action_node) - set(hopf.labels)
    if extra:
        raise ParseError(f"action: unknown H basis labels {sorted(extra)}")
    params = data.get("parameters", {})
    if not isinstance(params, dict):
        raise ParseError("parameters: expected an object")
    q = _scalar(params["q"], "parameters.q") if "q" in params else None

    def _int(key):
        v = params.get(key)
        if v is None:
            return None
        if not isinstance(v, int):
            raise ParseError(f"parameters.{key}: expected an integer")
        return v

    scenario = Scenario(name, HActionOnA(algebra, hopf, tuple(mats)), q=q,
                        weight_max=_int("weight_max"),
                        index_max=_int("index_max"), m_max=_int("m_max"))
    validate_scenario(scenario)
    return scenario


def load_scenario(path) -> Scenario:
    try:
        with open(path) as f:
            data = json.load(f)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    return parse_scenario(data, name=str(path))


def validate_scenario(s: Scenario):
    """Hopf axioms, semisimplicity (two-sided integral), module-algebra axioms."""
    rep = check_hopf_axioms(s.action.hopf)
    if not rep.passed:
        raise ValidationError(
            "hopf axiom failed: " + "; ".join(rep.failures[:5]))
    try:
        integral(s.action.hopf)
    except (NoIntegralError, NotSemisimpleError) as exc:
        raise ValidationError(f"hopf is not semisimple: {exc}") from exc
    mrep = check_module_algebra(s.action)
    if not mrep.passed:
        raise ValidationError(
            "module-algebra axiom failed: " + "; ".join(mrep.failures[:5]))
