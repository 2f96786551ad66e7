"""Command-line interface and report serialisation.

Exit codes: 0 when every check passes, 1 on a false verdict or a mismatch,
2 on usage and input errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import yaml

from qcroots import _linalg as la
from qcroots.classify import QUASI_CONSTANT, TRIVIAL, classify_general, verify_classification
from qcroots.duality import Ray, centralizer_levi, dualize_ray, dualize_ray_inverse, verify_duality
from qcroots.hasse import bound_for_levi, full_table, table_types
from qcroots.predicates import (
    LeviType,
    is_cominuscule,
    is_L_ample,
    is_minuscule,
    is_quasi_constant,
    orbit_value_sets,
    orbital_ratio_of,
)
from qcroots.rootdata import (
    CHARACTER,
    COCHARACTER,
    LatticeVector,
    RootDatum,
    RootSystemSpec,
    build,
    coroot_chain,
    coroot_sum,
    vertex_data,
)
from qcroots.weyl import GaloisAction

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2
SIDE_NAMES = {"char": CHARACTER, "character": CHARACTER, "cochar": COCHARACTER, "cocharacter": COCHARACTER}


class InputError(ValueError):
    """Malformed user input; reported with exit code 2."""


# -- reports -------------------------------------------------------------------


def _plain(obj):
    """JSON-safe copy: fractions become strings, tuples and sets lists."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [_plain(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, LatticeVector):
        return [str(c) for c in obj.coords]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


@dataclass
class Report:
    command: str
    ok: bool
    data: dict
    lines: list[str] = field(default_factory=list, compare=False)

    def __post_init__(self):
        self.data = _plain(self.data)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.ok else EXIT_FALSE

    def to_json(self) -> str:
        doc = {"command": self.command, "ok": self.ok, "exit_code": self.exit_code, "data": self.data}
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        doc = json.loads(text)
        return cls(doc["command"], bool(doc["ok"]), doc["data"])

    def render(self) -> str:
        head = f"{self.command}: {'PASS' if self.ok else 'FAIL'}"
        return "\n".join([head, *self.lines])


# -- input parsing -------------------------------------------------------------


def _node_at(node, path):
    """Walk a composed YAML node along ``path`` as far as it goes."""
    for key in path:
        if isinstance(node, yaml.MappingNode):
            nxt = next((v for k, v in node.value if k.value == key), None)
        elif isinstance(node, yaml.SequenceNode) and isinstance(key, int) and key < len(node.value):
            nxt = node.value[key]
        else:
            nxt = None
        if nxt is None:
            break
        node = nxt
    return node


def load_spec_text(text: str, name: str = "<spec>") -> tuple[RootDatum, GaloisAction]:
    """Parse a datum description (YAML or JSON) into a datum and Galois action.

    Keys: ``factors`` (list of ``{type, rank}``), optional ``char_lattice`` and
    ``cochar_lattice`` (``sc``, ``adjoint`` or a matrix of rationals in
    fundamental coordinates) and optional ``galois`` (list of 1-based
    permutations of the simple roots).
    """
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        line = mark.line + 1 if mark is not None else 1
        raise InputError(f"{name}:{line}: {getattr(exc, 'problem', None) or exc}") from None

    def fail(path, msg):
        node = _node_at(root, path) if root is not None else None
        line = node.start_mark.line + 1 if node is not None else 1
        raise InputError(f"{name}:{line}: {msg}")

    if not isinstance(doc, dict):
        fail([], "expected a mapping with a 'factors' key")
    unknown = set(doc) - {"factors", "char_lattice", "cochar_lattice", "galois"}
    if unknown:
        fail([sorted(unknown)[0]], f"unknown key {sorted(unknown)[0]!r}")
    factors = doc.get("factors")
    if not isinstance(factors, list) or not factors:
        fail(["factors"], "'factors' must be a nonempty list")
    parsed = []
    for k, f in enumerate(factors):
        if not isinstance(f, dict) or "type" not in f:
            fail(["factors", k], "each factor needs 'type' and 'rank'")
        t, r = str(f["type"]).strip(), f.get("rank")
        if r is None and len(t) > 1 and t[1:].isdigit():
            t, r = t[0], int(t[1:])
        if not isinstance(r, int) or isinstance(r, bool):
            fail(["factors", k], "rank must be an integer")
        try:
            RootSystemSpec(((t, r),))
        except ValueError as exc:
            fail(["factors", k], str(exc))
        parsed.append((t, r))
    lattices = {}
    for key in ("char_lattice", "cochar_lattice"):
        val = doc.get(key)
        if isinstance(val, list):
            try:
                val = tuple(tuple(la.to_fraction(x) for x in row) for row in val)
            except (TypeError, ValueError) as exc:
                fail([key], f"bad lattice matrix: {exc}")
        lattices[key] = val
    if lattices["char_lattice"] is None and lattices["cochar_lattice"] is None:
        lattices["char_lattice"] = "sc"
    try:
        d = build(RootSystemSpec(tuple(parsed), lattices["char_lattice"], lattices["cochar_lattice"]))
    except ValueError as exc:
        bad = "cochar_lattice" if lattices["cochar_lattice"] is not None else "char_lattice"
        fail([bad], str(exc))
    perms = doc.get("galois") or []
    if not isinstance(perms, list):
        fail(["galois"], "'galois' must be a list of permutations")
    gens = []
    for k, p in enumerate(perms):
        try:
            g = GaloisAction.from_labels([p])
            g.validate(d)
        except (TypeError, ValueError) as exc:
            fail(["galois", k], str(exc))
        gens += g.generators
    return d, GaloisAction(tuple(gens))


def load_spec(path: str) -> tuple[RootDatum, GaloisAction]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return load_spec_text(text, path)


def _label_range(text: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*", text)
    if not m:
        raise InputError(f"bad label range {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2) or lo)
    return list(range(lo, hi + 1))


def parse_galois(texts, d: RootDatum) -> GaloisAction:
    """``swap:i..j,k..l`` exchanges two blocks of 1-based labels;
    ``perm:p1,...,pr`` gives the image label of every simple root."""
    gens = []
    for text in texts or ():
        kind, _, body = text.partition(":")
        kind = kind.strip().lower()
        if kind == "swap":
            blocks = [_label_range(b) for b in body.split(",")]
            if len(blocks) != 2 or len(blocks[0]) != len(blocks[1]):
                raise InputError(f"swap needs two blocks of equal length: {text!r}")
            p = list(range(d.rank))
            for a, b in zip(*blocks):
                if not (1 <= a <= d.rank and 1 <= b <= d.rank):
                    raise InputError(f"label out of range in {text!r}")
                p[a - 1], p[b - 1] = b - 1, a - 1
            gens.append(tuple(p))
        elif kind == "perm":
            try:
                gens += GaloisAction.from_labels([[int(x) for x in body.split(",")]]).generators
            except ValueError as exc:
                raise InputError(str(exc)) from None
        else:
            raise InputError(f"unknown Galois syntax {text!r} (use swap:... or perm:...)")
    g = GaloisAction(tuple(gens))
    try:
        return g.validate(d)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _numbers(body: str) -> list[Fraction]:
    body = body.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        return [la.to_fraction(x.strip()) for x in body.split(",") if x.strip()]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad number list {body!r}: {exc}") from None


def parse_vector(text: str, d: RootDatum, side: str = CHARACTER) -> LatticeVector:
    """``fw:[c1,...,cr]`` fundamental coordinates, ``amb:[q1,...,qn]`` ambient
    coordinates, or ``eta:i,j,...`` the sum of the listed fundamental
    (co)weights."""
    kind, sep, body = text.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise InputError(f"vector {text!r} needs a prefix fw:, amb: or eta:")
    if kind == "fw":
        x = _numbers(body)
        if len(x) != d.rank:
            raise InputError(f"expected {d.rank} fundamental coordinates, got {len(x)}")
        return d.from_fw(x, side)
    if kind == "amb":
        q = _numbers(body)
        if len(q) != d.ambient_dim:
            raise InputError(f"expected {d.ambient_dim} ambient coordinates, got {len(q)}")
        return LatticeVector(q, side)
    if kind == "eta":
        labels = [int(c) for c in _numbers(body)]
        if any(not 1 <= a <= d.rank for a in labels):
            raise InputError(f"simple-root label out of range in {text!r}")
        return d.from_fw([labels.count(i + 1) for i in range(d.rank)], side)
    raise InputError(f"unknown vector prefix {kind!r}")


def parse_labels(text: str, d: RootDatum) -> frozenset[int]:
    labels = frozenset(int(c) for c in _numbers(text)) if text.strip() else frozenset()
    if any(not 1 <= a <= d.rank for a in labels):
        raise InputError(f"simple-root label out of range in {text!r}")
    return labels


def datum_from_args(args) -> tuple[RootDatum, GaloisAction]:
    if args.spec and args.type:
        raise InputError("give either a type or --spec, not both")
    if args.spec:
        d, g = load_spec(args.spec)
        if args.galois:
            g = GaloisAction(g.generators + parse_galois(args.galois, d).generators)
        return d, g
    if not args.type:
        raise InputError("a root system type (e.g. C3, B2xB2) or --spec is required")
    try:
        d = build(RootSystemSpec.parse(args.type, args.lattice))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return d, parse_galois(args.galois, d)


# -- rendering helpers ---------------------------------------------------------


def fw_string(x, side: str) -> str:
    """``2·η(α1) + η(α3)`` style rendering of fundamental coordinates."""
    mark = "∨" if side == COCHARACTER else ""
    parts = []
    for i, c in enumerate(x):
        if c == 0:
            continue
        term = f"η(α{i + 1}{mark})"
        if c == 1:
            parts.append(term)
        elif c == -1:
            parts.append(f"-{term}")
        else:
            parts.append(f"{c}·{term}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _vec_data(v: LatticeVector, d: RootDatum) -> dict:
    x = d.fw_coords(v)
    return {"side": v.side, "fw": list(x), "amb": list(v.coords), "eta": fw_string(x, v.side)}


def _ray_data(r: Ray, d: RootDatum) -> dict:
    """A ray is named by the primitive integral multiple of its fundamental
    coordinates; the lattice point is its primitive element of the lattice."""
    x = la.primitive(r.fw_coords(d))
    return {"side": r.side, "fw": list(x), "eta": fw_string(x, r.side),
            "lattice_point": fw_string(r.fw_coords(d), r.side), "amb": list(r.direction.coords)}


def _witness_data(w) -> dict | None:
    if w is None:
        return None
    return {
        "kind": w.kind,
        "vectors": [list(v.coords) for v in w.vectors],
        "values": list(w.values),
        "orbit": w.orbit,
        "simple_root": w.simple_root,
    }


# -- commands ------------------------------------------------------------------


def cmd_describe(d: RootDatum, g: GaloisAction) -> Report:
    facs = []
    lines = [f"datum {d!r}, rank {d.rank}, {len(d.roots)} roots"]
    for k, f in enumerate(d.factors):
        vd = vertex_data(d, k)
        facs.append({
            "name": f.name,
            "labels": list(f.labels),
            "m": list(vd.m),
            "m_vee": list(vd.m_vee),
            "special": sorted(vd.special),
            "cospecial": sorted(vd.cospecial),
        })
        lines.append(f"factor {f.name}: labels {list(f.labels)}  m={list(vd.m)}  m∨={list(vd.m_vee)}")
        lines.append(f"  special {sorted(vd.special)}  cospecial {sorted(vd.cospecial)}")
    lines.append("cartan " + json.dumps([list(r) for r in d.cartan]))
    data = {
        "datum": repr(d),
        "rank": d.rank,
        "roots": len(d.roots),
        "positive_roots": d.positive_root_count(),
        "cartan": [list(r) for r in d.cartan],
        "factors": facs,
        "root_list": [list(r) for r in d.roots],
        "galois": [[i + 1 for i in p] for p in g.generators],
        "char_lattice_fw": [list(r) for r in d.lattice_fw(CHARACTER)],
        "cochar_lattice_fw": [list(r) for r in d.lattice_fw(COCHARACTER)],
    }
    return Report("describe", True, data, lines)


def cmd_check(d, g, v: LatticeVector, test: str, arg=None) -> Report:
    data = {"vector": _vec_data(v, d), "test": test}
    witness = None
    if test == "minuscule":
        verdict = is_minuscule(v, d)
    elif test == "cominuscule":
        verdict = is_cominuscule(v, d)
    elif test == "quasi-constant":
        verdict, witness = is_quasi_constant(v, d, g)
    elif test == "p-close":
        if arg < 2:
            raise InputError("p must be at least 2")
        ratio = orbital_ratio_of(v, d, g)
        verdict = ratio <= arg - 1
        data.update(p=arg, ratio=ratio)
    elif test == "ample":
        verdict, witness = is_L_ample(v, LeviType(arg), d)
        data["levi"] = sorted(arg)
    else:
        raise InputError(f"unknown test {test!r}")
    sets = orbit_value_sets(v, d, g)
    data["orbit_values"] = [sorted(s) for s in sets]
    data["verdict"] = bool(verdict)
    data["witness"] = _witness_data(witness)
    lines = [f"vector {data['vector']['eta']}  ({test})", f"verdict: {bool(verdict)}"]
    lines.append("nonzero |pairings| per orbit: " + "; ".join(
        "{" + ", ".join(str(x) for x in sorted(s)) + "}" for s in sets))
    if witness is not None:
        lines.append(f"witness: {witness.kind} values {[str(x) for x in witness.values]}")
    return Report("check", bool(verdict), data, lines)


def cmd_classify(d, g, v: LatticeVector) -> Report:
    res = classify_general(v, d, g)
    kinds = [{"factor": k.factor, "kind": k.kind, "vertex": k.vertex, "coefficient": k.coefficient}
             for k in res.kinds]
    data = {
        "vector": _vec_data(v, d),
        "verdict": res.verdict,
        "kinds": kinds,
        "multiplier": res.multiplier,
        "dominant": _vec_data(res.dominant, d) if res.dominant is not None else None,
        "word": list(res.word),
        "witness": _witness_data(res.witness),
    }
    lines = [f"verdict: {res.verdict}"]
    if res.kinds:
        lines.append("factors: " + ", ".join(
            TRIVIAL if k.kind == TRIVIAL else f"{k.kind} α{k.vertex} × {k.coefficient}" for k in res.kinds))
    if res.dominant is not None:
        lines.append(f"dominant representative: {data['dominant']['eta']}")
    if res.witness is not None:
        lines.append(f"witness values: {[str(x) for x in res.witness.values]}")
    return Report("classify", res.verdict == QUASI_CONSTANT, data, lines)


def cmd_dualize(d, g, v: LatticeVector) -> Report:
    try:
        r = Ray.through(v, d)
        out = dualize_ray(r, d, g) if v.side == COCHARACTER else dualize_ray_inverse(r, d, g)
    except ValueError as exc:
        data = {"input": _vec_data(v, d), "error": str(exc)}
        return Report("dualize", False, data, [f"cannot dualize: {exc}"])
    cochar = r if v.side == COCHARACTER else out
    levi = centralizer_levi(cochar, d)
    data = {
        "input": _ray_data(r, d),
        "dual": _ray_data(out, d),
        "levi": sorted(levi.labels),
    }
    lines = [
        f"ray {data['input']['eta']}  ->  ray {data['dual']['eta']}",
        f"primitive lattice points: {data['input']['lattice_point']}  ->  {data['dual']['lattice_point']}",
        f"Levi simple roots: {sorted(levi.labels)}",
    ]
    return Report("dualize", True, data, lines)


def _bound_data(r, d: RootDatum) -> dict:
    return {
        "type": r.type_name,
        "levi": sorted(r.levi.labels),
        "removed": list(r.removed),
        "eta": fw_string(d.fw_coords(r.eta), CHARACTER),
        "ratio": r.ratio,
        "min_p_condition": r.min_p_condition,
        "C": r.C,
        "shortcut_value": r.shortcut_value,
        "shortcut_case": r.shortcut_case,
        "sufficiency_only": r.sufficiency_only,
    }


def cmd_bounds(d, g, levis: list[LeviType]) -> Report:
    rows = []
    lines = []
    for levi in levis:
        r = bound_for_levi(d, levi, g)
        rows.append(_bound_data(r, d))
        lines.append(f"removed {list(r.removed)}: R = {r.ratio}, C = {r.C}, "
                     f"p >= {r.min_p_condition} suffices ({r.shortcut_case} pairing {r.shortcut_value})")
    lines.append("C is a sufficient bound only; smaller primes are not ruled out.")
    return Report("bounds", True, {"datum": repr(d), "bounds": rows}, lines)


# -- the bounds table ----------------------------------------------------------

_GENERIC = ("A", "B", "C", "D")


def _vertex_class(letter: str, n: int, i: int) -> str:
    if i == 1:
        return "first"
    if i == n:
        return "last"
    if letter == "D" and i == n - 1:
        return "penultimate"
    return "middle"


def _class_text(letter: str, classes: set[str]) -> str:
    if {"first", "middle", "last"} <= classes or (classes >= {"first", "last"} and letter == "A"):
        return "α_i (1 ≤ i ≤ n)"
    parts = []
    if "first" in classes:
        parts.append("α_1")
    if "penultimate" in classes:
        parts.append("α_{n-1}")
    if "last" in classes:
        parts.append("α_n")
    if "middle" in classes:
        parts.append("α_i (2 ≤ i ≤ n-2)" if letter == "D" else "α_i (2 ≤ i ≤ n-1)")
    return ", ".join(parts)


def table_rows(max_rank: int = 8) -> list[dict]:
    """Maximal-Levi bounds grouped by C: one row per (type, C) with the
    classical series collapsed over their ranks."""
    reports = full_table(max_rank)
    generic: dict[str, dict[str, set[int]]] = {}
    ranks: dict[str, list[int]] = {}
    exceptional: dict[str, dict[int, list[int]]] = {}
    for r in reports:
        letter, n = r.type_name[0], int(r.type_name[1:])
        (a,) = r.removed
        if letter in _GENERIC:
            cls = _vertex_class(letter, n, a)
            generic.setdefault(letter, {}).setdefault(cls, set()).add(r.C)
            if n not in ranks.setdefault(letter, []):
                ranks[letter].append(n)
        else:
            exceptional.setdefault(r.type_name, {}).setdefault(r.C, []).append(a)
    rows = []
    for letter in _GENERIC:
        if letter not in generic:
            continue
        by_c: dict[int, set[str]] = {}
        for cls, cs in generic[letter].items():
            if len(cs) != 1:
                raise RuntimeError(f"type {letter}: vertex class {cls} has bounds {sorted(cs)} across ranks")
            by_c.setdefault(next(iter(cs)), set()).add(cls)
        for c in sorted(by_c):
            rows.append({"type": f"{letter}_n", "vertices": _class_text(letter, by_c[c]), "C": c,
                         "ranks": sorted(ranks[letter])})
    for name in (t for t in table_types(max_rank) if t[0] not in _GENERIC):
        for c in sorted(exceptional[name]):
            verts = ", ".join(f"α_{a}" for a in sorted(exceptional[name][c]))
            rows.append({"type": f"{name[0]}_{name[1:]}", "vertices": verts, "C": c, "ranks": [int(name[1:])]})
    return rows


def render_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, ensure_ascii=False, sort_keys=True) + "\n"
    if fmt == "tsv":
        out = ["type\tvertices\tC"] + [f"{r['type']}\t{r['vertices']}\t{r['C']}" for r in rows]
        return "\n".join(out) + "\n"
    if fmt == "markdown":
        out = ["| Type | Simple root α | C(Δ, Δ_L) |", "|---|---|---|"]
        out += [f"| {r['type']} | {r['vertices']} | {r['C']} |" for r in rows]
        return "\n".join(out) + "\n"
    raise InputError(f"unknown table format {fmt!r}")


def cmd_verify(d, g, coeff_bound: int | None, duality: bool, chain: bool) -> Report:
    data: dict = {"datum": repr(d)}
    lines = []
    ok = True
    if coeff_bound is not None:
        for side in (CHARACTER, COCHARACTER):
            rep = verify_classification(d, g, coeff_bound, side)
            data[f"box_{side}"] = {
                "scanned": rep.scanned,
                "quasi_constant_nonzero": rep.quasi_constant - 1,
                "mismatches": [list(c) for c in rep.mismatches],
                "dominant_rays": sorted(list(x) for x in rep.dominant_rays),
            }
            ok &= rep.ok
            lines.append(f"box {side} bound {coeff_bound}: {rep.scanned} vectors, "
                         f"{rep.quasi_constant - 1} nonzero quasi-constant, {len(rep.mismatches)} mismatches")
    if duality:
        rep = verify_duality(d, g)
        fails = [[list(r.direction.coords), name] for r, name in rep.failures]
        data["duality"] = {"rays": len(rep.records), "failures": fails}
        ok &= rep.ok
        lines.append(f"duality: {len(rep.records)} records, {len(fails)} failures")
    if chain:
        chains = []
        for k, f in enumerate(d.factors):
            labels = coroot_chain(d, k)
            good = _chain_ok(d, k, labels)
            chains.append({"factor": f.name, "chain": list(labels), "ok": good})
            ok &= good
            lines.append(f"coroot chain {f.name}: {list(labels)} {'ok' if good else 'FAILED'}")
        data["chains"] = chains
    return Report("verify", ok, data, lines)


def _chain_ok(d: RootDatum, factor: int, labels) -> bool:
    coroots = {tuple(c) for c in d.coroots}
    for k in range(1, len(labels) + 1):
        if coroot_sum(d, labels[:k]).coords not in coroots:
            return False
    top = d.highest_coroot(factor)
    return tuple(labels.count(i + 1) for i in range(d.rank)) == tuple(top)


# -- argument parsing ----------------------------------------------------------


def _datum_args(p):
    p.add_argument("type", nargs="?", help="root system shorthand such as C3 or B2xB2")
    p.add_argument("--spec", help="YAML/JSON datum description")
    p.add_argument("--lattice", default="sc", help="sc or adjoint (with a type shorthand)")
    p.add_argument("--galois", action="append", help="swap:i..j,k..l or perm:p1,...,pr (repeatable)")
    p.add_argument("--format", choices=("text", "json"), default="text")


def _side(text: str) -> str:
    try:
        return SIDE_NAMES[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"side must be char or cochar, not {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qcroots", description="Quasi-constant (co)characters of root data.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="roots, Cartan matrix, multiplicities")
    _datum_args(p)

    p = sub.add_parser("check", help="test a predicate on a vector")
    _datum_args(p)
    p.add_argument("vector", help="fw:[...], amb:[...] or eta:i,j")
    p.add_argument("--side", type=_side, default=CHARACTER)
    p.add_argument("--integral", action="store_true", help="require the vector to lie in the lattice")
    test = p.add_mutually_exclusive_group(required=True)
    test.add_argument("--minuscule", action="store_true")
    test.add_argument("--cominuscule", action="store_true")
    test.add_argument("--quasi-constant", action="store_true")
    test.add_argument("--p-close", type=int, metavar="P")
    test.add_argument("--ample", metavar="LEVI", help="comma-separated simple roots of the Levi")

    p = sub.add_parser("classify", help="classify a vector")
    _datum_args(p)
    p.add_argument("vector")
    p.add_argument("--side", type=_side, default=CHARACTER)

    p = sub.add_parser("dualize", help="dual ray of a dominant quasi-constant ray")
    _datum_args(p)
    p.add_argument("vector")
    p.add_argument("--side", type=_side, default=COCHARACTER)

    p = sub.add_parser("bounds", help="prime bounds for Levi types")
    _datum_args(p)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--levi", help="simple roots of the Levi")
    which.add_argument("--complement", help="simple roots outside the Levi")
    which.add_argument("--all-maximal", action="store_true")

    p = sub.add_parser("table", help="bounds table for maximal Levis")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--format", choices=("markdown", "tsv", "json"), default="markdown")

    p = sub.add_parser("verify", help="exhaustive verification harnesses")
    _datum_args(p)
    p.add_argument("--coeff-bound", type=int)
    p.add_argument("--duality", action="store_true")
    p.add_argument("--chain", action="store_true")
    return ap


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Run a command; returns the exit code and the text to print."""
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "table":
        if args.max_rank < 2:
            raise InputError("--max-rank must be at least 2")
        return EXIT_OK, render_table(table_rows(args.max_rank), args.format)
    d, g = datum_from_args(args)
    if args.command == "describe":
        report = cmd_describe(d, g)
    elif args.command == "check":
        v = parse_vector(args.vector, d, args.side)
        if args.integral and not d.in_lattice(v):
            raise InputError(f"{args.vector} is not in the {args.side} lattice")
        if args.p_close is not None:
            report = cmd_check(d, g, v, "p-close", args.p_close)
        elif args.ample is not None:
            report = cmd_check(d, g, v, "ample", parse_labels(args.ample, d))
        else:
            test = next(t for t in ("minuscule", "cominuscule", "quasi_constant") if getattr(args, t))
            report = cmd_check(d, g, v, test.replace("_", "-"))
    elif args.command == "classify":
        report = cmd_classify(d, g, parse_vector(args.vector, d, args.side))
    elif args.command == "dualize":
        v = parse_vector(args.vector, d, args.side)
        if v.is_zero():
            raise InputError("the zero vector spans no ray")
        report = cmd_dualize(d, g, v)
    elif args.command == "bounds":
        if not d.is_irreducible:
            raise InputError("bounds need an irreducible root system")
        if args.all_maximal:
            levis = [LeviType.complement_of(d, [a]) for a in range(1, d.rank + 1)]
        elif args.levi is not None:
            levis = [LeviType(parse_labels(args.levi, d))]
        else:
            levis = [LeviType.complement_of(d, parse_labels(args.complement, d))]
        if any(not lv.complement(d) for lv in levis):
            raise InputError("the Levi must be a proper subset of the simple roots")
        report = cmd_bounds(d, g, levis)
    else:
        if args.coeff_bound is None and not (args.duality or args.chain):
            args.duality = args.chain = True
        if args.coeff_bound is not None and args.coeff_bound < 1:
            raise InputError("--coeff-bound must be at least 1")
        report = cmd_verify(d, g, args.coeff_bound, args.duality, args.chain)
    text = report.to_json() + "\n" if args.format == "json" else report.render() + "\n"
    return report.exit_code, text


def main(argv: list[str] | None = None) -> int:
    try:
        code, text = run(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
