"""JSON input and output.

Structure files look like ``{"n": 2, "e": [1, 0], "d": [[[1,0],[0,1]], ...]}``
with ``d[g][h][k]`` the multiplicity of k in g*h.  Algebra files carry
``{"dim", "mult", "unit"}`` where ``mult[i][j]`` is the coordinate vector of
e_i e_j; maps are matrices (list of rows, column j = image of basis vector j).
Rationals are ints or "p/q" strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import SCALARS, Algebra, Homomorphism, tensor
from .exactlin import RationalMatrix, decimal_str
from .hypergroupoid import StructureTensor


class InputError(ValueError):
    """Malformed input, with a location when one is known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, path: str = "",
                 source: str = ""):
        self.line, self.column, self.path, self.source = line, column, path, source
        where = [source] if source else []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if path:
            where.append(path)
        super().__init__(f"{' '.join(where)}: {message}" if where else message)


# ---------------------------------------------------------------------------
# locating values inside the source text


def _skip_ws(text, i):
    while i < len(text) and text[i] in " \t\r\n":
        i += 1
    return i


def _scan(text, i, path, out, decoder):
    i = _skip_ws(text, i)
    out[path] = i
    c = text[i]
    if c == "[":
        i = _skip_ws(text, i + 1)
        k = 0
        if text[i] == "]":
            return i + 1
        while True:
            i = _scan(text, i, path + (k,), out, decoder)
            i = _skip_ws(text, i)
            if text[i] == "]":
                return i + 1
            i += 1  # comma
            k += 1
    if c == "{":
        i = _skip_ws(text, i + 1)
        if text[i] == "}":
            return i + 1
        while True:
            key, i = decoder.raw_decode(text, _skip_ws(text, i))
            i = _skip_ws(text, i) + 1  # colon
            i = _scan(text, i, path + (key,), out, decoder)
            i = _skip_ws(text, i)
            if text[i] == "}":
                return i + 1
            i = _skip_ws(text, i + 1)
    _, i = decoder.raw_decode(text, i)
    return i


class Document:
    """Parsed JSON plus the offsets of every value, for error messages."""

    def __init__(self, text: str, source: str = "<input>"):
        self.text = text
        self.source = source
        self._label = "" if source == "<input>" else source
        try:
            self.data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(exc.msg, exc.lineno, exc.colno, source=self._label) from None
        self.offsets: dict = {}
        _scan(text, 0, (), self.offsets, json.JSONDecoder())

    @classmethod
    def from_value(cls, value) -> "Document":
        return cls(json.dumps(value))

    def error(self, path: tuple, message: str) -> InputError:
        off = self.offsets.get(path)
        label = "".join(f"[{p}]" if isinstance(p, int) else (f".{p}" if i else p) for i, p in enumerate(path))
        if off is None:
            return InputError(message, path=label, source=self._label)
        line = self.text.count("\n", 0, off) + 1
        col = off - (self.text.rfind("\n", 0, off) + 1) + 1
        return InputError(message, line, col, label, self._label)


def read_document(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return Document(text, path)


def _get(doc, obj, path, key):
    if not isinstance(obj, dict):
        raise doc.error(path, "expected an object")
    if key not in obj:
        raise doc.error(path, f"missing key {key!r}")
    return obj[key]


def _int(doc, x, path) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise doc.error(path, f"expected an integer, got {json.dumps(x)}")
    return x


def _list(doc, x, path, length=None) -> list:
    if not isinstance(x, list):
        raise doc.error(path, "expected an array")
    if length is not None and len(x) != length:
        raise doc.error(path, f"expected {length} entries, got {len(x)}")
    return x


# ---------------------------------------------------------------------------
# structure tensors


def parse_structure(doc: Document, path: tuple = ()) -> StructureTensor:
    obj = doc.data
    for p in path:
        obj = obj[p]
    n = _int(doc, _get(doc, obj, path, "n"), path + ("n",))
    if n < 1:
        raise doc.error(path + ("n",), "n must be positive")
    e = _list(doc, _get(doc, obj, path, "e"), path + ("e",), n)
    ev = []
    for g, x in enumerate(e):
        v = _int(doc, x, path + ("e", g))
        if v < 0:
            raise doc.error(path + ("e", g), f"negative entry {v}")
        ev.append(v)
    d = _list(doc, _get(doc, obj, path, "d"), path + ("d",), n)
    dv = []
    for g, plane in enumerate(d):
        plane = _list(doc, plane, path + ("d", g), n)
        rows = []
        for h, row in enumerate(plane):
            row = _list(doc, row, path + ("d", g, h), n)
            vals = []
            for k, x in enumerate(row):
                v = _int(doc, x, path + ("d", g, h, k))
                if v < 0:
                    raise doc.error(path + ("d", g, h, k), f"negative entry {v}")
                vals.append(v)
            rows.append(vals)
        dv.append(rows)
    return StructureTensor(n, dv, ev)


def load_structure(path: str) -> StructureTensor:
    return parse_structure(read_document(path))


def structure_to_json(t: StructureTensor) -> dict:
    return {"n": t.n, "e": list(t.e), "d": [[list(r) for r in p] for p in t.d]}


def dump_structure(t: StructureTensor) -> str:
    return json.dumps(structure_to_json(t))


# ---------------------------------------------------------------------------
# rationals, algebras and maps


def rat(x) -> str | int:
    """JSON form of a rational: an int when integral, else "p/q"."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _rational(doc, x, path) -> Fraction:
    if isinstance(x, bool):
        raise doc.error(path, "expected a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise doc.error(path, f"expected an int or a \"p/q\" string, got {json.dumps(x)}")


def _vector(doc, x, path, length):
    return [_rational(doc, v, path + (i,)) for i, v in enumerate(_list(doc, x, path, length))]


def parse_algebra(doc: Document, path: tuple = ()) -> Algebra:
    obj = doc.data
    for p in path:
        obj = obj[p]
    dim = _int(doc, _get(doc, obj, path, "dim"), path + ("dim",))
    if dim < 1:
        raise doc.error(path + ("dim",), "dim must be positive")
    mult = _list(doc, _get(doc, obj, path, "mult"), path + ("mult",), dim)
    table = []
    for i, row in enumerate(mult):
        row = _list(doc, row, path + ("mult", i), dim)
        table.append([{k: c for k, c in enumerate(_vector(doc, v, path + ("mult", i, j), dim)) if c}
                      for j, v in enumerate(row)])
    unit = _vector(doc, _get(doc, obj, path, "unit"), path + ("unit",), dim)
    name = obj.get("name")
    A = Algebra(dim, table, unit, name=name if isinstance(name, str) else None)
    bad = A.check()
    if bad is not None:
        raise doc.error(path, f"not a unital associative algebra ({bad[0]} fails at {list(bad[1])})")
    return A


def algebra_to_json(A: Algebra) -> dict:
    return {
        "dim": A.dim,
        "mult": [[[rat(A.mult[i][j].get(k, 0)) for k in range(A.dim)] for j in range(A.dim)] for i in range(A.dim)],
        "unit": [rat(x) for x in A.unit],
    }


def parse_matrix(doc: Document, rows: int, cols: int, path: tuple = ()) -> RationalMatrix:
    """A matrix given as a list of rows, or as {"matrix": rows}."""
    obj = doc.data
    for p in path:
        obj = obj[p]
    if isinstance(obj, dict):
        path = path + ("matrix",)
        obj = _get(doc, obj, path[:-1], "matrix")
    data = _list(doc, obj, path, rows)
    return RationalMatrix.from_rows([_vector(doc, r, path + (i,), cols) for i, r in enumerate(data)], cols)


def matrix_to_json(m: RationalMatrix) -> list:
    return [[rat(x) for x in row] for row in m.tolist()]


def parse_hopf_maps(A: Algebra, delta: Document, eps: Document, antipode: Document | None):
    """Coproduct, counit and (optionally) antipode homomorphisms from files."""
    n = A.dim
    D = Homomorphism(A, tensor(A, A), parse_matrix(delta, n * n, n))
    E = Homomorphism(A, SCALARS, parse_matrix(eps, 1, n))
    S = None
    if antipode is not None:
        S = Homomorphism(A.opposite(), A, parse_matrix(antipode, n, n))
    return D, E, S


def parse_quasi(doc: Document, A: Algebra) -> dict:
    """{"phi", "phi_inv", "alpha", "beta"} as coordinate vectors, and an
    optional "antipode" matrix."""
    n = A.dim
    out = {
        "phi": tuple(_vector(doc, _get(doc, doc.data, (), "phi"), ("phi",), n ** 3)),
        "phi_inv": tuple(_vector(doc, _get(doc, doc.data, (), "phi_inv"), ("phi_inv",), n ** 3)),
        "alpha": tuple(_vector(doc, _get(doc, doc.data, (), "alpha"), ("alpha",), n)),
        "beta": tuple(_vector(doc, _get(doc, doc.data, (), "beta"), ("beta",), n)),
    }
    if isinstance(doc.data, dict) and "antipode" in doc.data:
        out["antipode"] = parse_matrix(doc, n, n, ("antipode",))
    return out


# ---------------------------------------------------------------------------
# reports


def interval_json(lo, hi, integer_value=None) -> dict:
    return {
        "lo": rat(lo),
        "hi": rat(hi),
        # rounded outward so the decimal pair still encloses the value
        "lo_decimal": decimal_str(lo, rounding="down"),
        "hi_decimal": decimal_str(hi, rounding="up"),
        "integer": integer_value,
    }


def dumps_report(report) -> str:
    """Deterministic JSON text: sorted keys, fixed separators."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
