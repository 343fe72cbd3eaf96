"""
JSON formats for complexes, instances and built structures.

Rationals are strings "p/q" (or "p"), degree keys are decimal strings and a
missing degree has dimension 0. Loading is strict: unknown keys and
malformed values raise SchemaError carrying the JSON path.
"""

import json
from fractions import Fraction

from .complex import ChainComplex
from .core import Instance
from .exactlin import Matrix, fstr, parse_rational
from .multilinear import ShLieStructure, SkewGradedMap


class SchemaError(ValueError):
    def __init__(self, path, message):
        super().__init__("%s: %s" % (path, message))
        self.path = path


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _expect(cond, path, message):
    if not cond:
        raise SchemaError(path, message)


def _keys(data, allowed, path, required=()):
    _expect(isinstance(data, dict), path, "expected an object")
    for k in data:
        if k not in allowed:
            raise SchemaError("%s.%s" % (path, k), "unknown key %r" % k)
    for k in required:
        _expect(k in data, path, "missing key %r" % k)


def _rational(x, path) -> Fraction:
    try:
        return parse_rational(x)
    except ValueError as e:
        raise SchemaError(path, str(e))


def _degree_key(k, path) -> int:
    _expect(isinstance(k, str) and k.isdigit(), "%s.%s" % (path, k),
            "degree keys must be decimal strings")
    return int(k)


def _matrix(data, rows, cols, path) -> Matrix:
    _expect(isinstance(data, list), path, "expected a list of rows")
    if rows == 0:
        _expect(data == [], path, "expected [] for a map into a zero space")
        return Matrix.zero(0, cols)
    _expect(len(data) == rows, path, "expected %d rows, got %d" % (rows, len(data)))
    entries = []
    for i, row in enumerate(data):
        _expect(isinstance(row, list) and len(row) == cols, "%s[%d]" % (path, i),
                "expected a row of length %d" % cols)
        entries.append([_rational(x, "%s[%d][%d]" % (path, i, j)) for j, x in enumerate(row)])
    return Matrix(rows, cols, entries)


def _matrix_json(m: Matrix):
    if m.rows == 0:
        return []
    return m.to_json()


def complex_to_json(cc: ChainComplex):
    return {
        "dims": {str(n): d for n, d in enumerate(cc.dims)},
        "diff": {str(n): _matrix_json(m) for n, m in sorted(cc.diff.items())},
    }


def complex_from_json(data, path="$") -> ChainComplex:
    _keys(data, ("dims", "diff"), path, required=("dims",))
    dims_raw = data["dims"]
    _expect(isinstance(dims_raw, dict), path + ".dims", "expected an object")
    dims = {}
    for k, v in dims_raw.items():
        n = _degree_key(k, path + ".dims")
        _expect(isinstance(v, int) and not isinstance(v, bool) and v >= 0,
                "%s.dims.%s" % (path, k), "dimension must be a non-negative integer")
        dims[n] = v
    _expect(dims, path + ".dims", "no degrees given")
    top = max(dims)
    dlist = [dims.get(n, 0) for n in range(top + 1)]
    diff = {}
    for k, m in (data.get("diff") or {}).items():
        n = _degree_key(k, path + ".diff")
        p = "%s.diff.%s" % (path, k)
        _expect(1 <= n <= top, p, "differential outside degrees 1..%d" % top)
        diff[n] = _matrix(m, dlist[n - 1], dlist[n], p)
    return ChainComplex(dlist, diff)


def instance_to_json(inst: Instance):
    out = complex_to_json(inst.complex)
    out["l2tilde"] = [
        {"i": a, "j": b, "value": [fstr(x) for x in v]}
        for (a, b), v in sorted(inst.table().items())
    ]
    return out


def instance_from_json(data, path="$") -> Instance:
    _keys(data, ("dims", "diff", "l2tilde"), path, required=("dims",))
    cc = complex_from_json({k: v for k, v in data.items() if k != "l2tilde"}, path)
    table = {}
    entries = data.get("l2tilde") or []
    _expect(isinstance(entries, list), path + ".l2tilde", "expected a list")
    n0 = cc.dims[0]
    for e, item in enumerate(entries):
        p = "%s.l2tilde[%d]" % (path, e)
        _keys(item, ("i", "j", "value"), p, required=("i", "j", "value"))
        a, b = item["i"], item["j"]
        _expect(isinstance(a, int) and isinstance(b, int) and 0 <= a < b < n0, p,
                "need 0 <= i < j < %d" % n0)
        _expect((a, b) not in table, p, "duplicate entry for (%d, %d)" % (a, b))
        v = item["value"]
        _expect(isinstance(v, list) and len(v) == n0, p + ".value",
                "expected %d coordinates" % n0)
        table[(a, b)] = tuple(_rational(x, "%s.value[%d]" % (p, k)) for k, x in enumerate(v))
    return Instance.from_table(cc, table)


def save_instance(inst: Instance) -> bytes:
    return dumps(instance_to_json(inst)).encode()


def load_instance(raw) -> Instance:
    if isinstance(raw, bytes):
        raw = raw.decode()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise SchemaError("$", "invalid JSON: %s" % e)
    return instance_from_json(data)


def structure_to_json(s: ShLieStructure):
    return {
        "complex": complex_to_json(s.complex),
        "maps": {"arity_%d" % k: m.to_json() for k, m in sorted(s.maps.items())},
    }


def structure_from_json(data, path="$") -> ShLieStructure:
    _keys(data, ("complex", "maps"), path, required=("complex", "maps"))
    cc = complex_from_json(data["complex"], path + ".complex")
    maps = {}
    raw = data["maps"]
    _expect(isinstance(raw, dict), path + ".maps", "expected an object")
    for name, by_md in raw.items():
        p = "%s.maps.%s" % (path, name)
        _expect(name.startswith("arity_") and name[6:].isdigit(), p, "unknown key %r" % name)
        k = int(name[6:])
        _expect(k >= 1, p, "arity must be >= 1")
        _expect(isinstance(by_md, dict), p, "expected an object")
        values = {}
        for md_key, items in by_md.items():
            q = "%s.%s" % (p, md_key)
            try:
                md = tuple(int(x) for x in md_key.split(","))
            except ValueError:
                raise SchemaError(q, "multidegree must be comma-separated integers")
            _expect(len(md) == k and all(0 <= d <= cc.max_degree for d in md), q,
                    "bad multidegree for arity %d" % k)
            _expect(list(md) == sorted(md), q, "multidegree must be non-decreasing")
            target = sum(md) + k - 2
            tdim = cc.dim(target)
            for e, item in enumerate(items):
                r = "%s[%d]" % (q, e)
                _keys(item, ("args", "value"), r, required=("args", "value"))
                args = item["args"]
                _expect(isinstance(args, list) and len(args) == k, r + ".args",
                        "expected %d indices" % k)
                for d, i in zip(md, args):
                    _expect(isinstance(i, int) and 0 <= i < cc.dims[d], r + ".args",
                            "index %r out of range in degree %d" % (i, d))
                v = item["value"]
                _expect(isinstance(v, list) and len(v) == tdim, r + ".value",
                        "expected %d coordinates" % tdim)
                key = tuple(zip(md, args))
                values[key] = tuple(_rational(x, "%s.value[%d]" % (r, j)) for j, x in enumerate(v))
        try:
            maps[k] = SkewGradedMap(k, cc.dims, values)
        except ValueError as e:
            raise SchemaError(p, str(e))
    try:
        return ShLieStructure(cc, maps)
    except ValueError as e:
        raise SchemaError(path + ".maps", str(e))


def save_structure(s: ShLieStructure) -> bytes:
    return dumps(structure_to_json(s)).encode()


def load_structure(raw) -> ShLieStructure:
    if isinstance(raw, bytes):
        raw = raw.decode()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise SchemaError("$", "invalid JSON: %s" % e)
    return structure_from_json(data)
