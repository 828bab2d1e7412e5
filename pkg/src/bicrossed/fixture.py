"""JSON fixtures: schema checks, expression parsing and the assembled context.

Elements are written as polynomial strings with exact rationals, e.g.
``"-2*f + 1/2*f^2"``.  Tensor legs are separated by ``|`` (``"f|1 + 1|f"``),
negative exponents are allowed on invertible generators (``"e^-1"``).
"""

import json
import re
from dataclasses import dataclass, field
from functools import cached_property

from .exactlin import Fraction, Vec, parse_rational
from .hopf import Bicrossed, HopfPresentation, LieHopf
from .liealg import LieAlgebra, LieModule
from .matched import decompose

SCHEMA_VERSION = 1

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_']*)|(\^-?\d+)|(.))")


class FixtureError(ValueError):
    """Schema or parse error; ``path`` locates the offending field."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path


def parse_terms(text, path="expr"):
    """Parse a polynomial string into ``[(coef, [[(name, power), …] per leg])]``."""
    if not isinstance(text, str):
        raise FixtureError(path, f"expected a string, got {type(text).__name__}")
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos:
            break
        num, name, power, other = m.groups()
        if num:
            tokens.append(("num", _rational(num, path)))
        elif name:
            tokens.append(("name", name))
        elif power:
            tokens.append(("pow", int(power[1:])))
        elif other and other.strip():
            if other not in "+-*|":
                raise FixtureError(path, f"unexpected character {other!r} in {text!r}")
            tokens.append((other, None))
        pos = m.end()
    if not tokens:
        raise FixtureError(path, f"empty expression {text!r}")
    terms = []
    i = 0
    sign = 1
    while i < len(tokens):
        while i < len(tokens) and tokens[i][0] in "+-":
            sign *= -1 if tokens[i][0] == "-" else 1
            i += 1
        coef = Fraction(sign)
        legs = [[]]
        expect_factor = True
        while i < len(tokens) and tokens[i][0] not in "+-":
            kind, val = tokens[i]
            if kind == "num":
                if not expect_factor:
                    raise FixtureError(path, f"missing operator in {text!r}")
                coef *= val
                expect_factor = False
            elif kind == "name":
                if not expect_factor:
                    raise FixtureError(path, f"missing operator in {text!r}")
                p = 1
                if i + 1 < len(tokens) and tokens[i + 1][0] == "pow":
                    p = tokens[i + 1][1]
                    i += 1
                legs[-1].append((val, p))
                expect_factor = False
            elif kind == "*":
                expect_factor = True
            elif kind == "|":
                legs.append([])
                expect_factor = True
            else:
                raise FixtureError(path, f"misplaced exponent in {text!r}")
            i += 1
        if expect_factor:
            raise FixtureError(path, f"dangling operator in {text!r}")
        terms.append((coef, legs))
        sign = 1
    return terms


def parse_commutative(text, names, legs=1, path="expr"):
    """Element of a commutative algebra on ``names`` (``1`` is the unit); keys are exponent tuples."""
    index = {n: k for k, n in enumerate(names)}
    out = Vec()
    for coef, parts in parse_terms(text, path):
        if len(parts) != legs:
            raise FixtureError(path, f"expected {legs} tensor legs in {text!r}")
        key = []
        for part in parts:
            e = [0] * len(names)
            for name, p in part:
                if name not in index:
                    raise FixtureError(path, f"unknown generator {name!r}")
                e[index[name]] += p
            key.append(tuple(e))
        out.add_term(key[0] if legs == 1 else tuple(key), coef)
    return out


def parse_linear(text, names, path="expr"):
    """Linear combination of basis names; keys are indices."""
    index = {n: k for k, n in enumerate(names)}
    out = Vec()
    for coef, parts in parse_terms(text, path):
        if len(parts) != 1 or len(parts[0]) != 1 or parts[0][0][1] != 1 or parts[0][0][0] not in index:
            raise FixtureError(path, f"expected a linear combination of {names} in {text!r}")
        out.add_term(index[parts[0][0][0]], coef)
    return out


def parse_word_sum(text, U, names, path="expr"):
    """Element of U(g) written with words in the generators (any order)."""
    index = {n: k for k, n in enumerate(names)}
    out = Vec()
    for coef, parts in parse_terms(text, path):
        if len(parts) != 1:
            raise FixtureError(path, f"no tensor legs allowed in {text!r}")
        word = []
        for name, p in parts[0]:
            if name not in index:
                raise FixtureError(path, f"unknown generator {name!r}")
            if p < 0:
                raise FixtureError(path, f"negative power of {name!r}")
            word.extend([index[name]] * p)
        out.iadd(U.from_word(tuple(word)), coef)
    return out


def _rational(value, path):
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise FixtureError(path, str(exc)) from exc


def _need(obj, key, kind, path):
    if not isinstance(obj, dict):
        raise FixtureError(path, "expected an object")
    if key not in obj:
        raise FixtureError(f"{path}.{key}", "missing field")
    val = obj[key]
    if not isinstance(val, kind):
        raise FixtureError(f"{path}.{key}", f"expected {kind.__name__}")
    return val


def _names(lst, path):
    if not all(isinstance(x, str) for x in lst) or len(set(lst)) != len(lst):
        raise FixtureError(path, "expected distinct names")
    return lst


@dataclass
class ModuleDatum:
    name: str
    kind: str
    raw: dict


@dataclass
class Fixture:
    name: str
    basis: list
    brackets: dict
    g1: list
    g2: list
    generators: list
    action: dict
    coaction: dict
    modules: list
    levi: list
    pairing: dict
    matched_overrides: dict
    mutations: dict
    expect: dict = field(default_factory=dict)
    description: str = ""

    # assembled objects
    @cached_property
    def lie(self):
        st = {}
        for (i, j), v in self.brackets.items():
            st[(i, j)] = dict(v.items())
        return LieAlgebra.from_brackets(self.basis, st)

    @cached_property
    def mp(self):
        idx = {n: k for k, n in enumerate(self.basis)}
        mp = decompose(self.lie, [idx[n] for n in self.g1], [idx[n] for n in self.g2])
        for side, table in (("left", mp.P), ("right", mp.Q)):
            for (a, i), v in self.matched_overrides.get(side, {}).items():
                table[(a, i)] = v
        return mp

    @cached_property
    def F(self):
        gens = self.generators
        names = [g["name"] for g in gens]
        return HopfPresentation(
            names,
            [g["invertible"] for g in gens],
            [g["counit"] for g in gens],
            [g["coproduct"] for g in gens],
            [g["antipode"] for g in gens],
        )

    @cached_property
    def lh(self):
        m = len(self.g1)
        F = self.F
        action = [[self.action.get((i, k), Vec()) for k in range(F.n)] for i in range(m)]
        coef = [[self.coaction.get((i, j), Vec()) for j in range(m)] for i in range(m)]
        return LieHopf(self.mp.g1, F, action, coef)

    @cached_property
    def H(self):
        return Bicrossed(self.lh)

    @cached_property
    def h(self):
        return [self.g2.index(n) for n in self.levi]

    def pairing_overrides(self):
        out = {}
        for gen, rule in self.pairing.items():
            if "character" in rule:
                out[gen] = {"character": [rule["character"].get(n, Fraction(0)) for n in self.g2]}
            else:
                i, j = rule["coefficient"]
                out[gen] = {"coefficient": [self.g1.index(i), self.g1.index(j)], "scale": rule.get("scale", 1)}
        return out

    @cached_property
    def pairing_context(self):
        from .vanest import Pairing

        return Pairing(self.mp, self.lh, self.pairing_overrides())

    def module_names(self):
        return [m.name for m in self.modules]

    def module(self, name):
        from .coeff import InducedModule

        for m in self.modules:
            if m.name == name:
                break
        else:
            raise FixtureError("modules", f"no module named {name!r}")
        F = self.F
        if m.kind == "trivial":
            mb = ["1"]
        elif m.kind == "adjoint":
            mb = list(self.basis)
        else:
            mb = m.raw["basis"]
        dim = len(mb)
        n1 = len(self.g1)
        if m.kind == "trivial":
            g1a = [[Vec()] for _ in range(n1)]
            g2a = [[Vec()] for _ in self.g2]
            co = [[F.one()]]
        else:
            if m.kind == "adjoint":
                lie = self.lie
                full = [lie.ad_matrix(lie.index(n)) for n in self.basis]
                idx = {n: k for k, n in enumerate(self.basis)}
                g1a = [full[idx[n]] for n in self.g1]
                g2a = [full[idx[n]] for n in self.g2]
            else:
                g1a = m.raw["g1_action"]
                g2a = m.raw["g2_action"]
            co = [[m.raw["coaction"].get((a, b), Vec()) for a in range(dim)] for b in range(dim)]
        return InducedModule(
            m.name,
            LieModule(dim, g1a, "left", mb),
            co,
            LieModule(dim, g2a, "left", mb),
        )


def _action_table(raw, outer, inner, parse, path):
    """``{outer name: {inner name: expression}}`` → {(i, k): Vec}."""
    if not isinstance(raw, dict):
        raise FixtureError(path, "expected an object")
    out = {}
    for o, row in raw.items():
        if o not in outer:
            raise FixtureError(f"{path}.{o}", "unknown name")
        if not isinstance(row, dict):
            raise FixtureError(f"{path}.{o}", "expected an object")
        for k, expr in row.items():
            if k not in inner:
                raise FixtureError(f"{path}.{o}.{k}", "unknown name")
            out[(outer.index(o), inner.index(k))] = parse(expr, f"{path}.{o}.{k}")
    return out


def _matrices(raw, acting, basis, path):
    """Module action ``{X: {m_a: linear expr}}`` → list of matrices (columns as Vecs)."""
    table = _action_table(raw, acting, basis, lambda e, p: parse_linear(e, basis, p), path)
    return [[table.get((i, a), Vec()) for a in range(len(basis))] for i in range(len(acting))]


def fixture_from_dict(data, source="fixture"):
    if not isinstance(data, dict) or not data:
        raise FixtureError(source, "expected a non-empty object")
    version = _need(data, "schema_version", int, source)
    if version != SCHEMA_VERSION:
        raise FixtureError(f"{source}.schema_version", f"unsupported version {version}")
    name = _need(data, "name", str, source)
    lie = _need(data, "lie_algebra", dict, source)
    basis = _names(_need(lie, "basis", list, f"{source}.lie_algebra"), f"{source}.lie_algebra.basis")
    brackets = {}
    for n, entry in enumerate(_need(lie, "brackets", list, f"{source}.lie_algebra")):
        p = f"{source}.lie_algebra.brackets[{n}]"
        if not (isinstance(entry, list) and len(entry) == 3):
            raise FixtureError(p, "expected [X, Y, expression]")
        x, y, expr = entry
        if x not in basis or y not in basis:
            raise FixtureError(p, "unknown basis element")
        brackets[(basis.index(x), basis.index(y))] = parse_linear(expr, basis, p)
    split = _need(data, "split", dict, source)
    g1 = _names(_need(split, "g1", list, f"{source}.split"), f"{source}.split.g1")
    g2 = _names(_need(split, "g2", list, f"{source}.split"), f"{source}.split.g2")
    if sorted(g1 + g2) != sorted(basis):
        raise FixtureError(f"{source}.split", "g1 and g2 must partition the basis")
    hopf = _need(data, "hopf", dict, source)
    gens_raw = _need(hopf, "generators", list, f"{source}.hopf")
    gnames = []
    for n, g in enumerate(gens_raw):
        gnames.append(_need(g, "name", str, f"{source}.hopf.generators[{n}]"))
    _names(gnames, f"{source}.hopf.generators")
    gens = []
    for n, g in enumerate(gens_raw):
        p = f"{source}.hopf.generators[{n}]"
        inv = g.get("invertible", False)
        if not isinstance(inv, bool):
            raise FixtureError(f"{p}.invertible", "expected a boolean")
        gens.append({
            "name": gnames[n],
            "invertible": inv,
            "counit": _rational(_need(g, "counit", str, p), f"{p}.counit"),
            "coproduct": parse_commutative(_need(g, "coproduct", str, p), gnames, 2, f"{p}.coproduct"),
            "antipode": parse_commutative(_need(g, "antipode", str, p), gnames, 1, f"{p}.antipode"),
        })
        for key in gens[-1]["coproduct"]:
            for leg in key:
                _check_exponents(leg, gens_raw, gnames, f"{p}.coproduct")
        for key in gens[-1]["antipode"]:
            _check_exponents(key, gens_raw, gnames, f"{p}.antipode")

    def fparse(expr, p):
        v = parse_commutative(expr, gnames, 1, p)
        for e in v:
            _check_exponents(e, gens_raw, gnames, p)
        return v

    action = _action_table(data.get("action", {}), g1, gnames, fparse, f"{source}.action")
    coaction = _action_table(_need(data, "coaction", dict, source), g1, g1, fparse, f"{source}.coaction")
    modules = []
    for n, m in enumerate(_need(data, "modules", list, source)):
        p = f"{source}.modules[{n}]"
        mname = _need(m, "name", str, p)
        kind = m.get("kind", "explicit")
        if kind not in ("trivial", "adjoint", "explicit"):
            raise FixtureError(f"{p}.kind", f"unknown kind {kind!r}")
        raw = {}
        if kind == "explicit":
            mb = _names(_need(m, "basis", list, p), f"{p}.basis")
            raw["basis"] = mb
            raw["g1_action"] = _matrices(_need(m, "g1_action", dict, p), g1, mb, f"{p}.g1_action")
            raw["g2_action"] = _matrices(m.get("g2_action", {}), g2, mb, f"{p}.g2_action")
        else:
            mb = ["1"] if kind == "trivial" else basis
        if kind != "trivial":
            raw["coaction"] = _action_table(_need(m, "coaction", dict, p), mb, mb, fparse, f"{p}.coaction")
        modules.append(ModuleDatum(mname, kind, raw))
    if len({m.name for m in modules}) != len(modules):
        raise FixtureError(f"{source}.modules", "duplicate module names")
    levi = data.get("levi", [])
    if not isinstance(levi, list) or any(x not in g2 for x in levi):
        raise FixtureError(f"{source}.levi", "expected a list of g2 basis names")
    pairing = {}
    for gen, rule in data.get("pairing", {}).items():
        p = f"{source}.pairing.{gen}"
        if gen not in gnames:
            raise FixtureError(p, "unknown generator")
        if not isinstance(rule, dict):
            raise FixtureError(p, "expected an object")
        if "character" in rule:
            ch = rule["character"]
            if not isinstance(ch, dict) or any(k not in g2 for k in ch):
                raise FixtureError(f"{p}.character", "expected {g2 name: rational}")
            pairing[gen] = {"character": {k: _rational(v, f"{p}.character.{k}") for k, v in ch.items()}}
        elif "coefficient" in rule:
            co = rule["coefficient"]
            if not (isinstance(co, list) and len(co) == 2 and all(x in g1 for x in co)):
                raise FixtureError(f"{p}.coefficient", "expected [g1 name, g1 name]")
            pairing[gen] = {"coefficient": co, "scale": _rational(rule.get("scale", "1"), f"{p}.scale")}
        else:
            raise FixtureError(p, "expected 'character' or 'coefficient'")
    overrides = {}
    for side in ("left", "right"):
        target = g1 if side == "left" else g2
        raw = data.get("matched_overrides", {}).get(side, {})
        table = {}
        for key, expr in raw.items():
            p = f"{source}.matched_overrides.{side}.{key}"
            parts = [s.strip() for s in key.split(",")]
            if len(parts) != 2 or parts[0] not in g2 or parts[1] not in g1:
                raise FixtureError(p, "expected key 'ζ, X'")
            table[(g2.index(parts[0]), g1.index(parts[1]))] = parse_linear(expr, target, p)
        overrides[side] = table
    mutations = data.get("mutations", {})
    if not isinstance(mutations, dict) or any(k not in ("delta_twist",) for k in mutations):
        raise FixtureError(f"{source}.mutations", "only 'delta_twist' may be mutated")
    expect = data.get("expect", {})
    return Fixture(
        name, basis, brackets, g1, g2, gens, action, coaction, modules, levi, pairing,
        overrides, mutations, expect, data.get("description", ""),
    )


def _check_exponents(e, gens_raw, names, path):
    for k, x in enumerate(e):
        if x < 0 and not gens_raw[k].get("invertible", False):
            raise FixtureError(path, f"negative power of non-invertible generator {names[k]!r}")


def load_fixture(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FixtureError(str(path), exc.strerror or str(exc)) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from exc
    return fixture_from_dict(data, str(path))
