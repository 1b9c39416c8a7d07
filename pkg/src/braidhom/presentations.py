"""Monoid and group presentations, a small text format, and the bundled registry.

File format (UTF-8)::

    # comment
    kind: monoid            (or: group)
    gens: g1 g2 ...         (listed order is the linear order on generators)
    rel: w1 = w2            (monoid files; also accepted in group files)
    relator: w              (group files; g^-1 for inverses)

Words are whitespace-separated generator names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from itertools import combinations


class PresentationSyntaxError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NonHomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSymbol:
    name: str
    index: int


@dataclass(frozen=True)
class MonoidPresentation:
    """Positive presentation; words are tuples of generator indices."""

    generators: tuple[str, ...]
    relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    name: str = ""

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be unique")
        n = len(self.generators)
        for u, v in self.relations:
            if any(not 0 <= x < n for x in u + v):
                raise ValueError("relation uses an unknown generator")

    @property
    def symbols(self):
        return tuple(GeneratorSymbol(g, i) for i, g in enumerate(self.generators))

    def index(self, name: str) -> int:
        return self.generators.index(name)

    def word(self, text) -> tuple[int, ...]:
        """Parse 'a b c' (or a list of names) into a word."""
        names = text.split() if isinstance(text, str) else list(text)
        return tuple(self.index(x) for x in names)

    def format_word(self, w) -> str:
        return " ".join(self.generators[x] for x in w) if w else "1"

    def is_homogeneous(self) -> bool:
        return all(len(u) == len(v) for u, v in self.relations)

    def as_group(self) -> "GroupPresentation":
        rels = tuple(tuple((x, 1) for x in u) + tuple((x, -1) for x in reversed(v))
                     for u, v in self.relations)
        return GroupPresentation(self.generators, rels, self.name)


@dataclass(frozen=True)
class GroupPresentation:
    """Group presentation; relators are tuples of (generator index, +-1)."""

    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[int, int], ...], ...]
    name: str = ""

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be unique")
        n = len(self.generators)
        for r in self.relators:
            for x, s in r:
                if not 0 <= x < n or s not in (1, -1):
                    raise ValueError("malformed relator")

    @property
    def symbols(self):
        return tuple(GeneratorSymbol(g, i) for i, g in enumerate(self.generators))

    def index(self, name: str) -> int:
        return self.generators.index(name)

    def word(self, text) -> tuple[tuple[int, int], ...]:
        return tuple(_parse_letter(tok, self.generators) for tok in text.split())

    def format_word(self, w) -> str:
        return " ".join(self.generators[x] + ("" if s == 1 else "^-1") for x, s in w) if w else "1"


def _parse_letter(tok, gens, line=None):
    m = re.fullmatch(r"(.+?)(\^(-?1))?", tok)
    name, exp = m.group(1), int(m.group(3) or 1)
    if name not in gens:
        raise PresentationSyntaxError(f"unknown generator {name!r}", line)
    return gens.index(name), exp


# ------------------------------------------------------------------ text format

def parse_presentation(text: str, name: str = ""):
    kind = None
    gens = None
    rels = []
    relators = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise PresentationSyntaxError(f"expected 'key: value', got {raw!r}", lineno)
        key, val = (s.strip() for s in line.split(":", 1))
        if key == "kind":
            if val not in ("monoid", "group"):
                raise PresentationSyntaxError(f"unknown kind {val!r}", lineno)
            kind = val
        elif key == "gens":
            gens = tuple(val.split())
            if len(set(gens)) != len(gens):
                raise PresentationSyntaxError("duplicate generator", lineno)
        elif key in ("rel", "relator"):
            if gens is None:
                raise PresentationSyntaxError("relation before 'gens:'", lineno)
            if key == "rel":
                if val.count("=") != 1:
                    raise PresentationSyntaxError("relation needs exactly one '='", lineno)
                lhs, rhs = val.split("=")
                u = tuple(_parse_letter(t, gens, lineno) for t in lhs.split())
                v = tuple(_parse_letter(t, gens, lineno) for t in rhs.split())
                rels.append((u, v, lineno))
            else:
                relators.append(tuple(_parse_letter(t, gens, lineno) for t in val.split()))
        elif key == "name":
            name = val
        else:
            raise PresentationSyntaxError(f"unknown key {key!r}", lineno)
    if kind is None:
        raise PresentationSyntaxError("missing 'kind:'")
    if gens is None:
        raise PresentationSyntaxError("missing 'gens:'")
    if kind == "monoid":
        if relators:
            raise PresentationSyntaxError("'relator:' lines are only allowed in group files")
        out = []
        for u, v, lineno in rels:
            if any(s != 1 for _, s in u + v):
                raise PresentationSyntaxError("inverse letter in a monoid relation", lineno)
            if len(u) != len(v):
                raise NonHomogeneousError(f"line {lineno}: non-homogeneous relation")
            out.append((tuple(x for x, _ in u), tuple(x for x, _ in v)))
        return MonoidPresentation(gens, tuple(out), name)
    for u, v, _ in rels:
        relators.append(u + tuple((x, -s) for x, s in reversed(v)))
    return GroupPresentation(gens, tuple(relators), name)


def serialize(p) -> str:
    lines = []
    if p.name:
        lines.append(f"name: {p.name}")
    if isinstance(p, MonoidPresentation):
        lines.append("kind: monoid")
        lines.append("gens: " + " ".join(p.generators))
        for u, v in p.relations:
            lines.append(f"rel: {p.format_word(u) if u else ''} = {p.format_word(v) if v else ''}".replace("  ", " "))
    else:
        lines.append("kind: group")
        lines.append("gens: " + " ".join(p.generators))
        for r in p.relators:
            lines.append("relator: " + p.format_word(r))
    return "\n".join(lines) + "\n"


# -------------------------------------------------------------------- builders

def corran_picantin(e: int, r: int) -> MonoidPresentation:
    """Corran-Picantin monoid M(e,e,r) with atoms ordered s_r < ... < s_3 < t_0 < ... < t_{e-1}."""
    if e < 1 or r < 2:
        raise ValueError("need e >= 1 and r >= 2")
    s_names = [f"s{k}" for k in range(r, 2, -1)]
    t_names = [f"t{i}" for i in range(e)]
    gens = tuple(s_names + t_names)
    t = {i: gens.index(f"t{i}") for i in range(e)}
    s = {k: gens.index(f"s{k}") for k in range(3, r + 1)}
    rels = []
    for i, j in combinations(range(e), 2):
        rels.append(((t[(i + 1) % e], t[i]), (t[(j + 1) % e], t[j])))
    if r >= 3:
        for i in range(e):
            rels.append(((s[3], t[i], s[3]), (t[i], s[3], t[i])))
    for k in range(4, r + 1):
        for i in range(e):
            rels.append(((s[k], t[i]), (t[i], s[k])))
    for k in range(3, r):
        rels.append(((s[k], s[k + 1], s[k]), (s[k + 1], s[k], s[k + 1])))
    for k in range(3, r + 1):
        for l in range(k + 2, r + 1):
            rels.append(((s[k], s[l]), (s[l], s[k])))
    return MonoidPresentation(gens, tuple(rels), f"cp_{e}_{r}")


def _alternating(a, b, m):
    return tuple(a if k % 2 == 0 else b for k in range(m))


def artin_monoid(coxeter_matrix, names=None, name: str = "") -> MonoidPresentation:
    """Artin monoid of a Coxeter matrix; entries 0 or None mean 'no relation' (infinity)."""
    n = len(coxeter_matrix)
    if any(len(row) != n for row in coxeter_matrix):
        raise ValueError("Coxeter matrix must be square")
    names = tuple(names) if names else tuple(f"a{i + 1}" for i in range(n))
    if len(names) != n:
        raise ValueError("wrong number of names")
    rels = []
    for i in range(n):
        if coxeter_matrix[i][i] != 1:
            raise ValueError("diagonal entries must be 1")
        for j in range(i + 1, n):
            m = coxeter_matrix[i][j]
            if m != coxeter_matrix[j][i]:
                raise ValueError("Coxeter matrix must be symmetric")
            if m in (None, 0, float("inf")):
                continue
            if not isinstance(m, int) or m < 2:
                raise ValueError(f"invalid entry {m!r}")
            rels.append((_alternating(i, j, m), _alternating(j, i, m)))
    return MonoidPresentation(names, tuple(rels), name)


def coxeter_matrix(kind: str, n: int):
    """Coxeter matrices for types A_n, B_n, D_n and I_2(m) (n = m for I2)."""
    kind = kind.upper()
    if kind == "I2":
        return [[1, n], [n, 1]]
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    if kind == "A":
        for i in range(n - 1):
            m[i][i + 1] = m[i + 1][i] = 3
    elif kind == "B":
        for i in range(n - 1):
            m[i][i + 1] = m[i + 1][i] = 3
        if n >= 2:
            m[0][1] = m[1][0] = 4
    elif kind == "D":
        if n < 3:
            raise ValueError("type D needs n >= 3")
        for i in range(1, n - 1):
            m[i][i + 1] = m[i + 1][i] = 3
        m[0][2] = m[2][0] = 3
    else:
        raise ValueError(f"unknown type {kind}")
    return m


def artin_type(kind: str, n: int) -> MonoidPresentation:
    label = f"artin_{kind.lower()}{n}" if kind.upper() != "I2" else f"artin_i2_{n}"
    rank = 2 if kind.upper() == "I2" else n
    return artin_monoid(coxeter_matrix(kind, n), [f"a{i + 1}" for i in range(rank)], label)


def semidirect_presentation(e: int, r: int) -> GroupPresentation:
    """Z acting on the affine braid group of type A_{r-1}: generator T (= tau^e) and s1..sr.

    Relators: braid relations around the r-gon, commutations, and
    T s_i T^-1 = s_{i+e mod r}.
    """
    if r < 3:
        raise ValueError("need r >= 3")
    if e < 1:
        raise ValueError("need e >= 1")
    gens = ("T",) + tuple(f"s{i}" for i in range(1, r + 1))

    def s(i):
        return (i - 1) % r + 1

    rels = []
    for i in range(1, r + 1):
        a, b = s(i), s(i + 1)
        rels.append(((a, 1), (b, 1), (a, 1), (b, -1), (a, -1), (b, -1)))
    for i, j in combinations(range(1, r + 1), 2):
        if (j - i) % r not in (1, r - 1):
            rels.append(((i, 1), (j, 1), (i, -1), (j, -1)))
    for i in range(1, r + 1):
        rels.append(((0, 1), (i, 1), (0, -1), (s(i + e), -1)))
    return GroupPresentation(gens, tuple(rels), f"semidirect_{e}_{r}")


# -------------------------------------------------------------------- registry

EVEN_GROUPS = (12, 13, 22, 23, 24, 27, 28, 29, 30, 31, 33, 34, 35, 36, 37)
_FILES = ["g24", "b334"] + [f"even_g{n}" for n in EVEN_GROUPS]


def _read_data(key: str) -> str:
    return resources.files("braidhom").joinpath("data").joinpath(f"{key}.pres").read_text(encoding="utf-8")


def registry_keys():
    return list(_FILES) + ["cp_<e>_<r>", "artin_a<n>", "artin_b<n>", "artin_d<n>", "artin_i2_<m>"]


def bundled(key: str):
    key = key.lower()
    if key in _FILES:
        return parse_presentation(_read_data(key), name=key)
    m = re.fullmatch(r"cp_(\d+)_(\d+)", key)
    if m:
        return corran_picantin(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"artin_([abd])(\d+)", key)
    if m:
        return artin_type(m.group(1), int(m.group(2)))
    m = re.fullmatch(r"artin_i2_(\d+)", key)
    if m:
        return artin_type("I2", int(m.group(1)))
    m = re.fullmatch(r"semidirect_(\d+)_(\d+)", key)
    if m:
        return semidirect_presentation(int(m.group(1)), int(m.group(2)))
    raise KeyError(f"unknown presentation {key!r}")


def load(path_or_key: str):
    """Bundled key or path to a presentation file."""
    try:
        return bundled(path_or_key)
    except KeyError:
        with open(path_or_key, encoding="utf-8") as fh:
            return parse_presentation(fh.read())
