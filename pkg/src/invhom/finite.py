"""Finite structures with a binary product and a unary map, as Cayley tables.

Everything here is small enough to check laws exhaustively.  Checkers return
the first counterexample in index order (reported as labels) or None, so a
failing structure always produces the same witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple


@dataclass(frozen=True)
class FiniteHomMagma:
    """A finite carrier with product table ``mul`` and unary table ``alpha``.

    labels: one name per element, all distinct and nonempty.
    mul:    n by n table of element indices, mul[i][j] = index of i * j.
    alpha:  n element indices, alpha[i] = index of the image of i.
    """

    labels: Tuple[str, ...]
    mul: Tuple[Tuple[int, ...], ...]
    alpha: Tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        mul = tuple(tuple(row) for row in self.mul)
        alpha = tuple(self.alpha)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "alpha", alpha)
        n = len(labels)
        if n == 0:
            raise ValueError("a structure has at least one element")
        for lab in labels:
            if not isinstance(lab, str) or not lab:
                raise ValueError("labels must be nonempty strings")
        if len(set(labels)) != n:
            raise ValueError("labels must be distinct")
        if len(mul) != n or any(len(row) != n for row in mul):
            raise ValueError("mul must be an %d by %d table" % (n, n))
        for row in mul:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise ValueError("mul entries must be element indices")
        if len(alpha) != n:
            raise ValueError("alpha must have one entry per element")
        for v in alpha:
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValueError("alpha entries must be element indices")

    @property
    def order(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError("unknown label %r" % (label,)) from None


def check_hom_associative(m: FiniteHomMagma) -> Optional[Tuple[str, str, str]]:
    """First triple (as labels) violating alpha(x)(yz) = (xy)alpha(z)."""
    mul, al = m.mul, m.alpha
    for i in range(m.order):
        for j in range(m.order):
            for k in range(m.order):
                if mul[al[i]][mul[j][k]] != mul[mul[i][j]][al[k]]:
                    return (m.labels[i], m.labels[j], m.labels[k])
    return None


def check_associative(m: FiniteHomMagma) -> Optional[Tuple[str, str, str]]:
    """First triple (as labels) violating (xy)z = x(yz)."""
    mul = m.mul
    for i in range(m.order):
        for j in range(m.order):
            for k in range(m.order):
                if mul[mul[i][j]][k] != mul[i][mul[j][k]]:
                    return (m.labels[i], m.labels[j], m.labels[k])
    return None


def check_multiplicative(m: FiniteHomMagma) -> Optional[Tuple[str, str]]:
    """First pair (as labels) violating alpha(xy) = alpha(x)alpha(y)."""
    mul, al = m.mul, m.alpha
    for i in range(m.order):
        for j in range(m.order):
            if al[mul[i][j]] != mul[al[i]][al[j]]:
                return (m.labels[i], m.labels[j])
    return None


def check_involutive_alpha(m: FiniteHomMagma) -> Optional[str]:
    """First element (as a label) violating alpha(alpha(x)) = x."""
    al = m.alpha
    for i in range(m.order):
        if al[al[i]] != i:
            return m.labels[i]
    return None


_LAW_ROWS = (
    ("hom-associative", "hom_associative", "hom_witness"),
    ("associative", "associative", "assoc_witness"),
    ("multiplicative", "multiplicative", "mult_witness"),
    ("involutive alpha", "involutive_alpha", "invol_witness"),
)


@dataclass(frozen=True)
class LawReport:
    """Outcome of the four law checks, each with its witness when it fails."""

    hom_associative: bool
    associative: bool
    multiplicative: bool
    involutive_alpha: bool
    hom_witness: Optional[Tuple[str, str, str]] = None
    assoc_witness: Optional[Tuple[str, str, str]] = None
    mult_witness: Optional[Tuple[str, str]] = None
    invol_witness: Optional[str] = None

    def __post_init__(self):
        for _, flag_field, wit_field in _LAW_ROWS:
            flag = getattr(self, flag_field)
            wit = getattr(self, wit_field)
            if flag == (wit is not None):
                raise ValueError(
                    "%s: a law holds exactly when it has no witness" % flag_field
                )

    def as_text(self) -> str:
        lines = []
        for name, flag_field, wit_field in _LAW_ROWS:
            flag = getattr(self, flag_field)
            line = name.ljust(17) + ("yes" if flag else "no")
            if not flag:
                wit = getattr(self, wit_field)
                parts = wit if isinstance(wit, tuple) else (wit,)
                line += "  witness: " + " ".join(parts)
            lines.append(line)
        return "\n".join(lines)


def classify(m: FiniteHomMagma) -> LawReport:
    hom = check_hom_associative(m)
    assoc = check_associative(m)
    mult = check_multiplicative(m)
    invol = check_involutive_alpha(m)
    return LawReport(
        hom_associative=hom is None,
        associative=assoc is None,
        multiplicative=mult is None,
        involutive_alpha=invol is None,
        hom_witness=hom,
        assoc_witness=assoc,
        mult_witness=mult,
        invol_witness=invol,
    )


def has_zero(m: FiniteHomMagma) -> Optional[int]:
    """Index of an absorbing element (zs = sz = z for all s), or None.

    The one-element structure is not counted as having a zero; adjoining is
    only skipped when an absorbing element sits inside something larger.
    """
    if m.order < 2:
        return None
    for z in range(m.order):
        if all(m.mul[z][s] == z and m.mul[s][z] == z for s in range(m.order)):
            return z
    return None


def adjoin_zero(m: FiniteHomMagma) -> FiniteHomMagma:
    """Make a semigroup hom-associative by sending alpha onto a zero.

    The product must already be associative.  If the carrier has an absorbing
    element, alpha is redirected to it and nothing else changes; otherwise a
    fresh absorbing element is appended.  The result is hom-associative and
    multiplicative (alpha is the constant zero map, not an involution), and
    the construction is idempotent.
    """
    wit = check_associative(m)
    if wit is not None:
        raise ValueError(
            "adjoin_zero needs an associative product, violated at (%s, %s, %s)"
            % wit
        )
    z = has_zero(m)
    if z is not None:
        return FiniteHomMagma(m.labels, m.mul, (z,) * m.order)
    name = "0"
    while name in m.labels:
        name += "_"
    n = m.order
    mul = tuple(tuple(row) + (n,) for row in m.mul) + ((n,) * (n + 1),)
    return FiniteHomMagma(m.labels + (name,), mul, (n,) * (n + 1))


def relabel(m: FiniteHomMagma, perm: Sequence[int]) -> FiniteHomMagma:
    """Transport the structure along a permutation of positions.

    Element i moves to position perm[i] and keeps its label, so the result
    is isomorphic to the input and every classification is unchanged.
    """
    n = m.order
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of the element indices")
    labels = [""] * n
    alpha = [0] * n
    mul = [[0] * n for _ in range(n)]
    for i in range(n):
        labels[perm[i]] = m.labels[i]
        alpha[perm[i]] = perm[m.alpha[i]]
        for j in range(n):
            mul[perm[i]][perm[j]] = perm[m.mul[i][j]]
    return FiniteHomMagma(tuple(labels), tuple(tuple(r) for r in mul), tuple(alpha))


def fixture(name: str) -> FiniteHomMagma:
    """Worked three-element structures on the labels x, y, z.

    "hom_not_sg":  hom-associative and multiplicative but not associative,
                   with alpha the constant map onto z.
    "involutive":  hom-associative, multiplicative, alpha swaps x and y.
    """
    if name == "hom_not_sg":
        mul = ((1, 0, 2), (1, 1, 2), (2, 2, 2))
        alpha = (2, 2, 2)
    elif name == "involutive":
        mul = ((1, 0, 2), (1, 0, 2), (2, 2, 2))
        alpha = (1, 0, 2)
    else:
        raise ValueError("unknown fixture %r" % (name,))
    return FiniteHomMagma(("x", "y", "z"), mul, alpha)


def structure_to_dict(m: FiniteHomMagma) -> dict:
    """Label-based dict form, the shape used by the JSON structure files."""
    return {
        "labels": list(m.labels),
        "mul": [[m.labels[v] for v in row] for row in m.mul],
        "alpha": [m.labels[v] for v in m.alpha],
    }


def structure_from_dict(data: object) -> FiniteHomMagma:
    """Parse the dict form, reporting the offending position on bad input."""
    if not isinstance(data, dict):
        raise ValueError("structure must be an object with labels, mul, alpha")
    for key in ("labels", "mul", "alpha"):
        if key not in data:
            raise ValueError("structure is missing %r" % (key,))
    labels = data["labels"]
    if not isinstance(labels, list) or not labels:
        raise ValueError("labels must be a nonempty list")
    for i, lab in enumerate(labels):
        if not isinstance(lab, str) or not lab:
            raise ValueError("labels entry %d must be a nonempty string" % i)
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct")
    n = len(labels)
    pos = {lab: i for i, lab in enumerate(labels)}
    raw_mul = data["mul"]
    if not isinstance(raw_mul, list) or len(raw_mul) != n:
        raise ValueError("mul must be a list of %d rows" % n)
    mul = []
    for r, row in enumerate(raw_mul):
        if not isinstance(row, list) or len(row) != n:
            raise ValueError("mul row %d must have %d entries" % (r, n))
        out = []
        for c, v in enumerate(row):
            if not isinstance(v, str) or v not in pos:
                raise ValueError(
                    "mul row %d, column %d: unknown label %r" % (r, c, v)
                )
            out.append(pos[v])
        mul.append(tuple(out))
    raw_alpha = data["alpha"]
    if not isinstance(raw_alpha, list) or len(raw_alpha) != n:
        raise ValueError("alpha must be a list of %d entries" % n)
    alpha = []
    for c, v in enumerate(raw_alpha):
        if not isinstance(v, str) or v not in pos:
            raise ValueError("alpha entry %d: unknown label %r" % (c, v))
        alpha.append(pos[v])
    return FiniteHomMagma(tuple(labels), tuple(mul), tuple(alpha))
