"""Extending a choice of generator images to a morphism on all words.

An assignment sends each generator name to an element of a finite target.
It extends to every word: a letter carrying bit k goes to the k-th power of
the target's alpha applied to the assigned element, and longer words fold
the product in from the right.  For that extension to respect the twisted
product and intertwine the involutions, the target has to be
hom-associative, multiplicative, and carry an involutive alpha, so the
constructor enforces all three.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .finite import (
    FiniteHomMagma,
    check_hom_associative,
    check_involutive_alpha,
    check_multiplicative,
)
from .words import Letter, Word, alpha_power, alpha_word, diamond, iter_words


@dataclass(frozen=True)
class GeneratorAssignment:
    target: FiniteHomMagma
    mapping: Dict[str, int]

    def __post_init__(self):
        object.__setattr__(self, "mapping", dict(self.mapping))
        for name, v in self.mapping.items():
            Letter(name)
            if not isinstance(v, int) or not 0 <= v < self.target.order:
                raise ValueError("generator %r must map to an element index" % name)
        wit = check_hom_associative(self.target)
        if wit is not None:
            raise ValueError(
                "target is not hom-associative, witness (%s, %s, %s)" % wit
            )
        pair = check_multiplicative(self.target)
        if pair is not None:
            raise ValueError(
                "target alpha is not multiplicative, witness (%s, %s)" % pair
            )
        lab = check_involutive_alpha(self.target)
        if lab is not None:
            raise ValueError("target alpha is not an involution, witness %s" % lab)

    @classmethod
    def from_labels(cls, target: FiniteHomMagma, mapping: Dict[str, str]):
        return cls(target, {n: target.index(lab) for n, lab in mapping.items()})


def extend(assign: GeneratorAssignment, w: Word) -> int:
    """Image of a word under the induced morphism, as a target index."""
    letters = w.letters
    head = letters[0]
    try:
        img = assign.mapping[head.name]
    except KeyError:
        raise ValueError("no image assigned to generator %r" % head.name) from None
    if head.bit:
        img = assign.target.alpha[img]
    if len(letters) == 1:
        return img
    return assign.target.mul[img][extend(assign, Word(letters[1:]))]


def _random_word(rng: random.Random, names, max_len: int) -> Word:
    k = rng.randint(1, max_len)
    return Word(
        tuple(Letter(rng.choice(names), rng.randint(0, 1)) for _ in range(k))
    )


def verify_morphism(
    assign: GeneratorAssignment,
    max_len: int = 6,
    samples: int = 1000,
    seed: int = 0,
) -> Optional[Tuple[Word, Word]]:
    """Randomized search for a pair of words where extension misbehaves.

    Each sample draws a pair (u, v) and checks the product law
    extend(u <> v) = extend(u) extend(v) together with intertwining on both
    words, extend(alpha(w)) = alpha(extend(w)).  Returns the first failing
    pair, or None when all samples pass.  Deterministic in the seed.
    """
    names = sorted(assign.mapping)
    if not names:
        raise ValueError("assignment has no generators")
    mul, al = assign.target.mul, assign.target.alpha
    for i in range(samples):
        rng = random.Random(seed * 0x9E3779B1 + i)
        u = _random_word(rng, names, max_len)
        v = _random_word(rng, names, max_len)
        fu = extend(assign, u)
        fv = extend(assign, v)
        if extend(assign, diamond(u, v)) != mul[fu][fv]:
            return (u, v)
        if extend(assign, alpha_word(u)) != al[fu]:
            return (u, v)
        if extend(assign, alpha_word(v)) != al[fv]:
            return (u, v)
    return None


def verify_uniqueness(
    assign: GeneratorAssignment, max_len: int = 4
) -> Optional[Tuple[Word, int]]:
    """Check that generator images force the whole morphism.

    A word of length n splits at every position s into a twisted product
    w = u <> v: flip all but the last letter of the prefix to get u, and
    undo the twist on the suffix to get v.  Any morphism that agrees on
    shorter words must therefore take the value extend(u) extend(v) at w.
    Returns the first (word, split) where extension breaks that, or None.
    """
    names = sorted(assign.mapping)
    if len(names) > 3 or max_len > 5:
        raise ValueError("exhaustive check is capped at 3 generators, length 5")
    mul = assign.target.mul
    for w in iter_words(names, max_len):
        for s in range(1, len(w)):
            head = tuple(l.flipped() for l in w.letters[: s - 1])
            u = Word(head + (w.letters[s - 1],))
            v = alpha_power(Word(w.letters[s:]), s - 1)
            if extend(assign, w) != mul[extend(assign, u)][extend(assign, v)]:
                return (w, s)
    return None
