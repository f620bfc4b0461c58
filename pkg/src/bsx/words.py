"""Words in the two generators and their pinch-free normal forms.

A word is a run-length sequence of syllables: powers of b interleaved with
single t or t-inverse letters.  Reduction applies the defining relation as
a rewriting system,
    t b^(jm) t^-1  ->  b^(jn)      and      t^-1 b^(jn) t  ->  b^(jm),
innermost-leftmost until no pinch remains.  Which element the result
represents does not depend on the strategy (Britton), so the choice only
fixes intermediate forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import BSParams, factorize, valuation
from .errors import PreconditionFailed, WordSyntaxError

# A syllable is ("b", a) with a != 0, or ("t", +1) / ("t", -1).
Syllable = tuple[str, int]


@dataclass(frozen=True)
class Word:
    """Free-reduced word; empty tuple of syllables is the identity."""

    syllables: tuple[Syllable, ...] = ()

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: "Word") -> "Word":
        return Word(_normalize(list(self.syllables) + list(other.syllables)))

    def inverse(self) -> "Word":
        inv = []
        for kind, a in reversed(self.syllables):
            inv.append((kind, -a))
        return Word(_normalize(inv))

    def letters(self):
        """Yield single letters ('b'|'t', +1|-1), left to right."""
        for kind, a in self.syllables:
            step = 1 if a > 0 else -1
            for _ in range(abs(a)):
                yield kind, step

    def t_exponent_sum(self) -> int:
        return sum(a for kind, a in self.syllables if kind == "t")

    def t_count(self) -> int:
        return sum(abs(a) for kind, a in self.syllables if kind == "t")

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for kind, a in self.syllables:
            if kind == "b":
                parts.append("b" if a == 1 else f"b^{a}")
            else:
                parts.append("t" if a == 1 else "T")
        return " ".join(parts)


def _normalize(syllables: list[Syllable]) -> tuple[Syllable, ...]:
    """Merge adjacent b-powers, drop zero exponents, cancel t t^-1 pairs."""
    out: list[Syllable] = []
    for kind, a in syllables:
        if a == 0:
            continue
        if kind == "t" and a not in (-1, 1):
            step = 1 if a > 0 else -1
            for _ in range(abs(a)):
                out.append(("t", step))
                _cancel_tail(out)
            continue
        out.append((kind, a))
        _cancel_tail(out)
    return tuple(out)


def _cancel_tail(out: list[Syllable]):
    while len(out) >= 2:
        k2, a2 = out[-1]
        k1, a1 = out[-2]
        if k1 == "b" and k2 == "b":
            out.pop()
            out.pop()
            if a1 + a2 != 0:
                out.append(("b", a1 + a2))
            continue
        if k1 == "t" and k2 == "t" and a1 + a2 == 0:
            out.pop()
            out.pop()
            continue
        break


def word_from_syllables(syllables) -> Word:
    return Word(_normalize(list(syllables)))


def parse_word(text: str) -> Word:
    """Parse tokens b, B (=b^-1), t, T (=t^-1), each with an optional
    ^integer exponent; whitespace separates freely."""
    syllables: list[Syllable] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c not in "bBtT":
            raise WordSyntaxError(f"unexpected character {c!r}", i)
        kind = "b" if c in "bB" else "t"
        sign = 1 if c in "bt" else -1
        i += 1
        exp = 1
        if i < n and text[i] == "^":
            i += 1
            j = i
            if j < n and text[j] in "+-":
                j += 1
            if j >= n or not text[j].isdigit():
                raise WordSyntaxError("expected integer exponent after '^'", i)
            while j < n and text[j].isdigit():
                j += 1
            exp = int(text[i:j])
            i = j
        syllables.append((kind, sign * exp))
    return Word(_normalize(syllables))


@dataclass(frozen=True)
class BrittonForm:
    """Pinch-free word: no t b^a t^-1 with m | a, no t^-1 b^a t with n | a."""

    params: BSParams
    word: Word

    @property
    def kappa(self) -> int:
        return self.word.t_count()

    @property
    def sigma(self) -> int:
        return self.word.t_exponent_sum()

    def __str__(self) -> str:
        return str(self.word)


def britton_reduce(params: BSParams, w: Word) -> BrittonForm:
    """Rewrite to a pinch-free form representing the same element."""
    m, n = params.m, params.n
    stack: list[Syllable] = []
    for kind, a in w.syllables:
        stack.append((kind, a))
        _cancel_tail(stack)
        changed = True
        while changed:
            changed = False
            if stack and stack[-1][0] == "t":
                eps = stack[-1][1]
                # pattern on the stack: t^-eps b^a t^eps; opposite t's with
                # no b between them were already canceled by _cancel_tail
                if (
                    len(stack) >= 3
                    and stack[-2][0] == "b"
                    and stack[-3] == ("t", -eps)
                ):
                    a_mid = stack[-2][1]
                else:
                    continue
                # t b^(jm) t^-1 -> b^(jn): here eps = -1 closes a t ... T pinch
                divisor, multiplier = (m, n) if eps == -1 else (n, m)
                if a_mid % divisor == 0:
                    del stack[-3:]
                    j = a_mid // divisor
                    if j != 0:
                        stack.append(("b", j * multiplier))
                    _cancel_tail(stack)
                    changed = True
    return BrittonForm(params, Word(tuple(stack)))


def is_pinch_free(params: BSParams, w: Word) -> bool:
    """Machine check of Britton's condition, independent of the reducer."""
    m, n = params.m, params.n
    sylls = w.syllables
    for i, (kind, eps) in enumerate(sylls):
        if kind != "t":
            continue
        # find the next t-syllable; at most one b-power lies in between
        if i + 1 < len(sylls) and sylls[i + 1][0] == "t":
            mid, j = 0, i + 1
        elif i + 2 < len(sylls) and sylls[i + 1][0] == "b" and sylls[i + 2][0] == "t":
            mid, j = sylls[i + 1][1], i + 2
        else:
            continue
        if eps == 1 and sylls[j][1] == -1 and mid % m == 0:
            return False
        if eps == -1 and sylls[j][1] == 1 and mid % n == 0:
            return False
    return True


def t_stats(params: BSParams, w: Word) -> tuple[int, int]:
    """(kappa, sigma): t-length of the reduced form and the t-exponent sum.

    sigma is already reduction-invariant; it vanishes exactly on the
    normal closure of b.
    """
    reduced = britton_reduce(params, w)
    return reduced.kappa, w.t_exponent_sum()


def commute_power(params: BSParams, gamma: Word, A: int) -> int:
    """The exponent B with gamma b^A gamma^-1 = b^B.

    Defined whenever A is divisible enough: at primes where m and n have
    equal valuation, A must absorb it; elsewhere A needs kappa times the
    larger of the two valuations.  The violating prime is reported.
    """
    reduced = britton_reduce(params, gamma)
    kappa = reduced.kappa
    if A != 0:
        support = {p for p, _ in factorize(params.m)} | {p for p, _ in factorize(params.n)}
        for p in sorted(support):
            vm = valuation(params.m, p)
            vn = valuation(params.n, p)
            va = valuation(A, p)
            if vm == vn:
                if va < vm:
                    raise PreconditionFailed(p)
            else:
                if va < kappa * max(vm, vn):
                    raise PreconditionFailed(p)
    conj = reduced.word * Word((("b", A),)) * reduced.word.inverse() if A else Word()
    result = britton_reduce(params, conj).word
    if result.is_identity:
        return 0
    if len(result.syllables) != 1 or result.syllables[0][0] != "b":
        raise AssertionError("conjugate of a b-power did not reduce to a b-power")
    return result.syllables[0][1]
