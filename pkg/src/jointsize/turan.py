"""Exact closed forms and thresholds for Turán graphs and clique bounds.

Everything here is evaluated with :class:`fractions.Fraction`; there is no
floating point on any verification path.
"""

from __future__ import annotations

import enum
from collections import Counter
from fractions import Fraction
from math import comb, prod
from typing import Optional, Sequence

from .generators import turan_part_sizes
from .graph import GraphError


class ThresholdKind(str, enum.Enum):
    THEOREM1 = "theorem1"
    OURB0 = "ourb0"
    LEMMA2_JS = "lemma2_js"
    TURAN_JS_FORMULA = "turan_js_formula"
    COMPLETE_JS_FORMULA = "complete_js_formula"


class Lemma2Variant(str, enum.Enum):
    STATED_R3 = "stated_r3"
    PROOF_R4 = "proof_r4"


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def multipartite_clique_count(parts: Sequence[int], s: int) -> int:
    """Elementary symmetric polynomial e_s of the part sizes.

    Equals the number of s-cliques of the complete multipartite graph with
    these parts.  Equal sizes are grouped: a size a repeated x times
    contributes the factor (1 + a t)^x, so balanced part lists (at most two
    distinct sizes) cost O(s) big-integer products instead of O(r s).
    """
    if s < 0:
        return 0
    groups = sorted(Counter(p for p in parts if p).items())
    if s == 0:
        return 1
    if not groups or sum(x for _, x in groups) < s:
        return 0
    if len(groups) == 1:
        a, x = groups[0]
        return comb(x, s) * a**s
    if len(groups) == 2:  # every balanced part list lands here
        (a, x), (b, y) = groups
        return sum(
            comb(x, s - i) * a ** (s - i) * comb(y, i) * b**i for i in range(max(0, s - x), min(y, s) + 1)
        )
    e = [1] + [0] * s  # running product, truncated at t^s
    for a, x in groups:
        f = [comb(x, i) * a**i for i in range(min(x, s) + 1)]
        e = [sum(e[j - i] * f[i] for i in range(min(j, len(f) - 1) + 1)) for j in range(s + 1)]
    return e[s]


def turan_clique_count(n: int, r: int, s: int) -> int:
    """k_s(T_r(n))."""
    return multipartite_clique_count(turan_part_sizes(n, r), s)


def turan_edge_count(n: int, r: int) -> int:
    """t_r(n), the number of edges of T_r(n)."""
    if r < 1:
        raise GraphError(f"part count must be positive, got {r}")
    q, rem = divmod(n, r)
    return comb(n, 2) - rem * comb(q + 1, 2) - (r - rem) * comb(q, 2)


def js_complete_formula(n: int, r: int) -> int:
    if not 2 <= r <= n:
        raise GraphError(f"need 2 <= r <= n, got n={n}, r={r}")
    return comb(n - 2, r - 2)


def js_turan_formula(n: int, r: int) -> int:
    if r < 2 or n % r:
        raise GraphError(f"closed form needs r >= 2 dividing n, got n={n}, r={r}")
    return (n // r) ** (r - 2)


def theorem_alpha(r: int) -> Fraction:
    """The alpha used to derive the main theorem: 4^(-r-6) r^(-7)."""
    return Fraction(1, 4 ** (r + 6) * r**7)


def threshold(kind, n: int, r: int, alpha: Optional[Fraction] = None) -> Fraction:
    """Exact value of a named jointsize threshold.

    ``theorem1`` and ``ourb0`` bound js_{r+1}; ``lemma2_js`` is
    alpha * r * (n/r)^(r-1); the two formula kinds are the closed forms
    for js_r of K_n and T_r(n).
    """
    kind = ThresholdKind(kind)
    if r < 2:
        raise GraphError(f"thresholds need r >= 2, got {r}")
    if kind is ThresholdKind.LEMMA2_JS:
        if alpha is None or Fraction(alpha) <= 0:
            raise GraphError("lemma2_js threshold needs alpha > 0")
        return Fraction(alpha) * r * Fraction(n, r) ** (r - 1)
    if alpha is not None:
        raise GraphError(f"alpha is only meaningful for lemma2_js, not {kind.value}")
    if kind is ThresholdKind.THEOREM1:
        return Fraction(n ** (r - 1), (4 * r) ** (r + 6))
    if kind is ThresholdKind.OURB0:
        return Fraction(n ** (r - 1), r ** (r + 5))
    if kind is ThresholdKind.TURAN_JS_FORMULA:
        return Fraction(js_turan_formula(n, r))
    return Fraction(js_complete_formula(n, r))


def _check_r_n(n: int, r: int) -> None:
    if not 2 <= r <= n:
        raise GraphError(f"need 2 <= r <= n, got n={n}, r={r}")


def tur2_lower_bound(n: int, r: int) -> Fraction:
    """(r-1)/(2r) n^2 - r/8, a lower bound for t_r(n)."""
    _check_r_n(n, r)
    return Fraction(r - 1, 2 * r) * n * n - Fraction(r, 8)


def turr_lower_bound(n: int, r: int) -> Fraction:
    """(n/r)^r - (r^2/16)(n/r)^(r-2), a lower bound for k_r(T_r(n))."""
    _check_r_n(n, r)
    q = Fraction(n, r)
    return q**r - Fraction(r * r, 16) * q ** (r - 2)


def moon_moser_residual(kv: Sequence[int], n: int, s: int, t: int) -> Fraction:
    """LHS - RHS of the Moon-Moser inequality for clique vector ``kv``.

    ``(t+1)k_{t+1}/(t k_t) - n/t  -  ((s+1)k_{s+1}/(s k_s) - n/s)``; the
    inequality asserts this is nonnegative.
    """
    if not 1 <= s < t < n:
        raise GraphError(f"need 1 <= s < t < n, got s={s}, t={t}, n={n}")

    def k(i: int) -> int:
        return kv[i] if i < len(kv) else 0

    if k(t) < 1:
        raise GraphError(f"Moon-Moser needs at least one {t}-clique")

    def term(i: int) -> Fraction:
        return Fraction((i + 1) * k(i + 1), i * k(i)) - Fraction(n, i)

    return term(t) - term(s)


def lemma1_product(r: int, alpha: Fraction) -> Fraction:
    """prod_{s=2}^{r-1} ((r-s)/(rs) + alpha); empty product is 1."""
    return prod((Fraction(r - s, r * s) + alpha for s in range(2, r)), start=Fraction(1))


def lemma1_hypothesis_bound(n: int, r: int, alpha: Fraction) -> Fraction:
    """alpha r^2/(r+1) (n/r)^(r+1), the strict upper bound required of k_{r+1}."""
    return Fraction(alpha) * Fraction(r * r, r + 1) * Fraction(n, r) ** (r + 1)


def lemma1_bound(kv: Sequence[int], n: int, r: int, alpha) -> tuple[bool, Fraction]:
    """(hypothesis_ok, k2_bound) for the clique-ratio lemma.

    ``k2_bound = r k_r / (2 n^(r-2)) * prod_{s=2}^{r-1} ((r-s)/(rs) + alpha)^(-1)``.
    """
    alpha = Fraction(alpha)
    if r < 3:
        raise GraphError(f"lemma bound needs r >= 3, got {r} (r = 2 degenerates to k_2 > k_2)")
    if alpha < 0:
        raise GraphError(f"alpha must be nonnegative, got {alpha}")
    kr = kv[r] if r < len(kv) else 0
    kr1 = kv[r + 1] if r + 1 < len(kv) else 0
    if kr < 1:
        raise GraphError(f"lemma bound needs at least one {r}-clique")
    hyp = kr1 < lemma1_hypothesis_bound(n, r, alpha)
    bound = Fraction(r * kr, 2 * n ** (r - 2)) / lemma1_product(r, alpha)
    return hyp, bound


def lemma2_edge_bound(n: int, r: int, alpha, variant=Lemma2Variant.PROOF_R4) -> Fraction:
    """((r-1)/(2r) - r^3 alpha/2 - r^q/(16 n^2)) n^2 with q = 3 or 4."""
    variant = Lemma2Variant(variant)
    alpha = Fraction(alpha)
    if alpha <= 0 or n < 1 or r < 2:
        raise GraphError(f"need alpha > 0, n >= 1, r >= 2; got alpha={alpha}, n={n}, r={r}")
    q = 3 if variant is Lemma2Variant.STATED_R3 else 4
    return Fraction(r - 1, 2 * r) * n * n - Fraction(r**3, 2) * alpha * n * n - Fraction(r**q, 16)
