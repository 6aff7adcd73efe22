"""Fox free differential calculus and Wada's determinant ratio.

Given a deficiency-1 presentation of a knot group and an explicit
matrix representation rho over an exact field, together with the
abelianization alpha sending generators to powers of t, the twisted
invariant is computed as a ratio of two determinants:

  numerator   = det[ (rho (x) alpha)(d r_i / d g_j) ]  (omit one column)
  denominator = det[ (rho (x) alpha)(g) - I ]           (the omitted g)

This is the module's whole purpose: an oracle that is independent of
any closed-form torsion formula, so the two can be compared on shared
inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .domains import CoefficientDomain
from .errors import (
    DeficiencyMismatch,
    DenominatorVanishes,
    InexactDivision,
    UnknownGenerator,
    WordSyntaxError,
)
from .laurent import LaurentPoly


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupWord:
    """Freely reduced word: tuple of (generator index, exponent +-1)."""

    letters: tuple

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(_reduce(list(self.letters) + list(other.letters)))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "GroupWord":
        base = self if k >= 0 else self.inverse()
        out: list = []
        for _ in range(abs(k)):
            out.extend(base.letters)
        return GroupWord(_reduce(out))

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def total_exponent(self, weights) -> int:
        """Image under the abelianization, as a t-exponent."""
        return sum(e * weights[g] for g, e in self.letters)


IDENTITY = GroupWord(())


def _reduce(letters) -> tuple:
    out: list = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def word_from_letters(letters) -> GroupWord:
    return GroupWord(_reduce(list(letters)))


def parse_word(s: str, gens) -> GroupWord:
    """Parse 'a b^-1 a^-1 b' or the compact case form 'aBAb'."""
    index = {name: i for i, name in enumerate(gens)}
    letters: list = []
    tokens = s.split()
    if len(tokens) > 1 or "^" in s:
        for tok in tokens:
            name, _, exp_s = tok.partition("^")
            if name not in index:
                raise UnknownGenerator(name)
            if "^" in tok and not exp_s:
                raise WordSyntaxError(f"missing exponent in {tok!r}")
            try:
                exp = int(exp_s) if exp_s else 1
            except ValueError as err:
                raise WordSyntaxError(f"bad exponent in {tok!r}") from err
            if exp == 0:
                continue
            sign = 1 if exp > 0 else -1
            letters.extend([(index[name], sign)] * abs(exp))
    else:
        for ch in s.strip():
            lower = ch.lower()
            if lower not in index:
                raise UnknownGenerator(ch)
            letters.append((index[lower], 1 if ch.islower() else -1))
    return GroupWord(_reduce(letters))


def format_word(w: GroupWord, gens) -> str:
    if w.is_identity:
        return "1"
    return " ".join(
        gens[g] + ("" if e == 1 else f"^{e}") for g, e in w.letters
    )


# ---------------------------------------------------------------------------
# presentations and representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple  # GroupWords
    abelianization: tuple  # t-exponent per generator

    def __post_init__(self):
        for r in self.relators:
            if r.total_exponent(self.abelianization) != 0:
                raise ValueError("abelianization does not kill a relator")

    @property
    def deficiency_one(self) -> bool:
        return len(self.relators) == len(self.generators) - 1


@dataclass(frozen=True)
class MatrixRep:
    """Square matrices over an exact field, one per generator."""

    domain: CoefficientDomain
    matrices: tuple  # tuple of row-tuples per generator
    size: int = field(default=0)

    def __post_init__(self):
        if self.size == 0:
            object.__setattr__(self, "size", len(self.matrices[0]))

    def matrix(self, g: int, exp: int = 1):
        m = [list(row) for row in self.matrices[g]]
        return m if exp == 1 else _mat_inverse(self.domain, m)


def _mat_mul(d, a, b):
    n = len(a)
    out = [[d.zero] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            aik = a[i][k]
            if d.is_zero(aik):
                continue
            for j in range(n):
                out[i][j] = d.add(out[i][j], d.mul(aik, b[k][j]))
    return out


def _mat_identity(d, n):
    return [[d.one if i == j else d.zero for j in range(n)] for i in range(n)]


def _mat_inverse(d, a):
    """Gauss-Jordan inverse over a field."""
    n = len(a)
    work = [list(row) + list(ident) for row, ident in zip(a, _mat_identity(d, n))]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not d.is_zero(work[r][col]):
                pivot = r
                break
        if pivot is None:
            raise ZeroDivisionError("singular representation matrix")
        work[col], work[pivot] = work[pivot], work[col]
        inv = d.inv(work[col][col])
        work[col] = [d.mul(inv, c) for c in work[col]]
        for r in range(n):
            if r != col and not d.is_zero(work[r][col]):
                f = work[r][col]
                work[r] = [d.sub(c, d.mul(f, pc)) for c, pc in zip(work[r], work[col])]
    return [row[n:] for row in work]


# ---------------------------------------------------------------------------
# Fox derivatives
# ---------------------------------------------------------------------------

def fox_derivative(w: GroupWord, g: int):
    """d w / d g as a formal sum: list of (sign, prefix GroupWord).

    Satisfies d(uv)/dg = du/dg + u dv/dg with dg/dg = 1 and
    d(g^-1)/dg = -g^-1.
    """
    terms = []
    prefix: list = []
    for gen, exp in w.letters:
        if gen == g:
            if exp == 1:
                terms.append((1, GroupWord(tuple(prefix))))
            else:
                terms.append((-1, GroupWord(_reduce(prefix + [(gen, -1)]))))
        prefix.append((gen, exp))
        prefix = list(_reduce(prefix))
    return terms


# ---------------------------------------------------------------------------
# twisted evaluation and determinants
# ---------------------------------------------------------------------------

def _eval_word(rep: MatrixRep, weights, w: GroupWord):
    """(rho (x) alpha)(w) as (field matrix, t-exponent)."""
    d = rep.domain
    m = _mat_identity(d, rep.size)
    texp = 0
    for g, e in w.letters:
        m = _mat_mul(d, m, rep.matrix(g, e))
        texp += e * weights[g]
    return m, texp


def _terms_to_block(rep: MatrixRep, weights, terms):
    """Formal sum of words -> N x N block of Laurent polynomials."""
    d = rep.domain
    n = rep.size
    block = [[LaurentPoly.zero(d) for _ in range(n)] for _ in range(n)]
    for sign, w in terms:
        m, texp = _eval_word(rep, weights, w)
        for i in range(n):
            for j in range(n):
                c = m[i][j]
                if d.is_zero(c):
                    continue
                mono = LaurentPoly(d, {texp: c if sign == 1 else d.neg(c)})
                block[i][j] = block[i][j] + mono
    return block


def poly_det(d: CoefficientDomain, rows) -> LaurentPoly:
    """Determinant of a matrix of Laurent polynomials over a field.

    Cofactor expansion up to 4 x 4, fraction-free elimination with
    exact polynomial division above.
    """
    n = len(rows)
    if n <= 4:
        return _det_cofactor(d, rows)
    return _det_bareiss_poly(d, [list(r) for r in rows])


def _det_cofactor(d, rows) -> LaurentPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = LaurentPoly.zero(d)
    for j in range(n):
        a = rows[0][j]
        if a.is_zero:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = a * _det_cofactor(d, minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def poly_exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """f / g when g divides f exactly (field coefficients)."""
    d = f.domain
    if g.is_zero:
        raise InexactDivision("division by zero polynomial")
    if f.is_zero:
        return f
    shift = f.min_exp - g.min_exp
    fc = f.to_ordinary().coeff_list()
    gc = g.to_ordinary().coeff_list()
    out = [d.zero] * (len(fc) - len(gc) + 1)
    inv_lead = d.inv(gc[-1])
    while len(fc) >= len(gc) and any(not d.is_zero(c) for c in fc):
        while fc and d.is_zero(fc[-1]):
            fc.pop()
        if len(fc) < len(gc):
            break
        q = d.mul(fc[-1], inv_lead)
        pos = len(fc) - len(gc)
        out[pos] = q
        for i, c in enumerate(gc):
            fc[pos + i] = d.sub(fc[pos + i], d.mul(q, c))
        fc.pop()
    if any(not d.is_zero(c) for c in fc):
        raise InexactDivision("polynomial division left a remainder")
    return LaurentPoly.from_coeffs(d, out, min_exp=shift)


def _det_bareiss_poly(d, a) -> LaurentPoly:
    n = len(a)
    sign = 1
    prev = LaurentPoly.one(d)
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(d)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = poly_exact_div(num, prev)
            a[i][k] = LaurentPoly.zero(d)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def wada_invariant(
    pres: Presentation, rep: MatrixRep, denominator_generator: int
) -> tuple:
    """(numerator, denominator) Laurent polynomials of Wada's ratio.

    The numerator is the determinant of the Fox-derivative block matrix
    with the chosen generator's column removed; the denominator is
    det((rho (x) alpha)(g) - I) for that generator.  Their ratio is the
    twisted torsion up to a unit times a power of t.
    """
    if not pres.deficiency_one:
        raise DeficiencyMismatch(
            f"{len(pres.generators)} generators, {len(pres.relators)} relators"
        )
    d = rep.domain
    weights = pres.abelianization
    g0 = denominator_generator
    m, texp = _eval_word(rep, weights, GroupWord(((g0, 1),)))
    den_rows = [
        [
            LaurentPoly.from_terms(
                d, [(texp, m[i][j]), (0, d.neg(d.one) if i == j else d.zero)]
            )
            for j in range(rep.size)
        ]
        for i in range(rep.size)
    ]
    den = poly_det(d, den_rows)
    if den.is_zero:
        raise DenominatorVanishes(
            f"det((rho x alpha)(g_{g0}) - I) = 0; choose another generator"
        )
    cols = [j for j in range(len(pres.generators)) if j != g0]
    big: list = []
    for rel in pres.relators:
        block_rows = [[] for _ in range(rep.size)]
        for j in cols:
            block = _terms_to_block(rep, weights, fox_derivative(rel, j))
            for i in range(rep.size):
                block_rows[i].extend(block[i])
        big.extend(block_rows)
    num = poly_det(d, big)
    return num, den


def fox_identity_holds(pres: Presentation, rep: MatrixRep, rel: GroupWord) -> bool:
    """Check sum_g (dr/dg)((rho x alpha)(g) - 1) = (rho x alpha)(r) - 1."""
    d = rep.domain
    n = rep.size
    weights = pres.abelianization
    zero = LaurentPoly.zero(d)
    total = [[zero for _ in range(n)] for _ in range(n)]
    for g in range(len(pres.generators)):
        block = _terms_to_block(rep, weights, fox_derivative(rel, g))
        gm, gtexp = _eval_word(rep, weights, GroupWord(((g, 1),)))
        for i in range(n):
            for j in range(n):
                acc = zero
                for k in range(n):
                    gkj = LaurentPoly.from_terms(
                        d,
                        [(gtexp, gm[k][j]), (0, d.neg(d.one) if k == j else d.zero)],
                    )
                    acc = acc + block[i][k] * gkj
                total[i][j] = total[i][j] + acc
    rm, rtexp = _eval_word(rep, weights, rel)
    for i in range(n):
        for j in range(n):
            expect = LaurentPoly.from_terms(
                d, [(rtexp, rm[i][j]), (0, d.neg(d.one) if i == j else d.zero)]
            )
            if total[i][j] != expect:
                return False
    return True
