"""Integer Laurent polynomials in the color variables t_1 .. t_m."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .exact_scalars import CyclotomicNumber, RootOfUnity, _power_basis_rows, euler_phi


class LaurentPolynomial:
    """A Laurent polynomial with integer coefficients.

    Terms are kept in a mapping from exponent tuples (one slot per
    variable) to nonzero integer coefficients.

    >>> p = LaurentPolynomial.from_string("3*t1^2*t2^-1 - 1", 2)
    >>> str(p)
    '3*t1^2*t2^-1 - 1'
    >>> str(p - p)
    '0'
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError("exponent arity mismatch")
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, c: int, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int, power: int = 1) -> "LaurentPolynomial":
        """t_i^power with 1-based variable index i."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        exp = [0] * nvars
        exp[i - 1] = power
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def from_string(cls, text: str, nvars: int) -> "LaurentPolynomial":
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty polynomial string")
        # split into signed terms; '-' after '^' belongs to an exponent
        terms = []
        cur = ""
        for idx, ch in enumerate(text):
            if ch in "+-" and idx > 0 and text[idx - 1] != "^":
                terms.append(cur)
                cur = ch
            else:
                cur += ch
        terms.append(cur)
        acc: dict[tuple, int] = {}
        for term in terms:
            if term in ("", "+", "-"):
                raise ValueError(f"malformed term in {text!r}")
            sign = 1
            if term[0] == "+":
                term = term[1:]
            elif term[0] == "-":
                sign = -1
                term = term[1:]
            coeff = sign
            exp = [0] * nvars
            for factor in term.split("*"):
                if not factor:
                    raise ValueError(f"malformed term in {text!r}")
                if factor[0] == "t":
                    body = factor[1:]
                    if "^" in body:
                        var_s, pow_s = body.split("^", 1)
                        power = int(pow_s)
                    else:
                        var_s, power = body, 1
                    i = int(var_s) if var_s else 1
                    if not 1 <= i <= nvars:
                        raise ValueError(f"variable t{i} out of range 1..{nvars}")
                    exp[i - 1] += power
                else:
                    coeff *= int(factor)
            key = tuple(exp)
            acc[key] = acc.get(key, 0) + coeff
        return cls(nvars, acc)

    # -- structure -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.nvars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def max_var_used(self) -> int:
        used = 0
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used = max(used, i + 1)
        return used

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.nvars)
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        raise TypeError

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPolynomial(self.nvars, out)

    __rmul__ = __mul__

    # -- specialization ---------------------------------------------------

    def evaluate_exact(self, zetas: list[RootOfUnity], conductor: int | None = None) -> CyclotomicNumber:
        """Substitute exact roots of unity for the variables."""
        if len(zetas) != self.nvars:
            raise ValueError("need one root of unity per variable")
        if conductor is not None:
            n = conductor
        elif zetas:
            n = lcm(*(z.denominator for z in zetas))
        else:
            n = 1
        exps = [z.numerator * (n // z.denominator) for z in zetas]
        deg = euler_phi(n)
        rows = _power_basis_rows(n)
        out = [Fraction(0)] * deg
        for exp, c in self.terms.items():
            k = sum(a * e for a, e in zip(exps, exp)) % n
            row = rows[k]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
        return CyclotomicNumber(n, out)

    def evaluate_complex(self, zs: list[complex]) -> complex:
        if len(zs) != self.nvars:
            raise ValueError("need one value per variable")
        total = 0j
        for exp, c in self.terms.items():
            val = complex(c)
            for z, e in zip(zs, exp):
                if e:
                    val *= z**e
            total += val
        return total

    def evaluate_at_one(self) -> int:
        """The augmentation t_i -> 1."""
        return sum(self.terms.values())

    # -- formatting ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(f"t{i + 1}")
                elif e:
                    factors.append(f"t{i + 1}^{e}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            pieces.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.nvars}, {str(self)!r})"
