"""Finite fields F_{p^D}, their arithmetic and embeddings between subfields.

Elements are plain integers in ``[0, p^D)``: digit ``i`` in base ``p`` is the
coefficient of ``x^i`` in the polynomial representative.  The
:class:`ExtensionField` object carries the arithmetic; :class:`FieldElement`
is a thin operator-overloading wrapper for interactive use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

# Fields up to this order get log/exp tables; larger ones use polynomial
# arithmetic on digit lists.
TABLE_LIMIT = 1 << 16
# Odd-characteristic fields up to this order also get an addition table.
ADD_TABLE_LIMIT = 729
# Hard ceiling on field order (element reprs stay machine integers).
MAX_ORDER = 1 << 62


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over F_p as coefficient lists, low degree first, no trailing 0s


def _digits(a: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    a = 0
    for c in reversed(ds):
        a = a * p + c
    return a


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 1)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return _trim(q), a


def _poly_mod(a, b, p):
    return _poly_divmod(a, b, p)[1]


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base, e, mod, p):
    result = [1]
    base = _poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), mod, p)
        base = _poly_mod(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def is_irreducible(coeffs, p: int) -> bool:
    """Ben-Or test: ``f`` is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= deg/2."""
    f = _trim(list(coeffs))
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if f[0] == 0:
        return False
    h = [0, 1]
    for _ in range(deg // 2):
        h = _poly_powmod(h, p, f, p)
        g = _poly_gcd(f, _poly_sub(h, [0, 1], p), p)
        if len(g) > 1:
            return False
    return True


# ---------------------------------------------------------------------------


class ExtensionField:
    """The field F_{p^D} = F_p[x]/(modulus).

    Args:
        p: characteristic.
        degree: extension degree ``D`` over F_p.
        modulus: optional integer encoding of a monic irreducible of degree
            ``D`` (base-``p`` digits, low degree first).  Defaults to the
            canonical modulus, the smallest such integer.
    """

    def __init__(self, p: int, degree: int, modulus: int | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if degree < 1:
            raise ValueError("degree must be positive")
        if p**degree > MAX_ORDER:
            raise ValueError(f"field order {p}^{degree} exceeds 2^62")
        self.p = p
        self.degree = degree
        self.order = p**degree
        if modulus is None:
            modulus = _canonical_modulus(p, degree)
        coeffs = _digits(modulus, p, degree + 1)
        if modulus // p**degree != 1 or not is_irreducible(coeffs, p):
            raise ValueError(f"{modulus} does not encode a monic irreducible of degree {degree} over F_{p}")
        self.modulus = modulus
        self.coeffs = tuple(coeffs)
        self._tables = None

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and (self.p, self.degree, self.modulus) == (
            other.p,
            other.degree,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.degree, self.modulus))

    def __repr__(self):
        return f"ExtensionField({self.spec})"

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_tables"] = None
        return state

    @property
    def spec(self) -> str:
        return f"{self.p}^{self.degree}:{self.modulus}"

    @property
    def gen(self) -> int:
        """The class of ``x`` (a root of the modulus)."""
        if self.degree == 1:
            return (-self.coeffs[0]) % self.p
        return self.p

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def digits(self, a: int) -> list[int]:
        return _digits(a, self.p, self.degree)

    # -- tables -----------------------------------------------------------

    def _build_tables(self):
        p, Q = self.p, self.order
        g = None
        factors = _prime_factors(Q - 1)
        for cand in range(1, Q):
            if all(self._slow_pow(cand, (Q - 1) // r) != 1 for r in factors):
                g = cand
                break
        exp = [0] * (2 * (Q - 1))
        log = [0] * Q
        a = 1
        for i in range(Q - 1):
            exp[i] = a
            log[a] = i
            a = self._slow_mul(a, g)
        for i in range(Q - 1, 2 * (Q - 1)):
            exp[i] = exp[i - (Q - 1)]
        add = neg = None
        if p != 2:
            neg = [self._slow_neg(a) for a in range(Q)]
            if Q <= ADD_TABLE_LIMIT:
                add = [[self._slow_add(a, b) for b in range(Q)] for a in range(Q)]
        self._tables = (exp, log, add, neg, g)

    @property
    def primitive_element(self) -> int:
        """Smallest-repr generator of the multiplicative group."""
        if self.order > TABLE_LIMIT:
            n = self.order - 1
            factors = _prime_factors(n)  # trial division
            return next(g for g in range(2, self.order) if all(self.pow(g, n // f) != 1 for f in factors))
        if self._tables is None:
            self._build_tables()
        return self._tables[4]

    # -- reference arithmetic on digit lists -------------------------------

    def _slow_add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        out, w = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * w
            w *= p
        return out

    def _slow_neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        out, w = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * w
            w *= p
        return out

    def _slow_mul(self, a, b):
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> self.degree:
                    a ^= self.modulus
            return r
        p, D = self.p, self.degree
        prod = _poly_mul(_trim(_digits(a, p, D)), _trim(_digits(b, p, D)), p)
        return _undigits(_poly_mod(prod, list(self.coeffs), p), p)

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    # -- public arithmetic on reprs ---------------------------------------

    def _check(self, a):
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of F_{self.p}^{self.degree}")

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.order <= TABLE_LIMIT:
            if self._tables is None:
                self._build_tables()
            add = self._tables[2]
            if add is not None:
                return add[a][b]
        return self._slow_add(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.order <= TABLE_LIMIT:
            if self._tables is None:
                self._build_tables()
            return self._tables[3][a]
        return self._slow_neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.order <= TABLE_LIMIT:
            if self._tables is None:
                self._build_tables()
            exp, log = self._tables[0], self._tables[1]
            return exp[log[a] + log[b]]
        return self._slow_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.order <= TABLE_LIMIT:
            if self._tables is None:
                self._build_tables()
            exp, log = self._tables[0], self._tables[1]
            return exp[(self.order - 1 - log[a]) % (self.order - 1)]
        return self._slow_pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.order <= TABLE_LIMIT:
            if self._tables is None:
                self._build_tables()
            exp, log = self._tables[0], self._tables[1]
            return exp[(log[a] * e) % (self.order - 1)]
        return self._slow_pow(a, e % (self.order - 1))

    def frobenius(self, a: int, Q: int) -> int:
        """Return ``a**Q`` where ``Q`` must be a positive power of ``p``."""
        s, r = 0, Q
        while r > 1 and r % self.p == 0:
            r //= self.p
            s += 1
        if r != 1 or s < 1:
            raise ValueError(f"{Q} is not a positive power of {self.p}")
        return self.pow(a, Q)

    def from_int(self, c: int) -> int:
        """Image of the integer ``c`` under Z -> F_p -> F_{p^D}."""
        return c % self.p


@lru_cache(maxsize=None)
def _canonical_modulus(p: int, degree: int) -> int:
    base = p**degree
    for cand in range(base, 2 * base):
        if is_irreducible(_digits(cand, p, degree + 1), p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@lru_cache(maxsize=None)
def canonical_field(p: int, degree: int) -> ExtensionField:
    """F_{p^D} with the lexicographically smallest monic irreducible modulus."""
    return ExtensionField(p, degree)


def field_of_order(q: int) -> ExtensionField:
    p, e = prime_power(q)
    return canonical_field(p, e)


_SPEC_RE = re.compile(r"^\s*(\d+)\^(\d+)(?::(\d+))?\s*$")


def parse_field_spec(text: str) -> ExtensionField:
    """Parse ``p^D`` or ``p^D:modulus_int``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise ValueError(f"bad field spec {text!r}; expected p^D or p^D:modulus")
    p, D = int(m.group(1)), int(m.group(2))
    if m.group(3) is None:
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        return canonical_field(p, D)
    F = ExtensionField(p, D, int(m.group(3)))
    canon = canonical_field(p, D)
    return canon if canon == F else F


@dataclass(frozen=True)
class FieldElement:
    field: ExtensionField
    value: int

    def __post_init__(self):
        self.field._check(self.value)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, b))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, Q: int):
        return FieldElement(self.field, self.field.frobenius(self.value, Q))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field.spec}[{self.value}]"


# ---------------------------------------------------------------------------
# embeddings and coordinates


class SubfieldEmbedding:
    """Field homomorphism ``sub -> sup`` sending ``x`` to ``image_of_generator``."""

    def __init__(self, sub: ExtensionField, sup: ExtensionField, image_of_generator: int):
        if sub.p != sup.p or sup.degree % sub.degree:
            raise ValueError(f"F_{sub.p}^{sub.degree} is not a subfield of F_{sup.p}^{sup.degree}")
        self.sub = sub
        self.sup = sup
        self.image_of_generator = image_of_generator
        z = image_of_generator
        # Horner evaluation of the modulus at z must vanish
        acc = 0
        for c in reversed(sub.coeffs):
            acc = sup.add(sup.mul(acc, z), sup.from_int(c))
        if acc != 0:
            raise ValueError("image_of_generator is not a root of the subfield modulus")
        self._table = None
        self._inverse = None

    @property
    def degree(self) -> int:
        """Degree of ``sup`` over ``sub``."""
        return self.sup.degree // self.sub.degree

    @property
    def q(self) -> int:
        return self.sub.order

    def _evaluate(self, a: int) -> int:
        sup, z = self.sup, self.image_of_generator
        acc = 0
        for c in reversed(self.sub.digits(a)):
            acc = sup.add(sup.mul(acc, z), sup.from_int(c))
        return acc

    @property
    def table(self) -> list[int]:
        if self._table is None:
            self._table = [self._evaluate(a) for a in range(self.sub.order)]
        return self._table

    def __call__(self, a: int) -> int:
        if self.sub.order <= TABLE_LIMIT:
            return self.table[a]
        return self._evaluate(a)

    def image(self) -> list[int]:
        return list(self.table)

    def preimage(self, z: int) -> int:
        if self._inverse is None:
            self._inverse = {v: a for a, v in enumerate(self.table)}
        try:
            return self._inverse[z]
        except KeyError:
            raise ValueError(f"{z} is not in the image of the subfield") from None

    def contains(self, z: int) -> bool:
        return self.sup.pow(z, self.sub.order) == z

    def power_basis(self) -> list[int]:
        """``1, x, ..., x^{r-1}`` for ``x`` the generator of ``sup``; a basis over ``sub``."""
        g = self.sup.gen
        return [self.sup.pow(g, i) for i in range(self.degree)]

    def __eq__(self, other):
        return (
            isinstance(other, SubfieldEmbedding)
            and self.sub == other.sub
            and self.sup == other.sup
            and self.image_of_generator == other.image_of_generator
        )

    def __hash__(self):
        return hash((self.sub, self.sup, self.image_of_generator))

    def __repr__(self):
        return f"SubfieldEmbedding({self.sub.spec} -> {self.sup.spec}, x -> {self.image_of_generator})"

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_table"] = state["_inverse"] = None
        return state


def build_embedding(sub: ExtensionField, sup: ExtensionField) -> SubfieldEmbedding:
    """Embed ``sub`` into ``sup`` via the smallest-repr root of sub's modulus."""
    if sub.p != sup.p:
        raise ValueError("fields have different characteristic")
    if sup.degree % sub.degree:
        raise ValueError(f"degree {sub.degree} does not divide {sup.degree}")
    if sub == sup:
        return SubfieldEmbedding(sub, sup, sub.gen)
    for z in range(sup.order):
        acc = 0
        for c in reversed(sub.coeffs):
            acc = sup.add(sup.mul(acc, z), sup.from_int(c))
        if acc == 0:
            return SubfieldEmbedding(sub, sup, z)
    raise RuntimeError("no root of the subfield modulus found")  # pragma: no cover


@lru_cache(maxsize=None)
def tower(q: int, m: int) -> SubfieldEmbedding:
    """Canonical embedding F_q -> F_{q^m}."""
    p, e = prime_power(q)
    return build_embedding(canonical_field(p, e), canonical_field(p, e * m))


@lru_cache(maxsize=None)
def embedding_between(sub: ExtensionField, sup: ExtensionField) -> SubfieldEmbedding:
    return build_embedding(sub, sup)


def _solve_mod_p(A: list[list[int]], b: list[int], p: int):
    """Solve ``A c = b`` over F_p.  Returns (solution or None, rank)."""
    rows, cols = len(A), len(A[0]) if A else 0
    M = [list(A[i]) + [b[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] % p), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], p - 2, p)
        M[r] = [v * inv % p for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(vi - f * vr) % p for vi, vr in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][cols] for i in range(r, rows)):
        return None, r
    sol = [0] * cols
    for i, c in enumerate(pivots):
        sol[c] = M[i][cols]
    return sol, r


class Coordinates:
    """Coordinates of ``sup`` elements with respect to a ``sub``-linearly independent list."""

    def __init__(self, emb: SubfieldEmbedding, basis):
        self.emb = emb
        self.basis = tuple(basis)
        sub, sup = emb.sub, emb.sup
        self._fast = sub.degree == 1 and self.basis == tuple(emb.power_basis())
        cols = []
        for b in self.basis:
            for j in range(sub.degree):
                unit = emb(sub.p**j)
                cols.append(sup.digits(sup.mul(unit, b)))
        self._matrix = [[col[i] for col in cols] for i in range(sup.degree)]
        _, rank = _solve_mod_p(self._matrix, [0] * sup.degree, sup.p) if cols else (None, 0)
        if rank < len(cols):
            raise ValueError("basis is linearly dependent over the subfield")

    def __call__(self, a: int) -> list[int]:
        sub, sup = self.emb.sub, self.emb.sup
        if self._fast:
            return sup.digits(a)
        if a == 0:
            return [0] * len(self.basis)
        sol, _ = _solve_mod_p(self._matrix, sup.digits(a), sup.p)
        if sol is None:
            raise ValueError(f"{a} is outside the span of the basis")
        D = sub.degree
        return [_undigits(sol[i * D : (i + 1) * D], sub.p) for i in range(len(self.basis))]

    def element(self, coeffs) -> int:
        """Inverse map: ``sum coeffs[i] * basis[i]``."""
        sup = self.emb.sup
        acc = 0
        for c, b in zip(coeffs, self.basis):
            if c:
                acc = sup.add(acc, sup.mul(self.emb(c), b))
        return acc


@lru_cache(maxsize=256)
def coordinates(emb: SubfieldEmbedding, basis: tuple | None = None) -> Coordinates:
    """Cached :class:`Coordinates`; ``basis`` defaults to the power basis."""
    if basis is None:
        basis = tuple(emb.power_basis())
    return Coordinates(emb, basis)


def coords(a, basis, emb: SubfieldEmbedding) -> list[int]:
    """Unique coordinates of ``a`` over ``emb.sub`` in the given basis of (part of) ``emb.sup``."""
    a = int(a)
    return coordinates(emb, tuple(int(b) for b in basis))(a)


# functional aliases


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def frobenius(a: FieldElement, Q: int) -> FieldElement:
    return a.frobenius(Q)
