"""Exact arithmetic in GF(q) for prime and prime-power q.

Elements are represented by integers in ``[0, q)``.  For a prime field the
integer is the residue itself; for ``q = p^e`` with ``e > 1`` the integer
``c_0 + c_1 p + ... + c_{e-1} p^{e-1}`` stands for the polynomial
``c_0 + c_1 x + ... + c_{e-1} x^{e-1}`` modulo the field's irreducible
modulus.  Multiplication in extension fields goes through discrete-log
(Zech) tables built once at construction.

Besides the scalar :class:`FieldElem` wrapper, :class:`FieldSpec` exposes
vectorised numpy operations (``vadd``, ``vmul``, ...) used by the linear
algebra and search code.
"""

from __future__ import annotations

import functools
from typing import Iterable

import numpy as np

from .errors import DivisionByZero, MixedFields, NotPrimePower, TooLarge

DEFAULT_MAX_Q = 2**16
# full q x q add/mul tables are only materialised below this size
_TABLE_LIMIT = 1024


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorisation, adequate for the table-sized fields used here."""
    out: dict[int, int] = {}
    m = n
    f = 2
    while f * f <= m:
        while m % f == 0:
            out[f] = out.get(f, 0) + 1
            m //= f
        f += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


# -- polynomials over GF(p), coefficient lists low -> high -------------------

def _digits(value: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(value % p)
        value //= p
    return out


def _undigits(coeffs: Iterable[int], p: int) -> int:
    value = 0
    for c in reversed(list(coeffs)):
        value = value * p + c
    return value


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    e = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # modulus is monic
    for deg in range(len(prod) - 1, e - 1, -1):
        c = prod[deg]
        if c:
            for j in range(e + 1):
                prod[deg - e + j] = (prod[deg - e + j] - c * modulus[j]) % p
    out = prod[:e] + [0] * max(0, e - len(prod))
    return out


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    for deg in range(len(a) - 1, db - 1, -1):
        c = a[deg] * inv_lead % p
        if c:
            for j in range(db + 1):
                a[deg - db + j] = (a[deg - db + j] - c * b[j]) % p
    return a[:db]


def is_irreducible(modulus: list[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= e/2."""
    e = len(modulus) - 1
    for deg in range(1, e // 2 + 1):
        for low in range(p**deg):
            divisor = _digits(low, p, deg) + [1]
            if not any(_poly_rem(modulus, divisor, p)):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> list[int]:
    # ordered by the integer encoding of the non-leading coefficients
    for low in range(p**e):
        modulus = _digits(low, p, e) + [1]
        if modulus[0] == 0:
            continue
        if is_irreducible(modulus, p):
            return modulus
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """The finite field GF(q) with a fixed generator ``beta`` of ``K*``.

    Construct through :func:`field_make`; instances are immutable and cached,
    so two specs for the same ``q`` are the same object.
    """

    __slots__ = (
        "q", "p", "e", "modulus", "beta",
        "exp_table", "log_table", "inv_table", "_add", "_mul",
    )

    def __init__(self, q: int, p: int, e: int, modulus: tuple[int, ...] | None):
        self.q = q
        self.p = p
        self.e = e
        self.modulus = modulus
        self._add = None
        self._mul = None
        self.beta = self._find_beta()
        exp = np.zeros(2 * max(q - 1, 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for m in range(q - 1):
            exp[m] = x
            log[x] = m
            x = self._mul_scalar_slow(x, self.beta)
        exp[q - 1:] = exp[: len(exp) - (q - 1)]
        self.exp_table = exp
        self.log_table = log
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = exp[(q - 1 - log[a]) % (q - 1)]
        self.inv_table = inv
        for arr in (exp, log, inv):
            arr.setflags(write=False)

    # -- construction helpers -------------------------------------------------

    def _mul_scalar_slow(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        da = _digits(a, self.p, self.e)
        db = _digits(b, self.p, self.e)
        return _undigits(_poly_mulmod(da, db, list(self.modulus), self.p), self.p)

    def _pow_slow(self, a: int, m: int) -> int:
        result = 1
        base = a
        while m:
            if m & 1:
                result = self._mul_scalar_slow(result, base)
            base = self._mul_scalar_slow(base, base)
            m >>= 1
        return result

    def _find_beta(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        primes = list(factorize(order))
        for g in range(2, self.q):
            if all(self._pow_slow(g, order // f) != 1 for f in primes):
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.q == other.q and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.q, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"FieldSpec(q={self.q}, p={self.p}, e=1, beta={self.beta})"
        return (f"FieldSpec(q={self.q}, p={self.p}, e={self.e}, "
                f"modulus={self.modulus}, beta={self.beta})")

    def __reduce__(self):
        return (field_make, (self.q,))

    def __call__(self, value: int) -> "FieldElem":
        return FieldElem(self, value)

    @property
    def is_prime(self) -> bool:
        return self.e == 1

    def elements(self) -> list["FieldElem"]:
        return [FieldElem(self, a) for a in range(self.q)]

    def modulus_str(self) -> str:
        if self.modulus is None:
            return ""
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(("" if c == 1 else str(c)) + ("x" if i == 1 else f"x^{i}"))
        return " + ".join(terms)

    # -- scalar ops on raw ints -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return _undigits([(x + y) % self.p for x, y in
                          zip(_digits(a, self.p, self.e), _digits(b, self.p, self.e))], self.p)

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return _undigits([(-x) % self.p for x in _digits(a, self.p, self.e)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return a * b % self.p
        return int(self.exp_table[self.log_table[a] + self.log_table[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero in GF(%d)" % self.q)
        return int(self.inv_table[a])

    def pow(self, a: int, m: int) -> int:
        if m == 0:
            return 1
        if a == 0:
            if m < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return int(self.exp_table[(int(self.log_table[a]) * m) % (self.q - 1)])

    def beta_pow(self, m: int) -> int:
        """``beta**m`` for any integer exponent."""
        return int(self.exp_table[m % (self.q - 1)])

    # -- vectorised ops on integer arrays ---------------------------------------

    @property
    def add_table(self) -> np.ndarray:
        if self._add is None:
            self._build_tables()
        return self._add

    @property
    def mul_table(self) -> np.ndarray:
        if self._mul is None:
            self._build_tables()
        return self._mul

    @property
    def neg_table(self) -> np.ndarray:
        return self.vneg(np.arange(self.q, dtype=np.int64))

    def _build_tables(self) -> None:
        if self.q > _TABLE_LIMIT:
            raise TooLarge(f"q={self.q} too large for dense operation tables")
        a = np.arange(self.q, dtype=np.int64)
        add = self._vadd_digits(a[:, None], a[None, :])
        mul = self._vmul_logs(a[:, None], a[None, :])
        add.setflags(write=False)
        mul.setflags(write=False)
        self._add = add
        self._mul = mul

    def _vadd_digits(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = np.zeros(a.shape, dtype=np.int64)
        place = 1
        for _ in range(self.e):
            out += ((a // place % self.p + b // place % self.p) % self.p) * place
            place *= self.p
        return out

    def _vmul_logs(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la = self.log_table[a]
        lb = self.log_table[b]
        out = self.exp_table[np.where((la < 0) | (lb < 0), 0, la + lb)]
        return np.where((la < 0) | (lb < 0), 0, out)

    def vadd(self, a, b) -> np.ndarray:
        if self.e == 1:
            return (np.asarray(a, dtype=np.int64) + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, dtype=np.int64), b)
        if self.q <= _TABLE_LIMIT:
            return self.add_table[a, b]
        return self._vadd_digits(a, b)

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        out = np.zeros(a.shape, dtype=np.int64)
        place = 1
        for _ in range(self.e):
            out += ((-(a // place % self.p)) % self.p) * place
            place *= self.p
        return out

    def vsub(self, a, b) -> np.ndarray:
        if self.e == 1:
            return (np.asarray(a, dtype=np.int64) - b) % self.p
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        if self.e == 1:
            return (np.asarray(a, dtype=np.int64) * b) % self.p
        return self._vmul_logs(a, b)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero in GF(%d)" % self.q)
        return self.inv_table[a]

    def vpow(self, a, m: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if m == 0:
            return np.ones(a.shape, dtype=np.int64)
        la = self.log_table[a]
        out = self.exp_table[(la * m) % (self.q - 1)]
        return np.where(la < 0, 0, out)


class FieldElem:
    """An element of a :class:`FieldSpec`; equality is representational."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        value = int(value)
        if field.e == 1:
            value %= field.p
        elif not 0 <= value < field.q:
            raise ValueError(f"{value} is not a valid element encoding for GF({field.q})")
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise MixedFields(f"GF({self.field.q}) vs GF({other.field.q})")
            return other.value
        if isinstance(other, (int, np.integer)):
            return FieldElem(self.field, int(other)).value
        raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __truediv__(self, other):
        return self * FieldElem(self.field, self.field.inv(self._coerce(other)))

    def __pow__(self, m: int):
        return FieldElem(self.field, self.field.pow(self.value, m))

    def inv(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            try:
                return self.value == FieldElem(self.field, int(other)).value
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF({self.field.q})({self.value})"


@functools.lru_cache(maxsize=None)
def _make(q: int) -> FieldSpec:
    primes = factorize(q)
    if len(primes) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    (p, e), = primes.items()
    modulus = None if e == 1 else tuple(_smallest_irreducible(p, e))
    return FieldSpec(q, p, e, modulus)


def field_make(q: int, max_q: int = DEFAULT_MAX_Q) -> FieldSpec:
    """Return the (cached) field with ``q`` elements.

    For prime ``q`` the generator is the smallest primitive root; for
    ``q = p^e`` the modulus is the smallest monic irreducible polynomial
    (ordered by the integer encoding of its lower coefficients) and the
    generator is the smallest-encoded primitive element.
    """
    q = int(q)
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    if q > max_q:
        raise TooLarge(f"q={q} exceeds the table limit {max_q}")
    return _make(q)


def order(field: FieldSpec, a: int) -> int:
    """Multiplicative order of a nonzero element (brute force)."""
    if a == 0:
        raise DivisionByZero("zero has no multiplicative order")
    x = a
    m = 1
    while x != 1:
        x = field.mul(x, a)
        m += 1
    return m
