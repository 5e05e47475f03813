"""Exact sparse multivariate polynomial arithmetic.

Everything is computed over a fixed :class:`VarTable` whose names split into
torus characters (t-class) and residue variables (z-class).  A monomial is
packed into a single integer, 16 bits per variable, so that monomial
multiplication is one big-int addition.  Coefficients are exact rationals.

The rational-function shape used throughout is :class:`FactoredRatFunc`:
a polynomial numerator over a multiset of affine-linear denominator factors.
Denominators are never expanded; cancellation happens only by syntactic
equality of normalized linear factors.

All values are immutable after construction and safe to share between
threads; every operation is a pure function of its inputs.
"""

from __future__ import annotations

from .errors import InexactDivision, MismatchedTables, TorusIntError
from .rational import ONE, ZERO, Q, as_rational, is_rational, qstr

_SHIFT = 16
_MASK = (1 << _SHIFT) - 1
_MAX_EXP = _MASK


class VarTable:
    """Ordered variable names, partitioned into t-class and z-class.

    The order (all t variables first, then all z variables) is the graded-lex
    tie-break order used for printing and serialization.
    """

    __slots__ = ("t_names", "z_names", "names", "_index", "_hash")

    def __init__(self, t_names, z_names):
        t_names = tuple(t_names)
        z_names = tuple(z_names)
        names = t_names + z_names
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        self.t_names = t_names
        self.z_names = z_names
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}
        self._hash = hash((t_names, z_names))

    @classmethod
    def standard(cls, n_t, n_z, t_prefix="t", z_prefix="z", start=1):
        """t1..t_n and z1..z_m."""
        return cls(
            tuple(f"{t_prefix}{i}" for i in range(start, start + n_t)),
            tuple(f"{z_prefix}{i}" for i in range(start, start + n_z)),
        )

    @property
    def nvars(self):
        return len(self.names)

    @property
    def t_count(self):
        return len(self.t_names)

    @property
    def z_count(self):
        return len(self.z_names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def is_z(self, i):
        return i >= len(self.t_names)

    def t_indices(self):
        return range(len(self.t_names))

    def z_indices(self):
        return range(len(self.t_names), self.nvars)

    def pack(self, exps):
        key = 0
        for i, e in enumerate(exps):
            if e:
                if e < 0 or e > _MAX_EXP:
                    raise ValueError(f"exponent {e} out of range")
                key |= e << (_SHIFT * i)
        return key

    def unpack(self, key):
        exps = []
        for _ in range(self.nvars):
            exps.append(key & _MASK)
            key >>= _SHIFT
        return tuple(exps)

    def key_degree(self, key):
        d = 0
        while key:
            d += key & _MASK
            key >>= _SHIFT
        return d

    def key_exp(self, key, i):
        return (key >> (_SHIFT * i)) & _MASK

    def var_key(self, i):
        return 1 << (_SHIFT * i)

    def sort_key(self, key):
        """Graded lex: total degree first, then exponents in table order."""
        return (self.key_degree(key), self.unpack(key))

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, VarTable) and self.names == other.names and self.t_names == other.t_names

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"VarTable(t={list(self.t_names)}, z={list(self.z_names)})"


def _same_table(a, b):
    if a is b or a == b:
        return
    raise MismatchedTables(f"{a!r} vs {b!r}")


def _monomial_str(table, key):
    parts = []
    for i, e in enumerate(table.unpack(key)):
        if e == 1:
            parts.append(table.names[i])
        elif e > 1:
            parts.append(f"{table.names[i]}^{e}")
    return "*".join(parts)


class Polynomial:
    """Sparse polynomial: packed monomial key -> nonzero rational coefficient."""

    __slots__ = ("table", "terms")

    def __init__(self, table, terms=None, _trust=False):
        self.table = table
        if terms is None:
            self.terms = {}
        elif _trust:
            self.terms = terms
        else:
            self.terms = {k: as_rational(c) for k, c in terms.items() if c}

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, table):
        return cls(table, {}, _trust=True)

    @classmethod
    def const(cls, table, c):
        c = as_rational(c)
        return cls(table, {0: c} if c else {}, _trust=True)

    @classmethod
    def variable(cls, table, name):
        return cls(table, {table.var_key(table.index(name)): ONE}, _trust=True)

    @classmethod
    def monomial(cls, table, exps, coeff=ONE):
        """exps: mapping name -> exponent."""
        key = 0
        for name, e in exps.items():
            key += e << (_SHIFT * table.index(name))
        coeff = as_rational(coeff)
        return cls(table, {key: coeff} if coeff else {}, _trust=True)

    # -- predicates and measures ------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """Max total degree, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        kd = self.table.key_degree
        return max(kd(k) for k in self.terms)

    def degree_in(self, i):
        """Max exponent of variable index i, or -1 for zero."""
        if not self.terms:
            return -1
        shift = _SHIFT * i
        return max((k >> shift) & _MASK for k in self.terms)

    def involves(self, i):
        shift = _SHIFT * i
        return any((k >> shift) & _MASK for k in self.terms)

    def used_vars(self):
        used = set()
        for k in self.terms:
            i = 0
            while k:
                if k & _MASK:
                    used.add(i)
                k >>= _SHIFT
                i += 1
        return used

    def homogeneous_degree(self):
        """Degree if homogeneous (0 for the zero polynomial), else None."""
        if not self.terms:
            return 0
        kd = self.table.key_degree
        degs = {kd(k) for k in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def constant_term(self):
        return self.terms.get(0, ZERO)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if is_rational(other):
            other = Polynomial.const(self.table, other)
        _same_table(self.table, other.table)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return Polynomial(self.table, out, _trust=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.table, {k: -c for k, c in self.terms.items()}, _trust=True)

    def __sub__(self, other):
        if is_rational(other):
            other = Polynomial.const(self.table, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rational(other):
            other = as_rational(other)
            if not other:
                return Polynomial.zero(self.table)
            return Polynomial(
                self.table, {k: c * other for k, c in self.terms.items()}, _trust=True
            )
        _same_table(self.table, other.table)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                s = out.get(k)
                if s is None:
                    out[k] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[k] = s
                    else:
                        del out[k]
        return Polynomial(self.table, out, _trust=True)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.const(self.table, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if is_rational(other):
            other = Polynomial.const(self.table, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    # -- structure ----------------------------------------------------------

    def coeffs_in(self, i):
        """Bucket by the exponent of variable i: {e: Polynomial without i}."""
        shift = _SHIFT * i
        buckets = {}
        for k, c in self.terms.items():
            e = (k >> shift) & _MASK
            buckets.setdefault(e, {})[k - (e << shift)] = c
        return {
            e: Polynomial(self.table, terms, _trust=True) for e, terms in buckets.items()
        }

    def permute_vars(self, mapping):
        """Relabel variables; mapping is {index: index}, a bijection on its keys."""
        out = {}
        for k, c in self.terms.items():
            nk = k
            for i, j in mapping.items():
                if i == j:
                    continue
                e = (k >> (_SHIFT * i)) & _MASK
                if e:
                    nk -= e << (_SHIFT * i)
                    nk += e << (_SHIFT * j)
            out[nk] = out.get(nk, ZERO) + c
        return Polynomial(self.table, out)

    def substitute(self, bindings):
        """Exact substitution name -> LinearForm or rational, fully expanded.

        Unbound variables pass through.
        """
        table = self.table
        bound = {}
        for name, value in bindings.items():
            i = table.index(name)
            if is_rational(value):
                value = LinearForm.constant(table, value)
            bound[i] = value
        if not bound:
            return self
        power_cache = {}

        def form_power(i, e):
            key = (i, e)
            if key not in power_cache:
                if e == 1:
                    power_cache[key] = bound[i].as_polynomial()
                else:
                    power_cache[key] = form_power(i, e - 1) * bound[i].as_polynomial()
            return power_cache[key]

        result = Polynomial.zero(table)
        for k, c in self.terms.items():
            rest_key = k
            factors = []
            for i in bound:
                e = (k >> (_SHIFT * i)) & _MASK
                if e:
                    rest_key -= e << (_SHIFT * i)
                    factors.append((i, e))
            term = Polynomial(table, {rest_key: c}, _trust=True)
            for i, e in factors:
                term = term * form_power(i, e)
            result = result + term
        return result

    def evaluate(self, values):
        """Evaluate at a full point; values is {name: rational}."""
        table = self.table
        vals = [None] * table.nvars
        for name, v in values.items():
            vals[table.index(name)] = as_rational(v)
        total = ZERO
        for k, c in self.terms.items():
            prod = c
            i = 0
            kk = k
            while kk:
                e = kk & _MASK
                if e:
                    v = vals[i]
                    if v is None:
                        raise TorusIntError(f"no value for {table.names[i]}")
                    prod = prod * v**e
                kk >>= _SHIFT
                i += 1
            total += prod
        return total

    def sorted_terms(self):
        """(key, coeff) pairs in descending graded-lex order."""
        sk = self.table.sort_key
        return sorted(self.terms.items(), key=lambda kc: sk(kc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            mono = _monomial_str(self.table, k)
            if not mono:
                text = qstr(c)
            elif c == 1:
                text = mono
            elif c == -1:
                text = f"-{mono}"
            else:
                text = f"{qstr(c)}*{mono}"
            if parts and not text.startswith("-"):
                parts.append(f"+ {text}")
            elif parts:
                parts.append(f"- {text[1:]}")
            else:
                parts.append(text)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


class LinearForm:
    """Affine-linear form c0 + sum c_i * x_i over a VarTable.

    Never identically zero. Hashable; equality is exact coefficient equality.
    """

    __slots__ = ("table", "coeffs", "const", "_hash")

    def __init__(self, table, coeffs, const=ZERO):
        """coeffs: mapping index -> rational (zeros dropped)."""
        self.table = table
        clean = {}
        for i, c in coeffs.items():
            c = as_rational(c)
            if c:
                clean[i] = c
        self.coeffs = clean
        self.const = as_rational(const)
        if not clean and not self.const:
            raise ValueError("linear form must not be identically zero")
        self._hash = hash(
            (table, tuple(sorted(clean.items(), key=lambda ic: ic[0])), self.const)
        )

    @classmethod
    def variable(cls, table, name, coeff=ONE):
        return cls(table, {table.index(name): coeff})

    @classmethod
    def constant(cls, table, c):
        return cls(table, {}, c)

    @classmethod
    def from_names(cls, table, coeffs, const=ZERO):
        return cls(table, {table.index(n): c for n, c in coeffs.items()}, const)

    def leading_index(self):
        """Smallest variable index with nonzero coefficient, or None."""
        return min(self.coeffs) if self.coeffs else None

    def leading_coeff(self):
        i = self.leading_index()
        return self.coeffs[i] if i is not None else self.const

    def normalized(self):
        """(scale, form) with form monic in its leading coefficient: self = scale*form."""
        a = self.leading_coeff()
        if a == 1:
            return ONE, self
        inv = ONE / a
        return a, LinearForm(
            self.table, {i: c * inv for i, c in self.coeffs.items()}, self.const * inv
        )

    def scaled(self, c):
        c = as_rational(c)
        return LinearForm(
            self.table, {i: v * c for i, v in self.coeffs.items()}, self.const * c
        )

    def __neg__(self):
        return self.scaled(Q(-1))

    def __add__(self, other):
        if is_rational(other):
            return LinearForm(self.table, self.coeffs, self.const + other)
        _same_table(self.table, other.table)
        coeffs = dict(self.coeffs)
        for i, c in other.coeffs.items():
            coeffs[i] = coeffs.get(i, ZERO) + c
        return LinearForm(self.table, coeffs, self.const + other.const)

    def __sub__(self, other):
        if is_rational(other):
            return self + (-as_rational(other))
        return self + (-other)

    def involves(self, i):
        return i in self.coeffs

    def z_class_vars(self):
        t_count = self.table.t_count
        return [i for i in self.coeffs if i >= t_count]

    def drop_var(self, i):
        """The form minus its i-term; may be a constant-only form or None if empty."""
        coeffs = {j: c for j, c in self.coeffs.items() if j != i}
        if not coeffs and not self.const:
            return None
        return LinearForm(self.table, coeffs, self.const)

    def as_polynomial(self):
        terms = {}
        for i, c in self.coeffs.items():
            terms[self.table.var_key(i)] = c
        if self.const:
            terms[0] = self.const
        return Polynomial(self.table, terms, _trust=True)

    def evaluate(self, values):
        total = self.const
        names = self.table.names
        for i, c in self.coeffs.items():
            total += c * as_rational(values[names[i]])
        return total

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return (
            self.table == other.table
            and self.coeffs == other.coeffs
            and self.const == other.const
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        return str(self.as_polynomial())

    def __repr__(self):
        return f"LinearForm({self})"


def exact_divide(poly, form, power=1):
    """Divide poly by form**power; raises InexactDivision on any remainder."""
    for _ in range(power):
        poly = _divide_once(poly, form)
    return poly


def _divide_once(p, form):
    if p.is_zero():
        return p
    table = p.table
    _same_table(table, form.table)
    v = form.leading_index()
    if v is None:
        # constant divisor
        return p * (ONE / form.const)
    a = form.coeffs[v]
    shift = _SHIFT * v
    rest = [(table.var_key(j), c) for j, c in form.coeffs.items() if j != v]
    if form.const:
        rest.append((0, form.const))
    buckets = {}
    maxk = 0
    for key, c in p.terms.items():
        e = (key >> shift) & _MASK
        if e > maxk:
            maxk = e
        buckets.setdefault(e, {})[key - (e << shift)] = c
    quotient = {}
    for e in range(maxk, 0, -1):
        cur = buckets.get(e)
        if not cur:
            continue
        lower = buckets.setdefault(e - 1, {})
        qshift = (e - 1) << shift
        for rkey, c in cur.items():
            qc = c / a
            qkey = rkey + qshift
            prev = quotient.get(qkey)
            if prev is None:
                quotient[qkey] = qc
            else:
                prev = prev + qc
                if prev:
                    quotient[qkey] = prev
                else:
                    del quotient[qkey]
            for mkey, mc in rest:
                tk = rkey + mkey
                s = lower.get(tk)
                if s is None:
                    lower[tk] = -qc * mc
                else:
                    s = s - qc * mc
                    if s:
                        lower[tk] = s
                    else:
                        del lower[tk]
    remainder = buckets.get(0)
    if remainder and any(remainder.values()):
        raise InexactDivision(f"{form} does not divide the polynomial exactly")
    return Polynomial(p.table, quotient, _trust=True)


class FactoredRatFunc:
    """scalar * numerator / prod(linear factor ** multiplicity).

    Denominator factors are stored normalized (leading coefficient +1), with
    the normalization scales absorbed into the global scalar.  Equality is
    equality of values in this shape: the scalar is folded into the numerator
    for comparison, and the denominator multisets must match exactly.
    """

    __slots__ = ("table", "scalar", "numer", "denom")

    def __init__(self, table, scalar, numer, denom_factors=()):
        self.table = table
        _same_table(table, numer.table)
        scalar = as_rational(scalar)
        denom = {}
        for form, mult in dict(denom_factors).items():
            if mult < 1:
                raise ValueError("denominator multiplicities must be >= 1")
            _same_table(table, form.table)
            scale, norm = form.normalized()
            if scale != 1:
                scalar = scalar / scale**mult
            denom[norm] = denom.get(norm, 0) + mult
        if numer.is_zero() or not scalar:
            self.scalar = ONE
            self.numer = Polynomial.zero(table)
            self.denom = {}
        else:
            self.scalar = scalar
            self.numer = numer
            self.denom = denom

    @classmethod
    def from_polynomial(cls, poly):
        return cls(poly.table, ONE, poly)

    @classmethod
    def from_factors(cls, table, scalar, numer_factors, denom_factors):
        """Build scalar * prod(numer) / prod(denom), cancelling syntactically.

        numer_factors: iterable of LinearForm, Polynomial, or (item, mult).
        denom_factors: iterable of LinearForm or (LinearForm, mult).
        A linear factor occurring on both sides (after normalization) is
        cancelled; no polynomial factorization is ever attempted.
        """
        scalar = as_rational(scalar)
        num_forms = {}
        num_polys = []

        def expand(factors):
            for item in factors:
                if isinstance(item, tuple):
                    yield item
                else:
                    yield item, 1

        for item, mult in expand(numer_factors):
            if isinstance(item, LinearForm):
                scale, norm = item.normalized()
                if scale != 1:
                    scalar = scalar * scale**mult
                num_forms[norm] = num_forms.get(norm, 0) + mult
            else:
                for _ in range(mult):
                    num_polys.append(item)
        denom = {}
        for form, mult in expand(denom_factors):
            scale, norm = form.normalized()
            if scale != 1:
                scalar = scalar / scale**mult
            denom[norm] = denom.get(norm, 0) + mult
        # syntactic cancellation
        for form in list(num_forms):
            if form in denom:
                common = min(num_forms[form], denom[form])
                num_forms[form] -= common
                denom[form] -= common
                if not num_forms[form]:
                    del num_forms[form]
                if not denom[form]:
                    del denom[form]
        numer = Polynomial.const(table, 1)
        for form, mult in num_forms.items():
            numer = numer * form.as_polynomial() ** mult
        for poly in num_polys:
            numer = numer * poly
        return cls(table, scalar, numer, denom)

    def is_zero(self):
        return self.numer.is_zero()

    def involves(self, i):
        if self.numer.involves(i):
            return True
        return any(form.involves(i) for form in self.denom)

    def denominator_degree_in(self, i):
        return sum(mult for form, mult in self.denom.items() if form.involves(i))

    def as_polynomial(self):
        """Clear the denominator by exact division; raises if not a polynomial."""
        p = self.numer
        for form, mult in self.denom.items():
            p = exact_divide(p, form, mult)
        return p * self.scalar

    def __neg__(self):
        return FactoredRatFunc(self.table, -self.scalar, self.numer, self.denom)

    def __mul__(self, c):
        if is_rational(c):
            c = as_rational(c)
            if not c:
                return FactoredRatFunc(self.table, ONE, Polynomial.zero(self.table))
            return FactoredRatFunc(self.table, self.scalar * c, self.numer, self.denom)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, FactoredRatFunc):
            return NotImplemented
        _same_table(self.table, other.table)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        common = {}
        for form in set(self.denom) | set(other.denom):
            common[form] = max(self.denom.get(form, 0), other.denom.get(form, 0))
        left = self.numer * self.scalar
        for form, mult in common.items():
            extra = mult - self.denom.get(form, 0)
            if extra:
                left = left * form.as_polynomial() ** extra
        right = other.numer * other.scalar
        for form, mult in common.items():
            extra = mult - other.denom.get(form, 0)
            if extra:
                right = right * form.as_polynomial() ** extra
        return FactoredRatFunc(self.table, ONE, left + right, common)

    def evaluate(self, values):
        """Evaluate at a point; raises ZeroDivisionError on a pole."""
        den = ONE
        for form, mult in self.denom.items():
            v = form.evaluate(values)
            if not v:
                raise ZeroDivisionError(f"pole of {form} at {values}")
            den *= v**mult
        return self.scalar * self.numer.evaluate(values) / den

    def __eq__(self, other):
        if not isinstance(other, FactoredRatFunc):
            return NotImplemented
        if self.table != other.table or self.denom != other.denom:
            return False
        return self.numer * self.scalar == other.numer * other.scalar

    def __hash__(self):
        folded = self.numer * self.scalar
        return hash((folded, frozenset(self.denom.items())))

    def __str__(self):
        num = str(self.numer)
        if self.scalar != 1:
            num = f"{qstr(self.scalar)} * ({num})"
        if not self.denom:
            return num
        sk = self.table.sort_key
        factors = sorted(
            self.denom.items(),
            key=lambda fm: sorted((sk(k) for k in fm[0].as_polynomial().terms), reverse=True),
            reverse=True,
        )
        den = " * ".join(
            f"({form})" if mult == 1 else f"({form})^{mult}" for form, mult in factors
        )
        return f"({num}) / [{den}]"

    def __repr__(self):
        return f"FactoredRatFunc({self})"


def zero_ratfunc(table):
    return FactoredRatFunc(table, ONE, Polynomial.zero(table))


# -- series expansion at infinity -------------------------------------------

# Cache of inverse power series 1 / prod (1 + rho_i u)^m_i, keyed by the
# canonical content of the rho forms.  Entries only ever grow; concurrent
# readers are safe because lists are extended atomically under the GIL.
_INV_SERIES_CACHE = {}


def _rho_key(rho, mult):
    return (tuple(sorted(rho.coeffs.items())), rho.const, mult)


def _inverse_u_series(table, bases, length):
    """Coefficients c_0..c_{length-1} of 1 / prod (1 + rho*u)^mult.

    bases: list of (rho: LinearForm-or-None, mult); None means rho == 0.
    Exact power-series division; c_j are polynomials in the rho variables.
    """
    bases = [(rho, mult) for rho, mult in bases if rho is not None]
    cache_key = (table, tuple(sorted(_rho_key(rho, mult) for rho, mult in bases)))
    cached = _INV_SERIES_CACHE.get(cache_key)
    if cached is not None and len(cached) >= length:
        return cached[:length]
    one = Polynomial.const(table, 1)
    # q(u) = prod (1 + rho u)^mult, truncated at u^length
    q = [one]
    for rho, mult in bases:
        rp = rho.as_polynomial()
        for _ in range(mult):
            nq = list(q)
            if len(nq) < length:
                nq.append(Polynomial.zero(table))
            for j in range(min(len(q), length - 1), 0, -1):
                nq[j] = nq[j] + q[j - 1] * rp
            q = nq
    c = [one]
    for j in range(1, length):
        s = Polynomial.zero(table)
        for i in range(1, min(j, len(q) - 1) + 1):
            s = s + q[i] * c[j - i]
        c.append(-s)
    _INV_SERIES_CACHE[cache_key] = c
    return c


def _split_denominator(f, v):
    """Partition denominator factors by whether they involve variable v.

    Returns (involving: list of (a, rho, mult), rest: dict form->mult) where
    factor = a*(v + rho) elementwise, i.e. factor = a*v*(1 + rho/v).
    """
    involving = []
    rest = {}
    for form, mult in f.denom.items():
        a = form.coeffs.get(v)
        if a:
            rho = form.drop_var(v)
            if rho is not None:
                rho = rho.scaled(ONE / a)
            involving.append((a, rho, mult))
        else:
            rest[form] = mult
    return involving, rest


class TruncatedSeries:
    """Finitely many leading terms of a Laurent expansion in decreasing powers.

    Orders run from ``start_order`` down to ``cutoff_order`` inclusive; each
    coefficient is a FactoredRatFunc free of the distinguished variable (its
    denominator carries only factors of the input that did not involve it).
    """

    __slots__ = ("table", "var", "start_order", "coeffs")

    def __init__(self, table, var, start_order, coeffs):
        self.table = table
        self.var = var
        self.start_order = start_order
        self.coeffs = list(coeffs)

    @property
    def cutoff_order(self):
        return self.start_order - len(self.coeffs) + 1

    def coefficient(self, order):
        """Coefficient at var**order; exact zero above start_order."""
        if order > self.start_order:
            return zero_ratfunc(self.table)
        idx = self.start_order - order
        if idx >= len(self.coeffs):
            raise TorusIntError(
                f"series truncated at order {self.cutoff_order}, requested {order}"
            )
        return self.coeffs[idx]

    def orders(self):
        return range(self.start_order, self.cutoff_order - 1, -1)

    def __str__(self):
        var = self.table.names[self.var]
        parts = [f"({c}) * {var}^{o}" for o, c in zip(self.orders(), self.coeffs)]
        return " + ".join(parts) if parts else "0"


def expand_at_infinity(f, var, depth):
    """Expand a FactoredRatFunc in decreasing powers of a z-class variable.

    Substituting var = 1/u turns the function into u^(M-K) * P(u)/Q(u) with
    Q(0) != 0; exact power-series division of P by Q gives the coefficients.
    The series starts at order deg_var(numer) - deg_var(denom) and carries
    ``depth`` consecutive coefficients.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    table = f.table
    v = var if isinstance(var, int) else table.index(var)
    if not table.is_z(v):
        raise TorusIntError(f"{table.names[v]} is not a residue variable")
    involving, rest = _split_denominator(f, v)
    M = sum(mult for _, _, mult in involving)
    K = f.numer.degree_in(v)
    if f.numer.is_zero():
        return TruncatedSeries(table, v, -M, [zero_ratfunc(table)] * depth)
    start = K - M
    scale = f.scalar
    for a, _, mult in involving:
        scale = scale / a**mult
    c = _inverse_u_series(table, [(rho, mult) for _, rho, mult in involving], depth)
    buckets = f.numer.coeffs_in(v)
    coeffs = []
    for order in range(start, start - depth, -1):
        total = Polynomial.zero(table)
        for k, nk in buckets.items():
            j = k - M - order
            if 0 <= j < len(c):
                total = total + nk * c[j]
        coeffs.append(FactoredRatFunc(table, scale, total, rest))
    return TruncatedSeries(table, v, start, coeffs)
