"""Dense value tables for functions F_{p^n} -> F_{p^m}, m <= n.

The canonical representation is the full table: every predicate we care
about (permutation, balancedness, spectra) is a counting statement over
the whole domain.  Symbolic constructors keep their recipe in
``provenance`` so the table can be re-derived and checked bit-exactly.

A codomain is either the whole field or the subfield F_{p^m} embedded
as the fixed field of x -> x^(p^m); subfield values are stored as
indices of the ambient field, with a dense rank for counting.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadExponent, DomainMismatch
from .gf import Elt, FieldCtx


class Codomain:
    """Value set of a VFunc: the field itself, or an embedded subfield."""

    def __init__(self, ctx: FieldCtx, m: int):
        if ctx.n % m != 0:
            raise DomainMismatch(f"subfield dimension {m} must divide {ctx.n}")
        self.ctx = ctx
        self.m = m
        self.size = ctx.p**m
        if m == ctx.n:
            self.elements = ctx.elements
            self.rank = np.arange(ctx.q, dtype=np.int32)
        else:
            self.elements = ctx.subfield_elements(m)
            rank = np.full(ctx.q, -1, dtype=np.int32)
            rank[self.elements] = np.arange(self.size, dtype=np.int32)
            self.rank = rank
        self.rank.flags.writeable = False

    @property
    def is_whole(self) -> bool:
        return self.m == self.ctx.n

    def contains(self, x: Elt) -> bool:
        return 0 <= x < self.ctx.q and self.rank[x] >= 0

    def __eq__(self, other):
        return (
            isinstance(other, Codomain)
            and self.ctx is other.ctx
            and self.m == other.m
        )

    def __hash__(self):
        return hash((id(self.ctx), self.m))

    def __repr__(self):
        return f"Codomain(GF({self.ctx.p}^{self.ctx.n}) values, m={self.m})"


def whole(ctx: FieldCtx) -> Codomain:
    return Codomain(ctx, ctx.n)


@dataclass
class VFunc:
    dom: FieldCtx
    cod: Codomain
    table: np.ndarray  # length p^n, entries are ambient codomain indices
    provenance: dict = field(default_factory=lambda: {"kind": "table"})

    def __post_init__(self):
        self.table = np.asarray(self.table, dtype=np.int32)
        if self.table.shape != (self.dom.q,):
            raise DomainMismatch("table length must equal the domain size")
        self.table.flags.writeable = False

    def __call__(self, x: Elt) -> Elt:
        return int(self.table[x])

    @property
    def m(self) -> int:
        return self.cod.m

    def descriptor(self) -> dict:
        return {
            "field": self.dom.descriptor(),
            "cod_m": self.cod.m,
            "provenance": self.provenance,
        }

    def __repr__(self):
        return f"VFunc({self.provenance.get('kind','table')} on GF({self.dom.p}^{self.dom.n}))"


def from_table(ctx: FieldCtx, table, cod: Codomain | None = None) -> VFunc:
    cod = cod or whole(ctx)
    t = np.asarray(table, dtype=np.int32)
    if np.any(cod.rank[t] < 0):
        raise DomainMismatch("table contains values outside the codomain")
    return VFunc(ctx, cod, t)


def identity(ctx: FieldCtx) -> VFunc:
    return VFunc(ctx, whole(ctx), ctx.elements, {"kind": "monomial", "d": 1})


def constant(ctx: FieldCtx, alpha: Elt) -> VFunc:
    tab = np.full(ctx.q, alpha, dtype=np.int32)
    return VFunc(ctx, whole(ctx), tab, {"kind": "poly", "coeffs": [[alpha, 0]]})


def reduce_exponent(ctx: FieldCtx, d: int) -> int:
    """Reduce d into [1, q-1] as exponents act on nonzero elements."""
    return (d - 1) % (ctx.q - 1) + 1


def from_monomial(ctx: FieldCtx, d: int) -> VFunc:
    if d <= 0:
        raise BadExponent(f"monomial exponent must be >= 1, got {d}")
    tab = ctx.pow_vec(ctx.elements, reduce_exponent(ctx, d))
    return VFunc(ctx, whole(ctx), tab, {"kind": "monomial", "d": int(d)})


def from_poly(ctx: FieldCtx, coeffs) -> VFunc:
    """Pointwise evaluation of sum_j c_j x^(e_j); coeffs is [(c, e), ...]."""
    tab = np.zeros(ctx.q, dtype=np.int32)
    xs = ctx.elements
    for c, e in coeffs:
        if e < 0:
            raise BadExponent("polynomial exponents must be >= 0")
        if c == 0:
            continue
        term = ctx.scalar_mul_vec(int(c), ctx.pow_vec(xs, int(e)))
        tab = ctx.add_vec(tab, term)
    prov = {"kind": "poly", "coeffs": [[int(c), int(e)] for c, e in coeffs]}
    return VFunc(ctx, whole(ctx), tab, prov)


def from_linearized(ctx: FieldCtx, coeffs) -> VFunc:
    """sum_i c_i x^(p^i); coeffs is [(c, i), ...] with p-power exponents only."""
    pairs = [(int(c), ctx.p ** int(i)) for c, i in coeffs]
    f = from_poly(ctx, pairs)
    f.provenance = {"kind": "linearized", "coeffs": [[int(c), int(i)] for c, i in coeffs]}
    return f


def trace_map(ctx: FieldCtx, m: int) -> VFunc:
    """The relative trace onto F_{p^m} as a subfield-valued table."""
    return VFunc(ctx, Codomain(ctx, m), ctx.trace_table(m), {"kind": "trace", "m": m})


def reevaluate(f: VFunc) -> np.ndarray:
    """Rebuild the table from the symbolic provenance (for consistency checks)."""
    kind = f.provenance.get("kind")
    ctx = f.dom
    if kind == "monomial":
        return from_monomial(ctx, f.provenance["d"]).table
    if kind == "poly":
        return from_poly(ctx, f.provenance["coeffs"]).table
    if kind == "linearized":
        return from_linearized(ctx, f.provenance["coeffs"]).table
    if kind == "trace":
        return ctx.trace_table(f.provenance["m"]).copy()
    raise DomainMismatch(f"provenance {kind!r} is not symbolic")


# -- predicates -------------------------------------------------------------


def is_permutation(f: VFunc) -> bool:
    if not f.cod.is_whole:
        return False
    return np.bincount(f.table, minlength=f.dom.q).max() == 1


def is_balanced(f: VFunc) -> bool:
    counts = np.bincount(f.cod.rank[f.table], minlength=f.cod.size)
    return bool((counts == f.dom.q // f.cod.size).all())


def is_linearized(f: VFunc) -> bool:
    """f(x+y) = f(x)+f(y) for all pairs and f(0) = 0.

    Checking additivity against each basis vector suffices: it gives
    f(x + t*e_i) = f(x) + t*f(e_i) by induction over the digits of y.
    """
    ctx = f.dom
    if f.table[0] != 0:
        return False
    xs = ctx.elements
    for i in range(ctx.n):
        e = ctx.p**i
        fe = int(f.table[e])
        shifted = f.table[ctx.add_vec(xs, np.int32(e))]
        if not np.array_equal(shifted, ctx.add_vec(f.table, np.int32(fe))):
            return False
    return True


def is_affine(f: VFunc) -> bool:
    c = int(f.table[0])
    if c == 0:
        return is_linearized(f)
    shifted = VFunc(f.dom, f.cod, f.dom.sub_vec(f.table, np.int32(c)))
    return is_linearized(shifted)


def is_quadratic(f: VFunc) -> bool:
    """Algebraic degree <= 2: every directional derivative is affine."""
    ctx = f.dom
    xs = ctx.elements
    for a in range(1, ctx.q):
        da = ctx.sub_vec(f.table[ctx.add_vec(xs, np.int32(a))], f.table)
        if not is_affine(VFunc(ctx, f.cod, da)):
            return False
    return True


# -- combinators ------------------------------------------------------------


def compose(f: VFunc, g: VFunc) -> VFunc:
    """x -> f(g(x)); g must take values in f's domain field."""
    if g.cod.ctx is not f.dom:
        raise DomainMismatch("compose: codomain of g must live in f's domain")
    out = VFunc(g.dom, f.cod, f.table[g.table])
    if f.provenance.get("kind") == "monomial" and g.provenance.get("kind") == "monomial":
        out.provenance = {"kind": "monomial", "d": f.provenance["d"] * g.provenance["d"]}
    return out


def add_funcs(f: VFunc, g: VFunc) -> VFunc:
    if f.dom is not g.dom or f.cod.ctx is not g.cod.ctx:
        raise DomainMismatch("add_funcs: mismatched domains")
    cod = f.cod if f.cod.m >= g.cod.m else g.cod
    return VFunc(f.dom, cod, f.dom.add_vec(f.table, g.table))


def scale(c: Elt, f: VFunc) -> VFunc:
    tab = f.cod.ctx.scalar_mul_vec(c, f.table)
    cod = f.cod if (c == 0 or f.cod.contains(c)) else whole(f.cod.ctx)
    return VFunc(f.dom, cod, tab)


def add_const(f: VFunc, alpha: Elt) -> VFunc:
    cod = f.cod if f.cod.contains(alpha) else whole(f.cod.ctx)
    return VFunc(f.dom, cod, f.cod.ctx.add_vec(f.table, np.int32(alpha)))
