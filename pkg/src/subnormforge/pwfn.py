"""Exact piecewise monotone functions on [0,1].

A function is a finite sequence of rational-linear or constant segments
plus isolated point values whose domains exactly partition [0,1].  All
evaluation, one-sided limits, pseudo-inversion, range and plateau
computations are exact over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .intervals import Interval, IntervalSet, ZERO, ONE, frac


class DomainError(ValueError):
    pass


class InvalidFunction(ValueError):
    pass


@dataclass(frozen=True)
class Segment:
    """A linear (slope != 0) or constant (slope == 0) piece."""

    domain: Interval
    slope: Fraction
    intercept: Fraction

    @property
    def is_const(self) -> bool:
        return self.slope == 0

    def value_at(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    @staticmethod
    def const(domain: Interval, value) -> "Segment":
        return Segment(domain, ZERO, frac(value))

    @staticmethod
    def linear(domain: Interval, slope, intercept) -> "Segment":
        return Segment(domain, frac(slope), frac(intercept))

    def attained_values(self) -> Interval:
        """The set of values taken on the domain, with exact openness."""
        d = self.domain
        if self.is_const:
            return Interval.point(self.intercept)
        v_lo, v_hi = self.value_at(d.lo), self.value_at(d.hi)
        if self.slope > 0:
            return Interval(v_lo, v_hi, d.lo_closed, d.hi_closed)
        return Interval(v_hi, v_lo, d.hi_closed, d.lo_closed)


@dataclass(frozen=True)
class PiecewiseMonotoneFn:
    nondecreasing: bool
    segments: tuple = ()
    points: tuple = ()  # ((x, value), ...) isolated abscissae

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(self.points)))
        object.__setattr__(
            self, "segments", tuple(sorted(self.segments, key=lambda s: s.domain.lo))
        )
        _validate(self)

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x) -> Fraction:
        return eval_fn(self, x)

    def pieces(self):
        """All pieces (segments and points) in ascending x order."""
        out = [(s.domain.lo, not s.domain.lo_closed, s) for s in self.segments]
        out += [(x, False, (x, v)) for x, v in self.points]
        out.sort(key=lambda t: (t[0], t[1]))
        return [p for _, _, p in out]

    def breakpoints(self) -> list:
        """Domain endpoints of all pieces (candidate discontinuities)."""
        out = set()
        for s in self.segments:
            out.add(s.domain.lo)
            out.add(s.domain.hi)
        for x, _ in self.points:
            out.add(x)
        return sorted(out)

    @property
    def is_strictly_monotone(self) -> bool:
        return plateau_set(self).is_empty


def _piece_domain(piece) -> Interval:
    if isinstance(piece, Segment):
        return piece.domain
    return Interval.point(piece[0])


def _piece_values(piece) -> Interval:
    if isinstance(piece, Segment):
        return piece.attained_values()
    return Interval.point(piece[1])


def _validate(fn: PiecewiseMonotoneFn) -> None:
    pieces = fn.pieces()
    if not pieces:
        raise InvalidFunction("no pieces")
    cur, cur_closed = ZERO, True
    for p in pieces:
        d = _piece_domain(p)
        if d.lo != cur or d.lo_closed != cur_closed:
            raise InvalidFunction(f"domain gap or overlap at {cur} (next piece starts {d})")
        cur, cur_closed = d.hi, not d.hi_closed
    if cur != ONE or cur_closed:
        raise InvalidFunction(f"domain does not reach 1 (stops at {cur})")
    prev_vals: Optional[Interval] = None
    for p in pieces:
        vals = _piece_values(p)
        if vals.lo < 0 or vals.hi > 1:
            raise InvalidFunction(f"values escape [0,1] on {_piece_domain(p)}")
        if isinstance(p, Segment) and not p.is_const:
            if fn.nondecreasing and p.slope < 0:
                raise InvalidFunction("decreasing segment in a non-decreasing function")
            if not fn.nondecreasing and p.slope > 0:
                raise InvalidFunction("increasing segment in a non-increasing function")
        if prev_vals is not None:
            if fn.nondecreasing and vals.lo < prev_vals.hi:
                raise InvalidFunction("values not non-decreasing across pieces")
            if not fn.nondecreasing and vals.hi > prev_vals.lo:
                raise InvalidFunction("values not non-increasing across pieces")
        prev_vals = vals


def eval_fn(f: PiecewiseMonotoneFn, x) -> Fraction:
    x = frac(x)
    if x < 0 or x > 1:
        raise DomainError(f"argument {x} outside [0,1]")
    for s in f.segments:
        if s.domain.contains(x):
            return s.value_at(x)
    for px, pv in f.points:
        if px == x:
            return pv
    raise InvalidFunction(f"no piece covers {x}")  # unreachable for valid fns


def side_limit(f: PiecewiseMonotoneFn, a, side: str) -> Fraction:
    """One-sided limit, with f(0^-)=0, f(1^+)=1 for non-decreasing f and
    the mirrored conventions for non-increasing f."""
    a = frac(a)
    if a < 0 or a > 1:
        raise DomainError(f"argument {a} outside [0,1]")
    if side == "left":
        if a == 0:
            return ZERO if f.nondecreasing else ONE
        for s in f.segments:
            d = s.domain
            if d.lo < a <= d.hi:
                return s.value_at(a)
        raise InvalidFunction(f"no segment approaches {a} from the left")
    if side == "right":
        if a == 1:
            return ONE if f.nondecreasing else ZERO
        for s in f.segments:
            d = s.domain
            if d.lo <= a < d.hi:
                return s.value_at(a)
        raise InvalidFunction(f"no segment approaches {a} from the right")
    raise ValueError("side must be 'left' or 'right'")


# -- pseudo-inverse ---------------------------------------------------------


def pseudo_inverse_at(f: PiecewiseMonotoneFn, y) -> Fraction:
    """Exact pointwise pseudo-inverse.

    Non-decreasing f: sup{x : f(x) < y}, which equals inf{x : f(x) >= y}
    under the convention sup(empty) = 0; non-increasing f: sup{x : f(x) > y}
    = inf{x : f(x) <= y}.
    """
    y = frac(y)
    return _first_arg(f, y, at_least=f.nondecreasing)


def _first_arg(f, y, at_least: bool) -> Fraction:
    """inf{x : f(x) >= y} (at_least) or inf{x : f(x) <= y}, inf(empty)=1."""
    for p in f.pieces():
        if isinstance(p, tuple):
            px, pv = p
            if (pv >= y) if at_least else (pv <= y):
                return px
            continue
        d, vals = p.domain, p.attained_values()
        if p.is_const:
            ok = (p.intercept >= y) if at_least else (p.intercept <= y)
            if ok:
                return d.lo
            continue
        if at_least:
            # non-decreasing: slope > 0
            top, top_att = vals.hi, vals.hi_closed
            if top > y or (top_att and top == y):
                x_star = (y - p.intercept) / p.slope
                return max(d.lo, x_star)
        else:
            # non-increasing: slope < 0; values attained go down to vals.lo
            bot, bot_att = vals.lo, vals.lo_closed
            if bot < y or (bot_att and bot == y):
                x_star = (y - p.intercept) / p.slope
                return max(d.lo, x_star)
    return ONE


def first_arg_above(f: PiecewiseMonotoneFn, v) -> Fraction:
    """inf{x : f(x) > v} for non-decreasing f; inf(empty) = 1."""
    v = frac(v)
    for p in f.pieces():
        if isinstance(p, tuple):
            px, pv = p
            if pv > v:
                return px
            continue
        d, vals = p.domain, p.attained_values()
        if p.is_const:
            if p.intercept > v:
                return d.lo
            continue
        if vals.hi > v:
            x_star = (v - p.intercept) / p.slope
            return max(d.lo, x_star)
    return ONE


def pseudo_inverse(f: PiecewiseMonotoneFn) -> PiecewiseMonotoneFn:
    """Closed-form piecewise representation of the pseudo-inverse on [0,1].

    Built by sampling the exact pointwise pseudo-inverse between critical
    values (attained-value endpoints), where the pseudo-inverse is linear
    or constant, and verifying each fitted piece at a third point.
    """
    crit = {ZERO, ONE}
    for p in f.pieces():
        vals = _piece_values(p)
        crit.add(vals.lo)
        crit.add(vals.hi)
    ys = sorted(crit)

    gap_shapes = []  # (slope, intercept) valid on open (ys[j], ys[j+1])
    for j in range(len(ys) - 1):
        a, b = ys[j], ys[j + 1]
        h = b - a
        p1, p2, p3 = a + h / 4, a + h / 2, a + 3 * h / 4
        v1, v2, v3 = (pseudo_inverse_at(f, t) for t in (p1, p2, p3))
        slope = (v3 - v1) / (p3 - p1)
        intercept = v1 - slope * p1
        if slope * p2 + intercept != v2:
            raise InvalidFunction("pseudo-inverse is not piecewise linear")  # unreachable
        gap_shapes.append((slope, intercept))

    crit_vals = [pseudo_inverse_at(f, y) for y in ys]

    segments = []
    points = []
    for j, (slope, intercept) in enumerate(gap_shapes):
        a, b = ys[j], ys[j + 1]
        lo_closed = slope * a + intercept == crit_vals[j]
        hi_closed = slope * b + intercept == crit_vals[j + 1]
        dom = Interval(a, b, lo_closed, hi_closed)
        if slope == 0:
            segments.append(Segment.const(dom, intercept))
        else:
            segments.append(Segment.linear(dom, slope, intercept))
    for j, y in enumerate(ys):
        left_ok = j > 0 and segments[j - 1].domain.hi_closed
        right_ok = j < len(gap_shapes) and segments[j].domain.lo_closed
        if left_ok and right_ok:
            # both pieces agree at y; leave it to the left one
            s = segments[j]
            new_dom = Interval.make(y, s.domain.hi, False, s.domain.hi_closed)
            if new_dom is None:
                raise InvalidFunction("degenerate pseudo-inverse piece")  # unreachable
            segments[j] = Segment(new_dom, s.slope, s.intercept)
        elif not left_ok and not right_ok:
            points.append((y, crit_vals[j]))

    # merge adjacent segments with identical shape
    merged = []
    for s in segments:
        if merged:
            q = merged[-1]
            if (
                q.slope == s.slope
                and q.intercept == s.intercept
                and q.domain.hi == s.domain.lo
                and (q.domain.hi_closed or s.domain.lo_closed)
            ):
                merged[-1] = Segment(
                    Interval(q.domain.lo, s.domain.hi, q.domain.lo_closed, s.domain.hi_closed),
                    s.slope,
                    s.intercept,
                )
                continue
        merged.append(s)

    return PiecewiseMonotoneFn(f.nondecreasing, tuple(merged), tuple(points))


# -- range, plateaus, decomposition ----------------------------------------


def range_of(f: PiecewiseMonotoneFn) -> IntervalSet:
    return IntervalSet.of(_piece_values(p) for p in f.pieces())


def plateau_set(f: PiecewiseMonotoneFn) -> IntervalSet:
    """Values attained at more than one argument."""
    pieces = f.pieces()
    out = IntervalSet.empty()
    for i, p in enumerate(pieces):
        if isinstance(p, Segment) and p.is_const and not p.domain.is_point:
            out = out.union(IntervalSet.single(Interval.point(p.intercept)))
        vi = IntervalSet.single(_piece_values(p))
        for q in pieces[i + 1 :]:
            out = out.union(vi.intersect(IntervalSet.single(_piece_values(q))))
    return out


@dataclass(frozen=True)
class Decomposition:
    """Range structure of a non-decreasing function: the gap system with
    kept boundary values, plateau values and the derived thresholds."""

    m: IntervalSet
    s: tuple  # ((b_k, d_k, c_k), ...)
    c: tuple  # sorted distinct kept boundary values
    q: IntervalSet
    f0plus: Fraction
    f1minus: Fraction
    tau: Fraction
    upsilon: Fraction
    k1: tuple  # indices into s

    @property
    def c_set(self) -> IntervalSet:
        return IntervalSet.points(self.c)

    @property
    def m_minus_c(self) -> IntervalSet:
        return self.m.minus(self.c_set)

    def reconstruct(self) -> IntervalSet:
        gaps = IntervalSet.of(Interval.closed(b, d) for b, d, _ in self.s)
        return self.c_set.union(gaps.complement())


def decompose(f: PiecewiseMonotoneFn) -> Decomposition:
    if not f.nondecreasing:
        raise InvalidFunction("decomposition is defined for non-decreasing functions")
    m = range_of(f)
    q = plateau_set(f)
    f0plus = side_limit(f, 0, "right")
    f1minus = side_limit(f, 1, "left")
    if q.is_empty:
        upsilon, tau = ZERO, ZERO
    else:
        upsilon, _ = q.max_attained()
        tau = first_arg_above(f, upsilon)

    if m == IntervalSet.unit():
        s = ((ONE, ONE, ONE),)
        c = (ONE,)
    else:
        triples = []
        for gap in m.complement().parts:
            b, d = gap.lo, gap.hi
            cands = [v for v in (b, d) if m.contains(v)]
            if not cands:
                raise InvalidFunction(f"range gap [{b},{d}] keeps neither endpoint")
            for cv in cands:
                triples.append((b, d, cv))
        # a gap keeping both endpoints contributes one interval; pick one c per
        # interval but record every kept endpoint in C
        seen = {}
        for b, d, cv in triples:
            seen.setdefault((b, d), []).append(cv)
        s = tuple((b, d, cvs[0]) for (b, d), cvs in sorted(seen.items()))
        c = tuple(sorted({cv for cvs in seen.values() for cv in cvs}))

    if q.is_empty:
        k1 = tuple(range(len(s)))
    else:
        k1 = tuple(i for i, (b, _, _) in enumerate(s) if b >= upsilon)
    return Decomposition(m, s, c, q, f0plus, f1minus, tau, upsilon, k1)
