"""Exact solver for small systems of polynomial equations of degree <= 2.

Polynomials are dicts ``{monomial: coefficient}`` where a monomial is a sorted
tuple of variable indices: ``()`` constant, ``(i,)`` linear, ``(i, j)`` quadratic.

Strategy: solve all linear equations by elimination and re-parametrise the
unknowns affinely; then branch on an equation that has become univariate (or a
single product ``c * p_i * p_j``) and recurse. Anything else is out of scope
and raises :class:`UnresolvedSystem` instead of guessing.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .matrix import Matrix
from .solve import solve_affine

Poly = dict


class NonRationalSolution(ArithmeticError):
    """A branch needs a root that is not rational: solution outside the rationals."""


class UnresolvedSystem(RuntimeError):
    """Elimination stalled with no univariate or monomial equation to branch on."""


def _add(p: Poly, mono: tuple, c) -> None:
    if c == 0:
        return
    v = p.get(mono, 0) + c
    if v == 0:
        p.pop(mono, None)
    else:
        p[mono] = v


def _substitute(p: Poly, param: list[dict]) -> Poly:
    """Substitute x_i = param[i] (an affine form {(): c, (k,): a}) into p."""
    out: Poly = {}
    for mono, c in p.items():
        if len(mono) == 0:
            _add(out, (), c)
        elif len(mono) == 1:
            for m, a in param[mono[0]].items():
                _add(out, m, c * a)
        else:
            fi, fj = param[mono[0]], param[mono[1]]
            for mi, a in fi.items():
                for mj, b in fj.items():
                    _add(out, tuple(sorted(mi + mj)), c * a * b)
    return out


def _rational_roots(a, b, c) -> list[Fraction]:
    """Roots of a t^2 + b t + c with a != 0, or NonRationalSolution."""
    disc = Fraction(b) * b - 4 * Fraction(a) * c
    if disc < 0:
        raise NonRationalSolution("solution outside the rationals (negative discriminant)")
    n, d = disc.numerator, disc.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        raise NonRationalSolution(f"solution outside the rationals (discriminant {disc})")
    root = Fraction(rn, rd)
    roots = {(-b + root) / (2 * Fraction(a)), (-b - root) / (2 * Fraction(a))}
    return sorted(roots)


def solve_quadratic_system(nvars: int, equations: Iterable[Poly], max_depth: int = 64) -> list[tuple]:
    """All solutions (as tuples of length ``nvars``) of a finite-solution system.

    Raises UnresolvedSystem if a positive-dimensional family survives or the
    elimination cannot make progress, and NonRationalSolution if some branch
    requires an irrational root.
    """
    eqs = [dict(e) for e in equations if e]
    identity = [{(i,): Fraction(1)} for i in range(nvars)]
    sols = _solve(eqs, identity, nvars, max_depth)
    return sorted(set(sols))


def _solve(eqs: list[Poly], param: list[dict], nparams: int, depth: int) -> list[tuple]:
    if depth <= 0:
        raise UnresolvedSystem("branching depth exceeded")
    while True:
        cur = [q for q in (_substitute(e, param) for e in eqs) if q]
        if any(set(q) == {()} for q in cur):
            return []
        linear = [q for q in cur if all(len(m) <= 1 for m in q)]
        if linear:
            a = Matrix(len(linear), nparams, {r: {m[0]: c for m, c in q.items() if m} for r, q in enumerate(linear)})
            b = [-q.get((), 0) for q in linear]
            res = solve_affine(a, b)
            if res is None:
                return []
            part, kern = res
            # p = part + sum_k s_k kern[k]; compose with the current parametrisation
            new_param = []
            for form in param:
                nf: dict = {}
                for m, c in form.items():
                    if not m:
                        _add(nf, (), c)
                        continue
                    k = m[0]
                    _add(nf, (), c * part[k])
                    for s, vec in enumerate(kern):
                        _add(nf, (s,), c * vec[k])
                new_param.append(nf)
            param, nparams = new_param, len(kern)
            continue
        break
    if nparams == 0:
        return [tuple(form.get((), 0) for form in param)]
    # branch on a univariate equation, else on a pure product c * p_i * p_j
    for q in cur:
        vars_in = {v for m in q for v in m}
        if len(vars_in) == 1:
            (v,) = vars_in
            roots = _rational_roots(q.get((v, v), 0), q.get((v,), 0), q.get((), 0))
            return _branch(eqs, param, nparams, depth, [(v, r) for r in roots])
    for q in cur:
        if len(q) == 1:
            (mono,) = q
            if len(mono) == 2:
                return _branch(eqs, param, nparams, depth, [(mono[0], 0), (mono[1], 0)])
    raise UnresolvedSystem(f"{nparams} free parameter(s) remain with no branchable equation")


def _branch(eqs, param, nparams, depth, choices: Sequence[tuple[int, object]]) -> list[tuple]:
    out = []
    for v, val in choices:
        # fix parameter v to val and renumber the remaining parameters
        fixed = []
        for form in param:
            nf: dict = {}
            for m, c in form.items():
                if not m:
                    _add(nf, (), c)
                elif m[0] == v:
                    _add(nf, (), c * val)
                else:
                    k = m[0] - (1 if m[0] > v else 0)
                    _add(nf, (k,), c)
            fixed.append(nf)
        out.extend(_solve(eqs, fixed, nparams - 1, depth - 1))
    return out
