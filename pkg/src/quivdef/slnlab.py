"""Truncated lattice realizations of cuspidal sl_n modules.

A lattice module lives on the integer points b with sum zero and
max |b_i| <= radius; over each point sits a copy of a fixed fiber V, and
each Chevalley generator e_{i,i+1}, e_{i+1,i}, h_i acts by one fiber
matrix per point, shifting the point by eps_i - eps_j.  build_n is the
rank-one realization where e_{i,j} scales by a_j + b_j; build_f replaces
the scalars by X_j + (a_j + b_j) for a tuple of commuting nilpotent
matrices.  verify_relations checks the defining relations (commutators,
Cartan actions, Serre relations) at every point where all intermediate
points exist, counting the instances skipped at the boundary.

recover_x inverts the construction: from the h-blocks and the quadratic
Casimir at the origin it reconstructs the X_i, taking the polynomial
square root of the Casimir block with the sign fixed by nilpotency.
reconstruct_extension performs the inductive step that extends a rank
(n-1) lattice module by one more matrix to an sl_n module, solving the
commutation and Serre constraints level by level; the solver's
intermediate equalities (the new horizontal block equals the one below,
the downward block drops by the identity, the final vertical block equals
its horizontal neighbour) are recorded so they can be asserted.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .linalg import (
    ONE,
    ZERO,
    fr,
    mat_add,
    mat_commute,
    mat_eq,
    mat_eye,
    mat_inv,
    mat_is_nilpotent,
    mat_is_zero,
    mat_mul,
    mat_pow,
    mat_scalar,
    mat_scale,
    mat_sub,
    mat_trace,
)


class NoUniqueExtension(Exception):
    pass


def _shift(n, i, j):
    s = [0] * n
    s[i - 1] += 1
    s[j - 1] -= 1
    return tuple(s)


def _add(p, s):
    return tuple(x + y for x, y in zip(p, s))


class LatticeSupport:
    def __init__(self, n: int, radius: int):
        self.n = n
        self.radius = radius
        pts = []
        rng = range(-radius, radius + 1)
        for rest in itertools.product(rng, repeat=n - 1):
            last = -sum(rest)
            if abs(last) <= radius:
                pts.append(tuple(rest) + (last,))
        self.points = sorted(pts)
        self.index = {p: i for i, p in enumerate(self.points)}

    def __contains__(self, p):
        return p in self.index

    def neighbors(self, p):
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                if i != j:
                    yield _add(p, _shift(self.n, i, j))

    def is_interior(self, p) -> bool:
        return all(q in self.index for q in self.neighbors(p))

    def interior_points(self):
        return [p for p in self.points if self.is_interior(p)]


def generator_keys(n: int):
    out = []
    for i in range(1, n):
        out.append(("e", i, i + 1))
    for i in range(1, n):
        out.append(("e", i + 1, i))
    for i in range(1, n):
        out.append(("h", i))
    return out


def gen_shift(n, key):
    if key[0] == "h":
        return (0,) * n
    _, i, j = key
    return _shift(n, i, j)


class LatticeModule:
    def __init__(self, n, a, support: LatticeSupport, fiber_dim: int, blocks: dict):
        self.n = n
        self.a = tuple(fr(x) for x in a)
        self.support = support
        self.fiber_dim = fiber_dim
        self.blocks = blocks  # key -> {point: matrix}

    def block(self, key, point):
        return self.blocks.get(key, {}).get(point)

    def defined_block_count(self) -> int:
        return sum(len(v) for v in self.blocks.values())


def check_parameters(a, n):
    a = tuple(fr(x) for x in a)
    if len(a) != n:
        raise ValueError("expected %d parameters" % n)
    for x in a:
        if x.denominator == 1:
            raise ValueError("parameter %s is an integer" % x)
    return a


def build_n(n: int, a, radius: int) -> LatticeModule:
    """The rank-one lattice module: e_{i,j} scales by a_j + b_j."""
    return build_f(n, a, [[[ZERO]]] * n, radius)


def build_f(n: int, a, matrices, radius: int, check: bool = True) -> LatticeModule:
    """Lattice module with fiber blocks X_j + (a_j + b_j) Id.

    The X must commute pairwise and be nilpotent; pass check=False to
    skip that validation (used to exhibit relation failures).
    """
    a = check_parameters(a, n)
    if len(matrices) != n:
        raise ValueError("expected %d fiber matrices" % n)
    dim = len(matrices[0])
    if check:
        for idx, x in enumerate(matrices):
            if not mat_is_nilpotent(x):
                raise ValueError("fiber matrix %d is not nilpotent" % (idx + 1))
        for i in range(n):
            for j in range(i + 1, n):
                if not mat_commute(matrices[i], matrices[j]):
                    raise ValueError("fiber matrices %d and %d do not commute" % (i + 1, j + 1))
    support = LatticeSupport(n, radius)
    eye = mat_eye(dim)
    blocks = {key: {} for key in generator_keys(n)}
    for p in support.points:
        for i in range(1, n):
            for (s, t) in ((i, i + 1), (i + 1, i)):
                key = ("e", s, t)
                q = _add(p, _shift(n, s, t))
                if q in support:
                    j = t
                    scal = a[j - 1] + p[j - 1]
                    blocks[key][p] = mat_add(matrices[j - 1], mat_scale(scal, eye))
        for i in range(1, n):
            scal = a[i - 1] + p[i - 1] - a[i] - p[i]
            m = mat_add(mat_sub(matrices[i - 1], matrices[i]), mat_scale(scal, eye))
            blocks[("h", i)][p] = m
    return LatticeModule(n, a, support, dim, blocks)


# ---------------------------------------------------------------------------
# relation checking
# ---------------------------------------------------------------------------

def _relations(n: int):
    """Defining relations as lists of (coeff, monomial); application order."""
    rels = []

    def e(i):
        return ("e", i, i + 1)

    def f(i):
        return ("e", i + 1, i)

    def h(i):
        return ("h", i)

    def comm(x, y):
        # operator [x, y] applied right to left: (y, x) means y first
        return [(ONE, (y, x)), (-ONE, (x, y))]

    for i in range(1, n):
        for j in range(1, n):
            terms = comm(e(i), f(j))
            if i == j:
                terms.append((-ONE, (h(i),)))
            rels.append(("[e%d,f%d]" % (i, j), terms))
    for i in range(1, n):
        for j in range(1, n):
            c = fr(2 if i == j else (-1 if abs(i - j) == 1 else 0))
            terms = comm(h(i), e(j)) + [(-c, (e(j),))]
            rels.append(("[h%d,e%d]" % (i, j), terms))
            terms = comm(h(i), f(j)) + [(c, (f(j),))]
            rels.append(("[h%d,f%d]" % (i, j), terms))
            if j > i:
                rels.append(("[h%d,h%d]" % (i, j), comm(h(i), h(j))))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) == 1:
                rels.append(
                    (
                        "serre(e%d,e%d)" % (i, j),
                        [
                            (ONE, (e(j), e(i), e(i))),
                            (fr(-2), (e(i), e(j), e(i))),
                            (ONE, (e(i), e(i), e(j))),
                        ],
                    )
                )
                rels.append(
                    (
                        "serre(f%d,f%d)" % (i, j),
                        [
                            (ONE, (f(j), f(i), f(i))),
                            (fr(-2), (f(i), f(j), f(i))),
                            (ONE, (f(i), f(i), f(j))),
                        ],
                    )
                )
            elif abs(i - j) >= 2 and j > i:
                rels.append(("[e%d,e%d]" % (i, j), comm(e(i), e(j))))
                rels.append(("[f%d,f%d]" % (i, j), comm(f(i), f(j))))
    return rels


def _monomial_matrix(module: LatticeModule, mono, point):
    """Compose blocks along a monomial (first entry applied first)."""
    cur = point
    mat = None
    for key in mono:
        blk = module.block(key, cur)
        if blk is None:
            return None, None
        mat = blk if mat is None else mat_mul(blk, mat)
        cur = _add(cur, gen_shift(module.n, key))
    return mat, cur


def verify_relations(module: LatticeModule):
    """Check all defining relations pointwise; returns counts and witness.

    A relation instance is skipped when some monomial walks outside the
    stored blocks (the truncation boundary); it is checked otherwise.
    """
    n = module.n
    dim = module.fiber_dim
    checked = skipped = 0
    witness = None
    for label, terms in _relations(n):
        for p in module.support.points:
            total = None
            ok = True
            for coeff, mono in terms:
                mat, _end = _monomial_matrix(module, mono, p)
                if mat is None:
                    ok = False
                    break
                scaled = mat_scale(coeff, mat)
                total = scaled if total is None else mat_add(total, scaled)
            if not ok:
                skipped += 1
                continue
            checked += 1
            if not mat_is_zero(total):
                if witness is None:
                    witness = (label, p)
    return {"checked": checked, "skipped": skipped, "witness": witness, "fiber_dim": dim}


# ---------------------------------------------------------------------------
# recovering the fiber matrices
# ---------------------------------------------------------------------------

def _rational_sqrt(x: Fraction):
    x = fr(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp != p or rq * rq != q:
        return None
    return Fraction(rp, rq)


def _binom_half(j: int) -> Fraction:
    out = Fraction(1)
    for l in range(j):
        out *= Fraction(1, 2) - l
        out /= l + 1
    return out


def casimir_block(module: LatticeModule):
    """(h_1 + 1)^2 + 4 e_{2,1} e_{1,2} acting on the fiber at the origin."""
    n = module.n
    origin = (0,) * n
    h1 = module.block(("h", 1), origin)
    up = module.block(("e", 1, 2), origin)
    down = module.block(("e", 2, 1), _add(origin, _shift(n, 1, 2)))
    if h1 is None or up is None or down is None:
        raise ValueError("radius too small for the Casimir block")
    eye = mat_eye(module.fiber_dim)
    m = mat_add(h1, eye)
    return mat_add(mat_mul(m, m), mat_scale(4, mat_mul(down, up)))


def recover_x(module: LatticeModule, a):
    """Reconstruct the commuting nilpotent fiber matrices from the module.

    The Casimir block Y has a single eigenvalue; it must be a nonzero
    rational square.  Its polynomial square root (the binomial series in
    the nilpotent part, truncated at the fiber dimension) gives two sign
    branches; the one making the first matrix nilpotent is selected and
    the rest follow by the Cartan recursion.
    """
    a = check_parameters(a, module.n)
    n = module.n
    dim = module.fiber_dim
    origin = (0,) * n
    ys = [module.block(("h", i), origin) for i in range(1, n)]
    if any(y is None for y in ys):
        raise ValueError("missing Cartan blocks at the origin")
    Y = casimir_block(module)
    lam = mat_trace(Y) / dim
    eye = mat_eye(dim)
    if not mat_is_zero(mat_pow(mat_sub(Y, mat_scale(lam, eye)), dim)):
        raise ValueError("Casimir block has more than one eigenvalue")
    if lam == 0:
        raise ValueError("singular case: Casimir eigenvalue is zero")
    root = _rational_sqrt(lam)
    if root is None:
        raise ValueError("Casimir eigenvalue %s is not a rational square" % lam)
    nil = mat_sub(mat_scale(ONE / lam, Y), eye)
    series = mat_scalar(0, dim)
    power = eye
    for j in range(dim):
        series = mat_add(series, mat_scale(_binom_half(j), power))
        power = mat_mul(power, nil)
    x1 = None
    yprime = None
    for sign in (root, -root):
        cand_root = mat_scale(sign, series)
        cand = mat_sub(mat_add(ys[0], cand_root), eye)
        cand = mat_scale(Fraction(1, 2), cand)
        cand = mat_sub(cand, mat_scale(a[0], eye))
        if mat_is_nilpotent(cand):
            x1 = cand
            yprime = cand_root
            break
    if x1 is None:
        raise ValueError("no square-root branch makes the first matrix nilpotent")
    xs = [x1]
    x2 = mat_scale(Fraction(1, 2), mat_sub(mat_sub(yprime, ys[0]), eye))
    x2 = mat_sub(x2, mat_scale(a[1], eye))
    xs.append(x2)
    # the Cartan block at the origin is X_i - X_(i+1) + (a_i - a_(i+1)),
    # so the next matrix is X_i - Y_i plus the parameter difference
    for i in range(2, n):
        nxt = mat_add(mat_sub(xs[i - 1], ys[i - 1]), mat_scale(a[i - 1] - a[i], eye))
        xs.append(nxt)
    for i, x in enumerate(xs):
        if not mat_is_nilpotent(x):
            raise ValueError("recovered matrix %d is not nilpotent" % (i + 1))
    return xs


def is_weight_module(module: LatticeModule) -> bool:
    """True iff every Cartan block is scalar."""
    eye = mat_eye(module.fiber_dim)
    for i in range(1, module.n):
        for p, m in module.blocks[("h", i)].items():
            if not mat_eq(m, mat_scale(m[0][0], eye)):
                return False
    return True


# ---------------------------------------------------------------------------
# the unique extension solver
# ---------------------------------------------------------------------------

def _extract_x(nprime: LatticeModule):
    """Read the fiber matrices of a build_f-style module at the origin."""
    n = nprime.n
    origin = (0,) * n
    eye = mat_eye(nprime.fiber_dim)
    xs = []
    blk = nprime.block(("e", 2, 1), origin)
    if blk is None:
        raise ValueError("radius too small to read the fiber matrices")
    xs.append(mat_sub(blk, mat_scale(nprime.a[0], eye)))
    for j in range(2, n + 1):
        blk = nprime.block(("e", j - 1, j), origin)
        if blk is None:
            raise ValueError("radius too small to read the fiber matrices")
        xs.append(mat_sub(blk, mat_scale(nprime.a[j - 1], eye)))
    return xs


def reconstruct_extension(n: int, a, nprime: LatticeModule, x_n, radius: int):
    """Extend an sl_(n-1) lattice module by one fiber matrix to sl_n.

    Returns (module, log).  The log records the solver's intermediate
    equalities: upward steps solve a factored quadratic whose admissible
    root equals the block one step below ("y = b"), downward steps solve a
    linear Serre constraint ("x = b - 1"), and the last vertical generator
    solves a linear equation whose solution coincides with its horizontal
    neighbour ("x = b").  Raises NoUniqueExtension when a genericity
    inversion fails.
    """
    a = check_parameters(a, n)
    if nprime.n != n - 1 or n < 3:
        raise ValueError("nprime must be an sl_(n-1) module, n >= 3")
    if nprime.a != a[: n - 1]:
        raise ValueError("parameter mismatch with nprime")
    if nprime.support.radius < radius:
        raise ValueError("nprime must cover the requested radius")
    for i in range(n):
        for j in range(i + 1, n):
            if (a[i] + a[j]).denominator == 1:
                raise NoUniqueExtension("a_%d + a_%d is an integer" % (i + 1, j + 1))
    dim = nprime.fiber_dim
    eye = mat_eye(dim)
    if not mat_is_nilpotent(x_n):
        raise ValueError("the new fiber matrix must be nilpotent")
    xs_prev = _extract_x(nprime)
    for i, x in enumerate(xs_prev):
        if not mat_commute(x, x_n):
            raise ValueError("new fiber matrix does not commute with X_%d" % (i + 1))

    support = LatticeSupport(n, radius)
    blocks = {key: {} for key in generator_keys(n)}
    log = {"y_equals_b": 0, "x_equals_b_minus_1": 0, "last_x_equals_b": 0, "last_solved": 0}

    def cblock(p):
        return mat_add(x_n, mat_scale(a[n - 1] + p[n - 1], eye))

    sigma_u = _shift(n, n - 1, n)

    # e_{n-1,n} comes with the chosen bases
    key_u = ("e", n - 1, n)
    for p in support.points:
        if _add(p, sigma_u) in support:
            blocks[key_u][p] = cblock(p)

    # the sl_(n-1) generators on the zero slice
    slice_keys = [("e", i, i + 1) for i in range(1, n - 1)] + [
        ("e", i + 1, i) for i in range(1, n - 1)
    ]
    for key in slice_keys:
        src = nprime.blocks.get(key, {})
        for q, m in src.items():
            p = q + (0,)
            tgt = _add(p, gen_shift(n, key))
            if p in support and tgt in support:
                blocks[key][p] = m

    def extend_by_commutation(key):
        """Fill a generator commuting with e_{n-1,n} level by level."""
        sg = gen_shift(n, key)
        for level in range(1, radius + 1):
            for p in support.points:
                if p[n - 1] != -level or _add(p, sg) not in support:
                    continue
                q = tuple(x - y for x, y in zip(p, sigma_u))
                gq = blocks[key].get(q)
                if q not in support or gq is None:
                    continue
                u_at = cblock(_add(q, sg))
                inv = mat_inv(cblock(q))
                blocks[key][p] = mat_mul(u_at, mat_mul(gq, inv))
        for level in range(1, radius + 1):
            for p in support.points:
                if p[n - 1] != level or _add(p, sg) not in support:
                    continue
                q = _add(p, sigma_u)
                gq = blocks[key].get(q)
                if q not in support or gq is None:
                    continue
                inv = mat_inv(cblock(_add(p, sg)))
                blocks[key][p] = mat_mul(inv, mat_mul(gq, cblock(p)))

    for i in range(1, n - 2):
        extend_by_commutation(("e", i, i + 1))
    for i in range(1, n - 1):
        extend_by_commutation(("e", i + 1, i))

    # e_{n-2,n-1}: upward via the factored quadratic, downward via Serre
    key_g = ("e", n - 2, n - 1)
    key_back = ("e", n - 1, n - 2)
    sg = gen_shift(n, key_g)
    for level in range(1, radius + 1):
        for p in support.points:
            if p[n - 1] != -level or _add(p, sg) not in support:
                continue
            bm_pt = tuple(x - y for x, y in zip(p, sigma_u))
            bl_pt = tuple(x - y for x, y in zip(bm_pt, sg))
            if bm_pt not in support or bl_pt not in support:
                continue
            b = blocks[key_g].get(bl_pt)
            bm = blocks[key_g].get(bm_pt)
            a1b = blocks[key_back].get(p)
            a2b = blocks[key_back].get(_add(p, sg))
            if b is None or bm is None or a1b is None or a2b is None:
                continue
            if not mat_eq(bm, mat_sub(b, eye)):
                raise AssertionError("lower row is not an arithmetic progression")
            # unique-root condition: (a+2) b - (b-1)(a+1) must be invertible
            cond = mat_sub(mat_mul(a2b, b), mat_mul(mat_sub(b, eye), a1b))
            if mat_inv(cond) is None:
                raise NoUniqueExtension("root separation fails at %s" % (p,))
            y = b
            # check the two defining constraints for the solved block
            x_guess = mat_add(b, eye)
            lhs5 = mat_sub(mat_mul(x_guess, a1b), mat_mul(y, a2b))
            rhs5 = mat_sub(a1b, b)
            if not mat_eq(lhs5, rhs5):
                raise AssertionError("commutator constraint fails at %s" % (p,))
            lhs6 = mat_add(
                mat_sub(mat_mul(y, x_guess), mat_scale(2, mat_mul(y, b))),
                mat_mul(b, mat_sub(b, eye)),
            )
            if not mat_is_zero(lhs6):
                raise AssertionError("Serre constraint fails at %s" % (p,))
            blocks[key_g][p] = y
            log["y_equals_b"] += 1
    for level in range(1, radius + 1):
        for p in support.points:
            if p[n - 1] != level or _add(p, sg) not in support:
                continue
            q1 = _add(p, sigma_u)
            q2 = _add(q1, sigma_u)
            b = blocks[key_g].get(q1)
            b1 = blocks[key_g].get(q2) if q2 in support else None
            if q1 not in support or b is None or b1 is None:
                continue
            if not mat_eq(b1, mat_add(b, eye)):
                raise AssertionError("upper row is not an arithmetic progression")
            blocks[key_g][p] = mat_sub(b, eye)
            log["x_equals_b_minus_1"] += 1

    # e_{n,n-1}: the linear equation from the two commuting squares
    key_d = ("e", n, n - 1)
    sd = gen_shift(n, key_d)
    for p in support.points:
        if _add(p, sd) not in support:
            continue
        tl = _add(p, sigma_u)
        bl = _add(p, sd)
        needed = [tl, bl, _add(p, sg), _add(tl, sg), _add(bl, sg)]
        if any(q not in support for q in needed):
            continue
        b = blocks[key_g].get(p)
        bp1 = blocks[key_g].get(tl)
        bm1 = blocks[key_g].get(bl)
        if b is None or bp1 is None or bm1 is None:
            continue
        if not mat_eq(bp1, mat_add(b, eye)) or not mat_eq(bm1, mat_sub(b, eye)):
            raise AssertionError("horizontal blocks out of step at %s" % (p,))
        c = cblock(p)
        cinv = mat_inv(c)
        if cinv is None:
            raise NoUniqueExtension("vertical block not invertible at %s" % (p,))
        binv = mat_inv(b)
        if binv is None:
            raise NoUniqueExtension("horizontal block not invertible at %s" % (p,))
        cp1 = mat_add(c, eye)
        # unknown x = block at p; u = x c^-1 (c+1) - b c^-1 + 1,
        # y = x (b-1) b^-1, v = y c^-1 (c+1) - b c^-1 + 1 + c^-1,
        # constraint: b u = v (b+1)
        coef_u = mat_mul(cinv, cp1)
        const_u = mat_add(mat_scale(-1, mat_mul(b, cinv)), eye)
        coef_v = mat_mul(mat_mul(mat_sub(b, eye), binv), coef_u)
        const_v = mat_add(const_u, cinv)
        A = mat_sub(mat_mul(b, coef_u), mat_mul(coef_v, bp1))
        C = mat_sub(mat_mul(b, const_u), mat_mul(const_v, bp1))
        Ainv = mat_inv(A)
        if Ainv is None:
            raise NoUniqueExtension("linear solve is singular at %s" % (p,))
        x = mat_scale(-1, mat_mul(Ainv, C))
        log["last_solved"] += 1
        if mat_eq(x, b):
            log["last_x_equals_b"] += 1
        blocks[key_d][p] = x

    # Cartan blocks from the commutators where both compositions exist
    for i in range(1, n):
        ke, kf = ("e", i, i + 1), ("e", i + 1, i)
        se, sf = gen_shift(n, ke), gen_shift(n, kf)
        for p in support.points:
            fe = blocks[kf].get(p)
            ef = blocks[ke].get(_add(p, sf)) if fe is not None else None
            ee = blocks[ke].get(p)
            ff = blocks[kf].get(_add(p, se)) if ee is not None else None
            if fe is None or ef is None or ee is None or ff is None:
                continue
            blocks[("h", i)][p] = mat_sub(mat_mul(ef, fe), mat_mul(ff, ee))

    module = LatticeModule(n, a, support, dim, blocks)
    return module, log


def compare_modules(m1: LatticeModule, m2: LatticeModule):
    """Blockwise comparison on the common domain."""
    matched = 0
    mismatched = []
    only_first = only_second = 0
    keys = set(m1.blocks) | set(m2.blocks)
    for key in keys:
        b1 = m1.blocks.get(key, {})
        b2 = m2.blocks.get(key, {})
        for p in set(b1) | set(b2):
            in1, in2 = p in b1, p in b2
            if in1 and in2:
                if mat_eq(b1[p], b2[p]):
                    matched += 1
                else:
                    mismatched.append((key, p))
            elif in1:
                only_first += 1
            else:
                only_second += 1
    return {
        "matched": matched,
        "mismatched": mismatched,
        "only_first": only_first,
        "only_second": only_second,
    }


def module_dump(module: LatticeModule) -> dict:
    """Per-generator block listings keyed by support point, serializable."""
    from .linalg import fmt_fraction

    def keyname(key):
        if key[0] == "h":
            return "h%d" % key[1]
        return "e%d%d" % (key[1], key[2])

    out = {
        "n": module.n,
        "radius": module.support.radius,
        "fiber_dim": module.fiber_dim,
        "parameters": [fmt_fraction(x) for x in module.a],
        "blocks": {},
    }
    for key in sorted(module.blocks, key=keyname):
        listing = {}
        for p in sorted(module.blocks[key]):
            m = module.blocks[key][p]
            listing[",".join(str(x) for x in p)] = [
                [fmt_fraction(x) for x in row] for row in m
            ]
        out["blocks"][keyname(key)] = listing
    return out


def random_parameters(n: int, rng, extension_safe=False):
    """Rationals with small denominators, avoiding the integrality walls."""
    while True:
        a = tuple(
            Fraction(rng.randint(-6, 6) * 2 + 1, rng.choice([2, 3, 4, 5]))
            for _ in range(n)
        )
        if any(x.denominator == 1 for x in a):
            continue
        if extension_safe and any(
            (a[i] + a[j]).denominator == 1
            for i in range(n)
            for j in range(i + 1, n)
        ):
            continue
        return a


def random_commuting_nilpotents(n: int, dim: int, rng):
    """n commuting nilpotent matrices: polynomials in one Jordan block."""
    base = [[ONE if j == i + 1 else ZERO for j in range(dim)] for i in range(dim)]
    out = []
    for _ in range(n):
        coeffs = [fr(rng.randint(-3, 3)) for _ in range(dim - 1)]
        m = mat_scalar(0, dim)
        p = base
        for c in coeffs:
            m = mat_add(m, mat_scale(c, p))
            p = mat_mul(p, base)
        out.append(m)
    return out
