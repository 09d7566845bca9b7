"""Truncated multi-parameter star products and their verification.

A StarProduct deforms the multiplication of a finite dimensional algebra:
x * y = xy + sum over nonzero multi-indices d of mu_d(x, y) u^d, truncated
at total degree `order`.  The mu_d are degree-2 cochains in the reduced
sense, so they vanish whenever an argument is an idempotent and the sum of
the vertex idempotents stays a strict unit.

check_associativity verifies, for every multi-index up to the order and
every basis triple, the convolution identity that expresses associativity
of the star product order by order.  extend_order_by_order builds a
one-parameter family from a single 2-cocycle by solving the coboundary
equation for each next term, reporting the obstruction class when the
right-hand side fails to be a coboundary.  verify_deformation_map checks a
proposed isomorphism from a star product onto an honestly multiplied
truncated algebra: unit, homomorphism property, bijectivity, and identity
modulo the deformation parameters.
"""

from __future__ import annotations

import itertools

from .linalg import ONE, ZERO, RowReducer, fr
from .truncpoly import TruncPoly
from .quiver import FiniteDimAlgebra
from .hochschild import (
    HochschildComplex,
    cochain_eval,
    cochain_eval_vec_left,
    cochain_eval_vec_right,
    is_associative_cochain,
    is_coboundary,
    is_cocycle,
    validate_cochain,
)


class Obstructed(Exception):
    def __init__(self, order, cls):
        super().__init__("obstructed at order %d" % order)
        self.order = order
        self.obstruction = cls


def multi_indices(m: int, max_total: int, include_zero=True):
    """All d in Z_+^m with |d| <= max_total, by total degree then lex."""
    out = []
    for total in range(0 if include_zero else 1, max_total + 1):
        for c in itertools.combinations_with_replacement(range(m), total):
            d = [0] * m
            for i in c:
                d[i] += 1
            out.append(tuple(d))
    seen = sorted(set(out), key=lambda d: (sum(d), d))
    return seen


def sub_indices(d):
    """All d' <= d componentwise."""
    ranges = [range(x + 1) for x in d]
    return [tuple(t) for t in itertools.product(*ranges)]


class StarProduct:
    def __init__(self, base: FiniteDimAlgebra, params: int, order: int, family: dict):
        self.base = base
        self.params = params
        self.order = order
        self.variables = ("t",) if params == 1 else tuple("u%d" % (i + 1) for i in range(params))
        self.family = {}
        radical = set(base.radical_indices())
        for d, c in family.items():
            d = tuple(int(x) for x in d)
            if len(d) != params:
                raise ValueError("multi-index %r has wrong length" % (d,))
            if sum(d) == 0:
                raise ValueError("the zero index is the base multiplication")
            if sum(d) > order or not c:
                continue
            bad = validate_cochain(base, c)
            if bad is not None:
                raise ValueError("vertex-inconsistent cochain at %s" % (bad,))
            for (i, j) in c:
                if i not in radical or j not in radical:
                    # idempotent slots would break strict unitality
                    raise ValueError("cochain takes idempotent arguments at %s" % ((i, j),))
            self.family[d] = c

    def mu_pair(self, d, i: int, j: int) -> dict:
        """mu_d(b_i, b_j); the zero index is the honest product."""
        if sum(d) == 0:
            return self.base.mul_basis(i, j)
        return cochain_eval(self.family.get(d, {}), i, j)

    def mu_left(self, d, vec: dict, j: int) -> dict:
        if sum(d) == 0:
            return self.base.mul(vec, {j: ONE})
        return cochain_eval_vec_left(self.base, self.family.get(d, {}), vec, j)

    def mu_right(self, d, i: int, vec: dict) -> dict:
        if sum(d) == 0:
            return self.base.mul({i: ONE}, vec)
        return cochain_eval_vec_right(self.base, self.family.get(d, {}), i, vec)

    # -- elements over the truncated parameter ring --------------------------

    def poly(self, c=1) -> TruncPoly:
        return TruncPoly.const(c, self.variables, self.order)

    def monomial(self, d) -> TruncPoly:
        return TruncPoly.monomial(self.variables, self.order, d)

    def element(self, vec: dict) -> dict:
        return {i: self.poly(c) for i, c in vec.items()}

    def unit_element(self) -> dict:
        return self.element(self.base.unit())

    def star_basis(self, i: int, j: int) -> dict:
        """b_i * b_j as {multi-index: value vector}, including the zero index."""
        out = {}
        prod = self.base.mul_basis(i, j)
        if prod:
            out[(0,) * self.params] = prod
        for d, c in self.family.items():
            v = cochain_eval(c, i, j)
            if v:
                out[d] = v
        return out

    def star(self, x: dict, y: dict) -> dict:
        """Star product of elements with TruncPoly coefficients."""
        out: dict = {}
        for i, p in x.items():
            for j, q in y.items():
                pq = p * q
                if not pq:
                    continue
                for d, vec in self.star_basis(i, j).items():
                    shift = pq * self.monomial(d)
                    if not shift:
                        continue
                    for l, c in vec.items():
                        cur = out.get(l)
                        add = shift * c
                        out[l] = add if cur is None else cur + add
        return {l: p for l, p in out.items() if p}

    def at_zero(self, x: dict) -> dict:
        """Reduce an element modulo the parameters."""
        out = {}
        for i, p in x.items():
            c = p.constant_term()
            if c:
                out[i] = c
        return out

    def family_table(self) -> dict:
        """The family as a serializable table with exact coefficients."""
        from .linalg import fmt_fraction

        labels = self.base.labels
        out = {}
        for d in sorted(self.family):
            table = {}
            for (i, j), vec in sorted(self.family[d].items()):
                table["%s,%s" % (labels[i], labels[j])] = {
                    labels[l]: fmt_fraction(x) for l, x in sorted(vec.items())
                }
            out[",".join(str(x) for x in d)] = table
        return out


def check_associativity(S: StarProduct):
    """None, or a witness (multi-index, labels of the failing triple).

    Verifies, for every multi-index d with |d| <= order and all basis
    triples, that the order-d component of (a*b)*c - a*(b*c) vanishes.
    """
    alg = S.base
    dim = alg.dim
    indices = multi_indices(S.params, S.order)
    active = set(alg.table)
    for c in S.family.values():
        active |= set(c)
    triples = set()
    for (i, j) in active:
        for l in range(dim):
            triples.add((i, j, l))
            triples.add((l, i, j))
    for d in indices:
        splits = [(dp, tuple(x - y for x, y in zip(d, dp))) for dp in sub_indices(d)]
        for (i, j, l) in sorted(triples):
            lhs: dict = {}
            rhs: dict = {}
            for dp, dq in splits:
                for out, x in S.mu_left(dp, S.mu_pair(dq, i, j), l).items():
                    y = lhs.get(out, ZERO) + x
                    if y:
                        lhs[out] = y
                    else:
                        del lhs[out]
                for out, x in S.mu_right(dp, i, S.mu_pair(dq, j, l)).items():
                    y = rhs.get(out, ZERO) + x
                    if y:
                        rhs[out] = y
                    else:
                        del rhs[out]
            if lhs != rhs:
                return (d, (alg.labels[i], alg.labels[j], alg.labels[l]))
    return None


def deform_from_cocycle(alg: FiniteDimAlgebra, nu: dict, coeffs: dict, params: int, order: int, verify=True) -> StarProduct:
    """The star product with mu_d = coeffs[d] * nu.

    nu must be an associative 2-cocycle; associativity of the result is
    then automatic, and re-verified unless verify=False.
    """
    ok, witness = is_cocycle(alg, nu)
    if not ok:
        raise ValueError("not a 2-cocycle: witness %s" % (witness,))
    ok, witness = is_associative_cochain(alg, nu)
    if not ok:
        raise ValueError("cocycle is not associative: witness %s" % (witness,))
    family = {}
    for d, c in coeffs.items():
        c = fr(c)
        if not c:
            continue
        family[tuple(d)] = {
            pair: {l: c * x for l, x in vec.items()} for pair, vec in nu.items()
        }
    S = StarProduct(alg, params, order, family)
    if verify:
        witness = check_associativity(S)
        if witness is not None:
            raise AssertionError("flat deformation failed associativity at %s" % (witness,))
    return S


def extend_order_by_order(alg: FiniteDimAlgebra, mu1: dict, order: int, prescribed=None) -> StarProduct:
    """Extend a 2-cocycle to a one-parameter star product up to the order.

    At each order k the right-hand side assembled from the lower terms is
    checked to be a 3-cocycle and the coboundary equation is solved for
    mu_k, taking the reduced-echelon particular solution (free variables
    zero) for reproducibility.  Raises Obstructed when no solution exists.
    `prescribed` optionally fixes some higher terms {order: cochain}
    instead of solving for them (they must still satisfy the equations,
    which the solver verifies by substitution).
    """
    ok, witness = is_cocycle(alg, mu1)
    if not ok:
        raise ValueError("not a 2-cocycle: witness %s" % (witness,))
    cx = HochschildComplex(alg)
    mus = {1: mu1}
    prescribed = prescribed or {}

    def mu_of(k):
        return mus.get(k, {})

    for k in range(2, order + 1):
        rhs: dict = {}
        for t in cx.tuples(3):
            u, v, w = t
            val: dict = {}
            for i in range(1, k):
                inner = cochain_eval(mu_of(k - i), v, w)
                for l, x in cochain_eval_vec_right(alg, mu_of(i), u, inner).items():
                    y = val.get(l, ZERO) + x
                    if y:
                        val[l] = y
                    else:
                        del val[l]
                inner = cochain_eval(mu_of(k - i), u, v)
                for l, x in cochain_eval_vec_left(alg, mu_of(i), inner, w).items():
                    y = val.get(l, ZERO) - x
                    if y:
                        val[l] = y
                    else:
                        del val[l]
            if val:
                rhs[t] = val
        if rhs and cx.apply_d(3, rhs):
            raise AssertionError("right-hand side at order %d is not a 3-cocycle" % k)
        neg = {t: {l: -x for l, x in vec.items()} for t, vec in rhs.items()}
        if k in prescribed:
            muk = prescribed[k]
            if cx.apply_d(2, muk) != neg:
                raise ValueError("prescribed term at order %d violates the equation" % k)
        else:
            muk = cx.solve_coboundary(3, neg)
            if muk is None:
                raise Obstructed(k, rhs)
        if muk:
            mus[k] = muk
    return StarProduct(alg, 1, order, {(k,): c for k, c in mus.items()})


def infinitesimal_class(S: StarProduct):
    """Per parameter direction: 'trivial'/'nontrivial', with cobounding witness."""
    out = []
    for i in range(S.params):
        eps = tuple(1 if j == i else 0 for j in range(S.params))
        c = S.family.get(eps, {})
        if not c:
            out.append({"direction": i, "verdict": "trivial", "witness": None})
            continue
        found, f = is_coboundary(S.base, c)
        out.append(
            {
                "direction": i,
                "verdict": "trivial" if found else "nontrivial",
                "witness": f,
            }
        )
    return out


def mu_star_product(k: int, order: int, verify=False) -> StarProduct:
    """The one-parameter star product x*y = xy + mu(x,y) t on make_a(k)."""
    from .families import make_a
    from .hochschild import mu_cocycle

    alg = make_a(k)
    return deform_from_cocycle(alg, mu_cocycle(alg), {(1,): 1}, params=1, order=order, verify=verify)


def psi_target(k: int, order: int):
    """The loop-quiver quotient by t(k)^(order+1), as a finite algebra."""
    from .families import central_t, make_bhat
    from .quiver import CentralQuotient

    gq = make_bhat(k, "loops_two")
    t = central_t(gq)
    cq = CentralQuotient(gq, t, 2, power=order + 1)
    target = cq.to_algebra(2 * order + 3)
    return gq, cq, t, target


def verify_psi(k: int, order: int, scale=1):
    """Verify the explicit deformation isomorphism at a truncation order.

    Builds the mu-deformation of make_a(k), the quotient of the loop-quiver
    algebra by the (order+1)-st power of its central degree-2 element, the
    image table, and runs verify_deformation_map with the projection onto
    make_a(k) as the identity-mod-m reduction.  `scale` rescales the image
    of the deformation parameter (useful as a negative control).
    """
    from .families import apply_on_path, make_a, phi_arrow_images, psi_basis_images

    alg = make_a(k)
    S = mu_star_product(k, order)
    gq, cq, t, target = psi_target(k, order)
    if target.dim != (order + 1) * (4 * k - 2):
        raise AssertionError("truncated quotient has unexpected dimension")

    def path_to_target(p):
        vec = cq.project(p.degree, gq.reduce_path(p))
        comp = gq.component(p.degree)
        return {target.index[comp[i]]: x for i, x in vec.items()}

    images = {i: path_to_target(p) for i, p in psi_basis_images(alg, gq).items()}
    comp2 = gq.component(2)
    t_img = {target.index[comp2[i]]: fr(scale) * x for i, x in cq.project(2, t).items()}

    phi_im = phi_arrow_images(gq, alg)

    def reduction(tv):
        out: dict = {}
        for l, c in tv.items():
            for m, x in apply_on_path(alg, phi_im, target.basis[l]).items():
                y = out.get(m, ZERO) + c * x
                if y:
                    out[m] = y
                else:
                    del out[m]
        return out

    report = verify_deformation_map(S, target, images, [t_img], reduction)
    report["target_dim"] = target.dim
    return report


def is_central(alg: FiniteDimAlgebra, z: dict) -> bool:
    return all(
        alg.mul(z, {i: ONE}) == alg.mul({i: ONE}, z) for i in range(alg.dim)
    )


def verify_deformation_map(S: StarProduct, target: FiniteDimAlgebra, images: dict, param_images: list, reduction=None):
    """Check that basis images + parameter images define a deformation iso.

    images: base basis index -> element of target; param_images: one
    central element of target per parameter.  Checks performed:
    unit preservation, centrality of the parameter images, multiplicativity
    against the star product on every basis pair, bijectivity onto the
    target, and (when a reduction map target-element -> base-element is
    supplied) identity modulo the parameters.  Returns a report dict; the
    'witness' field carries the first failing pair.
    """
    alg = S.base
    report = {
        "unit": None,
        "params_central": None,
        "homomorphism": None,
        "witness": None,
        "bijective": None,
        "identity_mod_m": None,
    }
    one = {}
    for v, i in alg.idempotent.items():
        for l, x in images[i].items():
            one[l] = one.get(l, ZERO) + x
    report["unit"] = {l: x for l, x in one.items() if x} == target.unit()
    report["params_central"] = all(is_central(target, tz) for tz in param_images)

    def power(d):
        out = target.unit()
        for i, e in enumerate(d):
            for _ in range(e):
                out = target.mul(out, param_images[i])
        return out

    def push(parts: dict) -> dict:
        total: dict = {}
        for d, vec in parts.items():
            td = power(d)
            img: dict = {}
            for i, c in vec.items():
                for l, x in images[i].items():
                    y = img.get(l, ZERO) + c * x
                    if y:
                        img[l] = y
                    else:
                        del img[l]
            for l, x in target.mul(img, td).items():
                y = total.get(l, ZERO) + x
                if y:
                    total[l] = y
                else:
                    del total[l]
        return total

    ok = True
    for i in range(alg.dim):
        for j in range(alg.dim):
            want = target.mul(images[i], images[j])
            have = push(S.star_basis(i, j))
            if want != have:
                ok = False
                report["witness"] = (alg.labels[i], alg.labels[j])
                break
        if not ok:
            break
    report["homomorphism"] = ok

    span = RowReducer()
    count = 0
    for d in multi_indices(S.params, S.order):
        td = power(d)
        for i in range(alg.dim):
            span.add(target.mul(images[i], td))
            count += 1
    report["bijective"] = span.rank == target.dim == count

    if reduction is not None:
        idok = True
        for i in range(alg.dim):
            if reduction(images[i]) != {i: ONE}:
                idok = False
                break
        report["identity_mod_m"] = idok
    report["ok"] = bool(
        report["unit"]
        and report["params_central"]
        and report["homomorphism"]
        and report["bijective"]
        and report["identity_mod_m"] in (None, True)
    )
    return report
