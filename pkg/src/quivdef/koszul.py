"""Minimal graded free resolutions of simple modules and linearity.

Works over any nonnegatively graded algebra with vertex idempotents in
degree zero, presented through a small view object (either a finite
dimensional algebra with a chosen grading, or a degreewise-computed graded
quotient).  The resolution of the simple at a vertex is built step by
step: the kernel of the current cover is computed degree by degree, its
minimal generators are the complement of J*kernel inside the kernel
(split per target vertex so each generator sits at a vertex), and a new
free cover is assembled from them.

The algebra is Koszul on the computed window exactly when every step-j
syzygy generator sits in internal degree j; the certificate reports the
full (homological step, internal degree) -> generator count table, plus
the minimality and degreewise Euler characteristic cross-checks.
"""

from __future__ import annotations

from .linalg import ONE, ZERO, RowReducer, nullspace
from .quiver import FiniteDimAlgebra, GradedQuotient


class GradedAlgebraView:
    """comp(d) lists (source, target) per basis element; mul is local."""

    def __init__(self, comp_fn, mul_fn, vertices, generator_degree: int):
        self._comp = comp_fn
        self.mul = mul_fn
        self.vertices = list(vertices)
        self.generator_degree = generator_degree
        self._cache = {}

    def comp(self, d: int):
        if d not in self._cache:
            self._cache[d] = list(self._comp(d))
        return self._cache[d]

    def dim(self, d: int) -> int:
        return len(self.comp(d))


def view_from_graded_quotient(gq: GradedQuotient) -> GradedAlgebraView:
    def comp_fn(d):
        return [(p.source, p.target) for p in gq.component(d)]

    def mul_fn(d1, i1, d2, i2):
        return gq.mul_basis(d1, i1, d2, i2)

    gen_deg = max(a.degree for a in gq.quiver.arrows)
    return GradedAlgebraView(comp_fn, mul_fn, gq.quiver.vertices, gen_deg)


def view_from_algebra(alg: FiniteDimAlgebra, grading: str | None = None) -> GradedAlgebraView:
    degs = alg.alt_gradings[grading] if grading else alg.degrees
    by_deg: dict[int, list[int]] = {}
    for i, d in enumerate(degs):
        by_deg.setdefault(d, []).append(i)
    pos: dict[int, tuple] = {}
    for d, idxs in by_deg.items():
        for loc, i in enumerate(idxs):
            pos[i] = (d, loc)

    def comp_fn(d):
        return [(alg.source[i], alg.target[i]) for i in by_deg.get(d, [])]

    def mul_fn(d1, i1, d2, i2):
        gi = by_deg[d1][i1]
        gj = by_deg[d2][i2]
        out = {}
        for l, c in alg.mul_basis(gi, gj).items():
            dl, loc = pos[l]
            if dl != d1 + d2:
                raise ValueError("multiplication does not respect the grading")
            out[loc] = c
        return out

    if grading and grading in alg.alt_arrow_degrees:
        gen_deg = max(alg.alt_arrow_degrees[grading].values())
    else:
        gen_deg = alg.quiver.max_arrow_degree()
    return GradedAlgebraView(comp_fn, mul_fn, alg.quiver.vertices, gen_deg)


class FreeCover:
    """A graded free module, one projective per (vertex, shift) generator."""

    def __init__(self, view: GradedAlgebraView, gens):
        self.view = view
        self.gens = list(gens)  # (vertex, degree)
        self._comp = {}
        self._index = {}

    def comp(self, d: int):
        """Basis of the degree-d piece: (gen index, algebra (deg, local))."""
        if d in self._comp:
            return self._comp[d]
        out = []
        for g, (v, s) in enumerate(self.gens):
            if d - s < 0:
                continue
            for i, (src, _tgt) in enumerate(self.view.comp(d - s)):
                if src == v:
                    out.append((g, (d - s, i)))
        self._comp[d] = out
        return out

    def index(self, d: int):
        if d not in self._index:
            self._index[d] = {key: r for r, key in enumerate(self.comp(d))}
        return self._index[d]

    def target_vertex(self, key):
        g, (dm, im) = key
        return self.view.comp(dm)[im][1]

    def left_mul(self, ad: int, ai: int, d: int, vec: dict) -> dict:
        """Multiply a degree-d module vector by an algebra element."""
        out = {}
        idx = self.index(d + ad)
        comp = self.comp(d)
        for r, c in vec.items():
            g, (dm, im) = comp[r]
            for jm, x in self.view.mul(ad, ai, dm, im).items():
                rr = idx[(g, (dm + ad, jm))]
                y = out.get(rr, ZERO) + c * x
                if y:
                    out[rr] = y
                else:
                    del out[rr]
        return out


def minimal_resolution(view: GradedAlgebraView, vertex, max_hom: int, max_int: int):
    """Resolve the simple at a vertex; returns the syzygy degree table.

    Degrees are tracked up to max_int, homological steps up to max_hom.
    The result records, per step, the (vertex, degree) list of minimal
    generators, whether every connecting map has entries in the graded
    radical, and the degreewise Euler characteristic check.
    """
    if max_int < max_hom * view.generator_degree:
        raise ValueError(
            "internal degree budget %d cannot certify %d steps" % (max_int, max_hom)
        )
    vertex = str(vertex)
    f0 = FreeCover(view, [(vertex, 0)])
    covers = [f0]
    # kernel of F0 -> S_vertex: everything in positive degree
    kernel = {d: [{r: ONE} for r in range(len(f0.comp(d)))] for d in range(1, max_int + 1)}
    kernel[0] = []
    table = []
    minimal_ok = True

    for step in range(1, max_hom + 1):
        prev = covers[-1]
        gens = []
        gen_vectors = []
        reducers = {d: RowReducer() for d in range(max_int + 1)}
        for d in range(max_int + 1):
            red = reducers[d]
            # span of J * kernel in degree d
            for g in range(1, d + 1):
                for ai in range(view.dim(g)):
                    for vec in kernel.get(d - g, []):
                        w = prev.left_mul(g, ai, d - g, vec)
                        if w:
                            red.add(w)
            comp = prev.comp(d)
            for vec in kernel.get(d, []):
                # split by target vertex so generators are vertex-pure
                for w in view.vertices:
                    piece = {r: c for r, c in vec.items() if prev.target_vertex(comp[r]) == w}
                    if piece and red.add(piece) is not None:
                        gens.append((w, d))
                        gen_vectors.append((d, piece))
                        if any(comp[r][1][0] == 0 for r in piece):
                            minimal_ok = False
        table.append(sorted(gens, key=lambda t: (t[1], t[0])))
        cover = FreeCover(view, gens)
        covers.append(cover)
        new_kernel = {}
        for d in range(max_int + 1):
            cols = []
            comp = cover.comp(d)
            for (g, (dm, im)) in comp:
                vdeg, vvec = gen_vectors[g]
                cols.append(prev.left_mul(dm, im, vdeg, vvec))
            nrows = len(prev.comp(d))
            rows: dict[int, dict] = {}
            for ci, col in enumerate(cols):
                for r, x in col.items():
                    rows.setdefault(r, {})[ci] = x
            null = nullspace([rows.get(r, {}) for r in range(nrows)], len(cols))
            new_kernel[d] = [
                {i: c for i, c in enumerate(v) if c} for v in null
            ]
        kernel = new_kernel

    euler_ok = True
    for d in range(max_int + 1):
        total = 0
        for j, cov in enumerate(covers):
            total += (-1) ** j * len(cov.comp(d))
        total += (-1) ** (len(covers)) * len(kernel.get(d, []))
        want = 1 if d == 0 else 0
        if total != want:
            euler_ok = False
    return {
        "vertex": vertex,
        "steps": table,
        "minimal": minimal_ok,
        "euler_ok": euler_ok,
        "max_hom": max_hom,
        "max_int": max_int,
    }


def resolution_step_degrees(resolution, step: int):
    return sorted(d for _v, d in resolution["steps"][step - 1])


def is_linear(resolution) -> bool:
    for j, gens in enumerate(resolution["steps"], start=1):
        if any(d != j for _v, d in gens):
            return False
    return True


def koszulity_certificate(view: GradedAlgebraView, max_hom: int, max_int: int):
    """Per-simple linearity verdicts over the given graded algebra view."""
    out = {}
    for v in view.vertices:
        res = minimal_resolution(view, v, max_hom, max_int)
        out[v] = {
            "linear": is_linear(res),
            "table": [
                {"step": j + 1, "degrees": sorted(d for _w, d in gens)}
                for j, gens in enumerate(res["steps"])
            ],
            "minimal": res["minimal"],
            "euler_ok": res["euler_ok"],
        }
    out["all_linear"] = all(out[v]["linear"] for v in view.vertices)
    return out
