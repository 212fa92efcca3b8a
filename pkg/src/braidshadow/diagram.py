"""Torus shadow diagrams of bridge-trisected surfaces.

The flat torus is the unit square with opposite sides identified.  A
diagram built from a band factorization stacks one rectangular tile per
band, in reverse order (last factor on top), so that reading the diagram
top to bottom spells g_n s1^{-k_n} g_n^{-1} ... g_1 s1^{-k_1} g_1^{-1}.

Arc paths are stored as PL vertex lists in *lifted* coordinates: the
first vertex lies in [0,1)^2 and later vertices may leave the square;
reducing mod 1 gives the torus picture.  Every arc is oriented from its
(-) bridge point to its (+) bridge point.  Transversality is the
color-wise monotonicity of those oriented arcs: A strictly up, B strictly
left, C strictly decreasing in y - x.

Orientation convention: within a tile the (+) pair sits on the lower
band level and the (-) pair above it, so A arcs leaving a band upward
end at the next band's (+) points while moving monotonically up.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .factorization import BandFactor, Factorization, validate
from .garside import equal
from .words import BraidError, BraidWord, compose, full_twist, identity, invert

Point = tuple[float, float]


class DiagramError(ValueError):
    """Raised when a diagram is malformed or an operation's input is unusable."""


def _r6(v: float) -> float:
    return round(v, 6)


def _mod1(v: float) -> float:
    m = v - int(v // 1)
    return _r6(m if m < 1.0 else 0.0)


@dataclass(frozen=True)
class BridgePoint:
    ident: int
    x: float
    y: float
    sign: int  # +1 or -1


@dataclass(frozen=True)
class Arc:
    color: str  # 'A', 'B' or 'C'
    start: int  # id of the (-) endpoint
    end: int  # id of the (+) endpoint
    path: tuple[Point, ...]  # lifted PL vertices, path[0] at the (-) point

    def segments(self) -> list[tuple[Point, Point]]:
        return list(zip(self.path, self.path[1:]))


@dataclass(frozen=True)
class TorusDiagram:
    strands: int
    bridge_points: tuple[BridgePoint, ...]
    arcs: tuple[Arc, ...]
    stabilization_count: int = 0

    def point(self, ident: int) -> BridgePoint:
        return self.bridge_points[ident]

    def arcs_of(self, color: str) -> list[Arc]:
        return [a for a in self.arcs if a.color == color]

    @property
    def bridge_number(self) -> int:
        return len(self.bridge_points) // 2

    @property
    def tile_count(self) -> int:
        return (self.bridge_number - self.stabilization_count) // 2


@dataclass(frozen=True)
class BridgeParams:
    b: int
    c1: int
    c2: int
    c3: int
    s: int

    def euler(self) -> int:
        return self.c1 + self.c2 + self.c3 - self.b

    def tuple3(self) -> tuple[int, int, int, int]:
        return (self.b, self.c1, self.c2, self.c3)


@dataclass(frozen=True)
class TangleLink:
    """Solid-torus presentation of a pairwise tangle union L_lambda."""

    ambient: str  # 'H1', 'H2' or 'H3'
    braid: BraidWord | None  # braid part; None when all components are split
    components: tuple[str, ...]  # labels of split closed components
    orientation_reversed: bool = False
    framing: str | None = None


# Tile layout constants (tile-local y in [0, 1)).
_BOX_LO = (0.08, 0.32)  # g^{-1} box
_Y_PLUS = 0.42
_Y_MINUS = 0.58
_BOX_HI = (0.68, 0.92)  # g box


def _column_x(strands: int, pos: int) -> float:
    return _r6((pos + 1) / (strands + 1))


@dataclass(frozen=True)
class TileFragment:
    """One band's tile in tile-local coordinates.

    ``bridge_points``: four (x, y, sign) entries in the fixed order
    [+0, +1, -0, -1] (columns 0 and 1 of the band).  ``a_pieces`` maps
    each entry position to either ('through', path) or
    ('cut', lower_path, plus_index, upper_path, minus_index) where the
    indices refer to ``bridge_points``.  B and C arcs are complete and
    local: (minus_index, plus_index, path).
    """

    strands: int
    exponent: int
    bridge_points: tuple[tuple[float, float, int], ...]
    a_pieces: tuple[tuple, ...]
    b_arcs: tuple[tuple[int, int, tuple[Point, ...]], ...]
    c_arcs: tuple[tuple[int, int, tuple[Point, ...]], ...]
    a_crossing_count: int
    l2_label: str


def component_label(exponent: int) -> str:
    return "unknot" if exponent == 1 else f"T(2,{exponent + 1})"


def build_tile(factor: BandFactor) -> TileFragment:
    """Tile for one positive band g sigma_1^k g^{-1}.

    Negative bands are rejected: their tiles cannot keep the tangles
    positively transverse to the disk foliations.
    """
    if factor.sign != 1:
        raise DiagramError("cannot build a tile for a negative band factor")
    d = factor.strands
    g = factor.conjugator.letters
    x0, x1 = _column_x(d, 0), _column_x(d, 1)
    bridge = (
        (x0, _Y_PLUS, 1),
        (x1, _Y_PLUS, 1),
        (x0, _Y_MINUS, -1),
        (x1, _Y_MINUS, -1),
    )

    def run_box(word: tuple[int, ...], y_lo: float, y_hi: float, paths, cur):
        """Draw a braid box; ``cur[pos]`` = index into paths of the strand there."""
        m = len(word)
        for step, letter in enumerate(word):
            i = abs(letter) - 1
            ya = y_lo + (y_hi - y_lo) * step / m
            yb = y_lo + (y_hi - y_lo) * (step + 1) / m
            lo, hi = cur[i], cur[i + 1]
            paths[lo].extend([(_column_x(d, i), _r6(ya)), (_column_x(d, i + 1), _r6(yb))])
            paths[hi].extend([(_column_x(d, i + 1), _r6(ya)), (_column_x(d, i), _r6(yb))])
            cur[i], cur[i + 1] = hi, lo

    # Bottom-to-top the tile spells g^{-1}, band, g; read top-to-bottom that
    # is g s1^{-k} g^{-1}.  Bottom box letters bottom-to-top: letters of g;
    # top box: reversed(g).  (Shadow crossings ignore letter signs.)
    paths: list[list[Point]] = [[(_column_x(d, p), 0.0)] for p in range(d)]
    cur = list(range(d))
    run_box(g, *_BOX_LO, paths, cur)
    # band: strands at columns 0 and 1 are cut
    cut_at = {cur[0]: 0, cur[1]: 1}
    lower_ends: dict[int, tuple[list[Point], int]] = {}
    for path_idx, col in cut_at.items():
        paths[path_idx].append((_column_x(d, col), _Y_PLUS))
        lower_ends[path_idx] = (paths[path_idx], col)
    upper: list[list[Point]] = [None] * d  # type: ignore[list-item]
    for col in (0, 1):
        idx = cur[col]
        upper[idx] = [(_column_x(d, col), _Y_MINUS)]
        paths[idx] = upper[idx]
    run_box(tuple(reversed(g)), *_BOX_HI, paths, cur)
    for p in range(d):
        paths[cur[p]].append((_column_x(d, p), 1.0))
    if any(cur[p] != p for p in range(d)):
        raise DiagramError("tile permutation did not close up")

    def dedup(path):
        out = [path[0]]
        for v in path[1:]:
            if v != out[-1]:
                out.append(v)
        return tuple(out)

    a_pieces = []
    for p in range(d):
        if p in lower_ends:
            low_path, col = lower_ends[p]
            a_pieces.append(
                ("cut", dedup(low_path), col, dedup(upper[p]), col + 2)
            )
        else:
            a_pieces.append(("through", dedup(paths[p])))

    k = factor.exponent
    b_arcs = (
        (2, 0, ((x0, _Y_MINUS), (_r6(x0 - 1.0), _Y_PLUS))),
        (3, 1, ((x1, _Y_MINUS), (_r6(x1 - 1.0), _Y_PLUS))),
    )
    c_arcs = (
        (2, 1, ((x0, _Y_MINUS), (_r6(x1 + 1.0), _Y_PLUS))),
        (3, 0, ((x1, _Y_MINUS), (_r6(x0 + float(k)), _Y_PLUS))),
    )
    return TileFragment(
        strands=d,
        exponent=k,
        bridge_points=bridge,
        a_pieces=tuple(a_pieces),
        b_arcs=b_arcs,
        c_arcs=c_arcs,
        a_crossing_count=2 * len(g),
        l2_label=component_label(k),
    )


def _shift(path, scale: float, offset: float):
    return [(x, _r6(y * scale + offset)) for (x, y) in path]


def assemble(f: Factorization) -> TorusDiagram:
    """Stack tiles in reverse order into a torus diagram.

    The factorization must validate (product equal to the full twist) and
    every band must be positive.
    """
    if f.strands < 2:
        raise DiagramError("diagram assembly needs at least 2 strands")
    if not f.all_positive():
        raise DiagramError("diagram assembly rejects negative band factors")
    report = validate(f)
    if not report.valid:
        raise DiagramError("factorization does not multiply to the full twist")

    d = f.strands
    n = len(f.factors)
    h = 1.0 / n
    points: list[BridgePoint] = []
    arcs: list[Arc] = []

    # open A paths per column; starts[col] is ('origin',) for the y=0 cut
    # or ('minus', point_id)
    open_path: list[list[Point]] = [[] for _ in range(d)]
    open_start: list[tuple] = [("origin",) for _ in range(d)]
    pending: list[tuple[list[Point], int] | None] = [None] * d  # origin piece + its (+) id

    def extend(col: int, piece) -> None:
        path = open_path[col]
        for v in piece:
            if not path or path[-1] != v:
                path.append(v)

    # factors in order: factor 1 is the bottom tile, factor n the top
    for t, factor in enumerate(f.factors):
        tile = build_tile(factor)
        y0 = t * h
        base = len(points)
        for (x, y, sign) in tile.bridge_points:
            points.append(BridgePoint(len(points), x, _r6(y * h + y0), sign))
        for (mi, pi, path) in tile.b_arcs:
            arcs.append(Arc("B", base + mi, base + pi, tuple(_shift(path, h, y0))))
        for (mi, pi, path) in tile.c_arcs:
            arcs.append(Arc("C", base + mi, base + pi, tuple(_shift(path, h, y0))))
        for col, piece in enumerate(tile.a_pieces):
            if piece[0] == "through":
                extend(col, _shift(piece[1], h, y0))
            else:
                _, low, plus_local, up, minus_local = piece
                extend(col, _shift(low, h, y0))
                plus_id = base + plus_local
                minus_id = base + minus_local
                if open_start[col] == ("origin",):
                    pending[col] = (open_path[col], plus_id)
                else:
                    arcs.append(
                        Arc("A", open_start[col][1], plus_id, tuple(open_path[col]))
                    )
                open_path[col] = list(_shift(up, h, y0))
                open_start[col] = ("minus", minus_id)

    for col in range(d):
        if pending[col] is None:
            raise DiagramError(
                f"strand {col + 1} never meets a band; tangle would be closed"
            )
        head, plus_id = pending[col]
        merged = list(open_path[col])
        for (x, y) in head:
            v = (x, _r6(y + 1.0))
            if not merged or merged[-1] != v:
                merged.append(v)
        arcs.append(Arc("A", open_start[col][1], plus_id, tuple(merged)))

    return TorusDiagram(d, tuple(points), tuple(arcs), 0)


# ---------------------------------------------------------------------------
# crossings and mini-stabilization


def _seg_intersection(p, q, r, s):
    """Proper interior intersection of segments pq and rs, or None."""
    d1x, d1y = q[0] - p[0], q[1] - p[1]
    d2x, d2y = s[0] - r[0], s[1] - r[1]
    denom = d1x * d2y - d1y * d2x
    if abs(denom) < 1e-12:
        return None
    ex, ey = r[0] - p[0], r[1] - p[1]
    t = (ex * d2y - ey * d2x) / denom
    u = (ex * d1y - ey * d1x) / denom
    eps = 1e-9
    if eps < t < 1 - eps and eps < u < 1 - eps:
        return t, u, (p[0] + t * d1x, p[1] + t * d1y)
    return None


def a_crossings(diag: TorusDiagram):
    """All transverse crossings among A arcs on the torus.

    Returns a list of (arc_i, seg_i, t_i, arc_j, seg_j, point) with the
    point in the lifted coordinates of arc_i's segment.
    """
    segs = []
    for ai, arc in enumerate(diag.arcs):
        if arc.color != "A":
            continue
        for si, (p, q) in enumerate(arc.segments()):
            segs.append((ai, si, p, q, q[0] != p[0]))
    out = []
    for u in range(len(segs)):
        ai, si, p, q, diag1 = segs[u]
        for v in range(u + 1, len(segs)):
            bi, sj, r, s, diag2 = segs[v]
            if not (diag1 or diag2):
                continue
            if ai == bi and abs(si - sj) <= 1:
                continue
            lo = int((min(p[1], q[1]) - max(r[1], s[1])) // 1)
            hi = int((max(p[1], q[1]) - min(r[1], s[1])) // 1) + 1
            for my in range(lo, hi + 1):
                hit = _seg_intersection(p, q, (r[0], r[1] + my), (s[0], s[1] + my))
                if hit is not None:
                    t, _u, pt = hit
                    out.append((ai, si, t, bi, pt))
    return out


def mini_stabilize(diag: TorusDiagram) -> TorusDiagram:
    """Remove every A-arc crossing by a mini-stabilization.

    Each crossing cuts one of its two arcs at a new (+,-) bridge pair and
    inserts a tiny split unknot (one B arc wrapping left, one C arc
    wrapping right) between the new points, preserving transversality.
    b grows by 1 and c2 by 1 per removed crossing.
    """
    crossings = a_crossings(diag)
    if not crossings:
        return diag

    # Each crossing cuts the first of its two arcs; the cut point is given
    # in that arc's own lifted coordinates.
    by_arc: dict[int, list[tuple[int, float, Point]]] = {}
    for (ai, si, t, _bi, pt) in crossings:
        by_arc.setdefault(ai, []).append((si, t, pt))

    points = list(diag.bridge_points)
    arcs = list(diag.arcs)
    added = 0
    for ai, cuts in sorted(by_arc.items()):
        arc = diag.arcs[ai]
        cuts.sort(key=lambda c: (c[0], c[1]))
        pieces: list[tuple] = []  # (start_ref, path, end_ref)
        path: list[Point] = [arc.path[0]]
        start_ref: tuple = ("old", arc.start)
        verts = arc.path
        for si in range(len(verts) - 1):
            p, q = verts[si], verts[si + 1]
            seg_len = ((q[0] - p[0]) ** 2 + (q[1] - p[1]) ** 2) ** 0.5
            local = [c for c in cuts if c[0] == si]
            for ci, (_, t, pt) in enumerate(local):
                prev_t = local[ci - 1][1] if ci > 0 else 0.0
                next_t = local[ci + 1][1] if ci + 1 < len(local) else 1.0
                delta = min(
                    0.012,
                    (t - prev_t) * seg_len / 4.0,
                    (next_t - t) * seg_len / 4.0,
                )
                if delta < 2e-5:
                    raise DiagramError("crossings too tightly packed to stabilize")
                ux, uy = (q[0] - p[0]) / seg_len, (q[1] - p[1]) / seg_len
                plus_pt = (_r6(pt[0] - delta * ux), _r6(pt[1] - delta * uy))
                minus_pt = (_r6(pt[0] + delta * ux), _r6(pt[1] + delta * uy))
                path.append(plus_pt)
                pieces.append((start_ref, path, ("newplus", plus_pt, minus_pt)))
                path = [minus_pt]
                start_ref = ("newminus",)
            if path[-1] != q:
                path.append(q)
        pieces.append((start_ref, path, ("old", arc.end)))

        new_arcs: list[Arc] = []
        prev_minus_id: int | None = None
        for (sref, ppath, eref) in pieces:
            if sref == ("newminus",):
                start_id = prev_minus_id
            else:
                start_id = sref[1]
            if eref[0] == "newplus":
                _, plus_pt, minus_pt = eref
                plus_id = len(points)
                points.append(
                    BridgePoint(plus_id, _mod1(plus_pt[0]), _mod1(plus_pt[1]), 1)
                )
                minus_id = len(points)
                points.append(
                    BridgePoint(minus_id, _mod1(minus_pt[0]), _mod1(minus_pt[1]), -1)
                )
                end_id = plus_id
                # mini unknot: B wraps once to the left, C once to the right,
                # so both stay strictly monotone whatever the cut direction
                new_arcs.append(
                    Arc(
                        "B",
                        minus_id,
                        plus_id,
                        (minus_pt, (_r6(plus_pt[0] - 1.0), plus_pt[1])),
                    )
                )
                new_arcs.append(
                    Arc(
                        "C",
                        minus_id,
                        plus_id,
                        (minus_pt, (_r6(plus_pt[0] + 1.0), plus_pt[1])),
                    )
                )
                prev_minus_id = minus_id
                added += 1
            else:
                end_id = eref[1]
            new_arcs.insert(len(new_arcs), Arc("A", start_id, end_id, tuple(ppath)))
        arcs[ai] = None  # type: ignore[call-overload]
        arcs.extend(new_arcs)

    final_arcs = tuple(a for a in arcs if a is not None)
    out = TorusDiagram(
        diag.strands,
        tuple(points),
        final_arcs,
        diag.stabilization_count + added,
    )
    if a_crossings(out):
        raise DiagramError("stabilization left residual A crossings")
    return out


# ---------------------------------------------------------------------------
# transversality


@dataclass(frozen=True)
class Violation:
    arc_index: int
    color: str
    segment_index: int
    start: Point
    end: Point
    reason: str


@dataclass(frozen=True)
class TransversalityReport:
    ok: bool
    violations: tuple[Violation, ...]


_EPS = 1e-9


def check_transverse(diag: TorusDiagram) -> TransversalityReport:
    """Color-wise monotonicity of every oriented arc.

    A arcs (oriented - to +) must strictly gain height, B arcs strictly
    lose x, and C arcs strictly lose y - x (the slope-1 foliation
    coordinate).
    """
    violations: list[Violation] = []
    for ai, arc in enumerate(diag.arcs):
        for si, (p, q) in enumerate(arc.segments()):
            if arc.color == "A":
                bad = q[1] - p[1] <= _EPS
                reason = "A segment not moving strictly upward"
            elif arc.color == "B":
                bad = q[0] - p[0] >= -_EPS
                reason = "B segment not moving strictly left"
            else:
                bad = (q[1] - q[0]) - (p[1] - p[0]) >= -_EPS
                reason = "C segment not moving strictly down-right"
            if bad:
                violations.append(Violation(ai, arc.color, si, p, q, reason))
    return TransversalityReport(ok=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# bridge parameters and pairwise links


def _incidence(diag: TorusDiagram, color: str) -> dict[int, list[int]]:
    """arc indices of the given color at each bridge point; must be exactly one."""
    inc: dict[int, list[int]] = {p.ident: [] for p in diag.bridge_points}
    for ai, arc in enumerate(diag.arcs):
        if arc.color != color:
            continue
        inc[arc.start].append(ai)
        inc[arc.end].append(ai)
    for ident, lst in inc.items():
        if len(lst) != 1 and not (
            len(lst) == 2 and diag.arcs[lst[0]] is diag.arcs[lst[1]]
        ):
            if len(lst) != 1:
                raise DiagramError(
                    f"bridge point {ident} touches {len(lst)} {color} arcs, expected 1"
                )
    return inc


def _pair_components(diag: TorusDiagram, color_a: str, color_b: str) -> int:
    """Closed components of the union of two tangle shadows."""
    inc_a = _incidence(diag, color_a)
    inc_b = _incidence(diag, color_b)
    seen: set[int] = set()
    comps = 0
    for start in inc_a:
        if start in seen:
            continue
        comps += 1
        node, use_a = start, True
        while True:
            seen.add(node)
            arc = diag.arcs[(inc_a if use_a else inc_b)[node][0]]
            node = arc.end if arc.start == node else arc.start
            use_a = not use_a
            if node == start and use_a:
                break
    return comps


def bridge_params(diag: TorusDiagram) -> BridgeParams:
    """Count (b; c1, c2, c3) from a fully stabilized diagram."""
    if a_crossings(diag):
        raise DiagramError("bridge parameters require a stabilized diagram")
    b = diag.bridge_number
    c1 = _pair_components(diag, "A", "B")
    c2 = _pair_components(diag, "B", "C")
    c3 = _pair_components(diag, "C", "A")
    return BridgeParams(b, c1, c2, c3, diag.stabilization_count)


def pairwise_links(
    diag: TorusDiagram, f: Factorization
) -> tuple[TangleLink, TangleLink, TangleLink]:
    """Solid-torus presentations of L1, L2, L3 for an assembled diagram.

    L1 is the closure of the trivial d-braid; L2 is a split union of one
    closed component per tile (unknot or T(2,k+1)) plus one unknot per
    stabilization; L3 is the braid closure, in H_alpha, of
    g_n s1^{-k_n} g_n^{-1} ... g_1 s1^{-k_1} g_1^{-1} with the beta curve
    carrying the (1,1) framing.
    """
    d = diag.strands
    if f.strands != d:
        raise DiagramError("factorization and diagram strand counts differ")
    s = diag.stabilization_count
    if diag.tile_count != len(f.factors):
        raise DiagramError("diagram tile count does not match the factorization")
    l1 = TangleLink("H1", identity(d), ())
    labels = tuple(component_label(fac.exponent) for fac in f.factors) + ("unknot",) * s
    c2 = _pair_components(diag, "B", "C")
    if c2 != len(labels):
        raise DiagramError(
            f"L2 has {c2} split components, expected {len(labels)}"
        )
    l2 = TangleLink("H2", None, labels)
    word = identity(d)
    for fac in reversed(f.factors):
        core = BraidWord(d, (-fac.sign,) * fac.exponent)
        word = compose(word, compose(compose(fac.conjugator, core), invert(fac.conjugator)))
    l3 = TangleLink("H1", word, (), orientation_reversed=True, framing="(1,1)")
    return l1, l2, l3


@dataclass(frozen=True)
class TrivialityReport:
    l1_ok: bool
    l2_ok: bool
    l3_ok: bool

    @property
    def ok(self) -> bool:
        return self.l1_ok and self.l2_ok and self.l3_ok


def verify_trivial(
    links: tuple[TangleLink, TangleLink, TangleLink], f: Factorization
) -> TrivialityReport:
    """Certify the three pairwise links against the factorization.

    L1 must present the identity braid; L2's split components must match
    the band exponents (plus stabilization unknots); L3's word must equal
    the inverse full twist, the algebraic certificate that its closure is
    the d-component unlink.
    """
    l1, l2, l3 = links
    d = f.strands
    l1_ok = l1.braid is not None and equal(l1.braid, identity(d))
    expected = [component_label(fac.exponent) for fac in f.factors]
    comps = list(l2.components)
    l2_ok = l2.braid is None and len(comps) >= len(expected)
    if l2_ok:
        pool = comps.copy()
        for label in expected:
            if label in pool:
                pool.remove(label)
            else:
                l2_ok = False
                break
        if l2_ok:
            l2_ok = all(extra == "unknot" for extra in pool)
    l3_ok = l3.braid is not None and equal(l3.braid, invert(full_twist(d)))
    return TrivialityReport(l1_ok, l2_ok, l3_ok)
