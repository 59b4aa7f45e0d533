"""Two-color vertex model and the interaction statistic g of an RPP pair.

Blue is color 1 and red is color 2; every t-asymmetry below follows that
order.  The statistic g is computed two independent ways: from the t-degree
of the colored configuration weight, and by counting the four coupled-lozenge
patterns directly on the superimposed tilings.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import rpp_core, vertex_model
from .partitions import normalize
from .qt_series import QTSeries
from .rpp_core import PRECEQ, RPP
from .vertex_model import (
    ALLOWED_CROSSINGS,
    ALLOWED_STATES,
    BOTTOM_RIGHT,
    CROSS_NWSE,
    EMPTY,
    HORIZONTAL,
    LEFT_TOP,
    MONOMIAL_ONE,
    Monomial,
    VERTICAL,
    WHITE,
    cross_state,
    cross_weight,
    vertex_state,
    white_weight,
)


def colored_white_weight(v_blue, v_red, x, t):
    """Blue picks up an extra t for a right exit whenever red is present."""
    delta = 0 if v_red == EMPTY else 1
    return white_weight(v_blue, x * t ** delta) * white_weight(v_red, x)


_EXITS_TOP = (VERTICAL, LEFT_TOP)


def _gray_color_factor(v, x, t, alpha, beta):
    """Per-color factor of the 2-color gray weight: t^beta for the two
    right-exit states, x t^(alpha+beta) for the other three."""
    if v not in ALLOWED_STATES:
        raise ValueError(f"disallowed vertex state {v}")
    if v.out_right:
        return t ** beta
    return x * t ** (alpha + beta)


def colored_gray_weight(v_blue, v_red, x, t):
    """Product of per-color factors; alpha/beta count higher colors that are
    empty resp. exiting through the top."""
    alpha1 = 1 if v_red == EMPTY else 0
    beta1 = 1 if v_red in _EXITS_TOP else 0
    blue_part = _gray_color_factor(v_blue, x, t, alpha1, beta1)
    red_part = _gray_color_factor(v_red, x, t, 0, 0)
    return blue_part * red_part


# The published 5x5 gray table, (x-exponent, t-exponent) per state pair,
# rows ordered [empty, vertical, horizontal, bottom-right, left-top] for
# blue and the same order for red.
_GRAY_TABLE_VERBATIM = {
    (EMPTY, EMPTY): (2, 1), (EMPTY, VERTICAL): (2, 1), (EMPTY, HORIZONTAL): (1, 0),
    (EMPTY, BOTTOM_RIGHT): (1, 0), (EMPTY, LEFT_TOP): (2, 1),
    (VERTICAL, EMPTY): (2, 1), (VERTICAL, VERTICAL): (2, 1),
    (VERTICAL, HORIZONTAL): (1, 0), (VERTICAL, BOTTOM_RIGHT): (1, 0),
    (VERTICAL, LEFT_TOP): (2, 1),
    (HORIZONTAL, EMPTY): (1, 0), (HORIZONTAL, VERTICAL): (1, 1),
    (HORIZONTAL, HORIZONTAL): (0, 0), (HORIZONTAL, BOTTOM_RIGHT): (0, 0),
    (HORIZONTAL, LEFT_TOP): (1, 1),
    (BOTTOM_RIGHT, EMPTY): (1, 0), (BOTTOM_RIGHT, VERTICAL): (1, 1),
    (BOTTOM_RIGHT, HORIZONTAL): (0, 0), (BOTTOM_RIGHT, BOTTOM_RIGHT): (0, 0),
    (BOTTOM_RIGHT, LEFT_TOP): (1, 1),
    (LEFT_TOP, EMPTY): (2, 1), (LEFT_TOP, VERTICAL): (2, 1),
    (LEFT_TOP, HORIZONTAL): (1, 0), (LEFT_TOP, BOTTOM_RIGHT): (1, 0),
    (LEFT_TOP, LEFT_TOP): (2, 1),
}


def _check_gray_table() -> None:
    """The published table and the per-color factorization must agree
    exactly, as monomials in x and t."""
    x, t = Monomial(1, 0), Monomial(0, 1)
    for (vb, vr), (xe, te) in _GRAY_TABLE_VERBATIM.items():
        got = colored_gray_weight(vb, vr, x, t)
        if got != Monomial(xe, te):
            raise AssertionError(
                f"gray table mismatch at {(vb, vr)}: formula {got}, "
                f"table x^{xe} t^{te}")


_check_gray_table()


def colored_cross_weight(c_blue, c_red, z, t):
    """Blue crossing weight at z / t^r where r flags a red NW-SE strand."""
    if c_blue not in ALLOWED_CROSSINGS or c_red not in ALLOWED_CROSSINGS:
        raise ValueError(f"disallowed crossing pair {(c_blue, c_red)}")
    r = 1 if c_red == CROSS_NWSE else 0
    return cross_weight(c_blue, z / t ** r) * cross_weight(c_red, z)


# ---------------------------------------------------------------------------
# Colored YBE


COLORED_SAMPLES = (
    (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)),
    (Fraction(2, 7), Fraction(3, 5), Fraction(1, 2)),
    (Fraction(1, 3), Fraction(1, 4), Fraction(3, 7)),
)


def _colored_ybe_sides(x, y, t, boundary):
    """Gray-below-white with the cross on the left vs the swapped stack;
    each boundary edge carries a (blue, red) pair of bits.

    The crossing parameter is z = x y t: gray weights are white weights at
    1/(x t) up to a per-vertex factor, so the white-white crossing parameter
    y/x turns into x y t.  At t = 1 this is the one-color value x y.
    """
    i1, i2, i3, j1, j2, j3 = boundary
    z = x * y * t

    def pair_state(inb, inl, outt, outr):
        vb = vertex_state(inb[0], inl[0], outt[0], outr[0])
        vr = vertex_state(inb[1], inl[1], outt[1], outr[1])
        return None if vb is None or vr is None else (vb, vr)

    def pair_cross(lt, lb, rt, rb):
        cb = cross_state(lt[0], lb[0], rt[0], rb[0])
        cr = cross_state(lt[1], lb[1], rt[1], rb[1])
        return None if cb is None or cr is None else (cb, cr)

    edges = [(b, r) for b in (0, 1) for r in (0, 1)]

    lhs = 0
    for a in edges:
        for b in edges:
            c = pair_cross(i1, i2, a, b)
            if c is None:
                continue
            rc = colored_cross_weight(c[0], c[1], z, t)
            for m in edges:
                vb = pair_state(i3, b, m, j1)
                vt = pair_state(m, a, j3, j2)
                if vb is None or vt is None:
                    continue
                lhs += (rc * colored_gray_weight(vb[0], vb[1], x, t)
                        * colored_white_weight(vt[0], vt[1], y, t))

    rhs = 0
    for ap in edges:
        for bp in edges:
            c = pair_cross(ap, bp, j2, j1)
            if c is None:
                continue
            rc = colored_cross_weight(c[0], c[1], z, t)
            for m in edges:
                vb = pair_state(i3, i2, m, bp)
                vt = pair_state(m, i1, j3, ap)
                if vb is None or vt is None:
                    continue
                rhs += (rc * colored_white_weight(vb[0], vb[1], y, t)
                        * colored_gray_weight(vt[0], vt[1], x, t))
    return lhs, rhs


def verify_colored_ybe(samples=COLORED_SAMPLES) -> dict:
    """All 4^6 colored boundary assignments at every sample point."""
    edges = [(b, r) for b in (0, 1) for r in (0, 1)]
    violations = []
    checked = 0
    for x, y, t in samples:
        for boundary in product(edges, repeat=6):
            lhs, rhs = _colored_ybe_sides(x, y, t, boundary)
            checked += 1
            if lhs != rhs:
                violations.append({"boundary": [list(e) for e in boundary],
                                   "x": str(x), "y": str(y), "t": str(t),
                                   "lhs": str(lhs), "rhs": str(rhs)})
    return {"kind": "colored-white-gray", "checked": checked,
            "violations": violations, "passed": not violations}


# ---------------------------------------------------------------------------
# Pairs of RPPs


@dataclass(frozen=True)
class PairRPP:
    shape: tuple[int, ...]
    blue: RPP
    red: RPP


def make_pair(blue: RPP, red: RPP) -> PairRPP:
    if blue.shape != red.shape:
        raise ValueError(f"shapes differ: {blue.shape} vs {red.shape}")
    return PairRPP(blue.shape, blue, red)


def pair_to_json(pair: PairRPP) -> str:
    return json.dumps({"shape": list(pair.shape),
                       "blue": {"shape": list(pair.blue.shape),
                                "rows": [list(r) for r in pair.blue.rows]},
                       "red": {"shape": list(pair.red.shape),
                               "rows": [list(r) for r in pair.red.rows]}})


def pair_from_json(text: str) -> PairRPP:
    data = json.loads(text)
    blue = rpp_core.validate(data["blue"]["shape"], data["blue"]["rows"])
    red = rpp_core.validate(data["red"]["shape"], data["red"]["rows"])
    if normalize(data["shape"]) != blue.shape:
        raise ValueError("pair shape disagrees with the blue filling")
    return make_pair(blue, red)


def colored_row_weight_explicit(kind, mu_pair, lam_pair, x, t, ell, window):
    """Vertex-by-vertex weight of one 2-color row with per-color boundary
    partitions; None when either color admits no configuration."""
    per_color = []
    for mu, lam in zip(mu_pair, lam_pair):
        mu, lam = normalize(mu), normalize(lam)
        if kind == WHITE:
            zb = zt = ell
        else:
            zb, zt = ell + 1, ell
        if len(mu) > zb or len(lam) > zt:
            raise ValueError(f"partitions too long for {ell} columns left of center")
        states = vertex_model.row_states(
            kind,
            vertex_model.interface_sites(mu, zb),
            vertex_model.interface_sites(lam, zt),
            window)
        if states is None:
            return None
        per_color.append(states)
    weigh = colored_white_weight if kind == WHITE else colored_gray_weight
    total = x ** 0
    for vb, vr in zip(*per_color):
        total = total * weigh(vb, vr, x, t)
    return total


def pair_config_weight(pair: PairRPP) -> Monomial:
    """Weight of the superimposed configuration, x_i = q^(+-i), t tracked
    exactly; a monomial q^a t^b."""
    blue_cfg = vertex_model.rpp_to_config(pair.shape, pair.blue)
    red_cfg = vertex_model.rpp_to_config(pair.shape, pair.red)
    window = max(blue_cfg.window, red_cfg.window)
    t = Monomial(0, 1)
    total = MONOMIAL_ONE
    for k in range(1, len(blue_cfg.pattern) + 1):
        kind = blue_cfg.kind(k)
        x = Monomial(-k) if kind == WHITE else Monomial(k)
        weigh = colored_white_weight if kind == WHITE else colored_gray_weight
        brow, rrow = blue_cfg.states[k - 1], red_cfg.states[k - 1]
        for c in range(window):
            vb = brow[c] if c < len(brow) else _tail_state(kind)
            vr = rrow[c] if c < len(rrow) else _tail_state(kind)
            total = total * weigh(vb, vr, x, t)
    return total


def _tail_state(kind):
    return EMPTY if kind == WHITE else HORIZONTAL


def trivial_t_exponent(lam) -> int:
    """t-degree every configuration shares: one t per red path above each
    gray row, totalling len(len-1)/2."""
    ell = len(normalize(lam))
    return ell * (ell - 1) // 2


def g_via_vertex(pair: PairRPP) -> int:
    """Interaction statistic from the configuration weight's t-degree."""
    w = pair_config_weight(pair)
    g = w.t_exp - trivial_t_exponent(pair.shape)
    if g < 0:
        raise AssertionError(f"negative interaction count {g} for {pair}")
    return g


# ---------------------------------------------------------------------------
# The lozenge-pattern count, computed from the slice chains alone


def _interface_site_lists(rpp: RPP):
    """Ascending occupied sites for every interface of the filling's chain."""
    chain = rpp_core.to_slices(rpp)
    zetas = vertex_model.interface_zetas(chain.pattern)
    return [sorted(vertex_model.interface_sites(sl, z))
            for sl, z in zip(chain.slices, zetas)]


_GREEN, _ORCHID, _SIENNA = "green", "orchid", "sienna"


def _classify(bottoms, tops, site: int) -> str:
    """Lozenge type met at a top-interface site: a green top face, the
    right edge of a descending face (orchid), or of an ascending one."""
    i = bisect_right(tops, site)
    if i and tops[i - 1] == site:
        return _GREEN
    below = bisect_right(bottoms, site) - i
    if below == 1:
        return _ORCHID
    assert below == 0, f"site {site}: malformed interface data"
    return _SIENNA


def coupled_pairs(pair: PairRPP) -> list[tuple[int, int, int]]:
    """Locations (type, row, site) of every coupled lozenge pair.

    Type 1: blue orchid against a red top face (hole slices);
    type 2: coinciding orchids (hole slices);
    type 3: coinciding siennas (particle slices);
    type 4: red sienna against a blue top face (particle slices).
    """
    if pair.blue.shape != pair.red.shape:
        raise ValueError("pair members must share a shape")
    pattern = rpp_core.interaction_pattern(pair.shape)
    blue_sites = _interface_site_lists(pair.blue)
    red_sites = _interface_site_lists(pair.red)
    top = 2 + max((max(s) if s else 0 for s in blue_sites + red_sites),
                  default=0)
    out = []
    for k in range(1, len(pattern) + 1):
        white_row = pattern[k - 1] == PRECEQ
        bb, bt = blue_sites[k - 1], blue_sites[k]
        rb, rt = red_sites[k - 1], red_sites[k]
        for site in range(top + 1):
            blue = _classify(bb, bt, site)
            red = _classify(rb, rt, site)
            if white_row:
                if blue == _ORCHID and red == _GREEN:
                    out.append((1, k, site))
                elif blue == _ORCHID and red == _ORCHID:
                    out.append((2, k, site))
            else:
                if blue == _SIENNA and red == _SIENNA:
                    out.append((3, k, site))
                elif blue == _GREEN and red == _SIENNA:
                    out.append((4, k, site))
    return out


def g_via_lozenges(pair: PairRPP) -> int:
    """Independent count of the same statistic, straight from the tilings."""
    return len(coupled_pairs(pair))


# ---------------------------------------------------------------------------
# Brute-force generating function


def pair_genfun_bruteforce(lam, max_total: int, jobs: int = 1) -> QTSeries:
    """Sum of q^(total volume) t^g over all pairs with volume <= max_total.

    Desk scale only; the caller is responsible for keeping the enumeration
    within budget (roughly cells * max_total <= 60).
    """
    lam = normalize(lam)
    if jobs > 1:
        return _pair_genfun_parallel(lam, max_total, jobs)
    series = QTSeries(max_total)
    for blue, red in rpp_core.enumerate_pairs(lam, max_total):
        g = g_via_lozenges(make_pair(blue, red))
        series.add_term(blue.volume + red.volume, g)
    return series


def _genfun_shard(args):
    lam, max_total, blue_rows = args
    blue = rpp_core.validate(lam, blue_rows)
    out = {}
    for red in rpp_core.enumerate_rpps(lam, max_total - blue.volume):
        g = g_via_lozenges(make_pair(blue, red))
        key = (blue.volume + red.volume, g)
        out[key] = out.get(key, 0) + 1
    return out


def _pair_genfun_parallel(lam, max_total: int, jobs: int) -> QTSeries:
    from concurrent.futures import ProcessPoolExecutor

    shards = [(lam, max_total, [list(r) for r in blue.rows])
              for blue in rpp_core.enumerate_rpps(lam, max_total)]
    series = QTSeries(max_total)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for partial in pool.map(_genfun_shard, shards, chunksize=8):
            for (n, k), c in sorted(partial.items()):
                series.add_term(n, k, c)
    return series
