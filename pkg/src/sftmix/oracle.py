"""Ground-truth brute force on finite windows.

Everything here is deliberately simple: windows are explicit cell sets,
patterns are enumerated by backtracking in raster order with one-step
lookahead, and the matrix-level modules are validated against these
routines rather than the other way round.

Vertex mode: variables are cells, one constraint per fully contained
2x2 sub-window.  Edge mode: variables are edges, one constraint per
cell (its four edge colors must form an allowed tile).  Edge variables
are tuples ("h", x, y) for the edge below cell (x, y) and ("v", x, y)
for the edge to its left.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CapExceeded

VERTEX_CELL_CAP = 30
EDGE_CELL_CAP = 25
FIND_CELL_CAP = 130


def rect_cells(width, height, origin=(0, 0)):
    """Cells of a width x height rectangle anchored at origin."""
    x0, y0 = origin
    return [(x0 + dx, y0 + dy) for dy in range(height) for dx in range(width)]


def annulus_cells(M, N, d, anchor=(0, 0)):
    """Width-d annulus around an M x N hole anchored at anchor."""
    i, j = anchor
    outer = set(rect_cells(M + 2 * d, N + 2 * d, (i - d, j - d)))
    hole = set(rect_cells(M, N, (i, j)))
    return sorted(outer - hole, key=lambda c: (c[1], c[0]))


def cell_edges(cell):
    """(bottom, top, left, right) edge variables of a cell."""
    x, y = cell
    return (("h", x, y), ("h", x, y + 1), ("v", x, y), ("v", x + 1, y))


def window_variables(B, cells):
    """The solver variables a window induces, in raster order."""
    if B.mode == "vertex":
        return sorted(set(cells), key=lambda c: (c[1], c[0]))
    edges = set()
    for cell in cells:
        edges.update(cell_edges(cell))
    return sorted(edges, key=lambda e: (e[2], e[1], e[0]))


def _window_constraints(B, cells):
    """(scope, allowed) pairs for a window; scopes use canonical tuple order."""
    cell_set = set(cells)
    cons = []
    if B.mode == "vertex":
        for (x, y) in cell_set:
            scope = ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))
            if all(c in cell_set for c in scope):
                cons.append((scope, B.patterns))
    else:
        for cell in cell_set:
            cons.append((cell_edges(cell), B.patterns))
    return cons


class _Search:
    """Backtracking over a fixed variable order with one-step lookahead."""

    def __init__(self, B, cells, fixed=None, first=()):
        self.p = B.p
        fixed = dict(fixed or {})
        variables = window_variables(B, cells)
        head = [v for v in first if v not in fixed]
        head_set = set(head)
        self.free = head + [
            v for v in variables if v not in fixed and v not in head_set
        ]
        self.assignment = dict(fixed)
        order_pos = {v: i for i, v in enumerate(self.free)}
        # per free variable: constraints it appears in, with the scope split
        self.by_var = {v: [] for v in self.free}
        for scope, allowed in _window_constraints(B, cells):
            watchers = [v for v in scope if v in order_pos]
            if not watchers:
                if tuple(self.assignment[v] for v in scope) not in allowed:
                    self.infeasible_fixed = True
                    return
                continue
            entry = (scope, allowed, frozenset(watchers))
            for v in watchers:
                self.by_var[v].append(entry)
        self.infeasible_fixed = False

    def _consistent(self, var):
        """Check var's constraints; fail early on dead one-hole windows."""
        a = self.assignment
        for scope, allowed, watchers in self.by_var[var]:
            missing = [v for v in scope if v not in a]
            if not missing:
                if tuple(a[v] for v in scope) not in allowed:
                    return False
            elif len(missing) == 1:
                hole = missing[0]
                ok = False
                for val in range(self.p):
                    a[hole] = val
                    if tuple(a[v] for v in scope) in allowed:
                        ok = True
                        break
                del a[hole]
                if not ok:
                    return False
        return True

    def run(self, front=None):
        """Yield solutions; when front is set, one completion per distinct
        assignment of the first `front` variables (the rest pruned)."""
        if self.infeasible_fixed:
            return
        free = self.free
        n = len(free)
        cut_depth = n if front is None else front

        def dfs(i):
            # returns True if siblings at depths >= cut_depth should stop
            if i == n:
                yield dict(self.assignment)
                return True
            var = free[i]
            for val in range(self.p):
                self.assignment[var] = val
                if self._consistent(var):
                    cut = yield from dfs(i + 1)
                    if cut and i >= cut_depth:
                        del self.assignment[var]
                        return True
                del self.assignment[var]
            return False

        yield from dfs(0)


@dataclass
class AdmissibleCount:
    count: int
    truncated: bool


def iter_admissible(B, cells, fixed=None):
    """Yield every admissible assignment of the window, raster order."""
    yield from _Search(B, cells, fixed).run()


def find_admissible(B, cells, fixed=None):
    """One admissible assignment of the window, or None."""
    _cap(B, cells, FIND_CELL_CAP)
    for sol in _Search(B, cells, fixed).run(front=0):
        return sol
    return None


def _cap(B, cells, cap):
    if len(set(cells)) > cap:
        raise CapExceeded(f"window of {len(set(cells))} cells exceeds cap {cap}")


def enumerate_admissible(B, cells, limit=None, fixed=None):
    """Exact admissible-pattern count of a window (truncated if limit hit)."""
    _cap(B, cells, VERTEX_CELL_CAP if B.mode == "vertex" else EDGE_CELL_CAP)
    count = 0
    for _ in iter_admissible(B, cells, fixed):
        count += 1
        if limit is not None and count >= limit:
            return AdmissibleCount(count, True)
    return AdmissibleCount(count, False)


@dataclass
class CrosscheckRow:
    m: int
    n: int
    matrix_count: int
    oracle_count: int

    @property
    def ok(self):
        return self.matrix_count == self.oracle_count


@dataclass
class CrosscheckReport:
    rows: list

    @property
    def ok(self):
        return all(row.ok for row in self.rows)

    @property
    def mismatches(self):
        return [row for row in self.rows if not row.ok]


def transfer_count_crosscheck(B, m_max, n_max):
    """Strip counts from transition-matrix powers vs direct enumeration.

    Vertex mode pairs the (m-1)-th power of the level-n matrix with the
    m x n symbol window; edge mode indexes by boundary labels, so the
    same power counts the (m-1) x (n-1) block of cells.
    """
    from . import transfer

    rows = []
    for n in range(2, n_max + 1):
        if B.mode == "edge":
            from .edge import edge_transfer

            Hn = edge_transfer(B, "h", n)
        else:
            Hn = transfer.build_transition(B, "h", n)
        for m in range(2, m_max + 1):
            if B.mode == "edge":
                from .matrices import CountMatrix

                power = CountMatrix(Hn).power(m - 1)
                window = rect_cells(m - 1, n - 1)
            else:
                power = transfer.power_with_saturation(Hn, m - 1)
                window = rect_cells(m, n)
            if power.saturated:
                raise CapExceeded(f"count overflow at (m={m}, n={n})")
            matrix_count = power.entry_sum()
            oracle_count = enumerate_admissible(B, window).count
            rows.append(CrosscheckRow(m, n, matrix_count, oracle_count))
    return CrosscheckReport(rows)


def _fill_region_free_and_interface(B, M, N):
    """Free variables of the M x N fill region and the fixed ring variables
    within constraint reach of them."""
    outer = set(rect_cells(M + 4, N + 4, (-2, -2)))
    hole = set(rect_cells(M, N, (0, 0)))
    ring = outer - hole
    if B.mode == "vertex":
        near = set(rect_cells(M + 2, N + 2, (-1, -1)))
        interface = sorted(ring & near, key=lambda c: (c[1], c[0]))
        return sorted(hole, key=lambda c: (c[1], c[0])), interface
    hole_vars = set(window_variables(B, hole))
    ring_vars = set(window_variables(B, ring))
    interface = sorted(hole_vars & ring_vars, key=lambda e: (e[2], e[1], e[0]))
    return sorted(hole_vars - ring_vars, key=lambda e: (e[2], e[1], e[0])), interface


def brute_fill_annulus(B, k, M, N, method="interface"):
    """Hole-filling with inner width k - 2 by direct search.

    True iff every admissible pattern on the width-k annulus around the
    (M+4-2k) x (N+4-2k) hole admits an admissible recoloring of the
    central M x N block that keeps the outer width-2 ring.  Same result
    contract as the matrix-level check.
    """
    from .holefill import HfcResult

    if k < 2:
        raise ValueError("k must be at least 2")
    if M < 2 * k - 3 or N < 2 * k - 3:
        raise ValueError(f"(M, N) = ({M}, {N}) below the bound 2k-3 = {2 * k - 3}")
    if (M + 4) * (N + 4) > FIND_CELL_CAP:
        raise CapExceeded(f"({M}+4)x({N}+4) window exceeds cap {FIND_CELL_CAP}")

    outer = set(rect_cells(M + 4, N + 4, (-2, -2)))
    hole_k = set(rect_cells(M + 4 - 2 * k, N + 4 - 2 * k, (k - 2, k - 2)))
    premise_cells = sorted(outer - hole_k, key=lambda c: (c[1], c[0]))
    fill_cells = rect_cells(M, N, (0, 0))
    free_vars, interface = _fill_region_free_and_interface(B, M, N)
    params = {"k": k, "M": M, "N": N}

    if method == "literal":
        checked = 0
        for U in iter_admissible(B, premise_cells):
            checked += 1
            iota = {v: U[v] for v in interface}
            if _fill(B, fill_cells, free_vars, iota) is None:
                return HfcResult(False, _as_witness(U), params, checked)
        return HfcResult(True, None, params, checked)

    if method != "interface":
        raise ValueError(f"unknown method {method!r}")
    premise_vars = set(window_variables(B, premise_cells))
    front_vars = [v for v in interface if v in premise_vars]
    search = _Search(B, premise_cells, first=front_vars)
    checked = 0
    for U in search.run(front=len(front_vars)):
        checked += 1
        iota = {v: U[v] for v in interface}
        if _fill(B, fill_cells, free_vars, iota) is None:
            return HfcResult(False, _as_witness(U), params, checked)
    return HfcResult(True, None, params, checked)


def _fill(B, fill_cells, free_vars, iota):
    """Admissible recoloring of the fill region under fixed interface iota."""
    if B.mode == "vertex":
        cells = fill_cells + [c for c in iota]
        return find_admissible(B, cells, fixed=iota)
    return find_admissible(B, fill_cells, fixed=iota)


def _as_witness(assignment):
    """Serializable form of an oracle assignment."""
    return sorted((list(var), val) for var, val in assignment.items())


def witness_assignment(witness):
    """Inverse of the serializable witness form."""
    out = {}
    for var, val in witness:
        out[tuple(var)] = val
    return out


def brute_glue_window(B, U1, U2, cells):
    """True iff one admissible pattern on the window extends both pieces.

    U1 and U2 are partial assignments (dict variable -> symbol) whose key
    sets are the two regions; they must agree where they overlap.
    """
    fixed = dict(U1)
    for var, val in U2.items():
        if fixed.get(var, val) != val:
            raise ValueError(f"pieces conflict at {var}")
        fixed[var] = val
    all_cells = list(cells)
    if B.mode == "vertex":
        missing = [v for v in fixed if v not in set(all_cells)]
        if missing:
            raise ValueError(f"piece cell {missing[0]} outside the window")
    return find_admissible(B, all_cells, fixed=fixed) is not None
