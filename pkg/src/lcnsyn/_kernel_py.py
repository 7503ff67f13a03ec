"""Pure-Python evaluation kernels for closed-loop candidate sweeps.

These are the reference implementations of the hot inner loops; the
compiled twin in ``_kernel_cy`` must produce bit-identical results
(same candidate order, same counts). See ``kernel`` for selection.

Call convention shared by both backends (everything 1-based, plain
sequences of ints):

* ``out``      -- output index per state, length N.
* ``members``  -- all N states in enumeration order: output classes in
  ascending output order, members ascending inside each class.
* ``class_sizes`` -- class sizes in the same order (sums to N).
* ``options_flat`` / ``option_offsets`` -- per member (same order), the
  sorted candidate successor values; member k's options live at
  ``options_flat[option_offsets[k]:option_offsets[k+1]]``.

A candidate is one choice of successor per state, injective within each
class; candidates are visited in lexicographic order of the chosen
values along ``members``. An assignment is returned as the tuple of
successors indexed by state (position s-1 = successor of state s).
"""

from __future__ import annotations

FOUND = 0
EXHAUSTED = 1
CAP_REACHED = 2


def _observable0(succ0, out0, n: int, status: bytearray) -> bool:
    """Observability of the closed-loop map ``succ0`` (0-based successors).

    Each equal-output pair has at most one outgoing edge, so the pair
    graph is functional: walk it marking pairs safe (dead end, no cycle
    ahead) or unsafe (reaches a merge or a cycle). ``status`` must be a
    zeroed N*N scratch buffer; codes: 0 unknown, 1 on current walk,
    2 safe, 3 unsafe.
    """
    for i in range(n - 1):
        for j in range(i + 1, n):
            if out0[i] != out0[j] or status[i * n + j]:
                continue
            path = []
            ci, cj = i, j
            while True:
                idx = ci * n + cj
                st = status[idx]
                if st:
                    verdict = 3 if st != 2 else 2  # revisit: walk cycle or known
                    break
                status[idx] = 1
                path.append(idx)
                a, b = succ0[ci], succ0[cj]
                if a == b:
                    verdict = 3  # pair merges: edge into the diagonal
                    break
                if out0[a] != out0[b]:
                    verdict = 2  # successors distinguishable: dead end
                    break
                ci, cj = (a, b) if a < b else (b, a)
            for idx in path:
                status[idx] = verdict
            if verdict == 3:
                return False
    return True


def closed_loop_observable(succ, out) -> bool:
    """Observability of the autonomous system ``x+ = succ[x]``, ``y = out[x]``.

    ``succ`` and ``out`` are 1-based per-state sequences of length N.
    """
    n = len(succ)
    succ0 = [s - 1 for s in succ]
    return _observable0(succ0, list(out), n, bytearray(n * n))


def _prepare(out, members, class_sizes):
    n = len(out)
    out0 = list(out)
    members0 = [m - 1 for m in members]
    class_of = []
    for c, size in enumerate(class_sizes):
        class_of.extend([c] * size)
    used = [bytearray(n + 1) for _ in class_sizes]
    return n, out0, members0, class_of, used


def sweep_first_observable(out, members, class_sizes, options_flat,
                           option_offsets, cap: int = -1):
    """Search the candidate space for the first observable closed loop.

    Evaluates at most ``cap`` candidates when ``cap >= 0``. Returns
    ``(status, checked, assignment)`` where status is FOUND, EXHAUSTED
    or CAP_REACHED and assignment is the successful successor tuple
    (None unless FOUND).
    """
    n, out0, members0, class_of, used = _prepare(out, members, class_sizes)
    succ0 = [0] * n
    checked = 0
    status = EXHAUSTED
    found = None

    def rec(pos: int) -> bool:
        nonlocal checked, status, found
        if pos == n:
            if 0 <= cap <= checked:
                status = CAP_REACHED
                return True
            checked += 1
            if _observable0(succ0, out0, n, bytearray(n * n)):
                found = tuple(s + 1 for s in succ0)
                status = FOUND
                return True
            return False
        m0 = members0[pos]
        u = used[class_of[pos]]
        for k in range(option_offsets[pos], option_offsets[pos + 1]):
            v = options_flat[k]
            if u[v]:
                continue
            u[v] = 1
            succ0[m0] = v - 1
            stop = rec(pos + 1)
            u[v] = 0
            if stop:
                return True
        return False

    rec(0)
    return status, checked, found


def sweep_count_observable(out, members, class_sizes, options_flat, option_offsets):
    """Evaluate every candidate; return ``(total, observable_count)``."""
    n, out0, members0, class_of, used = _prepare(out, members, class_sizes)
    succ0 = [0] * n
    total = 0
    good = 0

    def rec(pos: int) -> None:
        nonlocal total, good
        if pos == n:
            total += 1
            if _observable0(succ0, out0, n, bytearray(n * n)):
                good += 1
            return
        m0 = members0[pos]
        u = used[class_of[pos]]
        for k in range(option_offsets[pos], option_offsets[pos + 1]):
            v = options_flat[k]
            if u[v]:
                continue
            u[v] = 1
            succ0[m0] = v - 1
            rec(pos + 1)
            u[v] = 0

    rec(0)
    return total, good
