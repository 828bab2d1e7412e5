"""Named verification suites over a fixture, with prerequisite gating."""

import time

from .coeff import SAYDModule, check_induced_module, check_sayd, check_yd
from .cyclichom import Bicocyclic, ColumnOps, DiagonalOps, RowOps, StandardCocyclic, check_cocyclic, check_psi
from .hopf import check_hopf_axioms_F, check_hopf_H, check_lie_hopf, check_matched_pair_hopf, check_mpi
from .liealg import check_jacobi
from .matched import check_matched_pair, check_mutual_pair
from .reduced import ReducedComplex, check_reduced
from .report import Report
from .vanest import RelativeBicomplex, check_pairing, check_relative, check_van_est

ORDER = ["jacobi", "matched", "liehopf", "bicrossed", "mpi", "sayd", "cocyclic", "reduced", "pairing", "vanest"]

REQUIRES = {
    "jacobi": [],
    "matched": ["jacobi"],
    "liehopf": ["jacobi"],
    "bicrossed": ["liehopf"],
    "mpi": ["bicrossed"],
    "sayd": ["mpi", "matched"],
    "cocyclic": ["sayd"],
    "reduced": ["sayd"],
    "pairing": ["matched", "liehopf"],
    "vanest": ["pairing", "sayd"],
}

# complexes grow quickly with the number of tensor slots, so the suites
# working on cochains draw at most this many samples per degree
COMPLEX_SAMPLES = 3


def _jacobi(fx, depth, samples, seed):
    rep = Report("jacobi")
    for g in (fx.lie, fx.mp.g1, fx.mp.g2):
        rep.extend(check_jacobi(g))
    return rep


def _matched(fx, depth, samples, seed):
    rep = Report("matched")
    rep.extend(check_matched_pair(fx.mp))
    rep.extend(check_mutual_pair(fx.mp, depth, samples, seed))
    return rep


def _liehopf(fx, depth, samples, seed):
    rep = Report("liehopf")
    rep.extend(check_hopf_axioms_F(fx.F, depth))
    rep.extend(check_lie_hopf(fx.lh, depth))
    return rep


def _bicrossed(fx, depth, samples, seed):
    rep = Report("bicrossed")
    rep.extend(check_matched_pair_hopf(fx.H, depth, samples, seed))
    rep.extend(check_hopf_H(fx.H, depth, samples, seed))
    return rep


def _mpi(fx, depth, samples, seed):
    return Report("mpi").extend(check_mpi(fx.H, depth))


def _sayd(fx, depth, samples, seed):
    rep = Report("sayd")
    small = min(depth, 2)
    for name in fx.module_names():
        M = fx.module(name)
        rep.extend(check_induced_module(M, fx.lh, depth, fx.mp, fx.pairing_context))
        rep.extend(check_yd(fx.H, M, small, samples, seed))
        rep.extend(check_sayd(SAYDModule(fx.H, M), small, samples, seed))
    return rep


def _sayd_for(fx, M):
    return SAYDModule(fx.H, M, delta_twist=fx.mutations.get("delta_twist", True))


def _cocyclic(fx, depth, samples, seed):
    rep = Report("cocyclic")
    k = min(samples, COMPLEX_SAMPLES)
    q_max = min(depth, 3)
    for name in fx.module_names():
        S = _sayd_for(fx, fx.module(name))
        rep.extend(check_cocyclic(StandardCocyclic(S, 2, 2), q_max, k, seed))
        bico = Bicocyclic(S, 2, 2)
        for q in range(3):
            rep.extend(check_cocyclic(RowOps(bico, q), q_max, k, seed + q))
        for p in range(3):
            rep.extend(check_cocyclic(ColumnOps(bico, p), min(q_max, 2), k, seed + p))
        rep.extend(check_cocyclic(DiagonalOps(bico), min(q_max, 2), k, seed))
        rep.extend(check_psi(bico, 2, k, seed))
    return rep


def _reduced(fx, depth, samples, seed):
    rep = Report("reduced")
    k = min(samples, COMPLEX_SAMPLES)
    for name in fx.module_names():
        S = SAYDModule(fx.H, fx.module(name))
        R = ReducedComplex(S)
        rep.extend(check_reduced(R, fx.mp.g1.dim, 2, k, seed, bicocyclic=Bicocyclic(S, 2, 2)))
    return rep


def _pairing(fx, depth, samples, seed):
    return Report("pairing").extend(check_pairing(fx.pairing_context, depth))


def _vanest(fx, depth, samples, seed):
    rep = Report("vanest")
    k = min(samples, COMPLEX_SAMPLES)
    P = fx.pairing_context
    for name in fx.module_names():
        M = fx.module(name)
        RB = RelativeBicomplex(fx.mp, M, fx.h)
        rep.extend(check_relative(RB, k, seed))
        R = ReducedComplex(SAYDModule(fx.H, M))
        rep.extend(check_van_est(P, RB, R, fx.mp.g1.dim, 2, k, seed))
    return rep


RUNNERS = {
    "jacobi": _jacobi,
    "matched": _matched,
    "liehopf": _liehopf,
    "bicrossed": _bicrossed,
    "mpi": _mpi,
    "sayd": _sayd,
    "cocyclic": _cocyclic,
    "reduced": _reduced,
    "pairing": _pairing,
    "vanest": _vanest,
}


def closure(names):
    """Requested suites plus their prerequisites, in declared order."""
    want = set()
    stack = list(names)
    while stack:
        s = stack.pop()
        if s not in want:
            want.add(s)
            stack.extend(REQUIRES[s])
    return [s for s in ORDER if s in want]


def run_suites(fx, names, depth=3, samples=20, seed=0, timing=False):
    """Run the requested suites; a suite whose prerequisite failed is skipped.

    Returns a list of result dicts (prerequisites that were not requested are
    run silently for gating but not reported).
    """
    requested = set(names)
    status = {}
    results = []
    for name in closure(names):
        blocked = [r for r in REQUIRES[name] if status.get(r) != "pass"]
        entry = {"suite": name, "seed": seed, "depth": depth}
        if blocked:
            status[name] = "skipped"
            entry.update(status="skipped", violations=[], checked=0, elapsed_ms=0, blocked_by=blocked)
        else:
            t0 = time.perf_counter()
            try:
                rep = RUNNERS[name](fx, depth, samples, seed)
            except ValueError as exc:
                rep = Report(name)
                rep.expect(f"{name}.hypothesis", "construction preconditions", str(exc), "error", "ok")
            ms = round((time.perf_counter() - t0) * 1000) if timing else 0
            status[name] = "pass" if rep.ok else "fail"
            entry.update(
                status=status[name],
                violations=[v.as_dict() for v in rep.violations],
                checked=rep.checked,
                elapsed_ms=ms,
            )
        if name in requested:
            results.append(entry)
    return results
