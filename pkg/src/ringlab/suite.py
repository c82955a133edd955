"""The desk acceptance suite: ten end-to-end criteria with time limits."""
from __future__ import annotations

import inspect
import itertools
import random
import time
from dataclasses import dataclass

from .identities import hypothesis_quadruples, run_cases, run_sweep
from .inverses import InverseKind, gzhou_constructive, inverse_bruteforce, lift_idempotent_binomial
from .rational import (
    RationalMatrix,
    certificate_checks,
    decide_gzhou_matrix,
    gzhou_matrix,
    period_bound,
    scan_gzhou_n,
)
from .ring import build_ring
from .structure import jacobson_radical, nilpotent_mask, nilpotents, radical_root_mask

SUITE_RINGS = tuple([f"Z{n}" for n in range(2, 13)] + ["M2(Z2)", "T2(Z2)", "T2(Z3)", "Z4 x Z2"])
EXHAUSTIVE_QUAD_RINGS = ("M2(Z2)", "T2(Z2)")
REDUCTION_RINGS = ("Z12", "Z8", "T2(Z2)")


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None

    @property
    def within_limit(self) -> bool:
        return self.limit is None or self.seconds < self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.within_limit

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"[{status}] {self.number:>2}. {self.title}: {self.detail} [{self.seconds:.2f}s{limit}]"

    def to_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.ok,
                "detail": self.detail, "seconds": round(self.seconds, 3), "limit_s": self.limit}


def _timed(number, title, limit, fn):
    start = time.perf_counter()
    passed, detail = fn()
    return CriterionResult(number, title, passed, detail, time.perf_counter() - start, limit)


def _rings(names):
    return [build_ring(n) for n in names]


def _sum_reports(reports):
    fails = sum(r.fails for r in reports)
    population = sum(r.population for r in reports)
    return fails, population


def criterion_z5_cubes():
    def run():
        from .cli import classify  # the cli module imports this one

        R = build_ring("Z5")
        rows = {row["a"]: row["gzhou"] for row in classify(R)}
        bad = []
        for a in R:
            brute = inverse_bruteforce(R, a, InverseKind.G_ZHOU)
            built = gzhou_constructive(R, a)
            if not (brute.b == built.b == a ** 3) or rows[str(a)] != str(a ** 3):
                bad.append(str(a))
        return not bad, f"gzhou(a) = a^3 for all 5 elements; mismatches: {bad}"
    return _timed(1, "Z5 generalized Zhou inverse is a^3", 1.0, run)


def criterion_rational_examples():
    def run():
        two = RationalMatrix.parse("[[2]]")
        jordan = RationalMatrix.parse("[[0,1],[0,0]]")
        rot = RationalMatrix.parse("[[0,-1],[1,0]]")
        r1 = gzhou_matrix(two)
        r2 = gzhou_matrix(jordan)
        r3 = gzhou_matrix(rot)
        ok = (r1 is None and period_bound(1) == 2
              and r2 is not None and r2[0] == RationalMatrix.zero(2)
              and r3 == (RationalMatrix.parse("[[0,1],[-1,0]]"), 4))
        detail = (f"[[2]] -> {r1} (bound {period_bound(1)}); jordan -> {r2 and str(r2[0])}; "
                  f"rotation -> {r3 and (str(r3[0]), r3[1])}")
        return ok, detail
    return _timed(2, "rational matrix examples", 1.0, run)


def criterion_equivalence(jobs=1):
    def run():
        reports = [run_sweep("equiv", R, jobs=jobs) for R in _rings(SUITE_RINGS)]
        fails, pop = _sum_reports(reports)
        true = sum(r.details.get("all true", 0) for r in reports)
        return fails == 0, f"{pop} elements, {fails} disagreements, {true} all-true verdict vectors"
    return _timed(3, "equivalent characterizations agree", 300.0, run)


def criterion_uniqueness(jobs=1):
    def run():
        reports = [run_sweep("unique", R, jobs=jobs) for R in _rings(SUITE_RINGS)]
        fails, pop = _sum_reports(reports)
        return fails == 0, f"{pop} elements, {fails} with a non-unique inverse or idempotent"
    return _timed(4, "uniqueness of inverse and idempotent", None, run)


def _canonical_cases(R):
    return [("quad", x, y, y, x) for x, y in itertools.product(range(len(R)), repeat=2)]


def _quad_cases(R):
    return [("quad",) + q for q in hypothesis_quadruples(R)]


def criterion_cline(jobs=1):
    def run():
        reports = [run_cases("cline", R, _quad_cases(R), jobs=jobs) for R in _rings(EXHAUSTIVE_QUAD_RINGS)]
        reports += [run_cases("cline", R, _canonical_cases(R), jobs=jobs) for R in _rings(SUITE_RINGS)]
        fails, pop = _sum_reports(reports)
        return fails == 0, f"{pop} quadruples, {fails} failures"
    return _timed(5, "Cline formula (bd)^z = b((ac)^z)^2 d", 600.0, run)


def criterion_jacobson(jobs=1):
    def run():
        reports = [run_cases("jacobson", R, _quad_cases(R), jobs=jobs) for R in _rings(EXHAUSTIVE_QUAD_RINGS)]
        quads = sum(r.population for r in reports)
        for R in _rings(SUITE_RINGS):
            cases = [("power", a, b, k) for a, b in itertools.product(range(len(R)), repeat=2)
                     for k in (1, 2, 3)]
            reports.append(run_cases("jacobson", R, cases, jobs=jobs))
        fails, pop = _sum_reports(reports)
        return fails == 0, f"{quads} quadruple identities + {pop - quads} power cases, {fails} failures"
    return _timed(6, "Jacobson identity and (1-ab)^k transfer", None, run)


def criterion_reduction(jobs=1):
    def run():
        reports = [run_sweep("reduction", R, jobs=jobs) for R in _rings(REDUCTION_RINGS)]
        fails, pop = _sum_reports(reports)
        return fails == 0, f"{pop} elements, {fails} failures"
    return _timed(7, "gZhou in R iff Zhou in R/J(R)", None, run)


def criterion_structure(jobs=1):
    def run():
        problems = []
        for R in _rings(SUITE_RINGS):
            if not (radical_root_mask(R) == nilpotent_mask(R)).all():
                problems.append(f"root set != N in {R}")
        Z12, Z8 = build_ring("Z12"), build_ring("Z8")
        if sorted(x.code for x in jacobson_radical(Z12)) != [0, 6]:
            problems.append("J(Z12)")
        if sorted(x.code for x in nilpotents(Z8)) != [0, 2, 4, 6]:
            problems.append("N(Z8)")
        small = [R for R in _rings(SUITE_RINGS) if len(R) <= 100]
        reports = [run_sweep("radical-lemmas", R, jobs=jobs) for R in small]
        fails, pop = _sum_reports(reports)
        if fails:
            problems.append(f"{fails} lemma failures")
        return not problems, f"{len(SUITE_RINGS)} rings, {pop} lemma cases; problems: {problems}"
    return _timed(8, "structural cross-checks", None, run)


def criterion_binomial(jobs=1):
    def run():
        bad, total = [], 0
        for R in _rings(SUITE_RINGS):
            for a in R:
                total += 1
                if lift_idempotent_binomial(R, a) != gzhou_constructive(R, a).p:
                    bad.append(f"{R}:{a}")
        return not bad, f"{total} elements, {len(bad)} disagreements"
    return _timed(9, "binomial lift equals cycle idempotent", None, run)


def random_matrices(count=500, seed=0, lo=-3, hi=3, dims=(1, 2, 3)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.choice(dims)
        out.append(RationalMatrix([[rng.randint(lo, hi) for _ in range(k)] for _ in range(k)]))
    return out


def criterion_matrices(count=500, seed=0):
    def run():
        bad_cert, bad_bound, found = 0, 0, 0
        for A in random_matrices(count, seed):
            n = decide_gzhou_matrix(A)
            if scan_gzhou_n(A, 10 * period_bound(A.k)) != n:
                bad_bound += 1
            res = gzhou_matrix(A)
            if res is not None:
                found += 1
                if not all(certificate_checks(A, *res).values()):
                    bad_cert += 1
        return (bad_cert == 0 and bad_bound == 0,
                f"{count} matrices, {found} certificates, {bad_cert} failed replays, "
                f"{bad_bound} bound mismatches")
    return _timed(10, "random rational matrix certificates", 120.0, run)


CRITERIA = (
    criterion_z5_cubes, criterion_rational_examples, criterion_equivalence, criterion_uniqueness,
    criterion_cline, criterion_jacobson, criterion_reduction, criterion_structure,
    criterion_binomial, criterion_matrices,
)


def run_desk_suite(jobs=1):
    results = []
    for crit in CRITERIA:
        try:
            results.append(crit(jobs=jobs) if "jobs" in inspect.signature(crit).parameters else crit())
        except Exception as exc:  # a crash is a failed criterion, reported not hidden
            results.append(CriterionResult(len(results) + 1, crit.__name__, False, repr(exc), 0.0, None))
    return results
